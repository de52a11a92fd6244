#include "hstrace/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return hstrace::run_cli(argc, argv, std::cout, std::cerr); }

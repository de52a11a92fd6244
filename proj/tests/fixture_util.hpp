#pragma once

#include "hstrace/cli.hpp"

#include <string>

inline hstrace::LoadedAlgebra fixture(const std::string& name) {
  return hstrace::load_algebra_file(std::string(HSTRACE_FIXTURE_DIR) + "/" + name + ".quiver");
}

inline const char* const kFixtures[] = {"a2", "a3rel", "loop", "square", "twoloop"};

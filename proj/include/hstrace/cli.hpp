#pragma once

#include "hstrace/complex.hpp"
#include "hstrace/presentation.hpp"

#include <iosfwd>
#include <string>

namespace hstrace {

/// Runs one `hstrace` command. Returns the process exit code:
/// 0 ok, 1 some check refuted, 2 usage, parse or input error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// A presentation together with the algebra built from it.
struct LoadedAlgebra {
  Presentation presentation;
  AlgebraPtr algebra;
};
/// Throws ParseError / std::invalid_argument with a diagnostic.
LoadedAlgebra load_algebra_text(const std::string& text);
LoadedAlgebra load_algebra_file(const std::string& path);

/// Mini-syntax shared by `trace` and `character`:
///   sum      "A", "A^2", "0", or vertex names "1,2" for e_1 A (+) e_2 A
///   matrix   "[x, 0; a, 1]" rows split by ';', entries are path combinations
ProjectiveSum parse_sum(const LoadedAlgebra& la, const std::string& text);
AlgMatrix parse_matrix(const LoadedAlgebra& la, const std::string& text, const ProjectiveSum& from,
                       const ProjectiveSum& to);
/// "<lo>: P | P ; d: M | M ; f: F | F"; the f section is optional (identity).
ChainMap parse_complex_endo(const LoadedAlgebra& la, const std::string& text);

}  // namespace hstrace

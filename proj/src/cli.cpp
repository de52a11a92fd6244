#include "hstrace/cli.hpp"

#include "hstrace/report.hpp"
#include "hstrace/verify.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <regex>
#include <sstream>

namespace hstrace {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

/// Splits at `sep` outside square brackets.
std::vector<std::string> split_top(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '[') ++depth;
    if (c == ']') --depth;
    if (c == sep && depth == 0) {
      parts.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(trim(cur));
  return parts;
}

std::size_t vertex_of(const LoadedAlgebra& la, const std::string& name) {
  auto v = la.presentation.quiver.vertex_index(trim(name));
  if (!v) throw std::invalid_argument("unknown vertex '" + trim(name) + "'");
  return *v;
}

Vector parse_element(const LoadedAlgebra& la, const std::string& text) {
  const std::string t = trim(text);
  if (t == "0") return la.algebra->zero();
  return evaluate_terms(*la.algebra, la.presentation, parse_linear_combination(t, la.presentation));
}

nlohmann::ordered_json coordinates_json(const TraceClass& t) {
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (const auto& c : t.coordinates) j.push_back(c.to_string());
  return j;
}

/// "2 h0 - h3": integer combination of hom-space basis elements.
AlgMatrix parse_hom_combination(const std::string& text, const std::vector<AlgMatrix>& basis, const ProjectiveSum& p) {
  static const std::regex term(R"(\s*([+-])?\s*(\d+)?\s*\*?\s*h(\d+)\s*)");
  AlgMatrix m = zero_matrix(p, p);
  std::string rest = text;
  std::smatch mt;
  bool any = false;
  while (!trim(rest).empty()) {
    if (!std::regex_search(rest, mt, term, std::regex_constants::match_continuous))
      throw std::invalid_argument("malformed endomorphism '" + text + "'");
    if (any && !mt[1].matched) throw std::invalid_argument("missing sign between terms in '" + text + "'");
    long long c = mt[2].matched ? std::stoll(mt[2].str()) : 1;
    if (mt[1].matched && mt[1].str() == "-") c = -c;
    const std::size_t k = std::stoul(mt[3].str());
    if (k >= basis.size())
      throw std::invalid_argument("h" + std::to_string(k) + " out of range; the hom basis has " +
                                  std::to_string(basis.size()) + " elements");
    m += Scalar(c) * basis[k];
    any = true;
    rest = mt.suffix().str();
  }
  if (!any) throw std::invalid_argument("empty endomorphism");
  return m;
}

}  // namespace

LoadedAlgebra load_algebra_text(const std::string& text) {
  LoadedAlgebra la;
  la.presentation = parse_presentation(text);
  ValidationReport v = validate(la.presentation);
  if (!v.ok()) {
    std::string msg = "invalid presentation:";
    for (const auto& e : v.errors) msg += "\n  " + e;
    throw std::invalid_argument(msg);
  }
  la.algebra = build_algebra(la.presentation);
  return la;
}

LoadedAlgebra load_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return load_algebra_text(ss.str());
}

ProjectiveSum parse_sum(const LoadedAlgebra& la, const std::string& text) {
  const std::string t = trim(text);
  if (t.empty() || t == "0") return ProjectiveSum(la.algebra, {});
  if (t == "A") return ProjectiveSum::free(la.algebra, 1);
  if (t.rfind("A^", 0) == 0) {
    const std::string n = t.substr(2);
    if (n.empty() || n.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("malformed free module '" + t + "'");
    return ProjectiveSum::free(la.algebra, std::stoul(n));
  }
  std::vector<std::size_t> vertices;
  for (const auto& name : split_top(t, ',')) vertices.push_back(vertex_of(la, name));
  return ProjectiveSum::of_vertices(la.algebra, vertices);
}

AlgMatrix parse_matrix(const LoadedAlgebra& la, const std::string& text, const ProjectiveSum& from,
                       const ProjectiveSum& to) {
  const Algebra& a = *la.algebra;
  const std::string t = trim(text);
  if (t.size() < 2 || t.front() != '[' || t.back() != ']')
    throw std::invalid_argument("matrix must be written [row; row; ...]: '" + t + "'");
  AlgMatrix m(to.rank(), from.rank(), a.dim());
  const std::string inner = trim(t.substr(1, t.size() - 2));
  if (inner.empty()) {
    if (to.rank() != 0 && from.rank() != 0) throw std::invalid_argument("empty matrix for a nonzero map");
    return m;
  }
  auto rows = split_top(inner, ';');
  if (rows.size() != to.rank())
    throw std::invalid_argument("matrix '" + t + "' has " + std::to_string(rows.size()) + " rows, expected " +
                                std::to_string(to.rank()));
  for (std::size_t k = 0; k < rows.size(); ++k) {
    auto entries = split_top(rows[k], ',');
    if (entries.size() != from.rank())
      throw std::invalid_argument("row " + std::to_string(k) + " of '" + t + "' has " + std::to_string(entries.size()) +
                                  " entries, expected " + std::to_string(from.rank()));
    for (std::size_t l = 0; l < entries.size(); ++l) {
      Vector x = parse_element(la, entries[l]);
      if (a.multiply(to.block(k), a.multiply(x, from.block(l))) != x)
        throw std::invalid_argument("entry '" + entries[l] + "' is not in e A f for its position");
      m.at(k, l) = std::move(x);
    }
  }
  return m;
}

ChainMap parse_complex_endo(const LoadedAlgebra& la, const std::string& text) {
  auto sections = split_top(text, ';');
  const auto colon = sections[0].find(':');
  if (colon == std::string::npos) throw std::invalid_argument("complex must start with '<lowest degree>: '");
  int lo = 0;
  try {
    lo = std::stoi(trim(sections[0].substr(0, colon)));
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed lowest degree '" + sections[0].substr(0, colon) + "'");
  }
  std::vector<ProjectiveSum> terms;
  for (const auto& s : split_top(sections[0].substr(colon + 1), '|')) terms.push_back(parse_sum(la, s));
  std::vector<std::string> d_text, f_text;
  bool have_f = false;
  for (std::size_t i = 1; i < sections.size(); ++i) {
    const auto c = sections[i].find(':');
    const std::string key = c == std::string::npos ? "" : trim(sections[i].substr(0, c));
    if (key != "d" && key != "f") throw std::invalid_argument("unknown complex section '" + sections[i] + "'");
    auto parts = split_top(sections[i].substr(c + 1), '|');
    if (key == "d") d_text = parts;
    else {
      f_text = parts;
      have_f = true;
    }
  }
  if (terms.size() > 1 && d_text.size() != terms.size() - 1)
    throw std::invalid_argument("expected " + std::to_string(terms.size() - 1) + " differentials");
  std::vector<AlgMatrix> d;
  for (std::size_t i = 0; i + 1 < terms.size(); ++i) d.push_back(parse_matrix(la, d_text[i], terms[i], terms[i + 1]));
  std::vector<ProjectiveSum> copy = terms;
  ComplexPtr c = make_complex(la.algebra, lo, std::move(copy), std::move(d));
  if (!have_f) return identity_chain(c);
  if (f_text.size() != terms.size()) throw std::invalid_argument("expected one f component per term");
  std::vector<AlgMatrix> comps;
  for (std::size_t i = 0; i < terms.size(); ++i) comps.push_back(parse_matrix(la, f_text[i], terms[i], terms[i]));
  ChainMap f = make_chain_map(c, c, comps);
  if (!f.commutes()) throw std::invalid_argument("f does not commute with the differential");
  return f;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hattori-Stallings traces, characters and projective resolutions over quiver algebras"};
  app.name("hstrace");
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false;
  app.add_flag("--json", json, "Print the report as JSON");

  std::uint64_t default_seed = 1;
  if (const char* env = std::getenv("HSTRACE_SEED")) {
    try {
      std::size_t used = 0;
      default_seed = std::stoull(env, &used);
      if (used != std::string(env).size()) throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
      err << "error: HSTRACE_SEED must be a non-negative integer\n";
      return 2;
    }
  }

  std::string file;
  auto* info = app.add_subcommand("info", "Dimensions, radical layers, HH0 and loops");
  info->add_option("file", file, "Presentation file")->required();

  std::string module_spec = "regular";
  std::size_t bound = 20;
  auto* pd = app.add_subcommand("pd", "Projective dimension of a module");
  pd->add_option("file", file)->required();
  pd->add_option("--module", module_spec, "simple:<vertex> or regular")->capture_default_str();
  pd->add_option("--bound", bound, "Resolution length bound")->capture_default_str();

  std::string vi, vj;
  std::size_t degree = 1;
  auto* ext = app.add_subcommand("ext", "dim Ext^d(S_i, S_j) for right simples");
  ext->add_option("file", file)->required();
  ext->add_option("i", vi)->required();
  ext->add_option("j", vj)->required();
  ext->add_option("--degree", degree)->capture_default_str();

  std::string endo, on = "regular";
  auto* trace = app.add_subcommand("trace", "Hattori-Stallings trace of an endomorphism");
  trace->add_option("file", file)->required();
  trace->add_option("--endo", endo, "l:<element>, a matrix [..; ..], or a combination like 2 h0 - h1")->required();
  trace->add_option("--on", on, "regular or proj:<vertices>")->capture_default_str();

  std::string complex_spec;
  auto* character = app.add_subcommand("character", "Character of an endomorphism of a complex of projectives");
  character->add_option("file", file)->required();
  character->add_option("--complex", complex_spec, "<lo>: P | P ; d: M | ... ; f: F | ...")->required();

  std::string suite = "all";
  std::size_t trials = 50;
  std::uint64_t seed = default_seed;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("file", file)->required();
  verify->add_option("--suite", suite, "hs|character|lemma1|lemma2|props|noloop|all")->capture_default_str();
  verify->add_option("--trials", trials)->capture_default_str();
  verify->add_option("--seed", seed, "Defaults to HSTRACE_SEED or 1")->capture_default_str();
  verify->add_option("--bound", bound)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  const auto start = std::chrono::steady_clock::now();
  Report report;
  int code = 0;
  try {
    if (verify->parsed() && !is_suite(suite)) {
      err << "error: unknown suite '" << suite << "'\n";
      return 2;
    }
    LoadedAlgebra la = load_algebra_file(file);
    const AlgebraPtr& a = la.algebra;
    report.arguments["file"] = file;

    if (info->parsed()) {
      report.command = "info";
      report.algebra = summarize(*a);
    } else if (pd->parsed()) {
      report.command = "pd";
      report.arguments["module"] = module_spec;
      report.arguments["bound"] = bound;
      ModulePtr m;
      if (module_spec == "regular") m = regular_module(a);
      else if (module_spec.rfind("simple:", 0) == 0) m = simple_module(a, vertex_of(la, module_spec.substr(7)));
      else throw std::invalid_argument("unknown module '" + module_spec + "'; use simple:<vertex> or regular");
      report.result["pd"] = proj_dim(m, bound).to_string();
    } else if (ext->parsed()) {
      report.command = "ext";
      report.arguments["i"] = vi;
      report.arguments["j"] = vj;
      report.arguments["degree"] = degree;
      auto dims = ext_dims(simple_module(a, vertex_of(la, vi)), simple_module(a, vertex_of(la, vj)), degree);
      if (dims.size() <= degree) throw std::runtime_error("resolution stopped before the requested degree");
      report.result["ext"] = dims[degree];
    } else if (trace->parsed()) {
      report.command = "trace";
      report.arguments["endo"] = endo;
      report.arguments["on"] = on;
      ProjectiveSum p;
      if (on == "regular") p = ProjectiveSum::free(a, 1);
      else if (on.rfind("proj:", 0) == 0) p = parse_sum(la, on.substr(5));
      else throw std::invalid_argument("unknown --on '" + on + "'; use regular or proj:<vertices>");
      AlgMatrix f;
      const std::string e = trim(endo);
      if (e.rfind("l:", 0) == 0) {
        if (on != "regular") throw std::invalid_argument("l:<element> acts on the regular module only");
        f = AlgMatrix(1, 1, a->dim());
        f.at(0, 0) = parse_element(la, e.substr(2));
      } else if (!e.empty() && e.front() == '[') {
        f = parse_matrix(la, e, p, p);
      } else {
        f = parse_hom_combination(e, hom_matrices(p, p), p);
      }
      TraceClass t = matrix_trace(*a, f);
      report.result["trace"] = coordinates_json(t);
      nlohmann::ordered_json basis = nlohmann::ordered_json::array();
      for (auto k : a->hh0().complement()) basis.push_back(a->labels()[k]);
      report.result["hh0_basis"] = basis;
    } else if (character->parsed()) {
      report.command = "character";
      report.arguments["complex"] = complex_spec;
      ChainMap f = parse_complex_endo(la, complex_spec);
      report.result["character"] = coordinates_json(hs_character(f));
      report.result["euler"] = coordinates_json(hs_character(identity_chain(f.source)));
    } else if (verify->parsed()) {
      report.command = "verify";
      report.arguments["suite"] = suite;
      report.arguments["trials"] = trials;
      report.arguments["seed"] = seed;
      report.arguments["bound"] = bound;
      report.algebra = summarize(*a);
      std::vector<std::size_t> loops;
      for (std::size_t i = 0; i < a->num_vertices(); ++i) loops.push_back(la.presentation.quiver.loops_at(i));
      SuiteOptions o;
      o.trials = trials;
      o.seed = seed;
      o.bound = bound;
      report.checks = run_suite(suite, a, loops, o);
      if (any_refuted(report.checks)) code = 1;
    }
  } catch (const ParseError& e) {
    err << file << ":" << e.line() << ":" << e.column() << ": " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  report.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  out << (json ? render_json(report) : render_text(report));
  return code;
}

}  // namespace hstrace

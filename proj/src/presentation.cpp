#include "hstrace/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace hstrace {

ParseError::ParseError(const std::string& msg, std::size_t line, std::size_t column)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
      line_(line),
      column_(column) {}

std::optional<std::size_t> Quiver::vertex_index(std::string_view name) const {
  auto it = std::find(vertices.begin(), vertices.end(), name);
  if (it == vertices.end()) return std::nullopt;
  return static_cast<std::size_t>(it - vertices.begin());
}

std::optional<std::size_t> Quiver::arrow_index(std::string_view name) const {
  for (std::size_t i = 0; i < arrows.size(); ++i)
    if (arrows[i].name == name) return i;
  return std::nullopt;
}

std::size_t Quiver::loops_at(std::size_t vertex) const {
  return static_cast<std::size_t>(std::count_if(arrows.begin(), arrows.end(), [&](const Arrow& a) {
    return a.source == vertex && a.target == vertex;
  }));
}

bool is_composable(const Quiver& q, const PathExpr& p) {
  for (std::size_t i = 0; i + 1 < p.arrows.size(); ++i)
    if (q.arrows.at(p.arrows[i]).target != q.arrows.at(p.arrows[i + 1]).source) return false;
  return true;
}

std::size_t path_source(const Quiver& q, const PathExpr& p) {
  if (!is_composable(q, p)) throw std::invalid_argument("path is not composable");
  return p.arrows.empty() ? p.vertex : q.arrows.at(p.arrows.front()).source;
}

std::size_t path_target(const Quiver& q, const PathExpr& p) {
  if (!is_composable(q, p)) throw std::invalid_argument("path is not composable");
  return p.arrows.empty() ? p.vertex : q.arrows.at(p.arrows.back()).target;
}

std::string path_to_string(const Quiver& q, const PathExpr& p) {
  if (p.arrows.empty()) return q.vertices.at(p.vertex);
  std::string s;
  for (std::size_t i = 0; i < p.arrows.size(); ++i) {
    if (i) s += '*';
    s += q.arrows.at(p.arrows[i]).name;
  }
  return s;
}

namespace {

enum class Tok { Word, Colon, ArrowTok, Star, Plus, Minus, Slash, Semicolon, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line, column;
};

bool is_word_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'' || c == '.';
}

bool is_number(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < text.size()) {
    char c = text[i];
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    std::size_t l = line, cl = col;
    if (is_word_char(c)) {
      std::size_t j = i;
      while (j < text.size() && is_word_char(text[j])) ++j;
      out.push_back({Tok::Word, std::string(text.substr(i, j - i)), l, cl});
      advance(j - i);
      continue;
    }
    if (c == '-' && i + 1 < text.size() && text[i + 1] == '>') {
      out.push_back({Tok::ArrowTok, "->", l, cl});
      advance(2);
      continue;
    }
    Tok kind;
    switch (c) {
      case ':': kind = Tok::Colon; break;
      case '*': kind = Tok::Star; break;
      case '+': kind = Tok::Plus; break;
      case '-': kind = Tok::Minus; break;
      case '/': kind = Tok::Slash; break;
      case ';': kind = Tok::Semicolon; break;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", l, cl);
    }
    out.push_back({kind, std::string(1, c), l, cl});
    advance(1);
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

const std::set<std::string> kKeywords = {"field", "vertices", "arrows", "relations", "cap"};

class Parser {
 public:
  Parser(std::vector<Token> toks, Presentation* pres) : toks_(std::move(toks)), p_(pres) {}

  void parse_document() {
    enum class Section { None, Arrows, Relations } section = Section::None;
    while (peek().kind != Tok::End) {
      if (peek().kind == Tok::Semicolon) {
        next();
        continue;
      }
      const Token& head = peek();
      if (head.kind == Tok::Word && kKeywords.count(head.text)) {
        std::string kw = next().text;
        if (kw == "field") {
          parse_field();
          section = Section::None;
        } else if (kw == "vertices") {
          parse_vertices();
          section = Section::None;
        } else if (kw == "arrows") {
          section = Section::Arrows;
          if (!at_statement_end()) parse_arrow();
        } else if (kw == "relations") {
          section = Section::Relations;
          if (!at_statement_end()) parse_relation();
        } else {
          parse_cap();
          section = Section::None;
        }
      } else if (section == Section::Arrows) {
        parse_arrow();
      } else if (section == Section::Relations) {
        parse_relation();
      } else {
        fail("expected a keyword (field, vertices, arrows, relations, cap)", head);
      }
      if (!at_statement_end()) fail("expected ';'", peek());
    }
  }

  std::vector<RelationTerm> parse_terms_only() {
    auto terms = parse_terms();
    if (peek().kind != Tok::End) fail("unexpected trailing input", peek());
    return terms;
  }

 private:
  const Token& peek(std::size_t k = 0) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
  const Token& next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
  bool at_statement_end() const { return peek().kind == Tok::Semicolon || peek().kind == Tok::End; }

  [[noreturn]] void fail(const std::string& msg, const Token& t) const { throw ParseError(msg, t.line, t.column); }

  const Token& expect(Tok kind, const char* what) {
    if (peek().kind != kind) fail(std::string("expected ") + what, peek());
    return next();
  }

  void parse_field() {
    const Token& t = expect(Tok::Word, "field name");
    if (t.text == "Q") {
      p_->field = FieldSpec::rationals();
      return;
    }
    std::string digits;
    if (t.text == "F") {
      digits = expect(Tok::Word, "prime modulus").text;
    } else if (t.text.size() > 1 && t.text[0] == 'F') {
      digits = t.text.substr(1);
    } else {
      fail("unknown field '" + t.text + "' (use Q or F <p>)", t);
    }
    if (!is_number(digits) || digits.size() > 10) fail("modulus must be a positive integer", t);
    unsigned long long p = std::stoull(digits);
    if (p >= (1ull << 31) || !is_prime(p)) fail("modulus " + digits + " is not a prime below 2^31", t);
    p_->field = FieldSpec::prime(static_cast<std::uint32_t>(p));
  }

  void parse_vertices() {
    while (peek().kind == Tok::Word) {
      const Token& t = next();
      if (kKeywords.count(t.text)) fail("keyword '" + t.text + "' cannot name a vertex", t);
      if (p_->quiver.vertex_index(t.text)) fail("duplicate vertex '" + t.text + "'", t);
      p_->quiver.vertices.push_back(t.text);
    }
  }

  std::size_t lookup_vertex(const Token& t) const {
    auto v = p_->quiver.vertex_index(t.text);
    if (!v) fail("unknown vertex '" + t.text + "'", t);
    return *v;
  }

  void parse_arrow() {
    const Token& name = expect(Tok::Word, "arrow name");
    if (kKeywords.count(name.text)) fail("keyword '" + name.text + "' cannot name an arrow", name);
    if (p_->quiver.arrow_index(name.text)) fail("duplicate arrow '" + name.text + "'", name);
    if (p_->quiver.vertex_index(name.text)) fail("arrow '" + name.text + "' shadows a vertex name", name);
    expect(Tok::Colon, "':'");
    std::size_t s = lookup_vertex(expect(Tok::Word, "source vertex"));
    expect(Tok::ArrowTok, "'->'");
    std::size_t t = lookup_vertex(expect(Tok::Word, "target vertex"));
    p_->quiver.arrows.push_back({name.text, s, t});
  }

  void parse_cap() {
    const Token& t = expect(Tok::Word, "nilpotency cap");
    if (!is_number(t.text) || t.text.size() > 6 || std::stoul(t.text) == 0) fail("cap must be a positive integer", t);
    p_->cap = std::stoul(t.text);
  }

  PathExpr parse_path() {
    PathExpr path;
    const Token& first = expect(Tok::Word, "path");
    std::vector<const Token*> parts{&first};
    while (peek().kind == Tok::Star) {
      next();
      parts.push_back(&expect(Tok::Word, "arrow name after '*'"));
    }
    if (parts.size() == 1 && !p_->quiver.arrow_index(first.text)) {
      auto v = p_->quiver.vertex_index(first.text);
      if (!v) fail("unknown arrow or vertex '" + first.text + "'", first);
      path.vertex = *v;
      return path;
    }
    for (const Token* t : parts) {
      auto a = p_->quiver.arrow_index(t->text);
      if (!a) fail("unknown arrow '" + t->text + "'", *t);
      path.arrows.push_back(*a);
    }
    path.vertex = p_->quiver.arrows[path.arrows.front()].source;
    return path;
  }

  Scalar parse_coefficient() {
    const Token& num = next();
    mpz_class n(num.text), d(1);
    if (peek().kind == Tok::Slash) {
      next();
      const Token& den = expect(Tok::Word, "denominator");
      if (!is_number(den.text)) fail("denominator must be an integer", den);
      d = mpz_class(den.text);
      if (d == 0) fail("zero denominator", den);
    }
    try {
      return p_->field.make(n, d);
    } catch (const std::domain_error&) {
      fail("denominator divisible by the field characteristic", num);
    }
  }

  std::vector<RelationTerm> parse_terms() {
    std::vector<RelationTerm> terms;
    bool first = true;
    while (true) {
      bool negative = false;
      if (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
        negative = next().kind == Tok::Minus;
      } else if (!first) {
        break;
      }
      Scalar coef = p_->field.one();
      if (peek().kind == Tok::Word && is_number(peek().text) &&
          (peek(1).kind == Tok::Slash || peek(1).kind == Tok::Word)) {
        coef = parse_coefficient();
      }
      if (negative) coef = -coef;
      terms.push_back({coef, parse_path()});
      first = false;
    }
    return terms;
  }

  void parse_relation() {
    const Token& start = peek();
    Relation r;
    r.terms = parse_terms();
    const Quiver& q = p_->quiver;
    std::optional<std::pair<std::size_t, std::size_t>> ends;
    for (const auto& term : r.terms) {
      if (term.path.length() < 2)
        fail("relation term '" + path_to_string(q, term.path) + "' has length < 2", start);
      if (!is_composable(q, term.path))
        fail("terms not parallel: '" + path_to_string(q, term.path) + "' is not a composable path", start);
      std::pair<std::size_t, std::size_t> st{path_source(q, term.path), path_target(q, term.path)};
      if (ends && *ends != st) fail("terms not parallel", start);
      ends = st;
    }
    p_->relations.push_back(std::move(r));
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  Presentation* p_;
};

std::string coefficient_text(const Scalar& c) { return c.to_string(); }

}  // namespace

Presentation parse_presentation(std::string_view text) {
  Presentation p;
  Parser parser(lex(text), &p);
  parser.parse_document();
  if (p.quiver.vertices.empty()) throw ParseError("presentation declares no vertices", 1, 1);
  return p;
}

std::vector<RelationTerm> parse_linear_combination(std::string_view text, const Presentation& p) {
  Presentation scratch = p;
  Parser parser(lex(text), &scratch);
  auto terms = parser.parse_terms_only();
  for (const auto& t : terms)
    if (!is_composable(p.quiver, t.path))
      throw ParseError("'" + path_to_string(p.quiver, t.path) + "' is not a composable path", 1, 1);
  return terms;
}

ValidationReport validate(const Presentation& p) {
  ValidationReport rep;
  const Quiver& q = p.quiver;
  if (p.field.is_prime_field() && !is_prime(p.field.modulus())) rep.errors.push_back("field modulus is not prime");
  if (p.cap == 0) rep.errors.push_back("nilpotency cap must be positive");
  if (q.vertices.empty()) rep.errors.push_back("no vertices");
  std::set<std::string> names;
  for (const auto& v : q.vertices)
    if (!names.insert(v).second) rep.errors.push_back("duplicate vertex '" + v + "'");
  for (const auto& a : q.arrows) {
    if (!names.insert(a.name).second) rep.errors.push_back("duplicate arrow or vertex name '" + a.name + "'");
    if (a.source >= q.vertices.size() || a.target >= q.vertices.size())
      rep.errors.push_back("arrow '" + a.name + "' has an undeclared endpoint");
  }
  if (!rep.ok()) return rep;
  for (std::size_t r = 0; r < p.relations.size(); ++r) {
    const auto& rel = p.relations[r];
    std::string where = "relation " + std::to_string(r + 1) + ": ";
    if (rel.terms.empty()) rep.errors.push_back(where + "empty relation");
    std::optional<std::pair<std::size_t, std::size_t>> ends;
    for (const auto& term : rel.terms) {
      bool bad_index = std::any_of(term.path.arrows.begin(), term.path.arrows.end(),
                                   [&](std::size_t a) { return a >= q.arrows.size(); });
      if (bad_index) {
        rep.errors.push_back(where + "unknown arrow");
        continue;
      }
      if (term.path.length() < 2) {
        rep.errors.push_back(where + "term of length < 2");
        continue;
      }
      if (!is_composable(q, term.path)) {
        rep.errors.push_back(where + "terms not parallel ('" + path_to_string(q, term.path) + "' does not compose)");
        continue;
      }
      std::pair<std::size_t, std::size_t> st{path_source(q, term.path), path_target(q, term.path)};
      if (ends && *ends != st) rep.errors.push_back(where + "terms not parallel");
      ends = st;
    }
  }
  return rep;
}

std::string print_presentation(const Presentation& p) {
  std::ostringstream os;
  const Quiver& q = p.quiver;
  os << "field " << (p.field.is_prime_field() ? "F " + std::to_string(p.field.modulus()) : std::string("Q")) << ";\n";
  os << "vertices";
  for (const auto& v : q.vertices) os << ' ' << v;
  os << ";\n";
  if (!q.arrows.empty()) {
    os << "arrows";
    for (std::size_t i = 0; i < q.arrows.size(); ++i) {
      const auto& a = q.arrows[i];
      os << (i ? "\n  " : " ") << a.name << ": " << q.vertices[a.source] << " -> " << q.vertices[a.target] << ';';
    }
    os << '\n';
  }
  if (!p.relations.empty()) {
    os << "relations";
    for (std::size_t r = 0; r < p.relations.size(); ++r) {
      os << (r ? "\n  " : " ");
      const auto& rel = p.relations[r];
      for (std::size_t i = 0; i < rel.terms.size(); ++i) {
        Scalar c = rel.terms[i].coefficient;
        bool negative = !p.field.is_prime_field() && sgn(c.rational()) < 0;
        if (negative) c = -c;
        if (i == 0) {
          if (negative) os << "- ";
        } else {
          os << (negative ? " - " : " + ");
        }
        if (!c.is_one()) os << coefficient_text(c) << ' ';
        os << path_to_string(q, rel.terms[i].path);
      }
      os << ';';
    }
    os << '\n';
  }
  if (p.cap != Presentation::kDefaultCap) os << "cap " << p.cap << ";\n";
  return os.str();
}

}  // namespace hstrace

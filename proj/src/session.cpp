#include "gmdual/session.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "gmdual/error.hpp"

namespace gmdual {

SessionError::SessionError(SourceLoc loc, const std::string& what)
    : std::runtime_error(std::to_string(loc.line) + ":" + std::to_string(loc.column) + ": " + what), loc_(loc) {}

std::optional<std::string> Command::arg(const std::string& key) const {
  std::optional<std::string> v;
  for (const auto& [k, val] : args)
    if (k == key) v = val;
  return v;
}

const std::vector<std::string>& session_verbs() {
  static const std::vector<std::string> verbs = {"hilbert", "resolve", "ext",    "localcoh", "matlis", "socle",
                                                 "depth",   "canonical", "serre", "dse",      "dmat",   "verifyA",
                                                 "verifyB", "puncture", "verifySerrePuncture", "proper"};
  return verbs;
}

namespace {

enum class Tok { Name, Int, Sym, Newline, End };

struct Token {
  Tok kind;
  std::string text;
  SourceLoc loc;
};

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  int line = 1, col = 1, depth = 0;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (s[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  while (i < s.size()) {
    const char c = s[i];
    SourceLoc loc{line, col};
    if (c == '#') {
      while (i < s.size() && s[i] != '\n') advance(1);
    } else if (c == '\n') {
      if (depth == 0) out.push_back({Tok::Newline, "\n", loc});
      advance(1);
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      out.push_back({Tok::Name, std::string(s.substr(i, j - i)), loc});
      advance(j - i);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Tok::Int, std::string(s.substr(i, j - i)), loc});
      advance(j - i);
    } else if (c == '.' && i + 1 < s.size() && s[i + 1] == '.') {
      out.push_back({Tok::Sym, "..", loc});
      advance(2);
    } else if (std::string_view("=()[],:/^*+-").find(c) != std::string_view::npos) {
      if (c == '(' || c == '[') ++depth;
      if ((c == ')' || c == ']') && depth > 0) --depth;
      out.push_back({Tok::Sym, std::string(1, c), loc});
      advance(1);
    } else {
      throw SessionError(loc, std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({Tok::End, "", SourceLoc{line, col}});
  return out;
}

std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::Newline: return "end of line";
    case Tok::End: return "end of input";
    default: return "'" + t.text + "'";
  }
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : t_(std::move(toks)) {}

  SessionAST session() {
    SessionAST ast;
    for (;;) {
      while (peek().kind == Tok::Newline) ++p_;
      if (peek().kind == Tok::End) break;
      const Token& head = peek();
      if (head.kind != Tok::Name) fail("'ring', 'module' or a command verb");
      if (head.text == "ring") {
        ast.nodes.emplace_back(ring());
      } else if (head.text == "module") {
        ast.nodes.emplace_back(module());
      } else if (is_verb(head.text)) {
        ast.nodes.emplace_back(command());
      } else {
        fail("'ring', 'module' or a command verb");
      }
      if (peek().kind != Tok::Newline && peek().kind != Tok::End) fail("end of line");
    }
    return ast;
  }

 private:
  std::vector<Token> t_;
  std::size_t p_ = 0;

  const Token& peek(std::size_t k = 0) const { return t_[std::min(p_ + k, t_.size() - 1)]; }
  bool is_sym(const char* s, std::size_t k = 0) const { return peek(k).kind == Tok::Sym && peek(k).text == s; }
  bool is_word(const char* s) const { return peek().kind == Tok::Name && peek().text == s; }
  static bool is_verb(const std::string& s) {
    const auto& v = session_verbs();
    return std::find(v.begin(), v.end(), s) != v.end();
  }

  [[noreturn]] void fail(const std::string& expected) const {
    throw SessionError(peek().loc, "expected " + expected + ", got " + describe(peek()));
  }
  void expect_sym(const char* s) {
    if (!is_sym(s)) fail(std::string("'") + s + "'");
    ++p_;
  }
  void expect_word(const char* s) {
    if (!is_word(s)) fail(std::string("'") + s + "'");
    ++p_;
  }
  std::string name(const char* what = "a name") {
    if (peek().kind != Tok::Name) fail(what);
    return t_[p_++].text;
  }
  int integer() {
    bool neg = false;
    if (is_sym("-")) {
      neg = true;
      ++p_;
    }
    if (peek().kind != Tok::Int) fail("an integer");
    const Token& tok = t_[p_++];
    long long v = 0;
    for (char ch : tok.text) {
      v = v * 10 + (ch - '0');
      if (v > 1000000000LL) throw SessionError(tok.loc, "integer out of range");
    }
    return static_cast<int>(neg ? -v : v);
  }

  RingDecl ring() {
    RingDecl r;
    r.loc = peek().loc;
    expect_word("ring");
    r.name = name();
    expect_sym("=");
    expect_word("poly");
    expect_sym("(");
    for (;;) {
      std::string v = name("a variable name");
      expect_sym(":");
      r.vars.emplace_back(v, integer());
      if (is_sym(",")) {
        ++p_;
        continue;
      }
      break;
    }
    expect_sym(")");
    if (is_sym("/")) {
      ++p_;
      expect_sym("(");
      r.ideal = poly_list();
      expect_sym(")");
    }
    return r;
  }

  std::vector<int> int_list() {
    std::vector<int> out;
    expect_sym("[");
    if (!is_sym("]")) {
      out.push_back(integer());
      while (is_sym(",")) {
        ++p_;
        out.push_back(integer());
      }
    }
    expect_sym("]");
    return out;
  }

  ModuleDecl module() {
    ModuleDecl m;
    m.loc = peek().loc;
    expect_word("module");
    m.name = name();
    expect_word("over");
    m.ring = name("a ring name");
    expect_sym("=");
    if (is_word("free")) {
      ++p_;
      m.kind = ModuleDecl::Kind::Free;
      m.twists = int_list();
    } else if (is_word("coker")) {
      ++p_;
      m.kind = ModuleDecl::Kind::Coker;
      if (is_sym("[") && !is_sym("[", 1)) m.twists = int_list();
      expect_sym("[");
      for (;;) {
        expect_sym("[");
        m.matrix.push_back(poly_list());
        expect_sym("]");
        if (is_sym(",")) {
          ++p_;
          continue;
        }
        break;
      }
      expect_sym("]");
    } else if (is_word("quot")) {
      ++p_;
      m.kind = ModuleDecl::Kind::Quot;
      expect_sym("(");
      m.polys = poly_list();
      expect_sym(")");
    } else {
      fail("'free', 'coker' or 'quot'");
    }
    return m;
  }

  std::vector<PolyExpr> poly_list() {
    std::vector<PolyExpr> out{poly()};
    while (is_sym(",")) {
      ++p_;
      out.push_back(poly());
    }
    return out;
  }

  PolyExpr poly() {
    PolyExpr e;
    e.loc = peek().loc;
    bool neg = false;
    if (is_sym("-") || is_sym("+")) {
      neg = is_sym("-");
      ++p_;
    }
    e.terms.push_back(term(neg));
    while (is_sym("+") || is_sym("-")) {
      neg = is_sym("-");
      ++p_;
      e.terms.push_back(term(neg));
    }
    return e;
  }

  PolyExpr::Term term(bool neg) {
    PolyExpr::Term t;
    t.coef = neg ? -1 : 1;
    bool any = false;
    for (;;) {
      if (peek().kind == Tok::Int) {
        const Token& num = t_[p_++];
        std::string text = num.text;
        if (is_sym("/") && peek(1).kind == Tok::Int) {
          ++p_;
          text += "/" + t_[p_++].text;
        }
        try {
          t.coef *= parse_scalar(text);
        } catch (const ComputationError& err) {
          throw SessionError(num.loc, err.what());
        }
      } else if (peek().kind == Tok::Name && !is_verb(peek().text)) {
        std::string v = t_[p_++].text;
        int e = 1;
        if (is_sym("^")) {
          ++p_;
          e = integer();
          if (e < 0) throw SessionError(peek().loc, "negative exponent");
        }
        t.factors.emplace_back(v, e);
      } else {
        if (!any) fail("a coefficient or a variable");
        break;
      }
      any = true;
      if (is_sym("*")) {
        ++p_;
        if (peek().kind != Tok::Int && peek().kind != Tok::Name) fail("a coefficient or a variable");
        continue;
      }
      // implicit product only between a coefficient and what follows it
      if (peek().kind == Tok::Name && t.factors.empty()) continue;
      break;
    }
    return t;
  }

  std::string value() {
    std::ostringstream os;
    if (peek().kind == Tok::Name) return t_[p_++].text;
    os << integer();
    if (is_sym("..")) {
      ++p_;
      os << ".." << integer();
    }
    return os.str();
  }

  Command command() {
    Command c;
    c.loc = peek().loc;
    c.verb = name();
    if (peek().kind == Tok::Name && !is_sym("=", 1)) c.target = name();
    while (peek().kind == Tok::Name) {
      std::string key = name();
      expect_sym("=");
      c.args.emplace_back(key, value());
    }
    return c;
  }
};

std::string join_ints(const std::vector<int>& v) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  os << "]";
  return os.str();
}

}  // namespace

SessionAST parse_session(std::string_view text) { return Parser(lex(text)).session(); }

std::string print_poly(const PolyExpr& p) {
  std::ostringstream os;
  for (std::size_t i = 0; i < p.terms.size(); ++i) {
    const auto& t = p.terms[i];
    const bool neg = sgn(t.coef) < 0;
    if (i == 0) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    Scalar a = neg ? Scalar(-t.coef) : t.coef;
    const bool show_coef = t.factors.empty() || a != 1;
    if (show_coef) os << to_string(a);
    for (std::size_t k = 0; k < t.factors.size(); ++k) {
      if (k > 0 || show_coef) os << "*";
      os << t.factors[k].first;
      if (t.factors[k].second != 1) os << "^" << t.factors[k].second;
    }
  }
  return os.str();
}

std::string print_node(const SessionNode& node) {
  std::ostringstream os;
  if (const auto* r = std::get_if<RingDecl>(&node)) {
    os << "ring " << r->name << " = poly(";
    for (std::size_t i = 0; i < r->vars.size(); ++i) os << (i ? ", " : "") << r->vars[i].first << ":" << r->vars[i].second;
    os << ")";
    if (!r->ideal.empty()) {
      os << " / (";
      for (std::size_t i = 0; i < r->ideal.size(); ++i) os << (i ? ", " : "") << print_poly(r->ideal[i]);
      os << ")";
    }
  } else if (const auto* m = std::get_if<ModuleDecl>(&node)) {
    os << "module " << m->name << " over " << m->ring << " = ";
    switch (m->kind) {
      case ModuleDecl::Kind::Free: os << "free " << join_ints(m->twists); break;
      case ModuleDecl::Kind::Coker:
        os << "coker ";
        if (!m->twists.empty()) os << join_ints(m->twists) << " ";
        os << "[";
        for (std::size_t i = 0; i < m->matrix.size(); ++i) {
          os << (i ? ", " : "") << "[";
          for (std::size_t j = 0; j < m->matrix[i].size(); ++j) os << (j ? ", " : "") << print_poly(m->matrix[i][j]);
          os << "]";
        }
        os << "]";
        break;
      case ModuleDecl::Kind::Quot:
        os << "quot (";
        for (std::size_t i = 0; i < m->polys.size(); ++i) os << (i ? ", " : "") << print_poly(m->polys[i]);
        os << ")";
        break;
    }
  } else {
    const auto& c = std::get<Command>(node);
    os << c.verb;
    if (c.target) os << " " << *c.target;
    for (const auto& [k, v] : c.args) os << " " << k << "=" << v;
  }
  return os.str();
}

std::string print_session(const SessionAST& ast) {
  std::string out;
  for (const auto& n : ast.nodes) out += print_node(n) + "\n";
  return out;
}

Window parse_window(std::string_view text) {
  auto pos = text.find("..");
  if (pos == std::string_view::npos) throw ComputationError(ErrorKind::InvalidInput, "expected a range a..b, got '" + std::string(text) + "'");
  try {
    std::size_t used = 0;
    std::string a(text.substr(0, pos)), b(text.substr(pos + 2));
    int lo = std::stoi(a, &used);
    if (used != a.size()) throw std::invalid_argument("lo");
    int hi = std::stoi(b, &used);
    if (used != b.size()) throw std::invalid_argument("hi");
    return Window(lo, hi);
  } catch (const std::logic_error&) {
    throw ComputationError(ErrorKind::InvalidInput, "expected a range a..b, got '" + std::string(text) + "'");
  }
}

Poly to_poly(const PolyExpr& p, const GradedRing& ring) {
  std::vector<PolyTerm> terms;
  for (const auto& t : p.terms) {
    std::vector<int> e(ring.nvars(), 0);
    for (const auto& [v, k] : t.factors) {
      auto it = std::find(ring.names().begin(), ring.names().end(), v);
      if (it == ring.names().end()) throw SessionError(p.loc, "unknown variable '" + v + "'");
      e[static_cast<std::size_t>(it - ring.names().begin())] += k;
    }
    terms.push_back(PolyTerm{ring.monomial(e), t.coef});
  }
  Poly f(std::move(terms));
  if (!f.is_homogeneous()) throw SessionError(p.loc, "non-homogeneous polynomial " + ring.str(f));
  return f;
}

Environment build_environment(const SessionAST& ast) {
  Environment env;
  std::set<std::string> names;
  auto claim = [&](const std::string& n, SourceLoc loc) {
    if (!names.insert(n).second) throw SessionError(loc, "duplicate name '" + n + "'");
  };
  for (const auto& node : ast.nodes) {
    if (const auto* r = std::get_if<RingDecl>(&node)) {
      claim(r->name, r->loc);
      std::vector<std::string> vars;
      std::vector<int> weights;
      for (const auto& [v, w] : r->vars) {
        if (w < 1) throw SessionError(r->loc, "non-positive weight " + std::to_string(w) + " for variable '" + v + "'");
        vars.push_back(v);
        weights.push_back(w);
      }
      try {
        RingPtr p = GradedRing::create(vars, weights);
        std::vector<Poly> ideal;
        for (const auto& f : r->ideal) ideal.push_back(to_poly(f, *p));
        env.rings[r->name] = GradedRing::create(vars, weights, std::move(ideal));
      } catch (const ComputationError& e) {
        throw SessionError(r->loc, e.what());
      }
    } else if (const auto* m = std::get_if<ModuleDecl>(&node)) {
      claim(m->name, m->loc);
      auto it = env.rings.find(m->ring);
      if (it == env.rings.end()) throw SessionError(m->loc, "unknown ring '" + m->ring + "'");
      const RingPtr& ring = it->second;
      try {
        switch (m->kind) {
          case ModuleDecl::Kind::Free: env.modules[m->name] = PresentedModule::free(ring, m->twists); break;
          case ModuleDecl::Kind::Quot: {
            std::vector<Poly> gens;
            for (const auto& f : m->polys) gens.push_back(to_poly(f, *ring));
            env.modules[m->name] = PresentedModule::quotient(ring, std::move(gens));
            break;
          }
          case ModuleDecl::Kind::Coker: {
            const std::size_t rows = m->matrix.size();
            std::vector<int> twists = m->twists.empty() ? std::vector<int>(rows, 0) : m->twists;
            if (twists.size() != rows)
              throw SessionError(m->loc, "twist-list arity mismatch: " + std::to_string(twists.size()) + " twists for " +
                                             std::to_string(rows) + " matrix rows");
            const std::size_t cols = rows ? m->matrix[0].size() : 0;
            for (const auto& row : m->matrix)
              if (row.size() != cols) throw SessionError(m->loc, "matrix rows have different lengths");
            std::vector<ModuleVector> rel(cols, ModuleVector(rows));
            for (std::size_t i = 0; i < rows; ++i)
              for (std::size_t j = 0; j < cols; ++j) rel[j][i] = ring->normal_form(to_poly(m->matrix[i][j], *ring));
            env.modules[m->name] = PresentedModule::cokernel(ring, std::move(twists), std::move(rel));
            break;
          }
        }
      } catch (const ComputationError& e) {
        throw SessionError(m->loc, e.what());
      }
      env.module_ring[m->name] = m->ring;
    } else {
      const auto& c = std::get<Command>(node);
      if (c.target && !names.count(*c.target)) throw SessionError(c.loc, "unknown name '" + *c.target + "'");
      if (auto other = c.arg("target"); other && !names.count(*other))
        throw SessionError(c.loc, "unknown name '" + *other + "'");
    }
  }
  return env;
}

}  // namespace gmdual

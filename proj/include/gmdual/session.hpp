#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "gmdual/module.hpp"
#include "gmdual/scalar.hpp"

namespace gmdual {

struct SourceLoc {
  int line = 1;
  int column = 1;
};

/// Polynomial as written: a list of terms, each a coefficient times named powers.
struct PolyExpr {
  struct Term {
    Scalar coef;
    std::vector<std::pair<std::string, int>> factors;
    bool operator==(const Term&) const = default;
  };
  std::vector<Term> terms;
  SourceLoc loc;
  bool operator==(const PolyExpr& o) const { return terms == o.terms; }
};

struct RingDecl {
  std::string name;
  std::vector<std::pair<std::string, int>> vars;  // name, weight
  std::vector<PolyExpr> ideal;
  SourceLoc loc;
  bool operator==(const RingDecl& o) const { return name == o.name && vars == o.vars && ideal == o.ideal; }
};

struct ModuleDecl {
  enum class Kind { Free, Coker, Quot };
  std::string name;
  std::string ring;
  Kind kind = Kind::Free;
  std::vector<int> twists;                   // free twists, or coker generator twists (empty = all 0)
  std::vector<std::vector<PolyExpr>> matrix;  // coker: rows = generators, columns = relations
  std::vector<PolyExpr> polys;                // quot
  SourceLoc loc;
  bool operator==(const ModuleDecl& o) const {
    return name == o.name && ring == o.ring && kind == o.kind && twists == o.twists && matrix == o.matrix && polys == o.polys;
  }
};

struct Command {
  std::string verb;
  std::optional<std::string> target;
  std::vector<std::pair<std::string, std::string>> args;
  SourceLoc loc;
  bool operator==(const Command& o) const { return verb == o.verb && target == o.target && args == o.args; }

  std::optional<std::string> arg(const std::string& key) const;
};

using SessionNode = std::variant<RingDecl, ModuleDecl, Command>;

/// Node equality ignores source locations.
struct SessionAST {
  std::vector<SessionNode> nodes;
  bool operator==(const SessionAST&) const = default;
};

/// Parse or semantic error with a position.
class SessionError : public std::runtime_error {
 public:
  SessionError(SourceLoc loc, const std::string& what);
  const SourceLoc& loc() const { return loc_; }

 private:
  SourceLoc loc_;
};

const std::vector<std::string>& session_verbs();

SessionAST parse_session(std::string_view text);
std::string print_session(const SessionAST& ast);
std::string print_node(const SessionNode& node);
std::string print_poly(const PolyExpr& p);

/// Parses "a..b".
Window parse_window(std::string_view text);

/// Declarations resolved into rings and modules.
struct Environment {
  std::map<std::string, RingPtr> rings;
  std::map<std::string, PresentedModule> modules;
  std::map<std::string, std::string> module_ring;
};

/// Builds every declaration; throws SessionError on unknown names, duplicate
/// names, non-homogeneous input, non-positive weights or arity mismatches.
/// Commands are checked to reference declared names.
Environment build_environment(const SessionAST& ast);

Poly to_poly(const PolyExpr& p, const GradedRing& ring);

}  // namespace gmdual

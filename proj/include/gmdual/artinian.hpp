#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gmdual/linalg.hpp"
#include "gmdual/module.hpp"
#include "gmdual/pieces.hpp"

namespace gmdual {

/// Per-degree record of how an approximant was obtained.
struct StabilizationCertificate {
  bool stabilized = true;
  int t_max = 0;
  /// degree -> colimit stage at which the piece was read off
  std::map<int, int> stage;
  std::string route;
};

/// Degreewise model of a module on a window: finite pieces plus the
/// variable actions x_j: X_d -> X_{d+w_j} whenever both degrees lie in the
/// window. Pieces above the window are taken to be zero.
class ArtinianApprox {
 public:
  ArtinianApprox() = default;
  ArtinianApprox(std::vector<int> weights, Window w);

  const std::vector<int>& weights() const { return weights_; }
  const Window& window() const { return table_.window; }
  const HilbertTable& table() const { return table_; }
  int dim(int d) const { return static_cast<int>(table_.at(d)); }

  void set_dim(int d, int n) { table_[d] = n; }
  void set_action(std::size_t j, int d, LinearMap m);
  /// x_j on piece d; the zero map when the target leaves the window.
  LinearMap action(std::size_t j, int d) const;
  /// Action of a monomial (product of the variable actions).
  LinearMap action(const Monomial& m, int d) const;

  StabilizationCertificate certificate;

  std::optional<int> top_degree() const;
  /// x_i x_j = x_j x_i wherever both composites stay in the window.
  bool actions_commute() const;
  /// Every ideal generator of the ring acts by zero.
  bool satisfies_relations(const GradedRing& ring) const;
  ArtinianApprox restricted(Window w) const;
  /// X(a)_d = X_{a+d}.
  ArtinianApprox twisted(int a) const;

  /// Finite pieces of a presented module on a window.
  static ArtinianApprox from_module(const GradedPieces& m, Window w);

 private:
  std::vector<int> weights_;
  HilbertTable table_;
  std::map<std::pair<std::size_t, int>, LinearMap> action_;
};

/// Graded vector-space dual with transposed action, on window w.
/// Needs x's window to cover the reflection of w.
ArtinianApprox matlis_dual(const ArtinianApprox& x, Window w);

/// Dimensions of the common kernel of the variables. Pieces above the window
/// count as zero, so the window must reach the top degree.
HilbertTable socle(const ArtinianApprox& x);
HilbertTable socle(const GradedPieces& m, Window w);

/// dim Hom(X, Y)_e: families phi_d: X_d -> Y_{d+e} commuting with the action,
/// solved from the top degree down. Degrees with d+e below Y's window are not
/// constrained.
long long hom_dimension(const ArtinianApprox& x, const ArtinianApprox& y, int e);
HilbertTable hom_table(const ArtinianApprox& x, const ArtinianApprox& y, Window w);

/// One spot of a complex, seen degree by degree.
struct PieceComplex {
  int dim = 0;
  LinearMap in;   // C^{i-1}_d -> C^i_d
  LinearMap out;  // C^i_d -> C^{i+1}_d
};

/// Cohomology of a degreewise complex at one spot, with the action inherited
/// from an action on the middle term.
ArtinianApprox cohomology_approx(std::vector<int> weights, Window w, const std::function<PieceComplex(int)>& piece,
                                 const std::function<LinearMap(std::size_t, int)>& act);

/// Maps of Artinian approximants for exactness tests: f[d]: X_d -> Y_d.
struct ApproxMorphism {
  const ArtinianApprox* source = nullptr;
  const ArtinianApprox* target = nullptr;
  std::map<int, LinearMap> maps;

  LinearMap at(int d) const;
  /// Commutes with every variable action inside the window.
  bool is_homomorphism() const;
  /// The transposed map between the duals (from dual(target) to dual(source)).
  ApproxMorphism dual(const ArtinianApprox& dual_target, const ArtinianApprox& dual_source) const;
};

/// 0 -> X -> Y -> Z -> 0 exact at every degree of the window.
bool is_short_exact(const ApproxMorphism& f, const ApproxMorphism& g, Window w);

}  // namespace gmdual

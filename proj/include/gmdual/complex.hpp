#pragma once

#include <optional>
#include <vector>

#include "gmdual/module.hpp"
#include "gmdual/resolution.hpp"

namespace gmdual {

/// Bounded cochain complex of presented modules; the differential raises the
/// index. A differential is given by the images of the source generators,
/// written in the free cover of the target.
class GradedComplex {
 public:
  GradedComplex() = default;
  GradedComplex(RingPtr ring, int lowest_spot, std::vector<PresentedModule> terms,
                std::vector<std::vector<ModuleVector>> differentials);

  const RingPtr& ring() const { return ring_; }
  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(terms_.size()) - 1; }
  bool empty() const { return terms_.empty(); }
  /// Term at a spot (the zero module outside the support).
  PresentedModule term(int spot) const;
  /// Images of the generators of term(spot) in term(spot+1).
  const std::vector<ModuleVector>& differential(int spot) const;

  /// d after d vanishes in every spot.
  bool is_complex() const;
  /// ker / im at a spot, as a minimal presented module.
  PresentedModule cohomology(int spot) const;

 private:
  RingPtr ring_;
  int lo_ = 0;
  std::vector<PresentedModule> terms_;
  std::vector<std::vector<ModuleVector>> diffs_;
  std::vector<ModuleVector> none_;
};

/// Koszul complex on x_1^t..x_n^t, with K_p in spot -p: K_p = (+)_{|S|=p} A(-t w_S).
struct KoszulPowerComplex {
  GradedComplex complex;
  int t = 1;
  /// Only over a polynomial ring is this a resolution of A/(x^[t]).
  bool is_resolution = true;
  /// subsets[p] lists the S indexing the basis of K_p, in order.
  std::vector<std::vector<std::vector<unsigned>>> subsets;
};

KoszulPowerComplex koszul_power(const RingPtr& ring, int t);

/// Hom(F_., N) as a cochain complex in spots 0..L for a resolution F of M.
GradedComplex hom_complex(const Resolution& f, const PresentedModule& n);

struct ExtResult {
  int i = 0;
  PresentedModule module;
  HilbertTable table;
};

/// Ext^i_A(M, N) for i in [i_lo, i_hi], via a resolution of M over A.
std::vector<ExtResult> ext(const PresentedModule& m, const PresentedModule& n, int i_lo, int i_hi, Window w);

}  // namespace gmdual

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gmdual/artinian.hpp"
#include "gmdual/local_cohomology.hpp"
#include "gmdual/module.hpp"

namespace gmdual {

/// omega_A computed as Ext^{n-d}_P(A, P(-sum w)) over the ambient polynomial ring.
struct DualizingData {
  RingPtr ring;
  int krull_dim = 0;
  int weight_sum = 0;
  /// omega_A as an A-module; only meaningful when cohen_macaulay is set.
  PresentedModule omega;
  /// Spot of omega in D_se(A).
  int placement = 0;
  bool cohen_macaulay = false;
  /// j -> Ext^j_P(A, P(-sum w)) for every nonzero j.
  std::map<int, PresentedModule> ambient_ext;
  /// Top degree of H^d_m(A), i.e. minus the initial degree of omega.
  std::optional<int> a_invariant;
};

DualizingData canonical_module(const RingPtr& ring);

struct SerreObject {
  ArtinianApprox approx;
  DualizingData dualizing;
  std::string convention;
};

/// S = H^d_m(omega_A) on a window (Cohen-Macaulay rings only).
SerreObject serre_object(const RingPtr& ring, Window w, int t_max);
SerreObject serre_object(const DualizingData& dd, Window w, int t_max);

/// Cohomology spots of a complex, each with a module and its table.
struct SpotData {
  PresentedModule module;
  HilbertTable table;
};

struct DerivedObject {
  Window window;
  std::map<int, SpotData> spots;  // nonzero spots only

  HilbertTable euler() const;
  HilbertTable table(int spot) const;
  std::optional<int> single_spot() const;
};

/// D_se(F): Ext^j_P(F, P(-sum w)) in spot j - n, as A-modules.
DerivedObject serre_dual(const PresentedModule& f, Window w);

/// D_mat(F) = Hom(F_., S) over a resolution of F, spots 0..dim A.
/// S must reach down far enough to cover every twist of the resolution.
std::map<int, ArtinianApprox> matlis_functor(const PresentedModule& f, const ArtinianApprox& s, Window w);
/// D_mat(F) on w with S built on a window wide enough for F's resolution.
std::map<int, ArtinianApprox> matlis_functor(const PresentedModule& f, Window w, int t_max);

struct Comparison {
  std::string label;
  HilbertTable lhs;
  HilbertTable rhs;
  bool equal() const { return lhs == rhs; }
};

struct VerificationReport {
  std::string identity;
  std::string mode;
  bool pass = false;
  Window window;
  int t_max = 0;
  std::vector<Comparison> comparisons;
  std::vector<std::string> notes;

  void finish();
};

/// dim Hom(O(n), S)_0 against dim A_n for every n in the range.
VerificationReport verify_theorem_A(const RingPtr& ring, Window twist_range, Window w, int t_max);

/// D_mat(Gamma F) against D_se(F), and D_mat(F) against Gamma(D_se F): per spot
/// when D_se(F) is concentrated, by Euler tables otherwise.
VerificationReport verify_theorem_B(const PresentedModule& f, Window w, int t_max);

/// D_mat(D_mat F) and D_se(D_se F) return the tables of F.
VerificationReport involution_check(const PresentedModule& f, Window w, int t_max);

/// Sheaf cohomology H^i(O(d)) of the punctured quotient, for i = 0..dim A - 1,
/// as tables over d in the range.
std::vector<HilbertTable> punctured_cohomology(const RingPtr& ring, Window twist_range, int t_max);
/// Same for the sheaf attached to a module M: H^i(M~(d)).
std::vector<HilbertTable> punctured_cohomology(const PresentedModule& m, Window twist_range, int t_max);

/// dim H^i(O(d)) = dim H^{top-i}(omega(-d)) on the punctured quotient.
VerificationReport verify_serre_puncture(const RingPtr& ring, Window twist_range, int t_max);

/// dim A_0 = 1 and every weight positive.
VerificationReport properness_check(const RingPtr& ring);

/// S window large enough for the duality checks on w with the given twists.
Window serre_window_for(const RingPtr& ring, Window w, int max_twist);

}  // namespace gmdual

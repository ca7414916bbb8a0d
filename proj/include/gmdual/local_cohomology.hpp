#pragma once

#include <optional>
#include <vector>

#include "gmdual/artinian.hpp"
#include "gmdual/module.hpp"

namespace gmdual {

enum class Execution { Serial, Parallel };

/// H^i_m(M) on a window as the colimit over t of Ext^i_P(P/(x_1^t..x_n^t), M),
/// with each degree read off at the first stage t whose transition to t+1 is
/// an isomorphism. The variable action is carried along.
ArtinianApprox local_cohomology(const PresentedModule& m, int i, Window w, int t_max,
                                Execution mode = Execution::Parallel);

/// H^i_m(M) from the Cech complex on x_1..x_n; the localization at x_S is
/// modeled in each degree by fractions with denominator x_S^s, raising s until
/// two consecutive levels agree.
HilbertTable cech_local_cohomology(const PresentedModule& m, int i, Window w, int s_max,
                                   Execution mode = Execution::Parallel);

struct GammaResult {
  /// spots[i] = H^i_m(F), for i = 0..nvars.
  std::vector<ArtinianApprox> spots;
  HilbertTable euler;
};

GammaResult gamma_truncation(const PresentedModule& f, Window w, int t_max);

struct DepthResult {
  /// Least i <= max_i with Ext^i_A(k, M) nonzero; empty means depth > max_i.
  std::optional<int> depth;
  int max_i = 0;
};

DepthResult depth(const PresentedModule& m, int max_i);

/// The residue field k = A / m.
PresentedModule residue_field(const RingPtr& ring);

}  // namespace gmdual

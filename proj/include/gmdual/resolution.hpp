#pragma once

#include <span>
#include <vector>

#include "gmdual/module.hpp"

namespace gmdual {

/// Reduces the entries modulo the ideal, drops zero vectors, and keeps a
/// minimal generating subset of the submodule they generate (sorted by degree).
std::vector<ModuleVector> minimal_generators(const GradedRing& ring, std::span<const int> basis_degrees,
                                             std::vector<ModuleVector> vectors);

/// Minimal generators of the kernel of a map of free modules.
std::vector<ModuleVector> kernel(const FreeMap& f);

/// Cancels unit entries and drops redundant relations.
PresentedModule minimal_presentation(const PresentedModule& m);

/// ... -> F_2 -> F_1 -> F_0 -> M -> 0, with F_i = (+) A(twists[i][j]).
struct Resolution {
  RingPtr ring;
  std::vector<std::vector<int>> twists;
  /// maps[i] holds the columns of F_{i+1} -> F_i.
  std::vector<std::vector<ModuleVector>> maps;
  /// False when the computation stopped at the length cap with a nonzero kernel left.
  bool complete = false;

  int length() const { return static_cast<int>(twists.size()) - 1; }
  std::vector<int> basis_degrees(int i) const;
  FreeModule free_module(int i) const { return FreeModule{ring, twists[static_cast<std::size_t>(i)]}; }
  std::size_t rank(int i) const { return twists[static_cast<std::size_t>(i)].size(); }
};

/// Minimal graded free resolution out to homological step `max_length`.
Resolution free_resolution(const PresentedModule& m, int max_length);

/// Closed form from a finite resolution over the ambient polynomial ring.
HilbertSeries hilbert_series(const PresentedModule& m);

}  // namespace gmdual

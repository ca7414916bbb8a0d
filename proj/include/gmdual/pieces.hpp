#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

#include "gmdual/linalg.hpp"
#include "gmdual/module.hpp"

namespace gmdual {

/// Degreewise linear algebra of a presented module: each M_d gets the basis of
/// standard terms (position, monomial) outside the lead-term module, and the
/// variables act by explicit matrices. Caches are filled lazily and are safe
/// to query from several threads.
class GradedPieces {
 public:
  using Term = std::pair<std::size_t, Monomial>;
  struct Basis {
    std::vector<Term> terms;
    std::map<Term, int> index;
  };

  explicit GradedPieces(PresentedModule m);

  const PresentedModule& module() const { return m_; }
  const Basis& basis(int d) const;
  int dim(int d) const { return static_cast<int>(basis(d).terms.size()); }

  /// Coordinates of a homogeneous vector of degree d (reduced first).
  SparseVec coordinates(const ModuleVector& v, int d) const;
  /// The k-th basis vector of M_d as an element of the free cover.
  ModuleVector element(int d, int k) const;
  ModuleVector element(int d, const SparseVec& coords) const;

  /// Multiplication by a monomial, M_d -> M_{d + deg m}.
  const LinearMap& multiply(const Monomial& m, int d) const;
  LinearMap multiply(const Poly& f, int d) const;
  const LinearMap& variable(std::size_t j, int d) const {
    return multiply(m_.ring()->variable(j), d);
  }

 private:
  PresentedModule m_;
  std::vector<int> gen_degrees_;
  mutable std::mutex mutex_;
  mutable std::map<int, std::shared_ptr<const Basis>> bases_;
  mutable std::map<std::pair<int, Monomial>, std::shared_ptr<const LinearMap>> products_;
};

}  // namespace gmdual

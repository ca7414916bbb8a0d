#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "gmdual/groebner.hpp"
#include "gmdual/poly.hpp"

namespace gmdual {

class GradedRing;
using RingPtr = std::shared_ptr<const GradedRing>;

/// Result of a homogeneity test; the zero polynomial is homogeneous of every degree (degree empty).
struct Homogeneity {
  bool homogeneous = true;
  std::optional<int> degree;
};

/// A = k[x_1..x_n] / I with strictly positive weights and homogeneous I.
/// Immutable once created; the ideal's Gröbner basis is computed at construction.
class GradedRing {
 public:
  static RingPtr create(std::vector<std::string> names, std::vector<int> weights, std::vector<Poly> ideal = {});

  const std::vector<std::string>& names() const { return names_; }
  const std::vector<int>& weights() const { return weights_; }
  std::size_t nvars() const { return weights_.size(); }
  const std::vector<Poly>& ideal_generators() const { return ideal_; }
  const std::vector<Poly>& ideal_basis() const { return ideal_gb_; }
  bool is_polynomial_ring() const { return ideal_gb_.empty(); }
  int weight_sum() const;

  /// The ambient polynomial ring P with the same variables and weights.
  RingPtr ambient() const;

  Monomial monomial(std::vector<int> exps) const { return Monomial(std::move(exps), weights_); }
  Monomial variable(std::size_t i) const { return Monomial::variable(i, weights_); }
  Poly variable_poly(std::size_t i) const { return Poly::monomial(variable(i)); }
  Poly constant(Scalar c) const { return Poly::constant(nvars(), std::move(c)); }

  int weighted_degree(const Monomial& m) const { return m.degree(); }
  Homogeneity is_homogeneous(const Poly& f) const;

  /// Canonical representative of f modulo the ideal.
  Poly normal_form(const Poly& f) const;
  bool in_ideal(const Poly& f) const { return normal_form(f).is_zero(); }

  /// Krull dimension of A, read off the lead-term ideal.
  int krull_dimension() const;

  /// All monomials of weighted degree d in the ambient ring, descending.
  const std::vector<Monomial>& monomials_of_degree(int d) const;
  /// Monomials of degree d outside the lead-term ideal (a basis of A_d).
  std::vector<Monomial> standard_monomials(int d) const;

  std::string str(const Poly& f) const { return f.str(names_); }

 private:
  GradedRing() = default;

  std::vector<std::string> names_;
  std::vector<int> weights_;
  std::vector<Poly> ideal_;
  std::vector<Poly> ideal_gb_;
  ModuleGB gb_;

  mutable std::mutex cache_mutex_;
  mutable std::map<int, std::unique_ptr<std::vector<Monomial>>> monomial_cache_;
};

}  // namespace gmdual

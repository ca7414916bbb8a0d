#pragma once

#include <optional>
#include <span>
#include <vector>

#include "gmdual/poly.hpp"

namespace gmdual {

/// Element of a free module: one polynomial per basis vector.
using ModuleVector = std::vector<Poly>;

ModuleVector zero_vector(std::size_t rank);
bool is_zero(const ModuleVector& v);
/// Position-over-term lead: the first nonzero entry wins.
std::optional<std::size_t> lead_position(const ModuleVector& v);
/// Weighted degree of a homogeneous vector, given the degrees of the basis vectors.
std::optional<int> vector_degree(const ModuleVector& v, std::span<const int> basis_degrees);
bool is_homogeneous(const ModuleVector& v, std::span<const int> basis_degrees);
ModuleVector times(const ModuleVector& v, const Poly& f);
ModuleVector add(const ModuleVector& a, const ModuleVector& b);
void add_multiple(ModuleVector& v, const Scalar& c, const Monomial& m, const ModuleVector& g);

/// Reduced Gröbner basis of a homogeneous submodule of a free module over a
/// weighted polynomial ring, for the position-over-term extension of the
/// weighted-degree/lex order.
class ModuleGB {
 public:
  ModuleGB() = default;

  /// Homogeneous Buchberger, processed degree by degree.
  static ModuleGB compute(std::vector<ModuleVector> generators, std::vector<int> basis_degrees,
                          std::vector<int> weights);

  /// Unique fully reduced remainder.
  ModuleVector normal_form(ModuleVector v) const;
  /// True if mono * e_pos is a lead-term multiple (i.e. not a standard monomial).
  bool lead_divides(std::size_t pos, const Monomial& mono) const;
  bool contains(const ModuleVector& v) const { return gmdual::is_zero(normal_form(v)); }

  const std::vector<ModuleVector>& elements() const { return elements_; }
  const std::vector<int>& basis_degrees() const { return basis_degrees_; }
  const std::vector<int>& weights() const { return weights_; }
  std::size_t rank() const { return basis_degrees_.size(); }

 private:
  struct Lead {
    std::size_t pos;
    Monomial mono;
    Scalar coef;
  };
  const Lead* find_divisor(std::size_t pos, const Monomial& m) const;
  void add_element(ModuleVector v);

  std::vector<ModuleVector> elements_;
  std::vector<Lead> leads_;
  std::vector<int> basis_degrees_;
  std::vector<int> weights_;
};

/// Generators of { a : sum_j a_j columns[j] lies in ideal * F } where F has the
/// given basis degrees and the ideal is given by a Gröbner basis (may be empty).
/// Returned vectors live in the free module with basis degrees `column_degrees`,
/// entries reduced modulo the ideal; zero vectors are dropped.
std::vector<ModuleVector> syzygies(std::span<const ModuleVector> columns, std::span<const int> target_degrees,
                                   std::span<const int> column_degrees, std::span<const int> weights,
                                   std::span<const Poly> ideal_gb);

}  // namespace gmdual

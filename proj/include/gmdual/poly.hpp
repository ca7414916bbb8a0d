#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gmdual/scalar.hpp"

namespace gmdual {

/// Exponent vector together with its weighted degree (cached at construction).
class Monomial {
 public:
  Monomial() = default;
  Monomial(std::vector<int> exps, std::span<const int> weights);
  static Monomial one(std::size_t nvars) { Monomial m; m.exps_.assign(nvars, 0); return m; }
  static Monomial variable(std::size_t i, std::span<const int> weights);

  const std::vector<int>& exps() const { return exps_; }
  int operator[](std::size_t i) const { return exps_[i]; }
  std::size_t size() const { return exps_.size(); }
  int degree() const { return degree_; }
  bool is_one() const;

  Monomial operator*(const Monomial& o) const;
  /// Requires o | *this.
  Monomial operator/(const Monomial& o) const;
  bool divides(const Monomial& o) const;
  Monomial lcm(const Monomial& o, std::span<const int> weights) const;
  /// Coprime: no variable occurs in both.
  bool coprime(const Monomial& o) const;

  bool operator==(const Monomial& o) const { return exps_ == o.exps_; }
  /// Weighted degree first, then lexicographic with the earliest variable most significant.
  std::strong_ordering operator<=>(const Monomial& o) const;

  std::size_t hash() const;

 private:
  std::vector<int> exps_;
  int degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

struct PolyTerm {
  Monomial mono;
  Scalar coef;
};

/// Sparse polynomial; terms sorted strictly descending in the monomial order, no zero coefficients.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<PolyTerm> terms);  // normalizes (sorts, merges, drops zeros)
  static Poly monomial(Monomial m, Scalar c = 1);
  static Poly constant(std::size_t nvars, Scalar c);

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<PolyTerm>& terms() const { return terms_; }
  const PolyTerm& lead() const { return terms_.front(); }

  /// Every term has the same weighted degree; zero is homogeneous of any degree (reported as nullopt degree).
  bool is_homogeneous() const;
  /// Degree of the lead term; undefined for zero.
  int degree() const { return terms_.front().mono.degree(); }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly scaled(const Scalar& c) const;
  Poly times(const Monomial& m, const Scalar& c = 1) const;
  /// *this += c * m * g, in place.
  void add_multiple(const Scalar& c, const Monomial& m, const Poly& g);
  /// Appends a term smaller than every existing one.
  void push_back_term(PolyTerm t) { terms_.push_back(std::move(t)); }
  void drop_lead() { terms_.erase(terms_.begin()); }

  bool operator==(const Poly& o) const;

  std::string str(std::span<const std::string> names) const;

 private:
  std::vector<PolyTerm> terms_;
};

}  // namespace gmdual

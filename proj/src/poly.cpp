#include "gmdual/poly.hpp"

#include <algorithm>
#include <cassert>

namespace gmdual {

Monomial::Monomial(std::vector<int> exps, std::span<const int> weights) : exps_(std::move(exps)) {
  assert(exps_.size() == weights.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) degree_ += exps_[i] * weights[i];
}

Monomial Monomial::variable(std::size_t i, std::span<const int> weights) {
  std::vector<int> e(weights.size(), 0);
  e[i] = 1;
  return Monomial(std::move(e), weights);
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e == 0; });
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  r.exps_.resize(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] = exps_[i] + o.exps_[i];
  r.degree_ = degree_ + o.degree_;
  return r;
}

Monomial Monomial::operator/(const Monomial& o) const {
  Monomial r;
  r.exps_.resize(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] = exps_[i] - o.exps_[i];
  r.degree_ = degree_ - o.degree_;
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > o.exps_[i]) return false;
  return true;
}

Monomial Monomial::lcm(const Monomial& o, std::span<const int> weights) const {
  std::vector<int> e(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) e[i] = std::max(exps_[i], o.exps_[i]);
  return Monomial(std::move(e), weights);
}

bool Monomial::coprime(const Monomial& o) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > 0 && o.exps_[i] > 0) return false;
  return true;
}

std::strong_ordering Monomial::operator<=>(const Monomial& o) const {
  if (degree_ != o.degree_) return degree_ <=> o.degree_;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] != o.exps_[i]) return exps_[i] <=> o.exps_[i];
  return std::strong_ordering::equal;
}

std::size_t Monomial::hash() const {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (int e : exps_) h = (h ^ static_cast<std::size_t>(e + 0x9e3779b9)) * 0x100000001b3ULL;
  return h;
}

}  // namespace gmdual

namespace gmdual {

namespace {

bool term_greater(const PolyTerm& a, const PolyTerm& b) { return a.mono > b.mono; }

// Merge two descending term lists as a + c*b.
std::vector<PolyTerm> merge_add(const std::vector<PolyTerm>& a, const std::vector<PolyTerm>& b,
                                const Scalar& c, const Monomial* shift) {
  std::vector<PolyTerm> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  auto shifted = [&](std::size_t k) { return shift ? b[k].mono * *shift : b[k].mono; };
  while (i < a.size() || j < b.size()) {
    if (j == b.size()) {
      out.push_back(a[i++]);
      continue;
    }
    Monomial bm = shifted(j);
    if (i == a.size()) {
      out.push_back({std::move(bm), c * b[j].coef});
      ++j;
      continue;
    }
    auto cmp = a[i].mono <=> bm;
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back({std::move(bm), c * b[j].coef});
      ++j;
    } else {
      Scalar s = a[i].coef + c * b[j].coef;
      if (!is_zero(s)) out.push_back({a[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Poly::Poly(std::vector<PolyTerm> terms) {
  std::sort(terms.begin(), terms.end(), term_greater);
  for (auto& t : terms) {
    if (!terms_.empty() && terms_.back().mono == t.mono) {
      terms_.back().coef += t.coef;
      if (gmdual::is_zero(terms_.back().coef)) terms_.pop_back();
    } else if (!gmdual::is_zero(t.coef)) {
      terms_.push_back(std::move(t));
    }
  }
}

Poly Poly::monomial(Monomial m, Scalar c) {
  Poly p;
  if (!gmdual::is_zero(c)) p.terms_.push_back({std::move(m), std::move(c)});
  return p;
}

Poly Poly::constant(std::size_t nvars, Scalar c) { return monomial(Monomial::one(nvars), std::move(c)); }

bool Poly::is_homogeneous() const {
  for (const auto& t : terms_)
    if (t.mono.degree() != terms_.front().mono.degree()) return false;
  return true;
}

Poly Poly::operator+(const Poly& o) const {
  Poly r;
  r.terms_ = merge_add(terms_, o.terms_, Scalar(1), nullptr);
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  Poly r;
  r.terms_ = merge_add(terms_, o.terms_, Scalar(-1), nullptr);
  return r;
}

Poly Poly::operator-() const { return scaled(Scalar(-1)); }

Poly Poly::scaled(const Scalar& c) const {
  if (gmdual::is_zero(c)) return {};
  Poly r = *this;
  for (auto& t : r.terms_) t.coef *= c;
  return r;
}

Poly Poly::times(const Monomial& m, const Scalar& c) const {
  if (gmdual::is_zero(c)) return {};
  Poly r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coef * c});
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  Poly r;
  for (const auto& t : o.terms_) r.add_multiple(t.coef, t.mono, *this);
  return r;
}

void Poly::add_multiple(const Scalar& c, const Monomial& m, const Poly& g) {
  if (gmdual::is_zero(c) || g.is_zero()) return;
  terms_ = merge_add(terms_, g.terms_, c, &m);
}

bool Poly::operator==(const Poly& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (!(terms_[i].mono == o.terms_[i].mono) || terms_[i].coef != o.terms_[i].coef) return false;
  return true;
}

std::string Poly::str(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    Scalar c = t.coef;
    bool neg = sgn(c) < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    bool unit_mono = t.mono.is_one();
    std::string mono;
    for (std::size_t i = 0; i < t.mono.size(); ++i) {
      if (t.mono[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names[i];
      if (t.mono[i] > 1) mono += "^" + std::to_string(t.mono[i]);
    }
    if (c != 1 || unit_mono) {
      out += c.get_str();
      if (!unit_mono) out += "*";
    }
    out += mono;
  }
  return out;
}

}  // namespace gmdual

#include "gmdual/ring.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <set>

#include "gmdual/error.hpp"

namespace gmdual {

RingPtr GradedRing::create(std::vector<std::string> names, std::vector<int> weights, std::vector<Poly> ideal) {
  if (names.size() != weights.size())
    throw ComputationError(ErrorKind::InvalidInput, "variable/weight count mismatch");
  if (names.empty()) throw ComputationError(ErrorKind::InvalidInput, "ring needs at least one variable");
  std::set<std::string> seen;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (weights[i] < 1)
      throw ComputationError(ErrorKind::InvalidInput,
                             "non-positive weight " + std::to_string(weights[i]) + " for variable " + names[i]);
    if (!seen.insert(names[i]).second) throw ComputationError(ErrorKind::InvalidInput, "duplicate variable " + names[i]);
  }
  std::shared_ptr<GradedRing> r(new GradedRing());
  r->names_ = std::move(names);
  r->weights_ = std::move(weights);
  for (auto& f : ideal) {
    if (f.is_zero()) continue;
    if (!f.is_homogeneous())
      throw ComputationError(ErrorKind::InvalidInput, "non-homogeneous ideal generator " + f.str(r->names_));
    if (f.degree() == 0) throw ComputationError(ErrorKind::InvalidInput, "ideal contains a unit");
    r->ideal_.push_back(std::move(f));
  }
  std::vector<ModuleVector> gens;
  for (const auto& f : r->ideal_) gens.push_back(ModuleVector{f});
  r->gb_ = ModuleGB::compute(std::move(gens), {0}, r->weights_);
  for (const auto& g : r->gb_.elements()) r->ideal_gb_.push_back(g[0]);
  return r;
}

int GradedRing::weight_sum() const { return std::accumulate(weights_.begin(), weights_.end(), 0); }

RingPtr GradedRing::ambient() const { return create(names_, weights_); }

Homogeneity GradedRing::is_homogeneous(const Poly& f) const {
  if (f.is_zero()) return {true, std::nullopt};
  if (!f.is_homogeneous()) return {false, std::nullopt};
  return {true, f.degree()};
}

Poly GradedRing::normal_form(const Poly& f) const {
  if (ideal_gb_.empty()) return f;
  return gb_.normal_form(ModuleVector{f})[0];
}

int GradedRing::krull_dimension() const {
  // dim P/LT(I) = max |S| such that no minimal lead monomial is supported inside S.
  const std::size_t n = nvars();
  std::vector<std::vector<int>> leads;
  for (const auto& g : ideal_gb_) leads.push_back(g.lead().mono.exps());
  int best = 0;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    int size = std::popcount(mask);
    if (size <= best) continue;
    bool free = true;
    for (const auto& e : leads) {
      bool inside = true;
      for (std::size_t i = 0; i < n && inside; ++i)
        if (e[i] > 0 && !(mask & (1u << i))) inside = false;
      if (inside) {
        free = false;
        break;
      }
    }
    if (free) best = size;
  }
  return best;
}

const std::vector<Monomial>& GradedRing::monomials_of_degree(int d) const {
  std::lock_guard lock(cache_mutex_);
  auto it = monomial_cache_.find(d);
  if (it != monomial_cache_.end()) return *it->second;
  auto out = std::make_unique<std::vector<Monomial>>();
  if (d >= 0) {
    std::vector<int> e(nvars(), 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
      if (i + 1 == nvars()) {
        if (left % weights_[i] == 0) {
          e[i] = left / weights_[i];
          out->push_back(Monomial(e, weights_));
        }
        e[i] = 0;
        return;
      }
      for (int k = left / weights_[i]; k >= 0; --k) {
        e[i] = k;
        rec(i + 1, left - k * weights_[i]);
      }
      e[i] = 0;
    };
    rec(0, d);
  }
  const auto& ref = *out;
  monomial_cache_.emplace(d, std::move(out));
  return ref;
}

std::vector<Monomial> GradedRing::standard_monomials(int d) const {
  std::vector<Monomial> out;
  for (const auto& m : monomials_of_degree(d))
    if (!gb_.lead_divides(0, m)) out.push_back(m);
  return out;
}

}  // namespace gmdual

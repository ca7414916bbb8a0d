#include "gmdual/resolution.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "gmdual/error.hpp"
#include "gmdual/linalg.hpp"

namespace gmdual {

namespace {

/// Coordinates of homogeneous vectors in the monomial basis of one degree.
class TermIndex {
 public:
  SparseVec coords(const ModuleVector& v) {
    SparseVec out;
    for (std::size_t p = 0; p < v.size(); ++p)
      for (const auto& t : v[p].terms()) {
        auto [it, fresh] = index_.try_emplace({p, t.mono}, static_cast<int>(index_.size()));
        (void)fresh;
        out.emplace_back(it->second, t.coef);
      }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
  }

 private:
  std::map<std::pair<std::size_t, Monomial>, int> index_;
};

ModuleVector reduce_mod_ideal(const GradedRing& ring, ModuleVector v) {
  for (auto& e : v) e = ring.normal_form(e);
  return v;
}

bool is_unit(const Poly& f) { return f.size() == 1 && f.lead().mono.is_one(); }

}  // namespace

std::vector<ModuleVector> minimal_generators(const GradedRing& ring, std::span<const int> basis_degrees,
                                             std::vector<ModuleVector> vectors) {
  std::vector<std::pair<int, ModuleVector>> cand;
  for (auto& v : vectors) {
    v = reduce_mod_ideal(ring, std::move(v));
    if (is_zero(v)) continue;
    auto d = vector_degree(v, basis_degrees);
    if (!d) throw ComputationError(ErrorKind::InvalidInput, "non-homogeneous generator");
    cand.emplace_back(*d, std::move(v));
  }
  std::stable_sort(cand.begin(), cand.end(), [](const auto& a, const auto& b) { return a.first < b.first; });

  std::vector<std::pair<int, ModuleVector>> kept;
  std::size_t i = 0;
  while (i < cand.size()) {
    const int D = cand[i].first;
    TermIndex idx;
    Echelon ech;
    for (const auto& [dk, k] : kept)
      for (const auto& mu : ring.monomials_of_degree(D - dk)) {
        auto w = reduce_mod_ideal(ring, times(k, Poly::monomial(mu)));
        if (!is_zero(w)) ech.insert(idx.coords(w));
      }
    for (; i < cand.size() && cand[i].first == D; ++i)
      if (ech.insert(idx.coords(cand[i].second))) kept.push_back(std::move(cand[i]));
  }
  std::vector<ModuleVector> out;
  for (auto& [d, v] : kept) out.push_back(std::move(v));
  return out;
}

std::vector<ModuleVector> kernel(const FreeMap& f) {
  const auto& ring = *f.target.ring;
  auto tdeg = f.target.basis_degrees();
  auto sdeg = f.source.basis_degrees();
  auto syz = syzygies(f.columns, tdeg, sdeg, ring.weights(), ring.ideal_basis());
  return minimal_generators(ring, sdeg, std::move(syz));
}

PresentedModule minimal_presentation(const PresentedModule& m) {
  const auto& ring = m.ring();
  std::vector<int> twists = m.generator_twists();
  std::vector<ModuleVector> cols = m.relations();
  for (;;) {
    std::size_t jj = cols.size(), ii = 0;
    for (std::size_t j = 0; j < cols.size() && jj == cols.size(); ++j)
      for (std::size_t i = 0; i < cols[j].size(); ++i)
        if (is_unit(cols[j][i])) {
          jj = j;
          ii = i;
          break;
        }
    if (jj == cols.size()) break;
    const Scalar inv = 1 / cols[jj][ii].lead().coef;
    for (std::size_t l = 0; l < cols.size(); ++l) {
      if (l == jj || cols[l][ii].is_zero()) continue;
      Poly c = cols[l][ii].scaled(-inv);
      cols[l] = reduce_mod_ideal(*ring, add(cols[l], times(cols[jj], c)));
    }
    cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(jj));
    for (auto& c : cols) c.erase(c.begin() + static_cast<std::ptrdiff_t>(ii));
    twists.erase(twists.begin() + static_cast<std::ptrdiff_t>(ii));
  }
  std::vector<int> degs(twists.size());
  for (std::size_t i = 0; i < twists.size(); ++i) degs[i] = -twists[i];
  cols = minimal_generators(*ring, degs, std::move(cols));
  return PresentedModule::cokernel(ring, std::move(twists), std::move(cols));
}

std::vector<int> Resolution::basis_degrees(int i) const {
  const auto& t = twists[static_cast<std::size_t>(i)];
  std::vector<int> d(t.size());
  for (std::size_t k = 0; k < t.size(); ++k) d[k] = -t[k];
  return d;
}

Resolution free_resolution(const PresentedModule& m, int max_length) {
  if (max_length < 0) throw ComputationError(ErrorKind::InvalidInput, "negative resolution length");
  Resolution r;
  r.ring = m.ring();
  PresentedModule mm = minimal_presentation(m);
  r.twists.push_back(mm.generator_twists());
  std::vector<ModuleVector> next = mm.relations();
  std::vector<int> next_twists = mm.relation_twists();
  while (!next.empty()) {
    if (r.length() == max_length) {
      r.complete = false;
      return r;
    }
    r.maps.push_back(std::move(next));
    r.twists.push_back(std::move(next_twists));
    const int i = r.length();
    FreeMap f{r.free_module(i), r.free_module(i - 1), r.maps.back()};
    next = kernel(f);
    next_twists.clear();
    auto degs = r.basis_degrees(i);
    for (const auto& v : next) next_twists.push_back(-*vector_degree(v, degs));
  }
  r.complete = true;
  return r;
}

HilbertSeries hilbert_series(const PresentedModule& m) {
  PresentedModule p = m.over_ambient();
  const int n = static_cast<int>(p.ring()->nvars());
  Resolution r = free_resolution(p, n + 1);
  if (!r.complete) throw ComputationError(ErrorKind::TruncatedResolution, "resolution over the polynomial ring did not terminate");
  HilbertSeries h;
  h.weights = p.ring()->weights();
  for (int i = 0; i <= r.length(); ++i)
    for (int a : r.twists[static_cast<std::size_t>(i)]) h.numerator[-a] += (i % 2 == 0) ? 1 : -1;
  for (auto it = h.numerator.begin(); it != h.numerator.end();)
    it = it->second == 0 ? h.numerator.erase(it) : std::next(it);
  return h;
}

}  // namespace gmdual

#include "gmdual/complex.hpp"

#include <algorithm>

#include "gmdual/error.hpp"

namespace gmdual {

namespace {

std::vector<int> degrees_of(const std::vector<ModuleVector>& vs, std::span<const int> basis_degrees) {
  std::vector<int> d;
  for (const auto& v : vs) d.push_back(*vector_degree(v, basis_degrees));
  return d;
}

ModuleVector head(const ModuleVector& v, std::size_t k) { return ModuleVector(v.begin(), v.begin() + static_cast<long>(k)); }

}  // namespace

GradedComplex::GradedComplex(RingPtr ring, int lowest_spot, std::vector<PresentedModule> terms,
                             std::vector<std::vector<ModuleVector>> differentials)
    : ring_(std::move(ring)), lo_(lowest_spot), terms_(std::move(terms)), diffs_(std::move(differentials)) {
  if (!terms_.empty() && diffs_.size() + 1 != terms_.size())
    throw ComputationError(ErrorKind::InvalidInput, "complex needs one differential between consecutive terms");
  for (std::size_t i = 0; i < diffs_.size(); ++i) {
    if (diffs_[i].size() != terms_[i].num_generators())
      throw ComputationError(ErrorKind::InvalidInput, "differential arity does not match its source");
    auto td = terms_[i + 1].generator_degrees();
    auto sd = terms_[i].generator_degrees();
    for (std::size_t k = 0; k < diffs_[i].size(); ++k) {
      auto& col = diffs_[i][k];
      if (col.size() != td.size())
        throw ComputationError(ErrorKind::InvalidInput, "differential column does not match its target");
      for (auto& e : col) e = ring_->normal_form(e);
      auto d = vector_degree(col, td);
      if (!is_homogeneous(col, td) || (d && *d != sd[k]))
        throw ComputationError(ErrorKind::InvalidInput, "differential is not homogeneous of degree 0");
    }
  }
}

PresentedModule GradedComplex::term(int spot) const {
  if (spot < lo_ || spot > hi()) return PresentedModule::free(ring_, {});
  return terms_[static_cast<std::size_t>(spot - lo_)];
}

const std::vector<ModuleVector>& GradedComplex::differential(int spot) const {
  if (spot < lo_ || spot >= hi()) return none_;
  return diffs_[static_cast<std::size_t>(spot - lo_)];
}

bool GradedComplex::is_complex() const {
  for (int s = lo_; s + 2 <= hi(); ++s) {
    const auto& d0 = differential(s);
    const auto& d1 = differential(s + 1);
    PresentedModule target = term(s + 2);
    for (const auto& c : d0) {
      ModuleVector img = zero_vector(target.num_generators());
      for (std::size_t k = 0; k < c.size(); ++k)
        if (!c[k].is_zero()) img = add(img, times(d1[k], c[k]));
      if (!gmdual::is_zero(target.normal_form(img))) return false;
    }
  }
  return true;
}

PresentedModule GradedComplex::cohomology(int spot) const {
  const PresentedModule c = term(spot);
  const std::size_t r = c.num_generators();
  if (r == 0) return c;
  const auto cdeg = c.generator_degrees();
  const auto& weights = ring_->weights();
  const auto& igb = ring_->ideal_basis();

  // cycles: a with d(a) in the relations of the next term
  std::vector<ModuleVector> z;
  if (spot >= hi()) {
    for (std::size_t k = 0; k < r; ++k) {
      ModuleVector e = zero_vector(r);
      e[k] = ring_->constant(1);
      z.push_back(std::move(e));
    }
  } else {
    const PresentedModule next = term(spot + 1);
    const auto ndeg = next.generator_degrees();
    std::vector<ModuleVector> cols = differential(spot);
    std::vector<int> coldeg = cdeg;
    for (const auto& rel : next.relations()) cols.push_back(rel);
    auto rdeg = degrees_of(next.relations(), ndeg);
    coldeg.insert(coldeg.end(), rdeg.begin(), rdeg.end());
    for (const auto& s : syzygies(cols, ndeg, coldeg, weights, igb)) z.push_back(head(s, r));
  }
  z = minimal_generators(*ring_, cdeg, std::move(z));
  if (z.empty()) return PresentedModule::free(ring_, {});

  // relations among the cycles: boundaries plus the term's own relations
  std::vector<ModuleVector> cols = z;
  for (const auto& b : differential(spot - 1)) cols.push_back(b);
  for (const auto& rel : c.relations()) cols.push_back(rel);
  std::vector<ModuleVector> nonzero;
  for (auto& col : cols)
    if (!gmdual::is_zero(col)) nonzero.push_back(col);
  auto coldeg = degrees_of(nonzero, cdeg);
  std::vector<ModuleVector> rel;
  for (const auto& s : syzygies(nonzero, cdeg, coldeg, weights, igb)) rel.push_back(head(s, z.size()));
  std::vector<int> twists;
  for (int d : degrees_of(z, cdeg)) twists.push_back(-d);
  return minimal_presentation(PresentedModule::cokernel(ring_, std::move(twists), std::move(rel)));
}

KoszulPowerComplex koszul_power(const RingPtr& ring, int t) {
  if (t < 1) throw ComputationError(ErrorKind::InvalidInput, "koszul power needs t >= 1");
  const unsigned n = static_cast<unsigned>(ring->nvars());
  const auto& w = ring->weights();
  KoszulPowerComplex k;
  k.t = t;
  k.is_resolution = ring->is_polynomial_ring();
  k.subsets.resize(n + 1);
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<unsigned> s;
    for (unsigned i = 0; i < n; ++i)
      if (mask & (1u << i)) s.push_back(i);
    k.subsets[s.size()].push_back(s);
  }
  for (auto& group : k.subsets) std::sort(group.begin(), group.end());

  std::vector<PresentedModule> terms;
  std::vector<std::vector<ModuleVector>> diffs;
  // spot -p holds K_p; terms run from spot -n up to spot 0
  for (int p = static_cast<int>(n); p >= 0; --p) {
    std::vector<int> twists;
    for (const auto& s : k.subsets[static_cast<std::size_t>(p)]) {
      int ws = 0;
      for (unsigned i : s) ws += w[i];
      twists.push_back(-t * ws);
    }
    terms.push_back(PresentedModule::free(ring, twists));
    if (p == 0) break;
    const auto& targets = k.subsets[static_cast<std::size_t>(p - 1)];
    std::vector<ModuleVector> cols;
    for (const auto& s : k.subsets[static_cast<std::size_t>(p)]) {
      ModuleVector col = zero_vector(targets.size());
      for (std::size_t pos = 0; pos < s.size(); ++pos) {
        std::vector<unsigned> rest = s;
        rest.erase(rest.begin() + static_cast<long>(pos));
        auto it = std::lower_bound(targets.begin(), targets.end(), rest);
        std::vector<int> e(n, 0);
        e[s[pos]] = t;
        Poly term = Poly::monomial(ring->monomial(e), pos % 2 == 0 ? 1 : -1);
        col[static_cast<std::size_t>(it - targets.begin())] = term;
      }
      cols.push_back(std::move(col));
    }
    diffs.push_back(std::move(cols));
  }
  k.complex = GradedComplex(ring, -static_cast<int>(n), std::move(terms), std::move(diffs));
  return k;
}

GradedComplex hom_complex(const Resolution& f, const PresentedModule& n) {
  const RingPtr& ring = f.ring;
  const std::size_t r = n.num_generators();
  const auto& nt = n.generator_twists();
  std::vector<PresentedModule> terms;
  std::vector<std::vector<ModuleVector>> diffs;
  for (int i = 0; i <= f.length(); ++i) {
    // Hom(A(a), N) = N(-a); basis of the cover indexed by (j, s)
    const auto& fa = f.twists[static_cast<std::size_t>(i)];
    std::vector<int> twists;
    std::vector<ModuleVector> rels;
    for (std::size_t j = 0; j < fa.size(); ++j)
      for (std::size_t s = 0; s < r; ++s) twists.push_back(nt[s] - fa[j]);
    for (std::size_t j = 0; j < fa.size(); ++j)
      for (const auto& rel : n.relations()) {
        ModuleVector v = zero_vector(fa.size() * r);
        for (std::size_t s = 0; s < r; ++s) v[j * r + s] = rel[s];
        rels.push_back(std::move(v));
      }
    terms.push_back(PresentedModule::cokernel(ring, std::move(twists), std::move(rels)));
    if (i == f.length()) break;
    // precompose with F_{i+1} -> F_i: component k of the image of (j, s) is d_{jk} in slot s
    const auto& d = f.maps[static_cast<std::size_t>(i)];
    const std::size_t next = d.size();
    std::vector<ModuleVector> cols;
    for (std::size_t j = 0; j < fa.size(); ++j)
      for (std::size_t s = 0; s < r; ++s) {
        ModuleVector v = zero_vector(next * r);
        for (std::size_t k = 0; k < next; ++k) v[k * r + s] = d[k][j];
        cols.push_back(std::move(v));
      }
    diffs.push_back(std::move(cols));
  }
  return GradedComplex(ring, 0, std::move(terms), std::move(diffs));
}

std::vector<ExtResult> ext(const PresentedModule& m, const PresentedModule& n, int i_lo, int i_hi, Window w) {
  if (i_lo < 0 || i_hi < i_lo) throw ComputationError(ErrorKind::InvalidInput, "bad Ext index range");
  if (m.ring() != n.ring() && m.ring()->weights() != n.ring()->weights())
    throw ComputationError(ErrorKind::InvalidInput, "Ext arguments live over different rings");
  Resolution f = free_resolution(m, i_hi + 1);
  if (!f.complete && f.length() < i_hi + 1)
    throw ComputationError(ErrorKind::TruncatedResolution, "resolution too short for Ext^" + std::to_string(i_hi));
  GradedComplex h = hom_complex(f, n);
  std::vector<ExtResult> out;
  for (int i = i_lo; i <= i_hi; ++i) {
    ExtResult e;
    e.i = i;
    if (f.complete && i > f.length()) {
      e.module = PresentedModule::free(m.ring(), {});
    } else {
      // the last computed spot needs the next differential to see its cycles
      e.module = h.cohomology(i);
    }
    e.table = e.module.hilbert(w);
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace gmdual

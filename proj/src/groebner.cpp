#include "gmdual/groebner.hpp"

#include <algorithm>
#include <cassert>
#include <map>

namespace gmdual {

ModuleVector zero_vector(std::size_t rank) { return ModuleVector(rank); }

bool is_zero(const ModuleVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Poly& p) { return p.is_zero(); });
}

std::optional<std::size_t> lead_position(const ModuleVector& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) return i;
  return std::nullopt;
}

std::optional<int> vector_degree(const ModuleVector& v, std::span<const int> basis_degrees) {
  auto p = lead_position(v);
  if (!p) return std::nullopt;
  return v[*p].degree() + basis_degrees[*p];
}

bool is_homogeneous(const ModuleVector& v, std::span<const int> basis_degrees) {
  auto d = vector_degree(v, basis_degrees);
  if (!d) return true;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (const auto& t : v[i].terms())
      if (t.mono.degree() + basis_degrees[i] != *d) return false;
  return true;
}

ModuleVector times(const ModuleVector& v, const Poly& f) {
  ModuleVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] * f;
  return r;
}

ModuleVector add(const ModuleVector& a, const ModuleVector& b) {
  ModuleVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

void add_multiple(ModuleVector& v, const Scalar& c, const Monomial& m, const ModuleVector& g) {
  for (std::size_t i = 0; i < v.size(); ++i) v[i].add_multiple(c, m, g[i]);
}

const ModuleGB::Lead* ModuleGB::find_divisor(std::size_t pos, const Monomial& m) const {
  for (const auto& l : leads_)
    if (l.pos == pos && l.mono.divides(m)) return &l;
  return nullptr;
}

bool ModuleGB::lead_divides(std::size_t pos, const Monomial& mono) const { return find_divisor(pos, mono) != nullptr; }

ModuleVector ModuleGB::normal_form(ModuleVector v) const {
  ModuleVector rem(v.size());
  while (true) {
    auto p = lead_position(v);
    if (!p) break;
    const PolyTerm& t = v[*p].lead();
    const Lead* l = find_divisor(*p, t.mono);
    if (l) {
      std::size_t k = static_cast<std::size_t>(l - leads_.data());
      Scalar c = -t.coef / l->coef;
      Monomial q = t.mono / l->mono;
      add_multiple(v, c, q, elements_[k]);
    } else {
      rem[*p].push_back_term(t);
      v[*p].drop_lead();
    }
  }
  return rem;
}

void ModuleGB::add_element(ModuleVector v) {
  auto p = lead_position(v);
  assert(p);
  Scalar inv = 1 / v[*p].lead().coef;
  for (auto& e : v) e = e.scaled(inv);
  leads_.push_back({*p, v[*p].lead().mono, Scalar(1)});
  elements_.push_back(std::move(v));
}

namespace {

struct Pending {
  // Either an input generator (i == j == -1) or the S-pair of elements i < j.
  int i = -1;
  int j = -1;
  ModuleVector gen;
};

}  // namespace

ModuleGB ModuleGB::compute(std::vector<ModuleVector> generators, std::vector<int> basis_degrees,
                           std::vector<int> weights) {
  ModuleGB gb;
  gb.basis_degrees_ = std::move(basis_degrees);
  gb.weights_ = std::move(weights);

  std::multimap<int, Pending> queue;
  for (auto& g : generators) {
    auto d = vector_degree(g, gb.basis_degrees_);
    if (!d) continue;
    queue.emplace(*d, Pending{-1, -1, std::move(g)});
  }

  auto s_vector = [&](int i, int j) {
    const Lead& a = gb.leads_[i];
    const Lead& b = gb.leads_[j];
    Monomial l = a.mono.lcm(b.mono, gb.weights_);
    ModuleVector s(gb.rank());
    add_multiple(s, Scalar(1), l / a.mono, gb.elements_[i]);
    add_multiple(s, Scalar(-1), l / b.mono, gb.elements_[j]);
    return s;
  };

  while (!queue.empty()) {
    auto node = queue.extract(queue.begin());
    Pending& item = node.mapped();
    ModuleVector v = item.i < 0 ? std::move(item.gen) : s_vector(item.i, item.j);
    v = gb.normal_form(std::move(v));
    if (gmdual::is_zero(v)) continue;
    gb.add_element(std::move(v));
    const int h = static_cast<int>(gb.elements_.size()) - 1;
    const Lead& lh = gb.leads_[h];

    // New pairs with h; drop those whose lcm is a proper multiple of another new pair's lcm.
    std::vector<std::pair<int, Monomial>> cand;
    for (int k = 0; k < h; ++k)
      if (gb.leads_[k].pos == lh.pos) cand.emplace_back(k, gb.leads_[k].mono.lcm(lh.mono, gb.weights_));
    for (std::size_t a = 0; a < cand.size(); ++a) {
      bool redundant = false;
      for (std::size_t b = 0; b < cand.size() && !redundant; ++b) {
        if (a == b || !cand[b].second.divides(cand[a].second)) continue;
        redundant = !(cand[b].second == cand[a].second) || b < a;
      }
      if (redundant) continue;
      int deg = cand[a].second.degree() + gb.basis_degrees_[lh.pos];
      queue.emplace(deg, Pending{cand[a].first, h, {}});
    }
  }

  // Interreduce: keep minimal leads, then tail-reduce.
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < gb.elements_.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < gb.elements_.size() && !redundant; ++j) {
      if (i == j || gb.leads_[j].pos != gb.leads_[i].pos) continue;
      if (gb.leads_[j].mono.divides(gb.leads_[i].mono))
        redundant = !(gb.leads_[j].mono == gb.leads_[i].mono) || j < i;
    }
    if (!redundant) keep.push_back(i);
  }
  ModuleGB reduced;
  reduced.basis_degrees_ = gb.basis_degrees_;
  reduced.weights_ = gb.weights_;
  for (std::size_t i : keep) reduced.add_element(gb.elements_[i]);
  for (std::size_t i = 0; i < reduced.elements_.size(); ++i) {
    ModuleVector v = reduced.elements_[i];
    std::size_t p = reduced.leads_[i].pos;
    PolyTerm lead = v[p].lead();
    v[p].drop_lead();
    // Tail terms are reduced against the whole basis; none of them is divisible by this lead.
    ModuleVector tail = reduced.normal_form(std::move(v));
    Poly head = Poly::monomial(lead.mono, lead.coef);
    tail[p] = head + tail[p];
    reduced.elements_[i] = std::move(tail);
  }
  // Deterministic order: by position, then descending lead monomial.
  std::vector<std::size_t> order(reduced.elements_.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (reduced.leads_[a].pos != reduced.leads_[b].pos) return reduced.leads_[a].pos < reduced.leads_[b].pos;
    return reduced.leads_[a].mono > reduced.leads_[b].mono;
  });
  ModuleGB out;
  out.basis_degrees_ = reduced.basis_degrees_;
  out.weights_ = reduced.weights_;
  for (std::size_t i : order) out.add_element(reduced.elements_[i]);
  return out;
}

std::vector<ModuleVector> syzygies(std::span<const ModuleVector> columns, std::span<const int> target_degrees,
                                   std::span<const int> column_degrees, std::span<const int> weights,
                                   std::span<const Poly> ideal_gb) {
  const std::size_t r0 = target_degrees.size();
  const std::size_t m = columns.size();
  std::vector<int> degs(target_degrees.begin(), target_degrees.end());
  degs.insert(degs.end(), column_degrees.begin(), column_degrees.end());

  const std::size_t nvars = weights.size();
  std::vector<ModuleVector> gens;
  for (std::size_t j = 0; j < m; ++j) {
    ModuleVector v(r0 + m);
    for (std::size_t i = 0; i < r0; ++i) v[i] = columns[j][i];
    v[r0 + j] = Poly::constant(nvars, 1);
    gens.push_back(std::move(v));
  }
  for (const auto& g : ideal_gb)
    for (std::size_t i = 0; i < r0; ++i) {
      ModuleVector v(r0 + m);
      v[i] = g;
      gens.push_back(std::move(v));
    }

  ModuleGB gb = ModuleGB::compute(std::move(gens), degs, std::vector<int>(weights.begin(), weights.end()));
  ModuleGB ideal;
  if (!ideal_gb.empty()) {
    std::vector<ModuleVector> ig;
    for (const auto& g : ideal_gb) ig.push_back(ModuleVector{g});
    ideal = ModuleGB::compute(std::move(ig), {0}, std::vector<int>(weights.begin(), weights.end()));
  }

  std::vector<ModuleVector> out;
  for (const auto& e : gb.elements()) {
    bool top_zero = true;
    for (std::size_t i = 0; i < r0 && top_zero; ++i) top_zero = e[i].is_zero();
    if (!top_zero) continue;
    ModuleVector s(e.begin() + static_cast<long>(r0), e.end());
    if (!ideal_gb.empty())
      for (auto& p : s) p = ideal.normal_form(ModuleVector{p})[0];
    if (!gmdual::is_zero(s)) out.push_back(std::move(s));
  }
  return out;
}

}  // namespace gmdual

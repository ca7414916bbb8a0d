#include "gmdual/local_cohomology.hpp"

#include <algorithm>
#include <exception>
#include <mutex>

#include "gmdual/complex.hpp"
#include "gmdual/error.hpp"
#include "gmdual/pieces.hpp"
#include "gmdual/resolution.hpp"

namespace gmdual {

namespace {

/// Cochains Hom(K(x^t), M) in one degree: C^q_d = (+)_{|S|=q} M_{d + t w_S}.
class KoszulCochains {
 public:
  explicit KoszulCochains(const GradedPieces& m) : m_(m), w_(m.module().ring()->weights()), n_(w_.size()) {
    subsets_.resize(n_ + 1);
    for (unsigned mask = 0; mask < (1u << n_); ++mask) {
      std::vector<unsigned> s;
      for (unsigned i = 0; i < n_; ++i)
        if (mask & (1u << i)) s.push_back(i);
      subsets_[s.size()].push_back(s);
    }
    for (auto& g : subsets_) std::sort(g.begin(), g.end());
  }

  int nvars() const { return static_cast<int>(n_); }

  int dim(int q, int d, int t) const {
    if (q < 0 || q > nvars()) return 0;
    int total = 0;
    for (const auto& s : subsets_[static_cast<std::size_t>(q)]) total += m_.dim(d + t * weight(s));
    return total;
  }

  /// C^q -> C^{q+1}; component S -> S+j is (-1)^{#{i in S, i < j}} x_j^s.
  LinearMap diff(int q, int d, int t) const {
    LinearMap f(dim(q + 1, d, t), dim(q, d, t));
    if (q < 0 || q >= nvars()) return f;
    const auto& src = subsets_[static_cast<std::size_t>(q)];
    const auto& dst = subsets_[static_cast<std::size_t>(q + 1)];
    auto offs = offsets(q + 1, d, t);
    int o_src = 0;
    for (const auto& s : src) {
      const int ds = d + t * weight(s);
      const int ns = m_.dim(ds);
      for (unsigned j = 0; j < n_; ++j) {
        if (std::find(s.begin(), s.end(), j) != s.end()) continue;
        std::vector<unsigned> tset = s;
        tset.insert(std::upper_bound(tset.begin(), tset.end(), j), j);
        const auto k = static_cast<std::size_t>(std::lower_bound(dst.begin(), dst.end(), tset) - dst.begin());
        const int below = static_cast<int>(std::count_if(s.begin(), s.end(), [j](unsigned i) { return i < j; }));
        const Scalar sign = below % 2 == 0 ? 1 : -1;
        const LinearMap& g = m_.multiply(power(j, t), ds);
        for (int c = 0; c < ns; ++c)
          for (const auto& [i, v] : g.columns[static_cast<std::size_t>(c)])
            f.columns[static_cast<std::size_t>(o_src + c)].emplace_back(offs[k] + i, sign * v);
      }
      o_src += ns;
    }
    for (auto& c : f.columns) std::sort(c.begin(), c.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return f;
  }

  /// Stage change t -> u: component S is multiplied by x_S^{u-t}.
  LinearMap transition(int q, int d, int t, int u) const {
    return blockwise(q, d, t, u, [&](const std::vector<unsigned>& s) {
      std::vector<int> e(n_, 0);
      for (unsigned i : s) e[i] = u - t;
      return m_.module().ring()->monomial(e);
    });
  }

  /// x_j acting componentwise, from degree d to d + w_j at a fixed stage.
  LinearMap act(int q, int d, int t, std::size_t j) const {
    LinearMap f(dim(q, d + w_[j], t), dim(q, d, t));
    if (q < 0 || q > nvars()) return f;
    auto offs = offsets(q, d + w_[j], t);
    int o_src = 0;
    std::size_t k = 0;
    for (const auto& s : subsets_[static_cast<std::size_t>(q)]) {
      const int ds = d + t * weight(s);
      const LinearMap& g = m_.variable(j, ds);
      for (int c = 0; c < g.cols(); ++c)
        for (const auto& [i, v] : g.columns[static_cast<std::size_t>(c)])
          f.columns[static_cast<std::size_t>(o_src + c)].emplace_back(offs[k] + i, v);
      o_src += g.cols();
      ++k;
    }
    return f;
  }

  /// The x_S^s-torsion of each component, as vectors of C^q.
  std::vector<SparseVec> torsion(int q, int d, int s) const {
    std::vector<SparseVec> out;
    if (q < 0 || q > nvars()) return out;
    int off = 0;
    for (const auto& set : subsets_[static_cast<std::size_t>(q)]) {
      const int ds = d + s * weight(set);
      if (!set.empty()) {
        std::vector<int> e(n_, 0);
        for (unsigned i : set) e[i] = s;
        const LinearMap& g = m_.multiply(m_.module().ring()->monomial(e), ds);
        for (auto& v : kernel_basis(g.columns)) {
          for (auto& [i, c] : v) i += off;
          out.push_back(std::move(v));
        }
      }
      off += m_.dim(ds);
    }
    return out;
  }

 private:
  const GradedPieces& m_;
  std::vector<int> w_;
  std::size_t n_;
  std::vector<std::vector<std::vector<unsigned>>> subsets_;

  int weight(const std::vector<unsigned>& s) const {
    int a = 0;
    for (unsigned i : s) a += w_[i];
    return a;
  }

  Monomial power(unsigned j, int t) const {
    std::vector<int> e(n_, 0);
    e[j] = t;
    return m_.module().ring()->monomial(e);
  }

  std::vector<int> offsets(int q, int d, int t) const {
    std::vector<int> o;
    int acc = 0;
    for (const auto& s : subsets_[static_cast<std::size_t>(q)]) {
      o.push_back(acc);
      acc += m_.dim(d + t * weight(s));
    }
    return o;
  }

  template <class F>
  LinearMap blockwise(int q, int d, int t, int u, F&& mono_of) const {
    LinearMap f(dim(q, d, u), dim(q, d, t));
    if (q < 0 || q > nvars()) return f;
    auto offs = offsets(q, d, u);
    int o_src = 0;
    std::size_t k = 0;
    for (const auto& s : subsets_[static_cast<std::size_t>(q)]) {
      const LinearMap& g = m_.multiply(mono_of(s), d + t * weight(s));
      for (int c = 0; c < g.cols(); ++c)
        for (const auto& [i, v] : g.columns[static_cast<std::size_t>(c)])
          f.columns[static_cast<std::size_t>(o_src + c)].emplace_back(offs[k] + i, v);
      o_src += g.cols();
      ++k;
    }
    return f;
  }
};

struct Stage {
  int t = 0;
  Subquotient h;
};

Stage cohomology_at(const KoszulCochains& k, int q, int d, int t) {
  std::vector<SparseVec> z;
  if (q == k.nvars()) {
    for (int i = 0; i < k.dim(q, d, t); ++i) z.push_back(unit_vector(i));
  } else {
    z = kernel_basis(k.diff(q, d, t).columns);
  }
  auto b = k.diff(q - 1, d, t).columns;
  return Stage{t, Subquotient(z, b)};
}

/// Largest generator degree in a minimal resolution of M over the ambient ring.
int resolution_top_degree(const PresentedModule& m) {
  Resolution r = free_resolution(m.over_ambient(), static_cast<int>(m.ring()->nvars()) + 1);
  int g = m.initial_degree();
  for (int i = 0; i <= r.length(); ++i)
    for (int a : r.twists[static_cast<std::size_t>(i)]) g = std::max(g, -a);
  return g;
}

/// First stage at which the Koszul cochains of every free term of the
/// resolution already see all of H^n_m in degree d. From there on the stage-t
/// cohomology maps isomorphically onto the colimit.
int stage_floor(const RingPtr& ring, int top, int d) {
  const auto& w = ring->weights();
  const int sw = ring->weight_sum();
  int t0 = 1;
  for (int wi : w) {
    const int num = top - d - sw + wi;
    if (num > 0) t0 = std::max(t0, (num + wi - 1) / wi);
  }
  return t0;
}

/// Runs body(k) for k in [0, count), collecting the first exception.
template <class F>
void for_each_index(int count, Execution mode, F&& body) {
  std::exception_ptr err;
  std::mutex mu;
  if (mode == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (int k = 0; k < count; ++k) {
      try {
        body(k);
      } catch (...) {
        std::lock_guard lock(mu);
        if (!err) err = std::current_exception();
      }
    }
  } else {
    for (int k = 0; k < count; ++k) body(k);
  }
  if (err) std::rethrow_exception(err);
}

void check_index(const PresentedModule& m, int i) {
  if (i < 0) throw ComputationError(ErrorKind::InvalidInput, "local cohomology index must be >= 0");
  if (m.ring()->nvars() >= 20) throw ComputationError(ErrorKind::InvalidInput, "too many variables");
}

}  // namespace

ArtinianApprox local_cohomology(const PresentedModule& m, int i, Window w, int t_max, Execution mode) {
  check_index(m, i);
  const auto& weights = m.ring()->weights();
  ArtinianApprox out(weights, w);
  out.certificate.route = "koszul-ext-colimit";
  out.certificate.t_max = t_max;
  if (i > static_cast<int>(weights.size()) || m.is_zero()) return out;

  GradedPieces pieces(m);
  KoszulCochains k(pieces);
  const int top = resolution_top_degree(m);
  const int nd = w.size();
  std::vector<Stage> stages(static_cast<std::size_t>(nd));

  for_each_index(nd, mode, [&](int idx) {
    const int d = w.lo + idx;
    const int t0 = stage_floor(m.ring(), top, d);
    if (t0 >= t_max)
      throw ComputationError(ErrorKind::NotStabilized, "degree " + std::to_string(d) + " needs a stage beyond t_max " +
                                                           std::to_string(t_max));
    Stage cur = cohomology_at(k, i, d, t0);
    for (int t = t0; t < t_max; ++t) {
      Stage next = cohomology_at(k, i, d, t + 1);
      if (cur.h.dim() == next.h.dim()) {
        LinearMap tr = k.transition(i, d, t, t + 1);
        std::vector<SparseVec> images;
        for (const auto& r : cur.h.representatives()) images.push_back(next.h.coordinates(tr.apply(r)));
        if (rank_serial(images) == cur.h.dim()) {
          stages[static_cast<std::size_t>(idx)] = std::move(cur);
          return;
        }
      }
      cur = std::move(next);
    }
    throw ComputationError(ErrorKind::NotStabilized, "H^" + std::to_string(i) + " in degree " + std::to_string(d) +
                                                         ": stages " + std::to_string(t_max - 1) + ", " +
                                                         std::to_string(t_max) + " still differ");
  });

  for (int idx = 0; idx < nd; ++idx) {
    out.set_dim(w.lo + idx, stages[static_cast<std::size_t>(idx)].h.dim());
    out.certificate.stage[w.lo + idx] = stages[static_cast<std::size_t>(idx)].t;
  }

  // action: move both ends to a common stage, where the transitions are isomorphisms
  struct Job {
    int d;
    std::size_t j;
  };
  std::vector<Job> jobs;
  for (int d = w.lo; d <= w.hi; ++d)
    for (std::size_t j = 0; j < weights.size(); ++j)
      if (d + weights[j] <= w.hi && out.dim(d) > 0 && out.dim(d + weights[j]) > 0) jobs.push_back({d, j});
  std::vector<LinearMap> acts(jobs.size());
  for_each_index(static_cast<int>(jobs.size()), mode, [&](int idx) {
    const auto [d, j] = jobs[static_cast<std::size_t>(idx)];
    const int e = d + weights[j];
    const Stage& sd = stages[static_cast<std::size_t>(d - w.lo)];
    const Stage& se = stages[static_cast<std::size_t>(e - w.lo)];
    const int u = std::max(sd.t, se.t);
    LinearMap to_u = k.transition(i, d, sd.t, u);
    LinearMap xj = k.act(i, d, u, j);
    LinearMap target_to_u = k.transition(i, e, se.t, u);
    std::vector<SparseVec> reps;
    for (const auto& r : se.h.representatives()) reps.push_back(target_to_u.apply(r));
    Subquotient target(reps, k.diff(i - 1, e, u).columns);
    if (target.dim() != se.h.dim())
      throw ComputationError(ErrorKind::NotStabilized, "transition not injective in degree " + std::to_string(e));
    LinearMap f(se.h.dim(), sd.h.dim());
    for (int c = 0; c < sd.h.dim(); ++c) {
      SparseVec img = xj.apply(to_u.apply(sd.h.representatives()[static_cast<std::size_t>(c)]));
      try {
        f.columns[static_cast<std::size_t>(c)] = target.coordinates(img);
      } catch (const std::logic_error&) {
        throw ComputationError(ErrorKind::NotStabilized, "action leaves the stabilized piece in degree " + std::to_string(e));
      }
    }
    acts[static_cast<std::size_t>(idx)] = std::move(f);
  });
  for (std::size_t idx = 0; idx < jobs.size(); ++idx) out.set_action(jobs[idx].j, jobs[idx].d, std::move(acts[idx]));
  return out;
}

HilbertTable cech_local_cohomology(const PresentedModule& m, int i, Window w, int s_max, Execution mode) {
  check_index(m, i);
  HilbertTable table(w);
  const int n = static_cast<int>(m.ring()->nvars());
  if (i > n || m.is_zero()) return table;
  GradedPieces pieces(m);
  KoszulCochains c(pieces);
  const bool torsion_free = m.relations().empty() && m.ring()->is_polynomial_ring();
  const int top = resolution_top_degree(m);
  auto rank_of = [&](std::vector<SparseVec> v) { return mode == Execution::Parallel ? rank_parallel(std::move(v)) : rank_serial(std::move(v)); };

  auto level_dim = [&](int d, int s) {
    std::vector<SparseVec> k_here, k_next;
    if (!torsion_free) {
      k_here = c.torsion(i, d, s);
      k_next = c.torsion(i + 1, d, s);
    }
    const int dim_next_k = rank_of(k_next);
    auto out = c.diff(i, d, s).columns;
    out.insert(out.end(), k_next.begin(), k_next.end());
    const int dim_z = c.dim(i, d, s) - (rank_of(std::move(out)) - dim_next_k);
    auto in = c.diff(i - 1, d, s).columns;
    in.insert(in.end(), k_here.begin(), k_here.end());
    return dim_z - rank_of(std::move(in));
  };

  const int nd = w.size();
  for (int idx = 0; idx < nd; ++idx) {
    const int d = w.lo + idx;
    const int s0 = stage_floor(m.ring(), top, d);
    bool done = false;
    int prev = s0 < s_max ? level_dim(d, s0) : 0;
    for (int s = s0; s < s_max && !done; ++s) {
      const int next = level_dim(d, s + 1);
      if (next == prev) {
        table[d] = next;
        done = true;
      }
      prev = next;
    }
    if (!done)
      throw ComputationError(ErrorKind::NotStabilized, "Cech H^" + std::to_string(i) + " in degree " + std::to_string(d) +
                                                           " did not settle by level " + std::to_string(s_max));
  }
  return table;
}

GammaResult gamma_truncation(const PresentedModule& f, Window w, int t_max) {
  GammaResult g;
  g.euler = HilbertTable(w);
  const int n = static_cast<int>(f.ring()->nvars());
  for (int i = 0; i <= n; ++i) {
    g.spots.push_back(local_cohomology(f, i, w, t_max));
    g.euler = (i % 2 == 0) ? g.euler + g.spots.back().table() : g.euler - g.spots.back().table();
  }
  return g;
}

PresentedModule residue_field(const RingPtr& ring) {
  std::vector<Poly> vars;
  for (std::size_t j = 0; j < ring->nvars(); ++j) vars.push_back(ring->variable_poly(j));
  return PresentedModule::quotient(ring, std::move(vars));
}

DepthResult depth(const PresentedModule& m, int max_i) {
  if (m.is_zero()) throw ComputationError(ErrorKind::ZeroModule, "depth of the zero module");
  DepthResult r;
  r.max_i = max_i;
  PresentedModule k = residue_field(m.ring());
  for (int i = 0; i <= max_i; ++i) {
    auto e = ext(k, m, i, i, Window(0, 0));
    if (!e.front().module.is_zero()) {
      r.depth = i;
      return r;
    }
  }
  return r;
}

}  // namespace gmdual

#include "gmdual/artinian.hpp"

#include <algorithm>

#include "gmdual/error.hpp"

namespace gmdual {

namespace {

LinearMap zero_map(int rows, int cols) { return LinearMap(rows, cols); }

LinearMap transpose(const LinearMap& f) {
  LinearMap t(f.cols(), f.rows);
  for (int j = 0; j < f.cols(); ++j)
    for (const auto& [i, c] : f.columns[static_cast<std::size_t>(j)]) t.columns[static_cast<std::size_t>(i)].emplace_back(j, c);
  return t;
}

int map_rank(const LinearMap& f) { return rank_serial(f.columns); }

}  // namespace

ArtinianApprox::ArtinianApprox(std::vector<int> weights, Window w) : weights_(std::move(weights)), table_(w) {}

void ArtinianApprox::set_action(std::size_t j, int d, LinearMap m) {
  if (m.cols() != dim(d) || m.rows != dim(d + weights_[j]))
    throw std::logic_error("action matrix has the wrong shape");
  action_[{j, d}] = std::move(m);
}

LinearMap ArtinianApprox::action(std::size_t j, int d) const {
  auto it = action_.find({j, d});
  if (it != action_.end()) return it->second;
  return zero_map(dim(d + weights_[j]), dim(d));
}

LinearMap ArtinianApprox::action(const Monomial& m, int d) const {
  LinearMap f = LinearMap::from_matrix(Matrix::identity(dim(d)));
  int e = d;
  for (std::size_t j = 0; j < m.size(); ++j)
    for (int k = 0; k < m[j]; ++k) {
      f = action(j, e).after(f);
      e += weights_[j];
    }
  return f;
}

std::optional<int> ArtinianApprox::top_degree() const {
  for (int d = window().hi; d >= window().lo; --d)
    if (dim(d) > 0) return d;
  return std::nullopt;
}

bool ArtinianApprox::actions_commute() const {
  const Window& w = window();
  for (int d = w.lo; d <= w.hi; ++d)
    for (std::size_t i = 0; i < weights_.size(); ++i)
      for (std::size_t j = i + 1; j < weights_.size(); ++j) {
        if (d + weights_[i] + weights_[j] > w.hi) continue;
        auto a = action(j, d + weights_[i]).after(action(i, d));
        auto b = action(i, d + weights_[j]).after(action(j, d));
        for (int c = 0; c < a.cols(); ++c)
          if (!axpy(a.columns[static_cast<std::size_t>(c)], Scalar(-1), b.columns[static_cast<std::size_t>(c)]).empty())
            return false;
      }
  return true;
}

bool ArtinianApprox::satisfies_relations(const GradedRing& ring) const {
  const Window& w = window();
  for (const auto& f : ring.ideal_generators()) {
    if (f.is_zero()) continue;
    for (int d = w.lo; d + f.degree() <= w.hi; ++d) {
      LinearMap sum(dim(d + f.degree()), dim(d));
      for (const auto& t : f.terms()) {
        LinearMap g = action(t.mono, d);
        for (int c = 0; c < sum.cols(); ++c)
          sum.columns[static_cast<std::size_t>(c)] =
              axpy(sum.columns[static_cast<std::size_t>(c)], t.coef, g.columns[static_cast<std::size_t>(c)]);
      }
      if (!sum.is_zero()) return false;
    }
  }
  return true;
}

ArtinianApprox ArtinianApprox::restricted(Window w) const {
  if (!window().covers(w)) throw ComputationError(ErrorKind::WindowInsufficient, "restriction outside the window");
  ArtinianApprox r(weights_, w);
  r.certificate = certificate;
  for (int d = w.lo; d <= w.hi; ++d) r.set_dim(d, dim(d));
  for (const auto& [key, m] : action_)
    if (w.contains(key.second) && w.contains(key.second + weights_[key.first])) r.action_[key] = m;
  return r;
}

ArtinianApprox ArtinianApprox::twisted(int a) const {
  ArtinianApprox r(weights_, Window(window().lo - a, window().hi - a));
  r.certificate = certificate;
  r.certificate.stage.clear();
  for (const auto& [d, s] : certificate.stage) r.certificate.stage[d - a] = s;
  for (int d = r.window().lo; d <= r.window().hi; ++d) r.set_dim(d, dim(d + a));
  for (const auto& [key, m] : action_) r.action_[{key.first, key.second - a}] = m;
  return r;
}

ArtinianApprox ArtinianApprox::from_module(const GradedPieces& m, Window w) {
  const auto& weights = m.module().ring()->weights();
  ArtinianApprox x(weights, w);
  x.certificate.route = "finite pieces";
  for (int d = w.lo; d <= w.hi; ++d) x.set_dim(d, m.dim(d));
  for (int d = w.lo; d <= w.hi; ++d)
    for (std::size_t j = 0; j < weights.size(); ++j)
      if (d + weights[j] <= w.hi) x.set_action(j, d, m.variable(j, d));
  return x;
}

ArtinianApprox matlis_dual(const ArtinianApprox& x, Window w) {
  if (!x.window().covers(w.reflected()))
    throw ComputationError(ErrorKind::WindowInsufficient, "dual needs pieces on the reflected window");
  ArtinianApprox y(x.weights(), w);
  y.certificate = x.certificate;
  y.certificate.route = "dual of " + x.certificate.route;
  y.certificate.stage.clear();
  for (const auto& [d, s] : x.certificate.stage) y.certificate.stage[-d] = s;
  for (int d = w.lo; d <= w.hi; ++d) y.set_dim(d, x.dim(-d));
  for (int d = w.lo; d <= w.hi; ++d)
    for (std::size_t j = 0; j < x.weights().size(); ++j) {
      const int e = d + x.weights()[j];
      if (e > w.hi) continue;
      y.set_action(j, d, transpose(x.action(j, -e)));
    }
  return y;
}

HilbertTable socle(const ArtinianApprox& x) {
  HilbertTable t(x.window());
  for (int d = x.window().lo; d <= x.window().hi; ++d) {
    if (x.dim(d) == 0) continue;
    std::vector<SparseVec> rows;
    for (std::size_t j = 0; j < x.weights().size(); ++j) {
      auto tr = transpose(x.action(j, d));
      for (auto& r : tr.columns) rows.push_back(std::move(r));
    }
    t[d] = x.dim(d) - rank_serial(std::move(rows));
  }
  return t;
}

HilbertTable socle(const GradedPieces& m, Window w) {
  HilbertTable t(w);
  const auto& weights = m.module().ring()->weights();
  for (int d = w.lo; d <= w.hi; ++d) {
    if (m.dim(d) == 0) continue;
    std::vector<SparseVec> cols(static_cast<std::size_t>(m.dim(d)));
    int offset = 0;
    for (std::size_t j = 0; j < weights.size(); ++j) {
      const LinearMap& f = m.variable(j, d);
      for (int c = 0; c < f.cols(); ++c)
        for (const auto& [i, v] : f.columns[static_cast<std::size_t>(c)])
          cols[static_cast<std::size_t>(c)].emplace_back(offset + i, v);
      offset += f.rows;
    }
    t[d] = static_cast<long long>(kernel_basis(cols).size());
  }
  return t;
}

long long hom_dimension(const ArtinianApprox& x, const ArtinianApprox& y, int e) {
  using Forms = std::vector<SparseVec>;  // one linear form in the parameters per coordinate
  std::map<int, std::vector<Forms>> phi;  // phi[d][c] = image of basis vector c of X_d
  int nparams = 0;
  std::vector<SparseVec> constraints;
  const auto& w = x.weights();
  const Window& xw = x.window();
  const Window& yw = y.window();

  for (int d = xw.hi; d >= xw.lo; --d) {
    const int nx = x.dim(d);
    if (nx == 0) continue;
    const int f = d + e;
    if (f > yw.hi) continue;  // target piece is zero
    if (f < yw.lo) break;
    const int ny = y.dim(f);

    // stacked system Ystack v = R_c
    std::vector<LinearMap> yj;
    int m = 0;
    for (std::size_t j = 0; j < w.size(); ++j) {
      yj.push_back(y.action(j, f));
      m += yj.back().rows;
    }
    Matrix aug(m, ny + m);
    {
      int r0 = 0;
      for (const auto& a : yj) {
        for (int c = 0; c < a.cols(); ++c)
          for (const auto& [i, v] : a.columns[static_cast<std::size_t>(c)]) aug(r0 + i, c) = v;
        r0 += a.rows;
      }
      for (int i = 0; i < m; ++i) aug(i, ny + i) = 1;
    }
    // reduced row echelon form on the first ny columns
    std::vector<int> pivot_col;
    int prow = 0;
    for (int c = 0; c < ny && prow < m; ++c) {
      int r = prow;
      while (r < m && is_zero(aug(r, c))) ++r;
      if (r == m) continue;
      for (int k = 0; k < ny + m; ++k) std::swap(aug(r, k), aug(prow, k));
      Scalar inv = 1 / aug(prow, c);
      for (int k = 0; k < ny + m; ++k) aug(prow, k) *= inv;
      for (int rr = 0; rr < m; ++rr) {
        if (rr == prow || is_zero(aug(rr, c))) continue;
        Scalar s = aug(rr, c);
        for (int k = 0; k < ny + m; ++k) aug(rr, k) -= s * aug(prow, k);
      }
      pivot_col.push_back(c);
      ++prow;
    }
    std::vector<bool> is_pivot(static_cast<std::size_t>(ny), false);
    for (int c : pivot_col) is_pivot[static_cast<std::size_t>(c)] = true;

    std::vector<Forms> cols(static_cast<std::size_t>(nx));
    for (int c = 0; c < nx; ++c) {
      // right-hand side: phi_{d+w_j}(x_j x_c), stacked over j
      Forms rhs(static_cast<std::size_t>(m));
      int r0 = 0;
      for (std::size_t j = 0; j < w.size(); ++j) {
        const int dj = d + w[j];
        auto it = phi.find(dj);
        if (it != phi.end()) {
          SparseVec img = x.action(j, d).columns[static_cast<std::size_t>(c)];
          for (const auto& [cc, a] : img)
            for (int i = 0; i < yj[j].rows; ++i)
              rhs[static_cast<std::size_t>(r0 + i)] =
                  axpy(rhs[static_cast<std::size_t>(r0 + i)], a, it->second[static_cast<std::size_t>(cc)][static_cast<std::size_t>(i)]);
        }
        r0 += yj[j].rows;
      }
      // transformed right-hand side
      Forms tr(static_cast<std::size_t>(m));
      for (int i = 0; i < m; ++i)
        for (int k = 0; k < m; ++k)
          if (!is_zero(aug(i, ny + k))) tr[static_cast<std::size_t>(i)] = axpy(tr[static_cast<std::size_t>(i)], aug(i, ny + k), rhs[static_cast<std::size_t>(k)]);
      for (int i = prow; i < m; ++i)
        if (!tr[static_cast<std::size_t>(i)].empty()) constraints.push_back(tr[static_cast<std::size_t>(i)]);
      Forms v(static_cast<std::size_t>(ny));
      for (int c2 = 0; c2 < ny; ++c2)
        if (!is_pivot[static_cast<std::size_t>(c2)]) v[static_cast<std::size_t>(c2)] = unit_vector(nparams++);
      for (int i = 0; i < prow; ++i) {
        SparseVec val = tr[static_cast<std::size_t>(i)];
        for (int c2 = 0; c2 < ny; ++c2)
          if (!is_pivot[static_cast<std::size_t>(c2)] && !is_zero(aug(i, c2)))
            val = axpy(val, -aug(i, c2), v[static_cast<std::size_t>(c2)]);
        v[static_cast<std::size_t>(pivot_col[static_cast<std::size_t>(i)])] = std::move(val);
      }
      cols[static_cast<std::size_t>(c)] = std::move(v);
    }
    phi[d] = std::move(cols);
  }
  return nparams - rank_serial(std::move(constraints));
}

HilbertTable hom_table(const ArtinianApprox& x, const ArtinianApprox& y, Window w) {
  HilbertTable t(w);
  for (int e = w.lo; e <= w.hi; ++e) t[e] = hom_dimension(x, y, e);
  return t;
}

ArtinianApprox cohomology_approx(std::vector<int> weights, Window w, const std::function<PieceComplex(int)>& piece,
                                 const std::function<LinearMap(std::size_t, int)>& act) {
  ArtinianApprox out(weights, w);
  std::map<int, Subquotient> sq;
  for (int d = w.lo; d <= w.hi; ++d) {
    PieceComplex pc = piece(d);
    auto z = kernel_basis(pc.out.columns);
    if (pc.out.cols() == 0)
      for (int k = 0; k < pc.dim; ++k) z.push_back(unit_vector(k));
    Subquotient s(z, pc.in.columns);
    out.set_dim(d, s.dim());
    sq.emplace(d, std::move(s));
  }
  for (int d = w.lo; d <= w.hi; ++d)
    for (std::size_t j = 0; j < weights.size(); ++j) {
      const int e = d + weights[j];
      if (e > w.hi) continue;
      const auto& src = sq.at(d);
      LinearMap m(out.dim(e), out.dim(d));
      if (src.dim() > 0 && out.dim(e) > 0) {
        LinearMap a = act(j, d);
        for (int k = 0; k < src.dim(); ++k)
          m.columns[static_cast<std::size_t>(k)] = sq.at(e).coordinates(a.apply(src.representatives()[static_cast<std::size_t>(k)]));
      }
      out.set_action(j, d, std::move(m));
    }
  return out;
}

LinearMap ApproxMorphism::at(int d) const {
  auto it = maps.find(d);
  if (it != maps.end()) return it->second;
  return LinearMap(target->dim(d), source->dim(d));
}

bool ApproxMorphism::is_homomorphism() const {
  const Window& w = source->window();
  for (int d = w.lo; d <= w.hi; ++d)
    for (std::size_t j = 0; j < source->weights().size(); ++j) {
      const int e = d + source->weights()[j];
      if (e > w.hi) continue;
      auto a = at(e).after(source->action(j, d));
      auto b = target->action(j, d).after(at(d));
      for (int c = 0; c < a.cols(); ++c)
        if (!axpy(a.columns[static_cast<std::size_t>(c)], Scalar(-1), b.columns[static_cast<std::size_t>(c)]).empty())
          return false;
    }
  return true;
}

ApproxMorphism ApproxMorphism::dual(const ArtinianApprox& dual_target, const ArtinianApprox& dual_source) const {
  ApproxMorphism g;
  g.source = &dual_target;
  g.target = &dual_source;
  const Window& w = dual_target.window();
  for (int d = w.lo; d <= w.hi; ++d) g.maps[d] = transpose(at(-d));
  return g;
}

bool is_short_exact(const ApproxMorphism& f, const ApproxMorphism& g, Window w) {
  for (int d = w.lo; d <= w.hi; ++d) {
    const int nx = f.source->dim(d), ny = f.target->dim(d), nz = g.target->dim(d);
    LinearMap fd = f.at(d), gd = g.at(d);
    if (map_rank(fd) != nx) return false;
    if (map_rank(gd) != nz) return false;
    if (!gd.after(fd).is_zero()) return false;
    if (nx + nz != ny) return false;
  }
  return true;
}

}  // namespace gmdual

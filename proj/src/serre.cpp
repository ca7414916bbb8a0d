#include "gmdual/serre.hpp"

#include <algorithm>

#include "json.hpp"

#include "gmdual/complex.hpp"
#include "gmdual/conventions.hpp"
#include "gmdual/error.hpp"
#include "gmdual/resolution.hpp"

namespace gmdual {

std::string conventions::ledger_json() {
  nlohmann::ordered_json j;
  j["basis_degree_sign"] = basis_degree_sign;
  j["dmat_gamma_spot_sign"] = dmat_gamma_spot_sign;
  j["dse_spot_offset_per_var"] = dse_spot_offset_per_var;
  j["serre_socle_degree"] = serre_socle_degree;
  j["theorem_b_shift"] = theorem_b_shift;
  j["twist_sign"] = twist_sign;
  return j.dump(2);
}

namespace {

int max_weight(const RingPtr& ring) { return *std::max_element(ring->weights().begin(), ring->weights().end()); }

LinearMap poly_action(const ArtinianApprox& s, const Poly& f, int e) {
  if (f.is_zero()) return LinearMap();
  LinearMap out(s.dim(e + f.degree()), s.dim(e));
  for (const auto& t : f.terms()) {
    LinearMap g = s.action(t.mono, e);
    for (int c = 0; c < out.cols(); ++c)
      out.columns[static_cast<std::size_t>(c)] =
          axpy(out.columns[static_cast<std::size_t>(c)], t.coef, g.columns[static_cast<std::size_t>(c)]);
  }
  return out;
}

int max_twist(const Resolution& r) {
  int m = 0;
  bool any = false;
  for (const auto& t : r.twists)
    for (int a : t) {
      m = any ? std::max(m, a) : a;
      any = true;
    }
  return m;
}

HilbertTable zero_table(Window w) { return HilbertTable(w); }

void require_cm(const DualizingData& dd) {
  if (!dd.cohen_macaulay)
    throw ComputationError(ErrorKind::NotCohenMacaulay, "ring is not Cohen-Macaulay: ambient Ext is spread over " +
                                                            std::to_string(dd.ambient_ext.size()) + " spots");
}

}  // namespace

DualizingData canonical_module(const RingPtr& ring) {
  DualizingData dd;
  dd.ring = ring;
  dd.krull_dim = ring->krull_dimension();
  dd.weight_sum = ring->weight_sum();
  const int n = static_cast<int>(ring->nvars());
  RingPtr p = ring->ambient();
  PresentedModule a = PresentedModule::free(ring, {0}).over_ambient();
  PresentedModule omega_p = PresentedModule::free(p, {-dd.weight_sum});
  for (auto& e : ext(a, omega_p, 0, n, Window(0, 0)))
    if (!e.module.is_zero()) dd.ambient_ext.emplace(e.i, e.module);
  const int j = n - dd.krull_dim;
  dd.cohen_macaulay = dd.ambient_ext.size() == 1 && dd.ambient_ext.count(j) == 1;
  dd.placement = conventions::dse_spot(j, n);
  if (dd.cohen_macaulay) {
    dd.omega = minimal_presentation(dd.ambient_ext.at(j).over_ring(ring));
    dd.a_invariant = -dd.omega.initial_degree();
  }
  return dd;
}

SerreObject serre_object(const DualizingData& dd, Window w, int t_max) {
  require_cm(dd);
  SerreObject s;
  s.dualizing = dd;
  s.approx = local_cohomology(dd.omega, dd.krull_dim, w, t_max);
  s.approx.certificate.route = "H^" + std::to_string(dd.krull_dim) + "_m(omega) via koszul-ext-colimit";
  s.convention = conventions::ledger_json();
  return s;
}

SerreObject serre_object(const RingPtr& ring, Window w, int t_max) { return serre_object(canonical_module(ring), w, t_max); }

HilbertTable DerivedObject::euler() const {
  HilbertTable t(window);
  for (const auto& [s, d] : spots) t = (s % 2 == 0) ? t + d.table : t - d.table;
  return t;
}

HilbertTable DerivedObject::table(int spot) const {
  auto it = spots.find(spot);
  return it == spots.end() ? HilbertTable(window) : it->second.table;
}

std::optional<int> DerivedObject::single_spot() const {
  if (spots.size() != 1) return std::nullopt;
  return spots.begin()->first;
}

DerivedObject serre_dual(const PresentedModule& f, Window w) {
  const RingPtr& ring = f.ring();
  const int n = static_cast<int>(ring->nvars());
  RingPtr p = ring->ambient();
  PresentedModule omega_p = PresentedModule::free(p, {-ring->weight_sum()});
  DerivedObject out;
  out.window = w;
  for (auto& e : ext(f.over_ambient(), omega_p, 0, n, w)) {
    if (e.module.is_zero()) continue;
    PresentedModule m = minimal_presentation(e.module.over_ring(ring));
    out.spots[conventions::dse_spot(e.i, n)] = SpotData{m, m.hilbert(w)};
  }
  return out;
}

std::map<int, ArtinianApprox> matlis_functor(const PresentedModule& f, const ArtinianApprox& s, Window w) {
  const RingPtr& ring = f.ring();
  const int dim_a = ring->krull_dimension();
  Resolution r = free_resolution(f, dim_a + 1);
  const auto& weights = ring->weights();
  if (s.window().hi < conventions::serre_socle_degree)
    throw ComputationError(ErrorKind::WindowInsufficient, "S window does not reach its top degree");
  for (int i = 0; i <= std::min(dim_a + 1, r.length()); ++i)
    for (int a : r.twists[static_cast<std::size_t>(i)])
      if (w.lo - a < s.window().lo)
        throw ComputationError(ErrorKind::WindowInsufficient, "S is needed down to degree " + std::to_string(w.lo - a));

  auto piece_dim = [&](int i, int d) {
    if (i < 0 || i > r.length()) return 0;
    int n = 0;
    for (int a : r.twists[static_cast<std::size_t>(i)]) n += s.dim(d - a);
    return n;
  };
  // Hom(F_i, S) -> Hom(F_{i+1}, S) in degree d
  auto diff = [&](int i, int d) {
    LinearMap m(piece_dim(i + 1, d), piece_dim(i, d));
    if (i < 0 || i >= r.length()) return m;
    const auto& src = r.twists[static_cast<std::size_t>(i)];
    const auto& dst = r.twists[static_cast<std::size_t>(i + 1)];
    const auto& cols = r.maps[static_cast<std::size_t>(i)];
    int o_src = 0;
    for (std::size_t j = 0; j < src.size(); ++j) {
      const int e = d - src[j];
      int o_dst = 0;
      for (std::size_t k = 0; k < dst.size(); ++k) {
        const Poly& entry = cols[k][j];
        if (!entry.is_zero()) {
          LinearMap g = poly_action(s, entry, e);
          for (int c = 0; c < g.cols(); ++c)
            for (const auto& [row, v] : g.columns[static_cast<std::size_t>(c)])
              m.columns[static_cast<std::size_t>(o_src + c)].emplace_back(o_dst + row, v);
        }
        o_dst += s.dim(d - dst[k]);
      }
      o_src += s.dim(e);
    }
    for (auto& c : m.columns) std::sort(c.begin(), c.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return m;
  };

  std::map<int, ArtinianApprox> out;
  for (int i = 0; i <= dim_a; ++i) {
    if (i > r.length()) {
      out.emplace(i, ArtinianApprox(weights, w));
      continue;
    }
    auto piece = [&](int d) { return PieceComplex{piece_dim(i, d), diff(i - 1, d), diff(i, d)}; };
    auto act = [&](std::size_t j, int d) {
      LinearMap m(piece_dim(i, d + weights[j]), piece_dim(i, d));
      int o_src = 0, o_dst = 0;
      for (int a : r.twists[static_cast<std::size_t>(i)]) {
        LinearMap g = s.action(j, d - a);
        for (int c = 0; c < g.cols(); ++c)
          for (const auto& [row, v] : g.columns[static_cast<std::size_t>(c)])
            m.columns[static_cast<std::size_t>(o_src + c)].emplace_back(o_dst + row, v);
        o_src += s.dim(d - a);
        o_dst += s.dim(d + weights[j] - a);
      }
      return m;
    };
    ArtinianApprox x = cohomology_approx(weights, w, piece, act);
    x.certificate = s.certificate;
    x.certificate.route = "Hom(resolution, S)";
    out.emplace(i, std::move(x));
  }
  return out;
}

void VerificationReport::finish() {
  pass = std::all_of(comparisons.begin(), comparisons.end(), [](const Comparison& c) { return c.equal(); });
}

std::map<int, ArtinianApprox> matlis_functor(const PresentedModule& f, Window w, int t_max) {
  Resolution r = free_resolution(f, f.ring()->krull_dimension() + 1);
  ArtinianApprox s = serre_object(f.ring(), serre_window_for(f.ring(), w, max_twist(r)), t_max).approx;
  return matlis_functor(f, s, w);
}

Window serre_window_for(const RingPtr& ring, Window w, int max_twist_value) {
  const int mw = max_weight(ring);
  return Window(w.lo - std::max(max_twist_value, 0) - mw, std::max(mw, conventions::serre_socle_degree + 1));
}

VerificationReport verify_theorem_A(const RingPtr& ring, Window twist_range, Window w, int t_max) {
  VerificationReport rep;
  rep.identity = "theorem-A";
  rep.mode = "defining-property";
  rep.window = w;
  rep.t_max = t_max;
  const int lo = std::max(w.lo, -twist_range.hi), hi = std::min(w.hi, -twist_range.lo);
  if (lo > hi) throw ComputationError(ErrorKind::WindowInsufficient, "twist range does not meet the window");
  SerreObject s = serre_object(ring, Window(lo, hi), t_max);
  PresentedModule a = PresentedModule::free(ring, {0});
  Comparison c;
  c.label = "dim Hom(O(n), S)_0 vs dim A_n";
  c.lhs = HilbertTable(twist_range);
  c.rhs = HilbertTable(twist_range);
  for (int n = twist_range.lo; n <= twist_range.hi; ++n) {
    const int deg = -conventions::twist_of_line_bundle(n);  // Hom(A(n), S)_0 = S(-n)_0
    if (deg < lo || deg > hi) {
      rep.notes.push_back("n=" + std::to_string(n) + " outside the window");
      continue;
    }
    c.lhs[n] = s.approx.dim(deg);
    c.rhs[n] = a.dim(n);
  }
  rep.comparisons.push_back(std::move(c));
  if (s.dualizing.a_invariant) rep.notes.push_back("a-invariant " + std::to_string(*s.dualizing.a_invariant));
  rep.notes.push_back("S computed on " + std::to_string(lo) + ".." + std::to_string(hi));
  rep.finish();
  return rep;
}

namespace {

struct DualityContext {
  DualizingData dd;
  ArtinianApprox s;
};

DualityContext duality_context(const PresentedModule& f, Window w, int t_max) {
  DualityContext ctx;
  ctx.dd = canonical_module(f.ring());
  require_cm(ctx.dd);
  Resolution r = free_resolution(f, ctx.dd.krull_dim + 1);
  ctx.s = serre_object(ctx.dd, serre_window_for(f.ring(), w, max_twist(r)), t_max).approx;
  return ctx;
}

}  // namespace

VerificationReport verify_theorem_B(const PresentedModule& f, Window w, int t_max) {
  VerificationReport rep;
  rep.identity = "theorem-B";
  rep.window = w;
  rep.t_max = t_max;
  DualityContext ctx = duality_context(f, w, t_max);
  const int n = static_cast<int>(f.ring()->nvars());

  DerivedObject dse = serre_dual(f, w);
  GammaResult gamma = gamma_truncation(f, w, t_max);
  const bool strong = dse.single_spot().has_value();
  rep.mode = strong ? "strong" : "euler";

  // D_mat(Gamma F) against D_se(F)
  std::map<int, HilbertTable> lhs1;
  for (int i = 0; i <= n; ++i)
    lhs1[conventions::dmat_gamma_spot_sign * i + conventions::theorem_b_shift] = hom_table(gamma.spots[static_cast<std::size_t>(i)], ctx.s, w);
  // D_mat(F) against Gamma(D_se F)
  std::map<int, ArtinianApprox> dmat = matlis_functor(f, ctx.s, w);
  std::map<int, HilbertTable> rhs2;
  for (const auto& [s, data] : dse.spots) {
    GammaResult g = gamma_truncation(data.module, w, t_max);
    for (int k = 0; k <= n; ++k) {
      auto& t = rhs2.try_emplace(s + k + conventions::theorem_b_shift, w).first->second;
      t = t + g.spots[static_cast<std::size_t>(k)].table();
    }
  }
  std::map<int, HilbertTable> lhs2;
  for (const auto& [i, x] : dmat) lhs2[i] = x.table();

  auto euler = [&](const std::map<int, HilbertTable>& m) {
    HilbertTable t(w);
    for (const auto& [s, tab] : m) t = (s % 2 == 0) ? t + tab : t - tab;
    return t;
  };
  if (strong) {
    std::map<int, bool> spots1, spots2;
    for (const auto& [s, t] : lhs1) spots1[s] = true;
    for (const auto& [s, d] : dse.spots) spots1[s] = true;
    for (const auto& [s, b] : spots1) {
      auto it = lhs1.find(s);
      rep.comparisons.push_back({"D_mat(Gamma F) vs D_se(F), spot " + std::to_string(s),
                                 it == lhs1.end() ? zero_table(w) : it->second, dse.table(s)});
    }
    for (const auto& [s, t] : lhs2) spots2[s] = true;
    for (const auto& [s, t] : rhs2) spots2[s] = true;
    for (const auto& [s, b] : spots2) {
      auto a = lhs2.find(s);
      auto c = rhs2.find(s);
      rep.comparisons.push_back({"D_mat(F) vs Gamma(D_se F), spot " + std::to_string(s),
                                 a == lhs2.end() ? zero_table(w) : a->second, c == rhs2.end() ? zero_table(w) : c->second});
    }
  } else {
    rep.comparisons.push_back({"D_mat(Gamma F) vs D_se(F), Euler", euler(lhs1), dse.euler()});
    rep.comparisons.push_back({"D_mat(F) vs Gamma(D_se F), Euler", euler(lhs2), euler(rhs2)});
  }
  rep.notes.push_back("S window " + std::to_string(ctx.s.window().lo) + ".." + std::to_string(ctx.s.window().hi));
  rep.finish();
  return rep;
}

VerificationReport involution_check(const PresentedModule& f, Window w, int t_max) {
  VerificationReport rep;
  rep.identity = "involution";
  rep.window = w;
  rep.t_max = t_max;
  DualityContext ctx = duality_context(f, w, t_max);
  const HilbertTable original = f.hilbert(w);

  auto dmat = matlis_functor(f, ctx.s, w);
  for (const auto& [i, x] : dmat) {
    if (i == 0) continue;
    rep.comparisons.push_back({"D_mat(F) spot " + std::to_string(i) + " vanishes", x.table(), zero_table(w)});
  }
  rep.comparisons.push_back({"D_mat(D_mat F) vs F", hom_table(dmat.at(0), ctx.s, w), original});

  DerivedObject dse = serre_dual(f, w);
  if (auto s0 = dse.single_spot()) {
    rep.mode = "strong";
    DerivedObject back = serre_dual(dse.spots.at(*s0).module, w);
    std::map<int, HilbertTable> shifted;
    for (const auto& [s, d] : back.spots) shifted[s - *s0] = d.table;
    shifted.try_emplace(0, w);
    for (const auto& [s, t] : shifted)
      rep.comparisons.push_back({"D_se(D_se F) spot " + std::to_string(s), t, s == 0 ? original : zero_table(w)});
  } else {
    rep.mode = "mixed";
    HilbertTable t(w);
    for (const auto& [s, d] : dse.spots) {
      HilbertTable e = serre_dual(d.module, w).euler();
      t = (s % 2 == 0) ? t + e : t - e;
    }
    rep.comparisons.push_back({"D_se(D_se F) vs F, Euler", t, original});
  }
  rep.finish();
  return rep;
}

std::vector<HilbertTable> punctured_cohomology(const PresentedModule& m, Window twist_range, int t_max) {
  const int dim_a = m.ring()->krull_dimension();
  std::vector<HilbertTable> h;
  for (int i = 0; i <= dim_a; ++i) h.push_back(local_cohomology(m, i, twist_range, t_max).table());
  std::vector<HilbertTable> out;
  if (dim_a == 0) return out;
  HilbertTable h0 = m.hilbert(twist_range) - h[0];
  out.push_back(h0 + h[1]);
  for (int i = 1; i < dim_a; ++i) out.push_back(h[static_cast<std::size_t>(i + 1)]);
  return out;
}

std::vector<HilbertTable> punctured_cohomology(const RingPtr& ring, Window twist_range, int t_max) {
  return punctured_cohomology(PresentedModule::free(ring, {0}), twist_range, t_max);
}

VerificationReport verify_serre_puncture(const RingPtr& ring, Window twist_range, int t_max) {
  VerificationReport rep;
  rep.identity = "serre-puncture";
  rep.mode = "pairing";
  rep.window = twist_range;
  rep.t_max = t_max;
  DualizingData dd = canonical_module(ring);
  require_cm(dd);
  const int top = dd.krull_dim - 1;
  auto lhs = punctured_cohomology(ring, twist_range, t_max);
  auto rhs = punctured_cohomology(dd.omega, twist_range.reflected(), t_max);
  for (int i = 0; i <= top; ++i)
    rep.comparisons.push_back({"H^" + std::to_string(i) + "(O(d)) vs H^" + std::to_string(top - i) + "(omega(-d))",
                               lhs[static_cast<std::size_t>(i)], rhs[static_cast<std::size_t>(top - i)].reflected()});
  rep.finish();
  return rep;
}

VerificationReport properness_check(const RingPtr& ring) {
  VerificationReport rep;
  rep.identity = "properness";
  rep.mode = "degree-0";
  rep.window = Window(0, 0);
  HilbertTable lhs(Window(0, 0)), rhs(Window(0, 0));
  lhs[0] = PresentedModule::free(ring, {0}).dim(0);
  rhs[0] = 1;
  rep.comparisons.push_back({"dim A_0", lhs, rhs});
  for (int w : ring->weights())
    if (w < 1) rep.notes.push_back("non-positive weight");
  rep.finish();
  if (!rep.notes.empty()) rep.pass = false;
  return rep;
}

}  // namespace gmdual

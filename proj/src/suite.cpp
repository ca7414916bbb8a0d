#include "gmdual/suite.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <sstream>

#include "gmdual/artinian.hpp"
#include "gmdual/error.hpp"
#include "gmdual/local_cohomology.hpp"
#include "gmdual/serre.hpp"
#include "gmdual/session.hpp"

namespace gmdual {

namespace {

constexpr int kDualityTmax = 28;

RingPtr make_ring(std::vector<std::string> names, std::vector<int> weights,
                  const std::function<std::vector<Poly>(const GradedRing&)>& ideal = nullptr) {
  RingPtr p = GradedRing::create(names, weights);
  if (!ideal) return p;
  return GradedRing::create(std::move(names), std::move(weights), ideal(*p));
}

struct TestModule {
  std::string name;
  PresentedModule module;
  bool expect_strong = true;
};

std::vector<TestModule> suite_modules() {
  std::vector<TestModule> out;
  for (const auto& [name, ring] : suite_rings()) {
    out.push_back({name + ": A", PresentedModule::free(ring, {0})});
    out.push_back({name + ": A(-2)", PresentedModule::free(ring, {-2})});
    out.push_back({name + ": A(3)", PresentedModule::free(ring, {3})});
    out.push_back({name + ": A/(x)", PresentedModule::quotient(ring, {ring->variable_poly(0)})});
    if (ring->nvars() == 3) {
      Poly x = ring->variable_poly(0), y = ring->variable_poly(1), z = ring->variable_poly(2), o;
      out.push_back({name + ": rank-2 MCM",
                     PresentedModule::cokernel(ring, {0, 0, 0, 0},
                                               {{x, z, o, o}, {z, y, o, o}, {o, o, y, z}, {o, o, z, x}})});
    }
    if (name == "k[x,y] (1,1)") {
      Poly x = ring->variable_poly(0), y = ring->variable_poly(1);
      out.push_back({name + ": A/(x^2,xy)", PresentedModule::quotient(ring, {x * x, x * y}), false});
    }
  }
  return out;
}

/// Number of monomials of weighted degree d, by direct enumeration.
long long count_monomials(const std::vector<int>& w, int d, std::size_t from = 0) {
  if (d < 0) return 0;
  if (from == w.size()) return d == 0 ? 1 : 0;
  long long n = 0;
  for (int k = 0; k * w[from] <= d; ++k) n += count_monomials(w, d - k * w[from], from + 1);
  return n;
}

struct Checker {
  CriterionResult& r;
  void expect(bool ok, const std::string& what) {
    if (!ok) {
      r.pass = false;
      r.details.push_back("failed: " + what);
    }
  }
  void note(const std::string& s) { r.details.push_back(s); }
};

std::string failing_comparisons(const VerificationReport& rep) {
  std::string s;
  for (const auto& c : rep.comparisons)
    if (!c.equal()) s += " [" + c.label + ": " + c.lhs.str() + " vs " + c.rhs.str() + "]";
  return s;
}

void baby_example(Checker& ck) {
  RingPtr kx = make_ring({"x"}, {1});
  VerificationReport rep = verify_theorem_A(kx, Window(-10, 10), Window(-15, 15), 12);
  const HilbertTable& hom = rep.comparisons.at(0).lhs;
  for (int n = -10; n <= 10; ++n)
    ck.expect(hom.at(n) == (n >= 0 ? 1 : 0), "dim Hom(O(" + std::to_string(n) + "), S)_0 = " + std::to_string(hom.at(n)));
}

void cone_description(Checker& ck) {
  RingPtr kx = make_ring({"x"}, {1});
  const Window w(-12, 12);
  SerreObject s = serre_object(kx, w, 24);
  HilbertTable cone = cech_local_cohomology(s.dualizing.omega, 1, w, 24);
  ck.expect(s.approx.table() == cone, "S " + s.approx.table().str() + " vs cone model " + cone.str());
  HilbertTable expected(w);
  for (int d = w.lo; d <= 0; ++d) expected[d] = 1;
  ck.expect(cone == expected, "cone model " + cone.str());
}

void endomorphisms(Checker& ck) {
  const Window w(-10, 10);
  for (const auto& [name, ring] : {std::pair{"k[x]", make_ring({"x"}, {1})}, std::pair{"k[x,y]", make_ring({"x", "y"}, {1, 1})}}) {
    SerreObject s = serre_object(ring, Window(-24, 2), 48);
    HilbertTable end = hom_table(s.approx, s.approx, w);
    HilbertTable a = PresentedModule::free(ring, {0}).hilbert(w);
    ck.expect(end == a, std::string(name) + ": End(S) " + end.str() + " vs A " + a.str());
  }
}

void theorem_a(Checker& ck) {
  for (const auto& [name, ring] : suite_rings()) {
    VerificationReport rep = verify_theorem_A(ring, Window(-8, 8), Window(-15, 15), 12);
    ck.expect(rep.pass, name + failing_comparisons(rep));
  }
}

void theorem_b(Checker& ck) {
  for (const auto& m : suite_modules()) {
    VerificationReport rep = verify_theorem_B(m.module, Window(-12, 12), kDualityTmax);
    ck.expect(rep.pass, m.name + " (" + rep.mode + ")" + failing_comparisons(rep));
    if (m.expect_strong) ck.expect(rep.mode == "strong", m.name + " ran in " + rep.mode + " mode");
  }
}

void involution(Checker& ck) {
  for (const auto& m : suite_modules()) {
    VerificationReport rep = involution_check(m.module, Window(-12, 12), kDualityTmax);
    ck.expect(rep.pass, m.name + " (" + rep.mode + ")" + failing_comparisons(rep));
  }
}

void oracle_equivalence(Checker& ck) {
  const Window w(-15, 15);
  std::vector<std::pair<std::string, PresentedModule>> cases;
  for (const auto& [name, ring] : suite_rings()) cases.emplace_back(name, PresentedModule::free(ring, {0}));
  for (const auto& [name, m] : cases) {
    for (int i = 0; i <= static_cast<int>(m.ring()->nvars()); ++i) {
      HilbertTable ext = local_cohomology(m, i, w, 40).table();
      HilbertTable cech = cech_local_cohomology(m, i, w, 40);
      ck.expect(ext == cech, name + " H^" + std::to_string(i) + ": " + ext.str() + " vs " + cech.str());
    }
  }
}

void vanishing(Checker& ck) {
  const Window w(-12, 12);
  for (const auto& m : suite_modules()) {
    const int dim_a = m.module.ring()->krull_dimension();
    DepthResult d = depth(m.module, dim_a);
    ck.expect(d.depth.has_value() && *d.depth <= dim_a, m.name + ": depth not found up to " + std::to_string(dim_a));
    const int dep = d.depth.value_or(0);
    for (int i = 0; i <= static_cast<int>(m.module.ring()->nvars()) + 1; ++i) {
      if (i >= dep && i <= dim_a) continue;
      HilbertTable h = local_cohomology(m.module, i, w, kDualityTmax).table();
      ck.expect(h.is_zero(), m.name + ": H^" + std::to_string(i) + " = " + h.str() + " with depth " +
                                 std::to_string(dep) + ", dim " + std::to_string(dim_a));
    }
  }
}

LinearMap scalar_map(int rows, int cols, std::initializer_list<int> entries) {
  Matrix m(rows, cols);
  auto it = entries.begin();
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = *it++;
  return LinearMap::from_matrix(m);
}

struct Ses {
  std::string name;
  ArtinianApprox x, y, z;
  std::map<int, LinearMap> f, g;
};

void check_ses(Checker& ck, const Ses& s, Window w) {
  ApproxMorphism f{&s.x, &s.y, s.f}, g{&s.y, &s.z, s.g};
  ck.expect(f.is_homomorphism() && g.is_homomorphism(), s.name + ": maps are not module maps");
  ck.expect(is_short_exact(f, g, w), s.name + ": not exact");
  ArtinianApprox dx = matlis_dual(s.x, w), dy = matlis_dual(s.y, w), dz = matlis_dual(s.z, w);
  ApproxMorphism gd = g.dual(dz, dy), fd = f.dual(dy, dx);
  ck.expect(gd.is_homomorphism() && fd.is_homomorphism(), s.name + ": dual maps are not module maps");
  ck.expect(is_short_exact(gd, fd, w), s.name + ": dual sequence not exact");
}

void injective_hull(Checker& ck) {
  for (const auto& [name, ring] : suite_rings()) {
    SerreObject s = serre_object(ring, Window(-12, 2), kDualityTmax);
    HilbertTable soc = socle(s.approx);
    ck.expect(soc.total() == 1, name + ": socle of S " + soc.str());
  }
  const Window w(-6, 6);
  const LinearMap one = scalar_map(1, 1, {1});
  // 0 -> k(-1) -> k[x]/(x^2) -> k -> 0
  {
    Ses s{"k(-1) -> k[x]/(x^2) -> k", ArtinianApprox({1}, w), ArtinianApprox({1}, w), ArtinianApprox({1}, w), {}, {}};
    s.x.set_dim(1, 1);
    s.y.set_dim(0, 1);
    s.y.set_dim(1, 1);
    s.y.set_action(0, 0, one);
    s.z.set_dim(0, 1);
    s.f[1] = one;
    s.g[0] = one;
    check_ses(ck, s, w);
  }
  // 0 -> k(-1)^2 -> k[x,y]/(x,y)^2 -> k -> 0
  {
    Ses s{"k(-1)^2 -> k[x,y]/(x,y)^2 -> k", ArtinianApprox({1, 1}, w), ArtinianApprox({1, 1}, w),
          ArtinianApprox({1, 1}, w), {}, {}};
    s.x.set_dim(1, 2);
    s.y.set_dim(0, 1);
    s.y.set_dim(1, 2);
    s.y.set_action(0, 0, scalar_map(2, 1, {1, 0}));
    s.y.set_action(1, 0, scalar_map(2, 1, {0, 1}));
    s.z.set_dim(0, 1);
    s.f[1] = scalar_map(2, 2, {1, 0, 0, 1});
    s.g[0] = one;
    check_ses(ck, s, w);
  }
  // 0 -> Soc(S) -> S -> S/Soc(S) -> 0 for k[x]
  {
    RingPtr kx = make_ring({"x"}, {1});
    ArtinianApprox sx = serre_object(kx, w, 24).approx;
    Ses s{"Soc(S) -> S -> S/Soc(S) over k[x]", ArtinianApprox({1}, w), sx, ArtinianApprox({1}, w), {}, {}};
    s.x.set_dim(0, 1);
    s.f[0] = one;
    for (int d = w.lo; d <= -1; ++d) s.z.set_dim(d, sx.dim(d));
    for (int d = w.lo; d <= -1; ++d) {
      if (d + 1 <= -1) s.z.set_action(0, d, sx.action(0, d));
      s.g[d] = LinearMap::from_matrix(Matrix::identity(sx.dim(d)));
    }
    check_ses(ck, s, w);
  }
}

void puncture(Checker& ck) {
  const Window range(-8, 8);
  std::vector<std::pair<std::string, RingPtr>> spaces = {{"P^1", make_ring({"x", "y"}, {1, 1})},
                                                         {"P^2", make_ring({"x", "y", "z"}, {1, 1, 1})},
                                                         {"P(3,2)", make_ring({"x", "y"}, {3, 2})}};
  for (const auto& [name, ring] : spaces) {
    auto h = punctured_cohomology(ring, range, 24);
    const int top = ring->krull_dimension() - 1;
    const auto& w = ring->weights();
    const int sw = ring->weight_sum();
    for (int d = range.lo; d <= range.hi; ++d) {
      const long long h0 = count_monomials(w, d), htop = count_monomials(w, -d - sw);
      ck.expect(h.at(0).at(d) == h0, name + ": H^0(O(" + std::to_string(d) + ")) = " + std::to_string(h.at(0).at(d)) +
                                         ", expected " + std::to_string(h0));
      ck.expect(h.at(static_cast<std::size_t>(top)).at(d) == htop,
                name + ": H^" + std::to_string(top) + "(O(" + std::to_string(d) + ")) = " +
                    std::to_string(h.at(static_cast<std::size_t>(top)).at(d)) + ", expected " + std::to_string(htop));
      for (int i = 1; i < top; ++i)
        ck.expect(h.at(static_cast<std::size_t>(i)).at(d) == 0, name + ": H^" + std::to_string(i) + " nonzero");
    }
    VerificationReport rep = verify_serre_puncture(ring, range, 24);
    ck.expect(rep.pass, name + ": Serre pairing" + failing_comparisons(rep));
  }
}

void properness(Checker& ck) {
  for (const auto& [name, ring] : suite_rings()) {
    VerificationReport rep = properness_check(ring);
    ck.expect(rep.pass, name + ": properness check failed");
  }
  bool rejected = false;
  try {
    GradedRing::create({"x"}, {0});
  } catch (const ComputationError&) {
    rejected = true;
  }
  ck.expect(rejected, "weight 0 accepted by the ring constructor");
  rejected = false;
  try {
    build_environment(parse_session("ring B = poly(x:0)\n"));
  } catch (const SessionError&) {
    rejected = true;
  }
  ck.expect(rejected, "weight 0 accepted by the session language");
}

struct Criterion {
  const char* title;
  void (*run)(Checker&);
  std::optional<double> budget;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> s = {
      {"Hom(O(n), S)_0 for k[x], n in [-10, 10]", baby_example, 1.0},
      {"S equals the cone model for k[x] on [-12, 12]", cone_description, std::nullopt},
      {"End(S) equals A on [-10, 10] for k[x] and k[x,y]", endomorphisms, 10.0},
      {"theorem A on the five rings", theorem_a, 120.0},
      {"theorem B on the module set", theorem_b, std::nullopt},
      {"involutivity on the module set", involution, std::nullopt},
      {"ext-colimit and Cech local cohomology agree on [-15, 15]", oracle_equivalence, std::nullopt},
      {"local cohomology vanishing outside [depth, dim]", vanishing, std::nullopt},
      {"socle of S and exactness of the Matlis dual", injective_hull, std::nullopt},
      {"punctured cohomology of P^1, P^2, P(3,2)", puncture, 60.0},
      {"properness and weight validation", properness, std::nullopt},
  };
  return s;
}

}  // namespace

std::vector<std::pair<std::string, RingPtr>> suite_rings() {
  return {
      {"k[x]", make_ring({"x"}, {1})},
      {"k[x,y] (1,1)", make_ring({"x", "y"}, {1, 1})},
      {"k[x,y] (2,3)", make_ring({"x", "y"}, {2, 3})},
      {"cusp", make_ring({"x", "y"}, {3, 2},
                         [](const GradedRing& p) {
                           Poly x = p.variable_poly(0), y = p.variable_poly(1);
                           return std::vector<Poly>{x * x - y * y * y};
                         })},
      {"quadric cone", make_ring({"x", "y", "z"}, {1, 1, 1},
                                 [](const GradedRing& p) {
                                   Poly x = p.variable_poly(0), y = p.variable_poly(1), z = p.variable_poly(2);
                                   return std::vector<Poly>{x * y - z * z};
                                 })},
  };
}

int suite_size() { return static_cast<int>(criteria().size()); }

CriterionResult run_criterion(int id) {
  if (id < 1 || id > suite_size()) throw ComputationError(ErrorKind::InvalidInput, "no criterion " + std::to_string(id));
  const Criterion& c = criteria()[static_cast<std::size_t>(id - 1)];
  CriterionResult r;
  r.id = id;
  r.title = c.title;
  r.pass = true;
  r.budget = c.budget;
  Checker ck{r};
  const auto start = std::chrono::steady_clock::now();
  try {
    c.run(ck);
  } catch (const std::exception& e) {
    ck.expect(false, std::string("error: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (r.budget && r.seconds > *r.budget) ck.expect(false, "over the time budget");
  return r;
}

std::vector<CriterionResult> run_suite() {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= suite_size(); ++id) out.push_back(run_criterion(id));
  return out;
}

std::string criterion_line(const CriterionResult& r) {
  std::ostringstream os;
  os << "C" << std::setw(2) << std::setfill('0') << r.id << std::setfill(' ') << " " << (r.pass ? "PASS" : "FAIL") << " "
     << r.title << " (" << std::fixed << std::setprecision(2) << r.seconds << " s";
  if (r.budget) os << ", budget " << std::setprecision(0) << *r.budget << " s";
  os << ")";
  if (!r.pass)
    for (const auto& d : r.details) os << "\n    " << d;
  return os.str();
}

nlohmann::ordered_json suite_json(const std::vector<CriterionResult>& results, bool timing) {
  nlohmann::ordered_json j;
  j["format"] = "gmdual-suite";
  j["version"] = 1;
  nlohmann::ordered_json list = nlohmann::ordered_json::array();
  bool all = true;
  for (const auto& r : results) {
    nlohmann::ordered_json e;
    e["id"] = r.id;
    e["title"] = r.title;
    e["pass"] = r.pass;
    e["details"] = r.details;
    if (timing) e["seconds"] = r.seconds;
    list.push_back(e);
    all = all && r.pass;
  }
  j["criteria"] = list;
  j["pass"] = all;
  return j;
}

}  // namespace gmdual

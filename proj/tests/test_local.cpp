#include "doctest.h"

#include "gmdual/artinian.hpp"
#include "gmdual/error.hpp"
#include "gmdual/local_cohomology.hpp"
#include "gmdual/pieces.hpp"
#include "support.hpp"

using namespace gmdual;
using namespace testing_support;

TEST_CASE("local cohomology of polynomial rings") {
  Window w(-10, 6);
  RingPtr k1 = poly_ring({"x"}, {1});
  PresentedModule a1 = PresentedModule::free(k1, {0});
  HilbertTable h1 = table_of(w, [](int d) { return d <= -1 ? 1 : 0; });
  CHECK(local_cohomology(a1, 1, w, 16).table() == h1);
  CHECK(cech_local_cohomology(a1, 1, w, 16) == h1);
  CHECK(local_cohomology(a1, 0, w, 16).table().is_zero());
  CHECK(cech_local_cohomology(a1, 0, w, 16).is_zero());

  RingPtr p = poly_ring({"x", "y"}, {1, 1});
  PresentedModule a2 = PresentedModule::free(p, {0});
  HilbertTable h2 = table_of(w, [](int d) { return d <= -2 ? -d - 1 : 0; });
  CHECK(local_cohomology(a2, 2, w, 24).table() == h2);
  CHECK(cech_local_cohomology(a2, 2, w, 24) == h2);
  CHECK(local_cohomology(a2, 1, w, 24).table().is_zero());
}

TEST_CASE("local cohomology of the cusp is the dual of omega = A(1)") {
  Window w(-12, 6);
  RingPtr a = cusp();
  PresentedModule m = PresentedModule::free(a, {0});
  HilbertTable expected = table_of(w, [&](int d) { return m.dim(1 - d); });
  CHECK(expected.at(1) == 1);
  CHECK(expected.at(0) == 0);
  CHECK(local_cohomology(m, 1, w, 24).table() == expected);
  CHECK(cech_local_cohomology(m, 1, w, 24) == expected);
}

TEST_CASE("torsion modules are their own H^0") {
  RingPtr k1 = poly_ring({"x"}, {1});
  PresentedModule q = PresentedModule::quotient(k1, {k1->variable_poly(0) * k1->variable_poly(0)});
  Window w(-4, 4);
  HilbertTable expected = table_of(w, {{0, 1}, {1, 1}});
  CHECK(local_cohomology(q, 0, w, 8).table() == expected);
  CHECK(cech_local_cohomology(q, 0, w, 8) == expected);
  CHECK(local_cohomology(q, 1, w, 8).table().is_zero());
}

TEST_CASE("the two routes agree on a non Cohen-Macaulay module") {
  RingPtr p = poly_ring({"x", "y"}, {1, 1});
  Poly x = p->variable_poly(0), y = p->variable_poly(1);
  PresentedModule q = PresentedModule::quotient(p, {x * x, x * y});
  Window w(-8, 5);
  for (int i = 0; i <= 2; ++i) CHECK(local_cohomology(q, i, w, 20).table() == cech_local_cohomology(q, i, w, 20));
  CHECK(local_cohomology(q, 0, w, 20).table() == table_of(w, {{1, 1}}));
}

TEST_CASE("a false early plateau is not taken as the colimit") {
  // A/(x) over the cusp: k[y]/(y^3) is torsion, so H^0 is everything and H^1 vanishes
  RingPtr a = cusp();
  PresentedModule m = PresentedModule::quotient(a, {a->variable_poly(0)});
  Window w(-8, 8);
  CHECK(local_cohomology(m, 0, w, 24).table() == m.hilbert(w));
  CHECK(local_cohomology(m, 1, w, 24).table().is_zero());
}

TEST_CASE("serial and parallel kernels agree") {
  RingPtr a = quadric_cone();
  PresentedModule m = PresentedModule::free(a, {0});
  Window w(-8, 4);
  ArtinianApprox s = local_cohomology(m, 2, w, 20, Execution::Serial);
  ArtinianApprox q = local_cohomology(m, 2, w, 20, Execution::Parallel);
  CHECK(s.table() == q.table());
  CHECK(s.certificate.stage == q.certificate.stage);
  for (int d = w.lo; d < w.hi; ++d)
    for (std::size_t j = 0; j < 3; ++j) CHECK(s.action(j, d).dense() == q.action(j, d).dense());
  CHECK(cech_local_cohomology(m, 2, w, 20, Execution::Serial) == cech_local_cohomology(m, 2, w, 20, Execution::Parallel));
}

TEST_CASE("approximants carry a commuting action that kills the ideal") {
  RingPtr a = quadric_cone();
  ArtinianApprox h = local_cohomology(PresentedModule::free(a, {0}), 2, Window(-6, 2), 20);
  CHECK(h.actions_commute());
  CHECK(h.satisfies_relations(*a));
  CHECK(h.top_degree() == -1);
}

TEST_CASE("stabilization failure is reported") {
  RingPtr p = poly_ring({"x", "y"}, {1, 1});
  CHECK_THROWS_AS(local_cohomology(PresentedModule::free(p, {0}), 2, Window(-30, 0), 2), ComputationError);
  try {
    local_cohomology(PresentedModule::free(p, {0}), 2, Window(-30, 0), 2);
  } catch (const ComputationError& e) {
    CHECK(e.kind() == ErrorKind::NotStabilized);
  }
}

TEST_CASE("gamma truncation") {
  RingPtr k1 = poly_ring({"x"}, {1});
  Window w(-6, 6);
  GammaResult g = gamma_truncation(PresentedModule::free(k1, {0}), w, 16);
  CHECK(g.spots[0].table().is_zero());
  CHECK(g.spots[1].table() == table_of(w, [](int d) { return d <= -1 ? 1 : 0; }));

  GammaResult k = gamma_truncation(residue_field(k1), w, 16);
  CHECK(k.spots[0].table() == table_of(w, {{0, 1}}));
  CHECK(k.spots[1].table().is_zero());

  RingPtr p = poly_ring({"x", "y"}, {1, 1});
  GammaResult g2 = gamma_truncation(PresentedModule::free(p, {0}), w, 20);
  CHECK(g2.euler == g2.spots[2].table());
}

TEST_CASE("graded Matlis duality") {
  RingPtr k1 = poly_ring({"x"}, {1});
  Window w(-6, 6);
  ArtinianApprox k = ArtinianApprox::from_module(GradedPieces(residue_field(k1)), w);
  CHECK(matlis_dual(k, w).table() == table_of(w, {{0, 1}}));

  ArtinianApprox h = local_cohomology(PresentedModule::free(k1, {0}), 1, w, 16);
  ArtinianApprox dual = matlis_dual(h, w);
  CHECK(dual.table() == PresentedModule::free(k1, {-1}).hilbert(w));
  CHECK(matlis_dual(dual, w).table() == h.table());
  CHECK(dual.actions_commute());

  Window small(-3, 3);
  CHECK_THROWS_AS(matlis_dual(h.restricted(small), w), ComputationError);
}

TEST_CASE("socles") {
  RingPtr p = poly_ring({"x", "y"}, {1, 1});
  PresentedModule q = PresentedModule::quotient(p, {p->variable_poly(0) * p->variable_poly(0), p->variable_poly(1)});
  Window w(-3, 5);
  CHECK(socle(GradedPieces(q), w) == table_of(w, {{1, 1}}));
  CHECK(socle(GradedPieces(residue_field(p)), w) == table_of(w, {{0, 1}}));
  ArtinianApprox h = local_cohomology(PresentedModule::free(p, {0}), 2, Window(-8, 2), 20);
  CHECK(socle(h) == table_of(Window(-8, 2), {{-2, 1}}));
}

TEST_CASE("depth") {
  RingPtr p = poly_ring({"x", "y"}, {1, 1});
  CHECK(depth(PresentedModule::free(p, {0}), 3).depth == 2);
  CHECK(depth(residue_field(p), 3).depth == 0);
  CHECK(depth(PresentedModule::free(cusp(), {0}), 3).depth == 1);
  CHECK(depth(PresentedModule::free(quadric_cone(), {0}), 3).depth == 2);
  CHECK_THROWS_AS(depth(PresentedModule::quotient(p, {p->constant(1)}), 3), ComputationError);
}

TEST_CASE("a sequence that is not exact is rejected, before and after dualizing") {
  Window w(-3, 3);
  ArtinianApprox x({1}, w), y({1}, w), z({1}, w);
  const LinearMap one = LinearMap::from_matrix(Matrix::identity(1));
  x.set_dim(0, 1);
  y.set_dim(0, 1);
  y.set_dim(1, 1);
  y.set_action(0, 0, one);
  z.set_dim(0, 1);
  ApproxMorphism f{&x, &y, {{0, one}}}, g{&y, &z, {{0, one}}};
  CHECK_FALSE(is_short_exact(f, g, w));
  ArtinianApprox dx = matlis_dual(x, w), dy = matlis_dual(y, w), dz = matlis_dual(z, w);
  CHECK_FALSE(is_short_exact(g.dual(dz, dy), f.dual(dy, dx), w));
}

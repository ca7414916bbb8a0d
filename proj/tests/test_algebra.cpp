#include "doctest.h"

#include "gmdual/error.hpp"
#include "gmdual/groebner.hpp"
#include "gmdual/linalg.hpp"
#include "gmdual/resolution.hpp"
#include "support.hpp"

using namespace gmdual;
using namespace testing_support;

TEST_CASE("weighted degree of monomials") {
  RingPtr r = poly_ring({"x", "y"}, {3, 2});
  CHECK(r->monomial({2, 3}).degree() == 12);
  CHECK(r->monomial({0, 0}).degree() == 0);
  CHECK(poly_ring({"x"}, {1})->variable(0).degree() == 1);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      Monomial m = r->monomial({a, b}), n = r->monomial({b, a + 1});
      CHECK((m * n).degree() == m.degree() + n.degree());
    }
}

TEST_CASE("homogeneity") {
  RingPtr r = poly_ring({"x", "y"}, {3, 2});
  Poly x = r->variable_poly(0), y = r->variable_poly(1);
  auto h = r->is_homogeneous(x * x - y * y * y);
  CHECK(h.homogeneous);
  CHECK(h.degree == 6);
  RingPtr s = poly_ring({"x", "y"}, {1, 1});
  CHECK_FALSE(s->is_homogeneous(s->variable_poly(0) + s->variable_poly(1) * s->variable_poly(1)).homogeneous);
  CHECK(s->is_homogeneous(Poly()).homogeneous);
}

TEST_CASE("weight zero and bad ideals are rejected") {
  CHECK_THROWS_AS(GradedRing::create({"x"}, {0}), ComputationError);
  CHECK_THROWS_AS(GradedRing::create({"x"}, {-1}), ComputationError);
  RingPtr s = poly_ring({"x", "y"}, {1, 1});
  Poly f = s->variable_poly(0) + s->variable_poly(1) * s->variable_poly(1);
  CHECK_THROWS_AS(GradedRing::create({"x", "y"}, {1, 1}, {f}), ComputationError);
}

TEST_CASE("normal forms in the cusp ring") {
  RingPtr a = cusp();
  Poly x = a->variable_poly(0), y = a->variable_poly(1);
  Poly y3 = y * y * y;
  CHECK(a->normal_form(x * x) == y3);
  CHECK(a->normal_form(x * x * y + y3 * y) == (y3 * y).scaled(2));
  RingPtr p = poly_ring({"x", "y"}, {1, 1});
  Poly f = p->variable_poly(0) * p->variable_poly(1) - p->variable_poly(1) * p->variable_poly(1);
  CHECK(p->normal_form(f) == f);
}

TEST_CASE("Hilbert tables of rings") {
  Window w(-3, 12);
  CHECK(PresentedModule::free(poly_ring({"x"}, {1}), {0}).hilbert(w) == table_of(w, [](int d) { return d >= 0 ? 1 : 0; }));
  CHECK(PresentedModule::free(cusp(), {0}).hilbert(w) ==
        table_of(w, [](int d) { return d >= 0 && d != 1 ? 1 : 0; }));
  CHECK(PresentedModule::free(poly_ring({"x"}, {1}), {-2}).hilbert(w) ==
        table_of(w, [](int d) { return d >= 2 ? 1 : 0; }));
  CHECK(PresentedModule::free(quadric_cone(), {0}).hilbert(w) ==
        table_of(w, [](int d) { return d >= 0 ? 2 * d + 1 : 0; }));
}

TEST_CASE("closed-form Hilbert series expand to the table") {
  Window w(-2, 20);
  for (const PresentedModule& m : {PresentedModule::free(cusp(), {0}), PresentedModule::free(quadric_cone(), {1}),
                                   PresentedModule::free(poly_ring({"x"}, {1}), {0})})
    CHECK(hilbert_series(m).expand(w) == m.hilbert(w));
  CHECK(hilbert_series(PresentedModule::free(cusp(), {0})).numerator == std::map<int, long long>{{0, 1}, {6, -1}});
}

TEST_CASE("module Groebner bases") {
  RingPtr p = poly_ring({"x", "y"}, {1, 1});
  Poly x = p->variable_poly(0), y = p->variable_poly(1);
  ModuleGB gb = ModuleGB::compute({{x}, {y}}, {0}, p->weights());
  CHECK(gb.elements().size() == 2);
  CHECK(gb.contains({x * y + y * y}));
  CHECK_FALSE(gb.contains({p->constant(1)}));

  ModuleGB mono = ModuleGB::compute({{x * x}, {x * y}, {y * y * y}}, {0}, p->weights());
  CHECK(mono.elements().size() == 3);

  RingPtr q = poly_ring({"x", "y"}, {3, 2});
  Poly f = q->variable_poly(0) * q->variable_poly(0) - q->variable_poly(1) * q->variable_poly(1) * q->variable_poly(1);
  ModuleGB one = ModuleGB::compute({{f}}, {0}, q->weights());
  REQUIRE(one.elements().size() == 1);
  CHECK(one.contains({f}));
}

TEST_CASE("kernels of maps between free modules") {
  RingPtr p = poly_ring({"x", "y"}, {1, 1});
  Poly x = p->variable_poly(0), y = p->variable_poly(1);
  FreeMap f{FreeModule{p, {-1, -1}}, FreeModule{p, {0}}, {{x}, {y}}};
  auto k = kernel(f);
  REQUIRE(k.size() == 1);
  ModuleVector image = add(times(ModuleVector{x}, k[0][0]), times(ModuleVector{y}, k[0][1]));
  CHECK(is_zero(image));
  CHECK(vector_degree(k[0], std::vector<int>{1, 1}) == 2);

  FreeMap by_x{FreeModule{p, {-1}}, FreeModule{p, {0}}, {{x}}};
  CHECK(kernel(by_x).empty());
  RingPtr a = cusp();
  FreeMap by_x_cusp{FreeModule{a, {-3}}, FreeModule{a, {0}}, {{a->variable_poly(0)}}};
  CHECK(kernel(by_x_cusp).empty());
}

TEST_CASE("exact rank, kernels and subquotients") {
  Matrix m(3, 3);
  int v = 1;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = v++;
  CHECK(rank(m) == 2);
  auto ns = nullspace(m);
  REQUIRE(ns.size() == 1);
  CHECK(m.apply(ns[0]).empty());
  std::vector<SparseVec> rows;
  for (int i = 0; i < 3; ++i) rows.push_back(m.row(i));
  CHECK(rank_serial(rows) == rank_parallel(rows));
  CHECK(rank(Matrix::identity(4)) == 4);
}

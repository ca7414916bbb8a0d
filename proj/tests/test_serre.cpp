#include "doctest.h"

#include <fstream>
#include <sstream>

#include "json.hpp"

#include "gmdual/conventions.hpp"
#include "gmdual/error.hpp"
#include "gmdual/serre.hpp"
#include "support.hpp"

using namespace gmdual;
using namespace testing_support;

TEST_CASE("conventions ledger file matches the compiled constants") {
  std::ifstream in(std::string(GMDUAL_DATA_DIR) + "/conventions.json");
  REQUIRE(in);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(nlohmann::json::parse(ss.str()) == nlohmann::json::parse(conventions::ledger_json()));
}

TEST_CASE("canonical modules") {
  Window w(-6, 8);
  RingPtr k1 = poly_ring({"x"}, {1});
  DualizingData d1 = canonical_module(k1);
  CHECK(d1.cohen_macaulay);
  CHECK(d1.omega.hilbert(w) == PresentedModule::free(k1, {-1}).hilbert(w));

  RingPtr p = poly_ring({"x", "y"}, {1, 1});
  CHECK(canonical_module(p).omega.hilbert(w) == PresentedModule::free(p, {-2}).hilbert(w));

  RingPtr a = cusp();
  DualizingData dc = canonical_module(a);
  CHECK(dc.omega.hilbert(w) == PresentedModule::free(a, {1}).hilbert(w));
  CHECK(dc.a_invariant == 1);

  RingPtr c = quadric_cone();
  DualizingData dq = canonical_module(c);
  CHECK(dq.cohen_macaulay);
  CHECK(dq.omega.hilbert(w) == PresentedModule::free(c, {-1}).hilbert(w));
}

TEST_CASE("non Cohen-Macaulay rings are detected") {
  RingPtr p = poly_ring({"x", "y", "z"}, {1, 1, 1});
  Poly x = p->variable_poly(0), y = p->variable_poly(1), z = p->variable_poly(2);
  RingPtr a = GradedRing::create({"x", "y", "z"}, {1, 1, 1}, {x * x, x * y});
  CHECK_FALSE(canonical_module(a).cohen_macaulay);
  CHECK_THROWS_AS(serre_object(a, Window(-4, 2), 12), ComputationError);
  (void)z;
}

TEST_CASE("the Serre object of k[x] and k[x,y]") {
  RingPtr k1 = poly_ring({"x"}, {1});
  Window w(-10, 4);
  SerreObject s = serre_object(k1, w, 16);
  CHECK(s.approx.table() == table_of(w, [](int d) { return d <= 0 ? 1 : 0; }));
  CHECK(socle(s.approx) == table_of(w, {{0, 1}}));

  RingPtr p = poly_ring({"x", "y"}, {1, 1});
  SerreObject s2 = serre_object(p, w, 24);
  CHECK(s2.approx.table() == table_of(w, [](int d) { return d <= 0 ? 1 - d : 0; }));
  CHECK(socle(s2.approx).total() == 1);
}

TEST_CASE("Serre duality functor") {
  Window w(-6, 6);
  RingPtr p = poly_ring({"x", "y"}, {1, 1});
  DerivedObject d = serre_dual(PresentedModule::free(p, {0}), w);
  CHECK(d.single_spot() == -2);
  CHECK(d.table(-2) == PresentedModule::free(p, {-2}).hilbert(w));

  RingPtr k1 = poly_ring({"x"}, {1});
  DerivedObject dk = serre_dual(residue_field(k1), w);
  REQUIRE(dk.single_spot().has_value());
  CHECK(dk.table(*dk.single_spot()) == table_of(w, {{0, 1}}));

  for (const PresentedModule& f :
       {PresentedModule::free(p, {0}), PresentedModule::free(p, {3}), PresentedModule::quotient(p, {p->variable_poly(0)})}) {
    DerivedObject once = serre_dual(f, w);
    REQUIRE(once.single_spot().has_value());
    DerivedObject twice = serre_dual(once.spots.at(*once.single_spot()).module, w);
    REQUIRE(twice.single_spot().has_value());
    CHECK(twice.table(*twice.single_spot()) == f.hilbert(w));
  }
}

TEST_CASE("Matlis functor") {
  Window w(-6, 6);
  RingPtr k1 = poly_ring({"x"}, {1});
  auto da = matlis_functor(PresentedModule::free(k1, {0}), w, 20);
  CHECK(da.at(0).table() == table_of(w, [](int d) { return d <= 0 ? 1 : 0; }));
  auto dk = matlis_functor(residue_field(k1), w, 20);
  HilbertTable total(w);
  for (const auto& [i, x] : dk) total = total + x.table();
  CHECK(total == table_of(w, {{0, 1}}));
}

TEST_CASE("theorem A examples") {
  auto rep = verify_theorem_A(poly_ring({"x"}, {1}), Window(-10, 10), Window(-15, 15), 12);
  CHECK(rep.pass);
  CHECK(rep.comparisons.at(0).lhs == table_of(Window(-10, 10), [](int n) { return n >= 0 ? 1 : 0; }));
  auto rep2 = verify_theorem_A(poly_ring({"x", "y"}, {1, 1}), Window(-8, 8), Window(-15, 15), 12);
  CHECK(rep2.comparisons.at(0).lhs == table_of(Window(-8, 8), [](int n) { return n >= 0 ? n + 1 : 0; }));
  CHECK(verify_theorem_A(quadric_cone(), Window(-6, 6), Window(-15, 15), 12).pass);
}

TEST_CASE("theorem B examples") {
  Window w(-8, 8);
  RingPtr p = poly_ring({"x", "y"}, {1, 1});
  auto a = verify_theorem_B(PresentedModule::free(p, {0}), w, 24);
  CHECK(a.pass);
  CHECK(a.mode == "strong");
  auto q = verify_theorem_B(PresentedModule::quotient(p, {p->variable_poly(0)}), w, 24);
  CHECK(q.pass);
  CHECK(q.mode == "strong");
  RingPtr k1 = poly_ring({"x"}, {1});
  CHECK(verify_theorem_B(residue_field(k1), w, 24).pass);
}

TEST_CASE("involution examples over k[x]") {
  Window w(-8, 8);
  RingPtr k1 = poly_ring({"x"}, {1});
  Poly x = k1->variable_poly(0);
  for (const PresentedModule& f :
       {PresentedModule::free(k1, {0}), PresentedModule::free(k1, {2}), PresentedModule::quotient(k1, {x * x})})
    CHECK(involution_check(f, w, 24).pass);
}

TEST_CASE("punctured cohomology of P^1 and P^2") {
  RingPtr p1 = poly_ring({"x", "y"}, {1, 1});
  Window r(-6, 6);
  auto h = punctured_cohomology(p1, r, 20);
  REQUIRE(h.size() == 2);
  CHECK(h[0] == table_of(r, [](int d) { return std::max(d + 1, 0); }));
  CHECK(h[1] == table_of(r, [](int d) { return std::max(-d - 1, 0); }));
  RingPtr p2 = poly_ring({"x", "y", "z"}, {1, 1, 1});
  auto h2 = punctured_cohomology(p2, Window(-4, 2), 20);
  CHECK(h2[2].at(-3) == 1);
  CHECK(h2[1].is_zero());
  CHECK(verify_serre_puncture(poly_ring({"x", "y"}, {3, 2}), Window(-8, 8), 20).pass);
}

TEST_CASE("properness") {
  CHECK(properness_check(cusp()).pass);
  CHECK(properness_check(quadric_cone()).pass);
}

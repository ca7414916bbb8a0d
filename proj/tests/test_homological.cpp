#include "doctest.h"

#include "gmdual/complex.hpp"
#include "gmdual/error.hpp"
#include "gmdual/groebner.hpp"
#include "gmdual/local_cohomology.hpp"
#include "gmdual/resolution.hpp"
#include "support.hpp"

using namespace gmdual;
using namespace testing_support;

namespace {

/// d_i after d_{i+1} vanishes modulo the ideal.
bool resolution_is_complex(const Resolution& r) {
  for (std::size_t i = 0; i + 1 < r.maps.size(); ++i) {
    for (const ModuleVector& col : r.maps[i + 1]) {
      ModuleVector image = zero_vector(r.rank(static_cast<int>(i)));
      for (std::size_t j = 0; j < col.size(); ++j) image = add(image, times(r.maps[i][j], col[j]));
      for (auto& f : image) f = r.ring->normal_form(f);
      if (!is_zero(image)) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("resolution of the residue field over k[x,y]") {
  RingPtr p = poly_ring({"x", "y"}, {1, 1});
  Resolution r = free_resolution(residue_field(p), 4);
  CHECK(r.complete);
  REQUIRE(r.length() == 2);
  CHECK(r.twists[0] == std::vector<int>{0});
  CHECK(r.twists[1] == std::vector<int>{-1, -1});
  CHECK(r.twists[2] == std::vector<int>{-2});
  CHECK(resolution_is_complex(r));
}

TEST_CASE("principal quotient has a two-term resolution") {
  RingPtr p = poly_ring({"x", "y"}, {3, 2});
  Poly x = p->variable_poly(0), y = p->variable_poly(1);
  Resolution r = free_resolution(PresentedModule::quotient(p, {x * x - y * y * y}), 3);
  REQUIRE(r.length() == 1);
  CHECK(r.twists[1] == std::vector<int>{-6});
}

TEST_CASE("residue field over the cusp has an infinite resolution") {
  Resolution r = free_resolution(residue_field(cusp()), 4);
  CHECK_FALSE(r.complete);
  CHECK(r.rank(0) == 1);
  std::vector<int> f1 = r.twists[1];
  std::sort(f1.begin(), f1.end());
  CHECK(f1 == std::vector<int>{-3, -2});
  for (int i = 1; i <= 4; ++i) CHECK(r.rank(i) == 2);
  CHECK(resolution_is_complex(r));
}

TEST_CASE("resolution over the quadric cone has Betti numbers 1,3,4,4") {
  Resolution r = free_resolution(residue_field(quadric_cone()), 4);
  CHECK(r.rank(0) == 1);
  CHECK(r.rank(1) == 3);
  CHECK(r.rank(2) == 4);
  CHECK(r.rank(3) == 4);
  CHECK(resolution_is_complex(r));
}

TEST_CASE("interior exactness of a resolution on a window") {
  RingPtr a = quadric_cone();
  Resolution r = free_resolution(residue_field(a), 3);
  Window w(-2, 6);
  // alternating sum of the free modules in each degree equals the residue field up to the last kernel
  HilbertTable k = residue_field(a).hilbert(w);
  HilbertTable alt(w);
  for (int i = 0; i <= 3; ++i) {
    HilbertTable fi = PresentedModule::free(a, r.twists[static_cast<std::size_t>(i)]).hilbert(w);
    alt = i % 2 == 0 ? alt + fi : alt - fi;
  }
  // the kernel at step 3 starts in degree 4, so degrees below agree
  CHECK(alt.restricted(Window(-2, 3)) == k.restricted(Window(-2, 3)));
}

TEST_CASE("Koszul power complexes") {
  RingPtr k1 = poly_ring({"x"}, {1});
  KoszulPowerComplex c = koszul_power(k1, 2);
  CHECK(c.complex.is_complex());
  CHECK(c.complex.term(-1).generator_twists() == std::vector<int>{-2});
  CHECK(c.complex.cohomology(0).hilbert(Window(-2, 4)) == table_of(Window(-2, 4), {{0, 1}, {1, 1}}));

  RingPtr p = poly_ring({"x", "y"}, {1, 1});
  KoszulPowerComplex k = koszul_power(p, 1);
  CHECK(k.complex.term(0).generator_twists() == std::vector<int>{0});
  CHECK(k.complex.term(-1).generator_twists() == std::vector<int>{-1, -1});
  CHECK(k.complex.term(-2).generator_twists() == std::vector<int>{-2});
  Window w(-3, 5);
  CHECK(k.complex.cohomology(0).hilbert(w) == table_of(w, {{0, 1}}));
  CHECK(k.complex.cohomology(-1).is_zero());
  CHECK(k.complex.cohomology(-2).is_zero());
}

TEST_CASE("cohomology of trivial complexes") {
  RingPtr p = poly_ring({"x", "y"}, {1, 1});
  PresentedModule a = PresentedModule::free(p, {0});
  GradedComplex zero_diff(p, 0, {a, a}, {{zero_vector(1)}});
  CHECK(zero_diff.is_complex());
  Window w(-1, 4);
  CHECK(zero_diff.cohomology(0).hilbert(w) == a.hilbert(w));
  CHECK(zero_diff.cohomology(1).hilbert(w) == a.hilbert(w));
  GradedComplex empty(p, 0, {}, {});
  CHECK(empty.term(0).is_zero());
}

TEST_CASE("Ext examples") {
  RingPtr k1 = poly_ring({"x"}, {1});
  Window w(-4, 4);
  auto e = ext(residue_field(k1), PresentedModule::free(k1, {0}), 0, 1, w);
  CHECK(e[0].table.is_zero());
  CHECK(e[1].table == table_of(w, {{-1, 1}}));

  RingPtr p = poly_ring({"x", "y"}, {1, 1});
  PresentedModule k = residue_field(p);
  auto kk = ext(k, k, 0, 2, w);
  CHECK(kk[0].table == table_of(w, {{0, 1}}));
  CHECK(kk[1].table == table_of(w, {{-1, 2}}));
  CHECK(kk[2].table == table_of(w, {{-2, 1}}));

  // Ext^0(A, N) = N
  PresentedModule n = PresentedModule::quotient(p, {p->variable_poly(0) * p->variable_poly(1)});
  CHECK(ext(PresentedModule::free(p, {0}), n, 0, 0, w)[0].table == n.hilbert(w));

  // over a polynomial ring Ext^i(k, A) lives only at i = n, in degree -sum w
  auto ka = ext(k, PresentedModule::free(p, {0}), 0, 2, w);
  CHECK(ka[0].table.is_zero());
  CHECK(ka[1].table.is_zero());
  CHECK(ka[2].table == table_of(w, {{-2, 1}}));
}

TEST_CASE("Ext long exact sequence for 0 -> A(-d) -> A -> A/(f) -> 0") {
  RingPtr p = poly_ring({"x", "y"}, {1, 1});
  Poly f = p->variable_poly(0) * p->variable_poly(0) + p->variable_poly(1) * p->variable_poly(0);
  PresentedModule n = PresentedModule::quotient(p, {p->variable_poly(1)});
  Window w(-6, 6);
  // Hom(-, N) on the sequence: 0 -> Hom(A/f, N) -> N -> N(2) -> Ext^1(A/f, N) -> 0
  auto e = ext(PresentedModule::quotient(p, {f}), n, 0, 1, w);
  HilbertTable alt = e[0].table - n.hilbert(w) + n.twisted(2).hilbert(w) - e[1].table;
  CHECK(alt.is_zero());
}

TEST_CASE("minimal presentation removes unit relations") {
  RingPtr p = poly_ring({"x", "y"}, {1, 1});
  PresentedModule u = PresentedModule::cokernel(p, {0, -1}, {{p->variable_poly(0), p->constant(1)}});
  PresentedModule m = minimal_presentation(u);
  CHECK(m.num_generators() == 1);
  Window w(-2, 5);
  CHECK(m.hilbert(w) == u.hilbert(w));
}

#pragma once

#include <functional>
#include <map>

#include "gmdual/module.hpp"
#include "gmdual/ring.hpp"

namespace testing_support {

using namespace gmdual;

inline RingPtr poly_ring(std::vector<std::string> names, std::vector<int> weights) {
  return GradedRing::create(std::move(names), std::move(weights));
}

inline RingPtr cusp() {
  RingPtr p = poly_ring({"x", "y"}, {3, 2});
  Poly x = p->variable_poly(0), y = p->variable_poly(1);
  return GradedRing::create({"x", "y"}, {3, 2}, {x * x - y * y * y});
}

inline RingPtr quadric_cone() {
  RingPtr p = poly_ring({"x", "y", "z"}, {1, 1, 1});
  Poly x = p->variable_poly(0), y = p->variable_poly(1), z = p->variable_poly(2);
  return GradedRing::create({"x", "y", "z"}, {1, 1, 1}, {x * y - z * z});
}

/// Table on w with dims given by f.
inline HilbertTable table_of(Window w, const std::function<long long(int)>& f) {
  HilbertTable t(w);
  for (int d = w.lo; d <= w.hi; ++d) t[d] = f(d);
  return t;
}

inline HilbertTable table_of(Window w, const std::map<int, long long>& dims) {
  HilbertTable t(w);
  for (const auto& [d, n] : dims) t[d] = n;
  return t;
}

}  // namespace testing_support

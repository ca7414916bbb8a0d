#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "gmdual/groebner.hpp"
#include "gmdual/ring.hpp"

namespace gmdual {

/// Closed degree range [lo, hi].
struct Window {
  int lo = -20;
  int hi = 20;

  Window() = default;
  Window(int l, int h);
  bool contains(int d) const { return lo <= d && d <= hi; }
  int size() const { return hi - lo + 1; }
  bool covers(const Window& o) const { return lo <= o.lo && o.hi <= hi; }
  Window reflected() const { return Window(-hi, -lo); }
  bool operator==(const Window&) const = default;
};

/// Exact dimensions per degree on a window.
struct HilbertTable {
  Window window;
  std::vector<long long> dims;

  HilbertTable() = default;
  explicit HilbertTable(Window w) : window(w), dims(static_cast<std::size_t>(w.size()), 0) {}
  long long at(int d) const { return window.contains(d) ? dims[static_cast<std::size_t>(d - window.lo)] : 0; }
  long long& operator[](int d) { return dims[static_cast<std::size_t>(d - window.lo)]; }
  long long total() const;
  bool is_zero() const { return total() == 0; }
  HilbertTable restricted(Window w) const;
  /// Table of M(a) from the table of M: (M(a))_d = M_{a+d}.
  HilbertTable twisted(int a) const;
  HilbertTable reflected() const;
  HilbertTable operator+(const HilbertTable& o) const;
  HilbertTable operator-(const HilbertTable& o) const;
  HilbertTable negated() const;
  bool operator==(const HilbertTable& o) const = default;
  std::string str() const;
};

/// Rational closed form numerator(t) / prod_i (1 - t^{w_i}).
struct HilbertSeries {
  std::map<int, long long> numerator;  // exponent -> coefficient
  std::vector<int> weights;

  HilbertTable expand(Window w) const;
  std::string str() const;
};

/// A(a_1) (+) ... (+) A(a_r); the basis vector of A(a) sits in degree -a.
struct FreeModule {
  RingPtr ring;
  std::vector<int> twists;

  std::size_t rank() const { return twists.size(); }
  std::vector<int> basis_degrees() const;
};

/// Homogeneous map between free modules, given by the images of the source basis.
struct FreeMap {
  FreeModule source;
  FreeModule target;
  std::vector<ModuleVector> columns;
};

/// Finitely generated graded module coker(F1 -> F0) over A, where F0 has the
/// generator twists and the relations are homogeneous columns in F0.
class PresentedModule {
 public:
  PresentedModule() = default;

  static PresentedModule free(RingPtr ring, std::vector<int> twists);
  /// Relation twists are derived from the column degrees; zero columns are dropped.
  static PresentedModule cokernel(RingPtr ring, std::vector<int> generator_twists, std::vector<ModuleVector> relations);
  /// A / (f_1, ..., f_k).
  static PresentedModule quotient(RingPtr ring, std::vector<Poly> generators);

  const RingPtr& ring() const { return ring_; }
  const std::vector<int>& generator_twists() const { return twists_; }
  std::vector<int> generator_degrees() const;
  const std::vector<ModuleVector>& relations() const { return relations_; }
  std::vector<int> relation_twists() const;
  std::size_t num_generators() const { return twists_.size(); }

  /// Gröbner basis over the ambient polynomial ring of relations + I*F0.
  const ModuleGB& gb() const { return *gb_; }
  ModuleVector normal_form(ModuleVector v) const { return gb_->normal_form(std::move(v)); }

  /// M(a): (M(a))_d = M_{a+d}.
  PresentedModule twisted(int a) const;
  /// The same module seen over the ambient polynomial ring (ideal folded into the relations).
  PresentedModule over_ambient() const;
  /// Reinterpret this presentation over `ring` (which must share the ambient variables).
  PresentedModule over_ring(RingPtr ring) const;

  bool is_zero() const;
  HilbertTable hilbert(Window w) const;
  long long dim(int d) const;
  /// Smallest generator degree; meaningless for the zero module.
  int initial_degree() const;

  std::string describe() const;

 private:
  RingPtr ring_;
  std::vector<int> twists_;
  std::vector<ModuleVector> relations_;
  std::shared_ptr<const ModuleGB> gb_;

  void build();
};

}  // namespace gmdual

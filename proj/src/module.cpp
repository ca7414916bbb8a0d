#include "gmdual/module.hpp"

#include <algorithm>
#include <sstream>

#include "gmdual/error.hpp"

namespace gmdual {

Window::Window(int l, int h) : lo(l), hi(h) {
  if (l > h) throw ComputationError(ErrorKind::InvalidInput, "empty window " + std::to_string(l) + ".." + std::to_string(h));
}

long long HilbertTable::total() const {
  long long s = 0;
  for (auto v : dims) s += v < 0 ? -v : v;
  return s;
}

HilbertTable HilbertTable::restricted(Window w) const {
  HilbertTable t(w);
  for (int d = w.lo; d <= w.hi; ++d) t[d] = at(d);
  return t;
}

HilbertTable HilbertTable::twisted(int a) const {
  HilbertTable t(Window(window.lo - a, window.hi - a));
  for (int d = t.window.lo; d <= t.window.hi; ++d) t[d] = at(d + a);
  return t;
}

HilbertTable HilbertTable::reflected() const {
  HilbertTable t(window.reflected());
  for (int d = t.window.lo; d <= t.window.hi; ++d) t[d] = at(-d);
  return t;
}

HilbertTable HilbertTable::operator+(const HilbertTable& o) const {
  HilbertTable t(window);
  for (int d = window.lo; d <= window.hi; ++d) t[d] = at(d) + o.at(d);
  return t;
}

HilbertTable HilbertTable::operator-(const HilbertTable& o) const {
  HilbertTable t(window);
  for (int d = window.lo; d <= window.hi; ++d) t[d] = at(d) - o.at(d);
  return t;
}

HilbertTable HilbertTable::negated() const {
  HilbertTable t(window);
  for (int d = window.lo; d <= window.hi; ++d) t[d] = -at(d);
  return t;
}

std::string HilbertTable::str() const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (int d = window.lo; d <= window.hi; ++d) {
    if (at(d) == 0) continue;
    os << (first ? "" : ", ") << d << ":" << at(d);
    first = false;
  }
  os << "}";
  return os.str();
}

HilbertTable HilbertSeries::expand(Window w) const {
  // coefficients of 1 / prod (1 - t^{w_i}) by the usual knapsack recurrence
  const int top = w.hi - (numerator.empty() ? 0 : numerator.begin()->first);
  std::vector<long long> denom(static_cast<std::size_t>(std::max(top, 0) + 1), 0);
  if (top >= 0) {
    denom[0] = 1;
    for (int wt : weights)
      for (int e = wt; e <= top; ++e) denom[static_cast<std::size_t>(e)] += denom[static_cast<std::size_t>(e - wt)];
  }
  HilbertTable t(w);
  for (int d = w.lo; d <= w.hi; ++d) {
    long long s = 0;
    for (const auto& [k, c] : numerator) {
      int e = d - k;
      if (e >= 0 && e <= top) s += c * denom[static_cast<std::size_t>(e)];
    }
    t[d] = s;
  }
  return t;
}

std::string HilbertSeries::str() const {
  std::ostringstream os;
  os << "(";
  bool first = true;
  for (const auto& [k, c] : numerator) {
    if (c == 0) continue;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    long long a = c < 0 ? -c : c;
    if (a != 1 || k == 0) os << a;
    if (k != 0) os << "t^" << k;
    first = false;
  }
  if (first) os << "0";
  os << ")/(";
  for (std::size_t i = 0; i < weights.size(); ++i) os << (i ? "(1-t^" : "(1-t^") << weights[i] << ")";
  os << ")";
  return os.str();
}

std::vector<int> FreeModule::basis_degrees() const {
  std::vector<int> d(twists.size());
  for (std::size_t i = 0; i < twists.size(); ++i) d[i] = -twists[i];
  return d;
}

PresentedModule PresentedModule::free(RingPtr ring, std::vector<int> twists) {
  return cokernel(std::move(ring), std::move(twists), {});
}

PresentedModule PresentedModule::cokernel(RingPtr ring, std::vector<int> generator_twists,
                                          std::vector<ModuleVector> relations) {
  PresentedModule m;
  m.ring_ = std::move(ring);
  m.twists_ = std::move(generator_twists);
  auto degs = m.generator_degrees();
  for (auto& r : relations) {
    if (r.size() != m.twists_.size())
      throw ComputationError(ErrorKind::InvalidInput, "relation has " + std::to_string(r.size()) +
                                                          " entries but the module has " +
                                                          std::to_string(m.twists_.size()) + " generators");
    for (auto& e : r) e = m.ring_->normal_form(e);
    if (gmdual::is_zero(r)) continue;
    if (!gmdual::is_homogeneous(r, degs))
      throw ComputationError(ErrorKind::InvalidInput, "non-homogeneous relation");
    m.relations_.push_back(std::move(r));
  }
  m.build();
  return m;
}

PresentedModule PresentedModule::quotient(RingPtr ring, std::vector<Poly> generators) {
  std::vector<ModuleVector> rel;
  for (auto& g : generators) {
    if (!g.is_zero() && !g.is_homogeneous())
      throw ComputationError(ErrorKind::InvalidInput, "non-homogeneous generator " + ring->str(g));
    rel.push_back(ModuleVector{std::move(g)});
  }
  return cokernel(std::move(ring), {0}, std::move(rel));
}

void PresentedModule::build() {
  std::vector<ModuleVector> gens = relations_;
  const std::size_t r = twists_.size();
  for (const auto& g : ring_->ideal_basis())
    for (std::size_t i = 0; i < r; ++i) {
      ModuleVector v(r);
      v[i] = g;
      gens.push_back(std::move(v));
    }
  gb_ = std::make_shared<const ModuleGB>(ModuleGB::compute(std::move(gens), generator_degrees(), ring_->weights()));
}

std::vector<int> PresentedModule::generator_degrees() const {
  std::vector<int> d(twists_.size());
  for (std::size_t i = 0; i < twists_.size(); ++i) d[i] = -twists_[i];
  return d;
}

std::vector<int> PresentedModule::relation_twists() const {
  auto degs = generator_degrees();
  std::vector<int> t;
  for (const auto& r : relations_) t.push_back(-*vector_degree(r, degs));
  return t;
}

PresentedModule PresentedModule::twisted(int a) const {
  auto t = twists_;
  for (auto& x : t) x += a;
  return cokernel(ring_, std::move(t), relations_);
}

PresentedModule PresentedModule::over_ambient() const {
  RingPtr p = ring_->ambient();
  std::vector<ModuleVector> rel = relations_;
  const std::size_t r = twists_.size();
  for (const auto& g : ring_->ideal_basis())
    for (std::size_t i = 0; i < r; ++i) {
      ModuleVector v(r);
      v[i] = g;
      rel.push_back(std::move(v));
    }
  return cokernel(std::move(p), twists_, std::move(rel));
}

PresentedModule PresentedModule::over_ring(RingPtr ring) const {
  if (ring->weights() != ring_->weights())
    throw ComputationError(ErrorKind::InvalidInput, "rings do not share variables");
  return cokernel(std::move(ring), twists_, relations_);
}

bool PresentedModule::is_zero() const {
  for (std::size_t i = 0; i < twists_.size(); ++i)
    if (!gb_->lead_divides(i, Monomial::one(ring_->nvars()))) return false;
  return true;
}

long long PresentedModule::dim(int d) const {
  long long n = 0;
  auto degs = generator_degrees();
  for (std::size_t i = 0; i < twists_.size(); ++i)
    for (const auto& m : ring_->monomials_of_degree(d - degs[i]))
      if (!gb_->lead_divides(i, m)) ++n;
  return n;
}

HilbertTable PresentedModule::hilbert(Window w) const {
  HilbertTable t(w);
  for (int d = w.lo; d <= w.hi; ++d) t[d] = dim(d);
  return t;
}

int PresentedModule::initial_degree() const {
  auto degs = generator_degrees();
  return degs.empty() ? 0 : *std::min_element(degs.begin(), degs.end());
}

std::string PresentedModule::describe() const {
  std::ostringstream os;
  os << "coker(" << relations_.size() << " relations) on twists [";
  for (std::size_t i = 0; i < twists_.size(); ++i) os << (i ? "," : "") << twists_[i];
  os << "]";
  return os.str();
}

}  // namespace gmdual

#include "gmdual/pieces.hpp"

#include <algorithm>

#include "gmdual/error.hpp"

namespace gmdual {

GradedPieces::GradedPieces(PresentedModule m) : m_(std::move(m)), gen_degrees_(m_.generator_degrees()) {}

const GradedPieces::Basis& GradedPieces::basis(int d) const {
  {
    std::lock_guard lock(mutex_);
    auto it = bases_.find(d);
    if (it != bases_.end()) return *it->second;
  }
  auto b = std::make_shared<Basis>();
  const auto& ring = *m_.ring();
  for (std::size_t i = 0; i < gen_degrees_.size(); ++i)
    for (const auto& mono : ring.monomials_of_degree(d - gen_degrees_[i]))
      if (!m_.gb().lead_divides(i, mono)) b->terms.emplace_back(i, mono);
  for (std::size_t k = 0; k < b->terms.size(); ++k) b->index.emplace(b->terms[k], static_cast<int>(k));
  std::lock_guard lock(mutex_);
  auto [it, fresh] = bases_.emplace(d, std::move(b));
  (void)fresh;
  return *it->second;
}

SparseVec GradedPieces::coordinates(const ModuleVector& v, int d) const {
  ModuleVector r = m_.normal_form(v);
  const Basis& b = basis(d);
  SparseVec out;
  for (std::size_t p = 0; p < r.size(); ++p)
    for (const auto& t : r[p].terms()) {
      auto it = b.index.find({p, t.mono});
      if (it == b.index.end())
        throw ComputationError(ErrorKind::InvalidInput, "vector is not homogeneous of degree " + std::to_string(d));
      out.emplace_back(it->second, t.coef);
    }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& c) { return a.first < c.first; });
  return out;
}

ModuleVector GradedPieces::element(int d, int k) const {
  const auto& [pos, mono] = basis(d).terms[static_cast<std::size_t>(k)];
  ModuleVector v(gen_degrees_.size());
  v[pos] = Poly::monomial(mono);
  return v;
}

ModuleVector GradedPieces::element(int d, const SparseVec& coords) const {
  const Basis& b = basis(d);
  std::vector<std::vector<PolyTerm>> parts(gen_degrees_.size());
  for (const auto& [k, c] : coords) {
    const auto& [pos, mono] = b.terms[static_cast<std::size_t>(k)];
    parts[pos].push_back(PolyTerm{mono, c});
  }
  ModuleVector v;
  for (auto& p : parts) v.push_back(Poly(std::move(p)));
  return v;
}

const LinearMap& GradedPieces::multiply(const Monomial& m, int d) const {
  const auto key = std::make_pair(d, m);
  {
    std::lock_guard lock(mutex_);
    auto it = products_.find(key);
    if (it != products_.end()) return *it->second;
  }
  const Basis& src = basis(d);
  const int e = d + m.degree();
  auto f = std::make_shared<LinearMap>(dim(e), static_cast<int>(src.terms.size()));
  for (std::size_t k = 0; k < src.terms.size(); ++k) {
    ModuleVector v(gen_degrees_.size());
    v[src.terms[k].first] = Poly::monomial(src.terms[k].second * m);
    f->columns[k] = coordinates(v, e);
  }
  std::lock_guard lock(mutex_);
  auto [it, fresh] = products_.emplace(key, std::move(f));
  (void)fresh;
  return *it->second;
}

LinearMap GradedPieces::multiply(const Poly& f, int d) const {
  if (f.is_zero()) throw ComputationError(ErrorKind::InvalidInput, "multiplication by zero has no degree");
  const int e = d + f.degree();
  LinearMap out(dim(e), dim(d));
  for (const auto& t : f.terms()) {
    const LinearMap& g = multiply(t.mono, d);
    for (int j = 0; j < out.cols(); ++j)
      out.columns[static_cast<std::size_t>(j)] = axpy(out.columns[static_cast<std::size_t>(j)], t.coef, g.columns[static_cast<std::size_t>(j)]);
  }
  return out;
}

}  // namespace gmdual

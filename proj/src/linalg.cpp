#include "gmdual/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace gmdual {

SparseVec unit_vector(int i) { return SparseVec{{i, Scalar(1)}}; }

SparseVec axpy(const SparseVec& a, const Scalar& c, const SparseVec& b) {
  if (is_zero(c) || b.empty()) return a;
  SparseVec out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, c * b[j].second);
      ++j;
    } else {
      Scalar s = a[i].second + c * b[j].second;
      if (!is_zero(s)) out.emplace_back(a[i].first, std::move(s));
      ++i;
      ++j;
    }
  }
  return out;
}

SparseVec scaled(const SparseVec& a, const Scalar& c) {
  if (is_zero(c)) return {};
  SparseVec out = a;
  for (auto& e : out) e.second *= c;
  return out;
}

Scalar coefficient(const SparseVec& v, int i) {
  auto it = std::lower_bound(v.begin(), v.end(), i, [](const auto& e, int k) { return e.first < k; });
  if (it != v.end() && it->first == i) return it->second;
  return Scalar(0);
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw std::logic_error("matrix shape mismatch");
  Matrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(i, k);
      if (gmdual::is_zero(a)) continue;
      for (int j = 0; j < o.cols_; ++j)
        if (!gmdual::is_zero(o(k, j))) r(i, j) += a * o(k, j);
    }
  return r;
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool Matrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const Scalar& s) { return gmdual::is_zero(s); });
}

SparseVec Matrix::apply(const SparseVec& v) const {
  SparseVec out;
  for (int i = 0; i < rows_; ++i) {
    Scalar s = 0;
    for (const auto& [j, x] : v) s += (*this)(i, j) * x;
    if (!gmdual::is_zero(s)) out.emplace_back(i, std::move(s));
  }
  return out;
}

SparseVec Matrix::column(int c) const {
  SparseVec out;
  for (int i = 0; i < rows_; ++i)
    if (!gmdual::is_zero((*this)(i, c))) out.emplace_back(i, (*this)(i, c));
  return out;
}

SparseVec Matrix::row(int r) const {
  SparseVec out;
  for (int j = 0; j < cols_; ++j)
    if (!gmdual::is_zero((*this)(r, j))) out.emplace_back(j, (*this)(r, j));
  return out;
}

LinearMap LinearMap::from_matrix(const Matrix& m) {
  LinearMap f(m.rows(), m.cols());
  for (int j = 0; j < m.cols(); ++j) f.columns[static_cast<std::size_t>(j)] = m.column(j);
  return f;
}

SparseVec LinearMap::apply(const SparseVec& v) const {
  SparseVec out;
  for (const auto& [j, c] : v) out = axpy(out, c, columns[static_cast<std::size_t>(j)]);
  return out;
}

LinearMap LinearMap::after(const LinearMap& g) const {
  LinearMap h(rows, g.cols());
  for (int j = 0; j < g.cols(); ++j) h.columns[static_cast<std::size_t>(j)] = apply(g.columns[static_cast<std::size_t>(j)]);
  return h;
}

Matrix LinearMap::dense() const {
  Matrix m(rows, cols());
  for (int j = 0; j < cols(); ++j)
    for (const auto& [i, c] : columns[static_cast<std::size_t>(j)]) m(i, j) = c;
  return m;
}

bool LinearMap::is_zero() const {
  return std::all_of(columns.begin(), columns.end(), [](const SparseVec& c) { return c.empty(); });
}

SparseVec Echelon::reduce(SparseVec v, SparseVec* combo) const {
  while (!v.empty()) {
    auto it = pivot_.find(v.front().first);
    if (it == pivot_.end()) break;
    const Row& row = rows_[it->second];
    Scalar c = v.front().second;
    v = axpy(v, -c, row.vec);
    if (combo) *combo = axpy(*combo, c, row.combo);
  }
  return v;
}

bool Echelon::insert(const SparseVec& v, const SparseVec& combo) {
  SparseVec absorbed;
  SparseVec r = reduce(v, &absorbed);
  if (r.empty()) return false;
  Scalar inv = 1 / r.front().second;
  Row row{scaled(r, inv), scaled(axpy(combo, Scalar(-1), absorbed), inv)};
  pivot_[row.vec.front().first] = static_cast<int>(rows_.size());
  rows_.push_back(std::move(row));
  return true;
}

std::vector<SparseVec> kernel_basis(std::span<const SparseVec> images) {
  Echelon ech;
  std::vector<SparseVec> kernel;
  for (std::size_t i = 0; i < images.size(); ++i) {
    SparseVec absorbed;
    SparseVec r = ech.reduce(images[i], &absorbed);
    SparseVec e = unit_vector(static_cast<int>(i));
    if (r.empty())
      kernel.push_back(axpy(e, Scalar(-1), absorbed));
    else
      ech.insert(images[i], e);
  }
  return kernel;
}

Subquotient::Subquotient(std::span<const SparseVec> cycles, std::span<const SparseVec> boundaries) {
  for (const auto& b : boundaries) ech_.insert(b);
  for (const auto& z : cycles)
    if (ech_.insert(z, unit_vector(static_cast<int>(reps_.size())))) reps_.push_back(z);
}

SparseVec Subquotient::coordinates(const SparseVec& v) const {
  SparseVec absorbed;
  SparseVec r = ech_.reduce(v, &absorbed);
  if (!r.empty()) throw std::logic_error("vector is not a cycle of this subquotient");
  return absorbed;
}

namespace {

void drop_empty(std::vector<SparseVec>& rows) {
  rows.erase(std::remove_if(rows.begin(), rows.end(), [](const SparseVec& r) { return r.empty(); }), rows.end());
}

std::size_t pick_pivot(const std::vector<SparseVec>& rows) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    int a = rows[i].front().first, b = rows[best].front().first;
    if (a < b || (a == b && rows[i].size() < rows[best].size())) best = i;
  }
  return best;
}

}  // namespace

int rank_serial(std::vector<SparseVec> rows) {
  int rank = 0;
  drop_empty(rows);
  while (!rows.empty()) {
    std::size_t p = pick_pivot(rows);
    std::swap(rows[p], rows.back());
    SparseVec pivot = std::move(rows.back());
    rows.pop_back();
    const int col = pivot.front().first;
    for (auto& r : rows) {
      if (r.front().first != col) continue;
      r = axpy(r, -r.front().second / pivot.front().second, pivot);
    }
    drop_empty(rows);
    ++rank;
  }
  return rank;
}

int rank_parallel(std::vector<SparseVec> rows) {
  int rank = 0;
  drop_empty(rows);
  while (!rows.empty()) {
    std::size_t p = pick_pivot(rows);
    std::swap(rows[p], rows.back());
    SparseVec pivot = std::move(rows.back());
    rows.pop_back();
    const int col = pivot.front().first;
    const long n = static_cast<long>(rows.size());
#pragma omp parallel for schedule(dynamic, 8)
    for (long i = 0; i < n; ++i) {
      SparseVec& r = rows[static_cast<std::size_t>(i)];
      if (r.front().first != col) continue;
      r = axpy(r, -r.front().second / pivot.front().second, pivot);
    }
    drop_empty(rows);
    ++rank;
  }
  return rank;
}

int rank(const Matrix& m) {
  std::vector<SparseVec> rows;
  rows.reserve(m.rows());
  for (int i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
  return rank_serial(std::move(rows));
}

std::vector<SparseVec> nullspace(const Matrix& m) {
  std::vector<SparseVec> cols;
  cols.reserve(m.cols());
  for (int j = 0; j < m.cols(); ++j) cols.push_back(m.column(j));
  return kernel_basis(cols);
}

}  // namespace gmdual

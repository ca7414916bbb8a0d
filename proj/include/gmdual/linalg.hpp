#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "gmdual/scalar.hpp"

namespace gmdual {

/// Sparse vector: (index, value) pairs, strictly increasing index, no zeros.
using SparseVec = std::vector<std::pair<int, Scalar>>;

SparseVec unit_vector(int i);
/// a + c*b
SparseVec axpy(const SparseVec& a, const Scalar& c, const SparseVec& b);
SparseVec scaled(const SparseVec& a, const Scalar& c);
Scalar coefficient(const SparseVec& v, int i);

/// Dense matrix over the rationals, row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}
  static Matrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Scalar& operator()(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Scalar& operator()(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

  Matrix operator*(const Matrix& o) const;
  Matrix transposed() const;
  bool is_zero() const;
  bool operator==(const Matrix& o) const = default;

  SparseVec apply(const SparseVec& v) const;
  SparseVec column(int c) const;
  SparseVec row(int r) const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Scalar> a_;
};

/// Sparse linear map stored by column images.
struct LinearMap {
  int rows = 0;
  std::vector<SparseVec> columns;

  LinearMap() = default;
  LinearMap(int r, int c) : rows(r), columns(static_cast<std::size_t>(c)) {}
  static LinearMap from_matrix(const Matrix& m);
  int cols() const { return static_cast<int>(columns.size()); }
  SparseVec apply(const SparseVec& v) const;
  /// this after g.
  LinearMap after(const LinearMap& g) const;
  Matrix dense() const;
  bool is_zero() const;
};

/// Incrementally built row-echelon basis with optional combination tracking.
/// Row k is stored normalized (pivot coefficient 1); `combo` records it as a
/// combination of tagged inserted vectors.
class Echelon {
 public:
  /// Head-reduces v against the basis.  If `combo` is non-null it receives the
  /// tagged coordinates of the part of v that was absorbed.
  SparseVec reduce(SparseVec v, SparseVec* combo = nullptr) const;

  /// Inserts v.  Returns false (and leaves the basis untouched) if v is dependent.
  bool insert(const SparseVec& v, const SparseVec& combo = {});

  bool contains(const SparseVec& v) const { return reduce(v).empty(); }
  int rank() const { return static_cast<int>(rows_.size()); }

 private:
  struct Row {
    SparseVec vec;
    SparseVec combo;
  };
  std::vector<Row> rows_;
  std::map<int, int> pivot_;  // pivot column -> row index
};

/// Kernel of the linear map sending basis vector i to images[i].
std::vector<SparseVec> kernel_basis(std::span<const SparseVec> images);

/// Quotient Z / B for B contained in Z, with a fixed basis of representatives.
class Subquotient {
 public:
  Subquotient() = default;
  Subquotient(std::span<const SparseVec> cycles, std::span<const SparseVec> boundaries);

  int dim() const { return static_cast<int>(reps_.size()); }
  const std::vector<SparseVec>& representatives() const { return reps_; }
  /// Coordinates of a cycle in the representative basis. Throws if v is not in Z.
  SparseVec coordinates(const SparseVec& v) const;

 private:
  Echelon ech_;
  std::vector<SparseVec> reps_;
};

/// Rank of the row set; serial reference elimination.
int rank_serial(std::vector<SparseVec> rows);
/// Same result as rank_serial; the elimination of each pivot column is spread over OpenMP threads.
int rank_parallel(std::vector<SparseVec> rows);

/// Rank of a dense matrix.
int rank(const Matrix& m);
/// Basis of {x : m x = 0}.
std::vector<SparseVec> nullspace(const Matrix& m);

}  // namespace gmdual

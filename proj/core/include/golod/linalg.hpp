#pragma once

// Exact sparse linear algebra over Q.

#include <cstddef>
#include <utility>
#include <vector>

#include "golod/ring.hpp"

namespace golod::linalg {

/// Sparse vector as (index, nonzero value) pairs sorted by index.
using SparseVector = std::vector<std::pair<std::size_t, Rational>>;

SparseVector scaled(const SparseVector& v, const Rational& c);
/// a + c * b
SparseVector axpy(const SparseVector& a, const Rational& c, const SparseVector& b);
bool is_zero(const SparseVector& v);

/// Incrementally built semi-echelon basis. Every stored row has a distinct
/// pivot (its first index) with pivot coefficient 1.
class Echelon {
 public:
  explicit Echelon(std::size_t dim = 0) : dim_(dim) {}

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }

  /// Residual of v after elimination against the stored rows.
  SparseVector reduce(const SparseVector& v) const;
  bool contains(const SparseVector& v) const { return reduce(v).empty(); }
  /// Adds v to the span. Returns true if the rank grew.
  bool insert(const SparseVector& v);

 private:
  struct Row {
    SparseVector vec;
  };
  std::size_t dim_;
  std::vector<Row> rows_;
  std::vector<std::pair<std::size_t, std::size_t>> pivots_;  // (pivot index, row), sorted
  const Row* row_for_pivot(std::size_t idx) const;
};

struct KernelResult {
  /// Basis of the kernel, in source coordinates.
  std::vector<SparseVector> basis;
  std::size_t rank = 0;
};

/// Kernel of the linear map sending source basis vector j to columns[j].
KernelResult kernel(const std::vector<SparseVector>& columns);

/// Rank of the span of the given vectors.
std::size_t rank(const std::vector<SparseVector>& vectors, std::size_t dim);

}  // namespace golod::linalg

#pragma once

#include <map>
#include <utility>
#include <vector>

#include "sgmap/ring.hpp"

namespace sgmap::exact {

/// Sparse integer matrix: only nonzero entries are stored, indexed by
/// (row, col).  Indices are checked against the declared shape.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols);

  static IntMatrix identity(int n);
  static IntMatrix from_dense(const std::vector<std::vector<Int>>& d);
  std::vector<std::vector<Int>> to_dense() const;

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  const Int& at(int r, int c) const;
  void set(int r, int c, Int v);
  void add(int r, int c, const Int& v);

  std::size_t nnz() const { return entries_.size(); }
  bool is_zero() const { return entries_.empty(); }

  /// Entries in (row, col) lexicographic order.
  const std::map<std::pair<int, int>, Int>& entries() const { return entries_; }

  IntMatrix transpose() const;
  IntMatrix mul(const IntMatrix& other) const;
  IntMatrix reduced_mod2() const;

  /// Matrix-vector product (v has length cols()).
  std::vector<Int> apply(const std::vector<Int>& v) const;

  bool operator==(const IntMatrix& other) const;

 private:
  void check_bounds(int r, int c) const;

  int rows_ = 0;
  int cols_ = 0;
  std::map<std::pair<int, int>, Int> entries_;
};

}  // namespace sgmap::exact

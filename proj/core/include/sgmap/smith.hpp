#pragma once

#include "sgmap/int_matrix.hpp"

namespace sgmap::exact {

/// Smith normal form U*A*V = S with U, V unimodular and S diagonal,
/// nonnegative, with each diagonal entry dividing the next.
/// U_inv and V_inv are accumulated alongside so A = U_inv * S * V_inv.
struct SNFDecomposition {
  IntMatrix U, S, V;
  IntMatrix U_inv, V_inv;
  bool has_transforms = false;

  /// Diagonal of S in order (only the min(rows,cols) prefix is meaningful).
  std::vector<Int> diagonal() const;
  int rank() const;
};

struct SNFOptions {
  /// Transform accumulation may be disabled to keep large runs cheap.
  bool want_transforms = true;
};

/// Pivot rule: smallest nonzero absolute value in the remaining submatrix,
/// ties broken by (row, col) lexicographic order.  Deterministic.
SNFDecomposition smith_normal_form(const IntMatrix& a, const SNFOptions& opts = {});

}  // namespace sgmap::exact

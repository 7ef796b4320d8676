#pragma once

// Independent test oracles: deliberately naive dense algorithms with no code
// shared with the production kernel paths they check.

#include <vector>

#include "sgmap/ring.hpp"

namespace naive {

using sgmap::Int;
using Dense = std::vector<std::vector<Int>>;

inline int rows(const Dense& a) { return static_cast<int>(a.size()); }
inline int cols(const Dense& a) { return a.empty() ? 0 : static_cast<int>(a[0].size()); }

inline Dense mul(const Dense& a, const Dense& b) {
  Dense out(rows(a), std::vector<Int>(cols(b), 0));
  for (int i = 0; i < rows(a); ++i)
    for (int k = 0; k < cols(a); ++k) {
      if (a[i][k] == 0) continue;
      for (int j = 0; j < cols(b); ++j) out[i][j] += a[i][k] * b[k][j];
    }
  return out;
}

// Fraction-free Bareiss elimination: rank over Q.
inline int rational_rank(Dense a) {
  int m = rows(a), n = cols(a);
  int rank = 0;
  Int prev = 1;
  for (int col = 0; col < n && rank < m; ++col) {
    int piv = -1;
    for (int i = rank; i < m; ++i)
      if (a[i][col] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[rank], a[piv]);
    for (int i = rank + 1; i < m; ++i) {
      for (int j = col + 1; j < n; ++j) a[i][j] = (a[rank][col] * a[i][j] - a[i][col] * a[rank][j]) / prev;
      a[i][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }
  return rank;
}

// Determinant by Bareiss (square input).
inline Int determinant(Dense a) {
  int n = rows(a);
  if (n == 0) return 1;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k] == 0) {
      int piv = -1;
      for (int i = k + 1; i < n; ++i)
        if (a[i][k] != 0) {
          piv = i;
          break;
        }
      if (piv < 0) return 0;
      std::swap(a[k], a[piv]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

// Textbook Smith normal form diagonal: first-nonzero pivoting and repeated
// gcd passes.  A different algorithm from the production kernel on purpose.
inline std::vector<Int> snf_diagonal(Dense a) {
  int m = rows(a), n = cols(a);
  std::vector<Int> diag;
  int t = 0;
  while (t < m && t < n) {
    // find any nonzero in the submatrix (first in reading order)
    int pr = -1, pc = -1;
    for (int i = t; i < m && pr < 0; ++i)
      for (int j = t; j < n; ++j)
        if (a[i][j] != 0) {
          pr = i;
          pc = j;
          break;
        }
    if (pr < 0) break;
    std::swap(a[t], a[pr]);
    for (int i = 0; i < m; ++i) std::swap(a[i][t], a[i][pc]);
    bool clean = false;
    while (!clean) {
      clean = true;
      for (int i = t + 1; i < m; ++i) {
        while (a[i][t] != 0) {
          if (abs(a[i][t]) < abs(a[t][t])) {
            std::swap(a[t], a[i]);
            clean = false;
          }
          if (a[i][t] == 0) break;
          Int q = a[i][t] / a[t][t];
          for (int j = 0; j < n; ++j) a[i][j] -= q * a[t][j];
          if (a[i][t] != 0) {
            std::swap(a[t], a[i]);
            clean = false;
          }
        }
      }
      for (int j = t + 1; j < n; ++j) {
        while (a[t][j] != 0) {
          if (abs(a[t][j]) < abs(a[t][t])) {
            for (int i = 0; i < m; ++i) std::swap(a[i][t], a[i][j]);
            clean = false;
          }
          if (a[t][j] == 0) break;
          Int q = a[t][j] / a[t][t];
          for (int i = 0; i < m; ++i) a[i][j] -= q * a[i][t];
          if (a[t][j] != 0) {
            for (int i = 0; i < m; ++i) std::swap(a[i][t], a[i][j]);
            clean = false;
          }
        }
      }
    }
    ++t;
  }
  // t leading diagonal entries are pinned; enforce the divisibility chain
  std::vector<Int> d;
  for (int i = 0; i < t; ++i) d.push_back(abs(a[i][i]));
  for (bool again = true; again;) {
    again = false;
    for (std::size_t i = 0; i + 1 < d.size(); ++i) {
      if (d[i] == 0 && d[i + 1] != 0) {
        std::swap(d[i], d[i + 1]);
        again = true;
        continue;
      }
      if (d[i] != 0 && d[i + 1] % d[i] != 0) {
        Int g = gcd(d[i], d[i + 1]);
        Int l = d[i] / g * d[i + 1];
        d[i] = g;
        d[i + 1] = l;
        again = true;
      }
    }
  }
  for (const Int& v : d)
    if (v != 0) diag.push_back(v);
  return diag;  // nonzero invariant factors in divisibility order
}

}  // namespace naive

#include "sgmap/smith.hpp"

#include <algorithm>
#include <map>
#include <memory>

namespace sgmap::exact {

std::vector<Int> SNFDecomposition::diagonal() const {
  int n = std::min(S.rows(), S.cols());
  std::vector<Int> d(n, 0);
  for (int i = 0; i < n; ++i) d[i] = S.at(i, i);
  return d;
}

int SNFDecomposition::rank() const {
  int r = 0;
  for (const Int& d : diagonal())
    if (d != 0) ++r;
  return r;
}

namespace {

// Row/column transform accumulators, kept dense.  U tracks row operations
// (S = U*A*V), U_inv the inverse column operations, likewise V / V_inv.
struct Transforms {
  std::vector<std::vector<Int>> u, u_inv, v, v_inv;

  Transforms(int m, int n) {
    auto ident = [](int k) {
      std::vector<std::vector<Int>> e(k, std::vector<Int>(k, 0));
      for (int i = 0; i < k; ++i) e[i][i] = 1;
      return e;
    };
    u = ident(m);
    u_inv = ident(m);
    v = ident(n);
    v_inv = ident(n);
  }

  void swap_rows(int i, int j) {
    std::swap(u[i], u[j]);
    for (auto& row : u_inv) std::swap(row[i], row[j]);
  }
  void swap_cols(int i, int j) {
    for (auto& row : v) std::swap(row[i], row[j]);
    std::swap(v_inv[i], v_inv[j]);
  }
  // row_dst += q * row_src on the working matrix
  void row_axpy(int dst, int src, const Int& q) {
    int m = static_cast<int>(u.size());
    for (int k = 0; k < m; ++k) u[dst][k] += q * u[src][k];
    for (int k = 0; k < m; ++k) u_inv[k][src] -= q * u_inv[k][dst];
  }
  // col_dst += q * col_src on the working matrix
  void col_axpy(int dst, int src, const Int& q) {
    int n = static_cast<int>(v.size());
    for (int k = 0; k < n; ++k) v[k][dst] += q * v[k][src];
    for (int k = 0; k < n; ++k) v_inv[src][k] -= q * v_inv[dst][k];
  }
  void negate_row(int i) {
    for (auto& x : u[i]) x = -x;
    for (auto& row : u_inv) row[i] = -row[i];
  }
};

// Dense working matrix; used below the 64x64 threshold.
struct DenseWork {
  int m, n;
  std::vector<std::vector<Int>> a;

  DenseWork(const IntMatrix& in) : m(in.rows()), n(in.cols()), a(in.to_dense()) {}

  Int get(int i, int j) const { return a[i][j]; }
  void swap_rows(int i, int j) { std::swap(a[i], a[j]); }
  void swap_cols(int i, int j) {
    for (int r = 0; r < m; ++r) std::swap(a[r][i], a[r][j]);
  }
  void row_axpy(int dst, int src, const Int& q) {
    for (int j = 0; j < n; ++j) a[dst][j] += q * a[src][j];
  }
  void col_axpy(int dst, int src, const Int& q) {
    for (int i = 0; i < m; ++i) a[i][dst] += q * a[i][src];
  }
  void negate_row(int i) {
    for (auto& x : a[i]) x = -x;
  }

  bool find_pivot(int t, int& pr, int& pc) const {
    bool found = false;
    Int best = 0;
    for (int i = t; i < m; ++i)
      for (int j = t; j < n; ++j) {
        if (a[i][j] == 0) continue;
        Int v = abs(a[i][j]);
        if (!found || v < best) {
          found = true;
          best = v;
          pr = i;
          pc = j;
        }
      }
    return found;
  }

  std::vector<int> col_support_below(int col, int from) const {
    std::vector<int> out;
    for (int i = from; i < m; ++i)
      if (a[i][col] != 0) out.push_back(i);
    return out;
  }
  std::vector<int> row_support_right(int row, int from) const {
    std::vector<int> out;
    for (int j = from; j < n; ++j)
      if (a[row][j] != 0) out.push_back(j);
    return out;
  }

  bool find_nondivisible(int t, const Int& d, int& pr) const {
    for (int i = t + 1; i < m; ++i)
      for (int j = t + 1; j < n; ++j)
        if (a[i][j] % d != 0) {
          pr = i;
          return true;
        }
    return false;
  }
};

// Sparse working matrix: row-major maps.  Column operations walk all rows,
// which is acceptable for the sizes this path actually sees.
struct SparseWork {
  int m, n;
  std::vector<std::map<int, Int>> rows;

  SparseWork(const IntMatrix& in) : m(in.rows()), n(in.cols()), rows(in.rows()) {
    for (const auto& [rc, v] : in.entries()) rows[rc.first][rc.second] = v;
  }

  Int get(int i, int j) const {
    auto it = rows[i].find(j);
    return it == rows[i].end() ? Int(0) : it->second;
  }
  void put(int i, int j, const Int& v) {
    if (v == 0)
      rows[i].erase(j);
    else
      rows[i][j] = v;
  }
  void swap_rows(int i, int j) { std::swap(rows[i], rows[j]); }
  void swap_cols(int i, int j) {
    for (auto& row : rows) {
      auto it_i = row.find(i);
      auto it_j = row.find(j);
      Int vi = it_i == row.end() ? Int(0) : it_i->second;
      Int vj = it_j == row.end() ? Int(0) : it_j->second;
      if (it_i != row.end()) row.erase(it_i);
      if (it_j != row.end()) row.erase(it_j);
      if (vi != 0) row[j] = vi;
      if (vj != 0) row[i] = vj;
    }
  }
  void row_axpy(int dst, int src, const Int& q) {
    for (const auto& [j, v] : rows[src]) {
      auto it = rows[dst].find(j);
      if (it == rows[dst].end()) {
        Int nv = q * v;
        if (nv != 0) rows[dst][j] = nv;
      } else {
        it->second += q * v;
        if (it->second == 0) rows[dst].erase(it);
      }
    }
  }
  void col_axpy(int dst, int src, const Int& q) {
    for (int i = 0; i < m; ++i) {
      auto it = rows[i].find(src);
      if (it == rows[i].end()) continue;
      Int add = q * it->second;
      auto dt = rows[i].find(dst);
      if (dt == rows[i].end()) {
        if (add != 0) rows[i][dst] = add;
      } else {
        dt->second += add;
        if (dt->second == 0) rows[i].erase(dt);
      }
    }
  }
  void negate_row(int i) {
    for (auto& [j, v] : rows[i]) v = -v;
  }

  // entries are visited in (row, col) order, so keeping the first minimum
  // realizes the lexicographic tie-break
  bool find_pivot(int t, int& pr, int& pc) const {
    bool found = false;
    Int best = 0;
    for (int i = t; i < m; ++i)
      for (const auto& [j, v] : rows[i]) {
        if (j < t) continue;
        Int av = abs(v);
        if (!found || av < best) {
          found = true;
          best = av;
          pr = i;
          pc = j;
        }
      }
    return found;
  }

  std::vector<int> col_support_below(int col, int from) const {
    std::vector<int> out;
    for (int i = from; i < m; ++i)
      if (rows[i].count(col)) out.push_back(i);
    return out;
  }
  std::vector<int> row_support_right(int row, int from) const {
    std::vector<int> out;
    for (const auto& [j, v] : rows[row])
      if (j >= from) out.push_back(j);
    return out;
  }

  bool find_nondivisible(int t, const Int& d, int& pr) const {
    for (int i = t + 1; i < m; ++i)
      for (const auto& [j, v] : rows[i]) {
        if (j <= t) continue;
        if (v % d != 0) {
          pr = i;
          return true;
        }
      }
    return false;
  }
};

template <class Work>
int snf_run(Work& w, Transforms* tr) {
  const int nmin = std::min(w.m, w.n);
  int t = 0;
  while (t < nmin) {
    int pr = 0, pc = 0;
    if (!w.find_pivot(t, pr, pc)) break;
    if (pr != t) {
      w.swap_rows(t, pr);
      if (tr) tr->swap_rows(t, pr);
    }
    if (pc != t) {
      w.swap_cols(t, pc);
      if (tr) tr->swap_cols(t, pc);
    }

    bool changed = false;
    Int piv = w.get(t, t);
    for (int i : w.col_support_below(t, t + 1)) {
      Int q = w.get(i, t) / piv;
      if (q != 0) {
        w.row_axpy(i, t, -q);
        if (tr) tr->row_axpy(i, t, -q);
      }
      if (w.get(i, t) != 0) changed = true;
    }
    if (changed) continue;
    for (int j : w.row_support_right(t, t + 1)) {
      Int q = w.get(t, j) / piv;
      if (q != 0) {
        w.col_axpy(j, t, -q);
        if (tr) tr->col_axpy(j, t, -q);
      }
      if (w.get(t, j) != 0) changed = true;
    }
    if (changed) continue;

    int bad_row = -1;
    if (w.find_nondivisible(t, piv, bad_row)) {
      w.row_axpy(t, bad_row, 1);
      if (tr) tr->row_axpy(t, bad_row, 1);
      continue;
    }

    if (piv < 0) {
      w.negate_row(t);
      if (tr) tr->negate_row(t);
    }
    ++t;
  }
  return t;
}

}  // namespace

SNFDecomposition smith_normal_form(const IntMatrix& a, const SNFOptions& opts) {
  const int m = a.rows();
  const int n = a.cols();
  SNFDecomposition out;
  out.has_transforms = opts.want_transforms;

  std::unique_ptr<Transforms> tr;
  if (opts.want_transforms) tr = std::make_unique<Transforms>(m, n);

  IntMatrix s(m, n);
  if (m < 64 && n < 64) {
    DenseWork w(a);
    int r = snf_run(w, tr.get());
    for (int i = 0; i < r; ++i) s.set(i, i, w.get(i, i));
  } else {
    SparseWork w(a);
    int r = snf_run(w, tr.get());
    for (int i = 0; i < r; ++i) s.set(i, i, w.get(i, i));
  }
  out.S = std::move(s);
  if (opts.want_transforms) {
    out.U = IntMatrix::from_dense(tr->u);
    out.U_inv = IntMatrix::from_dense(tr->u_inv);
    out.V = IntMatrix::from_dense(tr->v);
    out.V_inv = IntMatrix::from_dense(tr->v_inv);
  }
  return out;
}

}  // namespace sgmap::exact

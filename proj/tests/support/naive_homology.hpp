#pragma once

// Independent homology oracle for small complexes: dense boundary matrices
// built by direct enumeration, ranks by fraction-free elimination, torsion
// by the naive Smith diagonal.  Shares no computation path with the engine.

#include <map>
#include <set>

#include "naive.hpp"
#include "sgmap/simplicial_complex.hpp"

namespace naive {

struct HomologySummary {
  std::vector<int> betti;                     // over Q (== free ranks over Z)
  std::vector<std::vector<Int>> torsion;      // per degree
  std::vector<int> betti_mod2;                // over Z/2
};

inline HomologySummary homology_oracle(const sgmap::simp::SimplicialComplex& k) {
  using sgmap::simp::Simplex;
  const int dim = k.dim();
  HomologySummary out;
  if (dim < 0) return out;

  // enumerate faces by brute-force subsets of the top simplices
  std::vector<std::set<Simplex>> cells(dim + 1);
  for (const auto& top : k.tops()) {
    int n = static_cast<int>(top.size());
    for (int mask = 1; mask < (1 << n); ++mask) {
      Simplex f;
      for (int i = 0; i < n; ++i)
        if (mask & (1 << i)) f.push_back(top[i]);
      cells[static_cast<int>(f.size()) - 1].insert(f);
    }
  }
  std::vector<std::vector<Simplex>> cl(dim + 1);
  std::vector<std::map<Simplex, int>> index(dim + 1);
  for (int d = 0; d <= dim; ++d) {
    cl[d].assign(cells[d].begin(), cells[d].end());
    for (std::size_t i = 0; i < cl[d].size(); ++i) index[d][cl[d][i]] = static_cast<int>(i);
  }

  std::vector<Dense> bd(dim + 2);
  for (int d = 1; d <= dim; ++d) {
    bd[d].assign(cl[d - 1].size(), std::vector<Int>(cl[d].size(), 0));
    for (std::size_t j = 0; j < cl[d].size(); ++j) {
      const Simplex& s = cl[d][j];
      int sign = 1;
      for (std::size_t drop = 0; drop < s.size(); ++drop) {
        Simplex f;
        for (std::size_t i = 0; i < s.size(); ++i)
          if (i != drop) f.push_back(s[i]);
        bd[d][index[d - 1][f]][j] = sign;
        sign = -sign;
      }
    }
  }
  bd[dim + 1].assign(cl[dim].size(), std::vector<Int>(0));

  std::vector<int> rank(dim + 2, 0);
  for (int d = 1; d <= dim; ++d) rank[d] = rational_rank(bd[d]);

  for (int d = 0; d <= dim; ++d) {
    int nd = static_cast<int>(cl[d].size());
    out.betti.push_back(nd - rank[d] - rank[d + 1]);
    std::vector<Int> tors;
    if (d + 1 <= dim)
      for (const Int& v : snf_diagonal(bd[d + 1]))
        if (v >= 2) tors.push_back(v);
    out.torsion.push_back(tors);
  }

  // mod-2 ranks: reduce and eliminate over GF(2) naively
  auto rank2 = [](Dense a) {
    int m = rows(a), n = cols(a);
    for (auto& row : a)
      for (auto& x : row) x = ((x % 2) + 2) % 2;
    int r = 0;
    for (int c = 0; c < n && r < m; ++c) {
      int piv = -1;
      for (int i = r; i < m; ++i)
        if (a[i][c] == 1) {
          piv = i;
          break;
        }
      if (piv < 0) continue;
      std::swap(a[r], a[piv]);
      for (int i = 0; i < m; ++i)
        if (i != r && a[i][c] == 1)
          for (int j = 0; j < n; ++j) a[i][j] = (a[i][j] + a[r][j]) % 2;
      ++r;
    }
    return r;
  };
  std::vector<int> r2(dim + 2, 0);
  for (int d = 1; d <= dim; ++d) r2[d] = rank2(bd[d]);
  for (int d = 0; d <= dim; ++d)
    out.betti_mod2.push_back(static_cast<int>(cl[d].size()) - r2[d] - r2[d + 1]);
  return out;
}

}  // namespace naive

#include "sgmap/chain_complex.hpp"

#include <algorithm>
#include <map>

namespace sgmap::simp {

exact::IntMatrix ChainComplexData::boundary_matrix(int k) const {
  int rows = k >= 1 ? static_cast<int>(cell_count(k - 1)) : 0;
  int cols = static_cast<int>(cell_count(k));
  exact::IntMatrix m(rows, cols);
  if (k >= 1 && k <= top_degree()) {
    for (std::size_t j = 0; j < boundary[k].size(); ++j)
      for (const auto& [r, s] : boundary[k][j]) m.set(static_cast<int>(r), static_cast<int>(j), s);
  }
  return m;
}

std::optional<std::uint32_t> ChainComplexData::index_of(int k, const Simplex& s,
                                                        const LabelArena& arena) const {
  if (k < 0 || k > top_degree()) return std::nullopt;
  CellLess less{&arena};
  const auto& level = cells[k];
  auto it = std::lower_bound(level.begin(), level.end(), s, less);
  if (it == level.end() || *it != s) return std::nullopt;
  return static_cast<std::uint32_t>(it - level.begin());
}

namespace {

ChainComplexData build(const SimplicialComplex& k, const SimplicialComplex* killed) {
  ChainComplexData data;
  const int dim = k.dim();
  if (dim < 0) return data;
  data.cells.resize(dim + 1);
  data.boundary.resize(dim + 1);

  CellLess less{k.arena().get()};
  for (int d = 0; d <= dim; ++d) {
    if (killed == nullptr) {
      data.cells[d] = k.faces(d);
    } else {
      for (const auto& s : k.faces(d))
        if (!killed->contains(s)) data.cells[d].push_back(s);
    }
  }
  for (int d = 1; d <= dim; ++d) {
    const auto& below = data.cells[d - 1];
    data.boundary[d].resize(data.cells[d].size());
    for (std::size_t j = 0; j < data.cells[d].size(); ++j) {
      const Simplex& s = data.cells[d][j];
      int8_t sign = 1;
      for (std::size_t drop = 0; drop < s.size(); ++drop) {
        Simplex f;
        f.reserve(s.size() - 1);
        for (std::size_t i = 0; i < s.size(); ++i)
          if (i != drop) f.push_back(s[i]);
        auto it = std::lower_bound(below.begin(), below.end(), f, less);
        if (it != below.end() && *it == f) {
          data.boundary[d][j].push_back(
              {static_cast<std::uint32_t>(it - below.begin()), sign});
        }
        sign = static_cast<int8_t>(-sign);
      }
    }
  }

  // dd = 0 (in the relative case, after killed cells are dropped)
  for (int d = 2; d <= dim; ++d) {
    for (std::size_t j = 0; j < data.boundary[d].size(); ++j) {
      std::map<std::uint32_t, int> acc;
      for (const auto& [r, s] : data.boundary[d][j])
        for (const auto& [r2, s2] : data.boundary[d - 1][r]) acc[r2] += s * s2;
      for (const auto& [r2, v] : acc)
        if (v != 0) throw Error("chain_complex: dd != 0 (internal incidence defect)");
    }
  }
  return data;
}

}  // namespace

ChainComplexData chain_complex(const SimplicialComplex& k) { return build(k, nullptr); }

ChainComplexData relative_chain_complex(const SimplicialComplex& k, const SimplicialComplex& l) {
  if (k.arena() != l.arena())
    throw Error("relative_chain_complex: complexes must share an arena");
  if (!l.empty() && !k.has_subcomplex(l))
    throw Error("relative_chain_complex: second complex is not a subcomplex of the first");
  return build(k, &l);
}

}  // namespace sgmap::simp

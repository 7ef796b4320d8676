#pragma once

#include "sgmap/int_matrix.hpp"
#include "sgmap/simplicial_complex.hpp"

namespace sgmap::simp {

/// Graded boundary data extracted from a complex: cells per degree in the
/// global cell order and signed incidence columns.  Incidence signs follow
/// the alternating rule on the sorted vertex list.
struct ChainComplexData {
  std::vector<std::vector<Simplex>> cells;  // cells[k] sorted
  // boundary[k][j] = entries (row index into cells[k-1], sign) for column j
  std::vector<std::vector<std::vector<std::pair<std::uint32_t, std::int8_t>>>> boundary;

  int top_degree() const { return static_cast<int>(cells.size()) - 1; }
  std::size_t cell_count(int k) const {
    return (k >= 0 && k <= top_degree()) ? cells[k].size() : 0;
  }
  /// Boundary matrix C_k -> C_{k-1} (rows = cells[k-1], cols = cells[k]).
  exact::IntMatrix boundary_matrix(int k) const;
  std::optional<std::uint32_t> index_of(int k, const Simplex& s, const LabelArena& arena) const;
};

/// Chain complex of a simplicial complex; verifies dd = 0.
ChainComplexData chain_complex(const SimplicialComplex& k);

/// Quotient chain complex of a pair (K, L); L must be a subcomplex of K.
ChainComplexData relative_chain_complex(const SimplicialComplex& k, const SimplicialComplex& l);

}  // namespace sgmap::simp

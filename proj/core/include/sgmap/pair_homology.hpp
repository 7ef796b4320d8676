#pragma once

#include <optional>

#include "sgmap/fg_module.hpp"

namespace sgmap::exact {

/// Homology of a composable pair ker(d_out)/im(d_in), with representative
/// cycles and a projection mapping arbitrary cycles to coordinates in the
/// computed basis.  d_out acts on the ambient chain group (cols(d_out)
/// generators); d_in maps into it (rows(d_in) == cols(d_out)).
class PairHomology {
 public:
  struct Coords {
    std::vector<Int> free;
    std::vector<Int> torsion;
  };

  FGModule module;
  // representatives in the ambient basis; free generators then torsion
  std::vector<std::vector<Int>> free_reps;
  std::vector<std::vector<Int>> torsion_reps;

  /// Coordinates of a cycle in the computed basis.  Rejects non-cycles.
  Coords coordinates(const std::vector<Int>& z) const;

  // projection data (implementation detail, kept for coordinates())
  Ring ring = Ring::Z;
  int ambient = 0;
  IntMatrix v1_inv;
  std::vector<int> kernel_pos;
  std::vector<Int> d1;
  IntMatrix u2;
  std::vector<int> free_pos;
  std::vector<int> torsion_pos;
};

PairHomology homology_of_pair(const IntMatrix& d_in, const IntMatrix& d_out, Ring ring);

/// Exact solution of A x = b over the ring, if one exists.
std::optional<std::vector<Int>> solve_linear(const IntMatrix& a, const std::vector<Int>& b,
                                             Ring ring);

}  // namespace sgmap::exact

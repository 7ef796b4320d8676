#pragma once

#include <string>
#include <vector>

#include "sgmap/int_matrix.hpp"

namespace sgmap::exact {

/// Finitely generated module over Z or Z/2 in canonical form:
/// free rank plus an ascending divisibility chain of torsion orders.
/// Over Z/2 the torsion list is always empty (field case).
struct FGModule {
  Ring ring = Ring::Z;
  int free_rank = 0;
  std::vector<Int> torsion;

  bool is_free() const { return torsion.empty(); }
  bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
  bool operator==(const FGModule& o) const {
    return ring == o.ring && free_rank == o.free_rank && torsion == o.torsion;
  }
  std::string to_string() const;
};

/// Graded module H_0..H_top as a plain vector indexed by degree.
struct GradedModule {
  Ring ring = Ring::Z;
  std::vector<FGModule> by_degree;

  int top_degree() const { return static_cast<int>(by_degree.size()) - 1; }
  std::vector<int> free_ranks() const;
  bool torsion_free() const;
  bool operator==(const GradedModule& o) const {
    return ring == o.ring && by_degree == o.by_degree;
  }
};

/// Module presented by relations: cokernel of A acting on a free module of
/// rank rows(A).  Over Z/2 entries are reduced mod 2 first.
FGModule cokernel_presentation(const IntMatrix& a, Ring ring);

/// Degreewise tensor of two torsion-free graded modules:
/// rank_k = sum_{i+j=k} rank_i * rank_j.  Rejects torsion input.
GradedModule kunneth_free(const GradedModule& mx, const GradedModule& my);

}  // namespace sgmap::exact

#pragma once

#include <set>

#include "sgmap/chain_complex.hpp"
#include "sgmap/chains.hpp"
#include "sgmap/fg_module.hpp"
#include "sgmap/pair_homology.hpp"

namespace sgmap::simp {

/// Coordinates of a cycle class in a computed homology basis.
struct HCoords {
  std::vector<Int> free;
  std::vector<Int> torsion;
  bool is_zero() const;
};

struct HomologyOptions {
  /// Degrees in which explicit representative cycles are wanted.
  std::set<int> representative_degrees;
  /// Cycles whose homology coordinates are wanted (any degrees).
  std::vector<Chain> passengers;
};

struct GradedHomology {
  Ring ring = Ring::Z;
  exact::GradedModule modules;
  std::map<int, std::vector<Chain>> free_reps;
  std::map<int, std::vector<Chain>> torsion_reps;
  std::vector<HCoords> passenger_coords;

  const exact::FGModule& at(int k) const;
  std::vector<int> betti() const { return modules.free_ranks(); }
  bool torsion_free() const { return modules.torsion_free(); }
};

GradedHomology homology(const SimplicialComplex& k, Ring ring, const HomologyOptions& opts = {});
GradedHomology relative_homology(const SimplicialComplex& k, const SimplicialComplex& l,
                                 Ring ring, const HomologyOptions& opts = {});

/// Engine entry point on raw graded boundary data (used internally and for
/// quotient/dual complexes).
GradedHomology homology_of_data(const ChainComplexData& data, const LabelArena& arena, Ring ring,
                                const HomologyOptions& opts = {});

struct CohomologyOptions {
  std::set<int> representative_degrees;
  std::vector<Cocycle> passengers;  // cocycles to locate in the basis
};

struct GradedCohomology {
  Ring ring = Ring::Z;
  exact::GradedModule modules;  // H^0 .. H^top
  std::map<int, std::vector<Cocycle>> free_reps;
  std::map<int, std::vector<Cocycle>> torsion_reps;
  std::vector<HCoords> passenger_coords;

  const exact::FGModule& at(int k) const;
};

/// Cohomology as homology of the transposed, degree-reversed complex;
/// exact over Z (no universal-coefficients detour).
GradedCohomology cohomology(const SimplicialComplex& k, Ring ring,
                            const CohomologyOptions& opts = {});

}  // namespace sgmap::simp

#pragma once

#include "sgmap/map_spec.hpp"

namespace sgmap::oracle {

/// Explicit triangulation of the closed total manifold:
///   M0 = (W x F)  glued with  B_j = C_j x S_1 x .. x Cone(S_{a_j}) x .. x S_l1
/// along the seams C_j x F, where a_j is the factor capped over C_j.  The
/// flattened-tuple product makes every seam literally the same subcomplex in
/// both pieces.
struct TotalSpaceModel {
  model::SGSMapSpec spec;
  int m = 0;
  std::size_t base_tuple_len = 1;

  std::vector<simp::SimplicialComplex> spheres;     // S_1..S_l1
  std::vector<simp::VertexId> sphere_basepoints;    // least vertex per factor
  std::map<int, simp::VertexId> cone_apexes;        // assigned factors only
  std::map<int, simp::SimplicialComplex> cones;

  simp::SimplicialComplex fiber;                 // F
  simp::VertexId fiber_basepoint = 0;
  simp::SimplicialComplex piece_p;               // W x F
  std::vector<simp::SimplicialComplex> pieces_b; // per boundary component
  std::vector<simp::SimplicialComplex> seams;    // C_j x F

  simp::SimplicialComplex complex;               // M0
};

/// Build and structurally check the model; throws on invalid input and on
/// internal construction defects (seam mismatch, non-pseudomanifold output).
TotalSpaceModel build_total_space(const model::SGSMapSpec& spec);

/// Apply the fiber projection to a vertex of M0 (prefix of the tuple).
simp::VertexId project_to_base(const TotalSpaceModel& model, simp::VertexId v);

/// Push a chain on W through the interior section w -> (w, basepoint of F).
simp::Chain section_chain(const TotalSpaceModel& model, const simp::Chain& on_base);

/// Text export of M0 with piece/seam membership annotations as comments.
std::string render_total_space(const TotalSpaceModel& model);

}  // namespace sgmap::oracle

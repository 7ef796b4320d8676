#pragma once

#include <functional>
#include <map>
#include <optional>

#include "sgmap/arena.hpp"

namespace sgmap::simp {

/// Finite simplicial complex given by its maximal simplices.  Immutable
/// after construction; face lattices are computed lazily and cached.
class SimplicialComplex {
 public:
  SimplicialComplex(std::shared_ptr<LabelArena> arena, std::vector<Simplex> tops);

  const std::shared_ptr<LabelArena>& arena() const { return arena_; }
  bool empty() const { return tops_.empty(); }
  int dim() const { return dim_; }
  const std::vector<Simplex>& tops() const { return tops_; }
  /// All k-faces, sorted in the global cell order.
  const std::vector<Simplex>& faces(int k) const;
  const std::vector<VertexId>& vertices() const { return vertices_; }
  std::size_t total_cells() const;

  bool contains(const Simplex& s) const;
  std::optional<std::uint32_t> face_index(int k, const Simplex& s) const;
  bool has_subcomplex(const SimplicialComplex& other) const;

  long long euler_characteristic() const;
  int connected_components() const;
  bool is_connected() const { return connected_components() == 1; }

  struct PseudomanifoldCheck {
    bool pure = false;
    bool pseudomanifold = false;  // every codim-1 face in at most two tops
    bool closed = false;          // every codim-1 face in exactly two tops
    std::string detail;
  };
  PseudomanifoldCheck pseudomanifold_check() const;

  /// Subcomplex generated by codim-1 faces lying in exactly one top simplex.
  SimplicialComplex boundary_complex() const;
  /// Connected components of the boundary, ordered by lexicographically
  /// least vertex.
  std::vector<SimplicialComplex> boundary_components() const;

 private:
  std::shared_ptr<LabelArena> arena_;
  std::vector<Simplex> tops_;
  std::vector<VertexId> vertices_;
  int dim_ = -1;
  mutable std::map<int, std::vector<Simplex>> face_cache_;
};

/// Staircase (shuffle) triangulation of |K1| x |K2| under the global order.
/// Requires the two complexes to live on the same arena with disjoint atom
/// sets; associativity of iterated products holds on the nose because
/// product vertices are flattened tuples.
SimplicialComplex product(const SimplicialComplex& k1, const SimplicialComplex& k2);

/// Cone with a fresh apex atom, ordered after all existing vertices.
SimplicialComplex cone(const SimplicialComplex& k, const std::string& apex_name = "");
/// Apex vertex of the most recent cone over k: the cone stores no state, so
/// the builder returns both.
struct ConeResult {
  SimplicialComplex complex;
  VertexId apex;
};
ConeResult cone_with_apex(const SimplicialComplex& k, const std::string& apex_name = "");

/// Pushout of K1 and K2 along a simplicial isomorphism of subcomplexes.
/// phi maps vertices of K2 into vertices of K1; the glued subcomplexes are
/// the full subcomplexes spanned by its domain and range.
SimplicialComplex glue(const SimplicialComplex& k1, const SimplicialComplex& k2,
                       const std::map<VertexId, VertexId>& phi);

SimplicialComplex disjoint_union(const SimplicialComplex& k1, const SimplicialComplex& k2);

/// Union of complexes whose labels already agree on the overlap.
SimplicialComplex complex_union(const SimplicialComplex& k1, const SimplicialComplex& k2);

/// Intersection (common faces) of two complexes on one arena.
SimplicialComplex complex_intersection(const SimplicialComplex& k1, const SimplicialComplex& k2);

SimplicialComplex barycentric_subdivision(const SimplicialComplex& k);

/// Simplices of k not containing v (the complement of the open star).
SimplicialComplex delete_vertex_star(const SimplicialComplex& k, VertexId v);

/// Full subcomplex spanned by a vertex subset.
SimplicialComplex full_subcomplex(const SimplicialComplex& k, const std::vector<VertexId>& verts);

}  // namespace sgmap::simp

#pragma once

#include "sgmap/map_spec.hpp"

namespace sgmap::model {

/// Base-manifold catalog.  Expressions:
///   disk(n)                   the n-simplex, one boundary sphere
///   sphere_times_interval(n)  S^{n-1} x D^1, two boundary spheres
///   surface(g,b)              orientable genus-g surface, b boundary circles
///                             (g <= 1 in this version)
///   torus                     surface(1,0)
/// Boundary components are named c0, c1, ... in least-vertex order.
struct CatalogEntry {
  std::string signature;
  std::string doc;
};
const std::vector<CatalogEntry>& catalog_entries();

/// Build a catalog base on the arena; throws on unknown expressions.
simp::SimplicialComplex build_catalog_base(const std::string& expr,
                                           std::shared_ptr<simp::LabelArena> arena);

}  // namespace sgmap::model

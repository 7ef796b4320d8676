#pragma once

#include <optional>

#include "sgmap/simplicial_complex.hpp"

namespace sgmap::model {

/// Sphere factors of the generic fiber: factor j (1-based) is a sphere of
/// dimension dims[j-1] >= 1.
struct FiberSpec {
  std::vector<int> dims;
  int l1() const { return static_cast<int>(dims.size()); }
};

/// For each boundary component C_j, the 1-based index of the sphere factor
/// that gets capped off by a disk over C_j.
struct BoundaryAssignment {
  std::vector<int> factor;
};

struct TargetMeta {
  std::string name;
  int dim = 0;
};

/// Input data of a sphere-product fibered map: base manifold W (compact,
/// connected, orientable, triangulated), its labelled boundary components
/// C_0..C_{l2-1}, the fiber factors, and the boundary assignment.  The
/// target manifold enters as descriptive metadata only.
struct SGSMapSpec {
  std::string name;
  simp::SimplicialComplex base;
  int n = 0;
  std::vector<simp::SimplicialComplex> boundary;
  std::vector<std::string> boundary_names;
  FiberSpec fiber;
  BoundaryAssignment assignment;
  std::optional<TargetMeta> target;

  int l1() const { return fiber.l1(); }
  int l2() const { return static_cast<int>(boundary.size()); }
};

/// Structural diagnostics; empty list means the spec is valid.
std::vector<std::string> validate(const SGSMapSpec& spec);

/// m = n + sum of the fiber dimensions.  Requires a valid spec.
int total_dimension(const SGSMapSpec& spec);

/// Product of boundary-of-simplex spheres in factor order 1..l1.  Atoms are
/// named deterministically ("f<j>v<i>"), so repeated calls on one arena
/// return the identical complex.
simp::SimplicialComplex generic_fiber(const SGSMapSpec& spec);
simp::SimplicialComplex fiber_sphere(std::shared_ptr<simp::LabelArena> arena, int factor,
                                     int dim);

/// Build a spec from a base complex: boundary components are derived and
/// ordered by least vertex, then rotated so that `c0_name` (a stable name
/// "c<k>" in the derived order) comes first.
SGSMapSpec make_spec(std::string name, simp::SimplicialComplex base, FiberSpec fiber,
                     BoundaryAssignment assignment, const std::string& c0_name = "",
                     std::optional<TargetMeta> target = std::nullopt);

}  // namespace sgmap::model

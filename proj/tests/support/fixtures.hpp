#pragma once

// Hand-coded small complexes shared across test suites.

#include <array>
#include <string>
#include <vector>

#include "sgmap/simplicial_complex.hpp"

namespace fixtures {

using sgmap::simp::LabelArena;
using sgmap::simp::Simplex;
using sgmap::simp::SimplicialComplex;
using sgmap::simp::VertexId;

inline std::vector<VertexId> atoms(LabelArena& arena, const std::string& prefix, int n) {
  std::vector<VertexId> out;
  for (int i = 0; i < n; ++i) out.push_back(arena.atom_vertex(arena.atom_named(prefix + std::to_string(i))));
  return out;
}

/// Boundary of the n-simplex on fresh atoms (an (n-1)-sphere).
inline SimplicialComplex sphere_boundary(std::shared_ptr<LabelArena> arena,
                                         const std::string& prefix, int n) {
  auto v = atoms(*arena, prefix, n + 1);
  std::vector<Simplex> tops;
  for (int drop = 0; drop <= n; ++drop) {
    Simplex s;
    for (int i = 0; i <= n; ++i)
      if (i != drop) s.push_back(v[i]);
    tops.push_back(s);
  }
  return SimplicialComplex(arena, tops);
}

/// Full n-simplex on fresh atoms.
inline SimplicialComplex full_simplex(std::shared_ptr<LabelArena> arena,
                                      const std::string& prefix, int n) {
  auto v = atoms(*arena, prefix, n + 1);
  return SimplicialComplex(arena, {Simplex(v.begin(), v.end())});
}

/// The 7-vertex triangulation of the torus.
inline SimplicialComplex torus7(std::shared_ptr<LabelArena> arena, const std::string& prefix) {
  auto v = atoms(*arena, prefix, 7);
  std::vector<Simplex> tops;
  for (int i = 0; i < 7; ++i) {
    tops.push_back({v[i], v[(i + 1) % 7], v[(i + 3) % 7]});
    tops.push_back({v[i], v[(i + 2) % 7], v[(i + 3) % 7]});
  }
  return SimplicialComplex(arena, tops);
}

/// The 6-vertex triangulation of the real projective plane.
inline SimplicialComplex rp2_6(std::shared_ptr<LabelArena> arena, const std::string& prefix) {
  auto v = atoms(*arena, prefix, 6);
  std::vector<std::array<int, 3>> f = {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
                                       {1, 2, 4}, {2, 3, 5}, {1, 3, 4}, {2, 4, 5}, {1, 3, 5}};
  std::vector<Simplex> tops;
  for (auto [a, b, c] : f) tops.push_back({v[a], v[b], v[c]});
  return SimplicialComplex(arena, tops);
}

}  // namespace fixtures

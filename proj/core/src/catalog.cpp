#include "sgmap/catalog.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace sgmap::model {

using simp::LabelArena;
using simp::Simplex;
using simp::SimplicialComplex;
using simp::VertexId;

namespace {

std::vector<VertexId> named_atoms(LabelArena& arena, const std::string& prefix, int n) {
  std::vector<VertexId> v;
  for (int i = 0; i < n; ++i)
    v.push_back(arena.atom_vertex(arena.atom_named(prefix + std::to_string(i))));
  return v;
}

SimplicialComplex simplex_disk(std::shared_ptr<LabelArena> arena, int n) {
  if (n < 1 || n > 8) throw Error("catalog: disk(n) supports 1 <= n <= 8");
  auto v = named_atoms(*arena, "w", n + 1);
  return SimplicialComplex(arena, {Simplex(v.begin(), v.end())});
}

SimplicialComplex boundary_sphere(std::shared_ptr<LabelArena> arena, const std::string& prefix,
                                  int n) {
  auto v = named_atoms(*arena, prefix, n + 1);
  std::vector<Simplex> tops;
  for (int drop = 0; drop <= n; ++drop) {
    Simplex s;
    for (int i = 0; i <= n; ++i)
      if (i != drop) s.push_back(v[i]);
    tops.push_back(std::move(s));
  }
  return SimplicialComplex(arena, tops);
}

SimplicialComplex sphere_times_interval(std::shared_ptr<LabelArena> arena, int n) {
  if (n < 2 || n > 6) throw Error("catalog: sphere_times_interval(n) supports 2 <= n <= 6");
  auto sphere = boundary_sphere(arena, "w", n);
  auto iv = named_atoms(*arena, "i", 2);
  SimplicialComplex interval(arena, {{iv[0], iv[1]}});
  return simp::product(sphere, interval);
}

SimplicialComplex closed_surface(std::shared_ptr<LabelArena> arena, int g) {
  if (g == 0) return boundary_sphere(arena, "w", 3);
  if (g == 1) {
    auto v = named_atoms(*arena, "w", 7);
    std::vector<Simplex> tops;
    for (int i = 0; i < 7; ++i) {
      tops.push_back({v[i], v[(i + 1) % 7], v[(i + 3) % 7]});
      tops.push_back({v[i], v[(i + 2) % 7], v[(i + 3) % 7]});
    }
    return SimplicialComplex(arena, tops);
  }
  throw Error("catalog: surface genus " + std::to_string(g) + " is not in this catalog (g <= 1)");
}

// b vertices whose closed stars are pairwise disjoint: pairwise graph
// distance >= 3.  Subdivide until enough exist.
SimplicialComplex surface_with_holes(std::shared_ptr<LabelArena> arena, int g, int b) {
  if (b < 0) throw Error("catalog: surface(g,b) needs b >= 0");
  SimplicialComplex k = closed_surface(arena, g);
  for (int attempt = 0; attempt < 6; ++attempt) {
    if (b == 0) return k;
    // adjacency over the current complex
    const auto& verts = k.vertices();
    std::map<VertexId, std::set<VertexId>> adj;
    for (const auto& e : k.faces(1)) {
      adj[e[0]].insert(e[1]);
      adj[e[1]].insert(e[0]);
    }
    std::vector<VertexId> picked;
    std::set<VertexId> blocked;
    for (VertexId v : verts) {
      if (static_cast<int>(picked.size()) == b) break;
      if (blocked.count(v)) continue;
      picked.push_back(v);
      blocked.insert(v);
      for (VertexId u : adj[v]) {
        blocked.insert(u);
        for (VertexId w : adj[u]) blocked.insert(w);
      }
    }
    if (static_cast<int>(picked.size()) == b) {
      SimplicialComplex out = k;
      for (VertexId v : picked) out = simp::delete_vertex_star(out, v);
      return out;
    }
    k = simp::barycentric_subdivision(k);
  }
  throw Error("catalog: could not place " + std::to_string(b) + " disjoint holes");
}

}  // namespace

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = {
      {"disk(n)", "the n-simplex; one boundary component (a sphere)"},
      {"sphere_times_interval(n)",
       "S^{n-1} x D^1 for n >= 2; boundary components c0 = S x {0}, c1 = S x {1}"},
      {"surface(g,b)",
       "orientable surface of genus g (g <= 1) with b disjoint open disks removed; "
       "boundary circles named c0..c{b-1} in least-vertex order"},
      {"torus", "closed orientable genus-1 surface (no boundary)"},
      {"file:<path>", "load a base complex from a file in the complex text format"},
  };
  return entries;
}

SimplicialComplex build_catalog_base(const std::string& expr,
                                     std::shared_ptr<LabelArena> arena) {
  std::string name = expr;
  std::vector<int> args;
  auto lp = expr.find('(');
  if (lp != std::string::npos) {
    if (expr.back() != ')') throw Error("catalog: malformed expression '" + expr + "'");
    name = expr.substr(0, lp);
    std::string inner = expr.substr(lp + 1, expr.size() - lp - 2);
    std::istringstream ss(inner);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      try {
        args.push_back(std::stoi(tok));
      } catch (...) {
        throw Error("catalog: bad argument '" + tok + "' in '" + expr + "'");
      }
    }
  }
  auto want = [&](std::size_t k) {
    if (args.size() != k)
      throw Error("catalog: '" + name + "' expects " + std::to_string(k) + " argument(s)");
  };
  if (name == "disk") {
    want(1);
    return simplex_disk(arena, args[0]);
  }
  if (name == "sphere_times_interval") {
    want(1);
    return sphere_times_interval(arena, args[0]);
  }
  if (name == "surface") {
    want(2);
    return surface_with_holes(arena, args[0], args[1]);
  }
  if (name == "torus") {
    want(0);
    return closed_surface(arena, 1);
  }
  throw Error("catalog: unknown base '" + expr + "'");
}

}  // namespace sgmap::model

#include "sgmap/simplicial_complex.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <unordered_set>

namespace sgmap::simp {

namespace {

std::string simplex_str(const LabelArena& arena, const Simplex& s) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) os << " ";
    os << arena.label(s[i]);
  }
  os << "}";
  return os.str();
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    for (std::size_t i = 0; i < n; ++i) parent[i] = static_cast<int>(i);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

SimplicialComplex::SimplicialComplex(std::shared_ptr<LabelArena> arena, std::vector<Simplex> tops)
    : arena_(std::move(arena)) {
  if (!arena_) throw Error("SimplicialComplex: null arena");
  CellLess less{arena_.get()};
  for (auto& s : tops) {
    std::sort(s.begin(), s.end(), [&](VertexId a, VertexId b) { return arena_->less(a, b); });
    for (std::size_t i = 1; i < s.size(); ++i)
      if (s[i] == s[i - 1])
        throw Error("SimplicialComplex: repeated vertex in simplex " +
                    simplex_str(*arena_, s));
    if (s.empty()) throw Error("SimplicialComplex: empty simplex");
  }
  std::sort(tops.begin(), tops.end(), less);
  tops.erase(std::unique(tops.begin(), tops.end()), tops.end());

  // drop non-maximal simplices; in the pure case (all the same size, the
  // common one for products and gluings) there is nothing to do
  bool mixed = false;
  for (std::size_t i = 1; i < tops.size(); ++i)
    if (tops[i].size() != tops[0].size()) {
      mixed = true;
      break;
    }
  if (!mixed) {
    tops_ = std::move(tops);
  } else {
    // collect all faces of the larger simplices level by level and filter
    std::map<std::size_t, std::set<Simplex>> faces_of_larger;
    std::size_t max_size = 0;
    for (const auto& s : tops) max_size = std::max(max_size, s.size());
    std::set<Simplex> frontier;
    for (std::size_t size = max_size; size >= 1; --size) {
      std::set<Simplex> next;
      for (const auto& s : frontier) {
        for (std::size_t drop = 0; drop < s.size(); ++drop) {
          Simplex f;
          for (std::size_t i = 0; i < s.size(); ++i)
            if (i != drop) f.push_back(s[i]);
          next.insert(std::move(f));
        }
      }
      for (const auto& s : tops)
        if (s.size() == size && !frontier.count(s) && size > 1) {
          for (std::size_t drop = 0; drop < s.size(); ++drop) {
            Simplex f;
            for (std::size_t i = 0; i < s.size(); ++i)
              if (i != drop) f.push_back(s[i]);
            next.insert(std::move(f));
          }
        }
      faces_of_larger[size] = frontier;
      frontier = std::move(next);
      if (size == 1) break;
    }
    std::vector<Simplex> maximal;
    for (const auto& s : tops)
      if (!faces_of_larger[s.size()].count(s)) maximal.push_back(s);
    tops_ = std::move(maximal);
  }

  std::set<VertexId> vs;
  for (const auto& s : tops_) {
    dim_ = std::max<int>(dim_, static_cast<int>(s.size()) - 1);
    vs.insert(s.begin(), s.end());
  }
  vertices_.assign(vs.begin(), vs.end());
  std::sort(vertices_.begin(), vertices_.end(),
            [&](VertexId a, VertexId b) { return arena_->less(a, b); });
}

const std::vector<Simplex>& SimplicialComplex::faces(int k) const {
  static const std::vector<Simplex> kEmpty;
  if (k < 0 || k > dim_) return kEmpty;
  auto it = face_cache_.find(k);
  if (it != face_cache_.end()) return it->second;

  CellLess less{arena_.get()};
  // build levels from the top down so each level is derived once
  for (int level = dim_; level >= k; --level) {
    if (face_cache_.count(level)) continue;
    std::vector<Simplex> out;
    if (level == dim_) {
      for (const auto& s : tops_)
        if (static_cast<int>(s.size()) - 1 == level) out.push_back(s);
    } else {
      const auto& above = face_cache_.at(level + 1);
      out.reserve(above.size() * (level + 2));
      for (const auto& s : above) {
        for (std::size_t drop = 0; drop < s.size(); ++drop) {
          Simplex f;
          f.reserve(s.size() - 1);
          for (std::size_t i = 0; i < s.size(); ++i)
            if (i != drop) f.push_back(s[i]);
          out.push_back(std::move(f));
        }
      }
      for (const auto& s : tops_)
        if (static_cast<int>(s.size()) - 1 == level) out.push_back(s);
      std::sort(out.begin(), out.end(), less);
      out.erase(std::unique(out.begin(), out.end()), out.end());
    }
    if (level == dim_) {
      std::sort(out.begin(), out.end(), less);
    }
    face_cache_[level] = std::move(out);
  }
  return face_cache_.at(k);
}

std::size_t SimplicialComplex::total_cells() const {
  std::size_t n = 0;
  for (int k = 0; k <= dim_; ++k) n += faces(k).size();
  return n;
}

bool SimplicialComplex::contains(const Simplex& s) const {
  return face_index(static_cast<int>(s.size()) - 1, s).has_value();
}

std::optional<std::uint32_t> SimplicialComplex::face_index(int k, const Simplex& s) const {
  if (k < 0 || k > dim_) return std::nullopt;
  const auto& level = faces(k);
  CellLess less{arena_.get()};
  auto it = std::lower_bound(level.begin(), level.end(), s, less);
  if (it == level.end() || *it != s) return std::nullopt;
  return static_cast<std::uint32_t>(it - level.begin());
}

bool SimplicialComplex::has_subcomplex(const SimplicialComplex& other) const {
  for (const auto& s : other.tops())
    if (!contains(s)) return false;
  return true;
}

long long SimplicialComplex::euler_characteristic() const {
  long long chi = 0;
  for (int k = 0; k <= dim_; ++k)
    chi += (k % 2 == 0 ? 1LL : -1LL) * static_cast<long long>(faces(k).size());
  return chi;
}

int SimplicialComplex::connected_components() const {
  if (vertices_.empty()) return 0;
  std::map<VertexId, int> idx;
  for (std::size_t i = 0; i < vertices_.size(); ++i) idx[vertices_[i]] = static_cast<int>(i);
  UnionFind uf(vertices_.size());
  for (const auto& s : tops_)
    for (std::size_t i = 1; i < s.size(); ++i) uf.unite(idx[s[0]], idx[s[i]]);
  std::set<int> roots;
  for (std::size_t i = 0; i < vertices_.size(); ++i) roots.insert(uf.find(static_cast<int>(i)));
  return static_cast<int>(roots.size());
}

SimplicialComplex::PseudomanifoldCheck SimplicialComplex::pseudomanifold_check() const {
  PseudomanifoldCheck out;
  if (tops_.empty()) {
    out.detail = "empty complex";
    return out;
  }
  out.pure = true;
  for (const auto& s : tops_)
    if (static_cast<int>(s.size()) - 1 != dim_) {
      out.pure = false;
      out.detail = "non-top maximal simplex " + simplex_str(*arena_, s);
      return out;
    }
  if (dim_ == 0) {
    out.pseudomanifold = true;
    out.closed = true;
    return out;
  }
  std::map<Simplex, int> facet_count;
  for (const auto& s : tops_) {
    for (std::size_t drop = 0; drop < s.size(); ++drop) {
      Simplex f;
      for (std::size_t i = 0; i < s.size(); ++i)
        if (i != drop) f.push_back(s[i]);
      ++facet_count[f];
    }
  }
  out.pseudomanifold = true;
  out.closed = true;
  for (const auto& [f, c] : facet_count) {
    if (c > 2) {
      out.pseudomanifold = false;
      out.closed = false;
      out.detail = "facet in " + std::to_string(c) + " top simplices: " + simplex_str(*arena_, f);
      return out;
    }
    if (c == 1) out.closed = false;
  }
  return out;
}

SimplicialComplex SimplicialComplex::boundary_complex() const {
  std::map<Simplex, int> facet_count;
  for (const auto& s : tops_) {
    if (static_cast<int>(s.size()) - 1 != dim_) continue;
    for (std::size_t drop = 0; drop < s.size(); ++drop) {
      Simplex f;
      for (std::size_t i = 0; i < s.size(); ++i)
        if (i != drop) f.push_back(s[i]);
      ++facet_count[f];
    }
  }
  std::vector<Simplex> tops;
  for (const auto& [f, c] : facet_count)
    if (c == 1) tops.push_back(f);
  return SimplicialComplex(arena_, std::move(tops));
}

std::vector<SimplicialComplex> SimplicialComplex::boundary_components() const {
  SimplicialComplex b = boundary_complex();
  if (b.empty()) return {};
  const auto& verts = b.vertices();
  std::map<VertexId, int> idx;
  for (std::size_t i = 0; i < verts.size(); ++i) idx[verts[i]] = static_cast<int>(i);
  UnionFind uf(verts.size());
  for (const auto& s : b.tops())
    for (std::size_t i = 1; i < s.size(); ++i) uf.unite(idx[s[0]], idx[s[i]]);
  // group tops by the component of their first vertex; order components by
  // lexicographically least vertex (verts is already sorted)
  std::map<int, std::vector<Simplex>> groups;
  std::map<int, std::size_t> first_seen;
  for (std::size_t i = 0; i < verts.size(); ++i) {
    int root = uf.find(static_cast<int>(i));
    if (!first_seen.count(root)) first_seen[root] = i;
  }
  for (const auto& s : b.tops()) groups[uf.find(idx[s[0]])].push_back(s);
  std::vector<std::pair<std::size_t, int>> order;
  for (const auto& [root, pos] : first_seen)
    if (groups.count(root)) order.push_back({pos, root});
  std::sort(order.begin(), order.end());
  std::vector<SimplicialComplex> out;
  for (const auto& [pos, root] : order) out.emplace_back(arena_, groups[root]);
  return out;
}

namespace {

void enumerate_paths(const Simplex& a, const Simplex& b, LabelArena& arena,
                     std::vector<Simplex>& out) {
  const int p = static_cast<int>(a.size()) - 1;
  const int q = static_cast<int>(b.size()) - 1;
  // monotone lattice paths from (0,0) to (p,q)
  std::vector<std::pair<int, int>> path{{0, 0}};
  std::function<void()> rec = [&]() {
    auto [i, j] = path.back();
    if (i == p && j == q) {
      Simplex s;
      s.reserve(path.size());
      for (auto [x, y] : path) s.push_back(arena.tuple_vertex({a[x], b[y]}));
      out.push_back(std::move(s));
      return;
    }
    if (i < p) {
      path.push_back({i + 1, j});
      rec();
      path.pop_back();
    }
    if (j < q) {
      path.push_back({i, j + 1});
      rec();
      path.pop_back();
    }
  };
  rec();
}

}  // namespace

SimplicialComplex product(const SimplicialComplex& k1, const SimplicialComplex& k2) {
  if (k1.arena() != k2.arena()) throw Error("product: complexes must share an arena");
  auto& arena = *k1.arena();
  // factors must not share atoms
  {
    std::set<AtomId> a1;
    for (VertexId v : k1.vertices())
      for (AtomId a : arena.tuple(v)) a1.insert(a);
    for (VertexId v : k2.vertices())
      for (AtomId a : arena.tuple(v))
        if (a1.count(a))
          throw Error("product: factors share the atom '" + arena.atom_name(a) + "'");
  }
  std::vector<Simplex> tops;
  for (const auto& a : k1.tops())
    for (const auto& b : k2.tops()) enumerate_paths(a, b, arena, tops);
  return SimplicialComplex(k1.arena(), std::move(tops));
}

ConeResult cone_with_apex(const SimplicialComplex& k, const std::string& apex_name) {
  auto& arena = *k.arena();
  std::string name = apex_name;
  if (name.empty()) {
    int i = 0;
    while (arena.find_atom("apex" + std::to_string(i))) ++i;
    name = "apex" + std::to_string(i);
  }
  AtomId apex_atom = arena.new_atom(name);
  VertexId apex = arena.atom_vertex(apex_atom);
  std::vector<Simplex> tops;
  for (const auto& s : k.tops()) {
    Simplex c = s;
    c.push_back(apex);  // apex is ordered last
    tops.push_back(std::move(c));
  }
  if (k.empty()) tops.push_back({apex});
  return {SimplicialComplex(k.arena(), std::move(tops)), apex};
}

SimplicialComplex cone(const SimplicialComplex& k, const std::string& apex_name) {
  return cone_with_apex(k, apex_name).complex;
}

SimplicialComplex glue(const SimplicialComplex& k1, const SimplicialComplex& k2,
                       const std::map<VertexId, VertexId>& phi) {
  if (k1.arena() != k2.arena()) throw Error("glue: complexes must share an arena");
  auto& arena = *k1.arena();
  // injectivity
  std::set<VertexId> range;
  for (const auto& [from, to] : phi) {
    if (!range.insert(to).second) throw Error("glue: vertex map is not injective");
  }
  // full subcomplexes spanned by domain and range
  std::set<VertexId> dom;
  for (const auto& [from, to] : phi) dom.insert(from);
  for (VertexId v : dom)
    if (!std::binary_search(k2.vertices().begin(), k2.vertices().end(), v,
                            [&](VertexId a, VertexId b) { return arena.less(a, b); }))
      throw Error("glue: map domain contains a vertex not in the second complex");

  // collect glued-region simplices on the K2 side and check their images
  std::set<Simplex> l1_from_l2;
  for (int k = 0; k <= k2.dim(); ++k) {
    for (const auto& s : k2.faces(k)) {
      bool inside = true;
      for (VertexId v : s)
        if (!dom.count(v)) {
          inside = false;
          break;
        }
      if (!inside) continue;
      Simplex img;
      for (VertexId v : s) img.push_back(phi.at(v));
      std::sort(img.begin(), img.end(),
                [&](VertexId a, VertexId b) { return arena.less(a, b); });
      for (std::size_t i = 1; i < img.size(); ++i)
        if (img[i] == img[i - 1])
          throw Error("glue: map collapses the simplex " + simplex_str(arena, s));
      if (!k1.contains(img))
        throw Error("glue: image of " + simplex_str(arena, s) +
                    " is not a simplex of the first complex");
      l1_from_l2.insert(img);
    }
  }
  // the range subcomplex must be matched exactly
  for (int k = 0; k <= k1.dim(); ++k) {
    for (const auto& s : k1.faces(k)) {
      bool inside = true;
      for (VertexId v : s)
        if (!range.count(v)) {
          inside = false;
          break;
        }
      if (inside && !l1_from_l2.count(s))
        throw Error("glue: simplex " + simplex_str(arena, s) +
                    " of the gluing region has no preimage (not an isomorphism)");
    }
  }
  // outside the gluing region the vertex sets must stay disjoint
  for (VertexId v : k2.vertices()) {
    if (dom.count(v)) continue;
    if (std::binary_search(k1.vertices().begin(), k1.vertices().end(), v,
                           [&](VertexId a, VertexId b) { return arena.less(a, b); }))
      throw Error("glue: vertex '" + arena.label(v) +
                  "' appears in both complexes outside the glued subcomplex");
  }

  std::vector<Simplex> tops = k1.tops();
  for (const auto& s : k2.tops()) {
    Simplex t;
    for (VertexId v : s) {
      auto it = phi.find(v);
      t.push_back(it == phi.end() ? v : it->second);
    }
    tops.push_back(std::move(t));
  }
  return SimplicialComplex(k1.arena(), std::move(tops));
}

SimplicialComplex disjoint_union(const SimplicialComplex& k1, const SimplicialComplex& k2) {
  if (k1.arena() != k2.arena()) throw Error("disjoint_union: complexes must share an arena");
  for (VertexId v : k2.vertices())
    if (std::binary_search(k1.vertices().begin(), k1.vertices().end(), v,
                           [&](VertexId a, VertexId b) { return k1.arena()->less(a, b); }))
      throw Error("disjoint_union: complexes share the vertex '" + k1.arena()->label(v) + "'");
  std::vector<Simplex> tops = k1.tops();
  tops.insert(tops.end(), k2.tops().begin(), k2.tops().end());
  return SimplicialComplex(k1.arena(), std::move(tops));
}

SimplicialComplex complex_union(const SimplicialComplex& k1, const SimplicialComplex& k2) {
  if (k1.arena() != k2.arena()) throw Error("complex_union: complexes must share an arena");
  std::vector<Simplex> tops = k1.tops();
  tops.insert(tops.end(), k2.tops().begin(), k2.tops().end());
  return SimplicialComplex(k1.arena(), std::move(tops));
}

SimplicialComplex complex_intersection(const SimplicialComplex& k1,
                                       const SimplicialComplex& k2) {
  if (k1.arena() != k2.arena())
    throw Error("complex_intersection: complexes must share an arena");
  std::vector<Simplex> tops;
  int kmax = std::min(k1.dim(), k2.dim());
  for (int k = kmax; k >= 0; --k)
    for (const auto& s : k1.faces(k))
      if (k2.contains(s)) tops.push_back(s);
  return SimplicialComplex(k1.arena(), std::move(tops));
}

SimplicialComplex barycentric_subdivision(const SimplicialComplex& k) {
  auto& arena = *k.arena();
  // barycenter vertices: originals for dim 0, fresh atoms for dim >= 1,
  // allocated by (dimension, cell order) so flags come out sorted
  std::map<Simplex, VertexId> bary;
  for (int d = 0; d <= k.dim(); ++d) {
    for (const auto& s : k.faces(d)) {
      if (d == 0) {
        bary[s] = s[0];
      } else {
        std::ostringstream os;
        os << "b(";
        for (std::size_t i = 0; i < s.size(); ++i) {
          if (i) os << '|';
          os << arena.label(s[i]);
        }
        os << ")";
        bary[s] = arena.atom_vertex(arena.atom_named(os.str()));
      }
    }
  }
  std::vector<Simplex> tops;
  // maximal flags inside each top simplex
  std::function<void(const Simplex&, Simplex&)> descend = [&](const Simplex& s,
                                                              Simplex& flag) {
    flag.push_back(bary[s]);
    if (s.size() == 1) {
      Simplex t(flag.rbegin(), flag.rend());
      tops.push_back(std::move(t));
    } else {
      for (std::size_t drop = 0; drop < s.size(); ++drop) {
        Simplex f;
        for (std::size_t i = 0; i < s.size(); ++i)
          if (i != drop) f.push_back(s[i]);
        descend(f, flag);
      }
    }
    flag.pop_back();
  };
  for (const auto& s : k.tops()) {
    Simplex flag;
    descend(s, flag);
  }
  return SimplicialComplex(k.arena(), std::move(tops));
}

SimplicialComplex delete_vertex_star(const SimplicialComplex& k, VertexId v) {
  std::vector<Simplex> tops;
  for (int d = k.dim(); d >= 0; --d)
    for (const auto& s : k.faces(d))
      if (!std::count(s.begin(), s.end(), v)) tops.push_back(s);
  return SimplicialComplex(k.arena(), std::move(tops));
}

SimplicialComplex full_subcomplex(const SimplicialComplex& k,
                                  const std::vector<VertexId>& verts) {
  std::set<VertexId> keep(verts.begin(), verts.end());
  std::vector<Simplex> tops;
  for (int d = k.dim(); d >= 0; --d)
    for (const auto& s : k.faces(d)) {
      bool inside = true;
      for (VertexId v : s)
        if (!keep.count(v)) {
          inside = false;
          break;
        }
      if (inside) tops.push_back(s);
    }
  return SimplicialComplex(k.arena(), std::move(tops));
}

}  // namespace sgmap::simp

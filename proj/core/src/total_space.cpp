#include "sgmap/total_space.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "sgmap/chains.hpp"
#include "sgmap/complex_io.hpp"

namespace sgmap::oracle {

using simp::SimplicialComplex;
using simp::VertexId;

TotalSpaceModel build_total_space(const model::SGSMapSpec& spec) {
  {
    auto diags = model::validate(spec);
    if (!diags.empty()) {
      std::string msg = "build_total_space: invalid map data:";
      for (const auto& d : diags) msg += "\n  " + d;
      throw Error(msg);
    }
  }
  auto arena = spec.base.arena();
  TotalSpaceModel model{spec};
  model.m = model::total_dimension(spec);
  model.base_tuple_len = arena->tuple(spec.base.vertices().front()).size();
  for (VertexId v : spec.base.vertices())
    if (arena->tuple(v).size() != model.base_tuple_len)
      throw Error("build_total_space: base vertices have mixed tuple lengths");

  for (int t = 1; t <= spec.l1(); ++t) {
    auto sphere = model::fiber_sphere(arena, t, spec.fiber.dims[t - 1]);
    model.sphere_basepoints.push_back(sphere.vertices().front());
    model.spheres.push_back(std::move(sphere));
  }
  std::set<int> assigned(spec.assignment.factor.begin(), spec.assignment.factor.end());
  for (int t : assigned) {
    auto res = simp::cone_with_apex(model.spheres[t - 1], "cap" + std::to_string(t));
    model.cones.emplace(t, std::move(res.complex));
    model.cone_apexes.emplace(t, res.apex);
  }

  std::optional<SimplicialComplex> fiber;
  for (int t = 1; t <= spec.l1(); ++t)
    fiber = fiber ? simp::product(*fiber, model.spheres[t - 1]) : model.spheres[t - 1];
  model.fiber = *fiber;
  {
    std::vector<VertexId> bp = model.sphere_basepoints;
    model.fiber_basepoint = arena->tuple_vertex(bp);
    if (model.fiber.vertices().front() != model.fiber_basepoint)
      throw Error("build_total_space: fiber basepoint is not the least vertex");
  }

  model.piece_p = simp::product(spec.base, model.fiber);

  SimplicialComplex total = model.piece_p;
  for (int j = 0; j < spec.l2(); ++j) {
    const int aj = spec.assignment.factor[j];
    std::optional<SimplicialComplex> gj;
    for (int t = 1; t <= spec.l1(); ++t) {
      const SimplicialComplex& factor = (t == aj) ? model.cones.at(t) : model.spheres[t - 1];
      gj = gj ? simp::product(*gj, factor) : factor;
    }
    SimplicialComplex bj = simp::product(spec.boundary[j], *gj);
    SimplicialComplex seam = simp::product(spec.boundary[j], model.fiber);
    // the seam must be present, cell for cell, in both adjacent pieces
    if (!model.piece_p.has_subcomplex(seam))
      throw Error("build_total_space: seam is not a subcomplex of the interior piece");
    if (!bj.has_subcomplex(seam))
      throw Error("build_total_space: seam is not a subcomplex of the cap piece");
    total = simp::complex_union(total, bj);
    model.pieces_b.push_back(std::move(bj));
    model.seams.push_back(std::move(seam));
  }
  model.complex = total;

  // structural guarantees: pieces meet exactly in the seams.  Distinct caps
  // sit over vertex-disjoint boundary components, so disjoint vertex sets
  // suffice there.
  for (int j = 0; j < spec.l2(); ++j) {
    const auto& bj = model.pieces_b[j];
    for (int k = 0; k <= bj.dim(); ++k)
      for (const auto& f : bj.faces(k))
        if (model.piece_p.contains(f) && !model.seams[j].contains(f))
          throw Error("build_total_space: interior and cap " + std::to_string(j) +
                      " overlap away from the seam");
    for (int j2 = j + 1; j2 < spec.l2(); ++j2) {
      const auto& v1 = model.pieces_b[j].vertices();
      for (VertexId v : model.pieces_b[j2].vertices())
        if (std::binary_search(v1.begin(), v1.end(), v, [&](VertexId a, VertexId b) {
              return arena->less(a, b);
            }))
          throw Error("build_total_space: caps " + std::to_string(j) + " and " +
                      std::to_string(j2) + " overlap");
    }
  }

  if (model.complex.dim() != model.m)
    throw Error("build_total_space: assembled complex has the wrong dimension");
  auto pm = model.complex.pseudomanifold_check();
  if (!pm.pure || !pm.pseudomanifold || !pm.closed)
    throw Error("build_total_space: output is not a closed pseudomanifold (" + pm.detail + ")");
  if (!model.complex.is_connected())
    throw Error("build_total_space: output is not connected");
  return model;
}

VertexId project_to_base(const TotalSpaceModel& model, VertexId v) {
  const auto& t = model.spec.base.arena()->tuple(v);
  std::vector<simp::AtomId> prefix(t.begin(), t.begin() + model.base_tuple_len);
  // re-intern the prefix as a vertex
  auto arena = model.spec.base.arena();
  std::vector<VertexId> parts;
  for (simp::AtomId a : prefix) parts.push_back(arena->atom_vertex(a));
  return arena->tuple_vertex(parts);
}

simp::Chain section_chain(const TotalSpaceModel& model, const simp::Chain& on_base) {
  simp::Chain point;
  point.degree = 0;
  point.terms.emplace(simp::Simplex{model.fiber_basepoint}, 1);
  return simp::cross_chain(*model.spec.base.arena(), on_base, point);
}

std::string render_total_space(const TotalSpaceModel& model) {
  std::ostringstream os;
  os << "# total space: m = " << model.m << ", pieces = interior + " << model.pieces_b.size()
     << " caps\n";
  os << render_complex(model.complex);
  auto annotate = [&](const std::string& name, const SimplicialComplex& k) {
    os << "# piece " << name << " tops " << k.tops().size() << "\n";
    for (const auto& s : k.tops()) {
      os << "#   ";
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) os << " ";
        os << model.spec.base.arena()->label(s[i]);
      }
      os << "\n";
    }
  };
  annotate("P", model.piece_p);
  for (std::size_t j = 0; j < model.pieces_b.size(); ++j)
    annotate("B" + std::to_string(j), model.pieces_b[j]);
  for (std::size_t j = 0; j < model.seams.size(); ++j)
    annotate("seam" + std::to_string(j), model.seams[j]);
  return os.str();
}

}  // namespace sgmap::oracle

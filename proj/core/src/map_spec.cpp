#include "sgmap/map_spec.hpp"

#include <algorithm>
#include <sstream>

#include "sgmap/chains.hpp"

namespace sgmap::model {

using simp::SimplicialComplex;

std::vector<std::string> validate(const SGSMapSpec& spec) {
  std::vector<std::string> out;
  auto complain = [&](const std::string& where, const std::string& what) {
    out.push_back(where + ": " + what);
  };

  if (spec.base.empty()) {
    complain("base", "empty complex");
    return out;
  }
  if (spec.base.dim() != spec.n)
    complain("base", "declared dimension " + std::to_string(spec.n) + " but the complex has dimension " +
                         std::to_string(spec.base.dim()));
  if (!spec.base.is_connected()) complain("base", "not connected");

  auto pm = spec.base.pseudomanifold_check();
  if (!pm.pure || !pm.pseudomanifold)
    complain("base", "not a pseudomanifold (" + pm.detail + ")");

  auto fc = simp::fundamental_class(spec.base);
  if (!fc.ok())
    complain("base", std::string("orientability: ") +
                         (fc.status == simp::FundamentalClass::Status::NonOrientable
                              ? "no coherent orientation exists"
                              : fc.detail));

  if (spec.fiber.l1() < 1) complain("fiber", "at least one sphere factor is required");
  for (int j = 0; j < spec.fiber.l1(); ++j)
    if (spec.fiber.dims[j] < 1)
      complain("fiber", "factor " + std::to_string(j + 1) + " has non-positive dimension");

  // the listed components must partition the derived boundary
  auto derived = spec.base.boundary_components();
  if (derived.size() != spec.boundary.size()) {
    complain("boundary", "listed " + std::to_string(spec.boundary.size()) +
                             " components but the base has " + std::to_string(derived.size()));
  } else {
    std::vector<bool> used(derived.size(), false);
    for (std::size_t j = 0; j < spec.boundary.size(); ++j) {
      bool matched = false;
      for (std::size_t k = 0; k < derived.size(); ++k) {
        if (used[k]) continue;
        if (spec.boundary[j].tops() == derived[k].tops()) {
          used[k] = true;
          matched = true;
          break;
        }
      }
      if (!matched)
        complain("boundary", "component " + std::to_string(j) +
                                 " is not a boundary component of the base");
    }
  }
  for (std::size_t j = 0; j < spec.boundary.size(); ++j) {
    const auto& c = spec.boundary[j];
    std::string where = "boundary[" + std::to_string(j) + "]";
    if (!c.is_connected()) complain(where, "not connected");
    if (c.dim() != spec.n - 1)
      complain(where, "dimension " + std::to_string(c.dim()) + ", expected " +
                          std::to_string(spec.n - 1));
    auto cpm = c.pseudomanifold_check();
    if (!cpm.pure || !cpm.pseudomanifold || !cpm.closed)
      complain(where, "not a closed pseudomanifold (" + cpm.detail + ")");
  }
  // vertex-disjointness of the components (gluing regions must not meet)
  for (std::size_t i = 0; i < spec.boundary.size(); ++i)
    for (std::size_t j = i + 1; j < spec.boundary.size(); ++j) {
      const auto& vi = spec.boundary[i].vertices();
      for (simp::VertexId v : spec.boundary[j].vertices())
        if (std::binary_search(vi.begin(), vi.end(), v,
                               [&](simp::VertexId a, simp::VertexId b) {
                                 return spec.base.arena()->less(a, b);
                               })) {
          complain("boundary", "components " + std::to_string(i) + " and " + std::to_string(j) +
                                   " share the vertex '" + spec.base.arena()->label(v) + "'");
          goto next_pair;
        }
    next_pair:;
    }

  if (static_cast<int>(spec.assignment.factor.size()) != spec.l2())
    complain("assignment", "expected " + std::to_string(spec.l2()) + " values, got " +
                               std::to_string(spec.assignment.factor.size()));
  for (std::size_t j = 0; j < spec.assignment.factor.size(); ++j)
    if (spec.assignment.factor[j] < 1 || spec.assignment.factor[j] > spec.l1())
      complain("assignment", "value " + std::to_string(spec.assignment.factor[j]) +
                                 " for component " + std::to_string(j) + " is outside 1.." +
                                 std::to_string(spec.l1()));
  return out;
}

int total_dimension(const SGSMapSpec& spec) {
  int m = spec.n;
  for (int d : spec.fiber.dims) m += d;
  return m;
}

simp::SimplicialComplex fiber_sphere(std::shared_ptr<simp::LabelArena> arena, int factor,
                                     int dim) {
  std::vector<simp::VertexId> v;
  for (int i = 0; i <= dim + 1; ++i)
    v.push_back(arena->atom_vertex(
        arena->atom_named("f" + std::to_string(factor) + "v" + std::to_string(i))));
  std::vector<simp::Simplex> tops;
  for (int drop = 0; drop <= dim + 1; ++drop) {
    simp::Simplex s;
    for (int i = 0; i <= dim + 1; ++i)
      if (i != drop) s.push_back(v[i]);
    tops.push_back(std::move(s));
  }
  return SimplicialComplex(std::move(arena), std::move(tops));
}

simp::SimplicialComplex generic_fiber(const SGSMapSpec& spec) {
  auto arena = spec.base.arena();
  std::optional<SimplicialComplex> fiber;
  for (int j = 1; j <= spec.l1(); ++j) {
    auto sphere = fiber_sphere(arena, j, spec.fiber.dims[j - 1]);
    fiber = fiber ? simp::product(*fiber, sphere) : sphere;
  }
  return *fiber;
}

SGSMapSpec make_spec(std::string name, simp::SimplicialComplex base, FiberSpec fiber,
                     BoundaryAssignment assignment, const std::string& c0_name,
                     std::optional<TargetMeta> target) {
  SGSMapSpec spec{std::move(name),
                  base,
                  base.dim(),
                  {},
                  {},
                  std::move(fiber),
                  std::move(assignment),
                  std::move(target)};
  auto comps = spec.base.boundary_components();
  std::vector<std::string> names;
  for (std::size_t k = 0; k < comps.size(); ++k) names.push_back("c" + std::to_string(k));
  if (!c0_name.empty()) {
    auto it = std::find(names.begin(), names.end(), c0_name);
    if (it == names.end())
      throw Error("make_spec: no boundary component named '" + c0_name + "'");
    std::size_t k = static_cast<std::size_t>(it - names.begin());
    std::swap(comps[0], comps[k]);
    std::swap(names[0], names[k]);
  }
  spec.boundary = std::move(comps);
  spec.boundary_names = std::move(names);
  return spec;
}

}  // namespace sgmap::model

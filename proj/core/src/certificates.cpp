#include "sgmap/certificates.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace sgmap::model {

std::string GeneratorTag::to_string() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::Base:
      os << "base(" << degree_param << "," << index << ")";
      break;
    case Kind::RelativeDual:
      os << "relative-dual(" << degree_param << "," << index << ")";
      break;
    case Kind::BoundaryProduct: {
      os << "boundary-product(j=" << j << ",T={";
      for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) os << ",";
        os << factors[i];
      }
      os << "})";
      break;
    }
  }
  return os.str();
}

namespace {

void require_valid(const SGSMapSpec& spec) {
  auto diags = validate(spec);
  if (!diags.empty()) {
    std::string msg = "invalid map data:";
    for (const auto& d : diags) msg += "\n  " + d;
    throw Error(msg);
  }
}

void require_free(const exact::GradedModule& m, const std::string& what) {
  if (!m.torsion_free())
    throw Error("freeness hypothesis violated: " + what + " has torsion");
}

}  // namespace

std::vector<SubmoduleCertificate> predict_submodules(const SGSMapSpec& spec, Ring ring) {
  require_valid(spec);
  const int m = total_dimension(spec);
  const int n = spec.n;

  auto h_base = simp::homology(spec.base, ring);
  require_free(h_base.modules, "H_*(W)");
  simp::SimplicialComplex bd = spec.base.boundary_complex();
  auto h_rel = simp::relative_homology(spec.base, bd, ring);
  require_free(h_rel.modules, "H_*(W, dW)");

  std::vector<SubmoduleCertificate> out;
  for (int i = 0; i <= spec.n; ++i) {
    int r = h_base.at(i).free_rank;
    if (r == 0) continue;
    SubmoduleCertificate cert{i, ring, {}};
    for (int idx = 0; idx < r; ++idx)
      cert.generators.push_back({GeneratorTag::Kind::Base, i, idx, 0, {}});
    out.push_back(std::move(cert));
  }
  for (int rdeg = 0; rdeg <= spec.n; ++rdeg) {
    int r = h_rel.at(rdeg).free_rank;
    if (r == 0) continue;
    SubmoduleCertificate cert{rdeg + (m - n), ring, {}};
    for (int idx = 0; idx < r; ++idx)
      cert.generators.push_back({GeneratorTag::Kind::RelativeDual, rdeg, idx, 0, {}});
    out.push_back(std::move(cert));
  }

  // boundary products: j in 1..l2-1, T a nonempty factor set avoiding the
  // factors capped over C_0 and C_j, subject to n < degree+1 < m
  std::map<int, SubmoduleCertificate> by_degree;
  for (int j = 1; j < spec.l2(); ++j) {
    std::set<int> avoid = {spec.assignment.factor[0], spec.assignment.factor[j]};
    std::vector<int> allowed;
    for (int t = 1; t <= spec.l1(); ++t)
      if (!avoid.count(t)) allowed.push_back(t);
    // lexicographic enumeration of nonempty subsets
    for (std::uint32_t mask = 1; mask < (1u << allowed.size()); ++mask) {
      std::vector<int> t_set;
      int fiber_sum = 0;
      for (std::size_t b = 0; b < allowed.size(); ++b)
        if (mask & (1u << b)) {
          t_set.push_back(allowed[b]);
          fiber_sum += spec.fiber.dims[allowed[b] - 1];
        }
      int degree = (n - 1) + fiber_sum;
      if (!(n < degree + 1 && degree + 1 < m)) continue;
      auto& cert = by_degree.try_emplace(degree, SubmoduleCertificate{degree, ring, {}}).first->second;
      cert.generators.push_back({GeneratorTag::Kind::BoundaryProduct, degree, 0, j, t_set});
    }
  }
  for (auto& [deg, cert] : by_degree) {
    // deterministic order: by component, then lexicographic factor set
    std::sort(cert.generators.begin(), cert.generators.end(),
              [](const GeneratorTag& a, const GeneratorTag& b) {
                return std::tie(a.j, a.factors) < std::tie(b.j, b.factors);
              });
    for (std::size_t i = 0; i < cert.generators.size(); ++i)
      cert.generators[i].index = static_cast<int>(i);
    out.push_back(cert);
  }
  return out;
}

SpecialGenericPrediction predict_special_generic(const SGSMapSpec& spec, Ring ring) {
  require_valid(spec);
  if (spec.l1() != 1)
    throw Error("predict_special_generic: complete answers are only stated for l1 = 1");
  if (spec.l2() < 1) throw Error("predict_special_generic: requires a nonempty boundary");
  const int m = total_dimension(spec);
  const int k = m - spec.n;

  auto h_base = simp::homology(spec.base, ring);
  require_free(h_base.modules, "H_*(W)");
  auto h_rel = simp::relative_homology(spec.base, spec.base.boundary_complex(), ring);
  require_free(h_rel.modules, "H_*(W, dW)");

  SpecialGenericPrediction out;
  out.modules.ring = ring;
  out.modules.by_degree.assign(m + 1, exact::FGModule{ring, 0, {}});
  for (int i = 0; i <= m; ++i) {
    int rank = h_base.at(i).free_rank + h_rel.at(i - k).free_rank;
    out.modules.by_degree[i].free_rank = rank;
  }
  out.certificates = predict_submodules(spec, ring);
  return out;
}

Decomposition decompose_nonsurjective(const SGSMapSpec& spec) {
  require_valid(spec);
  Decomposition out;
  std::set<int> image(spec.assignment.factor.begin(), spec.assignment.factor.end());
  out.factor_map.assign(spec.l1() + 1, 0);
  int next = 1;
  for (int t = 1; t <= spec.l1(); ++t) {
    if (image.count(t)) {
      out.factor_map[t] = next++;
    } else {
      out.extra_factors.push_back(t);
      out.extra_dims.push_back(spec.fiber.dims[t - 1]);
    }
  }
  if (out.extra_factors.empty()) {
    out.surjective = true;
    return out;
  }
  if (!image.empty()) {
    SGSMapSpec reduced = spec;
    reduced.name = spec.name.empty() ? "reduced" : spec.name + "-reduced";
    reduced.fiber.dims.clear();
    for (int t = 1; t <= spec.l1(); ++t)
      if (image.count(t)) reduced.fiber.dims.push_back(spec.fiber.dims[t - 1]);
    for (auto& a : reduced.assignment.factor) a = out.factor_map[a];
    out.reduced = std::move(reduced);
  }
  return out;
}

exact::GradedModule sphere_product_homology(const std::vector<int>& dims, Ring ring) {
  exact::GradedModule acc{ring, {exact::FGModule{ring, 1, {}}}};
  for (int d : dims) {
    exact::GradedModule sphere{ring, {}};
    sphere.by_degree.assign(d + 1, exact::FGModule{ring, 0, {}});
    sphere.by_degree[0].free_rank = 1;
    sphere.by_degree[d].free_rank += 1;
    acc = exact::kunneth_free(acc, sphere);
  }
  return acc;
}

CupTable cohomology_subalgebra(const SGSMapSpec& spec, Ring ring) {
  require_valid(spec);
  const auto& w = spec.base;
  simp::CohomologyOptions copts;
  for (int d = 0; d <= w.dim(); ++d) copts.representative_degrees.insert(d);
  auto coh = simp::cohomology(w, ring, copts);
  require_free(coh.modules, "H^*(W)");

  CupTable out;
  out.ring = ring;
  for (int d = 0; d <= w.dim(); ++d)
    for (int idx = 0; idx < coh.at(d).free_rank; ++idx) {
      out.basis.push_back({d, idx});
      out.cocycles.push_back(coh.free_reps.at(d)[idx]);
    }

  // coordinates of all pairwise cups via one passenger run; cups landing
  // above the dimension are zero in a trivial group
  std::size_t nb = out.basis.size();
  out.products.assign(nb, std::vector<std::vector<Int>>(nb));
  std::vector<simp::Cocycle> cups;
  std::vector<std::pair<std::size_t, std::size_t>> where;
  for (std::size_t a = 0; a < nb; ++a)
    for (std::size_t b = 0; b < nb; ++b) {
      if (out.basis[a].degree + out.basis[b].degree > w.dim()) continue;
      cups.push_back(simp::cup_product(w, out.cocycles[a], out.cocycles[b], ring));
      where.push_back({a, b});
    }
  simp::CohomologyOptions passopts;
  passopts.passengers = cups;
  auto located = simp::cohomology(w, ring, passopts);
  for (std::size_t i = 0; i < where.size(); ++i)
    out.products[where[i].first][where[i].second] = located.passenger_coords[i].free;
  return out;
}

}  // namespace sgmap::model

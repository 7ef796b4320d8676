#pragma once

#include "sgmap/fg_module.hpp"
#include "sgmap/homology.hpp"
#include "sgmap/map_spec.hpp"

namespace sgmap::model {

/// A guaranteed generator of H_*(M0).
///   base(i, idx):           image of the idx-th generator of H_i(W) under a
///                           section of the trivial bundle over the interior
///   relative-dual(r, idx):  class built from the idx-th generator of
///                           H_r(W, dW) times the whole fiber, living in
///                           degree r + (m - n); pairs against base classes
///   boundary-product(j, T): class of C_j x prod_{t in T} S_t at basepoints
///                           elsewhere, degree (n-1) + sum dims(T)
struct GeneratorTag {
  enum class Kind { Base, RelativeDual, BoundaryProduct };
  Kind kind = Kind::Base;
  int degree_param = 0;
  int index = 0;
  int j = 0;
  std::vector<int> factors;

  std::string to_string() const;
  bool operator==(const GeneratorTag& o) const = default;
};

struct SubmoduleCertificate {
  int degree = 0;
  Ring ring = Ring::Z;
  std::vector<GeneratorTag> generators;
  int rank() const { return static_cast<int>(generators.size()); }
  bool operator==(const SubmoduleCertificate& o) const = default;
};

/// Certificates for all degrees: base family, relative-dual family, and the
/// boundary-product family (one certificate per family and degree, emitted
/// in that order).  Requires H_*(W; ring) torsion-free.
std::vector<SubmoduleCertificate> predict_submodules(const SGSMapSpec& spec, Ring ring);

/// Complete graded answer for the one-factor case (l1 = 1, l2 >= 1):
/// H_i(M0) = H_i(W) + H_{i-(m-n)}(W, dW), with tagged generators.
struct SpecialGenericPrediction {
  exact::GradedModule modules;
  std::vector<SubmoduleCertificate> certificates;
};
SpecialGenericPrediction predict_special_generic(const SGSMapSpec& spec, Ring ring);

/// Factor splitting when the assignment misses fiber factors: M0 fibers
/// trivially with the unused sphere factors over the reduced total space.
struct Decomposition {
  bool surjective = false;
  std::vector<int> extra_factors;          // original 1-based indices
  std::vector<int> extra_dims;
  std::optional<SGSMapSpec> reduced;       // nullopt when nothing stays assigned
  std::vector<int> factor_map;             // old 1-based -> new 1-based (0 = removed)
};
Decomposition decompose_nonsurjective(const SGSMapSpec& spec);

/// Graded homology of a product of spheres (free, by convolution).
exact::GradedModule sphere_product_homology(const std::vector<int>& dims, Ring ring);

/// Multiplication table of H^*(W; ring) with cup products expressed in the
/// computed basis; the ring the total space inherits along the fiber
/// projection.  Requires freeness over the ring.
struct CupTable {
  Ring ring = Ring::Z;
  struct BasisElement {
    int degree = 0;
    int index = 0;
  };
  std::vector<BasisElement> basis;
  std::vector<simp::Cocycle> cocycles;                  // aligned with basis
  std::vector<std::vector<std::vector<Int>>> products;  // coords in the target degree basis
};
CupTable cohomology_subalgebra(const SGSMapSpec& spec, Ring ring);

}  // namespace sgmap::model

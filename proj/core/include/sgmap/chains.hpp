#pragma once

#include "sgmap/simplicial_complex.hpp"

namespace sgmap::simp {

/// Formal sum of simplices with integer coefficients (reduce mod 2 yourself
/// when working over Z/2; the arithmetic here is integral).
struct Chain {
  int degree = 0;
  std::map<Simplex, Int> terms;

  void add_term(const Simplex& s, const Int& c);
  bool empty() const { return terms.empty(); }
};

Chain chain_add(const Chain& a, const Chain& b);
Chain chain_scale(const Chain& a, const Int& c);
Chain chain_mod(const Chain& a, Ring ring);
bool chain_is_zero_mod(const Chain& a, Ring ring);

/// Simplicial boundary of a chain (does not need the ambient complex).
Chain boundary_chain(const Chain& c);

/// Cochain: simplex -> coefficient in a fixed degree.
struct Cocycle {
  int degree = 0;
  std::map<Simplex, Int> values;

  Int evaluate_simplex(const Simplex& s) const;
  Int evaluate(const Chain& c) const;
  void add_value(const Simplex& s, const Int& c);
  bool empty() const { return values.empty(); }
};

Cocycle cochain_add(const Cocycle& a, const Cocycle& b);
Cocycle cochain_scale(const Cocycle& a, const Int& c);
Cocycle cochain_mod(const Cocycle& a, Ring ring);

/// Coboundary relative to the ambient complex.
Cocycle coboundary(const SimplicialComplex& k, const Cocycle& a);
bool is_cocycle(const SimplicialComplex& k, const Cocycle& a, Ring ring);

/// Alexander-Whitney cup product on cochains (front face / back face under
/// the global vertex order).  Inputs must be cocycles.
Cocycle cup_product(const SimplicialComplex& k, const Cocycle& a, const Cocycle& b, Ring ring);

/// Cap product c ∩ f for |c| = m, |f| = q: evaluate f on front q-faces,
/// keep back (m-q)-faces.  Satisfies g(c ∩ f) = (f ∪ g)(c).
Chain cap_product(const Chain& c, const Cocycle& f);

/// Eilenberg-Zilber shuffle product of chains; lands in the staircase
/// triangulation of the product and satisfies the Leibniz rule
/// d(a x b) = da x b + (-1)^|a| a x db.
Chain cross_chain(LabelArena& arena, const Chain& a, const Chain& b);

/// Cone operator: appends the apex (which must follow every vertex of the
/// chain in the global order); d(cone z) = cone(dz) + (-1)^{k+1} z.
Chain cone_chain(const Chain& c, VertexId apex);

/// Push a chain through an injective, order-preserving vertex map.
Chain push_chain(const Chain& c, const std::function<VertexId(VertexId)>& f,
                 const LabelArena& arena);

/// Pull a cochain back along a (possibly collapsing) order-preserving
/// simplicial vertex map from src; degenerate images contribute zero.
Cocycle pullback_cochain(const SimplicialComplex& src, const Cocycle& a,
                         const std::function<VertexId(VertexId)>& f, const LabelArena& arena);

/// Fundamental class of a pseudomanifold via orientation propagation.
struct FundamentalClass {
  enum class Status { Ok, NotPseudomanifold, NonOrientable };
  Status status = Status::Ok;
  bool relative = false;  // boundary facets present: class rel boundary
  Chain cycle;
  std::string detail;
  bool ok() const { return status == Status::Ok; }
};
FundamentalClass fundamental_class(const SimplicialComplex& k);

}  // namespace sgmap::simp

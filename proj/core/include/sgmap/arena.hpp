#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sgmap/ring.hpp"

namespace sgmap::simp {

using AtomId = std::uint32_t;
using VertexId = std::uint32_t;

/// Session-wide vertex label registry.  Vertices are tuples of atoms;
/// products concatenate (flatten) tuples, so iterated products of the same
/// factors yield identical vertices regardless of association.  The global
/// vertex order is lexicographic on atom ids, and atom ids follow allocation
/// order, so the order is fixed by the construction sequence.  Passed
/// explicitly wherever new labels are created; never ambient.
class LabelArena {
 public:
  AtomId new_atom(const std::string& name);
  AtomId atom_named(const std::string& name);  // lookup or create
  std::optional<AtomId> find_atom(const std::string& name) const;
  const std::string& atom_name(AtomId a) const;
  std::size_t atom_count() const { return names_.size(); }

  VertexId atom_vertex(AtomId a);
  /// Flattening concatenation of component vertex tuples.
  VertexId tuple_vertex(const std::vector<VertexId>& components);
  const std::vector<AtomId>& tuple(VertexId v) const;
  std::string label(VertexId v) const;
  std::size_t vertex_count() const { return tuples_.size(); }

  bool less(VertexId a, VertexId b) const;
  int compare(VertexId a, VertexId b) const;

  static std::shared_ptr<LabelArena> create() { return std::make_shared<LabelArena>(); }

 private:
  VertexId intern(std::vector<AtomId> t);

  std::vector<std::string> names_;
  std::map<std::string, AtomId> by_name_;
  std::vector<std::vector<AtomId>> tuples_;
  std::map<std::vector<AtomId>, VertexId> by_tuple_;
};

/// A simplex is its sorted vertex list (global order).
using Simplex = std::vector<VertexId>;

/// Lexicographic order on simplices induced by the global vertex order.
struct CellLess {
  const LabelArena* arena;
  bool operator()(const Simplex& a, const Simplex& b) const;
};

}  // namespace sgmap::simp

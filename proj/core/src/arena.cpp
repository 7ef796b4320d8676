#include "sgmap/arena.hpp"

#include <algorithm>
#include <sstream>

namespace sgmap::simp {

AtomId LabelArena::new_atom(const std::string& name) {
  if (by_name_.count(name)) throw Error("LabelArena: duplicate atom name '" + name + "'");
  AtomId id = static_cast<AtomId>(names_.size());
  names_.push_back(name);
  by_name_[name] = id;
  return id;
}

AtomId LabelArena::atom_named(const std::string& name) {
  auto it = by_name_.find(name);
  if (it != by_name_.end()) return it->second;
  return new_atom(name);
}

std::optional<AtomId> LabelArena::find_atom(const std::string& name) const {
  auto it = by_name_.find(name);
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

const std::string& LabelArena::atom_name(AtomId a) const {
  if (a >= names_.size()) throw Error("LabelArena: bad atom id");
  return names_[a];
}

VertexId LabelArena::intern(std::vector<AtomId> t) {
  auto it = by_tuple_.find(t);
  if (it != by_tuple_.end()) return it->second;
  VertexId id = static_cast<VertexId>(tuples_.size());
  by_tuple_.emplace(t, id);
  tuples_.push_back(std::move(t));
  return id;
}

VertexId LabelArena::atom_vertex(AtomId a) {
  if (a >= names_.size()) throw Error("LabelArena: bad atom id");
  return intern({a});
}

VertexId LabelArena::tuple_vertex(const std::vector<VertexId>& components) {
  std::vector<AtomId> flat;
  for (VertexId v : components) {
    const auto& t = tuple(v);
    flat.insert(flat.end(), t.begin(), t.end());
  }
  return intern(std::move(flat));
}

const std::vector<AtomId>& LabelArena::tuple(VertexId v) const {
  if (v >= tuples_.size()) throw Error("LabelArena: bad vertex id");
  return tuples_[v];
}

std::string LabelArena::label(VertexId v) const {
  const auto& t = tuple(v);
  std::ostringstream os;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) os << '.';
    os << names_[t[i]];
  }
  return os.str();
}

int LabelArena::compare(VertexId a, VertexId b) const {
  if (a == b) return 0;
  const auto& ta = tuple(a);
  const auto& tb = tuple(b);
  std::size_t n = std::min(ta.size(), tb.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (ta[i] != tb[i]) return ta[i] < tb[i] ? -1 : 1;
  }
  if (ta.size() == tb.size()) return 0;
  return ta.size() < tb.size() ? -1 : 1;
}

bool LabelArena::less(VertexId a, VertexId b) const { return compare(a, b) < 0; }

bool CellLess::operator()(const Simplex& a, const Simplex& b) const {
  std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    int c = arena->compare(a[i], b[i]);
    if (c != 0) return c < 0;
  }
  return a.size() < b.size();
}

}  // namespace sgmap::simp

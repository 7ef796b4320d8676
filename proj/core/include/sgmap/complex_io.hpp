#pragma once

#include <iosfwd>
#include <string>

#include "sgmap/simplicial_complex.hpp"

namespace sgmap::simp {

/// Line-oriented text format:
///   # comment
///   dim <d>
///   vertices <label> <label> ...      (optional; fixes the global order)
///   <label> <label> ...               (one top simplex per line, sorted)
/// Labels are whitespace-free tokens.  render/parse round-trip exactly.
std::string render_complex(const SimplicialComplex& k);
SimplicialComplex parse_complex(const std::string& text, std::shared_ptr<LabelArena> arena);
SimplicialComplex load_complex(const std::string& path, std::shared_ptr<LabelArena> arena);
void save_complex(const SimplicialComplex& k, const std::string& path);

}  // namespace sgmap::simp

#include "sgmap/complex_io.hpp"

#include <fstream>
#include <sstream>

namespace sgmap::simp {

std::string render_complex(const SimplicialComplex& k) {
  std::ostringstream os;
  os << "dim " << k.dim() << "\n";
  os << "vertices";
  for (VertexId v : k.vertices()) os << " " << k.arena()->label(v);
  os << "\n";
  for (const auto& s : k.tops()) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (i) os << " ";
      os << k.arena()->label(s[i]);
    }
    os << "\n";
  }
  return os.str();
}

SimplicialComplex parse_complex(const std::string& text, std::shared_ptr<LabelArena> arena) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool saw_dim = false;
  int declared_dim = -2;
  std::vector<Simplex> tops;
  auto vertex_of = [&](const std::string& tok) {
    return arena->atom_vertex(arena->atom_named(tok));
  };
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok[0] == '#') continue;
    if (tok == "dim") {
      if (!(ls >> declared_dim))
        throw Error("parse_complex: line " + std::to_string(lineno) + ": bad dim header");
      saw_dim = true;
      continue;
    }
    if (tok == "vertices") {
      std::string v;
      while (ls >> v) vertex_of(v);  // allocation fixes the global order
      continue;
    }
    Simplex s;
    s.push_back(vertex_of(tok));
    std::string v;
    while (ls >> v) s.push_back(vertex_of(v));
    tops.push_back(std::move(s));
  }
  if (!saw_dim) throw Error("parse_complex: missing 'dim' header");
  SimplicialComplex k(std::move(arena), std::move(tops));
  if (k.dim() != declared_dim)
    throw Error("parse_complex: declared dim " + std::to_string(declared_dim) +
                " but top simplices give dim " + std::to_string(k.dim()));
  return k;
}

SimplicialComplex load_complex(const std::string& path, std::shared_ptr<LabelArena> arena) {
  std::ifstream in(path);
  if (!in) throw Error("load_complex: cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_complex(ss.str(), std::move(arena));
}

void save_complex(const SimplicialComplex& k, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("save_complex: cannot open '" + path + "'");
  out << render_complex(k);
}

}  // namespace sgmap::simp

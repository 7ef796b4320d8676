#include "sgmap/fg_module.hpp"

#include <sstream>

#include "sgmap/smith.hpp"

namespace sgmap::exact {

std::string FGModule::to_string() const {
  std::ostringstream os;
  bool first = true;
  if (free_rank > 0) {
    os << (ring == Ring::Z ? "Z" : "Z2");
    if (free_rank > 1) os << "^" << free_rank;
    first = false;
  }
  for (const Int& d : torsion) {
    if (!first) os << " + ";
    os << "Z/" << d;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

std::vector<int> GradedModule::free_ranks() const {
  std::vector<int> out;
  out.reserve(by_degree.size());
  for (const auto& m : by_degree) out.push_back(m.free_rank);
  return out;
}

bool GradedModule::torsion_free() const {
  for (const auto& m : by_degree)
    if (!m.torsion.empty()) return false;
  return true;
}

FGModule cokernel_presentation(const IntMatrix& a, Ring ring) {
  FGModule out;
  out.ring = ring;
  IntMatrix work = ring == Ring::Z2 ? a.reduced_mod2() : a;
  auto snf = smith_normal_form(work, {.want_transforms = false});
  auto diag = snf.diagonal();
  if (ring == Ring::Z) {
    int killed = 0;
    for (const Int& d : diag) {
      if (d == 0) continue;
      ++killed;
      if (d >= 2) out.torsion.push_back(d);
    }
    out.free_rank = a.rows() - killed;
  } else {
    // over the field only odd diagonal entries kill a generator
    int killed = 0;
    for (const Int& d : diag)
      if (d % 2 != 0) ++killed;
    out.free_rank = a.rows() - killed;
  }
  return out;
}

GradedModule kunneth_free(const GradedModule& mx, const GradedModule& my) {
  if (mx.ring != my.ring) throw Error("kunneth_free: coefficient rings differ");
  if (!mx.torsion_free() || !my.torsion_free())
    throw Error("kunneth_free: torsion input (Tor terms are out of scope)");
  GradedModule out;
  out.ring = mx.ring;
  if (mx.by_degree.empty() || my.by_degree.empty()) return out;
  int top = mx.top_degree() + my.top_degree();
  out.by_degree.assign(top + 1, FGModule{mx.ring, 0, {}});
  for (int i = 0; i <= mx.top_degree(); ++i)
    for (int j = 0; j <= my.top_degree(); ++j)
      out.by_degree[i + j].free_rank += mx.by_degree[i].free_rank * my.by_degree[j].free_rank;
  return out;
}

}  // namespace sgmap::exact

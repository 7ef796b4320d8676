#include "sgmap/chains.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace sgmap::simp {

void Chain::add_term(const Simplex& s, const Int& c) {
  if (c == 0) return;
  auto it = terms.find(s);
  if (it == terms.end()) {
    terms.emplace(s, c);
  } else {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

Chain chain_add(const Chain& a, const Chain& b) {
  Chain out = a;
  out.degree = a.terms.empty() ? b.degree : a.degree;
  for (const auto& [s, c] : b.terms) out.add_term(s, c);
  return out;
}

Chain chain_scale(const Chain& a, const Int& c) {
  Chain out;
  out.degree = a.degree;
  if (c == 0) return out;
  for (const auto& [s, v] : a.terms) out.terms.emplace(s, v * c);
  return out;
}

Chain chain_mod(const Chain& a, Ring ring) {
  if (ring == Ring::Z) return a;
  Chain out;
  out.degree = a.degree;
  for (const auto& [s, v] : a.terms) {
    Int m = ring_normalize(Ring::Z2, v);
    if (m != 0) out.terms.emplace(s, m);
  }
  return out;
}

bool chain_is_zero_mod(const Chain& a, Ring ring) {
  if (ring == Ring::Z) return a.terms.empty();
  for (const auto& [s, v] : a.terms)
    if (v % 2 != 0) return false;
  return true;
}

Chain boundary_chain(const Chain& c) {
  Chain out;
  out.degree = c.degree - 1;
  for (const auto& [s, v] : c.terms) {
    if (s.size() <= 1) continue;  // vertices have zero boundary
    int8_t sign = 1;
    for (std::size_t drop = 0; drop < s.size(); ++drop) {
      Simplex f;
      f.reserve(s.size() - 1);
      for (std::size_t i = 0; i < s.size(); ++i)
        if (i != drop) f.push_back(s[i]);
      out.add_term(f, v * sign);
      sign = static_cast<int8_t>(-sign);
    }
  }
  return out;
}

Int Cocycle::evaluate_simplex(const Simplex& s) const {
  auto it = values.find(s);
  return it == values.end() ? Int(0) : it->second;
}

Int Cocycle::evaluate(const Chain& c) const {
  Int out = 0;
  for (const auto& [s, v] : c.terms) out += v * evaluate_simplex(s);
  return out;
}

void Cocycle::add_value(const Simplex& s, const Int& c) {
  if (c == 0) return;
  auto it = values.find(s);
  if (it == values.end()) {
    values.emplace(s, c);
  } else {
    it->second += c;
    if (it->second == 0) values.erase(it);
  }
}

Cocycle cochain_add(const Cocycle& a, const Cocycle& b) {
  Cocycle out = a;
  for (const auto& [s, c] : b.values) out.add_value(s, c);
  return out;
}

Cocycle cochain_scale(const Cocycle& a, const Int& c) {
  Cocycle out;
  out.degree = a.degree;
  if (c == 0) return out;
  for (const auto& [s, v] : a.values) out.values.emplace(s, v * c);
  return out;
}

Cocycle cochain_mod(const Cocycle& a, Ring ring) {
  if (ring == Ring::Z) return a;
  Cocycle out;
  out.degree = a.degree;
  for (const auto& [s, v] : a.values) {
    Int m = ring_normalize(Ring::Z2, v);
    if (m != 0) out.values.emplace(s, m);
  }
  return out;
}

Cocycle coboundary(const SimplicialComplex& k, const Cocycle& a) {
  Cocycle out;
  out.degree = a.degree + 1;
  for (const auto& s : k.faces(a.degree + 1)) {
    Int acc = 0;
    int8_t sign = 1;
    for (std::size_t drop = 0; drop < s.size(); ++drop) {
      Simplex f;
      f.reserve(s.size() - 1);
      for (std::size_t i = 0; i < s.size(); ++i)
        if (i != drop) f.push_back(s[i]);
      acc += sign * a.evaluate_simplex(f);
      sign = static_cast<int8_t>(-sign);
    }
    if (acc != 0) out.values.emplace(s, acc);
  }
  return out;
}

bool is_cocycle(const SimplicialComplex& k, const Cocycle& a, Ring ring) {
  Cocycle d = coboundary(k, a);
  if (ring == Ring::Z) return d.values.empty();
  for (const auto& [s, v] : d.values)
    if (v % 2 != 0) return false;
  return true;
}

Cocycle cup_product(const SimplicialComplex& k, const Cocycle& a, const Cocycle& b, Ring ring) {
  if (!is_cocycle(k, a, ring) || !is_cocycle(k, b, ring))
    throw Error("cup_product: inputs must be cocycles");
  Cocycle out;
  out.degree = a.degree + b.degree;
  for (const auto& s : k.faces(out.degree)) {
    Simplex front(s.begin(), s.begin() + a.degree + 1);
    Simplex back(s.begin() + a.degree, s.end());
    Int v = a.evaluate_simplex(front) * b.evaluate_simplex(back);
    v = ring == Ring::Z2 ? ring_normalize(Ring::Z2, v) : v;
    if (v != 0) out.values.emplace(s, v);
  }
  return out;
}

Chain cap_product(const Chain& c, const Cocycle& f) {
  Chain out;
  out.degree = c.degree - f.degree;
  if (out.degree < 0) throw Error("cap_product: cochain degree exceeds chain degree");
  for (const auto& [s, v] : c.terms) {
    Simplex front(s.begin(), s.begin() + f.degree + 1);
    Simplex back(s.begin() + f.degree, s.end());
    Int w = v * f.evaluate_simplex(front);
    if (w != 0) out.add_term(back, w);
  }
  return out;
}

namespace {

void cross_simplex(LabelArena& arena, const Simplex& a, const Simplex& b, const Int& coeff,
                   Chain& out) {
  const int p = static_cast<int>(a.size()) - 1;
  const int q = static_cast<int>(b.size()) - 1;
  // monotone paths with the shuffle sign: parity of pairs (second-factor
  // step before first-factor step)
  std::vector<std::pair<int, int>> path{{0, 0}};
  std::vector<int> moves;  // 0 = first factor, 1 = second factor
  std::function<void()> rec = [&]() {
    auto [i, j] = path.back();
    if (i == p && j == q) {
      int inversions = 0;
      int seen_second = 0;
      for (int m : moves) {
        if (m == 1)
          ++seen_second;
        else
          inversions += seen_second;
      }
      Simplex s;
      s.reserve(path.size());
      for (auto [x, y] : path) s.push_back(arena.tuple_vertex({a[x], b[y]}));
      out.add_term(s, inversions % 2 == 0 ? coeff : -coeff);
      return;
    }
    if (i < p) {
      path.push_back({i + 1, j});
      moves.push_back(0);
      rec();
      path.pop_back();
      moves.pop_back();
    }
    if (j < q) {
      path.push_back({i, j + 1});
      moves.push_back(1);
      rec();
      path.pop_back();
      moves.pop_back();
    }
  };
  rec();
}

}  // namespace

Chain cross_chain(LabelArena& arena, const Chain& a, const Chain& b) {
  Chain out;
  out.degree = a.degree + b.degree;
  for (const auto& [sa, ca] : a.terms)
    for (const auto& [sb, cb] : b.terms) cross_simplex(arena, sa, sb, ca * cb, out);
  return out;
}

Chain cone_chain(const Chain& c, VertexId apex) {
  Chain out;
  out.degree = c.degree + 1;
  for (const auto& [s, v] : c.terms) {
    Simplex t = s;
    t.push_back(apex);
    out.add_term(t, v);
  }
  return out;
}

Chain push_chain(const Chain& c, const std::function<VertexId(VertexId)>& f,
                 const LabelArena& arena) {
  Chain out;
  out.degree = c.degree;
  for (const auto& [s, v] : c.terms) {
    Simplex t;
    t.reserve(s.size());
    for (VertexId x : s) t.push_back(f(x));
    for (std::size_t i = 1; i < t.size(); ++i)
      if (!arena.less(t[i - 1], t[i]))
        throw Error("push_chain: vertex map is not strictly order-preserving on a simplex");
    out.add_term(t, v);
  }
  return out;
}

Cocycle pullback_cochain(const SimplicialComplex& src, const Cocycle& a,
                         const std::function<VertexId(VertexId)>& f, const LabelArena& arena) {
  Cocycle out;
  out.degree = a.degree;
  for (const auto& s : src.faces(a.degree)) {
    Simplex t;
    t.reserve(s.size());
    bool degenerate = false;
    for (VertexId x : s) t.push_back(f(x));
    for (std::size_t i = 1; i < t.size(); ++i) {
      int cmp = arena.compare(t[i - 1], t[i]);
      if (cmp == 0) {
        degenerate = true;
        break;
      }
      if (cmp > 0) throw Error("pullback_cochain: vertex map is not order-preserving");
    }
    if (degenerate) continue;
    Int v = a.evaluate_simplex(t);
    if (v != 0) out.values.emplace(s, v);
  }
  return out;
}

FundamentalClass fundamental_class(const SimplicialComplex& k) {
  FundamentalClass out;
  auto pm = k.pseudomanifold_check();
  if (!pm.pure || !pm.pseudomanifold) {
    out.status = FundamentalClass::Status::NotPseudomanifold;
    out.detail = pm.detail.empty() ? "not a pseudomanifold" : pm.detail;
    return out;
  }
  out.cycle.degree = k.dim();
  if (k.dim() == 0) {
    for (VertexId v : k.vertices()) out.cycle.add_term({v}, 1);
    return out;
  }

  const auto& tops = k.tops();
  // facet -> incident tops with incidence signs
  std::map<Simplex, std::vector<std::pair<std::size_t, int>>> facets;
  for (std::size_t t = 0; t < tops.size(); ++t) {
    const Simplex& s = tops[t];
    int sign = 1;
    for (std::size_t drop = 0; drop < s.size(); ++drop) {
      Simplex f;
      for (std::size_t i = 0; i < s.size(); ++i)
        if (i != drop) f.push_back(s[i]);
      facets[f].push_back({t, sign});
      sign = -sign;
    }
  }
  out.relative = false;
  for (const auto& [f, inc] : facets)
    if (inc.size() == 1) out.relative = true;

  std::vector<int> orientation(tops.size(), 0);
  for (std::size_t seed = 0; seed < tops.size(); ++seed) {
    if (orientation[seed] != 0) continue;
    orientation[seed] = 1;
    std::vector<std::size_t> stack{seed};
    while (!stack.empty()) {
      std::size_t t = stack.back();
      stack.pop_back();
      const Simplex& s = tops[t];
      int sign = 1;
      for (std::size_t drop = 0; drop < s.size(); ++drop) {
        Simplex f;
        for (std::size_t i = 0; i < s.size(); ++i)
          if (i != drop) f.push_back(s[i]);
        for (const auto& [t2, sign2] : facets[f]) {
          if (t2 == t) continue;
          int needed = -orientation[t] * sign * sign2;
          if (orientation[t2] == 0) {
            orientation[t2] = needed;
            stack.push_back(t2);
          } else if (orientation[t2] != needed) {
            out.status = FundamentalClass::Status::NonOrientable;
            out.detail = "orientation propagation contradiction across a shared facet";
            return out;
          }
        }
        sign = -sign;
      }
    }
  }
  for (std::size_t t = 0; t < tops.size(); ++t) out.cycle.add_term(tops[t], orientation[t]);

  // the signed top chain must bound into boundary facets only
  Chain b = boundary_chain(out.cycle);
  for (const auto& [f, v] : b.terms) {
    auto it = facets.find(f);
    if (it == facets.end() || it->second.size() != 1) {
      out.status = FundamentalClass::Status::NonOrientable;
      out.detail = "boundary of the oriented top chain is not carried by the boundary";
      return out;
    }
  }
  return out;
}

}  // namespace sgmap::simp

#include "sgmap/pair_homology.hpp"

#include <sstream>

#include "sgmap/smith.hpp"

namespace sgmap::exact {

namespace {

bool kernel_position(Ring ring, const Int& d) {
  if (ring == Ring::Z) return d == 0;
  return d % 2 == 0;
}

std::vector<Int> mat_col(const IntMatrix& m, int j) {
  std::vector<Int> out(m.rows(), 0);
  for (int i = 0; i < m.rows(); ++i) out[i] = m.at(i, j);
  return out;
}

}  // namespace

PairHomology homology_of_pair(const IntMatrix& d_in, const IntMatrix& d_out, Ring ring) {
  if (d_in.rows() != d_out.cols()) {
    std::ostringstream os;
    os << "homology_of_pair: d_in has " << d_in.rows() << " rows but the chain group has rank "
       << d_out.cols();
    throw Error(os.str());
  }
  IntMatrix din = ring == Ring::Z2 ? d_in.reduced_mod2() : d_in;
  IntMatrix dout = ring == Ring::Z2 ? d_out.reduced_mod2() : d_out;
  {
    IntMatrix prod = dout.mul(din);
    if (ring == Ring::Z2) prod = prod.reduced_mod2();
    if (!prod.is_zero())
      throw Error("homology_of_pair: chain condition d_out*d_in = 0 violated");
  }

  PairHomology h;
  h.ring = ring;
  h.ambient = dout.cols();

  auto snf1 = smith_normal_form(dout);
  h.v1_inv = snf1.V_inv;
  h.d1 = snf1.diagonal();
  for (int i = 0; i < h.ambient; ++i) {
    if (i >= static_cast<int>(h.d1.size()) || kernel_position(ring, h.d1[i]))
      h.kernel_pos.push_back(i);
  }
  const int g = static_cast<int>(h.kernel_pos.size());

  // relations of im(d_in) in kernel coordinates
  IntMatrix vz = snf1.V_inv.mul(din);
  IntMatrix x(g, din.cols());
  {
    std::vector<int> pos_of(h.ambient, -1);
    for (int k = 0; k < g; ++k) pos_of[h.kernel_pos[k]] = k;
    for (const auto& [rc, v] : vz.entries()) {
      Int vv = ring_normalize(ring == Ring::Z2 ? Ring::Z2 : Ring::Z, v);
      if (ring == Ring::Z2 && vv == 0) continue;
      if (pos_of[rc.first] >= 0) {
        if (ring == Ring::Z2)
          x.set(pos_of[rc.first], rc.second, vv);
        else
          x.set(pos_of[rc.first], rc.second, v);
      } else {
        // non-kernel coordinate must vanish for a composable pair
        bool bad = ring == Ring::Z ? (v != 0) : (v % 2 != 0);
        if (bad) throw Error("homology_of_pair: image of d_in leaves the kernel of d_out");
      }
    }
  }

  auto snf2 = smith_normal_form(x);
  h.u2 = snf2.U;
  auto d2 = snf2.diagonal();
  h.module.ring = ring;

  for (int i = 0; i < g; ++i) {
    Int d = i < static_cast<int>(d2.size()) ? d2[i] : Int(0);
    if (ring == Ring::Z) {
      if (d == 0) {
        h.free_pos.push_back(i);
      } else if (d >= 2) {
        h.torsion_pos.push_back(i);
        h.module.torsion.push_back(d);
      }
    } else {
      if (d % 2 == 0) h.free_pos.push_back(i);
    }
  }
  h.module.free_rank = static_cast<int>(h.free_pos.size());

  // representatives: K * (columns of U2_inv)
  auto make_rep = [&](int pos) {
    std::vector<Int> in_kernel = mat_col(snf2.U_inv, pos);
    std::vector<Int> out(h.ambient, 0);
    for (int k = 0; k < g; ++k) {
      if (in_kernel[k] == 0) continue;
      for (int i = 0; i < h.ambient; ++i) {
        const Int& vk = snf1.V.at(i, h.kernel_pos[k]);
        if (vk != 0) out[i] += in_kernel[k] * vk;
      }
    }
    if (ring == Ring::Z2)
      for (auto& c : out) c = ring_normalize(Ring::Z2, c);
    return out;
  };
  for (int p : h.free_pos) h.free_reps.push_back(make_rep(p));
  for (int p : h.torsion_pos) h.torsion_reps.push_back(make_rep(p));
  return h;
}

PairHomology::Coords PairHomology::coordinates(const std::vector<Int>& z) const {
  if (static_cast<int>(z.size()) != ambient)
    throw Error("PairHomology::coordinates: length mismatch");
  std::vector<Int> w = v1_inv.apply(z);
  const int g = static_cast<int>(kernel_pos.size());
  std::vector<bool> in_kernel(ambient, false);
  for (int p : kernel_pos) in_kernel[p] = true;
  for (int i = 0; i < ambient; ++i) {
    if (in_kernel[i]) continue;
    bool bad = ring == Ring::Z ? (w[i] != 0) : (w[i] % 2 != 0);
    if (bad) throw Error("PairHomology::coordinates: chain is not a cycle");
  }
  std::vector<Int> wk(g, 0);
  for (int k = 0; k < g; ++k) wk[k] = w[kernel_pos[k]];
  std::vector<Int> hcoord = u2.apply(wk);

  Coords out;
  for (int p : free_pos) {
    Int c = hcoord[p];
    if (ring == Ring::Z2) c = ring_normalize(Ring::Z2, c);
    out.free.push_back(c);
  }
  for (std::size_t t = 0; t < torsion_pos.size(); ++t) {
    Int c = hcoord[torsion_pos[t]] % module.torsion[t];
    if (c < 0) c += module.torsion[t];
    out.torsion.push_back(c);
  }
  return out;
}

std::optional<std::vector<Int>> solve_linear(const IntMatrix& a, const std::vector<Int>& b,
                                             Ring ring) {
  if (static_cast<int>(b.size()) != a.rows()) throw Error("solve_linear: length mismatch");
  IntMatrix work = ring == Ring::Z2 ? a.reduced_mod2() : a;
  auto snf = smith_normal_form(work);
  std::vector<Int> ub = snf.U.apply(b);
  auto d = snf.diagonal();
  std::vector<Int> y(a.cols(), 0);
  for (int i = 0; i < a.rows(); ++i) {
    Int rhs = ring == Ring::Z2 ? ring_normalize(Ring::Z2, ub[i]) : ub[i];
    Int di = i < static_cast<int>(d.size()) ? d[i] : Int(0);
    if (ring == Ring::Z2) di = ring_normalize(Ring::Z2, di);
    if (di == 0) {
      if (rhs != 0) return std::nullopt;
      continue;
    }
    if (ring == Ring::Z) {
      if (ub[i] % di != 0) return std::nullopt;
      y[i] = ub[i] / di;
    } else {
      y[i] = rhs;  // di == 1 mod 2
    }
  }
  std::vector<Int> x = snf.V.apply(y);
  if (ring == Ring::Z2)
    for (auto& c : x) c = ring_normalize(Ring::Z2, c);
  return x;
}

}  // namespace sgmap::exact

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "sgmap/fg_module.hpp"
#include "sgmap/pair_homology.hpp"
#include "sgmap/smith.hpp"
#include "support/naive.hpp"

using namespace sgmap;
using namespace sgmap::exact;

namespace {

IntMatrix random_matrix(std::mt19937& rng, int max_dim, int max_abs, double density = 0.5) {
  std::uniform_int_distribution<int> dim(0, max_dim);
  std::uniform_int_distribution<int> val(-max_abs, max_abs);
  std::uniform_real_distribution<double> keep(0.0, 1.0);
  int m = dim(rng), n = dim(rng);
  IntMatrix a(m, n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j)
      if (keep(rng) < density) a.set(i, j, val(rng));
  return a;
}

void check_snf_contract(const IntMatrix& a) {
  auto snf = smith_normal_form(a);
  // U*A*V = S exactly
  CHECK(snf.U.mul(a).mul(snf.V) == snf.S);
  // transforms unimodular (independent Bareiss determinant)
  CHECK(abs(naive::determinant(snf.U.to_dense())) == 1);
  CHECK(abs(naive::determinant(snf.V.to_dense())) == 1);
  // accumulated inverses really invert
  CHECK(snf.U.mul(snf.U_inv) == IntMatrix::identity(a.rows()));
  CHECK(snf.V.mul(snf.V_inv) == IntMatrix::identity(a.cols()));
  // diagonal, nonnegative, divisibility chain, zeros trailing
  auto d = snf.diagonal();
  CHECK(static_cast<int>(snf.S.nnz()) == snf.rank());
  for (std::size_t i = 0; i < d.size(); ++i) {
    CHECK(d[i] >= 0);
    if (i + 1 < d.size()) {
      if (d[i] == 0) CHECK(d[i + 1] == 0);
      if (d[i] != 0 && d[i + 1] != 0) CHECK(d[i + 1] % d[i] == 0);
    }
  }
  // invariant factors agree with the independent oracle
  std::vector<Int> nonzero;
  for (const Int& v : d)
    if (v != 0) nonzero.push_back(v);
  CHECK(nonzero == naive::snf_diagonal(a.to_dense()));
}

}  // namespace

TEST_CASE("smith normal form: identity") {
  auto snf = smith_normal_form(IntMatrix::identity(3));
  CHECK(snf.S == IntMatrix::identity(3));
  CHECK(snf.U == IntMatrix::identity(3));
  CHECK(snf.V == IntMatrix::identity(3));
}

TEST_CASE("smith normal form: [[2,4],[6,8]]") {
  IntMatrix a = IntMatrix::from_dense({{2, 4}, {6, 8}});
  auto snf = smith_normal_form(a);
  auto d = snf.diagonal();
  REQUIRE(d.size() == 2);
  CHECK(d[0] == 2);
  CHECK(d[1] == 4);
  // d1 = gcd of the entries, d1*d2 = |det|
  CHECK(gcd(gcd(Int(2), Int(4)), gcd(Int(6), Int(8))) == d[0]);
  CHECK(d[0] * d[1] == abs(naive::determinant(a.to_dense())));
  check_snf_contract(a);
}

TEST_CASE("smith normal form: zero matrix") {
  IntMatrix a(2, 3);
  auto snf = smith_normal_form(a);
  CHECK(snf.S.is_zero());
  CHECK(snf.rank() == 0);
}

TEST_CASE("smith normal form: empty shapes") {
  for (auto [m, n] : {std::pair{0, 0}, {0, 4}, {3, 0}}) {
    IntMatrix a(m, n);
    auto snf = smith_normal_form(a);
    CHECK(snf.S.rows() == m);
    CHECK(snf.S.cols() == n);
  }
}

TEST_CASE("smith normal form: randomized contract") {
  std::mt19937 rng(20260809);
  for (int trial = 0; trial < 200; ++trial) {
    check_snf_contract(random_matrix(rng, 8, 9));
  }
}

TEST_CASE("smith normal form: sparse path agrees with dense path") {
  // 70 columns forces the sparse path; compare against the oracle
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> val(-5, 5);
  IntMatrix a(70, 70);
  for (int i = 0; i < 70; ++i)
    for (int j = 0; j < 70; ++j)
      if ((i + j) % 13 == 0) a.set(i, j, val(rng));
  auto snf = smith_normal_form(a);
  CHECK(snf.U.mul(a).mul(snf.V) == snf.S);
  std::vector<Int> nonzero;
  for (const Int& v : snf.diagonal())
    if (v != 0) nonzero.push_back(v);
  CHECK(nonzero == naive::snf_diagonal(a.to_dense()));
}

TEST_CASE("cokernel presentation: basic examples") {
  // Z/2 from the 1x1 relation [2]
  auto m = cokernel_presentation(IntMatrix::from_dense({{2}}), Ring::Z);
  CHECK(m.free_rank == 0);
  REQUIRE(m.torsion.size() == 1);
  CHECK(m.torsion[0] == 2);

  // free of rank 3 from an empty relation set
  auto f = cokernel_presentation(IntMatrix(3, 0), Ring::Z);
  CHECK(f.free_rank == 3);
  CHECK(f.torsion.empty());

  auto t = cokernel_presentation(IntMatrix::from_dense({{2, 4}, {6, 8}}), Ring::Z);
  CHECK(t.free_rank == 0);
  REQUIRE(t.torsion.size() == 2);
  CHECK(t.torsion[0] == 2);
  CHECK(t.torsion[1] == 4);

  // over Z/2 every entry reduces to zero, so both relations die
  auto z2 = cokernel_presentation(IntMatrix::from_dense({{2, 4}, {6, 8}}), Ring::Z2);
  CHECK(z2.free_rank == 2);
  CHECK(z2.torsion.empty());

  // [[3,1],[1,2]] is invertible mod 2
  auto odd = cokernel_presentation(IntMatrix::from_dense({{3, 1}, {1, 2}}), Ring::Z2);
  CHECK(odd.free_rank == 0);
}

TEST_CASE("cokernel presentation: permutation and zero-padding invariance") {
  std::mt19937 rng(4242);
  for (int trial = 0; trial < 50; ++trial) {
    IntMatrix a = random_matrix(rng, 6, 9);
    auto base = cokernel_presentation(a, Ring::Z);

    // permute rows and columns
    std::vector<int> pr(a.rows()), pc(a.cols());
    for (int i = 0; i < a.rows(); ++i) pr[i] = i;
    for (int j = 0; j < a.cols(); ++j) pc[j] = j;
    std::shuffle(pr.begin(), pr.end(), rng);
    std::shuffle(pc.begin(), pc.end(), rng);
    IntMatrix p(a.rows(), a.cols());
    for (const auto& [rc, v] : a.entries()) p.set(pr[rc.first], pc[rc.second], v);
    CHECK(cokernel_presentation(p, Ring::Z) == base);

    // append zero rows (extra free generators) and zero columns (no-op)
    IntMatrix padded(a.rows() + 2, a.cols() + 3);
    for (const auto& [rc, v] : a.entries()) padded.set(rc.first, rc.second, v);
    auto pad = cokernel_presentation(padded, Ring::Z);
    CHECK(pad.torsion == base.torsion);
    CHECK(pad.free_rank == base.free_rank + 2);
  }
}

TEST_CASE("homology of pair: free cases") {
  // zero maps on rank r
  auto h = homology_of_pair(IntMatrix(5, 0), IntMatrix(0, 5), Ring::Z);
  CHECK(h.module.free_rank == 5);
  CHECK(h.module.torsion.empty());
  CHECK(h.free_reps.size() == 5);
}

TEST_CASE("homology of pair: boundary of the tetrahedron in degree 2") {
  // dDelta^3: vertices 0..3, edges and triangles enumerated by hand here,
  // independently of the complexes module.
  std::vector<std::pair<int, int>> edges = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  std::vector<std::array<int, 3>> tris = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
  IntMatrix d2(6, 4);
  for (int t = 0; t < 4; ++t) {
    auto [x, y, z] = tris[t];
    auto edge_index = [&](int a, int b) {
      for (int e = 0; e < 6; ++e)
        if (edges[e] == std::pair{a, b}) return e;
      REQUIRE(false);
      return -1;
    };
    d2.set(edge_index(y, z), t, 1);
    d2.set(edge_index(x, z), t, -1);
    d2.set(edge_index(x, y), t, 1);
  }
  auto h = homology_of_pair(IntMatrix(4, 0), d2, Ring::Z);
  CHECK(h.module.free_rank == 1);
  CHECK(h.module.torsion.empty());
  // the representative is a genuine cycle with support on all four triangles
  REQUIRE(h.free_reps.size() == 1);
  const auto& rep = h.free_reps[0];
  std::vector<Int> img = d2.apply(rep);
  for (const auto& v : img) CHECK(v == 0);
  // coordinates of the representative in its own basis are a unit
  auto coords = h.coordinates(rep);
  REQUIRE(coords.free.size() == 1);
  CHECK(abs(coords.free[0]) == 1);
}

TEST_CASE("homology of pair: composability diagnostics") {
  CHECK_THROWS_AS(homology_of_pair(IntMatrix(3, 1), IntMatrix(2, 2), Ring::Z), Error);
  IntMatrix d_out = IntMatrix::from_dense({{1, 0}, {0, 1}});
  IntMatrix d_in = IntMatrix::from_dense({{1}, {0}});
  CHECK_THROWS_AS(homology_of_pair(d_in, d_out, Ring::Z), Error);
}

TEST_CASE("homology of pair: rational rank cross-check") {
  std::mt19937 rng(777);
  for (int trial = 0; trial < 40; ++trial) {
    IntMatrix d_out = random_matrix(rng, 7, 9);
    auto h = homology_of_pair(IntMatrix(d_out.cols(), 0), d_out, Ring::Z);
    int rank_q = naive::rational_rank(d_out.to_dense());
    CHECK(h.module.free_rank + static_cast<int>(h.module.torsion.size()) ==
          d_out.cols() - rank_q);
  }
}

TEST_CASE("kunneth_free convolution") {
  GradedModule s2{Ring::Z, {{Ring::Z, 1, {}}, {Ring::Z, 0, {}}, {Ring::Z, 1, {}}}};
  GradedModule t2{Ring::Z, {{Ring::Z, 1, {}}, {Ring::Z, 2, {}}, {Ring::Z, 1, {}}}};
  GradedModule s3{Ring::Z, {{Ring::Z, 1, {}}, {Ring::Z, 0, {}}, {Ring::Z, 0, {}}, {Ring::Z, 1, {}}}};
  GradedModule pt{Ring::Z, {{Ring::Z, 1, {}}}};

  CHECK(kunneth_free(s2, pt) == s2);
  CHECK(kunneth_free(s2, t2).free_ranks() == std::vector<int>{1, 2, 2, 2, 1});
  CHECK(kunneth_free(s3, s2).free_ranks() == std::vector<int>{1, 0, 1, 1, 0, 1});

  GradedModule torsion{Ring::Z, {{Ring::Z, 1, {}}, {Ring::Z, 0, {Int(2)}}}};
  CHECK_THROWS_AS(kunneth_free(torsion, s2), Error);
}

TEST_CASE("solve_linear over Z and Z2") {
  IntMatrix a = IntMatrix::from_dense({{2, 0}, {0, 3}});
  auto x = solve_linear(a, {Int(4), Int(9)}, Ring::Z);
  REQUIRE(x.has_value());
  CHECK((*x)[0] == 2);
  CHECK((*x)[1] == 3);
  CHECK(!solve_linear(a, {Int(1), Int(0)}, Ring::Z).has_value());
  // 2x = 1 is unsolvable over Z but 0 = 1 is the mod-2 shape: no solution
  CHECK(!solve_linear(IntMatrix::from_dense({{2}}), {Int(1)}, Ring::Z2).has_value());
  // 3x = 1 has the solution x = 1 over Z/2
  auto y = solve_linear(IntMatrix::from_dense({{3}}), {Int(1)}, Ring::Z2);
  REQUIRE(y.has_value());
  CHECK((*y)[0] == 1);
}

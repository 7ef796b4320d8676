#include "sgmap/homology.hpp"

#include <algorithm>
#include <cassert>
#include <limits>

namespace sgmap::simp {

bool HCoords::is_zero() const {
  for (const auto& c : free)
    if (c != 0) return false;
  for (const auto& c : torsion)
    if (c != 0) return false;
  return true;
}

const exact::FGModule& GradedHomology::at(int k) const {
  static const exact::FGModule trivial_z{Ring::Z, 0, {}};
  static const exact::FGModule trivial_z2{Ring::Z2, 0, {}};
  if (k >= 0 && k < static_cast<int>(modules.by_degree.size())) return modules.by_degree[k];
  return ring == Ring::Z ? trivial_z : trivial_z2;
}

const exact::FGModule& GradedCohomology::at(int k) const {
  static const exact::FGModule trivial_z{Ring::Z, 0, {}};
  static const exact::FGModule trivial_z2{Ring::Z2, 0, {}};
  if (k >= 0 && k < static_cast<int>(modules.by_degree.size())) return modules.by_degree[k];
  return ring == Ring::Z ? trivial_z : trivial_z2;
}

namespace {

// ---------------------------------------------------------------------------
// ring plug-ins for the elimination engine
// ---------------------------------------------------------------------------

struct OpsZ {
  using C = Int;
  static constexpr Ring ring = Ring::Z;
  static C from_incidence(std::int8_t s) { return C(s); }
  static bool is_unit(const C& x) { return x == 1 || x == -1; }
  static C unit_div(const C& num, const C& unit) { return unit > 0 ? num : C(-num); }
  static C combine(const C& base, const C& q, const C& other) { return base + q * other; }
  static C normalize(const Int& x) { return x; }
  static Int to_int(const C& x) { return x; }
};

struct OpsZ2 {
  using C = std::int8_t;
  static constexpr Ring ring = Ring::Z2;
  static C from_incidence(std::int8_t) { return 1; }
  static bool is_unit(C) { return true; }
  static C unit_div(C num, C) { return num; }
  static C combine(C base, C q, C other) { return static_cast<C>((base + q * other) & 1); }
  static C normalize(const Int& x) { return static_cast<C>(x % 2 != 0 ? 1 : 0); }
  static Int to_int(C x) { return Int(x); }
};

// ---------------------------------------------------------------------------
// graded unit-pivot elimination with passenger columns and expansion maps
// ---------------------------------------------------------------------------

template <class Ops>
class Engine {
 public:
  using C = typename Ops::C;
  using Entry = std::pair<std::uint32_t, C>;

  struct Column {
    std::vector<Entry> entries;  // sorted by row id
    bool alive = false;
    bool passenger = false;
    std::uint32_t units = 0;
  };

  struct Mat {
    std::vector<Column> cols;
    std::vector<std::vector<std::uint32_t>> row_cols;  // lazy superset
    std::vector<std::uint32_t> row_nnz;                // real columns only
    std::vector<bool> row_alive;
    std::set<std::pair<std::uint32_t, std::uint32_t>> pivot_queue;  // (nnz, col)
    std::set<std::uint32_t> singleton_rows;
    std::uint32_t n_real = 0;
  };

  int top = -1;
  std::vector<Mat> mats;                      // 1 .. top+1
  std::vector<std::vector<bool>> cell_alive;  // per degree 0..top
  std::map<int, std::vector<std::map<std::uint32_t, C>>> iota;  // tracked degrees

  Engine(const ChainComplexData& data, const std::set<int>& rep_degrees,
         const std::vector<std::pair<int, std::vector<std::pair<std::uint32_t, Int>>>>&
             passengers) {
    top = data.top_degree();
    if (top < 0) return;
    mats.resize(top + 2);
    cell_alive.resize(top + 1);
    for (int d = 0; d <= top; ++d) cell_alive[d].assign(data.cell_count(d), true);

    for (int d = 1; d <= top + 1; ++d) {
      Mat& m = mats[d];
      std::size_t nrows = data.cell_count(d - 1);
      std::size_t ncols = d <= top ? data.cell_count(d) : 0;
      m.row_cols.assign(nrows, {});
      m.row_nnz.assign(nrows, 0);
      m.row_alive.assign(nrows, true);
      m.cols.resize(ncols);
      m.n_real = static_cast<std::uint32_t>(ncols);
      for (std::size_t j = 0; j < ncols; ++j) {
        Column& col = m.cols[j];
        col.alive = true;
        for (const auto& [r, s] : data.boundary[d][j]) {
          C v = Ops::from_incidence(s);
          col.entries.push_back({r, v});
          if (Ops::is_unit(v)) ++col.units;
          m.row_cols[r].push_back(static_cast<std::uint32_t>(j));
          ++m.row_nnz[r];
        }
        std::sort(col.entries.begin(), col.entries.end(),
                  [](const Entry& x, const Entry& y) { return x.first < y.first; });
        if (col.units > 0 && !col.entries.empty())
          m.pivot_queue.insert({static_cast<std::uint32_t>(col.entries.size()),
                                static_cast<std::uint32_t>(j)});
      }
      for (std::size_t r = 0; r < nrows; ++r)
        if (m.row_nnz[r] == 1) m.singleton_rows.insert(static_cast<std::uint32_t>(r));
    }

    for (int d : rep_degrees) {
      if (d < 0 || d > top) continue;
      auto& io = iota[d];
      io.resize(data.cell_count(d));
      for (std::size_t i = 0; i < io.size(); ++i) io[i][static_cast<std::uint32_t>(i)] = 1;
    }

    for (const auto& [deg, vec] : passengers) {
      if (deg < 0 || deg > top) throw Error("homology: passenger degree out of range");
      Mat& m = mats[deg + 1];
      Column col;
      col.alive = true;
      col.passenger = true;
      for (const auto& [r, v] : vec) {
        C cv = Ops::normalize(v);
        if (cv == C(0)) continue;
        col.entries.push_back({r, cv});
        m.row_cols[r].push_back(static_cast<std::uint32_t>(m.cols.size()));
      }
      std::sort(col.entries.begin(), col.entries.end(),
                [](const Entry& x, const Entry& y) { return x.first < y.first; });
      m.cols.push_back(std::move(col));
      passenger_slots_.push_back({deg, static_cast<std::uint32_t>(m.cols.size() - 1)});
    }
  }

  void run() {
    for (int d = top; d >= 1; --d) reduce_matrix(d);
  }

  // surviving cells per degree, ascending original ids
  std::vector<std::uint32_t> survivors(int deg) const {
    std::vector<std::uint32_t> out;
    if (deg < 0 || deg > top) return out;
    for (std::uint32_t i = 0; i < cell_alive[deg].size(); ++i)
      if (cell_alive[deg][i]) out.push_back(i);
    return out;
  }

  // leftover boundary matrix in survivor-local coordinates
  exact::IntMatrix leftover(int d, const std::vector<std::uint32_t>& rows_surv,
                            const std::vector<std::uint32_t>& cols_surv) const {
    exact::IntMatrix m(static_cast<int>(rows_surv.size()), static_cast<int>(cols_surv.size()));
    if (d < 1 || d > top) return m;
    std::vector<std::int64_t> row_local(mats[d].row_alive.size(), -1);
    for (std::size_t i = 0; i < rows_surv.size(); ++i) row_local[rows_surv[i]] = i;
    for (std::size_t j = 0; j < cols_surv.size(); ++j) {
      const Column& col = mats[d].cols[cols_surv[j]];
      for (const auto& [r, v] : col.entries) {
        assert(row_local[r] >= 0);
        m.set(static_cast<int>(row_local[r]), static_cast<int>(j), Ops::to_int(v));
      }
    }
    return m;
  }

  // final passenger vector in survivor-local coordinates of its degree
  std::vector<Int> passenger_final(std::size_t idx,
                                   const std::vector<std::uint32_t>& surv) const {
    auto [deg, slot] = passenger_slots_[idx];
    const Column& col = mats[deg + 1].cols[slot];
    std::vector<std::int64_t> local(cell_alive[deg].size(), -1);
    for (std::size_t i = 0; i < surv.size(); ++i) local[surv[i]] = i;
    std::vector<Int> out(surv.size(), 0);
    for (const auto& [r, v] : col.entries) {
      assert(local[r] >= 0);
      out[static_cast<std::size_t>(local[r])] = Ops::to_int(v);
    }
    return out;
  }

  int passenger_degree(std::size_t idx) const { return passenger_slots_[idx].first; }

  // expansion of a survivor-basis vector into original cells
  std::map<std::uint32_t, Int> expand(int deg, const std::vector<std::uint32_t>& surv,
                                      const std::vector<Int>& coords) const {
    auto it = iota.find(deg);
    if (it == iota.end()) throw Error("homology: representatives were not tracked in degree");
    std::map<std::uint32_t, Int> out;
    for (std::size_t i = 0; i < surv.size(); ++i) {
      if (coords[i] == 0) continue;
      for (const auto& [cell, v] : it->second[surv[i]]) {
        Int add = coords[i] * Ops::to_int(v);
        auto [pos, fresh] = out.emplace(cell, add);
        if (!fresh) {
          pos->second += add;
          if (pos->second == 0) out.erase(pos);
        }
      }
    }
    return out;
  }

 private:
  std::vector<std::pair<int, std::uint32_t>> passenger_slots_;

  static typename std::vector<Entry>::const_iterator find_entry(const Column& col,
                                                                std::uint32_t r) {
    auto it = std::lower_bound(col.entries.begin(), col.entries.end(), r,
                               [](const Entry& e, std::uint32_t x) { return e.first < x; });
    return (it != col.entries.end() && it->first == r) ? it : col.entries.end();
  }

  void queue_erase(Mat& m, std::uint32_t c) {
    const Column& col = m.cols[c];
    if (!col.alive || col.passenger) return;
    m.pivot_queue.erase({static_cast<std::uint32_t>(col.entries.size()), c});
  }
  void queue_insert(Mat& m, std::uint32_t c) {
    const Column& col = m.cols[c];
    if (!col.alive || col.passenger || col.units == 0 || col.entries.empty()) return;
    m.pivot_queue.insert({static_cast<std::uint32_t>(col.entries.size()), c});
  }

  void bump_row(Mat& m, std::uint32_t r, int delta) {
    if (delta > 0)
      m.row_nnz[r] += delta;
    else
      m.row_nnz[r] -= static_cast<std::uint32_t>(-delta);
    if (m.row_alive[r] && m.row_nnz[r] == 1)
      m.singleton_rows.insert(r);
    else
      m.singleton_rows.erase(r);
  }

  // valid (deduped) columns currently meeting row r; compacts the lazy list
  std::vector<std::uint32_t> collect_row(Mat& m, std::uint32_t r) {
    auto& lazy = m.row_cols[r];
    std::sort(lazy.begin(), lazy.end());
    lazy.erase(std::unique(lazy.begin(), lazy.end()), lazy.end());
    std::vector<std::uint32_t> valid;
    for (std::uint32_t c : lazy) {
      const Column& col = m.cols[c];
      if (!col.alive) continue;
      if (find_entry(col, r) != col.entries.end()) valid.push_back(c);
    }
    lazy = valid;
    return valid;
  }

  // col_c += q * snapshot
  void col_axpy(Mat& m, std::uint32_t c, const std::vector<Entry>& snapshot, const C& q) {
    Column& col = m.cols[c];
    queue_erase(m, c);
    std::vector<Entry> merged;
    merged.reserve(col.entries.size() + snapshot.size());
    std::uint32_t units = 0;
    auto it1 = col.entries.begin();
    auto it2 = snapshot.begin();
    while (it1 != col.entries.end() || it2 != snapshot.end()) {
      if (it2 == snapshot.end() || (it1 != col.entries.end() && it1->first < it2->first)) {
        if (Ops::is_unit(it1->second)) ++units;
        merged.push_back(*it1++);
      } else if (it1 == col.entries.end() || it2->first < it1->first) {
        C v = Ops::combine(C(0), q, it2->second);
        if (v != C(0)) {
          if (Ops::is_unit(v)) ++units;
          merged.push_back({it2->first, v});
          if (!col.passenger) bump_row(m, it2->first, +1);
          m.row_cols[it2->first].push_back(c);
        }
        ++it2;
      } else {
        C v = Ops::combine(it1->second, q, it2->second);
        if (v != C(0)) {
          if (Ops::is_unit(v)) ++units;
          merged.push_back({it1->first, v});
        } else {
          if (!col.passenger) bump_row(m, it1->first, -1);
        }
        ++it1;
        ++it2;
      }
    }
    col.entries = std::move(merged);
    col.units = units;
    queue_insert(m, c);
  }

  void kill_column(Mat& m, std::uint32_t c, std::uint32_t skip_row) {
    Column& col = m.cols[c];
    if (!col.alive) return;
    queue_erase(m, c);
    for (const auto& [r, v] : col.entries) {
      if (r == skip_row) continue;
      if (!col.passenger) bump_row(m, r, -1);
    }
    col.alive = false;
    col.entries.clear();
    col.units = 0;
  }

  void kill_row(Mat& m, std::uint32_t r) {
    if (!m.row_alive[r]) return;
    for (std::uint32_t c : collect_row(m, r)) {
      Column& col = m.cols[c];
      queue_erase(m, c);
      auto it = find_entry(col, r);
      if (it != col.entries.end()) {
        if (Ops::is_unit(it->second)) --col.units;
        col.entries.erase(col.entries.begin() + (it - col.entries.begin()));
        if (!col.passenger) bump_row(m, r, -1);
      }
      queue_insert(m, c);
    }
    m.row_alive[r] = false;
    m.singleton_rows.erase(r);
  }

  void cancel(int d, std::uint32_t b, std::uint32_t a) {
    Mat& m = mats[d];
    const Column& col_a_ref = m.cols[a];
    auto pivot_it = find_entry(col_a_ref, b);
    assert(pivot_it != col_a_ref.entries.end());
    C lambda = pivot_it->second;
    assert(Ops::is_unit(lambda));

    std::vector<Entry> col_a = col_a_ref.entries;  // snapshot
    std::vector<std::pair<std::uint32_t, C>> row_b;
    for (std::uint32_t c : collect_row(m, b)) {
      if (c == a) continue;
      auto it = find_entry(m.cols[c], b);
      if (it != m.cols[c].entries.end()) row_b.push_back({c, it->second});
    }

    // expansion updates use the snapshots, before the matrix changes
    auto io_cols = iota.find(d);
    if (io_cols != iota.end()) {
      auto& io = io_cols->second;
      for (const auto& [c, mu] : row_b) {
        if (m.cols[c].passenger) continue;
        C q = Ops::unit_div(mu, lambda);
        for (const auto& [cell, v] : io[a]) {
          C add = Ops::combine(C(0), q, v);
          if (add == C(0)) continue;
          auto [pos, fresh] = io[c].emplace(cell, C(0));
          pos->second = Ops::combine(pos->second, C(-1), add);
          if (pos->second == C(0)) io[c].erase(pos);
        }
      }
      io[a].clear();
    }
    // on the row side the surviving basis vectors are unchanged (the basis
    // change B' = B R^{-1} only rewrites the deleted slot), so the tracked
    // expansion in degree d-1 just loses b
    auto io_rows = iota.find(d - 1);
    if (io_rows != iota.end()) io_rows->second[b].clear();

    // Schur update on every column meeting row b (passengers included)
    for (const auto& [c, mu] : row_b) {
      C q = Ops::unit_div(mu, lambda);
      col_axpy(m, c, col_a, C(-q));
    }

    kill_column(m, a, b);
    m.row_alive[b] = false;
    m.row_nnz[b] = 0;
    m.singleton_rows.erase(b);

    if (d - 1 >= 1) kill_column(mats[d - 1], b, std::numeric_limits<std::uint32_t>::max());
    if (d + 1 <= top + 1) kill_row(mats[d + 1], a);
    cell_alive[d][a] = false;
    cell_alive[d - 1][b] = false;
  }

  void reduce_matrix(int d) {
    Mat& m = mats[d];
    while (true) {
      if (!m.singleton_rows.empty()) {
        std::uint32_t r = *m.singleton_rows.begin();
        m.singleton_rows.erase(m.singleton_rows.begin());
        if (!m.row_alive[r] || m.row_nnz[r] != 1) continue;
        // locate the single real column meeting r
        std::uint32_t the_col = 0;
        bool found = false;
        for (std::uint32_t c : collect_row(m, r)) {
          if (m.cols[c].passenger) continue;
          the_col = c;
          found = true;
          break;
        }
        if (!found) continue;
        auto it = find_entry(m.cols[the_col], r);
        if (it == m.cols[the_col].entries.end()) continue;
        if (!Ops::is_unit(it->second)) continue;  // blocked; column side may return
        cancel(d, r, the_col);
        continue;
      }
      if (!m.pivot_queue.empty()) {
        auto [nnz, c] = *m.pivot_queue.begin();
        const Column& col = m.cols[c];
        if (!col.alive || col.passenger || col.units == 0 ||
            col.entries.size() != nnz) {
          m.pivot_queue.erase(m.pivot_queue.begin());
          queue_insert(m, c);
          continue;
        }
        // among unit entries pick the row minimizing (row_nnz, row id)
        bool found = false;
        std::uint32_t best_r = 0;
        std::uint64_t best_key = 0;
        for (const auto& [r, v] : col.entries) {
          if (!Ops::is_unit(v) || !m.row_alive[r]) continue;
          std::uint64_t key = (static_cast<std::uint64_t>(m.row_nnz[r]) << 32) | r;
          if (!found || key < best_key) {
            found = true;
            best_key = key;
            best_r = r;
          }
        }
        if (!found) {
          m.pivot_queue.erase(m.pivot_queue.begin());
          continue;
        }
        cancel(d, best_r, c);
        continue;
      }
      break;
    }
  }
};

// ---------------------------------------------------------------------------
// assembly: engine + leftover pair homology
// ---------------------------------------------------------------------------

std::vector<std::pair<std::uint32_t, Int>> chain_to_vec(const ChainComplexData& data,
                                                        const LabelArena& arena,
                                                        const Chain& chain) {
  std::vector<std::pair<std::uint32_t, Int>> out;
  for (const auto& [s, v] : chain.terms) {
    auto idx = data.index_of(chain.degree, s, arena);
    if (!idx) throw Error("homology: passenger chain is not supported on the complex");
    out.push_back({*idx, v});
  }
  return out;
}

template <class Ops>
GradedHomology run_engine(const ChainComplexData& data, const LabelArena& arena, Ring ring,
                          const HomologyOptions& opts) {
  GradedHomology out;
  out.ring = ring;
  out.modules.ring = ring;
  const int top = data.top_degree();
  if (top < 0) {
    out.passenger_coords.resize(opts.passengers.size());
    return out;
  }

  // representatives in degree d require expansions of both d and its
  // boundary degrees' bases?  only degree d itself: reps are chains in C_d.
  std::vector<std::pair<int, std::vector<std::pair<std::uint32_t, Int>>>> passengers;
  for (const auto& chain : opts.passengers) {
    Chain reduced = ring == Ring::Z2 ? chain_mod(chain, Ring::Z2) : chain;
    auto vec = chain_to_vec(data, arena, reduced);
    // cycle check against the graded data (which may be a quotient or dual
    // complex, so the simplicial boundary of the keys is not authoritative)
    if (chain.degree >= 1) {
      std::map<std::uint32_t, Int> acc;
      for (const auto& [cell, v] : vec)
        for (const auto& [r, s] : data.boundary[chain.degree][cell]) acc[r] += v * s;
      for (const auto& [r, v] : acc) {
        bool bad = ring == Ring::Z ? (v != 0) : (v % 2 != 0);
        if (bad) throw Error("homology: passenger chain is not a cycle");
      }
    }
    passengers.push_back({chain.degree, std::move(vec)});
  }

  Engine<Ops> engine(data, opts.representative_degrees, passengers);
  engine.run();

  std::vector<std::vector<std::uint32_t>> surv(top + 1);
  for (int d = 0; d <= top; ++d) surv[d] = engine.survivors(d);

  std::vector<exact::PairHomology> pair(top + 1);
  out.modules.by_degree.resize(top + 1);
  for (int d = 0; d <= top; ++d) {
    exact::IntMatrix d_out =
        d >= 1 ? engine.leftover(d, surv[d - 1], surv[d])
               : exact::IntMatrix(0, static_cast<int>(surv[0].size()));
    exact::IntMatrix d_in =
        d + 1 <= top ? engine.leftover(d + 1, surv[d], surv[d + 1])
                     : exact::IntMatrix(static_cast<int>(surv[d].size()), 0);
    pair[d] = exact::homology_of_pair(d_in, d_out, ring);
    out.modules.by_degree[d] = pair[d].module;
  }

  // representatives
  for (int d : opts.representative_degrees) {
    if (d < 0 || d > top) {
      out.free_reps[d];
      continue;
    }
    auto expand_to_chain = [&](const std::vector<Int>& coords) {
      Chain c;
      c.degree = d;
      for (const auto& [cell, v] : engine.expand(d, surv[d], coords))
        c.terms.emplace(data.cells[d][cell], v);
      return c;
    };
    auto& fr = out.free_reps[d];
    for (const auto& vec : pair[d].free_reps) fr.push_back(expand_to_chain(vec));
    auto& tr = out.torsion_reps[d];
    for (const auto& vec : pair[d].torsion_reps) tr.push_back(expand_to_chain(vec));
  }

  // passenger coordinates
  for (std::size_t i = 0; i < passengers.size(); ++i) {
    int d = engine.passenger_degree(i);
    std::vector<Int> final_vec = engine.passenger_final(i, surv[d]);
    auto coords = pair[d].coordinates(final_vec);
    out.passenger_coords.push_back({std::move(coords.free), std::move(coords.torsion)});
  }
  return out;
}

}  // namespace

GradedHomology homology_of_data(const ChainComplexData& data, const LabelArena& arena, Ring ring,
                                const HomologyOptions& opts) {
  return ring == Ring::Z ? run_engine<OpsZ>(data, arena, ring, opts)
                         : run_engine<OpsZ2>(data, arena, ring, opts);
}

GradedHomology homology(const SimplicialComplex& k, Ring ring, const HomologyOptions& opts) {
  return homology_of_data(chain_complex(k), *k.arena(), ring, opts);
}

GradedHomology relative_homology(const SimplicialComplex& k, const SimplicialComplex& l,
                                 Ring ring, const HomologyOptions& opts) {
  return homology_of_data(relative_chain_complex(k, l), *k.arena(), ring, opts);
}

GradedCohomology cohomology(const SimplicialComplex& k, Ring ring,
                            const CohomologyOptions& opts) {
  ChainComplexData data = chain_complex(k);
  const int top = data.top_degree();
  GradedCohomology out;
  out.ring = ring;
  out.modules.ring = ring;
  if (top < 0) {
    out.passenger_coords.resize(opts.passengers.size());
    return out;
  }

  // dual complex: engine degree e holds the primal (top-e)-cells and the
  // boundary of the dual is the transpose of the primal coboundary
  ChainComplexData dual;
  dual.cells.resize(top + 1);
  dual.boundary.resize(top + 1);
  for (int e = 0; e <= top; ++e) dual.cells[e] = data.cells[top - e];
  for (int e = 1; e <= top; ++e) {
    int kprim = top - e + 1;  // primal degree whose boundary we transpose
    dual.boundary[e].assign(dual.cells[e].size(), {});
    for (std::size_t j = 0; j < data.boundary[kprim].size(); ++j)
      for (const auto& [r, s] : data.boundary[kprim][j])
        dual.boundary[e][r].push_back({static_cast<std::uint32_t>(j), s});
    for (auto& col : dual.boundary[e])
      std::sort(col.begin(), col.end(),
                [](const auto& x, const auto& y) { return x.first < y.first; });
  }

  HomologyOptions hopts;
  for (int p : opts.representative_degrees)
    if (p >= 0 && p <= top) hopts.representative_degrees.insert(top - p);
  for (const auto& c : opts.passengers) {
    Chain dual_chain;
    dual_chain.degree = top - c.degree;
    dual_chain.terms = c.values;
    hopts.passengers.push_back(std::move(dual_chain));
  }

  GradedHomology dual_h = homology_of_data(dual, *k.arena(), ring, hopts);

  out.modules.by_degree.assign(top + 1, exact::FGModule{ring, 0, {}});
  for (int e = 0; e <= top; ++e)
    if (e < static_cast<int>(dual_h.modules.by_degree.size()))
      out.modules.by_degree[top - e] = dual_h.modules.by_degree[e];

  auto chain_to_cocycle = [&](const Chain& c, int p) {
    Cocycle z;
    z.degree = p;
    z.values = c.terms;
    return z;
  };
  for (const auto& [e, reps] : dual_h.free_reps) {
    auto& dst = out.free_reps[top - e];
    for (const auto& c : reps) dst.push_back(chain_to_cocycle(c, top - e));
  }
  for (const auto& [e, reps] : dual_h.torsion_reps) {
    auto& dst = out.torsion_reps[top - e];
    for (const auto& c : reps) dst.push_back(chain_to_cocycle(c, top - e));
  }
  out.passenger_coords = std::move(dual_h.passenger_coords);
  return out;
}

}  // namespace sgmap::simp

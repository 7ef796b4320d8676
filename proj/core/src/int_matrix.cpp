#include "sgmap/int_matrix.hpp"

#include <sstream>

namespace sgmap::exact {

namespace {
const Int kZero = 0;
}

IntMatrix::IntMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw Error("IntMatrix: negative shape");
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

IntMatrix IntMatrix::from_dense(const std::vector<std::vector<Int>>& d) {
  int r = static_cast<int>(d.size());
  int c = r == 0 ? 0 : static_cast<int>(d[0].size());
  IntMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(d[i].size()) != c) throw Error("IntMatrix: ragged dense input");
    for (int j = 0; j < c; ++j)
      if (d[i][j] != 0) m.set(i, j, d[i][j]);
  }
  return m;
}

std::vector<std::vector<Int>> IntMatrix::to_dense() const {
  std::vector<std::vector<Int>> d(rows_, std::vector<Int>(cols_, 0));
  for (const auto& [rc, v] : entries_) d[rc.first][rc.second] = v;
  return d;
}

void IntMatrix::check_bounds(int r, int c) const {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_) {
    std::ostringstream os;
    os << "IntMatrix: index (" << r << "," << c << ") out of bounds for " << rows_ << "x" << cols_;
    throw Error(os.str());
  }
}

const Int& IntMatrix::at(int r, int c) const {
  check_bounds(r, c);
  auto it = entries_.find({r, c});
  return it == entries_.end() ? kZero : it->second;
}

void IntMatrix::set(int r, int c, Int v) {
  check_bounds(r, c);
  if (v == 0)
    entries_.erase({r, c});
  else
    entries_[{r, c}] = std::move(v);
}

void IntMatrix::add(int r, int c, const Int& v) {
  check_bounds(r, c);
  auto it = entries_.find({r, c});
  if (it == entries_.end()) {
    if (v != 0) entries_.emplace(std::make_pair(r, c), v);
    return;
  }
  it->second += v;
  if (it->second == 0) entries_.erase(it);
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (const auto& [rc, v] : entries_) t.set(rc.second, rc.first, v);
  return t;
}

IntMatrix IntMatrix::mul(const IntMatrix& other) const {
  if (cols_ != other.rows_) throw Error("IntMatrix::mul: shape mismatch");
  IntMatrix out(rows_, other.cols_);
  // group rhs entries by row for the sparse product
  std::vector<std::vector<std::pair<int, const Int*>>> rhs_rows(other.rows_);
  for (const auto& [rc, v] : other.entries_) rhs_rows[rc.first].push_back({rc.second, &v});
  for (const auto& [rc, v] : entries_) {
    for (const auto& [j, w] : rhs_rows[rc.second]) out.add(rc.first, j, v * (*w));
  }
  return out;
}

IntMatrix IntMatrix::reduced_mod2() const {
  IntMatrix out(rows_, cols_);
  for (const auto& [rc, v] : entries_) {
    Int m = ring_normalize(Ring::Z2, v);
    if (m != 0) out.set(rc.first, rc.second, m);
  }
  return out;
}

std::vector<Int> IntMatrix::apply(const std::vector<Int>& v) const {
  if (static_cast<int>(v.size()) != cols_) throw Error("IntMatrix::apply: length mismatch");
  std::vector<Int> out(rows_, 0);
  for (const auto& [rc, w] : entries_) out[rc.first] += w * v[rc.second];
  return out;
}

bool IntMatrix::operator==(const IntMatrix& other) const {
  return rows_ == other.rows_ && cols_ == other.cols_ && entries_ == other.entries_;
}

}  // namespace sgmap::exact

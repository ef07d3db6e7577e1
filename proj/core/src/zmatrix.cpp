#include "gkm/zmatrix.hpp"

#include <stdexcept>
#include <utility>

namespace gkm {

IntMatrix identity_matrix(int n) {
  IntMatrix m(static_cast<size_t>(n), std::vector<Int>(static_cast<size_t>(n), 0));
  for (int i = 0; i < n; ++i) m[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
  return m;
}

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
  size_t n = a.size(), k = b.size();
  if (k == 0 || (n > 0 && a[0].size() != k))
    throw std::invalid_argument("mat_mul: shape mismatch");
  size_t m = b[0].size();
  IntMatrix r(n, std::vector<Int>(m, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < k; ++j) {
      if (a[i][j] == 0) continue;
      for (size_t l = 0; l < m; ++l) r[i][l] += a[i][j] * b[j][l];
    }
  return r;
}

bool is_identity(const IntMatrix& m) {
  for (size_t i = 0; i < m.size(); ++i) {
    if (m[i].size() != m.size()) return false;
    for (size_t j = 0; j < m[i].size(); ++j)
      if (m[i][j] != (i == j ? 1 : 0)) return false;
  }
  return true;
}

std::vector<Int> row_times_matrix(const std::vector<Int>& row, const IntMatrix& m) {
  if (m.size() != row.size()) throw std::invalid_argument("row_times_matrix: shape");
  size_t cols = m.empty() ? 0 : m[0].size();
  std::vector<Int> out(cols, 0);
  for (size_t i = 0; i < row.size(); ++i) {
    if (row[i] == 0) continue;
    for (size_t j = 0; j < cols; ++j) out[j] += row[i] * m[i][j];
  }
  return out;
}

namespace {

// Column echelon reduction of `m` (rows x cols) by unimodular column
// operations, mirrored on the cols x cols matrix `v`. After the call, for
// each processed pivot (row, col) the row has a single nonzero among columns
// >= its pivot column, pivot columns are packed to the left, and the pivot
// submatrix is lower triangular in pivot order.
struct ColumnEchelon {
  IntMatrix m;
  IntMatrix v;
  std::vector<std::pair<size_t, size_t>> pivots;  // (row, col), rows ascending
  size_t next_col = 0;
};

ColumnEchelon column_reduce(const IntMatrix& a, size_t ncols) {
  ColumnEchelon e;
  e.m = a;
  e.v = identity_matrix(static_cast<int>(ncols));
  for (auto& row : e.m)
    if (row.size() != ncols) throw std::invalid_argument("column_reduce: ragged matrix");

  auto add_col = [&](size_t dst, size_t src, const Int& q) {
    // col_dst += q * col_src
    for (auto& row : e.m) row[dst] += q * row[src];
    for (auto& row : e.v) row[dst] += q * row[src];
  };
  auto swap_col = [&](size_t i, size_t j) {
    if (i == j) return;
    for (auto& row : e.m) std::swap(row[i], row[j]);
    for (auto& row : e.v) std::swap(row[i], row[j]);
  };

  for (size_t r = 0; r < e.m.size() && e.next_col < ncols; ++r) {
    // Euclid on the active columns until at most one nonzero remains in row r.
    while (true) {
      size_t best = ncols;
      for (size_t c = e.next_col; c < ncols; ++c) {
        if (e.m[r][c] == 0) continue;
        if (best == ncols || abs_int(e.m[r][c]) < abs_int(e.m[r][best])) best = c;
      }
      if (best == ncols) break;  // row is zero on active columns
      bool reduced_any = false;
      for (size_t c = e.next_col; c < ncols; ++c) {
        if (c == best || e.m[r][c] == 0) continue;
        Int q = e.m[r][c] / e.m[r][best];
        if (q != 0) add_col(c, best, -q);
        if (e.m[r][c] != 0) reduced_any = true;
      }
      if (!reduced_any) {
        swap_col(e.next_col, best);
        e.pivots.emplace_back(r, e.next_col);
        ++e.next_col;
        break;
      }
    }
  }
  return e;
}

}  // namespace

std::vector<std::vector<Int>> integer_kernel(const IntMatrix& a, int ncols) {
  if (ncols < 0) throw std::invalid_argument("integer_kernel: ncols");
  size_t n = static_cast<size_t>(ncols);
  ColumnEchelon e = column_reduce(a, n);
  std::vector<std::vector<Int>> basis;
  for (size_t c = e.next_col; c < n; ++c) {
    std::vector<Int> vec(n);
    for (size_t i = 0; i < n; ++i) vec[i] = e.v[i][c];
    basis.push_back(std::move(vec));
  }
  return basis;
}

std::optional<std::vector<Int>> solve_integer(const IntMatrix& a,
                                              const std::vector<Int>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("solve_integer: shape");
  size_t n = a.empty() ? 0 : a[0].size();
  ColumnEchelon e = column_reduce(a, n);
  std::vector<Int> res = b;
  std::vector<Int> y(n, 0);
  // The pivot submatrix is lower triangular in pivot order: forward
  // substitution, with an exact-divisibility check at every pivot.
  for (auto [r, c] : e.pivots) {
    if (res[r] % e.m[r][c] != 0) return std::nullopt;
    y[c] = res[r] / e.m[r][c];
    if (y[c] != 0)
      for (size_t i = 0; i < res.size(); ++i) res[i] -= y[c] * e.m[i][c];
  }
  for (const Int& v : res)
    if (v != 0) return std::nullopt;
  std::vector<Int> x(n, 0);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      if (e.v[i][j] != 0 && y[j] != 0) x[i] += e.v[i][j] * y[j];
  return x;
}

}  // namespace gkm

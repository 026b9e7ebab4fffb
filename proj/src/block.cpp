#include <vector>

#include "schubert/perm.hpp"

namespace schubert {

PartialPermutation block_sum(const PartialPermutation& u, const PartialPermutation& v) {
  const int a = v.rows();
  const int b = u.cols();
  const int rows = a + u.rows();
  const int cols = b + v.cols();
  std::vector<int> r2c(static_cast<std::size_t>(rows), 0);
  for (int i = 1; i <= a; ++i)
    if (const int j = v.col_of(i)) r2c[static_cast<std::size_t>(i - 1)] = b + j;
  for (int i = 1; i <= u.rows(); ++i)
    if (const int j = u.col_of(i)) r2c[static_cast<std::size_t>(a + i - 1)] = j;

  // The leftover region below-right is (empty rows of u) x (empty columns of
  // v); filling its lexicographically first cell repeatedly pairs them up in
  // order.
  std::vector<int> empty_rows;
  for (int i = 1; i <= u.rows(); ++i)
    if (u.col_of(i) == 0) empty_rows.push_back(a + i);
  std::vector<int> empty_cols;
  for (int j = 1; j <= v.cols(); ++j)
    if (v.row_of(j) == 0) empty_cols.push_back(b + j);
  for (std::size_t k = 0; k < empty_rows.size() && k < empty_cols.size(); ++k)
    r2c[static_cast<std::size_t>(empty_rows[k] - 1)] = empty_cols[k];
  return PartialPermutation(rows, cols, std::move(r2c));
}

namespace {

PartialPermutation sub_block(const PartialPermutation& w, int row_lo, int row_hi, int col_lo,
                             int col_hi) {
  std::vector<int> r2c;
  for (int i = row_lo; i <= row_hi; ++i) {
    const int j = w.col_of(i);
    r2c.push_back(j >= col_lo && j <= col_hi ? j - col_lo + 1 : 0);
  }
  return PartialPermutation(row_hi - row_lo + 1, col_hi - col_lo + 1, std::move(r2c));
}

void decompose_into(const PartialPermutation& w, int row_offset, int col_offset,
                    std::vector<Block>& out) {
  const int rows = w.rows();
  const int cols = w.cols();
  const Diagram d = rothe_diagram(w);
  // Split with the most rows above, so the bottom-left piece is as small as
  // possible and therefore indecomposable.
  for (int a = rows - 1; a >= 1; --a) {
    for (int b = 1; b < cols; ++b) {
      bool full = true;
      for (int i = 1; i <= a && full; ++i)
        for (int j = 1; j <= b && full; ++j) full = d.count({i, j}) > 0;
      if (!full) break;  // larger b cannot be full either
      PartialPermutation u = sub_block(w, a + 1, rows, 1, b);
      PartialPermutation v = sub_block(w, 1, a, b + 1, cols);
      if (block_sum(u, v) == w) {
        out.push_back({std::move(u), row_offset + a, col_offset});
        decompose_into(v, row_offset, col_offset + b, out);
        return;
      }
    }
  }
  out.push_back({w, row_offset, col_offset});
}

}  // namespace

std::vector<Block> block_decompose(const PartialPermutation& w) {
  std::vector<Block> out;
  decompose_into(w, 0, 0, out);
  return out;
}

Permutation complete(const PartialPermutation& p) {
  const int n = p.rows() + p.cols() - p.rank();
  std::vector<int> w(static_cast<std::size_t>(n), 0);
  int next_col = p.cols();
  for (int i = 1; i <= p.rows(); ++i) {
    const int j = p.col_of(i);
    w[static_cast<std::size_t>(i - 1)] = j ? j : ++next_col;
  }
  int next_row = p.rows();
  for (int j = 1; j <= p.cols(); ++j)
    if (p.row_of(j) == 0) w[static_cast<std::size_t>(next_row++)] = j;
  return Permutation(std::move(w));
}

}  // namespace schubert

#include <algorithm>
#include <map>

#include "schubert/perm.hpp"

namespace schubert {

namespace {

Cell lex_max_cell(const Diagram& d) {
  if (d.empty()) throw PermError("empty diagram");
  return *d.rbegin();
}

}  // namespace

Cell maximal_corner(const Permutation& w) { return lex_max_cell(rothe_diagram(w)); }

std::set<Cell> pivots(const Permutation& w) {
  const Cell corner = maximal_corner(w);
  std::vector<Cell> nw;
  for (int i = 1; i < corner.row; ++i)
    if (w(i) < corner.col) nw.push_back({i, w(i)});
  std::set<Cell> out;
  for (const Cell& c : nw) {
    const bool dominated = std::any_of(nw.begin(), nw.end(), [&](const Cell& o) {
      return o != c && o.row >= c.row && o.col >= c.col;
    });
    if (!dominated) out.insert(c);
  }
  return out;
}

Transition transition(const Permutation& w) {
  const int n = w.size();
  Transition t;
  t.w = w;
  for (int i = n; i >= 1 && t.r == 0; --i) {
    for (int j = n; j > i; --j) {
      if (w(i) > w(j)) {
        t.r = i;
        t.s = w(j);
        break;
      }
    }
  }
  if (t.r == 0) throw PermError("transition of the identity");
  t.v = w.times_transposition(t.r, w.inverse_at(t.s));
  for (int i = 1; i < t.r; ++i) {
    Permutation u = t.v.times_transposition(i, t.r);
    if (bruhat_cover(t.v, u)) {
      t.pivot_rows.push_back(i);
      t.phi.push_back(std::move(u));
    }
  }
  return t;
}

Permutation march(const Permutation& w, int pivot_row) {
  const std::set<Cell> piv = pivots(w);
  if (pivot_row < 1 || pivot_row > w.size() || !piv.count({pivot_row, w(pivot_row)}))
    throw PermError("row " + std::to_string(pivot_row) + " does not hold a pivot");
  const Cell corner = maximal_corner(w);
  const int i = pivot_row;
  const int j = w(pivot_row);

  // Inside the rectangle spanned by the pivot and the corner, only the rows
  // and columns not crossed by lines from outside dots carry cells. Removing
  // the pivot's lines frees its row and column; every cell then steps to the
  // previous free row and previous free column.
  std::vector<int> free_rows{i};
  for (int a = i + 1; a <= corner.row; ++a)
    if (w(a) > corner.col) free_rows.push_back(a);
  std::vector<int> free_cols{j};
  for (int b = j + 1; b <= corner.col; ++b)
    if (w.inverse_at(b) > corner.row) free_cols.push_back(b);

  std::map<int, int> prev_row;
  std::map<int, int> prev_col;
  for (std::size_t k = 1; k < free_rows.size(); ++k) prev_row[free_rows[k]] = free_rows[k - 1];
  for (std::size_t k = 1; k < free_cols.size(); ++k) prev_col[free_cols[k]] = free_cols[k - 1];

  Diagram moved;
  for (const Cell& c : rothe_diagram(w)) {
    const bool inside = c.row >= i && c.row <= corner.row && c.col >= j && c.col <= corner.col;
    if (!inside) {
      moved.insert(c);
      continue;
    }
    auto pr = prev_row.find(c.row);
    auto pc = prev_col.find(c.col);
    if (pr == prev_row.end() || pc == prev_col.end())
      throw PermError("marching: cell " + to_string(c) + " off the free grid");
    moved.insert({pr->second, pc->second});
  }
  return permutation_from_diagram(moved, w.size());
}

namespace {

Cell partial_corner(const PartialPermutation& w) { return lex_max_cell(rothe_diagram(w)); }

}  // namespace

PredominantProfile predominant_profile(const PartialPermutation& w) {
  PredominantProfile prof;
  if (is_dominant(w)) {
    prof.lambda = dominant_part(w);
    prof.block = w;
    return prof;
  }
  const Cell corner = partial_corner(w);
  const std::vector<Block> blocks = block_decompose(w);
  const Block* holder = nullptr;
  for (const Block& b : blocks) {
    const Cell local{corner.row - b.row_offset, corner.col - b.col_offset};
    if (local.row >= 1 && local.col >= 1 && rothe_diagram(b.perm).count(local)) {
      holder = &b;
      break;
    }
  }
  if (!holder) throw PermError("maximal corner lies outside every block");
  if (!is_predominant(holder->perm)) throw PermError("block holding the corner is not predominant");

  prof.block = holder->perm;
  prof.row_offset = holder->row_offset;
  prof.col_offset = holder->col_offset;
  const Cell local = partial_corner(holder->perm);
  prof.r = local.row;
  prof.s = local.col;
  // Only the rows above the corner; the corner row may hold dominant cells too.
  {
    const Partition dom = dominant_part(holder->perm);
    std::vector<int> parts;
    for (int i = 0; i < prof.r - 1; ++i) parts.push_back(dom.part(static_cast<std::size_t>(i)));
    prof.lambda = Partition(parts);
  }
  prof.trailing = lehmer_code(holder->perm)[static_cast<std::size_t>(prof.r - 1)];

  for (int part : prof.lambda.parts()) {
    if (!prof.m.empty() && prof.m.back() == part) {
      prof.ell.back()++;
    } else {
      prof.m.push_back(part);
      prof.ell.push_back(1);
    }
  }
  const int len = static_cast<int>(prof.lambda.length());
  if (len < prof.r - 1) {
    prof.m.push_back(0);
    prof.ell.push_back(prof.r - 1 - len);
  }
  int acc = 0;
  for (int l : prof.ell) prof.rho.push_back(acc += l);
  if (prof.rho.empty() || prof.rho.back() != prof.r - 1)
    throw PermError("dominant part reaches the corner row");
  return prof;
}

}  // namespace schubert

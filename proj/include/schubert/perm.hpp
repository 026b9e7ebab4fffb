#pragma once

// Permutations, partial permutations and their diagram combinatorics.
//
// Everything is 1-based: rows are numbered top to bottom, columns left to
// right, and w(i) is the column of the dot in row i.

#include <compare>
#include <cstddef>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace schubert {

class PermError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Cell {
  int row = 0;
  int col = 0;
  auto operator<=>(const Cell&) const = default;
};

using Diagram = std::set<Cell>;

std::string to_string(const Cell& c);
std::string to_string(const Diagram& d);

/// Weakly decreasing sequence of positive parts (trailing zeros are dropped).
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  int part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
  bool contains(const Cell& c) const;
  Diagram cells() const;
  /// Read a partition off a diagram that is a Young diagram anchored at (1,1).
  static Partition from_diagram(const Diagram& d);

  std::string to_string() const;
  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> one_line);

  static Permutation identity(int n);
  /// "42153" for n <= 9, otherwise comma separated: "6,7,3,4,1,10,2,5,8,9".
  static Permutation parse(std::string_view text);

  int size() const { return static_cast<int>(w_.size()); }
  int operator()(int i) const { return w_[static_cast<std::size_t>(i - 1)]; }
  int inverse_at(int value) const {
    return inv_[static_cast<std::size_t>(value - 1)];
  }
  Permutation inverse() const;
  const std::vector<int>& one_line() const { return w_; }

  int length() const;
  bool is_identity() const;
  /// w * t_{ab}: swaps the entries in positions a and b.
  Permutation times_transposition(int a, int b) const;
  /// Embeds into S_n by appending fixed points.
  Permutation padded(int n) const;
  /// Drops trailing fixed points.
  Permutation trimmed() const;

  std::string to_string() const;

  bool operator==(const Permutation& o) const { return w_ == o.w_; }
  auto operator<=>(const Permutation& o) const { return w_ <=> o.w_; }

 private:
  std::vector<int> w_;
  std::vector<int> inv_;
};

/// An m x n 0-1 matrix with at most one 1 in each row and column.
class PartialPermutation {
 public:
  PartialPermutation() = default;
  /// row_to_col[i-1] is the column of the 1 in row i, or 0 for an empty row.
  PartialPermutation(int rows, int cols, std::vector<int> row_to_col);
  PartialPermutation(const Permutation& w);  // NOLINT: permutations are square partial permutations

  static PartialPermutation from_matrix(const std::vector<std::vector<int>>& m);
  /// Accepts either permutation text or matrix rows joined by ';', e.g. "010;100;000".
  static PartialPermutation parse(std::string_view text);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  /// Column of the 1 in row i, 0 if the row is empty or out of range.
  int col_of(int row) const;
  /// Row of the 1 in column j, 0 if the column is empty or out of range.
  int row_of(int col) const;
  int rank() const;

  bool is_permutation() const;
  Permutation to_permutation() const;
  PartialPermutation transpose() const;
  /// The top-left m x n corner.
  PartialPermutation truncate(int m, int n) const;
  std::vector<std::vector<int>> matrix() const;

  std::string to_string() const;
  bool operator==(const PartialPermutation& o) const = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<int> row_to_col_;
  std::vector<int> col_to_row_;
};

Diagram rothe_diagram(const PartialPermutation& w);
Diagram essential_set(const PartialPermutation& w);
std::vector<int> lehmer_code(const PartialPermutation& w);
/// #{k <= i : w(k) <= j}; throws PermError outside [rows] x [cols].
int rank_function(const PartialPermutation& w, int i, int j);

bool bruhat_leq(const Permutation& v, const Permutation& w);
bool bruhat_cover(const Permutation& v, const Permutation& w);

/// The cells of D_w with rank zero, read as a Young diagram.
Partition dominant_part(const PartialPermutation& w);

/// The unique permutation whose Rothe diagram is d, in S_n. Throws when no
/// permutation has that diagram.
Permutation permutation_from_diagram(const Diagram& d, int n);

bool pattern_contains(const Permutation& w, const Permutation& p);
const std::vector<Permutation>& cdg_patterns();

// Classification predicates.
bool is_dominant(const PartialPermutation& w);
bool is_vexillary(const PartialPermutation& w);
bool is_predominant(const PartialPermutation& w);
bool is_copredominant(const PartialPermutation& w);
bool is_banner(const PartialPermutation& w);
bool is_block_predominant(const PartialPermutation& w);
bool avoids_cdg_patterns(const Permutation& w);

struct Classification {
  bool dominant = false;
  bool vexillary = false;
  bool predominant = false;
  bool copredominant = false;
  bool banner = false;
  bool block_predominant = false;
  bool cdg_pattern_avoiding = false;
};

Classification classify(const PartialPermutation& w);

// ---- block sums ---------------------------------------------------------

/// u has its rows below the all-boxes block, v sits to its right.
PartialPermutation block_sum(const PartialPermutation& u,
                             const PartialPermutation& v);

struct Block {
  PartialPermutation perm;
  int row_offset = 0;
  int col_offset = 0;
};

/// Maximal decomposition w = b_1 ⊞ (b_2 ⊞ (... ⊞ b_k)), listed bottom-left
/// block first. A permutation with empty diagram is returned as one block.
std::vector<Block> block_decompose(const PartialPermutation& w);

/// Minimal completion to a permutation with the same Rothe diagram: empty
/// rows take the leftmost free columns past cols(), then empty columns take
/// the topmost free rows past rows().
Permutation complete(const PartialPermutation& p);

// ---- transition ----------------------------------------------------------

/// Lexicographically maximal cell of D_w. Throws on the identity.
Cell maximal_corner(const Permutation& w);
/// Maximally southeast dots strictly northwest of the maximal corner.
std::set<Cell> pivots(const Permutation& w);

struct Transition {
  Permutation w;
  Permutation v;
  int r = 0;  // row of the maximal corner
  int s = 0;  // column of the maximal corner
  std::vector<int> pivot_rows;  // I(v, r), increasing
  std::vector<Permutation> phi;  // v t_{ir} for i in pivot_rows, same order
};

Transition transition(const Permutation& w);

/// Diagram marching at the pivot in row pivot_row.
Permutation march(const Permutation& w, int pivot_row);

struct PredominantProfile {
  Partition lambda;      // dominant part of the block above the corner row
  std::vector<int> m;    // distinct part sizes m_1 > ... > m_k (m_k may be 0)
  std::vector<int> ell;  // multiplicities l_i
  std::vector<int> rho;  // prefix sums of ell
  int r = 0;             // maximal corner, block coordinates
  int s = 0;
  int trailing = 0;      // the code entry c_r of the block
  int row_offset = 0;    // position of the block inside w
  int col_offset = 0;
  PartialPermutation block;
};

/// Profile of the indecomposable block holding the maximal corner. Dominant
/// input yields the trivial profile (trailing == 0, r == s == 0).
PredominantProfile predominant_profile(const PartialPermutation& w);

/// All permutations of S_n in lexicographic order.
std::vector<Permutation> all_permutations(int n);

}  // namespace schubert

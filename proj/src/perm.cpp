#include "schubert/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace schubert {

std::string to_string(const Cell& c) {
  return "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")";
}

std::string to_string(const Diagram& d) {
  std::string out = "{";
  bool first = true;
  for (const Cell& c : d) {
    if (!first) out += ",";
    out += to_string(c);
    first = false;
  }
  return out + "}";
}

// ---- Partition -----------------------------------------------------------

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0 || (i > 0 && parts_[i] > parts_[i - 1]))
      throw PermError("partition parts must be weakly decreasing and >= 0");
  }
}

bool Partition::contains(const Cell& c) const {
  return c.row >= 1 && c.col >= 1 &&
         static_cast<std::size_t>(c.row) <= parts_.size() &&
         c.col <= parts_[static_cast<std::size_t>(c.row - 1)];
}

Diagram Partition::cells() const {
  Diagram d;
  for (std::size_t i = 0; i < parts_.size(); ++i)
    for (int j = 1; j <= parts_[i]; ++j) d.insert({static_cast<int>(i) + 1, j});
  return d;
}

Partition Partition::from_diagram(const Diagram& d) {
  std::vector<int> rows;
  for (const Cell& c : d) {
    if (static_cast<int>(rows.size()) < c.row) rows.resize(static_cast<std::size_t>(c.row), 0);
    rows[static_cast<std::size_t>(c.row - 1)]++;
  }
  Partition p(rows);
  if (p.cells() != d) throw PermError("diagram is not a Young diagram");
  return p;
}

std::string Partition::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(parts_[i]);
  }
  return out + ")";
}

// ---- Permutation ---------------------------------------------------------

Permutation::Permutation(std::vector<int> one_line) : w_(std::move(one_line)) {
  const int n = size();
  inv_.assign(w_.size(), 0);
  for (int i = 0; i < n; ++i) {
    const int v = w_[static_cast<std::size_t>(i)];
    if (v < 1 || v > n || inv_[static_cast<std::size_t>(v - 1)] != 0)
      throw PermError("not a permutation of 1.." + std::to_string(n));
    inv_[static_cast<std::size_t>(v - 1)] = i + 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> w;
  if (text.find(',') != std::string_view::npos) {
    std::string item;
    std::istringstream in{std::string(text)};
    while (std::getline(in, item, ',')) {
      item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
      if (item.empty() || !std::all_of(item.begin(), item.end(), ::isdigit))
        throw PermError("bad permutation entry '" + item + "'");
      w.push_back(std::stoi(item));
    }
  } else {
    for (char ch : text) {
      if (std::isspace(static_cast<unsigned char>(ch))) continue;
      if (ch < '1' || ch > '9') throw PermError("bad permutation text '" + std::string(text) + "'");
      w.push_back(ch - '0');
    }
  }
  return Permutation(std::move(w));
}

Permutation Permutation::inverse() const { return Permutation(inv_); }

int Permutation::length() const {
  int inv = 0;
  for (std::size_t i = 0; i < w_.size(); ++i)
    for (std::size_t j = i + 1; j < w_.size(); ++j)
      if (w_[i] > w_[j]) ++inv;
  return inv;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < w_.size(); ++i)
    if (w_[i] != static_cast<int>(i) + 1) return false;
  return true;
}

Permutation Permutation::times_transposition(int a, int b) const {
  std::vector<int> w = w_;
  std::swap(w[static_cast<std::size_t>(a - 1)], w[static_cast<std::size_t>(b - 1)]);
  return Permutation(std::move(w));
}

Permutation Permutation::padded(int n) const {
  std::vector<int> w = w_;
  for (int k = size() + 1; k <= n; ++k) w.push_back(k);
  return Permutation(std::move(w));
}

Permutation Permutation::trimmed() const {
  std::vector<int> w = w_;
  while (!w.empty() && w.back() == static_cast<int>(w.size())) w.pop_back();
  return Permutation(std::move(w));
}

std::string Permutation::to_string() const {
  std::string out;
  const bool commas = size() > 9;
  for (std::size_t i = 0; i < w_.size(); ++i) {
    if (commas && i) out += ",";
    out += std::to_string(w_[i]);
  }
  return out;
}

// ---- PartialPermutation --------------------------------------------------

PartialPermutation::PartialPermutation(int rows, int cols, std::vector<int> row_to_col)
    : rows_(rows), cols_(cols), row_to_col_(std::move(row_to_col)) {
  if (rows < 0 || cols < 0 || static_cast<int>(row_to_col_.size()) != rows)
    throw PermError("partial permutation shape mismatch");
  col_to_row_.assign(static_cast<std::size_t>(cols), 0);
  for (int i = 1; i <= rows; ++i) {
    const int j = row_to_col_[static_cast<std::size_t>(i - 1)];
    if (j == 0) continue;
    if (j < 0 || j > cols) throw PermError("column out of range in partial permutation");
    if (col_to_row_[static_cast<std::size_t>(j - 1)] != 0)
      throw PermError("two 1s in one column of a partial permutation");
    col_to_row_[static_cast<std::size_t>(j - 1)] = i;
  }
}

PartialPermutation::PartialPermutation(const Permutation& w)
    : PartialPermutation(w.size(), w.size(), w.one_line()) {}

PartialPermutation PartialPermutation::from_matrix(const std::vector<std::vector<int>>& m) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m.front().size()) : 0;
  std::vector<int> r2c(static_cast<std::size_t>(rows), 0);
  for (int i = 0; i < rows; ++i) {
    if (static_cast<int>(m[static_cast<std::size_t>(i)].size()) != cols)
      throw PermError("ragged matrix");
    for (int j = 0; j < cols; ++j) {
      const int e = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (e == 0) continue;
      if (e != 1 || r2c[static_cast<std::size_t>(i)] != 0)
        throw PermError("matrix is not a partial permutation");
      r2c[static_cast<std::size_t>(i)] = j + 1;
    }
  }
  return PartialPermutation(rows, cols, std::move(r2c));
}

PartialPermutation PartialPermutation::parse(std::string_view text) {
  if (text.find(';') == std::string_view::npos &&
      text.find_first_not_of("0123456789, ") == std::string_view::npos &&
      text.find('0') == std::string_view::npos) {
    return PartialPermutation(Permutation::parse(text));
  }
  std::vector<std::vector<int>> m;
  std::string row;
  std::istringstream in{std::string(text)};
  while (std::getline(in, row, ';')) {
    std::vector<int> r;
    for (char ch : row) {
      if (ch == '0' || ch == '1') r.push_back(ch - '0');
      else if (!std::isspace(static_cast<unsigned char>(ch)))
        throw PermError("bad partial permutation text '" + std::string(text) + "'");
    }
    m.push_back(std::move(r));
  }
  return from_matrix(m);
}

int PartialPermutation::col_of(int row) const {
  if (row < 1 || row > rows_) return 0;
  return row_to_col_[static_cast<std::size_t>(row - 1)];
}

int PartialPermutation::row_of(int col) const {
  if (col < 1 || col > cols_) return 0;
  return col_to_row_[static_cast<std::size_t>(col - 1)];
}

int PartialPermutation::rank() const {
  return static_cast<int>(std::count_if(row_to_col_.begin(), row_to_col_.end(),
                                        [](int j) { return j != 0; }));
}

bool PartialPermutation::is_permutation() const { return rows_ == cols_ && rank() == rows_; }

Permutation PartialPermutation::to_permutation() const {
  if (!is_permutation()) throw PermError("partial permutation is not a permutation");
  return Permutation(row_to_col_);
}

PartialPermutation PartialPermutation::transpose() const {
  return PartialPermutation(cols_, rows_, col_to_row_);
}

PartialPermutation PartialPermutation::truncate(int m, int n) const {
  if (m > rows_ || n > cols_ || m < 0 || n < 0) throw PermError("truncate out of range");
  std::vector<int> r2c(static_cast<std::size_t>(m), 0);
  for (int i = 1; i <= m; ++i) {
    const int j = col_of(i);
    if (j <= n) r2c[static_cast<std::size_t>(i - 1)] = j;
  }
  return PartialPermutation(m, n, std::move(r2c));
}

std::vector<std::vector<int>> PartialPermutation::matrix() const {
  std::vector<std::vector<int>> m(static_cast<std::size_t>(rows_),
                                  std::vector<int>(static_cast<std::size_t>(cols_), 0));
  for (int i = 1; i <= rows_; ++i)
    if (const int j = col_of(i)) m[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = 1;
  return m;
}

std::string PartialPermutation::to_string() const {
  if (is_permutation()) return to_permutation().to_string();
  std::string out;
  for (int i = 1; i <= rows_; ++i) {
    if (i > 1) out += ';';
    for (int j = 1; j <= cols_; ++j) out += (col_of(i) == j) ? '1' : '0';
  }
  return out;
}

// ---- diagrams ------------------------------------------------------------

namespace {

// (i,j) is in D_w iff the dot of row i is strictly right of j (or absent) and
// the dot of column j is strictly below i (or absent).
bool in_diagram(const PartialPermutation& w, int i, int j) {
  const int c = w.col_of(i);
  const int r = w.row_of(j);
  return (c == 0 || c > j) && (r == 0 || r > i);
}

}  // namespace

Diagram rothe_diagram(const PartialPermutation& w) {
  Diagram d;
  for (int i = 1; i <= w.rows(); ++i)
    for (int j = 1; j <= w.cols(); ++j)
      if (in_diagram(w, i, j)) d.insert({i, j});
  return d;
}

Diagram essential_set(const PartialPermutation& w) {
  const Diagram d = rothe_diagram(w);
  Diagram ess;
  for (const Cell& c : d)
    if (!d.count({c.row + 1, c.col}) && !d.count({c.row, c.col + 1})) ess.insert(c);
  return ess;
}

std::vector<int> lehmer_code(const PartialPermutation& w) {
  std::vector<int> code(static_cast<std::size_t>(w.rows()), 0);
  for (const Cell& c : rothe_diagram(w)) code[static_cast<std::size_t>(c.row - 1)]++;
  return code;
}

int rank_function(const PartialPermutation& w, int i, int j) {
  if (i < 1 || j < 1 || i > w.rows() || j > w.cols())
    throw PermError("rank_function: (" + std::to_string(i) + "," + std::to_string(j) +
                    ") out of range");
  int r = 0;
  for (int k = 1; k <= i; ++k) {
    const int c = w.col_of(k);
    if (c != 0 && c <= j) ++r;
  }
  return r;
}

bool bruhat_leq(const Permutation& v, const Permutation& w) {
  if (v.size() != w.size()) throw PermError("bruhat comparison of different sizes");
  const int n = v.size();
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (rank_function(v, i, j) < rank_function(w, i, j)) return false;
  return true;
}

bool bruhat_cover(const Permutation& v, const Permutation& w) {
  return v != w && w.length() == v.length() + 1 && bruhat_leq(v, w);
}

Partition dominant_part(const PartialPermutation& w) {
  Diagram dom;
  for (const Cell& c : rothe_diagram(w))
    if (rank_function(w, c.row, c.col) == 0) dom.insert(c);
  return Partition::from_diagram(dom);
}

Permutation permutation_from_diagram(const Diagram& d, int n) {
  std::vector<int> code(static_cast<std::size_t>(n), 0);
  for (const Cell& c : d) {
    if (c.row < 1 || c.row > n || c.col < 1 || c.col > n)
      throw PermError("diagram cell outside [n]x[n]");
    code[static_cast<std::size_t>(c.row - 1)]++;
  }
  std::vector<int> free(static_cast<std::size_t>(n));
  std::iota(free.begin(), free.end(), 1);
  std::vector<int> w;
  for (int i = 0; i < n; ++i) {
    const auto k = static_cast<std::size_t>(code[static_cast<std::size_t>(i)]);
    if (k >= free.size()) throw PermError("diagram is not a Rothe diagram");
    w.push_back(free[k]);
    free.erase(free.begin() + static_cast<std::ptrdiff_t>(k));
  }
  Permutation p(std::move(w));
  if (rothe_diagram(p) != d) throw PermError("diagram is not a Rothe diagram");
  return p;
}

// ---- patterns ------------------------------------------------------------

namespace {

bool contains_from(const std::vector<int>& w, const std::vector<int>& p, std::size_t start,
                   std::vector<int>& chosen) {
  if (chosen.size() == p.size()) return true;
  const std::size_t k = chosen.size();
  for (std::size_t i = start; i + (p.size() - k) <= w.size(); ++i) {
    // Relative order of the new entry against every chosen entry must match p.
    bool ok = true;
    for (std::size_t t = 0; t < k && ok; ++t)
      ok = (w[static_cast<std::size_t>(chosen[t])] < w[i]) == (p[t] < p[k]);
    if (!ok) continue;
    chosen.push_back(static_cast<int>(i));
    if (contains_from(w, p, i + 1, chosen)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

bool pattern_contains(const Permutation& w, const Permutation& p) {
  if (p.size() > w.size()) return false;
  std::vector<int> chosen;
  return contains_from(w.one_line(), p.one_line(), 0, chosen);
}

const std::vector<Permutation>& cdg_patterns() {
  static const std::vector<Permutation> patterns = {
      Permutation::parse("13254"),  Permutation::parse("21543"),
      Permutation::parse("214635"), Permutation::parse("215364"),
      Permutation::parse("241635"), Permutation::parse("315264"),
      Permutation::parse("215634"), Permutation::parse("4261735"),
  };
  return patterns;
}

// ---- classification ------------------------------------------------------

bool is_dominant(const PartialPermutation& w) {
  const std::vector<int> c = lehmer_code(w);
  return std::is_sorted(c.rbegin(), c.rend());
}

bool is_vexillary(const PartialPermutation& w) {
  std::vector<std::set<int>> rows(static_cast<std::size_t>(w.rows()));
  for (const Cell& c : rothe_diagram(w)) rows[static_cast<std::size_t>(c.row - 1)].insert(c.col);
  for (std::size_t a = 0; a < rows.size(); ++a) {
    for (std::size_t b = a + 1; b < rows.size(); ++b) {
      const auto& x = rows[a];
      const auto& y = rows[b];
      if (!std::includes(x.begin(), x.end(), y.begin(), y.end()) &&
          !std::includes(y.begin(), y.end(), x.begin(), x.end()))
        return false;
    }
  }
  return true;
}

// Code of shape lambda 0^h l 0...: after dropping trailing zeros, everything
// but the last entry is weakly decreasing.
bool is_predominant(const PartialPermutation& w) {
  std::vector<int> c = lehmer_code(w);
  while (!c.empty() && c.back() == 0) c.pop_back();
  if (c.empty()) return true;
  c.pop_back();
  return std::is_sorted(c.rbegin(), c.rend());
}

bool is_copredominant(const PartialPermutation& w) { return is_predominant(w.transpose()); }

bool is_banner(const PartialPermutation& w) {
  for (const Block& b : block_decompose(w)) {
    if (!is_predominant(b.perm) && !is_copredominant(b.perm) && !is_vexillary(b.perm))
      return false;
  }
  return true;
}

bool is_block_predominant(const PartialPermutation& w) {
  for (const Block& b : block_decompose(w))
    if (!is_predominant(b.perm)) return false;
  return true;
}

bool avoids_cdg_patterns(const Permutation& w) {
  for (const Permutation& p : cdg_patterns())
    if (pattern_contains(w, p)) return false;
  return true;
}

Classification classify(const PartialPermutation& w) {
  Classification c;
  c.dominant = is_dominant(w);
  c.vexillary = is_vexillary(w);
  c.predominant = is_predominant(w);
  c.copredominant = is_copredominant(w);
  c.banner = is_banner(w);
  c.block_predominant = is_block_predominant(w);
  c.cdg_pattern_avoiding = avoids_cdg_patterns(complete(w));
  return c;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

}  // namespace schubert

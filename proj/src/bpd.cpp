#include "schubert/bpd.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <unordered_set>

namespace schubert {

std::uint8_t edges_of(Tile t) {
  using namespace edge;
  switch (t) {
    case Tile::ElbowSE:
      return E | S;
    case Tile::ElbowNW:
      return N | W;
    case Tile::Cross:
      return N | E | S | W;
    case Tile::Blank:
      return 0;
    case Tile::Horizontal:
      return E | W;
    case Tile::Vertical:
      return N | S;
  }
  return 0;
}

Tile tile_with_edges(std::uint8_t e) {
  using namespace edge;
  switch (e) {
    case E | S:
      return Tile::ElbowSE;
    case N | W:
      return Tile::ElbowNW;
    case N | E | S | W:
      return Tile::Cross;
    case 0:
      return Tile::Blank;
    case E | W:
      return Tile::Horizontal;
    case N | S:
      return Tile::Vertical;
    default:
      throw BpdError("no tile has edge set " + std::to_string(e));
  }
}

Tile tile_from_char(char c) {
  switch (c) {
    case 'r':
    case 'j':
    case 'c':
    case '.':
    case 'h':
    case 'v':
      return static_cast<Tile>(c);
    default:
      throw BpdError(std::string("bad tile letter '") + c + "'");
  }
}

Bpd::Bpd(int rows, int cols, std::vector<Tile> tiles) : rows_(rows), cols_(cols), tiles_(std::move(tiles)) {
  using namespace edge;
  if (rows < 0 || cols < 0 || tiles_.size() != static_cast<std::size_t>(rows * cols))
    throw BpdError("tile count does not match the grid size");
  for (int i = 1; i <= rows_; ++i) {
    for (int j = 1; j <= cols_; ++j) {
      const auto e = edges_of(at(i, j));
      const std::string here = " at " + to_string(Cell{i, j});
      if (i == 1 && (e & N)) throw BpdError("pipe leaves through the top" + here);
      if (j == 1 && (e & W)) throw BpdError("pipe leaves through the left" + here);
      if (j < cols_ && bool(e & E) != bool(edges_of(at(i, j + 1)) & W))
        throw BpdError("horizontal edge mismatch" + here);
      if (i < rows_ && bool(e & S) != bool(edges_of(at(i + 1, j)) & N))
        throw BpdError("vertical edge mismatch" + here);
    }
  }
}

Bpd Bpd::from_rows(std::string_view text) {
  std::vector<std::string> rows;
  std::string cur;
  for (char c : text) {
    if (c == '/') {
      rows.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  rows.push_back(cur);
  if (rows.size() == 1 && rows[0].empty()) return Bpd(0, 0, {});
  std::vector<Tile> tiles;
  for (const std::string& r : rows) {
    if (r.size() != rows[0].size()) throw BpdError("ragged BPD rows");
    for (char c : r) tiles.push_back(tile_from_char(c));
  }
  return Bpd(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()), std::move(tiles));
}

std::string Bpd::encoding() const {
  std::string s;
  s.reserve(tiles_.size());
  for (Tile t : tiles_) s += static_cast<char>(t);
  return s;
}

std::string Bpd::rows_string() const {
  std::string s;
  for (int i = 1; i <= rows_; ++i) {
    if (i > 1) s += '/';
    for (int j = 1; j <= cols_; ++j) s += static_cast<char>(at(i, j));
  }
  return s;
}

// ---- tracing ----------------------------------------------------------------

PartialPermutation permutation_of(const Bpd& p) {
  using namespace edge;
  const int m = p.rows();
  const int n = p.cols();
  std::vector<int> r2c(static_cast<std::size_t>(m), 0);
  // Pipes through each cross tile, to catch a pair crossing twice.
  std::map<int, std::vector<int>> pipes_at_cross;
  for (int start = 1; start <= m; ++start) {
    if (!(edges_of(p.at(start, n)) & E)) continue;
    int i = start;
    int j = n;
    bool west = true;  // direction of travel
    while (true) {
      const Tile t = p.at(i, j);
      const auto e = edges_of(t);
      if (!(e & (west ? E : N)))
        throw BpdError("pipe from row " + std::to_string(start) + " dangles at " + to_string(Cell{i, j}));
      if (t == Tile::Cross) pipes_at_cross[(i - 1) * n + (j - 1)].push_back(start);
      if (t == Tile::ElbowSE) west = false;
      if (t == Tile::ElbowNW) west = true;
      if (west) {
        if (j == 1) throw BpdError("pipe from row " + std::to_string(start) + " leaves through the left");
        --j;
      } else {
        if (i == m) break;
        ++i;
      }
    }
    r2c[static_cast<std::size_t>(start - 1)] = j;
  }

  std::set<std::pair<int, int>> pairs;
  for (const auto& [cell, ps] : pipes_at_cross) {
    if (ps.size() != 2) throw BpdError("cross tile not traversed by two pipes");
    const auto key = std::minmax(ps[0], ps[1]);
    if (!pairs.insert(key).second)
      throw BpdError("pipes " + std::to_string(key.first) + " and " + std::to_string(key.second) +
                     " cross twice");
  }
  return PartialPermutation(m, n, std::move(r2c));
}

// ---- Rothe BPDs --------------------------------------------------------------

Bpd rothe_bpd(const Permutation& w) {
  const int n = w.size();
  std::vector<Tile> tiles;
  tiles.reserve(static_cast<std::size_t>(n * n));
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      const bool h = j > w(i);
      const bool v = w.inverse_at(j) < i;
      if (j == w(i))
        tiles.push_back(Tile::ElbowSE);
      else if (h && v)
        tiles.push_back(Tile::Cross);
      else if (h)
        tiles.push_back(Tile::Horizontal);
      else if (v)
        tiles.push_back(Tile::Vertical);
      else
        tiles.push_back(Tile::Blank);
    }
  }
  return Bpd(n, n, std::move(tiles));
}

Bpd rothe_bpd(const PartialPermutation& p) {
  return restrict(rothe_bpd(complete(p)), p.rows(), p.cols());
}

// ---- droops ------------------------------------------------------------------

Bpd apply_droop(const Bpd& p, const DroopMove& mv) {
  using namespace edge;
  const auto [i, j] = mv.source;
  const auto [k, l] = mv.target;
  if (!(i < k && j < l) || k > p.rows() || l > p.cols())
    throw BpdError("droop target must lie strictly southeast of the source");
  if (p.at(i, j) != Tile::ElbowSE) throw BpdError("droop source is not ┌");
  if (p.at(k, l) != Tile::Blank) throw BpdError("droop target is not blank");
  for (int a = i; a <= k; ++a)
    for (int b = j; b <= l; ++b) {
      if (a == i && b == j) continue;
      const Tile t = p.at(a, b);
      if (t == Tile::ElbowSE || t == Tile::ElbowNW) throw BpdError("droop rectangle holds another elbow");
    }

  std::vector<std::uint8_t> e;
  for (int a = 1; a <= p.rows(); ++a)
    for (int b = 1; b <= p.cols(); ++b) e.push_back(edges_of(p.at(a, b)));
  auto ed = [&](int a, int b) -> std::uint8_t& {
    return e[static_cast<std::size_t>((a - 1) * p.cols() + (b - 1))];
  };
  // Lift the old route: across row i from column l, then down column j to row k.
  ed(i, j) &= static_cast<std::uint8_t>(~(E | S));
  for (int b = j + 1; b <= l; ++b) ed(i, b) &= static_cast<std::uint8_t>(~(E | W));
  for (int a = i + 1; a <= k; ++a) ed(a, j) &= static_cast<std::uint8_t>(~(N | S));
  // New route: down column l from row i, then across row k to column j.
  ed(i, l) |= E | S;
  for (int a = i + 1; a < k; ++a) ed(a, l) |= N | S;
  ed(k, l) |= N | W;
  for (int b = j + 1; b < l; ++b) ed(k, b) |= E | W;
  ed(k, j) |= E | S;

  std::vector<Tile> tiles;
  tiles.reserve(e.size());
  for (auto x : e) tiles.push_back(tile_with_edges(x));
  return Bpd(p.rows(), p.cols(), std::move(tiles));
}

std::vector<std::pair<DroopMove, Bpd>> droops(const Bpd& p) {
  std::vector<std::pair<DroopMove, Bpd>> out;
  for (int i = 1; i <= p.rows(); ++i) {
    for (int j = 1; j <= p.cols(); ++j) {
      if (p.at(i, j) != Tile::ElbowSE) continue;
      // Grow the rectangle until an elbow blocks it; an elbow at (a,b) blocks
      // every target weakly southeast of it.
      int limit = p.cols();
      for (int a = i; a <= p.rows(); ++a) {
        for (int b = j; b <= limit; ++b) {
          if (a == i && b == j) continue;
          const Tile t = p.at(a, b);
          if (t == Tile::ElbowSE || t == Tile::ElbowNW) {
            limit = b - 1;
            break;
          }
          if (a > i && b > j && t == Tile::Blank) {
            const DroopMove mv{{i, j}, {a, b}};
            out.emplace_back(mv, apply_droop(p, mv));
          }
        }
        if (limit < j) break;
      }
    }
  }
  return out;
}

// ---- enumeration -------------------------------------------------------------

std::vector<Bpd> enumerate_bpds(const Permutation& w) {
  std::unordered_set<std::string> seen;
  std::vector<Bpd> out;
  std::deque<Bpd> queue{rothe_bpd(w)};
  seen.insert(queue.front().encoding());
  while (!queue.empty()) {
    Bpd cur = std::move(queue.front());
    queue.pop_front();
    for (auto& [mv, next] : droops(cur))
      if (seen.insert(next.encoding()).second) queue.push_back(std::move(next));
    out.push_back(std::move(cur));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Bpd> enumerate_bpds(const PartialPermutation& p) {
  std::set<Bpd> out;
  for (const Bpd& b : enumerate_bpds(complete(p))) out.insert(restrict(b, p.rows(), p.cols()));
  return {out.begin(), out.end()};
}

namespace {

constexpr int kBruteForceMax = 6;

// Fill rows top to bottom, each row right to left. The north edge comes from
// the tile above and the east edge from the tile to the right (a pipe enters
// every row at the right boundary), so at most two tiles fit each cell.
void tilings(int n, int i, int j, std::vector<Tile>& grid, std::vector<std::vector<Tile>>& out) {
  using namespace edge;
  if (i > n) {
    out.push_back(grid);
    return;
  }
  auto at = [&](int a, int b) { return grid[static_cast<std::size_t>((a - 1) * n + (b - 1))]; };
  const bool north = i > 1 && (edges_of(at(i - 1, j)) & S);
  const bool east = j == n || (edges_of(at(i, j + 1)) & W);
  static const Tile kAll[] = {Tile::ElbowSE, Tile::ElbowNW, Tile::Cross,
                              Tile::Blank,   Tile::Horizontal, Tile::Vertical};
  for (Tile t : kAll) {
    const auto e = edges_of(t);
    if (bool(e & N) != north || bool(e & E) != east) continue;
    if (j == 1 && (e & W)) continue;
    if (i == n && !(e & S)) continue;
    grid[static_cast<std::size_t>((i - 1) * n + (j - 1))] = t;
    if (j == 1)
      tilings(n, i + 1, n, grid, out);
    else
      tilings(n, i, j - 1, grid, out);
  }
}

}  // namespace

std::vector<std::pair<Permutation, Bpd>> all_bpds_bruteforce(int n) {
  if (n > kBruteForceMax) throw BpdError("brute-force enumeration is limited to n <= 6");
  std::vector<std::vector<Tile>> raw;
  std::vector<Tile> grid(static_cast<std::size_t>(n * n), Tile::Blank);
  if (n == 0) return {{Permutation(), Bpd(0, 0, {})}};
  tilings(n, 1, n, grid, raw);
  std::vector<std::pair<Permutation, Bpd>> out;
  for (auto& g : raw) {
    Bpd b(n, n, std::move(g));
    try {
      const PartialPermutation p = permutation_of(b);
      out.emplace_back(p.to_permutation(), std::move(b));
    } catch (const BpdError&) {
      // two pipes cross twice
    }
  }
  return out;
}

std::vector<Bpd> enumerate_bpds_bruteforce(const Permutation& w) {
  std::vector<Bpd> out;
  for (auto& [p, b] : all_bpds_bruteforce(w.size()))
    if (p == w) out.push_back(std::move(b));
  std::sort(out.begin(), out.end());
  return out;
}

// ---- diagrams and weights ------------------------------------------------------

Diagram diagram(const Bpd& p) {
  Diagram d;
  for (int i = 1; i <= p.rows(); ++i)
    for (int j = 1; j <= p.cols(); ++j)
      if (p.at(i, j) == Tile::Blank) d.insert({i, j});
  return d;
}

Polynomial weight(const Bpd& p) {
  Polynomial w(1);
  for (const Cell& c : diagram(p)) w *= x_minus_y(c.row, c.col);
  return w;
}

Bpd restrict(const Bpd& p, int m, int n) {
  if (m < 0 || n < 0 || m > p.rows() || n > p.cols())
    throw BpdError("restriction to " + std::to_string(m) + "x" + std::to_string(n) + " is out of range");
  std::vector<Tile> tiles;
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= n; ++j) tiles.push_back(p.at(i, j));
  return Bpd(m, n, std::move(tiles));
}

Bpd glue(const PartialPermutation& u, const PartialPermutation& v, const Bpd& bu, const Bpd& bv) {
  if (bu.rows() != u.rows() || bu.cols() != u.cols() || bv.rows() != v.rows() || bv.cols() != v.cols())
    throw BpdError("glued pieces do not match the block shapes");
  const Bpd base = rothe_bpd(complete(block_sum(u, v)));
  const int a = v.rows();
  const int b = u.cols();
  std::vector<Tile> tiles;
  for (int i = 1; i <= base.rows(); ++i) {
    for (int j = 1; j <= base.cols(); ++j) {
      if (i > a && i <= a + u.rows() && j <= b)
        tiles.push_back(bu.at(i - a, j));
      else if (i <= a && j > b && j <= b + v.cols())
        tiles.push_back(bv.at(i, j - b));
      else
        tiles.push_back(base.at(i, j));
    }
  }
  return Bpd(base.rows(), base.cols(), std::move(tiles));
}

// ---- text and JSON --------------------------------------------------------------

namespace {

const char* glyph(Tile t) {
  switch (t) {
    case Tile::ElbowSE:
      return "┌";
    case Tile::ElbowNW:
      return "┘";
    case Tile::Cross:
      return "┼";
    case Tile::Blank:
      return ".";
    case Tile::Horizontal:
      return "─";
    case Tile::Vertical:
      return "│";
  }
  return "?";
}

}  // namespace

std::string render_ascii(const Bpd& p) {
  std::string s;
  for (int i = 1; i <= p.rows(); ++i) {
    for (int j = 1; j <= p.cols(); ++j) s += glyph(p.at(i, j));
    s += '\n';
  }
  return s;
}

Bpd parse_ascii(std::string_view text) {
  static const std::pair<std::string_view, Tile> kGlyphs[] = {
      {"┌", Tile::ElbowSE}, {"┘", Tile::ElbowNW},    {"┼", Tile::Cross},
      {"─", Tile::Horizontal}, {"│", Tile::Vertical},
  };
  std::vector<std::vector<Tile>> rows;
  std::vector<Tile> cur;
  std::size_t k = 0;
  auto flush = [&] {
    if (!cur.empty()) rows.push_back(std::move(cur));
    cur.clear();
  };
  while (k < text.size()) {
    const char c = text[k];
    if (c == '\n') {
      flush();
      ++k;
      continue;
    }
    if (c == ' ' || c == '\r' || c == '\t') {
      ++k;
      continue;
    }
    bool matched = false;
    for (const auto& [g, t] : kGlyphs) {
      if (text.substr(k, g.size()) == g) {
        cur.push_back(t);
        k += g.size();
        matched = true;
        break;
      }
    }
    if (!matched) {
      cur.push_back(tile_from_char(c));
      ++k;
    }
  }
  flush();
  std::vector<Tile> tiles;
  for (const auto& r : rows) {
    if (r.size() != rows[0].size()) throw BpdError("ragged BPD rows");
    tiles.insert(tiles.end(), r.begin(), r.end());
  }
  const int m = static_cast<int>(rows.size());
  return Bpd(m, m ? static_cast<int>(rows[0].size()) : 0, std::move(tiles));
}

nlohmann::json to_json(const Bpd& p) {
  nlohmann::json j;
  if (p.rows() == p.cols()) {
    j["n"] = p.rows();
  } else {
    j["rows"] = p.rows();
    j["cols"] = p.cols();
  }
  j["tiles"] = p.encoding();
  return j;
}

Bpd bpd_from_json(const nlohmann::json& j) {
  int m = 0;
  int n = 0;
  if (j.contains("n")) {
    m = n = j.at("n").get<int>();
  } else {
    m = j.at("rows").get<int>();
    n = j.at("cols").get<int>();
  }
  const std::string s = j.at("tiles").get<std::string>();
  std::vector<Tile> tiles;
  for (char c : s) tiles.push_back(tile_from_char(c));
  return Bpd(m, n, std::move(tiles));
}

}  // namespace schubert

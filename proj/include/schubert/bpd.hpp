#pragma once

// Bumpless pipe dreams. Pipes enter at the right edge and leave at the
// bottom edge, moving only west and south.

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "schubert/perm.hpp"
#include "schubert/poly.hpp"

namespace schubert {

class BpdError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Letters double as the canonical encoding.
enum class Tile : char {
  ElbowSE = 'r',  // ┌
  ElbowNW = 'j',  // ┘
  Cross = 'c',    // ┼
  Blank = '.',
  Horizontal = 'h',  // ─
  Vertical = 'v',    // │
};

namespace edge {
constexpr std::uint8_t N = 1, E = 2, S = 4, W = 8;
}

std::uint8_t edges_of(Tile t);
/// Throws BpdError for edge sets that are not one of the six tiles.
Tile tile_with_edges(std::uint8_t e);
Tile tile_from_char(char c);

class Bpd {
 public:
  Bpd() = default;
  /// Row-major tiles; checks that neighbouring edges match and that no pipe
  /// leaves through the top or left boundary.
  Bpd(int rows, int cols, std::vector<Tile> tiles);
  /// Rows joined by '/', e.g. "...rh/.rhch/rchch/vv.vr/vvrcc".
  static Bpd from_rows(std::string_view text);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Tile at(int i, int j) const { return tiles_[index(i, j)]; }

  /// Row-major tile letters without separators.
  std::string encoding() const;
  std::string rows_string() const;

  bool operator==(const Bpd& o) const = default;
  auto operator<=>(const Bpd& o) const { return encoding() <=> o.encoding(); }

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>((i - 1) * cols_ + (j - 1));
  }
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Tile> tiles_;
};

/// Pipe entering the right edge of row i leaves through the bottom of
/// column p(i). Throws BpdError when a pipe dangles or two pipes cross twice.
PartialPermutation permutation_of(const Bpd& p);

Bpd rothe_bpd(const Permutation& w);
/// The Rothe BPD of the completion, restricted to p's shape.
Bpd rothe_bpd(const PartialPermutation& p);

struct DroopMove {
  Cell source;  // the ┌ being drooped
  Cell target;  // the blank it moves to
  auto operator<=>(const DroopMove&) const = default;
};

std::vector<std::pair<DroopMove, Bpd>> droops(const Bpd& p);
Bpd apply_droop(const Bpd& p, const DroopMove& m);

/// Closure of the Rothe BPD under droops, sorted by encoding.
std::vector<Bpd> enumerate_bpds(const Permutation& w);
/// Restrictions of the BPDs of the completion, deduplicated.
std::vector<Bpd> enumerate_bpds(const PartialPermutation& p);
/// Every tiling of the n x n grid whose pipes trace w. Test oracle, n <= 6.
std::vector<Bpd> enumerate_bpds_bruteforce(const Permutation& w);
/// All reduced tilings of the n x n grid, keyed by permutation.
std::vector<std::pair<Permutation, Bpd>> all_bpds_bruteforce(int n);

Diagram diagram(const Bpd& p);
/// Product of (x_i - y_j) over the blank tiles.
Polynomial weight(const Bpd& p);

Bpd restrict(const Bpd& p, int m, int n);

/// The BPD of complete(u ⊞ v) obtained by pasting bu and bv into the Rothe
/// BPD of the block sum.
Bpd glue(const PartialPermutation& u, const PartialPermutation& v, const Bpd& bu, const Bpd& bv);

/// Box-drawing rendering, one grid row per line.
std::string render_ascii(const Bpd& p);
/// Accepts the rendering above or tile letters, one row per line.
Bpd parse_ascii(std::string_view text);

nlohmann::json to_json(const Bpd& p);
Bpd bpd_from_json(const nlohmann::json& j);

}  // namespace schubert

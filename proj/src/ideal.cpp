#include "schubert/ideal.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>

#include <gmpxx.h>

namespace schubert {

// ---- minors ---------------------------------------------------------------

namespace {

struct MaskHash {
  std::size_t operator()(const std::pair<std::uint64_t, std::uint64_t>& p) const {
    return std::hash<std::uint64_t>{}(p.first * 0x9E3779B97F4A7C15ULL ^ p.second);
  }
};

// Cofactor expansion along the top row of the submatrix, memoized.
class Expander {
 public:
  explicit Expander(const GenericMatrix& M) : M_(M) {
    if (M.m > 64 || M.n > 64) throw IdealError("matrix too large for minor expansion");
  }

  Polynomial det(std::uint64_t rows, std::uint64_t cols) {
    if (rows == 0) return Polynomial(1L);
    const auto key = std::make_pair(rows, cols);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    const int r = std::countr_zero(rows);
    const std::uint64_t rest_rows = rows & (rows - 1);
    Polynomial out;
    int pos = 0;
    for (std::uint64_t c = cols; c; c &= c - 1, ++pos) {
      const int col = std::countr_zero(c);
      if (M_.is_zero(r + 1, col + 1)) continue;
      Polynomial sub = det(rest_rows, cols & ~(std::uint64_t{1} << col));
      if (sub.is_zero()) continue;
      sub *= Polynomial(Variable::z(r + 1, col + 1));
      if (pos % 2)
        out -= sub;
      else
        out += sub;
    }
    memo_.emplace(key, out);
    return out;
  }

 private:
  const GenericMatrix& M_;
  std::unordered_map<std::pair<std::uint64_t, std::uint64_t>, Polynomial, MaskHash> memo_;
};

std::uint64_t mask_of(const std::vector<int>& idx, int bound) {
  std::uint64_t m = 0;
  int prev = 0;
  for (int i : idx) {
    if (i <= prev || i > bound) throw IdealError("minor indices must be increasing and inside the matrix");
    m |= std::uint64_t{1} << (i - 1);
    prev = i;
  }
  return m;
}

// All k-subsets of [1, n] as bit masks.
std::vector<std::uint64_t> subsets(int n, int k) {
  std::vector<std::uint64_t> out;
  if (k < 0 || k > n) return out;
  std::vector<int> idx(static_cast<std::size_t>(k));
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    std::uint64_t m = 0;
    for (int i : idx) m |= std::uint64_t{1} << i;
    out.push_back(m);
    int p = k - 1;
    while (p >= 0 && idx[static_cast<std::size_t>(p)] == n - k + p) --p;
    if (p < 0) break;
    ++idx[static_cast<std::size_t>(p)];
    for (int q = p + 1; q < k; ++q) idx[static_cast<std::size_t>(q)] = idx[static_cast<std::size_t>(q - 1)] + 1;
  }
  return out;
}

std::vector<int> bits(std::uint64_t m) {
  std::vector<int> out;
  for (; m; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
  return out;
}

// Sign-normalize so that the first stored term is positive.
Polynomial normalized(Polynomial p) {
  if (!p.is_zero() && p.terms().begin()->second < 0) p = -p;
  return p;
}

void check_fits(const GenericMatrix& M) {
  for (std::size_t i = 0; i < M.zeroed.length(); ++i)
    if (static_cast<int>(i) + 1 > M.m || M.zeroed.part(i) > M.n)
      throw IdealError("zeroed partition does not fit the matrix");
}

}  // namespace

Polynomial determinant(const GenericMatrix& M, const std::vector<int>& rows, const std::vector<int>& cols) {
  check_fits(M);
  if (rows.size() != cols.size()) throw IdealError("minor must be square");
  Expander ex(M);
  return ex.det(mask_of(rows, M.m), mask_of(cols, M.n));
}

namespace {

std::vector<Polynomial> minors_with(Expander& ex, const GenericMatrix& M, int k, int row_hi, int col_hi) {
  if (row_hi > M.m || col_hi > M.n || row_hi < 0 || col_hi < 0) throw IdealError("minor range outside the matrix");
  if (k < 1 || k > std::min(row_hi, col_hi)) throw IdealError("minor size out of range");
  std::vector<Polynomial> out;
  const auto col_sets = subsets(col_hi, k);
  for (std::uint64_t rs : subsets(row_hi, k))
    for (std::uint64_t cs : col_sets) {
      Polynomial d = ex.det(rs, cs);
      if (!d.is_zero()) out.push_back(std::move(d));
    }
  return out;
}

}  // namespace

std::vector<Polynomial> minors(const GenericMatrix& M, int k, int row_hi, int col_hi) {
  check_fits(M);
  Expander ex(M);
  return minors_with(ex, M, k, row_hi, col_hi);
}

namespace {

// Kuhn's augmenting paths on the nonzero pattern.
bool has_perfect_matching(const GenericMatrix& M, const std::vector<int>& rows, const std::vector<int>& cols) {
  const std::size_t k = rows.size();
  std::vector<int> match_col(k, -1);  // col index -> row index
  for (std::size_t r = 0; r < k; ++r) {
    std::vector<bool> seen(k, false);
    auto augment = [&](auto&& self, std::size_t row) -> bool {
      for (std::size_t c = 0; c < k; ++c) {
        if (seen[c] || M.is_zero(rows[row], cols[c])) continue;
        seen[c] = true;
        if (match_col[c] < 0 || self(self, static_cast<std::size_t>(match_col[c]))) {
          match_col[c] = static_cast<int>(row);
          return true;
        }
      }
      return false;
    };
    if (!augment(augment, r)) return false;
  }
  return true;
}

}  // namespace

std::optional<std::pair<Monomial, int>> minor_leading_term(const GenericMatrix& M, const std::vector<int>& rows,
                                                           const std::vector<int>& cols, const TermOrder& ord) {
  if (rows.size() != cols.size()) throw IdealError("minor must be square");
  if (!has_perfect_matching(M, rows, cols)) return std::nullopt;
  // Distinct variables never cancel, so the monomials are the perfect
  // matchings; under lex the greedy choice of the largest usable variable wins.
  std::vector<int> rs = rows, cs = cols;
  std::vector<std::pair<int, int>> chosen;  // (row position, col position) in the original lists
  std::vector<int> row_pos(rows.size()), col_pos(cols.size());
  std::iota(row_pos.begin(), row_pos.end(), 0);
  std::iota(col_pos.begin(), col_pos.end(), 0);
  while (!rs.empty()) {
    std::vector<std::pair<std::size_t, std::size_t>> cand;
    for (std::size_t a = 0; a < rs.size(); ++a)
      for (std::size_t b = 0; b < cs.size(); ++b)
        if (!M.is_zero(rs[a], cs[b])) cand.emplace_back(a, b);
    std::sort(cand.begin(), cand.end(), [&](const auto& x, const auto& y) {
      return ord.var_greater({rs[x.first], cs[x.second]}, {rs[y.first], cs[y.second]});
    });
    bool placed = false;
    for (const auto& [a, b] : cand) {
      std::vector<int> r2 = rs, c2 = cs;
      r2.erase(r2.begin() + static_cast<long>(a));
      c2.erase(c2.begin() + static_cast<long>(b));
      if (!has_perfect_matching(M, r2, c2)) continue;
      chosen.emplace_back(row_pos[a], col_pos[b]);
      rs = std::move(r2);
      cs = std::move(c2);
      row_pos.erase(row_pos.begin() + static_cast<long>(a));
      col_pos.erase(col_pos.begin() + static_cast<long>(b));
      placed = true;
      break;
    }
    if (!placed) throw IdealError("internal: matching lost");
  }
  std::sort(chosen.begin(), chosen.end());
  int inversions = 0;
  for (std::size_t a = 0; a < chosen.size(); ++a)
    for (std::size_t b = a + 1; b < chosen.size(); ++b)
      if (chosen[a].second > chosen[b].second) ++inversions;
  std::vector<Monomial::Entry> e;
  for (const auto& [a, b] : chosen)
    e.emplace_back(Variable::z(rows[static_cast<std::size_t>(a)], cols[static_cast<std::size_t>(b)]), 1);
  return std::make_pair(Monomial(std::move(e)), inversions % 2 ? -1 : 1);
}

// ---- generator sets ----------------------------------------------------------

nlohmann::json Ideal::to_json() const {
  nlohmann::json g = nlohmann::json::array();
  for (const auto& p : gens) g.push_back(p.to_json());
  return {{"ambient", {m, n}}, {"gens", g}};
}

Ideal Ideal::from_json(const nlohmann::json& j) {
  Ideal I;
  I.m = j.at("ambient").at(0).get<int>();
  I.n = j.at("ambient").at(1).get<int>();
  for (const auto& g : j.at("gens")) {
    Polynomial p = Polynomial::from_json(g);
    if (p.is_zero()) throw IdealError("ideal generators must be nonzero");
    I.gens.push_back(std::move(p));
  }
  return I;
}

namespace {

void add_unique(std::vector<Polynomial>& gens, std::set<Polynomial, bool (*)(const Polynomial&, const Polynomial&)>& seen,
                Polynomial p) {
  p = normalized(std::move(p));
  if (seen.insert(p).second) gens.push_back(std::move(p));
}

bool poly_less(const Polynomial& a, const Polynomial& b) { return a.terms() < b.terms(); }

}  // namespace

Ideal fulton_generators(const PartialPermutation& w) {
  Ideal I{w.rows(), w.cols(), {}};
  GenericMatrix Z{w.rows(), w.cols(), {}};
  Expander ex(Z);
  std::set<Polynomial, bool (*)(const Polynomial&, const Polynomial&)> seen(poly_less);
  for (const Cell& c : essential_set(w)) {
    const int r = rank_function(w, c.row, c.col);
    for (auto& p : minors_with(ex, Z, r + 1, c.row, c.col)) add_unique(I.gens, seen, std::move(p));
  }
  return I;
}

Ideal cdg_generators(const PartialPermutation& w) {
  Ideal I{w.rows(), w.cols(), {}};
  const Partition lambda = dominant_part(w);
  const Diagram dom = lambda.cells();
  std::set<Polynomial, bool (*)(const Polynomial&, const Polynomial&)> seen(poly_less);
  for (const Cell& c : dom) add_unique(I.gens, seen, Polynomial(Variable::z(c.row, c.col)));
  GenericMatrix Z{w.rows(), w.cols(), lambda};
  Expander ex(Z);
  for (const Cell& c : essential_set(w)) {
    if (dom.contains(c)) continue;
    const int r = rank_function(w, c.row, c.col);
    for (auto& p : minors_with(ex, Z, r + 1, c.row, c.col)) add_unique(I.gens, seen, std::move(p));
  }
  return I;
}

namespace {

Ideal reindexed(const Ideal& I, int a, int b) {
  if (a < 0 || b < 0) throw IdealError("shifts must be nonnegative");
  Ideal out{I.m, I.n, {}};
  for (const Polynomial& g : I.gens) {
    Polynomial h;
    for (const auto& [mono, c] : g.terms()) {
      std::vector<Monomial::Entry> e;
      bool vanished = false;
      for (const auto& [v, k] : mono.entries()) {
        if (!v.is_z()) throw IdealError("ideal generators must be in z variables");
        if (v.i + a > I.m || v.j + b > I.n) {
          vanished = true;
          break;
        }
        e.emplace_back(Variable::z(v.i + a, v.j + b), k);
      }
      if (!vanished) h.add_term(Monomial(std::move(e)), c);
    }
    if (!h.is_zero()) out.gens.push_back(std::move(h));
  }
  return out;
}

}  // namespace

Ideal shift_down(const Ideal& I, int a) { return reindexed(I, a, 0); }
Ideal shift_right(const Ideal& I, int b) { return reindexed(I, 0, b); }

Ideal with_ambient(const Ideal& I, int m, int n) {
  Ideal out{m, n, I.gens};
  for (const Polynomial& g : I.gens)
    for (const auto& [mono, c] : g.terms())
      for (const auto& [v, k] : mono.entries())
        if (v.i > m || v.j > n) throw IdealError("generator leaves the new ambient");
  return out;
}

// ---- Gröbner engine ---------------------------------------------------------

namespace {

using Exp = std::vector<std::uint8_t>;

struct Term {
  Exp e;
  mpq_class c;
};

// Terms sorted by decreasing exponent vector; index 0 is the largest
// variable, so vector comparison is the lex order.
using DPoly = std::vector<Term>;

class Engine {
 public:
  Engine(const Ideal& I, const TermOrder& ord, long budget) : budget_(budget) {
    std::set<Cell> cells;
    for (int i = 1; i <= I.m; ++i)
      for (int j = 1; j <= I.n; ++j) cells.insert({i, j});
    for (const Polynomial& g : I.gens)
      for (const auto& [mono, c] : g.terms())
        for (const auto& [v, k] : mono.entries()) {
          if (!v.is_z()) throw IdealError("ideal generators must be in z variables");
          cells.insert({v.i, v.j});
        }
    vars_.assign(cells.begin(), cells.end());
    std::sort(vars_.begin(), vars_.end(), [&](const Cell& a, const Cell& b) { return ord.var_greater(a, b); });
    for (std::size_t k = 0; k < vars_.size(); ++k) index_[vars_[k]] = k;
  }

  DPoly convert(const Polynomial& p) const {
    DPoly out;
    for (const auto& [mono, c] : p.terms()) {
      Exp e(vars_.size(), 0);
      for (const auto& [v, k] : mono.entries()) {
        if (k > 255) throw IdealError("exponent too large");
        e[index_.at({v.i, v.j})] = static_cast<std::uint8_t>(k);
      }
      out.push_back({std::move(e), mpq_class(c)});
    }
    std::sort(out.begin(), out.end(), [](const Term& a, const Term& b) { return a.e > b.e; });
    return out;
  }

  Monomial monomial(const Exp& e) const {
    std::vector<Monomial::Entry> en;
    for (std::size_t k = 0; k < e.size(); ++k)
      if (e[k]) en.emplace_back(Variable::z(vars_[k].row, vars_[k].col), e[k]);
    return Monomial(std::move(en));
  }

  // Primitive integer polynomial with positive leading coefficient.
  Polynomial back(const DPoly& f) const {
    mpz_class den = 1, num = 0;
    for (const Term& t : f) den = lcm(den, mpz_class(t.c.get_den()));
    for (const Term& t : f) num = gcd(num, mpz_class(t.c.get_num()));
    if (f.front().c < 0) num = -num;
    Polynomial out;
    for (const Term& t : f) {
      mpq_class q = t.c * den / num;
      out.add_term(monomial(t.e), q.get_num());
    }
    return out;
  }

  static bool divides(const Exp& a, const Exp& b) {
    for (std::size_t k = 0; k < a.size(); ++k)
      if (a[k] > b[k]) return false;
    return true;
  }
  static Exp lcm_of(const Exp& a, const Exp& b) {
    Exp e(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) e[k] = std::max(a[k], b[k]);
    return e;
  }
  static Exp minus(const Exp& a, const Exp& b) {
    Exp e(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) e[k] = static_cast<std::uint8_t>(a[k] - b[k]);
    return e;
  }
  static bool coprime(const Exp& a, const Exp& b) {
    for (std::size_t k = 0; k < a.size(); ++k)
      if (a[k] && b[k]) return false;
    return true;
  }
  static int degree(const Exp& a) { return std::accumulate(a.begin(), a.end(), 0); }

  void charge(std::size_t n) {
    ops_ += static_cast<long>(n);
    if (ops_ > budget_) throw BudgetExceeded("Gröbner budget of " + std::to_string(budget_) + " term operations exceeded");
  }

  // f - c * x^shift * g, f's first `skip` terms left untouched.
  DPoly sub_mul(const DPoly& f, std::size_t skip, const mpq_class& c, const Exp& shift, const DPoly& g) {
    charge(f.size() - skip + g.size());
    DPoly out(f.begin(), f.begin() + static_cast<long>(skip));
    out.reserve(f.size() + g.size());
    std::size_t a = skip, b = 0;
    Exp tmp(shift.size());
    auto shifted = [&](const Exp& e) {
      for (std::size_t k = 0; k < e.size(); ++k) {
        const int s = e[k] + shift[k];
        if (s > 255) throw IdealError("exponent too large");
        tmp[k] = static_cast<std::uint8_t>(s);
      }
      return tmp;
    };
    while (a < f.size() || b < g.size()) {
      if (b == g.size()) {
        out.push_back(f[a++]);
        continue;
      }
      Exp eb = shifted(g[b].e);
      if (a == f.size() || eb > f[a].e) {
        out.push_back({eb, -c * g[b].c});
        ++b;
      } else if (f[a].e > eb) {
        out.push_back(f[a++]);
      } else {
        mpq_class s = f[a].c - c * g[b].c;
        if (s != 0) out.push_back({std::move(eb), std::move(s)});
        ++a;
        ++b;
      }
    }
    return out;
  }

  // Full reduction modulo the polynomials at the given indices.
  DPoly reduce(DPoly f, const std::vector<const DPoly*>& G) {
    std::size_t done = 0;
    while (done < f.size()) {
      const DPoly* red = nullptr;
      for (const DPoly* g : G)
        if (divides(g->front().e, f[done].e)) {
          red = g;
          break;
        }
      if (!red) {
        ++done;
        continue;
      }
      const mpq_class c = f[done].c / red->front().c;
      f = sub_mul(f, done, c, minus(f[done].e, red->front().e), *red);
    }
    return f;
  }

  static void make_monic(DPoly& f) {
    const mpq_class lc = f.front().c;
    for (Term& t : f) t.c /= lc;
  }

  DPoly spoly(const DPoly& f, const DPoly& g) {
    const Exp l = lcm_of(f.front().e, g.front().e);
    DPoly a = sub_mul({}, 0, -1 / f.front().c, minus(l, f.front().e), f);
    return sub_mul(a, 0, 1 / g.front().c, minus(l, g.front().e), g);
  }

  long ops() const { return ops_; }

 private:
  std::vector<Cell> vars_;
  std::map<Cell, std::size_t> index_;
  long budget_;
  long ops_ = 0;
};

struct Pair {
  std::size_t i, j;
  Exp lcm;
  int deg;
};

}  // namespace

Ideal groebner(const Ideal& I, const TermOrder& ord, long budget, GroebnerStats* stats) {
  Engine eng(I, ord, budget);
  std::vector<DPoly> all;
  std::vector<std::size_t> G;
  std::vector<Pair> B;
  GroebnerStats st;

  auto lt = [&](std::size_t k) -> const Exp& { return all[k].front().e; };

  // Gebauer–Möller update with the new element h.
  auto update = [&](std::size_t h) {
    std::vector<Pair> C;
    for (std::size_t g : G) C.push_back({h, g, Engine::lcm_of(lt(h), lt(g)), 0});
    std::vector<Pair> D;
    while (!C.empty()) {
      Pair p = std::move(C.front());
      C.erase(C.begin());
      bool keep = Engine::coprime(lt(h), lt(p.j));
      if (!keep) {
        keep = true;
        for (const Pair& q : C)
          if (Engine::divides(q.lcm, p.lcm)) keep = false;
        for (const Pair& q : D)
          if (keep && Engine::divides(q.lcm, p.lcm)) keep = false;
      }
      if (keep) D.push_back(std::move(p));
    }
    std::vector<Pair> Bn;
    for (Pair& p : B) {
      const bool drop = Engine::divides(lt(h), p.lcm) && Engine::lcm_of(lt(p.i), lt(h)) != p.lcm &&
                        Engine::lcm_of(lt(p.j), lt(h)) != p.lcm;
      if (!drop) Bn.push_back(std::move(p));
    }
    for (Pair& p : D)
      if (!Engine::coprime(lt(p.i), lt(p.j))) {
        p.deg = Engine::degree(p.lcm);
        Bn.push_back(std::move(p));
      }
    B = std::move(Bn);
    std::vector<std::size_t> Gn;
    for (std::size_t g : G)
      if (!Engine::divides(lt(h), lt(g))) Gn.push_back(g);
    Gn.push_back(h);
    G = std::move(Gn);
  };

  auto current = [&] {
    std::vector<const DPoly*> out;
    for (std::size_t g : G) out.push_back(&all[g]);
    return out;
  };

  for (const Polynomial& p : I.gens) {
    DPoly f = eng.reduce(eng.convert(p), current());
    if (f.empty()) continue;
    Engine::make_monic(f);
    all.push_back(std::move(f));
    update(all.size() - 1);
  }

  while (!B.empty()) {
    // Normal strategy: smallest lcm degree, then smallest lcm.
    auto best = std::min_element(B.begin(), B.end(), [](const Pair& a, const Pair& b) {
      return a.deg != b.deg ? a.deg < b.deg : a.lcm < b.lcm;
    });
    Pair p = std::move(*best);
    B.erase(best);
    ++st.pairs_considered;
    ++st.pairs_reduced;
    DPoly s = eng.reduce(eng.spoly(all[p.i], all[p.j]), current());
    if (s.empty()) continue;
    Engine::make_monic(s);
    all.push_back(std::move(s));
    update(all.size() - 1);
  }

  // G has no leading monomial dividing another; reduce the tails.
  std::vector<DPoly> reduced;
  for (std::size_t g : G) {
    std::vector<const DPoly*> others;
    for (std::size_t h : G)
      if (h != g) others.push_back(&all[h]);
    DPoly tail(all[g].begin() + 1, all[g].end());
    tail = eng.reduce(std::move(tail), others);
    DPoly f{all[g].front()};
    f.insert(f.end(), tail.begin(), tail.end());
    reduced.push_back(std::move(f));
  }
  std::sort(reduced.begin(), reduced.end(), [](const DPoly& a, const DPoly& b) { return a.front().e > b.front().e; });
  Ideal out{I.m, I.n, {}};
  for (const DPoly& f : reduced) out.gens.push_back(eng.back(f));
  st.term_ops = eng.ops();
  if (stats) *stats = st;
  return out;
}

GroebnerCheck check_groebner(const Ideal& I, const TermOrder& ord, bool use_criteria, long budget) {
  Engine eng(I, ord, budget);
  std::vector<DPoly> F;
  for (const Polynomial& p : I.gens) {
    if (p.is_zero()) throw IdealError("ideal generators must be nonzero");
    F.push_back(eng.convert(p));
  }
  std::vector<const DPoly*> G;
  for (const DPoly& f : F) G.push_back(&f);
  const std::size_t n = F.size();
  // done[i][j]: pair already handled, for the chain criterion.
  std::vector<std::vector<bool>> done(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Exp& a = F[i].front().e;
      const Exp& b = F[j].front().e;
      bool skip = false;
      if (use_criteria) {
        skip = Engine::coprime(a, b);
        if (!skip) {
          const Exp l = Engine::lcm_of(a, b);
          for (std::size_t k = 0; k < n && !skip; ++k)
            if (k != i && k != j && done[std::min(i, k)][std::max(i, k)] && done[std::min(j, k)][std::max(j, k)] &&
                Engine::divides(F[k].front().e, l))
              skip = true;
        }
      }
      done[i][j] = true;
      if (skip) continue;
      DPoly rem = eng.reduce(eng.spoly(F[i], F[j]), G);
      if (!rem.empty()) return {false, i, j, eng.back(rem)};
    }
  return {};
}

bool is_groebner(const Ideal& I, const TermOrder& ord, bool use_criteria, long budget) {
  return check_groebner(I, ord, use_criteria, budget).ok;
}

MonomialIdeal leading_monomials(const Ideal& I, const TermOrder& ord) {
  std::vector<Monomial> gens;
  for (const Polynomial& g : I.gens)
    if (!g.is_zero()) gens.push_back(leading_term(g, ord).first);
  return MonomialIdeal(std::move(gens));
}

MonomialIdeal initial_ideal(const Ideal& I, const TermOrder& ord, long budget) {
  return leading_monomials(groebner(I, ord, budget), ord);
}

// ---- monomial ideals ---------------------------------------------------------

std::string CoordSubspace::to_string() const {
  std::string s = "<";
  for (std::size_t k = 0; k < vars.size(); ++k) {
    if (k) s += ",";
    s += vars[k].name();
  }
  return s + ">";
}

MonomialIdeal::MonomialIdeal(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(),
            [](const Monomial& a, const Monomial& b) { return a.degree() != b.degree() ? a.degree() < b.degree() : a < b; });
  for (Monomial& g : gens) {
    bool redundant = false;
    for (const Monomial& h : gens_)
      if (h.divides(g)) {
        redundant = true;
        break;
      }
    if (!redundant) gens_.push_back(std::move(g));
  }
  std::sort(gens_.begin(), gens_.end());
}

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
}

bool MonomialIdeal::contains(const MonomialIdeal& o) const {
  return std::all_of(o.gens_.begin(), o.gens_.end(), [&](const Monomial& g) { return contains(g); });
}

bool MonomialIdeal::is_squarefree() const {
  for (const Monomial& g : gens_)
    for (const auto& [v, e] : g.entries())
      if (e > 1) return false;
  return true;
}

MonomialIdeal MonomialIdeal::operator+(const MonomialIdeal& o) const {
  std::vector<Monomial> g = gens_;
  g.insert(g.end(), o.gens_.begin(), o.gens_.end());
  return MonomialIdeal(std::move(g));
}

MonomialIdeal MonomialIdeal::intersect(const MonomialIdeal& o) const {
  std::vector<Monomial> g;
  std::vector<const Monomial*> a_rest, b_rest;
  // A generator lying in the other ideal already lies in the intersection and
  // every lcm involving it is a multiple of it.
  for (const Monomial& a : gens_)
    if (o.contains(a))
      g.push_back(a);
    else
      a_rest.push_back(&a);
  for (const Monomial& b : o.gens_)
    if (contains(b))
      g.push_back(b);
    else
      b_rest.push_back(&b);
  for (const Monomial* a : a_rest)
    for (const Monomial* b : b_rest) g.push_back(a->lcm(*b));
  return MonomialIdeal(std::move(g));
}

MonomialIdeal MonomialIdeal::radical() const {
  std::vector<Monomial> g;
  for (const Monomial& m : gens_) {
    std::vector<Monomial::Entry> e;
    for (const auto& [v, k] : m.entries()) e.emplace_back(v, 1);
    g.emplace_back(std::move(e));
  }
  return MonomialIdeal(std::move(g));
}

MonomialIdeal MonomialIdeal::quotient_by_variable(const Variable& v) const {
  std::vector<Monomial> g;
  for (const Monomial& m : gens_) {
    std::vector<Monomial::Entry> e;
    for (const auto& [u, k] : m.entries()) {
      if (u == v) {
        if (k > 1) e.emplace_back(u, k - 1);
      } else {
        e.emplace_back(u, k);
      }
    }
    g.emplace_back(std::move(e));
  }
  return MonomialIdeal(std::move(g));
}

MonomialIdeal MonomialIdeal::times(const Monomial& m) const {
  std::vector<Monomial> g;
  for (const Monomial& a : gens_) g.push_back(a * m);
  return MonomialIdeal(std::move(g));
}

namespace {

MonomialIdeal shifted(const std::vector<Monomial>& gens, int a, int b) {
  if (a < 0 || b < 0) throw IdealError("shifts must be nonnegative");
  std::vector<Monomial> g;
  for (const Monomial& m : gens) {
    std::vector<Monomial::Entry> e;
    for (const auto& [v, k] : m.entries()) {
      if (!v.is_z()) throw IdealError("monomial ideals live in z variables");
      e.emplace_back(Variable::z(v.i + a, v.j + b), k);
    }
    g.emplace_back(std::move(e));
  }
  return MonomialIdeal(std::move(g));
}

}  // namespace

MonomialIdeal MonomialIdeal::shift_down(int a) const { return shifted(gens_, a, 0); }
MonomialIdeal MonomialIdeal::shift_right(int b) const { return shifted(gens_, 0, b); }

namespace {

using VarSet = std::vector<Variable>;  // sorted

void covers(const std::vector<VarSet>& gens, VarSet& chosen, std::set<VarSet>& out) {
  if (gens.empty()) {
    VarSet c = chosen;
    std::sort(c.begin(), c.end());
    out.insert(std::move(c));
    return;
  }
  const auto shortest =
      std::min_element(gens.begin(), gens.end(), [](const VarSet& a, const VarSet& b) { return a.size() < b.size(); });
  for (const Variable& x : *shortest) {
    std::vector<VarSet> rest;
    for (const VarSet& g : gens)
      if (!std::binary_search(g.begin(), g.end(), x)) rest.push_back(g);
    chosen.push_back(x);
    covers(rest, chosen, out);
    chosen.pop_back();
  }
}

}  // namespace

std::vector<CoordSubspace> MonomialIdeal::minimal_primes() const {
  std::vector<VarSet> supports;
  for (const Monomial& m : radical().gens_) {
    VarSet s;
    for (const auto& [v, k] : m.entries()) s.push_back(v);
    supports.push_back(std::move(s));
  }
  std::set<VarSet> all;
  VarSet chosen;
  covers(supports, chosen, all);
  std::vector<CoordSubspace> out;
  for (const VarSet& c : all) {
    bool minimal = true;
    for (const VarSet& d : all)
      if (d.size() < c.size() && std::includes(c.begin(), c.end(), d.begin(), d.end())) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back({c});
  }
  return out;
}

long MonomialIdeal::multiplicity_along(const CoordSubspace& P) const {
  const auto primes = minimal_primes();
  if (std::find(primes.begin(), primes.end(), P) == primes.end())
    throw IdealError("prime " + P.to_string() + " is not minimal over " + to_string());
  // Invert the variables outside P and count standard monomials of the
  // artinian contraction.
  const VarSet& vars = P.vars;
  std::vector<std::vector<int>> gens;
  for (const Monomial& m : gens_) {
    std::vector<int> e(vars.size(), 0);
    for (const auto& [v, k] : m.entries()) {
      auto it = std::lower_bound(vars.begin(), vars.end(), v);
      if (it != vars.end() && *it == v) e[static_cast<std::size_t>(it - vars.begin())] = k;
    }
    gens.push_back(std::move(e));
  }
  std::vector<int> bound(vars.size(), 0);
  for (const auto& e : gens) {
    int nonzero = 0, where = -1;
    for (std::size_t k = 0; k < e.size(); ++k)
      if (e[k]) ++nonzero, where = static_cast<int>(k);
    if (nonzero == 1) {
      int& b = bound[static_cast<std::size_t>(where)];
      b = b ? std::min(b, e[static_cast<std::size_t>(where)]) : e[static_cast<std::size_t>(where)];
    }
  }
  for (int b : bound)
    if (b == 0) throw IdealError("internal: contraction is not artinian");
  long count = 0;
  std::vector<int> x(vars.size(), 0);
  while (true) {
    const bool in = std::any_of(gens.begin(), gens.end(), [&](const std::vector<int>& e) {
      for (std::size_t k = 0; k < e.size(); ++k)
        if (e[k] > x[k]) return false;
      return true;
    });
    if (!in) ++count;
    std::size_t k = 0;
    while (k < x.size() && ++x[k] == bound[k]) x[k++] = 0;
    if (k == x.size()) break;
  }
  return count;
}

std::string MonomialIdeal::to_string() const {
  std::string s = "<";
  for (std::size_t k = 0; k < gens_.size(); ++k) {
    if (k) s += ",";
    s += gens_[k].to_string();
  }
  return s + ">";
}

nlohmann::json MonomialIdeal::to_json() const {
  nlohmann::json g = nlohmann::json::array();
  for (const Monomial& m : gens_) {
    nlohmann::json e = nlohmann::json::array();
    for (const auto& [v, k] : m.entries()) e.push_back({v.name(), k});
    g.push_back(e);
  }
  return {{"gens", g}};
}

MonomialIdeal MonomialIdeal::from_json(const nlohmann::json& j) {
  std::vector<Monomial> gens;
  for (const auto& m : j.at("gens")) {
    std::vector<Monomial::Entry> e;
    for (const auto& ve : m) e.emplace_back(Variable::parse(ve.at(0).get<std::string>()), ve.at(1).get<int>());
    gens.emplace_back(std::move(e));
  }
  return MonomialIdeal(std::move(gens));
}

Polynomial equivariant_class(const MonomialIdeal& A) {
  const auto primes = A.minimal_primes();
  int top = -1;
  for (const auto& P : primes) top = std::max(top, P.codim());
  Polynomial out;
  for (const auto& P : primes) {
    if (P.codim() != top) continue;
    Polynomial term(A.multiplicity_along(P));
    for (const Variable& v : P.vars) term *= x_minus_y(v.i, v.j);
    out += term;
  }
  return out;
}

MonomialIdeal l_ideal(const Diagram& d) {
  std::vector<Monomial> g;
  for (const Cell& c : d) g.push_back(Monomial::of(Variable::z(c.row, c.col)));
  return MonomialIdeal(std::move(g));
}

MonomialIdeal j_ideal(const PartialPermutation& w, const TermOrder& ord) {
  const Partition lambda = dominant_part(w);
  const Diagram dom = lambda.cells();
  std::vector<Monomial> g;
  for (const Cell& c : dom) g.push_back(Monomial::of(Variable::z(c.row, c.col)));
  GenericMatrix Z{w.rows(), w.cols(), lambda};
  for (const Cell& c : essential_set(w)) {
    if (dom.contains(c)) continue;
    const int k = rank_function(w, c.row, c.col) + 1;
    const auto col_sets = subsets(c.col, k);
    for (std::uint64_t rs : subsets(c.row, k))
      for (std::uint64_t cs : col_sets)
        if (auto lt = minor_leading_term(Z, bits(rs), bits(cs), ord)) g.push_back(lt->first);
  }
  return MonomialIdeal(std::move(g));
}

MonomialIdeal j_lambda(const Partition& lambda, int i, int j, const TermOrder& ord) {
  if (i < 0 || j < 0) throw IdealError("J^lambda needs nonnegative bounds");
  // The empty maximal minor is 1.
  if (i == 0 || j == 0) return MonomialIdeal({Monomial()});
  // Parts wider than the window are clipped; rows below i are ignored.
  std::vector<int> parts;
  for (std::size_t r = 0; r < lambda.length() && static_cast<int>(r) < i; ++r)
    parts.push_back(std::min(lambda.part(r), j));
  GenericMatrix Z{i, j, Partition(parts)};
  const int k = std::min(i, j);
  std::vector<Monomial> g;
  const auto col_sets = subsets(j, k);
  for (std::uint64_t rs : subsets(i, k))
    for (std::uint64_t cs : col_sets)
      if (auto lt = minor_leading_term(Z, bits(rs), bits(cs), ord)) g.push_back(lt->first);
  return MonomialIdeal(std::move(g));
}

}  // namespace schubert

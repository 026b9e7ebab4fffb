// One line per acceptance criterion; exit status 1 if any line fails.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <string>

#include "schubert/bpd.hpp"
#include "schubert/ideal.hpp"
#include "schubert/schubert.hpp"
#include "schubert/verify.hpp"

using namespace schubert;

namespace {

Permutation P(const char* s) { return Permutation::parse(s); }
Polynomial xy(int i, int j) { return x_minus_y(i, j); }
Monomial mono(const char* s) { return leading_term(Polynomial::parse(s), TermOrder::row_lex()).first; }

struct Result {
  bool ok = true;
  std::string detail;
};

// Collects failures with a short description of the first few.
struct Tally {
  Result r;
  int notes = 0;
  void expect(bool cond, const std::string& what) {
    if (cond) return;
    r.ok = false;
    if (notes++ < 3) r.detail += (r.detail.empty() ? "" : "; ") + what;
  }
};

Result bpd_formula() {
  Tally t;
  long count = 0;
  for (int n = 1; n <= 5; ++n)
    for (const auto& w : all_permutations(n)) {
      ++count;
      t.expect(schubert_bpd(w) == schubert_oracle(w), w.to_string());
    }
  if (t.r.ok) t.r.detail = std::to_string(count) + " permutations";
  return t.r;
}

Result golden_42153() {
  Tally t;
  const auto w = P("42153");
  t.expect(enumerate_bpds(w).size() == 3, "BPD count");
  const Polynomial product = xy(1, 1) * xy(1, 2) * xy(1, 3) * xy(2, 1) * (xy(4, 3) + xy(3, 1) + xy(2, 2));
  t.expect(schubert_bpd(w) == product, "BPD sum differs from the product form");
  t.expect(schubert_oracle(w) == product, "oracle differs from the product form");

  const Polynomial quartic = Polynomial::parse("z22*z33*z41 + z23*z31*z42 - z22*z31*z43 - z23*z32*z41");
  std::set<std::string> expected{"z11", "z12", "z13", "z21", quartic.to_string()};
  std::set<std::string> got;
  for (const auto& g : cdg_generators(w).gens) {
    const bool neg = g.terms().begin()->second < 0;
    got.insert(((neg ? -g : g) == -quartic ? quartic : (neg ? -g : g)).to_string());
  }
  t.expect(got == expected, "CDG generators");

  const Transition tr = transition(w);
  t.expect(tr.v == P("42135"), "v = " + tr.v.to_string());
  t.expect(std::set<Permutation>(tr.phi.begin(), tr.phi.end()) == std::set<Permutation>{P("43125"), P("42315")},
           "Phi");
  if (t.r.ok) t.r.detail = "3 BPDs, product form, 5 CDG generators, v = 42135, Phi = {43125, 42315}";
  return t.r;
}

Result golden_2143() {
  Tally t;
  const auto w = P("2143");
  std::vector<Polynomial> weights;
  for (const Bpd& b : enumerate_bpds(w)) weights.push_back(weight(b));
  std::vector<Polynomial> expected{xy(1, 1) * xy(3, 3), xy(1, 1) * xy(2, 1), xy(1, 1) * xy(1, 2)};
  auto key = [](const Polynomial& p) { return p.to_string(); };
  std::multiset<std::string> a, b;
  for (const auto& p : weights) a.insert(key(p));
  for (const auto& p : expected) b.insert(key(p));
  t.expect(a == b, "BPD weights");
  const Polynomial oracle = schubert_oracle(w);
  t.expect(oracle == xy(1, 1) * xy(3, 3) + xy(1, 1) * xy(2, 1) + xy(1, 1) * xy(1, 2), "oracle vs BPD expression");
  t.expect(oracle == xy(1, 1) * xy(3, 1) + xy(1, 1) * xy(2, 2) + xy(1, 1) * xy(1, 3), "oracle vs second expression");
  if (t.r.ok) t.r.detail = "3 BPDs with the expected weights; both expansions agree";
  return t.r;
}

Result cdg_census() {
  const auto s = scan(5, "cdg");
  Result r;
  r.ok = s.failing == std::vector<std::string>{"13254", "21543"} && s.skipped == 0 && s.total == 120;
  r.detail = std::to_string(s.passed) + " pass, fails:";
  for (const auto& f : s.failing) r.detail += " " + f;
  return r;
}

Result conjecture1_s5() {
  Tally t;
  ScanOptions row, col;
  col.check.order = TermOrder::col_lex();
  const auto a = scan_reports_parallel(5, "conjecture1", row);
  const auto b = scan_reports_parallel(5, "conjecture1", col);
  long pass_row = 0, pass_col = 0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    pass_row += a[k].passed();
    pass_col += b[k].passed();
    t.expect(a[k].passed(), "row-lex " + a[k].subject + ": " + a[k].reason);
    t.expect(b[k].passed(), "col-lex " + b[k].subject + ": " + b[k].reason);
    t.expect(a[k].witnesses["components"] == b[k].witnesses["components"], "component multisets differ for " + a[k].subject);
  }
  if (t.r.ok)
    t.r.detail = "row-lex " + std::to_string(pass_row) + "/120, col-lex " + std::to_string(pass_col) +
                 "/120, identical component multisets";
  return t.r;
}

Result universal_gb() {
  Tally t;
  const Ideal C = cdg_generators(P("42153"));
  t.expect(is_groebner(C, TermOrder::row_lex()), "row-lex");
  t.expect(is_groebner(C, TermOrder::col_lex()), "col-lex");
  t.expect(is_groebner(C, TermOrder::antidiag_lex()), "antidiag");
  std::vector<Cell> cells;
  for (int i = 1; i <= 5; ++i)
    for (int j = 1; j <= 5; ++j) cells.push_back({i, j});
  std::mt19937_64 rng(20240601);
  for (int k = 0; k < 5; ++k) {
    std::shuffle(cells.begin(), cells.end(), rng);
    const auto ord = TermOrder::custom(cells);
    t.expect(is_groebner(C, ord), ord.name());
    t.expect(is_groebner(C, ord, false), ord.name() + " (all pairs)");
  }
  if (t.r.ok) t.r.detail = "row-lex, col-lex, antidiag and 5 random custom orders";
  return t.r;
}

Result recurrence() {
  Tally t;
  const auto s = scan(6, "recurrence");
  long block_predominant = 0;
  for (const auto& w : all_permutations(6)) block_predominant += is_block_predominant(w);
  t.expect(s.failed == 0, "S6 failures");
  t.expect(s.passed == block_predominant, "every block-predominant w checked");

  const auto w = P("6,7,3,4,1,10,2,5,8,9");
  const auto r = check_recurrence(w);
  t.expect(r.passed(), "example: " + r.reason);
  t.expect(r.witnesses["lambda"] == "(5,5,2,2)" && r.witnesses["corner_identity"] == "holds", "z69 corner identity");
  const auto ord = TermOrder::row_lex();
  const Transition tr = transition(w);
  t.expect(tr.r == 6 && tr.s == 9 && tr.v == P("6,7,3,4,1,9,2,5,8,10"), "corner and v");
  const Monomial m = mono("z33*z45*z51*z62");
  t.expect(j_ideal(tr.v, ord).contains(m), "z33z45z51z62 in J_v");
  t.expect(tr.phi.size() == 3, "three transition terms");
  if (tr.phi.size() == 3) {
    const auto J2 = j_ideal(tr.phi[1], ord);
    const auto J3 = j_ideal(tr.phi[2], ord);
    t.expect(J2.contains(mono("z51*z62")) && mono("z51*z62").divides(m), "z51z62 in J_u2 divides the witness");
    t.expect(J3.contains(mono("z51")) && mono("z51").divides(m), "z51 in J_u3 divides the witness");
    t.expect(dominant_part(tr.phi[2]).to_string() == "(5,5,2,2,2)", "Dom(u3)");
  }
  if (t.r.ok)
    t.r.detail = std::to_string(s.passed) + " block-predominant in S6 plus the 10-element example with its witnesses";
  return t.r;
}

Result block_laws() {
  Tally t;
  const auto u = PartialPermutation::from_matrix({{0, 1, 0}, {1, 0, 0}, {0, 0, 0}});
  const auto v = PartialPermutation::from_matrix({{1, 0}, {0, 0}});
  const auto ex = check_block(u, v);
  t.expect(ex.passed(), "example: " + ex.reason);
  std::mt19937_64 rng(4);
  const auto perms3 = all_permutations(3);
  auto random_partial = [&] {
    const int rows = 1 + static_cast<int>(rng() % 3);
    const int cols = 1 + static_cast<int>(rng() % 3);
    std::vector<int> free(static_cast<std::size_t>(cols));
    std::iota(free.begin(), free.end(), 1);
    std::shuffle(free.begin(), free.end(), rng);
    std::vector<int> r2c(static_cast<std::size_t>(rows), 0);
    std::size_t next = 0;
    for (auto& c : r2c)
      if (next < free.size() && rng() % 4) c = free[next++];
    return PartialPermutation(rows, cols, r2c);
  };
  for (int k = 0; k < 50; ++k) {
    const bool perms = k % 2 == 0;
    const PartialPermutation a = perms ? PartialPermutation(perms3[rng() % 6]) : random_partial();
    const PartialPermutation b = perms ? PartialPermutation(perms3[rng() % 6]) : random_partial();
    const auto r = check_block(a, b);
    t.expect(r.passed(), r.subject + ": " + r.reason);
  }
  if (t.r.ok) t.r.detail = "example and 50 random pairs: product law, glued shape, Gröbner concatenation";
  return t.r;
}

Result property_suites() {
  Tally t;
  for (const auto& w : all_permutations(4)) {
    auto closure = enumerate_bpds(w);
    auto brute = enumerate_bpds_bruteforce(w);
    std::sort(brute.begin(), brute.end());
    t.expect(closure == brute, "droop closure " + w.to_string());
  }
  long bpds = 0;
  for (int n = 1; n <= 5; ++n)
    for (const auto& w : all_permutations(n))
      for (const Bpd& b : enumerate_bpds(w)) {
        ++bpds;
        t.expect(static_cast<int>(diagram(b).size()) == w.length(), "|D| for " + w.to_string());
      }
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> coeff(-5, 5), deg(0, 3);
  for (int k = 0; k < 100; ++k) {
    Polynomial f;
    for (int term = 0; term < 6; ++term) {
      std::vector<Monomial::Entry> e;
      for (int v = 1; v <= 4; ++v) e.emplace_back(Variable::x(v), deg(rng));
      e.emplace_back(Variable::y(1), deg(rng) % 2);
      f.add_term(Monomial(std::move(e)), coeff(rng));
    }
    for (int i = 1; i <= 3; ++i) t.expect(divided_difference(divided_difference(f, i), i).is_zero(), "nilpotence");
    for (int i = 1; i <= 2; ++i)
      t.expect(divided_difference(divided_difference(divided_difference(f, i), i + 1), i) ==
                   divided_difference(divided_difference(divided_difference(f, i + 1), i), i + 1),
               "braid");
  }
  long bases = 0;
  for (const auto& ord : {TermOrder::row_lex(), TermOrder::col_lex()})
    for (int n = 1; n <= 5; ++n)
      for (const auto& w : all_permutations(n)) {
        ++bases;
        t.expect(is_groebner(groebner(fulton_generators(w), ord), ord, false), "GB recheck " + w.to_string());
      }
  if (t.r.ok)
    t.r.detail = "S4 closures, " + std::to_string(bpds) + " BPDs, 100 random polynomials, " + std::to_string(bases) +
                 " bases rechecked";
  return t.r;
}

Result banner() {
  const auto s = scan(5, "banner");
  Result r;
  r.ok = s.failed == 0 && s.passed > 0;
  r.detail = std::to_string(s.passed) + " banner permutations in S5";
  for (const auto& f : s.failing) r.detail += ", fails " + f;
  return r;
}

Result pattern() {
  const auto s5 = check_pattern_conjecture(5);
  ScanOptions opt;
  opt.sample = 200;
  opt.seed = 2024;
  const auto s6 = check_pattern_conjecture(6, opt);
  Result r;
  r.ok = s5.failed == 0 && s5.skipped == 0 && s5.total == 120 && s6.failed == 0 && s6.skipped == 0 && s6.total == 200;
  r.detail = "S5 " + std::to_string(s5.passed) + "/120, S6 sample " + std::to_string(s6.passed) + "/200";
  for (const auto& f : s5.failing) r.detail += ", fails " + f;
  for (const auto& f : s6.failing) r.detail += ", fails " + f;
  return r;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Result()>>> criteria{
      {"1 BPD formula on S1..S5", bpd_formula},
      {"2 golden example 42153", golden_42153},
      {"3 golden example 2143", golden_2143},
      {"4 S5 CDG census", cdg_census},
      {"5 component conjecture on S5", conjecture1_s5},
      {"6 universal Gröbner basis for 42153", universal_gb},
      {"7 predominant recurrence", recurrence},
      {"8 block laws", block_laws},
      {"9 property suites", property_suites},
      {"10 banner theorem on S5", banner},
      {"11 pattern conjecture", pattern},
  };
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Result r;
    try {
      r = run();
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failures += !r.ok;
    std::cout << (r.ok ? "PASS " : "FAIL ") << name << ": " << r.detail << " (" << secs << " s)" << std::endl;
  }
  return failures ? 1 : 0;
}

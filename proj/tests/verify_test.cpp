#include <gtest/gtest.h>

#include <random>
#include <set>

#include "schubert/verify.hpp"

using namespace schubert;

namespace {

Permutation P(const char* s) { return Permutation::parse(s); }

PartialPermutation random_partial(std::mt19937_64& rng) {
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
}

}  // namespace

TEST(Reports, BpdFormula) {
  EXPECT_TRUE(check_bpd_formula(P("42153")).passed());
  EXPECT_TRUE(check_bpd_formula(Permutation::identity(3)).passed());
  EXPECT_EQ(check_bpd_formula(P("42153")).witnesses["bpd_count"], 3);
  const auto s = scan(4, "bpd-formula");
  EXPECT_EQ(s.passed, 24);
  EXPECT_EQ(s.exit_code(), 0);
}

TEST(Reports, Transition) {
  const auto r = check_transition(P("42153"));
  ASSERT_TRUE(r.passed()) << r.reason;
  EXPECT_EQ(r.witnesses["v"], "42135");
  EXPECT_EQ(r.witnesses["phi"], nlohmann::json::array({"43125", "42315"}));
  std::set<nlohmann::json> diagrams;
  for (const auto& d : r.witnesses["diagrams"]) diagrams.insert(d["diagram"]);
  EXPECT_TRUE(diagrams.count(nlohmann::json::parse("[[1,1],[1,2],[1,3],[2,1],[4,3]]")));
  EXPECT_TRUE(diagrams.count(nlohmann::json::parse("[[1,1],[1,2],[1,3],[2,1],[2,2]]")));
  EXPECT_TRUE(diagrams.count(nlohmann::json::parse("[[1,1],[1,2],[1,3],[2,1],[3,1]]")));
  EXPECT_TRUE(check_transition(P("21")).passed());
  EXPECT_TRUE(check_transition(Permutation::identity(2)).passed());
  EXPECT_EQ(scan(5, "transition").passed, 120);
}

TEST(Reports, Cdg) {
  EXPECT_TRUE(check_cdg(P("4321")).passed());
  EXPECT_TRUE(check_cdg(P("25143")).passed());
  const auto r = check_cdg(P("13254"));
  ASSERT_EQ(r.outcome, Outcome::Fail);
  // The witness replays: the remainder is a nonzero element of the ideal
  // whose leading term is not divisible by any generator's.
  const Polynomial rem = Polynomial::parse(r.witnesses["remainder"].get<std::string>());
  EXPECT_FALSE(rem.is_zero());
  const Ideal G = cdg_generators(P("13254"));
  const auto lt = leading_term(rem, TermOrder::row_lex()).first;
  EXPECT_FALSE(leading_monomials(G, TermOrder::row_lex()).contains(lt));
  EXPECT_TRUE(initial_ideal(G, TermOrder::row_lex()).contains(lt));

  CheckOptions tiny;
  tiny.budget = 5;
  EXPECT_EQ(check_cdg(P("13254"), tiny).outcome, Outcome::Skipped);
}

TEST(Reports, CdgCensusS5) {
  const auto s = scan(5, "cdg");
  EXPECT_EQ(s.total, 120);
  EXPECT_EQ(s.failing, (std::vector<std::string>{"13254", "21543"}));
  EXPECT_EQ(s.exit_code(), 1);
}

TEST(Reports, Conjecture1) {
  const auto r = check_conjecture1(P("42153"));
  ASSERT_TRUE(r.passed()) << r.reason;
  EXPECT_EQ(r.witnesses["components"].size(), 3u);
  for (const auto& w : all_permutations(5))
    if (is_banner(w)) {
      const auto b = check_conjecture1(w);
      ASSERT_TRUE(b.passed()) << w.to_string();
      for (const auto& c : b.witnesses["components"]) EXPECT_EQ(c["count"], 1);
    }
}

TEST(Reports, Recurrence) {
  EXPECT_TRUE(check_recurrence(P("4321")).passed());
  EXPECT_EQ(check_recurrence(P("13254")).outcome, Outcome::Skipped);
  const auto r = check_recurrence(P("6,7,3,4,1,10,2,5,8,9"));
  ASSERT_TRUE(r.passed()) << r.reason;
  EXPECT_EQ(r.witnesses["lambda"], "(5,5,2,2)");
  EXPECT_EQ(r.witnesses["corner_identity"], "holds");
  EXPECT_EQ(r.witnesses["dominant_parts_of_phi"][2], "(5,5,2,2,2)");
}

TEST(Reports, Banner) {
  EXPECT_EQ(check_banner(P("13254")).outcome, is_banner(P("13254")) ? Outcome::Pass : Outcome::Skipped);
  const auto s = scan(5, "banner");
  EXPECT_EQ(s.failed, 0);
  EXPECT_GT(s.passed, 0);
}

TEST(Reports, Block) {
  const auto u = PartialPermutation::from_matrix({{0, 1, 0}, {1, 0, 0}, {0, 0, 0}});
  const auto v = PartialPermutation::from_matrix({{1, 0}, {0, 0}});
  const auto r = check_block(u, v);
  ASSERT_TRUE(r.passed()) << r.reason;
  EXPECT_EQ(r.witnesses["block_sum"], "462153");
  EXPECT_TRUE(check_block(Permutation::identity(1), Permutation::identity(1)).passed());
  std::mt19937_64 rng(3);
  for (int k = 0; k < 20; ++k) {
    const auto a = random_partial(rng);
    const auto b = random_partial(rng);
    const auto rr = check_block(a, b);
    EXPECT_TRUE(rr.passed()) << rr.subject << ": " << rr.reason;
  }
  const auto perms = all_permutations(3);
  for (int k = 0; k < 10; ++k) {
    const auto rr = check_block(perms[rng() % 6], perms[rng() % 6]);
    EXPECT_TRUE(rr.passed()) << rr.subject << ": " << rr.reason;
  }
}

TEST(Reports, PatternConjecture) {
  const auto s4 = check_pattern_conjecture(4);
  EXPECT_EQ(s4.passed, 24);
  const auto s5 = check_pattern_conjecture(5);
  EXPECT_EQ(s5.passed, 120);
  EXPECT_FALSE(avoids_cdg_patterns(P("13254")));
  EXPECT_FALSE(avoids_cdg_patterns(P("21543")));
}

TEST(Reports, JsonSchema) {
  const auto j = check_cdg(P("42153")).to_json();
  for (const char* key : {"subject", "check", "order", "outcome", "witnesses", "elapsed_ms"})
    EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_EQ(j["outcome"], "pass");
  EXPECT_FALSE(check_cdg(P("42153")).to_json(false).contains("elapsed_ms"));
  EXPECT_THROW(run_check("nope", P("21")), std::invalid_argument);
}

TEST(Scan, SamplingIsDeterministic) {
  ScanOptions opt;
  opt.sample = 200;
  opt.seed = 7;
  const auto a = scan_subjects(6, opt);
  const auto b = scan_subjects(6, opt);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.size(), 200u);
  EXPECT_TRUE(std::is_sorted(a.begin(), a.end()));
  EXPECT_EQ(std::set<Permutation>(a.begin(), a.end()).size(), 200u);
  opt.seed = 8;
  EXPECT_NE(scan_subjects(6, opt), a);
}

// Results do not depend on the number of workers.
TEST(Scan, ParallelMatchesSerial) {
  for (const std::string check : {"cdg", "conjecture1", "recurrence"}) {
    const auto serial = scan_reports_serial(5, check);
    for (int jobs : {1, 2, 4}) {
      ScanOptions opt;
      opt.jobs = jobs;
      const auto par = scan_reports_parallel(5, check, opt);
      ASSERT_EQ(par.size(), serial.size());
      for (std::size_t k = 0; k < par.size(); ++k) EXPECT_EQ(par[k].to_json(false), serial[k].to_json(false));
    }
    EXPECT_EQ(scan(5, check).to_json(), scan_serial(5, check).to_json());
  }
}

TEST(Scan, ExitCodes) {
  ScanSummary s;
  s.total = 2;
  s.passed = 2;
  EXPECT_EQ(s.exit_code(), 0);
  s.passed = 1;
  s.failed = 1;
  EXPECT_EQ(s.exit_code(), 1);
  s.failed = 0;
  s.passed = 0;
  s.skipped = 2;
  EXPECT_EQ(s.exit_code(), 3);
}

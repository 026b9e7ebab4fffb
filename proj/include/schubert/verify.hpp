#pragma once

// Batch checks over permutations and their reports.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "schubert/ideal.hpp"
#include "schubert/perm.hpp"
#include "schubert/term_order.hpp"

namespace schubert {

enum class Outcome { Pass, Fail, Skipped };
std::string to_string(Outcome o);

struct VerificationReport {
  std::string subject;
  std::string check;
  std::string order;  // empty when the check does not use one
  Outcome outcome = Outcome::Pass;
  std::string reason;  // set for fail and skipped
  nlohmann::json witnesses = nlohmann::json::object();
  double elapsed_ms = 0;

  bool passed() const { return outcome == Outcome::Pass; }
  nlohmann::json to_json(bool with_elapsed = true) const;
};

struct CheckOptions {
  TermOrder order = TermOrder::row_lex();
  long budget = kDefaultBudget;
};

VerificationReport check_bpd_formula(const Permutation& w);
/// Polynomial transition identity and the matching diagram multisets.
VerificationReport check_transition(const Permutation& w);
/// Passes iff the CDG generators form a Gröbner basis.
VerificationReport check_cdg(const Permutation& w, const CheckOptions& opt = {});
/// Components of the initial ideal against the BPD diagrams.
VerificationReport check_conjecture1(const Permutation& w, const CheckOptions& opt = {});
/// J_w = (J_v + <z_rs>) ∩ ⋂ J_u over the transition, plus the containments
/// and the corner identity J_w + J_v = z_rs J^lambda + J_v.
VerificationReport check_recurrence(const Permutation& w, const CheckOptions& opt = {});
/// Initial ideal equals the intersection of the BPD coordinate primes.
VerificationReport check_banner(const Permutation& w, const CheckOptions& opt = {});
/// Pattern avoidance agrees with the CDG property.
VerificationReport check_pattern(const Permutation& w, const CheckOptions& opt = {});
/// BPD product law, glued diagram shape and Gröbner concatenation.
VerificationReport check_block(const PartialPermutation& u, const PartialPermutation& v,
                               const CheckOptions& opt = {});

/// Names accepted by run_check and scan.
const std::vector<std::string>& check_names();
/// Throws std::invalid_argument for unknown names.
VerificationReport run_check(const std::string& name, const Permutation& w, const CheckOptions& opt = {});

struct ScanSummary {
  int n = 0;
  std::string check;
  std::string order;
  long total = 0;
  long passed = 0;
  long failed = 0;
  long skipped = 0;
  std::vector<std::string> failing;       // in subject order
  std::vector<std::string> skipped_subjects;

  nlohmann::json to_json() const;
  /// 0 all pass, 1 any fail, 3 everything skipped.
  int exit_code() const;
};

struct ScanOptions {
  CheckOptions check;
  int jobs = 0;                      // 0: OpenMP default
  std::optional<std::size_t> sample;  // draw this many permutations
  std::uint64_t seed = 1;
};

/// The permutations a scan visits: all of S_n, or a seeded sample sorted
/// lexicographically.
std::vector<Permutation> scan_subjects(int n, const ScanOptions& opt);

/// Reports in subject order, one thread.
std::vector<VerificationReport> scan_reports_serial(int n, const std::string& check, const ScanOptions& opt = {});
/// Reports in subject order, computed on OpenMP threads.
std::vector<VerificationReport> scan_reports_parallel(int n, const std::string& check, const ScanOptions& opt = {});

ScanSummary summarize(int n, const std::string& check, const std::string& order,
                      const std::vector<VerificationReport>& reports);

ScanSummary scan_serial(int n, const std::string& check, const ScanOptions& opt = {});
ScanSummary scan(int n, const std::string& check, const ScanOptions& opt = {});

/// Pattern avoidance against the CDG property over S_n.
ScanSummary check_pattern_conjecture(int n, const ScanOptions& opt = {});

}  // namespace schubert

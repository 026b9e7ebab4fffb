// schubert-ice: command line front end for the checks.
//
// Exit codes: 0 all pass, 1 any fail, 2 usage or arithmetic error,
// 3 everything skipped.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "schubert/bpd.hpp"
#include "schubert/ideal.hpp"
#include "schubert/schubert.hpp"
#include "schubert/verify.hpp"

using namespace schubert;

namespace {

int exit_code(const VerificationReport& r) {
  switch (r.outcome) {
    case Outcome::Pass:
      return 0;
    case Outcome::Fail:
      return 1;
    case Outcome::Skipped:
      return 3;
  }
  return 2;
}

void print_report(const VerificationReport& r, bool json) {
  if (json) {
    std::cout << r.to_json().dump(2) << "\n";
    return;
  }
  std::cout << r.check << " " << r.subject;
  if (!r.order.empty()) std::cout << " [" << r.order << "]";
  std::cout << ": " << to_string(r.outcome);
  if (!r.reason.empty()) std::cout << " (" << r.reason << ")";
  std::cout << "\n";
  for (const auto& [key, value] : r.witnesses.items())
    std::cout << "  " << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
}

CheckOptions check_options(const std::string& order, long budget) {
  CheckOptions opt;
  opt.order = TermOrder::parse(order);
  opt.budget = budget;
  return opt;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bumpless pipe dreams, Schubert polynomials and diagonal Gröbner degenerations"};
  app.require_subcommand(1);

  std::string w_text, u_text, v_text, order = "row-lex", render, method = "bpd", check;
  bool count = false, json = false;
  long budget = kDefaultBudget;
  int n = 0, jobs = 0;
  std::optional<std::size_t> sample;
  std::uint64_t seed = 1;

  auto add_order = [&](CLI::App* sub) {
    sub->add_option("--order", order, "row-lex, col-lex, antidiag or custom:z11,z21,...");
    sub->add_option("--budget", budget, "Gröbner budget in term operations");
  };

  auto* bpd = app.add_subcommand("bpd", "Enumerate the BPDs of a (partial) permutation");
  bpd->add_option("w", w_text, "permutation, e.g. 42153, or matrix rows like 010;100;000")->required();
  auto* count_flag = bpd->add_flag("--count", count, "print only the number of BPDs");
  bpd->add_option("--render", render, "ascii")->check(CLI::IsMember({"ascii"}))->excludes(count_flag);
  bpd->add_flag("--json", json, "JSON output");

  auto* poly = app.add_subcommand("poly", "Double Schubert polynomial");
  poly->add_option("w", w_text)->required();
  poly->add_option("--method", method, "bpd or oracle")->check(CLI::IsMember({"bpd", "oracle"}));
  poly->add_flag("--json", json);

  auto* tr = app.add_subcommand("transition", "Transition of w and its identity");
  tr->add_option("w", w_text)->required();
  tr->add_flag("--json", json);

  auto* cdg = app.add_subcommand("cdg", "Do the CDG generators form a Gröbner basis?");
  cdg->add_option("w", w_text)->required();
  add_order(cdg);
  cdg->add_flag("--json", json);

  auto* conj = app.add_subcommand("conjecture1", "Initial ideal components against BPD diagrams");
  conj->add_option("w", w_text)->required();
  add_order(conj);
  conj->add_flag("--json", json);

  auto* rec = app.add_subcommand("recurrence", "Monomial-ideal transition recurrence");
  rec->add_option("w", w_text)->required();
  rec->add_flag("--json", json);

  auto* block = app.add_subcommand("block", "Block-sum laws for u (+) v");
  block->add_option("u", u_text)->required();
  block->add_option("v", v_text)->required();
  add_order(block);
  block->add_flag("--json", json);

  auto* scan_cmd = app.add_subcommand("scan", "Run a check over S_n");
  scan_cmd->add_option("n", n)->required()->check(CLI::Range(1, 9));
  scan_cmd->add_option("--check", check)->required()->check(CLI::IsMember(check_names()));
  add_order(scan_cmd);
  scan_cmd->add_option("--jobs", jobs, "worker threads (0: OpenMP default)")->check(CLI::NonNegativeNumber);
  auto* sample_opt = scan_cmd->add_option("--sample", sample, "check a seeded sample of this size");
  scan_cmd->add_option("--seed", seed)->needs(sample_opt);
  scan_cmd->add_flag("--json", json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (bpd->parsed()) {
      const auto p = PartialPermutation::parse(w_text);
      const auto bpds = p.is_permutation() ? enumerate_bpds(p.to_permutation()) : enumerate_bpds(p);
      if (count) {
        std::cout << (json ? nlohmann::json{{"count", bpds.size()}}.dump() : std::to_string(bpds.size())) << "\n";
      } else if (json) {
        nlohmann::json out = nlohmann::json::array();
        for (const auto& b : bpds) {
          nlohmann::json j = to_json(b);
          j["weight"] = weight(b).to_string();
          out.push_back(j);
        }
        std::cout << out.dump(2) << "\n";
      } else {
        for (const auto& b : bpds) {
          if (render == "ascii")
            std::cout << render_ascii(b);
          else
            std::cout << b.rows_string() << "\n";
          std::cout << "  weight: " << weight(b).to_string() << "\n";
        }
      }
      return 0;
    }
    if (poly->parsed()) {
      const auto w = Permutation::parse(w_text);
      const Polynomial s = method == "oracle" ? schubert_oracle(w) : schubert_bpd(w);
      if (json)
        std::cout << nlohmann::json{{"w", w.to_string()}, {"method", method}, {"polynomial", s.to_json()}}.dump(2)
                  << "\n";
      else
        std::cout << s.to_string() << "\n";
      return 0;
    }
    if (tr->parsed()) {
      const auto r = check_transition(Permutation::parse(w_text));
      print_report(r, json);
      return exit_code(r);
    }
    if (cdg->parsed()) {
      const auto r = check_cdg(Permutation::parse(w_text), check_options(order, budget));
      print_report(r, json);
      return exit_code(r);
    }
    if (conj->parsed()) {
      const auto r = check_conjecture1(Permutation::parse(w_text), check_options(order, budget));
      print_report(r, json);
      return exit_code(r);
    }
    if (rec->parsed()) {
      const auto r = check_recurrence(Permutation::parse(w_text));
      print_report(r, json);
      return exit_code(r);
    }
    if (block->parsed()) {
      const auto r =
          check_block(PartialPermutation::parse(u_text), PartialPermutation::parse(v_text), check_options(order, budget));
      print_report(r, json);
      return exit_code(r);
    }
    if (scan_cmd->parsed()) {
      ScanOptions opt;
      opt.check = check_options(order, budget);
      opt.jobs = jobs;
      opt.sample = sample;
      opt.seed = seed;
      const auto reports = scan_reports_parallel(n, check, opt);
      const auto summary = summarize(n, check, check == "bpd-formula" || check == "transition" ? "" : opt.check.order.name(),
                                     reports);
      if (json) {
        nlohmann::json j = summary.to_json();
        j["failures"] = nlohmann::json::array();
        for (const auto& r : reports)
          if (r.outcome == Outcome::Fail) j["failures"].push_back(r.to_json());
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "scan S_" << n << " " << check;
        if (!summary.order.empty()) std::cout << " [" << summary.order << "]";
        std::cout << ": " << summary.passed << " pass, " << summary.failed << " fail, " << summary.skipped
                  << " skipped of " << summary.total << "\n";
        for (const auto& r : reports)
          if (r.outcome == Outcome::Fail) std::cout << "  fail " << r.subject << ": " << r.reason << "\n";
      }
      return summary.exit_code();
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

#include "schubert/verify.hpp"

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <exception>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

#include "schubert/bpd.hpp"
#include "schubert/schubert.hpp"

namespace schubert {

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::Pass:
      return "pass";
    case Outcome::Fail:
      return "fail";
    case Outcome::Skipped:
      return "skipped";
  }
  return {};
}

nlohmann::json VerificationReport::to_json(bool with_elapsed) const {
  nlohmann::json j{{"subject", subject}, {"check", check}, {"order", order}, {"outcome", schubert::to_string(outcome)},
                   {"witnesses", witnesses}};
  if (!reason.empty()) j["reason"] = reason;
  if (with_elapsed) j["elapsed_ms"] = elapsed_ms;
  return j;
}

namespace {

nlohmann::json diagram_json(const Diagram& d) {
  nlohmann::json out = nlohmann::json::array();
  for (const Cell& c : d) out.push_back({c.row, c.col});
  return out;
}

nlohmann::json perms_json(const std::vector<Permutation>& ps) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

using DiagramMultiset = std::map<Diagram, long>;

DiagramMultiset diagrams_of(const std::vector<Bpd>& bpds, std::optional<Cell> extra = {}) {
  DiagramMultiset out;
  for (const Bpd& b : bpds) {
    Diagram d = diagram(b);
    if (extra) d.insert(*extra);
    ++out[d];
  }
  return out;
}

nlohmann::json multiset_json(const DiagramMultiset& m) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [d, k] : m) out.push_back({{"diagram", diagram_json(d)}, {"count", k}});
  return out;
}

Diagram cells_of(const CoordSubspace& P) {
  Diagram d;
  for (const Variable& v : P.vars) d.insert({v.i, v.j});
  return d;
}

template <class F>
VerificationReport timed(std::string subject, std::string check, std::string order, F&& body) {
  VerificationReport r;
  r.subject = std::move(subject);
  r.check = std::move(check);
  r.order = std::move(order);
  const auto start = std::chrono::steady_clock::now();
  try {
    body(r);
  } catch (const BudgetExceeded& e) {
    r.outcome = Outcome::Skipped;
    r.reason = std::string("budget: ") + e.what();
  }
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

void fail(VerificationReport& r, std::string reason) {
  if (r.outcome == Outcome::Fail) return;  // keep the first violation
  r.outcome = Outcome::Fail;
  r.reason = std::move(reason);
}

}  // namespace

VerificationReport check_bpd_formula(const Permutation& w) {
  return timed(w.to_string(), "bpd-formula", "", [&](VerificationReport& r) {
    const auto bpds = enumerate_bpds(w);
    const Polynomial by_bpd = schubert_bpd(w);
    const Polynomial oracle = schubert_oracle(w);
    r.witnesses["bpd_count"] = bpds.size();
    r.witnesses["polynomial"] = by_bpd.to_string();
    if (by_bpd != oracle) {
      r.witnesses["oracle"] = oracle.to_string();
      r.witnesses["difference"] = (by_bpd - oracle).to_string();
      fail(r, "BPD sum differs from the divided-difference polynomial");
    }
  });
}

VerificationReport check_transition(const Permutation& w) {
  return timed(w.to_string(), "transition", "", [&](VerificationReport& r) {
    if (w.is_identity()) {
      r.witnesses["note"] = "identity has no maximal corner";
      return;
    }
    const Transition t = transition(w);
    r.witnesses["corner"] = {t.r, t.s};
    r.witnesses["v"] = t.v.to_string();
    r.witnesses["phi"] = perms_json(t.phi);

    Polynomial rhs = x_minus_y(t.r, t.s) * schubert_bpd(t.v);
    for (const auto& u : t.phi) rhs += schubert_bpd(u);
    const Polynomial lhs = schubert_bpd(w);
    if (lhs != rhs) {
      r.witnesses["difference"] = (lhs - rhs).to_string();
      fail(r, "polynomial transition identity fails");
    }

    const DiagramMultiset left = diagrams_of(enumerate_bpds(w));
    DiagramMultiset right = diagrams_of(enumerate_bpds(t.v), Cell{t.r, t.s});
    for (const auto& u : t.phi)
      for (const auto& [d, k] : diagrams_of(enumerate_bpds(u))) right[d] += k;
    r.witnesses["diagrams"] = multiset_json(left);
    if (left != right) {
      r.witnesses["diagrams_from_transition"] = multiset_json(right);
      fail(r, "BPD diagram multisets differ");
    }
  });
}

VerificationReport check_cdg(const Permutation& w, const CheckOptions& opt) {
  return timed(w.to_string(), "cdg", opt.order.name(), [&](VerificationReport& r) {
    const Ideal G = cdg_generators(w);
    r.witnesses["generators"] = G.gens.size();
    const GroebnerCheck c = check_groebner(G, opt.order, true, opt.budget);
    if (!c.ok) {
      r.witnesses["s_pair"] = {G.gens[c.i].to_string(), G.gens[c.j].to_string()};
      r.witnesses["remainder"] = c.remainder.to_string();
      fail(r, "an S-polynomial of the CDG generators has a nonzero remainder");
    }
  });
}

VerificationReport check_conjecture1(const Permutation& w, const CheckOptions& opt) {
  return timed(w.to_string(), "conjecture1", opt.order.name(), [&](VerificationReport& r) {
    const MonomialIdeal A = initial_ideal(fulton_generators(w), opt.order, opt.budget);
    const int len = w.length();
    DiagramMultiset components;
    nlohmann::json wrong_codim = nlohmann::json::array();
    for (const auto& P : A.minimal_primes()) {
      components[cells_of(P)] = A.multiplicity_along(P);
      if (P.codim() != len) wrong_codim.push_back(P.to_string());
    }
    const DiagramMultiset bpds = diagrams_of(enumerate_bpds(w));
    r.witnesses["initial_ideal"] = A.to_string();
    r.witnesses["components"] = multiset_json(components);
    r.witnesses["class_matches"] = equivariant_class(A) == schubert_oracle(w);
    if (!wrong_codim.empty()) {
      r.witnesses["wrong_codimension"] = wrong_codim;
      fail(r, "a minimal prime has codimension other than the length");
    }
    if (components != bpds) {
      r.witnesses["bpd_diagrams"] = multiset_json(bpds);
      fail(r, "component multiplicities differ from the BPD diagram multiset");
    }
  });
}

VerificationReport check_recurrence(const Permutation& w, const CheckOptions& opt) {
  return timed(w.to_string(), "recurrence", opt.order.name(), [&](VerificationReport& r) {
    if (!is_block_predominant(w)) {
      r.outcome = Outcome::Skipped;
      r.reason = "not block predominant";
      return;
    }
    if (is_dominant(w)) {
      r.witnesses["note"] = "dominant: J_w is generated by the diagram variables";
      if (j_ideal(w, opt.order) != l_ideal(rothe_diagram(w))) fail(r, "J_w differs from the diagram variables");
      return;
    }
    const Transition t = transition(w);
    const MonomialIdeal Jw = j_ideal(w, opt.order);
    const MonomialIdeal Jv = j_ideal(t.v, opt.order);
    const MonomialIdeal corner({Monomial::of(Variable::z(t.r, t.s))});
    r.witnesses["corner"] = {t.r, t.s};
    r.witnesses["v"] = t.v.to_string();
    r.witnesses["phi"] = perms_json(t.phi);
    nlohmann::json dom_u = nlohmann::json::array();

    MonomialIdeal rhs = Jv + corner;
    for (const auto& u : t.phi) {
      const MonomialIdeal Ju = j_ideal(u, opt.order);
      dom_u.push_back(dominant_part(u).to_string());
      if (!Ju.contains(Jv)) fail(r, "J_v is not contained in J_u for u = " + u.to_string());
      rhs = rhs.intersect(Ju);
    }
    r.witnesses["dominant_parts_of_phi"] = dom_u;
    if (!Jw.contains(Jv)) fail(r, "J_v is not contained in J_w");
    if (Jw != rhs) {
      r.witnesses["J_w"] = Jw.to_string();
      r.witnesses["recurrence_side"] = rhs.to_string();
      fail(r, "J_w differs from (J_v + <z_rs>) ∩ ⋂ J_u");
    }

    // The corner identity lives in the coordinates of the block holding
    // the corner.
    try {
      const PredominantProfile p = predominant_profile(w);
      r.witnesses["lambda"] = p.lambda.to_string();
      r.witnesses["block_offset"] = {p.row_offset, p.col_offset};
      const MonomialIdeal good = j_lambda(p.lambda, p.r - 1, p.s - 1, opt.order)
                                     .shift_down(p.row_offset)
                                     .shift_right(p.col_offset)
                                     .times(Monomial::of(Variable::z(t.r, t.s)));
      const bool ok = good + Jv == Jw + Jv;
      r.witnesses["corner_identity"] = ok ? "holds" : "fails";
      if (!ok) fail(r, "J_w + J_v differs from z_rs J^lambda + J_v");
    } catch (const PermError& e) {
      r.witnesses["corner_identity"] = std::string("not applicable: ") + e.what();
    }
  });
}

VerificationReport check_banner(const Permutation& w, const CheckOptions& opt) {
  return timed(w.to_string(), "banner", opt.order.name(), [&](VerificationReport& r) {
    if (!is_banner(w)) {
      r.outcome = Outcome::Skipped;
      r.reason = "not a banner permutation";
      return;
    }
    const MonomialIdeal A = initial_ideal(fulton_generators(w), opt.order, opt.budget);
    std::optional<MonomialIdeal> inter;
    for (const Bpd& b : enumerate_bpds(w)) {
      const MonomialIdeal l = l_ideal(diagram(b));
      inter = inter ? inter->intersect(l) : l;
    }
    r.witnesses["initial_ideal"] = A.to_string();
    if (!inter || A != *inter) {
      r.witnesses["intersection"] = inter ? inter->to_string() : "";
      fail(r, "initial ideal differs from the intersection of the BPD primes");
    }
    if (!A.is_squarefree()) fail(r, "initial ideal is not squarefree");
    if (equivariant_class(A) != schubert_oracle(w)) fail(r, "equivariant class differs from the Schubert polynomial");
  });
}

VerificationReport check_pattern(const Permutation& w, const CheckOptions& opt) {
  const VerificationReport cdg = check_cdg(w, opt);
  VerificationReport r = cdg;
  r.check = "pattern";
  const bool avoids = avoids_cdg_patterns(w);
  r.witnesses["avoids_patterns"] = avoids;
  if (cdg.outcome == Outcome::Skipped) return r;
  r.witnesses["cdg"] = cdg.passed();
  r.outcome = Outcome::Pass;
  r.reason.clear();
  if (avoids != cdg.passed())
    fail(r, avoids ? "avoids every pattern but is not CDG" : "contains a pattern but is CDG");
  return r;
}

VerificationReport check_block(const PartialPermutation& u, const PartialPermutation& v, const CheckOptions& opt) {
  const std::string subject = u.to_string() + " (+) " + v.to_string();
  return timed(subject, "block", opt.order.name(), [&](VerificationReport& r) {
    const PartialPermutation sum = block_sum(u, v);
    const Permutation w = complete(sum);
    const int N = w.size();
    const int a = v.rows(), b = u.cols();
    r.witnesses["block_sum"] = w.to_string();

    // Product law and glued diagrams.
    const auto bu = enumerate_bpds(u);
    const auto bv = enumerate_bpds(v);
    const auto bw = enumerate_bpds(w);
    r.witnesses["bpd_counts"] = {bu.size(), bv.size(), bw.size()};
    if (bw.size() != bu.size() * bv.size()) fail(r, "BPD count is not the product of the block counts");
    std::set<Bpd> glued;
    for (const Bpd& x : bu)
      for (const Bpd& y : bv) {
        const Bpd g = glue(u, v, x, y);
        Diagram expect;
        for (int i = 1; i <= a; ++i)
          for (int j = 1; j <= b; ++j) expect.insert({i, j});
        for (const Cell& c : diagram(x)) expect.insert({c.row + a, c.col});
        for (const Cell& c : diagram(y)) expect.insert({c.row, c.col + b});
        if (diagram(g) != expect) {
          r.witnesses["glued"] = g.rows_string();
          fail(r, "glued diagram is not the block plus the shifted diagrams");
        }
        glued.insert(g);
      }
    if (glued != std::set<Bpd>(bw.begin(), bw.end())) fail(r, "glued BPDs differ from the BPDs of the block sum");

    // Gröbner bases of the blocks, shifted into place, with the block variables.
    Ideal cat{N, N, {}};
    for (int i = 1; i <= a; ++i)
      for (int j = 1; j <= b; ++j) cat.gens.push_back(Polynomial(Variable::z(i, j)));
    for (auto& g : shift_down(with_ambient(groebner(fulton_generators(u), opt.order, opt.budget), N, N), a).gens)
      cat.gens.push_back(std::move(g));
    for (auto& g : shift_right(with_ambient(groebner(fulton_generators(v), opt.order, opt.budget), N, N), b).gens)
      cat.gens.push_back(std::move(g));
    r.witnesses["concatenated_generators"] = cat.gens.size();
    if (!is_groebner(cat, opt.order, true, opt.budget)) fail(r, "concatenated bases are not a Gröbner basis");
    Ideal full = fulton_generators(w);
    if (groebner(cat, opt.order, opt.budget).gens != groebner(full, opt.order, opt.budget).gens)
      fail(r, "concatenated bases do not generate the ideal of the block sum");
  });
}

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names{"bpd-formula", "transition", "cdg",    "conjecture1",
                                              "recurrence",  "banner",     "pattern"};
  return names;
}

VerificationReport run_check(const std::string& name, const Permutation& w, const CheckOptions& opt) {
  if (name == "bpd-formula") return check_bpd_formula(w);
  if (name == "transition") return check_transition(w);
  if (name == "cdg") return check_cdg(w, opt);
  if (name == "conjecture1") return check_conjecture1(w, opt);
  if (name == "recurrence") return check_recurrence(w, opt);
  if (name == "banner") return check_banner(w, opt);
  if (name == "pattern") return check_pattern(w, opt);
  throw std::invalid_argument("unknown check '" + name + "'");
}

nlohmann::json ScanSummary::to_json() const {
  return {{"n", n},           {"check", check},     {"order", order},    {"total", total},
          {"pass", passed},   {"fail", failed},     {"skipped", skipped}, {"failing", failing},
          {"skipped_subjects", skipped_subjects}};
}

int ScanSummary::exit_code() const {
  if (failed > 0) return 1;
  if (total > 0 && skipped == total) return 3;
  return 0;
}

std::vector<Permutation> scan_subjects(int n, const ScanOptions& opt) {
  std::vector<Permutation> all = all_permutations(n);
  if (!opt.sample || *opt.sample >= all.size()) return all;
  // Partial Fisher-Yates with an explicit draw so the sample does not depend
  // on the standard library's distributions.
  std::mt19937_64 rng(opt.seed);
  for (std::size_t k = 0; k < *opt.sample; ++k) {
    const std::size_t pick = k + static_cast<std::size_t>(rng() % (all.size() - k));
    std::swap(all[k], all[pick]);
  }
  all.resize(*opt.sample);
  std::sort(all.begin(), all.end());
  return all;
}

namespace {

std::string order_label(const std::string& check, const TermOrder& ord) {
  return check == "bpd-formula" || check == "transition" ? "" : ord.name();
}

void validate_check(const std::string& check) {
  const auto& names = check_names();
  if (std::find(names.begin(), names.end(), check) == names.end())
    throw std::invalid_argument("unknown check '" + check + "'");
}

}  // namespace

std::vector<VerificationReport> scan_reports_serial(int n, const std::string& check, const ScanOptions& opt) {
  validate_check(check);
  std::vector<VerificationReport> out;
  for (const auto& w : scan_subjects(n, opt)) out.push_back(run_check(check, w, opt.check));
  return out;
}

std::vector<VerificationReport> scan_reports_parallel(int n, const std::string& check, const ScanOptions& opt) {
  validate_check(check);
  const std::vector<Permutation> subjects = scan_subjects(n, opt);
  std::vector<VerificationReport> out(subjects.size());
  std::exception_ptr error;
  const int threads = opt.jobs > 0 ? opt.jobs : omp_get_max_threads();
  const long count = static_cast<long>(subjects.size());
#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (long k = 0; k < count; ++k) {
    try {
      out[static_cast<std::size_t>(k)] = run_check(check, subjects[static_cast<std::size_t>(k)], opt.check);
    } catch (...) {
#pragma omp critical
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return out;
}

ScanSummary summarize(int n, const std::string& check, const std::string& order,
                      const std::vector<VerificationReport>& reports) {
  ScanSummary s;
  s.n = n;
  s.check = check;
  s.order = order;
  for (const auto& r : reports) {
    ++s.total;
    switch (r.outcome) {
      case Outcome::Pass:
        ++s.passed;
        break;
      case Outcome::Fail:
        ++s.failed;
        s.failing.push_back(r.subject);
        break;
      case Outcome::Skipped:
        ++s.skipped;
        s.skipped_subjects.push_back(r.subject);
        break;
    }
  }
  return s;
}

ScanSummary scan_serial(int n, const std::string& check, const ScanOptions& opt) {
  return summarize(n, check, order_label(check, opt.check.order), scan_reports_serial(n, check, opt));
}

ScanSummary scan(int n, const std::string& check, const ScanOptions& opt) {
  return summarize(n, check, order_label(check, opt.check.order), scan_reports_parallel(n, check, opt));
}

ScanSummary check_pattern_conjecture(int n, const ScanOptions& opt) { return scan(n, "pattern", opt); }

}  // namespace schubert

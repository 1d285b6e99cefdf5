// Acceptance gate: one line per criterion, nonzero exit if any fails.
// Every criterion re-derives its expected values from scratch and is timed
// against its stated budget; a budget overrun fails the criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "devissage/abelian.hpp"
#include "devissage/completion.hpp"
#include "devissage/covers.hpp"
#include "devissage/group_spec.hpp"
#include "devissage/kernel_basis.hpp"
#include "devissage/presentation.hpp"
#include "devissage/verify.hpp"

using namespace devissage;

namespace {

struct Criterion {
  std::string name;
  double limit_seconds;
  std::function<bool(std::string&)> run;
};

bool suite_passes(const std::string& name, const VerifyOptions& options,
                  std::string& detail) {
  VerifySuite suite = run_verify_suite(name, options);
  detail = std::to_string(suite.cases.size()) + " cases";
  if (!suite.all_passed()) {
    for (const VerifyCase& c : suite.cases)
      if (!c.passed) {
        detail = "failed: " + c.name + " (" + c.detail + ")";
        break;
      }
    return false;
  }
  return true;
}

bool criterion_hyperelliptic(std::string& detail) {
  int checked = 0;
  for (int g = 1; g <= 2; ++g)
    for (int n = 0; n <= 2; ++n) {
      FpPresentation even = tietze_eliminate(hyperelliptic_quotient(g, n));
      if (even.rank() != 2 * g + 2 * n || !even.relators().empty()) {
        detail = "even case g=" + std::to_string(g) + " n=" + std::to_string(n) +
                 " gave rank " + std::to_string(even.rank());
        return false;
      }
      ++checked;
      if (n >= 1) {
        FpPresentation odd =
            tietze_eliminate(hyperelliptic_quotient(g, n, true));
        if (odd.rank() != 2 * g + 2 * n - 1 || !odd.relators().empty()) {
          detail = "odd case g=" + std::to_string(g) + " n=" + std::to_string(n) +
                   " gave rank " + std::to_string(odd.rank());
          return false;
        }
        ++checked;
      }
    }
  detail = std::to_string(checked) + " quotient presentations";
  return true;
}

bool criterion_censuses(std::string& detail) {
  GroupClass sol = GroupClass::parse("sol");
  FiniteGroup s3 = parse_group_spec("S3");
  FiniteGroup c2 = parse_group_spec("C2");

  struct Fixed {
    int genus, punctures;
    const FiniteGroup* group;
    const char* spec;
    GroupClass cls;
    std::uint64_t expect;
  };
  std::vector<Fixed> fixed = {
      {0, 3, &s3, "S3", sol, 3},
      {2, 0, &c2, "C2", GroupClass::parse("prime-to:3"), 15},
      {1, 0, &s3, "S3", sol, 0},
  };
  for (const Fixed& f : fixed) {
    CoverCensus census =
        cover_census(f.genus, f.punctures, *f.group, f.spec, f.cls);
    if (census.cover_count != f.expect) {
      detail = std::string(f.spec) + " census gave " +
               std::to_string(census.cover_count) + ", expected " +
               std::to_string(f.expect);
      return false;
    }
  }

  // Cyclic deck groups on the 3-punctured sphere, cross-checked against the
  // subgroup-lattice Moebius oracle.
  FpPresentation free2(2, {});
  for (int m = 1; m <= 6; ++m) {
    std::string spec = "C" + std::to_string(m);
    FiniteGroup cm = parse_group_spec(spec);
    std::uint64_t direct = count_epimorphisms(free2, cm);
    std::uint64_t lattice = count_epimorphisms_moebius(free2, cm);
    CoverCensus census = cover_census(0, 3, cm, spec, sol);
    if (direct != lattice || census.epi_count != direct) {
      detail = spec + ": direct " + std::to_string(direct) + ", lattice " +
               std::to_string(lattice) + ", census " +
               std::to_string(census.epi_count);
      return false;
    }
  }
  detail = "3 fixed censuses + C1..C6 lattice cross-check";
  return true;
}

bool criterion_completion(std::string& detail) {
  std::vector<GroupClass> classes = {
      GroupClass::parse("sol"),        GroupClass::parse("nil"),
      GroupClass::parse("ell:2"),      GroupClass::parse("ell:3"),
      GroupClass::parse("prime-to:2"), GroupClass::parse("prime-to:3"),
      GroupClass::parse("prime-to:5")};
  int checked = 0;
  for (const auto& [spec, g] : builtin_corpus(24)) {
    for (const GroupClass& c : classes) {
      if (max_class_quotient(g, c).kernel != class_kernel_oracle(g, c)) {
        detail = spec + " disagrees with the oracle for " + c.to_string();
        return false;
      }
      ++checked;
    }
  }
  detail = std::to_string(checked) + " (group, class) pairs";
  return true;
}

bool criterion_abelianization(std::string& detail) {
  int checked = 0;
  for (int g = 0; g <= 4; ++g)
    for (int n = 1; n <= 4; ++n) {
      FpPresentation p = punctured_curve_group(g, n);
      AbelianInvariants before = abelian_invariants(p);
      if (before.free_rank != 2 * g + n - 1 || !before.torsion.empty()) {
        detail = "punctured g=" + std::to_string(g) + " n=" + std::to_string(n) +
                 " abelianized to " + to_text(before);
        return false;
      }
      std::vector<std::string> labels;
      for (const auto& [label, w] : p.ramification()) labels.push_back(label);
      for (const std::string& label : labels) p = fill_puncture(p, label);
      AbelianInvariants after = abelian_invariants(p);
      if (after.free_rank != 2 * g || !after.torsion.empty()) {
        detail = "filled g=" + std::to_string(g) + " n=" + std::to_string(n) +
                 " abelianized to " + to_text(after);
        return false;
      }
      ++checked;
    }
  detail = std::to_string(checked) + " (g, n) pairs, filled and unfilled";
  return true;
}

}  // namespace

int main() {
  VerifyOptions defaults;

  std::vector<Criterion> criteria = {
      {"Nielsen-Schreier rank formula on 50 random kernels", 10.0,
       [&](std::string& d) { return suite_passes("ns-rank", defaults, d); }},
      {"mu_N kernel basis equals the Schreier basis, N = 1..8", 1.0,
       [&](std::string& d) { return suite_passes("mu-n", defaults, d); }},
      {"chi kernel basis + 1000 verified rewrites, g <= 2, n <= 2", 30.0,
       [&](std::string& d) { return suite_passes("chi", defaults, d); }},
      {"hyperelliptic quotients Tietze-reduce to the free ranks", 5.0,
       criterion_hyperelliptic},
      {"cover censuses match their frozen values and the lattice oracle",
       60.0, criterion_censuses},
      {"class completions agree with the intersection oracle (order <= 24)",
       60.0, criterion_completion},
      {"Sylow decompositions verified for nilpotent groups (order <= 48)",
       30.0, [&](std::string& d) { return suite_passes("sylow", defaults, d); }},
      {"completion exactness: 40 compliant triples + S3/A3 counterexample",
       30.0,
       [&](std::string& d) { return suite_passes("exactness", defaults, d); }},
      {"Hopfian check by exhaustive endomorphism search (order <= 24)", 60.0,
       [&](std::string& d) { return suite_passes("hopf", defaults, d); }},
      {"abelianization bookkeeping before and after filling punctures", 5.0,
       criterion_abelianization},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const Criterion& c = criteria[i];
    std::string detail;
    bool ok = false;
    auto start = std::chrono::steady_clock::now();
    try {
      ok = c.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    double seconds = std::chrono::duration<double>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    bool in_budget = seconds < c.limit_seconds;
    bool passed = ok && in_budget;
    if (!passed) ++failures;
    std::printf("%s %2zu. %-62s %7.3fs / %gs%s%s\n", passed ? "PASS" : "FAIL",
                i + 1, c.name.c_str(), seconds, c.limit_seconds,
                detail.empty() ? "" : "  -- ", detail.c_str());
    if (ok && !in_budget)
      std::printf("      over time budget\n");
  }
  if (failures > 0) {
    std::printf("%d of %zu criteria failed\n", failures, criteria.size());
    return 1;
  }
  std::printf("all %zu criteria passed\n", criteria.size());
  return 0;
}

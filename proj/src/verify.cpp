#include "devissage/verify.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include "devissage/completion.hpp"
#include "devissage/coset_table.hpp"
#include "devissage/covers.hpp"
#include "devissage/finite_group.hpp"
#include "devissage/group_spec.hpp"
#include "devissage/kernel_basis.hpp"
#include "devissage/presentation.hpp"

namespace devissage {

namespace {

VerifyCase make_case(std::string name, bool passed, std::string detail) {
  return VerifyCase{std::move(name), passed, std::move(detail)};
}

std::set<Word> word_set(const std::vector<std::pair<std::string, Word>>& gens) {
  std::set<Word> out;
  for (const auto& [label, w] : gens) out.insert(w);
  return out;
}

// --- ns-rank: random kernels of maps from free groups obey i(r-1)+1. ------

VerifySuite suite_ns_rank(const VerifyOptions& opt) {
  VerifySuite suite{"ns-rank", {}};
  auto corpus = builtin_corpus(6);
  std::mt19937 rng(opt.seed);
  for (int sample = 0; sample < opt.ns_rank_samples; ++sample) {
    int r = 2 + static_cast<int>(rng() % 2);
    const auto& [spec, g] = corpus[rng() % corpus.size()];
    std::vector<int> images;
    for (int k = 0; k < r; ++k)
      images.push_back(static_cast<int>(rng() % g.order()));
    CosetTable table = kernel_coset_table(FpPresentation(r, {}), g, images);
    int index = table.index();
    int expect = index * (r - 1) + 1;
    int got = static_cast<int>(schreier_generators(table).generators.size());
    std::string name = "sample " + std::to_string(sample) + ": F" +
                       std::to_string(r) + " -> " + spec;
    std::string detail = "index " + std::to_string(index) + ", " +
                         std::to_string(got) + " Schreier generators, formula " +
                         std::to_string(expect);
    suite.cases.push_back(make_case(name, got == expect, detail));
  }
  return suite;
}

// --- mu-n: the explicit basis is the Schreier basis. -----------------------

VerifySuite suite_mu_n(const VerifyOptions& opt) {
  VerifySuite suite{"mu-n", {}};
  for (int n = 1; n <= opt.mu_max; ++n) {
    SubgroupBasis mu = mu_n_kernel_basis(n);
    bool size_ok = mu.generators.size() == static_cast<std::size_t>(n) + 1;
    bool set_ok =
        word_set(mu.generators) == word_set(schreier_generators(mu.table).generators);
    std::string detail = std::to_string(mu.generators.size()) +
                         " generators at index " + std::to_string(mu.table.index());
    suite.cases.push_back(
        make_case("mu_" + std::to_string(n), size_ok && set_ok, detail));
  }
  return suite;
}

// --- chi: basis equality plus rewrite soundness on random kernel words. ----

Word random_kernel_word(std::mt19937& rng, int g, int n, int max_len) {
  int rank = 2 * g + 1 + n;
  for (;;) {
    int len = 2 + static_cast<int>(rng() % (max_len - 1));
    std::vector<letter_type> raw;
    for (int i = 0; i < len; ++i) {
      auto k = static_cast<letter_type>(1 + rng() % rank);
      raw.push_back(rng() % 2 ? k : -k);
    }
    Word w(rank, raw);
    if (w.letters().empty()) continue;
    if (chi_value(g, n, w) != 0) continue;
    return w;
  }
}

VerifySuite suite_chi(const VerifyOptions& opt) {
  VerifySuite suite{"chi", {}};
  struct Combo {
    int g, n;
  };
  std::vector<Combo> combos;
  for (int g = 1; g <= 2; ++g)
    for (int n = 0; n <= 2; ++n) combos.push_back({g, n});

  for (const auto& [g, n] : combos) {
    SubgroupBasis chi = chi_kernel_basis(g, n);
    std::size_t expect = static_cast<std::size_t>(4 * g + 2 * n + 1);
    bool size_ok = chi.generators.size() == expect;
    bool set_ok = word_set(chi.generators) ==
                  word_set(schreier_generators(chi.table).generators);
    std::string name =
        "basis g=" + std::to_string(g) + " n=" + std::to_string(n);
    suite.cases.push_back(make_case(
        name, size_ok && set_ok,
        std::to_string(chi.generators.size()) + " generators, expected " +
            std::to_string(expect)));
  }

  std::mt19937 rng(opt.seed);
  int per_combo = (opt.chi_rewrites + static_cast<int>(combos.size()) - 1) /
                  static_cast<int>(combos.size());
  for (const auto& [g, n] : combos) {
    int verified = 0;
    std::string failure;
    for (int i = 0; i < per_combo && failure.empty(); ++i) {
      Word w = random_kernel_word(rng, g, n, 20);
      auto factors = rewrite_in_chi_basis(g, n, w);
      if (expand_chi_factors(g, n, factors) == w)
        ++verified;
      else
        failure = "rewrite of '" + to_text(w) + "' does not expand back";
    }
    std::string name =
        "rewrites g=" + std::to_string(g) + " n=" + std::to_string(n);
    suite.cases.push_back(make_case(
        name, failure.empty(),
        failure.empty() ? std::to_string(verified) + " words verified"
                        : failure));
  }
  return suite;
}

// --- exactness: completion exactness over a deterministic triple walk. -----

struct Triple {
  std::string group;
  FiniteGroup g;
  ElementSet n;
  std::string n_desc;
  GroupClass cls;
};

std::vector<Triple> compliant_triples(const VerifyOptions& opt, int cap) {
  std::vector<GroupClass> classes = {
      GroupClass::parse("sol"), GroupClass::parse("ell:2"),
      GroupClass::parse("ell:3"), GroupClass::parse("prime-to:2"),
      GroupClass::parse("prime-to:3")};

  // Nonabelian groups first so the walk is not all cyclic before the cap.
  auto corpus = builtin_corpus(opt.max_order);
  std::stable_partition(corpus.begin(), corpus.end(),
                        [](const auto& entry) { return !entry.second.is_abelian(); });

  std::vector<Triple> triples;
  for (const auto& [spec, g] : corpus) {
    if (g.order() == 1) continue;
    std::vector<ElementSet> proper;
    for (const ElementSet& n : normal_subgroups(g))
      if (n.size() > 1 && static_cast<int>(n.size()) < g.order())
        proper.push_back(n);
    if (proper.empty()) continue;
    // The smallest and largest proper normal subgroups give two different
    // quotient shapes per group.
    std::vector<ElementSet> picks{proper.front()};
    if (proper.back() != proper.front()) picks.push_back(proper.back());

    int from_group = 0;
    for (const ElementSet& n : picks) {
      FiniteGroup quotient = quotient_group(g, n).group;
      for (const GroupClass& cls : classes) {
        if (!class_membership(quotient, cls)) continue;
        triples.push_back({spec, g, n,
                           "N of order " + std::to_string(n.size()), cls});
        if (++from_group >= 3) break;
      }
      if (from_group >= 3) break;
    }
    if (static_cast<int>(triples.size()) >= cap) break;
  }
  if (static_cast<int>(triples.size()) > cap) triples.resize(cap);
  return triples;
}

VerifySuite suite_exactness(const VerifyOptions& opt) {
  VerifySuite suite{"exactness", {}};
  std::vector<Triple> triples = compliant_triples(opt, 40);

  for (const Triple& t : triples) {
    ExactnessReport report = verify_completion_exactness(t.g, t.n, t.cls);
    std::string name = t.group + " / " + t.n_desc + " / " + t.cls.to_string();
    std::string detail = "|N^c|=" + std::to_string(report.sub_completion_order) +
                         " |G^c|=" + std::to_string(report.completion_order) +
                         " |G/N|=" + std::to_string(report.quotient_order);
    suite.cases.push_back(make_case("exact: " + name, report.exact(), detail));
  }

  // The classical failure: nilpotent completion is not left exact on
  // S3 over its index-2 subgroup.
  {
    FiniteGroup s3 = parse_group_spec("S3");
    ElementSet a3;
    for (int x = 0; x < s3.order(); ++x)
      if (s3.element_order(x) != 2) a3.push_back(x);
    ExactnessReport report =
        verify_completion_exactness(s3, a3, GroupClass::parse("nil"));
    bool shape = report.hypothesis_ok && report.induced_defined &&
                 !report.injective && report.middle_exact && report.surjective;
    suite.cases.push_back(make_case(
        "counterexample: S3 / A3 / nil loses injectivity", shape,
        std::string("injective=") + (report.injective ? "true" : "false")));
  }

  // Right exactness holds for every class, nilpotent included.
  for (std::size_t i = 0; i < triples.size(); ++i) {
    const Triple& t = triples[i];
    RightExactnessReport report = verify_right_exactness(t.g, t.n, t.cls);
    std::string name =
        "right-exact: " + t.group + " / " + t.n_desc + " / " + t.cls.to_string();
    suite.cases.push_back(make_case(name, report.exact(), ""));
    if (i < 10) {
      GroupClass nil = GroupClass::parse("nil");
      RightExactnessReport nil_report = verify_right_exactness(t.g, t.n, nil);
      suite.cases.push_back(make_case(
          "right-exact: " + t.group + " / " + t.n_desc + " / nil",
          nil_report.exact(), ""));
    }
  }
  return suite;
}

// --- sylow: nilpotent groups decompose as products of their Sylows. --------

VerifySuite suite_sylow(const VerifyOptions& opt) {
  VerifySuite suite{"sylow", {}};
  for (const auto& [spec, g] : builtin_corpus(opt.sylow_max_order)) {
    if (!is_nilpotent(g)) continue;
    SylowDecomposition dec = nilpotent_sylow_decomposition(g);
    std::string detail = std::to_string(dec.factors.size()) + " prime factor" +
                         (dec.factors.size() == 1 ? "" : "s");
    suite.cases.push_back(make_case(spec, dec.verified, detail));
  }
  return suite;
}

// --- hopf: surjective endomorphisms of small groups are bijective. ---------

VerifySuite suite_hopf(const VerifyOptions& opt) {
  VerifySuite suite{"hopf", {}};
  for (const auto& [spec, g] : builtin_corpus(opt.max_order)) {
    auto endos = surjective_endomorphisms(g);
    bool all_bijective = true;
    for (const auto& map : endos) {
      std::vector<int> sorted(map);
      std::sort(sorted.begin(), sorted.end());
      sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
      if (static_cast<int>(sorted.size()) != g.order()) {
        all_bijective = false;
        break;
      }
    }
    suite.cases.push_back(make_case(
        spec, all_bijective,
        std::to_string(endos.size()) + " surjective endomorphisms"));
  }
  return suite;
}

}  // namespace

bool VerifySuite::all_passed() const {
  return std::all_of(cases.begin(), cases.end(),
                     [](const VerifyCase& c) { return c.passed; });
}

int VerifySuite::failed_count() const {
  return static_cast<int>(std::count_if(
      cases.begin(), cases.end(), [](const VerifyCase& c) { return !c.passed; }));
}

const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> names{"ns-rank", "mu-n",  "chi",
                                              "exactness", "sylow", "hopf"};
  return names;
}

VerifySuite run_verify_suite(const std::string& name,
                             const VerifyOptions& options) {
  if (name == "ns-rank") return suite_ns_rank(options);
  if (name == "mu-n") return suite_mu_n(options);
  if (name == "chi") return suite_chi(options);
  if (name == "exactness") return suite_exactness(options);
  if (name == "sylow") return suite_sylow(options);
  if (name == "hopf") return suite_hopf(options);
  throw std::invalid_argument("unknown verify suite '" + name +
                              "'; expected one of ns-rank, mu-n, chi, "
                              "exactness, sylow, hopf");
}

}  // namespace devissage

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "devissage/completion.hpp"
#include "devissage/finite_group.hpp"
#include "devissage/presentation.hpp"

namespace devissage {

/// Thrown when a homomorphism search would exceed the tuple budget.
class BudgetError : public std::runtime_error {
 public:
  explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

/// Tuple budget for the brute-force searches below: |G|^rank must stay at or
/// below this.  Defaults to 10^7; override through the DEVISSAGE_BUDGET
/// environment variable (values that do not parse to a positive integer are
/// ignored).
std::uint64_t enumeration_budget();

/// Evaluate a word at the given generator images (one target element per
/// source generator).
int evaluate_word(const FiniteGroup& g, const std::vector<int>& images,
                  const Word& w);

/// True when `images` kills every relator of p.
bool is_homomorphism(const FpPresentation& p, const FiniteGroup& g,
                     const std::vector<int>& images);

/// Exact number of homomorphisms P -> G by generator-image enumeration, with
/// relators checked as soon as their generators are assigned.  Ramification
/// words are bookkeeping, not constraints.  jobs > 1 partitions the search
/// by the image of the first generator; the result does not depend on it.
std::uint64_t count_homomorphisms(const FpPresentation& p,
                                  const FiniteGroup& g, int jobs = 1);

/// Exact number of surjections P ->> G (homomorphisms whose images generate).
std::uint64_t count_epimorphisms(const FpPresentation& p, const FiniteGroup& g,
                                 int jobs = 1);

/// Generator-image tuples of all surjections, in lexicographic order.
std::vector<std::vector<int>> list_epimorphisms(const FpPresentation& p,
                                                const FiniteGroup& g,
                                                int jobs = 1);

/// Independent surjection count by Moebius inversion over the full subgroup
/// lattice of G:  |Epi(P, G)| = sum_H mu(H, G) |Hom(P, H)|.
std::uint64_t count_epimorphisms_moebius(const FpPresentation& p,
                                         const FiniteGroup& g);

/// One census row: connected Galois covers of a genus-g curve with n
/// punctures and deck group G, counted as Epi / |Aut|.
struct CoverCensus {
  int genus = 0;
  int punctures = 0;
  std::string group;        // group spec text (cache key)
  std::string group_class;  // class spec text (cache key)
  std::uint64_t hom_count = 0;
  std::uint64_t epi_count = 0;
  std::uint64_t aut_count = 0;
  std::uint64_t cover_count = 0;  // epi_count / aut_count, exactly
  double elapsed_ms = 0.0;
};

/// Count connected covers with deck group g.  The group must lie in `cls`;
/// otherwise std::invalid_argument names the violated class.  Aut counts are
/// cached per group spec across calls.
CoverCensus cover_census(int genus, int punctures, const FiniteGroup& g,
                         const std::string& group_spec, const GroupClass& cls,
                         int jobs = 1);

/// Append-only JSON-lines census cache keyed by (genus, punctures, group,
/// class).  Lookup returns the first matching row; unparseable lines are
/// skipped.
std::optional<CoverCensus> census_cache_lookup(const std::string& path,
                                               int genus, int punctures,
                                               const std::string& group_spec,
                                               const std::string& class_spec);
void census_cache_append(const std::string& path, const CoverCensus& census);

/// Do the images of the designated ramification words already generate the
/// image of the whole map?  Requires p to carry ramification words and
/// `images` to define a homomorphism.
struct RamificationCheck {
  bool generates = false;
  int generated_order = 0;  // witness: order of <ramification images>
  int image_order = 0;
};
RamificationCheck ramification_generation_check(const FpPresentation& p,
                                                const FiniteGroup& g,
                                                const std::vector<int>& images);

/// Finite-level transfer check for the degree-N cyclic cover: map the two
/// free generators to the given elements of g and test whether the N+1
/// kernel-basis words land on generators of ker(g -> Z/N), for the induced
/// map extending gamma_0 -> 1, gamma_1 -> 0.  When no such map exists,
/// induced_defined reports that instead of erroring.
struct TransferReport {
  bool surjective = false;       // the two images generate g
  bool induced_defined = false;  // the induced map to Z/N exists
  int kernel_order = 0;          // |ker(g -> Z/N)| within <images>
  int generated_order = 0;       // order of <basis-word images>
  bool kernel_generated = false;

  bool ok() const { return induced_defined && kernel_generated; }
};
TransferReport mu_n_transfer_check(int n, const FiniteGroup& g,
                                   int gamma0_image, int gamma1_image);

}  // namespace devissage

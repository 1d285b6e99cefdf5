#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "devissage/finite_group.hpp"

namespace devissage {

/// A full class of finite groups, closed under subgroups, quotients and
/// finite products: solvable, nilpotent, ell-groups for a prime ell, or
/// groups of order prime to p.  All but `nilpotent` are additionally closed
/// under extensions, which is what makes completion exact on the left.
struct GroupClass {
  enum class Kind { solvable, nilpotent, ell, prime_to };

  Kind kind = Kind::solvable;
  int prime = 0;  // for ell / prime_to

  /// Parse "sol", "nil", "ell:2", "prime-to:3".
  static GroupClass parse(std::string_view text);
  std::string to_string() const;

  /// Closed under group extensions?  (Everything here but nilpotent.)
  bool extension_closed() const { return kind != Kind::nilpotent; }

  friend bool operator==(const GroupClass&, const GroupClass&) = default;
};

bool class_membership(const FiniteGroup& g, const GroupClass& c);

/// The maximal quotient of g lying in c, with its kernel: the smallest
/// normal subgroup K with g/K in c.  `kernel` is computed by the class'
/// structural fast path; the quotient is formed from it.
struct ClassQuotient {
  GroupClass group_class;
  ElementSet kernel;
  FiniteGroup quotient;
  std::vector<int> projection;  // g element -> quotient element
};
ClassQuotient max_class_quotient(const FiniteGroup& g, const GroupClass& c);

/// Reference oracle for the same kernel: intersect every normal subgroup
/// whose quotient lies in c.  Exponentially slower, used to cross-check the
/// fast paths.
ElementSet class_kernel_oracle(const FiniteGroup& g, const GroupClass& c);

/// Checks for 1 -> N^c -> G^c -> G/N -> 1 being exact, for N normal with
/// G/N in c.  Each flag is verified computationally, none is assumed; when
/// c is not extension-closed the middle/left checks genuinely fail for some
/// inputs (the classical nilpotent counterexample is G = S3, N = A3).
struct ExactnessReport {
  bool hypothesis_ok = false;     // G/N lies in c
  bool induced_defined = false;   // G^c -> G/N factors through the projection
  bool injective = false;         // N^c -> G^c injective
  bool middle_exact = false;      // image(N^c) = kernel(G^c -> G/N)
  bool surjective = false;        // G^c -> G/N onto
  int sub_completion_order = 0;   // |N^c|
  int completion_order = 0;       // |G^c|
  int quotient_order = 0;         // |G/N|

  bool exact() const {
    return hypothesis_ok && induced_defined && injective && middle_exact &&
           surjective;
  }
};
ExactnessReport verify_completion_exactness(const FiniteGroup& g,
                                            const ElementSet& n,
                                            const GroupClass& c);

/// Checks for N^c -> G^c -> (G/N)^c -> 1 being exact (no injectivity claim
/// on the left).  This holds for every class here; the checks are still
/// performed rather than assumed.
struct RightExactnessReport {
  bool induced_defined = false;  // G^c -> (G/N)^c factors as it should
  bool middle_exact = false;
  bool surjective = false;

  bool exact() const { return induced_defined && middle_exact && surjective; }
};
RightExactnessReport verify_right_exactness(const FiniteGroup& g,
                                            const ElementSet& n,
                                            const GroupClass& c);

/// Decomposition of a nilpotent group as the internal direct product of its
/// (unique) Sylow subgroups, with the verified multiplication-map witness.
struct SylowDecomposition {
  std::vector<std::pair<int, ElementSet>> factors;  // (prime, subgroup), primes ascending
  /// witness[mixed-radix index over the factors] = product element in g;
  /// verified to be a group isomorphism from the direct product.
  std::vector<int> witness;
  bool verified = false;
};
SylowDecomposition nilpotent_sylow_decomposition(const FiniteGroup& g);

/// Glue per-prime generator tuples into generators of a nilpotent group:
/// given, for each prime ell | |g|, a tuple of n elements generating the
/// Sylow ell-subgroup, returns the n products (taken over ascending primes),
/// which generate g.  Throws std::invalid_argument if g is not nilpotent,
/// the tuples have mixed lengths, or a tuple fails to generate its Sylow
/// subgroup.
std::vector<int> crt_lift_generators(
    const FiniteGroup& g, const std::map<int, std::vector<int>>& per_prime);

}  // namespace devissage

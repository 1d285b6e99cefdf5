#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace devissage {

/// A permutation of {0..degree-1}, stored as its image vector.
using Permutation = std::vector<int>;

/// A finite group given by its full Cayley table.  Element 0 is always the
/// identity.  Groups built from permutations number their elements in BFS
/// discovery order from the identity (positive generators, in order), which
/// keeps every downstream construction deterministic.
///
/// Tables built by this library are associative by construction; from_table
/// validates identity, inverses and the Latin-square property but trusts the
/// caller for associativity.
class FiniteGroup {
 public:
  /// Spec'd working limit: closures beyond this order are refused.
  static constexpr int default_order_limit = 200;

  FiniteGroup();  // the trivial group

  /// Close a set of permutations (all of one degree) under composition.
  /// Throws std::invalid_argument on malformed input, std::runtime_error if
  /// the closure exceeds order_limit.
  static FiniteGroup from_permutations(const std::vector<Permutation>& gens,
                                       int order_limit = default_order_limit);

  static FiniteGroup from_table(std::vector<std::vector<int>> table,
                                std::vector<int> generators,
                                std::vector<std::string> labels);

  int order() const { return order_; }
  int mul(int a, int b) const { return table_[a * order_ + b]; }
  int inv(int a) const { return inverse_[a]; }
  int identity() const { return 0; }
  /// g x g^-1.
  int conj(int g, int x) const { return mul(mul(g, x), inv(g)); }
  int element_order(int a) const;
  bool is_abelian() const;

  /// A generating set (indices).  May be empty for the trivial group.
  const std::vector<int>& generators() const { return generators_; }
  const std::string& label(int a) const { return labels_[a]; }
  const std::vector<std::string>& labels() const { return labels_; }

 private:
  int order_;
  std::vector<int> table_;  // row-major order_ x order_
  std::vector<int> inverse_;
  std::vector<int> generators_;
  std::vector<std::string> labels_;
};

/// Subsets of group elements are kept as sorted index vectors; every function
/// below both accepts and returns that form.
using ElementSet = std::vector<int>;

ElementSet all_elements(const FiniteGroup& g);

/// Subgroup generated by `seed`.
ElementSet closure(const FiniteGroup& g, const ElementSet& seed);

/// Smallest normal subgroup containing `seed`.
ElementSet normal_closure(const FiniteGroup& g, const ElementSet& seed);

/// Subgroup generated by all commutators [a, b], a in A, b in B.  For A, B
/// normal in g this is again normal in g.
ElementSet commutator_subgroup(const FiniteGroup& g, const ElementSet& a,
                               const ElementSet& b);

bool is_subgroup(const FiniteGroup& g, const ElementSet& s);
bool is_normal_subgroup(const FiniteGroup& g, const ElementSet& s);
ElementSet intersect(const ElementSet& a, const ElementSet& b);
ElementSet normalizer(const FiniteGroup& g, const ElementSet& s);

std::vector<ElementSet> conjugacy_classes(const FiniteGroup& g);

/// All normal subgroups / all subgroups, deduplicated, sorted by (size,
/// elements).  Exhaustive lattice walks: meant for the modest orders this
/// library works at, not for large groups.
std::vector<ElementSet> normal_subgroups(const FiniteGroup& g);
std::vector<ElementSet> all_subgroups(const FiniteGroup& g);

enum class SeriesKind { derived, lower_central };

/// Derived or lower central series, starting at the full group.  Terms are
/// appended until they stabilize: a nontrivial stable term appears twice (so
/// stabilization is visible), the trivial group once.
std::vector<ElementSet> series(const FiniteGroup& g, SeriesKind kind);

bool is_solvable(const FiniteGroup& g);
bool is_nilpotent(const FiniteGroup& g);

/// A Sylow ell-subgroup (ell prime).  Deterministic; returns {identity} when
/// ell does not divide the order.
ElementSet sylow_subgroup(const FiniteGroup& g, int ell);

/// A subgroup as a group in its own right, with the map back to parent
/// element indices.
struct SubgroupView {
  FiniteGroup group;
  std::vector<int> to_parent;  // subgroup element -> parent element
};
SubgroupView subgroup_group(const FiniteGroup& g, const ElementSet& s);

/// Quotient by a normal subgroup.  Cosets are ordered by least element, so
/// the identity coset is element 0.
struct QuotientView {
  FiniteGroup group;
  std::vector<int> projection;  // parent element -> quotient element
};
QuotientView quotient_group(const FiniteGroup& g, const ElementSet& n);

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

/// Extend generator images to a homomorphism src -> dst, or nullopt if none
/// exists.  `gen_images` aligns with src.generators().  The returned vector
/// maps every src element to its image.
std::optional<std::vector<int>> hom_from_generator_images(
    const FiniteGroup& src, const FiniteGroup& dst,
    const std::vector<int>& gen_images);

long automorphism_count(const FiniteGroup& g);

/// Every surjective endomorphism (as a full element map), found by
/// exhaustive generator-image search.
std::vector<std::vector<int>> surjective_endomorphisms(const FiniteGroup& g);

/// An isomorphism g -> h as an element map, or nullopt.
std::optional<std::vector<int>> find_isomorphism(const FiniteGroup& g,
                                                 const FiniteGroup& h);

}  // namespace devissage

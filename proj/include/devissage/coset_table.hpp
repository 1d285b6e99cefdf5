#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "devissage/finite_group.hpp"
#include "devissage/presentation.hpp"
#include "devissage/word.hpp"

namespace devissage {

/// A complete coset table for a finite-index subgroup H of a group given on
/// `rank` generators.  Coset 0 is H itself.  Cosets are numbered in BFS
/// order from 0 over the positive generators taken in order, and the stored
/// transversal is the prefix-closed Schreier transversal that BFS produces:
/// transversal[0] is empty and every other representative extends an earlier
/// one by a single positive generator whenever possible.
class CosetTable {
 public:
  /// Renumber a complete action table into BFS order and build the
  /// transversal.  `actions[c][idx]` is the target of coset c under letter
  /// idx, where letter l maps to idx = 2*(|l|-1) + (l < 0).  Throws
  /// std::invalid_argument if the table is not a complete compatible action
  /// or not transitive.
  static CosetTable from_actions(int rank,
                                 const std::vector<std::vector<int>>& actions);

  int rank() const { return rank_; }
  int index() const { return index_; }

  int apply(int coset, letter_type l) const;
  int trace(int coset, const Word& w) const;
  /// Does w lie in the subgroup (i.e. fix coset 0)?
  bool in_subgroup(const Word& w) const { return trace(0, w) == 0; }

  const std::vector<Word>& transversal() const { return transversal_; }

 private:
  int rank_ = 0;
  int index_ = 0;
  std::vector<int> act_;  // index_ x 2rank_, complete
  std::vector<Word> transversal_;
};

/// Coset table of ker(h) for the homomorphism h sending the generators of p
/// into g (h must kill every relator of p; ramification words are ignored).
/// Cosets correspond to the elements of the image subgroup <images>.
CosetTable kernel_coset_table(const FpPresentation& p, const FiniteGroup& g,
                              const std::vector<int>& images);

/// Todd-Coxeter coset enumeration (HLT with coincidences) for the subgroup
/// of p generated by `subgroup`.  Returns the standardized table, or nullopt
/// if the enumeration was cut off at max_cosets live cosets (inconclusive:
/// the index may be finite but larger, or infinite).
std::optional<CosetTable> todd_coxeter(const FpPresentation& p,
                                       const std::vector<Word>& subgroup,
                                       int max_cosets = 1'000'000);

enum class BasisKind { schreier, mu, chi };

/// A generating set of a finite-index subgroup, tied to its coset table.
/// For a free ambient group the Schreier construction makes this a free
/// basis of size index*(rank-1) + 1.
struct SubgroupBasis {
  BasisKind kind = BasisKind::schreier;
  CosetTable table;
  std::vector<std::pair<std::string, Word>> generators;
};

/// Schreier generators t x rep(t x)^-1 over the stored transversal, one per
/// (coset, positive generator) edge outside the BFS tree; trivial ones are
/// dropped.  Labels are "s0", "s1", ... in scan order (cosets ascending,
/// generators ascending).
SubgroupBasis schreier_generators(const CosetTable& table);

}  // namespace devissage

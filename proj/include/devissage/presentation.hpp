#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "devissage/word.hpp"

namespace devissage {

/// A finite presentation < x_0..x_{rank-1} | relators >, optionally carrying
/// labelled "ramification" words: distinguished conjugacy-class
/// representatives around punctures that are *not* imposed as relations until
/// fill_puncture is called.
///
/// Invariants (enforced on construction): every stored word is freely
/// reduced over the presentation alphabet, no relator is the identity, and
/// ramification labels are unique.
class FpPresentation {
 public:
  FpPresentation() = default;  // the trivial presentation < | >

  FpPresentation(int rank, std::vector<Word> relators,
                 std::vector<std::pair<std::string, Word>> ramification = {});

  int rank() const { return rank_; }
  const std::vector<Word>& relators() const { return relators_; }
  const std::vector<std::pair<std::string, Word>>& ramification() const {
    return ramification_;
  }

  /// The ramification word for `label`, or nullptr if absent.
  const Word* ramification_word(std::string_view label) const;

  friend bool operator==(const FpPresentation&, const FpPresentation&) = default;

 private:
  int rank_ = 0;
  std::vector<Word> relators_;
  std::vector<std::pair<std::string, Word>> ramification_;
};

/// Fundamental group of a closed orientable genus-g surface:
/// 2g generators x_1 y_1 .. x_g y_g, one relator [x_1,y_1]..[x_g,y_g]
/// (empty, hence dropped, when g = 0).
FpPresentation surface_group(int genus);

/// Fundamental group of a genus-g surface with n >= 1 punctures: free of
/// rank 2g + n - 1 with ramification words labelled "p1".."pn".  The first
/// n-1 are the puncture loops e_1..e_{n-1} kept as generators; the last is
/// determined by the surface relation:
///   e_n = ([x_1,y_1]..[x_g,y_g] e_1..e_{n-1])^-1.
FpPresentation punctured_curve_group(int genus, int punctures);

/// Impose the ramification word for `label` as a relator and drop the label
/// (the puncture is filled in).  Throws std::invalid_argument for unknown
/// labels.
FpPresentation fill_puncture(const FpPresentation& p, std::string_view label);

/// Tietze generator elimination: while some generator occurs exactly once
/// across a single relator, solve that relator for it and substitute
/// everywhere (relators and ramification words).  The result presents the
/// same group and has no generator occurring exactly once in any relator.
FpPresentation tietze_eliminate(const FpPresentation& p);

/// Parse the presentation file format: one `gens: <rank>` line, then any
/// number of `rel: <word>` and `ram: <label> <word>` lines.  Blank lines and
/// lines starting with '#' are ignored.
FpPresentation parse_presentation(std::string_view text);

/// Inverse of parse_presentation.
std::string to_text(const FpPresentation& p);

}  // namespace devissage

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace devissage {

/// A letter of a free-group word.  Letter +(k+1) is generator k, letter
/// -(k+1) is its inverse; 0 is never a letter.
using letter_type = std::int32_t;

/// A freely reduced word over a fixed alphabet of `rank` generators.
///
/// Words are immutable values: the constructor performs free reduction
/// (cancelling adjacent x x^-1 pairs) and every operation returns a fresh
/// reduced word, so `Word` always holds a reduced letter sequence.
class Word {
 public:
  /// The identity word over an alphabet of `rank` generators.
  explicit Word(int rank = 0);

  /// Reduce `letters` over an alphabet of `rank` generators.
  /// Throws std::out_of_range if a letter is 0 or exceeds the alphabet.
  Word(int rank, std::vector<letter_type> letters);

  int rank() const { return rank_; }
  const std::vector<letter_type>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  friend bool operator==(const Word&, const Word&) = default;
  /// Orders by rank, then length, then lexicographically; used only to keep
  /// containers of words deterministic.
  friend bool operator<(const Word& u, const Word& v);

 private:
  int rank_;
  std::vector<letter_type> letters_;
};

/// u * v (concatenate and reduce).  Alphabets must agree.
Word multiply(const Word& u, const Word& v);

/// u^-1.
Word invert(const Word& u);

/// u^n for any integer n (negative n inverts).
Word power(const Word& u, int n);

/// t u t^-1.
Word conjugate(const Word& u, const Word& t);

/// [u, v] = u v u^-1 v^-1.
Word commutator(const Word& u, const Word& v);

/// Net exponent of generator `gen` (0 <= gen < rank) in u.
int exponent_sum(const Word& u, int gen);

/// Image of u under the substitution generator k -> images[k].  All images
/// must share a rank, which becomes the rank of the result; an empty image
/// list is only legal when u has rank 0.
Word substitute(const Word& u, const std::vector<Word>& images);

/// Parse the text form.  For rank <= 26, `a`..`z` are generators 0..25 and
/// `A`..`Z` their inverses; for any rank, `g5`/`G5` name generator 5 and its
/// inverse.  Letters may be separated by spaces.  The empty string (or lone
/// "1") is the identity.  Throws std::invalid_argument on junk,
/// std::out_of_range on letters beyond the alphabet.
Word parse_word(int rank, std::string_view text);

/// Inverse of parse_word: space-separated letters, `a b A`-style when the
/// rank allows it, `g0 g1 G0`-style otherwise.  The identity prints as "".
std::string to_text(const Word& u);

}  // namespace devissage

#include "devissage/word.hpp"

#include <cctype>
#include <cstdlib>
#include <stdexcept>
#include <utility>

namespace devissage {

namespace {

void check_letter(int rank, letter_type l) {
  if (l == 0) throw std::out_of_range("word letter 0 is not a generator");
  int k = std::abs(l);
  if (k > rank)
    throw std::out_of_range("word letter " + std::to_string(l) +
                            " outside alphabet of rank " + std::to_string(rank));
}

std::vector<letter_type> reduce(int rank, std::vector<letter_type> raw) {
  std::vector<letter_type> out;
  out.reserve(raw.size());
  for (letter_type l : raw) {
    check_letter(rank, l);
    if (!out.empty() && out.back() == -l) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

void check_same_rank(const Word& u, const Word& v) {
  if (u.rank() != v.rank())
    throw std::invalid_argument("words over different alphabets (rank " +
                                std::to_string(u.rank()) + " vs " +
                                std::to_string(v.rank()) + ")");
}

}  // namespace

Word::Word(int rank) : rank_(rank) {
  if (rank < 0) throw std::invalid_argument("negative alphabet rank");
}

Word::Word(int rank, std::vector<letter_type> letters) : rank_(rank) {
  if (rank < 0) throw std::invalid_argument("negative alphabet rank");
  letters_ = reduce(rank, std::move(letters));
}

bool operator<(const Word& u, const Word& v) {
  if (u.rank_ != v.rank_) return u.rank_ < v.rank_;
  if (u.letters_.size() != v.letters_.size())
    return u.letters_.size() < v.letters_.size();
  return u.letters_ < v.letters_;
}

Word multiply(const Word& u, const Word& v) {
  check_same_rank(u, v);
  std::vector<letter_type> raw = u.letters();
  raw.insert(raw.end(), v.letters().begin(), v.letters().end());
  return Word(u.rank(), std::move(raw));
}

Word invert(const Word& u) {
  std::vector<letter_type> raw;
  raw.reserve(u.size());
  for (auto it = u.letters().rbegin(); it != u.letters().rend(); ++it)
    raw.push_back(-*it);
  return Word(u.rank(), std::move(raw));
}

Word power(const Word& u, int n) {
  const Word base = n < 0 ? invert(u) : u;
  int reps = n < 0 ? -n : n;
  Word acc(u.rank());
  for (int i = 0; i < reps; ++i) acc = multiply(acc, base);
  return acc;
}

Word conjugate(const Word& u, const Word& t) {
  return multiply(multiply(t, u), invert(t));
}

Word commutator(const Word& u, const Word& v) {
  return multiply(multiply(u, v), multiply(invert(u), invert(v)));
}

int exponent_sum(const Word& u, int gen) {
  if (gen < 0 || gen >= u.rank())
    throw std::out_of_range("generator index " + std::to_string(gen) +
                            " outside alphabet of rank " +
                            std::to_string(u.rank()));
  int total = 0;
  for (letter_type l : u.letters()) {
    if (l == gen + 1) ++total;
    if (l == -(gen + 1)) --total;
  }
  return total;
}

Word substitute(const Word& u, const std::vector<Word>& images) {
  if (static_cast<int>(images.size()) != u.rank())
    throw std::invalid_argument("substitution needs one image per generator");
  int target_rank = images.empty() ? 0 : images.front().rank();
  std::vector<letter_type> raw;
  for (const Word& im : images) {
    if (im.rank() != target_rank)
      throw std::invalid_argument("substitution images over mixed alphabets");
  }
  for (letter_type l : u.letters()) {
    const Word& im = images[std::abs(l) - 1];
    if (l > 0) {
      raw.insert(raw.end(), im.letters().begin(), im.letters().end());
    } else {
      for (auto it = im.letters().rbegin(); it != im.letters().rend(); ++it)
        raw.push_back(-*it);
    }
  }
  return Word(target_rank, std::move(raw));
}

Word parse_word(int rank, std::string_view text) {
  std::vector<letter_type> raw;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '1') {
      // Conventional spelling of the identity; contributes nothing.
      ++i;
      continue;
    }
    if (c == 'g' || c == 'G') {
      // Numeric form g<k> / G<k>; takes precedence over the alphabetic
      // reading of 'g', which would otherwise be ambiguous.
      std::size_t j = i + 1;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])))
        ++j;
      if (j > i + 1) {
        int k = std::stoi(std::string(text.substr(i + 1, j - i - 1)));
        if (k >= rank)
          throw std::out_of_range("generator g" + std::to_string(k) +
                                  " outside alphabet of rank " +
                                  std::to_string(rank));
        raw.push_back(c == 'g' ? k + 1 : -(k + 1));
        i = j;
        continue;
      }
      if (rank > 26)
        throw std::invalid_argument(
            "alphabetic letters are only defined for rank <= 26");
      raw.push_back(c == 'g' ? ('g' - 'a' + 1) : -('g' - 'a' + 1));
      ++i;
      continue;
    }
    if (c >= 'a' && c <= 'z') {
      if (rank > 26)
        throw std::invalid_argument(
            "alphabetic letters are only defined for rank <= 26");
      raw.push_back(c - 'a' + 1);
      ++i;
      continue;
    }
    if (c >= 'A' && c <= 'Z') {
      if (rank > 26)
        throw std::invalid_argument(
            "alphabetic letters are only defined for rank <= 26");
      raw.push_back(-(c - 'A' + 1));
      ++i;
      continue;
    }
    throw std::invalid_argument(std::string("unexpected character '") + c +
                                "' in word");
  }
  for (letter_type l : raw) check_letter(rank, l);
  return Word(rank, std::move(raw));
}

std::string to_text(const Word& u) {
  std::string out;
  for (letter_type l : u.letters()) {
    if (!out.empty()) out += ' ';
    int k = std::abs(l) - 1;
    if (u.rank() <= 26) {
      out += static_cast<char>((l > 0 ? 'a' : 'A') + k);
    } else {
      out += (l > 0 ? 'g' : 'G');
      out += std::to_string(k);
    }
  }
  return out;
}

}  // namespace devissage

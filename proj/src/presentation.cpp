#include "devissage/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <iterator>
#include <set>
#include <sstream>
#include <stdexcept>

namespace devissage {

namespace {

void append_nontrivial(std::vector<Word>& relators, Word w) {
  if (!w.empty()) relators.push_back(std::move(w));
}

}  // namespace

FpPresentation::FpPresentation(
    int rank, std::vector<Word> relators,
    std::vector<std::pair<std::string, Word>> ramification)
    : rank_(rank) {
  if (rank < 0) throw std::invalid_argument("negative presentation rank");
  for (Word& r : relators) {
    if (r.rank() != rank)
      throw std::invalid_argument("relator over the wrong alphabet");
    append_nontrivial(relators_, std::move(r));
  }
  std::set<std::string> seen;
  for (auto& [label, word] : ramification) {
    if (word.rank() != rank)
      throw std::invalid_argument("ramification word over the wrong alphabet");
    if (!seen.insert(label).second)
      throw std::invalid_argument("duplicate ramification label '" + label + "'");
    ramification_.emplace_back(label, std::move(word));
  }
}

const Word* FpPresentation::ramification_word(std::string_view label) const {
  for (const auto& [l, w] : ramification_)
    if (l == label) return &w;
  return nullptr;
}

FpPresentation surface_group(int genus) {
  if (genus < 0) throw std::invalid_argument("negative genus");
  int rank = 2 * genus;
  std::vector<letter_type> raw;
  for (int i = 0; i < genus; ++i) {
    letter_type x = 2 * i + 1, y = 2 * i + 2;
    raw.insert(raw.end(), {x, y, -x, -y});
  }
  return FpPresentation(rank, {Word(rank, raw)});
}

FpPresentation punctured_curve_group(int genus, int punctures) {
  if (genus < 0) throw std::invalid_argument("negative genus");
  if (punctures < 1)
    throw std::invalid_argument("a punctured curve needs at least one puncture");
  int g = genus, n = punctures;
  int rank = 2 * g + n - 1;
  std::vector<std::pair<std::string, Word>> ram;
  // Loops around the first n-1 punctures survive as free generators.
  for (int i = 1; i <= n - 1; ++i)
    ram.emplace_back("p" + std::to_string(i),
                     Word(rank, {static_cast<letter_type>(2 * g + i)}));
  // The last loop is forced by the (filled) surface relation.
  std::vector<letter_type> raw;
  for (int i = 0; i < g; ++i) {
    letter_type x = 2 * i + 1, y = 2 * i + 2;
    raw.insert(raw.end(), {x, y, -x, -y});
  }
  for (int i = 1; i <= n - 1; ++i)
    raw.push_back(static_cast<letter_type>(2 * g + i));
  ram.emplace_back("p" + std::to_string(n), invert(Word(rank, raw)));
  return FpPresentation(rank, {}, std::move(ram));
}

FpPresentation fill_puncture(const FpPresentation& p, std::string_view label) {
  const Word* w = p.ramification_word(label);
  if (w == nullptr)
    throw std::invalid_argument("no puncture labelled '" + std::string(label) +
                                "'");
  std::vector<Word> relators = p.relators();
  relators.push_back(*w);
  std::vector<std::pair<std::string, Word>> ram;
  for (const auto& [l, word] : p.ramification())
    if (l != label) ram.emplace_back(l, word);
  return FpPresentation(p.rank(), std::move(relators), std::move(ram));
}

namespace {

// Number of occurrences of generator `gen` (either sign) in w.
int occurrences(const Word& w, int gen) {
  int count = 0;
  for (letter_type l : w.letters())
    if (std::abs(l) == gen + 1) ++count;
  return count;
}

}  // namespace

FpPresentation tietze_eliminate(const FpPresentation& p) {
  int rank = p.rank();
  std::vector<Word> relators = p.relators();
  std::vector<std::pair<std::string, Word>> ram = p.ramification();

  for (;;) {
    // Find a relator containing some generator exactly once; among the
    // candidates take the shortest relator (ties: lowest index), then the
    // lowest such generator, so elimination order is deterministic and
    // substitution growth stays small.
    int best_rel = -1, best_gen = -1;
    for (std::size_t ri = 0; ri < relators.size(); ++ri) {
      if (best_rel >= 0 && relators[ri].size() >= relators[best_rel].size())
        continue;
      for (int k = 0; k < rank; ++k) {
        if (occurrences(relators[ri], k) == 1) {
          best_rel = static_cast<int>(ri);
          best_gen = k;
          break;
        }
      }
    }
    if (best_rel < 0) break;

    // Rotate the relator so the unique occurrence of x_k comes first:
    // r = x_k^e s = 1, so x_k = s^-1 (e = +1) or x_k = s (e = -1).
    const Word& r = relators[best_rel];
    std::size_t pos = 0;
    while (std::abs(r.letters()[pos]) != best_gen + 1) ++pos;
    std::vector<letter_type> rot(r.letters().begin() + pos, r.letters().end());
    rot.insert(rot.end(), r.letters().begin(), r.letters().begin() + pos);
    Word s(rank, std::vector<letter_type>(rot.begin() + 1, rot.end()));
    Word value = rot[0] > 0 ? invert(s) : s;

    // Substitution onto the alphabet with x_k removed.
    int new_rank = rank - 1;
    std::vector<Word> images(rank, Word(new_rank));
    for (int k = 0; k < rank; ++k) {
      if (k == best_gen) continue;
      int nk = k < best_gen ? k : k - 1;
      images[k] = Word(new_rank, {static_cast<letter_type>(nk + 1)});
    }
    images[best_gen] = substitute(value, images);  // value never contains x_k

    std::vector<Word> next_relators;
    for (std::size_t ri = 0; ri < relators.size(); ++ri) {
      if (static_cast<int>(ri) == best_rel) continue;
      append_nontrivial(next_relators, substitute(relators[ri], images));
    }
    for (auto& [label, word] : ram) word = substitute(word, images);

    rank = new_rank;
    relators = std::move(next_relators);
  }
  return FpPresentation(rank, std::move(relators), std::move(ram));
}

FpPresentation parse_presentation(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::optional<int> rank;
  std::vector<Word> relators;
  std::vector<std::pair<std::string, Word>> ram;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view sv(line);
    while (!sv.empty() && std::isspace(static_cast<unsigned char>(sv.front())))
      sv.remove_prefix(1);
    if (sv.empty() || sv.front() == '#') continue;
    auto fail = [&](const std::string& why) {
      throw std::invalid_argument("presentation line " + std::to_string(lineno) +
                                  ": " + why);
    };
    if (sv.starts_with("gens:")) {
      if (rank) fail("duplicate gens: line");
      try {
        rank = std::stoi(std::string(sv.substr(5)));
      } catch (const std::exception&) {
        fail("unreadable generator count");
      }
      if (*rank < 0) fail("negative generator count");
    } else if (sv.starts_with("rel:")) {
      if (!rank) fail("rel: before gens:");
      relators.push_back(parse_word(*rank, sv.substr(4)));
    } else if (sv.starts_with("ram:")) {
      if (!rank) fail("ram: before gens:");
      std::istringstream rest{std::string(sv.substr(4))};
      std::string label;
      if (!(rest >> label)) fail("ram: needs a label");
      std::string word_text((std::istreambuf_iterator<char>(rest)),
                            std::istreambuf_iterator<char>());
      ram.emplace_back(label, parse_word(*rank, word_text));
    } else {
      fail("expected gens:, rel: or ram:");
    }
  }
  if (!rank) throw std::invalid_argument("presentation file has no gens: line");
  return FpPresentation(*rank, std::move(relators), std::move(ram));
}

std::string to_text(const FpPresentation& p) {
  std::string out = "gens: " + std::to_string(p.rank()) + "\n";
  for (const Word& r : p.relators()) out += "rel: " + to_text(r) + "\n";
  for (const auto& [label, w] : p.ramification())
    out += "ram: " + label + " " + to_text(w) + "\n";
  return out;
}

}  // namespace devissage

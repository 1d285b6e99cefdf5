#include "devissage/coset_table.hpp"

#include <algorithm>
#include <stdexcept>

namespace devissage {

namespace {

int letter_index(letter_type l) { return 2 * (std::abs(l) - 1) + (l < 0); }

int inverse_index(int idx) { return idx ^ 1; }

}  // namespace

CosetTable CosetTable::from_actions(
    int rank, const std::vector<std::vector<int>>& actions) {
  int n = static_cast<int>(actions.size());
  if (n == 0) throw std::invalid_argument("empty coset table");
  for (const auto& row : actions) {
    if (static_cast<int>(row.size()) != 2 * rank)
      throw std::invalid_argument("coset table row of wrong width");
    for (int t : row)
      if (t < 0 || t >= n)
        throw std::invalid_argument("coset table entry out of range");
  }
  for (int c = 0; c < n; ++c)
    for (int idx = 0; idx < 2 * rank; ++idx)
      if (actions[actions[c][idx]][inverse_index(idx)] != c)
        throw std::invalid_argument("coset table letters do not act invertibly");

  // BFS renumbering over the positive generators in order.  Every letter
  // acts as a permutation (checked above), so positive letters alone reach
  // the whole orbit of coset 0; this also yields the prefix-closed Schreier
  // transversal along the BFS tree.
  std::vector<int> order(n, -1);
  std::vector<int> bfs{0};
  std::vector<Word> reps{Word(rank)};
  order[0] = 0;
  for (std::size_t i = 0; i < bfs.size(); ++i) {
    int c = bfs[i];
    for (int k = 0; k < rank; ++k) {
      int t = actions[c][2 * k];
      if (order[t] < 0) {
        order[t] = static_cast<int>(bfs.size());
        bfs.push_back(t);
        reps.push_back(
            multiply(reps[i], Word(rank, {static_cast<letter_type>(k + 1)})));
      }
    }
  }
  if (static_cast<int>(bfs.size()) != n)
    throw std::invalid_argument("coset table is not transitive");

  CosetTable out;
  out.rank_ = rank;
  out.index_ = n;
  out.act_.assign(static_cast<std::size_t>(n) * 2 * rank, 0);
  for (int c = 0; c < n; ++c)
    for (int idx = 0; idx < 2 * rank; ++idx)
      out.act_[order[c] * 2 * rank + idx] = order[actions[c][idx]];
  out.transversal_ = std::move(reps);
  return out;
}

int CosetTable::apply(int coset, letter_type l) const {
  if (coset < 0 || coset >= index_)
    throw std::out_of_range("coset index out of range");
  if (l == 0 || std::abs(l) > rank_)
    throw std::out_of_range("letter outside the table alphabet");
  return act_[coset * 2 * rank_ + letter_index(l)];
}

int CosetTable::trace(int coset, const Word& w) const {
  if (w.rank() != rank_)
    throw std::invalid_argument("word over the wrong alphabet for this table");
  int c = coset;
  for (letter_type l : w.letters()) c = apply(c, l);
  return c;
}

CosetTable kernel_coset_table(const FpPresentation& p, const FiniteGroup& g,
                              const std::vector<int>& images) {
  if (static_cast<int>(images.size()) != p.rank())
    throw std::invalid_argument("one image per presentation generator required");
  for (int x : images)
    if (x < 0 || x >= g.order())
      throw std::invalid_argument("generator image out of range");

  for (const Word& r : p.relators()) {
    int acc = 0;
    for (letter_type l : r.letters()) {
      int im = images[std::abs(l) - 1];
      acc = g.mul(acc, l > 0 ? im : g.inv(im));
    }
    if (acc != 0)
      throw std::invalid_argument(
          "images do not kill every relator: no induced homomorphism");
  }

  // Right cosets of the kernel are in bijection with image elements, acting
  // by right multiplication.
  ElementSet image = closure(g, images);
  std::vector<int> coset_of(g.order(), -1);
  for (std::size_t i = 0; i < image.size(); ++i) coset_of[image[i]] = static_cast<int>(i);
  int n = static_cast<int>(image.size());
  int rank = p.rank();
  std::vector<std::vector<int>> actions(n, std::vector<int>(2 * rank));
  for (int c = 0; c < n; ++c) {
    for (int k = 0; k < rank; ++k) {
      actions[c][2 * k] = coset_of[g.mul(image[c], images[k])];
      actions[c][2 * k + 1] = coset_of[g.mul(image[c], g.inv(images[k]))];
    }
  }
  // image[] is sorted, so coset 0 is the identity; from_actions renumbers
  // into canonical BFS order anyway.
  return CosetTable::from_actions(rank, actions);
}

SubgroupBasis schreier_generators(const CosetTable& table) {
  SubgroupBasis out;
  out.kind = BasisKind::schreier;
  out.table = table;
  int counter = 0;
  for (int c = 0; c < table.index(); ++c) {
    for (int k = 0; k < table.rank(); ++k) {
      letter_type l = static_cast<letter_type>(k + 1);
      int t = table.apply(c, l);
      Word u = multiply(multiply(table.transversal()[c], Word(table.rank(), {l})),
                        invert(table.transversal()[t]));
      if (u.empty()) continue;  // tree edge (or a relation collapsing it)
      out.generators.emplace_back("s" + std::to_string(counter++), u);
    }
  }
  return out;
}

}  // namespace devissage

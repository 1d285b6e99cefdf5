#include <algorithm>
#include <stdexcept>
#include <vector>

#include "devissage/coset_table.hpp"

namespace devissage {

namespace {

// HLT-style coset enumeration with coincidence handling.  The outer driver
// repeats full passes (scan every relator at every live coset, then fill any
// hole) until a pass changes nothing, so on exit the table is complete and
// every relator and subgroup generator scans correctly: correctness does not
// lean on any subtle invariant of the scanning order.
class Enumerator {
 public:
  Enumerator(int rank, int max_cosets) : rank_(rank), max_(max_cosets) {
    rows_.push_back(Row(2 * rank, -1));
    parent_.push_back(0);
    ++alive_;
  }

  bool overflowed() const { return overflowed_; }
  long mutations() const { return mutations_; }

  int find(int c) {
    while (parent_[c] != c) {
      parent_[c] = parent_[parent_[c]];
      c = parent_[c];
    }
    return c;
  }

  bool dead(int c) { return find(c) != c; }

  // Scan word w (as letter indices) from coset `start`, requiring it to
  // close back to `start`; fills gaps with definitions/deductions and merges
  // on mismatch.
  void scan_and_fill(int start, const std::vector<int>& w) {
    if (overflowed_) return;
    int f = start, i = 0;
    int b = start, j = static_cast<int>(w.size()) - 1;
    for (;;) {
      while (i <= j && rows_[f][w[i]] != -1) f = rows_[f][w[i++]];
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && rows_[b][w[j] ^ 1] != -1) b = rows_[b][w[j--] ^ 1];
      if (j < i) {
        if (f != b) coincidence(f, b);
        return;
      }
      if (j == i) {  // gap of one: deduction
        link(f, w[i], b);
        return;
      }
      define(f, w[i]);  // gap of two or more: new coset, then rescan
      if (overflowed_) return;
    }
  }

  void fill_row(int c) {
    for (int idx = 0; idx < 2 * rank_ && !overflowed_; ++idx)
      if (rows_[c][idx] == -1) define(c, idx);
  }

  int size() const { return static_cast<int>(rows_.size()); }

  // Compact the live cosets into a complete action table.
  std::vector<std::vector<int>> compact() {
    std::vector<int> number(rows_.size(), -1);
    std::vector<int> live;
    for (int c = 0; c < size(); ++c)
      if (!dead(c)) {
        number[c] = static_cast<int>(live.size());
        live.push_back(c);
      }
    std::vector<std::vector<int>> out;
    out.reserve(live.size());
    for (int c : live) {
      std::vector<int> row(2 * rank_);
      for (int idx = 0; idx < 2 * rank_; ++idx) {
        int t = rows_[c][idx];
        if (t == -1) throw std::logic_error("compacting an incomplete table");
        row[idx] = number[find(t)];
      }
      out.push_back(std::move(row));
    }
    return out;
  }

 private:
  using Row = std::vector<int>;

  void link(int a, int idx, int b) {
    rows_[a][idx] = b;
    rows_[b][idx ^ 1] = a;
    ++mutations_;
  }

  void define(int c, int idx) {
    // First clause is the documented live-coset cap; the second bounds total
    // table growth so define/merge churn cannot spin without progress.
    if (alive_ >= max_ || size() >= 10 * max_ + 1000) {
      overflowed_ = true;
      return;
    }
    int n = size();
    rows_.push_back(Row(2 * rank_, -1));
    parent_.push_back(n);
    ++alive_;
    link(c, idx, n);
  }

  void merge(int a, int b, std::vector<int>& queue) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[b] = a;
    --alive_;
    ++mutations_;
    queue.push_back(b);
  }

  void coincidence(int a, int b) {
    std::vector<int> queue;
    merge(a, b, queue);
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      int d = queue[qi];  // dead; replay its edges through representatives
      for (int idx = 0; idx < 2 * rank_; ++idx) {
        int t = rows_[d][idx];
        if (t == -1) continue;
        rows_[d][idx] = -1;
        // Unhook the reverse edge; if it had already been redirected this
        // only costs a re-derivation later, never a wrong entry.
        rows_[t][idx ^ 1] = -1;
        int u = find(d), v = find(t);
        if (rows_[u][idx] != -1)
          merge(v, rows_[u][idx], queue);
        else if (rows_[v][idx ^ 1] != -1)
          merge(u, rows_[v][idx ^ 1], queue);
        else
          link(u, idx, v);
      }
    }
  }

  int rank_;
  int max_;
  int alive_ = 0;
  bool overflowed_ = false;
  long mutations_ = 0;
  std::vector<Row> rows_;
  std::vector<int> parent_;
};

std::vector<int> to_indices(const Word& w) {
  std::vector<int> out;
  out.reserve(w.size());
  for (letter_type l : w.letters())
    out.push_back(2 * (std::abs(l) - 1) + (l < 0));
  return out;
}

}  // namespace

std::optional<CosetTable> todd_coxeter(const FpPresentation& p,
                                       const std::vector<Word>& subgroup,
                                       int max_cosets) {
  if (max_cosets < 1) throw std::invalid_argument("max_cosets must be positive");
  std::vector<std::vector<int>> relators, subgens;
  for (const Word& r : p.relators()) relators.push_back(to_indices(r));
  for (const Word& w : subgroup) {
    if (w.rank() != p.rank())
      throw std::invalid_argument("subgroup word over the wrong alphabet");
    subgens.push_back(to_indices(w));
  }

  Enumerator e(p.rank(), max_cosets);
  for (;;) {
    long before = e.mutations();
    for (const auto& w : subgens) e.scan_and_fill(0, w);
    for (int c = 0; c < e.size(); ++c) {
      if (e.dead(c)) continue;
      for (const auto& r : relators) {
        e.scan_and_fill(c, r);
        if (e.dead(c) || e.overflowed()) break;
      }
      if (e.overflowed()) break;
      if (!e.dead(c)) e.fill_row(c);
      if (e.overflowed()) break;
    }
    if (e.overflowed()) return std::nullopt;
    if (e.mutations() == before) break;  // complete and all scans clean
  }
  return CosetTable::from_actions(p.rank(), e.compact());
}

}  // namespace devissage

#include "devissage/finite_group.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>

namespace devissage {

namespace {

void check_permutation(const Permutation& p) {
  std::vector<char> hit(p.size(), 0);
  for (int x : p) {
    if (x < 0 || x >= static_cast<int>(p.size()) || hit[x])
      throw std::invalid_argument("not a permutation");
    hit[x] = 1;
  }
}

// p then q, as functions on points: (p*q)(x) = q(p(x)).
Permutation compose(const Permutation& p, const Permutation& q) {
  Permutation r(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) r[x] = q[p[x]];
  return r;
}

std::string cycle_label(const Permutation& p) {
  std::string out;
  std::vector<char> seen(p.size(), 0);
  for (std::size_t start = 0; start < p.size(); ++start) {
    if (seen[start] || p[start] == static_cast<int>(start)) continue;
    out += '(';
    std::size_t x = start;
    bool first = true;
    while (!seen[x]) {
      seen[x] = 1;
      if (!first) out += ' ';
      out += std::to_string(x + 1);  // 1-based points, as in the group DSL
      first = false;
      x = static_cast<std::size_t>(p[x]);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

}  // namespace

FiniteGroup::FiniteGroup()
    : order_(1), table_{0}, inverse_{0}, generators_{}, labels_{"()"} {}

FiniteGroup FiniteGroup::from_permutations(const std::vector<Permutation>& gens,
                                           int order_limit) {
  std::size_t degree = gens.empty() ? 1 : gens.front().size();
  for (const Permutation& p : gens) {
    if (p.size() != degree)
      throw std::invalid_argument("permutations of mixed degree");
    check_permutation(p);
  }
  Permutation id(degree);
  for (std::size_t i = 0; i < degree; ++i) id[i] = static_cast<int>(i);

  // BFS from the identity, multiplying by generators in order on the right.
  std::vector<Permutation> elems{id};
  std::map<Permutation, int> index{{id, 0}};
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const Permutation& g : gens) {
      Permutation next = compose(elems[i], g);
      if (index.emplace(next, static_cast<int>(elems.size())).second) {
        elems.push_back(std::move(next));
        if (static_cast<int>(elems.size()) > order_limit)
          throw std::runtime_error("permutation closure exceeds order limit " +
                                   std::to_string(order_limit));
      }
    }
  }

  int n = static_cast<int>(elems.size());
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      table[a][b] = index.at(compose(elems[a], elems[b]));

  std::vector<int> gen_indices;
  for (const Permutation& g : gens) {
    int gi = index.at(g);
    if (gi != 0 && std::find(gen_indices.begin(), gen_indices.end(), gi) ==
                       gen_indices.end())
      gen_indices.push_back(gi);
  }
  std::vector<std::string> labels;
  labels.reserve(n);
  for (const Permutation& e : elems) labels.push_back(cycle_label(e));
  return from_table(std::move(table), std::move(gen_indices), std::move(labels));
}

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<int>> table,
                                    std::vector<int> generators,
                                    std::vector<std::string> labels) {
  int n = static_cast<int>(table.size());
  if (n == 0) throw std::invalid_argument("empty multiplication table");
  FiniteGroup g;
  g.order_ = n;
  g.table_.assign(static_cast<std::size_t>(n) * n, 0);
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(table[a].size()) != n)
      throw std::invalid_argument("multiplication table is not square");
    for (int b = 0; b < n; ++b) {
      int p = table[a][b];
      if (p < 0 || p >= n)
        throw std::invalid_argument("table entry out of range");
      g.table_[a * n + b] = p;
    }
  }
  for (int a = 0; a < n; ++a)
    if (g.mul(0, a) != a || g.mul(a, 0) != a)
      throw std::invalid_argument("element 0 is not an identity");
  // Latin-square check doubles as the existence half of inverses.
  g.inverse_.assign(n, -1);
  std::vector<char> seen(n);
  for (int a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int b = 0; b < n; ++b) {
      int p = g.mul(a, b);
      if (seen[p]) throw std::invalid_argument("table row is not a permutation");
      seen[p] = 1;
      if (p == 0) g.inverse_[a] = b;
    }
  }
  for (int a = 0; a < n; ++a)
    if (g.mul(g.inverse_[a], a) != 0)
      throw std::invalid_argument("one-sided inverse in table");

  for (int x : generators)
    if (x < 0 || x >= n) throw std::invalid_argument("generator out of range");
  g.generators_ = std::move(generators);
  if (closure(g, g.generators_) != all_elements(g))
    throw std::invalid_argument("listed generators do not generate");

  if (labels.empty())
    for (int a = 0; a < n; ++a) labels.push_back("e" + std::to_string(a));
  if (static_cast<int>(labels.size()) != n)
    throw std::invalid_argument("wrong number of element labels");
  g.labels_ = std::move(labels);
  return g;
}

int FiniteGroup::element_order(int a) const {
  int x = a, k = 1;
  while (x != 0) {
    x = mul(x, a);
    ++k;
  }
  return k;
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < order_; ++a)
    for (int b = a + 1; b < order_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

ElementSet all_elements(const FiniteGroup& g) {
  ElementSet s(g.order());
  for (int i = 0; i < g.order(); ++i) s[i] = i;
  return s;
}

ElementSet closure(const FiniteGroup& g, const ElementSet& seed) {
  std::vector<char> in(g.order(), 0);
  std::vector<int> elems;
  auto add = [&](int x) {
    if (!in[x]) {
      in[x] = 1;
      elems.push_back(x);
    }
  };
  add(0);
  for (int s : seed) {
    if (s < 0 || s >= g.order())
      throw std::invalid_argument("element index out of range");
    add(s);
  }
  // Every ordered pair of current elements gets multiplied exactly once; a
  // finite set closed under multiplication is a subgroup.
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      add(g.mul(elems[i], elems[j]));
      add(g.mul(elems[j], elems[i]));
    }
  }
  std::sort(elems.begin(), elems.end());
  return elems;
}

ElementSet normal_closure(const FiniteGroup& g, const ElementSet& seed) {
  ElementSet conjugates;
  for (int s : seed)
    for (int x = 0; x < g.order(); ++x) conjugates.push_back(g.conj(x, s));
  // The subgroup generated by a conjugation-closed set is normal.
  return closure(g, conjugates);
}

ElementSet commutator_subgroup(const FiniteGroup& g, const ElementSet& a,
                               const ElementSet& b) {
  ElementSet comms;
  for (int x : a)
    for (int y : b)
      comms.push_back(g.mul(g.mul(x, y), g.mul(g.inv(x), g.inv(y))));
  return closure(g, comms);
}

bool is_subgroup(const FiniteGroup& g, const ElementSet& s) {
  if (s.empty() || !std::binary_search(s.begin(), s.end(), 0)) return false;
  for (int a : s)
    for (int b : s)
      if (!std::binary_search(s.begin(), s.end(), g.mul(a, b))) return false;
  return true;
}

bool is_normal_subgroup(const FiniteGroup& g, const ElementSet& s) {
  if (!is_subgroup(g, s)) return false;
  for (int x = 0; x < g.order(); ++x)
    for (int a : s)
      if (!std::binary_search(s.begin(), s.end(), g.conj(x, a))) return false;
  return true;
}

ElementSet intersect(const ElementSet& a, const ElementSet& b) {
  ElementSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

ElementSet normalizer(const FiniteGroup& g, const ElementSet& s) {
  ElementSet out;
  for (int x = 0; x < g.order(); ++x) {
    bool ok = true;
    for (int a : s)
      if (!std::binary_search(s.begin(), s.end(), g.conj(x, a))) {
        ok = false;
        break;
      }
    if (ok) out.push_back(x);
  }
  return out;
}

std::vector<ElementSet> conjugacy_classes(const FiniteGroup& g) {
  std::vector<char> seen(g.order(), 0);
  std::vector<ElementSet> classes;
  for (int a = 0; a < g.order(); ++a) {
    if (seen[a]) continue;
    ElementSet cls;
    for (int x = 0; x < g.order(); ++x) {
      int c = g.conj(x, a);
      if (!seen[c]) {
        seen[c] = 1;
        cls.push_back(c);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

namespace {

std::vector<ElementSet> sorted_lattice(std::set<ElementSet> found) {
  std::vector<ElementSet> out(found.begin(), found.end());
  std::sort(out.begin(), out.end(), [](const ElementSet& a, const ElementSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

}  // namespace

std::vector<ElementSet> normal_subgroups(const FiniteGroup& g) {
  // Walk the lattice upward: a normal subgroup is a union of conjugacy
  // classes, and any strictly larger one is reached by adjoining a class.
  std::vector<ElementSet> classes = conjugacy_classes(g);
  std::set<ElementSet> found;
  std::queue<ElementSet> work;
  ElementSet trivial{0};
  found.insert(trivial);
  work.push(trivial);
  while (!work.empty()) {
    ElementSet n = std::move(work.front());
    work.pop();
    for (const ElementSet& cls : classes) {
      if (std::includes(n.begin(), n.end(), cls.begin(), cls.end())) continue;
      ElementSet seed = n;
      seed.insert(seed.end(), cls.begin(), cls.end());
      ElementSet next = closure(g, seed);
      if (found.insert(next).second) work.push(std::move(next));
    }
  }
  return sorted_lattice(std::move(found));
}

std::vector<ElementSet> all_subgroups(const FiniteGroup& g) {
  std::set<ElementSet> found;
  std::queue<ElementSet> work;
  ElementSet trivial{0};
  found.insert(trivial);
  work.push(trivial);
  while (!work.empty()) {
    ElementSet s = std::move(work.front());
    work.pop();
    for (int x = 0; x < g.order(); ++x) {
      if (std::binary_search(s.begin(), s.end(), x)) continue;
      ElementSet seed = s;
      seed.push_back(x);
      ElementSet next = closure(g, seed);
      if (found.insert(next).second) work.push(std::move(next));
    }
  }
  return sorted_lattice(std::move(found));
}

std::vector<ElementSet> series(const FiniteGroup& g, SeriesKind kind) {
  ElementSet whole = all_elements(g);
  std::vector<ElementSet> terms{whole};
  for (;;) {
    const ElementSet& last = terms.back();
    ElementSet next = kind == SeriesKind::derived
                          ? commutator_subgroup(g, last, last)
                          : commutator_subgroup(g, whole, last);
    if (next == last) {
      // Stable: show the repeat once unless we already hit the bottom.
      if (last.size() > 1) terms.push_back(std::move(next));
      break;
    }
    bool done = next.size() == 1;
    terms.push_back(std::move(next));
    if (done) break;
  }
  return terms;
}

bool is_solvable(const FiniteGroup& g) {
  return series(g, SeriesKind::derived).back().size() == 1;
}

bool is_nilpotent(const FiniteGroup& g) {
  return series(g, SeriesKind::lower_central).back().size() == 1;
}

ElementSet sylow_subgroup(const FiniteGroup& g, int ell) {
  if (ell < 2) throw std::invalid_argument("Sylow prime must be >= 2");
  int part = 1;
  while ((g.order() / part) % ell == 0) part *= ell;

  ElementSet p{0};
  while (static_cast<int>(p.size()) < part) {
    // P < Sylow forces ell | [N(P):P], so N(P) \ P holds an element whose
    // least power landing in P is the ell-th; adjoining it grows P by a
    // factor of ell while staying an ell-group.
    ElementSet nor = normalizer(g, p);
    bool grew = false;
    for (int h : nor) {
      if (std::binary_search(p.begin(), p.end(), h)) continue;
      int t = 1, x = h;
      while (!std::binary_search(p.begin(), p.end(), x)) {
        x = g.mul(x, h);
        ++t;
      }
      if (t == ell) {
        ElementSet seed = p;
        seed.push_back(h);
        p = closure(g, seed);
        grew = true;
        break;
      }
    }
    if (!grew)
      throw std::logic_error("Sylow growth stalled");  // unreachable
  }
  return p;
}

SubgroupView subgroup_group(const FiniteGroup& g, const ElementSet& s) {
  if (!is_subgroup(g, s)) throw std::invalid_argument("not a subgroup");
  int m = static_cast<int>(s.size());
  std::vector<int> to_index(g.order(), -1);
  for (int i = 0; i < m; ++i) to_index[s[i]] = i;
  std::vector<std::vector<int>> table(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) table[i][j] = to_index[g.mul(s[i], s[j])];

  // Greedy generating set: sweep elements, keep those not yet generated.
  ElementSet gens_parent;
  ElementSet have = closure(g, {});
  std::vector<int> gens;
  for (int x : s) {
    if (std::binary_search(have.begin(), have.end(), x)) continue;
    gens_parent.push_back(x);
    have = closure(g, gens_parent);
    gens.push_back(to_index[x]);
  }
  std::vector<std::string> labels;
  for (int x : s) labels.push_back(g.label(x));
  SubgroupView view;
  view.group = FiniteGroup::from_table(std::move(table), std::move(gens),
                                       std::move(labels));
  view.to_parent = s;
  return view;
}

QuotientView quotient_group(const FiniteGroup& g, const ElementSet& n) {
  if (!is_normal_subgroup(g, n))
    throw std::invalid_argument("quotient needs a normal subgroup");
  // Name each coset by its least element.
  std::vector<int> rep(g.order());
  for (int x = 0; x < g.order(); ++x) {
    int r = x;
    for (int k : n) r = std::min(r, g.mul(k, x));
    rep[x] = r;
  }
  std::vector<int> reps;
  for (int x = 0; x < g.order(); ++x)
    if (rep[x] == x) reps.push_back(x);
  std::vector<int> coset_of(g.order(), -1);
  for (std::size_t i = 0; i < reps.size(); ++i) coset_of[reps[i]] = static_cast<int>(i);
  std::vector<int> projection(g.order());
  for (int x = 0; x < g.order(); ++x) projection[x] = coset_of[rep[x]];

  int m = static_cast<int>(reps.size());
  std::vector<std::vector<int>> table(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      table[i][j] = projection[g.mul(reps[i], reps[j])];

  std::vector<int> gens;
  for (int x : g.generators()) {
    int q = projection[x];
    if (q != 0 && std::find(gens.begin(), gens.end(), q) == gens.end())
      gens.push_back(q);
  }
  std::vector<std::string> labels;
  for (int r : reps) labels.push_back("[" + g.label(r) + "]");
  QuotientView view;
  view.group =
      FiniteGroup::from_table(std::move(table), std::move(gens), std::move(labels));
  view.projection = std::move(projection);
  return view;
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  int na = a.order(), nb = b.order();
  int n = na * nb;
  auto idx = [nb](int x, int y) { return x * nb + y; };
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int x1 = 0; x1 < na; ++x1)
    for (int y1 = 0; y1 < nb; ++y1)
      for (int x2 = 0; x2 < na; ++x2)
        for (int y2 = 0; y2 < nb; ++y2)
          table[idx(x1, y1)][idx(x2, y2)] = idx(a.mul(x1, x2), b.mul(y1, y2));
  std::vector<int> gens;
  for (int x : a.generators()) gens.push_back(idx(x, 0));
  for (int y : b.generators()) gens.push_back(idx(0, y));
  std::vector<std::string> labels;
  for (int x = 0; x < na; ++x)
    for (int y = 0; y < nb; ++y)
      labels.push_back("(" + a.label(x) + "," + b.label(y) + ")");
  return FiniteGroup::from_table(std::move(table), std::move(gens),
                                 std::move(labels));
}

std::optional<std::vector<int>> hom_from_generator_images(
    const FiniteGroup& src, const FiniteGroup& dst,
    const std::vector<int>& gen_images) {
  const std::vector<int>& gens = src.generators();
  if (gen_images.size() != gens.size())
    throw std::invalid_argument("one image per source generator required");
  std::vector<int> phi(src.order(), -1);
  phi[0] = 0;
  std::vector<int> queue{0};
  // BFS over the Cayley graph.  Because every popped element is checked (or
  // extended) against every generator, consistency on all (element,
  // generator) pairs is established, which forces phi to be a homomorphism.
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    int x = queue[qi];
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
      int y = src.mul(x, gens[gi]);
      int img = dst.mul(phi[x], gen_images[gi]);
      if (phi[y] < 0) {
        phi[y] = img;
        queue.push_back(y);
      } else if (phi[y] != img) {
        return std::nullopt;
      }
    }
  }
  for (int v : phi)
    if (v < 0) throw std::logic_error("generators fail to generate source");
  return phi;
}

namespace {

// Exhaustive generator-image search shared by the automorphism /
// endomorphism / isomorphism routines.  `candidates[i]` lists allowed images
// of generator i; `accept` sees each successful extension.
template <typename F>
void for_each_hom(const FiniteGroup& src, const FiniteGroup& dst,
                  const std::vector<std::vector<int>>& candidates, F&& accept) {
  for (const auto& c : candidates)
    if (c.empty()) return;
  std::vector<int> choice(candidates.size(), 0);
  std::vector<int> images(candidates.size());
  for (;;) {
    for (std::size_t i = 0; i < candidates.size(); ++i)
      images[i] = candidates[i][choice[i]];
    if (auto phi = hom_from_generator_images(src, dst, images)) accept(*phi);
    std::size_t i = 0;
    for (; i < candidates.size(); ++i) {
      if (++choice[i] < static_cast<int>(candidates[i].size())) break;
      choice[i] = 0;
    }
    if (i == candidates.size()) break;
  }
}

bool is_bijection(const std::vector<int>& phi, int n) {
  std::vector<char> hit(n, 0);
  for (int v : phi) {
    if (hit[v]) return false;
    hit[v] = 1;
  }
  return true;
}

}  // namespace

long automorphism_count(const FiniteGroup& g) {
  std::vector<std::vector<int>> candidates;
  for (int gen : g.generators()) {
    std::vector<int> c;
    int ord = g.element_order(gen);
    for (int x = 0; x < g.order(); ++x)
      if (g.element_order(x) == ord) c.push_back(x);
    candidates.push_back(std::move(c));
  }
  long count = 0;
  for_each_hom(g, g, candidates, [&](const std::vector<int>& phi) {
    if (is_bijection(phi, g.order())) ++count;
  });
  return count;
}

std::vector<std::vector<int>> surjective_endomorphisms(const FiniteGroup& g) {
  std::vector<std::vector<int>> candidates;
  for (int gen : g.generators()) {
    std::vector<int> c;
    int ord = g.element_order(gen);
    for (int x = 0; x < g.order(); ++x)
      if (ord % g.element_order(x) == 0) c.push_back(x);
    candidates.push_back(std::move(c));
  }
  std::vector<std::vector<int>> out;
  for_each_hom(g, g, candidates, [&](const std::vector<int>& phi) {
    std::vector<char> hit(g.order(), 0);
    int distinct = 0;
    for (int v : phi)
      if (!hit[v]) {
        hit[v] = 1;
        ++distinct;
      }
    if (distinct == g.order()) out.push_back(phi);
  });
  return out;
}

std::optional<std::vector<int>> find_isomorphism(const FiniteGroup& g,
                                                 const FiniteGroup& h) {
  if (g.order() != h.order()) return std::nullopt;
  std::vector<std::vector<int>> candidates;
  for (int gen : g.generators()) {
    std::vector<int> c;
    int ord = g.element_order(gen);
    for (int x = 0; x < h.order(); ++x)
      if (h.element_order(x) == ord) c.push_back(x);
    if (c.empty()) return std::nullopt;
    candidates.push_back(std::move(c));
  }
  std::optional<std::vector<int>> found;
  for_each_hom(g, h, candidates, [&](const std::vector<int>& phi) {
    if (!found && is_bijection(phi, g.order())) found = phi;
  });
  return found;
}

}  // namespace devissage

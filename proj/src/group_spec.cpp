#include "devissage/group_spec.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <stdexcept>

namespace devissage {

namespace {

[[noreturn]] void bad_spec(std::string_view spec, const std::string& why) {
  throw std::invalid_argument("bad group spec '" + std::string(spec) +
                              "': " + why);
}

Permutation n_cycle(int n) {
  Permutation p(n);
  for (int i = 0; i < n; ++i) p[i] = (i + 1) % n;
  return p;
}

FiniteGroup cyclic(int n) {
  if (n == 1) return FiniteGroup();
  return FiniteGroup::from_permutations({n_cycle(n)});
}

FiniteGroup symmetric(int n) {
  if (n <= 1) return FiniteGroup();
  if (n > 5)
    throw std::invalid_argument("S" + std::to_string(n) +
                                " exceeds the supported degree (<= 5)");
  Permutation swap01(n);
  for (int i = 0; i < n; ++i) swap01[i] = i;
  swap01[0] = 1;
  swap01[1] = 0;
  return FiniteGroup::from_permutations({swap01, n_cycle(n)});
}

FiniteGroup alternating(int n) {
  if (n <= 2) return FiniteGroup();
  if (n > 5)
    throw std::invalid_argument("A" + std::to_string(n) +
                                " exceeds the supported degree (<= 5)");
  // 3-cycles (0 1 2) and, past degree 3, (n-3 n-2 n-1) generate A_n for n <= 5.
  auto three_cycle = [n](int a, int b, int c) {
    Permutation p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    p[a] = b;
    p[b] = c;
    p[c] = a;
    return p;
  };
  if (n == 3) return FiniteGroup::from_permutations({three_cycle(0, 1, 2)});
  return FiniteGroup::from_permutations(
      {three_cycle(0, 1, 2), three_cycle(n - 3, n - 2, n - 1)});
}

FiniteGroup dihedral(int n) {
  // Order 2n.  The n-gon action degenerates below n = 3.
  if (n < 1) throw std::invalid_argument("D0 is not a group");
  if (n == 1) return cyclic(2);
  if (n == 2) return direct_product(cyclic(2), cyclic(2));
  Permutation reflect(n);
  for (int i = 0; i < n; ++i) reflect[i] = (n - i) % n;
  return FiniteGroup::from_permutations({n_cycle(n), reflect});
}

FiniteGroup quaternion8() {
  // Elements 0..7 = 1, -1, i, -i, j, -j, k, -k; index = 2*axis + (sign < 0).
  // Basis products carry a sign: i^2 = j^2 = k^2 = -1, ij = k cyclically.
  static const int basis[4][4] = {
      // axis result (0=1,1=i,2=j,3=k)
      {0, 1, 2, 3},
      {1, 0, 3, 2},
      {2, 3, 0, 1},
      {3, 2, 1, 0},
  };
  static const int sign[4][4] = {
      {+1, +1, +1, +1},
      {+1, -1, +1, -1},
      {+1, -1, -1, +1},
      {+1, +1, -1, -1},
  };
  std::vector<std::vector<int>> table(8, std::vector<int>(8));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      int ax = a / 2, bx = b / 2;
      int s = (a % 2 ? -1 : 1) * (b % 2 ? -1 : 1) * sign[ax][bx];
      table[a][b] = 2 * basis[ax][bx] + (s < 0 ? 1 : 0);
    }
  return FiniteGroup::from_table(
      table, {2, 4}, {"1", "-1", "i", "-i", "j", "-j", "k", "-k"});
}

int parse_int(std::string_view spec, std::string_view digits) {
  if (digits.empty()) bad_spec(spec, "missing order");
  for (char c : digits)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      bad_spec(spec, "malformed order");
  return std::stoi(std::string(digits));
}

FiniteGroup parse_atom(std::string_view spec, std::string_view atom) {
  if (atom.empty()) bad_spec(spec, "empty factor");
  char kind = atom.front();
  std::string_view rest = atom.substr(1);
  switch (kind) {
    case 'C':
      return cyclic(parse_int(spec, rest));
    case 'S':
      return symmetric(parse_int(spec, rest));
    case 'A':
      return alternating(parse_int(spec, rest));
    case 'D':
      return dihedral(parse_int(spec, rest));
    case 'Q':
      if (rest == "8") return quaternion8();
      bad_spec(spec, "only Q8 is built in");
    default:
      bad_spec(spec, std::string("unknown family '") + kind + "'");
  }
}

FiniteGroup parse_perms(std::string_view spec, std::string_view body) {
  std::vector<std::vector<std::vector<int>>> perms;  // perm -> cycles -> points
  std::vector<std::vector<int>> cycles;
  std::vector<int> cycle;
  int degree = 0;
  std::size_t i = 0;
  auto flush_perm = [&]() {
    if (cycles.empty()) bad_spec(spec, "empty permutation");
    perms.push_back(cycles);
    cycles.clear();
  };
  while (i < body.size()) {
    char c = body[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == '(') {
      cycle.clear();
      ++i;
      while (i < body.size() && body[i] != ')') {
        if (std::isspace(static_cast<unsigned char>(body[i]))) {
          ++i;
          continue;
        }
        std::size_t j = i;
        while (j < body.size() &&
               std::isdigit(static_cast<unsigned char>(body[j])))
          ++j;
        if (j == i) bad_spec(spec, "expected a point inside a cycle");
        int pt = std::stoi(std::string(body.substr(i, j - i)));
        if (pt < 1) bad_spec(spec, "points are 1-based");
        cycle.push_back(pt - 1);
        degree = std::max(degree, pt);
        i = j;
      }
      if (i == body.size()) bad_spec(spec, "unclosed cycle");
      ++i;  // ')'
      cycles.push_back(cycle);
    } else if (c == ',') {
      flush_perm();
      ++i;
    } else {
      bad_spec(spec, std::string("unexpected character '") + c + "'");
    }
  }
  flush_perm();
  if (degree == 0) bad_spec(spec, "no points mentioned");

  std::vector<Permutation> gens;
  for (const auto& cyc_list : perms) {
    Permutation p(degree);
    for (int x = 0; x < degree; ++x) p[x] = x;
    for (const auto& cyc : cyc_list) {
      // Apply the cycle on top of p; cycles of one permutation are expected
      // to be disjoint, which the permutation check catches if violated.
      for (std::size_t k = 0; k < cyc.size(); ++k) {
        int from = cyc[k], to = cyc[(k + 1) % cyc.size()];
        if (p[from] != from)
          bad_spec(spec, "cycles within one permutation must be disjoint");
        p[from] = to;
      }
    }
    gens.push_back(std::move(p));
  }
  return FiniteGroup::from_permutations(gens);
}

}  // namespace

FiniteGroup parse_group_spec(std::string_view spec) {
  std::string_view s = spec;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  if (s.empty()) bad_spec(spec, "empty");
  if (s.starts_with("perm:")) return parse_perms(spec, s.substr(5));

  // Whitespace is insignificant outside perm: bodies ("C2 x C2" == "C2xC2").
  std::string packed;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) packed.push_back(c);

  std::optional<FiniteGroup> acc;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= packed.size(); ++i) {
    if (i == packed.size() || packed[i] == 'x') {
      FiniteGroup factor =
          parse_atom(spec, std::string_view(packed).substr(start, i - start));
      acc = acc ? direct_product(*acc, factor) : std::move(factor);
      start = i + 1;
    }
  }
  return *acc;
}

std::vector<std::pair<std::string, FiniteGroup>> builtin_corpus(int max_order) {
  std::vector<std::string> specs;
  for (int n = 1; n <= std::min(max_order, 48); ++n)
    specs.push_back("C" + std::to_string(n));
  for (int n = 2; 2 * n <= std::min(max_order, 48); ++n)
    specs.push_back("D" + std::to_string(n));
  for (const char* s : {"S3", "S4", "A4", "Q8",
                        // direct products, orders 4..48
                        "C2xC2", "C2xC4", "C2xC2xC2", "C3xC3", "C2xC6",
                        "C2xC8", "C2xC2xC4", "C2xC2xC2xC2", "C2xQ8", "C2xD4",
                        "C2xS3", "C2xA4", "C3xS3", "C2xC12", "C2xC2xC6",
                        "C3xQ8", "C3xD4", "C4xC4", "C2xC2xC2xC3", "C4xS3",
                        "C3xC9", "C2xC16", "C2xC2xC8", "C4xQ8", "C2xC24",
                        "C3xC12", "C2xC2xC3xC3", "C6xQ8", "C4xC12"})
    specs.push_back(s);

  std::vector<std::pair<std::string, FiniteGroup>> out;
  for (const std::string& s : specs) {
    FiniteGroup g = parse_group_spec(s);
    if (g.order() <= max_order) out.emplace_back(s, std::move(g));
  }
  return out;
}

}  // namespace devissage

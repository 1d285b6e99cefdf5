#include "devissage/kernel_basis.hpp"

#include <cstdlib>
#include <map>
#include <stdexcept>

#include "devissage/group_spec.hpp"

namespace devissage {

SubgroupBasis mu_n_kernel_basis(int n) {
  if (n < 1) throw std::invalid_argument("mu_N needs N >= 1");
  FpPresentation free2(2, {});
  FiniteGroup cn = parse_group_spec("C" + std::to_string(n));
  // C_n from the DSL is the closure of one n-cycle, numbered so that element
  // k is the k-th power of the generator; a -> that generator, b -> 1.
  SubgroupBasis out;
  out.kind = BasisKind::mu;
  out.table = kernel_coset_table(free2, cn, {n == 1 ? 0 : 1, 0});

  Word a(2, {1}), b(2, {2});
  out.generators.emplace_back("a^" + std::to_string(n), power(a, n));
  for (int i = 0; i < n; ++i)
    out.generators.emplace_back("c" + std::to_string(i),
                                conjugate(b, power(a, i)));
  return out;
}

namespace {

void check_chi_params(int genus, int punctures) {
  if (genus < 1) throw std::invalid_argument("chi needs genus >= 1");
  if (punctures < 0) throw std::invalid_argument("negative puncture count");
}

// Letter helpers over the chi alphabet of rank 2g+1+n (generators are the
// 1-based y_i).
Word y(int rank, int i, int sign = 1) {
  return Word(rank, {static_cast<letter_type>(sign * i)});
}

}  // namespace

std::vector<std::string> chi_basis_labels(int genus, int punctures) {
  check_chi_params(genus, punctures);
  std::vector<std::string> labels;
  for (int i = 1; i <= 2 * genus + 1; ++i)
    labels.push_back("g1" + std::to_string(i));
  for (int j = 2; j <= 2 * genus + 1; ++j)
    labels.push_back("g" + std::to_string(j) + "1");
  for (int i = 2 * genus + 2; i <= 2 * genus + 1 + punctures; ++i)
    labels.push_back("y" + std::to_string(i));
  for (int i = 2 * genus + 2; i <= 2 * genus + 1 + punctures; ++i)
    labels.push_back("c" + std::to_string(i));
  return labels;
}

SubgroupBasis chi_kernel_basis(int genus, int punctures) {
  check_chi_params(genus, punctures);
  int rank = 2 * genus + 1 + punctures;
  FpPresentation free_r(rank, {});
  FiniteGroup c2 = parse_group_spec("C2");
  std::vector<int> images(rank, 0);
  for (int i = 0; i < 2 * genus + 1; ++i) images[i] = 1;

  SubgroupBasis out;
  out.kind = BasisKind::chi;
  out.table = kernel_coset_table(free_r, c2, images);

  Word y1 = y(rank, 1);
  for (int i = 1; i <= 2 * genus + 1; ++i)
    out.generators.emplace_back("g1" + std::to_string(i),
                                multiply(y1, y(rank, i)));
  for (int j = 2; j <= 2 * genus + 1; ++j)
    out.generators.emplace_back("g" + std::to_string(j) + "1",
                                multiply(y(rank, j), invert(y1)));
  for (int i = 2 * genus + 2; i <= rank; ++i)
    out.generators.emplace_back("y" + std::to_string(i), y(rank, i));
  for (int i = 2 * genus + 2; i <= rank; ++i)
    out.generators.emplace_back("c" + std::to_string(i),
                                conjugate(y(rank, i), y1));
  return out;
}

int chi_value(int genus, int punctures, const Word& w) {
  check_chi_params(genus, punctures);
  if (w.rank() != 2 * genus + 1 + punctures)
    throw std::invalid_argument("word over the wrong alphabet for chi");
  int parity = 0;
  for (letter_type l : w.letters())
    if (std::abs(l) <= 2 * genus + 1) parity ^= 1;
  return parity;
}

std::vector<SignedLabel> rewrite_in_chi_basis(int genus, int punctures,
                                              const Word& w) {
  check_chi_params(genus, punctures);
  int rank = 2 * genus + 1 + punctures;
  int odd_max = 2 * genus + 1;
  if (w.rank() != rank)
    throw std::invalid_argument("word over the wrong alphabet for chi");
  if (chi_value(genus, punctures, w) != 0)
    throw std::invalid_argument("word is not in ker(chi)");

  std::vector<SignedLabel> out;
  auto g1i = [](int i) { return "g1" + std::to_string(i); };
  auto gj1 = [](int j) { return "g" + std::to_string(j) + "1"; };
  auto emit = [&out](std::string label, int sign) {
    out.push_back({std::move(label), sign});
  };
  // y_i^e y_1^-1 for odd i: the bridge between an odd head and y_1.
  auto emit_head_vs_y1 = [&](int i, int e) {
    if (e > 0) {
      if (i != 1) emit(gj1(i), +1);  // i == 1 gives the empty factor
    } else {
      emit(g1i(i), -1);
    }
  };

  Word rest = w;
  while (!rest.empty()) {
    letter_type l1 = rest.letters()[0];
    int i = std::abs(l1), e = l1 > 0 ? 1 : -1;
    if (i > odd_max) {
      // Even head: it is a basis element by itself.
      emit("y" + std::to_string(i), e);
      rest = Word(rank, {rest.letters().begin() + 1, rest.letters().end()});
      continue;
    }
    // Odd head: the kernel condition guarantees a second letter.
    letter_type l2 = rest.letters()[1];
    int j = std::abs(l2), d = l2 > 0 ? 1 : -1;
    if (j <= odd_max) {
      // Two odd letters combine through y_1: y_i^e y_j^d =
      // (y_i^e y_1^-1)(y_1 y_j^d), each factor a basis element or inverse.
      if (e > 0 && d > 0) {
        if (i != 1) emit(gj1(i), +1);
        emit(g1i(j), +1);
      } else if (e > 0 && d < 0) {
        if (j == 1) {
          if (i != 1) emit(gj1(i), +1);
        } else if (i == 1) {
          emit(gj1(j), -1);
        } else {
          emit(gj1(i), +1);
          emit(gj1(j), -1);
        }
      } else if (e < 0 && d > 0) {
        emit(g1i(i), -1);
        emit(g1i(j), +1);
      } else {
        if (j == 1) {
          emit(g1i(i), -1);
        } else {
          emit(g1i(i), -1);
          emit(gj1(j), -1);
        }
      }
      rest = Word(rank, {rest.letters().begin() + 2, rest.letters().end()});
    } else {
      // Odd head, even second letter: bridge through y_1, turning the even
      // letter into its conjugate c_j, and push y_1 back onto the tail:
      // y_i^e y_j^d u = (y_i^e y_1^-1)(y_1 y_j^d y_1^-1)(y_1 u).
      emit_head_vs_y1(i, e);
      emit("c" + std::to_string(j), d);
      Word tail(rank, {rest.letters().begin() + 2, rest.letters().end()});
      rest = multiply(y(rank, 1), tail);
    }
  }
  return out;
}

Word expand_chi_factors(int genus, int punctures,
                        const std::vector<SignedLabel>& factors) {
  SubgroupBasis basis = chi_kernel_basis(genus, punctures);
  std::map<std::string, Word> by_label;
  for (const auto& [label, word] : basis.generators) by_label.emplace(label, word);
  Word acc(2 * genus + 1 + punctures);
  for (const auto& [label, sign] : factors) {
    auto it = by_label.find(label);
    if (it == by_label.end())
      throw std::invalid_argument("unknown basis label '" + label + "'");
    acc = multiply(acc, sign > 0 ? it->second : invert(it->second));
  }
  return acc;
}

FpPresentation hyperelliptic_quotient(int genus, int punctures, bool odd_case) {
  check_chi_params(genus, punctures);
  if (odd_case && punctures < 1)
    throw std::invalid_argument("the odd case needs at least one puncture");
  std::vector<std::string> labels = chi_basis_labels(genus, punctures);
  int rank = static_cast<int>(labels.size());  // 4g + 2n + 1
  std::map<std::string, int> index;
  for (int k = 0; k < rank; ++k) index.emplace(labels[k], k);
  auto letter_of = [&](const std::string& label) {
    return static_cast<letter_type>(index.at(label) + 1);
  };

  std::vector<Word> relators;
  relators.emplace_back(rank, std::vector<letter_type>{letter_of("g11")});
  for (int j = 2; j <= 2 * genus + 1; ++j)
    relators.emplace_back(
        rank, std::vector<letter_type>{
                  letter_of("g" + std::to_string(j) + "1"),
                  letter_of("g1" + std::to_string(j))});
  if (odd_case)
    relators.emplace_back(
        rank, std::vector<letter_type>{
                  letter_of("y" + std::to_string(2 * genus + 2))});
  return FpPresentation(rank, std::move(relators));
}

}  // namespace devissage

#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "devissage/presentation.hpp"

namespace devissage {

using bigint = boost::multiprecision::cpp_int;

/// Isomorphism type of a finitely generated abelian group:
/// Z^free_rank x Z/t_1 x .. x Z/t_k with t_1 | t_2 | .. | t_k, all t_i >= 2.
struct AbelianInvariants {
  int free_rank = 0;
  std::vector<bigint> torsion;

  friend bool operator==(const AbelianInvariants&,
                         const AbelianInvariants&) = default;
};

/// "Z^r x Z/2 x Z/6" (or "0" for the trivial group).
std::string to_text(const AbelianInvariants& inv);

/// Diagonal of the Smith normal form of an integer matrix (rows need not be
/// independent).  Entries are returned nonnegative with d_1 | d_2 | .. and
/// zeros last; trailing zeros are included up to min(rows, cols).
std::vector<bigint> smith_diagonal(std::vector<std::vector<bigint>> m);

/// Abelianization of the group presented by p (ramification words are loops,
/// not relations, so they do not contribute).
AbelianInvariants abelian_invariants(const FpPresentation& p);

}  // namespace devissage

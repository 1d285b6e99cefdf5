#include "devissage/abelian.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>

namespace devissage {

namespace {

using Matrix = std::vector<std::vector<bigint>>;

// Smallest-entry pivoting keeps coefficients tame enough that cpp_int never
// becomes a bottleneck for the matrix sizes presentations produce.
void smith_step(Matrix& m, std::size_t t) {
  std::size_t rows = m.size(), cols = m[0].size();
  for (;;) {
    // Locate the nonzero entry of least magnitude in the trailing block.
    std::size_t pi = t, pj = t;
    bigint best = 0;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j) {
        if (m[i][j] == 0) continue;
        bigint a = abs(m[i][j]);
        if (best == 0 || a < best) {
          best = a;
          pi = i;
          pj = j;
        }
      }
    if (best == 0) return;  // trailing block vanished: done at this pivot
    std::swap(m[t], m[pi]);
    for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][t], m[i][pj]);

    // Clear the pivot row and column by division with remainder.
    bool dirty = false;
    for (std::size_t i = t + 1; i < rows; ++i) {
      if (m[i][t] == 0) continue;
      bigint q = m[i][t] / m[t][t];
      for (std::size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
      if (m[i][t] != 0) dirty = true;  // remainder: smaller pivot available
    }
    for (std::size_t j = t + 1; j < cols; ++j) {
      if (m[t][j] == 0) continue;
      bigint q = m[t][j] / m[t][t];
      for (std::size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
      if (m[t][j] != 0) dirty = true;
    }
    if (dirty) continue;

    // Pivot divides every entry below-right?  If not, fold the offending row
    // into row t and go around again; this is what forces d_t | d_{t+1}.
    bool divides = true;
    for (std::size_t i = t + 1; i < rows && divides; ++i)
      for (std::size_t j = t + 1; j < cols && divides; ++j)
        if (m[i][j] % m[t][t] != 0) {
          for (std::size_t jj = t; jj < cols; ++jj) m[t][jj] += m[i][jj];
          divides = false;
        }
    if (divides) return;
  }
}

}  // namespace

std::vector<bigint> smith_diagonal(Matrix m) {
  if (m.empty() || m[0].empty()) return {};
  std::size_t rows = m.size(), cols = m[0].size();
  for (const auto& row : m)
    if (row.size() != cols)
      throw std::invalid_argument("ragged matrix in smith_diagonal");
  std::size_t steps = std::min(rows, cols);
  std::vector<bigint> diag;
  for (std::size_t t = 0; t < steps; ++t) {
    smith_step(m, t);
    diag.push_back(abs(m[t][t]));
  }
  return diag;
}

AbelianInvariants abelian_invariants(const FpPresentation& p) {
  int rank = p.rank();
  AbelianInvariants inv;
  if (rank == 0) return inv;
  if (p.relators().empty()) {
    inv.free_rank = rank;
    return inv;
  }
  Matrix m;
  for (const Word& r : p.relators()) {
    std::vector<bigint> row(rank);
    for (int k = 0; k < rank; ++k) row[k] = exponent_sum(r, k);
    m.push_back(std::move(row));
  }
  std::vector<bigint> diag = smith_diagonal(std::move(m));
  int pivots = 0;
  for (const bigint& d : diag) {
    if (d == 0) continue;
    ++pivots;
    if (d >= 2) inv.torsion.push_back(d);
  }
  inv.free_rank = rank - pivots;
  return inv;
}

std::string to_text(const AbelianInvariants& inv) {
  std::string out;
  auto append = [&](const std::string& part) {
    if (!out.empty()) out += " x ";
    out += part;
  };
  if (inv.free_rank == 1) append("Z");
  if (inv.free_rank > 1) append("Z^" + std::to_string(inv.free_rank));
  for (const bigint& t : inv.torsion) append("Z/" + t.str());
  return out.empty() ? "0" : out;
}

}  // namespace devissage

#pragma once

#include <string>
#include <vector>

#include "devissage/coset_table.hpp"
#include "devissage/presentation.hpp"
#include "devissage/word.hpp"

namespace devissage {

/// Basis of the kernel of F_2 = <a, b> -> Z/N, a -> 1, b -> 0: the power
/// a^N (labelled "a^N") together with the conjugates a^i b a^-i for
/// 0 <= i < N (labelled "c0".."c{N-1}").  These N+1 words form a free basis
/// and coincide, as a set, with the Schreier generators for the canonical
/// transversal {a^i}.
SubgroupBasis mu_n_kernel_basis(int n);

/// Basis of the kernel of the parity map chi: F_{2g+1+n} -> Z/2 sending
/// y_1..y_{2g+1} to 1 and y_{2g+2}..y_{2g+1+n} to 0 (genus g, n punctures,
/// g >= 1).  The 4g+2n+1 basis elements, with their labels (indices are
/// 1-based, matching the y's):
///   g1i = y_1 y_i          (i = 1..2g+1)
///   gj1 = y_j y_1^-1       (j = 2..2g+1)
///   y{i} = y_i             (i = 2g+2..2g+1+n)
///   c{i} = y_1 y_i y_1^-1  (i = 2g+2..2g+1+n)
/// Set-equal to the Schreier generators for the transversal {1, y_1}.
SubgroupBasis chi_kernel_basis(int genus, int punctures);

/// The labels above, in the order chi_kernel_basis lists them.
std::vector<std::string> chi_basis_labels(int genus, int punctures);

/// Parity of w under chi (0 or 1).
int chi_value(int genus, int punctures, const Word& w);

/// One factor of a rewritten kernel word: a basis label with an exponent.
struct SignedLabel {
  std::string label;
  int sign = 1;  // +1 or -1

  friend bool operator==(const SignedLabel&, const SignedLabel&) = default;
};

/// Rewrite a word of ker(chi) as a product of chi-basis elements, by the
/// head recursion: a leading even letter is split off directly; two leading
/// odd letters combine through y_1; an odd letter followed by an even one
/// bridges through y_1, producing a conjugate generator c{i}.  Throws
/// std::invalid_argument if w is not in the kernel.  The factorization
/// satisfies expand_chi_factors(g, n, result) == w.
std::vector<SignedLabel> rewrite_in_chi_basis(int genus, int punctures,
                                              const Word& w);

/// Multiply out a factor list through the basis words (for verification).
Word expand_chi_factors(int genus, int punctures,
                        const std::vector<SignedLabel>& factors);

/// Presentation, on the chi-basis alphabet (generator k is
/// chi_basis_labels(g, n)[k]), of the quotient of ker(chi) by the relations
/// identifying it with the fundamental group downstairs of the double cover:
/// g11 = 1 and gj1 g1j = 1 for j = 2..2g+1 (these say y_j^2 = 1 upstairs).
/// With odd_case set (needs n >= 1), y_{2g+2} = 1 is added.  Tietze
/// elimination leaves a free group of rank 2g+2n (2g+2n-1 in the odd case).
FpPresentation hyperelliptic_quotient(int genus, int punctures,
                                      bool odd_case = false);

}  // namespace devissage

#pragma once

#include <string>
#include <vector>

#include "knotsig/diagram.hpp"
#include "knotsig/matrix.hpp"
#include "knotsig/polynomial.hpp"

namespace knotsig {

/// A braid word on `strands` strands. Letter k > 0 is sigma_k, k < 0 its inverse.
struct BraidWord {
  int strands = 1;
  std::vector<int> letters;

  bool is_positive() const;
  /// "N: l1 l2 ..."
  std::string to_string() const;
  friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

/// Parses "N: l1 l2 ...". Errors on a missing or non-positive strand count,
/// bad tokens and out-of-range indices.
BraidWord parse_braid(const std::string& text);

/// Number of components of the closure (cycles of the permutation).
int closure_components(const BraidWord& b);

/// A basis curve of the braided Seifert surface: it runs between the bands of
/// two consecutive letters with the same index.
struct BrickGenerator {
  int index = 0;   ///< generator index i of sigma_i
  int first = 0;   ///< position of the lower letter in the word
  int second = 0;  ///< position of the next letter with the same index
};

struct SeifertMatrixData {
  IntMatrix matrix;
  std::vector<BrickGenerator> basis;
};

/// Seifert matrix of the canonical surface of the closure (disks joined by
/// one half-twisted band per letter), for words of any sign. Raw convention:
/// a right-handed (positive) band pair gives -1 on the diagonal, so the
/// positive trefoil has raw signature -2. Unused indices give a disconnected
/// surface and a block-diagonal matrix.
SeifertMatrixData seifert_matrix(const BraidWord& b);

/// The same construction restricted to positive words with non-split closure,
/// where it is the Bennequin surface.
SeifertMatrixData bennequin_seifert_matrix(const BraidWord& b);

/// det(t A - A^T), unnormalized.
IntPolynomial alexander_raw(const IntMatrix& a);

/// Alexander polynomial normalized to symmetric form (low_exponent2 = -degree)
/// with positive leading coefficient. 1 for the empty matrix.
IntPolynomial alexander(const IntMatrix& a);

/// Conway polynomial det(t^{-1/2} A - t^{1/2} A^T) written in z = t^{1/2} - t^{-1/2}.
IntPolynomial conway(const IntMatrix& a);

/// z^1 coefficient of the Conway polynomial of a positive 2-component
/// non-split closure.
int conway_linear_coefficient(const BraidWord& b);

/// Half the signed count of crossings between the two components.
int linking_number(const BraidWord& b);

/// Closure diagram: strands oriented upward, closed on the right. Crossings
/// are ordered by the label of their incoming under-strand, and labels follow
/// each component from its first under-passage. If requested,
/// letter_of_crossing receives the word position behind each crossing.
LinkDiagram closure_diagram(const BraidWord& b, std::vector<int>* letter_of_crossing = nullptr);

}  // namespace knotsig

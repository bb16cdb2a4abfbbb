#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "oscoh/arrangement.hpp"
#include "oscoh/matrix.hpp"

namespace oscoh {

/// Signed multiple of an NBC monomial e_S (S given as bits 1..n).
struct Term {
  Mask monomial = 0;
  std::int64_t coefficient = 0;
  bool operator==(const Term&) const = default;
};

/// An element of the Orlik-Solomon algebra in the NBC basis, terms sorted
/// lexicographically by monomial, no zero coefficients.
using OsElement = std::vector<Term>;

/// Circuits of the cone, ordered by size then lexicographically. Element 0
/// (the hyperplane at infinity) occurs only for non-central arrangements,
/// where C minus 0 is a minimal set of hyperplanes with empty intersection.
std::vector<Mask> circuits(const Arrangement& arr);

/// Independent, nonempty intersection, and no broken circuit. The hyperplane
/// at infinity is the least element of the order; hyperplanes follow input order.
bool is_nbc(const Arrangement& arr, Mask s);

/// NBC monomials of degree q, lexicographically ordered.
std::vector<Mask> nbc_basis(const Arrangement& arr, int q);

/// Class of e_S in the Orlik-Solomon algebra, rewritten in the NBC basis by
/// repeatedly applying the boundary relation of the circuit behind the
/// smallest broken-circuit occurrence.
OsElement reduce_to_nbc(const Arrangement& arr, Mask s);

/// Matrix of a_y wedge: A^q -> A^{q+1} for the generic weight y = (y_1..y_n).
/// Row vectors: row i is the image of the i-th degree-q NBC monomial.
struct AomotoMatrix {
  struct Entry {
    std::size_t row = 0;
    std::size_t col = 0;
    std::vector<std::int64_t> form;  // coefficients of y_1..y_n
  };

  int degree = 0;
  int variables = 0;
  std::vector<Mask> row_basis;
  std::vector<Mask> col_basis;
  std::vector<Entry> entries;  // sorted by (row, col); each form nonzero

  std::size_t rows() const { return row_basis.size(); }
  std::size_t cols() const { return col_basis.size(); }

  /// Integer matrix mu^q(k).
  IntMatrix evaluate(std::span<const Integer> k) const;
  RationalMatrix evaluate(std::span<const Rational> lambda) const;
  /// Reduction of mu^q(k) mod N.
  ModMatrix evaluate_mod(std::span<const Integer> k, std::uint64_t modulus) const;

  /// Text dump: one line per row, entries separated by ", ", each a sparse
  /// sum such as "2*y1 - y3" or "0".
  std::string dump() const;
};

AomotoMatrix aomoto_matrix(const Arrangement& arr, int q);

/// All Aomoto matrices mu^0..mu^l with their NBC bases (bases[q] indexes A^q).
struct AomotoComplex {
  int n = 0;
  int rank = 0;
  std::vector<std::vector<Mask>> bases;
  std::vector<AomotoMatrix> matrices;

  std::vector<std::int64_t> dimensions() const;
};

AomotoComplex aomoto_complex(const Arrangement& arr);

/// "y1 - 2*y3" style rendering; "0" for the zero form.
std::string format_linear_form(std::span<const std::int64_t> form);

}  // namespace oscoh

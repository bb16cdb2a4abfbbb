#pragma once

#include <optional>
#include <string>
#include <vector>

#include "oscoh/matroid.hpp"
#include "oscoh/number_field.hpp"

namespace oscoh {

/// One row per hyperplane: coefficients a_1..a_l followed by the constant c,
/// for the affine form a . z + c.
using FormRow = std::vector<NumberFieldElement>;

struct Realization {
  FieldPtr field;
  std::vector<FormRow> forms;
};

/// A hyperplane arrangement H_1..H_n in C^l.
///
/// Every arrangement, realized or not, carries the matroid of its cone: the
/// ground set is {0, 1, ..., n} where element j is the homogenized H_j and
/// element 0 is the hyperplane at infinity. The affine intersection
/// semilattice is the set of cone flats avoiding 0, and a set of hyperplanes
/// has empty intersection exactly when 0 lies in its cone closure. For a
/// central arrangement element 0 is a coloop.
class Arrangement {
 public:
  /// Realized input; throws ZeroFormError, NotEssentialError, or
  /// InvalidArgumentError for malformed or repeated rows.
  static Arrangement from_forms(FieldPtr field, std::vector<FormRow> forms, std::vector<std::string> labels = {});

  /// Abstract matroid input. For central input the circuits use hyperplane
  /// indices 1..n and `rank` is l. For affine input the circuits live on the
  /// cone ground set 0..n (0 = hyperplane at infinity) and `rank` is l, the
  /// cone having rank l + 1. Circuits larger than the rank may be omitted.
  static Arrangement from_circuits(int n, int rank, bool central, const std::vector<std::vector<int>>& circuits,
                                   std::vector<std::string> labels = {});

  /// Wraps a cone matroid (element 0 = infinity) after validation.
  static Arrangement from_cone(Matroid cone, std::vector<std::string> labels = {},
                               std::optional<Realization> realization = std::nullopt);

  int size() const { return n_; }
  int rank() const { return rank_; }
  /// True when the hyperplanes have a common point (infinity is a coloop of the cone).
  bool central() const { return central_; }

  const Matroid& cone() const { return cone_; }
  const std::vector<Mask>& cone_circuits() const { return circuits_; }
  const std::optional<Realization>& realization() const { return realization_; }
  const std::vector<std::string>& labels() const { return labels_; }

  /// Bits 1..n.
  Mask hyperplanes() const { return cone_.ground() & ~Mask{1}; }

  /// Whether the hyperplanes in `s` (bits 1..n) have a common point.
  bool intersects(Mask s) const { return !(cone_.closure(s) & 1); }

 private:
  int n_ = 0;
  int rank_ = 0;
  bool central_ = false;
  Matroid cone_;
  std::vector<Mask> circuits_;
  std::optional<Realization> realization_;
  std::vector<std::string> labels_;
};

/// Quotients the forms by their common center, so the linear parts span the
/// dual of the new ambient space. Used by the CLI `--essentialize` flag.
std::vector<FormRow> essentialize(const FieldPtr& field, const std::vector<FormRow>& forms);

Arrangement build_arrangement(FieldPtr field, std::vector<FormRow> forms, std::vector<std::string> labels = {});

struct ProjectiveClosure {
  Arrangement arrangement;  // central, n + 1 hyperplanes, rank l + 1
  int infinity_index = 0;   // 1-based, always n + 1
};

ProjectiveClosure projective_closure(const Arrangement& arr);

/// Generic section by an affine subspace of dimension r, 1 <= r < l. The
/// result is matroid backed: its cone is the truncation of the original cone
/// to rank r + 1.
Arrangement generic_section(const Arrangement& arr, int r);

/// H_j of the first factor keeps index j; H_j of the second becomes n1 + j.
Arrangement product_arrangement(const Arrangement& first, const Arrangement& second);

/// Subarrangement on the hyperplanes in `keep` (bits 1..n), essentialized
/// and renumbered in increasing order.
Arrangement subarrangement(const Arrangement& arr, Mask keep);

/// Splits the arrangement into irreducible product factors. Returns the
/// hyperplane sets (bits 1..n) of the factors; a single entry when the
/// arrangement is not a nontrivial product.
std::vector<Mask> product_factors(const Arrangement& arr);

}  // namespace oscoh

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "oscoh/orlik_solomon.hpp"
#include "oscoh/rational.hpp"

namespace oscoh {

/// Rational weights lambda = k / N, N the least common denominator, so that
/// gcd(k_1, ..., k_n, N) = 1.
class WeightVector {
 public:
  WeightVector() = default;
  explicit WeightVector(std::vector<Rational> lambda);

  /// Weights k / N; common factors of k and N are cancelled and
  /// `was_normalized()` reports whether that changed anything.
  static WeightVector from_integers(std::vector<Integer> k, const Integer& modulus);

  std::size_t size() const { return lambda_.size(); }
  const std::vector<Rational>& lambda() const { return lambda_; }
  const Integer& denominator() const { return denominator_; }
  const std::vector<Integer>& numerators() const { return numerators_; }
  bool was_normalized() const { return normalized_; }
  bool is_zero() const;
  Rational total() const;

  WeightVector scaled(const Rational& c) const;
  WeightVector translated(std::span<const std::int64_t> m) const;

  bool operator==(const WeightVector& o) const { return lambda_ == o.lambda_; }

 private:
  std::vector<Rational> lambda_;
  Integer denominator_ = 1;
  std::vector<Integer> numerators_;
  bool normalized_ = false;
};

enum class Coefficients { Rationals, ModN };

/// Dimensions (or Z/N ranks) of H^q of the Orlik-Solomon complex, q = 0..l.
struct CohomologyReport {
  Coefficients ring = Coefficients::Rationals;
  std::uint64_t modulus = 0;              // N for ModN
  std::vector<std::int64_t> dims;
  std::vector<std::size_t> boundary_ranks;  // rank of mu^q for q = 0..l
  /// Composite N only: gcd(d_i, N) for the invariant factors of mu^q(k).
  std::vector<std::vector<std::uint64_t>> invariant_factors;
  std::vector<std::string> notes;

  std::string ring_name() const;
  std::string poincare() const;
};

/// Canonical "c0 + c1*t + c2*t^2" rendering; zero terms omitted, "0" if all vanish.
std::string format_poincare(std::span<const std::int64_t> coefficients);

CohomologyReport os_cohomology_dims(const AomotoComplex& complex, const WeightVector& weights);

/// Ranks over Z/N. For prime N this is the field computation; for composite
/// N the boundary ranks count invariant factors coprime to N.
CohomologyReport modN_cohomology_ranks(const AomotoComplex& complex, std::span<const Integer> k, std::uint64_t modulus);

/// Poincare polynomial of the tensor product complex.
CohomologyReport kunneth_product(const CohomologyReport& first, const CohomologyReport& second);

/// Whether dims at lambda and at c * lambda agree (always true for c != 0).
bool scaling_equivalence_check(const AomotoComplex& complex, const WeightVector& weights, const Rational& c);

}  // namespace oscoh

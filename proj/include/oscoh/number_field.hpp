#pragma once

#include <memory>
#include <string>
#include <vector>

#include "oscoh/rational.hpp"

namespace oscoh {

/// The field Q[x]/(p(x)) for a monic integer polynomial p. Irreducibility of
/// p is trusted; a non-invertible element surfaces as InvalidArgumentError
/// from NumberFieldElement::inverse. Q itself is the degree-one case p(x) = x.
class NumberField {
 public:
  /// Coefficients in ascending degree order; the last one must be 1.
  static std::shared_ptr<const NumberField> from_min_poly(std::vector<Integer> ascending);
  static std::shared_ptr<const NumberField> rationals();

  int degree() const { return static_cast<int>(modulus_.size()) - 1; }
  bool is_rationals() const { return degree() == 1 && modulus_[0] == 0; }
  const std::vector<Integer>& modulus() const { return modulus_; }
  std::string describe() const;

  bool operator==(const NumberField& other) const { return modulus_ == other.modulus_; }

 private:
  explicit NumberField(std::vector<Integer> modulus) : modulus_(std::move(modulus)) {}
  std::vector<Integer> modulus_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

bool same_field(const FieldPtr& a, const FieldPtr& b);

/// Element of a NumberField stored as the coefficient vector of its reduced
/// representative (length = degree of the field).
class NumberFieldElement {
 public:
  NumberFieldElement() = default;
  NumberFieldElement(FieldPtr field, Rational constant);
  NumberFieldElement(FieldPtr field, std::vector<Rational> coeffs);

  /// The class of x in Q[x]/(p).
  static NumberFieldElement generator(FieldPtr field);

  const FieldPtr& field() const { return field_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const;

  NumberFieldElement operator+(const NumberFieldElement& o) const;
  NumberFieldElement operator-(const NumberFieldElement& o) const;
  NumberFieldElement operator-() const;
  NumberFieldElement operator*(const NumberFieldElement& o) const;
  NumberFieldElement operator/(const NumberFieldElement& o) const;
  NumberFieldElement inverse() const;

  bool operator==(const NumberFieldElement& o) const;

  std::string to_string() const;

 private:
  void check_compatible(const NumberFieldElement& o) const;

  FieldPtr field_;
  std::vector<Rational> coeffs_;
};

}  // namespace oscoh

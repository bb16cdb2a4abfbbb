#include "oscoh/number_field.hpp"

#include <sstream>

#include "oscoh/errors.hpp"

namespace oscoh {

namespace {

using Poly = std::vector<Rational>;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly to_poly(const std::vector<Integer>& ints) {
  Poly p;
  p.reserve(ints.size());
  for (const auto& c : ints) p.emplace_back(c);
  return p;
}

// Remainder of a modulo b (b nonzero, trimmed).
Poly poly_mod(Poly a, const Poly& b) {
  trim(a);
  while (a.size() >= b.size()) {
    Rational factor = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= factor * b[i];
    trim(a);
  }
  return a;
}

void poly_divmod(Poly a, const Poly& b, Poly& quotient, Poly& remainder) {
  trim(a);
  quotient.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
  while (a.size() >= b.size()) {
    Rational factor = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    quotient[shift] = factor;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= factor * b[i];
    trim(a);
  }
  remainder = std::move(a);
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

Poly poly_sub(const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trim(out);
  return out;
}

}  // namespace

std::shared_ptr<const NumberField> NumberField::from_min_poly(std::vector<Integer> ascending) {
  if (ascending.size() < 2) throw InvalidArgumentError("minimal polynomial must have degree >= 1");
  if (ascending.back() != 1) throw InvalidArgumentError("minimal polynomial must be monic");
  return std::shared_ptr<const NumberField>(new NumberField(std::move(ascending)));
}

std::shared_ptr<const NumberField> NumberField::rationals() {
  static const auto q = std::shared_ptr<const NumberField>(new NumberField({Integer(0), Integer(1)}));
  return q;
}

std::string NumberField::describe() const {
  if (is_rationals()) return "Q";
  std::ostringstream os;
  os << "Q[x]/(";
  bool first = true;
  for (int d = degree(); d >= 0; --d) {
    const Integer& c = modulus_[static_cast<std::size_t>(d)];
    if (c == 0) continue;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    Integer a = abs(c);
    if (a != 1 || d == 0) os << a;
    if (d >= 1 && a != 1) os << "*";
    if (d >= 1) os << "x";
    if (d >= 2) os << "^" << d;
    first = false;
  }
  os << ")";
  return os.str();
}

bool same_field(const FieldPtr& a, const FieldPtr& b) {
  return a == b || (a && b && *a == *b);
}

NumberFieldElement::NumberFieldElement(FieldPtr field, Rational constant)
    : field_(std::move(field)), coeffs_(static_cast<std::size_t>(field_->degree()), Rational(0)) {
  coeffs_[0] = std::move(constant);
  coeffs_[0].canonicalize();
}

NumberFieldElement::NumberFieldElement(FieldPtr field, std::vector<Rational> coeffs) : field_(std::move(field)) {
  for (auto& c : coeffs) c.canonicalize();
  Poly reduced = poly_mod(std::move(coeffs), to_poly(field_->modulus()));
  reduced.resize(static_cast<std::size_t>(field_->degree()), Rational(0));
  coeffs_ = std::move(reduced);
}

NumberFieldElement NumberFieldElement::generator(FieldPtr field) {
  return NumberFieldElement(field, std::vector<Rational>{Rational(0), Rational(1)});
}

bool NumberFieldElement::is_zero() const {
  for (const auto& c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

void NumberFieldElement::check_compatible(const NumberFieldElement& o) const {
  if (!same_field(field_, o.field_)) throw InvalidArgumentError("number field elements from different fields");
}

NumberFieldElement NumberFieldElement::operator+(const NumberFieldElement& o) const {
  check_compatible(o);
  NumberFieldElement r = *this;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] += o.coeffs_[i];
  return r;
}

NumberFieldElement NumberFieldElement::operator-(const NumberFieldElement& o) const {
  check_compatible(o);
  NumberFieldElement r = *this;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] -= o.coeffs_[i];
  return r;
}

NumberFieldElement NumberFieldElement::operator-() const {
  NumberFieldElement r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

NumberFieldElement NumberFieldElement::operator*(const NumberFieldElement& o) const {
  check_compatible(o);
  return NumberFieldElement(field_, poly_mul(coeffs_, o.coeffs_));
}

NumberFieldElement NumberFieldElement::inverse() const {
  // Extended Euclid: find u with u*a + v*p = g, g constant for irreducible p.
  Poly p = to_poly(field_->modulus());
  Poly a = coeffs_;
  trim(a);
  if (a.empty()) throw InvalidArgumentError("division by zero in number field");
  Poly r0 = p, r1 = a;
  Poly s0, s1{Rational(1)};  // coefficients of a
  while (!r1.empty()) {
    Poly q, rem;
    poly_divmod(r0, r1, q, rem);
    Poly s2 = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.size() != 1) {
    throw InvalidArgumentError("element is not invertible; minimal polynomial " + field_->describe() +
                               " is reducible");
  }
  Rational g = r0[0];
  for (auto& c : s0) c /= g;
  return NumberFieldElement(field_, std::move(s0));
}

NumberFieldElement NumberFieldElement::operator/(const NumberFieldElement& o) const { return *this * o.inverse(); }

bool NumberFieldElement::operator==(const NumberFieldElement& o) const {
  return same_field(field_, o.field_) && coeffs_ == o.coeffs_;
}

std::string NumberFieldElement::to_string() const {
  if (field_->is_rationals()) return coeffs_[0].get_str();
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) os << ",";
    os << coeffs_[i].get_str();
  }
  os << "]";
  return os.str();
}

}  // namespace oscoh

#include <doctest.h>

#include <complex>
#include <random>

#include "oscoh/errors.hpp"
#include "oscoh/linalg.hpp"
#include "oscoh/matrix.hpp"
#include "oscoh/number_field.hpp"
#include "oscoh/rational.hpp"

using namespace oscoh;

namespace {

IntMatrix int_matrix(std::size_t rows, std::size_t cols, std::vector<long> values) {
  std::vector<Integer> data(values.begin(), values.end());
  return IntMatrix(rows, cols, std::move(data));
}

RationalMatrix to_rational(const IntMatrix& m) {
  RationalMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = Rational(m(r, c));
  return out;
}

IntMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, long spread) {
  std::uniform_int_distribution<long> dist(-spread, spread);
  IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = dist(rng);
  return m;
}

// Rank-deficient by construction: a product of thin factors.
IntMatrix low_rank_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, std::size_t inner) {
  const IntMatrix a = random_matrix(rng, rows, inner, 4), b = random_matrix(rng, inner, cols, 4);
  IntMatrix m(rows, cols, Integer(0));
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      for (std::size_t k = 0; k < inner; ++k) m(r, c) += a(r, k) * b(k, c);
  return m;
}

std::vector<Integer> ints(std::vector<long> v) { return {v.begin(), v.end()}; }

Rational frac(long a, long b) {
  Rational r(a, b);
  r.canonicalize();
  return r;
}

}  // namespace

TEST_CASE("rational parsing") {
  CHECK(parse_rational("7") == Rational(7));
  CHECK(parse_rational("-2/3") == Rational(-2, 3));
  CHECK(parse_rational("+4/6") == Rational(2, 3));
  CHECK(to_string(parse_rational("-4/6")) == "-2/3");
  CHECK_THROWS_AS(parse_rational("4/-6"), ParseError);
  CHECK_THROWS_AS(parse_rational("0.5"), ParseError);
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational(""), ParseError);
  CHECK_THROWS_AS(parse_rational("1e3"), ParseError);
  const std::vector<Rational> v{Rational(1, 4), Rational(-5, 6), Rational(2)};
  CHECK(common_denominator(v) == 12);
}

TEST_CASE("field rank examples") {
  CHECK(field_rank(RationalMatrix(3, 4, Rational(0))) == 0);
  CHECK(field_rank(identity_matrix<Rational>(5, Rational(0), Rational(1))) == 5);
  CHECK(field_rank(to_rational(int_matrix(2, 3, {1, 2, 3, 2, 4, 6}))) == 1);
  CHECK(field_rank(RationalMatrix()) == 0);
  CHECK(integer_rank(int_matrix(2, 3, {1, 2, 3, 2, 4, 6})) == 1);
}

TEST_CASE("smith normal form examples") {
  CHECK(smith_normal_form(int_matrix(2, 2, {2, 0, 0, 6})) == ints({2, 6}));
  CHECK(smith_normal_form(int_matrix(2, 2, {2, 4, 6, 8})) == ints({2, 4}));
  CHECK(smith_normal_form(IntMatrix(3, 2, Integer(0))).empty());
  CHECK(smith_normal_form(int_matrix(2, 2, {6, 0, 0, 4})) == ints({2, 12}));
}

TEST_CASE("rank mod p examples") {
  CHECK(rank_mod_p(int_matrix(2, 2, {3, 0, 0, 3}), 3) == 0);
  CHECK(rank_mod_p(identity_matrix<Integer>(4, Integer(0), Integer(1)), 5) == 4);
  CHECK(rank_mod_p(int_matrix(2, 2, {1, 2, 2, 4}), 3) == 1);
  CHECK_THROWS_AS(rank_mod_p(int_matrix(1, 1, {1}), 4), NotPrimeError);
  CHECK_THROWS_AS(rank_mod_p(int_matrix(1, 1, {1}), 1), NotPrimeError);
}

TEST_CASE("rank invariants on random matrices") {
  std::mt19937 rng(20261018);
  const std::uint64_t primes[] = {2, 3, 5, 7, 31};
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t rows = 1 + rng() % 7, cols = 1 + rng() % 7;
    const IntMatrix m = trial % 2 ? random_matrix(rng, rows, cols, 6)
                                  : low_rank_matrix(rng, rows, cols, 1 + rng() % 3);
    const auto snf = smith_normal_form(m);
    const std::size_t q_rank = field_rank(to_rational(m));
    CHECK(integer_rank(m) == q_rank);
    CHECK(snf.size() == q_rank);
    for (std::size_t i = 0; i + 1 < snf.size(); ++i) CHECK(snf[i + 1] % snf[i] == 0);
    for (std::uint64_t p : primes) {
      const std::size_t rp = rank_mod_p(m, p);
      CHECK(rp <= q_rank);
      std::size_t units = 0;
      for (const auto& d : snf) units += mpz_divisible_ui_p(d.get_mpz_t(), p) ? 0 : 1;
      CHECK(rp == units);
    }
    // Z/N unit rank is the minimum over prime divisors.
    for (std::uint64_t modulus : {6u, 12u, 15u}) {
      std::size_t expected = q_rank;
      for (auto p : prime_divisors(modulus)) expected = std::min(expected, rank_mod_p(m, p));
      CHECK(unit_rank_mod(reduce_mod(m, modulus), modulus) == expected);
    }
    // Row and column permutations, row scaling.
    RationalMatrix r = to_rational(m), perm(cols, rows);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) perm(cols - 1 - j, (i + 1) % rows) = r(i, j) * frac(static_cast<long>(i) + 2, 3);
    CHECK(field_rank(perm) == q_rank);
  }
}

TEST_CASE("number field arithmetic") {
  const FieldPtr f = NumberField::from_min_poly(ints({1, 1, 1}));
  CHECK(f->degree() == 2);
  CHECK(f->describe() == "Q[x]/(x^2 + x + 1)");
  const NumberFieldElement w = NumberFieldElement::generator(f);
  const NumberFieldElement one(f, Rational(1));
  CHECK((w * w * w) == one);
  CHECK((w * w + w + one).is_zero());
  CHECK((w * w.inverse()) == one);
  CHECK((one / w) == w * w);
  CHECK_THROWS_AS(NumberFieldElement(f, Rational(0)).inverse(), InvalidArgumentError);
  CHECK_THROWS(NumberField::from_min_poly(ints({1, 2})));  // not monic
  const FieldPtr g = NumberField::from_min_poly(ints({-2, 0, 1}));
  CHECK_THROWS(NumberFieldElement::generator(g) + w);
  CHECK(NumberField::rationals()->is_rationals());
}

TEST_CASE("number field evaluation at a complex root is a ring homomorphism") {
  using C = std::complex<long double>;
  // x^3 - x - 1 and x^4 + 1: evaluate at a numerically located root.
  const std::vector<std::vector<long>> polys{{-1, -1, 0, 1}, {1, 0, 0, 0, 1}, {1, 1, 1}};
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> small(-5, 5);
  for (const auto& coeffs : polys) {
    const FieldPtr f = NumberField::from_min_poly(ints(coeffs));
    const int d = f->degree();
    // Durand-Kerner for one root.
    std::vector<C> roots(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) roots[static_cast<std::size_t>(i)] = std::pow(C(0.4L, 0.9L), i);
    auto poly = [&](C z) {
      C s = 0;
      for (int i = d; i >= 0; --i) s = s * z + C(static_cast<long double>(coeffs[static_cast<std::size_t>(i)]));
      return s;
    };
    for (int iter = 0; iter < 500; ++iter) {
      for (std::size_t i = 0; i < roots.size(); ++i) {
        C denom = 1;
        for (std::size_t j = 0; j < roots.size(); ++j)
          if (j != i) denom *= roots[i] - roots[j];
        roots[i] -= poly(roots[i]) / denom;
      }
    }
    const C root = roots[0];
    REQUIRE(std::abs(poly(root)) < 1e-12L);
    auto eval = [&](const NumberFieldElement& a) {
      C s = 0;
      for (std::size_t i = a.coeffs().size(); i-- > 0;) s = s * root + C(a.coeffs()[i].get_d());
      return s;
    };
    auto random_element = [&] {
      std::vector<Rational> c;
      for (int i = 0; i < d; ++i) c.push_back(frac(small(rng), 1 + std::abs(small(rng))));
      return NumberFieldElement(f, c);
    };
    for (int t = 0; t < 20; ++t) {
      const auto a = random_element(), b = random_element(), c = random_element();
      CHECK(((a * b) * c) == (a * (b * c)));
      CHECK((a * (b + c)) == (a * b + a * c));
      CHECK(std::abs(eval(a * b) - eval(a) * eval(b)) < 1e-9L);
      CHECK(std::abs(eval(a + b) - (eval(a) + eval(b))) < 1e-9L);
      if (!b.is_zero()) CHECK(std::abs(eval(a / b) - eval(a) / eval(b)) < 1e-9L * (1 + std::abs(eval(a / b))));
    }
  }
}

TEST_CASE("number field rank") {
  const FieldPtr f = NumberField::from_min_poly(ints({1, 1, 1}));
  const NumberFieldElement w = NumberFieldElement::generator(f), one(f, Rational(1)), zero(f, Rational(0));
  // Rows (1, w) and (w^2, 1) are dependent: w^2 * (1, w) = (w^2, 1).
  NumberFieldMatrix m(2, 2, zero);
  m(0, 0) = one;
  m(0, 1) = w;
  m(1, 0) = w * w;
  m(1, 1) = one;
  CHECK(field_rank(m) == 1);
  m(1, 1) = w;
  CHECK(field_rank(m) == 2);
}

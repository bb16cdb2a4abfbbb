#include "oscoh/cohomology.hpp"

#include <algorithm>
#include <sstream>

#include "oscoh/errors.hpp"
#include "oscoh/linalg.hpp"

namespace oscoh {

WeightVector::WeightVector(std::vector<Rational> lambda) : lambda_(std::move(lambda)) {
  for (auto& v : lambda_) v.canonicalize();
  denominator_ = common_denominator(lambda_);
  numerators_.reserve(lambda_.size());
  for (const auto& v : lambda_) numerators_.push_back(v.get_num() * (denominator_ / v.get_den()));
}

WeightVector WeightVector::from_integers(std::vector<Integer> k, const Integer& modulus) {
  if (modulus <= 0) throw InvalidArgumentError("modulus must be positive");
  std::vector<Rational> lambda;
  lambda.reserve(k.size());
  for (const auto& kj : k) {
    Rational v(kj, modulus);
    v.canonicalize();
    lambda.push_back(v);
  }
  WeightVector w(std::move(lambda));
  w.normalized_ = w.denominator_ != modulus;
  return w;
}

bool WeightVector::is_zero() const {
  return std::all_of(lambda_.begin(), lambda_.end(), [](const Rational& v) { return v == 0; });
}

Rational WeightVector::total() const {
  Rational s = 0;
  for (const auto& v : lambda_) s += v;
  return s;
}

WeightVector WeightVector::scaled(const Rational& c) const {
  std::vector<Rational> out;
  out.reserve(lambda_.size());
  for (const auto& v : lambda_) out.push_back(v * c);
  return WeightVector(std::move(out));
}

WeightVector WeightVector::translated(std::span<const std::int64_t> m) const {
  if (m.size() != lambda_.size()) throw LengthMismatchError("translate length mismatch");
  std::vector<Rational> out = lambda_;
  for (std::size_t j = 0; j < m.size(); ++j) out[j] += Rational(static_cast<long>(m[j]));
  return WeightVector(std::move(out));
}

std::string CohomologyReport::ring_name() const {
  if (ring == Coefficients::Rationals) return "Q";
  return "Z/" + std::to_string(modulus);
}

std::string CohomologyReport::poincare() const { return format_poincare(dims); }

std::string format_poincare(std::span<const std::int64_t> coefficients) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t q = 0; q < coefficients.size(); ++q) {
    std::int64_t c = coefficients[q];
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    std::int64_t a = c < 0 ? -c : c;
    if (q == 0) {
      os << a;
    } else {
      if (a != 1) os << a << "*";
      os << "t";
      if (q > 1) os << "^" << q;
    }
    first = false;
  }
  return first ? "0" : os.str();
}

namespace {

CohomologyReport assemble(const AomotoComplex& complex, std::vector<std::size_t> ranks) {
  CohomologyReport r;
  const auto dims = complex.dimensions();
  for (std::size_t q = 0; q < dims.size(); ++q) {
    std::int64_t d = dims[q] - static_cast<std::int64_t>(ranks[q]);
    if (q > 0) d -= static_cast<std::int64_t>(ranks[q - 1]);
    r.dims.push_back(d);
  }
  r.boundary_ranks = std::move(ranks);
  return r;
}

}  // namespace

CohomologyReport os_cohomology_dims(const AomotoComplex& complex, const WeightVector& weights) {
  if (weights.size() != static_cast<std::size_t>(complex.n)) {
    throw LengthMismatchError("expected " + std::to_string(complex.n) + " weights, got " +
                              std::to_string(weights.size()));
  }
  // mu is linear in lambda, so rank mu(lambda) = rank mu(N * lambda).
  std::vector<std::size_t> ranks;
  for (const auto& m : complex.matrices) {
    ranks.push_back(weights.is_zero() || m.entries.empty() ? 0 : integer_rank(m.evaluate(weights.numerators())));
  }
  auto report = assemble(complex, std::move(ranks));
  report.ring = Coefficients::Rationals;
  return report;
}

CohomologyReport modN_cohomology_ranks(const AomotoComplex& complex, std::span<const Integer> k,
                                       std::uint64_t modulus) {
  if (modulus < 2 || modulus > kMaxModulus) throw InvalidArgumentError("N must lie in [2, 2^31)");
  if (k.size() != static_cast<std::size_t>(complex.n)) {
    throw LengthMismatchError("expected " + std::to_string(complex.n) + " integer weights, got " +
                              std::to_string(k.size()));
  }
  const bool prime = is_prime(modulus);
  std::vector<std::size_t> ranks;
  std::vector<std::vector<std::uint64_t>> factors;
  for (const auto& m : complex.matrices) {
    ModMatrix reduced = m.evaluate_mod(k, modulus);
    if (prime) {
      ranks.push_back(rank_mod_p(std::move(reduced), modulus));
    } else {
      auto f = invariant_factors_mod(std::move(reduced), modulus);
      ranks.push_back(static_cast<std::size_t>(std::count(f.begin(), f.end(), std::uint64_t{1})));
      factors.push_back(std::move(f));
    }
  }
  auto report = assemble(complex, std::move(ranks));
  report.ring = Coefficients::ModN;
  report.modulus = modulus;
  if (!prime) {
    report.invariant_factors = std::move(factors);
    report.notes.push_back("composite N: rank over Z/" + std::to_string(modulus) +
                           " taken as the number of invariant factors of mu^q(k) coprime to N "
                           "(largest unit minor); this is a convention, not a field rank");
  }
  return report;
}

CohomologyReport kunneth_product(const CohomologyReport& first, const CohomologyReport& second) {
  if (first.ring != second.ring || first.modulus != second.modulus) {
    throw RingMismatchError("cannot combine reports over " + first.ring_name() + " and " + second.ring_name());
  }
  CohomologyReport out;
  out.ring = first.ring;
  out.modulus = first.modulus;
  if (first.dims.empty() || second.dims.empty()) return out;
  out.dims.assign(first.dims.size() + second.dims.size() - 1, 0);
  for (std::size_t i = 0; i < first.dims.size(); ++i) {
    for (std::size_t j = 0; j < second.dims.size(); ++j) out.dims[i + j] += first.dims[i] * second.dims[j];
  }
  out.notes.push_back("Kunneth product of two reports");
  return out;
}

bool scaling_equivalence_check(const AomotoComplex& complex, const WeightVector& weights, const Rational& c) {
  if (c == 0) throw InvalidArgumentError("scaling factor must be nonzero");
  return os_cohomology_dims(complex, weights).dims == os_cohomology_dims(complex, weights.scaled(c)).dims;
}

}  // namespace oscoh

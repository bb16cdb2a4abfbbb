#include "oscoh/resonance.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <thread>

#include "oscoh/errors.hpp"
#include "oscoh/linalg.hpp"

namespace oscoh {

namespace {

// Dense edges of the closure that are points of projective space.
std::vector<Flat> projective_dense_edges(const Arrangement& arr) {
  auto closure = projective_closure(arr);
  auto dense = dense_edges(closure.arrangement);
  std::erase_if(dense, [&](const Flat& f) { return f.codim > arr.rank(); });
  return dense;
}

void check_length(const Arrangement& arr, std::size_t got) {
  if (got != static_cast<std::size_t>(arr.size())) {
    throw LengthMismatchError("expected " + std::to_string(arr.size()) + " weights, got " + std::to_string(got));
  }
}

bool avoids(const Arrangement& arr, const WeightVector& weights, bool allow_zero) {
  for (const auto& e : edge_weights(arr, weights)) {
    if (e.value.get_den() != 1) continue;
    if (e.value > 0 || (e.value == 0 && !allow_zero)) return false;
  }
  return true;
}

std::vector<std::int64_t> generic_dims(int rank, std::int64_t euler) {
  std::vector<std::int64_t> d(static_cast<std::size_t>(rank) + 1, 0);
  d.back() = euler < 0 ? -euler : euler;
  return d;
}

std::int64_t to_int64(const Integer& v, const char* what) {
  if (!v.fits_slong_p()) throw InvalidArgumentError(std::string(what) + " too large for translate search");
  return v.get_si();
}

// Everything needed to scan the translates of one product factor.
struct Factor {
  Arrangement arr;
  AomotoComplex complex;
  std::vector<int> positions;  // 0-based coordinates in the full weight vector
  std::vector<std::pair<Mask, bool>> edges;  // factor hyperplanes (bits 1..n_f), contains infinity
  std::vector<std::int64_t> generic;
};

struct Hit {
  std::vector<std::int64_t> dims;
  std::uint64_t index;
};

using HitMap = std::map<std::vector<std::int64_t>, std::uint64_t>;

std::uint64_t box_size(int box, std::size_t n, std::uint64_t limit) {
  const std::uint64_t base = 2 * static_cast<std::uint64_t>(box) + 1;
  std::uint64_t total = 1;
  for (std::size_t j = 0; j < n; ++j) {
    if (total > limit / base) return limit + 1;
    total *= base;
  }
  return total;
}

void decode(std::uint64_t index, int box, std::vector<std::int64_t>& m) {
  const std::uint64_t base = 2 * static_cast<std::uint64_t>(box) + 1;
  for (std::size_t j = m.size(); j-- > 0;) {
    m[j] = static_cast<std::int64_t>(index % base) - box;
    index /= base;
  }
}

void scan(const Factor& f, const std::vector<Rational>& lambda, const std::vector<std::int64_t>& scaled,
          std::int64_t modulus, int box, bool prune, std::uint64_t begin, std::uint64_t end, HitMap& hits,
          std::uint64_t& evaluated) {
  const std::size_t nf = f.positions.size();
  std::vector<std::int64_t> m(nf), shifted(nf);
  const std::vector<std::int64_t> zeros(f.generic.size(), 0);
  for (std::uint64_t idx = begin; idx < end; ++idx) {
    decode(idx, box, m);
    std::int64_t total = 0;
    for (std::size_t j = 0; j < nf; ++j) {
      shifted[j] = scaled[j] + modulus * m[j];
      total += shifted[j];
    }
    const std::vector<std::int64_t>* dims = nullptr;
    std::vector<std::int64_t> computed;
    if (prune && f.arr.central() && total != 0) {
      dims = &zeros;
    } else if (prune && std::all_of(f.edges.begin(), f.edges.end(), [&](const auto& e) {
                 std::int64_t s = e.second ? -total : 0;
                 for (int j : elements(e.first)) s += shifted[static_cast<std::size_t>(j - 1)];
                 return s != 0;
               })) {
      dims = &f.generic;
    } else {
      std::vector<Rational> mu(nf);
      for (std::size_t j = 0; j < nf; ++j) mu[j] = lambda[j] + Rational(static_cast<long>(m[j]));
      computed = os_cohomology_dims(f.complex, WeightVector(std::move(mu))).dims;
      dims = &computed;
      ++evaluated;
    }
    auto it = hits.find(*dims);
    if (it == hits.end()) hits.emplace(*dims, idx);
  }
}

}  // namespace

std::vector<EdgeWeight> edge_weights(const Arrangement& arr, const WeightVector& weights) {
  check_length(arr, weights.size());
  const int inf = arr.size() + 1;
  const Rational lambda_inf = -weights.total();
  std::vector<EdgeWeight> out;
  for (const auto& f : projective_dense_edges(arr)) {
    EdgeWeight e{f, Rational(0), (f.hyperplanes & bit(inf)) != 0};
    for (int j : f.indices()) e.value += j == inf ? lambda_inf : weights.lambda()[static_cast<std::size_t>(j - 1)];
    out.push_back(std::move(e));
  }
  return out;
}

bool in_W(const Arrangement& arr, const WeightVector& weights) { return avoids(arr, weights, false); }

bool in_V(const Arrangement& arr, const WeightVector& weights) { return avoids(arr, weights, true); }

VanishingCertificate yuzvinsky_vanishing(const Arrangement& arr, const AomotoComplex& complex,
                                         const std::vector<Integer>& k, std::uint64_t p) {
  if (p > kMaxModulus || !is_prime(p)) throw NotPrimeError(std::to_string(p) + " is not a supported prime");
  check_length(arr, k.size());
  VanishingCertificate cert;
  cert.prime = p;
  Integer total = 0;
  for (const auto& v : k) total += v;
  const int inf = arr.size() + 1;
  for (const auto& f : projective_dense_edges(arr)) {
    Integer kx = 0;
    for (int j : f.indices()) kx += j == inf ? Integer(-total) : k[static_cast<std::size_t>(j - 1)];
    if (mpz_divisible_ui_p(kx.get_mpz_t(), p)) {
      cert.witnesses.push_back({f, Rational(kx), (f.hyperplanes & bit(inf)) != 0});
    }
  }
  cert.holds = cert.witnesses.empty();
  cert.claimed_dims = generic_dims(arr.rank(), euler_characteristic(complex.dimensions()));
  cert.computed = modN_cohomology_ranks(complex, k, p);
  cert.verified = cert.holds && cert.computed.dims == cert.claimed_dims;
  return cert;
}

VanishingCertificate yuzvinsky_vanishing(const Arrangement& arr, const std::vector<Integer>& k, std::uint64_t p) {
  return yuzvinsky_vanishing(arr, aomoto_complex(arr), k, p);
}

bool resonance_membership(const AomotoComplex& complex, const WeightVector& weights, int q, int m) {
  if (q < 0 || q > complex.rank) throw InvalidArgumentError("degree q out of range");
  if (m < 1) throw InvalidArgumentError("depth m must be at least 1");
  return os_cohomology_dims(complex, weights).dims[static_cast<std::size_t>(q)] >= m;
}

bool BettiBoundsReport::exact() const {
  return std::all_of(degrees.begin(), degrees.end(), [](const DegreeBound& d) { return d.exact; });
}

std::vector<std::int64_t> BettiBoundsReport::lower() const {
  std::vector<std::int64_t> out;
  for (const auto& d : degrees) out.push_back(d.lower);
  return out;
}

std::vector<std::int64_t> BettiBoundsReport::upper() const {
  std::vector<std::int64_t> out;
  for (const auto& d : degrees) out.push_back(d.upper);
  return out;
}

BettiBoundsReport betti_bounds(const Arrangement& arr, const WeightVector& weights, const BoundsOptions& options) {
  check_length(arr, weights.size());
  if (options.box < 0) throw InvalidArgumentError("box radius must be nonnegative");
  BettiBoundsReport report;
  report.box = options.box;
  report.modulus = weights.denominator();
  const AomotoComplex complex = aomoto_complex(arr);
  report.betti = complex.dimensions();
  report.notes.push_back(kInfinityConvention);
  if (weights.was_normalized()) report.notes.push_back("weights normalized so that gcd(k, N) = 1");
  const auto n = static_cast<std::size_t>(arr.size());

  if (report.modulus == 1) {
    // Integer weights give the trivial local system.
    std::vector<std::int64_t> m(n);
    for (std::size_t j = 0; j < n; ++j) m[j] = -to_int64(weights.lambda()[j].get_num(), "weight");
    for (std::size_t q = 0; q < report.betti.size(); ++q) {
      report.degrees.push_back({static_cast<int>(q), report.betti[q], report.betti[q], true, m});
    }
    report.notes.push_back("N = 1: trivial local system, dimensions are the Betti numbers");
    return report;
  }
  if (report.modulus > kMaxModulus) throw InvalidArgumentError("common denominator N exceeds 2^31");
  const std::uint64_t modulus = report.modulus.get_ui();
  const auto upper = modN_cohomology_ranks(complex, weights.numerators(), modulus);
  for (const auto& note : upper.notes) report.notes.push_back(note);

  // Box search, factor by factor: the complex of a product is the tensor
  // product of the factor complexes.
  const auto factor_masks = product_factors(arr);
  report.factors = factor_masks.size();
  std::map<std::vector<std::int64_t>, std::vector<std::int64_t>> combined{{{1}, std::vector<std::int64_t>(n, 0)}};
  for (Mask fm : factor_masks) {
    Factor f{subarrangement(arr, fm), {}, {}, {}, {}};
    f.complex = aomoto_complex(f.arr);
    for (int j : elements(fm)) f.positions.push_back(j - 1);
    const int inf = f.arr.size() + 1;
    for (const auto& e : projective_dense_edges(f.arr)) {
      f.edges.emplace_back(e.hyperplanes & ~bit(inf), (e.hyperplanes & bit(inf)) != 0);
    }
    f.generic = generic_dims(f.arr.rank(), euler_characteristic(f.complex.dimensions()));

    std::vector<Rational> lambda;
    std::vector<std::int64_t> scaled;
    for (int p : f.positions) {
      lambda.push_back(weights.lambda()[static_cast<std::size_t>(p)]);
      scaled.push_back(to_int64(weights.numerators()[static_cast<std::size_t>(p)], "weight numerator"));
    }
    const std::uint64_t total = box_size(options.box, f.positions.size(), options.max_translates);
    if (total > options.max_translates) {
      throw InvalidArgumentError("translate box {-" + std::to_string(options.box) + ".." +
                                 std::to_string(options.box) + "}^" + std::to_string(f.positions.size()) +
                                 " exceeds the limit of " + std::to_string(options.max_translates) + " points");
    }
    report.translates += total;

    const unsigned jobs = std::max(1u, std::min<unsigned>(options.jobs, static_cast<unsigned>(total)));
    std::vector<HitMap> hits(jobs);
    std::vector<std::uint64_t> evaluated(jobs, 0);
    auto work = [&](unsigned w) {
      const std::uint64_t b = total * w / jobs, e = total * (w + 1) / jobs;
      scan(f, lambda, scaled, to_int64(report.modulus, "N"), options.box, options.prune, b, e, hits[w], evaluated[w]);
    };
    if (jobs == 1) {
      work(0);
    } else {
      std::vector<std::thread> threads;
      for (unsigned w = 0; w < jobs; ++w) threads.emplace_back(work, w);
      for (auto& t : threads) t.join();
    }
    HitMap merged;
    for (unsigned w = 0; w < jobs; ++w) {
      report.evaluated += evaluated[w];
      for (const auto& [dims, idx] : hits[w]) {
        auto it = merged.find(dims);
        if (it == merged.end()) merged.emplace(dims, idx);
        else it->second = std::min(it->second, idx);
      }
    }

    std::map<std::vector<std::int64_t>, std::vector<std::int64_t>> next;
    std::vector<std::int64_t> m(f.positions.size());
    for (const auto& [partial, witness] : combined) {
      for (const auto& [dims, idx] : merged) {
        std::vector<std::int64_t> prod(partial.size() + dims.size() - 1, 0);
        for (std::size_t i = 0; i < partial.size(); ++i) {
          for (std::size_t j = 0; j < dims.size(); ++j) prod[i + j] += partial[i] * dims[j];
        }
        if (next.contains(prod)) continue;
        auto w = witness;
        decode(idx, options.box, m);
        for (std::size_t j = 0; j < m.size(); ++j) w[static_cast<std::size_t>(f.positions[j])] = m[j];
        next.emplace(std::move(prod), std::move(w));
      }
    }
    combined = std::move(next);
  }

  for (std::size_t q = 0; q < report.betti.size(); ++q) {
    DegreeBound d;
    d.degree = static_cast<int>(q);
    d.lower = -1;
    for (const auto& [dims, witness] : combined) {
      if (dims[q] > d.lower) {
        d.lower = dims[q];
        d.witness = witness;
      }
    }
    d.upper = upper.dims[q];
    d.exact = d.lower == d.upper;
    report.degrees.push_back(std::move(d));
  }
  report.notes.push_back("lower bounds are the best found over integer translates in {-" +
                         std::to_string(options.box) + ".." + std::to_string(options.box) +
                         "}^n, not the supremum over all of Z^n");
  if (report.factors > 1) {
    report.notes.push_back("translate search split over " + std::to_string(report.factors) +
                           " product factors (Kunneth)");
  }
  return report;
}

}  // namespace oscoh

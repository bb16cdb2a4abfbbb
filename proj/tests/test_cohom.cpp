#include <doctest.h>

#include <numeric>
#include <random>

#include "oscoh/catalog.hpp"
#include "oscoh/cohomology.hpp"
#include "oscoh/errors.hpp"
#include "oscoh/lattice.hpp"
#include "oscoh/linalg.hpp"

using namespace oscoh;

namespace {

Rational frac(long a, long b) {
  Rational r(a, b);
  r.canonicalize();
  return r;
}

std::vector<Rational> thirds(std::vector<long> k) {
  std::vector<Rational> out;
  for (long x : k) out.push_back(frac(x, 3));
  return out;
}

std::vector<Integer> ints(std::vector<long> v) { return {v.begin(), v.end()}; }


const std::vector<long> kCeva{1, 1, 1, 1, 1, 1, -2, -2, -2};
const std::vector<long> kMaclaneSection{1, 0, -1, 1, -1, -1, 1, 0};

// Orlik-Solomon cohomology straight from the definition: the exterior
// algebra on n generators modulo the ideal spanned by e_T * d(e_C) for
// dependent C and e_T * e_S for S with empty intersection.
std::vector<std::int64_t> brute_force_dims(const Arrangement& arr, const std::vector<Rational>& lambda) {
  const int n = arr.size();
  const Mask all = arr.hyperplanes();
  auto monomials = [&](int q) {
    std::vector<Mask> out;
    for (Mask s = 0; s <= all; s += 2)
      if ((s & all) == s && popcount(s) == q) out.push_back(s);
    return out;
  };
  auto index_of = [](const std::vector<Mask>& basis, Mask s) {
    return static_cast<std::size_t>(std::lower_bound(basis.begin(), basis.end(), s) - basis.begin());
  };
  auto sign = [](Mask s, int j) { return popcount(s & (bit(j) - 1)) % 2 ? -1 : 1; };  // e_j moved past lower terms
  // Ideal in degree q as rows over the monomial basis of degree q.
  auto ideal = [&](int q, const std::vector<Mask>& basis) {
    std::vector<std::vector<Rational>> rows;
    for (Mask s = 2; s <= all; s += 2) {
      if ((s & all) != s || popcount(s) > q + 1) continue;
      const bool empty = !arr.intersects(s);
      const bool dependent = arr.cone().rank(s) < popcount(s);
      if (!empty && !dependent) continue;
      if (empty && !dependent && popcount(s) > q) continue;
      for (Mask t : monomials(q - popcount(s) + (empty ? 0 : 1))) {
        if (empty && (t & s)) continue;
        std::vector<Rational> row(basis.size(), Rational(0));
        if (empty) {
          // e_S wedge e_T
          int inv = 0;
          for (int a : elements(s))
            for (int b : elements(t)) inv += a > b;
          row[index_of(basis, s | t)] += inv % 2 ? -1 : 1;
        } else {
          // d(e_S) wedge e_T, d(e_S) = sum_i (-1)^i e_{S - s_i}
          const auto es = elements(s);
          for (std::size_t i = 0; i < es.size(); ++i) {
            const Mask part = s & ~bit(es[i]);
            if (part & t) continue;
            int inv = 0;
            for (int a : elements(part))
              for (int b : elements(t)) inv += a > b;
            row[index_of(basis, part | t)] += ((i + inv) % 2 ? -1 : 1);
          }
        }
        rows.push_back(std::move(row));
      }
    }
    return rows;
  };
  auto rank_of = [](const std::vector<std::vector<Rational>>& rows, std::size_t cols) {
    RationalMatrix m(rows.size(), cols, Rational(0));
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    return static_cast<std::int64_t>(field_rank(m));
  };
  const int ell = arr.rank();
  std::vector<std::int64_t> b(static_cast<std::size_t>(ell) + 2, 0), r(static_cast<std::size_t>(ell) + 2, 0);
  for (int q = 0; q <= ell + 1; ++q) {
    const auto basis = monomials(q);
    const auto iq = ideal(q, basis);
    const std::int64_t ideal_rank = rank_of(iq, basis.size());
    b[static_cast<std::size_t>(q)] = static_cast<std::int64_t>(basis.size()) - ideal_rank;
    if (q == 0) continue;
    // rank of a wedge: A^{q-1} -> A^q
    auto rows = iq;
    for (Mask s : monomials(q - 1)) {
      std::vector<Rational> row(basis.size(), Rational(0));
      for (int j = 1; j <= n; ++j) {
        if (s & bit(j)) continue;
        row[index_of(basis, s | bit(j))] += lambda[static_cast<std::size_t>(j - 1)] * sign(s, j);
      }
      rows.push_back(std::move(row));
    }
    r[static_cast<std::size_t>(q - 1)] = rank_of(rows, basis.size()) - ideal_rank;
  }
  std::vector<std::int64_t> dims;
  for (int q = 0; q <= ell; ++q) {
    dims.push_back(b[static_cast<std::size_t>(q)] - r[static_cast<std::size_t>(q)] -
                   (q ? r[static_cast<std::size_t>(q - 1)] : 0));
  }
  return dims;
}

Arrangement affine_example() {
  const auto q = NumberField::rationals();
  auto row = [&](long a, long b, long c) {
    return FormRow{NumberFieldElement(q, Rational(a)), NumberFieldElement(q, Rational(b)), NumberFieldElement(q, Rational(c))};
  };
  // x = 0, x = 1, y = 0, x + y = 1, x - y = 0
  return Arrangement::from_forms(q, {row(1, 0, 0), row(1, 0, -1), row(0, 1, 0), row(1, 1, -1), row(1, -1, 0)});
}

}  // namespace

TEST_CASE("sections and ceva3 over Q") {
  CHECK(os_cohomology_dims(aomoto_complex(ceva3()), WeightVector(thirds(kCeva))).dims[1] == 1);
  CHECK(os_cohomology_dims(aomoto_complex(ceva3_section()), WeightVector(thirds(kCeva))).poincare() == "t + 17*t^2");
  CHECK(os_cohomology_dims(aomoto_complex(maclane_section()), WeightVector(thirds(kMaclaneSection))).poincare() ==
        "13*t^2");
}

TEST_CASE("sections and maclane mod 3") {
  CHECK(modN_cohomology_ranks(aomoto_complex(ceva3_section()), ints(kCeva), 3).poincare() == "2*t + 18*t^2");
  CHECK(modN_cohomology_ranks(aomoto_complex(maclane_section()), ints(kMaclaneSection), 3).poincare() ==
        "t + 14*t^2");
  const auto cx = aomoto_complex(maclane());
  for (int u = 0; u < 3; ++u) {
    for (int v = 0; v < 3; ++v) {
      if (u == 0 && v == 0) continue;
      const auto k = maclane_weight(u, v);
      CHECK(modN_cohomology_ranks(cx, ints(k), 3).dims[1] == 1);
    }
  }
}

TEST_CASE("zero weights give the betti numbers") {
  for (const auto& arr : {ceva3_section(), maclane(), boolean_arrangement(3)}) {
    const auto cx = aomoto_complex(arr);
    const std::size_t n = static_cast<std::size_t>(arr.size());
    CHECK(os_cohomology_dims(cx, WeightVector(std::vector<Rational>(n, Rational(0)))).dims == betti_numbers(arr));
    CHECK(modN_cohomology_ranks(cx, std::vector<Integer>(n, Integer(6)), 3).dims == betti_numbers(arr));
  }
}

TEST_CASE("kunneth products") {
  const auto a = os_cohomology_dims(aomoto_complex(ceva3_section()), WeightVector(thirds(kCeva)));
  const auto b = os_cohomology_dims(aomoto_complex(maclane_section()), WeightVector(thirds(kMaclaneSection)));
  CHECK(kunneth_product(a, b).poincare() == "13*t^3 + 221*t^4");
  const auto am = modN_cohomology_ranks(aomoto_complex(ceva3_section()), ints(kCeva), 3);
  const auto bm = modN_cohomology_ranks(aomoto_complex(maclane_section()), ints(kMaclaneSection), 3);
  CHECK(kunneth_product(am, bm).poincare() == "2*t^2 + 46*t^3 + 252*t^4");
  CohomologyReport unit;
  unit.dims = {1};
  CHECK(kunneth_product(a, unit).dims == a.dims);
  CHECK_THROWS_AS(kunneth_product(a, bm), RingMismatchError);
  const auto z5 = modN_cohomology_ranks(aomoto_complex(maclane_section()), ints(kMaclaneSection), 5);
  CHECK_THROWS_AS(kunneth_product(am, z5), RingMismatchError);
}

TEST_CASE("poincare formatting") {
  const std::vector<std::int64_t> a{1, 8, 0}, b{0, 0, 0}, c{0, 1, 17}, d{3};
  CHECK(format_poincare(a) == "1 + 8*t");
  CHECK(format_poincare(b) == "0");
  CHECK(format_poincare(c) == "t + 17*t^2");
  CHECK(format_poincare(d) == "3");
}

TEST_CASE("weight vectors") {
  const WeightVector w(thirds(kCeva));
  CHECK(w.denominator() == 3);
  CHECK(w.numerators() == ints(kCeva));
  CHECK_FALSE(w.was_normalized());
  const auto n = WeightVector::from_integers(ints({2, 4, 6}), 4);
  CHECK(n.was_normalized());
  CHECK(n.denominator() == 2);
  CHECK(n.numerators() == ints({1, 2, 3}));
  CHECK(w.total() == 0);
  CHECK(WeightVector(std::vector<Rational>(3, Rational(0))).is_zero());
  CHECK_THROWS_AS(os_cohomology_dims(aomoto_complex(ceva3()), WeightVector(thirds({1, 2}))), LengthMismatchError);
}

TEST_CASE("composite modulus uses the unit-rank convention") {
  const auto cx = aomoto_complex(maclane_section());
  const auto r6 = modN_cohomology_ranks(cx, ints({2, 0, -2, 2, -2, -2, 2, 0}), 6);
  CHECK_FALSE(r6.notes.empty());
  // 2*k'' mod 6: units count = min over 2 and 3.
  const auto r2 = modN_cohomology_ranks(cx, ints({2, 0, -2, 2, -2, -2, 2, 0}), 2);
  const auto r3 = modN_cohomology_ranks(cx, ints({2, 0, -2, 2, -2, -2, 2, 0}), 3);
  for (std::size_t q = 0; q < r6.dims.size(); ++q) CHECK(r6.dims[q] >= std::max(r2.dims[q], r3.dims[q]));
  for (std::size_t q = 0; q < r6.boundary_ranks.size(); ++q)
    CHECK(r6.boundary_ranks[q] == std::min(r2.boundary_ranks[q], r3.boundary_ranks[q]));
}

TEST_CASE("dims agree with the exterior-algebra definition") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<long> num(-3, 3);
  const std::vector<Arrangement> arrs{three_lines(), boolean_arrangement(3), example_lstrict(), affine_example()};
  for (const auto& arr : arrs) {
    const auto cx = aomoto_complex(arr);
    const std::size_t n = static_cast<std::size_t>(arr.size());
    CHECK(brute_force_dims(arr, std::vector<Rational>(n, Rational(0))) == betti_numbers(arr));
    for (int t = 0; t < 12; ++t) {
      std::vector<Rational> lambda;
      for (std::size_t j = 0; j < n; ++j) lambda.push_back(frac(num(rng), 2));
      // Force resonance on some samples: zero total, or support on a small flat.
      if (t % 3 == 0) lambda.back() -= std::accumulate(lambda.begin(), lambda.end(), Rational(0));
      if (t % 4 == 1) for (std::size_t j = 3; j < n; ++j) lambda[j] = 0;
      const auto got = os_cohomology_dims(cx, WeightVector(lambda)).dims;
      const auto expected = brute_force_dims(arr, lambda);
      CHECK_MESSAGE(got == expected, format_poincare(got), " vs ", format_poincare(expected), " n=", n, " t=", t);
    }
  }
}

TEST_CASE("cohomology properties on the catalog") {
  std::mt19937 rng(4242);
  std::uniform_int_distribution<long> num(-4, 4);
  for (const auto& entry : catalog()) {
    if (entry.name == "product-example") continue;  // covered by the acceptance suite
    const auto arr = entry.build();
    const auto cx = aomoto_complex(arr);
    const auto e = euler_characteristic(arr);
    const std::size_t n = static_cast<std::size_t>(arr.size());
    for (int t = 0; t < 8; ++t) {
      std::vector<Rational> lambda;
      for (std::size_t j = 0; j < n; ++j) lambda.push_back(frac(num(rng), 5));
      if (t % 2 == 0) lambda.back() -= std::accumulate(lambda.begin(), lambda.end(), Rational(0));
      const WeightVector w(lambda);
      const auto dims = os_cohomology_dims(cx, w).dims;
      std::int64_t alt = 0;
      for (std::size_t q = 0; q < dims.size(); ++q) alt += q % 2 ? -dims[q] : dims[q];
      CHECK(alt == e);
      if (!w.denominator().fits_ulong_p() || w.denominator() < 2) continue;
      const auto mod = modN_cohomology_ranks(cx, w.numerators(), w.denominator().get_ui());
      for (std::size_t q = 0; q < dims.size(); ++q) CHECK(dims[q] <= mod.dims[q]);
      CHECK(scaling_equivalence_check(cx, w, Rational(-2)));
      CHECK(scaling_equivalence_check(cx, w, Rational(3, 7)));
      if (arr.central() && w.total() != 0) for (auto d : dims) CHECK(d == 0);
      // Permuting hyperplanes together with the weights.
      std::vector<int> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      std::vector<int> cone_perm{0};
      for (int p : perm) cone_perm.push_back(p + 1);
      std::vector<int> inverse(n + 1);
      for (std::size_t i = 0; i <= n; ++i) inverse[static_cast<std::size_t>(cone_perm[i])] = static_cast<int>(i);
      const auto shuffled = Arrangement::from_cone(arr.cone().relabel(inverse));
      std::vector<Rational> moved(n);
      for (std::size_t j = 0; j < n; ++j) moved[static_cast<std::size_t>(inverse[j + 1] - 1)] = lambda[j];
      CHECK(os_cohomology_dims(aomoto_complex(shuffled), WeightVector(moved)).dims == dims);
    }
  }
}

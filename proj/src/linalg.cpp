#include "oscoh/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

#include "oscoh/errors.hpp"

namespace oscoh {

namespace {

using Row = std::vector<Integer>;

void make_primitive(Row& row, std::size_t from) {
  Integer g = 0;
  for (std::size_t j = from; j < row.size(); ++j) {
    if (row[j] != 0) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), row[j].get_mpz_t());
      if (g == 1) return;
    }
  }
  if (g > 1) {
    for (std::size_t j = from; j < row.size(); ++j) {
      if (row[j] != 0) mpz_divexact(row[j].get_mpz_t(), row[j].get_mpz_t(), g.get_mpz_t());
    }
  }
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  std::uint64_t result = 1 % mod;
  base %= mod;
  while (exp) {
    if (exp & 1) result = result * base % mod;
    base = base * base % mod;
    exp >>= 1;
  }
  return result;
}

void require_prime(std::uint64_t p) {
  if (p > kMaxModulus || !is_prime(p)) throw NotPrimeError(std::to_string(p) + " is not a supported prime");
}

std::int64_t ext_gcd(std::int64_t a, std::int64_t b, std::int64_t& s, std::int64_t& t) {
  std::int64_t old_r = a, r = b, old_s = 1, cur_s = 0, old_t = 0, cur_t = 1;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
    std::tie(old_s, cur_s) = std::make_pair(cur_s, old_s - q * cur_s);
    std::tie(old_t, cur_t) = std::make_pair(cur_t, old_t - q * cur_t);
  }
  s = old_s;
  t = old_t;
  return old_r;
}

std::uint64_t mod_norm(std::int64_t v, std::uint64_t n) {
  std::int64_t r = v % static_cast<std::int64_t>(n);
  return static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(n) : r);
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::size_t integer_rank(const IntMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<Row> a(rows, Row(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = m(i, j);
  }
  std::size_t rank = 0;
  Integer g, x, y;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    // Smallest nonzero pivot keeps cross-multiplied rows short.
    std::size_t best = rows;
    for (std::size_t i = rank; i < rows; ++i) {
      if (a[i][c] == 0) continue;
      if (best == rows || mpz_cmpabs(a[i][c].get_mpz_t(), a[best][c].get_mpz_t()) < 0) best = i;
    }
    if (best == rows) continue;
    std::swap(a[rank], a[best]);
    const Row& pivot = a[rank];
    for (std::size_t i = rank + 1; i < rows; ++i) {
      Row& row = a[i];
      if (row[c] == 0) continue;
      mpz_gcd(g.get_mpz_t(), pivot[c].get_mpz_t(), row[c].get_mpz_t());
      mpz_divexact(x.get_mpz_t(), pivot[c].get_mpz_t(), g.get_mpz_t());
      mpz_divexact(y.get_mpz_t(), row[c].get_mpz_t(), g.get_mpz_t());
      row[c] = 0;
      for (std::size_t j = c + 1; j < cols; ++j) {
        bool row_zero = row[j] == 0, piv_zero = pivot[j] == 0;
        if (piv_zero) {
          if (!row_zero && x != 1) row[j] *= x;
        } else if (row_zero) {
          mpz_mul(row[j].get_mpz_t(), y.get_mpz_t(), pivot[j].get_mpz_t());
          mpz_neg(row[j].get_mpz_t(), row[j].get_mpz_t());
        } else {
          if (x != 1) row[j] *= x;
          mpz_submul(row[j].get_mpz_t(), y.get_mpz_t(), pivot[j].get_mpz_t());
        }
      }
      make_primitive(row, c + 1);
    }
    ++rank;
  }
  return rank;
}

std::size_t field_rank(const RationalMatrix& m) {
  IntMatrix scaled(m.rows(), m.cols(), Integer(0));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer den = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), m(i, j).get_den_mpz_t());
    }
    for (std::size_t j = 0; j < m.cols(); ++j) {
      scaled(i, j) = m(i, j).get_num() * (den / m(i, j).get_den());
    }
  }
  return integer_rank(scaled);
}

std::size_t field_rank(const NumberFieldMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::vector<NumberFieldElement>> a(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    a[i].reserve(cols);
    for (std::size_t j = 0; j < cols; ++j) a[i].push_back(m(i, j));
  }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot_row = rows;
    for (std::size_t i = rank; i < rows; ++i) {
      if (!a[i][c].is_zero()) {
        pivot_row = i;
        break;
      }
    }
    if (pivot_row == rows) continue;
    std::swap(a[rank], a[pivot_row]);
    NumberFieldElement inv = a[rank][c].inverse();
    for (std::size_t i = rank + 1; i < rows; ++i) {
      if (a[i][c].is_zero()) continue;
      NumberFieldElement factor = a[i][c] * inv;
      for (std::size_t j = c; j < cols; ++j) {
        if (!a[rank][j].is_zero()) a[i][j] = a[i][j] - factor * a[rank][j];
      }
    }
    ++rank;
  }
  return rank;
}

ModMatrix reduce_mod(const IntMatrix& m, std::uint64_t modulus) {
  ModMatrix out(m.rows(), m.cols(), 0);
  Integer r;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      mpz_fdiv_r_ui(r.get_mpz_t(), m(i, j).get_mpz_t(), modulus);
      out(i, j) = r.get_ui();
    }
  }
  return out;
}

std::size_t rank_mod_p(const IntMatrix& m, std::uint64_t p) {
  require_prime(p);
  return rank_mod_p(reduce_mod(m, p), p);
}

std::size_t rank_mod_p(ModMatrix a, std::uint64_t p) {
  require_prime(p);
  const std::size_t rows = a.rows(), cols = a.cols();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot_row = rows;
    for (std::size_t i = rank; i < rows; ++i) {
      if (a(i, c) % p != 0) {
        pivot_row = i;
        break;
      }
    }
    if (pivot_row == rows) continue;
    if (pivot_row != rank) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(rank, j), a(pivot_row, j));
    }
    std::uint64_t inv = pow_mod(a(rank, c) % p, p - 2, p);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      std::uint64_t v = a(i, c) % p;
      if (v == 0) continue;
      std::uint64_t factor = v * inv % p;
      for (std::size_t j = c; j < cols; ++j) {
        std::uint64_t pv = a(rank, j) % p;
        if (pv == 0) continue;
        a(i, j) = (a(i, j) % p + p - factor * pv % p) % p;
      }
    }
    ++rank;
  }
  return rank;
}

std::vector<Integer> smith_normal_form(const IntMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  IntMatrix a = m;
  std::vector<Integer> diag;
  auto swap_rows = [&](std::size_t r1, std::size_t r2) {
    if (r1 == r2) return;
    for (std::size_t j = 0; j < cols; ++j) std::swap(a(r1, j), a(r2, j));
  };
  auto swap_cols = [&](std::size_t c1, std::size_t c2) {
    if (c1 == c2) return;
    for (std::size_t i = 0; i < rows; ++i) std::swap(a(i, c1), a(i, c2));
  };
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    bool found = false;
    while (true) {
      // Move the smallest nonzero entry of the trailing block to (t, t).
      std::size_t bi = rows, bj = cols;
      for (std::size_t i = t; i < rows; ++i) {
        for (std::size_t j = t; j < cols; ++j) {
          if (a(i, j) != 0 && (bi == rows || mpz_cmpabs(a(i, j).get_mpz_t(), a(bi, bj).get_mpz_t()) < 0)) {
            bi = i;
            bj = j;
          }
        }
      }
      if (bi == rows) break;
      found = true;
      swap_rows(t, bi);
      swap_cols(t, bj);
      bool dirty = false;
      Integer q;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a(i, t) == 0) continue;
        mpz_fdiv_q(q.get_mpz_t(), a(i, t).get_mpz_t(), a(t, t).get_mpz_t());
        for (std::size_t j = t; j < cols; ++j) a(i, j) -= q * a(t, j);
        if (a(i, t) != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a(t, j) == 0) continue;
        mpz_fdiv_q(q.get_mpz_t(), a(t, j).get_mpz_t(), a(t, t).get_mpz_t());
        for (std::size_t i = t; i < rows; ++i) a(i, j) -= q * a(i, t);
        if (a(t, j) != 0) dirty = true;
      }
      if (dirty) continue;
      // Pivot must divide the whole trailing block.
      std::size_t bad_row = rows;
      for (std::size_t i = t + 1; i < rows && bad_row == rows; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (!mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
            bad_row = i;
            break;
          }
        }
      }
      if (bad_row == rows) break;
      for (std::size_t j = t; j < cols; ++j) a(t, j) += a(bad_row, j);
    }
    if (!found) break;
    diag.push_back(abs(a(t, t)));
  }
  return diag;
}

std::vector<std::uint64_t> invariant_factors_mod(ModMatrix a, std::uint64_t n) {
  if (n < 2 || n > kMaxModulus) throw InvalidArgumentError("modulus must lie in [2, 2^31)");
  const std::size_t rows = a.rows(), cols = a.cols();
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) a(i, j) %= n;
  }
  const auto sn = static_cast<std::int64_t>(n);
  auto g_n = [n](std::uint64_t v) { return std::gcd(v, n); };  // gcd(0, n) = n
  // Replace rows (r1, r2) by (s*r1 + t*r2, -(b/g)*r1 + (a/g)*r2): determinant 1.
  auto combine_rows = [&](std::size_t r1, std::size_t r2, std::size_t col) {
    std::int64_t x = static_cast<std::int64_t>(a(r1, col)), y = static_cast<std::int64_t>(a(r2, col));
    if (x != 0 && y % x == 0) {
      std::uint64_t f = static_cast<std::uint64_t>(y / x);
      for (std::size_t j = 0; j < cols; ++j) a(r2, j) = (a(r2, j) + n - f * a(r1, j) % n) % n;
      return;
    }
    std::int64_t s, t;
    std::int64_t g = ext_gcd(x, y, s, t);
    std::int64_t u = -y / g, v = x / g;
    for (std::size_t j = 0; j < cols; ++j) {
      std::int64_t e1 = static_cast<std::int64_t>(a(r1, j)), e2 = static_cast<std::int64_t>(a(r2, j));
      a(r1, j) = mod_norm((s % sn) * e1 % sn + (t % sn) * e2 % sn, n);
      a(r2, j) = mod_norm((u % sn) * e1 % sn + (v % sn) * e2 % sn, n);
    }
  };
  auto combine_cols = [&](std::size_t c1, std::size_t c2, std::size_t row) {
    std::int64_t x = static_cast<std::int64_t>(a(row, c1)), y = static_cast<std::int64_t>(a(row, c2));
    if (x != 0 && y % x == 0) {
      std::uint64_t f = static_cast<std::uint64_t>(y / x);
      for (std::size_t i = 0; i < rows; ++i) a(i, c2) = (a(i, c2) + n - f * a(i, c1) % n) % n;
      return;
    }
    std::int64_t s, t;
    std::int64_t g = ext_gcd(x, y, s, t);
    std::int64_t u = -y / g, v = x / g;
    for (std::size_t i = 0; i < rows; ++i) {
      std::int64_t e1 = static_cast<std::int64_t>(a(i, c1)), e2 = static_cast<std::int64_t>(a(i, c2));
      a(i, c1) = mod_norm((s % sn) * e1 % sn + (t % sn) * e2 % sn, n);
      a(i, c2) = mod_norm((u % sn) * e1 % sn + (v % sn) * e2 % sn, n);
    }
  };
  std::vector<std::uint64_t> out;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    std::size_t bi = rows, bj = cols;
    for (std::size_t i = t; i < rows; ++i) {
      for (std::size_t j = t; j < cols; ++j) {
        if (a(i, j) != 0 && (bi == rows || g_n(a(i, j)) < g_n(a(bi, bj)))) {
          bi = i;
          bj = j;
        }
      }
    }
    if (bi == rows) break;
    if (bi != t) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(t, j), a(bi, j));
    }
    if (bj != t) {
      for (std::size_t i = 0; i < rows; ++i) std::swap(a(i, t), a(i, bj));
    }
    while (true) {
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a(i, t) != 0) combine_rows(t, i, t);
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a(t, j) != 0) combine_cols(t, j, t);
      }
      bool clean = true;
      for (std::size_t i = t + 1; i < rows && clean; ++i) clean = a(i, t) == 0;
      if (!clean) continue;
      std::uint64_t d = g_n(a(t, t));
      std::size_t bad_row = rows;
      for (std::size_t i = t + 1; i < rows && bad_row == rows; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (a(i, j) % d != 0) {
            bad_row = i;
            break;
          }
        }
      }
      if (bad_row == rows) break;
      for (std::size_t j = 0; j < cols; ++j) a(t, j) = (a(t, j) + a(bad_row, j)) % n;
    }
    std::uint64_t d = g_n(a(t, t));
    if (d == n) break;
    out.push_back(d);
  }
  return out;
}

std::size_t unit_rank_mod(const ModMatrix& m, std::uint64_t modulus) {
  auto factors = invariant_factors_mod(m, modulus);
  return static_cast<std::size_t>(std::count(factors.begin(), factors.end(), std::uint64_t{1}));
}

}  // namespace oscoh

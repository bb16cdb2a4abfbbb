#pragma once

#include <cstdint>
#include <vector>

#include "oscoh/matrix.hpp"

namespace oscoh {

/// Moduli for residue arithmetic are limited so that products fit in 64 bits.
inline constexpr std::uint64_t kMaxModulus = (std::uint64_t{1} << 31) - 1;

bool is_prime(std::uint64_t n);

/// Rank over Q of an integer matrix, by fraction-free elimination with
/// primitive-row normalization.
std::size_t integer_rank(const IntMatrix& m);

/// Rank over Q; rows are scaled to integers and passed to integer_rank.
std::size_t field_rank(const RationalMatrix& m);

/// Rank over a number field by Gaussian elimination with exact inverses.
std::size_t field_rank(const NumberFieldMatrix& m);

/// Rank over Z/p. Throws NotPrimeError when p is not a prime below kMaxModulus.
std::size_t rank_mod_p(const IntMatrix& m, std::uint64_t p);
std::size_t rank_mod_p(ModMatrix m, std::uint64_t p);

/// Nonzero invariant factors d_1 | d_2 | ... | d_r (all positive).
std::vector<Integer> smith_normal_form(const IntMatrix& m);

/// Diagonal of a Smith form computed over Z/N, reported as gcd(d_i, N) for
/// the entries that are nonzero mod N. Equals gcd(d_i, N) over the integer
/// invariant factors d_i with N not dividing d_i.
std::vector<std::uint64_t> invariant_factors_mod(ModMatrix m, std::uint64_t modulus);

/// Number of invariant factors coprime to N: the size of the largest minor
/// that is a unit in Z/N.
std::size_t unit_rank_mod(const ModMatrix& m, std::uint64_t modulus);

/// Distinct prime divisors in increasing order.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

ModMatrix reduce_mod(const IntMatrix& m, std::uint64_t modulus);

}  // namespace oscoh

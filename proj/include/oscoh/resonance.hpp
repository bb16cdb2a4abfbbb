#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "oscoh/cohomology.hpp"
#include "oscoh/lattice.hpp"

namespace oscoh {

/// Weight of a dense edge of the projective closure. Hyperplane index n + 1
/// in `flat` is the hyperplane at infinity, which carries -sum(lambda_j).
struct EdgeWeight {
  Flat flat;
  Rational value;
  bool at_infinity = false;
};

inline constexpr const char* kInfinityConvention =
    "hyperplane at infinity weighted by lambda_inf = -sum(lambda_j), so the closure has total weight 0";

/// Dense edges of the projective closure (points of projective space only,
/// so the closure's codim l+1 flat is excluded) with their weights.
std::vector<EdgeWeight> edge_weights(const Arrangement& arr, const WeightVector& weights);

/// lambda_X is not a nonnegative integer on any dense edge.
bool in_W(const Arrangement& arr, const WeightVector& weights);
/// lambda_X is not a positive integer on any dense edge.
bool in_V(const Arrangement& arr, const WeightVector& weights);

struct VanishingCertificate {
  bool holds = false;                  // every k_X is a unit mod p
  std::vector<EdgeWeight> witnesses;   // edges with k_X = 0 mod p (value holds k_X)
  std::vector<std::int64_t> claimed_dims;  // (0, ..., 0, |e(M)|)
  CohomologyReport computed;           // mod-p ranks, always computed
  bool verified = false;               // computed dims equal the claim
  std::uint64_t prime = 0;
};

/// Yuzvinsky's criterion over Z/p for the integer weights k.
VanishingCertificate yuzvinsky_vanishing(const Arrangement& arr, const AomotoComplex& complex,
                                         const std::vector<Integer>& k, std::uint64_t p);
VanishingCertificate yuzvinsky_vanishing(const Arrangement& arr, const std::vector<Integer>& k, std::uint64_t p);

/// lambda lies in R^q_m: rank mu^{q-1}(lambda) + rank mu^q(lambda) <= b_q - m.
bool resonance_membership(const AomotoComplex& complex, const WeightVector& weights, int q, int m);

struct BoundsOptions {
  int box = 1;
  unsigned jobs = 1;
  /// Per product factor; larger boxes are rejected rather than truncated.
  std::uint64_t max_translates = 50'000'000;
  /// Skip translates whose cohomology is forced (central with nonzero total
  /// weight, or nonzero weight on every dense edge). Tests turn it off to
  /// check the shortcut.
  bool prune = true;
};

struct DegreeBound {
  int degree = 0;
  std::int64_t lower = 0;
  std::int64_t upper = 0;
  bool exact = false;
  std::vector<std::int64_t> witness;  // integer translate m attaining `lower`
};

struct BettiBoundsReport {
  std::vector<DegreeBound> degrees;
  int box = 0;
  Integer modulus = 1;  // N
  std::vector<std::int64_t> betti;
  std::size_t factors = 1;
  std::uint64_t translates = 0;  // points of the box, summed over factors
  std::uint64_t evaluated = 0;   // translates needing an actual rank computation
  std::vector<std::string> notes;

  bool exact() const;
  std::vector<std::int64_t> lower() const;
  std::vector<std::int64_t> upper() const;
};

/// Sandwich bounds for dim H^q(M; L) at rational weights: the best
/// Orlik-Solomon dimension over integer translates in {-B..B}^n below, the
/// Z/N rank at k = N*lambda above.
BettiBoundsReport betti_bounds(const Arrangement& arr, const WeightVector& weights, const BoundsOptions& options = {});

}  // namespace oscoh

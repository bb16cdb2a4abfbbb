#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "oscoh/arrangement.hpp"

namespace oscoh {

/// An edge of the arrangement, identified with the closed set of hyperplanes
/// containing it (bits 1..n).
struct Flat {
  Mask hyperplanes = 0;
  int codim = 0;
  std::int64_t moebius = 0;

  /// 1-based hyperplane indices in increasing order.
  std::vector<int> indices() const;
  bool operator==(const Flat&) const = default;
};

class IntersectionLattice {
 public:
  explicit IntersectionLattice(std::vector<Flat> flats, int rank);

  /// Ordered by codimension, then lexicographically by hyperplane set.
  const std::vector<Flat>& flats() const { return flats_; }
  std::span<const Flat> of_codim(int q) const;
  int rank() const { return rank_; }

  /// Whitney numbers b_q = sum over codim-q flats of |mu|.
  std::vector<std::int64_t> betti() const;

  bool operator==(const IntersectionLattice&) const = default;

 private:
  std::vector<Flat> flats_;
  std::vector<std::size_t> offsets_;  // offsets_[q] = first flat of codim q
  int rank_ = 0;
};

IntersectionLattice intersection_lattice(const Arrangement& arr);

std::vector<std::int64_t> betti_numbers(const Arrangement& arr);
std::vector<std::int64_t> betti_numbers(const IntersectionLattice& lattice);

/// Alternating sum of the Betti numbers.
std::int64_t euler_characteristic(const Arrangement& arr);
std::int64_t euler_characteristic(std::span<const std::int64_t> betti);

/// Flats of codim >= 1 whose localization is irreducible (connected
/// restricted matroid). Requires a central arrangement.
std::vector<Flat> dense_edges(const Arrangement& central_arr);

}  // namespace oscoh

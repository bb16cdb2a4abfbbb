#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace oscoh {

/// Subset of a ground set of at most kMaxGroundSet elements.
using Mask = std::uint32_t;

inline constexpr int kMaxGroundSet = 22;

inline Mask bit(int e) { return Mask{1} << e; }
inline int popcount(Mask m) { return __builtin_popcount(m); }
inline bool contains(Mask set, Mask sub) { return (set & sub) == sub; }

/// Sorted element list of a mask.
std::vector<int> elements(Mask m);
Mask mask_of(const std::vector<int>& elems);

/// Lexicographic order on sorted element lists.
bool lex_less(Mask a, Mask b);

/// A matroid stored as its full rank table. Immutable once built.
class Matroid {
 public:
  Matroid() = default;

  /// `independent` is only consulted on sets whose proper subsets are all
  /// independent, in order of increasing size.
  static Matroid from_independence(int size, const std::function<bool(Mask)>& independent);

  /// The matroid of rank min(rank, ...) whose dependent sets are those that
  /// contain one of `circuits` or have more than `rank` elements.
  static Matroid from_circuits(int size, int rank, const std::vector<Mask>& circuits);

  static Matroid from_rank_function(int size, const std::function<int(Mask)>& rank);

  int size() const { return size_; }
  Mask ground() const { return size_ == 0 ? 0 : static_cast<Mask>((std::uint64_t{1} << size_) - 1); }
  int rank() const { return rank(ground()); }
  int rank(Mask s) const { return rank_[s]; }
  bool independent(Mask s) const { return rank_[s] == popcount(s); }
  Mask closure(Mask s) const;
  bool is_flat(Mask s) const { return closure(s) == s; }

  /// All circuits, ordered by size then lexicographically.
  std::vector<Mask> circuits() const;

  /// No loops and no parallel pairs.
  bool is_simple() const;

  /// Truncation to rank r.
  Matroid truncation(int r) const;

  /// Rank function of the parallel connection of *this and other along
  /// element 0 of both; other's elements 1.. are appended after ours.
  Matroid parallel_connection(const Matroid& other) const;

  /// Restriction to `keep`, relabelled to 0..|keep|-1 in increasing order.
  Matroid restriction(Mask keep) const;

  /// Relabel by a permutation: element e goes to perm[e].
  Matroid relabel(const std::vector<int>& perm) const;

  /// Appends a coloop as new element `size()`.
  Matroid add_coloop() const;

  bool operator==(const Matroid&) const = default;

 private:
  int size_ = 0;
  std::vector<std::uint8_t> rank_;
};

/// Connected components of the restriction to `subset`, via the relation
/// "lie on a common circuit". `circuits` must be the full circuit list.
std::vector<Mask> components(Mask subset, const std::vector<Mask>& circuits);

}  // namespace oscoh

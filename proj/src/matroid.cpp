#include "oscoh/matroid.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "oscoh/errors.hpp"

namespace oscoh {

std::vector<int> elements(Mask m) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(popcount(m)));
  while (m) {
    out.push_back(__builtin_ctz(m));
    m &= m - 1;
  }
  return out;
}

Mask mask_of(const std::vector<int>& elems) {
  Mask m = 0;
  for (int e : elems) m |= bit(e);
  return m;
}

bool lex_less(Mask a, Mask b) {
  auto ea = elements(a), eb = elements(b);
  return std::lexicographical_compare(ea.begin(), ea.end(), eb.begin(), eb.end());
}

namespace {

void check_size(int size) {
  if (size < 0 || size > kMaxGroundSet) {
    throw InvalidArgumentError("ground set of " + std::to_string(size) + " elements exceeds the limit of " +
                               std::to_string(kMaxGroundSet));
  }
}

}  // namespace

Matroid Matroid::from_independence(int size, const std::function<bool(Mask)>& independent) {
  check_size(size);
  const std::size_t total = std::size_t{1} << size;
  std::vector<std::uint8_t> indep(total, 0);
  indep[0] = 1;
  // Proper subsets of s are numerically smaller, so they are settled first.
  for (std::size_t idx = 1; idx < total; ++idx) {
    const auto s = static_cast<Mask>(idx);
    bool subsets_ok = true;
    for (Mask rest = s; rest && subsets_ok; rest &= rest - 1) {
      subsets_ok = indep[s & ~(rest & -rest)] != 0;
    }
    indep[s] = subsets_ok && independent(s) ? 1 : 0;
  }
  Matroid m;
  m.size_ = size;
  m.rank_.assign(total, 0);
  for (std::size_t idx = 0; idx < total; ++idx) {
    const auto s = static_cast<Mask>(idx);
    if (indep[s]) {
      m.rank_[s] = static_cast<std::uint8_t>(popcount(s));
      continue;
    }
    std::uint8_t best = 0;
    for (Mask rest = s; rest; rest &= rest - 1) best = std::max(best, m.rank_[s & ~(rest & -rest)]);
    m.rank_[s] = best;
  }
  return m;
}

Matroid Matroid::from_circuits(int size, int rank, const std::vector<Mask>& circuits) {
  std::vector<Mask> sorted = circuits;
  std::sort(sorted.begin(), sorted.end());
  return from_independence(size, [&](Mask s) {
    if (popcount(s) > rank) return false;
    return !std::binary_search(sorted.begin(), sorted.end(), s);
  });
}

Matroid Matroid::from_rank_function(int size, const std::function<int(Mask)>& rank) {
  check_size(size);
  Matroid m;
  m.size_ = size;
  m.rank_.resize(std::size_t{1} << size);
  for (std::size_t s = 0; s < m.rank_.size(); ++s) m.rank_[s] = static_cast<std::uint8_t>(rank(static_cast<Mask>(s)));
  return m;
}

Mask Matroid::closure(Mask s) const {
  const int r = rank_[s];
  Mask out = s;
  for (int e = 0; e < size_; ++e) {
    if (!(s & bit(e)) && rank_[s | bit(e)] == r) out |= bit(e);
  }
  return out;
}

std::vector<Mask> Matroid::circuits() const {
  std::vector<Mask> out;
  for (std::size_t idx = 1; idx < rank_.size(); ++idx) {
    Mask s = static_cast<Mask>(idx);
    const int k = popcount(s);
    if (rank_[s] != k - 1) continue;
    bool minimal = true;
    for (Mask rest = s; rest && minimal; rest &= rest - 1) {
      minimal = independent(s & ~(rest & -rest));
    }
    if (minimal) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), [](Mask a, Mask b) {
    if (popcount(a) != popcount(b)) return popcount(a) < popcount(b);
    return lex_less(a, b);
  });
  return out;
}

bool Matroid::is_simple() const {
  for (int e = 0; e < size_; ++e) {
    if (rank_[bit(e)] != 1) return false;
    for (int f = e + 1; f < size_; ++f) {
      if (rank_[bit(e) | bit(f)] != 2) return false;
    }
  }
  return true;
}

Matroid Matroid::truncation(int r) const {
  return from_rank_function(size_, [&](Mask s) { return std::min<int>(rank_[s], r); });
}

Matroid Matroid::parallel_connection(const Matroid& other) const {
  const int total = size_ + other.size_ - 1;
  const Mask low = static_cast<Mask>((std::uint64_t{1} << size_) - 1);
  return from_rank_function(total, [&](Mask s) {
    Mask s1 = s & low;
    Mask s2 = ((s >> size_) << 1) | (s & 1);
    int separate = rank(s1) + other.rank(s2);
    int glued = rank(s1 | 1) + other.rank(s2 | 1) - 1;
    return std::min(separate, glued);
  });
}

Matroid Matroid::restriction(Mask keep) const {
  auto kept = elements(keep);
  const int k = static_cast<int>(kept.size());
  return from_rank_function(k, [&](Mask s) {
    Mask orig = 0;
    for (int i = 0; i < k; ++i) {
      if (s & bit(i)) orig |= bit(kept[static_cast<std::size_t>(i)]);
    }
    return rank(orig);
  });
}

Matroid Matroid::relabel(const std::vector<int>& perm) const {
  std::vector<int> inverse(perm.size());
  for (std::size_t e = 0; e < perm.size(); ++e) inverse[static_cast<std::size_t>(perm[e])] = static_cast<int>(e);
  return from_rank_function(size_, [&](Mask s) {
    Mask orig = 0;
    for (int i = 0; i < size_; ++i) {
      if (s & bit(i)) orig |= bit(inverse[static_cast<std::size_t>(i)]);
    }
    return rank(orig);
  });
}

Matroid Matroid::add_coloop() const {
  const Mask old = ground();
  return from_rank_function(size_ + 1, [&](Mask s) { return rank(s & old) + ((s & bit(size_)) ? 1 : 0); });
}

std::vector<Mask> components(Mask subset, const std::vector<Mask>& circuits) {
  auto elems = elements(subset);
  std::vector<int> parent(32);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  for (Mask c : circuits) {
    if (!contains(subset, c)) continue;
    int first = __builtin_ctz(c);
    for (int e : elements(c)) parent[static_cast<std::size_t>(find(e))] = find(first);
  }
  std::vector<Mask> comps;
  std::vector<int> roots;
  for (int e : elems) {
    int r = find(e);
    auto it = std::find(roots.begin(), roots.end(), r);
    if (it == roots.end()) {
      roots.push_back(r);
      comps.push_back(bit(e));
    } else {
      comps[static_cast<std::size_t>(it - roots.begin())] |= bit(e);
    }
  }
  return comps;
}

}  // namespace oscoh

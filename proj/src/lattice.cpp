#include "oscoh/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>

#include "oscoh/errors.hpp"

namespace oscoh {

std::vector<int> Flat::indices() const { return elements(hyperplanes); }

IntersectionLattice::IntersectionLattice(std::vector<Flat> flats, int rank) : flats_(std::move(flats)), rank_(rank) {
  std::sort(flats_.begin(), flats_.end(), [](const Flat& a, const Flat& b) {
    if (a.codim != b.codim) return a.codim < b.codim;
    return lex_less(a.hyperplanes, b.hyperplanes);
  });
  offsets_.assign(static_cast<std::size_t>(rank_) + 2, flats_.size());
  for (std::size_t i = flats_.size(); i-- > 0;) offsets_[static_cast<std::size_t>(flats_[i].codim)] = i;
  for (std::size_t q = offsets_.size() - 1; q-- > 0;) offsets_[q] = std::min(offsets_[q], offsets_[q + 1]);
}

std::span<const Flat> IntersectionLattice::of_codim(int q) const {
  if (q < 0 || q > rank_) return {};
  const auto b = offsets_[static_cast<std::size_t>(q)], e = offsets_[static_cast<std::size_t>(q) + 1];
  return std::span<const Flat>(flats_).subspan(b, e - b);
}

std::vector<std::int64_t> IntersectionLattice::betti() const {
  std::vector<std::int64_t> b(static_cast<std::size_t>(rank_) + 1, 0);
  for (const auto& f : flats_) b[static_cast<std::size_t>(f.codim)] += std::llabs(f.moebius);
  return b;
}

IntersectionLattice intersection_lattice(const Arrangement& arr) {
  const Matroid& cone = arr.cone();
  std::vector<std::vector<Mask>> levels{{Mask{0}}};
  for (int q = 0; q < arr.rank(); ++q) {
    std::set<Mask> next;
    for (Mask x : levels.back()) {
      for (int j = 1; j <= arr.size(); ++j) {
        if (x & bit(j)) continue;
        Mask y = cone.closure(x | bit(j));
        if (!(y & 1)) next.insert(y);
      }
    }
    if (next.empty()) break;
    levels.emplace_back(next.begin(), next.end());
  }
  std::vector<Flat> flats;
  std::map<Mask, std::int64_t> mu;
  for (std::size_t q = 0; q < levels.size(); ++q) {
    for (Mask x : levels[q]) {
      std::int64_t value = 0;
      if (q == 0) {
        value = 1;
      } else {
        for (const auto& [y, my] : mu) {
          if (y != x && contains(x, y)) value -= my;
        }
      }
      flats.push_back({x, static_cast<int>(q), value});
    }
    for (const auto& f : flats) {
      if (f.codim == static_cast<int>(q)) mu.emplace(f.hyperplanes, f.moebius);
    }
  }
  return IntersectionLattice(std::move(flats), arr.rank());
}

std::vector<std::int64_t> betti_numbers(const IntersectionLattice& lattice) { return lattice.betti(); }

std::vector<std::int64_t> betti_numbers(const Arrangement& arr) { return intersection_lattice(arr).betti(); }

std::int64_t euler_characteristic(std::span<const std::int64_t> betti) {
  std::int64_t e = 0;
  for (std::size_t q = 0; q < betti.size(); ++q) e += (q % 2 == 0 ? 1 : -1) * betti[q];
  return e;
}

std::int64_t euler_characteristic(const Arrangement& arr) {
  auto b = betti_numbers(arr);
  return euler_characteristic(b);
}

std::vector<Flat> dense_edges(const Arrangement& central_arr) {
  if (!central_arr.central()) throw InvalidArgumentError("dense edges are defined here for central arrangements");
  auto lattice = intersection_lattice(central_arr);
  std::vector<Flat> out;
  for (const auto& f : lattice.flats()) {
    if (f.codim == 0) continue;
    if (components(f.hyperplanes, central_arr.cone_circuits()).size() == 1) out.push_back(f);
  }
  return out;
}

}  // namespace oscoh

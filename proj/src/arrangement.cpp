#include "oscoh/arrangement.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "oscoh/errors.hpp"
#include "oscoh/linalg.hpp"

namespace oscoh {

namespace {

std::vector<std::string> default_labels(int n, std::vector<std::string> labels) {
  if (labels.empty()) {
    for (int j = 1; j <= n; ++j) labels.push_back("H" + std::to_string(j));
  }
  if (static_cast<int>(labels.size()) != n) throw LengthMismatchError("label count does not match hyperplane count");
  return labels;
}

std::size_t rank_of_rows(const std::vector<FormRow>& rows, std::size_t width) {
  if (rows.empty()) return 0;
  NumberFieldMatrix m(rows.size(), width);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < width; ++j) m(i, j) = rows[i][j];
  }
  return field_rank(m);
}

void check_forms(const FieldPtr& field, const std::vector<FormRow>& forms) {
  if (forms.empty()) throw InvalidArgumentError("arrangement has no hyperplanes");
  const std::size_t width = forms.front().size();
  if (width < 2) throw InvalidArgumentError("form rows need at least one coefficient and a constant");
  for (std::size_t j = 0; j < forms.size(); ++j) {
    if (forms[j].size() != width) {
      throw LengthMismatchError("row " + std::to_string(j + 1) + " has " + std::to_string(forms[j].size()) +
                                " entries, expected " + std::to_string(width));
    }
    bool zero = true;
    for (std::size_t i = 0; i + 1 < width; ++i) {
      if (!same_field(forms[j][i].field(), field)) throw InvalidArgumentError("row entries from a different field");
      zero = zero && forms[j][i].is_zero();
    }
    if (zero) throw ZeroFormError("row " + std::to_string(j + 1) + " has a zero linear part");
  }
}

}  // namespace

Arrangement Arrangement::from_cone(Matroid cone, std::vector<std::string> labels,
                                   std::optional<Realization> realization) {
  if (cone.size() < 2) throw InvalidArgumentError("arrangement has no hyperplanes");
  if (!cone.is_simple()) throw InvalidArgumentError("repeated hyperplanes (parallel elements in the cone)");
  Arrangement a;
  a.n_ = cone.size() - 1;
  a.rank_ = cone.rank() - 1;
  const Mask hyps = cone.ground() & ~Mask{1};
  a.central_ = cone.rank(hyps) == a.rank_;
  if (a.rank_ < 1) throw NotEssentialError("arrangement has rank 0");
  a.labels_ = default_labels(a.n_, std::move(labels));
  a.circuits_ = cone.circuits();
  a.cone_ = std::move(cone);
  a.realization_ = std::move(realization);
  return a;
}

Arrangement Arrangement::from_forms(FieldPtr field, std::vector<FormRow> forms, std::vector<std::string> labels) {
  check_forms(field, forms);
  const std::size_t width = forms.front().size();
  const int ell = static_cast<int>(width) - 1;
  const int n = static_cast<int>(forms.size());
  std::vector<FormRow> linear;
  for (const auto& f : forms) linear.emplace_back(f.begin(), f.end() - 1);
  if (rank_of_rows(linear, width - 1) != static_cast<std::size_t>(ell)) {
    throw NotEssentialError("linear parts span rank " + std::to_string(rank_of_rows(linear, width - 1)) +
                            " < ambient dimension " + std::to_string(ell));
  }
  // Cone vectors: element 0 is z_0, element j the homogenized H_j.
  std::vector<FormRow> cone_vectors;
  FormRow infinity(width, NumberFieldElement(field, Rational(0)));
  infinity.back() = NumberFieldElement(field, Rational(1));
  cone_vectors.push_back(infinity);
  for (const auto& f : forms) cone_vectors.push_back(f);
  Matroid cone = Matroid::from_independence(n + 1, [&](Mask s) {
    std::vector<FormRow> rows;
    for (int e : elements(s)) rows.push_back(cone_vectors[static_cast<std::size_t>(e)]);
    return rank_of_rows(rows, width) == rows.size();
  });
  if (!cone.is_simple()) throw InvalidArgumentError("two rows define the same hyperplane");
  return from_cone(std::move(cone), std::move(labels), Realization{std::move(field), std::move(forms)});
}

Arrangement Arrangement::from_circuits(int n, int rank, bool central, const std::vector<std::vector<int>>& circuits,
                                       std::vector<std::string> labels) {
  if (n < 1) throw InvalidArgumentError("arrangement has no hyperplanes");
  if (rank < 1) throw InvalidArgumentError("rank must be positive");
  const int lowest = central ? 1 : 0;
  std::vector<Mask> masks;
  for (std::size_t c = 0; c < circuits.size(); ++c) {
    Mask m = 0;
    for (int e : circuits[c]) {
      if (e < lowest || e > n) {
        throw InvalidArgumentError("circuit " + std::to_string(c + 1) + " has index " + std::to_string(e) +
                                   " outside " + std::to_string(lowest) + ".." + std::to_string(n));
      }
      m |= bit(e);
    }
    if (popcount(m) != static_cast<int>(circuits[c].size())) {
      throw InvalidArgumentError("circuit " + std::to_string(c + 1) + " repeats an index");
    }
    masks.push_back(m);
  }
  Matroid cone;
  if (central) {
    for (auto& m : masks) m >>= 1;
    Matroid base = Matroid::from_circuits(n, rank, masks);
    if (base.rank() != rank) {
      throw NotEssentialError("matroid rank " + std::to_string(base.rank()) + " < stated rank " +
                              std::to_string(rank));
    }
    cone = Matroid::from_rank_function(n + 1, [&](Mask s) { return base.rank(s >> 1) + static_cast<int>(s & 1); });
  } else {
    cone = Matroid::from_circuits(n + 1, rank + 1, masks);
    if (cone.rank() != rank + 1) {
      throw NotEssentialError("cone rank " + std::to_string(cone.rank()) + " < " + std::to_string(rank + 1));
    }
  }
  return from_cone(std::move(cone), std::move(labels));
}

Arrangement build_arrangement(FieldPtr field, std::vector<FormRow> forms, std::vector<std::string> labels) {
  return Arrangement::from_forms(std::move(field), std::move(forms), std::move(labels));
}

std::vector<FormRow> essentialize(const FieldPtr& field, const std::vector<FormRow>& forms) {
  check_forms(field, forms);
  const std::size_t ell = forms.front().size() - 1;
  const NumberFieldElement zero(field, Rational(0));
  // Greedy basis of the linear parts, with its echelon form and pivot columns.
  std::vector<std::size_t> basis;
  std::vector<FormRow> echelon;
  std::vector<std::size_t> pivots;
  for (std::size_t j = 0; j < forms.size(); ++j) {
    FormRow v(forms[j].begin(), forms[j].end() - 1);
    for (std::size_t k = 0; k < echelon.size(); ++k) {
      if (v[pivots[k]].is_zero()) continue;
      NumberFieldElement f = v[pivots[k]] / echelon[k][pivots[k]];
      for (std::size_t i = 0; i < ell; ++i) v[i] = v[i] - f * echelon[k][i];
    }
    auto it = std::find_if(v.begin(), v.end(), [](const NumberFieldElement& x) { return !x.is_zero(); });
    if (it == v.end()) continue;
    basis.push_back(j);
    pivots.push_back(static_cast<std::size_t>(it - v.begin()));
    echelon.push_back(std::move(v));
  }
  const std::size_t r = basis.size();
  // Solve alpha * B = a_j restricted to the pivot columns, B = basis rows.
  NumberFieldMatrix square(r, r, zero);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t k = 0; k < r; ++k) square(i, k) = forms[basis[i]][pivots[k]];
  }
  // Gauss-Jordan inverse of `square`.
  NumberFieldMatrix inv = identity_matrix(r, zero, NumberFieldElement(field, Rational(1)));
  for (std::size_t c = 0; c < r; ++c) {
    std::size_t p = c;
    while (square(p, c).is_zero()) ++p;
    for (std::size_t k = 0; k < r; ++k) {
      std::swap(square(c, k), square(p, k));
      std::swap(inv(c, k), inv(p, k));
    }
    NumberFieldElement d = square(c, c).inverse();
    for (std::size_t k = 0; k < r; ++k) {
      square(c, k) = square(c, k) * d;
      inv(c, k) = inv(c, k) * d;
    }
    for (std::size_t i = 0; i < r; ++i) {
      if (i == c || square(i, c).is_zero()) continue;
      NumberFieldElement f = square(i, c);
      for (std::size_t k = 0; k < r; ++k) {
        square(i, k) = square(i, k) - f * square(c, k);
        inv(i, k) = inv(i, k) - f * inv(c, k);
      }
    }
  }
  std::vector<FormRow> out;
  for (const auto& f : forms) {
    FormRow row(r + 1, zero);
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t k = 0; k < r; ++k) row[i] = row[i] + f[pivots[k]] * inv(k, i);
    }
    row[r] = f.back();
    out.push_back(std::move(row));
  }
  return out;
}

ProjectiveClosure projective_closure(const Arrangement& arr) {
  const int n = arr.size();
  auto labels = arr.labels();
  labels.push_back("H_inf");
  if (arr.realization()) {
    const auto& real = *arr.realization();
    const NumberFieldElement zero(real.field, Rational(0));
    std::vector<FormRow> rows;
    for (const auto& f : real.forms) {
      FormRow row = f;
      row.push_back(zero);
      rows.push_back(std::move(row));
    }
    FormRow inf(static_cast<std::size_t>(arr.rank()) + 2, zero);
    inf[static_cast<std::size_t>(arr.rank())] = NumberFieldElement(real.field, Rational(1));
    rows.push_back(std::move(inf));
    return {Arrangement::from_forms(real.field, std::move(rows), std::move(labels)), n + 1};
  }
  const Matroid& cone = arr.cone();
  // New element 0 is a fresh coloop; old infinity becomes element n + 1.
  Matroid closure = Matroid::from_rank_function(n + 2, [&](Mask s) {
    Mask old = (s & ~(Mask{1} | bit(n + 1)));
    if (s & bit(n + 1)) old |= 1;
    return cone.rank(old) + static_cast<int>(s & 1);
  });
  return {Arrangement::from_cone(std::move(closure), std::move(labels)), n + 1};
}

Arrangement generic_section(const Arrangement& arr, int r) {
  if (r < 1 || r >= arr.rank()) {
    throw InvalidArgumentError("generic section dimension must satisfy 1 <= r < " + std::to_string(arr.rank()));
  }
  return Arrangement::from_cone(arr.cone().truncation(r + 1), arr.labels());
}

Arrangement product_arrangement(const Arrangement& first, const Arrangement& second) {
  auto labels = first.labels();
  labels.insert(labels.end(), second.labels().begin(), second.labels().end());
  if (first.realization() && second.realization() &&
      same_field(first.realization()->field, second.realization()->field)) {
    const FieldPtr& field = first.realization()->field;
    const NumberFieldElement zero(field, Rational(0));
    const auto l1 = static_cast<std::size_t>(first.rank()), l2 = static_cast<std::size_t>(second.rank());
    std::vector<FormRow> rows;
    for (const auto& f : first.realization()->forms) {
      FormRow row(l1 + l2 + 1, zero);
      std::copy(f.begin(), f.end() - 1, row.begin());
      row.back() = f.back();
      rows.push_back(std::move(row));
    }
    for (const auto& f : second.realization()->forms) {
      FormRow row(l1 + l2 + 1, zero);
      std::copy(f.begin(), f.end() - 1, row.begin() + static_cast<std::ptrdiff_t>(l1));
      row.back() = f.back();
      rows.push_back(std::move(row));
    }
    return Arrangement::from_forms(field, std::move(rows), std::move(labels));
  }
  return Arrangement::from_cone(first.cone().parallel_connection(second.cone()), std::move(labels));
}

Arrangement subarrangement(const Arrangement& arr, Mask keep) {
  keep &= arr.hyperplanes();
  if (keep == 0) throw InvalidArgumentError("empty subarrangement");
  std::vector<std::string> labels;
  for (int j : elements(keep)) labels.push_back(arr.labels()[static_cast<std::size_t>(j - 1)]);
  return Arrangement::from_cone(arr.cone().restriction(keep | 1), std::move(labels));
}

std::vector<Mask> product_factors(const Arrangement& arr) {
  const int n = arr.size();
  const Matroid& cone = arr.cone();
  // Components of the contraction by infinity.
  Matroid contraction = Matroid::from_rank_function(n, [&](Mask s) { return cone.rank((s << 1) | 1) - 1; });
  std::vector<Mask> comps = components(contraction.ground(), contraction.circuits());
  for (auto& c : comps) c <<= 1;
  std::sort(comps.begin(), comps.end(), lex_less);
  if (comps.size() <= 1) return {arr.hyperplanes()};
  // Confirm the cone is the parallel connection of the factor cones along infinity.
  Matroid glued = cone.restriction(comps[0] | 1);
  std::vector<int> order{0};
  for (int e : elements(comps[0])) order.push_back(e);
  for (std::size_t i = 1; i < comps.size(); ++i) {
    glued = glued.parallel_connection(cone.restriction(comps[i] | 1));
    for (int e : elements(comps[i])) order.push_back(e);
  }
  // order[k] = original element placed at position k of `glued`.
  std::vector<int> perm(order.size());
  for (std::size_t k = 0; k < order.size(); ++k) perm[static_cast<std::size_t>(order[k])] = static_cast<int>(k);
  if (!(cone.relabel(perm) == glued)) return {arr.hyperplanes()};
  return comps;
}

}  // namespace oscoh

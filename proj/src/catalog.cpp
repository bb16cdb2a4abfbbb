#include "oscoh/catalog.hpp"

#include <regex>

#include "oscoh/errors.hpp"

namespace oscoh {

namespace {

// Coefficient rows over Q with a zero constant term.
Arrangement rational_central(const std::vector<std::vector<long>>& rows, std::vector<std::string> labels = {}) {
  const auto q = NumberField::rationals();
  std::vector<FormRow> forms;
  for (const auto& r : rows) {
    FormRow f;
    for (long c : r) f.emplace_back(q, Rational(c));
    f.emplace_back(q, Rational(0));
    forms.push_back(std::move(f));
  }
  return Arrangement::from_forms(q, std::move(forms), std::move(labels));
}

}  // namespace

FieldPtr eisenstein_field() {
  static const FieldPtr field = NumberField::from_min_poly({Integer(1), Integer(1), Integer(1)});
  return field;
}

Arrangement boolean_arrangement(int n) {
  if (n < 1) throw InvalidArgumentError("boolean(n) needs n >= 1");
  std::vector<std::vector<long>> rows(static_cast<std::size_t>(n), std::vector<long>(static_cast<std::size_t>(n), 0));
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i][i] = 1;
  return rational_central(rows);
}

Arrangement three_lines() { return rational_central({{1, 0}, {0, 1}, {1, -1}}); }

Arrangement example_lstrict() {
  // x (x+y+z) (x+y-z) y (x-y-z) (x-y+z) z
  return rational_central({{1, 0, 0}, {1, 1, 1}, {1, 1, -1}, {0, 1, 0}, {1, -1, -1}, {1, -1, 1}, {0, 0, 1}},
                          {"x", "x+y+z", "x+y-z", "y", "x-y-z", "x-y+z", "z"});
}

Arrangement ceva3() {
  // (x^3 - y^3)(x^3 - z^3)(y^3 - z^3) = prod (u - w^i v)
  const auto f = eisenstein_field();
  const NumberFieldElement zero(f, Rational(0)), one(f, Rational(1));
  const NumberFieldElement w = NumberFieldElement::generator(f);
  const NumberFieldElement powers[3] = {one, w, w * w};
  const std::pair<int, int> pairs[3] = {{0, 1}, {0, 2}, {1, 2}};
  const char* names = "xyz";
  std::vector<FormRow> forms;
  std::vector<std::string> labels;
  for (auto [a, b] : pairs) {
    for (int i = 0; i < 3; ++i) {
      FormRow row(4, zero);
      row[static_cast<std::size_t>(a)] = one;
      row[static_cast<std::size_t>(b)] = -powers[i];
      forms.push_back(std::move(row));
      std::string label = std::string(1, names[a]) + "-";
      if (i == 1) label += "w";
      if (i == 2) label += "w^2";
      labels.push_back(label + names[b]);
    }
  }
  return Arrangement::from_forms(f, std::move(forms), std::move(labels));
}

Arrangement maclane() {
  // x y (y-x) z (z-x-w^2 y) (z+w y) (z-x) (z+w^2 x+w y)
  const auto f = eisenstein_field();
  const NumberFieldElement zero(f, Rational(0)), one(f, Rational(1));
  const NumberFieldElement w = NumberFieldElement::generator(f);
  const NumberFieldElement w2 = w * w;
  auto row = [&](NumberFieldElement a, NumberFieldElement b, NumberFieldElement c) {
    return FormRow{std::move(a), std::move(b), std::move(c), zero};
  };
  std::vector<FormRow> forms{row(one, zero, zero),  row(zero, one, zero), row(-one, one, zero), row(zero, zero, one),
                             row(-one, -w2, one),   row(zero, w, one),    row(-one, zero, one), row(w2, w, one)};
  return Arrangement::from_forms(
      f, std::move(forms), {"x", "y", "y-x", "z", "z-x-w^2y", "z+wy", "z-x", "z+w^2x+wy"});
}

Arrangement maclane_matroid() {
  // The eight lines of the 8_3 configuration.
  return Arrangement::from_circuits(
      8, 3, true, {{1, 2, 3}, {1, 4, 7}, {1, 6, 8}, {2, 4, 6}, {2, 5, 7}, {3, 5, 6}, {3, 7, 8}, {4, 5, 8}},
      {"x", "y", "y-x", "z", "z-x-w^2y", "z+wy", "z-x", "z+w^2x+wy"});
}

Arrangement ceva3_section() { return generic_section(ceva3(), 2); }

Arrangement maclane_section() { return generic_section(maclane(), 2); }

Arrangement product_example() { return product_arrangement(ceva3_section(), maclane_section()); }

std::vector<long> maclane_weight(int u, int v) {
  const long a[8] = {1, 0, 2, 1, 2, 2, 1, 0};
  const long b[8] = {2, 2, 2, 1, 1, 0, 0, 1};
  std::vector<long> k(8);
  for (std::size_t j = 0; j < 8; ++j) k[j] = u * a[j] + v * b[j];
  return k;
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries{
      {"boolean(3)", "coordinate hyperplanes z_1 ... z_n in C^n (any n via boolean(n))",
       [] { return boolean_arrangement(3); }},
      {"three-lines", "three central lines x, y, x-y in C^2", three_lines},
      {"example-lstrict", "7 planes x(x+y+z)(x+y-z)y(x-y-z)(x-y+z)z in C^3", example_lstrict},
      {"ceva3", "Ceva(3): (x^3-y^3)(x^3-z^3)(y^3-z^3) over Q(w)", ceva3},
      {"maclane", "MacLane 8_3 configuration realized over Q(w)", maclane},
      {"maclane-matroid", "MacLane 8_3 configuration as an abstract rank-3 matroid", maclane_matroid},
      {"ceva3-section", "generic section of ceva3 in C^2 (9 affine lines)", ceva3_section},
      {"maclane-section", "generic section of maclane in C^2 (8 affine lines)", maclane_section},
      {"product-example", "ceva3-section x maclane-section (17 hyperplanes in C^4)", product_example},
  };
  return entries;
}

std::optional<Arrangement> catalog_lookup(const std::string& name) {
  static const std::regex boolean_re(R"(boolean(?:\((\d+)\)|-(\d+)))");
  std::smatch m;
  if (std::regex_match(name, m, boolean_re)) {
    const std::string digits = m[1].matched ? m[1].str() : m[2].str();
    if (digits.size() > 3) throw InvalidArgumentError("boolean(n): n too large");
    return boolean_arrangement(std::stoi(digits));
  }
  for (const auto& e : catalog()) {
    if (e.name == name) return e.build();
  }
  return std::nullopt;
}

}  // namespace oscoh

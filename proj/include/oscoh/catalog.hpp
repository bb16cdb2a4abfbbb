#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "oscoh/arrangement.hpp"

namespace oscoh {

struct CatalogEntry {
  std::string name;
  std::string description;
  std::function<Arrangement()> build;
};

/// Built-in arrangements. `boolean(n)` is parametric and listed as boolean(3).
const std::vector<CatalogEntry>& catalog();

/// Resolves a catalog name, including "boolean(n)" / "boolean-n" for any n >= 1.
std::optional<Arrangement> catalog_lookup(const std::string& name);

/// The cyclotomic field Q[x]/(x^2 + x + 1); its generator is a primitive cube root of unity.
FieldPtr eisenstein_field();

Arrangement boolean_arrangement(int n);
Arrangement three_lines();
Arrangement example_lstrict();
Arrangement ceva3();
Arrangement maclane();
Arrangement maclane_matroid();
Arrangement ceva3_section();
Arrangement maclane_section();
Arrangement product_example();

/// The weight k(u, v) = u*(1,0,2,1,2,2,1,0) + v*(2,2,2,1,1,0,0,1) on the MacLane arrangement.
std::vector<long> maclane_weight(int u, int v);

}  // namespace oscoh

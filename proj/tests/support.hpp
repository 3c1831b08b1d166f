#pragma once

#include <string>
#include <vector>

#include "efalg/catalog.hpp"
#include "efalg/suite.hpp"

namespace efalg::testing {

inline ElementId id(std::size_t i) { return static_cast<ElementId>(i); }

inline std::vector<ElementId> ids(std::initializer_list<std::size_t> v) {
  std::vector<ElementId> out;
  for (auto x : v) out.push_back(id(x));
  return out;
}

// Catalog plus every enumerated algebra up to the given order; built once.
inline const std::vector<NamedAlgebra>& universe(std::size_t max_order = 6) {
  if (max_order <= 6) {
    static const std::vector<NamedAlgebra> small = suite_universe(6);
    return small;
  }
  static const std::vector<NamedAlgebra> large = suite_universe(7);
  return large;
}

inline const std::vector<NamedAlgebra>& catalog() {
  static const std::vector<NamedAlgebra> entries = [] {
    std::vector<NamedAlgebra> out;
    for (auto& e : named_catalog()) out.push_back({e.name, std::move(e.algebra)});
    return out;
  }();
  return entries;
}

}  // namespace efalg::testing

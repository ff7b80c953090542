#pragma once

// Built-in catalogue of all groups of order <= 15 from hardcoded
// permutation generators. Used as the brute-force quotient oracle and for
// homomorphism-count signatures.

#include <string>
#include <vector>

#include "sfq/finite_group.hpp"

namespace sfq {

/// Largest order through which the catalogue is complete.
inline constexpr int kCatalogueBound = 15;

struct CatalogueGroup {
  std::string name;
  FiniteGroup group;
};

namespace detail {

inline std::vector<int> cycle(int degree, std::vector<int> points) {
  std::vector<int> p(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) p[static_cast<std::size_t>(i)] = i;
  for (std::size_t i = 0; i < points.size(); ++i)
    p[static_cast<std::size_t>(points[i])] = points[(i + 1) % points.size()];
  return p;
}

inline CatalogueGroup cat_entry(const std::string& name, int degree,
                                const std::vector<std::vector<int>>& gens, int expect_order) {
  auto pg = group_from_permutations(gens, degree);
  if (pg.group.order != expect_order)
    throw std::logic_error("catalogue: wrong order for " + name);
  return {name, std::move(pg.group)};
}

}  // namespace detail

/// All isomorphism types of groups of order <= kCatalogueBound, in
/// (order, name) order.
inline const std::vector<CatalogueGroup>& small_groups_catalogue() {
  using detail::cat_entry;
  using detail::cycle;
  static const std::vector<CatalogueGroup> groups = [] {
    std::vector<CatalogueGroup> out;
    auto cyc = [&](int n) {
      std::vector<int> pts;
      for (int i = 0; i < n; ++i) pts.push_back(i);
      return cycle(n, pts);
    };
    out.push_back(cat_entry("C1", 1, {}, 1));
    out.push_back(cat_entry("C2", 2, {cyc(2)}, 2));
    out.push_back(cat_entry("C3", 3, {cyc(3)}, 3));
    out.push_back(cat_entry("C4", 4, {cyc(4)}, 4));
    out.push_back(cat_entry("C2xC2", 4, {cycle(4, {0, 1}), cycle(4, {2, 3})}, 4));
    out.push_back(cat_entry("C5", 5, {cyc(5)}, 5));
    out.push_back(cat_entry("C6", 6, {cyc(6)}, 6));
    out.push_back(cat_entry("S3", 3, {cycle(3, {0, 1, 2}), cycle(3, {0, 1})}, 6));
    out.push_back(cat_entry("C7", 7, {cyc(7)}, 7));
    out.push_back(cat_entry("C8", 8, {cyc(8)}, 8));
    out.push_back(cat_entry("C4xC2", 6, {cycle(6, {0, 1, 2, 3}), cycle(6, {4, 5})}, 8));
    out.push_back(cat_entry("C2xC2xC2", 6,
                            {cycle(6, {0, 1}), cycle(6, {2, 3}), cycle(6, {4, 5})}, 8));
    out.push_back(cat_entry("D8", 4, {cycle(4, {0, 1, 2, 3}), cycle(4, {1, 3})}, 8));
    // Quaternions in the right regular action on {1,-1,i,-i,j,-j,k,-k}.
    out.push_back(cat_entry("Q8", 8,
                            {{2, 3, 1, 0, 7, 6, 4, 5}, {4, 5, 6, 7, 1, 0, 3, 2}}, 8));
    out.push_back(cat_entry("C9", 9, {cyc(9)}, 9));
    out.push_back(cat_entry("C3xC3", 6, {cycle(6, {0, 1, 2}), cycle(6, {3, 4, 5})}, 9));
    out.push_back(cat_entry("C10", 7, {cycle(7, {0, 1, 2, 3, 4}), cycle(7, {5, 6})}, 10));
    out.push_back(cat_entry("D10", 5, {{1, 2, 3, 4, 0}, {0, 4, 3, 2, 1}}, 10));
    out.push_back(cat_entry("C11", 11, {cyc(11)}, 11));
    out.push_back(cat_entry("C12", 7, {cycle(7, {0, 1, 2, 3}), cycle(7, {4, 5, 6})}, 12));
    out.push_back(cat_entry("C6xC2", 8, {cycle(8, {0, 1, 2, 3, 4, 5}), cycle(8, {6, 7})}, 12));
    out.push_back(cat_entry("D12", 6, {{1, 2, 3, 4, 5, 0}, {0, 5, 4, 3, 2, 1}}, 12));
    out.push_back(cat_entry("A4", 4, {{1, 2, 0, 3}, {1, 0, 3, 2}}, 12));
    // Dicyclic group of order 12 in its right regular action, elements
    // indexed a^m b^e -> m + 6e.
    out.push_back(cat_entry("Dic12", 12,
                            {{1, 2, 3, 4, 5, 0, 11, 6, 7, 8, 9, 10},
                             {6, 7, 8, 9, 10, 11, 3, 4, 5, 0, 1, 2}},
                            12));
    out.push_back(cat_entry("C13", 13, {cyc(13)}, 13));
    out.push_back(cat_entry("C14", 9, {cycle(9, {0, 1, 2, 3, 4, 5, 6}), cycle(9, {7, 8})}, 14));
    out.push_back(cat_entry("D14", 7, {{1, 2, 3, 4, 5, 6, 0}, {0, 6, 5, 4, 3, 2, 1}}, 14));
    out.push_back(cat_entry("C15", 8, {cycle(8, {0, 1, 2}), cycle(8, {3, 4, 5, 6, 7})}, 15));
    return out;
  }();
  return groups;
}

}  // namespace sfq

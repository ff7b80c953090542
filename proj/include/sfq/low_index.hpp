#pragma once

// Exhaustive low-index subgroup search by backtracking over standardized
// coset tables, with forced deductions from relator scans. Complete tables
// of index <= n correspond one-to-one to subgroups of index <= n; a
// normality filter (the coset action must be regular) then yields every
// normal subgroup exactly once, realized as a finite quotient.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "sfq/finite_group.hpp"
#include "sfq/presentation.hpp"

namespace sfq {

struct SearchBudget {
  std::int64_t max_nodes = 50'000'000;  // backtracking nodes
  int max_cosets = 64;                  // hard cap on the index bound
};

class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// A complete coset table: columns alternate generator/inverse, entries are
/// coset indices. Coset 0 is the subgroup itself.
struct CosetTable {
  int ngens = 0;
  int num_cosets = 0;
  std::vector<int> entries;  // num_cosets x 2*ngens

  int at(int coset, int col) const {
    return entries[static_cast<std::size_t>(coset) * (2 * ngens) + col];
  }
  static int column(int letter) {
    return letter > 0 ? 2 * (letter - 1) : 2 * (-letter - 1) + 1;
  }
  int trace(int coset, const Word& w) const {
    int c = coset;
    for (int letter : w) c = at(c, column(letter));
    return c;
  }
};

namespace detail {

class LowIndexSearch {
 public:
  LowIndexSearch(const Presentation& p, int max_index, const SearchBudget& budget)
      : ngens_(p.generator_count()),
        cols_(2 * p.generator_count()),
        max_index_(max_index),
        budget_(budget) {
    if (max_index < 1) throw std::invalid_argument("low_index: index bound must be >= 1");
    if (max_index > budget.max_cosets)
      throw BudgetExceeded("low_index: index bound exceeds the coset budget");
    p.validate();
    for (const auto& rel : p.relators) {
      Word r = cyclic_reduce(rel).second;
      if (r.empty()) continue;
      std::vector<int> cols;
      cols.reserve(r.size());
      for (int letter : r) cols.push_back(CosetTable::column(letter));
      relators_.push_back(std::move(cols));
    }
    table_.assign(static_cast<std::size_t>(max_index_) * cols_, -1);
    num_cosets_ = 1;
  }

  std::vector<CosetTable> run() {
    results_.clear();
    nodes_ = 0;
    search();
    return std::move(results_);
  }

 private:
  int entry(int c, int col) const { return table_[static_cast<std::size_t>(c) * cols_ + col]; }

  void set_entry(int c, int col, int d) {
    table_[static_cast<std::size_t>(c) * cols_ + col] = d;
    trail_.push_back({c, col});
    if (entry(d, col ^ 1) == -1) {
      table_[static_cast<std::size_t>(d) * cols_ + (col ^ 1)] = c;
      trail_.push_back({d, col ^ 1});
    }
  }

  // Scan one relator at one coset. Returns false on contradiction; sets
  // *deduced when a forced entry was written.
  bool scan(const std::vector<int>& rel, int c, bool* deduced) {
    int f = c;
    std::size_t i = 0;
    while (i < rel.size()) {
      int next = entry(f, rel[i]);
      if (next == -1) break;
      f = next;
      ++i;
    }
    if (i == rel.size()) return f == c;

    int b = c;
    std::size_t j = rel.size();
    while (j > i + 1) {
      int prev = entry(b, rel[j - 1] ^ 1);
      if (prev == -1) break;
      b = prev;
      --j;
    }
    if (j == i + 1) {
      // One gap: the entry is forced.
      int existing_back = entry(b, rel[i] ^ 1);
      if (existing_back != -1 && existing_back != f) return false;
      set_entry(f, rel[i], b);
      *deduced = true;
    }
    return true;
  }

  bool propagate() {
    bool again = true;
    while (again) {
      again = false;
      for (const auto& rel : relators_) {
        for (int c = 0; c < num_cosets_; ++c) {
          bool deduced = false;
          if (!scan(rel, c, &deduced)) return false;
          if (deduced) again = true;
        }
      }
    }
    return true;
  }

  void search() {
    if (++nodes_ > budget_.max_nodes)
      throw BudgetExceeded("low_index: node budget exceeded");

    std::size_t trail_mark = trail_.size();
    int saved_cosets = num_cosets_;
    if (!propagate()) {
      unwind(trail_mark, saved_cosets);
      return;
    }

    // Branch on the first undefined entry in row-major scan order, so every
    // complete table produced is standardized and appears exactly once.
    int c = -1, col = -1;
    for (int cc = 0; cc < num_cosets_ && c == -1; ++cc) {
      for (int k = 0; k < cols_; ++k) {
        if (entry(cc, k) == -1) {
          c = cc;
          col = k;
          break;
        }
      }
    }
    if (c == -1) {
      CosetTable t;
      t.ngens = ngens_;
      t.num_cosets = num_cosets_;
      t.entries.assign(table_.begin(),
                       table_.begin() + static_cast<std::size_t>(num_cosets_) * cols_);
      results_.push_back(std::move(t));
      unwind(trail_mark, saved_cosets);
      return;
    }

    int limit = num_cosets_ < max_index_ ? num_cosets_ + 1 : num_cosets_;
    for (int d = 0; d < limit; ++d) {
      if (d < num_cosets_ && entry(d, col ^ 1) != -1) continue;
      std::size_t inner_mark = trail_.size();
      int inner_cosets = num_cosets_;
      if (d == num_cosets_) ++num_cosets_;
      set_entry(c, col, d);
      search();
      unwind(inner_mark, inner_cosets);
    }
    unwind(trail_mark, saved_cosets);
  }

  void unwind(std::size_t mark, int cosets) {
    while (trail_.size() > mark) {
      auto [c, col] = trail_.back();
      trail_.pop_back();
      table_[static_cast<std::size_t>(c) * cols_ + col] = -1;
    }
    num_cosets_ = cosets;
  }

  int ngens_;
  int cols_;
  int max_index_;
  SearchBudget budget_;
  std::vector<std::vector<int>> relators_;
  std::vector<int> table_;
  int num_cosets_ = 1;
  std::vector<std::pair<int, int>> trail_;
  std::vector<CosetTable> results_;
  std::int64_t nodes_ = 0;
};

}  // namespace detail

/// All subgroups of index <= max_index of the presented group, one complete
/// standardized coset table each. Exhaustive; throws BudgetExceeded rather
/// than truncating.
inline std::vector<CosetTable> low_index_subgroup_tables(const Presentation& p, int max_index,
                                                         const SearchBudget& budget = {}) {
  return detail::LowIndexSearch(p, max_index, budget).run();
}

/// The subgroup of a complete table is normal iff the coset action is
/// regular, i.e. the permutation group generated by the columns has order
/// exactly num_cosets.
inline bool table_subgroup_is_normal(const CosetTable& t) {
  std::vector<std::vector<int>> gens;
  for (int g = 1; g <= t.ngens; ++g) {
    std::vector<int> perm(static_cast<std::size_t>(t.num_cosets));
    for (int c = 0; c < t.num_cosets; ++c)
      perm[static_cast<std::size_t>(c)] = t.at(c, CosetTable::column(g));
    gens.push_back(std::move(perm));
  }
  try {
    auto pg = group_from_permutations(gens, t.num_cosets, t.num_cosets);
    return pg.group.order == t.num_cosets;
  } catch (const std::runtime_error&) {
    return false;  // closure exceeded the cap: action is not regular
  }
}

/// The quotient by a normal subgroup, as the regular coset action. When the
/// presentation carries peripheral marks, the image of the first mark's
/// generators is attached as the marked subgroup.
inline FiniteGroup quotient_from_table(const Presentation& p, const CosetTable& t) {
  std::vector<std::vector<int>> gens;
  for (int g = 1; g <= t.ngens; ++g) {
    std::vector<int> perm(static_cast<std::size_t>(t.num_cosets));
    for (int c = 0; c < t.num_cosets; ++c)
      perm[static_cast<std::size_t>(c)] = t.at(c, CosetTable::column(g));
    gens.push_back(std::move(perm));
  }
  auto pg = group_from_permutations(gens, t.num_cosets, t.num_cosets);
  if (pg.group.order != t.num_cosets)
    throw std::logic_error("quotient_from_table: subgroup is not normal");

  if (p.peripheral_marks.empty()) return pg.group;

  // Element of the regular group reached from coset 0 by a word.
  std::vector<int> elt_of_coset(static_cast<std::size_t>(t.num_cosets));
  for (int e = 0; e < pg.group.order; ++e)
    elt_of_coset[static_cast<std::size_t>(pg.elements[static_cast<std::size_t>(e)][0])] = e;

  std::vector<int> seeds;
  for (const auto& w : p.peripheral_marks.front().generators)
    seeds.push_back(elt_of_coset[static_cast<std::size_t>(t.trace(0, w))]);
  auto mark = subgroup_closure(pg.group, seeds);
  return make_finite_group(pg.group.order, pg.group.table, std::move(mark));
}

/// One FiniteGroup per normal subgroup of index <= max_index, in the
/// deterministic enumeration order of the table search.
inline std::vector<FiniteGroup> low_index_normal_quotients(const Presentation& p, int max_index,
                                                           const SearchBudget& budget = {}) {
  std::vector<FiniteGroup> out;
  for (const auto& t : low_index_subgroup_tables(p, max_index, budget))
    if (table_subgroup_is_normal(t)) out.push_back(quotient_from_table(p, t));
  return out;
}

}  // namespace sfq

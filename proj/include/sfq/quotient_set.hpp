#pragma once

// Deduplicated sets of finite quotients (or quotient pairs) of a finite
// presentation up to an index bound, set comparison with witnesses, the
// G(n) tower, and homomorphism-count signatures against the built-in
// catalogue.

#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "sfq/catalogue.hpp"
#include "sfq/finite_group.hpp"
#include "sfq/ints.hpp"
#include "sfq/low_index.hpp"
#include "sfq/presentation.hpp"

namespace sfq {

struct QuotientClass {
  FiniteGroup group;
  std::string group_fingerprint;
};

struct QuotientSet {
  int bound = 1;
  bool paired = false;
  std::vector<QuotientClass> classes;
};

namespace detail {

inline std::string base64_encode(const std::vector<unsigned char>& bytes) {
  static const char* alphabet =
      "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789+/";
  std::string out;
  std::size_t i = 0;
  while (i + 2 < bytes.size()) {
    unsigned v = (bytes[i] << 16) | (bytes[i + 1] << 8) | bytes[i + 2];
    out += alphabet[(v >> 18) & 63];
    out += alphabet[(v >> 12) & 63];
    out += alphabet[(v >> 6) & 63];
    out += alphabet[v & 63];
    i += 3;
  }
  if (i + 1 == bytes.size()) {
    unsigned v = bytes[i] << 16;
    out += alphabet[(v >> 18) & 63];
    out += alphabet[(v >> 12) & 63];
    out += "==";
  } else if (i + 2 == bytes.size()) {
    unsigned v = (bytes[i] << 16) | (bytes[i + 1] << 8);
    out += alphabet[(v >> 18) & 63];
    out += alphabet[(v >> 12) & 63];
    out += alphabet[(v >> 6) & 63];
    out += "=";
  }
  return out;
}

/// Row-major table bytes: one byte per entry for order <= 256, else
/// two-byte little endian.
inline std::vector<unsigned char> table_bytes(const FiniteGroup& g) {
  std::vector<unsigned char> bytes;
  if (g.order <= 256) {
    for (int v : g.table) bytes.push_back(static_cast<unsigned char>(v));
  } else {
    for (int v : g.table) {
      bytes.push_back(static_cast<unsigned char>(v & 0xff));
      bytes.push_back(static_cast<unsigned char>((v >> 8) & 0xff));
    }
  }
  return bytes;
}

inline bool class_less(const QuotientClass& a, const QuotientClass& b) {
  if (a.group.order != b.group.order) return a.group.order < b.group.order;
  if (a.group_fingerprint != b.group_fingerprint)
    return a.group_fingerprint < b.group_fingerprint;
  if (a.group.table != b.group.table) return a.group.table < b.group.table;
  return a.group.mark < b.group.mark;
}

inline bool same_class(const QuotientClass& a, const QuotientClass& b, bool paired) {
  if (a.group.order != b.group.order || a.group_fingerprint != b.group_fingerprint)
    return false;
  return paired ? pair_iso(a.group, b.group) : finite_group_iso(a.group, b.group);
}

}  // namespace detail

/// Quotient (or quotient-pair) classes of index <= bound, deduplicated and
/// canonically sorted.
inline QuotientSet quotient_set(const Presentation& p, int bound, bool paired,
                                const SearchBudget& budget = {}) {
  if (paired && p.peripheral_marks.empty())
    throw std::invalid_argument("quotient_set: paired comparison needs a peripheral mark");
  QuotientSet qs;
  qs.bound = bound;
  qs.paired = paired;
  for (auto& g : low_index_normal_quotients(p, bound, budget)) {
    QuotientClass cls{std::move(g), {}};
    cls.group_fingerprint = fingerprint(cls.group);
    bool duplicate = false;
    for (const auto& seen : qs.classes) {
      if (detail::same_class(seen, cls, paired)) {
        duplicate = true;
        break;
      }
    }
    if (!duplicate) qs.classes.push_back(std::move(cls));
  }
  std::sort(qs.classes.begin(), qs.classes.end(), detail::class_less);
  return qs;
}

/// One line per class: order, fingerprint, base64 table, mark elements.
inline std::string serialize(const QuotientSet& qs) {
  std::ostringstream os;
  for (const auto& cls : qs.classes) {
    os << "order=" << cls.group.order << " fingerprint=" << cls.group_fingerprint
       << " table=" << detail::base64_encode(detail::table_bytes(cls.group)) << " mark=";
    if (cls.group.mark) {
      for (std::size_t i = 0; i < cls.group.mark->size(); ++i) {
        if (i) os << ',';
        os << (*cls.group.mark)[i];
      }
    } else {
      os << "none";
    }
    os << '\n';
  }
  return os.str();
}

struct CompareResult {
  bool equal = false;
  int witness_side = 0;  // 1: class of the first set only, 2: second only
  std::optional<QuotientClass> witness;
};

/// Set comparison of quotient (pair) classes, with a witness class present
/// on exactly one side when unequal.
inline CompareResult compare_quotient_sets(const Presentation& p, const Presentation& q,
                                           int bound, bool paired,
                                           const SearchBudget& budget = {}) {
  QuotientSet qp = quotient_set(p, bound, paired, budget);
  QuotientSet qq = quotient_set(q, bound, paired, budget);
  auto missing_from = [&](const QuotientSet& a, const QuotientSet& b) -> std::optional<QuotientClass> {
    for (const auto& cls : a.classes) {
      bool found = false;
      for (const auto& other : b.classes) {
        if (detail::same_class(cls, other, paired)) {
          found = true;
          break;
        }
      }
      if (!found) return cls;
    }
    return std::nullopt;
  };
  CompareResult res;
  if (auto w = missing_from(qp, qq)) {
    res.witness_side = 1;
    res.witness = std::move(w);
    return res;
  }
  if (auto w = missing_from(qq, qp)) {
    res.witness_side = 2;
    res.witness = std::move(w);
    return res;
  }
  res.equal = true;
  return res;
}

/// G/G(n) for G(n) the intersection of all normal subgroups of index <= n,
/// realized as the image of G in the product of all such quotients.
struct GnData {
  int bound = 1;
  FiniteGroup quotient;
  std::vector<int> generator_images;  // element index per presentation generator
};

inline GnData g_n(const Presentation& p, int bound, const SearchBudget& budget = {}) {
  auto tables = low_index_subgroup_tables(p, bound, budget);
  std::vector<const CosetTable*> normal;
  for (const auto& t : tables)
    if (table_subgroup_is_normal(t)) normal.push_back(&t);
  if (normal.empty()) throw std::logic_error("g_n: no normal subgroups found");

  int degree = 0;
  for (const auto* t : normal) degree += t->num_cosets;
  std::vector<std::vector<int>> gens;
  for (int g = 1; g <= p.generator_count(); ++g) {
    std::vector<int> perm(static_cast<std::size_t>(degree));
    int offset = 0;
    for (const auto* t : normal) {
      for (int c = 0; c < t->num_cosets; ++c)
        perm[static_cast<std::size_t>(offset + c)] = offset + t->at(c, CosetTable::column(g));
      offset += t->num_cosets;
    }
    gens.push_back(std::move(perm));
  }
  auto pg = group_from_permutations(gens, degree);

  // Every enumerated quotient must be an image of G/G(n): the restriction
  // of the joint action to one block is its full regular action.
  int offset = 0;
  for (const auto* t : normal) {
    std::vector<bool> reached(static_cast<std::size_t>(t->num_cosets), false);
    for (const auto& elt : pg.elements) reached[static_cast<std::size_t>(elt[static_cast<std::size_t>(offset)] - offset)] = true;
    for (bool r : reached)
      if (!r) throw std::logic_error("g_n: restriction is not surjective onto a quotient");
    offset += t->num_cosets;
  }
  // The intersection of the realized normal subgroups is trivial in G/G(n):
  // only the identity acts trivially on every block.
  for (int e = 1; e < pg.group.order; ++e) {
    bool all_fixed = true;
    for (int x = 0; x < degree && all_fixed; ++x)
      all_fixed = pg.elements[static_cast<std::size_t>(e)][static_cast<std::size_t>(x)] == x;
    if (all_fixed) throw std::logic_error("g_n: non-trivial kernel in the joint action");
  }

  GnData out;
  out.bound = bound;
  out.quotient = std::move(pg.group);
  out.generator_images = std::move(pg.generator_indices);
  return out;
}

/// Exact number of homomorphisms (not necessarily surjective) from the
/// presented group to each catalogue group of order <= catalogue_bound.
inline std::map<std::string, std::int64_t> hom_count_signature(const Presentation& p,
                                                               int catalogue_bound,
                                                               const SearchBudget& budget = {}) {
  if (catalogue_bound > kCatalogueBound)
    throw std::invalid_argument("hom_count_signature: catalogue covers orders <= 15 only");
  p.validate();
  std::map<std::string, std::int64_t> out;
  const int r = p.generator_count();
  for (const auto& entry : small_groups_catalogue()) {
    if (entry.group.order > catalogue_bound) continue;
    const FiniteGroup& t = entry.group;
    Int tuple_count = 1;
    for (int i = 0; i < r; ++i) tuple_count *= t.order;
    if (tuple_count > budget.max_nodes)
      throw BudgetExceeded("hom_count_signature: tuple space exceeds the budget");

    std::vector<int> images(static_cast<std::size_t>(r), 0);
    std::int64_t count = 0;
    for (;;) {
      bool ok = true;
      for (const auto& rel : p.relators) {
        int e = 0;
        for (int letter : rel) {
          int idx = (letter > 0 ? letter : -letter) - 1;
          int img = images[static_cast<std::size_t>(idx)];
          e = t.at(e, letter > 0 ? img : t.inverse_of(img));
        }
        if (e != 0) {
          ok = false;
          break;
        }
      }
      if (ok) ++count;
      int pos = r - 1;
      while (pos >= 0 && images[static_cast<std::size_t>(pos)] == t.order - 1) {
        images[static_cast<std::size_t>(pos)] = 0;
        --pos;
      }
      if (pos < 0) break;
      ++images[static_cast<std::size_t>(pos)];
    }
    out[entry.name] = count;
  }
  return out;
}

/// Test-oracle path: quotient classes found by brute-force epimorphism
/// search into the catalogue (complete for bound <= kCatalogueBound).
inline std::vector<std::string> catalogue_quotients(const Presentation& p, int bound) {
  if (bound > kCatalogueBound)
    throw std::invalid_argument("catalogue_quotients: catalogue covers orders <= 15 only");
  p.validate();
  std::vector<std::string> names;
  const int r = p.generator_count();
  for (const auto& entry : small_groups_catalogue()) {
    if (entry.group.order > bound) continue;
    const FiniteGroup& t = entry.group;
    std::vector<int> images(static_cast<std::size_t>(r), 0);
    bool found = false;
    for (;;) {
      bool ok = true;
      for (const auto& rel : p.relators) {
        int e = 0;
        for (int letter : rel) {
          int idx = (letter > 0 ? letter : -letter) - 1;
          int img = images[static_cast<std::size_t>(idx)];
          e = t.at(e, letter > 0 ? img : t.inverse_of(img));
        }
        if (e != 0) {
          ok = false;
          break;
        }
      }
      if (ok && subgroup_closure(t, images).size() == static_cast<std::size_t>(t.order)) {
        found = true;
        break;
      }
      int pos = r - 1;
      while (pos >= 0 && images[static_cast<std::size_t>(pos)] == t.order - 1) {
        images[static_cast<std::size_t>(pos)] = 0;
        --pos;
      }
      if (pos < 0) break;
      ++images[static_cast<std::size_t>(pos)];
    }
    if (found) names.push_back(entry.name);
  }
  return names;
}

}  // namespace sfq

#pragma once

// Finite groups as multiplication tables with identity 0, optionally
// carrying a marked subgroup (the image of a peripheral subgroup).
// Isomorphism and pair-isomorphism testing via invariant prefilters and
// backtracking over generator images.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace sfq {

struct FiniteGroup {
  int order = 1;
  std::vector<int> table;                     // row-major: table[i*order+j] = i*j
  std::optional<std::vector<int>> mark;       // sorted element set, closed subgroup

  int at(int i, int j) const { return table[static_cast<std::size_t>(i) * order + j]; }

  int inverse_of(int i) const {
    for (int j = 0; j < order; ++j)
      if (at(i, j) == 0) return j;
    throw std::logic_error("FiniteGroup: no inverse");
  }

  int element_order(int i) const {
    int e = i, n = 1;
    while (e != 0) {
      e = at(e, i);
      ++n;
    }
    return n;
  }
};

/// Construct with full checks: identity 0, latin square, inverses,
/// associativity, and (when present) closure of the marked subgroup.
inline FiniteGroup make_finite_group(int order, std::vector<int> table,
                                     std::optional<std::vector<int>> mark = std::nullopt) {
  if (order < 1 || static_cast<std::size_t>(order) * order != table.size())
    throw std::invalid_argument("FiniteGroup: bad table size");
  FiniteGroup g;
  g.order = order;
  g.table = std::move(table);
  for (int i = 0; i < order; ++i) {
    if (g.at(0, i) != i || g.at(i, 0) != i)
      throw std::invalid_argument("FiniteGroup: 0 is not an identity");
    std::vector<bool> row(order, false), col(order, false);
    for (int j = 0; j < order; ++j) {
      int r = g.at(i, j), c = g.at(j, i);
      if (r < 0 || r >= order || c < 0 || c >= order || row[r] || col[c])
        throw std::invalid_argument("FiniteGroup: table is not a latin square");
      row[r] = col[c] = true;
    }
  }
  for (int i = 0; i < order; ++i) g.inverse_of(i);
  for (int i = 0; i < order; ++i)
    for (int j = 0; j < order; ++j)
      for (int k = 0; k < order; ++k)
        if (g.at(g.at(i, j), k) != g.at(i, g.at(j, k)))
          throw std::invalid_argument("FiniteGroup: table is not associative");
  if (mark) {
    std::sort(mark->begin(), mark->end());
    for (int a : *mark) {
      if (a < 0 || a >= order) throw std::invalid_argument("FiniteGroup: mark out of range");
      for (int b : *mark)
        if (!std::binary_search(mark->begin(), mark->end(), g.at(a, b)))
          throw std::invalid_argument("FiniteGroup: mark is not closed under products");
      if (!std::binary_search(mark->begin(), mark->end(), g.inverse_of(a)))
        throw std::invalid_argument("FiniteGroup: mark is not closed under inverses");
    }
    if (mark->empty() || (*mark)[0] != 0)
      throw std::invalid_argument("FiniteGroup: mark must contain the identity");
    g.mark = std::move(mark);
  }
  return g;
}

/// Subgroup generated by the seeds, as a sorted element list.
inline std::vector<int> subgroup_closure(const FiniteGroup& g, std::vector<int> seeds) {
  std::vector<bool> in(static_cast<std::size_t>(g.order), false);
  std::vector<int> queue;
  auto add = [&](int e) {
    if (!in[static_cast<std::size_t>(e)]) {
      in[static_cast<std::size_t>(e)] = true;
      queue.push_back(e);
    }
  };
  add(0);
  for (int s : seeds) add(s);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int a = queue[head];
    for (std::size_t other = 0; other <= head; ++other) {
      add(g.at(a, queue[other]));
      add(g.at(queue[other], a));
    }
    add(g.inverse_of(a));
  }
  std::vector<int> out;
  for (int e = 0; e < g.order; ++e)
    if (in[static_cast<std::size_t>(e)]) out.push_back(e);
  return out;
}

inline std::vector<int> derived_subgroup(const FiniteGroup& g) {
  std::vector<int> comms;
  for (int a = 0; a < g.order; ++a) {
    for (int b = 0; b < g.order; ++b) {
      int c = g.at(g.at(g.at(a, b), g.inverse_of(a)), g.inverse_of(b));
      comms.push_back(c);
    }
  }
  return subgroup_closure(g, comms);
}

inline int center_size(const FiniteGroup& g) {
  int z = 0;
  for (int a = 0; a < g.order; ++a) {
    bool central = true;
    for (int b = 0; b < g.order && central; ++b) central = g.at(a, b) == g.at(b, a);
    if (central) ++z;
  }
  return z;
}

inline std::vector<int> conjugacy_class_sizes(const FiniteGroup& g) {
  std::vector<bool> seen(static_cast<std::size_t>(g.order), false);
  std::vector<int> sizes;
  for (int a = 0; a < g.order; ++a) {
    if (seen[static_cast<std::size_t>(a)]) continue;
    int size = 0;
    for (int x = 0; x < g.order; ++x) {
      int c = g.at(g.at(x, a), g.inverse_of(x));
      if (!seen[static_cast<std::size_t>(c)]) {
        seen[static_cast<std::size_t>(c)] = true;
        ++size;
      }
    }
    sizes.push_back(size);
  }
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

/// Element-order multiset of the quotient by a normal subgroup (used for
/// abelianization invariants with n = derived subgroup).
inline std::vector<int> quotient_element_orders(const FiniteGroup& g, const std::vector<int>& n) {
  std::vector<int> coset_of(static_cast<std::size_t>(g.order), -1);
  std::vector<int> reps;
  for (int e = 0; e < g.order; ++e) {
    if (coset_of[static_cast<std::size_t>(e)] != -1) continue;
    int id = static_cast<int>(reps.size());
    reps.push_back(e);
    for (int h : n) coset_of[static_cast<std::size_t>(g.at(e, h))] = id;
  }
  std::vector<int> orders;
  for (int rep : reps) {
    int e = rep, ord = 1;
    while (coset_of[static_cast<std::size_t>(e)] != coset_of[0]) {
      e = g.at(e, rep);
      ++ord;
    }
    orders.push_back(ord);
  }
  std::sort(orders.begin(), orders.end());
  return orders;
}

namespace detail {

inline void fnv_mix(std::uint64_t& h, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) {
    h ^= (v >> (8 * i)) & 0xff;
    h *= 1099511628211ull;
  }
}

}  // namespace detail

/// Isomorphism-invariant fingerprint (order, element orders, center and
/// derived sizes, conjugacy class sizes, abelianization orders), as hex.
/// Marks are not part of the group fingerprint.
inline std::string fingerprint(const FiniteGroup& g) {
  std::uint64_t h = 1469598103934665603ull;
  detail::fnv_mix(h, static_cast<std::uint64_t>(g.order));
  std::vector<int> orders;
  for (int e = 0; e < g.order; ++e) orders.push_back(g.element_order(e));
  std::sort(orders.begin(), orders.end());
  for (int o : orders) detail::fnv_mix(h, static_cast<std::uint64_t>(o));
  detail::fnv_mix(h, static_cast<std::uint64_t>(center_size(g)));
  auto derived = derived_subgroup(g);
  detail::fnv_mix(h, static_cast<std::uint64_t>(derived.size()));
  for (int s : conjugacy_class_sizes(g)) detail::fnv_mix(h, static_cast<std::uint64_t>(s));
  for (int o : quotient_element_orders(g, derived)) detail::fnv_mix(h, static_cast<std::uint64_t>(o));
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

namespace detail {

/// Greedy minimal generating sequence.
inline std::vector<int> generating_sequence(const FiniteGroup& g) {
  std::vector<int> gens;
  std::vector<int> closure = {0};
  while (static_cast<int>(closure.size()) < g.order) {
    int next = -1;
    for (int e = 0; e < g.order; ++e) {
      if (!std::binary_search(closure.begin(), closure.end(), e)) {
        next = e;
        break;
      }
    }
    gens.push_back(next);
    closure = subgroup_closure(g, gens);
  }
  return gens;
}

struct BfsWords {
  std::vector<int> parent;  // element -> previous element
  std::vector<int> via;     // element -> generator index used
  std::vector<int> order;   // discovery order, starts with 0
};

inline BfsWords bfs_words(const FiniteGroup& g, const std::vector<int>& gens) {
  BfsWords b;
  b.parent.assign(static_cast<std::size_t>(g.order), -1);
  b.via.assign(static_cast<std::size_t>(g.order), -1);
  b.order.push_back(0);
  b.parent[0] = 0;
  for (std::size_t head = 0; head < b.order.size(); ++head) {
    int e = b.order[head];
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
      int f = g.at(e, gens[gi]);
      if (b.parent[static_cast<std::size_t>(f)] == -1) {
        b.parent[static_cast<std::size_t>(f)] = e;
        b.via[static_cast<std::size_t>(f)] = static_cast<int>(gi);
        b.order.push_back(f);
      }
    }
  }
  return b;
}

/// Extend a generator-image assignment to the whole group along BFS words;
/// returns the map iff it is a homomorphism.
inline std::optional<std::vector<int>> extend_hom(const FiniteGroup& a,
                                                  const std::vector<int>& gens,
                                                  const BfsWords& bfs, const FiniteGroup& b,
                                                  const std::vector<int>& images) {
  std::vector<int> phi(static_cast<std::size_t>(a.order), -1);
  phi[0] = 0;
  for (std::size_t i = 1; i < bfs.order.size(); ++i) {
    int e = bfs.order[i];
    phi[static_cast<std::size_t>(e)] =
        b.at(phi[static_cast<std::size_t>(bfs.parent[static_cast<std::size_t>(e)])],
             images[static_cast<std::size_t>(bfs.via[static_cast<std::size_t>(e)])]);
  }
  // phi(x g_i) = phi(x) phi(g_i) for all x, i forces multiplicativity.
  for (int x = 0; x < a.order; ++x) {
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
      if (phi[static_cast<std::size_t>(a.at(x, gens[gi]))] !=
          b.at(phi[static_cast<std::size_t>(x)], images[gi]))
        return std::nullopt;
    }
  }
  return phi;
}

}  // namespace detail

/// First isomorphism A -> B found (as an element map), optionally required
/// to carry A's mark exactly onto B's. Exhaustive over generator images, so
/// conjugate marks are matched through inner twists automatically.
inline std::optional<std::vector<int>> find_isomorphism(const FiniteGroup& a,
                                                        const FiniteGroup& b,
                                                        bool match_marks) {
  if (a.order != b.order) return std::nullopt;
  if (match_marks) {
    if (!a.mark || !b.mark) throw std::invalid_argument("find_isomorphism: mark missing");
    if (a.mark->size() != b.mark->size()) return std::nullopt;
  }
  if (a.order == 1) return std::vector<int>{0};

  auto gens = detail::generating_sequence(a);
  auto bfs = detail::bfs_words(a, gens);

  // Candidate images grouped by element order.
  std::vector<std::vector<int>> candidates(gens.size());
  for (std::size_t gi = 0; gi < gens.size(); ++gi) {
    int want = a.element_order(gens[gi]);
    for (int e = 0; e < b.order; ++e)
      if (b.element_order(e) == want) candidates[gi].push_back(e);
  }

  std::vector<int> images(gens.size(), -1);
  std::vector<std::vector<int>> a_partial(gens.size() + 1), b_partial(gens.size() + 1);
  a_partial[0] = {0};
  for (std::size_t i = 0; i < gens.size(); ++i)
    a_partial[i + 1] = subgroup_closure(a, {gens.begin(), gens.begin() + static_cast<long>(i) + 1});

  std::optional<std::vector<int>> found;
  auto dfs = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == gens.size()) {
      auto phi = detail::extend_hom(a, gens, bfs, b, images);
      if (!phi) return false;
      std::vector<bool> hit(static_cast<std::size_t>(b.order), false);
      for (int v : *phi) {
        if (hit[static_cast<std::size_t>(v)]) return false;
        hit[static_cast<std::size_t>(v)] = true;
      }
      if (match_marks) {
        std::vector<int> image_mark;
        for (int e : *a.mark) image_mark.push_back((*phi)[static_cast<std::size_t>(e)]);
        std::sort(image_mark.begin(), image_mark.end());
        if (image_mark != *b.mark) return false;
      }
      found = std::move(*phi);
      return true;
    }
    for (int cand : candidates[depth]) {
      images[depth] = cand;
      std::vector<int> seeds(images.begin(), images.begin() + static_cast<long>(depth) + 1);
      if (subgroup_closure(b, seeds).size() != a_partial[depth + 1].size()) continue;
      if (self(self, depth + 1)) return true;
    }
    return false;
  };
  dfs(dfs, 0);
  return found;
}

inline bool finite_group_iso(const FiniteGroup& a, const FiniteGroup& b) {
  if (a.order != b.order) return false;
  if (fingerprint(a) != fingerprint(b)) return false;
  return find_isomorphism(a, b, false).has_value();
}

/// Pair isomorphism: some isomorphism maps the mark exactly onto the mark.
inline bool pair_iso(const FiniteGroup& a, const FiniteGroup& b) {
  if (!a.mark || !b.mark) throw std::invalid_argument("pair_iso: mark missing");
  if (a.order != b.order || a.mark->size() != b.mark->size()) return false;
  if (fingerprint(a) != fingerprint(b)) return false;
  {
    std::vector<int> oa, ob;
    for (int e : *a.mark) oa.push_back(a.element_order(e));
    for (int e : *b.mark) ob.push_back(b.element_order(e));
    std::sort(oa.begin(), oa.end());
    std::sort(ob.begin(), ob.end());
    if (oa != ob) return false;
  }
  return find_isomorphism(a, b, true).has_value();
}

/// Does some surjective homomorphism A ->> B exist?
inline bool finite_group_epi(const FiniteGroup& a, const FiniteGroup& b) {
  if (b.order == 1) return true;
  if (a.order % b.order != 0) return false;
  auto gens = detail::generating_sequence(a);
  auto bfs = detail::bfs_words(a, gens);

  std::vector<std::vector<int>> candidates(gens.size());
  for (std::size_t gi = 0; gi < gens.size(); ++gi) {
    int want = a.element_order(gens[gi]);
    for (int e = 0; e < b.order; ++e)
      if (want % b.element_order(e) == 0) candidates[gi].push_back(e);
  }

  std::vector<int> images(gens.size(), -1);
  auto dfs = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == gens.size()) {
      if (subgroup_closure(b, images).size() != static_cast<std::size_t>(b.order)) return false;
      return detail::extend_hom(a, gens, bfs, b, images).has_value();
    }
    for (int cand : candidates[depth]) {
      images[depth] = cand;
      if (self(self, depth + 1)) return true;
    }
    return false;
  };
  return dfs(dfs, 0);
}

/// A permutation group given by generators, closed into a FiniteGroup whose
/// element 0 is the identity; composition is "apply left, then right".
struct PermGroup {
  FiniteGroup group;
  std::vector<std::vector<int>> elements;  // element index -> permutation
  std::vector<int> generator_indices;      // input generator -> element index
};

inline PermGroup group_from_permutations(const std::vector<std::vector<int>>& gens,
                                         int degree, int max_order = 1 << 20) {
  for (const auto& p : gens) {
    if (static_cast<int>(p.size()) != degree)
      throw std::invalid_argument("group_from_permutations: degree mismatch");
    std::vector<bool> seen(static_cast<std::size_t>(degree), false);
    for (int v : p) {
      if (v < 0 || v >= degree || seen[static_cast<std::size_t>(v)])
        throw std::invalid_argument("group_from_permutations: not a permutation");
      seen[static_cast<std::size_t>(v)] = true;
    }
  }
  std::vector<int> identity(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) identity[static_cast<std::size_t>(i)] = i;

  std::map<std::vector<int>, int> index;
  std::vector<std::vector<int>> elements;
  elements.push_back(identity);
  index[identity] = 0;
  for (std::size_t head = 0; head < elements.size(); ++head) {
    std::vector<int> base = elements[head];
    for (const auto& g : gens) {
      std::vector<int> next(static_cast<std::size_t>(degree));
      for (int i = 0; i < degree; ++i)
        next[static_cast<std::size_t>(i)] = g[static_cast<std::size_t>(base[static_cast<std::size_t>(i)])];
      if (index.emplace(next, static_cast<int>(elements.size())).second) {
        elements.push_back(std::move(next));
        if (static_cast<int>(elements.size()) > max_order)
          throw std::runtime_error("group_from_permutations: order exceeds cap");
      }
    }
  }

  int n = static_cast<int>(elements.size());
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      std::vector<int> prod(static_cast<std::size_t>(degree));
      for (int x = 0; x < degree; ++x)
        prod[static_cast<std::size_t>(x)] =
            elements[static_cast<std::size_t>(j)]
                    [static_cast<std::size_t>(elements[static_cast<std::size_t>(i)][static_cast<std::size_t>(x)])];
      table[static_cast<std::size_t>(i) * n + j] = index.at(prod);
    }
  }

  PermGroup out;
  out.group = make_finite_group(n, std::move(table));
  out.elements = std::move(elements);
  for (const auto& g : gens) out.generator_indices.push_back(index.at(g));
  return out;
}

}  // namespace sfq

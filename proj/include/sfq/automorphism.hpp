#pragma once

// Automorphisms of free and closed-surface groups given by generator
// images, with a declared outer order n and an inner witness g realizing
// psi^n = conjugation by g.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "sfq/ints.hpp"
#include "sfq/words.hpp"

namespace sfq {

/// Solvable-word-problem wrapper for the supported fiber groups: free
/// groups and closed orientable surface groups.
struct WordReducer {
  bool is_free = true;
  int rank = 0;          // number of generators
  std::int64_t genus = 0;  // surface case only (rank = 2 * genus)

  static WordReducer free_group(int rank) { return {true, rank, 0}; }
  static WordReducer surface_group(std::int64_t genus) {
    return {false, static_cast<int>(2 * genus), genus};
  }

  Word reduce(const Word& w) const {
    for (int letter : w) {
      int idx = letter > 0 ? letter : -letter;
      if (idx < 1 || idx > rank)
        throw std::invalid_argument("WordReducer: letter out of range");
    }
    return is_free ? free_reduce(w) : dehn_reduce(w, genus);
  }

  bool is_trivial(const Word& w) const { return reduce(w).empty(); }
};

/// An automorphism psi of the fiber group N with declared order n and inner
/// witness g (psi^n = conjugation by g). Inverse images are supplied, not
/// derived, and everything is checked by validate().
struct FreeAutomorphism {
  std::vector<Word> images;
  std::vector<Word> inverse_images;
  std::int64_t order = 1;
  Word inner_witness;

  int rank() const { return static_cast<int>(images.size()); }

  static FreeAutomorphism identity(int rank) {
    FreeAutomorphism psi;
    psi.order = 1;
    for (int i = 1; i <= rank; ++i) {
      psi.images.push_back({i});
      psi.inverse_images.push_back({i});
    }
    return psi;
  }
};

/// Substitute generator images into w (letter x^e -> images[x]^e).
inline Word apply_images(const std::vector<Word>& images, const Word& w) {
  Word out;
  for (int letter : w) {
    int idx = letter > 0 ? letter : -letter;
    if (idx < 1 || idx > static_cast<int>(images.size()))
      throw std::invalid_argument("apply_images: letter out of range");
    const Word& img = images[static_cast<std::size_t>(idx - 1)];
    if (letter > 0) {
      out.insert(out.end(), img.begin(), img.end());
    } else {
      Word inv = inverse_word(img);
      out.insert(out.end(), inv.begin(), inv.end());
    }
  }
  return free_reduce(out);
}

inline Word apply_automorphism(const FreeAutomorphism& psi, const Word& w) {
  return apply_images(psi.images, w);
}

inline Word apply_iterated(const FreeAutomorphism& psi, std::int64_t times, Word w) {
  for (std::int64_t i = 0; i < times; ++i) w = apply_automorphism(psi, w);
  return w;
}

/// Checks that psi is an automorphism of the reducer's group (both
/// composition directions are the identity, and for surface groups the
/// relator maps to the identity) and that the declared order and inner
/// witness satisfy psi^n(x) = g x g^{-1}.
inline void validate(const FreeAutomorphism& psi, const WordReducer& n_group) {
  if (psi.rank() != n_group.rank ||
      static_cast<int>(psi.inverse_images.size()) != n_group.rank)
    throw std::invalid_argument("FreeAutomorphism: image count does not match the group rank");
  if (psi.order < 1) throw std::invalid_argument("FreeAutomorphism: order must be >= 1");

  if (!n_group.is_free) {
    Word r = surface_relator(n_group.genus);
    if (!n_group.is_trivial(apply_images(psi.images, r)) ||
        !n_group.is_trivial(apply_images(psi.inverse_images, r)))
      throw std::invalid_argument("FreeAutomorphism: images do not respect the surface relator");
  }

  for (int x = 1; x <= n_group.rank; ++x) {
    Word fwd = apply_images(psi.inverse_images, apply_images(psi.images, {x}));
    Word bwd = apply_images(psi.images, apply_images(psi.inverse_images, {x}));
    if (n_group.reduce(fwd) != Word{x} || n_group.reduce(bwd) != Word{x})
      throw std::invalid_argument("FreeAutomorphism: inverse images are not inverse");
  }

  for (int x = 1; x <= n_group.rank; ++x) {
    Word lhs = apply_iterated(psi, psi.order, {x});
    Word rhs = concat(concat(psi.inner_witness, {x}), inverse_word(psi.inner_witness));
    if (n_group.reduce(concat(lhs, inverse_word(rhs))) != Word{})
      throw std::invalid_argument(
          "FreeAutomorphism: psi^order is not conjugation by the declared witness");
  }
}

/// Exact integer power psi^k for any k, using psi^{dn+m} = i_{g^d} o psi^m.
/// The result carries declared order n with witness g^k.
inline FreeAutomorphism automorphism_power(const FreeAutomorphism& psi, std::int64_t k) {
  const std::int64_t n = psi.order;
  FreeAutomorphism inv;
  inv.images = psi.inverse_images;
  inv.inverse_images = psi.images;
  inv.order = n;
  inv.inner_witness = inverse_word(psi.inner_witness);

  auto power_images = [n](const FreeAutomorphism& base, std::int64_t e) {
    std::int64_t m = mod_floor(e, n);
    std::int64_t d = (e - m) / n;
    Word gd = word_pow(base.inner_witness, d);
    Word gd_inv = inverse_word(gd);
    std::vector<Word> out;
    for (int x = 1; x <= base.rank(); ++x) {
      Word w = apply_iterated(base, m, {x});
      out.push_back(free_reduce(concat(concat(gd, w), gd_inv)));
    }
    return out;
  };

  FreeAutomorphism result;
  result.order = n;
  result.images = power_images(psi, k);
  result.inverse_images = power_images(inv, k);
  result.inner_witness = free_reduce(word_pow(psi.inner_witness, k));
  return result;
}

/// Find w with u = w d w^{-1} in the free group, if one exists.
inline std::optional<Word> find_conjugator(const Word& u, const Word& d) {
  auto [sigma_u, core_u] = cyclic_reduce(u);
  auto [sigma_d, core_d] = cyclic_reduce(d);
  if (core_u.size() != core_d.size()) return std::nullopt;
  if (core_u.empty()) return Word{};
  for (std::size_t split = 0; split < core_d.size(); ++split) {
    Word rot(core_d.begin() + split, core_d.end());
    rot.insert(rot.end(), core_d.begin(), core_d.begin() + split);
    if (rot != core_u) continue;
    Word p(core_d.begin(), core_d.begin() + split);
    Word w = free_reduce(concat(concat(sigma_u, inverse_word(p)), inverse_word(sigma_d)));
    return w;
  }
  return std::nullopt;
}

}  // namespace sfq

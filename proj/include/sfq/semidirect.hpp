#pragma once

// Mapping-torus presentations G_psi = N x| Z, the central direct factor
// G x Z, the exact normal form for these groups, and the explicit basis
// change exhibiting G_psi x Z = G_{psi^k} x Z for gcd(k, order(psi)) = 1.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sfq/automorphism.hpp"
#include "sfq/presentation.hpp"

namespace sfq {

/// <N, t | R_N, t x t^-1 psi(x)^-1>. A pure presentation template: psi is
/// not validated here beyond its image words being over N's generators.
/// Peripheral marks {d} of N are carried to {d, w^-1 t} where
/// psi(d) = w d w^-1; the new second generator commutes with d, realizing
/// the boundary torus subgroup.
inline Presentation build_semidirect(const Presentation& n_pres, const FreeAutomorphism& psi,
                                     const std::string& t_name = "t") {
  if (psi.rank() != n_pres.generator_count())
    throw std::invalid_argument("build_semidirect: image count does not match presentation");
  for (const auto& img : psi.images)
    for (int letter : img) {
      int idx = letter > 0 ? letter : -letter;
      if (idx < 1 || idx > n_pres.generator_count())
        throw std::invalid_argument("build_semidirect: image word references unknown generators");
    }

  Presentation p;
  p.generator_names = n_pres.generator_names;
  p.generator_names.push_back(t_name);
  const int t = p.generator_count();
  p.relators = n_pres.relators;
  for (int x = 1; x < t; ++x) {
    Word rel = {t, x, -t};
    Word img_inv = inverse_word(psi.images[static_cast<std::size_t>(x - 1)]);
    rel.insert(rel.end(), img_inv.begin(), img_inv.end());
    p.relators.push_back(free_reduce(rel));
  }

  for (const auto& mark : n_pres.peripheral_marks) {
    if (mark.generators.size() != 1)
      throw std::invalid_argument(
          "build_semidirect: only single-curve peripheral marks are supported");
    const Word& d = mark.generators[0];
    auto w = find_conjugator(apply_automorphism(psi, d), free_reduce(d));
    if (!w)
      throw std::invalid_argument(
          "build_semidirect: peripheral curve is not preserved up to conjugacy");
    PeripheralMark carried;
    carried.name = mark.name;
    carried.extend_with_center = mark.extend_with_center;
    carried.generators.push_back(free_reduce(d));
    carried.generators.push_back(free_reduce(concat(inverse_word(*w), Word{t})));
    p.peripheral_marks.push_back(std::move(carried));
  }
  p.validate();
  return p;
}

/// G x Z: add a generator commuting with everything. Marks flagged as
/// "x Z" gain the new generator.
inline Presentation direct_with_Z(const Presentation& g, const std::string& s_name = "s") {
  Presentation p = g;
  p.generator_names.push_back(s_name);
  const int s = p.generator_count();
  for (int x = 1; x < s; ++x) p.relators.push_back(commutator(s, x));
  for (auto& mark : p.peripheral_marks)
    if (mark.extend_with_center) mark.generators.push_back(Word{s});
  p.validate();
  return p;
}

/// Word-problem context for <N, t [, s]> with t acting on N by phi and s
/// central: every element has the unique form (N-part) t^p s^q. Requires
/// the fiber word problem to be solvable (free or closed-surface N); the
/// automorphism, its declared order, and its inner witness are verified.
struct SemidirectContext {
  WordReducer fiber;
  FreeAutomorphism phi;
  bool has_s = false;

  int t_index() const { return fiber.rank + 1; }
  int s_index() const { return fiber.rank + 2; }

  /// phi^p applied to the single letter x^sign, exact for any integer p
  /// via phi^{dn+m} = i_{g^d} o phi^m.
  Word twist(int letter, std::int64_t p) const {
    std::int64_t m = mod_floor(p, phi.order);
    std::int64_t d = (p - m) / phi.order;
    Word w = apply_iterated(phi, m, Word{letter});
    Word gd = word_pow(phi.inner_witness, d);
    return free_reduce(concat(concat(gd, w), inverse_word(gd)));
  }
};

inline SemidirectContext semidirect_context(const WordReducer& fiber,
                                            const FreeAutomorphism& phi, bool has_s) {
  validate(phi, fiber);
  return SemidirectContext{fiber, phi, has_s};
}

struct SemidirectNormalForm {
  Word fiber_part;
  std::int64_t t_exponent = 0;
  std::int64_t s_exponent = 0;
  bool trivial() const { return fiber_part.empty() && t_exponent == 0 && s_exponent == 0; }
  friend bool operator==(const SemidirectNormalForm&, const SemidirectNormalForm&) = default;
};

/// Collect t and s to the right: w = nu t^p s^q with nu in N reduced.
/// w is trivial in the group iff all three components are trivial.
inline SemidirectNormalForm semidirect_normal_form(const Word& w, const SemidirectContext& ctx) {
  SemidirectNormalForm nf;
  for (int letter : w) {
    int idx = letter > 0 ? letter : -letter;
    if (idx >= 1 && idx <= ctx.fiber.rank) {
      // nu t^p ... x = nu (t^p x t^-p) t^p ...
      Word moved = ctx.twist(letter, nf.t_exponent);
      nf.fiber_part = ctx.fiber.reduce(concat(nf.fiber_part, moved));
    } else if (idx == ctx.t_index()) {
      nf.t_exponent += letter > 0 ? 1 : -1;
    } else if (ctx.has_s && idx == ctx.s_index()) {
      nf.s_exponent += letter > 0 ? 1 : -1;
    } else {
      throw std::invalid_argument("semidirect_normal_form: letter outside <N, t, s>");
    }
  }
  nf.fiber_part = ctx.fiber.reduce(nf.fiber_part);
  return nf;
}

/// Basis change (u, v) with u n + v k = 1 behind the isomorphism
/// G_psi x Z -> G_{psi^k} x Z; the exponent-lattice matrix with rows
/// (k, -u), (n, v) is unimodular.
struct BasisChange {
  std::int64_t k = 1;
  std::int64_t n = 1;
  std::int64_t u = 0;
  std::int64_t v = 1;
};

struct Lemma21Result {
  BasisChange basis;
  Presentation source;             // <N, t, s> = G_psi x Z
  Presentation target;             // <N, tau, sigma> = G_{psi^k} x Z
  SemidirectContext target_context;
  /// Source generator name -> its image as a word in the target.
  std::vector<std::pair<std::string, Word>> generator_map;
};

namespace detail {

inline Word map_word(const Word& w, const std::vector<Word>& gen_images) {
  Word out;
  for (int letter : w) {
    int idx = letter > 0 ? letter : -letter;
    const Word& img = gen_images[static_cast<std::size_t>(idx - 1)];
    if (letter > 0) {
      out.insert(out.end(), img.begin(), img.end());
    } else {
      Word inv = inverse_word(img);
      out.insert(out.end(), inv.begin(), inv.end());
    }
  }
  return free_reduce(out);
}

}  // namespace detail

/// The explicit isomorphism f: G_psi x Z -> G_{psi^k} x Z fixing N, with
/// f(t) = tau^v (g sigma)^u and f(s) = tau^{-n} (g sigma)^k for
/// u n + v k = 1. Every relator image is machine-checked to reduce to the
/// identity in the target's normal form.
inline Lemma21Result lemma21_iso(const Presentation& n_pres, const WordReducer& n_group,
                                 const FreeAutomorphism& psi, std::int64_t k) {
  const std::int64_t n = psi.order;
  if (std::gcd(k, n) != 1)
    throw std::invalid_argument("lemma21_iso: k must be coprime to order(psi)");
  if (n_group.rank != n_pres.generator_count())
    throw std::invalid_argument("lemma21_iso: reducer rank does not match presentation");
  validate(psi, n_group);

  Lemma21Result res;
  res.source = direct_with_Z(build_semidirect(n_pres, psi, "t"), "s");
  FreeAutomorphism psi_k = automorphism_power(psi, k);
  res.target = direct_with_Z(build_semidirect(n_pres, psi_k, "tau"), "sigma");
  res.target_context = semidirect_context(n_group, psi_k, true);

  auto [g, u, v] = ext_gcd(n, k);
  if (g < 0) { g = -g; u = -u; v = -v; }
  if (g != 1) throw std::logic_error("lemma21_iso: Bezout failure");
  res.basis = {k, n, u, v};
  // Unimodularity of the exponent-lattice map t -> (v, u), s -> (-n, k).
  if (v * k + u * n != 1) throw std::logic_error("lemma21_iso: lattice map not unimodular");

  const int rank = n_group.rank;
  const int tau = rank + 1, sigma = rank + 2;
  const Word g_sigma = concat(psi.inner_witness, {sigma});

  Word f_t = concat(word_pow({tau}, v), word_pow(g_sigma, u));
  Word f_s = concat(word_pow({tau}, -n), word_pow(g_sigma, k));
  f_t = free_reduce(f_t);
  f_s = free_reduce(f_s);

  std::vector<Word> gen_images;
  for (int x = 1; x <= rank; ++x) gen_images.push_back(Word{x});
  gen_images.push_back(f_t);
  gen_images.push_back(f_s);

  for (int x = 1; x <= rank + 2; ++x)
    res.generator_map.emplace_back(res.source.generator_names[x - 1],
                                   gen_images[static_cast<std::size_t>(x - 1)]);

  for (const auto& rel : res.source.relators) {
    Word image = detail::map_word(rel, gen_images);
    if (!semidirect_normal_form(image, res.target_context).trivial())
      throw std::invalid_argument(
          "lemma21_iso: a relator image does not reduce to the identity "
          "(wrong inner witness?)");
  }
  return res;
}

}  // namespace sfq

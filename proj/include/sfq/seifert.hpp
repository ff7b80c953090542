#pragma once

// Classical Seifert invariants of compact oriented Seifert fibered spaces
// over oriented bases, and the exact calculus on them: classification,
// orientation reversal, monodromy powers, homeomorphism testing, the
// quadratic-residue and torus-knot families, Lens space parameters, and the
// translation to/from periodic surface map data.

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "sfq/ints.hpp"

namespace sfq {

/// One normalized exceptional-fiber invariant beta/alpha,
/// with alpha >= 2, 0 < beta < alpha, gcd(alpha, beta) = 1.
struct FiberInvariant {
  std::int64_t alpha = 2;
  std::int64_t beta = 1;
  friend bool operator==(const FiberInvariant&, const FiberInvariant&) = default;
  friend auto operator<=>(const FiberInvariant&, const FiberInvariant&) = default;
};

enum class Parity { EvenType, OddType };

/// Sign of the orbifold Euler characteristic of the base.
enum class Geometry { Spherical, Euclidean, Hyperbolic };

/// Invariants (g, s [, b]; beta_1/alpha_1, ..., beta_m/alpha_m) of an
/// oriented Seifert fibered space over an oriented base. The obstruction b
/// is present exactly when the manifold is closed (s = 0). Fiber invariants
/// are kept in canonical (alpha, beta)-lexicographic order; non-normalized
/// input is rejected, never repaired.
class SeifertData {
 public:
  SeifertData(std::int64_t genus, std::int64_t boundary_count,
              std::optional<std::int64_t> obstruction, std::vector<FiberInvariant> fibers)
      : genus_(genus),
        boundary_count_(boundary_count),
        obstruction_(obstruction),
        fibers_(std::move(fibers)) {
    if (genus_ < 0) throw std::invalid_argument("SeifertData: genus must be >= 0");
    if (boundary_count_ < 0)
      throw std::invalid_argument("SeifertData: boundary count must be >= 0");
    if (boundary_count_ == 0 && !obstruction_)
      throw std::invalid_argument("SeifertData: obstruction b required when s = 0");
    if (boundary_count_ > 0 && obstruction_)
      throw std::invalid_argument("SeifertData: obstruction b must be absent when s > 0");
    for (const auto& f : fibers_) {
      if (f.alpha < 2)
        throw std::invalid_argument("SeifertData: fiber multiplicity alpha must be >= 2");
      if (f.beta <= 0 || f.beta >= f.alpha)
        throw std::invalid_argument("SeifertData: fiber invariant not normalized (0 < beta < alpha)");
      if (std::gcd(f.alpha, f.beta) != 1)
        throw std::invalid_argument("SeifertData: gcd(alpha, beta) must be 1");
    }
    std::sort(fibers_.begin(), fibers_.end());
  }

  static SeifertData closed(std::int64_t genus, std::int64_t b,
                            std::vector<FiberInvariant> fibers) {
    return SeifertData(genus, 0, b, std::move(fibers));
  }
  static SeifertData bounded(std::int64_t genus, std::int64_t boundary_count,
                             std::vector<FiberInvariant> fibers) {
    return SeifertData(genus, boundary_count, std::nullopt, std::move(fibers));
  }

  std::int64_t genus() const { return genus_; }
  std::int64_t boundary_count() const { return boundary_count_; }
  bool is_closed() const { return boundary_count_ == 0; }
  /// Present exactly when closed.
  std::optional<std::int64_t> obstruction() const { return obstruction_; }
  const std::vector<FiberInvariant>& fibers() const { return fibers_; }
  std::int64_t fiber_count() const { return static_cast<std::int64_t>(fibers_.size()); }

  friend bool operator==(const SeifertData&, const SeifertData&) = default;
  friend auto operator<=>(const SeifertData&, const SeifertData&) = default;

 private:
  std::int64_t genus_;
  std::int64_t boundary_count_;
  std::optional<std::int64_t> obstruction_;
  std::vector<FiberInvariant> fibers_;
};

struct Classification {
  std::optional<Rat> euler_number;         // e, defined only when closed
  Rat orbifold_chi;                        // chi^orb of the base orbifold
  std::int64_t lambda = 1;                 // lcm of the alpha_i (1 when m = 0)
  Parity parity = Parity::EvenType;
  Geometry geometry = Geometry::Spherical;
  bool is_periodic_bundle = false;         // s > 0 or e = 0
  // Genus of the bundle fiber F. Present when the manifold is a periodic
  // bundle and the single-boundary-circle convention applies (s = 0, or
  // s = 1 with connected fiber boundary).
  std::optional<std::int64_t> fiber_genus;
};

/// Rational Euler number e = -(b + sum beta_i/alpha_i), closed case only.
inline Rat euler_number(const SeifertData& m) {
  if (!m.is_closed())
    throw std::invalid_argument("euler_number: defined only for closed manifolds");
  Rat sum(*m.obstruction());
  for (const auto& f : m.fibers()) sum += Rat(f.beta, f.alpha);
  return -sum;
}

inline Rat orbifold_chi(const SeifertData& m) {
  Rat chi = Rat(2 - 2 * m.genus() - m.boundary_count());
  for (const auto& f : m.fibers()) chi += Rat(1, f.alpha) - 1;
  return chi;
}

/// lcm of the fiber multiplicities; the order of the periodic monodromy.
inline std::int64_t fiber_lcm(const SeifertData& m) {
  std::int64_t l = 1;
  for (const auto& f : m.fibers()) l = lcm_checked(l, f.alpha);
  return l;
}

inline bool is_periodic_bundle(const SeifertData& m) {
  return !m.is_closed() || euler_number(m) == 0;
}

inline Classification classify(const SeifertData& m) {
  Classification c;
  c.orbifold_chi = orbifold_chi(m);
  c.lambda = fiber_lcm(m);
  if (m.is_closed()) c.euler_number = euler_number(m);

  c.geometry = c.orbifold_chi > 0   ? Geometry::Spherical
               : c.orbifold_chi < 0 ? Geometry::Hyperbolic
                                    : Geometry::Euclidean;

  c.parity = Parity::EvenType;
  if (m.is_closed() && c.lambda % 2 == 0) {
    std::int64_t odd_count = 0;
    for (const auto& f : m.fibers())
      if ((c.lambda / f.alpha) % 2 != 0) ++odd_count;
    if (odd_count % 2 != 0) c.parity = Parity::OddType;
  }

  c.is_periodic_bundle = is_periodic_bundle(m);
  if (c.is_periodic_bundle && m.boundary_count() <= 1) {
    // chi(F) = lambda * chi^orb with chi(F) = 2 - 2 g_F - (boundary circles
    // of F); the boundary-circle count is 0 for s = 0 and taken as 1 for
    // s = 1 (connected fiber boundary). A non-integral solution means the
    // fiber boundary is disconnected and the genus is left unset.
    Rat lam_chi = Rat(c.lambda) * c.orbifold_chi;
    Rat two_gf = Rat(2 - (m.is_closed() ? 0 : 1)) - lam_chi;
    if (denominator(two_gf) == 1 && numerator(two_gf) % 2 == 0) {
      Int gf = numerator(two_gf) / 2;
      if (gf >= 0) c.fiber_genus = to_int64(gf, "fiber genus");
    }
  }
  return c;
}

/// Invariants of the oppositely oriented manifold: beta_i -> alpha_i - beta_i
/// and, when closed, b -> -b - m. An involution.
inline SeifertData reverse_orientation(const SeifertData& m) {
  std::vector<FiberInvariant> fibers;
  fibers.reserve(m.fibers().size());
  for (const auto& f : m.fibers()) fibers.push_back({f.alpha, f.alpha - f.beta});
  std::optional<std::int64_t> b;
  if (m.is_closed()) b = -*m.obstruction() - m.fiber_count();
  return SeifertData(m.genus(), m.boundary_count(), b, std::move(fibers));
}

/// Invariants of M_{phi^k} given M = M_phi: each beta_i is replaced by the
/// unique 0 < beta* < alpha_i with k beta* == beta_i (mod alpha_i). In the
/// closed case the new obstruction is forced by e = 0.
inline SeifertData power_monodromy(const SeifertData& m, std::int64_t k) {
  if (!is_periodic_bundle(m))
    throw std::invalid_argument("power_monodromy: manifold is not a periodic surface bundle");
  std::int64_t lambda = fiber_lcm(m);
  if (std::gcd(mod_floor(k, lambda == 0 ? 1 : lambda), lambda) != 1)
    throw std::invalid_argument("power_monodromy: k must be coprime to lambda");

  std::vector<FiberInvariant> fibers;
  fibers.reserve(m.fibers().size());
  for (const auto& f : m.fibers()) {
    std::int64_t k_inv = mod_inverse(k, f.alpha);
    std::int64_t beta_star = mod_floor(k_inv * mod_floor(f.beta, f.alpha), f.alpha);
    fibers.push_back({f.alpha, beta_star});
  }

  std::optional<std::int64_t> b;
  if (m.is_closed()) {
    Rat sum(0);
    for (const auto& f : fibers) sum += Rat(f.beta, f.alpha);
    if (denominator(sum) != 1)
      throw std::logic_error("power_monodromy: forced obstruction is non-integral");
    b = to_int64(-numerator(sum), "obstruction");
  }
  return SeifertData(m.genus(), m.boundary_count(), b, std::move(fibers));
}

/// The manifolds whose Seifert fibering over an orientable base is not
/// unique: S^2 x S^1, B^2 x S^1, S^1 x S^1 x I.
inline bool has_non_unique_fibering(const SeifertData& m) {
  if (m.genus() != 0) return false;
  if (m.is_closed()) {
    if (m.fiber_count() == 0 && *m.obstruction() == 0) return true;  // S^2 x S^1
    if (m.fiber_count() == 2 && *m.obstruction() == -1) {
      const auto& f = m.fibers();
      if (f[0].alpha == f[1].alpha && f[0].beta + f[1].beta == f[0].alpha)
        return true;  // S^2 x S^1 again
    }
    return false;
  }
  if (m.boundary_count() == 1 && m.fiber_count() <= 1) return true;  // B^2 x S^1
  if (m.boundary_count() == 2 && m.fiber_count() == 0) return true;  // S^1 x S^1 x I
  return false;
}

/// Homeomorphism test through the classification by Seifert invariants.
/// Refuses the three exceptional manifolds with non-unique fiberings.
inline bool is_homeomorphic(const SeifertData& m, const SeifertData& n, bool oriented) {
  if (has_non_unique_fibering(m) || has_non_unique_fibering(n))
    throw std::invalid_argument(
        "is_homeomorphic: input has a non-unique Seifert fibering "
        "(S^2 x S^1, B^2 x S^1 or S^1 x S^1 x I)");
  if (m == n) return true;
  if (!oriented) return m == reverse_orientation(n);
  return false;
}

/// Smallest k in 2..lambda-1, coprime to lambda, with M_{phi^k} not
/// homeomorphic (unoriented) to M = M_phi; nullopt when every power gives
/// the same manifold back.
inline std::optional<std::int64_t> find_distinguishing_k(const SeifertData& m) {
  if (!is_periodic_bundle(m))
    throw std::invalid_argument("find_distinguishing_k: not a periodic surface bundle");
  std::int64_t lambda = fiber_lcm(m);
  for (std::int64_t k = 2; k < lambda; ++k) {
    if (std::gcd(k, lambda) != 1) continue;
    if (!is_homeomorphic(m, power_monodromy(m, k), false)) return k;
  }
  return std::nullopt;
}

/// Closed manifold over S^2 whose fiber invariants are the nonzero quadratic
/// residues mod p, with b forced by e = 0. Rigid under all monodromy powers.
inline SeifertData residue_family(std::int64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("residue_family: p must be prime");
  if (p < 7)
    throw std::invalid_argument("residue_family: p >= 7 required (chi^orb < 0 fails below)");
  std::vector<bool> is_residue(p, false);
  for (std::int64_t x = 1; x < p; ++x) is_residue[(x * x) % p] = true;
  std::vector<FiberInvariant> fibers;
  std::int64_t sum = 0;
  for (std::int64_t beta = 1; beta < p; ++beta) {
    if (!is_residue[beta]) continue;
    fibers.push_back({p, beta});
    sum += beta;
  }
  if (sum % p != 0)
    throw std::logic_error("residue_family: residue sum not divisible by p");
  SeifertData m = SeifertData::closed(0, -sum / p, std::move(fibers));
  if (euler_number(m) != 0) throw std::logic_error("residue_family: e != 0");
  return m;
}

/// Representatives of the torus-knot-complement family C(alpha1, alpha2):
/// Seifert spaces over B^2 with two exceptional fibers of multiplicities
/// alpha1, alpha2, one per unoriented homeomorphism class, in canonical
/// order. The class count is totient(alpha1 * alpha2) / 2.
inline std::vector<SeifertData> family_enumerate(std::int64_t alpha1, std::int64_t alpha2) {
  if (alpha1 < 2 || alpha2 < 2)
    throw std::invalid_argument("family_enumerate: multiplicities must be >= 2");
  if (std::gcd(alpha1, alpha2) != 1)
    throw std::invalid_argument("family_enumerate: multiplicities must be coprime");
  std::vector<SeifertData> reps;
  for (std::int64_t b1 = 1; b1 < alpha1; ++b1) {
    if (std::gcd(b1, alpha1) != 1) continue;
    for (std::int64_t b2 = 1; b2 < alpha2; ++b2) {
      if (std::gcd(b2, alpha2) != 1) continue;
      SeifertData m = SeifertData::bounded(0, 1, {{alpha1, b1}, {alpha2, b2}});
      SeifertData r = reverse_orientation(m);
      const SeifertData& rep = (m <= r) ? m : r;
      if (std::find(reps.begin(), reps.end(), rep) == reps.end()) reps.push_back(rep);
    }
  }
  std::sort(reps.begin(), reps.end());
  return reps;
}

/// Lens space parameters (p, q) computed verbatim from the Dehn-filling
/// formulas, together with the Bezout witnesses gamma1, delta1 used. The
/// q formula is carried exactly as stated in the source derivation; the
/// output is labeled paper-verbatim in reports.
struct LensInvariants {
  Int p;
  Int q;       // reduced to 0 <= q < p; q = 0 when p <= 1
  Int gamma1;  // minimal non-negative witnesses of alpha1*gamma1 - beta1*delta1 = 1
  Int delta1;
};

inline LensInvariants lens_invariants(const SeifertData& m, std::int64_t b) {
  if (m.boundary_count() != 1 || m.fiber_count() != 2 || m.genus() != 0)
    throw std::invalid_argument(
        "lens_invariants: need a Seifert space over B^2 with exactly two exceptional fibers");
  std::int64_t a1 = m.fibers()[0].alpha, b1 = m.fibers()[0].beta;
  std::int64_t a2 = m.fibers()[1].alpha, b2 = m.fibers()[1].beta;

  LensInvariants out;
  Int signed_p = Int(a1) * b2 + Int(a2) * b1 + Int(b) * a1 * a2;
  out.p = abs(signed_p);

  // Minimal non-negative solution of a1*gamma - b1*delta = 1.
  std::int64_t delta = mod_floor(-mod_inverse(b1, a1), a1);
  std::int64_t gamma = (1 + b1 * delta) / a1;
  out.gamma1 = gamma;
  out.delta1 = delta;

  if (out.p <= 1) {
    out.q = 0;
  } else {
    Int q = -(Int(gamma) * a2 + Int(delta) * a2 * b);
    q %= out.p;
    if (q < 0) q += out.p;
    out.q = q;
  }
  return out;
}

/// Data of a periodic, orientation preserving surface homeomorphism: its
/// order, the quotient orbifold's genus and boundary count, and the cone
/// points (alpha, q) where q is the local rotation number.
class PeriodicMapData {
 public:
  struct ConePoint {
    std::int64_t alpha;
    std::int64_t q;
    friend bool operator==(const ConePoint&, const ConePoint&) = default;
    friend auto operator<=>(const ConePoint&, const ConePoint&) = default;
  };

  PeriodicMapData(std::int64_t order, std::int64_t quotient_genus,
                  std::int64_t quotient_boundary_count, std::vector<ConePoint> cone_points)
      : order_(order),
        quotient_genus_(quotient_genus),
        quotient_boundary_count_(quotient_boundary_count),
        cone_points_(std::move(cone_points)) {
    if (order_ < 1) throw std::invalid_argument("PeriodicMapData: order must be >= 1");
    if (quotient_genus_ < 0 || quotient_boundary_count_ < 0)
      throw std::invalid_argument("PeriodicMapData: negative quotient data");
    std::int64_t l = 1;
    for (const auto& c : cone_points_) {
      if (c.alpha < 2) throw std::invalid_argument("PeriodicMapData: cone alpha must be >= 2");
      if (c.q <= 0 || c.q >= c.alpha || std::gcd(c.q, c.alpha) != 1)
        throw std::invalid_argument("PeriodicMapData: rotation number not normalized");
      if (order_ % c.alpha != 0)
        throw std::invalid_argument("PeriodicMapData: cone alpha must divide the order");
      l = lcm_checked(l, c.alpha);
    }
    if (!cone_points_.empty() && l != order_)
      throw std::invalid_argument("PeriodicMapData: lcm of cone multiplicities must equal the order");
    std::sort(cone_points_.begin(), cone_points_.end());
  }

  std::int64_t order() const { return order_; }
  std::int64_t quotient_genus() const { return quotient_genus_; }
  std::int64_t quotient_boundary_count() const { return quotient_boundary_count_; }
  const std::vector<ConePoint>& cone_points() const { return cone_points_; }

  friend bool operator==(const PeriodicMapData&, const PeriodicMapData&) = default;

 private:
  std::int64_t order_;
  std::int64_t quotient_genus_;
  std::int64_t quotient_boundary_count_;
  std::vector<ConePoint> cone_points_;
};

/// Periodic map data of the bundle structure on M: the monodromy has order
/// lambda and one cone point (alpha_i, q_i) per exceptional fiber with
/// q_i = beta_i^{-1} mod alpha_i.
inline PeriodicMapData periodic_map_from_seifert(const SeifertData& m) {
  if (!is_periodic_bundle(m))
    throw std::invalid_argument("periodic_map_from_seifert: not a periodic surface bundle");
  std::vector<PeriodicMapData::ConePoint> cones;
  cones.reserve(m.fibers().size());
  for (const auto& f : m.fibers()) cones.push_back({f.alpha, mod_inverse(f.beta, f.alpha)});
  return PeriodicMapData(fiber_lcm(m), m.genus(), m.boundary_count(), std::move(cones));
}

enum class ObstructionPolicy { force_zero_euler };

/// Inverse of periodic_map_from_seifert: beta_i = q_i^{-1} mod alpha_i, and
/// for a closed quotient the obstruction is forced by e = 0 (an error when
/// the forced value is non-integral, i.e. the cone data is not realizable).
inline SeifertData seifert_from_periodic_map(
    const PeriodicMapData& p, ObstructionPolicy policy = ObstructionPolicy::force_zero_euler) {
  (void)policy;
  std::vector<FiberInvariant> fibers;
  fibers.reserve(p.cone_points().size());
  for (const auto& c : p.cone_points()) fibers.push_back({c.alpha, mod_inverse(c.q, c.alpha)});
  std::optional<std::int64_t> b;
  if (p.quotient_boundary_count() == 0) {
    Rat sum(0);
    for (const auto& f : fibers) sum += Rat(f.beta, f.alpha);
    if (denominator(sum) != 1)
      throw std::invalid_argument(
          "seifert_from_periodic_map: cone data not realizable with e = 0 "
          "(forced obstruction is non-integral)");
    b = to_int64(-numerator(sum), "obstruction");
  }
  return SeifertData(p.quotient_genus(), p.quotient_boundary_count(), b, std::move(fibers));
}

/// How the bundle fiber F meets the filling tori: on the torus around the
/// i-th exceptional fiber, lambda/alpha_i parallel curves in the class
/// alpha_i [x_i] + beta_i [t]; on T_0 (closed case), lambda curves in the
/// class [x_0] + b [t]. The T_0 class is reported with the (1, b) sign
/// convention.
struct FiberBoundaryEntry {
  std::int64_t torus_index;  // 1..m for exceptional tori, 0 for T_0
  std::int64_t curve_count;
  std::int64_t class_x;  // coefficient of x_i (resp. x_0)
  std::int64_t class_t;  // coefficient of t
  friend bool operator==(const FiberBoundaryEntry&, const FiberBoundaryEntry&) = default;
};

inline std::vector<FiberBoundaryEntry> fiber_boundary_data(const SeifertData& m) {
  if (!is_periodic_bundle(m))
    throw std::invalid_argument("fiber_boundary_data: not a periodic surface bundle");
  std::int64_t lambda = fiber_lcm(m);
  std::vector<FiberBoundaryEntry> out;
  std::int64_t i = 1;
  for (const auto& f : m.fibers()) {
    out.push_back({i, lambda / f.alpha, f.alpha, f.beta});
    ++i;
  }
  if (m.is_closed()) out.push_back({0, lambda, 1, *m.obstruction()});
  return out;
}

}  // namespace sfq

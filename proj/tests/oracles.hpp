#pragma once

// Test-only brute-force oracles, independent of the library code paths they
// are used to check.

#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "sfq/ints.hpp"
#include "sfq/seifert.hpp"

namespace oracles {

// Exhaustive residue scan for the unique 0 < b* < alpha with k b* == b (mod alpha).
inline std::int64_t beta_star_scan(std::int64_t k, std::int64_t beta, std::int64_t alpha) {
  for (std::int64_t b = 1; b < alpha; ++b) {
    if (((k * b) % alpha + alpha) % alpha == ((beta % alpha) + alpha) % alpha) return b;
  }
  throw std::logic_error("beta_star_scan: no solution");
}

// Riemann-Hurwitz fiber Euler characteristic: chi(F) = lambda * chi^orb(B),
// computed from scratch.
inline sfq::Rat fiber_chi(std::int64_t genus, std::int64_t s,
                          const std::vector<sfq::FiberInvariant>& fibers) {
  sfq::Rat chi = sfq::Rat(2 - 2 * genus - s);
  std::int64_t lambda = 1;
  for (const auto& f : fibers) {
    chi += sfq::Rat(1, f.alpha) - 1;
    lambda = std::lcm(lambda, f.alpha);
  }
  return sfq::Rat(lambda) * chi;
}

// Multiset equality of fiber invariants, ignoring order.
inline bool same_fiber_multiset(std::vector<sfq::FiberInvariant> a,
                                std::vector<sfq::FiberInvariant> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

// Random closed SeifertData with e = 0: sample m-1 fibers with alpha <= 12,
// then close the sum with a final fiber whose multiplicity is forced; retry
// until that multiplicity also lands in [2, 12].
inline sfq::SeifertData random_zero_euler_closed(std::mt19937& rng) {
  std::uniform_int_distribution<std::int64_t> genus_d(0, 2), m_d(1, 5), alpha_d(2, 12);
  for (;;) {
    std::int64_t g = genus_d(rng), m = m_d(rng);
    std::vector<sfq::FiberInvariant> fibers;
    sfq::Rat sum(0);
    bool ok = true;
    for (std::int64_t i = 0; i + 1 < m; ++i) {
      std::int64_t alpha = alpha_d(rng);
      std::vector<std::int64_t> betas;
      for (std::int64_t b = 1; b < alpha; ++b)
        if (std::gcd(b, alpha) == 1) betas.push_back(b);
      std::int64_t beta = betas[std::uniform_int_distribution<std::size_t>(0, betas.size() - 1)(rng)];
      fibers.push_back({alpha, beta});
      sum += sfq::Rat(beta, alpha);
    }
    // Close up: need beta_m/alpha_m with fractional part complementary to sum.
    sfq::Int den = denominator(sum);
    sfq::Int num = numerator(sum) % den;
    if (num < 0) num += den;
    sfq::Int p = den - num;  // beta_m / alpha_m = p / den
    if (p == den || den < 2 || den > 12) ok = false;
    if (ok) {
      fibers.push_back({static_cast<std::int64_t>(den), static_cast<std::int64_t>(p)});
      sum += sfq::Rat(p, den);
      std::int64_t b = -static_cast<std::int64_t>(numerator(sum));
      return sfq::SeifertData::closed(g, b, std::move(fibers));
    }
  }
}

// Random bounded SeifertData (always a periodic bundle).
inline sfq::SeifertData random_bounded(std::mt19937& rng) {
  std::uniform_int_distribution<std::int64_t> genus_d(0, 2), s_d(1, 3), m_d(0, 4), alpha_d(2, 12);
  std::int64_t m = m_d(rng);
  std::vector<sfq::FiberInvariant> fibers;
  for (std::int64_t i = 0; i < m; ++i) {
    std::int64_t alpha = alpha_d(rng);
    std::vector<std::int64_t> betas;
    for (std::int64_t b = 1; b < alpha; ++b)
      if (std::gcd(b, alpha) == 1) betas.push_back(b);
    fibers.push_back({alpha, betas[std::uniform_int_distribution<std::size_t>(0, betas.size() - 1)(rng)]});
  }
  return sfq::SeifertData::bounded(genus_d(rng), s_d(rng), std::move(fibers));
}

}  // namespace oracles

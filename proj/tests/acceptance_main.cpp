// Acceptance suite: end-to-end checks of the library's headline claims,
// one PASS/FAIL line per criterion. Exit code = number of failures.

#include <chrono>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "oracles.hpp"
#include "sfq/cli.hpp"
#include "sfq/quotient_set.hpp"
#include "sfq/semidirect.hpp"
#include "sfq/sfs_text.hpp"

using namespace sfq;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int criterion, const std::string& what, bool ok, Clock::time_point started) {
  double secs = std::chrono::duration<double>(Clock::now() - started).count();
  std::ostringstream line;
  line << (ok ? "PASS" : "FAIL") << " criterion " << criterion << ": " << what << " ["
       << secs << "s]";
  std::cout << line.str() << std::endl;
  if (!ok) ++failures;
}

bool quotient_sets_equal(const SeifertData& m, const SeifertData& n, int bound, bool paired) {
  return compare_quotient_sets(sfs_presentation(m), sfs_presentation(n), bound, paired).equal;
}

}  // namespace

// 1. Distinct closed manifolds with the same finite quotients at bound 8.
static void criterion_1() {
  auto t0 = Clock::now();
  bool ok = true;
  auto m = parse_sfs("SFS(g=0, s=0, b=-1; 1/5, 1/5, 3/5)");
  auto mp = power_monodromy(m, 2);
  ok = ok && mp == parse_sfs("SFS(g=0, s=0, b=-2; 3/5, 3/5, 4/5)");
  ok = ok && !is_homeomorphic(m, mp, false);
  ok = ok && quotient_sets_equal(m, mp, 8, false);
  report(1, "closed pair: non-homeomorphic, equal quotient sets at index 8", ok, t0);
}

// 2. Bounded pair: same group, distinct manifolds, equal quotient and
// pair-quotient sets at bound 10.
static void criterion_2() {
  auto t0 = Clock::now();
  bool ok = true;
  auto a = parse_sfs("SFS(g=0, s=1; 1/3, 1/4)");
  auto b = power_monodromy(a, 7);
  ok = ok && b == parse_sfs("SFS(g=0, s=1; 1/3, 3/4)");
  ok = ok && !is_homeomorphic(a, b, false);
  ok = ok && quotient_sets_equal(a, b, 10, false);
  ok = ok && quotient_sets_equal(a, b, 10, true);
  report(2, "bounded pair: distinct classes, equal quotient and pair-quotient sets at index 10",
         ok, t0);
}

// 3. The fundamental group over B^2 does not see the beta's.
static void criterion_3() {
  auto t0 = Clock::now();
  bool ok = true;
  std::vector<SeifertData> family;
  for (std::int64_t b1 : {1, 2})
    for (std::int64_t b2 : {1, 3})
      family.push_back(SeifertData::bounded(0, 1, {{3, b1}, {4, b2}}));
  for (std::size_t i = 0; i < family.size() && ok; ++i)
    for (std::size_t j = i + 1; j < family.size() && ok; ++j)
      ok = quotient_sets_equal(family[i], family[j], 8, false);
  report(3, "all four (beta1, beta2) choices give equal quotient sets at index 8", ok, t0);
}

// 4. Zero Euler number forces even type.
static void criterion_4() {
  auto t0 = Clock::now();
  std::mt19937 rng(1729);
  bool ok = true;
  for (int i = 0; i < 500 && ok; ++i) {
    auto m = oracles::random_zero_euler_closed(rng);
    ok = euler_number(m) == 0 && classify(m).parity == Parity::EvenType;
  }
  report(4, "500 random closed manifolds with e = 0 all classify as even type", ok, t0);
}

// 5. The four Euclidean torus bundles.
static void criterion_5() {
  auto t0 = Clock::now();
  bool ok = true;
  const std::pair<const char*, std::int64_t> anchors[] = {
      {"(-1; 1/2, 1/4, 1/4)", 4},
      {"(-1; 1/2, 1/3, 1/6)", 6},
      {"(-1; 1/3, 1/3, 1/3)", 3},
      {"(-2; 1/2, 1/2, 1/2, 1/2)", 2},
  };
  for (const auto& [text, lambda] : anchors) {
    auto c = classify(parse_sfs(text));
    ok = ok && c.euler_number && *c.euler_number == 0 && c.orbifold_chi == 0 &&
         c.lambda == lambda && c.fiber_genus && *c.fiber_genus == 1;
  }
  report(5, "Euclidean anchors: e = 0, chi^orb = 0, lambda = 4,6,3,2, fiber genus 1", ok, t0);
}

// 6. Quadratic-residue manifolds are rigid under all monodromy powers.
static void criterion_6() {
  auto t0 = Clock::now();
  bool ok = true;
  for (std::int64_t p : {7, 11}) {
    auto m = residue_family(p);
    ok = ok && euler_number(m) == 0;
    ok = ok && !find_distinguishing_k(m).has_value();
    for (std::int64_t k = 1; k < p && ok; ++k)
      ok = is_homeomorphic(m, power_monodromy(m, k), false);
  }
  report(6, "residue families p = 7, 11: e = 0, no distinguishing power", ok, t0);
}

// 7. Family counts.
static void criterion_7() {
  auto t0 = Clock::now();
  bool ok = true;
  for (std::int64_t a1 = 2; a1 <= 12; ++a1)
    for (std::int64_t a2 = a1 + 1; a2 <= 12; ++a2) {
      if (std::gcd(a1, a2) != 1) continue;
      ok = ok &&
           static_cast<std::int64_t>(family_enumerate(a1, a2).size()) == totient(a1 * a2) / 2;
    }
  report(7, "family sizes equal totient(a1 a2)/2 for all coprime 2 <= a1 < a2 <= 12", ok, t0);
}

// 8. The low-index engine agrees with the brute-force catalogue oracle.
static void criterion_8() {
  auto t0 = Clock::now();
  bool ok = true;
  std::vector<Presentation> fixed;
  {
    Presentation cyclic;
    cyclic.generator_names = {"a"};
    cyclic.relators = {word_pow({1}, 6)};
    fixed.push_back(cyclic);
    Presentation dihedral;
    dihedral.generator_names = {"a", "b"};
    dihedral.relators = {word_pow({1}, 4), word_pow({2}, 2), word_pow(concat({1}, {2}), 2)};
    fixed.push_back(dihedral);
    Presentation f2;
    f2.generator_names = {"a", "b"};
    fixed.push_back(f2);
    fixed.push_back(presentation_bounded_sfs(SeifertData::bounded(0, 1, {{2, 1}, {3, 1}})));
    Presentation z2;
    z2.generator_names = {"a", "b"};
    z2.relators = {commutator(1, 2)};
    fixed.push_back(z2);
  }
  for (const auto& p : fixed) {
    auto qs = quotient_set(p, 8, false);
    std::vector<std::string> engine_names;
    for (const auto& cls : qs.classes) {
      bool matched = false;
      for (const auto& entry : small_groups_catalogue()) {
        if (entry.group.order == cls.group.order && finite_group_iso(entry.group, cls.group)) {
          engine_names.push_back(entry.name);
          matched = true;
          break;
        }
      }
      if (!matched) ok = false;
    }
    auto oracle_names = catalogue_quotients(p, 8);
    std::sort(engine_names.begin(), engine_names.end());
    std::sort(oracle_names.begin(), oracle_names.end());
    ok = ok && engine_names == oracle_names;
  }
  report(8, "quotient sets at index 8 match the catalogue brute-force oracle on 5 groups", ok,
         t0);
}

// 9. The G(n) tower.
static void criterion_9() {
  auto t0 = Clock::now();
  bool ok = true;
  Presentation z;
  z.generator_names = {"a"};
  const std::int64_t lcms[] = {0, 1, 2, 6, 12, 60, 60};
  for (int n = 1; n <= 6 && ok; ++n) {
    auto gn = g_n(z, n);
    bool cyclic = false;
    for (int e = 0; e < gn.quotient.order; ++e)
      if (gn.quotient.element_order(e) == gn.quotient.order) cyclic = true;
    ok = gn.quotient.order == lcms[n] && cyclic;
  }
  auto trefoil = presentation_bounded_sfs(SeifertData::bounded(0, 1, {{2, 1}, {3, 1}}));
  auto gn = g_n(trefoil, 6);
  for (const auto& cls : quotient_set(trefoil, 6, false).classes)
    ok = ok && finite_group_epi(gn.quotient, cls.group);
  report(9, "G/G(n) = Z/lcm(1..n) on Z for n <= 6; cofinality on the trefoil group at 6", ok,
         t0);
}

// 10. The explicit basis-change isomorphism, machine verified.
static void criterion_10() {
  auto t0 = Clock::now();
  bool ok = true;
  FreeAutomorphism psi;
  psi.images = {{2}, {-2, -1}};
  psi.inverse_images = {{-2, -1}, {1}};
  psi.order = 3;
  Presentation f2;
  f2.generator_names = {"a", "b"};
  try {
    auto res = lemma21_iso(f2, WordReducer::free_group(2), psi, 2);
    ok = ok && res.basis.u * res.basis.n + res.basis.v * res.basis.k == 1;
    auto sig_src = hom_count_signature(res.source, 12);
    auto sig_tgt = hom_count_signature(res.target, 12);
    ok = ok && sig_src == sig_tgt;
  } catch (const std::exception&) {
    ok = false;
  }
  report(10, "order-3 automorphism of F2, k = 2: verified isomorphism, equal hom counts to 12",
         ok, t0);
}

// 11. Seifert data <-> periodic map data round trip.
static void criterion_11() {
  auto t0 = Clock::now();
  std::mt19937 rng(5280);
  bool ok = true;
  for (int i = 0; i < 200 && ok; ++i) {
    auto m = (i % 2 == 0) ? oracles::random_zero_euler_closed(rng) : oracles::random_bounded(rng);
    ok = seifert_from_periodic_map(periodic_map_from_seifert(m)) == m;
  }
  report(11, "periodic-map round trip is the identity on 200 random bundles", ok, t0);
}

// 12. Grammar round trip and the documented exit codes.
static void criterion_12() {
  auto t0 = Clock::now();
  bool ok = true;
  std::mt19937 rng(99991);
  std::uniform_int_distribution<int> kind(0, 2);
  for (int i = 0; i < 1000 && ok; ++i) {
    SeifertData m = [&] {
      switch (kind(rng)) {
        case 0: return oracles::random_zero_euler_closed(rng);
        case 1: return oracles::random_bounded(rng);
        default: {
          auto base = oracles::random_bounded(rng);
          std::uniform_int_distribution<std::int64_t> b_d(-5, 5);
          return SeifertData::closed(base.genus(), b_d(rng), base.fibers());
        }
      }
    }();
    ok = parse_sfs(format_sfs(m)) == m;
  }

  auto exit_code = [](std::vector<std::string> args) {
    std::ostringstream out, err;
    return cli::run_cli(args, out, err);
  };
  ok = ok && exit_code({"classify", "(-1; 1/2, 1/4, 1/4)"}) == 0;
  ok = ok && exit_code({"compare", "--max-index", "6", "(-1;1/5,1/5,3/5)", "--power", "2"}) == 0;
  ok = ok && exit_code({"classify", "SFS(g=0, s=0; 1/2)"}) == 1;          // b required
  ok = ok && exit_code({"classify", "SFS(g=0, s=1; 2/4)"}) == 1;          // gcd violation
  ok = ok && exit_code({"classify", "nonsense"}) == 1;                    // syntax
  ok = ok && exit_code({"no-such-verb"}) == 1;                            // usage
  ok = ok && exit_code({"compare", "--max-index", "6", "SFS(g=0,s=1;1/2,1/3)",
                        "SFS(g=0,s=1;1/2,1/5)"}) == 2;                    // witnessed unequal
  ok = ok && exit_code({"quotients", "SFS(g=0,s=1;1/2,1/3)", "--max-index", "6", "--budget",
                        "10"}) == 3;                                      // budget
  report(12, "1000 grammar round trips; documented error cases exit 0/1/2/3 as specified", ok,
         t0);
}

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  criterion_11();
  criterion_12();
  std::cout << (failures == 0 ? "ALL CRITERIA PASSED" : "FAILURES: " + std::to_string(failures))
            << std::endl;
  return failures;
}

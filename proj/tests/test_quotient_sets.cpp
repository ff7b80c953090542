#include <catch2/catch.hpp>

#include <algorithm>

#include "sfq/quotient_set.hpp"

using namespace sfq;

namespace {

Presentation make_pres(std::vector<std::string> names, std::vector<Word> rels) {
  Presentation p;
  p.generator_names = std::move(names);
  p.relators = std::move(rels);
  return p;
}

Presentation cyclic_pres(int n) { return make_pres({"a"}, {word_pow({1}, n)}); }

Presentation dihedral_pres(int n) {
  return make_pres({"a", "b"},
                   {word_pow({1}, n), word_pow({2}, 2), word_pow(concat({1}, {2}), 2)});
}

Presentation trefoil_pres() {
  return presentation_bounded_sfs(SeifertData::bounded(0, 1, {{2, 1}, {3, 1}}));
}

// Sorted catalogue names of the engine's quotient classes, for comparison
// against the brute-force oracle.
std::vector<std::string> engine_class_names(const Presentation& p, int bound) {
  auto qs = quotient_set(p, bound, false);
  std::vector<std::string> names;
  for (const auto& cls : qs.classes) {
    bool matched = false;
    for (const auto& entry : small_groups_catalogue()) {
      if (entry.group.order == cls.group.order && finite_group_iso(entry.group, cls.group)) {
        names.push_back(entry.name);
        matched = true;
        break;
      }
    }
    REQUIRE(matched);  // catalogue is complete through order 15
  }
  std::sort(names.begin(), names.end());
  return names;
}

std::vector<std::string> oracle_class_names(const Presentation& p, int bound) {
  auto names = catalogue_quotients(p, bound);
  std::sort(names.begin(), names.end());
  return names;
}

}  // namespace

TEST_CASE("quotient_set on <a | a^6> has 4 classes") {
  auto qs = quotient_set(cyclic_pres(6), 6, false);
  REQUIRE(qs.classes.size() == 4);
  std::vector<int> orders;
  for (const auto& c : qs.classes) orders.push_back(c.group.order);
  CHECK(orders == std::vector<int>{1, 2, 3, 6});
}

TEST_CASE("quotient_set deduplicates: F2 at index 2") {
  auto qs = quotient_set(make_pres({"a", "b"}, {}), 2, false);
  REQUIRE(qs.classes.size() == 2);
  CHECK(qs.classes[0].group.order == 1);
  CHECK(qs.classes[1].group.order == 2);
}

TEST_CASE("oracle equivalence: engine matches catalogue brute force at bound 8") {
  CHECK(engine_class_names(cyclic_pres(6), 8) == oracle_class_names(cyclic_pres(6), 8));
  CHECK(engine_class_names(dihedral_pres(4), 8) == oracle_class_names(dihedral_pres(4), 8));
  CHECK(engine_class_names(make_pres({"a", "b"}, {}), 8) ==
        oracle_class_names(make_pres({"a", "b"}, {}), 8));
  CHECK(engine_class_names(trefoil_pres(), 8) == oracle_class_names(trefoil_pres(), 8));
  CHECK(engine_class_names(make_pres({"a", "b"}, {commutator(1, 2)}), 8) ==
        oracle_class_names(make_pres({"a", "b"}, {commutator(1, 2)}), 8));
}

TEST_CASE("quotient_set monotonicity in the bound") {
  for (const auto& p : {cyclic_pres(12), dihedral_pres(4), trefoil_pres()}) {
    auto small = quotient_set(p, 5, false);
    auto large = quotient_set(p, 8, false);
    for (const auto& cls : small.classes) {
      bool found = false;
      for (const auto& big : large.classes)
        if (big.group.order == cls.group.order && finite_group_iso(big.group, cls.group))
          found = true;
      CHECK(found);
    }
  }
}

TEST_CASE("paired quotient sets need marks") {
  CHECK_THROWS_AS(quotient_set(cyclic_pres(6), 4, true), std::invalid_argument);
  CHECK_NOTHROW(quotient_set(trefoil_pres(), 4, true));
}

TEST_CASE("compare_quotient_sets") {
  SECTION("a presentation equals itself") {
    auto res = compare_quotient_sets(trefoil_pres(), trefoil_pres(), 5, false);
    CHECK(res.equal);
  }
  SECTION("witness for <a|a^2> vs <a|a^3> is Z/2") {
    auto res = compare_quotient_sets(cyclic_pres(2), cyclic_pres(3), 3, false);
    REQUIRE_FALSE(res.equal);
    CHECK(res.witness_side == 1);
    REQUIRE(res.witness.has_value());
    CHECK(res.witness->group.order == 2);
  }
  SECTION("paired comparison distinguishes marks") {
    // Same group Z x Z with marks <a> vs <a, b>: pair sets differ.
    auto p = make_pres({"a", "b"}, {commutator(1, 2)});
    auto q = p;
    p.peripheral_marks = {{"peripheral 1", {Word{1}}, true}};
    q.peripheral_marks = {{"peripheral 1", {Word{1}, Word{2}}, true}};
    auto res = compare_quotient_sets(p, q, 4, true);
    CHECK_FALSE(res.equal);
    auto unpaired = compare_quotient_sets(p, q, 4, false);
    CHECK(unpaired.equal);
  }
}

TEST_CASE("serialization is stable and one line per class") {
  auto qs = quotient_set(cyclic_pres(6), 6, false);
  auto text = serialize(qs);
  CHECK(text == serialize(quotient_set(cyclic_pres(6), 6, false)));
  CHECK(std::count(text.begin(), text.end(), '\n') == 4);
  CHECK(text.find("order=1 ") == 0);
  CHECK(text.find("mark=none") != std::string::npos);

  auto paired = quotient_set(trefoil_pres(), 3, true);
  auto ptext = serialize(paired);
  CHECK(ptext.find("mark=0") != std::string::npos);
}

TEST_CASE("g_n on Z is cyclic of order lcm(1..n)") {
  auto z = make_pres({"a"}, {});
  const std::int64_t lcms[] = {0, 1, 2, 6, 12, 60, 60};
  for (int n = 1; n <= 6; ++n) {
    auto gn = g_n(z, n);
    CHECK(gn.quotient.order == lcms[n]);
    bool cyclic = false;
    for (int e = 0; e < gn.quotient.order; ++e)
      if (gn.quotient.element_order(e) == gn.quotient.order) cyclic = true;
    CHECK(cyclic);
    REQUIRE(gn.generator_images.size() == 1);
    CHECK(gn.quotient.element_order(gn.generator_images[0]) == gn.quotient.order);
  }
}

TEST_CASE("g_n on the order-6 nonabelian group at bound 3 is C2") {
  auto gn = g_n(dihedral_pres(3), 3);
  CHECK(gn.quotient.order == 2);
}

TEST_CASE("g_n cofinality on the trefoil-type group at bound 6") {
  auto p = trefoil_pres();
  auto gn = g_n(p, 6);
  auto qs = quotient_set(p, 6, false);
  for (const auto& cls : qs.classes) CHECK(finite_group_epi(gn.quotient, cls.group));
}

TEST_CASE("hom_count_signature") {
  auto f2 = make_pres({"a", "b"}, {});
  auto sig_f2 = hom_count_signature(f2, 12);
  CHECK(sig_f2.at("S3") == 36);      // |T|^2 for the free group of rank 2
  CHECK(sig_f2.at("C2") == 4);
  CHECK(sig_f2.at("A4") == 144);

  auto z = make_pres({"a"}, {});
  auto sig_z = hom_count_signature(z, 12);
  for (const auto& [name, count] : sig_z) {
    for (const auto& entry : small_groups_catalogue())
      if (entry.name == name) CHECK(count == entry.group.order);
  }

  CHECK_THROWS_AS(hom_count_signature(f2, 16), std::invalid_argument);
  SearchBudget tiny;
  tiny.max_nodes = 10;
  CHECK_THROWS_AS(hom_count_signature(f2, 12, tiny), BudgetExceeded);
}

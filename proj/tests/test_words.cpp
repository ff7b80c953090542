#include <catch2/catch.hpp>

#include <random>

#include "sfq/words.hpp"

using namespace sfq;

TEST_CASE("free_reduce") {
  SECTION("a a^-1 b -> b") { CHECK(free_reduce({1, -1, 2}) == Word{2}); }
  SECTION("empty -> empty") { CHECK(free_reduce({}) == Word{}); }
  SECTION("a b b^-1 a^-1 -> empty") { CHECK(free_reduce({1, 2, -2, -1}) == Word{}); }
  SECTION("nested cancellation") { CHECK(free_reduce({1, 2, 3, -3, -2, -1, 1}) == Word{1}); }
  SECTION("zero letter rejected") { CHECK_THROWS_AS(free_reduce({1, 0}), std::invalid_argument); }
}

TEST_CASE("free_reduce is idempotent and length-non-increasing") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> len_d(0, 40), letter_d(1, 4), sign_d(0, 1);
  for (int i = 0; i < 300; ++i) {
    Word w;
    int len = len_d(rng);
    for (int j = 0; j < len; ++j) w.push_back(letter_d(rng) * (sign_d(rng) ? 1 : -1));
    Word r = free_reduce(w);
    CHECK(r.size() <= w.size());
    CHECK(free_reduce(r) == r);
    // w * w^-1 always dies.
    CHECK(free_reduce(concat(w, inverse_word(w))).empty());
  }
}

TEST_CASE("word helpers") {
  CHECK(inverse_word({1, -2, 3}) == Word{-3, 2, -1});
  CHECK(word_pow({1, 2}, 2) == Word{1, 2, 1, 2});
  CHECK(word_pow({1, 2}, -1) == Word{-2, -1});
  CHECK(word_pow({1}, 0) == Word{});
  CHECK(commutator(1, 2) == Word{1, 2, -1, -2});
  auto [conj, core] = cyclic_reduce({1, 2, 3, -2, -1});
  CHECK(conj == Word{1, 2});
  CHECK(core == Word{3});
}

TEST_CASE("dehn_reduce genus 1 is the abelian normal form") {
  CHECK(dehn_reduce({1, 2, -1, -2}, 1) == Word{});
  CHECK(dehn_reduce({2, 1, 2}, 1) == Word{1, 2, 2});
  CHECK(dehn_reduce({1}, 1) == Word{1});
}

TEST_CASE("dehn_reduce genus >= 2") {
  SECTION("the surface relator is trivial") {
    CHECK(dehn_reduce(surface_relator(2), 2) == Word{});
    CHECK(dehn_reduce(surface_relator(3), 3) == Word{});
  }
  SECTION("a generator is already reduced") { CHECK(dehn_reduce({1}, 2) == Word{1}); }
  SECTION("conjugates and products of the relator are trivial") {
    Word r = surface_relator(2);
    Word c = concat(concat(Word{3, -2}, r), inverse_word(Word{3, -2}));
    CHECK(dehn_reduce(c, 2) == Word{});
    CHECK(dehn_reduce(concat(r, c), 2) == Word{});
    Word rot(r.begin() + 3, r.end());
    rot.insert(rot.end(), r.begin(), r.begin() + 3);
    CHECK(dehn_reduce(rot, 2) == Word{});
  }
  SECTION("commuting relation holds only up to the relator") {
    // a1 b1 a1^-1 b1^-1 is not trivial in genus 2.
    CHECK_FALSE(dehn_reduce(commutator(1, 2), 2).empty());
  }
  SECTION("letters out of range are rejected") {
    CHECK_THROWS_AS(dehn_reduce({5}, 2), std::invalid_argument);
  }
}

TEST_CASE("dehn_reduce kills random products of relator conjugates") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> len_d(0, 6), letter_d(1, 4), sign_d(0, 1), count_d(1, 4);
  for (int trial = 0; trial < 100; ++trial) {
    Word product;
    int count = count_d(rng);
    for (int i = 0; i < count; ++i) {
      Word conj;
      int len = len_d(rng);
      for (int j = 0; j < len; ++j) conj.push_back(letter_d(rng) * (sign_d(rng) ? 1 : -1));
      Word r = sign_d(rng) ? surface_relator(2) : inverse_word(surface_relator(2));
      product = concat(product, concat(concat(conj, r), inverse_word(conj)));
    }
    CHECK(dehn_reduce(product, 2) == Word{});
  }
}

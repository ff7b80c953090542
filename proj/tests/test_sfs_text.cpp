#include <catch2/catch.hpp>

#include <random>

#include "oracles.hpp"
#include "sfq/sfs_text.hpp"

using namespace sfq;

TEST_CASE("parse_sfs accepts both grammars") {
  auto compact = parse_sfs("(-1; 1/2,1/4,1/4)");
  CHECK(compact == SeifertData::closed(0, -1, {{2, 1}, {4, 1}, {4, 1}}));

  auto full = parse_sfs("SFS(g=0, s=1; 1/3, 1/4)");
  CHECK(full == SeifertData::bounded(0, 1, {{3, 1}, {4, 1}}));

  CHECK(parse_sfs("SFS(g=1,s=0,b=0;)") == SeifertData::closed(1, 0, {}));
  CHECK(parse_sfs("  sfs ( g = 2 , s = 3 ; 2 / 5 )  ") ==
        SeifertData::bounded(2, 3, {{5, 2}}));
  CHECK(parse_sfs("(0;)") == SeifertData::closed(0, 0, {}));
  // Fibers are re-sorted into canonical order on construction.
  CHECK(parse_sfs("(-1; 3/5, 1/5, 1/5)") == parse_sfs("(-1; 1/5, 1/5, 3/5)"));
}

TEST_CASE("parse_sfs rejects bad input with positions") {
  CHECK_THROWS_AS(parse_sfs("SFS(g=0, s=0; 1/2)"), SfsParseError);  // b required
  CHECK_THROWS_AS(parse_sfs("SFS(g=0, s=1, b=0; 1/2)"), SfsParseError);  // b forbidden
  CHECK_THROWS_AS(parse_sfs("SFS(g=0, s=1; 2/4)"), SfsParseError);   // gcd != 1
  CHECK_THROWS_AS(parse_sfs("SFS(g=0, s=1; 3/2)"), SfsParseError);   // beta >= alpha
  CHECK_THROWS_AS(parse_sfs("SFS(g=0, s=1; 0/2)"), SfsParseError);   // beta <= 0
  CHECK_THROWS_AS(parse_sfs("SFS(g=0, s=1; 1/1)"), SfsParseError);   // alpha < 2
  CHECK_THROWS_AS(parse_sfs("SFS(g=-1, s=0, b=0;)"), SfsParseError); // genus < 0
  CHECK_THROWS_AS(parse_sfs("(1; 1/2") , SfsParseError);             // missing )
  CHECK_THROWS_AS(parse_sfs("(1; 1/2) junk"), SfsParseError);        // trailing
  CHECK_THROWS_AS(parse_sfs("hello"), SfsParseError);
  CHECK_THROWS_AS(parse_sfs(""), SfsParseError);

  try {
    parse_sfs("SFS(g=0, s=1; 2/4)");
    FAIL("expected SfsParseError");
  } catch (const SfsParseError& e) {
    CHECK(e.position() == 14);
    CHECK(std::string(e.what()).find("gcd") != std::string::npos);
  }
}

TEST_CASE("format_sfs canonical forms") {
  CHECK(format_sfs(SeifertData::closed(0, -1, {{4, 1}, {2, 1}, {4, 1}})) ==
        "SFS(g=0, s=0, b=-1; 1/2, 1/4, 1/4)");
  CHECK(format_sfs(SeifertData::bounded(0, 1, {{3, 1}, {4, 1}})) ==
        "SFS(g=0, s=1; 1/3, 1/4)");
  CHECK(format_sfs(SeifertData::closed(1, 0, {})) == "SFS(g=1, s=0, b=0;)");
}

TEST_CASE("parse-format round trip on 1000 random manifolds") {
  std::mt19937 rng(20260808);
  std::uniform_int_distribution<int> kind(0, 2);
  for (int i = 0; i < 1000; ++i) {
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
    std::string text = format_sfs(m);
    SeifertData reparsed = parse_sfs(text);
    CHECK(reparsed == m);
    CHECK(format_sfs(reparsed) == text);
  }
}

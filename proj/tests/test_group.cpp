#include <random>

#include "doctest.h"
#include "finehyp/group.hpp"
#include "test_util.hpp"

using namespace finehyp;
using testutil::draw;

TEST_CASE("normal form fixtures in Z/2 * Z/3") {
  FreeProduct g(2, 3);
  CHECK(g.identity().is_identity());
  CHECK(g.identity().str() == "e");
  CHECK(g.parse("e").is_identity());
  CHECK(g.parse("aa").is_identity());
  CHECK(g.parse("b3").is_identity());
  CHECK(g.parse("a0") == g.identity());
  CHECK(g.parse("ab3b").str() == "ab");   // b3 collapses, seam refolds
  CHECK(g.parse("b2b2").str() == "b");    // b4 = b
  CHECK(g.parse("ab2").str() == "ab2");
  CHECK(g.multiply(g.parse("ab2"), g.parse("ba")).is_identity());
  CHECK(g.multiply(g.parse("ab"), g.parse("b2a")).is_identity());
  CHECK(g.multiply(g.parse("ab"), g.parse("ba")).str() == "ab2a");
  CHECK(g.inverse(g.parse("ab")).str() == "b2a");
  CHECK(g.inverse(g.parse("ab2a")).str() == "aba");
  CHECK_THROWS_AS(g.parse("c"), InputError);
  CHECK_THROWS_AS(g.parse("a9999999"), InputError);
  CHECK_THROWS_AS(FreeProduct(1, 3), InputError);
  CHECK(g.order('a') == 2);
  CHECK(g.order('b') == 3);
  CHECK_THROWS_AS(g.order('c'), InputError);
}

TEST_CASE("powers") {
  FreeProduct g(2, 3);
  GroupElement ab = g.parse("ab");
  CHECK(g.pow(ab, 0).is_identity());
  CHECK(g.pow(ab, 1) == ab);
  CHECK(g.pow(ab, 3).str() == "ababab");
  CHECK(g.pow(ab, -1).str() == "b2a");
  CHECK(g.pow(ab, -2).str() == "b2ab2a");
  CHECK(g.multiply(g.pow(ab, 5), g.pow(ab, -5)).is_identity());
  CHECK(g.pow(g.parse("b"), 3).is_identity());
}

TEST_CASE("word length is the syllable-wise shortest spelling") {
  FreeProduct g(2, 5);
  CHECK(g.word_length(g.identity()) == 0);
  CHECK(g.word_length(g.parse("a")) == 1);
  CHECK(g.word_length(g.parse("b")) == 1);
  CHECK(g.word_length(g.parse("b2")) == 2);
  CHECK(g.word_length(g.parse("b3")) == 2);  // b3 = b^-2
  CHECK(g.word_length(g.parse("b4")) == 1);  // b4 = b^-1
  CHECK(g.word_length(g.parse("ab4a")) == 3);
  FreeProduct h(2, 3);
  CHECK(h.word_length(h.parse("ab2")) == 2);
}

TEST_CASE("group axioms on sampled elements") {
  FreeProduct g(2, 3);
  auto elems = g.ball(4);
  std::mt19937_64 rng(17);
  for (int i = 0; i < 300; ++i) {
    const GroupElement& x = elems[draw(rng, elems.size())];
    const GroupElement& y = elems[draw(rng, elems.size())];
    const GroupElement& z = elems[draw(rng, elems.size())];
    CHECK(g.multiply(g.multiply(x, y), z) == g.multiply(x, g.multiply(y, z)));
    CHECK(g.multiply(x, g.identity()) == x);
    CHECK(g.multiply(g.identity(), x) == x);
    CHECK(g.multiply(x, g.inverse(x)).is_identity());
    CHECK(g.multiply(g.inverse(x), x).is_identity());
    // normal form idempotence: reparsing the printed form is the identity map
    CHECK(g.parse(x.str()) == x);
  }
}

TEST_CASE("ball sizes match independent enumeration") {
  FreeProduct g23(2, 3);
  CHECK(g23.ball(0).size() == 1);
  CHECK(g23.ball(1).size() == 4);
  CHECK(g23.ball(2).size() == 8);
  CHECK(g23.ball(3).size() == 14);
  CHECK(g23.ball(4).size() == 22);
  FreeProduct g34(3, 4);
  CHECK(g34.ball(1).size() == 5);
  CHECK(g34.ball(2).size() == 14);
  CHECK(g34.ball(3).size() == 34);
}

TEST_CASE("ball elements respect the metric and start deterministically") {
  FreeProduct g(2, 3);
  auto b = g.ball(3);
  for (const GroupElement& x : b) CHECK(g.word_length(x) <= 3);
  // first entries follow the a, a^-1, b, b^-1 expansion order
  CHECK(b[0].is_identity());
  CHECK(b[1].str() == "a");
  CHECK(b[2].str() == "b");
  CHECK(b[3].str() == "b2");
  // no duplicates
  for (size_t i = 0; i < b.size(); ++i)
    for (size_t j = i + 1; j < b.size(); ++j) CHECK_FALSE(b[i] == b[j]);
}

TEST_CASE("structural order is strict and total on a ball") {
  FreeProduct g(3, 4);
  auto b = g.ball(3);
  for (size_t i = 0; i < b.size(); ++i) {
    CHECK_FALSE(b[i] < b[i]);
    for (size_t j = i + 1; j < b.size(); ++j) {
      bool lt = b[i] < b[j], gt = b[j] < b[i];
      CHECK(lt != gt);  // exactly one direction for distinct elements
    }
  }
}

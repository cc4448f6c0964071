#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "sufmsel/text.hpp"

using namespace sufmsel;

TEST_CASE("load_text appends or keeps a single sentinel") {
  auto a = load_text("mississippi$");
  auto b = load_text("mississippi");
  CHECK(a.size() == 12);
  CHECK(b.size() == 12);
  CHECK(a.render() == "mississippi$");
  CHECK(b.display(12) == '$');
  CHECK(load_text("").size() == 1);
}

TEST_CASE("interior sentinel is rejected") {
  CHECK_THROWS_AS(load_text("ab$c"), TextError);
  CHECK_THROWS_AS(load_text("$$"), TextError);
}

TEST_CASE("terminated input needs a unique minimum last") {
  auto t = load_text("cab#", true);
  CHECK(t.size() == 4);
  CHECK(t.display(4) == '$');
  CHECK_THROWS_AS(load_text("ca#b", true), TextError);
  CHECK_THROWS_AS(load_text("c#a#", true), TextError);
  CHECK_THROWS_AS(load_text("", true), TextError);
}

TEST_CASE("cmp_symbols counts every call") {
  auto t = load_text("abca");
  Meter m;
  CHECK(cmp_symbols(t, 1, 4, m) == 0);
  CHECK(cmp_symbols(t, 1, 2, m) == -1);
  CHECK(cmp_symbols(t, 3, 5, m) == 1);
  CHECK(m.symbol_cmp == 3);
  CHECK(m.key_cmp == 0);
  CHECK_THROWS(cmp_symbols(t, 0, 1, m));
  CHECK_THROWS(cmp_symbols(t, 1, 6, m));
}

TEST_CASE("sentinel sorts below every symbol") {
  auto t = Text::from_symbols({0, 255});
  Meter m;
  CHECK(cmp_symbols(t, 3, 1, m) == -1);
  CHECK(cmp_symbols(t, 1, 2, m) == -1);
}

TEST_CASE("meter events") {
  Meter m;
  m.add(EventKind::Fusion, 3);
  m.add(EventKind::Creation);
  CHECK(m.events_total() == 4);
  m.reset();
  CHECK(m.events_total() == 0);
  CHECK(std::string(event_name(EventKind::Collision)) == "collision");
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "sufmsel/driver.hpp"
#include "sufmsel/ops.hpp"
#include "sufmsel/rap.hpp"

using namespace sufmsel;

TEST_CASE("first-symbol block with outside continuations is acyclic") {
  auto t = load_text("mississippi$");
  Meter m;
  GlobalState gs(t, m);
  std::vector<std::int64_t> r{3, 5};
  initialize(gs, r);
  int a = gs.unsolved.front();
  auto cl = classify(gs, a);
  CHECK(cl.kind == Kind::GenericAcyclic);
  CHECK(cl.cols.size() == 4);
  auto keys = build_keys(gs, cl);
  for (auto& k : keys) CHECK(k.f == 0);
  // T12 follows T11 and is the only suffix in block 0
  for (std::size_t i = 0; i < cl.cols.size(); ++i)
    if (cl.cols[i] == 11) CHECK(keys[i].label == 0);
}

TEST_CASE("unary run is core-cyclic") {
  auto t = load_text("aaaa");
  Meter m;
  GlobalState gs(t, m);
  std::vector<std::int64_t> r{3};
  initialize(gs, r);
  int a = gs.unsolved.front();
  auto cl = classify(gs, a);
  CHECK(cl.kind == Kind::CoreCyclic);
  CHECK(cl.core == gs.ag[a].root);
  auto keys = build_keys(gs, cl);
  for (std::size_t i = 0; i < cl.cols.size(); ++i) {
    // column i starts at c; a^(4-c+1) then $: f counts the a's still inside
    int c = cl.cols[i];
    CHECK(keys[i].f == 4 - c);
    CHECK(keys[i].label == 0);
  }
  // one collision-free chain: no owner changes
  CHECK(m.events[static_cast<int>(EventKind::Collision)] == 0);
}

TEST_CASE("core-cyclic keys order by run length") {
  auto t = load_text("aab");
  Meter m;
  GlobalState gs(t, m);
  ColumnKey shortk{1, 0, 0, false}, longk{2, 0, 0, false}, bigger{0, 5, 0, false};
  // core label 3 sits above terminal 0 and below terminal 5
  CHECK(compare_keys(gs, shortk, longk, 3) < 0);
  CHECK(compare_keys(gs, longk, shortk, 3) > 0);
  CHECK(compare_keys(gs, bigger, longk, 3) > 0);
  CHECK(m.key_cmp == 3);
  CHECK(m.symbol_cmp == 0);
}

TEST_CASE("degenerate ties fall back to first symbols") {
  auto t = load_text("abc");
  Meter m;
  GlobalState gs(t, m);
  ColumnKey x{0, 7, 1, true}, y{0, 7, 3, true}, z{0, 7, 3, false};
  CHECK(compare_keys(gs, x, y, 0) < 0);
  CHECK(m.symbol_cmp == 1);
  CHECK(compare_keys(gs, x, z, 0) == 0);
  CHECK(m.symbol_cmp == 1);
}

TEST_CASE("every rap fires an event and all kinds occur") {
  std::mt19937 rng(5);
  std::set<int> kinds;
  for (int it = 0; it < 400; ++it) {
    int n = 5 + rng() % 60;
    std::vector<std::uint32_t> body(n);
    int p = 1 + rng() % 5;
    for (int i = 0; i < n; ++i) body[i] = i < p ? rng() % 3 : body[i - p];
    for (int i = 0; i < n; ++i)
      if (rng() % 10 == 0) body[i] = rng() % 3;
    auto t = Text::from_symbols(body);
    std::vector<std::int64_t> r;
    for (int k = 2; k <= n + 1; ++k)
      if (rng() % 4 == 0) r.push_back(k);
    if (r.empty()) continue;
    Meter m;
    GlobalState gs(t, m);
    gs.debug = true;
    std::int64_t raps = 0;
    gs.trace = [&](const Trace& tr) {
      kinds.insert(tr.kind);
      ++raps;
    };
    initialize(gs, r);
    REQUIRE_NOTHROW(run(gs));
    CHECK(raps == gs.rap_count);
    CHECK(gs.unsolved.empty());
  }
  CHECK(kinds.size() == 3);
}

TEST_CASE("kind names") {
  CHECK(std::string(kind_name(Kind::CoreCyclic)) == "core-cyclic");
}

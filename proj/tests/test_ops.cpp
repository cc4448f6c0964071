#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "sufmsel/driver.hpp"
#include "sufmsel/ops.hpp"

using namespace sufmsel;

namespace {

int unsolved_agg(GlobalState& gs) {
  REQUIRE(gs.unsolved.size() == 1);
  return gs.unsolved.front();
}

}  // namespace

TEST_CASE("group keeps first-seen order") {
  TagScratch s;
  s.reserve(4);
  std::vector<int> objs{10, 11, 12, 13, 14};
  std::vector<int> tags{3, 1, 3, 4, 1};
  auto g = group<int>(objs, tags, s);
  REQUIRE(g.size() == 3);
  CHECK(g[0] == std::vector<int>{10, 12});
  CHECK(g[1] == std::vector<int>{11, 14});
  CHECK(g[2] == std::vector<int>{13});
  std::vector<int> bad{0};
  std::vector<int> one{1};
  CHECK_THROWS(group<int>(one, bad, s));
}

TEST_CASE("refining slice gives exact labels and rank status") {
  auto t = load_text("mississippi$");
  Meter m;
  GlobalState gs(t, m);
  std::vector<std::int64_t> r{3, 5};
  initialize(gs, r);
  int a = unsolved_agg(gs);
  gs.unsolved.clear();
  int lead = gs.ag[a].lead;
  // i$ < ippi$ < issi...
  gs.col_tag[11] = 1;
  gs.col_tag[8] = 2;
  gs.col_tag[5] = 3;
  gs.col_tag[2] = 3;
  auto out = slice(gs, a, 3, true, lead);
  REQUIRE(out.parts.size() == 3);
  CHECK(out.created == 3);
  CHECK(m.events[static_cast<int>(EventKind::Creation)] == 3);
  std::vector<std::int32_t> labels, sizes;
  std::vector<Status> st;
  for (auto [tag, x] : out.parts) {
    int u = gs.ag[x].root;
    CHECK(out.tracked[tag] == u);
    labels.push_back(gs[u].label);
    sizes.push_back(gs[u].size);
    st.push_back(gs[u].status);
    gs.ag[x].group = gs[u].status == Status::Unsolved ? Group::Unsolved : Group::Exhausted;
    gs.ag[x].lead = u;
  }
  CHECK(labels == std::vector<std::int32_t>{1, 2, 3});
  CHECK(sizes == std::vector<std::int32_t>{1, 1, 2});
  CHECK(st == std::vector<Status>{Status::Exhausted, Status::Solved, Status::Unsolved});
  CHECK(gs.verify() == "");
}

TEST_CASE("unrefined slice cannot split an unsolved subproblem") {
  auto t = load_text("mississippi$");
  Meter m;
  GlobalState gs(t, m);
  std::vector<std::int64_t> r{3, 5};
  initialize(gs, r);
  int a = unsolved_agg(gs);
  for (int c : {2, 5}) gs.col_tag[c] = 1;
  for (int c : {8, 11}) gs.col_tag[c] = 2;
  CHECK_THROWS_AS(slice(gs, a, 2, false), StructureError);
}

TEST_CASE("unrefined slice of an exhausted block shares its label") {
  auto t = load_text("mississippi$");
  Meter m;
  GlobalState gs(t, m);
  std::vector<std::int64_t> r{3};
  initialize(gs, r);
  // the block after the i's: m p p s s s s, exhausted and degenerate
  int u = gs.sub_tail;
  REQUIRE(gs[u].size == 7);
  int a = gs[u].agg;
  int k = 0;
  for (int c : gs.columns(a)) gs.col_tag[c] = 1 + (k++ % 2);
  auto out = slice(gs, a, 2, false);
  REQUIRE(out.parts.size() == 2);
  for (auto [tag, x] : out.parts) {
    int v = gs.ag[x].root;
    CHECK(gs[v].label == 5);
    CHECK(gs[v].shared);
    CHECK(gs[v].status == Status::Exhausted);
    gs.ag[x].group = Group::Exhausted;
  }
  CHECK(gs.verify() == "");
}

TEST_CASE("engine runs keep every invariant through joins") {
  // periodic text forces cyclic agglomerates, joins and slice-joins
  auto t = load_text("abaababaabaababaababaabaababaabab");
  for (std::int64_t r = 2; r <= t.size(); r += 3) {
    std::vector<std::int64_t> rs{r};
    Meter m;
    GlobalState gs(t, m);
    gs.debug = true;
    initialize(gs, rs);
    CHECK_NOTHROW(run(gs));
    CHECK(gs.verify() == "");
    CHECK(m.events[static_cast<int>(EventKind::Fusion)] + m.events[static_cast<int>(EventKind::Creation)] > 0);
  }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "sufmsel/driver.hpp"
#include "sufmsel/lcp.hpp"
#include "sufmsel/oracle.hpp"

using namespace sufmsel;

TEST_CASE("mississippi neighborhoods") {
  auto t = load_text("mississippi$");
  auto res = multiselect_consecutive(t, 3, 5);
  REQUIRE(res.positions == std::vector<std::int32_t>{8, 5, 2});
  auto st = lcp_state(res);
  auto before = res.metrics.symbol_cmp;
  CHECK(st.lcp_query(0, 1) == 1);
  CHECK(st.lcp_query(1, 2) == 4);
  CHECK(st.lcp_query(2, 0) == 1);
  CHECK(res.metrics.symbol_cmp == before);
  CHECK_THROWS(st.lcp_query(1, 1));
  CHECK_THROWS(st.lcp_query(0, 3));
}

TEST_CASE("refinement inserts between neighborhoods") {
  LcpState st({2, 5});
  std::vector<std::int32_t> none;
  st.lcp_on_refine(1, none);
  CHECK(st.size() == 3);
  // middle neighborhood splits in three at depth 7 and 9
  std::vector<std::int32_t> v{7, 9};
  st.lcp_on_refine(1, v);
  CHECK(st.list() == std::vector<std::int32_t>{2, 7, 9, 5});
  CHECK(st.lcp_query(1, 3) == 7);
  CHECK(st.lcp_query(2, 3) == 9);
  CHECK(st.lcp_query(0, 4) == 2);
}

TEST_CASE("queries are range minima of stored values") {
  std::mt19937 rng(4);
  std::vector<std::int32_t> v(300);
  for (auto& x : v) x = rng() % 50;
  LcpState st(v);
  for (int it = 0; it < 2000; ++it) {
    std::size_t i = rng() % 301, j = rng() % 301;
    if (i == j) continue;
    auto lo = std::min(i, j), hi = std::max(i, j);
    std::int32_t m = 1 << 30;
    for (auto k = lo; k < hi; ++k) m = std::min(m, v[k]);
    REQUIRE(st.lcp_query(i, j) == m);
  }
}

TEST_CASE("selected pairs match the oracle lcp") {
  std::mt19937 rng(8);
  for (int it = 0; it < 200; ++it) {
    int n = 1 + rng() % 80;
    std::vector<std::uint32_t> body(n);
    for (auto& x : body) x = rng() % 3;
    auto t = Text::from_symbols(body);
    std::vector<std::int64_t> r;
    for (int k = 1; k <= n + 1; ++k)
      if (rng() % 3 == 0) r.push_back(k);
    if (r.size() < 2) continue;
    auto res = multiselect(t, r);
    auto st = lcp_state(res);
    for (std::size_t i = 0; i < res.positions.size(); ++i)
      for (std::size_t j = i + 1; j < res.positions.size(); ++j)
        REQUIRE(st.lcp_query(i, j) == oracle_lcp(t, res.positions[i], res.positions[j]));
  }
}

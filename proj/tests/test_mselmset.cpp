#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>

#include "sufmsel/mselmset.hpp"
#include "sufmsel/oracle.hpp"

using namespace sufmsel;

namespace {

std::vector<std::vector<std::int64_t>> key_sets(const PivotalDecomposition& d, const std::vector<std::int64_t>& keys) {
  std::vector<std::vector<std::int64_t>> out;
  for (int k = 0; k < d.blocks(); ++k) {
    std::vector<std::int64_t> b;
    for (int i : d.block(k)) b.push_back(keys[i]);
    std::sort(b.begin(), b.end());
    out.push_back(b);
  }
  return out;
}

}  // namespace

TEST_CASE("matches sort and group on random multisets") {
  std::mt19937 rng(11);
  for (int it = 0; it < 3000; ++it) {
    int n = 1 + rng() % 200;
    int u = 1 + rng() % 8;
    std::vector<std::int64_t> keys(n);
    for (auto& k : keys) k = rng() % u;
    std::vector<std::int64_t> ranks;
    int dens = 1 + rng() % 20;
    for (int r = 1; r <= n; ++r)
      if (rng() % dens == 0) ranks.push_back(r);
    std::vector<int> items(n);
    for (int i = 0; i < n; ++i) items[i] = i;
    Meter m;
    auto cmp = metered([&](int a, int b) { return keys[a] < keys[b] ? -1 : (keys[a] > keys[b] ? 1 : 0); }, m);
    auto got = mselmset(items, ranks, cmp);
    auto exp = oracle_mselmset(keys, ranks);
    REQUIRE(got.bounds == exp.bounds);
    REQUIRE(key_sets(got, keys) == key_sets(exp, keys));
    CHECK(got.blocks() == 2 * static_cast<int>(exp.t()) + 1);
  }
}

TEST_CASE("F blocks hold equal keys and contain their rank") {
  std::vector<std::int64_t> keys{5, 1, 5, 3, 3, 9, 5};
  std::vector<std::int64_t> ranks{2, 5};
  std::vector<int> items{0, 1, 2, 3, 4, 5, 6};
  auto d = mselmset(items, ranks, [&](int a, int b) { return keys[a] < keys[b] ? -1 : (keys[a] > keys[b] ? 1 : 0); });
  // sorted: 1 3 3 5 5 5 9; rank 2 hits the 3s, rank 5 the 5s
  CHECK(d.bounds == std::vector<int>{0, 1, 3, 3, 6, 7});
}

TEST_CASE("no ranks gives a single M block") {
  std::vector<int> items{0, 1, 2};
  Meter m;
  auto d = mselmset(items, {}, metered([](int, int) { return 0; }, m));
  CHECK(d.blocks() == 1);
  CHECK(m.key_cmp == 0);
}

TEST_CASE("invalid ranks are rejected") {
  std::vector<int> items{0, 1, 2};
  auto cmp = [](int a, int b) { return a < b ? -1 : (a > b); };
  std::vector<std::int64_t> bad1{0}, bad2{2, 2}, bad3{4};
  CHECK_THROWS(mselmset(items, bad1, cmp));
  CHECK_THROWS(mselmset(items, bad2, cmp));
  CHECK_THROWS(mselmset(items, bad3, cmp));
}

TEST_CASE("select_kth") {
  std::mt19937 rng(3);
  for (int it = 0; it < 200; ++it) {
    int n = 1 + rng() % 300;
    std::vector<int> keys(n), items(n);
    for (int i = 0; i < n; ++i) keys[i] = rng() % 50, items[i] = i;
    auto sorted = keys;
    std::sort(sorted.begin(), sorted.end());
    int k = 1 + rng() % n;
    int got = select_kth(items, k, [&](int a, int b) { return keys[a] < keys[b] ? -1 : (keys[a] > keys[b]); });
    CHECK(keys[got] == sorted[k - 1]);
  }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <random>
#include <set>

#include "json.hpp"
#include "sufmsel/apps.hpp"
#include "sufmsel/oracle.hpp"

using namespace sufmsel;

namespace {

using Signature = std::set<std::pair<std::int32_t, std::vector<std::int32_t>>>;

Signature tree_signature(const PartialTree& tr) {
  Signature sig;
  std::vector<std::vector<std::int32_t>> leaves(tr.nodes.size());
  // children always have larger indices than their parents, except nodes created later
  // on the right spine; a post-order walk handles both
  std::vector<std::pair<int, bool>> st{{0, false}};
  while (!st.empty()) {
    auto [u, done] = st.back();
    st.pop_back();
    if (!done) {
      st.push_back({u, true});
      for (int c : tr.nodes[u].children) st.push_back({c, false});
      continue;
    }
    if (tr.nodes[u].leaf >= 0) leaves[u].push_back(tr.nodes[u].leaf);
    for (int c : tr.nodes[u].children) leaves[u].insert(leaves[u].end(), leaves[c].begin(), leaves[c].end());
    auto s = leaves[u];
    std::sort(s.begin(), s.end());
    sig.insert({tr.nodes[u].depth, s});
  }
  return sig;
}

// groups of suffixes sharing a prefix, each at the deepest length it survives
Signature naive_signature(const Text& t, const std::vector<std::int32_t>& pos) {
  std::map<std::vector<std::int32_t>, std::int32_t> deepest;
  std::int32_t n = t.size();
  for (std::int32_t l = 0; l <= n; ++l) {
    std::map<std::string, std::vector<std::int32_t>> g;
    for (auto p : pos) {
      if (n - p + 1 < l) continue;
      std::string key;
      for (std::int32_t k = 0; k < l; ++k) key.push_back(t.display(p + k));
      g[key].push_back(p);
    }
    for (auto& [k, v] : g) {
      std::sort(v.begin(), v.end());
      deepest[v] = l;
    }
  }
  Signature sig;
  for (auto& [v, l] : deepest) sig.insert({l, v});
  std::vector<std::int32_t> all(pos);
  std::sort(all.begin(), all.end());
  sig.insert({0, all});
  return sig;
}

}  // namespace

TEST_CASE("mississippi worked examples") {
  auto t = load_text("mississippi$");
  CHECK(bwt_segment(t, 1, 12).text == "ipssm$pissii");
  CHECK(bwt_segment(t, 3, 5).text == "ssm");
  std::vector<std::int64_t> r{1, 4, 7, 10};
  CHECK(bwt_sample(t, r).text == "isps");
  std::vector<std::int64_t> one{1};
  CHECK(bwt_sample(t, one).text == "i");
  auto s = sample_text_suffixes(t, 3);
  CHECK(s.text == "$pss");
  CHECK(s.positions == std::vector<std::int32_t>{1, 10, 7, 4});
  auto pi = sa_chunk(t, 3, 5);
  CHECK(pi.positions == std::vector<std::int32_t>{8, 5, 2});
  CHECK(pi.lcps == std::vector<std::int32_t>{1, 4});
  CHECK(sa_chunk(t, 1, 12).positions == std::vector<std::int32_t>{12, 11, 8, 5, 2, 1, 10, 9, 7, 4, 6, 3});
  CHECK(partial_index(t, r).positions == std::vector<std::int32_t>{12, 5, 10, 4});
  CHECK(sa_chunk(t, 4, 4).lcps.empty());
}

TEST_CASE("edge cases of the L column") {
  auto t = load_text("");
  CHECK(bwt_segment(t, 1, 1).text == "$");
  auto u = load_text("ba");
  CHECK(bwt_segment(u, 1, 1).text == "a");
  CHECK(sample_text_suffixes(u, 3).positions == std::vector<std::int32_t>{1});
  CHECK_THROWS(sample_text_suffixes(u, 0));
  CHECK_THROWS(bwt_segment(u, 0, 2));
}

TEST_CASE("segments tile into the oracle bwt") {
  std::mt19937 rng(6);
  for (int it = 0; it < 100; ++it) {
    int n = rng() % 50;
    std::string s;
    for (int i = 0; i < n; ++i) s.push_back(static_cast<char>('a' + rng() % 3));
    auto t = load_text(s);
    std::string got;
    for (std::int64_t a = 1; a <= t.size();) {
      std::int64_t b = std::min<std::int64_t>(t.size(), a + rng() % 7);
      got += bwt_segment(t, a, b).text;
      a = b + 1;
    }
    REQUIRE(got == oracle_bwt(t));
    for (int q = 1; q <= 4; ++q) REQUIRE(sample_text_suffixes(t, q).text == oracle_macro_sample(t, q));
  }
}

TEST_CASE("partial suffix tree from lcp intervals") {
  auto t = load_text("mississippi$");
  auto tr = build_partial_suffix_tree(t, sa_chunk(t, 3, 5));
  REQUIRE(tr.nodes[0].children.size() == 1);
  const auto& i = tr.nodes[tr.nodes[0].children[0]];
  CHECK(i.depth == 1);
  REQUIRE(i.children.size() == 2);
  CHECK(tr.nodes[i.children[0]].leaf == 8);
  const auto& issi = tr.nodes[i.children[1]];
  CHECK(issi.depth == 4);
  REQUIRE(issi.children.size() == 2);
  CHECK(tr.nodes[issi.children[0]].leaf == 5);
  CHECK(tr.nodes[issi.children[1]].leaf == 2);
  CHECK(tr.leaves() == 3);

  auto single = build_partial_suffix_tree(t, sa_chunk(t, 6, 6));
  CHECK(single.nodes[0].children.size() == 1);
  PartialIndex bad{{1, 2}, {12, 11}, {}, {}};
  CHECK_THROWS(build_partial_suffix_tree(t, bad));
}

TEST_CASE("tree shapes match a naive trie") {
  std::mt19937 rng(12);
  for (int it = 0; it < 100; ++it) {
    int n = 1 + rng() % 20;
    std::string s;
    for (int i = 0; i < n; ++i) s.push_back(static_cast<char>('a' + rng() % 2));
    auto t = load_text(s);
    std::vector<std::int64_t> r;
    for (int k = 1; k <= t.size(); ++k)
      if (it % 2 == 0 || rng() % 3 == 0) r.push_back(k);
    if (r.empty()) continue;
    auto pi = partial_index(t, r);
    REQUIRE(tree_signature(build_partial_suffix_tree(t, pi)) == naive_signature(t, pi.positions));
  }
}

TEST_CASE("tree rendering lists edge labels") {
  auto t = load_text("mississippi$");
  auto out = render_tree(t, build_partial_suffix_tree(t, sa_chunk(t, 3, 5)));
  CHECK(out.find("ssi  (4)") != std::string::npos);
  CHECK(out.find("ppi$  [8]") != std::string::npos);
}

TEST_CASE("json and tsv output") {
  auto t = load_text("mississippi$");
  auto pi = sa_chunk(t, 3, 5);
  auto j = nlohmann::json::parse(to_json(pi, t));
  CHECK(j["schema_version"] == kSchemaVersion);
  CHECK(j["positions"].get<std::vector<std::int32_t>>() == pi.positions);
  CHECK(j["lcps"].get<std::vector<std::int32_t>>() == pi.lcps);
  CHECK(j["ranks"].get<std::vector<std::int64_t>>() == pi.ranks);
  CHECK(j["metrics"]["symbol_cmp"] == pi.metrics.symbol_cmp);
  auto seg = bwt_segment(t, 5, 7);
  auto k = nlohmann::json::parse(to_json(seg, t));
  CHECK(k["symbols"].get<std::vector<std::string>>() == std::vector<std::string>{"m", "$", "p"});
  CHECK(to_tsv(pi) == "rank\tposition\tlcp\n3\t8\t\n4\t5\t1\n5\t2\t4\n");
  CHECK(to_tsv(seg).find("6\t1\t$") != std::string::npos);
  auto bin = Text::from_symbols({1, 200});
  std::vector<std::int64_t> r{1, 2, 3};
  auto b = bwt_sample(bin, r);
  auto syms = nlohmann::json::parse(to_json(b, bin))["symbols"].get<std::vector<std::string>>();
  CHECK(syms == std::vector<std::string>{"\\xc8", "$", "\\x01"});
}

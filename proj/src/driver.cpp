#include "sufmsel/driver.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "sufmsel/mselmset.hpp"
#include "sufmsel/ops.hpp"
#include "sufmsel/rap.hpp"

namespace sufmsel {

void check_ranks(std::int32_t n, std::span<const std::int64_t> ranks) {
  for (std::size_t i = 0; i < ranks.size(); ++i) {
    if (ranks[i] < 1 || ranks[i] > n) throw std::invalid_argument("rank " + std::to_string(ranks[i]) + " outside [1, N]");
    if (i && ranks[i] <= ranks[i - 1]) throw std::invalid_argument("ranks must be strictly increasing");
  }
}

void build_from_groups(GlobalState& gs, const std::vector<SeedGroup>& groups) {
  for (const auto& g : groups) {
    if (g.positions.empty()) continue;
    int u = gs.new_sp();
    auto& s = gs[u];
    s.label = g.label;
    s.size = static_cast<std::int32_t>(g.positions.size());
    s.status = g.status;
    s.degenerate = g.degenerate;
    s.root = u;
    s.guide = g.status == Status::Unsolved ? u : NIL;
    for (auto i : g.positions) {
      gs.col_r[i] = i;
      gs.col_end[i] = i;
      gs.col_attach(i, u);
    }
    int a = gs.new_agg();
    auto& A = gs.ag[a];
    A.root = u;
    A.ncols = s.size;
    A.lead = u;
    A.lead_depth = 0;
    gs[u].agg = a;
    gs.sub_push_back(u);
    if (g.status == Status::Unsolved) {
      A.group = Group::Unsolved;
      gs.unsolved.push_back(a);
    } else {
      A.group = Group::Exhausted;
    }
    gs.work += s.size;
  }
}

void initialize(GlobalState& gs, std::span<const std::int64_t> ranks) {
  check_ranks(gs.N, ranks);
  if (!ranks.empty() && ranks[0] == 1) throw std::invalid_argument("rank 1 is answered outside the engine");
  gs.ranks = Ranks(gs.N, ranks);
  std::vector<std::int32_t> items(gs.N);
  std::iota(items.begin(), items.end(), 1);
  const Text& t = *gs.text;
  Meter& m = *gs.meter;
  auto dec = mselmset(std::move(items), ranks, [&](std::int32_t i, std::int32_t j) { return cmp_symbols(t, i, j, m); });
  std::vector<SeedGroup> groups;
  std::int32_t off = 0;
  for (int k = 0; k < dec.blocks(); ++k) {
    auto b = dec.block(k);
    if (b.empty()) continue;
    SeedGroup g;
    g.label = off;
    g.positions.assign(b.begin(), b.end());
    auto n = static_cast<std::int32_t>(b.size());
    if (PivotalDecomposition::is_pivotal(k)) {
      g.status = gs.status_of(off, n);
    } else {
      g.status = Status::Exhausted;
      g.degenerate = true;
    }
    off += n;
    groups.push_back(std::move(g));
  }
  build_from_groups(gs, groups);
}

void run(GlobalState& gs) {
  while (!gs.unsolved.empty()) {
    int a = gs.unsolved.front();
    gs.unsolved.pop_front();
    if (a >= static_cast<int>(gs.ag.size()) || !gs.ag[a].alive || gs.ag[a].group != Group::Unsolved) continue;
    rap(gs, a);
  }
}

std::vector<std::pair<std::int64_t, std::int32_t>> finalize(GlobalState& gs) {
  std::vector<std::pair<std::int64_t, std::int32_t>> out;
  for (int u = gs.sub_head; u != NIL; u = gs[u].next) {
    const auto& s = gs[u];
    if (s.size != 1 || s.nchildren != 0) continue;
    int c = s.col_head;
    int x = u;
    std::int32_t y = 0;
    while (x != NIL && gs[x].size == 1) {
      if (gs[x].status == Status::Solved) out.emplace_back(gs[x].label + 1, c + y);
      x = gs[x].parent;
      ++y;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::int32_t scan_lcp(const Text& t, std::int32_t i, std::int32_t j, Meter& m) {
  std::int32_t n = t.size(), l = 0;
  while (i + l <= n && j + l <= n && cmp_symbols(t, i + l, j + l, m) == 0) ++l;
  return l;
}

void attach_lcps(const Text& t, SelectionResult& res) {
  res.lcps.clear();
  for (std::size_t k = 1; k < res.positions.size(); ++k)
    res.lcps.push_back(scan_lcp(t, res.positions[k - 1], res.positions[k], res.lcp_metrics));
}

SelectionResult collect(const Text& t, GlobalState& gs, bool with_first, std::size_t expect) {
  SelectionResult res;
  if (with_first) {
    res.ranks.push_back(1);
    res.positions.push_back(t.size());
  }
  for (auto [r, p] : finalize(gs)) {
    res.ranks.push_back(r);
    res.positions.push_back(p);
  }
  if (res.ranks.size() != expect)
    throw StructureError("finalization produced " + std::to_string(res.ranks.size()) + " entries, expected " +
                         std::to_string(expect));
  res.metrics = *gs.meter;
  attach_lcps(t, res);
  return res;
}

void apply(GlobalState& gs, const Options& opt) {
  gs.debug = opt.debug;
  gs.trace = opt.trace;
}

}  // namespace

SelectionResult multiselect(const Text& t, std::span<const std::int64_t> ranks, const Options& opt) {
  check_ranks(t.size(), ranks);
  Meter m;
  GlobalState gs(t, m);
  apply(gs, opt);
  bool first = !ranks.empty() && ranks[0] == 1;
  auto rest = first ? ranks.subspan(1) : ranks;
  if (!rest.empty()) {
    initialize(gs, rest);
    if (gs.debug) {
      auto msg = gs.verify();
      if (!msg.empty()) throw StructureError("after initialization: " + msg);
    }
    run(gs);
  }
  return collect(t, gs, first, ranks.size());
}

std::vector<int> suffix_visit(const GlobalState& gs) {
  std::vector<int> owner(gs.N + 1, NIL);
  for (std::int32_t c = 1; c <= gs.N; ++c) {
    int x = gs.col_owner[c];
    if (x == NIL) continue;
    for (std::int32_t y = 0; x != NIL; x = gs[x].parent, ++y) owner[c + y] = x;
  }
  return owner;
}

SelectionResult multiselect_consecutive(const Text& t, std::int64_t a, std::int64_t b, const Options& opt) {
  std::int32_t n = t.size();
  if (a < 1 || b > n || a > b) throw std::invalid_argument("consecutive range must satisfy 1 <= a <= b <= N");
  bool first = a == 1;
  std::int64_t a1 = first ? 2 : a;
  if (b < a1 + 2) {
    std::vector<std::int64_t> r;
    for (auto x = a; x <= b; ++x) r.push_back(x);
    return multiselect(t, r, opt);
  }

  Meter m;
  GlobalState g1(t, m);
  apply(g1, opt);
  std::vector<std::int64_t> ends{a1, b};
  initialize(g1, ends);
  run(g1);

  // intermediate stage: absolute neighborhoods, with the middle split by first symbol
  auto owner = suffix_visit(g1);
  std::vector<std::vector<std::int32_t>> members(g1.sp.size());
  for (std::int32_t i = 1; i <= n; ++i) members[owner[i]].push_back(i);

  std::vector<SeedGroup> groups;
  std::vector<std::int32_t> mid;
  std::int32_t off = 0;
  for (int u = g1.sub_head; u != NIL;) {
    SeedGroup g;
    g.label = g1[u].label;
    int v = u;
    while (v != NIL && g1[v].label == g.label) {
      g.positions.insert(g.positions.end(), members[v].begin(), members[v].end());
      g.degenerate = g.degenerate || g1[v].degenerate;
      v = g1[v].next;
    }
    u = v;
    if (g.label != off) throw StructureError("neighborhood labels are not contiguous");
    auto sz = static_cast<std::int32_t>(g.positions.size());
    off += sz;
    if (g.label + 1 > a1 && g.label + sz < b) {
      mid.insert(mid.end(), g.positions.begin(), g.positions.end());
      continue;
    }
    if (g.label < a1 && g.label + sz >= b) throw StructureError("interval ends were not separated");
    if (g.label + 1 == b && !mid.empty()) {
      if (static_cast<std::int64_t>(mid.size()) != b - a1 - 1) throw StructureError("middle block has wrong size");
      std::vector<std::int64_t> all(mid.size());
      std::iota(all.begin(), all.end(), 1);
      auto dec = mselmset(std::move(mid), std::span<const std::int64_t>(all),
                          [&](std::int32_t i, std::int32_t j) { return cmp_symbols(t, i, j, m); });
      std::int32_t moff = static_cast<std::int32_t>(a1);
      for (int k = 0; k < dec.blocks(); ++k) {
        auto blk = dec.block(k);
        if (blk.empty()) continue;
        if (!PivotalDecomposition::is_pivotal(k)) throw StructureError("nonempty M block in the middle");
        SeedGroup s;
        s.label = moff;
        s.positions.assign(blk.begin(), blk.end());
        s.status = blk.size() == 1 ? Status::Solved : Status::Unsolved;
        moff += static_cast<std::int32_t>(blk.size());
        groups.push_back(std::move(s));
      }
      mid.clear();
    }
    g.status = (sz == 1 && (g.label + 1 == a1 || g.label + 1 == b)) ? Status::Solved : Status::Exhausted;
    if (g.status == Status::Solved) g.degenerate = false;
    groups.push_back(std::move(g));
  }

  GlobalState g2(t, m);
  apply(g2, opt);
  std::vector<std::int64_t> r2;
  for (auto x = a1; x <= b; ++x) r2.push_back(x);
  g2.ranks = Ranks(n, r2);
  build_from_groups(g2, groups);
  if (g2.debug) {
    auto msg = g2.verify();
    if (!msg.empty()) throw StructureError("after intermediate stage: " + msg);
  }
  run(g2);
  return collect(t, g2, first, static_cast<std::size_t>(b - a + 1));
}

}  // namespace sufmsel

#include "sufmsel/rap.hpp"

#include <algorithm>
#include <string>

#include "sufmsel/mselmset.hpp"
#include "sufmsel/ops.hpp"

namespace sufmsel {

const char* kind_name(Kind k) {
  switch (k) {
    case Kind::GenericAcyclic: return "generic-acyclic";
    case Kind::GenericCyclic: return "generic-cyclic";
    case Kind::CoreCyclic: return "core-cyclic";
  }
  return "?";
}

Classification classify(GlobalState& gs, int a) {
  Classification cl;
  cl.cols = gs.columns(a);
  cl.inside.assign(cl.cols.size(), 0);
  int first = NIL;
  bool multi = false;
  std::int64_t collisions = 0;
  for (std::size_t i = 0; i < cl.cols.size(); ++i) {
    int c = cl.cols[i];
    auto r = gs.col_r[c];
    ++gs.work;
    if (r == gs.N) continue;
    int x = gs.col_owner[r + 1];
    if (x == NIL) throw StructureError("successor of a root suffix is not a contact suffix");
    if (gs.agg_of(x) != a) continue;
    cl.inside[i] = 1;
    if (x != gs.col_owner[c]) ++collisions;
    if (first == NIL) first = x;
    else if (x != first) multi = true;
  }
  gs.meter->add(EventKind::Collision, collisions);
  if (first == NIL) cl.kind = Kind::GenericAcyclic;
  else if (multi) cl.kind = Kind::GenericCyclic;
  else cl.kind = Kind::CoreCyclic, cl.core = first;
  return cl;
}

std::vector<ColumnKey> build_keys(GlobalState& gs, const Classification& cl) {
  std::size_t m = cl.cols.size();
  std::vector<ColumnKey> keys(m);
  auto terminal = [&](int c) {
    ColumnKey k;
    auto r = gs.col_r[c];
    if (r == gs.N) return k;
    int x = gs.col_owner[r + 1];
    k.label = gs[x].label;
    k.pos = r + 1;
    k.degenerate = gs[x].degenerate;
    return k;
  };
  if (cl.kind != Kind::CoreCyclic) {
    for (std::size_t i = 0; i < m; ++i) keys[i] = terminal(cl.cols[i]);
    gs.work += static_cast<std::int64_t>(m);
    return keys;
  }
  for (std::size_t i = 0; i < m; ++i) gs.pos_idx[cl.cols[i]] = static_cast<std::int32_t>(i);
  std::vector<char> done(m, 0);
  std::vector<int> chain;
  for (std::size_t i = 0; i < m; ++i) {
    int j = static_cast<int>(i);
    chain.clear();
    while (!done[j] && cl.inside[j]) {
      chain.push_back(j);
      j = gs.pos_idx[gs.col_r[cl.cols[j]] + 1];
    }
    if (!done[j]) {
      keys[j] = terminal(cl.cols[j]);
      done[j] = 1;
    }
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
      keys[*it] = keys[j];
      keys[*it].f += 1;
      done[*it] = 1;
      j = *it;
    }
    gs.work += 1 + static_cast<std::int64_t>(chain.size());
  }
  return keys;
}

namespace {

int cmp_terminal(GlobalState& gs, std::int32_t lx, std::int32_t px, bool dx, std::int32_t ly, std::int32_t py,
                 bool dy) {
  if (lx != ly) return lx < ly ? -1 : 1;
  if (lx >= 0 && dx && dy) return cmp_symbols(*gs.text, px, py, *gs.meter);
  return 0;
}

}  // namespace

int compare_keys(GlobalState& gs, const ColumnKey& x, const ColumnKey& y, std::int32_t core_label) {
  ++gs.meter->key_cmp;
  if (x.f == y.f) return cmp_terminal(gs, x.label, x.pos, x.degenerate, y.label, y.pos, y.degenerate);
  // the shorter run meets a core label where the longer one still repeats it
  if (x.f < y.f) {
    int c = cmp_terminal(gs, x.label, x.pos, x.degenerate, core_label, 0, false);
    if (c == 0) throw StructureError("terminal label equals core label");
    return c;
  }
  int c = cmp_terminal(gs, core_label, 0, false, y.label, y.pos, y.degenerate);
  if (c == 0) throw StructureError("terminal label equals core label");
  return c;
}

Tagging refine_leading(GlobalState& gs, int a, const Classification& cl, const std::vector<ColumnKey>& keys) {
  const auto& A = gs.ag[a];
  int w = A.lead;
  auto m = static_cast<std::int32_t>(cl.cols.size());
  if (gs[w].size != m) throw StructureError("leading subproblem size differs from column count");
  auto rk = gs.ranks.of(gs[w].label, m);
  for (auto& r : rk) r -= gs[w].label;
  std::int32_t core_label = cl.core == NIL ? 0 : gs[cl.core].label;
  std::vector<int> items(m);
  for (int i = 0; i < m; ++i) items[i] = i;
  auto dec = mselmset(std::move(items), std::span<const std::int64_t>(rk),
                      [&](int i, int j) { return compare_keys(gs, keys[i], keys[j], core_label); });
  Tagging tg;
  tg.tag.assign(m, 0);
  tg.pivotal.push_back(0);
  for (int k = 0; k < dec.blocks(); ++k) {
    auto b = dec.block(k);
    if (b.empty()) continue;
    ++tg.d;
    tg.pivotal.push_back(PivotalDecomposition::is_pivotal(k) ? 1 : 0);
    for (int i : b) tg.tag[i] = tg.d;
  }
  gs.work += m;
  return tg;
}

void distribute(GlobalState& gs, int a, const Classification& cl, const Tagging& tg, RapGroups& g) {
  std::vector<char> any_inside(tg.d + 1, 0);
  for (std::size_t i = 0; i < cl.cols.size(); ++i)
    if (cl.inside[i]) any_inside[tg.tag[i]] = 1;
  bool generic = cl.kind != Kind::CoreCyclic;
  int lead_depth = gs.ag[a].lead_depth;

  auto route = [&](int x, int tag) {
    auto& X = gs.ag[x];
    if (!tg.pivotal[tag]) {
      gs.meter->add(EventKind::Exhaustion, X.ncols);
      X.group = Group::Undecided;
      g.undecided.push_back(x);
    } else if (X.ncols == 1) {
      gs.meter->add(EventKind::Discovery, 1);
      X.group = Group::Exhausted;
    } else if (generic && any_inside[tag]) {
      X.group = Group::Unsolved;
      gs.unsolved.push_back(x);
    } else {
      X.group = Group::Joinable;
      g.joinable.push_back(x);
    }
  };

  if (tg.d == 1) {
    route(a, 1);
    return;
  }
  for (std::size_t i = 0; i < cl.cols.size(); ++i) gs.col_tag[cl.cols[i]] = tg.tag[i];
  auto out = slice(gs, a, tg.d, true, gs.ag[a].lead);
  for (auto [tag, x] : out.parts) {
    gs.ag[x].lead = out.tracked[tag];
    gs.ag[x].lead_depth = lead_depth;
    route(x, tag);
  }
}

void process_undecided(GlobalState& gs, RapGroups& g) {
  for (int x : g.undecided) {
    int root = gs.ag[x].root;
    struct Lead {
      int node, depth;
    };
    std::vector<Lead> leads;
    bool rest = false;
    std::vector<std::pair<int, int>> st{{root, 0}};
    while (!st.empty()) {
      auto [s, depth] = st.back();
      st.pop_back();
      ++gs.work;
      int gd = gs[s].guide;
      if (gd != NIL) {
        leads.push_back({gd, depth - gs[s].guide_dist});
        int t = static_cast<int>(leads.size());
        std::vector<int> sub{s};
        while (!sub.empty()) {
          int u = sub.back();
          sub.pop_back();
          ++gs.work;
          for (int c = gs[u].col_head; c != NIL; c = gs.col_next[c]) gs.col_tag[c] = t, ++gs.work;
          for (int c = gs[u].skip_first; c != NIL; c = gs[c].skip_next) sub.push_back(c);
        }
        continue;
      }
      for (int c = gs[s].col_head; c != NIL; c = gs.col_next[c]) gs.col_tag[c] = -1, rest = true, ++gs.work;
      for (int c = gs[s].skip_first; c != NIL; c = gs[c].skip_next) st.push_back({c, depth + gs[c].skip_dist});
    }
    int nl = static_cast<int>(leads.size());
    if (nl == 0) {
      gs.ag[x].group = Group::Exhausted;
      continue;
    }
    if (nl == 1 && !rest) {
      gs.ag[x].group = Group::Unsolved;
      gs.ag[x].lead = leads[0].node;
      gs.ag[x].lead_depth = leads[0].depth;
      gs.unsolved.push_back(x);
      continue;
    }
    int d = nl + 1;
    for (int c : gs.columns(x))
      if (gs.col_tag[c] == -1) gs.col_tag[c] = d;
    auto out = slice(gs, x, d, false);
    for (auto [tag, y] : out.parts) {
      if (tag <= nl) {
        gs.ag[y].group = Group::Unsolved;
        gs.ag[y].lead = leads[tag - 1].node;
        gs.ag[y].lead_depth = leads[tag - 1].depth;
        gs.unsolved.push_back(y);
      } else {
        gs.ag[y].group = Group::Exhausted;
      }
    }
  }
  g.undecided.clear();
}

void process_joinable(GlobalState& gs, RapGroups& g) {
  std::deque<int> work(g.joinable.begin(), g.joinable.end());
  std::size_t stalled = 0;
  while (!work.empty()) {
    int x = work.front();
    work.pop_front();
    int px = join_target(gs, x);
    int y = gs.agg_of(px);
    auto& Y = gs.ag[y];
    if (Y.group == Group::Joinable) {
      // its own target has to settle first
      work.push_back(x);
      if (++stalled > work.size()) throw StructureError("joinable agglomerates form a cycle");
      continue;
    }
    stalled = 0;
    int ncols = gs.ag[x].ncols;
    if (Y.group == Group::Unsolved) {
      join(gs, x, y);
    } else if (Y.ncols == ncols) {
      int depth_px = gs.col_r[gs[px].col_head] - gs[px].col_head;
      int lead = gs.ag[x].lead;
      int lead_depth = gs.ag[x].lead_depth + depth_px + 1;
      join(gs, x, y);
      Y.group = Group::Unsolved;
      Y.lead = lead;
      Y.lead_depth = lead_depth;
      gs.unsolved.push_back(y);
    } else {
      slice_join(gs, x, y);
      gs.ag[x].group = Group::Unsolved;
      gs.unsolved.push_back(x);
    }
  }
  g.joinable.clear();
}

void rap(GlobalState& gs, int a) {
  std::int64_t w0 = gs.work, c0 = gs.created, e0 = gs.meter->events_total();
  gs.ag[a].group = Group::None;
  int ncols = gs.ag[a].ncols;

  auto cl = classify(gs, a);
  auto keys = build_keys(gs, cl);
  auto tg = refine_leading(gs, a, cl, keys);
  RapGroups g;
  distribute(gs, a, cl, tg, g);
  process_undecided(gs, g);
  process_joinable(gs, g);

  ++gs.rap_count;
  std::int64_t created = gs.created - c0;
  std::int64_t work = gs.work - w0;
  gs.work_ratio_max = std::max(gs.work_ratio_max, static_cast<double>(work) / static_cast<double>(ncols + created + 1));
  if (gs.trace) gs.trace({a, static_cast<int>(cl.kind), ncols, tg.d, static_cast<int>(created), work});
  if (gs.meter->events_total() == e0) throw StructureError("rap fired no event on agglomerate " + std::to_string(a));
  if (gs.debug) {
    auto msg = gs.verify();
    if (!msg.empty()) throw StructureError("after rap " + std::to_string(gs.rap_count) + ": " + msg);
  }
}

}  // namespace sufmsel

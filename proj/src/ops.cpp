#include "sufmsel/ops.hpp"

#include <algorithm>

namespace sufmsel {

namespace {

int merge_tag(int t, int x, int mixed) {
  if (t == 0) return x;
  return t == x ? t : mixed;
}

// s stopped being a skip node; hand its only skip child the merged chain
void collapse_skip(GlobalState& gs, int s) {
  int below = gs[s].skip_first;
  int p = gs[s].skip_parent;
  gs.skip_remove(below);
  int nd = gs[below].skip_dist + gs[s].skip_dist;
  int g = gs[below].guide, gd = gs[below].guide_dist;
  if (gs[s].guide != NIL) {
    g = gs[s].guide;
    gd = nd - (gs[s].skip_dist - gs[s].guide_dist);
  }
  int ctop = gs[s].chain_top;
  gs.skip_remove(s);
  gs[s].chain_top = gs[s].guide = NIL;
  gs.skip_add(p, below);
  gs[below].skip_dist = nd;
  gs[below].chain_top = ctop;
  gs[below].guide = g;
  gs[below].guide_dist = g == NIL ? 0 : gd;
}

void set_roots_below(GlobalState& gs, int s, int root) {
  std::vector<int> st{s};
  while (!st.empty()) {
    int u = st.back();
    st.pop_back();
    ++gs.work;
    if (gs[u].ncols > 0) gs[u].root = root;
    for (int c = gs[u].skip_first; c != NIL; c = gs[c].skip_next) st.push_back(c);
  }
}

}  // namespace

int join_target(const GlobalState& gs, int a) {
  int px = NIL;
  for (int c : gs.columns(a)) {
    auto r = gs.col_r[c];
    if (r >= gs.N) throw StructureError("root suffix has no successor");
    int x = gs.col_owner[r + 1];
    if (x == NIL) throw StructureError("successor of a root suffix is not a contact suffix");
    if (px == NIL) px = x;
    else if (px != x) throw StructureError("agglomerate is not joinable");
  }
  return px;
}

SliceOutput slice(GlobalState& gs, int a, int d, bool refine, int track) {
  const int mixed = d + 1;
  const std::int64_t stamp = ++gs.slice_stamp;
  int root = gs.ag[a].root;
  gs.scratch.reserve(d + 1);

  auto pre = gs.skip_preorder(root);
  std::vector<int> ncols_tag(d + 2, 0);
  for (auto it = pre.rbegin(); it != pre.rend(); ++it) {
    int u = *it;
    int t = 0;
    for (int c = gs[u].col_head; c != NIL; c = gs.col_next[c]) {
      int x = gs.col_tag[c];
      if (x < 1 || x > d) throw StructureError("untagged column");
      ++ncols_tag[x];
      t = merge_tag(t, x, mixed);
      ++gs.work;
    }
    for (int s = gs[u].skip_first; s != NIL; s = gs[s].skip_next) t = merge_tag(t, gs[s].tag, mixed);
    gs[u].tag = t;
    ++gs.work;
  }
  if (gs[root].tag != mixed) throw StructureError("slice needs at least two tags");

  struct Yrec {
    int old;
    bool refinable;
    int first, count;  // range in `pieces`
  };
  std::vector<Yrec> ys;
  std::vector<int> pieces;
  std::vector<std::vector<int>> tops;
  SliceOutput out;
  out.tracked.assign(d + 2, NIL);

  auto refinable = [&](int u) {
    const auto& s = gs[u];
    if (!refine || s.degenerate || s.shared) return false;
    return s.status == Status::Unsolved || (s.ncols > 0 && s.status != Status::Solved);
  };
  auto new_piece = [&](int old, int tag, bool ref) {
    int p = gs.new_sp();
    auto& o = gs[old];
    auto& n = gs[p];
    n.label = o.label;
    n.status = o.status;
    n.degenerate = o.degenerate;
    n.shared = o.shared || !ref;
    n.tag = tag;
    n.stamp = stamp;
    n.fp = static_cast<int>(ys.size());
    n.aux = NIL;
    pieces.push_back(p);
    ++gs.work;
    return p;
  };

  std::vector<int> objs, otags, cols;
  for (auto it = pre.rbegin(); it != pre.rend(); ++it) {
    int s = *it;
    if (gs[s].tag != mixed) continue;
    // objects: columns (encoded as ~c) and child nodes
    objs.clear();
    otags.clear();
    for (int c = gs[s].col_head; c != NIL; c = gs.col_next[c]) {
      objs.push_back(~c);
      otags.push_back(gs.col_tag[c]);
    }
    for (int c = gs[s].skip_first; c != NIL; c = gs[c].skip_next) {
      if (gs[c].tag == mixed) {
        for (int p : tops[gs[c].aux]) {
          objs.push_back(p);
          otags.push_back(gs[p].tag);
        }
      } else {
        int top = gs[c].chain_top;
        gs[top].stamp = stamp;
        gs[top].fp = -1;
        gs[top].aux = c;
        objs.push_back(top);
        otags.push_back(gs[c].tag);
      }
      ++gs.work;
    }
    auto groups = group<int>(objs, otags, gs.scratch);
    bool ref = refinable(s);
    Yrec y{s, ref, static_cast<int>(pieces.size()), 0};
    std::vector<int> lower;
    for (auto& g : groups) {
      int tag = g[0] < 0 ? gs.col_tag[~g[0]] : (gs[g[0]].fp == -1 && gs[g[0]].stamp == stamp ? gs[gs[g[0]].aux].tag : gs[g[0]].tag);
      int p = new_piece(s, tag, ref);
      std::int32_t size = 0;
      for (int o : g) {
        if (o < 0) {
          gs.col_attach(~o, p);
          ++size;
        } else {
          size += gs[o].size;
          gs.child_add_front(p, o);
        }
      }
      gs[p].size = size;
      lower.push_back(p);
    }
    y.count = static_cast<int>(lower.size());
    ys.push_back(y);
    // the chain above s: unary, no columns, same suffix counts
    int stop = gs[s].skip_parent;
    for (int u = gs[s].parent; u != stop; u = gs[u].parent) {
      bool r = refinable(u);
      Yrec yu{u, r, static_cast<int>(pieces.size()), 0};
      std::vector<int> up;
      for (int q : lower) {
        int p = new_piece(u, gs[q].tag, r);
        gs[p].size = gs[q].size;
        gs.child_add_front(p, q);
        up.push_back(p);
      }
      yu.count = static_cast<int>(up.size());
      ys.push_back(yu);
      lower = std::move(up);
    }
    gs[s].aux = static_cast<int>(tops.size());
    tops.push_back(std::move(lower));
  }

  // finishing: order the pieces of each old node by tag (LSD radix on (fp, tag))
  {
    std::vector<int> buf(pieces.size()), cnt(std::max<std::size_t>(d + 2, ys.size() + 1), 0);
    auto pass = [&](auto key, int buckets) {
      std::fill(cnt.begin(), cnt.begin() + buckets + 1, 0);
      for (int p : pieces) ++cnt[key(p) + 1];
      for (int i = 0; i < buckets; ++i) cnt[i + 1] += cnt[i];
      for (int p : pieces) buf[cnt[key(p)]++] = p;
      pieces.swap(buf);
    };
    pass([&](int p) { return gs[p].tag; }, d + 1);
    pass([&](int p) { return gs[p].fp; }, static_cast<int>(ys.size()));
    gs.work += static_cast<std::int64_t>(pieces.size());
  }
  for (std::size_t i = 0, k = 0; k < ys.size(); ++k) {
    auto& y = ys[k];
    int old = y.old;
    std::int32_t e = gs[old].label;
    for (int j = 0; j < y.count; ++j, ++i) {
      int p = pieces[i];
      if (y.refinable) {
        gs[p].label = e;
        e += gs[p].size;
        gs[p].status = gs.status_of(gs[p].label, gs[p].size);
      } else {
        if (gs[old].status == Status::Unsolved) throw StructureError("unsolved node split without refinement");
        gs[p].status = Status::Exhausted;
      }
      gs.sub_insert_before(old, p);
      if (old == track) out.tracked[gs[p].tag] = p;
    }
    gs.sub_remove(old);
    gs.kill_sp(old);
    out.created += y.count;
  }
  if (track != NIL && gs[track].alive) out.tracked[gs[track].tag] = track;
  gs.created += out.created;
  gs.meter->add(EventKind::Creation, out.created);

  // one agglomerate per root piece; rebuild skip links over the pieces
  std::vector<int>& roots = tops[gs[root].aux];
  struct Frame {
    int x, sk, top, dist, g, gd;
  };
  for (int rp : roots) {
    int na = gs.new_agg();
    gs.ag[na].root = rp;
    gs.ag[na].ncols = ncols_tag[gs[rp].tag];
    gs[rp].agg = na;
    out.parts.push_back({gs[rp].tag, na});

    std::vector<Frame> st{{rp, NIL, NIL, 0, NIL, 0}};
    while (!st.empty()) {
      Frame f = st.back();
      st.pop_back();
      int x = f.x;
      ++gs.work;
      bool is_piece = gs[x].stamp == stamp && gs[x].fp >= 0;
      if (is_piece) {
        if (gs[x].ncols > 0) gs[x].root = rp;
        Frame child{NIL, f.sk, f.top, f.dist, f.g, f.gd};
        if (f.sk == NIL) {
          gs[x].skip_parent = NIL;
          gs[x].chain_top = NIL;
          gs[x].skip_dist = 0;
          gs[x].guide = gs[x].status == Status::Unsolved ? x : NIL;
          gs[x].guide_dist = 0;
          child = {NIL, x, NIL, 0, NIL, 0};
        } else {
          int nd = f.dist + 1;
          int ntop = f.top == NIL ? x : f.top;
          int g = f.g, gd = f.gd;
          if (g == NIL && gs[x].status == Status::Unsolved) g = x, gd = nd;
          if (gs.is_skip(x)) {
            gs.skip_add(f.sk, x);
            gs[x].skip_dist = nd;
            gs[x].chain_top = ntop;
            gs[x].guide = g;
            gs[x].guide_dist = g == NIL ? 0 : nd - gd;
            child = {NIL, x, NIL, 0, NIL, 0};
          } else {
            child = {NIL, f.sk, ntop, nd, g, gd};
          }
        }
        for (int c = gs[x].first_child; c != NIL; c = gs[c].next_sib) {
          child.x = c;
          st.push_back(child);
        }
      } else {
        // top of a pruned homogeneous subtree; its skip node keeps its internals
        int c = gs[x].aux;
        int old_sd = gs[c].skip_dist;
        int nd = f.dist + old_sd;
        gs.skip_add(f.sk, c);
        gs[c].skip_dist = nd;
        gs[c].chain_top = f.top == NIL ? x : f.top;
        if (f.g != NIL) {
          gs[c].guide = f.g;
          gs[c].guide_dist = nd - f.gd;
        }
        gs[x].stamp = 0;
        gs[x].aux = NIL;
        set_roots_below(gs, c, rp);
      }
    }
  }
  std::sort(out.parts.begin(), out.parts.end(), [](auto& l, auto& r) { return l.tag < r.tag; });
  gs.kill_agg(a);
  return out;
}

void join(GlobalState& gs, int ap, int a) {
  int rp = gs.ag[ap].root;
  auto cons = gs.contacts(ap);
  int px = join_target(gs, ap);
  if (gs.agg_of(px) != a) throw StructureError("join target lies in another agglomerate");

  std::int64_t fused = 0;
  for (int u : cons) {
    for (int c = gs[u].col_head; c != NIL; c = gs.col_next[c]) {
      int cj = gs.col_r[c] + 1;
      auto r = gs.col_r[cj];
      gs.col_detach(cj);
      gs.col_r[cj] = NIL;
      gs.col_end[cj - 1] = NIL;
      gs.col_r[c] = r;
      gs.col_end[r] = c;
      ++fused;
      ++gs.work;
    }
    gs[u].root = gs.ag[a].root;
  }
  gs.meter->add(EventKind::Fusion, fused);
  gs.child_add_front(px, rp);
  gs[rp].agg = NIL;

  bool px_skip = gs.is_skip(px);
  bool rp_skip = gs.is_skip(rp);
  int below = rp;
  int d1, g, gd;
  if (rp_skip) {
    d1 = 1;
    g = gs[rp].status == Status::Unsolved ? rp : NIL;
    gd = 0;
  } else {
    below = gs[rp].skip_first;
    gs.skip_remove(below);
    d1 = gs[below].skip_dist + 1;
    if (gs[rp].status == Status::Unsolved) g = rp, gd = d1 - 1;
    else g = gs[below].guide, gd = gs[below].guide_dist;
  }
  gs[rp].guide = NIL;
  if (px_skip) {
    gs.skip_add(px, below);
    gs[below].skip_dist = d1;
    gs[below].chain_top = rp;
    gs[below].guide = g;
    gs[below].guide_dist = g == NIL ? 0 : gd;
  } else {
    int p = gs[px].skip_parent;
    int pd = gs[px].skip_dist;
    int nd = d1 + pd;
    if (gs[px].guide != NIL) {
      g = gs[px].guide;
      gd = nd - (pd - gs[px].guide_dist);
    }
    int ctop = gs[px].chain_top;
    gs.skip_remove(px);
    gs[px].chain_top = gs[px].guide = NIL;
    gs.skip_add(p, below);
    gs[below].skip_dist = nd;
    gs[below].chain_top = ctop;
    gs[below].guide = g;
    gs[below].guide_dist = g == NIL ? 0 : gd;
  }
  gs.kill_agg(ap);
}

void slice_join(GlobalState& gs, int a, int astar) {
  auto cons = gs.contacts(a);
  int m = gs.ag[a].ncols;
  int px = join_target(gs, a);
  if (gs.agg_of(px) != astar) throw StructureError("slice_join target lies in another agglomerate");
  if (gs.ag[astar].ncols <= m) throw StructureError("slice_join needs a strictly larger target");
  int root_a = gs.ag[a].root;

  int c0 = gs.col_r[gs[cons[0]].col_head] + 1;
  int l = gs.col_r[c0] - c0 + 1;
  std::vector<int> old_path(l), path(l);
  for (int k = l - 1, u = px; k >= 0; --k, u = gs[u].parent) old_path[k] = u;
  gs.work += l;

  bool full = gs[px].size == m;
  int j = l;  // old_path[j..l-1] move over whole: px and the chain above it
  if (full) {
    j = l - 1;
    while (j > 0 && gs[old_path[j - 1]].size == m) --j;
  }

  int created = 0;
  for (int k = 0; k < l; ++k) {
    int old = old_path[k];
    if (full && k >= j) {
      path[k] = old;
      continue;
    }
    int n = gs.new_sp();
    auto& o = gs[old];
    gs[n].label = o.label;
    gs[n].size = m;
    gs[n].status = Status::Exhausted;
    gs[n].degenerate = o.degenerate;
    gs[n].shared = true;
    gs[old].shared = true;
    gs[old].size -= m;
    gs.sub_insert_after(old, n);
    path[k] = n;
    ++created;
  }
  gs.created += created;
  gs.meter->add(EventKind::Creation, created);

  if (full) {
    int s = px;
    int p = gs[s].skip_parent;
    gs.child_remove(old_path[j]);
    gs.skip_remove(s);
    gs[s].chain_top = gs[s].guide = NIL;
    if (!gs.is_skip(p)) collapse_skip(gs, p);
  }
  for (int k = 1; k < l; ++k)
    if (!(full && k > j)) gs.child_add_front(path[k - 1], path[k]);

  std::int64_t fused = 0;
  for (int u : cons) {
    for (int c = gs[u].col_head; c != NIL; c = gs.col_next[c]) {
      int cj = gs.col_r[c] + 1;
      auto r = gs.col_r[cj];
      gs.col_detach(cj);
      gs.col_r[cj] = NIL;
      gs.col_end[cj - 1] = NIL;
      gs.col_r[c] = r;
      gs.col_end[r] = c;
      ++fused;
      ++gs.work;
    }
    gs[u].root = path[0];
  }
  gs.meter->add(EventKind::Fusion, fused);
  if (!full && !gs.is_skip(px)) collapse_skip(gs, px);
  gs.ag[astar].ncols -= m;

  int root1 = path[0];
  gs[root1].skip_parent = NIL;
  gs[root1].chain_top = NIL;
  gs[root1].skip_dist = 0;
  gs[root1].guide = NIL;
  gs[root1].agg = a;
  gs.child_add_front(path[l - 1], root_a);
  gs[root_a].agg = NIL;

  bool ra_skip = gs.is_skip(root_a);
  int below = root_a, nd, g = NIL, gd = 0;
  if (ra_skip) {
    nd = l;
    if (gs[root_a].status == Status::Unsolved) g = root_a;
  } else {
    below = gs[root_a].skip_first;
    gs.skip_remove(below);
    nd = l + gs[below].skip_dist;
    if (gs[root_a].status == Status::Unsolved) g = root_a, gd = gs[below].skip_dist;
    else g = gs[below].guide, gd = gs[below].guide_dist;
  }
  gs[root_a].guide = NIL;
  gs.skip_add(root1, below);
  gs[below].skip_dist = nd;
  gs[below].chain_top = l >= 2 ? path[1] : root_a;
  gs[below].guide = g;
  gs[below].guide_dist = g == NIL ? 0 : gd;

  gs.ag[a].root = root1;
  gs.ag[a].lead_depth += l;
  gs.work += static_cast<std::int64_t>(cons.size());
}

}  // namespace sufmsel

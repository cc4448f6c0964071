#include <sstream>

#include "sufmsel/structures.hpp"

namespace sufmsel {

namespace {

struct Fail {
  std::ostringstream os;
  bool bad = false;
  template <class... A>
  void operator()(const A&... a) {
    if (bad) return;
    bad = true;
    ((os << a), ...);
  }
};

}  // namespace

std::string GlobalState::verify() const {
  Fail f;
  if (!check_partition(*this)) f("columns do not tile the text");

  std::vector<int> depth(sp.size(), -1), owner_agg(sp.size(), NIL);
  std::int64_t reached = 0;
  for (int a = 0; a < static_cast<int>(ag.size()) && !f.bad; ++a) {
    const auto& A = ag[a];
    if (!A.alive) continue;
    int r = A.root;
    if (r == NIL || !sp[r].alive) { f("agg ", a, " has no live root"); break; }
    if (sp[r].parent != NIL) f("agg ", a, " root has a parent");
    if (sp[r].agg != a) f("agg ", a, " root points to agg ", sp[r].agg);

    // tree walk, preorder
    std::vector<int> order, st{r};
    depth[r] = 0;
    while (!st.empty()) {
      int u = st.back();
      st.pop_back();
      order.push_back(u);
      owner_agg[u] = a;
      ++reached;
      int k = 0;
      for (int c = sp[u].first_child; c != NIL; c = sp[c].next_sib, ++k) {
        if (sp[c].parent != u) f("child ", c, " of ", u, " has parent ", sp[c].parent);
        if (!sp[c].alive) f("dead child ", c);
        depth[c] = depth[u] + 1;
        st.push_back(c);
      }
      if (k != sp[u].nchildren) f("node ", u, " child count mismatch");
    }
    std::int64_t cols = 0;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      int u = *it;
      std::int64_t s = sp[u].ncols;
      for (int c = sp[u].first_child; c != NIL; c = sp[c].next_sib) s += sp[c].size;
      if (s != sp[u].size) f("node ", u, " size ", sp[u].size, " expected ", s);
      int k = 0;
      for (int c = sp[u].col_head; c != NIL; c = col_next[c], ++k) {
        if (col_owner[c] != u) f("column ", c, " owner mismatch");
        if (col_end[col_r[c]] != c) f("column ", c, " end index stale");
        if (col_r[c] - c != depth[u]) f("column ", c, " length ", col_r[c] - c + 1, " vs depth ", depth[u]);
        ++cols;
      }
      if (k != sp[u].ncols) f("node ", u, " column count mismatch");
      if (sp[u].ncols > 0 && sp[u].root != r) f("contact ", u, " root pointer stale");
      if (sp[u].size <= 0) f("node ", u, " empty");
      if (sp[u].status == Status::Solved && sp[u].size != 1) f("solved node ", u, " size ", sp[u].size);
      if (sp[u].status == Status::Unsolved && sp[u].size < 2) f("unsolved node ", u, " size ", sp[u].size);
      if (sp[u].degenerate && sp[u].status != Status::Exhausted) f("degenerate node ", u, " not exhausted");
    }
    if (cols != A.ncols) f("agg ", a, " column count ", A.ncols, " actual ", cols);
    if (sp[r].size != A.ncols) f("agg ", a, " root size ", sp[r].size, " vs columns ", A.ncols);

    // skip tree recomputed from scratch
    for (int u : order) {
      if (!is_skip(u)) {
        if (sp[u].nskip != 0) f("non-skip node ", u, " has skip children");
        continue;
      }
      int k = 0;
      for (int s = sp[u].skip_first; s != NIL; s = sp[s].skip_next, ++k)
        if (sp[s].skip_parent != u) f("skip child ", s, " of ", u, " points to ", sp[s].skip_parent);
      if (k != sp[u].nskip) f("skip count mismatch at ", u);
      if (u == r) {
        if (sp[u].guide != (sp[u].status == Status::Unsolved ? u : NIL)) f("root guide wrong at ", u);
        continue;
      }
      int p = sp[u].parent, dist = 1, top = u, g = sp[u].status == Status::Unsolved ? u : NIL, gd = 0;
      while (!is_skip(p)) {
        top = p;
        if (sp[p].status == Status::Unsolved) g = p, gd = dist;
        p = sp[p].parent;
        ++dist;
      }
      if (sp[u].skip_parent != p) f("skip parent of ", u, " is ", sp[u].skip_parent, " expected ", p);
      if (sp[u].skip_dist != dist) f("skip dist of ", u, " is ", sp[u].skip_dist, " expected ", dist);
      if (sp[u].chain_top != top) f("chain top of ", u, " is ", sp[u].chain_top, " expected ", top);
      if (sp[u].guide != g) f("guide of ", u, " is ", sp[u].guide, " expected ", g);
      else if (g != NIL && sp[u].guide_dist != gd) f("guide dist of ", u, " wrong");
    }

    if (A.group == Group::Unsolved) {
      int w = A.lead;
      if (w == NIL || owner_agg[w] != a) { f("agg ", a, " lead missing"); break; }
      if (sp[w].status != Status::Unsolved) f("agg ", a, " lead not unsolved");
      if (depth[w] != A.lead_depth) f("agg ", a, " lead depth ", A.lead_depth, " actual ", depth[w]);
      if (sp[w].size != A.ncols) f("agg ", a, " |P_w| ", sp[w].size, " vs columns ", A.ncols);
      for (int x = sp[w].parent; x != NIL; x = sp[x].parent)
        if (sp[x].nchildren != 1 || sp[x].ncols != 0) f("agg ", a, " violates leading property at ", x);
    } else if (A.group == Group::Exhausted) {
      for (int u : order)
        if (sp[u].status == Status::Unsolved) f("exhausted agg ", a, " holds unsolved node ", u);
    } else {
      f("agg ", a, " in transient group");
    }
  }

  // SubList: labels are exact offsets of neighborhoods
  std::int64_t listed = 0;
  std::int32_t expect = 0;
  for (int u = sub_head; u != NIL && !f.bad;) {
    std::int32_t e = sp[u].label;
    if (e != expect) f("neighborhood label ", e, " expected ", expect, " at ", u);
    std::int64_t total = 0;
    int v = u;
    int members = 0;
    while (v != NIL && sp[v].label == e) {
      if (!sp[v].alive) f("dead node in SubList ", v);
      if (owner_agg[v] == NIL) f("node ", v, " unreachable from any agglomerate");
      total += sp[v].size;
      ++listed;
      ++members;
      v = sp[v].next;
    }
    if (members == 1 && !sp[u].degenerate) {
      auto st = status_of(e, sp[u].size);
      if (!sp[u].shared && st != sp[u].status) f("status of ", u, " inconsistent with ranks");
    }
    if (members > 1)
      for (int x = u; x != v; x = sp[x].next)
        if (sp[x].status == Status::Unsolved) f("unsolved node ", x, " inside a neighborhood");
    expect = e + static_cast<std::int32_t>(total);
    u = v;
  }
  if (!f.bad && expect != N) f("SubList covers ", expect, " suffixes of ", N);
  if (!f.bad && listed != reached) f("SubList has ", listed, " nodes, trees have ", reached);
  return f.os.str();
}

}  // namespace sufmsel

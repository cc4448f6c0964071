#include "sufmsel/structures.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace sufmsel {

const char* status_name(Status s) {
  switch (s) {
    case Status::Unsolved: return "unsolved";
    case Status::Solved: return "solved";
    case Status::Exhausted: return "exhausted";
  }
  return "?";
}

Ranks::Ranks(std::int32_t n, std::span<const std::int64_t> r) : r_(r.begin(), r.end()), cnt_(n + 2, 0) {
  for (std::size_t i = 0; i < r_.size(); ++i) {
    if (r_[i] < 1 || r_[i] > n) throw std::out_of_range("rank out of range");
    if (i && r_[i] <= r_[i - 1]) throw std::invalid_argument("ranks not strictly increasing");
    cnt_[r_[i]] += 1;
  }
  for (std::int32_t x = 1; x <= n + 1; ++x) cnt_[x] += cnt_[x - 1];
}

std::vector<std::int64_t> Ranks::of(std::int32_t label, std::int32_t size) const {
  return {r_.begin() + cnt_[label], r_.begin() + cnt_[label + size]};
}

std::vector<std::int64_t> ranks_of(const Subproblem& s, const GlobalState& gs) { return gs.ranks.of(s.label, s.size); }

GlobalState::GlobalState(const Text& t, Meter& m) : text(&t), meter(&m), N(t.size()) {
  col_r.assign(N + 2, NIL);
  col_owner.assign(N + 2, NIL);
  col_prev.assign(N + 2, NIL);
  col_next.assign(N + 2, NIL);
  col_tag.assign(N + 2, 0);
  col_end.assign(N + 2, NIL);
  pos_idx.assign(N + 2, NIL);
  ranks = Ranks(N, {});
}

int GlobalState::new_sp() {
  int u;
  if (!free_sp.empty()) {
    u = free_sp.back();
    free_sp.pop_back();
    sp[u] = Subproblem{};
  } else {
    u = static_cast<int>(sp.size());
    sp.emplace_back();
  }
  sp[u].alive = true;
  return u;
}

void GlobalState::kill_sp(int u) {
  sp[u].alive = false;
  free_sp.push_back(u);
}

int GlobalState::new_agg() {
  int a;
  if (!free_ag.empty()) {
    a = free_ag.back();
    free_ag.pop_back();
    ag[a] = Agglomerate{};
  } else {
    a = static_cast<int>(ag.size());
    ag.emplace_back();
  }
  ag[a].alive = true;
  return a;
}

void GlobalState::kill_agg(int a) {
  ag[a].alive = false;
  ag[a].group = Group::Dead;
  free_ag.push_back(a);
}

Status GlobalState::status_of(std::int32_t label, std::int32_t size) const {
  auto k = ranks.count(label, size);
  if (k == 0) return Status::Exhausted;
  return size == 1 ? Status::Solved : Status::Unsolved;
}

void GlobalState::col_attach(int c, int u) {
  col_owner[c] = u;
  col_prev[c] = NIL;
  col_next[c] = sp[u].col_head;
  if (sp[u].col_head != NIL) col_prev[sp[u].col_head] = c;
  sp[u].col_head = c;
  sp[u].ncols += 1;
}

void GlobalState::col_detach(int c) {
  int u = col_owner[c];
  if (col_prev[c] != NIL) col_next[col_prev[c]] = col_next[c];
  else sp[u].col_head = col_next[c];
  if (col_next[c] != NIL) col_prev[col_next[c]] = col_prev[c];
  sp[u].ncols -= 1;
  col_owner[c] = col_prev[c] = col_next[c] = NIL;
}

void GlobalState::child_add_front(int p, int c) {
  auto& s = sp[c];
  s.parent = p;
  s.prev_sib = NIL;
  s.next_sib = sp[p].first_child;
  if (s.next_sib != NIL) sp[s.next_sib].prev_sib = c;
  sp[p].first_child = c;
  sp[p].nchildren += 1;
}

void GlobalState::child_remove(int c) {
  auto& s = sp[c];
  int p = s.parent;
  if (s.prev_sib != NIL) sp[s.prev_sib].next_sib = s.next_sib;
  else sp[p].first_child = s.next_sib;
  if (s.next_sib != NIL) sp[s.next_sib].prev_sib = s.prev_sib;
  sp[p].nchildren -= 1;
  s.parent = s.prev_sib = s.next_sib = NIL;
}

void GlobalState::skip_add(int p, int s) {
  auto& x = sp[s];
  x.skip_parent = p;
  x.skip_prev = NIL;
  x.skip_next = sp[p].skip_first;
  if (x.skip_next != NIL) sp[x.skip_next].skip_prev = s;
  sp[p].skip_first = s;
  sp[p].nskip += 1;
}

void GlobalState::skip_remove(int s) {
  auto& x = sp[s];
  int p = x.skip_parent;
  if (x.skip_prev != NIL) sp[x.skip_prev].skip_next = x.skip_next;
  else sp[p].skip_first = x.skip_next;
  if (x.skip_next != NIL) sp[x.skip_next].skip_prev = x.skip_prev;
  sp[p].nskip -= 1;
  x.skip_parent = x.skip_prev = x.skip_next = NIL;
}

void GlobalState::sub_insert_after(int a, int b) {
  sp[b].prev = a;
  sp[b].next = sp[a].next;
  if (sp[a].next != NIL) sp[sp[a].next].prev = b;
  else sub_tail = b;
  sp[a].next = b;
}

void GlobalState::sub_insert_before(int a, int b) {
  sp[b].next = a;
  sp[b].prev = sp[a].prev;
  if (sp[a].prev != NIL) sp[sp[a].prev].next = b;
  else sub_head = b;
  sp[a].prev = b;
}

void GlobalState::sub_push_back(int b) {
  sp[b].prev = sub_tail;
  sp[b].next = NIL;
  if (sub_tail != NIL) sp[sub_tail].next = b;
  else sub_head = b;
  sub_tail = b;
}

void GlobalState::sub_remove(int a) {
  if (sp[a].prev != NIL) sp[sp[a].prev].next = sp[a].next;
  else sub_head = sp[a].next;
  if (sp[a].next != NIL) sp[sp[a].next].prev = sp[a].prev;
  else sub_tail = sp[a].prev;
  sp[a].prev = sp[a].next = NIL;
}

std::vector<int> GlobalState::skip_preorder(int root) const {
  std::vector<int> out, st{root};
  while (!st.empty()) {
    int u = st.back();
    st.pop_back();
    out.push_back(u);
    for (int s = sp[u].skip_first; s != NIL; s = sp[s].skip_next) st.push_back(s);
  }
  return out;
}

std::vector<int> GlobalState::contacts(int a) const {
  std::vector<int> out;
  for (int u : skip_preorder(ag[a].root))
    if (sp[u].ncols > 0) out.push_back(u);
  return out;
}

std::vector<int> GlobalState::columns(int a) const {
  std::vector<int> out;
  for (int u : contacts(a))
    for (int c = sp[u].col_head; c != NIL; c = col_next[c]) out.push_back(c);
  return out;
}

std::vector<int> contact_visiting_order(const GlobalState& gs, int a) { return gs.contacts(a); }

int GlobalState::suff(std::int32_t i) const {
  if (i < 1 || i > N) return NIL;
  if (col_owner[i] != NIL) return col_owner[i];
  int c = col_end[i];
  if (c != NIL && col_owner[c] != NIL && col_r[c] == i) return sp[col_owner[c]].root;
  return NIL;
}

bool check_partition(std::int32_t n, std::span<const std::pair<std::int32_t, std::int32_t>> cols) {
  std::vector<char> seen(n + 2, 0);
  for (auto [c, r] : cols) {
    if (c < 1 || r > n || c > r) return false;
    for (auto i = c; i <= r; ++i) {
      if (seen[i]) return false;
      seen[i] = 1;
    }
  }
  for (std::int32_t i = 1; i <= n; ++i)
    if (!seen[i]) return false;
  return true;
}

bool check_partition(const GlobalState& gs) {
  std::vector<std::pair<std::int32_t, std::int32_t>> cols;
  for (std::int32_t c = 1; c <= gs.N; ++c)
    if (gs.col_owner[c] != NIL) cols.emplace_back(c, gs.col_r[c]);
  return check_partition(gs.N, cols);
}

std::string GlobalState::dump() const {
  std::ostringstream os;
  for (int u = sub_head; u != NIL; u = sp[u].next) {
    int r = u;
    while (sp[r].parent != NIL) r = sp[r].parent;
    os << u << ' ' << sp[u].label << ' ' << sp[u].size << ' ' << status_name(sp[u].status)
       << (sp[u].degenerate ? "*" : "") << ' ' << sp[r].agg << '\n';
  }
  return os.str();
}

}  // namespace sufmsel

#pragma once
#include <cstdint>
#include <deque>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "sufmsel/text.hpp"

namespace sufmsel {

inline constexpr int NIL = -1;

enum class Status : std::uint8_t { Unsolved, Solved, Exhausted };
enum class Group : std::uint8_t { None, Unsolved, Exhausted, Undecided, Joinable, Dead };

const char* status_name(Status s);

struct Subproblem {
  std::int32_t label = 0;
  std::int32_t size = 0;
  Status status = Status::Exhausted;
  bool degenerate = false;
  bool shared = false;  // label is a neighborhood reference, not an exact offset
  bool alive = false;

  int parent = NIL, first_child = NIL, next_sib = NIL, prev_sib = NIL, nchildren = 0;
  int col_head = NIL, ncols = 0, root = NIL;

  // skip tree; chain_top is the child of skip_parent on the path down to this node,
  // guide is the topmost unsolved node of that path (this node included)
  int skip_parent = NIL, skip_first = NIL, skip_next = NIL, skip_prev = NIL, nskip = 0;
  int chain_top = NIL, skip_dist = 0, guide = NIL, guide_dist = 0;

  int prev = NIL, next = NIL;  // SubList
  int agg = NIL;               // only meaningful on roots

  int tag = 0;
  int fp = 0;
  std::int64_t stamp = 0;
  int aux = NIL;
};

struct Agglomerate {
  int root = NIL;
  int ncols = 0;
  int lead = NIL;
  int lead_depth = 0;
  Group group = Group::None;
  bool alive = false;
};

class Ranks {
 public:
  Ranks() = default;
  Ranks(std::int32_t n, std::span<const std::int64_t> r);
  std::int32_t count(std::int32_t label, std::int32_t size) const { return cnt_[label + size] - cnt_[label]; }
  std::vector<std::int64_t> of(std::int32_t label, std::int32_t size) const;
  std::span<const std::int64_t> all() const { return r_; }

 private:
  std::vector<std::int64_t> r_;
  std::vector<std::int32_t> cnt_;  // cnt_[x] = number of ranks <= x
};

// Reusable slots for grouping objects by tag; stamps make resets unnecessary.
struct TagScratch {
  std::vector<std::int64_t> stamp;
  std::vector<int> slot;
  std::int64_t eta = 0;

  void reserve(int d) {
    if (static_cast<int>(stamp.size()) < d + 2) {
      stamp.resize(d + 2, 0);
      slot.resize(d + 2, 0);
    }
  }
};

struct Trace {
  int agg = NIL;
  int kind = 0;
  int ncols = 0;
  int tags = 0;
  int created = 0;
  std::int64_t work = 0;
};

class GlobalState {
 public:
  GlobalState(const Text& t, Meter& m);

  const Text* text;
  Meter* meter;
  std::int32_t N;

  std::vector<Subproblem> sp;
  std::vector<Agglomerate> ag;
  std::vector<int> free_sp, free_ag;

  // columns, indexed by contact position c in [1, N]
  std::vector<std::int32_t> col_r, col_owner, col_prev, col_next, col_tag, col_end;
  std::vector<std::int32_t> pos_idx;  // scratch: column index by contact position

  int sub_head = NIL, sub_tail = NIL;
  Ranks ranks;
  std::deque<int> unsolved;

  bool debug = false;           // verify invariants after every RAP
  std::int64_t work = 0;        // touched nodes and columns
  std::int64_t created = 0;     // subproblems created so far
  std::int64_t rap_count = 0;
  double work_ratio_max = 0;    // max over RAPs of work / (ncols + created)
  std::function<void(const Trace&)> trace;
  TagScratch scratch;
  std::int64_t slice_stamp = 0;

  int new_sp();
  void kill_sp(int u);
  int new_agg();
  void kill_agg(int a);

  Subproblem& operator[](int u) { return sp[u]; }
  const Subproblem& operator[](int u) const { return sp[u]; }

  bool is_skip(int u) const {
    const auto& s = sp[u];
    return s.parent == NIL || s.ncols > 0 || s.nchildren >= 2;
  }
  int agg_of(int contact) const { return sp[sp[contact].root].agg; }
  Status status_of(std::int32_t label, std::int32_t size) const;

  void col_attach(int c, int u);
  void col_detach(int c);
  void child_add_front(int p, int c);
  void child_remove(int c);
  void skip_add(int p, int s);
  void skip_remove(int s);
  void sub_insert_after(int a, int b);  // b goes right after a
  void sub_insert_before(int a, int b);
  void sub_push_back(int b);
  void sub_remove(int a);

  std::vector<int> skip_preorder(int root) const;
  std::vector<int> contacts(int a) const;  // contact visiting order
  std::vector<int> columns(int a) const;

  // suffix of a contact or root position, NIL otherwise
  int suff(std::int32_t i) const;

  std::string dump() const;
  std::string verify() const;  // empty when every invariant holds
};

std::vector<std::int64_t> ranks_of(const Subproblem& s, const GlobalState& gs);
std::vector<int> contact_visiting_order(const GlobalState& gs, int a);
bool check_partition(const GlobalState& gs);
bool check_partition(std::int32_t n, std::span<const std::pair<std::int32_t, std::int32_t>> cols);

}  // namespace sufmsel

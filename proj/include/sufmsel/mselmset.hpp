#pragma once
#include <algorithm>
#include <array>
#include <cmath>
#include <utility>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "sufmsel/text.hpp"

namespace sufmsel {

// Blocks alternate M0, F1, M1, ..., Ft, Mt; block k is order[bounds[k] .. bounds[k+1]).
struct PivotalDecomposition {
  std::vector<int> order;
  std::vector<int> bounds;

  int blocks() const { return static_cast<int>(bounds.size()) - 1; }
  int t() const { return blocks() / 2; }
  std::span<const int> block(int k) const {
    return {order.data() + bounds[k], static_cast<std::size_t>(bounds[k + 1] - bounds[k])};
  }
  static bool is_pivotal(int k) { return k % 2 == 1; }
};

namespace detail {

// cmp(a, b) returns -1/0/1 and does its own metering
template <class Cmp>
void partition3(std::vector<int>& v, int lo, int hi, int pivot, Cmp& cmp, int& lt, int& gt) {
  // after: [lo,lt) < pivot, [lt,gt) == pivot, [gt,hi) > pivot
  int i = lo;
  lt = lo;
  gt = hi;
  while (i < gt) {
    int c = cmp(v[i], pivot);
    if (c < 0)
      std::swap(v[lt++], v[i++]);
    else if (c > 0)
      std::swap(v[i], v[--gt]);
    else
      ++i;
  }
}

template <class Cmp>
void insertion_sort(std::vector<int>& v, int lo, int hi, Cmp& cmp) {
  for (int i = lo + 1; i < hi; ++i)
    for (int j = i; j > lo && cmp(v[j - 1], v[j]) > 0; --j) std::swap(v[j - 1], v[j]);
}

template <class Cmp>
int median_of_medians(std::vector<int>& v, int lo, int hi, Cmp& cmp);

// Leaves v[lo,hi) as <, ==, > around the item of index k (absolute) and returns the
// == block. Sampled pivots first, quickselect on small ranges, median of medians when
// a range stops shrinking.
template <class Cmp>
std::pair<int, int> select3(std::vector<int>& v, int lo, int hi, int k, Cmp& cmp) {
  std::uint64_t rng = 0x9e3779b97f4a7c15ull ^ static_cast<std::uint64_t>(hi - lo);
  int stalls = 0;
  while (true) {
    int n = hi - lo;
    if (n <= 8) {
      insertion_sort(v, lo, hi, cmp);
      int lt = k, gt = k + 1;
      while (lt > lo && cmp(v[lt - 1], v[k]) == 0) --lt;
      while (gt < hi && cmp(v[gt], v[k]) == 0) ++gt;
      return {lt, gt};
    }
    if (n >= 600 && stalls < 2) {
      // two pivots from a sample bracket k; the range shrinks to the items between them
      int s = std::min(n / 2, static_cast<int>(0.5 * std::exp(2.0 * std::log(static_cast<double>(n)) / 3.0)));
      double frac = static_cast<double>(k - lo) / n;
      int gap = static_cast<int>(0.15 * std::sqrt(std::log(static_cast<double>(n)) * s)) + 1;
      for (int i = 0; i < s; ++i) {
        rng = rng * 6364136223846793005ull + 1442695040888963407ull;
        int j = lo + i + static_cast<int>((rng >> 33) % static_cast<std::uint64_t>(n - i));
        std::swap(v[lo + i], v[j]);
      }
      int ku = std::max(0, static_cast<int>(frac * s) - gap);
      int kv = std::min(s - 1, static_cast<int>(frac * s) + gap);
      auto [ul, ug] = select3(v, lo, lo + s, lo + ku, cmp);
      int u = v[ul];
      int w = u;
      if (lo + kv >= ug) {
        auto [wl, wg] = select3(v, ug, lo + s, lo + kv, cmp);
        w = v[wl];
        (void)wg;
      }
      int before = n;
      if (w == u || cmp(u, w) == 0) {
        int lt, gt;
        partition3(v, lo, hi, u, cmp, lt, gt);
        if (k >= lt && k < gt) return {lt, gt};
        if (k < lt) hi = lt;
        else lo = gt;
      } else {
        // five classes: below u, equal u, between, equal w, above w
        std::array<std::vector<int>, 5> cls;
        bool low_side = 2 * (k - lo) < n;
        for (int i = lo; i < hi; ++i) {
          int x = v[i], c;
          if (low_side) {
            int cw = cmp(x, w);
            c = cw > 0 ? 4 : cw == 0 ? 3 : [&] { int cu = cmp(x, u); return cu < 0 ? 0 : cu == 0 ? 1 : 2; }();
          } else {
            int cu = cmp(x, u);
            c = cu < 0 ? 0 : cu == 0 ? 1 : [&] { int cw = cmp(x, w); return cw > 0 ? 4 : cw == 0 ? 3 : 2; }();
          }
          cls[c].push_back(x);
        }
        int pos = lo;
        std::array<int, 6> edge{};
        for (int c = 0; c < 5; ++c) {
          edge[c] = pos;
          std::copy(cls[c].begin(), cls[c].end(), v.begin() + pos);
          pos += static_cast<int>(cls[c].size());
        }
        edge[5] = pos;
        int c = 0;
        while (k >= edge[c + 1]) ++c;
        if (c == 1 || c == 3) return {edge[c], edge[c + 1]};
        lo = edge[c];
        hi = edge[c + 1];
      }
      if (4 * (hi - lo) > 3 * before) ++stalls;
      continue;
    }
    int pivot;
    if (stalls >= 2) {
      pivot = median_of_medians(v, lo, hi, cmp);
    } else {
      int m = lo + n / 2;
      int x = v[lo], y = v[m], z = v[hi - 1];
      if (cmp(x, y) > 0) std::swap(x, y);
      if (cmp(y, z) > 0) y = cmp(x, z) > 0 ? x : z;
      pivot = y;
    }
    int lt, gt;
    partition3(v, lo, hi, pivot, cmp, lt, gt);
    if (k >= lt && k < gt) return {lt, gt};
    int before = n;
    if (k < lt) hi = lt;
    else lo = gt;
    if (4 * (hi - lo) > 3 * before) ++stalls;
  }
}

template <class Cmp>
int median_of_medians(std::vector<int>& v, int lo, int hi, Cmp& cmp) {
  int m = lo;
  for (int g = lo; g < hi; g += 5) {
    int e = std::min(g + 5, hi);
    insertion_sort(v, g, e, cmp);
    std::swap(v[m++], v[g + (e - g) / 2]);
  }
  auto [lt, gt] = select3(v, lo, m, lo + (m - lo) / 2, cmp);
  (void)gt;
  return v[lt];
}

struct Seg {
  bool pivotal;
  int lo, hi;
};

template <class Cmp>
void msel_rec(std::vector<int>& v, int lo, int hi, std::span<const std::int64_t> ranks,
              std::int64_t shift, Cmp& cmp, std::vector<Seg>& out) {
  if (lo >= hi) return;
  if (ranks.empty()) {
    out.push_back({false, lo, hi});
    return;
  }
  std::int64_t n = hi - lo;
  std::int64_t half = (n + 1) / 2;
  // largest rank <= ceil(n/2); smallest when none qualifies
  std::size_t l = 0;
  for (std::size_t i = 0; i < ranks.size(); ++i)
    if (ranks[i] - shift <= half) l = i;
  std::int64_t rl = ranks[l] - shift;

  auto [lt, gt] = select3(v, lo, hi, lo + static_cast<int>(rl - 1), cmp);

  std::size_t left_end = 0;
  while (left_end < ranks.size() && ranks[left_end] - shift <= lt - lo) ++left_end;
  std::size_t right_begin = left_end;
  while (right_begin < ranks.size() && ranks[right_begin] - shift <= gt - lo) ++right_begin;

  msel_rec(v, lo, lt, ranks.subspan(0, left_end), shift, cmp, out);
  out.push_back({true, lt, gt});
  if (right_begin == ranks.size()) {
    out.push_back({false, gt, hi});
    return;
  }
  // second pivot: next rank beyond the first pivot's key group
  std::int64_t rn = ranks[right_begin] - shift;
  auto [lt2, gt2] = select3(v, gt, hi, lo + static_cast<int>(rn - 1), cmp);
  out.push_back({false, gt, lt2});
  out.push_back({true, lt2, gt2});
  std::size_t next = right_begin;
  while (next < ranks.size() && ranks[next] - shift <= gt2 - lo) ++next;
  msel_rec(v, gt2, hi, ranks.subspan(next), shift + (gt2 - lo), cmp, out);
}

}  // namespace detail

template <class Cmp>
int select_kth(std::vector<int> items, std::int64_t k, Cmp cmp) {
  if (k < 1 || k > static_cast<std::int64_t>(items.size())) throw std::out_of_range("select_kth: k out of range");
  auto [lt, gt] = detail::select3(items, 0, static_cast<int>(items.size()), static_cast<int>(k - 1), cmp);
  (void)gt;
  return items[lt];
}

// ranks are 1-based, strictly increasing
template <class Cmp>
PivotalDecomposition mselmset(std::vector<int> items, std::span<const std::int64_t> ranks, Cmp cmp) {
  std::int64_t n = static_cast<std::int64_t>(items.size());
  for (std::size_t i = 0; i < ranks.size(); ++i) {
    if (ranks[i] < 1 || ranks[i] > n) throw std::out_of_range("mselmset: rank out of range");
    if (i > 0 && ranks[i] <= ranks[i - 1]) throw std::invalid_argument("mselmset: ranks not strictly increasing");
  }
  std::vector<detail::Seg> segs;
  detail::msel_rec(items, 0, static_cast<int>(n), ranks, 0, cmp, segs);

  PivotalDecomposition d;
  d.order = std::move(items);
  d.bounds.push_back(0);
  bool last_pivotal = true;  // forces an M0 entry
  for (auto& s : segs) {
    if (s.pivotal) {
      if (last_pivotal) d.bounds.push_back(s.lo);
      d.bounds.push_back(s.hi);
      last_pivotal = true;
    } else {
      if (s.lo == s.hi) continue;
      if (!last_pivotal) d.bounds.back() = s.hi;
      else d.bounds.push_back(s.hi);
      last_pivotal = false;
    }
  }
  if (last_pivotal) d.bounds.push_back(static_cast<int>(n));
  if (n == 0) d.bounds = {0, 0};
  return d;
}

// key-comparison adaptor that meters each call as one key_cmp
template <class Less3>
struct MeteredCmp {
  Less3 f;
  Meter* m;
  int operator()(int a, int b) {
    ++m->key_cmp;
    return f(a, b);
  }
};

template <class Less3>
MeteredCmp<Less3> metered(Less3 f, Meter& m) {
  return {std::move(f), &m};
}

}  // namespace sufmsel

#include "sufmsel/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace sufmsel {

namespace {

int cmp_suffix(const Text& t, std::int32_t i, std::int32_t j, Meter& m) {
  while (true) {
    int c = cmp_symbols(t, i, j, m);
    if (c != 0) return c;
    ++i;
    ++j;
  }
}

void merge_sort(std::vector<std::int32_t>& a, std::vector<std::int32_t>& tmp, std::size_t lo, std::size_t hi,
                const Text& t, Meter& m) {
  if (hi - lo < 2) return;
  std::size_t mid = (lo + hi) / 2;
  merge_sort(a, tmp, lo, mid, t, m);
  merge_sort(a, tmp, mid, hi, t, m);
  std::size_t i = lo, j = mid, k = lo;
  while (i < mid && j < hi) tmp[k++] = cmp_suffix(t, a[j], a[i], m) < 0 ? a[j++] : a[i++];
  while (i < mid) tmp[k++] = a[i++];
  while (j < hi) tmp[k++] = a[j++];
  std::copy(tmp.begin() + lo, tmp.begin() + hi, a.begin() + lo);
}

}  // namespace

std::vector<std::int32_t> oracle_sa(const Text& t, Meter& m) {
  std::vector<std::int32_t> sa(t.size());
  std::iota(sa.begin(), sa.end(), 1);
  std::vector<std::int32_t> tmp(sa.size());
  merge_sort(sa, tmp, 0, sa.size(), t, m);
  return sa;
}

std::vector<std::int32_t> oracle_sa(const Text& t) {
  Meter m;
  return oracle_sa(t, m);
}

std::string oracle_bwt(const Text& t) {
  std::string out;
  for (auto j : oracle_sa(t)) out.push_back(t.display(j == 1 ? t.size() : j - 1));
  return out;
}

std::int32_t oracle_lcp(const Text& t, std::int32_t i, std::int32_t j) {
  if (i == j) throw std::invalid_argument("oracle_lcp: equal indices");
  Meter m;
  std::int32_t l = 0;
  while (cmp_symbols(t, i + l, j + l, m) == 0) ++l;
  return l;
}

SelectionResult oracle_multiselect(const Text& t, std::span<const std::int64_t> ranks) {
  SelectionResult r;
  auto sa = oracle_sa(t);
  for (auto k : ranks) {
    if (k < 1 || k > t.size()) throw std::out_of_range("oracle_multiselect: rank out of range");
    r.ranks.push_back(k);
    r.positions.push_back(sa[k - 1]);
  }
  for (std::size_t j = 1; j < r.positions.size(); ++j)
    r.lcps.push_back(oracle_lcp(t, r.positions[j - 1], r.positions[j]));
  return r;
}

PivotalDecomposition oracle_mselmset(std::span<const std::int64_t> keys, std::span<const std::int64_t> ranks) {
  std::vector<int> idx(keys.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return keys[a] < keys[b]; });
  PivotalDecomposition d;
  d.order = idx;
  d.bounds.push_back(0);
  std::size_t ri = 0;
  int n = static_cast<int>(idx.size());
  int i = 0;
  bool last_pivotal = true;
  while (i < n) {
    int j = i;
    while (j < n && keys[idx[j]] == keys[idx[i]]) ++j;
    bool hit = false;
    while (ri < ranks.size() && ranks[ri] <= j) {
      hit = true;
      ++ri;
    }
    if (hit) {
      if (last_pivotal) d.bounds.push_back(i);
      d.bounds.push_back(j);
    } else if (last_pivotal) {
      d.bounds.push_back(j);
    } else {
      d.bounds.back() = j;
    }
    last_pivotal = hit;
    i = j;
  }
  if (last_pivotal) d.bounds.push_back(n);
  return d;
}

std::string oracle_macro_sample(const Text& t, std::int32_t q) {
  if (q < 1) throw std::invalid_argument("q must be positive");
  std::int32_t n = t.size();
  std::vector<std::int32_t> pos;
  for (std::int32_t p = 1; p <= n; p += q) pos.push_back(p);
  Meter m;
  // compare q-symbol blocks; positions past N behave as below the sentinel,
  // which never matters since the sentinel is unique
  auto macro_cmp = [&](std::int32_t a, std::int32_t b) {
    while (true) {
      for (std::int32_t k = 0; k < q; ++k) {
        bool ea = a + k > n, eb = b + k > n;
        if (ea || eb) return ea == eb ? 0 : (ea ? -1 : 1);
        int c = cmp_symbols(t, a + k, b + k, m);
        if (c != 0) return c;
      }
      a += q;
      b += q;
    }
  };
  std::stable_sort(pos.begin(), pos.end(), [&](auto a, auto b) { return macro_cmp(a, b) < 0; });
  std::string out;
  for (auto j : pos) out.push_back(t.display(j == 1 ? n : j - 1));
  return out;
}

}  // namespace sufmsel

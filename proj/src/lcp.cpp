#include "sufmsel/lcp.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace sufmsel {

LcpState::LcpState(std::vector<std::int32_t> adjacent) : list_(std::move(adjacent)) {}

void LcpState::lcp_on_refine(std::size_t at, std::span<const std::int32_t> values) {
  if (at >= size()) throw std::out_of_range("lcp_on_refine: no such neighborhood");
  if (values.empty()) return;
  list_.insert(list_.begin() + static_cast<std::ptrdiff_t>(at), values.begin(), values.end());
  dirty_ = true;
}

void LcpState::rebuild() const {
  std::size_t n = list_.size();
  table_.assign(1, list_);
  for (std::size_t k = 1; (std::size_t{1} << k) <= n; ++k) {
    const auto& prev = table_[k - 1];
    std::size_t half = std::size_t{1} << (k - 1);
    std::vector<std::int32_t> row(n - (std::size_t{1} << k) + 1);
    for (std::size_t i = 0; i < row.size(); ++i) row[i] = std::min(prev[i], prev[i + half]);
    table_.push_back(std::move(row));
  }
  dirty_ = false;
}

std::int32_t LcpState::lcp_query(std::size_t i, std::size_t j) const {
  if (i == j) throw std::invalid_argument("lcp_query: same neighborhood");
  if (i > j) std::swap(i, j);
  if (j >= size()) throw std::out_of_range("lcp_query: no such neighborhood");
  if (dirty_) rebuild();
  std::size_t len = j - i;
  int k = std::bit_width(len) - 1;
  return std::min(table_[k][i], table_[k][j - (std::size_t{1} << k)]);
}

LcpState lcp_state(const SelectionResult& r) { return LcpState(r.lcps); }

}  // namespace sufmsel

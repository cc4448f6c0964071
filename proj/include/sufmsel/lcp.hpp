#pragma once
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "sufmsel/result.hpp"

namespace sufmsel {

// lcp values between adjacent neighborhoods; queries read only stored values
class LcpState {
 public:
  LcpState() = default;
  explicit LcpState(std::vector<std::int32_t> adjacent);

  std::size_t size() const { return list_.size() + 1; }
  const std::vector<std::int32_t>& list() const { return list_; }

  // neighborhood `at` splits into values.size()+1 parts; values sit between them
  void lcp_on_refine(std::size_t at, std::span<const std::int32_t> values);
  std::int32_t lcp_query(std::size_t i, std::size_t j) const;

 private:
  void rebuild() const;

  std::vector<std::int32_t> list_;
  mutable std::vector<std::vector<std::int32_t>> table_;
  mutable bool dirty_ = true;
};

// one neighborhood per selected suffix
LcpState lcp_state(const SelectionResult& r);

}  // namespace sufmsel

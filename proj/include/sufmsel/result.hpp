#pragma once
#include <cstdint>
#include <vector>

#include "sufmsel/text.hpp"

namespace sufmsel {

struct SelectionResult {
  std::vector<std::int64_t> ranks;      // ascending
  std::vector<std::int32_t> positions;  // positions[j] has rank ranks[j]
  std::vector<std::int32_t> lcps;       // lcp of consecutive entries, size K-1
  Meter metrics;
  Meter lcp_metrics;  // symbol scans spent on lcp values, kept apart from metrics
};

}  // namespace sufmsel

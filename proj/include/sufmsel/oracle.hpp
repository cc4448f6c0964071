#pragma once
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "sufmsel/mselmset.hpp"
#include "sufmsel/result.hpp"
#include "sufmsel/text.hpp"

namespace sufmsel {

std::vector<std::int32_t> oracle_sa(const Text& t, Meter& m);
std::vector<std::int32_t> oracle_sa(const Text& t);
std::string oracle_bwt(const Text& t);
std::int32_t oracle_lcp(const Text& t, std::int32_t i, std::int32_t j);
SelectionResult oracle_multiselect(const Text& t, std::span<const std::int64_t> ranks);
// blocks by sort-and-group; items are indices into keys
PivotalDecomposition oracle_mselmset(std::span<const std::int64_t> keys, std::span<const std::int64_t> ranks);
std::string oracle_macro_sample(const Text& t, std::int32_t q);

}  // namespace sufmsel

#pragma once
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "sufmsel/result.hpp"
#include "sufmsel/structures.hpp"

namespace sufmsel {

struct Options {
  bool debug = false;  // verify every invariant after each rap
  std::function<void(const Trace&)> trace;
};

// one subproblem of a fresh state, with singleton columns at its positions
struct SeedGroup {
  std::int32_t label = 0;
  Status status = Status::Exhausted;
  bool degenerate = false;
  std::vector<std::int32_t> positions;
};

// throws std::invalid_argument unless strictly increasing within [1, n]
void check_ranks(std::int32_t n, std::span<const std::int64_t> ranks);

// ranks must exclude 1
void initialize(GlobalState& gs, std::span<const std::int64_t> ranks);
void build_from_groups(GlobalState& gs, const std::vector<SeedGroup>& groups);
void run(GlobalState& gs);
// (rank, position) of every solved suffix, ascending by rank
std::vector<std::pair<std::int64_t, std::int32_t>> finalize(GlobalState& gs);

SelectionResult multiselect(const Text& t, std::span<const std::int64_t> ranks, const Options& opt = {});
SelectionResult multiselect_consecutive(const Text& t, std::int64_t a, std::int64_t b, const Options& opt = {});

// SuffixVisit: subproblem of every position 1..N
std::vector<int> suffix_visit(const GlobalState& gs);

}  // namespace sufmsel

#pragma once
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "sufmsel/driver.hpp"
#include "sufmsel/result.hpp"
#include "sufmsel/text.hpp"

namespace sufmsel {

inline constexpr int kSchemaVersion = 1;

struct BwtSegment {
  std::vector<std::int64_t> ranks;
  std::vector<std::int32_t> positions;  // source suffix of each symbol
  std::vector<std::uint32_t> symbols;   // internal codes, 0 is the sentinel
  std::string text;                     // printable, sentinel as '$'
  Meter metrics;
};

struct PartialIndex {
  std::vector<std::int64_t> ranks;
  std::vector<std::int32_t> positions;
  std::vector<std::int32_t> lcps;
  Meter metrics;
};

struct TreeNode {
  std::int32_t depth = 0;
  std::int32_t leaf = -1;  // suffix position for leaves
  std::int32_t rep = 0;    // some suffix below, for edge labels
  std::vector<int> children;
};

struct PartialTree {
  std::vector<TreeNode> nodes;  // nodes[0] is the root
  std::int32_t leaves() const;
};

// L symbol of the suffix starting at j
std::uint32_t bwt_symbol(const Text& t, std::int32_t j);
char bwt_char(const Text& t, std::int32_t j);

BwtSegment bwt_segment(const Text& t, std::int64_t a, std::int64_t b, const Options& opt = {});
BwtSegment bwt_sample(const Text& t, std::span<const std::int64_t> ranks, const Options& opt = {});
BwtSegment sample_text_suffixes(const Text& t, std::int32_t q, const Options& opt = {});
PartialIndex sa_chunk(const Text& t, std::int64_t a, std::int64_t b, const Options& opt = {});
PartialIndex partial_index(const Text& t, std::span<const std::int64_t> ranks, const Options& opt = {});
PartialTree build_partial_suffix_tree(const Text& t, const PartialIndex& pi);
std::string render_tree(const Text& t, const PartialTree& tree);

std::string to_json(const BwtSegment& s, const Text& t);
std::string to_json(const PartialIndex& p, const Text& t);
std::string to_tsv(const BwtSegment& s);
std::string to_tsv(const PartialIndex& p);

}  // namespace sufmsel

#pragma once
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "sufmsel/structures.hpp"

namespace sufmsel {

struct StructureError : std::logic_error {
  using std::logic_error::logic_error;
};

// lists in first-seen tag order, stable within a tag
template <class T>
std::vector<std::vector<T>> group(std::span<const T> objs, std::span<const int> tags, TagScratch& s) {
  std::vector<std::vector<T>> out;
  ++s.eta;
  for (std::size_t i = 0; i < objs.size(); ++i) {
    int t = tags[i];
    if (t < 1 || t >= static_cast<int>(s.stamp.size())) throw std::out_of_range("group: tag out of range");
    if (s.stamp[t] != s.eta) {
      s.stamp[t] = s.eta;
      s.slot[t] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[s.slot[t]].push_back(objs[i]);
  }
  return out;
}

struct SlicePart {
  int tag;
  int agg;
};

struct SliceOutput {
  std::vector<SlicePart> parts;  // ascending tag
  std::vector<int> tracked;      // tracked[t] = piece of the tracked node carrying tag t
  int created = 0;
};

// Columns of `a` carry tags in gs.col_tag, all within [1, d], at least two distinct.
// With refine set, active nodes get exact labels for their pieces; otherwise pieces
// inherit the old label and form a neighborhood.
SliceOutput slice(GlobalState& gs, int a, int d, bool refine, int track = NIL);

// a' joins a; a' is consumed
void join(GlobalState& gs, int ap, int a);

// a is unsolved, astar exhausted with more columns; a ends up holding the fused agglomerate
void slice_join(GlobalState& gs, int a, int astar);

// contact node of the agglomerate that every root suffix of `a` continues into
int join_target(const GlobalState& gs, int a);

}  // namespace sufmsel

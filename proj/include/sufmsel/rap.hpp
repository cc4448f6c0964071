#pragma once
#include <cstdint>
#include <vector>

#include "sufmsel/structures.hpp"

namespace sufmsel {

enum class Kind { GenericAcyclic, GenericCyclic, CoreCyclic };
const char* kind_name(Kind k);

struct Classification {
  Kind kind = Kind::GenericAcyclic;
  int core = NIL;
  std::vector<int> cols;        // contact visiting order
  std::vector<char> inside;     // continuation of cols[i] lands in this agglomerate
};

// f copies of the core label followed by a terminal; generic keys have f = 0
struct ColumnKey {
  std::int32_t f = 0;
  std::int32_t label = -1;  // -1: no successor (column ends at N)
  std::int32_t pos = 0;     // terminal suffix, for degenerate ties
  bool degenerate = false;
};

Classification classify(GlobalState& gs, int a);
std::vector<ColumnKey> build_keys(GlobalState& gs, const Classification& cl);
// metered: one key_cmp, plus one symbol_cmp on degenerate ties
int compare_keys(GlobalState& gs, const ColumnKey& x, const ColumnKey& y, std::int32_t core_label);

struct Tagging {
  int d = 0;
  std::vector<int> tag;          // per column, parallel to Classification::cols
  std::vector<char> pivotal;     // per tag
};

Tagging refine_leading(GlobalState& gs, int a, const Classification& cl, const std::vector<ColumnKey>& keys);

struct RapGroups {
  std::vector<int> undecided, joinable;
};

void distribute(GlobalState& gs, int a, const Classification& cl, const Tagging& tg, RapGroups& g);
void process_undecided(GlobalState& gs, RapGroups& g);
void process_joinable(GlobalState& gs, RapGroups& g);
void rap(GlobalState& gs, int a);

}  // namespace sufmsel

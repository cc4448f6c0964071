#include "sufmsel/apps.hpp"

#include <cstdio>
#include <sstream>

#include "json.hpp"
#include <stdexcept>

namespace sufmsel {

std::uint32_t bwt_symbol(const Text& t, std::int32_t j) { return t.symbol_unmetered(j == 1 ? t.size() : j - 1); }
char bwt_char(const Text& t, std::int32_t j) { return t.display(j == 1 ? t.size() : j - 1); }

namespace {

BwtSegment to_segment(const Text& t, SelectionResult&& r) {
  BwtSegment s;
  s.ranks = std::move(r.ranks);
  s.positions = std::move(r.positions);
  for (auto j : s.positions) {
    s.symbols.push_back(bwt_symbol(t, j));
    s.text.push_back(bwt_char(t, j));
  }
  s.metrics = r.metrics;
  return s;
}

PartialIndex to_index(SelectionResult&& r) {
  return {std::move(r.ranks), std::move(r.positions), std::move(r.lcps), r.metrics};
}

nlohmann::json meter_json(const Meter& m) {
  nlohmann::json ev;
  for (int k = 0; k < kEventKinds; ++k) ev[event_name(static_cast<EventKind>(k))] = m.events[k];
  return {{"symbol_cmp", m.symbol_cmp}, {"key_cmp", m.key_cmp}, {"events", ev}};
}

// bytes as printable characters or \xNN escapes
std::string escape(std::uint32_t sym) {
  if (sym == 0) return "$";
  auto b = static_cast<unsigned>(sym - 1);
  if (b >= 0x20 && b < 0x7f && b != '\\') return std::string(1, static_cast<char>(b));
  char buf[8];
  std::snprintf(buf, sizeof buf, "\\x%02x", b);
  return buf;
}

}  // namespace

BwtSegment bwt_segment(const Text& t, std::int64_t a, std::int64_t b, const Options& opt) {
  return to_segment(t, multiselect_consecutive(t, a, b, opt));
}

BwtSegment bwt_sample(const Text& t, std::span<const std::int64_t> ranks, const Options& opt) {
  return to_segment(t, multiselect(t, ranks, opt));
}

BwtSegment sample_text_suffixes(const Text& t, std::int32_t q, const Options& opt) {
  if (q < 1) throw std::invalid_argument("q must be positive");
  auto full = multiselect_consecutive(t, 1, t.size(), opt);
  SelectionResult kept;
  for (std::size_t k = 0; k < full.positions.size(); ++k) {
    if ((full.positions[k] - 1) % q != 0) continue;
    kept.ranks.push_back(full.ranks[k]);
    kept.positions.push_back(full.positions[k]);
  }
  kept.metrics = full.metrics;
  return to_segment(t, std::move(kept));
}

PartialIndex sa_chunk(const Text& t, std::int64_t a, std::int64_t b, const Options& opt) {
  return to_index(multiselect_consecutive(t, a, b, opt));
}

PartialIndex partial_index(const Text& t, std::span<const std::int64_t> ranks, const Options& opt) {
  return to_index(multiselect(t, ranks, opt));
}

std::int32_t PartialTree::leaves() const {
  std::int32_t k = 0;
  for (const auto& n : nodes) k += n.leaf >= 0;
  return k;
}

PartialTree build_partial_suffix_tree(const Text& t, const PartialIndex& pi) {
  if (!pi.positions.empty() && pi.lcps.size() + 1 != pi.positions.size())
    throw std::invalid_argument("lcp list length does not match positions");
  PartialTree tr;
  tr.nodes.push_back({});
  std::vector<int> st{0};
  for (std::size_t k = 0; k < pi.positions.size(); ++k) {
    auto p = pi.positions[k];
    if (k > 0) {
      auto l = pi.lcps[k - 1];
      int last = -1;
      while (tr.nodes[st.back()].depth > l) {
        last = st.back();
        st.pop_back();
      }
      if (tr.nodes[st.back()].depth < l) {
        int w = static_cast<int>(tr.nodes.size());
        tr.nodes.push_back({l, -1, p, {}});
        auto& ch = tr.nodes[st.back()].children;
        ch.back() = w;
        tr.nodes[w].children.push_back(last);
        st.push_back(w);
      }
    }
    int leaf = static_cast<int>(tr.nodes.size());
    tr.nodes.push_back({t.size() - p + 1, p, p, {}});
    tr.nodes[st.back()].children.push_back(leaf);
    st.push_back(leaf);
  }
  if (!pi.positions.empty()) tr.nodes[0].rep = pi.positions[0];
  return tr;
}

std::string render_tree(const Text& t, const PartialTree& tree) {
  std::ostringstream os;
  struct Item {
    int u, indent, from;
  };
  std::vector<Item> st{{0, 0, 0}};
  while (!st.empty()) {
    auto [u, indent, from] = st.back();
    st.pop_back();
    const auto& n = tree.nodes[u];
    if (u == 0) {
      os << "(root)\n";
    } else {
      os << std::string(indent * 2, ' ');
      for (auto i = n.rep + from; i < n.rep + n.depth; ++i) os << t.display(i);
      if (n.leaf >= 0) os << "  [" << n.leaf << "]";
      else os << "  (" << n.depth << ")";
      os << '\n';
    }
    for (auto it = n.children.rbegin(); it != n.children.rend(); ++it) st.push_back({*it, indent + 1, n.depth});
  }
  return os.str();
}

std::string to_json(const BwtSegment& s, const Text& t) {
  nlohmann::json j;
  j["schema_version"] = kSchemaVersion;
  j["n"] = t.size();
  j["ranks"] = s.ranks;
  j["positions"] = s.positions;
  std::vector<std::string> syms;
  for (auto x : s.symbols) syms.push_back(escape(x));
  j["symbols"] = syms;
  j["metrics"] = meter_json(s.metrics);
  return j.dump();
}

std::string to_json(const PartialIndex& p, const Text& t) {
  nlohmann::json j;
  j["schema_version"] = kSchemaVersion;
  j["n"] = t.size();
  j["ranks"] = p.ranks;
  j["positions"] = p.positions;
  j["lcps"] = p.lcps;
  j["metrics"] = meter_json(p.metrics);
  return j.dump();
}

std::string to_tsv(const BwtSegment& s) {
  std::ostringstream os;
  os << "rank\tposition\tsymbol\n";
  for (std::size_t k = 0; k < s.ranks.size(); ++k)
    os << s.ranks[k] << '\t' << s.positions[k] << '\t' << escape(s.symbols[k]) << '\n';
  return os.str();
}

std::string to_tsv(const PartialIndex& p) {
  std::ostringstream os;
  os << "rank\tposition\tlcp\n";
  for (std::size_t k = 0; k < p.ranks.size(); ++k) {
    os << p.ranks[k] << '\t' << p.positions[k] << '\t';
    if (k) os << p.lcps[k - 1];
    os << '\n';
  }
  return os.str();
}

}  // namespace sufmsel

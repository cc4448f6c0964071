#include "sufmsel/text.hpp"

#include <algorithm>

namespace sufmsel {

Text Text::from_symbols(std::vector<std::uint32_t> body) {
  Text t;
  t.sym_.reserve(body.size() + 2);
  t.sym_.push_back(0);
  for (auto s : body) t.sym_.push_back(s + 1);
  t.sym_.push_back(0);
  return t;
}

char Text::display(std::int32_t i) const {
  auto s = sym_.at(i);
  return s == 0 ? '$' : static_cast<char>(s - 1);
}

std::string Text::render() const {
  std::string out;
  for (std::int32_t i = 1; i <= size(); ++i) out.push_back(display(i));
  return out;
}

const char* event_name(EventKind k) {
  switch (k) {
    case EventKind::Creation: return "creation";
    case EventKind::Discovery: return "discovery";
    case EventKind::Exhaustion: return "exhaustion";
    case EventKind::Fusion: return "fusion";
    case EventKind::Collision: return "collision";
  }
  return "?";
}

std::int64_t Meter::events_total() const {
  std::int64_t s = 0;
  for (auto e : events) s += e;
  return s;
}

Text load_text(std::string_view raw, bool terminated) {
  std::vector<std::uint32_t> body;
  body.reserve(raw.size());
  for (unsigned char ch : raw) body.push_back(ch);

  if (terminated) {
    if (body.empty()) throw TextError("terminated input is empty");
    auto last = body.back();
    body.pop_back();
    for (auto s : body)
      if (s <= last) throw TextError("final symbol is not a unique minimum");
    return Text::from_symbols(std::move(body));
  }
  auto dollar = static_cast<std::uint32_t>('$');
  for (std::size_t i = 0; i + 1 < body.size(); ++i)
    if (body[i] == dollar) throw TextError("interior sentinel at offset " + std::to_string(i));
  if (!body.empty() && body.back() == dollar) body.pop_back();
  return Text::from_symbols(std::move(body));
}

int cmp_symbols(const Text& t, std::int32_t i, std::int32_t j, Meter& m) {
  if (i < 1 || j < 1 || i > t.size() || j > t.size())
    throw std::out_of_range("symbol index out of range");
  ++m.symbol_cmp;
  auto a = t.sym_[i], b = t.sym_[j];
  return a < b ? -1 : (a > b ? 1 : 0);
}

}  // namespace sufmsel

#pragma once
#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sufmsel {

// symbols are stored as byte+1; the sentinel is 0
class Text {
 public:
  Text() = default;
  static Text from_symbols(std::vector<std::uint32_t> body);

  std::int32_t size() const { return static_cast<std::int32_t>(sym_.size()) - 1; }
  std::string render() const;
  // printable form of T[i]; the sentinel renders as '$'
  char display(std::int32_t i) const;

  // raw access for the oracle-independent printing layer only
  std::uint32_t symbol_unmetered(std::int32_t i) const { return sym_.at(i); }

 private:
  friend int cmp_symbols(const Text&, std::int32_t, std::int32_t, struct Meter&);
  std::vector<std::uint32_t> sym_;  // index 0 unused
};

enum class EventKind : int { Creation = 0, Discovery, Exhaustion, Fusion, Collision };
inline constexpr int kEventKinds = 5;
const char* event_name(EventKind k);

struct Meter {
  std::int64_t symbol_cmp = 0;
  std::int64_t key_cmp = 0;
  std::array<std::int64_t, kEventKinds> events{};

  std::int64_t events_total() const;
  void add(EventKind k, std::int64_t n = 1) { events[static_cast<int>(k)] += n; }
  void reset() { *this = Meter{}; }
};

struct TextError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// '$' is the reserved sentinel representation in byte input
Text load_text(std::string_view raw, bool terminated = false);

// -1, 0, 1 for T[i] <, ==, > T[j]
int cmp_symbols(const Text& t, std::int32_t i, std::int32_t j, Meter& m);

}  // namespace sufmsel

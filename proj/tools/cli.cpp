#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "sufmsel/apps.hpp"
#include "sufmsel/driver.hpp"
#include "sufmsel/lcp.hpp"
#include "sufmsel/oracle.hpp"
#include "sufmsel/rap.hpp"

using namespace sufmsel;

namespace {

constexpr int kBadArgs = 2;
constexpr int kMismatch = 3;

struct BadArgs : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::int64_t parse_int(const std::string& s) {
  std::size_t used = 0;
  std::int64_t v = 0;
  try {
    auto caret = s.find('^');
    if (caret != std::string::npos) {
      auto base = std::stoll(s.substr(0, caret), &used);
      auto e = std::stoll(s.substr(caret + 1));
      if (used != caret || e < 0 || e > 40) throw BadArgs("bad number: " + s);
      v = 1;
      while (e--) v *= base;
      return v;
    }
    v = std::stoll(s, &used);
  } catch (const std::logic_error&) {
    throw BadArgs("bad number: " + s);
  }
  if (used != s.size()) throw BadArgs("bad number: " + s);
  return v;
}

// "3,5,9" or "start:step:count"
std::vector<std::int64_t> parse_ranks(const std::string& s) {
  if (s.empty()) throw BadArgs("empty rank list");
  std::vector<std::int64_t> out;
  if (s.find(':') != std::string::npos) {
    std::vector<std::string> f;
    std::stringstream ss(s);
    for (std::string x; std::getline(ss, x, ':');) f.push_back(x);
    if (f.size() != 3) throw BadArgs("progression must be start:step:count");
    auto a = parse_int(f[0]), d = parse_int(f[1]), k = parse_int(f[2]);
    if (d < 1 || k < 1) throw BadArgs("progression needs positive step and count");
    for (std::int64_t i = 0; i < k; ++i) out.push_back(a + i * d);
    return out;
  }
  std::stringstream ss(s);
  for (std::string x; std::getline(ss, x, ',');) out.push_back(parse_int(x));
  return out;
}

std::pair<std::int64_t, std::int64_t> parse_range(const std::string& s) {
  auto dots = s.find("..");
  if (dots == std::string::npos) throw BadArgs("range must be a..b");
  return {parse_int(s.substr(0, dots)), parse_int(s.substr(dots + 2))};
}

// "2^15..2^17" doubles from the low end; "a..b:f" multiplies by f
std::vector<std::int64_t> parse_grid(const std::string& s) {
  std::vector<std::int64_t> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');) {
    if (item.find("..") == std::string::npos) {
      out.push_back(parse_int(item));
      continue;
    }
    std::int64_t f = 2;
    auto colon = item.find(':');
    if (colon != std::string::npos) {
      f = parse_int(item.substr(colon + 1));
      item = item.substr(0, colon);
    }
    auto [a, b] = parse_range(item);
    if (a < 1 || f < 2 || a > b) throw BadArgs("bad grid: " + s);
    for (auto x = a; x <= b; x *= f) out.push_back(x);
  }
  return out;
}

struct Input {
  std::string file, inline_text;
  bool terminated = false;
};

Text read_text(const Input& in) {
  if (!in.file.empty() && !in.inline_text.empty()) throw BadArgs("give --text or --string, not both");
  std::string raw = in.inline_text;
  if (!in.file.empty()) {
    std::ifstream f(in.file, std::ios::binary);
    if (!f) throw BadArgs("cannot read " + in.file);
    std::ostringstream os;
    os << f.rdbuf();
    raw = os.str();
    while (!raw.empty() && raw.back() == '\n') raw.pop_back();
  }
  try {
    return load_text(raw, in.terminated);
  } catch (const TextError& e) {
    throw BadArgs(e.what());
  } catch (const std::bad_alloc&) {
    throw BadArgs("text does not fit in memory");
  }
}

Options engine_options() {
  Options o;
  const char* env = std::getenv("SUFMSEL_TRACE");
  int level = env ? std::atoi(env) : 0;
  if (level >= 1) {
    o.trace = [](const Trace& t) {
      std::cerr << "rap agg=" << t.agg << " kind=" << kind_name(static_cast<Kind>(t.kind)) << " cols=" << t.ncols
                << " tags=" << t.tags << " created=" << t.created << " work=" << t.work << '\n';
    };
  }
  o.debug = level >= 2;
  return o;
}

template <class F>
auto guarded(F&& f) {
  try {
    return f();
  } catch (const std::invalid_argument& e) {
    throw BadArgs(e.what());
  }
}

void print_list(std::ostream& os, const char* name, const auto& v) {
  os << name << ':';
  for (auto x : v) os << ' ' << x;
  os << '\n';
}

int report_mismatch(const std::string& what) {
  std::cerr << "verify: mismatch in " << what << '\n';
  return kMismatch;
}

std::vector<std::int32_t> oracle_positions(const Text& t, std::span<const std::int64_t> ranks) {
  return oracle_multiselect(t, ranks).positions;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"suffix multi-selection, partial BWT and partial suffix arrays"};
  app.require_subcommand(1);
  Input in;
  auto add_input = [&](CLI::App* c) {
    c->add_option("--text", in.file, "input file; a trailing '$' is taken as the sentinel");
    c->add_option("--string", in.inline_text, "input given inline");
    c->add_flag("--terminated", in.terminated, "last byte is a unique minimum and acts as the sentinel");
  };
  bool json = false, tsv = false, verify = false, tree = false, with_oracle = false;
  std::string ranks_s, range_s, sizes_s = "2^10", ks_s = "64", csv_path;
  std::int32_t every = 0, alphabet = 2;
  std::uint64_t seed = 1;

  auto* msel = app.add_subcommand("msel", "select suffixes of the given ranks");
  add_input(msel);
  msel->add_option("--ranks", ranks_s, "list a,b,c or start:step:count")->required();
  msel->add_flag("--json", json);
  msel->add_flag("--verify", verify, "compare against the oracle");

  auto* bwt = app.add_subcommand("bwt", "symbols of the BWT");
  add_input(bwt);
  auto* o_range = bwt->add_option("--range", range_s, "a..b");
  auto* o_ranks = bwt->add_option("--ranks", ranks_s);
  auto* o_every = bwt->add_option("--every", every, "sample suffixes 1, 1+q, ...");
  o_range->excludes(o_ranks)->excludes(o_every);
  o_ranks->excludes(o_every);
  bwt->add_flag("--json", json);
  bwt->add_flag("--tsv", tsv);
  bwt->add_flag("--verify", verify);

  auto* sa = app.add_subcommand("sa", "a chunk of the suffix array with lcps");
  add_input(sa);
  auto* s_range = sa->add_option("--range", range_s, "a..b");
  auto* s_ranks = sa->add_option("--ranks", ranks_s);
  s_range->excludes(s_ranks);
  sa->add_flag("--tree", tree, "print the partial suffix tree");
  sa->add_flag("--json", json);
  sa->add_flag("--tsv", tsv);
  sa->add_flag("--verify", verify);

  auto* bench = app.add_subcommand("bench", "comparison counts over a grid of random texts");
  bench->add_option("--sizes", sizes_s, "text lengths, e.g. 2^15..2^17");
  bench->add_option("--ks", ks_s, "query sizes, e.g. 64..16384:4");
  bench->add_option("--alphabet", alphabet)->check(CLI::Range(1, 256));
  bench->add_option("--csv", csv_path, "write rows here instead of stdout");
  bench->add_option("--seed", seed);
  bench->add_flag("--with-oracle", with_oracle, "also count the oracle sort");

  auto* ver = app.add_subcommand("verify", "check every query kind against the oracle");
  add_input(ver);
  ver->add_option("--ranks", ranks_s);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kBadArgs;
  }

  try {
    auto opt = engine_options();

    if (*msel) {
      auto t = read_text(in);
      auto r = parse_ranks(ranks_s);
      auto res = guarded([&] { return multiselect(t, r, opt); });
      if (json) {
        PartialIndex pi{res.ranks, res.positions, res.lcps, res.metrics};
        std::cout << to_json(pi, t) << '\n';
      } else {
        print_list(std::cout, "positions", res.positions);
        print_list(std::cout, "lcps", res.lcps);
        std::cout << "symbol_cmp: " << res.metrics.symbol_cmp << "\nkey_cmp: " << res.metrics.key_cmp
                  << "\nevents: " << res.metrics.events_total() << '\n';
      }
      if (verify && res.positions != oracle_positions(t, r)) return report_mismatch("positions");
      return 0;
    }

    if (*bwt) {
      auto t = read_text(in);
      BwtSegment seg;
      std::string expect;
      auto full = verify ? oracle_bwt(t) : std::string();
      if (!range_s.empty()) {
        auto [a, b] = parse_range(range_s);
        seg = guarded([&] { return bwt_segment(t, a, b, opt); });
        if (verify) expect = full.substr(a - 1, b - a + 1);
      } else if (!ranks_s.empty()) {
        auto r = parse_ranks(ranks_s);
        seg = guarded([&] { return bwt_sample(t, r, opt); });
        if (verify)
          for (auto x : r) expect.push_back(full[x - 1]);
      } else if (every > 0) {
        seg = sample_text_suffixes(t, every, opt);
        if (verify) expect = oracle_macro_sample(t, every);
      } else {
        throw BadArgs("bwt needs --range, --ranks or --every q with q >= 1");
      }
      if (json) std::cout << to_json(seg, t) << '\n';
      else if (tsv) std::cout << to_tsv(seg);
      else std::cout << seg.text << '\n';
      if (verify && seg.text != expect) return report_mismatch("bwt symbols");
      return 0;
    }

    if (*sa) {
      auto t = read_text(in);
      PartialIndex pi;
      std::vector<std::int64_t> r;
      if (!range_s.empty()) {
        auto [a, b] = parse_range(range_s);
        pi = guarded([&] { return sa_chunk(t, a, b, opt); });
      } else if (!ranks_s.empty()) {
        pi = guarded([&] { return partial_index(t, parse_ranks(ranks_s), opt); });
      } else {
        throw BadArgs("sa needs --range or --ranks");
      }
      if (json) std::cout << to_json(pi, t) << '\n';
      else if (tsv) std::cout << to_tsv(pi);
      else if (tree) std::cout << render_tree(t, build_partial_suffix_tree(t, pi));
      else {
        print_list(std::cout, "positions", pi.positions);
        print_list(std::cout, "lcps", pi.lcps);
      }
      if (verify) {
        auto o = oracle_multiselect(t, pi.ranks);
        if (o.positions != pi.positions) return report_mismatch("positions");
        if (o.lcps != pi.lcps) return report_mismatch("lcps");
      }
      return 0;
    }

    if (*bench) {
      auto sizes = parse_grid(sizes_s);
      auto ks = parse_grid(ks_s);
      std::ofstream file;
      if (!csv_path.empty()) {
        file.open(csv_path);
        if (!file) throw BadArgs("cannot write " + csv_path);
      }
      std::ostream& os = csv_path.empty() ? std::cout : file;
      os << "N,K,kind,symbol_cmp,key_cmp,events,oracle_symbol_cmp\n";
      std::mt19937_64 rng(seed);
      for (auto n : sizes) {
        if (n < 1 || n > (1 << 28)) throw BadArgs("size out of range");
        std::vector<std::uint32_t> body(n - 1);
        for (auto& x : body) x = static_cast<std::uint32_t>(rng() % alphabet);
        auto t = Text::from_symbols(body);
        std::int64_t oracle_cmp = -1;
        if (with_oracle) {
          Meter m;
          oracle_sa(t, m);
          oracle_cmp = m.symbol_cmp;
        }
        for (auto k : ks) {
          if (k > n) continue;
          auto a = (n - k) / 2 + 1;
          auto cons = multiselect_consecutive(t, a, a + k - 1, opt);
          std::vector<std::int64_t> r;
          for (std::int64_t i = 0; i < k; ++i) r.push_back(1 + i * n / k);
          auto spaced = multiselect(t, r, opt);
          for (auto* res : {&cons, &spaced}) {
            const auto& m = res->metrics;
            os << n << ',' << k << ',' << (res == &cons ? "consecutive" : "spaced") << ',' << m.symbol_cmp << ','
               << m.key_cmp << ',' << m.events_total() << ',';
            if (oracle_cmp >= 0) os << oracle_cmp;
            os << '\n';
          }
        }
      }
      return 0;
    }

    if (*ver) {
      auto t = read_text(in);
      auto sa_o = oracle_sa(t);
      auto full = multiselect_consecutive(t, 1, t.size(), opt);
      if (full.positions != sa_o) return report_mismatch("suffix array");
      std::vector<std::int64_t> all(t.size());
      for (std::int32_t i = 0; i < t.size(); ++i) all[i] = i + 1;
      if (full.lcps != oracle_multiselect(t, all).lcps) return report_mismatch("lcps");
      if (bwt_segment(t, 1, t.size(), opt).text != oracle_bwt(t)) return report_mismatch("bwt");
      for (std::int32_t q = 2; q <= 4; ++q)
        if (sample_text_suffixes(t, q, opt).text != oracle_macro_sample(t, q)) return report_mismatch("text sample");
      if (!ranks_s.empty()) {
        auto r = parse_ranks(ranks_s);
        auto res = guarded([&] { return multiselect(t, r, opt); });
        auto o = oracle_multiselect(t, r);
        if (res.positions != o.positions || res.lcps != o.lcps) return report_mismatch("selected ranks");
      }
      std::cout << "ok " << t.size() << '\n';
      return 0;
    }
  } catch (const BadArgs& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadArgs;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
  return kBadArgs;
}

// Command-line front end. Every subcommand prints one JSON object on stdout;
// errors go to stderr with exit codes 1 (usage), 2 (bad input or metric) and
// 3 (precondition or guard violation).

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "warpdist/io.hpp"
#include "warpdist/warpdist.hpp"

using nlohmann::json;
using namespace warpdist;

namespace {

constexpr std::size_t kQuadraticDefaultLimit = 4096;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json cost_json(Cost c) {
  if (is_infinite(c)) return nullptr;
  if (std::fabs(c) < 9.0e15 && c == std::floor(c)) return static_cast<std::int64_t>(c);
  return c;
}

std::string format_real(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string letter_name(Symbol s) {
  return s < 26 ? std::string(1, static_cast<char>('a' + s)) : "l" + std::to_string(s);
}

std::uint64_t default_seed() {
  const char* env = std::getenv("WARPDIST_SEED");
  if (env == nullptr || *env == '\0') return 0;
  std::uint64_t v = 0;
  const auto* end = env + std::char_traits<char>::length(env);
  const auto res = std::from_chars(env, end, v);
  if (res.ec != std::errc{} || res.ptr != end) throw UsageError("WARPDIST_SEED must be an unsigned integer");
  return v;
}

template <class F>
auto timed(F&& f, std::int64_t& elapsed_ns) {
  const auto start = std::chrono::steady_clock::now();
  auto out = f();
  elapsed_ns = std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start).count();
  return out;
}

// ---------------------------------------------------------------------------
// Metric plumbing

struct MetricOptions {
  std::string metric = "hamming";
  std::optional<std::string> null_token;
};

io::MetricSpec load_spec(const MetricOptions& opt) {
  io::MetricSpec spec;
  if (opt.metric == "hamming") {
    spec.kind = io::MetricKind::Hamming;
    spec.open_alphabet = true;
  } else if (opt.metric == "real") {
    spec.kind = io::MetricKind::Real;
  } else {
    spec = io::load_metric_file(opt.metric);
  }
  if (opt.null_token) {
    spec.null_token = opt.null_token;
    if (spec.kind == io::MetricKind::Hamming && !spec.open_alphabet) spec.alphabet.intern(*opt.null_token);
  }
  for (const auto& w : spec.warnings) std::cerr << "warning: " << w << "\n";
  return spec;
}

struct Inputs {
  std::vector<std::string> x, y;
};

Inputs read_inputs(const std::string& a, const std::string& b) {
  return {io::read_token_file(a), io::read_token_file(b)};
}

std::vector<Symbol> symbols_for(io::MetricSpec& spec, const std::vector<std::string>& tokens) {
  return spec.open_alphabet ? io::intern_all(spec.alphabet, tokens) : io::lookup_all(spec.alphabet, tokens);
}

/// Calls f(metric, x, y) with the concrete metric type for the loaded spec.
template <class F>
json with_metric(io::MetricSpec& spec, const Inputs& in, F&& f) {
  switch (spec.kind) {
    case io::MetricKind::Real:
      return f(RealLineMetric{}, io::parse_reals(in.x), io::parse_reals(in.y));
    case io::MetricKind::Table:
      return f(*spec.table, symbols_for(spec, in.x), symbols_for(spec, in.y));
    case io::MetricKind::Tree:
      return f(*spec.tree, symbols_for(spec, in.x), symbols_for(spec, in.y));
    case io::MetricKind::Hamming: {
      const auto x = symbols_for(spec, in.x);
      const auto y = symbols_for(spec, in.y);
      return f(HammingMetric(std::max<std::size_t>(spec.alphabet.size(), 1), spec.unit), x, y);
    }
  }
  throw std::logic_error("unhandled metric kind");
}

/// As with_metric, but with a null letter for edit distances. Hamming gets a
/// fresh letter at unit distance unless a null is named; the real line
/// defaults to the origin.
template <class F>
json with_edit_metric(io::MetricSpec& spec, const Inputs& in, F&& f) {
  switch (spec.kind) {
    case io::MetricKind::Real: {
      const double null = spec.null_token ? io::parse_real(*spec.null_token) : 0.0;
      return f(NullAugmented<RealLineMetric>(RealLineMetric{}, null), io::parse_reals(in.x), io::parse_reals(in.y));
    }
    case io::MetricKind::Table:
    case io::MetricKind::Tree: {
      if (!spec.null_token) throw std::invalid_argument("edit distance needs a \"null\" letter in the metric file or --null");
      const Symbol null = spec.alphabet.at(*spec.null_token);
      const auto x = symbols_for(spec, in.x);
      const auto y = symbols_for(spec, in.y);
      if (spec.kind == io::MetricKind::Table) return f(NullAugmented<TableMetric>(*spec.table, null), x, y);
      return f(NullAugmented<WellSeparatedTree>(*spec.tree, null), x, y);
    }
    case io::MetricKind::Hamming: {
      if (spec.null_token && spec.open_alphabet) spec.alphabet.intern(*spec.null_token);
      const auto x = symbols_for(spec, in.x);
      const auto y = symbols_for(spec, in.y);
      const Symbol null = spec.null_token ? spec.alphabet.at(*spec.null_token)
                                          : static_cast<Symbol>(spec.alphabet.size());
      const std::size_t size = std::max<std::size_t>(spec.alphabet.size(), null + 1);
      return f(NullAugmented<HammingMetric>(HammingMetric(size, spec.unit), null), x, y);
    }
  }
  throw std::logic_error("unhandled metric kind");
}

/// Hamming space as a star: every letter hangs off a fresh root at `unit`.
WellSeparatedTree hamming_star(std::size_t letters, Cost unit) {
  std::vector<Symbol> parent(letters + 1, static_cast<Symbol>(letters));
  std::vector<Cost> weight(letters + 1, unit);
  return WellSeparatedTree(std::move(parent), std::move(weight));
}

json sizes(std::size_t nx, std::size_t ny) { return json{{"x", nx}, {"y", ny}}; }

// ---------------------------------------------------------------------------
// Subcommands

struct DtwOptions {
  std::optional<double> bound;
  std::optional<std::size_t> banded;
  bool doubling = false;
  bool quadratic = false;
  bool oracle = false;
};

json run_dtw(io::MetricSpec& spec, const Inputs& in, const DtwOptions& opt) {
  return with_metric(spec, in, [&](const auto& m, const auto& x, const auto& y) {
    using M = std::decay_t<decltype(m)>;
    using L = typename M::letter_type;
    const std::span<const L> sx(x), sy(y);
    json out{{"command", "dtw"}, {"n", sizes(x.size(), y.size())}};
    std::int64_t ns = 0;
    if (opt.oracle) {
      const auto r = timed([&] { return oracle::dtw_bruteforce_traced(m, sx, sy); }, ns);
      out["method"] = "oracle";
      out["distance"] = cost_json(r.value);
      out["paths"] = r.paths;
    } else if (opt.bound) {
      const auto r = timed([&] { return dtw_bounded(m, sx, sy, *opt.bound); }, ns);
      out["method"] = "bounded";
      out["bound"] = cost_json(*opt.bound);
      out["exceeds_bound"] = r.exceeds_bound();
      out["distance"] = r.exact ? cost_json(*r.exact) : json(nullptr);
      out["states"] = r.states;
      out["band"] = r.band;
    } else if (opt.banded) {
      const auto v = timed([&] { return dtw_banded(m, sx, sy, *opt.banded); }, ns);
      out["method"] = "banded";
      out["band"] = *opt.banded;
      out["distance"] = cost_json(v);
    } else {
      const bool doubling = opt.doubling || (!opt.quadratic && std::max(x.size(), y.size()) >= kQuadraticDefaultLimit);
      if (doubling) {
        const auto t = timed([&] { return dtw_doubling_traced(m, sx, sy); }, ns);
        out["method"] = "doubling";
        out["distance"] = cost_json(t.value);
        out["probes"] = t.probes;
        out["states"] = t.states;
      } else {
        const auto v = timed([&] { return dtw_quadratic(m, sx, sy); }, ns);
        out["method"] = "quadratic";
        out["distance"] = cost_json(v);
      }
    }
    out["elapsed_ns"] = ns;
    return out;
  });
}

json run_ed(io::MetricSpec& spec, const Inputs& in, const std::string& which, bool use_oracle) {
  return with_edit_metric(spec, in, [&](const auto& m, const auto& x, const auto& y) {
    using M = std::decay_t<decltype(m)>;
    using L = typename M::letter_type;
    const std::span<const L> sx(x), sy(y);
    json out{{"command", which}, {"n", sizes(x.size(), y.size())}};
    std::int64_t ns = 0;
    Cost v = 0.0;
    if (which == "ed") {
      v = timed([&] { return use_oracle ? oracle::ed_bruteforce(m, sx, sy) : ed_general(m, sx, sy); }, ns);
      out["method"] = use_oracle ? "oracle" : "dp";
    } else if (which == "ed-via-dtw") {
      v = timed([&] { return ed_via_dtw(m, sx, sy); }, ns);
      out["method"] = "dtw-padded";
    } else {
      if constexpr (std::is_same_v<M, NullAugmented<HammingMetric>>) {
        v = timed([&] { return ed_via_lcs(m, sx, sy); }, ns);
        out["method"] = "lcs-padded";
      } else {
        throw std::invalid_argument("ed-via-lcs requires a hamming metric");
      }
    }
    out["distance"] = cost_json(v);
    out["elapsed_ns"] = ns;
    return out;
  });
}

json run_lcs(const Inputs& in, bool use_oracle) {
  std::int64_t ns = 0;
  const std::span<const std::string> sx(in.x), sy(in.y);
  const auto k = timed([&] { return use_oracle ? oracle::lcs_bruteforce(sx, sy) : lcs(sx, sy); }, ns);
  return json{{"command", "lcs"},
              {"n", sizes(in.x.size(), in.y.size())},
              {"method", use_oracle ? "oracle" : "dp"},
              {"lcs", k},
              {"distance", in.x.size() + in.y.size() - 2 * k},
              {"elapsed_ns", ns}};
}

json estimate_json(const ApproxEstimate& e) {
  return json{{"estimate", cost_json(e.estimate)},
              {"lower", cost_json(e.lower)},
              {"upper", cost_json(e.upper)},
              {"mode", std::string(to_string(e.mode))},
              {"gap_calls", e.gap_calls}};
}

json run_approx_dtw(io::MetricSpec& spec, const Inputs& in, double eps, std::uint64_t seed, int trials) {
  std::int64_t ns = 0;
  json out;
  if (spec.kind == io::MetricKind::Real) {
    const auto x = io::parse_reals(in.x);
    const auto y = io::parse_reals(in.y);
    const auto r = timed([&] { return dtw_approx_reals(x, y, eps, seed, trials); }, ns);
    out = estimate_json(r.best);
    out["gap_calls"] = r.gap_calls;
    out["trials"] = r.trials;
  } else if (spec.kind == io::MetricKind::Tree || spec.kind == io::MetricKind::Hamming) {
    const auto x = symbols_for(spec, in.x);
    const auto y = symbols_for(spec, in.y);
    const auto tree = spec.kind == io::MetricKind::Tree ? *spec.tree : hamming_star(spec.alphabet.size(), spec.unit);
    out = estimate_json(timed([&] { return dtw_approximate(tree, x, y, eps); }, ns));
  } else {
    throw std::invalid_argument("approx-dtw needs a tree, hamming or real metric");
  }
  out["command"] = "approx-dtw";
  out["epsilon"] = eps;
  out["seed"] = seed;
  out["n"] = sizes(in.x.size(), in.y.size());
  out["elapsed_ns"] = ns;
  return out;
}

json run_approx_ed(io::MetricSpec& spec, const Inputs& in, double eps, std::uint64_t seed) {
  return with_edit_metric(spec, in, [&](const auto& m, const auto& x, const auto& y) {
    std::int64_t ns = 0;
    const auto e = timed([&] { return ed_approximate(m, x, y, eps, seed); }, ns);
    json out = estimate_json(e);
    out["samples"] = e.samples;
    out["command"] = "approx-ed";
    out["epsilon"] = eps;
    out["seed"] = seed;
    out["n"] = sizes(x.size(), y.size());
    out["elapsed_ns"] = ns;
    return out;
  });
}

json run_embed(const std::string& path, std::uint64_t seed) {
  const auto points = io::parse_reals(io::read_token_file(path));
  Rng rng = derive_rng(seed);
  const auto e = embed_reals(points, rng);
  json out = io::tree_to_json(e.tree, [&](Symbol v) {
    return e.is_pivot[v] ? "pivot" + std::to_string(v) : format_real(e.node_value[v]);
  });
  out["seed"] = seed;
  return out;
}

struct GenOptions {
  std::string kind = "hamming";
  std::string regime = "random";
  std::size_t n = 64;
  std::size_t alphabet = 4;
  std::size_t distance = 4;
  std::optional<std::string> out_x, out_y, out_metric;
};

void write_tokens(const std::string& path, const json& tokens) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write '" + path + "'");
  bool first = true;
  for (const auto& t : tokens) {
    out << (first ? "" : " ") << (t.is_string() ? t.get<std::string>() : t.dump());
    first = false;
  }
  out << "\n";
}

json run_gen(const GenOptions& opt, std::uint64_t seed) {
  if (opt.n == 0) throw std::domain_error("--n must be positive");
  if (opt.alphabet < 2) throw std::domain_error("--alphabet-size must be at least 2");
  Rng rng = derive_rng(seed);
  std::vector<Symbol> x, y;
  if (opt.regime == "random") {
    x = gen::random_runs(rng, opt.n, opt.alphabet, 4);
    y = gen::random_runs(rng, opt.n, opt.alphabet, 4);
  } else if (opt.regime == "low") {
    x = gen::random_runs(rng, opt.n, opt.alphabet, 4);
    y = gen::perturb(rng, x, opt.alphabet, opt.distance);
  } else if (opt.regime == "band-adversarial") {
    std::tie(x, y) = gen::band_adversarial(opt.n, opt.distance);
  } else {
    throw UsageError("unknown --regime '" + opt.regime + "'");
  }
  json out{{"kind", opt.kind}, {"regime", opt.regime}, {"seed", seed}, {"n", opt.n}};
  const auto names = [&](const std::vector<Symbol>& s, auto&& name) {
    json arr = json::array();
    for (Symbol l : s) arr.push_back(name(l));
    return arr;
  };
  if (opt.kind == "hamming") {
    out["x"] = names(x, letter_name);
    out["y"] = names(y, letter_name);
  } else if (opt.kind == "real") {
    // Letters become integers spread over [0, 100 * alphabet].
    const auto values = gen::random_integer_reals(rng, std::max<std::size_t>(opt.alphabet, 3), 100 * static_cast<int>(opt.alphabet));
    const auto value = [&](Symbol l) { return values[l % values.size()]; };
    out["x"] = names(x, value);
    out["y"] = names(y, value);
  } else if (opt.kind == "tree") {
    const auto tree = gen::random_tree(rng, std::max<std::size_t>(opt.alphabet, 3), 1 << 10);
    const auto node = [](Symbol l) { return "n" + std::to_string(l); };
    const auto leafish = [&](Symbol l) { return node(l % static_cast<Symbol>(tree.size())); };
    out["x"] = names(x, leafish);
    out["y"] = names(y, leafish);
    out["metric"] = io::tree_to_json(tree, node);
  } else {
    throw UsageError("unknown --kind '" + opt.kind + "'");
  }
  if (opt.out_x) write_tokens(*opt.out_x, out["x"]);
  if (opt.out_y) write_tokens(*opt.out_y, out["y"]);
  if (opt.out_metric) {
    if (!out.contains("metric")) throw UsageError("--out-metric only applies to --kind tree");
    std::ofstream f(*opt.out_metric);
    if (!f) throw std::invalid_argument("cannot write '" + *opt.out_metric + "'");
    f << out["metric"].dump(2) << "\n";
  }
  return out;
}

struct BenchOptions {
  std::string family = "band-adversarial";
  std::vector<std::size_t> n{1024, 2048, 4096};
  std::size_t mismatches = 0;
  std::size_t band = 8;
  std::size_t quadratic_limit = 1u << 15;
  int repeat = 1;
};

json run_bench(const BenchOptions& opt, std::uint64_t seed) {
  if (opt.repeat < 1) throw std::domain_error("--repeat must be at least 1");
  HammingMetric m(4);
  json rows = json::array();
  for (std::size_t n : opt.n) {
    std::vector<Symbol> x, y;
    if (opt.family == "band-adversarial") {
      std::tie(x, y) = gen::band_adversarial(n, opt.mismatches);
    } else if (opt.family == "random") {
      Rng rng = derive_rng(seed, {n});
      x = gen::random_runs(rng, n, 4, 8);
      y = gen::random_runs(rng, n, 4, 8);
    } else if (opt.family == "low-distance") {
      Rng rng = derive_rng(seed, {n});
      x = gen::random_runs(rng, n, 4, 8);
      y = gen::perturb(rng, x, 4, opt.mismatches);
    } else {
      throw UsageError("unknown --family '" + opt.family + "'");
    }
    const std::span<const Symbol> sx(x), sy(y);
    const auto row = [&](const std::string& method, auto&& f) {
      std::int64_t best = 0;
      json r;
      for (int k = 0; k < opt.repeat; ++k) {
        std::int64_t ns = 0;
        r = timed(f, ns);
        best = k == 0 ? ns : std::min(best, ns);
      }
      r["n"] = n;
      r["method"] = method;
      r["elapsed_ns"] = best;
      rows.push_back(std::move(r));
    };
    row("doubling", [&] {
      const auto t = dtw_doubling_traced(m, sx, sy);
      return json{{"distance", cost_json(t.value)}, {"states", t.states}, {"probes", t.probes}};
    });
    row("banded", [&] { return json{{"distance", cost_json(dtw_banded(m, sx, sy, opt.band))}, {"band", opt.band}}; });
    if (n <= opt.quadratic_limit) row("quadratic", [&] { return json{{"distance", cost_json(dtw_quadratic(m, sx, sy))}}; });
    if (n * n <= oracle::kDtwGuard) row("oracle", [&] { return json{{"distance", cost_json(oracle::dtw_bruteforce(m, sx, sy))}}; });
  }
  return json{{"command", "bench"}, {"family", opt.family}, {"seed", seed}, {"mismatches", opt.mismatches}, {"rows", rows}};
}

// ---------------------------------------------------------------------------
// Output

std::string scalar_text(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

void print_pretty(const json& out) {
  if (out.contains("rows")) {
    std::vector<std::string> cols{"n", "method", "distance", "elapsed_ns"};
    for (const auto& r : out["rows"])
      for (const auto& [k, v] : r.items())
        if (std::find(cols.begin(), cols.end(), k) == cols.end()) cols.push_back(k);
    for (const auto& c : cols) std::cout << std::left << std::setw(14) << c;
    std::cout << "\n";
    for (const auto& r : out["rows"]) {
      for (const auto& c : cols) std::cout << std::left << std::setw(14) << (r.contains(c) ? scalar_text(r[c]) : "-");
      std::cout << "\n";
    }
    return;
  }
  for (const auto& [k, v] : out.items()) std::cout << std::left << std::setw(14) << k << scalar_text(v) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact and approximate dynamic time warping and edit distances"};
  app.require_subcommand(1);
  app.fallthrough();  // global options may follow the subcommand
  bool pretty = false;
  std::optional<std::uint64_t> seed_opt;
  app.add_flag("--pretty", pretty, "Human-readable output instead of JSON");
  app.add_option("--seed", seed_opt, "Random seed (default: $WARPDIST_SEED or 0)");

  MetricOptions metric;
  std::string file_x, file_y;
  const auto add_pair = [&](CLI::App* sub) {
    sub->add_option("x", file_x, "First string file")->required();
    sub->add_option("y", file_y, "Second string file")->required();
    sub->add_option("--metric", metric.metric, "hamming, real, or a metric JSON file");
    sub->add_option("--null", metric.null_token, "Null letter for edit distances");
  };

  DtwOptions dtw_opt;
  auto* dtw = app.add_subcommand("dtw", "Exact DTW distance");
  add_pair(dtw);
  dtw->add_option("--bound", dtw_opt.bound, "Low-distance DP: exact if dtw <= K, else exceeds");
  dtw->add_option("--banded", dtw_opt.banded, "Diagonal band of half-width K (may overestimate)");
  dtw->add_flag("--doubling", dtw_opt.doubling, "Run-based DP with doubling bounds");
  dtw->add_flag("--quadratic", dtw_opt.quadratic, "Full quadratic DP");
  dtw->add_flag("--oracle", dtw_opt.oracle, "Exhaustive path enumeration (tiny inputs)");

  bool ed_oracle = false;
  auto* ed = app.add_subcommand("ed", "Weighted edit distance");
  add_pair(ed);
  ed->add_flag("--oracle", ed_oracle, "Exhaustive alignment enumeration (tiny inputs)");
  auto* ed_dtw = app.add_subcommand("ed-via-dtw", "Edit distance as DTW of padded strings");
  add_pair(ed_dtw);
  auto* ed_lcs = app.add_subcommand("ed-via-lcs", "Edit distance from the padded indel distance (hamming only)");
  add_pair(ed_lcs);

  bool lcs_oracle = false;
  auto* lcs_cmd = app.add_subcommand("lcs", "Longest common subsequence");
  lcs_cmd->add_option("x", file_x, "First string file")->required();
  lcs_cmd->add_option("y", file_y, "Second string file")->required();
  lcs_cmd->add_flag("--oracle", lcs_oracle, "Subset enumeration (tiny inputs)");

  double eps = 0.5;
  int trials = 0;
  auto* adtw = app.add_subcommand("approx-dtw", "Approximate DTW over a tree, hamming or the real line");
  add_pair(adtw);
  adtw->add_option("--epsilon", eps, "Approximation exponent in (0, 1)");
  adtw->add_option("--trials", trials, "Tree embeddings for real inputs (default ceil(log2 n) + 1)");
  std::string tree_file;
  adtw->add_option("--tree", tree_file, "Tree metric file (same as --metric FILE)");
  bool real_flag = false;
  adtw->add_flag("--real", real_flag, "Real-line letters (same as --metric real)");

  auto* aed = app.add_subcommand("approx-ed", "Approximate weighted edit distance");
  add_pair(aed);
  aed->add_option("--epsilon", eps, "Approximation exponent in (0, 1)");

  std::string points_file;
  auto* embed = app.add_subcommand("embed", "Random tree embedding of real points");
  embed->add_option("points", points_file, "File of real numbers")->required();

  GenOptions gen_opt;
  auto* gen_cmd = app.add_subcommand("gen", "Seeded random instances");
  gen_cmd->add_option("--kind", gen_opt.kind, "hamming, real or tree");
  gen_cmd->add_option("--regime", gen_opt.regime, "random, low or band-adversarial");
  gen_cmd->add_option("--n", gen_opt.n, "String length");
  gen_cmd->add_option("--alphabet-size", gen_opt.alphabet, "Letters (tree nodes for --kind tree)");
  gen_cmd->add_option("--distance", gen_opt.distance, "Edits (low) or mismatches (band-adversarial)");
  gen_cmd->add_option("--out-x", gen_opt.out_x, "Write x as a string file");
  gen_cmd->add_option("--out-y", gen_opt.out_y, "Write y as a string file");
  gen_cmd->add_option("--out-metric", gen_opt.out_metric, "Write the tree metric file");

  BenchOptions bench_opt;
  auto* bench = app.add_subcommand("bench", "Timing sweep over n");
  bench->add_option("--family", bench_opt.family, "band-adversarial, random or low-distance");
  bench->add_option("--n", bench_opt.n, "String lengths")->expected(1, -1);
  bench->add_option("--mismatches", bench_opt.mismatches, "Planted mismatches or edits");
  bench->add_option("--band", bench_opt.band, "Half-width for the banded heuristic");
  bench->add_option("--quadratic-limit", bench_opt.quadratic_limit, "Skip the quadratic DP above this n");
  bench->add_option("--repeat", bench_opt.repeat, "Timing repetitions (minimum reported)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    const std::uint64_t seed = seed_opt ? *seed_opt : default_seed();
    if (!tree_file.empty()) metric.metric = tree_file;
    if (real_flag) metric.metric = "real";
    json out;
    if (*dtw) {
      auto spec = load_spec(metric);
      out = run_dtw(spec, read_inputs(file_x, file_y), dtw_opt);
    } else if (*ed || *ed_dtw || *ed_lcs) {
      auto spec = load_spec(metric);
      const std::string which = *ed ? "ed" : *ed_dtw ? "ed-via-dtw" : "ed-via-lcs";
      out = run_ed(spec, read_inputs(file_x, file_y), which, ed_oracle);
    } else if (*lcs_cmd) {
      out = run_lcs(read_inputs(file_x, file_y), lcs_oracle);
    } else if (*adtw) {
      auto spec = load_spec(metric);
      out = run_approx_dtw(spec, read_inputs(file_x, file_y), eps, seed, trials);
    } else if (*aed) {
      auto spec = load_spec(metric);
      out = run_approx_ed(spec, read_inputs(file_x, file_y), eps, seed);
    } else if (*embed) {
      out = run_embed(points_file, seed);
    } else if (*gen_cmd) {
      out = run_gen(gen_opt, seed);
    } else if (*bench) {
      out = run_bench(bench_opt, seed);
    }
    if (pretty) print_pretty(out);
    else std::cout << out.dump() << "\n";
    return 0;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::overflow_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

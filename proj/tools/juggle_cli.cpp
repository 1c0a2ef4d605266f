//
// juggle_cli.cpp
//
// Command-line front end. Every subcommand builds one table and writes it
// as CSV or JSON. Exit status: 0 on success, 1 when a verification fails,
// 2 when the arguments are unusable.
//

#include "table.hpp"

#include "juggle/asymptotics.hpp"
#include "juggle/chain_basic.hpp"
#include "juggle/chain_flag.hpp"
#include "juggle/chain_hatted.hpp"
#include "juggle/errors.hpp"
#include "juggle/fq_oracle.hpp"
#include "juggle/series.hpp"
#include "juggle/state.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#ifndef JUGGLE_VERSION
#define JUGGLE_VERSION "0.0.0"
#endif

using namespace juggle;
using juggle::cli::Table;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

// Thrown for argument combinations CLI11 cannot express.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Result {
  Table table;
  bool passed = true;
};

struct Global {
  std::string format = "csv";
  std::string output;
  std::uint64_t seed = 1;
};

// q given exactly, or derived from the empty-hand probability E and b.
struct CoinOptions {
  std::string q;
  std::optional<double> empty_hand;
  std::optional<int> balls;

  void attach(CLI::App* app)
  {
    app->add_option("--q", q, "Coin parameter as an exact fraction, p(heads) = 1/q");
    app->add_option("--E", empty_hand, "Empty-hand probability q^-b (needs --balls)");
  }

  CoinConfig resolve(int default_balls) const
  {
    if (!q.empty() && empty_hand) {
      throw UsageError("give either --q or --E, not both");
    }
    if (empty_hand) {
      return CoinConfig::from_empty_hand(*empty_hand, balls.value_or(default_balls));
    }
    if (q.empty()) {
      throw UsageError("one of --q or --E is required");
    }
    const Rational value = parse_rational(q);
    if (value <= 1) {
      throw UsageError("--q must exceed 1");
    }
    return CoinConfig(value);
  }
};

std::string fraction_text(const Rational& r)
{
  return boost::multiprecision::numerator(r).str() + "/" +
         boost::multiprecision::denominator(r).str();
}

std::vector<int> default_labels(const std::vector<int>& labels, int balls)
{
  if (!labels.empty()) {
    auto sorted = labels;
    std::sort(sorted.begin(), sorted.end());
    if (sorted.front() < 1) {
      throw UsageError("labels must be positive");
    }
    return sorted;
  }
  if (balls < 1) {
    throw UsageError("need --balls >= 1 or --labels");
  }
  std::vector<int> out;
  for (int i = 1; i <= balls; ++i) {
    out.push_back(i);
  }
  return out;
}

// ---------------------------------------------------------------------------
// simulate
// ---------------------------------------------------------------------------

struct SimulateArgs {
  std::string chain = "basic";
  std::string state;
  int balls = 2;
  std::vector<int> labels;
  std::uint64_t steps = 100000;
  std::uint64_t burnin = 1000;
  int max_ell = 10;
  CoinOptions coin;
};

Result run_simulate(const SimulateArgs& a, const Global& g)
{
  Result r;
  r.table.columns = {"state", "ell", "visits", "empirical", "stationary"};
  ChainRng rng(g.seed);
  if (a.chain == "basic") {
    const auto start = a.state.empty() ? JugglingState::ground(a.balls)
                                       : JugglingState::parse(a.state);
    const auto coin = a.coin.resolve(start.balls());
    const auto hist = simulate(start, coin, a.steps, a.burnin, rng);
    for (const auto& [s, n] : hist.counts) {
      r.table.add({s.to_string(), inversions(s), n,
                   static_cast<double>(n) / static_cast<double>(hist.samples),
                   to_double(stationary_weight(s, coin))});
    }
    r.table.summary["tv"] = tv_distance(hist, coin, a.max_ell);
  } else {
    FlagState start;
    if (a.state.empty()) {
      start = FlagState(default_labels(a.labels, a.balls));
    } else {
      start = FlagState::parse(a.state);
    }
    const auto coin = a.coin.resolve(start.balls());
    const auto hist = flag_simulate(start, coin, a.steps, a.burnin, rng);
    for (const auto& [s, n] : hist.counts) {
      r.table.add({s.to_string(), inversions(s), n,
                   static_cast<double>(n) / static_cast<double>(hist.samples),
                   to_double(flag_stationary_weight(s, coin))});
    }
    r.table.summary["tv"] = flag_tv_distance(hist, coin, a.max_ell);
  }
  r.table.summary["samples"] = a.steps > a.burnin ? a.steps - a.burnin : 0;
  return r;
}

// ---------------------------------------------------------------------------
// dist
// ---------------------------------------------------------------------------

struct DistArgs {
  std::string chain = "auto";
  std::string state;
  bool composed = false;
  CoinOptions coin;
};

std::string detect_chain(const std::string& text)
{
  if (text.find('^') != std::string::npos) {
    return "hatted";
  }
  if (text.find_first_of("xX") != std::string::npos ||
      text.find("\xc3\x97") != std::string::npos) {
    return "basic";
  }
  if (text.find_first_of("123456789") != std::string::npos) {
    return "flag";
  }
  return "basic";
}

template <class Dist, class Render>
void dist_rows(Table& table, const Dist& dist, Render render)
{
  for (const auto& [s, p] : dist) {
    table.add({render(s), fraction_text(p), to_double(p)});
  }
  table.summary["outcomes"] = dist.size();
  table.summary["total"] = fraction_text(dist.total());
}

Result run_dist(const DistArgs& a, const Global&)
{
  Result r;
  r.table.columns = {"state", "probability", "decimal"};
  const std::string chain = a.chain == "auto" ? detect_chain(a.state) : a.chain;
  r.table.summary["chain"] = chain;
  if (chain == "basic") {
    const auto s = JugglingState::parse(a.state);
    const auto coin = a.coin.resolve(s.balls());
    dist_rows(r.table, backward_dist(s, coin), [](const auto& t) { return t.to_string(); });
  } else if (chain == "flag") {
    const auto s = FlagState::parse(a.state);
    const auto coin = a.coin.resolve(s.balls());
    const auto d = a.composed ? composed_backward_dist(s, coin) : flag_backward_dist(s, coin);
    dist_rows(r.table, d, [](const auto& t) { return t.to_string(); });
  } else {
    const auto s = parse_mixed(a.state);
    const int balls = std::visit(
        [](const auto& v) {
          int n = 0;
          for (int c : v.cells()) {
            n += c != FlagState::kEmpty ? 1 : 0;
          }
          return n;
        },
        s);
    const auto coin = a.coin.resolve(balls);
    dist_rows(r.table, hatted_backward_dist(s, coin),
              [](const MixedState& t) { return to_string(t); });
  }
  return r;
}

// ---------------------------------------------------------------------------
// stationary-check
// ---------------------------------------------------------------------------

constexpr int kMaxAutoDropCap = 1024;

struct StationaryArgs {
  std::string chain = "basic";
  int balls = 2;
  std::vector<int> labels;
  int max_ell = 6;
  int drop_cap = 0;
  CoinOptions coin;
};

Result run_stationary(const StationaryArgs& a, const Global&)
{
  Result r;
  if (a.chain == "basic") {
    r.table.columns = {"state", "ell", "weight", "inflow", "balanced"};
    const auto coin = a.coin.resolve(a.balls);
    for (const auto& s : states_up_to_inversions(a.balls, a.max_ell)) {
      const auto c = verify_stationarity(s, coin);
      r.passed = r.passed && c.balanced;
      r.table.add({s.to_string(), inversions(s), fraction_text(c.weight),
                   fraction_text(c.inflow), c.balanced});
    }
  } else {
    r.table.columns = {"state", "ell", "weight", "partial", "tail_bound", "verdict"};
    const auto labels = default_labels(a.labels, a.balls);
    const int b = static_cast<int>(labels.size());
    const auto coin = a.coin.resolve(b);
    for (const auto& s : flag_states_up_to_inversions(labels, a.max_ell)) {
      // Without an explicit cap, double it until the tail is small enough.
      int cap = a.drop_cap > 0 ? a.drop_cap : std::max(16, s.size() + b + 12);
      try {
        std::optional<FlagStationarityCheck> found;
        while (!found) {
          try {
            found = verify_flag_stationarity(s, coin, cap);
          } catch (const CapTooSmall&) {
            if (a.drop_cap > 0 || cap >= kMaxAutoDropCap) {
              throw;
            }
            cap = std::min(2 * cap, kMaxAutoDropCap);
          }
        }
        const auto& c = *found;
        r.passed = r.passed && c.pass;
        r.table.add({s.to_string(), inversions(s), fraction_text(c.weight),
                     fraction_text(c.partial), to_double(c.tail_bound),
                     c.pass ? "pass" : "fail"});
      } catch (const CapTooSmall&) {
        r.passed = false;
        r.table.add({s.to_string(), inversions(s), "", "", "", "cap-too-small"});
      }
    }
  }
  r.table.summary["states"] = r.table.rows.size();
  r.table.summary["verdict"] = r.passed ? "pass" : "fail";
  return r;
}

// ---------------------------------------------------------------------------
// oracle
// ---------------------------------------------------------------------------

struct OracleArgs {
  std::string kind = "pivot";
  int balls = 2;
  std::vector<int> labels;
  int cols = 3;
  int p = 2;
  std::uint64_t budget = kDefaultMatrixBudget;
  unsigned workers = 0;
};

// Every flag state over `labels` with all labels in [0, window).
std::vector<FlagState> flag_targets(const std::vector<int>& labels, int window)
{
  std::vector<FlagState> out;
  const int b = static_cast<int>(labels.size());
  for (const auto& shape : states_in_window(b, window)) {
    auto order = labels;
    do {
      std::vector<int> cells(static_cast<size_t>(shape.last() + 1), FlagState::kEmpty);
      for (int k = 0; k < b; ++k) {
        cells[static_cast<size_t>(shape.positions()[static_cast<size_t>(k)])] =
            order[static_cast<size_t>(k)];
      }
      out.emplace_back(std::move(cells));
    } while (std::next_permutation(order.begin(), order.end()));
  }
  std::sort(out.begin(), out.end());
  return out;
}

template <class State, class Formula>
void fraction_rows(Result& r, const Census<State>& census,
                   const std::vector<State>& targets, Formula formula)
{
  r.table.columns = {"target", "count", "fraction", "formula", "match"};
  for (const auto& t : targets) {
    const auto it = census.counts.find(t);
    const std::uint64_t n = it == census.counts.end() ? 0 : it->second;
    const Rational fraction = census.fraction(t);
    const Rational predicted = formula(t);
    const bool match = fraction == predicted;
    r.passed = r.passed && match;
    r.table.add({t.to_string(), n, fraction_text(fraction), fraction_text(predicted), match});
  }
  r.table.summary["matrices"] = census.total;
  r.table.summary["rank_deficient"] = census.deficient;
}

std::string matrix_text(const FqMatrix& m)
{
  std::string out;
  for (int i = 0; i < m.rows(); ++i) {
    if (i > 0) {
      out += ';';
    }
    for (int j = 0; j < m.cols(); ++j) {
      out += std::to_string(m.at(i, j));
    }
  }
  return out;
}

Result run_oracle(const OracleArgs& a, const Global&)
{
  if (a.p != 2 && a.p != 3 && a.p != 5) {
    throw UsageError("--p must be 2, 3 or 5");
  }
  Result r;
  if (a.kind == "pivot") {
    const auto census = pivot_census(a.balls, a.cols, a.p, a.budget, a.workers);
    fraction_rows(r, census, states_in_window(a.balls, a.cols),
                  [&](const JugglingState& t) { return pivot_fraction_formula(a.p, t); });
  } else if (a.kind == "flag") {
    const auto census = flag_census(a.balls, a.cols, a.p, a.budget, a.workers);
    fraction_rows(r, census, flag_targets(default_labels({}, a.balls), a.cols),
                  [&](const FlagState& t) { return flag_fraction_formula(a.p, t); });
  } else if (a.kind == "group") {
    const auto labels = default_labels(a.labels, a.balls);
    const auto groups = LabelGroups::from_labels(labels);
    const auto census = group_census(groups, a.cols, a.p, a.budget, a.workers);
    fraction_rows(r, census, flag_targets(labels, a.cols), [&](const FlagState& t) {
      return group_fraction_formula(groups, a.p, t);
    });
  } else {
    r.table.columns = {"matrix", "pivot", "flag_pivot", "plain_match", "flag_match"};
    const CoinConfig coin{Rational(a.p)};
    for (const auto& m : full_rank_matrices(a.balls, a.cols, a.p, a.budget)) {
      const auto plain = *pivot_state(m);
      const auto flag = *flag_pivot_state(m);
      const bool plain_ok = column_prepend_dist(m) == backward_dist(plain, coin);
      const bool flag_ok = flag_column_prepend_dist(m) == flag_backward_dist(flag, coin);
      r.passed = r.passed && plain_ok && flag_ok;
      r.table.add({matrix_text(m), plain.to_string(), flag.to_string(), plain_ok, flag_ok});
    }
    r.table.summary["matrices"] = r.table.rows.size();
  }
  r.table.summary["verdict"] = r.passed ? "pass" : "fail";
  return r;
}

// ---------------------------------------------------------------------------
// series
// ---------------------------------------------------------------------------

struct SeriesArgs {
  int degree = kDefaultSeriesDegree;
  int max_balls = 4;
  int max_perm = 6;
  int max_window = 10;
};

Result run_series(const SeriesArgs& a, const Global&)
{
  if (a.degree < 0) {
    throw UsageError("--degree must be nonnegative");
  }
  Result r;
  r.table.columns = {"identity", "parameters", "degree", "equal"};
  const auto record = [&](const std::string& name, const std::string& params,
                          const SeriesCheck& c) {
    r.passed = r.passed && c.equal;
    r.table.add({name, params, a.degree, c.equal});
  };
  for (int b = 0; b <= a.max_balls; ++b) {
    const std::string params = "b=" + std::to_string(b);
    record("state-partition", params, check_state_partition(b, a.degree));
    record("bundle-factorization", params, check_bundle_factorization(b, a.degree));
    if (b >= 1) {
      record("flag-series", params, check_flag_series(b, a.degree));
    }
  }
  for (int n = 1; n <= a.max_perm; ++n) {
    record("permutation-poincare", "n=" + std::to_string(n), check_perm_poincare(n, a.degree));
  }
  for (int h = 0; h <= a.max_window; ++h) {
    for (int j = 0; j <= h; ++j) {
      record("grassmannian", "j=" + std::to_string(j) + " h=" + std::to_string(h),
             check_grassmannian(j, h, a.degree));
    }
  }
  r.table.summary["verdict"] = r.passed ? "pass" : "fail";
  return r;
}

// ---------------------------------------------------------------------------
// density
// ---------------------------------------------------------------------------

struct DensityArgs {
  double empty_hand = 0.1;
  double mu_max = 6;
  double step = 0.01;
  bool empirical = false;
  int balls = 64;
  int grid = 64;
  std::uint64_t steps = 1000000;
  std::uint64_t burnin = 100000;
  std::optional<double> tolerance;
};

Result run_density(const DensityArgs& a, const Global& g)
{
  Result r;
  if (!a.empirical) {
    r.table.columns = {"mu", "density"};
    for (const auto& pt : density_curve(a.empty_hand, a.mu_max, a.step)) {
      r.table.add({pt.mu, pt.density});
    }
    return r;
  }
  r.table.columns = {"mu", "empirical", "predicted", "deviation"};
  EmpiricalConfig config;
  config.balls = a.balls;
  config.empty_hand = a.empty_hand;
  config.grid_size = a.grid;
  config.mu_max = a.mu_max;
  config.steps = a.steps;
  config.burnin = a.burnin;
  ChainRng rng(g.seed);
  double worst = 0;
  for (const auto& row : empirical_density(config, rng)) {
    worst = std::max(worst, row.deviation);
    r.table.add({row.mu, row.empirical, row.predicted, row.deviation});
  }
  r.table.summary["max_deviation"] = worst;
  if (a.tolerance) {
    r.passed = worst < *a.tolerance;
    r.table.summary["verdict"] = r.passed ? "pass" : "fail";
  }
  return r;
}

// ---------------------------------------------------------------------------
// siteswap
// ---------------------------------------------------------------------------

Result run_siteswap(const std::string& pattern, const Global&)
{
  Result r;
  r.table.columns = {"beat", "throw", "state"};
  const auto sw = parse_siteswap(pattern);
  r.table.summary["pattern"] = sw.to_string();
  r.table.summary["period"] = sw.throws.size();
  try {
    const auto info = validate_siteswap(sw);
    for (size_t k = 0; k < sw.throws.size(); ++k) {
      r.table.add({k, sw.throws[k], info.states[k].to_string()});
    }
    r.table.summary["valid"] = true;
    r.table.summary["balls"] = info.balls;
  } catch (const InvalidPattern& e) {
    r.passed = false;
    r.table.summary["valid"] = false;
    r.table.summary["reason"] = e.what();
  }
  return r;
}

// ---------------------------------------------------------------------------
// digraph
// ---------------------------------------------------------------------------

struct DigraphArgs {
  std::string chain = "basic";
  int balls = 2;
  std::vector<int> labels;
  int max_ell = 4;
  int window = 0;
  int max_throw = 0;
  int max_drop = 0;
};

std::string join_ints(const std::vector<int>& values)
{
  std::string out;
  for (size_t k = 0; k < values.size(); ++k) {
    out += (k > 0 ? " " : "") + std::to_string(values[k]);
  }
  return out;
}

Result run_digraph(const DigraphArgs& a, const Global&)
{
  Result r;
  if (a.chain == "basic") {
    r.table.columns = {"from", "throw", "to"};
    const int window = a.window;
    const int max_throw = a.max_throw > 0 ? a.max_throw : (window > 0 ? window : a.balls + 2);
    const auto states = window > 0 ? states_in_window(a.balls, window)
                                   : states_up_to_inversions(a.balls, a.max_ell);
    for (const auto& s : states) {
      for (const auto& [t, target] : forward_edges(s, max_throw)) {
        if (window > 0 && target.last() >= window) {
          continue;
        }
        r.table.add({s.to_string(), t, target.to_string()});
      }
    }
    r.table.summary["states"] = states.size();
  } else {
    r.table.columns = {"from", "throw_set", "to"};
    const auto labels = default_labels(a.labels, a.balls);
    const auto states = flag_states_up_to_inversions(labels, a.max_ell);
    for (const auto& s : states) {
      const int cap = a.max_drop > 0 ? a.max_drop : s.size() + 1;
      for (const auto& e : flag_forward_edges(s, cap)) {
        r.table.add({s.to_string(), join_ints(e.throw_set), e.target.to_string()});
      }
    }
    r.table.summary["states"] = states.size();
  }
  r.table.summary["edges"] = r.table.rows.size();
  return r;
}

// ---------------------------------------------------------------------------

// Every option of the chosen subcommand, given or defaulted, except where
// the output goes.
std::string canonical_config(const CLI::App& app, const CLI::App& sub)
{
  std::map<std::string, std::string> values;
  const auto collect = [&](const CLI::App& a, const std::string& prefix) {
    for (const CLI::Option* o : a.get_options()) {
      const std::string name = o->get_name();
      if (name == "--output" || name == "--help" || name == "-h" || name.empty()) {
        continue;
      }
      std::string value;
      if (o->count() > 0) {
        for (const auto& v : o->results()) {
          value += v + ",";
        }
      } else {
        value = o->get_default_str();
      }
      values[prefix + name] = value;
    }
  };
  collect(app, "");
  collect(sub, sub.get_name() + ".");
  std::string out = sub.get_name();
  for (const auto& [k, v] : values) {
    out += "\n" + k + "=" + v;
  }
  return out;
}

}  // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Juggling-state chains, exact distributions and oracles"};
  app.set_version_flag("--version", std::string(JUGGLE_VERSION));
  app.require_subcommand(1);
  app.fallthrough();

  Global g;
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  app.add_option("--output,-o", g.output, "Write to this file instead of stdout");
  app.add_option("--seed", g.seed, "Random seed")->capture_default_str();

  const auto chain_kind = [](CLI::Option* o, std::initializer_list<std::string> kinds) {
    o->check(CLI::IsMember(std::vector<std::string>(kinds)))->capture_default_str();
  };

  std::function<Result()> job;

  SimulateArgs sim;
  auto* simulate_cmd = app.add_subcommand("simulate", "Run a backward chain and report TV distance");
  chain_kind(simulate_cmd->add_option("--chain", sim.chain), {"basic", "flag"});
  simulate_cmd->add_option("--state", sim.state, "Start state (default: ground state)");
  simulate_cmd->add_option("--balls,-b", sim.balls)->capture_default_str()->check(CLI::PositiveNumber);
  simulate_cmd->add_option("--labels", sim.labels, "Flag labels, comma separated")->delimiter(',');
  simulate_cmd->add_option("--steps", sim.steps)->capture_default_str();
  simulate_cmd->add_option("--burnin", sim.burnin)->capture_default_str();
  simulate_cmd->add_option("--max-ell", sim.max_ell, "Inversion cap for the TV comparison")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  sim.coin.attach(simulate_cmd);
  simulate_cmd->callback([&] {
    sim.coin.balls = sim.balls;
    job = [&] { return run_simulate(sim, g); };
  });

  DistArgs dist;
  auto* dist_cmd = app.add_subcommand("dist", "Exact one-step backward distribution");
  dist_cmd->add_option("--state", dist.state)->required();
  chain_kind(dist_cmd->add_option("--chain", dist.chain), {"auto", "basic", "flag", "hatted"});
  dist_cmd->add_flag("--composed", dist.composed, "Flag states: compose hatted moves instead");
  dist.coin.attach(dist_cmd);
  std::optional<int> dist_balls;
  dist_cmd->add_option("--balls,-b", dist_balls, "Ball count for --E (default: from the state)");
  dist_cmd->callback([&] {
    dist.coin.balls = dist_balls;
    job = [&] { return run_dist(dist, g); };
  });

  StationaryArgs st;
  auto* st_cmd = app.add_subcommand("stationary-check", "Verify stationarity over small states");
  chain_kind(st_cmd->add_option("--chain", st.chain), {"basic", "flag"});
  st_cmd->add_option("--balls,-b", st.balls)->capture_default_str()->check(CLI::PositiveNumber);
  st_cmd->add_option("--labels", st.labels, "Flag labels, comma separated")->delimiter(',');
  st_cmd->add_option("--max-ell", st.max_ell)->capture_default_str()->check(CLI::NonNegativeNumber);
  st_cmd->add_option("--drop-cap", st.drop_cap, "Flag drop cap (0: automatic)")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  st.coin.attach(st_cmd);
  st_cmd->callback([&] {
    st.coin.balls = st.labels.empty() ? st.balls : static_cast<int>(st.labels.size());
    job = [&] { return run_stationary(st, g); };
  });

  OracleArgs orc;
  auto* oracle_cmd = app.add_subcommand("oracle", "Exhaustive matrix census over F_p");
  chain_kind(oracle_cmd->add_option("--kind", orc.kind), {"pivot", "flag", "group", "prepend"});
  oracle_cmd->add_option("--balls,-b", orc.balls, "Matrix rows")->capture_default_str()->check(CLI::PositiveNumber);
  oracle_cmd->add_option("--cols,-n", orc.cols, "Matrix columns")->capture_default_str()->check(CLI::PositiveNumber);
  oracle_cmd->add_option("--labels", orc.labels, "Group labels, comma separated")->delimiter(',');
  oracle_cmd->add_option("--p", orc.p, "Field size")->capture_default_str();
  oracle_cmd->add_option("--budget", orc.budget, "Maximum matrices to enumerate")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  oracle_cmd->add_option("--workers", orc.workers, "Threads (0: automatic)")->capture_default_str();
  oracle_cmd->callback([&] { job = [&] { return run_oracle(orc, g); }; });

  SeriesArgs ser;
  auto* series_cmd = app.add_subcommand("series", "Check generating-function identities");
  series_cmd->add_option("--degree,-D", ser.degree)->capture_default_str();
  series_cmd->add_option("--max-balls", ser.max_balls)->capture_default_str()->check(CLI::NonNegativeNumber);
  series_cmd->add_option("--max-perm", ser.max_perm)->capture_default_str()->check(CLI::NonNegativeNumber);
  series_cmd->add_option("--max-window", ser.max_window)->capture_default_str()->check(CLI::NonNegativeNumber);
  series_cmd->callback([&] { job = [&] { return run_series(ser, g); }; });

  DensityArgs den;
  auto* density_cmd = app.add_subcommand("density", "Limiting ball density, optionally against simulation");
  density_cmd->add_option("--E", den.empty_hand, "Empty-hand probability")->capture_default_str();
  density_cmd->add_option("--mu-max", den.mu_max)->capture_default_str();
  density_cmd->add_option("--step", den.step)->capture_default_str();
  density_cmd->add_flag("--empirical", den.empirical, "Compare with a simulated run");
  density_cmd->add_option("--balls,-b", den.balls)->capture_default_str()->check(CLI::PositiveNumber);
  density_cmd->add_option("--grid", den.grid, "Buckets per unit of mu")->capture_default_str()->check(CLI::PositiveNumber);
  density_cmd->add_option("--steps", den.steps)->capture_default_str();
  density_cmd->add_option("--burnin", den.burnin)->capture_default_str();
  density_cmd->add_option("--tolerance", den.tolerance, "Fail if any deviation reaches this");
  density_cmd->callback([&] { job = [&] { return run_density(den, g); }; });

  std::string pattern;
  auto* siteswap_cmd = app.add_subcommand("siteswap", "Parse and validate a siteswap");
  siteswap_cmd->add_option("pattern", pattern)->required();
  siteswap_cmd->callback([&] { job = [&] { return run_siteswap(pattern, g); }; });

  DigraphArgs dg;
  auto* digraph_cmd = app.add_subcommand("digraph", "Dump forward digraph edges");
  chain_kind(digraph_cmd->add_option("--chain", dg.chain), {"basic", "flag"});
  digraph_cmd->add_option("--balls,-b", dg.balls)->capture_default_str()->check(CLI::PositiveNumber);
  digraph_cmd->add_option("--labels", dg.labels, "Flag labels, comma separated")->delimiter(',');
  digraph_cmd->add_option("--max-ell", dg.max_ell)->capture_default_str()->check(CLI::NonNegativeNumber);
  digraph_cmd->add_option("--window", dg.window, "Keep states inside [0, window)")->capture_default_str();
  digraph_cmd->add_option("--max-throw", dg.max_throw, "0: window or b + 2")->capture_default_str();
  digraph_cmd->add_option("--max-drop", dg.max_drop, "Flag drop cap (0: state length + 1)")->capture_default_str();
  digraph_cmd->callback([&] { job = [&] { return run_digraph(dg, g); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  Result result;
  try {
    result = job();
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ResourceLimit& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailed;
  }

  const CLI::App* sub = app.get_subcommands().front();
  cli::RunInfo info{JUGGLE_VERSION, g.seed, cli::fnv1a_hex(canonical_config(app, *sub))};

  std::ostringstream text;
  if (g.format == "json") {
    cli::write_json(text, result.table, info);
  } else {
    cli::write_csv(text, result.table, info);
  }
  if (g.output.empty()) {
    std::cout << text.str();
    std::cout.flush();
  } else {
    std::ofstream file(g.output, std::ios::binary);
    file << text.str();
    if (!file) {
      std::cerr << "error: cannot write " << g.output << '\n';
      return kExitUsage;
    }
  }
  return result.passed ? kExitOk : kExitFailed;
}

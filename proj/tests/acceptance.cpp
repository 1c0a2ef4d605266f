//
// acceptance.cpp
//
// One line per acceptance criterion: PASS or FAIL, a short summary of what
// was measured, and the wall time against its budget.
//

#include "juggle/asymptotics.hpp"
#include "juggle/chain_basic.hpp"
#include "juggle/chain_flag.hpp"
#include "juggle/chain_hatted.hpp"
#include "juggle/errors.hpp"
#include "juggle/fq_oracle.hpp"
#include "juggle/series.hpp"
#include "juggle/state.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

using namespace juggle;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void run(int id, const char* title, double budget_seconds,
         const std::function<Outcome()>& body)
{
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool in_time = secs < budget_seconds;
  const bool pass = out.pass && in_time;
  if (!pass) {
    ++failures;
  }
  std::printf("%s %2d  %-28s %s [%.2fs / %.0fs]\n", pass ? "PASS" : "FAIL", id,
              title, out.detail.c_str(), secs, budget_seconds);
  std::fflush(stdout);
}

// Records the first failure and counts checks.
class Tally {
 public:
  void check(bool ok, const std::string& what)
  {
    ++_checks;
    if (!ok && _first.empty()) {
      _first = what;
    }
  }

  Outcome result(const std::string& extra = "") const
  {
    std::ostringstream s;
    s << _checks << " checks";
    if (!extra.empty()) {
      s << ", " << extra;
    }
    if (!_first.empty()) {
      s << "; first failure: " << _first;
    }
    return {_first.empty(), s.str()};
  }

 private:
  long _checks = 0;
  std::string _first;
};

Outcome pattern_counts()
{
  Tally t;
  for (int n = 1; n <= 4; ++n) {
    for (int b = 0; b <= 3; ++b) {
      const auto expected = static_cast<std::uint64_t>(std::pow(b + 1, n));
      t.check(count_patterns(n, b) == expected,
              "n=" + std::to_string(n) + " b=" + std::to_string(b));
    }
  }
  return t.result();
}

Outcome backward_example()
{
  Tally t;
  const auto dist = backward_dist(JugglingState::parse("--xx-x"), CoinConfig(Rational(2)));
  t.check(dist.size() == 4, "outcome count");
  t.check(dist.probability(JugglingState::parse("x--xx")) == Rational(1, 2), "x--xx");
  t.check(dist.probability(JugglingState::parse("x--x--x")) == Rational(1, 4), "x--x--x");
  t.check(dist.probability(JugglingState::parse("x---x-x")) == Rational(1, 8), "x---x-x");
  t.check(dist.probability(JugglingState::parse("---xx-x")) == Rational(1, 8), "---xx-x");
  return t.result();
}

Outcome exact_stationarity()
{
  Tally t;
  for (const Rational q : {Rational(2), Rational(3), Rational(7, 2)}) {
    const CoinConfig coin(q);
    for (int b = 1; b <= 3; ++b) {
      for (const auto& s : states_up_to_inversions(b, 8)) {
        t.check(verify_stationarity(s, coin).balanced,
                s.to_string() + " q=" + to_string(q));
      }
    }
  }
  return t.result();
}

Outcome pivot_fractions()
{
  Tally t;
  for (const int p : {2, 3}) {
    for (int b = 1; b <= 2; ++b) {
      const auto narrow = pivot_census(b, 3, p);
      const auto wide = pivot_census(b, 4, p);
      for (const int n : {3, 4}) {
        for (const auto& target : states_in_window(b, n)) {
          const auto c = pivot_fraction_exhaustive(b, n, p, target);
          t.check(c.match, target.to_string() + " N=" + std::to_string(n) +
                               " p=" + std::to_string(p));
        }
      }
      for (const auto& target : states_in_window(b, 3)) {
        t.check(narrow.fraction(target) == wide.fraction(target),
                "N-independence " + target.to_string());
      }
    }
  }
  return t.result();
}

Outcome column_prepend()
{
  Tally t;
  long matrices = 0;
  for (const int p : {2, 3}) {
    const CoinConfig coin{Rational(p)};
    for (const auto& m : full_rank_matrices(2, 4, p)) {
      ++matrices;
      t.check(column_prepend_dist(m) == backward_dist(*pivot_state(m), coin),
              "plain p=" + std::to_string(p));
      t.check(flag_column_prepend_dist(m) == flag_backward_dist(*flag_pivot_state(m), coin),
              "flag p=" + std::to_string(p));
    }
  }
  return t.result(std::to_string(matrices) + " full-rank matrices");
}

Outcome flag_example()
{
  Tally t;
  const auto s = FlagState::parse("--31-2");
  for (const Rational q : {Rational(2), Rational(3), Rational(7, 2)}) {
    const CoinConfig coin(q);
    const Rational h = coin.heads();
    const Rational u = coin.tails();
    FlagDist expected;
    expected.add(FlagState::parse("1--32"), u * u);
    expected.add(FlagState::parse("2--31"), u * h);
    expected.add(FlagState::parse("1--3--2"), u * h);
    expected.add(FlagState::parse("3---1-2"), h * h * u);
    expected.add(FlagState::parse("---31-2"), h * h * h);
    t.check(flag_backward_dist(s, coin) == expected, "q=" + to_string(q));
  }
  return t.result();
}

Outcome flag_stationarity()
{
  Tally t;
  const CoinConfig coin(Rational(2));
  Rational worst = 0;
  for (const std::vector<int>& labels :
       {std::vector<int>{1}, {1, 2}, {1, 2, 3}, {1, 1, 2}}) {
    const int b = static_cast<int>(labels.size());
    for (const auto& s : flag_states_up_to_inversions(labels, 6)) {
      const int cap = std::max(16, s.size() + b + 12);
      const auto c = verify_flag_stationarity(s, coin, cap);
      t.check(c.pass, s.to_string());
      worst = std::max(worst, c.tail_bound / c.weight);
    }
  }
  return t.result("max tail/weight " + std::to_string(to_double(worst)));
}

Outcome hatted_composition()
{
  Tally t;
  const CoinConfig coin(Rational(2));
  for (const std::vector<int>& labels :
       {std::vector<int>{1}, {1, 2}, {1, 2, 3}, {1, 1, 2}}) {
    for (const auto& s : flag_states_up_to_inversions(labels, 6)) {
      t.check(composed_backward_dist(s, coin) == flag_backward_dist(s, coin),
              s.to_string());
    }
  }
  // The entry state of "3 - 2 1" steps to two outcomes.
  for (const Rational q : {Rational(2), Rational(3), Rational(7, 2)}) {
    const CoinConfig c(q);
    const auto entry = enter_hat(FlagState::parse("3-21"));
    const auto step = hatted_backward_dist(entry, c);
    MixedDist expected;
    expected.add(HattedState::parse("3 - 2 1^"), c.tails());
    expected.add(HattedState::parse("3 - 2 -^ 1"), c.heads());
    t.check(step == expected, "two-outcome step q=" + to_string(q));
  }
  return t.result();
}

Outcome series_identities()
{
  Tally t;
  const int d = 24;
  for (int b = 0; b <= 4; ++b) {
    t.check(check_state_partition(b, d).equal, "partition b=" + std::to_string(b));
    t.check(check_bundle_factorization(b, d).equal, "bundle b=" + std::to_string(b));
  }
  for (int b = 1; b <= 3; ++b) {
    t.check(check_flag_series(b, d).equal, "flag b=" + std::to_string(b));
  }
  for (int n = 1; n <= 6; ++n) {
    t.check(check_perm_poincare(n, d).equal, "perm n=" + std::to_string(n));
  }
  for (int h = 0; h <= 10; ++h) {
    for (int j = 0; j <= h; ++j) {
      t.check(check_grassmannian(j, h, d).equal,
              "Gr(" + std::to_string(j) + "," + std::to_string(h) + ")");
    }
  }
  return t.result();
}

Outcome asymptotics()
{
  Tally t;
  double worst_trip = 0;
  double worst_fd = 0;
  for (int ei = 1; ei <= 9; ++ei) {
    const double e = ei / 10.0;
    for (int li = 1; li <= 19; ++li) {
      const double lambda = li * 0.05;
      worst_trip = std::max(worst_trip,
                            std::abs(lambda_of_mu(e, mu_of_lambda(e, lambda)) - lambda));
    }
    for (int mi = 1; mi <= 40; ++mi) {
      const double mu = mi * 0.1;
      const double step = 1e-4;
      const double fd =
          (lambda_of_mu(e, mu + step) - lambda_of_mu(e, mu - step)) / (2 * step);
      worst_fd = std::max(worst_fd, std::abs(fd - ball_density(e, mu)));
    }
    t.check(ball_density(e, 0) == 1 - e, "density at 0, E=" + std::to_string(e));
  }
  t.check(worst_trip < 1e-10, "round trip");
  t.check(worst_fd < 1e-6, "finite difference");
  for (const double e : {0.00001, 0.1, 0.9}) {
    t.check(density_curve(e, 6, 0.01).front().density == 1 - e,
            "curve intercept E=" + std::to_string(e));
  }
  for (const Rational q : {Rational(2), Rational(3, 2)}) {
    for (int b = 0; b <= 6; ++b) {
      for (int h = 0; h <= 10; ++h) {
        t.check(most_likely_c(b, h, q) == argmax_direct(b, h, q),
                "crossing b=" + std::to_string(b) + " h=" + std::to_string(h));
      }
    }
  }
  std::ostringstream s;
  s << "round trip " << worst_trip << ", fd " << worst_fd;
  return t.result(s.str());
}

Outcome monte_carlo()
{
  Tally t;
  const CoinConfig coin(Rational(2));
  ChainRng rng(20240601);
  const auto hist = simulate(JugglingState::ground(2), coin, 1000000, 1000, rng);
  const double tv = tv_distance(hist, coin, 10);
  t.check(tv < 0.01, "TV " + std::to_string(tv));

  EmpiricalConfig config;
  config.balls = 64;
  config.empty_hand = 0.1;
  config.grid_size = 64;
  config.mu_max = 3.0;
  config.steps = 1000000;
  config.burnin = 100000;
  ChainRng density_rng(1234567);
  double worst = 0;
  for (const auto& row : empirical_density(config, density_rng)) {
    worst = std::max(worst, row.deviation);
  }
  t.check(worst < 0.05, "density deviation " + std::to_string(worst));
  std::ostringstream s;
  s << "TV " << tv << ", density deviation " << worst;
  return t.result(s.str());
}

}  // namespace

int main()
{
  run(1, "pattern counts", 10, pattern_counts);
  run(2, "backward distribution", 10, backward_example);
  run(3, "exact stationarity", 30, exact_stationarity);
  run(4, "matrix pivot fractions", 60, pivot_fractions);
  run(5, "column prepend transitions", 60, column_prepend);
  run(6, "flag distribution", 10, flag_example);
  run(7, "flag stationarity", 120, flag_stationarity);
  run(8, "hatted composition", 60, hatted_composition);
  run(9, "series identities", 30, series_identities);
  run(10, "asymptotics", 30, asymptotics);
  run(11, "Monte-Carlo consistency", 300, monte_carlo);
  std::printf("%d of 11 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}

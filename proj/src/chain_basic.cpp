//
// chain_basic.cpp
//

#include "juggle/chain_basic.hpp"

#include "juggle/series.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

namespace juggle {

JugglingState backward_outcome(const JugglingState& s, int flip)
{
  const int b = s.balls();
  if (flip < 1) {
    throw std::invalid_argument("flip index is 1-based");
  }
  if (flip > b) {
    return s.with_leading_empty();
  }
  const auto moved = static_cast<size_t>(b - flip);
  std::vector<int> p;
  p.reserve(static_cast<size_t>(b));
  p.push_back(0);
  for (size_t k = 0; k < s.positions().size(); ++k) {
    if (k != moved) {
      p.push_back(s.positions()[k] + 1);
    }
  }
  return JugglingState(std::move(p));
}

StepResult backward_step(const JugglingState& s, const CoinConfig& coin,
                         ChainRng& rng)
{
  const int b = s.balls();
  for (int flip = 1; flip <= b; ++flip) {
    if (!rng.heads(coin)) {
      return {backward_outcome(s, flip), flip};
    }
  }
  return {s.with_leading_empty(), b};
}

TransitionDist backward_dist(const JugglingState& s, const CoinConfig& coin)
{
  TransitionDist dist;
  const Rational heads = coin.heads();
  const Rational tails = coin.tails();
  Rational all_heads = 1;
  for (int flip = 1; flip <= s.balls(); ++flip) {
    dist.add(backward_outcome(s, flip), all_heads * tails);
    all_heads *= heads;
  }
  dist.add(s.with_leading_empty(), all_heads);
  return dist;
}

Rational stationary_weight(const JugglingState& s, const CoinConfig& coin)
{
  return s_n(s.balls(), coin.q()) * power(coin.q(), -inversions(s));
}

StationarityCheck verify_stationarity(const JugglingState& s,
                                      const CoinConfig& coin)
{
  StationarityCheck check;
  check.weight = stationary_weight(s, coin);

  auto inflow_from = [&](const JugglingState& succ) {
    return stationary_weight(succ, coin) *
           backward_dist(succ, coin).probability(s);
  };

  if (!s.starts_with_ball()) {
    // b = 0 lands here too: the empty state is its own only successor.
    check.inflow = inflow_from(throw_state(s, 0));
    check.balanced = check.inflow == check.weight;
    return check;
  }

  // Throws landing strictly between consecutive balls are finite in number.
  const auto& p = s.positions();
  const int b = s.balls();
  for (int j = 0; j + 1 < b; ++j) {
    for (int t = p[static_cast<size_t>(j)] + 1; t < p[static_cast<size_t>(j) + 1];
         ++t) {
      check.inflow += inflow_from(throw_state(s, t));
    }
  }

  // Throws past the last ball: a few explicit terms, then the tail. Each
  // further beat adds one inversion and leaves the transition probability
  // unchanged, so consecutive terms have ratio exactly 1/q; this ratio is
  // measured rather than assumed.
  constexpr int kExplicit = 3;
  const int first = p.back() + 1;
  for (int t = first; t < first + kExplicit; ++t) {
    check.inflow += inflow_from(throw_state(s, t));
  }
  const Rational lead = inflow_from(throw_state(s, first + kExplicit));
  const Rational next = inflow_from(throw_state(s, first + kExplicit + 1));
  const Rational ratio = lead == 0 ? Rational(0) : next / lead;
  if (ratio != coin.heads()) {
    check.balanced = false;
    return check;
  }
  check.inflow += lead / (1 - ratio);
  check.balanced = check.inflow == check.weight;
  return check;
}

Histogram simulate(const JugglingState& s0, const CoinConfig& coin,
                   std::uint64_t steps, std::uint64_t burnin, ChainRng& rng)
{
  if (burnin > steps) {
    throw std::invalid_argument("burn-in exceeds step count");
  }
  Histogram hist;
  JugglingState s = s0;
  for (std::uint64_t k = 0; k < steps; ++k) {
    s = backward_step(s, coin, rng).state;
    if (k >= burnin) {
      hist.record(s);
    }
  }
  return hist;
}

double tv_distance(const Histogram& hist, const CoinConfig& coin,
                   int max_inversions)
{
  if (hist.samples == 0) {
    throw std::invalid_argument("empty histogram");
  }
  int balls = -1;
  std::set<JugglingState> support;
  for (const auto& [s, n] : hist.counts) {
    support.insert(s);
    balls = s.balls();
  }
  for (const auto& s : states_up_to_inversions(balls, max_inversions)) {
    support.insert(s);
  }
  Rational covered = 0;
  double diff = 0;
  const double total = static_cast<double>(hist.samples);
  for (const auto& s : support) {
    const Rational w = stationary_weight(s, coin);
    covered += w;
    const auto it = hist.counts.find(s);
    const double emp = it == hist.counts.end() ? 0.0 : static_cast<double>(it->second) / total;
    diff += std::abs(emp - to_double(w));
  }
  return 0.5 * (diff + to_double(1 - covered));
}

}  // namespace juggle

//
// chain_basic.hpp
//
// The backward coin-flip chain on juggling states.
//
// From a state with b balls, flip the coin up to b times or until tails.
// All heads puts a '-' in front of the state. Tails on flip i moves the
// i-th last ball to the front, leaving a '-' in its place. The resulting
// states are exactly the digraph predecessors of the starting state.
//

#pragma once

#include "juggle/distribution.hpp"
#include "juggle/rng.hpp"
#include "juggle/state.hpp"

#include <cstdint>

namespace juggle {

using TransitionDist = Distribution<JugglingState>;

struct StepResult {
  JugglingState state;
  int flips = 0;
};

StepResult backward_step(const JugglingState& s, const CoinConfig& coin,
                         ChainRng& rng);

// The state reached when tails first appears on flip `flip` (1-based), or
// the all-heads outcome when flip > balls.
JugglingState backward_outcome(const JugglingState& s, int flip);

// Exact distribution of backward_step: b + 1 outcomes.
TransitionDist backward_dist(const JugglingState& s, const CoinConfig& coin);

// s_b(q) q^{-l(s)}
Rational stationary_weight(const JugglingState& s, const CoinConfig& coin);

struct StationarityCheck {
  Rational inflow;  // sum over successors t of pi(t) P(t -> s)
  Rational weight;  // pi(s)
  bool balanced = false;
};

// Exact balance check at `s`. Successors reached by throws past the last
// ball form a geometric tail that is summed in closed form.
StationarityCheck verify_stationarity(const JugglingState& s,
                                      const CoinConfig& coin);

// ---------------------------------------------------------------------------
// Monte-Carlo
// ---------------------------------------------------------------------------

using Histogram = StateHistogram<JugglingState>;

// Runs `steps` backward steps from s0 and records the states visited after
// the first `burnin` steps.
Histogram simulate(const JugglingState& s0, const CoinConfig& coin,
                   std::uint64_t steps, std::uint64_t burnin, ChainRng& rng);

// Total variation distance between the histogram and the stationary law.
// States with l <= max_inversions are compared individually; the remaining
// stationary mass is 1 minus the enumerated part.
double tv_distance(const Histogram& hist, const CoinConfig& coin,
                   int max_inversions);

}  // namespace juggle

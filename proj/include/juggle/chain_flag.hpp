//
// chain_flag.hpp
//
// The flag juggling digraph and its backward chain.
//
// Forward: a state starting with '-' loses it. Otherwise the leading label
// is picked up and carried East over the remaining cells. At a '-' it may be
// dropped (ending the walk); at a strictly larger label it may be swapped for
// that label. The throw set records where labels were dropped.
//
// Backward: hold a '-' and point at the rightmost label. At each label
// smaller than what is held ('-' counting as infinity), flip the coin; tails
// swaps the held item with that label. Falling off the left end puts the
// held item in front. Repeated labels are allowed; equal labels never stop
// the leftward walk.
//

#pragma once

#include "juggle/distribution.hpp"
#include "juggle/rng.hpp"
#include "juggle/state.hpp"

#include <utility>
#include <vector>

namespace juggle {

using FlagDist = Distribution<FlagState>;

// The label multiset as runs of equal labels, in increasing label order.
struct LabelGroups {
  std::vector<std::pair<int, int>> groups;  // (label, multiplicity)

  static LabelGroups from_labels(std::vector<int> labels);
  int balls() const;
};

struct FlagTransition {
  FlagState target;
  std::vector<int> throw_set;
};

// Forward edges with every drop at a position <= max_drop (positions counted
// after the leading cell is removed).
std::vector<FlagTransition> flag_forward_edges(const FlagState& s,
                                               int max_drop);

struct FlagWalk {
  std::vector<FlagTransition> edges;
  // For each way of carrying a label past every stored cell, the successor
  // whose final drop is at max_drop + 1. Successors with later drops differ
  // from it only by that position and carry one more inversion per beat.
  std::vector<FlagState> first_omitted;
};

// Requires max_drop >= s.size().
FlagWalk flag_forward_walk(const FlagState& s, int max_drop);

FlagState flag_backward_step(const FlagState& s, const CoinConfig& coin,
                             ChainRng& rng);

// Every coin sequence enumerated exactly, equal outcomes merged.
FlagDist flag_backward_dist(const FlagState& s, const CoinConfig& coin);

// prod over groups of s_{group size}(q).
Rational group_prefactor(const LabelGroups& groups, const Rational& q);

// group_prefactor(labels of s) * q^{-l(s)}
Rational flag_stationary_weight(const FlagState& s, const CoinConfig& coin);

struct FlagStationarityCheck {
  Rational partial;     // inflow from successors with drops <= drop_cap
  Rational tail_bound;  // upper bound on the inflow from the rest
  Rational weight;      // pi(s)
  bool pass = false;    // partial <= weight <= partial + tail_bound
};

// Throws CapTooSmall when tail_bound >= weight * tolerance.
FlagStationarityCheck verify_flag_stationarity(
    const FlagState& s, const CoinConfig& coin, int drop_cap,
    const Rational& tolerance = Rational(1, 1024));

using FlagHistogram = StateHistogram<FlagState>;

FlagHistogram flag_simulate(const FlagState& s0, const CoinConfig& coin,
                            std::uint64_t steps, std::uint64_t burnin,
                            ChainRng& rng);

// As tv_distance, over flag states with the labels of the histogram.
double flag_tv_distance(const FlagHistogram& hist, const CoinConfig& coin,
                        int max_inversions);

}  // namespace juggle

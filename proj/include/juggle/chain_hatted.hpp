//
// chain_hatted.hpp
//
// Flag states refined by a hat marking the item currently in hand. The
// backward flag step is split into single moves that each touch only the
// hatted cell and its left neighbour:
//
//   hat at 0         remove the hat and trim trailing '-'
//   neighbour is a label smaller than the hatted item ('-' = infinity)
//                    tails: the hat moves one cell left
//                    heads: the two cells swap, the hat stays on its item
//   otherwise        the two cells swap
//
// An unhatted state steps to itself with a '-' appended after its last
// label and hatted. Composing moves until the hat is gone reproduces one
// backward flag step.
//

#pragma once

#include "juggle/chain_flag.hpp"

#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace juggle {

class HattedState {
 public:
  HattedState(std::vector<int> cells, int hat);

  // Space-separated tokens, exactly one ending in '^' ("3 - 2 1 -^").
  static HattedState parse(std::string_view text);

  const std::vector<int>& cells() const { return _cells; }
  int hat() const { return _hat; }
  int hatted_item() const { return _cells[static_cast<size_t>(_hat)]; }
  int cell(int i) const;  // kEmpty beyond the end

  FlagState unhatted() const { return FlagState(_cells); }

  std::string to_string() const;

  auto operator<=>(const HattedState&) const = default;
  bool operator==(const HattedState&) const = default;

 private:
  std::vector<int> _cells;  // trailing '-' trimmed past the hat
  int _hat;
};

using MixedState = std::variant<FlagState, HattedState>;
using MixedDist = Distribution<MixedState>;

// A hatted state if any token carries '^', a flag state otherwise.
MixedState parse_mixed(std::string_view text);
std::string to_string(const MixedState& s);

// The entry state reached from an unhatted state.
HattedState enter_hat(const FlagState& s);

// One move. Hatted states have one or two outcomes.
MixedDist hatted_backward_dist(const MixedState& s, const CoinConfig& coin);
MixedState hatted_backward_step(const MixedState& s, const CoinConfig& coin,
                                ChainRng& rng);

// Moves from `s` until an unhatted state is reached, enumerated exactly.
// Throws NonTermination if more than `max_moves` moves are needed.
FlagDist composed_backward_dist(const FlagState& s, const CoinConfig& coin,
                                int max_moves = 10000);

// Forward moves, the reverse of the backward ones. From an unhatted state,
// the first cell is hatted. From a hatted state, the hatted item either
// swaps with its right neighbour or, when the neighbour is larger, passes
// the hat to it. A hatted trailing '-' instead leaves the hatted layer.
std::vector<MixedState> hatted_forward_edges(const MixedState& s);

// Whether t is reachable from s through hatted states only, with every
// intermediate word no longer than max_drop + 2 cells.
bool path_equivalence_check(const FlagState& s, const FlagState& t,
                            int max_drop);

}  // namespace juggle

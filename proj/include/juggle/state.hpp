//
// state.hpp
//
// Juggling states, flag (labeled) juggling states, the forward juggling
// digraph and siteswap notation.
//
// A juggling state with b balls is a b-element subset of the naturals: the
// beats at which the airborne balls will land. In text it is written as a
// word over {x, -} with the infinitely many trailing '-' omitted, e.g. the
// state {1,2,5} is "-xx--x".
//

#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace juggle {

class JugglingState {
 public:
  JugglingState() = default;

  // `positions` must be strictly increasing and nonnegative.
  explicit JugglingState(std::vector<int> positions);

  static JugglingState ground(int balls);

  // Accepts 'x'/'X'/'1' or the UTF-8 multiplication sign for a ball and
  // '-'/'0'/'.' or the UTF-8 minus sign for an empty beat.
  static JugglingState parse(std::string_view text);

  int balls() const { return static_cast<int>(_positions.size()); }
  const std::vector<int>& positions() const { return _positions; }
  bool occupied(int pos) const;
  bool starts_with_ball() const { return occupied(0); }

  // Position of the last ball, or -1 for the empty state.
  int last() const { return _positions.empty() ? -1 : _positions.back(); }

  // Every position moved by `delta`; the result must stay nonnegative.
  JugglingState shifted(int delta) const;

  // The state with one '-' attached to the front.
  JugglingState with_leading_empty() const { return shifted(1); }

  std::string to_string() const;

  auto operator<=>(const JugglingState&) const = default;
  bool operator==(const JugglingState&) const = default;

 private:
  std::vector<int> _positions;
};

// Number of (-, x) pairs with the '-' left of the 'x'.
std::int64_t inversions(const JugglingState& s);

// Target of the edge labeled `t` out of `s`. Throws IllegalThrow.
JugglingState throw_state(const JugglingState& s, int t);

// The throw on the edge from -> to, or -1 if there is no such edge.
int throw_between(const JugglingState& from, const JugglingState& to);

// All edges (t, target) out of `s` with t <= max_throw, ascending in t.
std::vector<std::pair<int, JugglingState>> forward_edges(
    const JugglingState& s, int max_throw);

// All b-ball states with at most `max_inversions` inversions, ordered by
// inversion count and then lexicographically.
std::vector<JugglingState> states_up_to_inversions(int balls,
                                                   int max_inversions);

// All b-ball states with every ball in [0, window).
std::vector<JugglingState> states_in_window(int balls, int window);

// ---------------------------------------------------------------------------
// Flag states
// ---------------------------------------------------------------------------

// A juggling state whose balls carry positive integer labels from a fixed
// multiset. Cells hold 0 for an empty beat. Trailing empty cells are never
// stored.
class FlagState {
 public:
  static constexpr int kEmpty = 0;

  FlagState() = default;
  explicit FlagState(std::vector<int> cells);

  // Without whitespace every character is one cell ("--31-2"). With
  // whitespace, tokens are split into '-' cells and decimal labels
  // ("- - 3 1 - 12").
  static FlagState parse(std::string_view text);

  // Ground state 1 2 ... b.
  static FlagState ground(int balls);

  const std::vector<int>& cells() const { return _cells; }
  int size() const { return static_cast<int>(_cells.size()); }
  int cell(int i) const;  // kEmpty beyond the end
  int balls() const;

  // Sorted multiset of labels.
  std::vector<int> labels() const;

  JugglingState erase_labels() const;
  FlagState with_leading_empty() const;

  std::string to_string() const;

  auto operator<=>(const FlagState&) const = default;
  bool operator==(const FlagState&) const = default;

 private:
  std::vector<int> _cells;
};

// (-, label) pairs with the '-' first, plus label pairs i ... j with i > j.
std::int64_t inversions(const FlagState& s);

// Inversion count of an arbitrary cell sequence, '-' counting as infinity.
std::int64_t cell_inversions(const std::vector<int>& cells);

// All flag states over the label multiset `labels` with at most
// `max_inversions` inversions.
std::vector<FlagState> flag_states_up_to_inversions(std::vector<int> labels,
                                                    int max_inversions);

// Renders a cell: "-" or the decimal label.
std::string cell_to_string(int cell);

// ---------------------------------------------------------------------------
// Siteswaps
// ---------------------------------------------------------------------------

struct Siteswap {
  std::vector<int> throws;

  std::string to_string() const;
};

struct SiteswapInfo {
  int balls = 0;
  // State before each throw; states[i] --throws[i]--> states[i+1 mod n].
  std::vector<JugglingState> states;
};

// Digits 0-9 and letters a-z (10-35). Throws ParseError.
Siteswap parse_siteswap(std::string_view text);

// Throws InvalidPattern when the throws collide or the average is not an
// integer.
SiteswapInfo validate_siteswap(const Siteswap& sw);

// Number of throw sequences of length n with at most b balls, counted by
// brute force. Throws ResourceLimit when (n*b+1)^n exceeds `budget`.
std::uint64_t count_patterns(int n, int balls,
                             std::uint64_t budget = 100'000'000);

// The (b, n) window digraph keeps states inside [0, n) and throws <= n.
// Reversing the length-n word and swapping x with - maps it onto the
// (n - b, n) digraph with all arrows reversed.
struct WindowDuality {
  std::vector<std::pair<JugglingState, JugglingState>> mapping;
  bool edges_reversed = false;
};

JugglingState window_dual(const JugglingState& s, int window);

WindowDuality window_dual_iso(int balls, int window);

}  // namespace juggle

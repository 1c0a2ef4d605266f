//
// chain_flag.cpp
//

#include "juggle/chain_flag.hpp"

#include "juggle/errors.hpp"
#include "juggle/series.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

namespace juggle {

namespace {

// '-' is larger than every label.
int rank_of(int cell)
{
  return cell == FlagState::kEmpty ? INT_MAX : cell;
}

std::vector<int> place(std::vector<int> cells, int pos, int label)
{
  if (static_cast<int>(cells.size()) <= pos) {
    cells.resize(static_cast<size_t>(pos) + 1, FlagState::kEmpty);
  }
  cells[static_cast<size_t>(pos)] = label;
  return cells;
}

class ForwardWalker
{
 public:
  ForwardWalker(int max_drop, bool track_escapes)
      : _max_drop(max_drop), _track_escapes(track_escapes)
  {
  }

  void walk(const std::vector<int>& rest, int carried, int pos,
            std::vector<int>& drops)
  {
    if (pos >= static_cast<int>(rest.size())) {
      for (int d = pos; d <= _max_drop; ++d) {
        drops.push_back(d);
        emit(place(rest, d, carried), drops);
        drops.pop_back();
      }
      if (_track_escapes) {
        _result.first_omitted.emplace_back(
            place(rest, std::max(pos, _max_drop + 1), carried));
      }
      return;
    }
    if (pos > _max_drop) {
      return;
    }
    const int c = rest[static_cast<size_t>(pos)];
    drops.push_back(pos);
    if (c == FlagState::kEmpty) {
      emit(place(rest, pos, carried), drops);
    } else if (c > carried) {
      walk(place(rest, pos, carried), c, pos + 1, drops);
    }
    drops.pop_back();
    walk(rest, carried, pos + 1, drops);
  }

  void emit(std::vector<int> cells, const std::vector<int>& drops)
  {
    FlagState target(std::move(cells));
    if (_seen.insert(target).second) {
      _result.edges.push_back({std::move(target), drops});
    }
  }

  FlagWalk take() { return std::move(_result); }

 private:
  int _max_drop;
  bool _track_escapes;
  std::set<FlagState> _seen;
  FlagWalk _result;
};

FlagWalk walk_from(const FlagState& s, int max_drop, bool track_escapes)
{
  if (s.size() == 0) {
    return {{{s, {}}}, {}};
  }
  if (s.cell(0) == FlagState::kEmpty) {
    std::vector<int> rest(s.cells().begin() + 1, s.cells().end());
    return {{{FlagState(std::move(rest)), {}}}, {}};
  }
  ForwardWalker walker(max_drop, track_escapes);
  std::vector<int> rest(s.cells().begin() + 1, s.cells().end());
  std::vector<int> drops;
  walker.walk(rest, s.cell(0), 0, drops);
  return walker.take();
}

// Index of the nearest label at or left of `from` that is smaller than
// `held`, or -1.
int next_stop(const std::vector<int>& cells, int held, int from)
{
  for (int k = from; k >= 0; --k) {
    const int c = cells[static_cast<size_t>(k)];
    if (c != FlagState::kEmpty && c < rank_of(held)) {
      return k;
    }
  }
  return -1;
}

FlagState fall_off(const std::vector<int>& cells, int held)
{
  std::vector<int> out;
  out.reserve(cells.size() + 1);
  out.push_back(held);
  out.insert(out.end(), cells.begin(), cells.end());
  return FlagState(std::move(out));
}

void backward_tree(std::vector<int>& cells, int held, int from,
                   const Rational& prob, const CoinConfig& coin,
                   FlagDist& dist)
{
  const int k = next_stop(cells, held, from);
  if (k < 0) {
    dist.add(fall_off(cells, held), prob);
    return;
  }
  const int label = cells[static_cast<size_t>(k)];
  cells[static_cast<size_t>(k)] = held;
  backward_tree(cells, label, k - 1, prob * coin.tails(), coin, dist);
  cells[static_cast<size_t>(k)] = label;
  backward_tree(cells, held, k - 1, prob * coin.heads(), coin, dist);
}

}  // namespace

LabelGroups LabelGroups::from_labels(std::vector<int> labels)
{
  std::sort(labels.begin(), labels.end());
  LabelGroups g;
  for (int label : labels) {
    if (label <= 0) {
      throw std::invalid_argument("labels must be positive");
    }
    if (!g.groups.empty() && g.groups.back().first == label) {
      ++g.groups.back().second;
    } else {
      g.groups.emplace_back(label, 1);
    }
  }
  return g;
}

int LabelGroups::balls() const
{
  int b = 0;
  for (const auto& [label, count] : groups) {
    b += count;
  }
  return b;
}

std::vector<FlagTransition> flag_forward_edges(const FlagState& s,
                                               int max_drop)
{
  return walk_from(s, max_drop, false).edges;
}

FlagWalk flag_forward_walk(const FlagState& s, int max_drop)
{
  if (max_drop < s.size()) {
    throw std::invalid_argument("drop cap must be at least the state length");
  }
  return walk_from(s, max_drop, true);
}

FlagState flag_backward_step(const FlagState& s, const CoinConfig& coin,
                             ChainRng& rng)
{
  std::vector<int> cells = s.cells();
  int held = FlagState::kEmpty;
  int from = static_cast<int>(cells.size()) - 1;
  while (true) {
    const int k = next_stop(cells, held, from);
    if (k < 0) {
      return fall_off(cells, held);
    }
    if (!rng.heads(coin)) {
      std::swap(held, cells[static_cast<size_t>(k)]);
    }
    from = k - 1;
  }
}

FlagDist flag_backward_dist(const FlagState& s, const CoinConfig& coin)
{
  FlagDist dist;
  std::vector<int> cells = s.cells();
  backward_tree(cells, FlagState::kEmpty, static_cast<int>(cells.size()) - 1,
                Rational(1), coin, dist);
  return dist;
}

Rational group_prefactor(const LabelGroups& groups, const Rational& q)
{
  Rational f = 1;
  for (const auto& [label, count] : groups.groups) {
    f *= s_n(count, q);
  }
  return f;
}

Rational flag_stationary_weight(const FlagState& s, const CoinConfig& coin)
{
  return group_prefactor(LabelGroups::from_labels(s.labels()), coin.q()) *
         power(coin.q(), -inversions(s));
}

FlagStationarityCheck verify_flag_stationarity(const FlagState& s,
                                               const CoinConfig& coin,
                                               int drop_cap,
                                               const Rational& tolerance)
{
  FlagStationarityCheck check;
  check.weight = flag_stationary_weight(s, coin);
  const FlagWalk walk = flag_forward_walk(s, drop_cap);
  for (const auto& edge : walk.edges) {
    check.partial += flag_stationary_weight(edge.target, coin) *
                     flag_backward_dist(edge.target, coin).probability(s);
  }
  for (const auto& y : walk.first_omitted) {
    check.tail_bound += flag_stationary_weight(y, coin) / coin.tails();
  }
  if (check.tail_bound >= check.weight * tolerance) {
    throw CapTooSmall("drop cap " + std::to_string(drop_cap) +
                      " leaves a tail bound of " +
                      std::to_string(to_double(check.tail_bound / check.weight)) +
                      " relative to the weight of " + s.to_string());
  }
  check.pass = check.partial <= check.weight &&
               check.weight <= check.partial + check.tail_bound;
  return check;
}

FlagHistogram flag_simulate(const FlagState& s0, const CoinConfig& coin,
                            std::uint64_t steps, std::uint64_t burnin,
                            ChainRng& rng)
{
  if (burnin > steps) {
    throw std::invalid_argument("burn-in exceeds step count");
  }
  FlagHistogram hist;
  FlagState s = s0;
  for (std::uint64_t k = 0; k < steps; ++k) {
    s = flag_backward_step(s, coin, rng);
    if (k >= burnin) {
      hist.record(s);
    }
  }
  return hist;
}

double flag_tv_distance(const FlagHistogram& hist, const CoinConfig& coin,
                        int max_inversions)
{
  if (hist.samples == 0) {
    throw std::invalid_argument("empty histogram");
  }
  std::set<FlagState> support;
  for (const auto& [s, n] : hist.counts) {
    support.insert(s);
  }
  for (auto& s : flag_states_up_to_inversions(hist.counts.begin()->first.labels(),
                                              max_inversions)) {
    support.insert(std::move(s));
  }
  Rational covered = 0;
  double diff = 0;
  const double total = static_cast<double>(hist.samples);
  for (const auto& s : support) {
    const Rational w = flag_stationary_weight(s, coin);
    covered += w;
    const auto it = hist.counts.find(s);
    const double emp =
        it == hist.counts.end() ? 0.0 : static_cast<double>(it->second) / total;
    diff += std::abs(emp - to_double(w));
  }
  return 0.5 * (diff + to_double(1 - covered));
}

}  // namespace juggle

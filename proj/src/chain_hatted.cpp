//
// chain_hatted.cpp
//

#include "juggle/chain_hatted.hpp"

#include "juggle/errors.hpp"

#include <algorithm>
#include <cctype>
#include <climits>
#include <deque>
#include <set>

namespace juggle {

namespace {

constexpr int kEmpty = FlagState::kEmpty;

int rank_of(int cell)
{
  return cell == kEmpty ? INT_MAX : cell;
}

bool is_space(char c)
{
  return std::isspace(static_cast<unsigned char>(c)) != 0;
}

int parse_cell(std::string_view token)
{
  if (token == "-" || token == "\xE2\x88\x92") {
    return kEmpty;
  }
  if (token.empty() || !std::all_of(token.begin(), token.end(), [](char c) {
        return std::isdigit(static_cast<unsigned char>(c)) != 0;
      })) {
    throw ParseError("bad cell '" + std::string(token) + "'");
  }
  const int value = std::stoi(std::string(token));
  if (value == 0) {
    throw ParseError("flag labels must be positive");
  }
  return value;
}

// Tokens split on whitespace, or one per cell when there is none. A '^'
// stays attached to the token it follows.
std::vector<std::string_view> tokenize(std::string_view text)
{
  std::vector<std::string_view> tokens;
  const bool spaced = std::any_of(text.begin(), text.end(), is_space);
  size_t i = 0;
  while (i < text.size()) {
    if (is_space(text[i])) {
      ++i;
      continue;
    }
    size_t j = i + 1;
    if (spaced) {
      while (j < text.size() && !is_space(text[j])) {
        ++j;
      }
    } else {
      if (text.substr(i, 3) == "\xE2\x88\x92") {
        j = i + 3;
      }
      if (j < text.size() && text[j] == '^') {
        ++j;
      }
    }
    tokens.push_back(text.substr(i, j - i));
    i = j;
  }
  return tokens;
}

// One backward move from a hatted state.
MixedDist hatted_move(const HattedState& h, const CoinConfig& coin)
{
  MixedDist dist;
  const int i = h.hat();
  if (i == 0) {
    dist.add(h.unhatted(), Rational(1));
    return dist;
  }
  std::vector<int> swapped = h.cells();
  std::swap(swapped[static_cast<size_t>(i) - 1], swapped[static_cast<size_t>(i)]);
  const int left = h.cell(i - 1);
  if (left != kEmpty && left < rank_of(h.hatted_item())) {
    dist.add(HattedState(h.cells(), i - 1), coin.tails());
    dist.add(HattedState(std::move(swapped), i - 1), coin.heads());
  } else {
    dist.add(HattedState(std::move(swapped), i - 1), Rational(1));
  }
  return dist;
}

}  // namespace

HattedState::HattedState(std::vector<int> cells, int hat)
    : _cells(std::move(cells)), _hat(hat)
{
  if (_hat < 0) {
    throw std::invalid_argument("hat position must be non-negative");
  }
  for (int c : _cells) {
    if (c < 0) {
      throw std::invalid_argument("negative label");
    }
  }
  if (static_cast<int>(_cells.size()) <= _hat) {
    _cells.resize(static_cast<size_t>(_hat) + 1, kEmpty);
  }
  while (static_cast<int>(_cells.size()) > _hat + 1 && _cells.back() == kEmpty) {
    _cells.pop_back();
  }
}

HattedState HattedState::parse(std::string_view text)
{
  std::vector<int> cells;
  int hat = -1;
  for (std::string_view token : tokenize(text)) {
    if (token.back() == '^') {
      if (hat >= 0) {
        throw ParseError("more than one hat in '" + std::string(text) + "'");
      }
      token.remove_suffix(1);
      hat = static_cast<int>(cells.size());
    }
    cells.push_back(parse_cell(token));
  }
  if (hat < 0) {
    throw ParseError("no hat in '" + std::string(text) + "'");
  }
  return HattedState(std::move(cells), hat);
}

int HattedState::cell(int i) const
{
  return i < static_cast<int>(_cells.size()) ? _cells[static_cast<size_t>(i)]
                                             : kEmpty;
}

std::string HattedState::to_string() const
{
  std::string out;
  for (size_t k = 0; k < _cells.size(); ++k) {
    if (k > 0) {
      out += ' ';
    }
    out += cell_to_string(_cells[k]);
    if (static_cast<int>(k) == _hat) {
      out += '^';
    }
  }
  return out;
}

MixedState parse_mixed(std::string_view text)
{
  if (text.find('^') != std::string_view::npos) {
    return HattedState::parse(text);
  }
  return FlagState::parse(text);
}

std::string to_string(const MixedState& s)
{
  return std::visit([](const auto& v) { return v.to_string(); }, s);
}

HattedState enter_hat(const FlagState& s)
{
  return HattedState(s.cells(), s.size());
}

MixedDist hatted_backward_dist(const MixedState& s, const CoinConfig& coin)
{
  if (const auto* f = std::get_if<FlagState>(&s)) {
    MixedDist dist;
    dist.add(enter_hat(*f), Rational(1));
    return dist;
  }
  return hatted_move(std::get<HattedState>(s), coin);
}

MixedState hatted_backward_step(const MixedState& s, const CoinConfig& coin,
                                ChainRng& rng)
{
  if (const auto* f = std::get_if<FlagState>(&s)) {
    return enter_hat(*f);
  }
  const auto& h = std::get<HattedState>(s);
  const int i = h.hat();
  if (i == 0) {
    return h.unhatted();
  }
  const int left = h.cell(i - 1);
  const bool coin_needed = left != kEmpty && left < rank_of(h.hatted_item());
  if (coin_needed && !rng.heads(coin)) {
    return HattedState(h.cells(), i - 1);
  }
  std::vector<int> swapped = h.cells();
  std::swap(swapped[static_cast<size_t>(i) - 1], swapped[static_cast<size_t>(i)]);
  return HattedState(std::move(swapped), i - 1);
}

FlagDist composed_backward_dist(const FlagState& s, const CoinConfig& coin,
                                int max_moves)
{
  FlagDist result;
  // Every path from the entry state has the same length (the hat moves one
  // cell per move), so a frontier sweep is enough.
  MixedDist frontier = hatted_backward_dist(s, coin);
  for (int moves = 1; frontier.size() > 0; ++moves) {
    if (moves > max_moves) {
      throw NonTermination("hatted walk from " + s.to_string() +
                           " exceeded " + std::to_string(max_moves) + " moves");
    }
    MixedDist next;
    for (const auto& [state, p] : frontier) {
      if (const auto* f = std::get_if<FlagState>(&state)) {
        result.add(*f, p);
        continue;
      }
      for (const auto& [succ, q] : hatted_backward_dist(state, coin)) {
        next.add(succ, p * q);
      }
    }
    frontier = std::move(next);
  }
  return result;
}

std::vector<MixedState> hatted_forward_edges(const MixedState& s)
{
  std::vector<MixedState> out;
  if (const auto* f = std::get_if<FlagState>(&s)) {
    out.emplace_back(HattedState(f->cells(), 0));
    return out;
  }
  const auto& h = std::get<HattedState>(s);
  const int i = h.hat();
  const int item = h.hatted_item();
  const auto& cells = h.cells();
  const bool labels_follow =
      std::any_of(cells.begin() + i + 1, cells.end(),
                  [](int c) { return c != kEmpty; });
  if (item == kEmpty && !labels_follow) {
    out.emplace_back(h.unhatted());
    return out;
  }
  std::vector<int> swapped = cells;
  if (static_cast<int>(swapped.size()) <= i + 1) {
    swapped.push_back(kEmpty);
  }
  std::swap(swapped[static_cast<size_t>(i)], swapped[static_cast<size_t>(i) + 1]);
  out.emplace_back(HattedState(std::move(swapped), i + 1));
  if (item != kEmpty && rank_of(h.cell(i + 1)) > item) {
    out.emplace_back(HattedState(cells, i + 1));
  }
  return out;
}

bool path_equivalence_check(const FlagState& s, const FlagState& t,
                            int max_drop)
{
  const size_t max_len = static_cast<size_t>(max_drop) + 2;
  std::set<HattedState> seen;
  std::deque<HattedState> queue;
  queue.emplace_back(s.cells(), 0);
  seen.insert(queue.front());
  while (!queue.empty()) {
    const HattedState h = std::move(queue.front());
    queue.pop_front();
    for (auto& next : hatted_forward_edges(h)) {
      if (const auto* f = std::get_if<FlagState>(&next)) {
        if (*f == t) {
          return true;
        }
        continue;
      }
      auto& nh = std::get<HattedState>(next);
      if (nh.cells().size() <= max_len && seen.insert(nh).second) {
        queue.push_back(std::move(nh));
      }
    }
  }
  return false;
}

}  // namespace juggle

//
// state.cpp
//

#include "juggle/state.hpp"

#include "juggle/errors.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>
#include <stdexcept>

namespace juggle {

namespace {

// UTF-8 encodings of the typeset symbols.
constexpr std::string_view kTimes = "\xC3\x97";         // U+00D7
constexpr std::string_view kMinus = "\xE2\x88\x92";     // U+2212

bool is_space(char ch)
{
  return std::isspace(static_cast<unsigned char>(ch)) != 0;
}

}  // namespace

// ---------------------------------------------------------------------------
// JugglingState
// ---------------------------------------------------------------------------

JugglingState::JugglingState(std::vector<int> positions)
    : _positions(std::move(positions))
{
  for (size_t i = 0; i < _positions.size(); ++i) {
    if (_positions[i] < 0 || (i > 0 && _positions[i] <= _positions[i - 1])) {
      throw std::invalid_argument(
          "juggling state positions must be strictly increasing naturals");
    }
  }
}

JugglingState JugglingState::ground(int balls)
{
  std::vector<int> p(static_cast<size_t>(balls));
  for (int i = 0; i < balls; ++i) {
    p[static_cast<size_t>(i)] = i;
  }
  return JugglingState(std::move(p));
}

JugglingState JugglingState::parse(std::string_view text)
{
  std::vector<int> p;
  int pos = 0;
  size_t i = 0;
  while (i < text.size()) {
    if (text.substr(i, kTimes.size()) == kTimes) {
      p.push_back(pos++);
      i += kTimes.size();
      continue;
    }
    if (text.substr(i, kMinus.size()) == kMinus) {
      ++pos;
      i += kMinus.size();
      continue;
    }
    const char ch = text[i++];
    if (ch == 'x' || ch == 'X' || ch == '1') {
      p.push_back(pos++);
    } else if (ch == '-' || ch == '0' || ch == '.') {
      ++pos;
    } else if (!is_space(ch)) {
      throw ParseError("bad character in juggling state: '" +
                       std::string(1, ch) + "'");
    }
  }
  return JugglingState(std::move(p));
}

bool JugglingState::occupied(int pos) const
{
  return std::binary_search(_positions.begin(), _positions.end(), pos);
}

JugglingState JugglingState::shifted(int delta) const
{
  std::vector<int> p = _positions;
  for (int& x : p) {
    x += delta;
  }
  return JugglingState(std::move(p));
}

std::string JugglingState::to_string() const
{
  std::string out(static_cast<size_t>(last() + 1), '-');
  for (int x : _positions) {
    out[static_cast<size_t>(x)] = 'x';
  }
  return out;
}

std::int64_t inversions(const JugglingState& s)
{
  std::int64_t total = 0;
  const auto& p = s.positions();
  for (size_t j = 0; j < p.size(); ++j) {
    total += p[j] - static_cast<std::int64_t>(j);
  }
  return total;
}

JugglingState throw_state(const JugglingState& s, int t)
{
  if (!s.starts_with_ball()) {
    if (t != 0) {
      throw IllegalThrow("state " + s.to_string() +
                         " has no ball to throw; only 0 is allowed");
    }
    return s.shifted(-1);
  }
  if (t <= 0) {
    throw IllegalThrow("a ball must be thrown from state " + s.to_string());
  }
  std::vector<int> p(s.positions().begin() + 1, s.positions().end());
  for (int& x : p) {
    --x;
  }
  const int landing = t - 1;
  const auto it = std::lower_bound(p.begin(), p.end(), landing);
  if (it != p.end() && *it == landing) {
    throw IllegalThrow("throw " + std::to_string(t) + " from " +
                       s.to_string() + " collides");
  }
  p.insert(it, landing);
  return JugglingState(std::move(p));
}

int throw_between(const JugglingState& from, const JugglingState& to)
{
  if (from.balls() != to.balls()) {
    return -1;
  }
  if (!from.starts_with_ball()) {
    return from.shifted(-1) == to ? 0 : -1;
  }
  // to must contain every ball of `from` (shifted down) plus one more.
  std::vector<int> rest(from.positions().begin() + 1, from.positions().end());
  int extra = -1;
  size_t k = 0;
  for (int x : to.positions()) {
    if (k < rest.size() && rest[k] - 1 == x) {
      ++k;
    } else if (extra < 0) {
      extra = x;
    } else {
      return -1;
    }
  }
  if (k != rest.size() || extra < 0) {
    return -1;
  }
  return extra + 1;
}

std::vector<std::pair<int, JugglingState>> forward_edges(
    const JugglingState& s, int max_throw)
{
  std::vector<std::pair<int, JugglingState>> edges;
  if (!s.starts_with_ball()) {
    edges.emplace_back(0, s.shifted(-1));
    return edges;
  }
  for (int t = 1; t <= max_throw; ++t) {
    if (!s.occupied(t)) {
      edges.emplace_back(t, throw_state(s, t));
    }
  }
  return edges;
}

std::vector<JugglingState> states_up_to_inversions(int balls,
                                                   int max_inversions)
{
  // Ball j sits at j + g_j with g_0 <= g_1 <= ... and sum g_j = inversions.
  std::vector<std::pair<std::int64_t, JugglingState>> found;
  std::vector<int> gaps;
  std::function<void(int, int)> extend = [&](int min_gap, int budget) {
    if (static_cast<int>(gaps.size()) == balls) {
      std::vector<int> p(gaps.size());
      std::int64_t ell = 0;
      for (size_t j = 0; j < gaps.size(); ++j) {
        p[j] = static_cast<int>(j) + gaps[j];
        ell += gaps[j];
      }
      found.emplace_back(ell, JugglingState(std::move(p)));
      return;
    }
    const int remaining = balls - static_cast<int>(gaps.size());
    for (int g = min_gap; g * remaining <= budget; ++g) {
      gaps.push_back(g);
      extend(g, budget - g);
      gaps.pop_back();
    }
  };
  if (balls < 0 || max_inversions < 0) {
    return {};
  }
  extend(0, max_inversions);
  std::sort(found.begin(), found.end());
  std::vector<JugglingState> out;
  out.reserve(found.size());
  for (auto& [ell, s] : found) {
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<JugglingState> states_in_window(int balls, int window)
{
  std::vector<JugglingState> out;
  if (balls < 0 || balls > window) {
    return out;
  }
  std::vector<int> p;
  std::function<void(int)> extend = [&](int next) {
    if (static_cast<int>(p.size()) == balls) {
      out.emplace_back(p);
      return;
    }
    for (int x = next; x + (balls - static_cast<int>(p.size())) <= window;
         ++x) {
      p.push_back(x);
      extend(x + 1);
      p.pop_back();
    }
  };
  extend(0);
  return out;
}

// ---------------------------------------------------------------------------
// FlagState
// ---------------------------------------------------------------------------

FlagState::FlagState(std::vector<int> cells)
    : _cells(std::move(cells))
{
  for (int c : _cells) {
    if (c < 0) {
      throw std::invalid_argument("flag state labels must be positive");
    }
  }
  while (!_cells.empty() && _cells.back() == kEmpty) {
    _cells.pop_back();
  }
}

FlagState FlagState::parse(std::string_view text)
{
  std::vector<int> cells;
  const bool tokenized = std::any_of(text.begin(), text.end(), is_space);
  size_t i = 0;
  while (i < text.size()) {
    if (text.substr(i, kMinus.size()) == kMinus) {
      cells.push_back(kEmpty);
      i += kMinus.size();
      continue;
    }
    const char ch = text[i];
    if (ch == '-') {
      cells.push_back(kEmpty);
      ++i;
    } else if (is_space(ch)) {
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(ch))) {
      if (!tokenized) {
        cells.push_back(ch - '0');
        ++i;
      } else {
        int value = 0;
        while (i < text.size() &&
               std::isdigit(static_cast<unsigned char>(text[i]))) {
          value = value * 10 + (text[i] - '0');
          ++i;
        }
        cells.push_back(value);
      }
      if (cells.back() == 0) {
        throw ParseError("flag labels must be positive");
      }
    } else {
      throw ParseError("bad character in flag state: '" + std::string(1, ch) +
                       "'");
    }
  }
  return FlagState(std::move(cells));
}

FlagState FlagState::ground(int balls)
{
  std::vector<int> cells(static_cast<size_t>(balls));
  for (int i = 0; i < balls; ++i) {
    cells[static_cast<size_t>(i)] = i + 1;
  }
  return FlagState(std::move(cells));
}

int FlagState::cell(int i) const
{
  return (i >= 0 && i < size()) ? _cells[static_cast<size_t>(i)] : kEmpty;
}

int FlagState::balls() const
{
  return static_cast<int>(
      std::count_if(_cells.begin(), _cells.end(),
                    [](int c) { return c != kEmpty; }));
}

std::vector<int> FlagState::labels() const
{
  std::vector<int> out;
  for (int c : _cells) {
    if (c != kEmpty) {
      out.push_back(c);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

JugglingState FlagState::erase_labels() const
{
  std::vector<int> p;
  for (int i = 0; i < size(); ++i) {
    if (_cells[static_cast<size_t>(i)] != kEmpty) {
      p.push_back(i);
    }
  }
  return JugglingState(std::move(p));
}

FlagState FlagState::with_leading_empty() const
{
  std::vector<int> cells;
  cells.reserve(_cells.size() + 1);
  cells.push_back(kEmpty);
  cells.insert(cells.end(), _cells.begin(), _cells.end());
  return FlagState(std::move(cells));
}

std::string cell_to_string(int cell)
{
  return cell == FlagState::kEmpty ? std::string("-") : std::to_string(cell);
}

std::string FlagState::to_string() const
{
  const bool wide = std::any_of(_cells.begin(), _cells.end(),
                                [](int c) { return c >= 10; });
  std::string out;
  for (size_t i = 0; i < _cells.size(); ++i) {
    if (wide && i > 0) {
      out += ' ';
    }
    out += cell_to_string(_cells[i]);
  }
  return out;
}

std::int64_t cell_inversions(const std::vector<int>& cells)
{
  std::int64_t total = 0;
  std::int64_t empties = 0;
  for (size_t j = 0; j < cells.size(); ++j) {
    if (cells[j] == FlagState::kEmpty) {
      ++empties;
      continue;
    }
    total += empties;
    for (size_t i = 0; i < j; ++i) {
      if (cells[i] != FlagState::kEmpty && cells[i] > cells[j]) {
        ++total;
      }
    }
  }
  return total;
}

std::int64_t inversions(const FlagState& s)
{
  return cell_inversions(s.cells());
}

std::vector<FlagState> flag_states_up_to_inversions(std::vector<int> labels,
                                                    int max_inversions)
{
  std::sort(labels.begin(), labels.end());
  const int balls = static_cast<int>(labels.size());
  std::vector<std::pair<std::int64_t, FlagState>> found;
  for (const auto& base : states_up_to_inversions(balls, max_inversions)) {
    const std::int64_t base_ell = inversions(base);
    std::vector<int> order = labels;
    do {
      std::int64_t label_inv = 0;
      for (size_t i = 0; i < order.size(); ++i) {
        for (size_t j = i + 1; j < order.size(); ++j) {
          label_inv += order[i] > order[j] ? 1 : 0;
        }
      }
      if (base_ell + label_inv > max_inversions) {
        continue;
      }
      std::vector<int> cells(static_cast<size_t>(base.last() + 1),
                             FlagState::kEmpty);
      for (size_t j = 0; j < order.size(); ++j) {
        cells[static_cast<size_t>(base.positions()[j])] = order[j];
      }
      found.emplace_back(base_ell + label_inv, FlagState(std::move(cells)));
    } while (std::next_permutation(order.begin(), order.end()));
  }
  std::sort(found.begin(), found.end());
  std::vector<FlagState> out;
  out.reserve(found.size());
  for (auto& [ell, s] : found) {
    out.push_back(std::move(s));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Siteswaps
// ---------------------------------------------------------------------------

std::string Siteswap::to_string() const
{
  std::string out;
  for (int t : throws) {
    out += static_cast<char>(t < 10 ? '0' + t : 'a' + (t - 10));
  }
  return out;
}

Siteswap parse_siteswap(std::string_view text)
{
  if (text.empty()) {
    throw ParseError("empty siteswap");
  }
  Siteswap sw;
  for (char ch : text) {
    if (ch >= '0' && ch <= '9') {
      sw.throws.push_back(ch - '0');
    } else if (ch >= 'a' && ch <= 'z') {
      sw.throws.push_back(10 + (ch - 'a'));
    } else {
      throw ParseError("bad character in siteswap: '" + std::string(1, ch) +
                       "'");
    }
  }
  return sw;
}

SiteswapInfo validate_siteswap(const Siteswap& sw)
{
  const int n = static_cast<int>(sw.throws.size());
  if (n == 0) {
    throw InvalidPattern("empty siteswap");
  }
  long sum = 0;
  int max_throw = 0;
  std::vector<bool> landed(static_cast<size_t>(n), false);
  for (int i = 0; i < n; ++i) {
    const int t = sw.throws[static_cast<size_t>(i)];
    sum += t;
    max_throw = std::max(max_throw, t);
    const auto slot = static_cast<size_t>((i + t) % n);
    if (landed[slot]) {
      throw InvalidPattern("siteswap " + sw.to_string() +
                           " has colliding throws");
    }
    landed[slot] = true;
  }
  if (sum % n != 0) {
    throw InvalidPattern("siteswap " + sw.to_string() +
                         " has a non-integral average");
  }

  // Landing beats of the throws made before time 0, assuming the pattern has
  // been running forever.
  std::vector<int> start;
  for (int m = 1; m <= max_throw; ++m) {
    const int t = sw.throws[static_cast<size_t>(((-m) % n + n) % n)];
    if (t - m >= 0) {
      start.push_back(t - m);
    }
  }
  std::sort(start.begin(), start.end());
  if (std::adjacent_find(start.begin(), start.end()) != start.end()) {
    throw InvalidPattern("siteswap " + sw.to_string() +
                         " has colliding throws");
  }

  SiteswapInfo info;
  info.balls = static_cast<int>(sum / n);
  JugglingState s(std::move(start));
  for (int i = 0; i < n; ++i) {
    info.states.push_back(s);
    try {
      s = throw_state(s, sw.throws[static_cast<size_t>(i)]);
    } catch (const IllegalThrow& e) {
      throw InvalidPattern("siteswap " + sw.to_string() + ": " + e.what());
    }
  }
  if (s != info.states.front() || s.balls() != info.balls) {
    throw InvalidPattern("siteswap " + sw.to_string() +
                         " does not close up");
  }
  return info;
}

std::uint64_t count_patterns(int n, int balls, std::uint64_t budget)
{
  if (n < 1 || balls < 0) {
    throw std::invalid_argument("count_patterns needs n >= 1, b >= 0");
  }
  const std::uint64_t base =
      static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(balls) + 1;
  std::uint64_t space = 1;
  for (int i = 0; i < n; ++i) {
    if (space > budget / base) {
      throw ResourceLimit("pattern enumeration exceeds budget");
    }
    space *= base;
  }

  const int top = n * balls;
  std::vector<int> t(static_cast<size_t>(n), 0);
  std::vector<bool> hit(static_cast<size_t>(n));
  std::uint64_t count = 0;
  for (std::uint64_t k = 0; k < space; ++k) {
    std::fill(hit.begin(), hit.end(), false);
    long sum = 0;
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      const int ti = t[static_cast<size_t>(i)];
      sum += ti;
      const auto slot = static_cast<size_t>((i + ti) % n);
      ok = !hit[slot];
      hit[slot] = true;
    }
    if (ok && sum % n == 0 && sum / n <= balls) {
      ++count;
    }
    for (int i = 0; i < n; ++i) {
      if (++t[static_cast<size_t>(i)] <= top) {
        break;
      }
      t[static_cast<size_t>(i)] = 0;
    }
  }
  return count;
}

JugglingState window_dual(const JugglingState& s, int window)
{
  std::vector<int> p;
  for (int k = window - 1; k >= 0; --k) {
    if (!s.occupied(k)) {
      p.push_back(window - 1 - k);
    }
  }
  return JugglingState(std::move(p));
}

WindowDuality window_dual_iso(int balls, int window)
{
  if (balls < 0 || balls > window) {
    throw std::invalid_argument("window duality needs 0 <= b <= n");
  }
  using Edge = std::pair<JugglingState, JugglingState>;
  auto edges_of = [window](int b) {
    std::set<Edge> edges;
    for (const auto& s : states_in_window(b, window)) {
      for (auto& [t, target] : forward_edges(s, window)) {
        edges.emplace(s, target);
      }
    }
    return edges;
  };

  WindowDuality out;
  std::set<JugglingState> image;
  for (const auto& s : states_in_window(balls, window)) {
    auto d = window_dual(s, window);
    image.insert(d);
    out.mapping.emplace_back(s, std::move(d));
  }
  const auto dual_states = states_in_window(window - balls, window);
  const bool bijective =
      image.size() == out.mapping.size() && image.size() == dual_states.size();

  const auto here = edges_of(balls);
  const auto there = edges_of(window - balls);
  bool reversed = bijective && here.size() == there.size();
  for (const auto& [from, to] : here) {
    if (!reversed) {
      break;
    }
    reversed = there.count({window_dual(to, window), window_dual(from, window)}) != 0;
  }
  out.edges_reversed = reversed;
  return out;
}

}  // namespace juggle

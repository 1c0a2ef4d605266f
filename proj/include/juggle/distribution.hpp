//
// distribution.hpp
//
// Finite distributions with exact rational weights.
//

#pragma once

#include "juggle/rational.hpp"

#include <cstdint>
#include <map>
#include <type_traits>
#include <utility>
#include <vector>

namespace juggle {

template <class State>
class Distribution {
 public:
  using Entry = std::pair<State, Rational>;

  Distribution() = default;

  // Adds `p` to the mass on `s`, merging with any existing entry.
  void add(const State& s, const Rational& p)
  {
    if (p == 0) {
      return;
    }
    auto [it, inserted] = _mass.try_emplace(s, p);
    if (!inserted) {
      it->second += p;
    }
  }

  // Entries in ascending state order.
  std::vector<Entry> entries() const
  {
    return {_mass.begin(), _mass.end()};
  }

  Rational probability(const State& s) const
  {
    const auto it = _mass.find(s);
    return it == _mass.end() ? Rational(0) : it->second;
  }

  Rational total() const
  {
    Rational sum = 0;
    for (const auto& [s, p] : _mass) {
      sum += p;
    }
    return sum;
  }

  size_t size() const { return _mass.size(); }
  bool contains(const State& s) const { return _mass.count(s) != 0; }

  auto begin() const { return _mass.begin(); }
  auto end() const { return _mass.end(); }

  // Image of the distribution under `f`.
  template <class F>
  auto map(F&& f) const
  {
    using Target = std::decay_t<decltype(f(std::declval<const State&>()))>;
    Distribution<Target> out;
    for (const auto& [s, p] : _mass) {
      out.add(f(s), p);
    }
    return out;
  }

  bool operator==(const Distribution& other) const = default;

 private:
  std::map<State, Rational> _mass;
};

// Visit counts from a simulated trajectory.
template <class State>
struct StateHistogram {
  std::map<State, std::uint64_t> counts;
  std::uint64_t samples = 0;

  void record(const State& s)
  {
    ++counts[s];
    ++samples;
  }
};

}  // namespace juggle

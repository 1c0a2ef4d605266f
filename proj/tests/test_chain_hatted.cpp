#include "juggle/chain_hatted.hpp"
#include "juggle/errors.hpp"

#include <catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

using namespace juggle;

namespace {

bool contains(const std::vector<MixedState>& v, const MixedState& s)
{
  return std::find(v.begin(), v.end(), s) != v.end();
}

MixedState hatted(const char* text)
{
  return HattedState::parse(text);
}

MixedState plain(const char* text)
{
  return FlagState::parse(text);
}

int last_label(const std::vector<int>& cells)
{
  for (int k = static_cast<int>(cells.size()) - 1; k >= 0; --k) {
    if (cells[static_cast<size_t>(k)] != FlagState::kEmpty) {
      return k;
    }
  }
  return -1;
}

}  // namespace

TEST_CASE("hatted text")
{
  const auto h = HattedState::parse("3 -^ 2 1");
  CHECK(h.cells() == std::vector<int>{3, 0, 2, 1});
  CHECK(h.hat() == 1);
  CHECK(h.to_string() == "3 -^ 2 1");
  CHECK(HattedState::parse("3-^21") == h);
  CHECK(HattedState::parse("3 - 2 1 -^").to_string() == "3 - 2 1 -^");
  // Trailing '-' past the hat are not stored.
  CHECK(HattedState({1, 0, 0}, 0).to_string() == "1^");
  CHECK_THROWS_AS(HattedState::parse("3 - 2 1"), ParseError);
  CHECK_THROWS_AS(HattedState::parse("3^ -^"), ParseError);
  CHECK(std::holds_alternative<FlagState>(parse_mixed("3-21")));
  CHECK(to_string(parse_mixed("3 - 2^ 1")) == "3 - 2^ 1");
}

TEST_CASE("hatted forward edges")
{
  auto e = hatted_forward_edges(plain("3-21"));
  REQUIRE(e.size() == 1);
  CHECK(e[0] == hatted("3^ - 2 1"));

  e = hatted_forward_edges(hatted("3^ - 2 1"));
  CHECK(e.size() == 2);
  CHECK(contains(e, hatted("- 3^ 2 1")));
  CHECK(contains(e, hatted("3 -^ 2 1")));
  CHECK_FALSE(contains(e, hatted("3 - 2^ 1")));

  // A hatted '-' past the last label leaves the hatted layer.
  e = hatted_forward_edges(hatted("3 - 2 1 -^"));
  REQUIRE(e.size() == 1);
  CHECK(e[0] == plain("3-21"));
}

TEST_CASE("one hatted move")
{
  for (const Rational q : {Rational(2), Rational(3), Rational(7, 2)}) {
    const CoinConfig coin(q);
    auto d = hatted_backward_dist(plain("3-21"), coin);
    REQUIRE(d.size() == 1);
    CHECK(d.probability(hatted("3 - 2 1 -^")) == 1);

    d = hatted_backward_dist(hatted("3 - 2 1 -^"), coin);
    REQUIRE(d.size() == 2);
    CHECK(d.probability(hatted("3 - 2 1^")) == coin.tails());
    CHECK(d.probability(hatted("3 - 2 -^ 1")) == coin.heads());

    // A left neighbour that is not smaller forces a swap.
    d = hatted_backward_dist(hatted("3 - 2 1^"), coin);
    REQUIRE(d.size() == 1);
    CHECK(d.probability(hatted("3 - 1^ 2")) == 1);

    d = hatted_backward_dist(hatted("- -^ 1"), coin);
    REQUIRE(d.size() == 1);
    CHECK(d.probability(hatted("-^ - 1")) == 1);

    d = hatted_backward_dist(hatted("1^ - 2"), coin);
    REQUIRE(d.size() == 1);
    CHECK(d.probability(plain("1-2")) == 1);
  }
}

TEST_CASE("hatted moves flip at most one coin and keep the hat in range")
{
  const CoinConfig coin(Rational(3));
  for (const std::vector<int>& labels :
       {std::vector<int>{1, 2}, {1, 2, 3}, {1, 1, 2}}) {
    for (const auto& s : flag_states_up_to_inversions(labels, 5)) {
      MixedDist frontier;
      frontier.add(s, Rational(1));
      while (frontier.size() > 0) {
        MixedDist next;
        for (const auto& [state, p] : frontier) {
          const auto d = hatted_backward_dist(state, coin);
          REQUIRE(d.total() == 1);
          for (const auto& [succ, r] : d) {
            REQUIRE((r == 1 || r == coin.heads() || r == coin.tails()));
            if (const auto* h = std::get_if<HattedState>(&succ)) {
              REQUIRE(h->hat() <= last_label(h->cells()) + 1);
              next.add(succ, p * r);
            }
          }
        }
        frontier = std::move(next);
      }
    }
  }
}

TEST_CASE("composed hatted moves reproduce the flag chain")
{
  const CoinConfig two(Rational(2));
  const auto sample = FlagState::parse("--31-2");
  CHECK(composed_backward_dist(sample, two) == flag_backward_dist(sample, two));
  const auto one = composed_backward_dist(FlagState::parse("1"), two);
  CHECK(one.size() == 2);
  CHECK(one.probability(FlagState::parse("1")) == Rational(1, 2));
  CHECK(one.probability(FlagState::parse("-1")) == Rational(1, 2));

  for (const Rational q : {Rational(2), Rational(7, 2)}) {
    const CoinConfig coin(q);
    for (const std::vector<int>& labels :
         {std::vector<int>{1}, {1, 2}, {1, 2, 3}, {1, 1, 2}, {2, 2}}) {
      for (const auto& s : flag_states_up_to_inversions(labels, 5)) {
        INFO(s.to_string());
        REQUIRE(composed_backward_dist(s, coin) == flag_backward_dist(s, coin));
      }
    }
  }
  CHECK(composed_backward_dist(FlagState(), two).probability(FlagState()) == 1);
  CHECK_THROWS_AS(composed_backward_dist(sample, two, 3), NonTermination);
}

TEST_CASE("sampled hatted walks follow the flag law")
{
  const CoinConfig coin(Rational(2));
  const auto s = FlagState::parse("--31-2");
  const auto exact = flag_backward_dist(s, coin);
  ChainRng rng(31);
  std::map<FlagState, int> counts;
  const int samples = 40000;
  for (int k = 0; k < samples; ++k) {
    MixedState m = hatted_backward_step(s, coin, rng);
    while (std::holds_alternative<HattedState>(m)) {
      m = hatted_backward_step(m, coin, rng);
    }
    ++counts[std::get<FlagState>(m)];
  }
  for (const auto& [t, p] : exact) {
    const double pd = to_double(p);
    REQUIRE(std::abs(counts[t] - pd * samples) <= 3 * std::sqrt(samples * pd * (1 - pd)));
  }
}

TEST_CASE("hatted paths match flag edges")
{
  CHECK(path_equivalence_check(FlagState::parse("-21"), FlagState::parse("21"), 6));
  CHECK(path_equivalence_check(FlagState::parse("3-21"), FlagState::parse("-213"), 6));
  CHECK_FALSE(path_equivalence_check(FlagState::parse("3-21"), FlagState::parse("1-23"), 6));

  const int max_drop = 6;
  for (const std::vector<int>& labels :
       {std::vector<int>{1}, {1, 2}, {1, 1}}) {
    std::vector<FlagState> states;
    for (auto& s : flag_states_up_to_inversions(labels, 8)) {
      if (s.size() <= 5) {
        states.push_back(std::move(s));
      }
    }
    for (const auto& s : states) {
      std::set<FlagState> flag_targets;
      for (const auto& e : flag_forward_edges(s, max_drop)) {
        flag_targets.insert(e.target);
      }
      for (const auto& t : states) {
        INFO(s.to_string() << " -> " << t.to_string());
        REQUIRE(path_equivalence_check(s, t, max_drop) == (flag_targets.count(t) > 0));
      }
    }
  }
}

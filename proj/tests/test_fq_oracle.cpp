#include "juggle/errors.hpp"
#include "juggle/fq_oracle.hpp"
#include "juggle/series.hpp"

#include <catch_amalgamated.hpp>

#include <random>

using namespace juggle;

namespace {

// Number of invertible b x b matrices over F_p, by enumeration.
std::uint64_t count_invertible(int b, int p)
{
  return pivot_census(b, b, p).counts[JugglingState::ground(b)];
}

FqMatrix partial_permutation(const FlagState& s, int p, int cols)
{
  FqMatrix m(p, s.balls(), cols);
  for (int j = 0; j < s.size(); ++j) {
    if (s.cell(j) != FlagState::kEmpty) {
      m.set(s.cell(j) - 1, j, 1);
    }
  }
  return m;
}

}  // namespace

TEST_CASE("pivot states")
{
  const auto id = FqMatrix::from_rows(2, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  CHECK(pivot_state(id) == JugglingState::ground(3));
  CHECK(pivot_state(FqMatrix::from_rows(2, {{0, 1, 1}})) == JugglingState({1}));
  CHECK_FALSE(pivot_state(FqMatrix::from_rows(3, {{1, 2}, {2, 1}})).has_value());
  CHECK(pivot_state(FqMatrix::from_rows(3, {{1, 2}, {1, 1}})) == JugglingState::ground(2));
}

TEST_CASE("flag pivot states")
{
  for (const auto& s : flag_states_up_to_inversions({1, 2, 3}, 4)) {
    REQUIRE(flag_pivot_state(partial_permutation(s, 3, s.size() + 1)) == s);
  }
  // Northwest ranks ((1,1),(1,2)): label 1 at column 0, label 2 at column 1.
  const auto m = FqMatrix::from_rows(2, {{1, 1}, {1, 0}});
  CHECK(m.northwest_rank(1, 1) == 1);
  CHECK(m.northwest_rank(2, 1) == 1);
  CHECK(m.northwest_rank(1, 2) == 1);
  CHECK(m.northwest_rank(2, 2) == 2);
  CHECK(flag_pivot_state(m) == FlagState::parse("12"));
  CHECK(flag_pivot_state(FqMatrix::from_rows(2, {{0, 1}, {1, 0}})) == FlagState::parse("21"));

  for (std::uint64_t k = 0; k < 64; ++k) {
    FqMatrix a(2, 2, 3);
    for (int e = 0; e < 6; ++e) {
      a.set(e / 3, e % 3, static_cast<int>((k >> e) & 1));
    }
    const auto plain = pivot_state(a);
    const auto flag = flag_pivot_state(a);
    REQUIRE(plain.has_value() == flag.has_value());
    if (flag) {
      REQUIRE(flag->erase_labels() == *plain);
    }
  }
}

TEST_CASE("flag pivot states survive downward and rightward operations")
{
  std::mt19937_64 gen(2718);
  for (const int p : {2, 3, 5}) {
    for (int trial = 0; trial < 300; ++trial) {
      const int b = 1 + static_cast<int>(gen() % 3);
      const int n = b + static_cast<int>(gen() % 3);
      FqMatrix m(p, b, n);
      for (int i = 0; i < b; ++i) {
        for (int j = 0; j < n; ++j) {
          m.set(i, j, static_cast<int>(gen() % static_cast<std::uint64_t>(p)));
        }
      }
      const auto before = flag_pivot_state(m);
      for (int op = 0; op < 20; ++op) {
        const int f = 1 + static_cast<int>(gen() % static_cast<std::uint64_t>(p - 1));
        switch (gen() % 4) {
          case 0:
            if (b > 1) {
              const int src = static_cast<int>(gen() % static_cast<std::uint64_t>(b - 1));
              const int dst = src + 1 + static_cast<int>(gen() % static_cast<std::uint64_t>(b - 1 - src));
              m.add_row(dst, src, f);
            }
            break;
          case 1:
            if (n > 1) {
              const int src = static_cast<int>(gen() % static_cast<std::uint64_t>(n - 1));
              const int dst = src + 1 + static_cast<int>(gen() % static_cast<std::uint64_t>(n - 1 - src));
              m.add_column(dst, src, f);
            }
            break;
          case 2:
            m.scale_row(static_cast<int>(gen() % static_cast<std::uint64_t>(b)), f);
            break;
          default:
            m.scale_column(static_cast<int>(gen() % static_cast<std::uint64_t>(n)), f);
            break;
        }
      }
      REQUIRE(flag_pivot_state(m) == before);
    }
  }
}

TEST_CASE("general linear group orders")
{
  CHECK(gl_order(1, 2) == 1);
  CHECK(gl_order(2, 2) == 6);
  CHECK(gl_order(2, 3) == 48);
  CHECK(count_invertible(2, 2) == 6);
  CHECK(count_invertible(2, 3) == 48);
  CHECK(count_invertible(3, 2) == 168);
  CHECK(gl_order(3, 2) == 168);
}

TEST_CASE("pivot fractions")
{
  auto c = pivot_fraction_exhaustive(1, 2, 2, JugglingState::parse("-x"));
  CHECK(c.fraction == Rational(1, 4));
  CHECK(c.match);
  c = pivot_fraction_exhaustive(1, 2, 2, JugglingState::parse("x"));
  CHECK(c.fraction == Rational(1, 2));
  CHECK(c.match);

  const auto three = pivot_census(2, 3, 2);
  const auto four = pivot_census(2, 4, 2);
  CHECK(three.counts.size() == 3);
  for (const auto& [s, n] : three.counts) {
    const auto check = pivot_fraction_exhaustive(2, 3, 2, s);
    REQUIRE(check.match);
    REQUIRE(four.fraction(s) == three.fraction(s));
  }
  CHECK_THROWS_AS(pivot_census(4, 8, 2, 1000), ResourceLimit);
}

TEST_CASE("rank-deficient fraction shrinks with width")
{
  for (const int p : {2, 3}) {
    Rational prev = 2;
    for (int n = 2; n <= 5; ++n) {
      const auto c = pivot_census(2, n, p);
      const Rational deficient = Rational(c.deficient) / c.total;
      // Full rank fraction is prod_{i=0}^{b-1} (1 - p^{i - N}).
      REQUIRE(1 - deficient == (1 - power(Rational(p), -n)) * (1 - power(Rational(p), 1 - n)));
      REQUIRE(deficient < prev);
      prev = deficient;
    }
  }
}

TEST_CASE("flag fractions")
{
  const auto c = flag_fraction_exhaustive(2, 3, 2, FlagState::parse("21"));
  CHECK(c.fraction == Rational(1, 8));
  CHECK(c.match);
  CHECK(flag_fraction_exhaustive(1, 3, 2, FlagState::parse("-1")).fraction ==
        pivot_fraction_exhaustive(1, 3, 2, JugglingState::parse("-x")).fraction);

  for (const int p : {2, 3}) {
    const auto census = flag_census(2, 3, p);
    Rational sum = Rational(census.deficient) / census.total;
    for (const auto& [s, n] : census.counts) {
      REQUIRE(flag_fraction_exhaustive(2, 3, p, s).match);
      sum += census.fraction(s);
    }
    REQUIRE(sum == 1);
  }
  for (const auto& [s, n] : flag_census(3, 3, 2).counts) {
    REQUIRE(flag_fraction_exhaustive(3, 4, 2, s).match);
  }
}

TEST_CASE("group fractions")
{
  const auto pair = LabelGroups::from_labels({1, 1});
  const auto c = group_fraction_exhaustive(pair, 3, 2, FlagState::parse("11"));
  CHECK(c.fraction == Rational(3, 8));
  CHECK(c.match);

  for (const std::vector<int>& labels :
       {std::vector<int>{1, 1}, {1, 2}, {1, 1, 2}, {1, 2, 2}, {1, 1, 1}}) {
    const auto groups = LabelGroups::from_labels(labels);
    const int b = static_cast<int>(labels.size());
    const int n = b + 1;
    for (const auto& [s, count] : group_census(groups, n, 2).counts) {
      INFO(s.to_string());
      REQUIRE(group_fraction_exhaustive(groups, n, 2, s).match);
    }
  }
  // One group reduces to plain pivot fractions.
  const auto three = LabelGroups::from_labels({4, 4, 4});
  for (const auto& [s, count] : group_census(three, 4, 2).counts) {
    REQUIRE(group_census(three, 4, 2).fraction(s) ==
            pivot_census(3, 4, 2).fraction(s.erase_labels()));
  }
}

TEST_CASE("census does not depend on the worker split")
{
  const auto one = flag_census(2, 4, 3, kDefaultMatrixBudget, 1);
  const auto many = flag_census(2, 4, 3, kDefaultMatrixBudget, 5);
  CHECK(one.counts == many.counts);
  CHECK(one.deficient == many.deficient);
}

TEST_CASE("prepending a random column runs the backward chain")
{
  const auto unit = FqMatrix::from_rows(2, {{1}});
  const auto d = column_prepend_dist(unit);
  CHECK(d.probability(JugglingState::parse("x")) == Rational(1, 2));
  CHECK(d.probability(JugglingState::parse("-x")) == Rational(1, 2));

  const auto twoone = partial_permutation(FlagState::parse("21"), 2, 2);
  CHECK(flag_column_prepend_dist(twoone) ==
        flag_backward_dist(FlagState::parse("21"), CoinConfig(Rational(2))));

  // A matrix whose pivot state is --xx-x.
  FqMatrix m(2, 3, 6);
  m.set(0, 2, 1);
  m.set(1, 3, 1);
  m.set(2, 5, 1);
  m.set(0, 4, 1);
  REQUIRE(pivot_state(m) == JugglingState::parse("--xx-x"));
  CHECK(column_prepend_dist(m) ==
        backward_dist(JugglingState::parse("--xx-x"), CoinConfig(Rational(2))));
  const auto flag = flag_pivot_state(m);
  REQUIRE(flag.has_value());
  CHECK(flag_column_prepend_dist(m) == flag_backward_dist(*flag, CoinConfig(Rational(2))));

  CHECK_THROWS(column_prepend_dist(FqMatrix::from_rows(2, {{1, 1}, {1, 1}})));
}

TEST_CASE("column prepend agrees with both chains on small matrices")
{
  for (const int p : {2, 3}) {
    const CoinConfig coin{Rational(p)};
    for (const auto& m : full_rank_matrices(2, 3, p)) {
      REQUIRE(column_prepend_dist(m) == backward_dist(*pivot_state(m), coin));
      REQUIRE(flag_column_prepend_dist(m) == flag_backward_dist(*flag_pivot_state(m), coin));
    }
  }
}

#include "juggle/errors.hpp"
#include "juggle/series.hpp"
#include "juggle/state.hpp"

#include <catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>

using namespace juggle;

namespace {

// Partitions of k with every part at most `max_part`, by recursion on the
// largest part.
std::uint64_t partitions(int k, int max_part)
{
  if (k == 0) {
    return 1;
  }
  std::uint64_t n = 0;
  for (int part = std::min(k, max_part); part >= 1; --part) {
    n += partitions(k - part, part);
  }
  return n;
}

TruncSeries from_ints(int degree, std::vector<int> c)
{
  std::vector<Rational> r(static_cast<size_t>(degree) + 1, Rational(0));
  for (size_t k = 0; k < c.size(); ++k) {
    r[k] = c[k];
  }
  return TruncSeries(degree, r);
}

}  // namespace

TEST_CASE("s_n")
{
  CHECK(s_n(0, Rational(5)) == 1);
  CHECK(s_n(1, Rational(2)) == Rational(1, 2));
  CHECK(s_n(2, Rational(2)) == Rational(3, 8));
  CHECK(s_n(2, Rational(3)) == Rational(2, 3) * Rational(8, 9));
}

TEST_CASE("truncated series arithmetic")
{
  const int d = 10;
  const auto one_minus_x = TruncSeries::one(d) - TruncSeries::monomial(d, 1);
  const auto geometric = one_minus_x.inverse();
  for (int k = 0; k <= d; ++k) {
    CHECK(geometric[k] == 1);
  }
  CHECK(geometric * one_minus_x == TruncSeries::one(d));
  CHECK_THROWS(TruncSeries::monomial(d, 1).inverse());
  // x^6 * x^6 vanishes modulo x^11.
  CHECK(TruncSeries::monomial(d, 6) * TruncSeries::monomial(d, 6) == TruncSeries(d));
}

TEST_CASE("state counts are partition counts")
{
  for (int b = 1; b <= 3; ++b) {
    for (int k = 0; k <= 12; ++k) {
      REQUIRE(state_count_by_ell(b, k) == partitions(k, b));
    }
  }
  CHECK(state_count_by_ell(1, 7) == 1);
  CHECK(state_count_by_ell(3, 3) == 3);
  const auto two = state_partition_series(2, 4);
  CHECK(two == from_ints(4, {1, 1, 2, 2, 3}));
}

TEST_CASE("state partition identity")
{
  for (int b = 0; b <= 4; ++b) {
    const auto c = check_state_partition(b, 12);
    CHECK(c.equal);
    CHECK(c.lhs == c.rhs);
  }
}

TEST_CASE("partial sums of state weights approach 1/s_b")
{
  // sum_{l <= D} count(l) q^{-l} <= 1/s_b(q), and the gap is at most
  // (the degree-D coefficient bound) times a geometric tail.
  const Rational q(3);
  for (int b = 1; b <= 3; ++b) {
    const int d = 20;
    Rational partial = 0;
    for (int l = 0; l <= d; ++l) {
      partial += Rational(state_count_by_ell(b, l)) * power(q, -l);
    }
    const Rational target = 1 / s_n(b, q);
    REQUIRE(partial < target);
    // count(l) <= (l + 1)^{b - 1}
    Rational tail = 0;
    for (int l = d + 1; l <= d + 200; ++l) {
      tail += power(Rational(l + 1), b - 1) * power(q, -l);
    }
    REQUIRE(to_double(target - partial) <= to_double(tail) * 1.01 + 1e-60);
  }
}

TEST_CASE("flag series identity")
{
  CHECK(check_flag_series(1, 8).equal);
  CHECK(flag_enumeration_series(2, 3)[1] == 2);
  CHECK(check_flag_series(3, 5).equal);
  CHECK(check_flag_series(4, 6).equal);
}

TEST_CASE("permutation Poincare series")
{
  CHECK(perm_poincare(2, 6) == from_ints(6, {1, 1}));
  CHECK(perm_poincare(3, 6) == from_ints(6, {1, 2, 2, 1}));
  for (int n = 1; n <= 6; ++n) {
    REQUIRE(check_perm_poincare(n, 24).equal);
  }
  CHECK_THROWS_AS(perm_poincare(9, 6), ResourceLimit);
}

TEST_CASE("Grassmannian Poincare series")
{
  CHECK(grassmannian_poincare(1, 2, 6) == from_ints(6, {1, 1}));
  // Gaussian binomial [4 choose 2] = 1 + x + 2x^2 + x^3 + x^4.
  CHECK(grassmannian_poincare(2, 4, 6) == from_ints(6, {1, 1, 2, 1, 1}));
  for (int h = 0; h <= 8; ++h) {
    for (int j = 0; j <= h; ++j) {
      REQUIRE(check_grassmannian(j, h, 24).equal);
    }
  }
}

TEST_CASE("bundle factorization")
{
  CHECK(check_bundle_factorization(1, 8).equal);
  CHECK(check_bundle_factorization(2, 6).equal);
  CHECK(check_bundle_factorization(4, 8).equal);
}

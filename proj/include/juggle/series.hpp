//
// series.hpp
//
// Truncated power series in x = 1/q with exact coefficients, and the
// generating-function identities satisfied by inversion counts of juggling
// states, flag states, permutations and windowed states.
//

#pragma once

#include "juggle/rational.hpp"

#include <cstdint>
#include <vector>

namespace juggle {

constexpr int kDefaultSeriesDegree = 24;

// prod_{i=1}^n (1 - q^{-i}); s_n(q) with s_0 = 1.
Rational s_n(int n, const Rational& q);

class TruncSeries {
 public:
  // The zero series, exact modulo x^{degree+1}.
  explicit TruncSeries(int degree = kDefaultSeriesDegree);
  TruncSeries(int degree, std::vector<Rational> coefficients);

  static TruncSeries one(int degree);
  // c * x^k
  static TruncSeries monomial(int degree, int k, const Rational& c = 1);

  int degree() const { return _degree; }
  const Rational& operator[](int k) const { return _c.at(static_cast<size_t>(k)); }
  const std::vector<Rational>& coefficients() const { return _c; }

  TruncSeries operator+(const TruncSeries& other) const;
  TruncSeries operator-(const TruncSeries& other) const;
  TruncSeries operator*(const TruncSeries& other) const;

  // Multiplicative inverse; requires a nonzero constant term.
  TruncSeries inverse() const;

  bool operator==(const TruncSeries& other) const = default;

 private:
  int _degree;
  std::vector<Rational> _c;
};

// prod_{i=1}^n (1 - x^i), i.e. s_n as a series.
TruncSeries s_n_series(int n, int degree);

// 1 / s_b by series inversion.
TruncSeries state_partition_series(int balls, int degree);

// sum over b-ball states of x^{l(state)}, by enumerating states.
TruncSeries state_enumeration_series(int balls, int degree);

std::uint64_t state_count_by_ell(int balls, int ell);

// (1 - x)^{-b} and its enumeration over flag states labeled 1..b.
TruncSeries flag_partition_series(int balls, int degree);
TruncSeries flag_enumeration_series(int balls, int degree);

// sum over pi in S_n of x^{inv(pi)}, enumerated; and s_n / s_1^n.
TruncSeries perm_poincare(int n, int degree = kDefaultSeriesDegree);
TruncSeries perm_poincare_closed(int n, int degree = kDefaultSeriesDegree);

// sum over j-ball states inside [0, h) of x^l, enumerated; and
// s_h / (s_j s_{h-j}).
TruncSeries grassmannian_poincare(int j, int h,
                                  int degree = kDefaultSeriesDegree);
TruncSeries grassmannian_poincare_closed(int j, int h,
                                         int degree = kDefaultSeriesDegree);

struct SeriesCheck {
  TruncSeries lhs;
  TruncSeries rhs;
  bool equal = false;
};

SeriesCheck check_state_partition(int balls, int degree);
SeriesCheck check_flag_series(int balls, int degree);
SeriesCheck check_perm_poincare(int n, int degree);
SeriesCheck check_grassmannian(int j, int h, int degree);

// (1-x)^{-b} against [prod (1-x^i)^{-1}] * [prod (1-x^i)/(1-x)].
SeriesCheck check_bundle_factorization(int balls, int degree);

}  // namespace juggle

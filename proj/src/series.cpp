//
// series.cpp
//

#include "juggle/series.hpp"

#include "juggle/errors.hpp"
#include "juggle/state.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace juggle {

namespace {

constexpr int kMaxPermN = 8;
constexpr int kMaxWindow = 12;
constexpr int kMaxEnumerationDegree = 64;

void check_degree(int degree)
{
  if (degree < 0) {
    throw std::invalid_argument("series degree must be nonnegative");
  }
  if (degree > kMaxEnumerationDegree) {
    throw ResourceLimit("series degree exceeds enumeration budget");
  }
}

TruncSeries series_from_counts(int degree,
                               const std::vector<std::int64_t>& ells)
{
  std::vector<Rational> c(static_cast<size_t>(degree) + 1);
  for (auto ell : ells) {
    if (ell <= degree) {
      c[static_cast<size_t>(ell)] += 1;
    }
  }
  return TruncSeries(degree, std::move(c));
}

}  // namespace

Rational s_n(int n, const Rational& q)
{
  Rational out = 1;
  Rational inv = Rational(1) / q;
  Rational pw = inv;
  for (int i = 1; i <= n; ++i) {
    out *= (1 - pw);
    pw *= inv;
  }
  return out;
}

// ---------------------------------------------------------------------------
// TruncSeries
// ---------------------------------------------------------------------------

TruncSeries::TruncSeries(int degree)
    : _degree(degree),
      _c(static_cast<size_t>(degree) + 1)
{
  if (degree < 0) {
    throw std::invalid_argument("series degree must be nonnegative");
  }
}

TruncSeries::TruncSeries(int degree, std::vector<Rational> coefficients)
    : TruncSeries(degree)
{
  for (size_t k = 0; k < coefficients.size() && k < _c.size(); ++k) {
    _c[k] = std::move(coefficients[k]);
  }
}

TruncSeries TruncSeries::one(int degree)
{
  return monomial(degree, 0, 1);
}

TruncSeries TruncSeries::monomial(int degree, int k, const Rational& c)
{
  TruncSeries s(degree);
  if (k >= 0 && k <= degree) {
    s._c[static_cast<size_t>(k)] = c;
  }
  return s;
}

TruncSeries TruncSeries::operator+(const TruncSeries& other) const
{
  TruncSeries out(std::min(_degree, other._degree));
  for (size_t k = 0; k < out._c.size(); ++k) {
    out._c[k] = _c[k] + other._c[k];
  }
  return out;
}

TruncSeries TruncSeries::operator-(const TruncSeries& other) const
{
  TruncSeries out(std::min(_degree, other._degree));
  for (size_t k = 0; k < out._c.size(); ++k) {
    out._c[k] = _c[k] - other._c[k];
  }
  return out;
}

TruncSeries TruncSeries::operator*(const TruncSeries& other) const
{
  TruncSeries out(std::min(_degree, other._degree));
  const size_t n = out._c.size();
  for (size_t i = 0; i < n; ++i) {
    if (_c[i] == 0) {
      continue;
    }
    for (size_t j = 0; i + j < n; ++j) {
      out._c[i + j] += _c[i] * other._c[j];
    }
  }
  return out;
}

TruncSeries TruncSeries::inverse() const
{
  if (_c[0] == 0) {
    throw std::domain_error("series with zero constant term is not invertible");
  }
  TruncSeries out(_degree);
  const Rational inv0 = Rational(1) / _c[0];
  out._c[0] = inv0;
  for (size_t k = 1; k < _c.size(); ++k) {
    Rational acc = 0;
    for (size_t i = 1; i <= k; ++i) {
      acc += _c[i] * out._c[k - i];
    }
    out._c[k] = -acc * inv0;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Identities
// ---------------------------------------------------------------------------

TruncSeries s_n_series(int n, int degree)
{
  TruncSeries out = TruncSeries::one(degree);
  for (int i = 1; i <= n; ++i) {
    out = out * (TruncSeries::one(degree) - TruncSeries::monomial(degree, i));
  }
  return out;
}

TruncSeries state_partition_series(int balls, int degree)
{
  return s_n_series(balls, degree).inverse();
}

TruncSeries state_enumeration_series(int balls, int degree)
{
  check_degree(degree);
  std::vector<std::int64_t> ells;
  for (const auto& s : states_up_to_inversions(balls, degree)) {
    ells.push_back(inversions(s));
  }
  return series_from_counts(degree, ells);
}

std::uint64_t state_count_by_ell(int balls, int ell)
{
  check_degree(ell);
  std::uint64_t count = 0;
  for (const auto& s : states_up_to_inversions(balls, ell)) {
    count += inversions(s) == ell ? 1 : 0;
  }
  return count;
}

TruncSeries flag_partition_series(int balls, int degree)
{
  TruncSeries one_minus_x =
      TruncSeries::one(degree) - TruncSeries::monomial(degree, 1);
  TruncSeries out = TruncSeries::one(degree);
  for (int i = 0; i < balls; ++i) {
    out = out * one_minus_x;
  }
  return out.inverse();
}

TruncSeries flag_enumeration_series(int balls, int degree)
{
  check_degree(degree);
  std::vector<int> labels(static_cast<size_t>(balls));
  std::iota(labels.begin(), labels.end(), 1);
  std::vector<std::int64_t> ells;
  for (const auto& s : flag_states_up_to_inversions(labels, degree)) {
    ells.push_back(inversions(s));
  }
  return series_from_counts(degree, ells);
}

TruncSeries perm_poincare(int n, int degree)
{
  if (n < 0 || n > kMaxPermN) {
    throw ResourceLimit("permutation enumeration limited to n <= 8");
  }
  std::vector<int> perm(static_cast<size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<std::int64_t> ells;
  do {
    ells.push_back(cell_inversions(perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return series_from_counts(degree, ells);
}

TruncSeries perm_poincare_closed(int n, int degree)
{
  TruncSeries s1_power = TruncSeries::one(degree);
  for (int i = 0; i < n; ++i) {
    s1_power = s1_power * s_n_series(1, degree);
  }
  return s_n_series(n, degree) * s1_power.inverse();
}

TruncSeries grassmannian_poincare(int j, int h, int degree)
{
  if (h > kMaxWindow) {
    throw ResourceLimit("windowed state enumeration limited to h <= 12");
  }
  if (j < 0 || j > h) {
    throw std::invalid_argument("Grassmannian needs 0 <= j <= h");
  }
  std::vector<std::int64_t> ells;
  for (const auto& s : states_in_window(j, h)) {
    ells.push_back(inversions(s));
  }
  return series_from_counts(degree, ells);
}

TruncSeries grassmannian_poincare_closed(int j, int h, int degree)
{
  if (j < 0 || j > h) {
    throw std::invalid_argument("Grassmannian needs 0 <= j <= h");
  }
  return s_n_series(h, degree) *
         (s_n_series(j, degree) * s_n_series(h - j, degree)).inverse();
}

SeriesCheck check_state_partition(int balls, int degree)
{
  SeriesCheck c{state_partition_series(balls, degree),
                state_enumeration_series(balls, degree)};
  c.equal = c.lhs == c.rhs;
  return c;
}

SeriesCheck check_flag_series(int balls, int degree)
{
  SeriesCheck c{flag_partition_series(balls, degree),
                flag_enumeration_series(balls, degree)};
  c.equal = c.lhs == c.rhs;
  return c;
}

SeriesCheck check_perm_poincare(int n, int degree)
{
  SeriesCheck c{perm_poincare_closed(n, degree), perm_poincare(n, degree)};
  c.equal = c.lhs == c.rhs;
  return c;
}

SeriesCheck check_grassmannian(int j, int h, int degree)
{
  SeriesCheck c{grassmannian_poincare_closed(j, h, degree),
                grassmannian_poincare(j, h, degree)};
  c.equal = c.lhs == c.rhs;
  return c;
}

SeriesCheck check_bundle_factorization(int balls, int degree)
{
  const TruncSeries base = state_partition_series(balls, degree);
  const TruncSeries fiber = perm_poincare_closed(balls, degree);
  SeriesCheck c{flag_partition_series(balls, degree), base * fiber};
  c.equal = c.lhs == c.rhs;
  return c;
}

}  // namespace juggle

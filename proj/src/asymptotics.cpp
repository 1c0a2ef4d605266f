//
// asymptotics.cpp
//

#include "juggle/asymptotics.hpp"

#include "juggle/chain_basic.hpp"
#include "juggle/errors.hpp"
#include "juggle/series.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace juggle {

namespace {

void check_occupancy_args(int b, int h, int c)
{
  if (b < 0 || h < 0 || c < 0 || c > b || c > h) {
    throw DomainError("need 0 <= c <= min(h, b), got b=" + std::to_string(b) +
                      " h=" + std::to_string(h) + " c=" + std::to_string(c));
  }
}

void check_empty_hand(double e)
{
  if (!(e > 0 && e < 1)) {
    throw DomainError("empty-hand probability must lie in (0,1)");
  }
}

void check_mu(double mu)
{
  if (!(mu >= 0) || !std::isfinite(mu)) {
    throw DomainError("mu must be a finite value >= 0");
  }
}

}  // namespace

Rational prob_exactly_c(int b, int h, int c, const Rational& q)
{
  check_occupancy_args(b, h, c);
  return s_n(b, q) * power(q, -static_cast<long>(b - c) * (h - c)) * s_n(h, q) /
         (s_n(c, q) * s_n(h - c, q) * s_n(b - c, q));
}

Rational pc_ratio(int b, int h, int c, const Rational& q)
{
  check_occupancy_args(b, h, c);
  if (c < 1) {
    throw DomainError("pc_ratio needs c >= 1");
  }
  return (power(q, h) - power(q, c - 1)) * (power(q, b - c + 1) - 1) /
         (power(q, c) - 1);
}

int most_likely_c(int b, int h, const Rational& q)
{
  const int top = std::min(b, h);
  int c = 0;
  while (c < top && pc_ratio(b, h, c + 1, q) > 1) {
    ++c;
  }
  return c;
}

int argmax_direct(int b, int h, const Rational& q)
{
  const int top = std::min(b, h);
  int best = 0;
  Rational best_p = prob_exactly_c(b, h, 0, q);
  for (int c = 1; c <= top; ++c) {
    Rational p = prob_exactly_c(b, h, c, q);
    if (p > best_p) {
      best = c;
      best_p = std::move(p);
    }
  }
  return best;
}

double mu_of_lambda(double empty_hand, double lambda)
{
  check_empty_hand(empty_hand);
  if (!(lambda > 0 && lambda < 1)) {
    throw DomainError("lambda must lie in (0,1)");
  }
  const double e = empty_hand;
  return lambda + (std::log1p(-e) - std::log1p(-std::pow(e, 1 - lambda))) /
                      -std::log(e);
}

double lambda_of_mu(double empty_hand, double mu)
{
  check_empty_hand(empty_hand);
  check_mu(mu);
  const double e = empty_hand;
  return mu - std::log1p(std::pow(e, 1 - mu) - e) / -std::log(e);
}

double ball_density(double empty_hand, double mu)
{
  check_empty_hand(empty_hand);
  check_mu(mu);
  const double e = empty_hand;
  // At mu = 0 the bracket is exactly zero.
  return (1 - e) / (1 + (std::pow(e, 1 - mu) - e));
}

std::vector<DensityPoint> density_curve(double empty_hand, double mu_max,
                                        double step)
{
  if (!(step > 0)) {
    throw DomainError("step must be positive");
  }
  check_mu(mu_max);
  std::vector<DensityPoint> curve;
  for (long k = 0;; ++k) {
    const double mu = static_cast<double>(k) * step;
    if (mu > mu_max * (1 + 1e-12)) {
      break;
    }
    curve.push_back({mu, ball_density(empty_hand, mu)});
  }
  return curve;
}

std::vector<EmpiricalRow> empirical_density(const EmpiricalConfig& config,
                                            ChainRng& rng)
{
  if (config.balls < 1 || config.grid_size < 1 || !(config.mu_max > 0)) {
    throw std::invalid_argument("empirical density needs b, grid size, mu_max > 0");
  }
  if (config.burnin >= config.steps) {
    throw std::invalid_argument("burn-in must be shorter than the run");
  }
  const int b = config.balls;
  const CoinConfig coin = CoinConfig::from_empty_hand(config.empty_hand, b);
  const int positions = static_cast<int>(std::ceil(config.mu_max * b));
  std::vector<std::uint64_t> hits(static_cast<size_t>(positions), 0);

  JugglingState s = JugglingState::ground(b);
  for (std::uint64_t k = 0; k < config.steps; ++k) {
    s = backward_step(s, coin, rng).state;
    if (k < config.burnin) {
      continue;
    }
    for (int pos : s.positions()) {
      if (pos >= positions) {
        break;
      }
      ++hits[static_cast<size_t>(pos)];
    }
  }

  const auto bucket_of = [&](int h) {
    return static_cast<int>(std::floor(static_cast<double>(h) / b * config.grid_size));
  };
  const int buckets = bucket_of(positions - 1) + 1;
  std::vector<double> sum(static_cast<size_t>(buckets), 0.0);
  std::vector<int> width(static_cast<size_t>(buckets), 0);
  const double samples = static_cast<double>(config.steps - config.burnin);
  for (int h = 0; h < positions; ++h) {
    const auto k = static_cast<size_t>(bucket_of(h));
    sum[k] += static_cast<double>(hits[static_cast<size_t>(h)]) / samples;
    ++width[k];
  }

  std::vector<EmpiricalRow> rows;
  for (int k = 0; k < buckets; ++k) {
    const auto i = static_cast<size_t>(k);
    if (width[i] == 0) {
      continue;
    }
    EmpiricalRow row;
    row.mu = (k + 0.5) / config.grid_size;
    row.empirical = sum[i] / width[i];
    row.predicted = ball_density(config.empty_hand, row.mu);
    row.deviation = std::abs(row.empirical - row.predicted);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace juggle

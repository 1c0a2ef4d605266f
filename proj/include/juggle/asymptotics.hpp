//
// asymptotics.hpp
//
// How many balls sit in the first h positions under the stationary law,
// exactly for finite b and in the limit b -> infinity with the empty-hand
// probability E = q^{-b} held fixed.
//
// In the limit, lambda = c/b is the fraction of balls in positions below
// mu * b, and the ball density at mu is d lambda / d mu.
//

#pragma once

#include "juggle/rational.hpp"
#include "juggle/rng.hpp"

#include <cstdint>
#include <vector>

namespace juggle {

// Probability of exactly c balls in positions [0, h).
Rational prob_exactly_c(int b, int h, int c, const Rational& q);

// prob_exactly_c(c) / prob_exactly_c(c - 1) in closed form, 1 <= c.
Rational pc_ratio(int b, int h, int c, const Rational& q);

// The c where pc_ratio drops to 1 or below. A ratio of exactly 1 keeps the
// smaller c.
int most_likely_c(int b, int h, const Rational& q);

// argmax of prob_exactly_c by direct evaluation; smallest c on ties.
int argmax_direct(int b, int h, const Rational& q);

double mu_of_lambda(double empty_hand, double lambda);
double lambda_of_mu(double empty_hand, double mu);
double ball_density(double empty_hand, double mu);

struct DensityPoint {
  double mu;
  double density;
};

// mu = 0, step, 2 step, ... <= mu_max.
std::vector<DensityPoint> density_curve(double empty_hand, double mu_max,
                                        double step);

struct EmpiricalRow {
  double mu;         // bucket midpoint
  double empirical;  // mean occupancy over the bucket's positions
  double predicted;  // ball_density at mu
  double deviation;  // |empirical - predicted|
};

struct EmpiricalConfig {
  int balls = 64;
  double empty_hand = 0.1;
  int grid_size = 64;  // buckets per unit of mu
  double mu_max = 3.0;
  std::uint64_t steps = 1000000;
  std::uint64_t burnin = 100000;
};

// Runs the basic chain at q = E^{-1/b} from the ground state. Position h
// falls in bucket floor(h / b * grid_size).
std::vector<EmpiricalRow> empirical_density(const EmpiricalConfig& config,
                                            ChainRng& rng);

}  // namespace juggle

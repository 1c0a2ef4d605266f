//
// rng.hpp
//
// The biased coin driving every backward chain, and a seedable random
// stream that flips it.
//

#pragma once

#include "juggle/rational.hpp"

#include <cstdint>
#include <random>

namespace juggle {

// A coin with p(heads) = 1/q for an exact rational q > 1.
class CoinConfig {
 public:
  explicit CoinConfig(Rational q);

  // q chosen so that q^{-balls} is (within 2^-52) the given all-heads
  // probability E.
  static CoinConfig from_empty_hand(double empty_hand, int balls);

  const Rational& q() const { return _q; }
  Rational heads() const { return Rational(1) / _q; }
  Rational tails() const { return 1 - heads(); }

  // heads is drawn iff a uniform 64-bit word u satisfies u < threshold,
  // i.e. u / 2^64 < 1/q exactly.
  std::uint64_t heads_threshold() const { return _threshold; }

 private:
  Rational _q;
  std::uint64_t _threshold;
};

class ChainRng {
 public:
  explicit ChainRng(std::uint64_t seed) : _engine(seed) {}

  bool heads(const CoinConfig& coin) { return _engine() < coin.heads_threshold(); }

  double uniform() { return std::uniform_real_distribution<double>(0, 1)(_engine); }

  std::mt19937_64& engine() { return _engine; }

 private:
  std::mt19937_64 _engine;
};

}  // namespace juggle

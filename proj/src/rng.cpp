//
// rng.cpp
//

#include "juggle/rng.hpp"

#include "juggle/errors.hpp"

#include <cmath>

namespace juggle {

CoinConfig::CoinConfig(Rational q)
    : _q(std::move(q))
{
  if (_q <= 1) {
    throw DomainError("coin parameter q must exceed 1, got " + to_string(_q));
  }
  // ceil(2^64 / q) fits in 64 bits since q > 1.
  const Integer scaled = (Integer(1) << 64) * boost::multiprecision::denominator(_q);
  const Integer& num = boost::multiprecision::numerator(_q);
  Integer threshold = scaled / num;
  if (threshold * num != scaled) {
    threshold += 1;
  }
  _threshold = static_cast<std::uint64_t>(threshold);
}

CoinConfig CoinConfig::from_empty_hand(double empty_hand, int balls)
{
  if (!(empty_hand > 0 && empty_hand < 1) || balls < 1) {
    throw DomainError("empty-hand probability must lie in (0,1) with b >= 1");
  }
  const double heads = std::pow(empty_hand, 1.0 / balls);
  return CoinConfig(Rational(1) / rational_from_double(heads));
}

}  // namespace juggle

// Copyright 2026 The PrivScore Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PRIVSCORE_CIRCUIT_FIXED_POINT_HPP_
#define PRIVSCORE_CIRCUIT_FIXED_POINT_HPP_

#include <cmath>
#include <cstdint>
#include <string>

#include "privscore/errors.hpp"

namespace privscore::circuit {

// Two's-complement fixed point on `width` bits with `frac` fractional bits.
// A real x is stored as round(x * 2^frac); bit 0 is the LSB everywhere.
struct FixedPointEncoding {
  int width = 32;
  int frac = 16;

  void validate() const {
    if (frac <= 0 || frac >= width || width > 64) {
      throw PreconditionError("fixed-point encoding requires 0 < frac < width <= 64, got width=" +
                              std::to_string(width) + " frac=" + std::to_string(frac));
    }
  }

  // Smallest representable step, 2^-frac.
  double resolution() const { return std::ldexp(1.0, -frac); }

  // Representable range is [-2^(width-1-frac), 2^(width-1-frac) - 2^-frac].
  double min_value() const { return -std::ldexp(1.0, width - 1 - frac); }
  double max_value() const { return std::ldexp(1.0, width - 1 - frac) - resolution(); }

  uint64_t mask() const {
    return width == 64 ? ~uint64_t{0} : ((uint64_t{1} << width) - 1);
  }
};

// Sign-extends the low `width` bits of v.
inline int64_t to_signed(uint64_t v, int width) {
  if (width == 64) return static_cast<int64_t>(v);
  const uint64_t sign = uint64_t{1} << (width - 1);
  v &= (uint64_t{1} << width) - 1;
  return static_cast<int64_t>((v ^ sign)) - static_cast<int64_t>(sign);
}

// round(x * 2^frac) masked to `width` bits. Throws RangeError when the
// rounded value does not fit the signed range.
inline uint64_t encode(double x, const FixedPointEncoding& enc) {
  enc.validate();
  if (!std::isfinite(x)) throw RangeError("cannot encode non-finite value");
  const long double scaled = static_cast<long double>(x) * std::ldexp(1.0L, enc.frac);
  const long double rounded = std::roundl(scaled);
  const long double lo = -std::ldexp(1.0L, enc.width - 1);
  const long double hi = std::ldexp(1.0L, enc.width - 1) - 1.0L;
  if (rounded < lo || rounded > hi) {
    throw RangeError("value " + std::to_string(x) + " outside representable range of w=" +
                     std::to_string(enc.width) + "/f=" + std::to_string(enc.frac));
  }
  const int64_t r = static_cast<int64_t>(rounded);
  return static_cast<uint64_t>(r) & enc.mask();
}

// Signed interpretation of the low `width` bits, divided by 2^frac.
inline double decode(uint64_t v, const FixedPointEncoding& enc) {
  enc.validate();
  return std::ldexp(static_cast<double>(to_signed(v, enc.width)), -enc.frac);
}

}  // namespace privscore::circuit

#endif  // PRIVSCORE_CIRCUIT_FIXED_POINT_HPP_

#pragma once

#include "signrep/rational.hpp"

namespace signrep {

// Closed rational interval [lo, hi] enclosing a real number.
struct Interval {
  Rat lo, hi;
};

// Outward-rounded enclosures with roughly `bits` bits of accuracy.
Interval exp_bounds(const Rat& x, unsigned bits = 96);
Interval ln_bounds(const Rat& x, unsigned bits = 96);   // x > 0
Interval sqrt_bounds(const Rat& x, unsigned bits = 96); // x >= 0

Interval add(const Interval& a, const Interval& b);
Interval sub(const Interval& a, const Interval& b);
Interval mul(const Interval& a, const Interval& b);
Interval div(const Interval& a, const Interval& b);  // 0 not in b
Interval neg(const Interval& a);
Interval exp_of(const Interval& a, unsigned bits = 96);

}  // namespace signrep

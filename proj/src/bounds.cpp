#include "signrep/bounds.hpp"

#include <algorithm>

#include "signrep/errors.hpp"

namespace signrep {

namespace {

Rat round_down(const Rat& x, unsigned bits) {
  Int s = ipow(2, bits);
  return make_rat(floor_rat(Rat(x * Rat(s))), s);
}

Rat round_up(const Rat& x, unsigned bits) {
  Int s = ipow(2, bits);
  return make_rat(ceil_rat(Rat(x * Rat(s))), s);
}

Interval tidy(const Interval& a, unsigned bits) { return {round_down(a.lo, bits), round_up(a.hi, bits)}; }

// exp(y) for |y| <= 1/2 by Taylor series; remainder <= 2|y|^(N+1)/(N+1)!
Interval exp_small(const Rat& y, unsigned bits) {
  Rat ay = abs(y);
  Rat term = 1, sum = 1;
  Rat eps = pow2(-static_cast<long>(bits) - 8);
  for (unsigned n = 1;; ++n) {
    term = term * y / n;
    sum += term;
    Rat tail = abs(term) * ay / (n + 1) * 2;
    if (tail < eps) return tidy({sum - tail, sum + tail}, bits + 16);
  }
}

}  // namespace

Interval add(const Interval& a, const Interval& b) { return {a.lo + b.lo, a.hi + b.hi}; }
Interval sub(const Interval& a, const Interval& b) { return {a.lo - b.hi, a.hi - b.lo}; }
Interval neg(const Interval& a) { return {-a.hi, -a.lo}; }

Interval mul(const Interval& a, const Interval& b) {
  Rat c[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  return {*std::min_element(c, c + 4), *std::max_element(c, c + 4)};
}

Interval div(const Interval& a, const Interval& b) {
  require(b.lo > 0 || b.hi < 0, "interval division by an interval containing 0");
  return mul(a, {1 / b.hi, 1 / b.lo});
}

Interval exp_bounds(const Rat& x, unsigned bits) {
  // exp(x) = exp(x / 2^r)^(2^r)
  unsigned r = 0;
  Rat y = x;
  while (abs(y) > Rat(1, 2)) {
    y /= 2;
    ++r;
  }
  unsigned work = bits + 2 * r + 16;
  Interval e = exp_small(y, work);
  for (unsigned i = 0; i < r; ++i) {
    e = {e.lo * e.lo, e.hi * e.hi};
    e = tidy(e, work);
  }
  return e;
}

Interval exp_of(const Interval& a, unsigned bits) {
  return {exp_bounds(a.lo, bits).lo, exp_bounds(a.hi, bits).hi};
}

namespace {

// 2*atanh(y) for 0 <= y <= 1/2; remainder <= 2 y^(2N+3) / ((2N+3)(1-y^2))
Interval two_atanh(const Rat& y, unsigned bits) {
  Rat y2 = y * y;
  Rat pw = y, sum = 0;
  Rat eps = pow2(-static_cast<long>(bits) - 8);
  for (unsigned j = 0;; ++j) {
    sum += pw / (2 * j + 1);
    pw *= y2;
    Rat tail = pw / (2 * j + 3) / (1 - y2);
    if (tail < eps) return tidy({2 * sum, 2 * (sum + tail)}, bits + 16);
  }
}

}  // namespace

Interval ln_bounds(const Rat& x, unsigned bits) {
  require(x > 0, "ln of non-positive");
  // x = 2^k m with m in [2/3, 4/3]
  long k = 0;
  Rat m = x;
  while (m > Rat(4, 3)) {
    m /= 2;
    ++k;
  }
  while (m < Rat(2, 3)) {
    m *= 2;
    --k;
  }
  Interval ln2 = two_atanh(Rat(1, 3), bits + 16);
  Rat y = (m - 1) / (m + 1);
  Interval lm = two_atanh(abs(y), bits + 16);
  if (y < 0) lm = neg(lm);
  Interval kl = mul({Rat(k), Rat(k)}, ln2);
  return tidy(add(kl, lm), bits + 8);
}

Interval sqrt_bounds(const Rat& x, unsigned bits) { return {root_floor(x, 2, bits), root_ceil(x, 2, bits)}; }

}  // namespace signrep

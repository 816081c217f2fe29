#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace signrep {

using Int = mpz_class;
using Rat = mpq_class;

// Always "num/den", including integers ("3/1").
std::string to_string(const Rat& q);
// Accepts "a/b", "a" and optional leading sign.
Rat parse_rat(std::string_view s);

Rat make_rat(long num, long den = 1);
Rat make_rat(const Int& num, const Int& den);

int sgn(const Rat& q);
Rat rpow(const Rat& base, unsigned e);
Int ipow(const Int& base, unsigned e);
Int binomial(long n, long k);
Rat pow2(long e);

// floor(log2 n) for n >= 1
unsigned floor_log2(const Int& n);
// ceil(log2 n) for n >= 1
unsigned ceil_log2(const Int& n);

// Dyadic surrogates of x^(1/k), x >= 0. Exact whenever the root is itself
// a rational number; otherwise floor/ceil at the given number of fraction bits.
Rat root_floor(const Rat& x, unsigned k, unsigned bits = 64);
Rat root_ceil(const Rat& x, unsigned k, unsigned bits = 64);
// x^(num/den) via root of x^num; x > 0, den > 0, num may be negative.
Rat rational_power_floor(const Rat& x, long num, unsigned den, unsigned bits = 64);
Rat rational_power_ceil(const Rat& x, long num, unsigned den, unsigned bits = 64);
// Nearest of the two, used when the surrogate only needs to be close.
Rat rational_power_near(const Rat& x, long num, unsigned den, unsigned bits = 64);

// Exact k-th root if x is a perfect k-th power of a rational.
bool exact_root(const Rat& x, unsigned k, Rat& out);

// floor(x^(1/k)) for integers
Int iroot_floor(const Int& x, unsigned k);

Int floor_rat(const Rat& q);
Int ceil_rat(const Rat& q);

}  // namespace signrep

#include "signrep/rational.hpp"

#include "signrep/errors.hpp"

namespace signrep {

std::string to_string(const Rat& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rat parse_rat(std::string_view s) {
  std::string t(s);
  while (!t.empty() && (t.back() == ' ' || t.back() == '\n')) t.pop_back();
  while (!t.empty() && t.front() == ' ') t.erase(t.begin());
  if (t.empty()) throw PreconditionError("empty rational");
  if (t.front() == '+') t.erase(t.begin());
  auto slash = t.find('/');
  auto valid_int = [](const std::string& u) {
    if (u.empty()) return false;
    std::size_t i = (u[0] == '-') ? 1 : 0;
    if (i == u.size()) return false;
    for (; i < u.size(); ++i)
      if (u[i] < '0' || u[i] > '9') return false;
    return true;
  };
  Int num, den = 1;
  if (slash == std::string::npos) {
    if (!valid_int(t)) throw PreconditionError("malformed rational: " + t);
    num = Int(t);
  } else {
    std::string a = t.substr(0, slash), b = t.substr(slash + 1);
    if (!valid_int(a) || !valid_int(b) || b[0] == '-')
      throw PreconditionError("malformed rational: " + t);
    num = Int(a);
    den = Int(b);
    if (den == 0) throw PreconditionError("zero denominator: " + t);
  }
  Rat q(num, den);
  q.canonicalize();
  return q;
}

Rat make_rat(long num, long den) {
  if (den == 0) throw PreconditionError("zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw PreconditionError("zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

int sgn(const Rat& q) { return ::sgn(q); }

Rat rpow(const Rat& base, unsigned e) {
  Rat r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), e);
  r.canonicalize();
  return r;
}

Int ipow(const Int& base, unsigned e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

Int binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Rat pow2(long e) {
  Int p;
  unsigned long a = static_cast<unsigned long>(e < 0 ? -e : e);
  mpz_ui_pow_ui(p.get_mpz_t(), 2, a);
  if (e >= 0) return Rat(p);
  return make_rat(Int(1), p);
}

unsigned floor_log2(const Int& n) {
  require(n >= 1, "floor_log2 of non-positive");
  return static_cast<unsigned>(mpz_sizeinbase(n.get_mpz_t(), 2) - 1);
}

unsigned ceil_log2(const Int& n) {
  require(n >= 1, "ceil_log2 of non-positive");
  unsigned f = floor_log2(n);
  Int p = ipow(2, f);
  return p == n ? f : f + 1;
}

Int iroot_floor(const Int& x, unsigned k) {
  require(x >= 0 && k >= 1, "iroot_floor domain");
  Int r;
  mpz_root(r.get_mpz_t(), x.get_mpz_t(), k);
  return r;
}

Int floor_rat(const Rat& q) {
  Int r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Int ceil_rat(const Rat& q) {
  Int r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

bool exact_root(const Rat& x, unsigned k, Rat& out) {
  if (x < 0) return false;
  Int a, b;
  if (!mpz_root(a.get_mpz_t(), x.get_num_mpz_t(), k)) return false;
  if (!mpz_root(b.get_mpz_t(), x.get_den_mpz_t(), k)) return false;
  out = make_rat(a, b);
  return true;
}

namespace {

// floor(x^(1/k) * 2^bits)
Int scaled_root_floor(const Rat& x, unsigned k, unsigned bits) {
  Int scale = ipow(2, bits * k);
  Int q = floor_rat(Rat(x * Rat(scale)));
  return iroot_floor(q, k);
}

}  // namespace

Rat root_floor(const Rat& x, unsigned k, unsigned bits) {
  require(x >= 0 && k >= 1, "root of negative number");
  Rat e;
  if (exact_root(x, k, e)) return e;
  return make_rat(scaled_root_floor(x, k, bits), ipow(2, bits));
}

Rat root_ceil(const Rat& x, unsigned k, unsigned bits) {
  require(x >= 0 && k >= 1, "root of negative number");
  Rat e;
  if (exact_root(x, k, e)) return e;
  return make_rat(Int(scaled_root_floor(x, k, bits) + 1), ipow(2, bits));
}

namespace {
Rat signed_power(const Rat& x, long num) {
  Rat p = rpow(x, static_cast<unsigned>(num < 0 ? -num : num));
  if (num < 0) p = 1 / p;
  return p;
}
}  // namespace

Rat rational_power_floor(const Rat& x, long num, unsigned den, unsigned bits) {
  require(x > 0 && den >= 1, "rational power domain");
  return root_floor(signed_power(x, num), den, bits);
}

Rat rational_power_ceil(const Rat& x, long num, unsigned den, unsigned bits) {
  require(x > 0 && den >= 1, "rational power domain");
  return root_ceil(signed_power(x, num), den, bits);
}

Rat rational_power_near(const Rat& x, long num, unsigned den, unsigned bits) {
  // round-to-nearest at the given precision
  Rat lo = rational_power_floor(x, num, den, bits + 1);
  Rat scaled = lo * Rat(ipow(2, bits));
  Int r = floor_rat(Rat(scaled + Rat(1, 2)));
  Rat e;
  if (exact_root(signed_power(x, num), den, e)) return e;
  return make_rat(r, ipow(2, bits));
}

}  // namespace signrep

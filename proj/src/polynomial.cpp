#include "signrep/polynomial.hpp"

#include <sstream>

#include "signrep/errors.hpp"

namespace signrep {

int total_degree(const Exponent& e) {
  int d = 0;
  for (unsigned a : e) d += static_cast<int>(a);
  return d;
}

SparsePolynomial SparsePolynomial::constant(std::size_t num_vars, const Rat& c) {
  SparsePolynomial p(num_vars);
  p.add_term(Exponent(num_vars, 0), c);
  return p;
}

SparsePolynomial SparsePolynomial::variable(std::size_t num_vars, std::size_t i) {
  require(i < num_vars, "variable index out of range");
  Exponent e(num_vars, 0);
  e[i] = 1;
  SparsePolynomial p(num_vars);
  p.add_term(e, 1);
  return p;
}

SparsePolynomial SparsePolynomial::monomial(const Exponent& e, const Rat& c) {
  SparsePolynomial p(e.size());
  p.add_term(e, c);
  return p;
}

int SparsePolynomial::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
  return d;
}

Rat SparsePolynomial::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rat(0) : it->second;
}

void SparsePolynomial::add_term(const Exponent& e, const Rat& c) {
  require(e.size() == n_, "exponent arity mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rat SparsePolynomial::evaluate(std::span<const Rat> x) const {
  require(x.size() == n_, "evaluation point has wrong dimension");
  // cache powers per variable
  std::vector<std::vector<Rat>> pw(n_);
  Rat sum = 0, t;
  for (const auto& [e, c] : terms_) {
    t = c;
    for (std::size_t i = 0; i < n_; ++i) {
      unsigned a = e[i];
      if (a == 0) continue;
      auto& v = pw[i];
      if (v.empty()) v.push_back(1);
      while (v.size() <= a) v.push_back(v.back() * x[i]);
      t *= v[a];
    }
    sum += t;
  }
  return sum;
}

SparsePolynomial& SparsePolynomial::operator+=(const SparsePolynomial& o) {
  require(o.n_ == n_, "variable count mismatch");
  if (&o == this) return *this *= Rat(2);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

SparsePolynomial& SparsePolynomial::operator-=(const SparsePolynomial& o) {
  require(o.n_ == n_, "variable count mismatch");
  if (&o == this) {
    terms_.clear();
    return *this;
  }
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

SparsePolynomial& SparsePolynomial::operator*=(const Rat& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

SparsePolynomial operator+(SparsePolynomial a, const SparsePolynomial& b) { return a += b; }
SparsePolynomial operator-(SparsePolynomial a, const SparsePolynomial& b) { return a -= b; }
SparsePolynomial operator*(SparsePolynomial a, const Rat& c) { return a *= c; }

SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b) {
  require(a.num_vars() == b.num_vars(), "variable count mismatch");
  std::map<Exponent, Rat> acc;
  Exponent e(a.num_vars());
  for (const auto& [ea, ca] : a.terms())
    for (const auto& [eb, cb] : b.terms()) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      acc[e] += ca * cb;
    }
  SparsePolynomial r(a.num_vars());
  for (const auto& [ex, c] : acc) r.add_term(ex, c);
  return r;
}

SparsePolynomial pow(const SparsePolynomial& a, unsigned e) {
  SparsePolynomial r = SparsePolynomial::constant(a.num_vars(), 1);
  SparsePolynomial base = a;
  while (e) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return r;
}

SparsePolynomial SparsePolynomial::substitute(const std::vector<SparsePolynomial>& images) const {
  require(images.size() == n_, "substitution needs one image per variable");
  std::size_t m = images.empty() ? 0 : images[0].num_vars();
  for (const auto& im : images) require(im.num_vars() == m, "substitution images disagree on arity");
  std::vector<std::vector<SparsePolynomial>> pw(n_);
  SparsePolynomial out(m);
  for (const auto& [e, c] : terms_) {
    SparsePolynomial t = SparsePolynomial::constant(m, c);
    for (std::size_t i = 0; i < n_; ++i) {
      if (e[i] == 0) continue;
      auto& v = pw[i];
      if (v.empty()) v.push_back(SparsePolynomial::constant(m, 1));
      while (v.size() <= e[i]) v.push_back(v.back() * images[i]);
      t = t * v[e[i]];
    }
    out += t;
  }
  return out;
}

SparsePolynomial SparsePolynomial::embed(std::size_t new_num_vars, std::size_t offset) const {
  require(offset + n_ <= new_num_vars, "embedding does not fit");
  SparsePolynomial out(new_num_vars);
  Exponent f(new_num_vars, 0);
  for (const auto& [e, c] : terms_) {
    std::fill(f.begin(), f.end(), 0);
    for (std::size_t i = 0; i < n_; ++i) f[offset + i] = e[i];
    out.add_term(f, c);
  }
  return out;
}

SparsePolynomial SparsePolynomial::reduce_pm1() const {
  SparsePolynomial out(n_);
  for (const auto& [e, c] : terms_) {
    Exponent f = e;
    for (auto& a : f) a &= 1u;
    out.add_term(f, c);
  }
  return out;
}

SparsePolynomial SparsePolynomial::reduce_01() const {
  SparsePolynomial out(n_);
  for (const auto& [e, c] : terms_) {
    Exponent f = e;
    for (auto& a : f) a = a ? 1u : 0u;
    out.add_term(f, c);
  }
  return out;
}

std::string SparsePolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << signrep::to_string(c) << ")";
    for (std::size_t i = 0; i < n_; ++i) {
      if (e[i] == 0) continue;
      os << "*x" << (i + 1);
      if (e[i] > 1) os << "^" << e[i];
    }
  }
  return os.str();
}

}  // namespace signrep

#include "signrep/univariate.hpp"

#include <sstream>

#include "signrep/errors.hpp"

namespace signrep {

UnivariatePolynomial::UnivariatePolynomial(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

void UnivariatePolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UnivariatePolynomial UnivariatePolynomial::constant(const Rat& c) { return UnivariatePolynomial({c}); }
UnivariatePolynomial UnivariatePolynomial::identity() { return UnivariatePolynomial({Rat(0), Rat(1)}); }

UnivariatePolynomial UnivariatePolynomial::from_roots(const std::vector<Rat>& roots) {
  UnivariatePolynomial p = constant(1);
  for (const Rat& r : roots) p = p * UnivariatePolynomial({Rat(-r), Rat(1)});
  return p;
}

Rat UnivariatePolynomial::coefficient(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
  return c_[i];
}

Rat UnivariatePolynomial::operator()(const Rat& t) const {
  Rat acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

UnivariatePolynomial UnivariatePolynomial::reflect() const {
  std::vector<Rat> c = c_;
  for (std::size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
  return UnivariatePolynomial(std::move(c));
}

UnivariatePolynomial UnivariatePolynomial::affine(const Rat& a, const Rat& b) const {
  UnivariatePolynomial lin({b, a});
  UnivariatePolynomial acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * lin + constant(*it);
  return acc;
}

SparsePolynomial UnivariatePolynomial::compose(const SparsePolynomial& image) const {
  std::size_t m = image.num_vars();
  SparsePolynomial acc(m);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * image + SparsePolynomial::constant(m, *it);
  return acc;
}

std::string UnivariatePolynomial::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << signrep::to_string(c_[i]) << ")";
    if (i > 0) os << "*t";
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

UnivariatePolynomial operator+(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
  std::vector<Rat> c(std::max(a.coeffs().size(), b.coeffs().size()));
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) c[i] += a.coeffs()[i];
  for (std::size_t i = 0; i < b.coeffs().size(); ++i) c[i] += b.coeffs()[i];
  return UnivariatePolynomial(std::move(c));
}

UnivariatePolynomial operator-(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
  return a + b * Rat(-1);
}

UnivariatePolynomial operator*(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rat> c(a.coeffs().size() + b.coeffs().size() - 1);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i)
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) c[i + j] += a.coeffs()[i] * b.coeffs()[j];
  return UnivariatePolynomial(std::move(c));
}

UnivariatePolynomial operator*(const UnivariatePolynomial& a, const Rat& s) {
  std::vector<Rat> c = a.coeffs();
  for (auto& v : c) v *= s;
  return UnivariatePolynomial(std::move(c));
}

UnivariatePolynomial interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys) {
  require(xs.size() == ys.size(), "interpolation sizes differ");
  std::size_t n = xs.size();
  // Newton divided differences
  std::vector<Rat> dd = ys;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = n - 1; i >= j; --i) {
      Rat den = xs[i] - xs[i - j];
      require(den != 0, "interpolation nodes must be distinct");
      dd[i] = (dd[i] - dd[i - 1]) / den;
      if (i == j) break;
    }
  UnivariatePolynomial acc;
  for (std::size_t k = n; k-- > 0;) {
    acc = acc * UnivariatePolynomial({Rat(-xs[k]), Rat(1)}) + UnivariatePolynomial::constant(dd[k]);
  }
  return acc;
}

Rat UnivariateRationalFunction::operator()(const Rat& t) const {
  Rat d = den(t);
  if (d == 0) throw VerificationError("rational function has a pole at " + signrep::to_string(t));
  return num(t) / d;
}

bool UnivariateRationalFunction::denominator_positive_on(const std::vector<Rat>& pts) const {
  for (const Rat& t : pts)
    if (den(t) <= 0) return false;
  return true;
}

Rat comb_sum(int n, const UnivariatePolynomial& p) {
  Rat s = 0;
  for (int i = 0; i <= n; ++i) {
    Rat term = Rat(binomial(n, i)) * p(Rat(i));
    if (i % 2) s -= term;
    else s += term;
  }
  return s;
}

bool check_comb_identity(int n, const UnivariatePolynomial& p) {
  require(n >= 1, "n must be positive");
  require(p.degree() <= n - 1, "polynomial degree must be at most n-1");
  return comb_sum(n, p) == 0;
}

}  // namespace signrep

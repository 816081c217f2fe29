#pragma once

#include <string>
#include <vector>

#include "signrep/polynomial.hpp"
#include "signrep/rational.hpp"

namespace signrep {

// Dense univariate polynomial; coeffs[i] multiplies t^i, no trailing zeros.
class UnivariatePolynomial {
 public:
  UnivariatePolynomial() = default;
  explicit UnivariatePolynomial(std::vector<Rat> coeffs);
  static UnivariatePolynomial constant(const Rat& c);
  static UnivariatePolynomial identity();  // t
  // prod (t - r)
  static UnivariatePolynomial from_roots(const std::vector<Rat>& roots);

  const std::vector<Rat>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Rat coefficient(int i) const;

  Rat operator()(const Rat& t) const;

  UnivariatePolynomial reflect() const;  // p(-t)
  // p(a t + b)
  UnivariatePolynomial affine(const Rat& a, const Rat& b) const;
  // p(image) as a multivariate polynomial
  SparsePolynomial compose(const SparsePolynomial& image) const;

  std::string to_string() const;

  friend bool operator==(const UnivariatePolynomial& a, const UnivariatePolynomial& b) { return a.c_ == b.c_; }

 private:
  void trim();
  std::vector<Rat> c_;
};

UnivariatePolynomial operator+(const UnivariatePolynomial& a, const UnivariatePolynomial& b);
UnivariatePolynomial operator-(const UnivariatePolynomial& a, const UnivariatePolynomial& b);
UnivariatePolynomial operator*(const UnivariatePolynomial& a, const UnivariatePolynomial& b);
UnivariatePolynomial operator*(const UnivariatePolynomial& a, const Rat& c);

// Lowest-degree polynomial through (xs[i], ys[i]); xs distinct.
UnivariatePolynomial interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys);

// num/den; `positive_on` lists points where the denominator was checked positive.
struct UnivariateRationalFunction {
  UnivariatePolynomial num;
  UnivariatePolynomial den;
  int degree() const { return std::max(num.degree(), den.degree()); }
  Rat operator()(const Rat& t) const;
  bool denominator_positive_on(const std::vector<Rat>& pts) const;
};

// sum_{i=0}^n C(n,i) (-1)^i p(i) == 0; requires deg p <= n - 1.
bool check_comb_identity(int n, const UnivariatePolynomial& p);
Rat comb_sum(int n, const UnivariatePolynomial& p);

}  // namespace signrep

#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "signrep/rational.hpp"

namespace signrep {

using Exponent = std::vector<unsigned>;

int total_degree(const Exponent& e);

// Sparse multivariate polynomial with exact rational coefficients.
// Zero coefficients are never stored; the zero polynomial has degree -1.
class SparsePolynomial {
 public:
  explicit SparsePolynomial(std::size_t num_vars = 0) : n_(num_vars) {}

  static SparsePolynomial constant(std::size_t num_vars, const Rat& c);
  static SparsePolynomial variable(std::size_t num_vars, std::size_t i);
  static SparsePolynomial monomial(const Exponent& e, const Rat& c = 1);

  std::size_t num_vars() const { return n_; }
  const std::map<Exponent, Rat>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;
  Rat coefficient(const Exponent& e) const;

  void add_term(const Exponent& e, const Rat& c);

  Rat evaluate(std::span<const Rat> x) const;

  SparsePolynomial& operator+=(const SparsePolynomial& o);
  SparsePolynomial& operator-=(const SparsePolynomial& o);
  SparsePolynomial& operator*=(const Rat& c);

  // Replace variable i by images[i]; all images share one variable count.
  SparsePolynomial substitute(const std::vector<SparsePolynomial>& images) const;
  // Same polynomial viewed in a larger variable space, variable i -> offset+i.
  SparsePolynomial embed(std::size_t new_num_vars, std::size_t offset) const;
  // Reductions valid on {-1,1}^n (x^2 = 1) and {0,1}^n (x^2 = x).
  SparsePolynomial reduce_pm1() const;
  SparsePolynomial reduce_01() const;

  std::string to_string() const;

  friend bool operator==(const SparsePolynomial& a, const SparsePolynomial& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

 private:
  std::size_t n_;
  std::map<Exponent, Rat> terms_;
};

SparsePolynomial operator+(SparsePolynomial a, const SparsePolynomial& b);
SparsePolynomial operator-(SparsePolynomial a, const SparsePolynomial& b);
SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b);
SparsePolynomial operator*(SparsePolynomial a, const Rat& c);
SparsePolynomial pow(const SparsePolynomial& a, unsigned e);

inline Rat eval_poly(const SparsePolynomial& p, std::span<const Rat> x) { return p.evaluate(x); }

}  // namespace signrep

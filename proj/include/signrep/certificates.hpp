#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "signrep/boolfun.hpp"
#include "signrep/bounds.hpp"
#include "signrep/degrees.hpp"
#include "signrep/lp.hpp"
#include "signrep/rational_approx.hpp"
#include "signrep/univariate.hpp"

namespace signrep {

// lambda0(t) = 16^-m C(4m+1, 2m+2t), lambda1(t) = 16^-m C(4m+1, 2m+2t+1)
// on t = -m..m (index t + m); alphas[d] = E_lambda0[(2t)^d], d = 0..4m.
struct MomentMatchedPair {
  int m = 0;
  std::vector<Rat> lambda0, lambda1;
  std::vector<Rat> alphas;
};
MomentMatchedPair moment_matched_pair(int m);
// E_lambda0[(2t)^d] - E_lambda1[(2t+1)^d]
Rat moment_gap(const MomentMatchedPair& mm, int d);

// mu_b = lambda_{b_1} x ... x lambda_{b_N}
struct ProductDistribution {
  std::vector<int> b;
  MomentMatchedPair pair;
  // E[(2v + b)^d], one entry per component
  std::vector<Rat> moments(int d) const;
  // all atoms (v, probability); throws ResourceError above the cap
  std::vector<std::pair<std::vector<long>, Rat>> atoms(std::size_t cap = std::size_t(1) << 20) const;
};
ProductDistribution mu_b(const std::vector<int>& b, int m);

// The coupling x_1..x_{n+1} with sum 2^(i-1) x_i = z componentwise. The
// components are independent chains, so each is materialized separately.
struct HalfspaceCoupling {
  int n = 0;
  std::vector<long> z;  // (-2^n, ..., -1, 1, ..., 2^n)
  MomentMatchedPair pair;
  // per component: atoms (x_1..x_{n+1}, probability)
  std::vector<std::vector<std::pair<std::vector<long>, Rat>>> components;
};
HalfspaceCoupling halfspace_moment_coupling(int n);
// sum 2^(i-1) x_i = z on every atom and |x_i| <= 3n+1
bool coupling_support_ok(const HalfspaceCoupling& c);
// E[prod_{i<=n} x_i^{d_i}] per component
std::vector<Rat> coupling_moment(const HalfspaceCoupling& c, const std::vector<unsigned>& d);
// E[p(x_1..x_{n+1})] per component
std::vector<Rat> coupling_expectation(const HalfspaceCoupling& c, const SparsePolynomial& p);

// q with E[p(x)] = q(z), computed symbolically from the moments and
// cross-checked against the coupling on every component.
UnivariatePolynomial degree_nonincreasing_map(const SparsePolynomial& p, int n);

struct SignPatternCert {
  int n = 0;
  BooleanFunction g;  // (-1)^i on A_i, (-1)^(i+1) on -A_i
  int degree = 0;     // 2n
  std::vector<Rat> farkas;  // multipliers of threshold_lp(g, 2n)
  DualWitness gordan;
  std::optional<SparsePolynomial> rep_above;  // sign-representation at 2n+1
};
SignPatternCert sign_pattern_infeasible(int n);

struct RationalLowerBoundCert {
  std::vector<Point> S;
  std::vector<Point> points;  // S followed by -S
  std::vector<Rat> psi;       // aligned with points
  int d = 0;
  Rat delta;          // min over S of psi(x)/|psi(-x)|, capped at 1
  Rat implied_bound;  // 2 delta / (1 + delta)
};
// psi > 0 on S, psi(x) >= delta |psi(-x)|, orthogonal to degree <= d.
WitnessCheck verify_lower_cert(const RationalLowerBoundCert& c);
// f = +1 on S, -1 on -S
BooleanFunction cert_function(const RationalLowerBoundCert& c);

struct HalfspaceCriterion {
  SignPatternCert pattern;
  RationalLowerBoundCert cert;
  Rat sqrt2;          // surrogate used in p
  Interval floor;     // enclosure of exp(-9 sqrt 2)
  bool floor_holds = false;
};
HalfspaceCriterion halfspace_criterion_cert(int n, unsigned bits = 64);

struct MajCriterionInput {
  std::vector<long> S;
  UnivariatePolynomial r;
  std::string preset;
  std::optional<Interval> floor;  // closed-form floor for delta, when the preset has one
};
MajCriterionInput maj_small_degree_preset(long n, int d, unsigned bits = 64);
MajCriterionInput maj_high_degree_preset(long n, int d, unsigned bits = 64);
MajCriterionInput maj_near_linear_preset(long n, int d);
// whichever preset applies to (n, d), if any
std::optional<MajCriterionInput> maj_preset(long n, int d, unsigned bits = 64);
RationalLowerBoundCert maj_criterion_cert(long n, int d, const std::vector<long>& S, const UnivariatePolynomial& r);

struct MajTableRow {
  long n = 0;
  int d = 0;
  std::optional<Rat> criterion_lower;
  std::string criterion_method;
  ErrorBracket bracket;
  Rat construction_upper;
  std::string construction_method;
  bool sandwich = false;
};
std::vector<MajTableRow> maj_error_table(long n, const std::vector<int>& ds, const Rat& precision);
std::string maj_table_csv(const std::vector<MajTableRow>& rows);

}  // namespace signrep

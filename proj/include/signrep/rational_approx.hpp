#pragma once

#include <optional>
#include <string>
#include <vector>

#include "signrep/bounds.hpp"
#include "signrep/boolfun.hpp"
#include "signrep/lp.hpp"
#include "signrep/polynomial.hpp"
#include "signrep/univariate.hpp"

namespace signrep {

// p/q on the domain of some f; q > 0 on the domain.
struct RationalApproximant {
  SparsePolynomial numerator;
  SparsePolynomial denominator;
  int degree = 0;
  Rat verified_error = 0;
  bool denominator_positive = false;
  // Amount by which verified_error may exceed the stated irrational bound
  // because of dyadic surrogates (0 when the bound was certified exactly).
  Rat bound_slack = 0;
};

// max |f - p/q| over the domain, exactly. Throws VerificationError if q <= 0 somewhere.
Rat approximant_error(const BooleanFunction& f, const SparsePolynomial& p, const SparsePolynomial& q);
RationalApproximant make_approximant(const BooleanFunction& f, SparsePolynomial p, SparsePolynomial q);
// Re-evaluates the approximant on f and compares with the recorded error.
bool verify_approximant(const BooleanFunction& f, const RationalApproximant& a);

// Univariate approximant of sign(t) on a finite grid of nonzero rationals.
struct UnivariateApproximant {
  UnivariateRationalFunction r;
  std::vector<Rat> grid;
  Rat verified_error = 0;
  Rat bound_slack = 0;
  std::string method;
};

std::vector<Rat> symmetric_grid(long n);  // {+-1, ..., +-n}
Rat sign_error_on_grid(const UnivariateRationalFunction& r, const std::vector<Rat>& grid);

// Newman's rational function of degree k for sign(t) on 1 <= |t| <= N.
struct NewmanResult {
  UnivariateApproximant approx;
  Rat N;
  int k = 0;
  std::vector<Rat> roots;  // surrogates of N^((2i-1)/(2k))
  Rat scale;               // surrogate of N^(-1/(2k))
  bool bound_certified = false;  // error <= 1 - N^(-1/k) exactly
};
NewmanResult newman(const Rat& N, int k, unsigned bits = 64, std::optional<std::vector<Rat>> grid = std::nullopt);
// Largest violation of p(t) >= ((a+1)/(a-1)) |p(-t)| on t = 1..floor(N), a = N^(1/(2k)).
Rat newman_balance_slack(const NewmanResult& nr);

// S(A/(1-eps)) with S = newman((1+eps)/(1-eps), k); identity at eps = 0.
RationalApproximant error_boost(const BooleanFunction& f, const RationalApproximant& A, int k, unsigned bits = 64);
// (4s/(1+s)) A / (A^2 + 1 - eps^2), s = sqrt(1 - eps^2); error (eps/(1+s))^2.
RationalApproximant accuracy_boost(const BooleanFunction& f, const RationalApproximant& A, unsigned bits = 64);

// Bracket [lower, upper] around R+(f, d).
struct ErrorBracket {
  int degree = 0;
  Rat lower = 0, upper = 1;
  std::string lower_method = "trivial";
  Rat lower_eps = 0;
  std::vector<Rat> lower_farkas;  // multipliers of bracket_lp(f, d, lower_eps)
  std::string upper_method = "zero";
  RationalApproximant upper_approximant;
  int lp_solves = 0;
};

struct BracketHints {
  std::optional<Rat> known_lower;  // a certified lower bound on R+(f,d)
  std::string known_lower_method;
  std::optional<RationalApproximant> known_upper;  // verified on f, degree <= d
  std::string known_upper_method;
};

// Feasibility of (1-eps) q <= f p <= (1+eps) q, q >= 1 with deg p, q <= d.
LinearProgram bracket_lp(const BooleanFunction& f, int d, const Rat& eps);
ErrorBracket rational_error_bracket(const BooleanFunction& f, int d, const Rat& precision,
                                    const BracketHints& hints = {}, const SimplexOptions& opt = {});
bool verify_bracket(const BooleanFunction& f, const ErrorBracket& b);

// (1 - M sum x) / (1 + M sum x) for OR_n on {0,1}^n.
RationalApproximant or_family_approximant(std::size_t n, const Rat& M);
// (1 + sum (-M)^i x_i) / (1 + sum M^i x_i) for ODD-MAX-BIT on {0,1}^n.
RationalApproximant odd_max_bit_approximant(std::size_t n, const Rat& M);

// Automaton deciding sign(1 + sum_{i=1}^n 2^i z_i) over {0,+-1,+-2}, reading
// z_n, ..., z_1 and a trailing 0. States: 0 start, 1 and 2 the two other
// undecided states (running value +1 / -1), 3 accept(+1), 4 reject(-1).
int dfa_step(int state, int digit);
int dfa_run(const std::vector<int>& z);  // z[0] = z_1
// alpha(z_{i+2}, z_{i+1}, z_i) in {0, +-1}: the sign emitted when reading z_i.
int dfa_alpha(int a, int b, int c);

struct DfaApproximant {
  RationalApproximant approx;
  SparsePolynomial alpha_poly;      // interpolant of alpha on {0,+-1,+-2}^3
  SparsePolynomial abs_alpha_poly;  // interpolant of |alpha|
  Rat sign_threshold;               // A_M is sign-correct for every M >= this
};
DfaApproximant dfa_halfspace_approximant(std::size_t n, const Rat& M);

struct HalfspaceZeroError {
  RationalApproximant approx;
  int delta = 0;                              // ceil(log2 k)
  std::vector<std::vector<SparsePolynomial>> digits;  // z_{l,j} per block l
  int digit_degree = 0;
  long degree_bound = 0;  // 64 k delta + 1
};
HalfspaceZeroError canonical_halfspace_zero_error(std::size_t n, std::size_t k, const Rat& M);

// Majority constructions on {+-1,...,+-n}.
UnivariateApproximant maj_exact_interpolant(long n);
UnivariateApproximant maj_univariate_upper(long n, int d, unsigned bits = 64);
// Lift a sign approximant on {+-1..+-ceil(n/2)} to MAJ_n; error <= err + slack.
RationalApproximant maj_from_univariate(const UnivariateApproximant& A, std::size_t n, const Rat& slack);
// Symmetrize an approximant of MAJ_n into one for sign on {+-1..+-floor(n/2)}.
UnivariateApproximant univariate_from_maj(const RationalApproximant& B, std::size_t n);
// sign(t) on a grid as a BooleanFunction
BooleanFunction sign_function(const std::vector<Rat>& grid);
RationalApproximant to_multivariate(const UnivariateApproximant& u);

// Numeric inequality checks. Each returns the exact left side and an enclosure
// of the right side; `holds` is decided exactly from them.
struct LemmaCheck {
  Rat lhs;
  Interval rhs;
  bool holds = false;
};
// prod_{i=1}^n (D^i+1)/(D^i-1) > exp(2 (D^n - 1) / (D^n (D - 1)))
LemmaCheck newman_product_check(const Rat& D, int n);
// prod_{i>=1} (D^i+1)/(D^i-1) < exp(4/(D-1)); lhs is an upper bound of the product
LemmaCheck infinite_product_check(const Rat& D, int terms = 64);
// p(t) = prod_{i=1}^n (t - i - 1/2): max_{t=1..n+1} |p(-t)/p(t)| and its closed form.
struct BinomialRatio {
  Rat max_ratio;
  bool closed_form_matches = false;
};
BinomialRatio binomial_ratio(int n);
// min_j |p(floor(d D^j)) / p(-floor(d D^j))| > exp(-4 ln(3d)/ln(n/d) - 8/(sqrt D - 1))
LemmaCheck floors_check(long n, long d, unsigned bits = 64);

}  // namespace signrep

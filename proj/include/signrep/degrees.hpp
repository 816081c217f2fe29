#pragma once

#include <optional>
#include <string>
#include <vector>

#include "signrep/boolfun.hpp"
#include "signrep/lp.hpp"
#include "signrep/polynomial.hpp"

namespace signrep {

// Exponent vectors of total degree <= d with e_i <= caps[i], in graded order.
std::vector<Exponent> monomial_basis(const std::vector<unsigned>& caps, int d);
// caps[i] = (number of distinct values of coordinate i) - 1
std::vector<unsigned> exponent_caps(const BooleanFunction& f);
std::vector<Exponent> monomial_basis(const BooleanFunction& f, int d);
// Multilinear monomials S with sum_{i in S} v_i <= D.
std::vector<Exponent> weighted_basis(const std::vector<long>& v, long D);
// Value of the monomial with exponent e at x.
Rat monomial_value(const Exponent& e, const Point& x);
// Largest total degree the capped basis can reach.
int max_basis_degree(const BooleanFunction& f);

enum class WitnessKind { Gordan, GordanSigned, Approx };
const char* to_string(WitnessKind k);

// Gordan: mu >= 0, sum mu = 1, sum mu f m = 0 for deg m <= d.
// GordanSigned: psi = f mu, so psi f >= 0, sum |psi| = 1, sum psi m = 0.
// Approx: sum |psi| = 1, sum psi m = 0 for deg m <= d, correlation = sum psi f.
// With non-empty degree_weights the orthogonality is to multilinear
// monomials S with sum_{i in S} v_i <= orthogonality_degree.
struct DualWitness {
  WitnessKind kind = WitnessKind::Gordan;
  std::vector<Point> points;
  std::vector<Rat> weights;
  int orthogonality_degree = -1;
  std::vector<long> degree_weights;
  Rat l1_mass = 0;
  Rat correlation = 0;
};

struct WitnessCheck {
  bool ok = true;
  std::string reason;
};

// Exact re-check against f (same domain, any order of points).
WitnessCheck verify_witness(const DualWitness& w, const BooleanFunction& f);
DualWitness signed_from_gordan(const DualWitness& mu, const BooleanFunction& f);

struct DegreeReport {
  int degree = 0;
  std::optional<SparsePolynomial> primal;  // sign-representation or approximant
  std::optional<DualWitness> dual;         // proves the degree is not smaller
  Rat error = 0;                           // approximation error of primal, when relevant
};

// The LP "f(x) p(x) >= 1 for all x" over the basis of degree <= d.
LinearProgram threshold_lp(const BooleanFunction& f, int d);
// The LP in mu: mu >= 0, sum mu = 1, sum mu f m = 0. Independent of threshold_lp.
LinearProgram gordan_lp(const BooleanFunction& f, int d);

// Sign-representing polynomial of degree <= d, if any.
std::optional<SparsePolynomial> sign_representation(const BooleanFunction& f, int d, const SimplexOptions& opt = {});
std::optional<DualWitness> gordan_witness(const BooleanFunction& f, int d, const SimplexOptions& opt = {});
DegreeReport threshold_degree(const BooleanFunction& f, const SimplexOptions& opt = {});

struct ApproxResult {
  Rat error;
  SparsePolynomial approximant;
  DualWitness dual;
};

ApproxResult approx_error(const BooleanFunction& f, int d, const SimplexOptions& opt = {});
DegreeReport eps_approx_degree(const BooleanFunction& f, const Rat& eps, const SimplexOptions& opt = {});
ApproxResult weighted_approx_error(const BooleanFunction& F, const std::vector<long>& v, long D,
                                   const SimplexOptions& opt = {});
DegreeReport weighted_approx_degree(const BooleanFunction& F, const Rat& eps, const std::vector<long>& v,
                                    const SimplexOptions& opt = {});

// Orbit average of phi over S_{n_1} x ... x S_{n_k} acting on consecutive
// blocks of {0,1} variables, as a polynomial in the block sums.
SparsePolynomial symmetrize(const SparsePolynomial& phi, const std::vector<std::size_t>& blocks);
// Same for {-1,+1} variables; the result is in the number of +1 entries per block.
SparsePolynomial symmetrize_pm(const SparsePolynomial& phi, const std::vector<std::size_t>& blocks);

}  // namespace signrep

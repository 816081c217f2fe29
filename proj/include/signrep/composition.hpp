#pragma once

#include <optional>
#include <string>
#include <vector>

#include "signrep/boolfun.hpp"
#include "signrep/degrees.hpp"
#include "signrep/polynomial.hpp"
#include "signrep/rational_approx.hpp"

namespace signrep {

struct CombinatorialProfile {
  int certificate_complexity = 0;  // C(F)
  int block_sensitivity = 0;       // bs(F)
  // smallest certificate of each cube point, indices into the coordinates
  std::vector<std::vector<std::size_t>> per_point_certificates;
  std::vector<int> per_point_bs;
};

CombinatorialProfile combinatorial_profile(const BooleanFunction& F);

// Probability that F(y) = F(x) when each y_i is x_i flipped with probability alpha_i.
Rat flip_agreement(const BooleanFunction& F, std::size_t x, const std::vector<Rat>& alpha);

// (k-1) prod q_i + sum_i p_i prod_{j != i} q_j over disjoint variable blocks.
// Throws unless it sign-represents AND(f_1, ..., f_k) on the whole product domain.
SparsePolynomial brs_conjunction(const std::vector<RationalApproximant>& approximants,
                                 const std::vector<BooleanFunction>& functions, DomainCap cap = {});

struct ComposedWitness {
  BooleanFunction composed;  // F(f_1, ..., f_k)
  DualWitness zeta;          // kind Approx, orthogonality_degree = claimed_orthogonality - 1
  int claimed_orthogonality = 0;
  Rat claimed_correlation_bound;
  bool strict_bound = true;  // correlation > bound (threshold form) or >= bound
  Rat l1_mass;
  Rat correlation;
  // compose_witness_approx only
  Rat certificate_bound;  // corr(Psi) - 2 + 2 (1 - delta)^C(F)
  Rat bs_bound;           // corr(Psi) - 4 delta bs(F)
};

// zeta = 2^k Psi(..., f(x_i), ...) prod mu(x_i); orthogonal below D d.
ComposedWitness compose_witness_threshold(const DualWitness& Psi, const BooleanFunction& F, const DualWitness& mu,
                                          const BooleanFunction& f, const Rat& eps);
// zeta = 2^k Psi(..., sign psi_i(x_i), ...) prod |psi_i(x_i)|.
ComposedWitness compose_witness_approx(const DualWitness& Psi, const BooleanFunction& F,
                                       const std::vector<DualWitness>& psis, const std::vector<BooleanFunction>& fs,
                                       const Rat& delta);
// Independent re-check of the three recorded quantities.
WitnessCheck verify_composed(const ComposedWitness& w);

struct RobustComposition {
  SparsePolynomial phi;
  BooleanFunction composed;
  Rat outer_error;   // Delta
  Rat inner_error;   // max delta_i
  Rat error;         // exact max |F(f) - phi|
  Rat certificate_bound;  // Delta + 2 - 2 (1 - delta/(1+delta))^C
  Rat bs_bound;           // Delta + 4 delta bs / (1 + delta)
};
// Phi = P(..., p_i(x_i) / (1 + ||f_i - p_i||), ...).
RobustComposition robust_compose(const SparsePolynomial& P, const BooleanFunction& F,
                                 const std::vector<SparsePolynomial>& ps, const std::vector<BooleanFunction>& fs);

struct PairWitness {
  std::size_t i = 0, j = 0;
  std::vector<int> fixing;  // 0 at i and j
  std::string form;         // e.g. "x_i & ~x_j"
};
struct AndReducibility {
  bool reducible = false;
  std::vector<PairWitness> witnesses;
  std::optional<std::pair<std::size_t, std::size_t>> failing_pair;
};
AndReducibility and_reducible(const BooleanFunction& F);

struct Amplification {
  SparsePolynomial sign_rep;
  int boost_degree = 1;  // k' in the Newman boost
  RationalApproximant boosted;
  int degree = 0;
};
// Boost A2 (error < 1/2) to error < 1/k, then BRS over k copies of f.
Amplification two_to_k_amplify(const BooleanFunction& f, const RationalApproximant& A2, int k, DomainCap cap = {});

struct MainFiniteReport {
  int d = 0;  // degthr of the conjunction
  std::vector<int> degrees;
  std::vector<ErrorBracket> brackets;
  Rat upper_sum;
  bool holds = false;
};
// degthr(f AND g) = d, then upper R+(f,4d) + upper R+(g,2d) < 1.
MainFiniteReport verify_main_finite(const BooleanFunction& f, const BooleanFunction& g, const Rat& precision);
// d = degthr(AND f_i), D = 8 d ceil(log2 2k), sum_i upper R+(f_i, D) < 1.
MainFiniteReport verify_main_finite_multi(const std::vector<BooleanFunction>& fs, const Rat& precision);

}  // namespace signrep

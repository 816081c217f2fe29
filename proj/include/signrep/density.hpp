#pragma once

#include <optional>
#include <string>
#include <vector>

#include "signrep/boolfun.hpp"
#include "signrep/degrees.hpp"
#include "signrep/polynomial.hpp"

namespace signrep {

// f^KP(x, y, z) = f(..., z_i ? y_i : x_i, ...) with z_i = -1 meaning true.
// Variables are ordered x_1..x_n, y_1..y_n, z_1..z_n.
BooleanFunction kp_transform(const BooleanFunction& f);

struct DensityReport {
  int value = 0;
  std::vector<Exponent> support;  // multilinear monomials of the witness
  SparsePolynomial witness;       // sign-represents f using exactly `support`
  std::string method;
  std::size_t lp_solves = 0;
};

// Sign-representation of f using only the given multilinear monomials.
std::optional<SparsePolynomial> support_sign_representation(const BooleanFunction& f,
                                                            const std::vector<Exponent>& support);
// Minimum number of monomials in a sign-representation; cube, n <= 4.
DensityReport density_exact(const BooleanFunction& f);

// F(w) = H(chi_1(w), ..., chi_m(w)) with chi_i = signs[i] prod_{j in sets[i]} w_j.
struct ParitySubstitution {
  BooleanFunction H;
  std::vector<std::vector<std::size_t>> sets;
  std::vector<int> signs;
};

struct DensityLowerBound {
  Int bound;  // 2^degthr(f)
  int degthr = 0;
  std::optional<DualWitness> witness;  // Gordan witness at degthr(f) - 1
  std::string applies_to;              // name of the function the bound is about
};
// dns(f^KP) >= 2^degthr(f); with a substitution F^KP = H(chi), dns(H) >= the same.
DensityLowerBound density_lower_from_kp(const BooleanFunction& f, const std::optional<ParitySubstitution>& sub = {});

}  // namespace signrep

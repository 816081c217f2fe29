#pragma once

#include <cstddef>
#include <vector>

#include "signrep/polynomial.hpp"

namespace signrep {

// Points of {-1,+1}^n are indexed in lexicographic order: bit (n-1-i) of the
// index is 1 iff x_i = +1.
std::vector<Rat> cube_point(std::size_t n, std::size_t index);
std::size_t cube_index(const std::vector<Rat>& x);  // x must be a +-1 vector

// Values on the whole cube of a multilinear (after x^2=1 reduction) polynomial.
std::vector<Rat> cube_values(const SparsePolynomial& p);
// Unique multilinear polynomial with the given values on the cube.
SparsePolynomial multilinear_from_values(std::size_t n, const std::vector<Rat>& values);

// Tensor-product interpolation on nodes[0] x ... x nodes[k-1]; values are
// given in lexicographic order of the grid (last coordinate fastest).
SparsePolynomial interpolate_grid(const std::vector<std::vector<Rat>>& nodes, const std::vector<Rat>& values);

}  // namespace signrep

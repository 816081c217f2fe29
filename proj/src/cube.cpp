#include "signrep/cube.hpp"

#include "signrep/errors.hpp"
#include "signrep/univariate.hpp"

namespace signrep {

std::vector<Rat> cube_point(std::size_t n, std::size_t index) {
  std::vector<Rat> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = ((index >> (n - 1 - i)) & 1u) ? 1 : -1;
  return x;
}

std::size_t cube_index(const std::vector<Rat>& x) {
  std::size_t idx = 0;
  for (const Rat& v : x) {
    require(v == 1 || v == -1, "not a cube point");
    idx = (idx << 1) | (v == 1 ? 1u : 0u);
  }
  return idx;
}

namespace {

// In-place transform between the monomial basis (mask bit set = variable
// present) and value vectors. With coefficient index S and point index x,
// chi_S(x) = prod_{i in S} x_i and x_i = +1 iff the bit is 1.
void butterfly(std::vector<Rat>& a, std::size_t n) {
  std::size_t N = std::size_t(1) << n;
  Rat u, v;
  for (std::size_t h = 1; h < N; h <<= 1)
    for (std::size_t i = 0; i < N; i += h << 1)
      for (std::size_t j = i; j < i + h; ++j) {
        u = a[j];
        v = a[j + h];
        a[j] = u + v;
        a[j + h] = u - v;
      }
}

}  // namespace

// Coefficient of mask S at point index idx: value = sum_S c_S prod_{i in S} x_i.
// With x_i = +1 <-> bit 1, a plain Hadamard transform uses (-1)^{<S,idx>},
// so we flip: evaluate at the complemented index.
std::vector<Rat> cube_values(const SparsePolynomial& p) {
  std::size_t n = p.num_vars();
  require(n < 28, "cube too large");
  SparsePolynomial q = p.reduce_pm1();
  std::size_t N = std::size_t(1) << n;
  std::vector<Rat> a(N);
  for (const auto& [e, c] : q.terms()) {
    std::size_t mask = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (e[i]) mask |= std::size_t(1) << (n - 1 - i);
    a[mask] += c;
  }
  butterfly(a, n);
  // a[y] = sum_S c_S (-1)^{|S & y|}; the point with index idx has x_i = -1
  // exactly where bit is 0, i.e. y = ~idx.
  std::vector<Rat> out(N);
  for (std::size_t idx = 0; idx < N; ++idx) out[idx] = a[(N - 1) ^ idx];
  return out;
}

SparsePolynomial multilinear_from_values(std::size_t n, const std::vector<Rat>& values) {
  std::size_t N = std::size_t(1) << n;
  require(values.size() == N, "value vector must cover the cube");
  std::vector<Rat> a(N);
  for (std::size_t idx = 0; idx < N; ++idx) a[(N - 1) ^ idx] = values[idx];
  butterfly(a, n);
  SparsePolynomial p(n);
  Rat inv = Rat(1, 1);
  inv /= Rat(Int(N));
  for (std::size_t mask = 0; mask < N; ++mask) {
    if (a[mask] == 0) continue;
    Exponent e(n, 0);
    for (std::size_t i = 0; i < n; ++i)
      if ((mask >> (n - 1 - i)) & 1u) e[i] = 1;
    p.add_term(e, a[mask] * inv);
  }
  return p;
}

SparsePolynomial interpolate_grid(const std::vector<std::vector<Rat>>& nodes, const std::vector<Rat>& values) {
  std::size_t k = nodes.size();
  std::size_t total = 1;
  for (const auto& nd : nodes) total *= nd.size();
  require(values.size() == total, "grid value count mismatch");
  // Lagrange basis per coordinate
  std::vector<std::vector<UnivariatePolynomial>> basis(k);
  for (std::size_t i = 0; i < k; ++i) {
    const auto& nd = nodes[i];
    for (std::size_t a = 0; a < nd.size(); ++a) {
      std::vector<Rat> ys(nd.size(), Rat(0));
      ys[a] = 1;
      basis[i].push_back(interpolate(nd, ys));
    }
  }
  std::map<Exponent, Rat> acc;
  std::vector<std::size_t> digit(k, 0);
  for (std::size_t g = 0; g < total; ++g) {
    std::size_t r = g;
    for (std::size_t i = k; i-- > 0;) {
      digit[i] = r % nodes[i].size();
      r /= nodes[i].size();
    }
    if (values[g] != 0) {
      // expand prod_i basis[i][digit[i]](x_i)
      std::map<Exponent, Rat> term;
      term[Exponent(k, 0)] = values[g];
      for (std::size_t i = 0; i < k; ++i) {
        const auto& bc = basis[i][digit[i]].coeffs();
        std::map<Exponent, Rat> next;
        for (const auto& [e, c] : term)
          for (std::size_t a = 0; a < bc.size(); ++a) {
            if (bc[a] == 0) continue;
            Exponent f = e;
            f[i] = static_cast<unsigned>(a);
            next[f] += c * bc[a];
          }
        term.swap(next);
      }
      for (const auto& [e, c] : term) acc[e] += c;
    }
  }
  SparsePolynomial p(k);
  for (const auto& [e, c] : acc) p.add_term(e, c);
  return p;
}

}  // namespace signrep

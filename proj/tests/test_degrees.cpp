#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "signrep/cube.hpp"
#include "signrep/degrees.hpp"
#include "signrep/errors.hpp"

using namespace signrep;

namespace {

BooleanFunction table(std::size_t n, std::size_t mask) {
  std::vector<int> v(std::size_t(1) << n);
  for (std::size_t x = 0; x < v.size(); ++x) v[x] = (mask >> x) & 1 ? -1 : 1;
  return BooleanFunction(cube_domain(n), v);
}

// Linear threshold test by integer weights in [-3,3]; enough for n <= 3.
bool halfspace_by_search(const BooleanFunction& f) {
  std::size_t n = f.dimension();
  std::vector<int> w(n + 1, -3);
  while (true) {
    bool ok = true;
    for (std::size_t x = 0; x < f.size() && ok; ++x) {
      int s = w[n];
      for (std::size_t i = 0; i < n; ++i) s += w[i] * (f.point(x)[i] > 0 ? 1 : -1);
      ok = s != 0 && (s > 0 ? 1 : -1) == f.value(x);
    }
    if (ok) return true;
    std::size_t i = 0;
    while (i <= n && w[i] == 3) w[i++] = -3;
    if (i > n) return false;
    ++w[i];
  }
}

int degthr_oracle_3(const BooleanFunction& f) {
  if (f.is_constant()) return 0;
  if (halfspace_by_search(f)) return 1;
  BooleanFunction p = parity(3);
  if (f.values() == p.values() || f.values() == negate(p).values()) return 3;
  return 2;
}

bool represents(const SparsePolynomial& p, const BooleanFunction& f) {
  for (std::size_t x = 0; x < f.size(); ++x)
    if (sgn(p.evaluate(f.point(x))) != f.value(x)) return false;
  return true;
}

}  // namespace

TEST_CASE("monomial bases") {
  CHECK(monomial_basis({1, 1, 1}, 2).size() == 7);
  CHECK(monomial_basis({2, 2}, 2).size() == 6);
  CHECK(monomial_basis({1, 1, 1}, 0) == std::vector<Exponent>{{0, 0, 0}});
  // weights (1, 2, 3), budget 3: {}, {1}, {2}, {3}, {1,2}
  CHECK(weighted_basis({1, 2, 3}, 3).size() == 5);
  CHECK(max_basis_degree(majority(4)) == 4);
  CHECK(max_basis_degree(make_named("SIGN", {3})) == 5);
  CHECK(monomial_value({1, 2}, {Rat(3), Rat(-2)}) == 12);
}

TEST_CASE("threshold degree of every 3-variable function matches a search oracle") {
  for (std::size_t mask = 0; mask < 256; ++mask) {
    BooleanFunction f = table(3, mask);
    DegreeReport r = threshold_degree(f);
    CHECK(r.degree == degthr_oracle_3(f));
    REQUIRE(r.primal);
    CHECK(r.primal->degree() <= r.degree);
    CHECK(represents(*r.primal, f));
    if (r.degree > 0) {
      REQUIRE(r.dual);
      CHECK(r.dual->orthogonality_degree == r.degree - 1);
      CHECK(verify_witness(*r.dual, f).ok);
    }
  }
}

TEST_CASE("known threshold degrees") {
  for (std::size_t n = 1; n <= 5; ++n) CHECK(threshold_degree(parity(n)).degree == static_cast<int>(n));
  CHECK(threshold_degree(majority(5)).degree == 1);
  CHECK(threshold_degree(make_named("ODD-MAX-BIT", {5})).degree == 1);
  CHECK(threshold_degree(make_named("SIGN", {4})).degree == 1);
  CHECK(threshold_degree(make_named("HALFSPACE", {2, 2})).degree == 1);
}

TEST_CASE("Gordan alternative on random 4-variable functions") {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 30; ++t) {
    BooleanFunction f = table(4, rng() & 0xffff);
    for (int d = 0; d <= 3; ++d) {
      auto p = sign_representation(f, d);
      auto g = gordan_witness(f, d);
      CHECK(p.has_value() != g.has_value());
      if (p) CHECK(represents(*p, f));
      if (g) {
        CHECK(verify_witness(*g, f).ok);
        DualWitness s = signed_from_gordan(*g, f);
        CHECK(s.kind == WitnessKind::GordanSigned);
        CHECK(verify_witness(s, f).ok);
      }
    }
  }
}

TEST_CASE("approximation error against closed forms") {
  // AND_2 = 1/2 + x1/2 + x2/2 - x1 x2/2: linear error 1/2
  CHECK(approx_error(and_pm(2), 1).error == make_rat(1, 2));
  CHECK(approx_error(and_pm(2), 2).error == 0);
  // MAJ_3 = (x1+x2+x3)/2 - x1x2x3/2
  CHECK(approx_error(majority(3), 1).error == make_rat(1, 2));
  CHECK(approx_error(majority(3), 2).error == make_rat(1, 2));
  CHECK(approx_error(majority(3), 3).error == 0);
  // parity is orthogonal to everything below degree n
  for (std::size_t n = 1; n <= 4; ++n) CHECK(approx_error(parity(n), static_cast<int>(n) - 1).error == 1);
  // best constant: (max - min) / 2 of the values, so 1 for nonconstant
  CHECK(approx_error(majority(2), 0).error == 1);
  // sign on {-1, 1, ..., +-n} has no exact low-degree interpolant; error strictly in (0, 1)
  ApproxResult s = approx_error(make_named("SIGN", {3}), 1);
  CHECK(s.error > 0);
  CHECK(s.error < 1);
  CHECK(s.dual.correlation == s.error);
  CHECK(verify_witness(s.dual, make_named("SIGN", {3})).ok);
}

TEST_CASE("eps-approximate degree") {
  CHECK(eps_approx_degree(parity(3), make_rat(1, 3)).degree == 3);
  CHECK(eps_approx_degree(majority(3), make_rat(1, 3)).degree == 3);
  CHECK(eps_approx_degree(majority(3), make_rat(1, 2)).degree == 1);
  CHECK(eps_approx_degree(majority(3), Rat(1)).degree == 0);
  DegreeReport r = eps_approx_degree(and_pm(3), make_rat(1, 3));
  REQUIRE(r.primal);
  CHECK(r.error <= make_rat(1, 3));
  if (r.degree > 0) {
    REQUIRE(r.dual);
    CHECK(r.dual->correlation > make_rat(1, 3));
  }
  CHECK_THROWS_AS(eps_approx_degree(and_pm(2), Rat(-1)), PreconditionError);
}

TEST_CASE("weighted approximation reduces to the plain one at unit weights") {
  for (int D = 0; D <= 3; ++D) {
    Rat a = approx_error(majority(3), D).error;
    Rat b = weighted_approx_error(majority(3), {1, 1, 1}, D).error;
    CHECK(a == b);
  }
  // weight 3 on x1 means x1 is unusable at budget 2; MAJ_3 restricted that way
  ApproxResult w = weighted_approx_error(majority(3), {3, 1, 1}, 2);
  for (const auto& [e, c] : w.approximant.terms()) CHECK(e[0] == 0);
  CHECK(verify_witness(w.dual, majority(3)).ok);
}

TEST_CASE("tampered witnesses are rejected") {
  auto g = gordan_witness(parity(2), 1);
  REQUIRE(g);
  DualWitness bad = *g;
  bad.weights[0] += make_rat(1, 10);
  CHECK_FALSE(verify_witness(bad, parity(2)).ok);
  bad = *g;
  bad.orthogonality_degree = 2;
  CHECK_FALSE(verify_witness(bad, parity(2)).ok);
  CHECK_FALSE(verify_witness(*g, majority(2)).ok);
}

TEST_CASE("symmetrization over blocks") {
  // average of x1 x2 over S_3 on {0,1}^3 is s(s-1)/6
  SparsePolynomial p = SparsePolynomial::variable(3, 0) * SparsePolynomial::variable(3, 1);
  SparsePolynomial q = symmetrize(p, {3});
  REQUIRE(q.num_vars() == 1);
  for (int s = 0; s <= 3; ++s) CHECK(q.evaluate(std::vector<Rat>{Rat(s)}) == make_rat(s * (s - 1), 6));
  // average of x1 over {-1,1}^3 with k entries +1 is (2k - 3)/3
  SparsePolynomial r = symmetrize_pm(SparsePolynomial::variable(3, 0), {3});
  for (int k = 0; k <= 3; ++k) CHECK(r.evaluate(std::vector<Rat>{Rat(k)}) == make_rat(2 * k - 3, 3));
  // two blocks: x1 x3 with blocks {2, 1}
  SparsePolynomial t = symmetrize(SparsePolynomial::variable(3, 0) * SparsePolynomial::variable(3, 2), {2, 1});
  REQUIRE(t.num_vars() == 2);
  CHECK(t.evaluate(std::vector<Rat>{Rat(1), Rat(1)}) == make_rat(1, 2));
}

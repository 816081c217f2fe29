#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>

#include "signrep/composition.hpp"
#include "signrep/cube.hpp"
#include "signrep/errors.hpp"

using namespace signrep;

namespace {

BooleanFunction table(std::size_t n, std::size_t mask) {
  std::vector<int> v(std::size_t(1) << n);
  for (std::size_t x = 0; x < v.size(); ++x) v[x] = (mask >> x) & 1 ? -1 : 1;
  return BooleanFunction(cube_domain(n), v);
}

// Direct definitions on cube indices (bit n-1-i is coordinate i).
int cert_oracle(const BooleanFunction& F) {
  std::size_t n = F.dimension(), N = F.size();
  int worst = 0;
  for (std::size_t x = 0; x < N; ++x) {
    int best = static_cast<int>(n);
    for (std::size_t S = 0; S < N; ++S) {
      bool ok = true;
      for (std::size_t y = 0; y < N && ok; ++y)
        if (((x ^ y) & S) == 0 && F.value(y) != F.value(x)) ok = false;
      if (ok) best = std::min(best, std::popcount(S));
    }
    worst = std::max(worst, best);
  }
  return worst;
}

int bs_at(const BooleanFunction& F, std::size_t x, std::size_t used) {
  int best = 0;
  for (std::size_t B = 1; B < F.size(); ++B)
    if ((B & used) == 0 && F.value(x ^ B) != F.value(x)) best = std::max(best, 1 + bs_at(F, x, used | B));
  return best;
}

int bs_oracle(const BooleanFunction& F) {
  int worst = 0;
  for (std::size_t x = 0; x < F.size(); ++x) worst = std::max(worst, bs_at(F, x, 0));
  return worst;
}

bool represents(const SparsePolynomial& p, const BooleanFunction& f) {
  for (std::size_t x = 0; x < f.size(); ++x)
    if (sgn(p.evaluate(f.point(x))) != f.value(x)) return false;
  return true;
}

SparsePolynomial interpolant(const BooleanFunction& f) {
  std::vector<Rat> v;
  for (int x : f.values()) v.push_back(Rat(x));
  return multilinear_from_values(f.dimension(), v);
}

}  // namespace

TEST_CASE("certificate complexity and block sensitivity against brute force") {
  for (std::size_t mask = 0; mask < 256; mask += 3) {
    BooleanFunction f = table(3, mask);
    CombinatorialProfile p = combinatorial_profile(f);
    CHECK(p.certificate_complexity == cert_oracle(f));
    CHECK(p.block_sensitivity == bs_oracle(f));
    CHECK(p.block_sensitivity <= p.certificate_complexity);
  }
  CombinatorialProfile ao = combinatorial_profile(make_named("AND-OR", {2}));
  CHECK(ao.certificate_complexity == 2);
  CHECK(ao.block_sensitivity == 2);
  CHECK(combinatorial_profile(or_pm(4)).block_sensitivity == 4);
  CHECK(combinatorial_profile(parity(4)).certificate_complexity == 4);
  CombinatorialProfile m = combinatorial_profile(majority(3));
  CHECK(m.certificate_complexity == 2);
  REQUIRE(m.per_point_certificates.size() == 8);
  for (const auto& c : m.per_point_certificates) CHECK(c.size() == 2);
}

TEST_CASE("flip agreement") {
  CHECK(flip_agreement(parity(2), 0, {Rat(0), Rat(0)}) == 1);
  CHECK(flip_agreement(parity(2), 0, {make_rat(1, 2), Rat(0)}) == make_rat(1, 2));
  // parity of 2 flips with probabilities a, b agrees iff both or neither flip
  Rat a(1, 3), b(1, 5);
  CHECK(flip_agreement(parity(2), 3, {a, b}) == a * b + (1 - a) * (1 - b));
  // AND_2 at (+1,+1): disagree only if both flip
  CHECK(flip_agreement(and_pm(2), 3, {a, b}) == 1 - a * b);
}

TEST_CASE("BRS conjunction of exact approximants") {
  BooleanFunction o = or_pm(2);
  RationalApproximant a = make_approximant(o, interpolant(o), SparsePolynomial::constant(2, 1));
  SparsePolynomial s = brs_conjunction({a, a, a}, {o, o, o});
  CHECK(represents(s, compose({and_pm(3), {o, o, o}})));
}

TEST_CASE("threshold witness composition") {
  BooleanFunction p2 = parity(2);
  auto G = gordan_witness(p2, 1);
  REQUIRE(G);
  DualWitness Psi = signed_from_gordan(*G, p2);
  Psi.kind = WitnessKind::Approx;
  Psi.correlation = 1;
  ComposedWitness z = compose_witness_threshold(Psi, p2, *G, p2, make_rat(1, 2));
  CHECK(z.claimed_orthogonality == 4);
  CHECK(z.l1_mass == 1);
  CHECK(z.correlation == 1);
  CHECK(verify_composed(z).ok);
  // an independent check: zeta is orthogonal to every monomial of degree <= 3 on the 4-cube
  BooleanFunction c = z.composed;
  for (std::size_t S = 0; S < 16; ++S) {
    if (std::popcount(S) > 3) continue;
    Rat acc = 0;
    for (std::size_t x = 0; x < c.size(); ++x) {
      Rat m = 1;
      for (std::size_t i = 0; i < 4; ++i)
        if ((S >> i) & 1) m *= c.point(x)[i];
      acc += z.zeta.weights[x] * m;
    }
    CHECK(acc == 0);
  }
  ComposedWitness bad = z;
  bad.zeta.weights[0] += make_rat(1, 100);
  CHECK_FALSE(verify_composed(bad).ok);
  bad = z;
  bad.claimed_correlation_bound = 1;
  CHECK_FALSE(verify_composed(bad).ok);
  CHECK_THROWS_AS(compose_witness_threshold(Psi, p2, *G, p2, Rat(1)), PreconditionError);
}

TEST_CASE("approximation witness composition") {
  BooleanFunction p2 = parity(2), m3 = majority(3);
  ApproxResult outer = approx_error(p2, 1);
  ApproxResult inner = approx_error(m3, 2);
  REQUIRE(outer.dual.correlation == 1);
  REQUIRE(inner.dual.correlation == make_rat(1, 2));
  Rat delta(3, 4);
  ComposedWitness z = compose_witness_approx(outer.dual, p2, {inner.dual, inner.dual}, {m3, m3}, delta);
  CHECK(z.claimed_orthogonality == 6);
  CHECK(verify_composed(z).ok);
  CHECK(z.correlation >= z.claimed_correlation_bound);
  // C(PARITY_2) = bs(PARITY_2) = 2
  CHECK(z.certificate_bound == 1 - 2 + 2 * rpow(1 - delta, 2));
  CHECK(z.bs_bound == 1 - 4 * delta * 2);
  CHECK_THROWS_AS(compose_witness_approx(outer.dual, p2, {inner.dual, inner.dual}, {m3, m3}, make_rat(1, 4)),
                  PreconditionError);
}

TEST_CASE("robust composition") {
  BooleanFunction a2 = and_pm(2), m3 = majority(3);
  SparsePolynomial P = interpolant(a2);
  SparsePolynomial lin(3);
  for (std::size_t i = 0; i < 3; ++i) lin += SparsePolynomial::variable(3, i) * make_rat(1, 2);
  RobustComposition r = robust_compose(P, a2, {lin, lin}, {m3, m3});
  CHECK(r.outer_error == 0);
  CHECK(r.inner_error == make_rat(1, 2));
  CHECK(r.error <= r.certificate_bound);
  CHECK(r.error <= r.bs_bound);
  // recompute the error directly
  Rat worst = 0;
  for (std::size_t x = 0; x < r.composed.size(); ++x) {
    Rat e = abs(Rat(r.composed.value(x) - r.phi.evaluate(r.composed.point(x))));
    if (e > worst) worst = e;
  }
  CHECK(worst == r.error);
  RobustComposition exact = robust_compose(P, a2, {interpolant(m3), interpolant(m3)}, {m3, m3});
  CHECK(exact.error == 0);
}

TEST_CASE("AND-reducibility") {
  CHECK(and_reducible(and_pm(3)).reducible);
  AndReducibility m = and_reducible(majority(3));
  CHECK(m.reducible);
  for (const auto& w : m.witnesses) {
    CHECK(w.fixing[w.i] == 0);
    CHECK(w.fixing[w.j] == 0);
  }
  AndReducibility p = and_reducible(parity(2));
  CHECK_FALSE(p.reducible);
  CHECK(p.failing_pair.has_value());
}

TEST_CASE("amplification to k conjuncts") {
  BooleanFunction m3 = majority(3);
  SparsePolynomial lin(3);
  for (std::size_t i = 0; i < 3; ++i) lin += SparsePolynomial::variable(3, i) * make_rat(1, 2);
  RationalApproximant a = accuracy_boost(m3, make_approximant(m3, lin, SparsePolynomial::constant(3, 1)));
  REQUIRE(a.verified_error < make_rat(1, 2));
  Amplification amp = two_to_k_amplify(m3, a, 3);
  CHECK(amp.boosted.verified_error < make_rat(1, 3));
  CHECK(represents(amp.sign_rep, compose({and_pm(3), {m3, m3, m3}})));
}

TEST_CASE("finite conjunction bound") {
  MainFiniteReport r = verify_main_finite(or_pm(2), or_pm(2), make_rat(1, 64));
  // (x1 or x2) and (x3 or x4) is not a halfspace
  CHECK(r.d == 2);
  CHECK(r.holds);
  CHECK(r.upper_sum == r.brackets[0].upper + r.brackets[1].upper);
  MainFiniteReport m = verify_main_finite_multi({or_pm(2), or_pm(2), or_pm(2)}, make_rat(1, 64));
  CHECK(m.holds);
  CHECK(m.degrees.front() == 8 * m.d * 3);
}

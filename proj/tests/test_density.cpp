#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "signrep/cube.hpp"
#include "signrep/density.hpp"
#include "signrep/errors.hpp"

using namespace signrep;

namespace {

BooleanFunction table(std::size_t n, std::size_t mask) {
  std::vector<int> v(std::size_t(1) << n);
  for (std::size_t x = 0; x < v.size(); ++x) v[x] = (mask >> x) & 1 ? -1 : 1;
  return BooleanFunction(cube_domain(n), v);
}

// Smallest support among integer weight vectors in [-4,4] on the 4 monomials of 2 variables.
int oracle2(const BooleanFunction& f) {
  int best = 5;
  for (int code = 0; code < 9 * 9 * 9 * 9; ++code) {
    int w[4], c = code, nz = 0;
    for (int& x : w) {
      x = c % 9 - 4;
      c /= 9;
      nz += x != 0;
    }
    bool ok = true;
    for (std::size_t i = 0; i < 4 && ok; ++i) {
      int a = f.point(i)[0] > 0 ? 1 : -1, b = f.point(i)[1] > 0 ? 1 : -1;
      int v = w[0] + w[1] * a + w[2] * b + w[3] * a * b;
      ok = v != 0 && (v > 0 ? 1 : -1) == f.value(i);
    }
    if (ok) best = std::min(best, nz);
  }
  return best;
}

bool represents(const SparsePolynomial& p, const BooleanFunction& f) {
  for (std::size_t x = 0; x < f.size(); ++x)
    if (sgn(p.evaluate(f.point(x))) != f.value(x)) return false;
  return true;
}

}  // namespace

TEST_CASE("density of all 2-variable functions") {
  for (std::size_t mask = 0; mask < 16; ++mask) {
    BooleanFunction f = table(2, mask);
    DensityReport r = density_exact(f);
    CHECK(r.value == oracle2(f));
    CHECK(static_cast<int>(r.support.size()) == r.value);
    CHECK(represents(r.witness, f));
    for (const auto& [e, c] : r.witness.terms())
      CHECK(std::find(r.support.begin(), r.support.end(), e) != r.support.end());
  }
}

TEST_CASE("density of known functions") {
  CHECK(density_exact(parity(3)).value == 1);
  CHECK(density_exact(make_named("CONST", {2, 1})).value == 1);
  CHECK(density_exact(majority(3)).value == 3);
  // AND_3: every monomial missing leaves a point where the rest cannot decide; 4 suffice
  DensityReport a = density_exact(and_pm(3));
  CHECK(a.value <= 4);
  CHECK(represents(a.witness, and_pm(3)));
}

TEST_CASE("support-restricted sign representation") {
  BooleanFunction m = majority(3);
  CHECK(support_sign_representation(m, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}).has_value());
  CHECK_FALSE(support_sign_representation(m, {{1, 0, 0}, {0, 1, 0}}).has_value());
  CHECK_FALSE(support_sign_representation(parity(2), {{0, 0}, {1, 0}, {0, 1}}).has_value());
}

TEST_CASE("KP transform") {
  BooleanFunction x1 = make_named("DICT", {1, 1});
  BooleanFunction kp = kp_transform(x1);
  CHECK(kp.dimension() == 3);
  for (std::size_t i = 0; i < kp.size(); ++i) {
    const Point& p = kp.point(i);  // x, y, z
    int expect = p[2] == -1 ? (p[1] > 0 ? 1 : -1) : (p[0] > 0 ? 1 : -1);
    CHECK(kp.value(i) == expect);
  }
  // negation commutes with the transform
  BooleanFunction m = majority(2);
  CHECK(kp_transform(negate(m)).values() == negate(kp_transform(m)).values());
  DensityLowerBound lb = density_lower_from_kp(x1);
  CHECK(lb.degthr == 1);
  CHECK(lb.bound == 2);
  CHECK(density_exact(kp).value >= 2);
}

TEST_CASE("f' and g' inequality on 2-variable pairs") {
  // dns(f and g) >= dns(f' and g') / (dns f dns g) with f'(x) = -f(-x)
  std::vector<int> dns(16);
  for (std::size_t a = 0; a < 16; ++a) dns[a] = density_exact(table(2, a)).value;
  auto prime = [](const BooleanFunction& f) { return negate(reflect(f)); };
  for (std::size_t a = 0; a < 16; a += 5)
    for (std::size_t b = 0; b < 16; b += 3) {
      BooleanFunction f = table(2, a), g = table(2, b);
      int lhs = density_exact(compose({and_pm(2), {f, g}})).value;
      BooleanFunction fp = prime(f), gp = prime(g);
      int num = density_exact(compose({and_pm(2), {fp, gp}})).value;
      CHECK(Rat(lhs) >= make_rat(num, dns[a] * dns[b]));
    }
}

TEST_CASE("density preconditions") {
  CHECK_THROWS_AS(density_exact(majority(5)), PreconditionError);
  CHECK_THROWS_AS(density_exact(make_named("SIGN", {2})), PreconditionError);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "signrep/cube.hpp"
#include "signrep/errors.hpp"
#include "signrep/rational_approx.hpp"

using namespace signrep;

namespace {

Rat brute_error(const BooleanFunction& f, const SparsePolynomial& p, const SparsePolynomial& q) {
  Rat worst = 0;
  for (std::size_t x = 0; x < f.size(); ++x) {
    Rat qv = q.evaluate(f.point(x));
    REQUIRE(qv > 0);
    Rat e = abs(Rat(f.value(x) - p.evaluate(f.point(x)) / qv));
    if (e > worst) worst = e;
  }
  return worst;
}

// (x1 + x2 + x3) / 2, error 1/2 for MAJ_3
RationalApproximant maj3_linear() {
  SparsePolynomial p(3);
  for (std::size_t i = 0; i < 3; ++i) p += SparsePolynomial::variable(3, i) * make_rat(1, 2);
  return make_approximant(majority(3), p, SparsePolynomial::constant(3, 1));
}

}  // namespace

TEST_CASE("approximant error is evaluated exactly") {
  RationalApproximant a = maj3_linear();
  CHECK(a.verified_error == make_rat(1, 2));
  CHECK(a.verified_error == brute_error(majority(3), a.numerator, a.denominator));
  CHECK(verify_approximant(majority(3), a));
  a.verified_error = make_rat(1, 3);
  CHECK_FALSE(verify_approximant(majority(3), a));
  // a denominator vanishing on the domain is rejected
  SparsePolynomial q = SparsePolynomial::variable(3, 0) + SparsePolynomial::constant(3, 1);
  CHECK_THROWS_AS(approximant_error(majority(3), SparsePolynomial(3), q), VerificationError);
}

TEST_CASE("Newman at N = 4, k = 1 is t/4") {
  NewmanResult nr = newman(Rat(4), 1);
  CHECK(nr.roots == std::vector<Rat>{Rat(2)});
  CHECK(nr.scale == make_rat(1, 2));
  for (long t = -4; t <= 4; ++t)
    if (t != 0) CHECK(nr.approx.r(Rat(t)) == make_rat(t, 4));
  CHECK(nr.approx.verified_error == make_rat(3, 4));
  CHECK(nr.bound_certified);
  CHECK(nr.approx.grid.size() == 8);
}

TEST_CASE("Newman error stays under 1 - N^(-1/k)") {
  for (auto [N, k] : std::vector<std::pair<long, int>>{{2, 1}, {9, 2}, {50, 3}, {1000, 4}}) {
    NewmanResult nr = newman(Rat(N), k);
    // independent check of the bound: N (1 - err)^k >= 1, or tiny surrogate slack
    Rat one_minus = 1 - nr.approx.verified_error;
    bool exact = N * rpow(one_minus, static_cast<unsigned>(k)) >= 1;
    CHECK((exact || nr.approx.bound_slack <= pow2(-40)));
    CHECK(sign_error_on_grid(nr.approx.r, symmetric_grid(N)) == nr.approx.verified_error);
    CHECK(newman_balance_slack(nr) <= pow2(-40));
  }
  CHECK_THROWS_AS(newman(Rat(1), 2), PreconditionError);
}

TEST_CASE("error and accuracy boosting") {
  RationalApproximant a = maj3_linear();
  RationalApproximant b = error_boost(majority(3), a, 2);
  CHECK(verify_approximant(majority(3), b));
  // N = 3, bound 1 - 3^(-1/2) < 0.43
  CHECK(b.verified_error < make_rat(43, 100));
  CHECK(b.bound_slack <= pow2(-40));
  RationalApproximant c = accuracy_boost(majority(3), a);
  CHECK(verify_approximant(majority(3), c));
  // (1/2 / (1 + sqrt(3)/2))^2 < 0.072
  CHECK(c.verified_error < make_rat(72, 1000));
  CHECK(c.bound_slack <= pow2(-60));
  CHECK(c.verified_error == brute_error(majority(3), c.numerator, c.denominator));
}

TEST_CASE("OR and ODD-MAX-BIT families") {
  for (long M : {2L, 5L, 100L}) {
    RationalApproximant a = or_family_approximant(4, Rat(M));
    // worst at one set bit: 2/(M+1)
    CHECK(a.verified_error == make_rat(2, M + 1));
    CHECK(a.verified_error == brute_error(make_named("OR", {4}), a.numerator, a.denominator));
  }
  RationalApproximant o = odd_max_bit_approximant(5, Rat(4));
  CHECK(o.verified_error < 1);
  CHECK(o.verified_error == brute_error(make_named("ODD-MAX-BIT", {5}), o.numerator, o.denominator));
}

TEST_CASE("rational error bracket") {
  BooleanFunction s = make_named("SIGN", {4});
  ErrorBracket b = rational_error_bracket(s, 1, make_rat(1, 64));
  CHECK(b.upper - b.lower <= make_rat(1, 64));
  CHECK(verify_bracket(s, b));
  if (b.lower > 0) CHECK(verify_farkas(bracket_lp(s, 1, b.lower_eps), b.lower_farkas));
  CHECK(b.upper == brute_error(s, b.upper_approximant.numerator, b.upper_approximant.denominator));
  // any degree-1 construction bounds the bracket from above
  NewmanResult nr = newman(Rat(4), 1);
  CHECK(b.lower <= nr.approx.verified_error);
  // interpolation closes the bracket
  ErrorBracket z = rational_error_bracket(majority(3), 3, make_rat(1, 64));
  CHECK(z.lower == 0);
  CHECK(z.upper == 0);
  // hints: an upper construction above the degree is refused, a valid one is adopted
  BracketHints h;
  h.known_upper = make_approximant(majority(3), multilinear_from_values(3, {Rat(-1), Rat(-1), Rat(-1), Rat(1),
                                                                          Rat(-1), Rat(1), Rat(1), Rat(1)}),
                                   SparsePolynomial::constant(3, 1));
  h.known_upper->degree = 3;
  h.known_upper_method = "interpolant";
  CHECK_THROWS_AS(rational_error_bracket(majority(3), 1, make_rat(1, 64), h), PreconditionError);
  ErrorBracket hz = rational_error_bracket(majority(3), 3, make_rat(1, 64), h);
  CHECK(hz.upper_method == "interpolant");
  CHECK(hz.lp_solves == 0);
  // tampering with a bracket is caught
  ErrorBracket t = b;
  t.upper -= make_rat(1, 1000);
  CHECK_FALSE(verify_bracket(s, t));
}

TEST_CASE("automaton decides the sign of 1 + sum 2^i z_i") {
  for (std::size_t n = 1; n <= 5; ++n) {
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= 5;
    std::vector<int> z(n);
    for (std::size_t idx = 0; idx < total; ++idx) {
      std::size_t r = idx;
      long s = 1;
      for (std::size_t i = 0; i < n; ++i) {
        z[i] = static_cast<int>(r % 5) - 2;
        r /= 5;
        s += z[i] * (2L << i);
      }
      CHECK(dfa_run(z) == (s > 0 ? 1 : -1));
    }
  }
  for (int a = -2; a <= 2; ++a)
    for (int b = -2; b <= 2; ++b)
      for (int c = -2; c <= 2; ++c) {
        int v = dfa_alpha(a, b, c);
        CHECK((v == 0 || v == 1 || v == -1));
      }
}

TEST_CASE("automaton approximant") {
  DfaApproximant a = dfa_halfspace_approximant(3, Rat(2));
  BooleanFunction f = make_named("DFA-HS", {3});
  CHECK(a.approx.verified_error < 1);
  CHECK(a.approx.verified_error == brute_error(f, a.approx.numerator, a.approx.denominator));
  CHECK(a.approx.degree <= 64);
  // larger M is closer to the sign
  DfaApproximant b = dfa_halfspace_approximant(3, Rat(8));
  CHECK(b.approx.verified_error < a.approx.verified_error);
  CHECK_THROWS_AS(dfa_halfspace_approximant(3, Rat(1)), PreconditionError);
  // alpha polynomials interpolate the table on {0,+-1,+-2}^3
  for (int x = -2; x <= 2; ++x)
    for (int y = -2; y <= 2; ++y)
      for (int w = -2; w <= 2; ++w) {
        std::vector<Rat> pt{Rat(x), Rat(y), Rat(w)};
        CHECK(a.alpha_poly.evaluate(pt) == dfa_alpha(x, y, w));
        CHECK(a.abs_alpha_poly.evaluate(pt) == std::abs(dfa_alpha(x, y, w)));
      }
}

TEST_CASE("canonical halfspace approximant") {
  HalfspaceZeroError h = canonical_halfspace_zero_error(2, 2, Rat(4));
  BooleanFunction f = make_named("HALFSPACE", {2, 2});
  CHECK(h.delta == 1);
  CHECK(h.approx.verified_error < 1);
  CHECK(h.approx.verified_error == brute_error(f, h.approx.numerator, h.approx.denominator));
  CHECK(h.approx.degree <= h.degree_bound);
  CHECK(h.digit_degree <= 2);
  HalfspaceZeroError one = canonical_halfspace_zero_error(3, 1, Rat(4));
  CHECK(one.approx.verified_error == 0);
}

TEST_CASE("majority constructions") {
  for (long n = 1; n <= 9; ++n) {
    UnivariateApproximant u = maj_exact_interpolant(n);
    CHECK(u.verified_error == 0);
    CHECK(u.r.degree() <= n);
  }
  UnivariateApproximant m = maj_univariate_upper(8, 4);
  CHECK(m.verified_error < 1);
  CHECK(m.r.degree() <= 4);
  CHECK(m.verified_error == sign_error_on_grid(m.r, symmetric_grid(8)));
  CHECK_THROWS_AS(maj_univariate_upper(8, 2), PreconditionError);

  NewmanResult nr = newman(Rat(3), 2);
  RationalApproximant lifted = maj_from_univariate(nr.approx, 5, make_rat(1, 1000));
  CHECK(lifted.verified_error <= nr.approx.verified_error + make_rat(1, 1000));
  CHECK(lifted.verified_error == brute_error(majority(5), lifted.numerator, lifted.denominator));
  UnivariateApproximant back = univariate_from_maj(lifted, 5);
  CHECK(back.verified_error <= lifted.verified_error);
}

TEST_CASE("numeric inequality checks") {
  CHECK(newman_product_check(Rat(2), 3).holds);
  CHECK(newman_product_check(Rat(5), 6).holds);
  CHECK(newman_product_check(make_rat(3, 2), 10).holds);
  CHECK(infinite_product_check(Rat(2)).holds);
  CHECK(infinite_product_check(Rat(9)).holds);
  CHECK(infinite_product_check(make_rat(5, 4)).holds);
  for (int n = 1; n <= 6; ++n) {
    BinomialRatio br = binomial_ratio(n);
    CHECK(br.closed_form_matches);
    // direct maximum of |p(-t)/p(t)| over t = 1..n+1
    Rat best = 0;
    for (int t = 1; t <= n + 1; ++t) {
      Rat a = 1, b = 1;
      for (int i = 1; i <= n; ++i) {
        Rat r = Rat(i) + make_rat(1, 2);
        a *= Rat(-t) - r;
        b *= Rat(t) - r;
      }
      Rat v = abs(Rat(a / b));
      if (v > best) best = v;
    }
    CHECK(br.max_ratio == best);
  }
  CHECK(binomial_ratio(1).max_ratio == 7);
  CHECK(floors_check(110, 2).holds);
  CHECK(floors_check(330, 3).holds);
  CHECK(floors_check(1000, 5).holds);
  CHECK_THROWS_AS(floors_check(50, 2), PreconditionError);
}

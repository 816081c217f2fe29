#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "signrep/certificates.hpp"
#include "signrep/errors.hpp"

using namespace signrep;

namespace {

bool represents(const SparsePolynomial& p, const BooleanFunction& f) {
  for (std::size_t x = 0; x < f.size(); ++x)
    if (sgn(p.evaluate(f.point(x))) != f.value(x)) return false;
  return true;
}

}  // namespace

TEST_CASE("moment-matched pair from binomial weights") {
  for (int m = 1; m <= 6; ++m) {
    MomentMatchedPair mm = moment_matched_pair(m);
    REQUIRE(mm.lambda0.size() == static_cast<std::size_t>(2 * m + 1));
    Rat s0 = 0, s1 = 0;
    for (int t = -m; t <= m; ++t) {
      Rat l0 = Rat(binomial(4 * m + 1, 2 * m + 2 * t)) / Rat(ipow(16, m));
      Rat l1 = Rat(binomial(4 * m + 1, 2 * m + 2 * t + 1)) / Rat(ipow(16, m));
      CHECK(mm.lambda0[t + m] == l0);
      CHECK(mm.lambda1[t + m] == l1);
      s0 += l0;
      s1 += l1;
    }
    CHECK(s0 == 1);
    CHECK(s1 == 1);
    // moments agree up to 4m by direct summation, and not at 4m + 1
    for (int d = 0; d <= 4 * m + 1; ++d) {
      Rat e0 = 0, e1 = 0;
      for (int t = -m; t <= m; ++t) {
        e0 += mm.lambda0[t + m] * rpow(Rat(2 * t), d);
        e1 += mm.lambda1[t + m] * rpow(Rat(2 * t + 1), d);
      }
      CHECK(moment_gap(mm, d) == e0 - e1);
      if (d <= 4 * m) {
        CHECK(e0 == e1);
        CHECK(mm.alphas[d] == e0);
      } else {
        CHECK(e0 != e1);
      }
    }
  }
  CHECK_THROWS_AS(moment_matched_pair(0), PreconditionError);
}

TEST_CASE("product distributions") {
  ProductDistribution mu = mu_b({0, 1, 1}, 1);
  auto atoms = mu.atoms();
  CHECK(atoms.size() == 27);
  Rat total = 0;
  for (const auto& [v, p] : atoms) total += p;
  CHECK(total == 1);
  // first moments E[2v + b] per component, computed from the atoms
  std::vector<Rat> first(3, Rat(0));
  for (const auto& [v, p] : atoms)
    for (std::size_t i = 0; i < 3; ++i) first[i] += p * (2 * v[i] + mu.b[i]);
  CHECK(mu.moments(1) == first);
  // moment matching makes every component look alike up to degree 4m
  for (int d = 0; d <= 4; ++d) {
    auto m = mu.moments(d);
    CHECK(m[0] == m[1]);
    CHECK(m[1] == m[2]);
  }
}

TEST_CASE("halfspace coupling at n = 1 and n = 2") {
  for (int n : {1, 2}) {
    HalfspaceCoupling c = halfspace_moment_coupling(n);
    CHECK(coupling_support_ok(c));
    CHECK(c.z.size() == static_cast<std::size_t>(2 * n + 2));
    CHECK(c.z.front() == -(1L << n));
    CHECK(c.z.back() == (1L << n));
    for (std::size_t comp = 0; comp < c.components.size(); ++comp) {
      Rat total = 0;
      for (const auto& [x, p] : c.components[comp]) {
        total += p;
        long s = 0;
        for (int i = 0; i <= n; ++i) {
          s += (1L << i) * x[i];
          CHECK(std::abs(x[i]) <= 3 * n + 1);
        }
        CHECK(s == c.z[comp]);
      }
      CHECK(total == 1);
    }
    for (unsigned d1 = 0; d1 <= 4; ++d1) {
      std::vector<unsigned> d(n, 0);
      d[0] = d1;
      auto m = coupling_moment(c, d);
      for (const auto& v : m) CHECK(v == m.front());
    }
  }
}

TEST_CASE("expectations are polynomials in z of no larger degree") {
  // p(x1, x2) = x1^2 x2 + 3 x2 - x1 at n = 1
  SparsePolynomial p(2);
  p.add_term({2, 1}, Rat(1));
  p.add_term({0, 1}, Rat(3));
  p.add_term({1, 0}, Rat(-1));
  UnivariatePolynomial q = degree_nonincreasing_map(p, 1);
  CHECK(q.degree() <= p.degree());
  HalfspaceCoupling c = halfspace_moment_coupling(1);
  auto e = coupling_expectation(c, p);
  for (std::size_t i = 0; i < c.z.size(); ++i) CHECK(q(Rat(c.z[i])) == e[i]);
}

TEST_CASE("sign pattern is not representable at degree 2n") {
  SignPatternCert s = sign_pattern_infeasible(1);
  CHECK(s.degree == 2);
  CHECK(verify_farkas(threshold_lp(s.g, 2), s.farkas));
  CHECK(verify_witness(s.gordan, s.g).ok);
  REQUIRE(s.rep_above);
  CHECK(represents(*s.rep_above, s.g));
  CHECK_FALSE(sign_representation(s.g, 2).has_value());
}

TEST_CASE("lower-bound certificate for the grid halfspace") {
  HalfspaceCriterion h = halfspace_criterion_cert(1);
  CHECK(verify_lower_cert(h.cert).ok);
  CHECK(h.cert.implied_bound == 2 * h.cert.delta / (1 + h.cert.delta));
  CHECK(h.cert.delta > 0);
  CHECK(h.cert.delta <= 1);
  CHECK(h.sqrt2 * h.sqrt2 <= 2 + pow2(-50));
  CHECK(h.sqrt2 * h.sqrt2 >= 2 - pow2(-50));
  // the certificate's function agrees with the halfspace on S and -S
  BooleanFunction hs = make_named("HS-GRID", {1});
  BooleanFunction cf = cert_function(h.cert);
  for (std::size_t i = 0; i < cf.size(); ++i) CHECK(hs.value_at(cf.point(i)) == cf.value(i));
  // and bounds R+(cf, d) from below: the LP bracket upper cannot be smaller
  ErrorBracket b = rational_error_bracket(cf, h.cert.d, make_rat(1, 128));
  CHECK(h.cert.implied_bound <= b.upper);
  RationalLowerBoundCert bad = h.cert;
  bad.psi[0] += 1;
  CHECK_FALSE(verify_lower_cert(bad).ok);
  bad = h.cert;
  bad.delta += make_rat(1, 1000);
  CHECK_FALSE(verify_lower_cert(bad).ok);
}

TEST_CASE("majority presets and criterion certificates") {
  CHECK(maj_preset(8, 1)->preset == "small-degree");
  CHECK(maj_preset(8, 3)->preset == "small-degree");
  CHECK(maj_preset(8, 4)->preset == "near-linear");
  CHECK(maj_preset(16, 4)->preset == "small-degree");
  CHECK(maj_preset(16, 9)->preset == "near-linear");
  CHECK_THROWS_AS(maj_high_degree_preset(16, 5), PreconditionError);
  for (int d = 1; d <= 5; ++d) {
    auto in = maj_preset(8, d);
    REQUIRE(in);
    RationalLowerBoundCert c = maj_criterion_cert(8, d, in->S, in->r);
    CHECK(verify_lower_cert(c).ok);
    if (in->floor) CHECK(c.delta >= in->floor->lo);
    ErrorBracket b = rational_error_bracket(sign_function(symmetric_grid(8)), d, make_rat(1, 64));
    CHECK(c.implied_bound <= b.upper);
  }
}

TEST_CASE("majority error table") {
  auto rows = maj_error_table(8, {1, 2, 8}, make_rat(1, 64));
  REQUIRE(rows.size() == 3);
  for (const auto& r : rows) {
    CHECK(r.sandwich);
    CHECK(r.bracket.upper - r.bracket.lower <= make_rat(1, 64));
  }
  CHECK(rows[2].construction_upper == 0);
  CHECK(rows[2].bracket.upper == 0);
  std::string csv = maj_table_csv(rows);
  CHECK(csv.rfind("n,d,criterion_lower,lower,upper,construction_upper,", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);
}

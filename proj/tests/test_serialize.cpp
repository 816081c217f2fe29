#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "signrep/errors.hpp"
#include "signrep/serialize.hpp"

using namespace signrep;

namespace {

Json reparse(const Json& j) { return Json::parse(j.dump()); }

}  // namespace

TEST_CASE("function specs") {
  FunctionSpec s = parse_function_spec("HALFSPACE:2,3");
  CHECK(s.family == "HALFSPACE");
  CHECK(s.params == std::vector<long>{2, 3});
  CHECK(to_string(s) == "HALFSPACE:2,3");
  CHECK(parse_function_spec(to_string(s)) == s);
  CHECK(function_spec_from_json(reparse(to_json(s))) == s);
  CHECK_THROWS_AS(parse_function_spec("MAJ:x"), PreconditionError);
  CHECK_THROWS_AS(parse_function_spec(":3"), PreconditionError);
  CHECK(build(parse_function_spec("MAJ:3")) == majority(3));
  BooleanFunction t = function_from_json(reparse(function_table_json(make_named("SIGN", {2}))));
  CHECK(t == make_named("SIGN", {2}));
}

TEST_CASE("rationals are num/den strings") {
  CHECK(rat_json(make_rat(-3, 6)) == Json("-1/2"));
  CHECK(rat_from_json(Json("4/1")) == 4);
  CHECK_THROWS_AS(rat_from_json(Json(0.5)), PreconditionError);
}

TEST_CASE("polynomials round-trip") {
  SparsePolynomial p(3);
  p.add_term({1, 0, 2}, make_rat(-7, 3));
  p.add_term({0, 0, 0}, Rat(5));
  CHECK(polynomial_from_json(reparse(to_json(p))) == p);
  UnivariatePolynomial u({Rat(1), Rat(0), make_rat(2, 9)});
  CHECK(univariate_from_json(reparse(to_json(u))) == u);
}

TEST_CASE("certificate files re-verify and tampering is detected") {
  FunctionSpec spec{"PARITY", {3}};
  auto w = gordan_witness(build(spec), 2);
  REQUIRE(w);
  Json j = reparse(witness_json(*w, to_json(spec)));
  CHECK(check_certificate(j).ok);
  DualWitness back = witness_from_json(j);
  CHECK(back.weights == w->weights);
  CHECK(back.points == w->points);
  j["weights"][0] = "7/1";
  CHECK_FALSE(check_certificate(j).ok);
  j = reparse(witness_json(*w, to_json(spec)));
  j["function"] = to_json(FunctionSpec{"MAJ", {3}});
  CHECK_FALSE(check_certificate(j).ok);
}

TEST_CASE("approximants and brackets") {
  FunctionSpec spec{"SIGN", {3}};
  BooleanFunction f = build(spec);
  ErrorBracket b = rational_error_bracket(f, 1, make_rat(1, 32));
  Json j = reparse(bracket_json(b, to_json(spec)));
  CHECK(check_certificate(j).ok);
  ErrorBracket back = bracket_from_json(j);
  CHECK(back.lower == b.lower);
  CHECK(back.upper == b.upper);
  CHECK(back.lower_farkas == b.lower_farkas);
  CHECK(back.upper_approximant.numerator == b.upper_approximant.numerator);
  Json a = reparse(approximant_json(b.upper_approximant, to_json(spec)));
  CHECK(check_certificate(a).ok);
  a["verified_error"] = "0/1";
  CHECK_FALSE(check_certificate(a).ok);
  j["upper"] = rat_json(b.upper / 2);
  CHECK_FALSE(check_certificate(j).ok);
}

TEST_CASE("lower-bound, composed, density and degree records") {
  HalfspaceCriterion h = halfspace_criterion_cert(1);
  Json lc = reparse(lower_cert_json(h.cert));
  CHECK(check_certificate(lc).ok);
  CHECK(lower_cert_from_json(lc).psi == h.cert.psi);

  BooleanFunction p2 = parity(2);
  auto G = gordan_witness(p2, 1);
  REQUIRE(G);
  DualWitness Psi = signed_from_gordan(*G, p2);
  Psi.kind = WitnessKind::Approx;
  Psi.correlation = 1;
  Json cw = reparse(composed_json(compose_witness_threshold(Psi, p2, *G, p2, make_rat(1, 2))));
  CHECK(check_certificate(cw).ok);
  cw["claimed_orthogonality"] = 5;
  CHECK_FALSE(check_certificate(cw).ok);

  FunctionSpec m{"MAJ", {3}};
  Json dj = reparse(density_json(density_exact(build(m)), to_json(m)));
  CHECK(check_certificate(dj).ok);
  dj["value"] = 2;
  CHECK_FALSE(check_certificate(dj).ok);

  FunctionSpec par{"PARITY", {2}};
  Json dr = reparse(degree_report_json(threshold_degree(build(par)), to_json(par), "degthr"));
  CHECK(check_certificate(dr).ok);
  dr["degree"] = 1;
  CHECK_FALSE(check_certificate(dr).ok);

  CHECK_FALSE(check_certificate(Json{{"schema", "nope/1"}}).ok);
  CHECK_FALSE(check_certificate(Json::object()).ok);
}

TEST_CASE("conjunction sign-representations re-verify") {
  FunctionSpec spec{"MAJ", {3}};
  BooleanFunction f = build(spec);
  ErrorBracket b = rational_error_bracket(f, 2, make_rat(1, 64));
  REQUIRE(b.upper < make_rat(1, 2));
  SparsePolynomial p = brs_conjunction({b.upper_approximant, b.upper_approximant}, {f, f});
  Json j{{"schema", "signrep.brs/1"}, {"function", to_json(spec)}, {"copies", 2},
         {"approximant", approximant_json(b.upper_approximant, to_json(spec))}, {"sign_rep", to_json(p)}};
  j = reparse(j);
  CHECK(check_certificate(j).ok);
  Json flipped = j;
  flipped["sign_rep"] = reparse(to_json(p * Rat(-1)));
  CHECK_FALSE(check_certificate(flipped).ok);
  Json more = j;
  more["copies"] = 3;
  CHECK_FALSE(check_certificate(more).ok);
}

TEST_CASE("experiment configs round-trip") {
  ExperimentConfig c;
  c.command = "maj-table";
  c.functions = {FunctionSpec{"MAJ", {8}}, FunctionSpec{"HALFSPACE", {2, 2}}};
  c.grid["n"] = {8, 16};
  c.grid["d"] = {1, 2, 3};
  c.precision = make_rat(1, 128);
  c.output = "table.csv";
  c.format = "csv";
  Json j = to_json(c);
  CHECK(config_from_json(Json::parse(j.dump())) == c);
  CHECK(to_json(config_from_json(j)).dump() == j.dump());
  j["format"] = "xml";
  CHECK_THROWS_AS(config_from_json(j), PreconditionError);
}

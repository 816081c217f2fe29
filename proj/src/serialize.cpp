#include "signrep/serialize.hpp"

#include <cmath>
#include <sstream>

#include "signrep/errors.hpp"

namespace signrep {

namespace {

const Json& at(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw PreconditionError(std::string("missing field: ") + key);
  return j.at(key);
}

std::vector<Rat> rats_from_json(const Json& j) {
  std::vector<Rat> v;
  for (const auto& x : j) v.push_back(rat_from_json(x));
  return v;
}

Json rats_json(const std::vector<Rat>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(rat_json(x));
  return a;
}

WitnessKind kind_from_string(const std::string& s) {
  if (s == "gordan") return WitnessKind::Gordan;
  if (s == "gordan-signed") return WitnessKind::GordanSigned;
  if (s == "approx") return WitnessKind::Approx;
  throw PreconditionError("unknown witness kind: " + s);
}

}  // namespace

BooleanFunction build(const FunctionSpec& s) { return make_named(s.family, s.params); }

FunctionSpec parse_function_spec(const std::string& text) {
  FunctionSpec s;
  auto colon = text.find(':');
  s.family = text.substr(0, colon);
  require(!s.family.empty(), "empty function family");
  if (colon != std::string::npos) {
    std::stringstream ss(text.substr(colon + 1));
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      try {
        std::size_t used = 0;
        s.params.push_back(std::stol(tok, &used));
        require(used == tok.size(), "bad parameter: " + tok);
      } catch (const std::logic_error&) {
        throw PreconditionError("bad parameter: " + tok);
      }
    }
  }
  return s;
}

std::string to_string(const FunctionSpec& s) {
  std::string out = s.family;
  for (std::size_t i = 0; i < s.params.size(); ++i) out += (i ? "," : ":") + std::to_string(s.params[i]);
  return out;
}

Json rat_json(const Rat& r) { return to_string(r); }

Rat rat_from_json(const Json& j) {
  if (!j.is_string()) throw PreconditionError("rational must be a \"num/den\" string");
  return parse_rat(j.get<std::string>());
}

Json point_json(const Point& p) { return rats_json(p); }
Point point_from_json(const Json& j) { return rats_from_json(j); }

Json to_json(const FunctionSpec& s) { return Json{{"family", s.family}, {"params", s.params}}; }

FunctionSpec function_spec_from_json(const Json& j) {
  return FunctionSpec{at(j, "family").get<std::string>(), at(j, "params").get<std::vector<long>>()};
}

Json function_table_json(const BooleanFunction& f) {
  Json pts = Json::array();
  for (const auto& p : f.points()) pts.push_back(point_json(p));
  return Json{{"name", f.name()}, {"points", pts}, {"values", f.values()}};
}

BooleanFunction function_from_json(const Json& j) {
  if (j.contains("family")) return build(function_spec_from_json(j));
  std::vector<Point> pts;
  for (const auto& p : at(j, "points")) pts.push_back(point_from_json(p));
  return BooleanFunction(std::move(pts), at(j, "values").get<std::vector<int>>(), j.value("name", std::string()));
}

Json to_json(const SparsePolynomial& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back(Json{{"exponent", e}, {"coefficient", rat_json(c)}});
  return Json{{"num_vars", p.num_vars()}, {"terms", terms}};
}

SparsePolynomial polynomial_from_json(const Json& j) {
  SparsePolynomial p(at(j, "num_vars").get<std::size_t>());
  for (const auto& t : at(j, "terms")) {
    Exponent e = at(t, "exponent").get<Exponent>();
    require(e.size() == p.num_vars(), "exponent length differs from num_vars");
    p.add_term(e, rat_from_json(at(t, "coefficient")));
  }
  return p;
}

Json to_json(const UnivariatePolynomial& p) { return Json{{"coefficients", rats_json(p.coeffs())}}; }

UnivariatePolynomial univariate_from_json(const Json& j) {
  return UnivariatePolynomial(rats_from_json(at(j, "coefficients")));
}

Json witness_json(const DualWitness& w, const Json& function) {
  Json pts = Json::array();
  for (const auto& p : w.points) pts.push_back(point_json(p));
  return Json{{"schema", "signrep.witness/1"},
              {"function", function},
              {"kind", to_string(w.kind)},
              {"orthogonality_degree", w.orthogonality_degree},
              {"degree_weights", w.degree_weights},
              {"l1_mass", rat_json(w.l1_mass)},
              {"correlation", rat_json(w.correlation)},
              {"points", pts},
              {"weights", rats_json(w.weights)}};
}

DualWitness witness_from_json(const Json& j) {
  DualWitness w;
  w.kind = kind_from_string(at(j, "kind").get<std::string>());
  w.orthogonality_degree = at(j, "orthogonality_degree").get<int>();
  w.degree_weights = at(j, "degree_weights").get<std::vector<long>>();
  w.l1_mass = rat_from_json(at(j, "l1_mass"));
  w.correlation = rat_from_json(at(j, "correlation"));
  for (const auto& p : at(j, "points")) w.points.push_back(point_from_json(p));
  w.weights = rats_from_json(at(j, "weights"));
  return w;
}

Json approximant_json(const RationalApproximant& a, const Json& function) {
  return Json{{"schema", "signrep.approximant/1"},
              {"function", function},
              {"degree", a.degree},
              {"verified_error", rat_json(a.verified_error)},
              {"denominator_positive", a.denominator_positive},
              {"bound_slack", rat_json(a.bound_slack)},
              {"numerator", to_json(a.numerator)},
              {"denominator", to_json(a.denominator)}};
}

RationalApproximant approximant_from_json(const Json& j) {
  RationalApproximant a;
  a.degree = at(j, "degree").get<int>();
  a.verified_error = rat_from_json(at(j, "verified_error"));
  a.denominator_positive = at(j, "denominator_positive").get<bool>();
  a.bound_slack = rat_from_json(at(j, "bound_slack"));
  a.numerator = polynomial_from_json(at(j, "numerator"));
  a.denominator = polynomial_from_json(at(j, "denominator"));
  return a;
}

Json bracket_json(const ErrorBracket& b, const Json& function) {
  return Json{{"schema", "signrep.bracket/1"},
              {"function", function},
              {"d", b.degree},
              {"lower", rat_json(b.lower)},
              {"upper", rat_json(b.upper)},
              {"lower_method", b.lower_method},
              {"lower_eps", rat_json(b.lower_eps)},
              {"lower_farkas", rats_json(b.lower_farkas)},
              {"upper_method", b.upper_method},
              {"upper_certificate", approximant_json(b.upper_approximant, function)},
              {"lp_solves", b.lp_solves}};
}

ErrorBracket bracket_from_json(const Json& j) {
  ErrorBracket b;
  b.degree = at(j, "d").get<int>();
  b.lower = rat_from_json(at(j, "lower"));
  b.upper = rat_from_json(at(j, "upper"));
  b.lower_method = at(j, "lower_method").get<std::string>();
  b.lower_eps = rat_from_json(at(j, "lower_eps"));
  b.lower_farkas = rats_from_json(at(j, "lower_farkas"));
  b.upper_method = at(j, "upper_method").get<std::string>();
  b.upper_approximant = approximant_from_json(at(j, "upper_certificate"));
  b.lp_solves = at(j, "lp_solves").get<int>();
  return b;
}

Json lower_cert_json(const RationalLowerBoundCert& c) {
  Json S = Json::array(), pts = Json::array();
  for (const auto& p : c.S) S.push_back(point_json(p));
  for (const auto& p : c.points) pts.push_back(point_json(p));
  return Json{{"schema", "signrep.lower-cert/1"}, {"d", c.d},          {"delta", rat_json(c.delta)},
              {"implied_bound", rat_json(c.implied_bound)},         {"S", S}, {"points", pts},
              {"psi", rats_json(c.psi)}};
}

RationalLowerBoundCert lower_cert_from_json(const Json& j) {
  RationalLowerBoundCert c;
  c.d = at(j, "d").get<int>();
  c.delta = rat_from_json(at(j, "delta"));
  c.implied_bound = rat_from_json(at(j, "implied_bound"));
  for (const auto& p : at(j, "S")) c.S.push_back(point_from_json(p));
  for (const auto& p : at(j, "points")) c.points.push_back(point_from_json(p));
  c.psi = rats_from_json(at(j, "psi"));
  return c;
}

Json composed_json(const ComposedWitness& w) {
  Json z = witness_json(w.zeta, function_table_json(w.composed));
  return Json{{"schema", "signrep.composed-witness/1"},
              {"claimed_orthogonality", w.claimed_orthogonality},
              {"claimed_correlation_bound", rat_json(w.claimed_correlation_bound)},
              {"strict_bound", w.strict_bound},
              {"l1_mass", rat_json(w.l1_mass)},
              {"correlation", rat_json(w.correlation)},
              {"certificate_bound", rat_json(w.certificate_bound)},
              {"bs_bound", rat_json(w.bs_bound)},
              {"zeta", z}};
}

Json density_json(const DensityReport& r, const Json& function) {
  Json sup = Json::array();
  for (const auto& e : r.support) sup.push_back(e);
  return Json{{"schema", "signrep.density/1"}, {"function", function},     {"value", r.value},
              {"method", r.method},            {"support", sup},           {"witness", to_json(r.witness)}};
}

Json degree_report_json(const DegreeReport& r, const Json& function, const std::string& measure) {
  Json j{{"schema", "signrep.degree/1"}, {"function", function}, {"measure", measure}, {"degree", r.degree},
         {"error", rat_json(r.error)}};
  j["primal"] = r.primal ? to_json(*r.primal) : Json(nullptr);
  j["dual"] = r.dual ? witness_json(*r.dual, function) : Json(nullptr);
  return j;
}

WitnessCheck check_certificate(const Json& j) {
  try {
    std::string schema = at(j, "schema").get<std::string>();
    if (schema == "signrep.witness/1") {
      return verify_witness(witness_from_json(j), function_from_json(at(j, "function")));
    }
    if (schema == "signrep.approximant/1") {
      BooleanFunction f = function_from_json(at(j, "function"));
      if (!verify_approximant(f, approximant_from_json(j))) return {false, "approximant error differs"};
      return {};
    }
    if (schema == "signrep.bracket/1") {
      BooleanFunction f = function_from_json(at(j, "function"));
      if (!verify_bracket(f, bracket_from_json(j))) return {false, "bracket certificates fail"};
      return {};
    }
    if (schema == "signrep.lower-cert/1") return verify_lower_cert(lower_cert_from_json(j));
    if (schema == "signrep.composed-witness/1") {
      ComposedWitness w;
      const Json& z = at(j, "zeta");
      w.composed = function_from_json(at(z, "function"));
      w.zeta = witness_from_json(z);
      w.claimed_orthogonality = at(j, "claimed_orthogonality").get<int>();
      w.claimed_correlation_bound = rat_from_json(at(j, "claimed_correlation_bound"));
      w.strict_bound = at(j, "strict_bound").get<bool>();
      w.l1_mass = rat_from_json(at(j, "l1_mass"));
      w.correlation = rat_from_json(at(j, "correlation"));
      w.certificate_bound = rat_from_json(at(j, "certificate_bound"));
      w.bs_bound = rat_from_json(at(j, "bs_bound"));
      return verify_composed(w);
    }
    if (schema == "signrep.density/1") {
      BooleanFunction f = function_from_json(at(j, "function"));
      std::vector<Exponent> sup;
      for (const auto& e : at(j, "support")) sup.push_back(e.get<Exponent>());
      if (static_cast<int>(sup.size()) != at(j, "value").get<int>()) return {false, "support size differs from value"};
      SparsePolynomial w = polynomial_from_json(at(j, "witness"));
      for (std::size_t x = 0; x < f.size(); ++x)
        if (sgn(w.evaluate(f.point(x))) != f.value(x)) return {false, "witness misses a sign"};
      for (const auto& [e, c] : w.terms())
        if (std::find(sup.begin(), sup.end(), e) == sup.end()) return {false, "witness uses a monomial outside the support"};
      return {};
    }
    if (schema == "signrep.brs/1") {
      BooleanFunction f = function_from_json(at(j, "function"));
      int k = at(j, "copies").get<int>();
      const Json& aj = at(j, "approximant");
      RationalApproximant a = approximant_from_json(aj);
      if (!verify_approximant(function_from_json(at(aj, "function")), a)) return {false, "approximant error differs"};
      if (!(a.verified_error < Rat(1, k))) return {false, "approximant error is not below 1/copies"};
      if (k < 1 || std::pow(static_cast<long double>(f.size()), k) > static_cast<long double>(std::size_t(1) << 20))
        return {false, "product domain too large to re-check"};
      SparsePolynomial p = polynomial_from_json(at(j, "sign_rep"));
      // walk the product domain; AND of copies is -1 iff every copy is -1
      std::vector<std::size_t> idx(k, 0);
      while (true) {
        Point pt;
        int want = -1;
        for (int c = 0; c < k; ++c) {
          const Point& q = f.point(idx[c]);
          pt.insert(pt.end(), q.begin(), q.end());
          if (f.value(idx[c]) == 1) want = 1;
        }
        if (sgn(p.evaluate(pt)) != want) return {false, "sign_rep misses a sign"};
        int c = k - 1;
        while (c >= 0 && ++idx[c] == f.size()) idx[c--] = 0;
        if (c < 0) break;
      }
      return {};
    }
    if (schema == "signrep.degree/1") {
      BooleanFunction f = function_from_json(at(j, "function"));
      std::string measure = at(j, "measure").get<std::string>();
      int d = at(j, "degree").get<int>();
      if (!j.at("primal").is_null()) {
        SparsePolynomial p = polynomial_from_json(j.at("primal"));
        if (p.degree() > d) return {false, "primal exceeds the degree"};
        Rat err = rat_from_json(at(j, "error"));
        for (std::size_t x = 0; x < f.size(); ++x) {
          Rat v = p.evaluate(f.point(x));
          if (measure == "degthr" ? sgn(v) != f.value(x) : abs(Rat(v - f.value(x))) > err)
            return {false, "primal fails at a domain point"};
        }
      }
      if (!j.at("dual").is_null()) {
        DualWitness w = witness_from_json(j.at("dual"));
        if (w.orthogonality_degree != d - 1) return {false, "dual is not at degree d-1"};
        return verify_witness(w, f);
      }
      return {};
    }
    return {false, "unknown schema: " + schema};
  } catch (const Error& e) {
    return {false, e.what()};
  } catch (const nlohmann::json::exception& e) {
    return {false, e.what()};
  }
}

Json to_json(const ExperimentConfig& c) {
  Json fs = Json::array();
  for (const auto& f : c.functions) fs.push_back(to_json(f));
  Json grid = Json::object();
  for (const auto& [k, v] : c.grid) grid[k] = v;
  return Json{{"schema", "signrep.config/1"}, {"command", c.command}, {"functions", fs},
              {"grid", grid},                 {"precision", rat_json(c.precision)},
              {"output", c.output},           {"format", c.format}};
}

ExperimentConfig config_from_json(const Json& j) {
  ExperimentConfig c;
  c.command = at(j, "command").get<std::string>();
  for (const auto& f : at(j, "functions")) c.functions.push_back(function_spec_from_json(f));
  for (const auto& [k, v] : at(j, "grid").items()) c.grid[k] = v.get<std::vector<long>>();
  c.precision = rat_from_json(at(j, "precision"));
  c.output = at(j, "output").get<std::string>();
  c.format = at(j, "format").get<std::string>();
  require(c.format == "csv" || c.format == "json" || c.format == "text", "format must be csv, json or text");
  return c;
}

}  // namespace signrep

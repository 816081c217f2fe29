#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "signrep/boolfun.hpp"
#include "signrep/certificates.hpp"
#include "signrep/composition.hpp"
#include "signrep/degrees.hpp"
#include "signrep/density.hpp"
#include "signrep/rational_approx.hpp"

namespace signrep {

using Json = nlohmann::ordered_json;

// Named family with parameters, or an explicit table when family is empty.
struct FunctionSpec {
  std::string family;
  std::vector<long> params;
  friend bool operator==(const FunctionSpec&, const FunctionSpec&) = default;
};
BooleanFunction build(const FunctionSpec& s);
// "MAJ:3", "HALFSPACE:2,2", "OR-PM:2" ...
FunctionSpec parse_function_spec(const std::string& text);
std::string to_string(const FunctionSpec& s);

Json rat_json(const Rat& r);
Rat rat_from_json(const Json& j);
Json point_json(const Point& p);
Point point_from_json(const Json& j);

Json to_json(const FunctionSpec& s);
FunctionSpec function_spec_from_json(const Json& j);
Json function_table_json(const BooleanFunction& f);
BooleanFunction function_from_json(const Json& j);  // spec or explicit table

Json to_json(const SparsePolynomial& p);
SparsePolynomial polynomial_from_json(const Json& j);
Json to_json(const UnivariatePolynomial& p);
UnivariatePolynomial univariate_from_json(const Json& j);

// Certificate files; each carries a "schema" tag and the function it is about.
Json witness_json(const DualWitness& w, const Json& function);
DualWitness witness_from_json(const Json& j);
Json approximant_json(const RationalApproximant& a, const Json& function);
RationalApproximant approximant_from_json(const Json& j);
Json bracket_json(const ErrorBracket& b, const Json& function);
ErrorBracket bracket_from_json(const Json& j);
Json lower_cert_json(const RationalLowerBoundCert& c);
RationalLowerBoundCert lower_cert_from_json(const Json& j);
Json composed_json(const ComposedWitness& w);
Json density_json(const DensityReport& r, const Json& function);
Json degree_report_json(const DegreeReport& r, const Json& function, const std::string& measure);

// Re-verifies any certificate file produced above; reason is empty on success.
WitnessCheck check_certificate(const Json& j);

struct ExperimentConfig {
  std::string command;
  std::vector<FunctionSpec> functions;
  std::map<std::string, std::vector<long>> grid;
  Rat precision = Rat(1, 64);
  std::string output;
  std::string format = "json";  // csv | json | text
  friend bool operator==(const ExperimentConfig&, const ExperimentConfig&) = default;
};
Json to_json(const ExperimentConfig& c);
ExperimentConfig config_from_json(const Json& j);

}  // namespace signrep

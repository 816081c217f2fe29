// signrep command-line front end.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "signrep/errors.hpp"
#include "signrep/serialize.hpp"
#include "signrep/suite.hpp"

using namespace signrep;

namespace {

struct FnArgs {
  std::string function;  // "MAJ:3"
  std::string family;
  long n = -1;
  std::vector<long> params;

  void add(CLI::App* app) {
    app->add_option("--function,-f", function, "function spec, e.g. MAJ:3 or HALFSPACE:2,2");
    app->add_option("--family", family, "named family");
    app->add_option("--n", n, "first family parameter");
    app->add_option("--params", params, "further family parameters")->delimiter(',');
  }
  FunctionSpec spec() const {
    if (!function.empty()) return parse_function_spec(function);
    require(!family.empty(), "give --function or --family");
    FunctionSpec s{family, {}};
    if (n >= 0) s.params.push_back(n);
    s.params.insert(s.params.end(), params.begin(), params.end());
    return s;
  }
};

void write_out(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream os(path, std::ios::binary);
  if (!os) throw PreconditionError("cannot write " + path);
  os << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json read_json(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw PreconditionError("cannot read " + path);
  try {
    return Json::parse(is);
  } catch (const nlohmann::json::exception& e) {
    throw PreconditionError(path + ": " + e.what());
  }
}

Rat rat_arg(const std::string& s) {
  try {
    return parse_rat(s);
  } catch (const std::exception&) {
    throw PreconditionError("not a rational: " + s);
  }
}

void check_or_fail(const Json& j) {
  WitnessCheck c = check_certificate(j);
  if (!c.ok) throw VerificationError("emitted certificate fails its re-check: " + c.reason);
}

int run_degthr(const FunctionSpec& s, const std::string& out) {
  BooleanFunction f = build(s);
  DegreeReport r = threshold_degree(f);
  Json j = degree_report_json(r, to_json(s), "degthr");
  check_or_fail(j);
  std::cout << r.degree << "\n";
  if (!out.empty()) write_out(out, dump(j));
  return 0;
}

int run_adeg(const FunctionSpec& s, const Rat& eps, const std::string& out) {
  BooleanFunction f = build(s);
  DegreeReport r = eps_approx_degree(f, eps);
  Json j = degree_report_json(r, to_json(s), "adeg");
  check_or_fail(j);
  std::cout << r.degree << " " << to_string(r.error) << "\n";
  if (!out.empty()) write_out(out, dump(j));
  return 0;
}

int run_rbracket(const FunctionSpec& s, int d, const Rat& prec, const std::string& out) {
  BooleanFunction f = build(s);
  ErrorBracket b = rational_error_bracket(f, d, prec);
  Json j = bracket_json(b, to_json(s));
  check_or_fail(j);
  std::cout << to_string(b.lower) << " " << to_string(b.upper) << "\n";
  if (!out.empty()) write_out(out, dump(j));
  return 0;
}

int run_maj_table(long n, const std::vector<int>& ds, const Rat& prec, const std::string& format,
                  const std::string& out) {
  auto rows = maj_error_table(n, ds, prec);
  bool ok = true;
  for (const auto& r : rows) ok = ok && r.sandwich;
  if (format == "json") {
    Json a = Json::array();
    for (const auto& r : rows) {
      Json b = bracket_json(r.bracket, Json{{"sign_grid", n}});
      b["criterion_lower"] = r.criterion_lower ? rat_json(*r.criterion_lower) : Json(nullptr);
      b["criterion_method"] = r.criterion_method;
      b["construction_upper"] = rat_json(r.construction_upper);
      b["construction_method"] = r.construction_method;
      b["sandwich"] = r.sandwich;
      a.push_back(b);
    }
    write_out(out, dump(Json{{"schema", "signrep.maj-table/1"}, {"n", n}, {"rows", a}}));
  } else {
    write_out(out, maj_table_csv(rows));
  }
  if (!ok) throw VerificationError("a majority row is not sandwiched");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact sign-representation, approximation and rational-approximation toolkit"};
  app.require_subcommand(1);
  std::string out;

  FnArgs fa;
  auto* degthr = app.add_subcommand("degthr", "threshold degree with primal and dual certificates");
  fa.add(degthr);
  degthr->add_option("--out,-o", out, "certificate file")->capture_default_str();

  FnArgs fb;
  std::string eps_s = "1/3";
  auto* adeg = app.add_subcommand("adeg", "eps-approximate degree");
  fb.add(adeg);
  adeg->add_option("--eps", eps_s, "error, as num/den")->capture_default_str();
  adeg->add_option("--out,-o", out, "certificate file");

  FnArgs fc;
  int d = 1;
  std::string prec_s = "1/64";
  auto* rb = app.add_subcommand("rbracket", "bracket around the rational approximation error R+(f,d)");
  fc.add(rb);
  rb->add_option("--d", d, "degree")->required();
  rb->add_option("--precision", prec_s, "bracket width")->capture_default_str();
  rb->add_option("--out,-o", out, "certificate file");

  FnArgs fd;
  std::string check_file;
  auto* wit = app.add_subcommand("witness", "emit a Gordan witness, or re-check any certificate file");
  fd.add(wit);
  wit->add_option("--d", d, "orthogonality degree");
  wit->add_option("--check", check_file, "certificate file to re-verify");
  wit->add_option("--out,-o", out, "output file (default stdout)");

  std::string outer_s, inner_s, cw_eps = "1/2";
  auto* cw = app.add_subcommand("compose-witness", "dual witness for F(f,...,f) from witnesses of F and f");
  cw->add_option("--outer", outer_s, "outer function spec on a cube")->required();
  cw->add_option("--inner", inner_s, "inner function spec")->required();
  cw->add_option("--eps", cw_eps, "correlation threshold below corr(Psi)")->capture_default_str();
  cw->add_option("--out,-o", out, "output file (default stdout)");

  FnArgs fe;
  int copies = 2;
  auto* brs = app.add_subcommand("brs", "sign-representation of AND of copies from a rational approximant");
  fe.add(brs);
  brs->add_option("--copies", copies, "number of conjuncts")->capture_default_str();
  brs->add_option("--precision", prec_s, "bracket width used when searching the approximant");
  brs->add_option("--out,-o", out, "polynomial file");

  long tn = 8;
  std::vector<int> tds;
  std::string format = "csv";
  auto* mt = app.add_subcommand("maj-table", "majority error brackets per degree");
  mt->add_option("--n", tn, "majority size")->required();
  mt->add_option("--d", tds, "degrees, comma separated")->delimiter(',')->required();
  mt->add_option("--precision", prec_s, "bracket width")->capture_default_str();
  mt->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  mt->add_option("--out,-o", out, "output file (default stdout)");

  int hn = 1;
  auto* hs = app.add_subcommand("hs-cert", "lower-bound certificate for the grid halfspace");
  hs->add_option("--n", hn, "halfspace size")->capture_default_str();
  hs->add_option("--out,-o", out, "output file (default stdout)");

  FnArgs ff;
  auto* dn = app.add_subcommand("density", "exact density of a small cube function");
  ff.add(dn);
  dn->add_option("--out,-o", out, "output file (default stdout)");

  std::string bundle, config_file;
  std::vector<int> only;
  auto* st = app.add_subcommand("suite", "named experiment bundles: acceptance, or a config file");
  st->add_option("bundle", bundle, "acceptance | config")->required()->check(CLI::IsMember({"acceptance", "config"}));
  st->add_option("--only", only, "criterion ids")->delimiter(',');
  st->add_option("--config", config_file, "experiment config (bundle config)");
  st->add_option("--out,-o", out, "report file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*degthr) {
      if (out.empty()) out = "degthr.json";
      return run_degthr(fa.spec(), out);
    }
    if (*adeg) return run_adeg(fb.spec(), rat_arg(eps_s), out);
    if (*rb) return run_rbracket(fc.spec(), d, rat_arg(prec_s), out);
    if (*wit) {
      if (!check_file.empty()) {
        WitnessCheck c = check_certificate(read_json(check_file));
        std::cout << (c.ok ? "OK" : "FAIL: " + c.reason) << "\n";
        return c.ok ? 0 : 1;
      }
      FunctionSpec s = fd.spec();
      BooleanFunction f = build(s);
      auto w = gordan_witness(f, d);
      if (!w) {
        std::cout << "none: f is sign-representable at degree " << d << "\n";
        return 0;
      }
      Json j = witness_json(*w, to_json(s));
      check_or_fail(j);
      write_out(out, dump(j));
      return 0;
    }
    if (*cw) {
      FunctionSpec so = parse_function_spec(outer_s), si = parse_function_spec(inner_s);
      BooleanFunction F = build(so), f = build(si);
      int dF = threshold_degree(F).degree, df = threshold_degree(f).degree;
      auto G = gordan_witness(F, dF - 1);
      auto mu = gordan_witness(f, df - 1);
      if (!G || !mu) throw VerificationError("missing Gordan witness below the threshold degree");
      DualWitness Psi = signed_from_gordan(*G, F);
      Psi.kind = WitnessKind::Approx;
      Psi.correlation = 1;
      ComposedWitness z = compose_witness_threshold(Psi, F, *mu, f, rat_arg(cw_eps));
      Json j = composed_json(z);
      check_or_fail(j);
      write_out(out, dump(j));
      return 0;
    }
    if (*brs) {
      require(copies >= 2, "need at least two copies");
      FunctionSpec s = fe.spec();
      BooleanFunction f = build(s);
      Rat target(1, copies);
      Rat prec = rat_arg(prec_s);
      std::optional<RationalApproximant> a;
      int top = static_cast<int>(f.dimension());
      for (int dd = 0; dd <= top && !a; ++dd) {
        ErrorBracket b = rational_error_bracket(f, dd, std::min(prec, Rat(target / 4)));
        if (b.upper < target) a = b.upper_approximant;
      }
      if (!a) throw VerificationError("no approximant with error below 1/copies");
      SparsePolynomial p = brs_conjunction(std::vector<RationalApproximant>(copies, *a),
                                           std::vector<BooleanFunction>(copies, f));
      std::cout << p.degree() << " " << to_string(a->verified_error) << "\n";
      if (!out.empty())
        write_out(out, dump(Json{{"schema", "signrep.brs/1"}, {"function", to_json(s)}, {"copies", copies},
                                 {"approximant", approximant_json(*a, to_json(s))}, {"sign_rep", to_json(p)}}));
      return 0;
    }
    if (*mt) return run_maj_table(tn, tds, rat_arg(prec_s), format, out);
    if (*hs) {
      HalfspaceCriterion h = halfspace_criterion_cert(hn);
      Json j = lower_cert_json(h.cert);
      check_or_fail(j);
      write_out(out, dump(j));
      return 0;
    }
    if (*dn) {
      FunctionSpec s = ff.spec();
      DensityReport r = density_exact(build(s));
      Json j = density_json(r, to_json(s));
      check_or_fail(j);
      write_out(out, dump(j));
      return 0;
    }
    if (*st) {
      if (bundle == "config") {
        ExperimentConfig c = config_from_json(read_json(config_file));
        std::ostringstream os;
        std::streambuf* old = std::cout.rdbuf(os.rdbuf());
        int rc = 0;
        try {
          if (c.command == "maj-table") {
            std::vector<int> ds(c.grid["d"].begin(), c.grid["d"].end());
            for (long n : c.grid["n"]) rc |= run_maj_table(n, ds, c.precision, c.format == "json" ? "json" : "csv", "");
          } else {
            for (const auto& fs : c.functions) {
              if (c.command == "degthr") rc |= run_degthr(fs, "");
              else if (c.command == "adeg") rc |= run_adeg(fs, c.precision, "");
              else if (c.command == "rbracket")
                for (long dd : c.grid["d"]) rc |= run_rbracket(fs, static_cast<int>(dd), c.precision, "");
              else throw PreconditionError("config command must be degthr, adeg, rbracket or maj-table");
            }
          }
        } catch (...) {
          std::cout.rdbuf(old);
          throw;
        }
        std::cout.rdbuf(old);
        write_out(c.output, os.str());
        return rc;
      }
      SuiteOptions opt;
      opt.ids = only;
      opt.on_result = [](const CriterionResult& r) {
        std::cout << (r.pass ? "PASS " : "FAIL ") << r.id << " " << r.name << ": " << r.detail << std::endl;
        std::cerr << "  criterion " << r.id << " took " << r.seconds << " s\n";
      };
      auto results = run_acceptance(opt);
      if (!out.empty()) write_out(out, dump(acceptance_report(results)));
      for (const auto& r : results)
        if (!r.pass) return 1;
      return 0;
    }
  } catch (const ResourceError& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return 3;
  } catch (const PreconditionError& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

#include "signrep/suite.hpp"

#include <chrono>
#include <random>
#include <sstream>

#include "signrep/cube.hpp"
#include "signrep/errors.hpp"

namespace signrep {

namespace {

using Clock = std::chrono::steady_clock;

std::string rs(const Rat& r) { return to_string(r); }

bool sign_represents(const SparsePolynomial& p, const BooleanFunction& f) {
  for (std::size_t x = 0; x < f.size(); ++x)
    if (sgn(p.evaluate(f.point(x))) != f.value(x)) return false;
  return true;
}

Rat max_abs_error(const SparsePolynomial& p, const BooleanFunction& f) {
  Rat worst = 0;
  for (std::size_t x = 0; x < f.size(); ++x) {
    Rat e = abs(Rat(f.value(x) - p.evaluate(f.point(x))));
    if (e > worst) worst = e;
  }
  return worst;
}

BooleanFunction table_function(std::size_t n, std::size_t mask) {
  std::vector<int> v(std::size_t(1) << n);
  for (std::size_t x = 0; x < v.size(); ++x) v[x] = (mask >> x) & 1 ? -1 : 1;
  return BooleanFunction(cube_domain(n), v, "T" + std::to_string(n) + "_" + std::to_string(mask));
}

struct Outcome {
  bool pass = true;
  std::string detail;
  Json data = Json::object();
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

// 1: Gordan alternative on every function of 2 and 3 variables.
Outcome c1() {
  Outcome o;
  int cases = 0, reps = 0, duals = 0;
  for (std::size_t n : {2u, 3u}) {
    for (std::size_t mask = 0; mask < (std::size_t(1) << (std::size_t(1) << n)); ++mask) {
      BooleanFunction f = table_function(n, mask);
      for (int d = 0; d <= 2; ++d) {
        ++cases;
        auto p = sign_representation(f, d);
        auto g = gordan_witness(f, d);
        bool pok = p && p->degree() <= d && sign_represents(*p, f);
        bool gok = g && g->orthogonality_degree == d && verify_witness(*g, f).ok;
        reps += pok;
        duals += gok;
        if (pok == gok) o.fail(f.name() + " d=" + std::to_string(d) + ": alternative violated");
      }
    }
  }
  o.data = Json{{"cases", cases}, {"sign_representations", reps}, {"gordan_witnesses", duals}};
  if (o.pass)
    o.detail = std::to_string(cases) + " cases, " + std::to_string(reps) + " representations, " +
               std::to_string(duals) + " witnesses";
  return o;
}

// 2: zero duality gap of approx_error.
Outcome c2() {
  Outcome o;
  std::vector<std::pair<std::string, long>> fams;
  for (long n = 1; n <= 5; ++n) fams.push_back({"MAJ", n});
  for (long n = 1; n <= 5; ++n) fams.push_back({"OR", n});
  for (long n = 1; n <= 4; ++n) fams.push_back({"PARITY", n});
  Json rows = Json::array();
  int count = 0, positive = 0;
  for (const auto& [fam, n] : fams) {
    BooleanFunction f = make_named(fam, {n});
    for (int d = 0; d <= n; ++d) {
      ApproxResult r = approx_error(f, d);
      ++count;
      Rat primal = max_abs_error(r.approximant, f);
      // at error 0 no unit-mass dual exists; the gap is then 0 = 0
      bool dual_ok = r.error == 0 ? r.dual.correlation == 0 : verify_witness(r.dual, f).ok;
      positive += r.error > 0;
      bool ok = primal == r.error && r.dual.correlation == r.error && r.approximant.degree() <= d &&
                r.dual.orthogonality_degree == d && dual_ok;
      if (!ok) o.fail(fam + std::to_string(n) + " d=" + std::to_string(d) + ": gap or failed re-check");
      rows.push_back(Json{{"f", fam + ":" + std::to_string(n)}, {"d", d}, {"eps", rs(r.error)}});
    }
  }
  if (count < 50) o.fail("fewer than 50 instances");
  o.data = Json{{"instances", count}, {"positive_error", positive}, {"rows", rows}};
  if (o.pass)
    o.detail = std::to_string(count) + " instances (" + std::to_string(positive) +
               " with positive error), primal = dual on all";
  return o;
}

// 3: alternating binomial sums and moment matching.
Outcome c3() {
  Outcome o;
  std::mt19937_64 rng(20240917);
  std::uniform_int_distribution<int> nd(1, 12), num(-1000, 1000), den(1, 97);
  int draws = 0;
  for (; draws < 100; ++draws) {
    int n = nd(rng);
    std::uniform_int_distribution<int> deg(0, n - 1);
    int d = deg(rng);
    std::vector<Rat> c;
    for (int i = 0; i <= d; ++i) c.push_back(make_rat(num(rng), den(rng)));
    if (comb_sum(n, UnivariatePolynomial(c)) != 0) o.fail("nonzero comb sum at draw " + std::to_string(draws));
  }
  int gaps = 0;
  for (int m = 1; m <= 8; ++m) {
    MomentMatchedPair mm = moment_matched_pair(m);
    for (int d = 0; d <= 4 * m; ++d, ++gaps)
      if (moment_gap(mm, d) != 0) o.fail("moment gap at m=" + std::to_string(m) + " d=" + std::to_string(d));
  }
  o.data = Json{{"comb_draws", draws}, {"moment_identities", gaps}};
  if (o.pass) o.detail = std::to_string(draws) + " comb sums and " + std::to_string(gaps) + " moment gaps all zero";
  return o;
}

// 4: Newman's bound on integer grids.
Outcome c4() {
  Outcome o;
  Json rows = Json::array();
  const Rat tol = pow2(-40);
  for (auto [N, k] : std::vector<std::pair<long, int>>{{4, 1}, {9, 2}, {100, 3}, {10000, 5}}) {
    NewmanResult nr = newman(Rat(N), k);
    bool ok = nr.bound_certified || nr.approx.bound_slack <= tol;
    if (!ok) o.fail("N=" + std::to_string(N) + " k=" + std::to_string(k) + " exceeds the bound");
    rows.push_back(Json{{"N", N}, {"k", k}, {"error", rs(nr.approx.verified_error)},
                        {"certified", nr.bound_certified}, {"slack", rs(nr.approx.bound_slack)}});
  }
  o.data = Json{{"rows", rows}};
  if (o.pass) o.detail = "4 (N,k) pairs within 1 - N^(-1/k)";
  return o;
}

// 5: exact interpolant closes the bracket at d = n.
Outcome c5() {
  Outcome o;
  for (long n = 1; n <= 16; ++n) {
    UnivariateApproximant u = maj_univariate_upper(n, static_cast<int>(n));
    BooleanFunction sg = sign_function(u.grid);
    BracketHints h;
    h.known_upper = to_multivariate(u);
    h.known_upper_method = u.method;
    ErrorBracket b = rational_error_bracket(sg, static_cast<int>(n), Rat(1, 64), h);
    if (u.verified_error != 0 || b.lower != 0 || b.upper != 0 || !verify_bracket(sg, b))
      o.fail("n=" + std::to_string(n) + " bracket is not [0,0]");
  }
  o.data = Json{{"n_max", 16}};
  if (o.pass) o.detail = "bracket [0/1,0/1] for n = 1..16";
  return o;
}

// 6: sign pattern at n = 1.
Outcome c6() {
  Outcome o;
  SignPatternCert c = sign_pattern_infeasible(1);
  bool farkas = verify_farkas(threshold_lp(c.g, c.degree), c.farkas);
  bool gordan = verify_witness(c.gordan, c.g).ok;
  bool above = c.rep_above && c.rep_above->degree() <= c.degree + 1 && sign_represents(*c.rep_above, c.g);
  if (!farkas) o.fail("Farkas certificate fails");
  if (!gordan) o.fail("Gordan witness fails");
  if (!above) o.fail("no sign-representation at degree 3");
  o.data = Json{{"infeasible_degree", c.degree}, {"farkas_rows", c.farkas.size()}, {"feasible_degree", c.degree + 1}};
  if (o.pass) o.detail = "degree 2 infeasible (Farkas verified), degree 3 feasible";
  return o;
}

// 7: coupling support and constant moments at n = 1.
Outcome c7() {
  Outcome o;
  HalfspaceCoupling c = halfspace_moment_coupling(1);
  if (!coupling_support_ok(c)) o.fail("support identity fails");
  Json moments = Json::array();
  for (unsigned d1 = 0; d1 <= 4; ++d1) {
    std::vector<Rat> m = coupling_moment(c, {d1});
    for (const auto& v : m)
      if (v != m.front()) o.fail("moment " + std::to_string(d1) + " is not constant across components");
    moments.push_back(rs(m.front()));
  }
  std::size_t atoms = 0;
  for (const auto& comp : c.components) atoms += comp.size();
  o.data = Json{{"components", c.components.size()}, {"atoms", atoms}, {"moments", moments}};
  if (o.pass) o.detail = std::to_string(atoms) + " atoms, moments d1 <= 4 constant";
  return o;
}

// 8: criterion certificate against the LP upper bound.
Outcome c8() {
  Outcome o;
  HalfspaceCriterion h = halfspace_criterion_cert(1);
  if (auto chk = verify_lower_cert(h.cert); !chk.ok) o.fail("certificate: " + chk.reason);
  BooleanFunction f = make_named("HS-GRID", {1});
  ErrorBracket b = rational_error_bracket(f, 1, Rat(1, 64));
  if (!verify_bracket(f, b)) o.fail("bracket re-check fails");
  if (!(h.cert.implied_bound <= b.upper)) o.fail("implied lower bound exceeds the LP upper bound");
  if (!(h.cert.implied_bound <= Rat(1))) o.fail("implied bound above 1");
  o.data = Json{{"delta", rs(h.cert.delta)}, {"implied_bound", rs(h.cert.implied_bound)},
                {"lower", rs(b.lower)},      {"upper", rs(b.upper)},
                {"floor_holds", h.floor_holds}};
  if (o.pass) o.detail = "2delta/(1+delta) = " + rs(h.cert.implied_bound) + " <= upper " + rs(b.upper);
  return o;
}

// 9: majority sandwich.
Outcome c9() {
  Outcome o;
  Json tables = Json::object();
  const Rat prec(1, 64);
  for (long n : {8L, 16L}) {
    auto rows = maj_error_table(n, {1, 2, 3, 4, 5, 6}, prec);
    for (const auto& r : rows) {
      if (!r.sandwich) o.fail("n=" + std::to_string(n) + " d=" + std::to_string(r.d) + ": sandwich fails");
      if (r.bracket.upper - r.bracket.lower > prec)
        o.fail("n=" + std::to_string(n) + " d=" + std::to_string(r.d) + ": bracket wider than 1/64");
    }
    tables[std::to_string(n)] = maj_table_csv(rows);
  }
  o.data = tables;
  if (o.pass) o.detail = "12 rows sandwiched at precision 1/64";
  return o;
}

// 10: BRS conjunction of two approximants.
Outcome c10() {
  Outcome o;
  BooleanFunction m3 = majority(3), m5 = majority(5);
  std::vector<Rat> v3;
  for (int v : m3.values()) v3.push_back(Rat(v));
  RationalApproximant a3 = make_approximant(m3, multilinear_from_values(3, v3), SparsePolynomial::constant(3, 1));
  SparsePolynomial s3 = brs_conjunction({a3, a3}, {m3, m3});
  BooleanFunction and33 = compose({and_pm(2), {m3, m3}});
  if (!sign_represents(s3, and33)) o.fail("MAJ3 AND MAJ3 not sign-represented");

  std::optional<RationalApproximant> a5;
  int k = 1;
  for (; k <= 8 && !a5; ++k) {
    NewmanResult nr = newman(Rat(3), k);
    RationalApproximant cand = maj_from_univariate(nr.approx, 5, Rat(1, 1024));
    if (cand.verified_error < Rat(1, 2)) a5 = cand;
  }
  if (!a5) {
    o.fail("no Newman degree up to 8 gets MAJ5 below 1/2");
    return o;
  }
  SparsePolynomial s5 = brs_conjunction({*a5, *a5}, {m5, m5});
  BooleanFunction and55 = compose({and_pm(2), {m5, m5}});
  if (!sign_represents(s5, and55)) o.fail("MAJ5 AND MAJ5 not sign-represented");
  o.data = Json{{"maj3_points", and33.size()},      {"maj5_points", and55.size()},
                {"newman_k", k - 1},                {"maj5_error", rs(a5->verified_error)},
                {"maj3_degree", s3.degree()},       {"maj5_degree", s5.degree()}};
  if (o.pass)
    o.detail = "64 and 1024 points sign-represented (MAJ5 error " + rs(a5->verified_error) + ")";
  return o;
}

// 11: finite conjunction bound.
Outcome c11() {
  Outcome o;
  Json rows = Json::array();
  std::vector<std::pair<BooleanFunction, BooleanFunction>> pairs{
      {majority(3), majority(3)}, {or_pm(2), or_pm(2)}, {majority(3), or_pm(2)}};
  for (const auto& [f, g] : pairs) {
    MainFiniteReport r = verify_main_finite(f, g, Rat(1, 64));
    bool ok = r.holds;
    for (std::size_t i = 0; i < r.brackets.size(); ++i)
      ok = ok && verify_bracket(i == 0 ? f : g, r.brackets[i]);
    if (!ok) o.fail(f.name() + "," + g.name() + ": upper sum " + rs(r.upper_sum) + " not below 1");
    rows.push_back(Json{{"f", f.name()}, {"g", g.name()}, {"d", r.d}, {"upper_sum", rs(r.upper_sum)}});
  }
  o.data = Json{{"rows", rows}};
  if (o.pass) o.detail = "3 pairs with upper(R+(f,4d)) + upper(R+(g,2d)) < 1";
  return o;
}

// 12: threshold degree of compositions.
Outcome c12() {
  Outcome o;
  Json rows = Json::array();
  std::vector<std::pair<BooleanFunction, BooleanFunction>> pairs{
      {parity(2), parity(2)}, {or_pm(2), majority(3)}, {and_pm(2), parity(2)}};
  // stated targets for degthr of the composition; the middle one is read as
  // a bound on the composition itself since degthr(OR_2) = 1
  const int stated[] = {4, 2, 2};
  for (std::size_t pi = 0; pi < pairs.size(); ++pi) {
    const auto& [F, f] = pairs[pi];
    int dF = threshold_degree(F).degree, df = threshold_degree(f).degree;
    BooleanFunction Ff = compose({F, std::vector<BooleanFunction>(F.dimension(), f)});
    DegreeReport rc = threshold_degree(Ff);
    std::string tag = F.name() + "(" + f.name() + ")";
    if (rc.degree < dF * df) o.fail(tag + ": degthr below the product");
    if (rc.degree < stated[pi]) o.fail(tag + ": degthr below the stated target");
    auto mu = gordan_witness(f, df - 1);
    auto G = gordan_witness(F, dF - 1);
    if (!mu || !G) {
      o.fail(tag + ": missing Gordan witness");
      continue;
    }
    DualWitness Psi = signed_from_gordan(*G, F);
    Psi.kind = WitnessKind::Approx;
    Psi.correlation = 1;
    ComposedWitness z = compose_witness_threshold(Psi, F, *mu, f, Rat(1, 2));
    WitnessCheck chk = verify_composed(z);
    if (!chk.ok) o.fail(tag + ": " + chk.reason);
    // corr = l1 = 1 makes zeta a signed Gordan witness for the composition
    if (z.correlation != 1 || z.l1_mass != 1) o.fail(tag + ": zeta is not sign-consistent");
    rows.push_back(Json{{"F", F.name()}, {"f", f.name()}, {"degthr_F", dF}, {"degthr_f", df},
                        {"degthr_composed", rc.degree}, {"zeta_orthogonality", z.claimed_orthogonality}});
  }
  o.data = Json{{"rows", rows}};
  if (o.pass) {
    o.detail = "composed degthr";
    for (const auto& r : rows) o.detail += " " + std::to_string(r["degthr_composed"].get<int>());
    o.detail += " meet degthr(F)*degthr(f) and the stated targets; zeta verified";
  }
  return o;
}

// 13: automaton and its rational approximant.
Outcome c13() {
  Outcome o;
  Json rows = Json::array();
  for (std::size_t n = 1; n <= 7; ++n) {
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= 5;
    std::vector<int> z(n);
    for (std::size_t idx = 0; idx < total; ++idx) {
      std::size_t r = idx;
      Int s = 1;
      for (std::size_t i = 0; i < n; ++i) {
        z[i] = static_cast<int>(r % 5) - 2;
        r /= 5;
        s += Int(z[i]) * ipow(2, static_cast<unsigned>(i + 1));
      }
      if (dfa_run(z) != sgn(Rat(s))) {
        o.fail("automaton wrong at n=" + std::to_string(n));
        break;
      }
    }
    DfaApproximant a = dfa_halfspace_approximant(n, Rat(2));
    DfaApproximant b = dfa_halfspace_approximant(n, a.sign_threshold + 1);
    BooleanFunction f = make_named("DFA-HS", {static_cast<long>(n)});
    for (const auto* x : {&a, &b})
      if (!(x->approx.verified_error < 1) || x->approx.degree > 64)
        o.fail("A_M fails at n=" + std::to_string(n));
    rows.push_back(Json{{"n", n}, {"points", total}, {"threshold", rs(a.sign_threshold)},
                        {"degree", a.approx.degree}, {"error_at_threshold", rs(a.approx.verified_error)}});
  }
  o.data = Json{{"rows", rows}};
  if (o.pass) o.detail = "automaton exact for n <= 7; A_M sign-correct from M = 2, degree <= 64";
  return o;
}

// Brute force over integer weights in [-4,4] on all four monomials.
int density_oracle_2(const BooleanFunction& f) {
  int best = 5;
  for (int a = -4; a <= 4; ++a)
    for (int b = -4; b <= 4; ++b)
      for (int c = -4; c <= 4; ++c)
        for (int e = -4; e <= 4; ++e) {
          int w[4] = {a, b, c, e};
          bool ok = true;
          for (std::size_t x = 0; x < 4 && ok; ++x) {
            int x1 = (x >> 1) & 1 ? 1 : -1, x2 = x & 1 ? 1 : -1;
            int v = a + b * x1 + c * x2 + e * x1 * x2;
            ok = v != 0 && (v > 0 ? 1 : -1) == f.value(x);
          }
          if (!ok) continue;
          int nz = 0;
          for (int t : w) nz += t != 0;
          best = std::min(best, nz);
        }
  return best;
}

// 14: density.
Outcome c14() {
  Outcome o;
  Json vals = Json::array();
  for (std::size_t mask = 0; mask < 16; ++mask) {
    BooleanFunction f = table_function(2, mask);
    DensityReport r = density_exact(f);
    int oracle = density_oracle_2(f);
    if (r.value != oracle) o.fail(f.name() + ": density " + std::to_string(r.value) + " vs oracle " + std::to_string(oracle));
    if (!sign_represents(r.witness, f) || static_cast<int>(r.witness.size()) != r.value)
      o.fail(f.name() + ": witness fails");
    vals.push_back(r.value);
  }
  BooleanFunction x1 = make_named("DICT", {1, 1});
  BooleanFunction kp = kp_transform(x1);
  DensityReport r = density_exact(kp);
  DensityLowerBound lb = density_lower_from_kp(x1);
  if (r.value < 2 || Int(r.value) < lb.bound) o.fail("dns(kp(x1)) below 2");
  o.data = Json{{"two_variable", vals}, {"kp_x1", r.value}, {"kp_lower", lb.bound.get_str()}};
  if (o.pass) o.detail = "16 functions match the oracle; dns(kp(x1)) = " + std::to_string(r.value);
  return o;
}

struct Spec {
  const char* name;
  Outcome (*run)();
  double limit;  // seconds, 0 = none
};

const Spec specs[] = {
    {"duality exhaustive", c1, 300},
    {"approx strong duality", c2, 0},
    {"comb and moment identities", c3, 0},
    {"newman bound", c4, 60},
    {"exact interpolant", c5, 0},
    {"sign pattern n=1", c6, 60},
    {"coupling n=1", c7, 0},
    {"halfspace criterion n=1", c8, 0},
    {"majority sandwich", c9, 1800},
    {"brs conjunction", c10, 0},
    {"main finite", c11, 0},
    {"direct product", c12, 0},
    {"dfa halfspace", c13, 0},
    {"density", c14, 0},
};

CriterionResult run_one(int id) {
  CriterionResult res;
  res.id = id;
  const Spec& s = specs[id - 1];
  res.name = s.name;
  auto t0 = Clock::now();
  try {
    Outcome o = s.run();
    res.pass = o.pass;
    res.detail = o.detail;
    res.data = std::move(o.data);
  } catch (const std::exception& e) {
    res.pass = false;
    res.detail = std::string("exception: ") + e.what();
    res.data = Json::object();
  }
  res.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  if (res.pass && s.limit > 0 && res.seconds > s.limit) {
    res.pass = false;
    res.detail += " (over the time limit)";
  }
  return res;
}

CriterionResult determinism(const std::vector<CriterionResult>* first) {
  CriterionResult res;
  res.id = 15;
  res.name = "determinism";
  auto t0 = Clock::now();
  std::vector<CriterionResult> a, b;
  if (first) a = *first;
  else
    for (int i = 1; i <= 14; ++i) a.push_back(run_one(i));
  for (int i = 1; i <= 14; ++i) b.push_back(run_one(i));
  std::string sa = acceptance_report(a).dump(), sb = acceptance_report(b).dump();
  res.pass = sa == sb;
  res.detail = res.pass ? "two in-process runs of 1..14 serialize identically (" + std::to_string(sa.size()) + " bytes)"
                        : "serialized reports differ";
  res.data = Json{{"bytes", sa.size()}};
  res.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return res;
}

}  // namespace

int acceptance_count() { return 15; }

CriterionResult run_criterion(int id) {
  require(id >= 1 && id <= 15, "criterion id must be in 1..15");
  return id == 15 ? determinism(nullptr) : run_one(id);
}

std::vector<CriterionResult> run_acceptance(const SuiteOptions& opt) {
  std::vector<int> ids = opt.ids;
  if (ids.empty())
    for (int i = 1; i <= 15; ++i) ids.push_back(i);
  std::vector<CriterionResult> out;
  for (int id : ids) {
    require(id >= 1 && id <= 15, "criterion id must be in 1..15");
    CriterionResult r;
    if (id == 15) {
      std::vector<CriterionResult> first;
      for (const auto& x : out)
        if (x.id <= 14) first.push_back(x);
      bool full = first.size() == 14;
      for (int i = 0; full && i < 14; ++i) full = first[i].id == i + 1;
      r = determinism(full ? &first : nullptr);
    } else {
      r = run_one(id);
    }
    if (opt.on_result) opt.on_result(r);
    out.push_back(std::move(r));
  }
  return out;
}

Json acceptance_report(const std::vector<CriterionResult>& results) {
  Json crit = Json::array();
  bool all = true;
  for (const auto& r : results) {
    all = all && r.pass;
    crit.push_back(Json{{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}, {"data", r.data}});
  }
  return Json{{"schema", "signrep.acceptance/1"}, {"all_pass", all}, {"criteria", crit}};
}

}  // namespace signrep

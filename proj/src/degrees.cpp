#include "signrep/degrees.hpp"

#include <algorithm>

#include "signrep/errors.hpp"
#include "signrep/univariate.hpp"

namespace signrep {

namespace {

void basis_rec(const std::vector<unsigned>& caps, std::size_t i, int left, Exponent& cur, std::vector<Exponent>& out) {
  if (i == caps.size()) {
    if (left == 0) out.push_back(cur);
    return;
  }
  int top = std::min<int>(left, static_cast<int>(caps[i]));
  for (int a = top; a >= 0; --a) {
    cur[i] = static_cast<unsigned>(a);
    basis_rec(caps, i + 1, left - a, cur, out);
  }
  cur[i] = 0;
}

// rows[x][m] = value of basis monomial m at domain point x
std::vector<std::vector<Rat>> design(const std::vector<Point>& pts, const std::vector<Exponent>& basis) {
  std::vector<std::vector<Rat>> M(pts.size(), std::vector<Rat>(basis.size()));
  for (std::size_t x = 0; x < pts.size(); ++x) {
    const Point& p = pts[x];
    std::vector<std::vector<Rat>> pw(p.size(), std::vector<Rat>{Rat(1)});
    for (std::size_t m = 0; m < basis.size(); ++m) {
      Rat v = 1;
      for (std::size_t i = 0; i < p.size(); ++i) {
        unsigned a = basis[m][i];
        if (!a) continue;
        while (pw[i].size() <= a) pw[i].push_back(pw[i].back() * p[i]);
        v *= pw[i][a];
      }
      M[x][m] = v;
    }
  }
  return M;
}

SparsePolynomial assemble(const std::vector<Exponent>& basis, const std::vector<Rat>& coef, std::size_t n) {
  SparsePolynomial p(n);
  for (std::size_t m = 0; m < basis.size(); ++m) p.add_term(basis[m], coef[m]);
  return p;
}

std::vector<Exponent> basis_for(const BooleanFunction& f, int d, const std::vector<long>& v) {
  if (v.empty()) return monomial_basis(f, d);
  require(f.is_cube(), "weighted degree needs a cube function");
  return weighted_basis(v, d);
}

}  // namespace

std::vector<Exponent> monomial_basis(const std::vector<unsigned>& caps, int d) {
  std::vector<Exponent> out;
  Exponent cur(caps.size(), 0);
  for (int t = 0; t <= d; ++t) basis_rec(caps, 0, t, cur, out);
  return out;
}

std::vector<unsigned> exponent_caps(const BooleanFunction& f) {
  std::vector<unsigned> caps(f.dimension());
  for (std::size_t i = 0; i < caps.size(); ++i) caps[i] = static_cast<unsigned>(f.coordinate_values(i).size() - 1);
  return caps;
}

std::vector<Exponent> monomial_basis(const BooleanFunction& f, int d) { return monomial_basis(exponent_caps(f), d); }

int max_basis_degree(const BooleanFunction& f) {
  int s = 0;
  for (unsigned c : exponent_caps(f)) s += static_cast<int>(c);
  return s;
}

std::vector<Exponent> weighted_basis(const std::vector<long>& v, long D) {
  std::size_t k = v.size();
  require(k < 30, "too many variables for a weighted basis");
  std::vector<std::pair<long, std::size_t>> order;
  for (std::size_t mask = 0; mask < (std::size_t(1) << k); ++mask) {
    long cost = 0;
    for (std::size_t i = 0; i < k; ++i)
      if ((mask >> i) & 1u) cost += v[i];
    if (cost <= D) order.push_back({cost, mask});
  }
  std::sort(order.begin(), order.end());
  std::vector<Exponent> out;
  for (const auto& [c, mask] : order) {
    Exponent e(k, 0);
    for (std::size_t i = 0; i < k; ++i) e[i] = (mask >> i) & 1u;
    out.push_back(e);
  }
  return out;
}

Rat monomial_value(const Exponent& e, const Point& x) {
  Rat v = 1;
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i]) v *= rpow(x[i], e[i]);
  return v;
}

const char* to_string(WitnessKind k) {
  switch (k) {
    case WitnessKind::Gordan: return "gordan";
    case WitnessKind::GordanSigned: return "gordan-signed";
    case WitnessKind::Approx: return "approx";
  }
  return "?";
}

WitnessCheck verify_witness(const DualWitness& w, const BooleanFunction& f) {
  auto fail = [](std::string why) { return WitnessCheck{false, std::move(why)}; };
  if (w.points.size() != w.weights.size()) return fail("points and weights differ in length");
  std::vector<int> fv;
  for (const auto& p : w.points) {
    auto i = f.index_of(p);
    if (!i) return fail("witness point outside the domain");
    fv.push_back(f.value(*i));
  }
  Rat l1 = 0, sum = 0, corr = 0;
  for (std::size_t x = 0; x < w.weights.size(); ++x) {
    l1 += abs(w.weights[x]);
    sum += w.weights[x];
    corr += w.weights[x] * fv[x];
  }
  if (l1 != w.l1_mass) return fail("recorded l1 mass is wrong");
  if (corr != w.correlation) return fail("recorded correlation is wrong");
  auto basis = basis_for(f, w.orthogonality_degree, w.degree_weights);
  auto M = design(w.points, basis);
  bool gordan = w.kind == WitnessKind::Gordan;
  for (std::size_t m = 0; m < basis.size(); ++m) {
    Rat s = 0;
    for (std::size_t x = 0; x < w.points.size(); ++x)
      if (w.weights[x] != 0) s += w.weights[x] * (gordan ? fv[x] : 1) * M[x][m];
    if (s != 0) return fail("not orthogonal to a monomial of degree " + std::to_string(total_degree(basis[m])));
  }
  switch (w.kind) {
    case WitnessKind::Gordan:
      for (const auto& v : w.weights)
        if (v < 0) return fail("negative probability");
      if (sum != 1) return fail("probabilities do not sum to 1");
      break;
    case WitnessKind::GordanSigned:
      for (std::size_t x = 0; x < fv.size(); ++x)
        if (w.weights[x] * fv[x] < 0) return fail("sign disagrees with f");
      if (l1 != 1) return fail("l1 mass is not 1");
      break;
    case WitnessKind::Approx:
      if (l1 != 1) return fail("l1 mass is not 1");
      break;
  }
  return {};
}

DualWitness signed_from_gordan(const DualWitness& mu, const BooleanFunction& f) {
  require(mu.kind == WitnessKind::Gordan, "expected a Gordan distribution");
  DualWitness out = mu;
  out.kind = WitnessKind::GordanSigned;
  for (std::size_t x = 0; x < mu.points.size(); ++x) out.weights[x] = mu.weights[x] * f.value_at(mu.points[x]);
  out.correlation = mu.l1_mass;  // sum f^2 mu
  return out;
}

LinearProgram threshold_lp(const BooleanFunction& f, int d) {
  auto basis = monomial_basis(f, d);
  auto M = design(f.points(), basis);
  LinearProgram lp(basis.size());
  for (std::size_t x = 0; x < f.size(); ++x) {
    std::vector<Rat> row = M[x];
    if (f.value(x) < 0)
      for (auto& v : row) v = -v;
    lp.add_row(std::move(row), Relation::GreaterEq, Rat(1));
  }
  return lp;
}

LinearProgram gordan_lp(const BooleanFunction& f, int d) {
  auto basis = monomial_basis(f, d);
  auto M = design(f.points(), basis);
  std::size_t N = f.size();
  LinearProgram lp(N);
  for (std::size_t m = 0; m < basis.size(); ++m) {
    std::vector<Rat> row(N);
    for (std::size_t x = 0; x < N; ++x) row[x] = f.value(x) * M[x][m];
    lp.add_row(std::move(row), Relation::Equal, Rat(0));
  }
  lp.add_row(std::vector<Rat>(N, Rat(1)), Relation::Equal, Rat(1));
  for (std::size_t x = 0; x < N; ++x) lp.set_lower(x, Rat(0));
  return lp;
}

namespace {

DualWitness witness_from_farkas(const BooleanFunction& f, int d, const std::vector<Rat>& y) {
  DualWitness w;
  w.kind = WitnessKind::Gordan;
  w.points = f.points();
  w.weights.assign(y.begin(), y.begin() + static_cast<long>(f.size()));
  w.orthogonality_degree = d;
  for (std::size_t x = 0; x < f.size(); ++x) {
    w.l1_mass += abs(w.weights[x]);
    w.correlation += w.weights[x] * f.value(x);
  }
  return w;
}

}  // namespace

std::optional<SparsePolynomial> sign_representation(const BooleanFunction& f, int d, const SimplexOptions& opt) {
  auto out = solve(threshold_lp(f, d), opt);
  if (out.status != LPStatus::Feasible) return std::nullopt;
  return assemble(monomial_basis(f, d), out.solution, f.dimension());
}

std::optional<DualWitness> gordan_witness(const BooleanFunction& f, int d, const SimplexOptions& opt) {
  auto out = solve(threshold_lp(f, d), opt);
  if (out.status != LPStatus::Infeasible) return std::nullopt;
  DualWitness w = witness_from_farkas(f, d, out.farkas);
  auto chk = verify_witness(w, f);
  if (!chk.ok) throw VerificationError("Gordan witness: " + chk.reason);
  return w;
}

DegreeReport threshold_degree(const BooleanFunction& f, const SimplexOptions& opt) {
  DegreeReport rep;
  int top = max_basis_degree(f);
  for (int d = 0; d <= top; ++d) {
    auto out = solve(threshold_lp(f, d), opt);
    if (out.status == LPStatus::Feasible) {
      rep.degree = d;
      rep.primal = assemble(monomial_basis(f, d), out.solution, f.dimension());
      for (std::size_t x = 0; x < f.size(); ++x)
        if (f.value(x) * rep.primal->evaluate(f.point(x)) <= 0)
          throw VerificationError("sign-representation fails at a domain point");
      return rep;
    }
    DualWitness w = witness_from_farkas(f, d, out.farkas);
    auto chk = verify_witness(w, f);
    if (!chk.ok) throw VerificationError("Gordan witness: " + chk.reason);
    rep.dual = std::move(w);
  }
  throw VerificationError("no sign-representation even at full interpolation degree");
}

namespace {

ApproxResult approx_over_basis(const BooleanFunction& f, const std::vector<Exponent>& basis, int d,
                               const std::vector<long>& v, const SimplexOptions& opt) {
  auto M = design(f.points(), basis);
  std::size_t B = basis.size();
  LinearProgram lp(B + 1);
  for (std::size_t x = 0; x < f.size(); ++x) {
    std::vector<Rat> up = M[x], dn(B + 1);
    up.push_back(1);
    for (std::size_t m = 0; m < B; ++m) dn[m] = -M[x][m];
    dn[B] = 1;
    lp.add_row(std::move(up), Relation::GreaterEq, Rat(f.value(x)));
    lp.add_row(std::move(dn), Relation::GreaterEq, Rat(-f.value(x)));
  }
  lp.objective.assign(B + 1, Rat(0));
  lp.objective[B] = 1;
  auto out = solve(lp, opt);
  if (out.status != LPStatus::Optimal) throw VerificationError("approximation LP is not optimal");
  ApproxResult r;
  r.error = *out.objective_value;
  std::vector<Rat> coef(out.solution.begin(), out.solution.begin() + static_cast<long>(B));
  r.approximant = assemble(basis, coef, f.dimension());
  DualWitness& w = r.dual;
  w.kind = WitnessKind::Approx;
  w.points = f.points();
  w.orthogonality_degree = d;
  w.degree_weights = v;
  w.weights.resize(f.size());
  Rat l1 = 0;
  for (std::size_t x = 0; x < f.size(); ++x) {
    w.weights[x] = out.duals[2 * x] - out.duals[2 * x + 1];
    l1 += abs(w.weights[x]);
  }
  if (l1 != 0 && l1 != 1)
    for (auto& q : w.weights) q /= l1;
  for (std::size_t x = 0; x < f.size(); ++x) {
    w.l1_mass += abs(w.weights[x]);
    w.correlation += w.weights[x] * f.value(x);
  }
  // exact re-checks: primal error and zero duality gap
  Rat worst = 0;
  for (std::size_t x = 0; x < f.size(); ++x) {
    Rat e = abs(Rat(f.value(x) - r.approximant.evaluate(f.point(x))));
    if (e > worst) worst = e;
  }
  if (worst != r.error) throw VerificationError("approximant error differs from the LP optimum");
  if (r.error > 0) {
    if (w.correlation != r.error) throw VerificationError("duality gap is not zero");
    auto chk = verify_witness(w, f);
    if (!chk.ok) throw VerificationError("approximation dual: " + chk.reason);
  }
  return r;
}

}  // namespace

ApproxResult approx_error(const BooleanFunction& f, int d, const SimplexOptions& opt) {
  require(d >= 0, "degree must be non-negative");
  return approx_over_basis(f, monomial_basis(f, d), d, {}, opt);
}

DegreeReport eps_approx_degree(const BooleanFunction& f, const Rat& eps, const SimplexOptions& opt) {
  require(eps >= 0, "epsilon must be non-negative");
  DegreeReport rep;
  if (eps >= 1) {
    rep.degree = 0;
    rep.primal = SparsePolynomial(f.dimension());
    rep.error = 1;
    return rep;
  }
  int top = max_basis_degree(f);
  for (int d = 0; d <= top; ++d) {
    ApproxResult r = approx_error(f, d, opt);
    if (r.error <= eps) {
      rep.degree = d;
      rep.primal = r.approximant;
      rep.error = r.error;
      return rep;
    }
    rep.dual = r.dual;
  }
  throw VerificationError("interpolation degree does not reach the requested error");
}

ApproxResult weighted_approx_error(const BooleanFunction& F, const std::vector<long>& v, long D,
                                   const SimplexOptions& opt) {
  require(F.is_cube() && v.size() == F.dimension(), "weighted approximation needs a cube function and one weight per variable");
  for (long w : v) require(w >= 1, "degree weights must be positive");
  return approx_over_basis(F, weighted_basis(v, D), static_cast<int>(D), v, opt);
}

DegreeReport weighted_approx_degree(const BooleanFunction& F, const Rat& eps, const std::vector<long>& v,
                                    const SimplexOptions& opt) {
  require(F.is_cube() && v.size() == F.dimension(), "weighted approximation needs a cube function and one weight per variable");
  DegreeReport rep;
  if (eps >= 1) {
    rep.degree = 0;
    rep.primal = SparsePolynomial(F.dimension());
    rep.error = 1;
    return rep;
  }
  std::vector<long> costs;
  std::size_t k = v.size();
  for (std::size_t mask = 0; mask < (std::size_t(1) << k); ++mask) {
    long c = 0;
    for (std::size_t i = 0; i < k; ++i)
      if ((mask >> i) & 1u) c += v[i];
    costs.push_back(c);
  }
  std::sort(costs.begin(), costs.end());
  costs.erase(std::unique(costs.begin(), costs.end()), costs.end());
  for (long D : costs) {
    ApproxResult r = weighted_approx_error(F, v, D, opt);
    if (r.error <= eps) {
      rep.degree = static_cast<int>(D);
      rep.primal = r.approximant;
      rep.error = r.error;
      return rep;
    }
    // r.dual is orthogonal to every monomial of weighted degree <= D, so
    // the weighted degree exceeds D; keep the strongest such witness
    rep.dual = r.dual;
  }
  throw VerificationError("full weighted degree does not reach the requested error");
}

namespace {

// s (s-1) ... (s-t+1) / (n (n-1) ... (n-t+1)) in variable `var` of k
SparsePolynomial falling_ratio(std::size_t k, std::size_t var, unsigned t, std::size_t n) {
  SparsePolynomial p = SparsePolynomial::constant(k, 1);
  SparsePolynomial s = SparsePolynomial::variable(k, var);
  for (unsigned j = 0; j < t; ++j) {
    p = p * (s - SparsePolynomial::constant(k, Rat(j)));
    p *= Rat(1) / Rat(static_cast<long>(n - j));
  }
  return p;
}

}  // namespace

SparsePolynomial symmetrize(const SparsePolynomial& phi, const std::vector<std::size_t>& blocks) {
  std::size_t N = 0;
  for (auto b : blocks) N += b;
  require(N == phi.num_vars(), "block sizes must add up to the number of variables");
  std::size_t k = blocks.size();
  SparsePolynomial red = phi.reduce_01();
  SparsePolynomial out(k);
  for (const auto& [e, c] : red.terms()) {
    SparsePolynomial t = SparsePolynomial::constant(k, c);
    std::size_t off = 0;
    for (std::size_t i = 0; i < k; ++i) {
      unsigned cnt = 0;
      for (std::size_t j = 0; j < blocks[i]; ++j) cnt += e[off + j];
      if (cnt) t = t * falling_ratio(k, i, cnt, blocks[i]);
      off += blocks[i];
    }
    out += t;
  }
  return out;
}

SparsePolynomial symmetrize_pm(const SparsePolynomial& phi, const std::vector<std::size_t>& blocks) {
  std::size_t N = phi.num_vars();
  std::vector<SparsePolynomial> img;
  for (std::size_t i = 0; i < N; ++i)
    img.push_back(SparsePolynomial::variable(N, i) * Rat(2) - SparsePolynomial::constant(N, 1));
  return symmetrize(phi.reduce_pm1().substitute(img), blocks);
}

}  // namespace signrep

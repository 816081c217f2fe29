#include "signrep/rational_approx.hpp"

#include <algorithm>

#include "signrep/cube.hpp"
#include "signrep/degrees.hpp"
#include "signrep/errors.hpp"

namespace signrep {

namespace {

bool domain_is_01(const BooleanFunction& f) {
  for (const auto& p : f.points())
    for (const auto& c : p)
      if (c != 0 && c != 1) return false;
  return true;
}

// Degree-preserving reduction that does not change values on f's domain.
SparsePolynomial reduce_on(const BooleanFunction& f, const SparsePolynomial& p) {
  if (f.is_cube()) return p.reduce_pm1();
  if (domain_is_01(f)) return p.reduce_01();
  return p;
}

Rat max_rat(const Rat& a, const Rat& b) { return a < b ? b : a; }

std::vector<Rat> values_on(const BooleanFunction& f, const SparsePolynomial& p) {
  if (f.is_cube() && f.dimension() <= 24) return cube_values(p);
  std::vector<Rat> v;
  v.reserve(f.size());
  for (const auto& x : f.points()) v.push_back(p.evaluate(x));
  return v;
}

UnivariatePolynomial to_univariate(const SparsePolynomial& p) {
  require(p.num_vars() == 1, "expected a polynomial in one variable");
  std::vector<Rat> c(static_cast<std::size_t>(std::max(p.degree(), 0)) + 1);
  for (const auto& [e, v] : p.terms()) c[e[0]] = v;
  return UnivariatePolynomial(std::move(c));
}

}  // namespace

Rat approximant_error(const BooleanFunction& f, const SparsePolynomial& p, const SparsePolynomial& q) {
  require(p.num_vars() == f.dimension() && q.num_vars() == f.dimension(), "approximant arity differs from the domain");
  auto pv = values_on(f, p);
  auto qv = values_on(f, q);
  Rat worst = 0;
  for (std::size_t x = 0; x < f.size(); ++x) {
    if (qv[x] <= 0) throw VerificationError("denominator is not positive on the domain");
    Rat e = abs(Rat(f.value(x) - pv[x] / qv[x]));
    if (e > worst) worst = e;
  }
  return worst;
}

RationalApproximant make_approximant(const BooleanFunction& f, SparsePolynomial p, SparsePolynomial q) {
  RationalApproximant a;
  a.verified_error = approximant_error(f, p, q);
  a.denominator_positive = true;
  a.degree = std::max({p.degree(), q.degree(), 0});
  a.numerator = std::move(p);
  a.denominator = std::move(q);
  return a;
}

bool verify_approximant(const BooleanFunction& f, const RationalApproximant& a) {
  try {
    return approximant_error(f, a.numerator, a.denominator) == a.verified_error &&
           std::max({a.numerator.degree(), a.denominator.degree(), 0}) <= a.degree;
  } catch (const VerificationError&) {
    return false;
  }
}

std::vector<Rat> symmetric_grid(long n) {
  std::vector<Rat> g;
  for (long t = -n; t <= n; ++t)
    if (t != 0) g.push_back(Rat(t));
  return g;
}

Rat sign_error_on_grid(const UnivariateRationalFunction& r, const std::vector<Rat>& grid) {
  Rat worst = 0;
  for (const Rat& t : grid) {
    require(t != 0, "grid must avoid 0");
    Rat d = r.den(t);
    if (d <= 0) throw VerificationError("denominator is not positive on the grid");
    Rat e = abs(Rat((t > 0 ? 1 : -1) - r.num(t) / d));
    if (e > worst) worst = e;
  }
  return worst;
}

BooleanFunction sign_function(const std::vector<Rat>& grid) {
  std::vector<Point> pts;
  std::vector<int> vals;
  for (const Rat& t : grid) {
    require(t != 0, "grid must avoid 0");
    pts.push_back({t});
    vals.push_back(t > 0 ? 1 : -1);
  }
  return BooleanFunction(std::move(pts), std::move(vals), "sign");
}

RationalApproximant to_multivariate(const UnivariateApproximant& u) {
  SparsePolynomial t = SparsePolynomial::variable(1, 0);
  return make_approximant(sign_function(u.grid), u.r.num.compose(t), u.r.den.compose(t));
}

// ---------------------------------------------------------------- Newman

NewmanResult newman(const Rat& N, int k, unsigned bits, std::optional<std::vector<Rat>> grid) {
  require(N > 1, "Newman construction needs N > 1");
  require(k >= 1, "Newman construction needs k >= 1");
  NewmanResult res;
  res.N = N;
  res.k = k;
  unsigned den = static_cast<unsigned>(2 * k);
  for (int i = 1; i <= k; ++i) res.roots.push_back(rational_power_near(N, 2 * i - 1, den, bits));
  res.scale = rational_power_near(N, -1, den, bits);
  UnivariatePolynomial p = UnivariatePolynomial::constant(1);
  for (const Rat& r : res.roots) p = p * UnivariatePolynomial({r, Rat(1)});
  UnivariatePolynomial pm = p.reflect();
  res.approx.r.num = (p - pm) * res.scale;
  res.approx.r.den = p + pm;
  res.approx.method = "newman";
  if (grid) {
    res.approx.grid = std::move(*grid);
  } else {
    Int top = floor_rat(N);
    require(top <= 10'000'000, "default Newman grid is too large");
    res.approx.grid = symmetric_grid(top.get_si());
  }
  res.approx.verified_error = sign_error_on_grid(res.approx.r, res.approx.grid);
  // error <= 1 - N^(-1/k)  <=>  N (1 - error)^k >= 1
  Rat one_minus = 1 - res.approx.verified_error;
  res.bound_certified = one_minus > 0 && N * rpow(one_minus, static_cast<unsigned>(k)) >= 1;
  if (res.bound_certified) {
    res.approx.bound_slack = 0;
  } else {
    Rat hi = rational_power_ceil(N, -1, static_cast<unsigned>(k), 128);
    res.approx.bound_slack = max_rat(Rat(0), Rat(hi - one_minus));
  }
  return res;
}

Rat newman_balance_slack(const NewmanResult& nr) {
  Rat a = rational_power_near(nr.N, 1, static_cast<unsigned>(2 * nr.k), 64);
  Rat c = (a + 1) / (a - 1);
  UnivariatePolynomial p = UnivariatePolynomial::constant(1);
  for (const Rat& r : nr.roots) p = p * UnivariatePolynomial({r, Rat(1)});
  Rat worst = 0;
  Int top = floor_rat(nr.N);
  for (long t = 1; t <= top.get_si(); ++t) {
    Rat pt = p(Rat(t)), pm = abs(p(Rat(-t)));
    if (pm == 0) continue;
    Rat gap = c - pt / pm;  // > 0 means violation
    if (gap > worst) worst = gap;
  }
  return worst;
}

// ---------------------------------------------------------------- boosting

RationalApproximant error_boost(const BooleanFunction& f, const RationalApproximant& A, int k, unsigned bits) {
  require(k >= 1, "boost degree must be positive");
  Rat eps = A.verified_error;
  require(eps < 1, "error boosting needs error < 1");
  if (eps == 0) return A;
  Rat N = (1 + eps) / (1 - eps);
  NewmanResult nr = newman(N, k, bits, std::vector<Rat>{Rat(1), Rat(-1)});
  const auto& P = nr.approx.r.num;
  const auto& Q = nr.approx.r.den;
  // S(p/(c q)) = sum P_j p^j (cq)^(k-j) / sum Q_j p^j (cq)^(k-j)
  std::size_t n = f.dimension();
  SparsePolynomial cq = A.denominator * (1 - eps);
  std::vector<SparsePolynomial> ppow{SparsePolynomial::constant(n, 1)}, cqpow{SparsePolynomial::constant(n, 1)};
  for (int j = 1; j <= k; ++j) {
    ppow.push_back(reduce_on(f, ppow.back() * A.numerator));
    cqpow.push_back(reduce_on(f, cqpow.back() * cq));
  }
  SparsePolynomial num(n), den(n);
  for (int j = 0; j <= k; ++j) {
    SparsePolynomial mono = reduce_on(f, ppow[j] * cqpow[k - j]);
    if (P.coefficient(j) != 0) num += mono * P.coefficient(j);
    if (Q.coefficient(j) != 0) den += mono * Q.coefficient(j);
  }
  RationalApproximant out = make_approximant(f, std::move(num), std::move(den));
  Rat one_minus = 1 - out.verified_error;
  if (one_minus > 0 && N * rpow(one_minus, static_cast<unsigned>(k)) >= 1) {
    out.bound_slack = 0;
  } else {
    Rat hi = rational_power_ceil(N, -1, static_cast<unsigned>(k), 128);
    out.bound_slack = max_rat(Rat(0), Rat(hi - one_minus));
  }
  return out;
}

RationalApproximant accuracy_boost(const BooleanFunction& f, const RationalApproximant& A, unsigned bits) {
  Rat eps = A.verified_error;
  require(eps < 1, "accuracy boosting needs error < 1");
  if (eps == 0) return A;
  Rat c = 1 - eps * eps;
  Rat s = rational_power_near(c, 1, 2, bits);
  Rat K = 4 * s / (1 + s);
  const auto& p = A.numerator;
  const auto& q = A.denominator;
  SparsePolynomial num = reduce_on(f, p * q) * K;
  SparsePolynomial den = reduce_on(f, p * p + (q * q) * c);
  RationalApproximant out = make_approximant(f, std::move(num), std::move(den));
  // bound (eps / (1 + sqrt c))^2, smallest value over the enclosure of sqrt c
  Rat s_hi = root_ceil(c, 2, 128);
  Rat bound_lo = eps * eps / ((1 + s_hi) * (1 + s_hi));
  out.bound_slack = max_rat(Rat(0), Rat(out.verified_error - bound_lo));
  return out;
}

// ---------------------------------------------------------------- bracket

LinearProgram bracket_lp(const BooleanFunction& f, int d, const Rat& eps) {
  auto basis = monomial_basis(f, d);
  std::size_t B = basis.size();
  LinearProgram lp(2 * B);
  for (std::size_t x = 0; x < f.size(); ++x) {
    std::vector<Rat> m(B);
    for (std::size_t j = 0; j < B; ++j) m[j] = monomial_value(basis[j], f.point(x));
    int fv = f.value(x);
    std::vector<Rat> lo(2 * B), hi(2 * B), pos(2 * B);
    for (std::size_t j = 0; j < B; ++j) {
      lo[j] = fv * m[j];
      lo[B + j] = -(1 - eps) * m[j];
      hi[j] = -fv * m[j];
      hi[B + j] = (1 + eps) * m[j];
      pos[B + j] = m[j];
    }
    lp.add_row(std::move(lo), Relation::GreaterEq, Rat(0));
    lp.add_row(std::move(hi), Relation::GreaterEq, Rat(0));
    lp.add_row(std::move(pos), Relation::GreaterEq, Rat(1));
  }
  return lp;
}

namespace {

struct BracketStep {
  bool feasible;
  RationalApproximant approx;
  std::vector<Rat> farkas;
};

BracketStep bracket_step(const BooleanFunction& f, int d, const Rat& eps, const SimplexOptions& opt) {
  auto out = solve(bracket_lp(f, d, eps), opt);
  BracketStep st;
  st.feasible = out.status == LPStatus::Feasible;
  if (!st.feasible) {
    st.farkas = std::move(out.farkas);
    return st;
  }
  auto basis = monomial_basis(f, d);
  std::size_t B = basis.size();
  SparsePolynomial p(f.dimension()), q(f.dimension());
  for (std::size_t j = 0; j < B; ++j) {
    p.add_term(basis[j], out.solution[j]);
    q.add_term(basis[j], out.solution[B + j]);
  }
  st.approx = make_approximant(f, std::move(p), std::move(q));
  if (st.approx.verified_error > eps) throw VerificationError("LP approximant exceeds the target error");
  return st;
}

// dyadic strictly inside (lo, hi), close to the midpoint
Rat dyadic_mid(const Rat& lo, const Rat& hi) {
  Rat mid = (lo + hi) / 2;
  for (long b = 2;; ++b) {
    Int s = ipow(2, static_cast<unsigned>(b));
    Rat m = make_rat(floor_rat(Rat(mid * Rat(s))), s);
    if (m > lo && m < hi && abs(Rat(m - mid)) * 8 <= hi - lo) return m;
  }
}

}  // namespace

ErrorBracket rational_error_bracket(const BooleanFunction& f, int d, const Rat& precision, const BracketHints& hints,
                                    const SimplexOptions& opt) {
  require(d >= 0, "degree must be non-negative");
  require(precision > 0, "precision must be positive");
  ErrorBracket br;
  br.degree = d;
  br.upper_approximant = make_approximant(f, SparsePolynomial(f.dimension()),
                                          SparsePolynomial::constant(f.dimension(), 1));
  br.upper = br.upper_approximant.verified_error;
  if (hints.known_upper) {
    require(hints.known_upper->degree <= d, "hinted approximant exceeds the degree");
    if (!verify_approximant(f, *hints.known_upper)) throw VerificationError("hinted approximant fails its re-check");
    if (hints.known_upper->verified_error < br.upper) {
      br.upper = hints.known_upper->verified_error;
      br.upper_approximant = *hints.known_upper;
      br.upper_method = hints.known_upper_method;
    }
  }
  auto take_upper = [&](BracketStep& st) {
    if (st.approx.verified_error < br.upper) {
      br.upper = st.approx.verified_error;
      br.upper_approximant = std::move(st.approx);
      br.upper_method = "lp";
    }
  };
  auto take_lower = [&](const Rat& eps, BracketStep& st, const std::string& how) {
    br.lower = eps;
    br.lower_eps = eps;
    br.lower_farkas = std::move(st.farkas);
    br.lower_method = how;
  };

  if (hints.known_lower && *hints.known_lower > 0 && *hints.known_lower < br.upper) {
    Rat L = *hints.known_lower;
    BracketStep st = bracket_step(f, d, L, opt);
    ++br.lp_solves;
    if (st.feasible) {
      if (st.approx.verified_error < L) throw VerificationError("LP approximant beats a certified lower bound");
      take_upper(st);
      br.lower = L;
      br.lower_method = hints.known_lower_method;
    } else {
      take_lower(L, st, hints.known_lower_method + "+farkas");
    }
  } else if (br.upper > 0) {
    BracketStep st = bracket_step(f, d, Rat(0), opt);
    ++br.lp_solves;
    if (st.feasible) take_upper(st);
    else take_lower(Rat(0), st, "farkas");
  }
  if (br.lower > br.upper) throw VerificationError("lower bound exceeds upper bound");
  while (br.upper - br.lower > precision) {
    Rat mid = dyadic_mid(br.lower, br.upper);
    BracketStep st = bracket_step(f, d, mid, opt);
    ++br.lp_solves;
    if (st.feasible) take_upper(st);
    else take_lower(mid, st, "farkas");
  }
  return br;
}

bool verify_bracket(const BooleanFunction& f, const ErrorBracket& b) {
  if (b.lower > b.upper) return false;
  if (!verify_approximant(f, b.upper_approximant) || b.upper_approximant.verified_error != b.upper) return false;
  if (!b.lower_farkas.empty())
    if (!verify_farkas(bracket_lp(f, b.degree, b.lower_eps), b.lower_farkas) || b.lower_eps != b.lower) return false;
  return true;
}

// ---------------------------------------------------------------- OR, ODD-MAX-BIT

RationalApproximant or_family_approximant(std::size_t n, const Rat& M) {
  require(M > 0, "M must be positive");
  BooleanFunction f = or_bits(n);
  SparsePolynomial s(n);
  for (std::size_t i = 0; i < n; ++i) s += SparsePolynomial::variable(n, i);
  SparsePolynomial one = SparsePolynomial::constant(n, 1);
  return make_approximant(f, one - s * M, one + s * M);
}

RationalApproximant odd_max_bit_approximant(std::size_t n, const Rat& M) {
  require(M > 0, "M must be positive");
  BooleanFunction f = make_named("ODD-MAX-BIT", {static_cast<long>(n)});
  SparsePolynomial num = SparsePolynomial::constant(n, 1), den = num;
  Rat w = 1;
  for (std::size_t i = 0; i < n; ++i) {
    w *= M;
    Rat sw = (i % 2 == 0) ? Rat(-w) : w;
    num += SparsePolynomial::variable(n, i) * sw;
    den += SparsePolynomial::variable(n, i) * w;
  }
  return make_approximant(f, std::move(num), std::move(den));
}

// ---------------------------------------------------------------- automaton

int dfa_step(int state, int digit) {
  require(digit >= -2 && digit <= 2, "digit outside {0,+-1,+-2}");
  if (state >= 3) return state;
  int P = state == 0 ? 0 : (state == 1 ? 1 : -1);
  int v = 2 * P + digit;
  if (v >= 2) return 3;
  if (v <= -2) return 4;
  return v == 0 ? 0 : (v == 1 ? 1 : 2);
}

int dfa_run(const std::vector<int>& z) {
  int s = 0;
  for (std::size_t i = z.size(); i-- > 0;) s = dfa_step(s, z[i]);
  s = dfa_step(s, 0);
  // only the exact zero value survives the trailing 0, and 1 + 0 > 0
  return s == 4 ? -1 : 1;
}

int dfa_alpha(int a, int b, int c) {
  // running value before reading c, assuming the automaton is still undecided
  int P;
  if (b % 2 == 0) P = 0;
  else P = (a % 2 == 0) ? b : -b;
  int v = 2 * P + c;
  if (v >= 2) return 1;
  if (v <= -2) return -1;
  return 0;
}

namespace {

const std::vector<Rat>& digit_axis() {
  static const std::vector<Rat> ax{Rat(-2), Rat(-1), Rat(0), Rat(1), Rat(2)};
  return ax;
}

struct AlphaTables {
  SparsePolynomial alpha, abs_alpha;
};

AlphaTables alpha_tables() {
  std::vector<Rat> a, b;
  for (int x = -2; x <= 2; ++x)
    for (int y = -2; y <= 2; ++y)
      for (int z = -2; z <= 2; ++z) {
        int v = dfa_alpha(x, y, z);
        a.push_back(Rat(v));
        b.push_back(Rat(v < 0 ? -v : v));
      }
  std::vector<std::vector<Rat>> nodes(3, digit_axis());
  AlphaTables t{interpolate_grid(nodes, a), interpolate_grid(nodes, b)};
  // the interpolants must reproduce the tables on the whole grid
  for (int x = -2; x <= 2; ++x)
    for (int y = -2; y <= 2; ++y)
      for (int z = -2; z <= 2; ++z) {
        std::vector<Rat> pt{Rat(x), Rat(y), Rat(z)};
        int v = dfa_alpha(x, y, z);
        if (t.alpha.evaluate(pt) != v || t.abs_alpha.evaluate(pt) != (v < 0 ? -v : v))
          throw VerificationError("alpha interpolant disagrees with its table");
      }
  return t;
}

// numerator/denominator of A_M at a digit string z_1..z_n, by table lookup
void dfa_values(const std::vector<int>& z, const std::vector<Rat>& Mpow, Rat& num, Rat& den) {
  std::size_t n = z.size();
  auto at = [&](std::size_t i) { return (i >= 1 && i <= n) ? z[i - 1] : 0; };
  num = 1;
  den = 1;
  for (std::size_t i = 0; i <= n; ++i) {
    int a = dfa_alpha(at(i + 2), at(i + 1), at(i));
    if (a == 0) continue;
    num += a * Mpow[i + 1];
    den += Mpow[i + 1];
  }
}

}  // namespace

DfaApproximant dfa_halfspace_approximant(std::size_t n, const Rat& M) {
  DfaApproximant out;
  out.sign_threshold = 2;
  if (M < out.sign_threshold)
    throw PreconditionError("M = " + to_string(M) + " is below the certified sign threshold " +
                            to_string(out.sign_threshold));
  BooleanFunction f = make_named("DFA-HS", {static_cast<long>(n)});
  AlphaTables tab = alpha_tables();
  out.alpha_poly = tab.alpha;
  out.abs_alpha_poly = tab.abs_alpha;
  // A_M = (1 + sum_{i=0}^n M^{i+1} alpha(z_{i+2}, z_{i+1}, z_i)) / (1 + sum M^{i+1} |alpha(...)|)
  SparsePolynomial num = SparsePolynomial::constant(n, 1), den = num;
  SparsePolynomial zero(n);
  auto var = [&](std::size_t i) { return (i >= 1 && i <= n) ? SparsePolynomial::variable(n, i - 1) : zero; };
  Rat w = 1;
  for (std::size_t i = 0; i <= n; ++i) {
    w *= M;
    std::vector<SparsePolynomial> img{var(i + 2), var(i + 1), var(i)};
    num += tab.alpha.substitute(img) * w;
    den += tab.abs_alpha.substitute(img) * w;
  }
  // exhaustive check of the tabulated values against the polynomials is
  // done through the generic evaluator for small n, by table otherwise
  std::vector<Rat> Mpow{Rat(1)};
  for (std::size_t i = 0; i <= n + 1; ++i) Mpow.push_back(Mpow.back() * M);
  Rat worst = 0, tn, td;
  std::vector<int> z(n);
  for (std::size_t x = 0; x < f.size(); ++x) {
    for (std::size_t i = 0; i < n; ++i) z[i] = static_cast<int>(f.point(x)[i].get_num().get_si());
    dfa_values(z, Mpow, tn, td);
    if (n <= 3) {
      if (num.evaluate(f.point(x)) != tn || den.evaluate(f.point(x)) != td)
        throw VerificationError("A_M polynomial disagrees with its table");
    }
    if (td <= 0) throw VerificationError("A_M denominator is not positive");
    Rat e = abs(Rat(f.value(x) - tn / td));
    if (e > worst) worst = e;
  }
  out.approx.numerator = std::move(num);
  out.approx.denominator = std::move(den);
  out.approx.degree = std::max(out.approx.numerator.degree(), out.approx.denominator.degree());
  out.approx.verified_error = worst;
  out.approx.denominator_positive = true;
  if (worst >= 1) throw VerificationError("A_M is not sign-correct");
  return out;
}

HalfspaceZeroError canonical_halfspace_zero_error(std::size_t n, std::size_t k, const Rat& M) {
  require(n >= 1 && k >= 1 && n * k <= 20, "canonical halfspace size out of range");
  BooleanFunction f = make_named("HALFSPACE", {static_cast<long>(n), static_cast<long>(k)});
  std::size_t V = n * k;
  HalfspaceZeroError out;
  if (k == 1) {
    out.delta = 0;
    out.degree_bound = 1;
    out.approx = make_approximant(f, SparsePolynomial::variable(V, n - 1), SparsePolynomial::constant(V, 1));
    return out;
  }
  if (M < 2) throw PreconditionError("M must be at least 2");
  int D = static_cast<int>(ceil_log2(Int(static_cast<unsigned long>(k))));
  out.delta = D;
  out.degree_bound = 64L * static_cast<long>(k) * D + 1;
  std::size_t L = (n + D - 1) / D;
  std::size_t E = (L + 1) * D;
  std::size_t N = f.size();
  // block sums and their balanced digits at every point
  std::vector<std::vector<std::vector<Rat>>> digit_vals(L, std::vector<std::vector<Rat>>(2 * D, std::vector<Rat>(N)));
  std::vector<std::vector<int>> w(N, std::vector<int>(E, 0));
  for (std::size_t x = 0; x < N; ++x) {
    const Point& p = f.point(x);
    for (std::size_t l = 0; l < L; ++l) {
      long S = 0;
      for (int i = 1; i <= D; ++i) {
        std::size_t row = l * D + i;  // 1-based row index
        if (row > n) continue;
        for (std::size_t j = 0; j < k; ++j) S += (1L << (i - 1)) * (p[(row - 1) * k + j] > 0 ? 1 : -1);
      }
      long mag = S < 0 ? -S : S;
      int sg = S < 0 ? -1 : 1;
      for (int j = 0; j < 2 * D; ++j) {
        int zj = ((mag >> j) & 1L) ? sg : 0;
        digit_vals[l][j][x] = zj;
        w[x][l * D + j] += zj;
      }
    }
  }
  for (std::size_t l = 0; l < L; ++l) {
    out.digits.emplace_back();
    for (int j = 0; j < 2 * D; ++j) {
      SparsePolynomial dp = multilinear_from_values(V, digit_vals[l][j]);
      out.digit_degree = std::max(out.digit_degree, dp.degree());
      out.digits.back().push_back(std::move(dp));
    }
  }
  if (out.digit_degree > static_cast<int>(k) * D) throw VerificationError("digit polynomial degree exceeds k*delta");
  std::vector<Rat> Mpow{Rat(1)};
  for (std::size_t i = 0; i <= E + 1; ++i) Mpow.push_back(Mpow.back() * M);
  std::vector<Rat> nv(N), dv(N);
  for (std::size_t x = 0; x < N; ++x) {
    for (int v : w[x])
      if (v < -2 || v > 2) throw VerificationError("regrouped digit outside {0,+-1,+-2}");
    // sign(1 + sum_{i=1}^E 2^i w_{i-1}) must equal f
    Int s = 1;
    for (std::size_t e = 0; e < E; ++e) s += ipow(2, static_cast<unsigned>(e + 1)) * w[x][e];
    if ((s > 0 ? 1 : -1) != f.value(x)) throw VerificationError("digit regrouping changed the halfspace value");
    dfa_values(w[x], Mpow, nv[x], dv[x]);
  }
  SparsePolynomial num = multilinear_from_values(V, nv), den = multilinear_from_values(V, dv);
  out.approx = make_approximant(f, std::move(num), std::move(den));
  if (out.approx.degree > out.degree_bound) throw VerificationError("degree bound violated");
  if (out.approx.verified_error >= 1) throw VerificationError("approximant is not sign-correct");
  return out;
}

// ---------------------------------------------------------------- majority

UnivariateApproximant maj_exact_interpolant(long n) {
  require(n >= 1, "n must be positive");
  std::vector<Rat> roots;
  for (long i = 1; i <= n; ++i) roots.push_back(Rat(-i));
  UnivariatePolynomial p = UnivariatePolynomial::from_roots(roots);
  UnivariatePolynomial pm = p.reflect();
  UnivariateApproximant a;
  a.r.num = p - pm;
  a.r.den = p + pm;
  a.grid = symmetric_grid(n);
  a.method = "exact-interpolant";
  a.verified_error = sign_error_on_grid(a.r, a.grid);
  if (a.verified_error != 0) throw VerificationError("exact interpolant has nonzero error");
  return a;
}

UnivariateApproximant maj_univariate_upper(long n, int d, unsigned bits) {
  require(n >= 1 && d >= 1, "n and d must be positive");
  if (d >= n) return maj_exact_interpolant(n);
  require(d <= n - 1 && ipow(2, static_cast<unsigned>(d)) > Int(n), "construction needs log n < d <= n-1");
  long k = d / 2;
  require(k >= 1, "construction needs d >= 2");
  Rat ratio = make_rat(n, k);
  std::vector<Rat> roots;
  for (long i = 1; i <= k; ++i) roots.push_back(Rat(-i));
  for (long i = 1; i <= k; ++i) roots.push_back(-Rat(k) * rational_power_near(ratio, i, static_cast<unsigned>(k), bits));
  UnivariatePolynomial p = UnivariatePolynomial::from_roots(roots);
  UnivariatePolynomial pm = p.reflect();
  std::optional<Rat> A;
  for (long t = 1; t <= n; ++t) {
    Rat den = abs(pm(Rat(t)));
    if (den == 0) continue;
    Rat r = p(Rat(t)) / den;
    if (!A || r < *A) A = r;
  }
  Rat c = A ? Rat((*A * *A - 1) / (*A * *A + 1)) : Rat(1);
  UnivariateApproximant a;
  a.r.num = (p - pm) * c;
  a.r.den = p + pm;
  a.grid = symmetric_grid(n);
  a.method = "maj-upper";
  a.verified_error = sign_error_on_grid(a.r, a.grid);
  return a;
}

RationalApproximant maj_from_univariate(const UnivariateApproximant& A, std::size_t n, const Rat& slack) {
  require(n >= 1 && slack > 0, "n and slack must be positive");
  long hi = static_cast<long>((n + 1) / 2), lo = static_cast<long>(n / 2);
  Rat base = sign_error_on_grid(A.r, symmetric_grid(hi));
  UnivariatePolynomial t2 = UnivariatePolynomial({Rat(0), Rat(0), Rat(1)});
  std::vector<Rat> tgrid;
  for (long t = -lo; t <= hi; ++t) tgrid.push_back(Rat(t));
  Rat delta = 1;
  UnivariateRationalFunction Ad;
  for (int j = 0;; ++j) {
    require(j < 4096, "no admissible delta found");
    Ad.num = t2 * A.r.num - UnivariatePolynomial::constant(delta);
    Ad.den = t2 * A.r.den + UnivariatePolynomial::constant(delta);
    Rat worst = 0;
    bool ok = true;
    for (const Rat& t : tgrid) {
      Rat dv = Ad.den(t);
      if (dv <= 0) {
        ok = false;
        break;
      }
      Rat e = abs(Rat((t > 0 ? 1 : -1) - Ad.num(t) / dv));
      if (e > worst) worst = e;
    }
    if (ok && worst <= base + slack) break;
    delta /= 2;
  }
  // t = (1/2) sum (x_i + 1) - floor(n/2)
  SparsePolynomial tx = SparsePolynomial::constant(n, Rat(static_cast<long>(n)) / 2 - Rat(lo));
  for (std::size_t i = 0; i < n; ++i) tx += SparsePolynomial::variable(n, i) * Rat(1, 2);
  BooleanFunction f = majority(n);
  RationalApproximant out = make_approximant(f, Ad.num.compose(tx).reduce_pm1(), Ad.den.compose(tx).reduce_pm1());
  if (out.verified_error > base + slack) throw VerificationError("lifted approximant exceeds err + slack");
  return out;
}

UnivariateApproximant univariate_from_maj(const RationalApproximant& B, std::size_t n) {
  require(n >= 2, "need n >= 2");
  UnivariatePolynomial P = to_univariate(symmetrize_pm(B.numerator, {n}));
  UnivariatePolynomial Q = to_univariate(symmetrize_pm(B.denominator, {n}));
  Rat shift = Rat(static_cast<long>((n + 1) / 2));
  UnivariateApproximant u;
  u.r.num = P.affine(Rat(1), shift);
  u.r.den = Q.affine(Rat(1), shift);
  u.grid = symmetric_grid(static_cast<long>(n / 2));
  u.method = "symmetrized";
  u.verified_error = sign_error_on_grid(u.r, u.grid);
  return u;
}

// ---------------------------------------------------------------- inequalities

LemmaCheck newman_product_check(const Rat& D, int n) {
  require(D > 1 && n >= 1, "need D > 1 and n >= 1");
  LemmaCheck c;
  c.lhs = 1;
  for (int i = 1; i <= n; ++i) {
    Rat p = rpow(D, static_cast<unsigned>(i));
    c.lhs *= (p + 1) / (p - 1);
  }
  Rat Dn = rpow(D, static_cast<unsigned>(n));
  c.rhs = exp_bounds(2 * (Dn - 1) / (Dn * (D - 1)));
  c.holds = c.lhs > c.rhs.hi;
  return c;
}

LemmaCheck infinite_product_check(const Rat& D, int terms) {
  require(D > 1 && terms >= 1, "need D > 1");
  LemmaCheck c;
  Rat prod = 1;
  for (int i = 1; i <= terms; ++i) {
    Rat p = rpow(D, static_cast<unsigned>(i));
    prod *= (p + 1) / (p - 1);
  }
  // tail prod_{i>K} <= exp(2 D / ((D^(K+1) - 1)(D - 1)))
  Rat tail_exp = 2 * D / ((rpow(D, static_cast<unsigned>(terms + 1)) - 1) * (D - 1));
  c.lhs = prod * exp_bounds(tail_exp).hi;
  c.rhs = exp_bounds(4 / (D - 1));
  c.holds = c.lhs < c.rhs.lo;
  return c;
}

BinomialRatio binomial_ratio(int n) {
  require(n >= 1, "n must be positive");
  std::vector<Rat> roots;
  for (int i = 1; i <= n; ++i) roots.push_back(Rat(2 * i + 1, 2));
  UnivariatePolynomial p = UnivariatePolynomial::from_roots(roots);
  BinomialRatio r;
  r.max_ratio = 0;
  r.closed_form_matches = true;
  for (int t = 1; t <= n + 1; ++t) {
    Rat ratio = abs(Rat(p(Rat(-t)) / p(Rat(t))));
    Rat closed = Rat(t, 2 * t + 1) * Rat(binomial(2 * n + 2 * t + 1, 2 * t) * binomial(2 * n + 1, n + t)) /
                 Rat(binomial(2 * t - 2, t - 1) * binomial(2 * n - 2 * t + 2, n - t + 1));
    if (ratio != closed) r.closed_form_matches = false;
    if (ratio > r.max_ratio) r.max_ratio = ratio;
  }
  return r;
}

LemmaCheck floors_check(long n, long d, unsigned bits) {
  require(d >= 1 && 55 * d <= n, "need 1 <= d <= n/55");
  Rat ratio = make_rat(n, d);
  std::vector<Rat> roots;
  // d D^i sqrt(D) = d (n/d)^((2i+1)/(2d))
  for (long i = 1; i <= d - 1; ++i)
    roots.push_back(Rat(d) * rational_power_near(ratio, 2 * i + 1, static_cast<unsigned>(2 * d), bits));
  UnivariatePolynomial p = UnivariatePolynomial::from_roots(roots);
  LemmaCheck c;
  bool first = true;
  for (long j = 1; j <= d; ++j) {
    // floor(d (n/d)^(j/d)) = floor((d^(d-j) n^j)^(1/d))
    Int t = iroot_floor(ipow(Int(d), static_cast<unsigned>(d - j)) * ipow(Int(n), static_cast<unsigned>(j)),
                        static_cast<unsigned>(d));
    Rat den = p(Rat(-t));
    if (den == 0) continue;
    Rat v = abs(Rat(p(Rat(t)) / den));
    if (first || v < c.lhs) c.lhs = v;
    first = false;
  }
  // exponent -4 ln(3d)/ln(n/d) - 8/(sqrt D - 1), D = (n/d)^(1/d)
  Interval l3d = ln_bounds(Rat(3 * d));
  Interval lnd = ln_bounds(ratio);
  Interval sqrtD{rational_power_floor(ratio, 1, static_cast<unsigned>(2 * d), 128),
                 rational_power_ceil(ratio, 1, static_cast<unsigned>(2 * d), 128)};
  Interval a = mul({Rat(-4), Rat(-4)}, div(l3d, lnd));
  Interval b = div({Rat(8), Rat(8)}, sub(sqrtD, {Rat(1), Rat(1)}));
  c.rhs = exp_of(sub(a, b));
  c.holds = !first && c.lhs > c.rhs.hi;
  return c;
}

}  // namespace signrep

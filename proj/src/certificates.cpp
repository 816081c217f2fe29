#include "signrep/certificates.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "signrep/errors.hpp"

namespace signrep {

MomentMatchedPair moment_matched_pair(int m) {
  require(m >= 1 && m <= 12, "moment matched pair needs 1 <= m <= 12");
  MomentMatchedPair mm;
  mm.m = m;
  Rat scale = Rat(1) / Rat(ipow(16, static_cast<unsigned>(m)));
  Rat s0 = 0, s1 = 0;
  for (int t = -m; t <= m; ++t) {
    mm.lambda0.push_back(scale * Rat(binomial(4 * m + 1, 2 * m + 2 * t)));
    mm.lambda1.push_back(scale * Rat(binomial(4 * m + 1, 2 * m + 2 * t + 1)));
    s0 += mm.lambda0.back();
    s1 += mm.lambda1.back();
  }
  if (s0 != 1 || s1 != 1) throw VerificationError("moment matched pair does not sum to 1");
  for (int d = 0; d <= 4 * m; ++d) {
    Rat a = 0;
    for (int t = -m; t <= m; ++t) a += mm.lambda0[t + m] * rpow(Rat(2 * t), static_cast<unsigned>(d));
    mm.alphas.push_back(a);
    // difference = 16^-m sum_j (-1)^j C(4m+1, j) (j - 2m)^d
    std::vector<Rat> coeffs(static_cast<std::size_t>(d) + 1);
    for (int j = 0; j <= d; ++j)
      coeffs[j] = Rat(binomial(d, j)) * rpow(Rat(-2 * m), static_cast<unsigned>(d - j));
    if (!check_comb_identity(4 * m + 1, UnivariatePolynomial(coeffs)) || moment_gap(mm, d) != 0)
      throw VerificationError("moment equality fails at d = " + std::to_string(d));
  }
  return mm;
}

Rat moment_gap(const MomentMatchedPair& mm, int d) {
  require(d >= 0, "d must be non-negative");
  Rat g = 0;
  for (int t = -mm.m; t <= mm.m; ++t) {
    g += mm.lambda0[t + mm.m] * rpow(Rat(2 * t), static_cast<unsigned>(d));
    g -= mm.lambda1[t + mm.m] * rpow(Rat(2 * t + 1), static_cast<unsigned>(d));
  }
  return g;
}

std::vector<Rat> ProductDistribution::moments(int d) const {
  require(d >= 0, "d must be non-negative");
  std::vector<Rat> out;
  for (int bi : b) {
    const auto& lam = bi ? pair.lambda1 : pair.lambda0;
    Rat e = 0;
    for (int t = -pair.m; t <= pair.m; ++t) e += lam[t + pair.m] * rpow(Rat(2 * t + bi), static_cast<unsigned>(d));
    out.push_back(e);
  }
  return out;
}

std::vector<std::pair<std::vector<long>, Rat>> ProductDistribution::atoms(std::size_t cap) const {
  std::size_t w = static_cast<std::size_t>(2 * pair.m + 1);
  long double total = 1;
  for (std::size_t i = 0; i < b.size(); ++i) total *= static_cast<long double>(w);
  if (total > static_cast<long double>(cap)) throw ResourceError("product distribution exceeds the atom cap");
  std::vector<std::pair<std::vector<long>, Rat>> out;
  std::vector<std::size_t> idx(b.size(), 0);
  for (std::size_t g = 0; g < static_cast<std::size_t>(total); ++g) {
    std::size_t r = g;
    std::vector<long> v(b.size());
    Rat pr = 1;
    for (std::size_t i = b.size(); i-- > 0;) {
      idx[i] = r % w;
      r /= w;
      v[i] = static_cast<long>(idx[i]) - pair.m;
      pr *= (b[i] ? pair.lambda1 : pair.lambda0)[idx[i]];
    }
    out.emplace_back(std::move(v), pr);
  }
  return out;
}

ProductDistribution mu_b(const std::vector<int>& b, int m) {
  for (int x : b) require(x == 0 || x == 1, "b must be a 0/1 vector");
  ProductDistribution pd{b, moment_matched_pair(m)};
  for (int d = 0; d <= 4 * m; ++d) {
    auto mo = pd.moments(d);
    for (const Rat& v : mo)
      if (v != pd.pair.alphas[d]) throw VerificationError("mu_b moment differs from alpha_d");
  }
  return pd;
}

HalfspaceCoupling halfspace_moment_coupling(int n) {
  require(n >= 1 && n <= 2, "coupling is materialized for n <= 2");
  HalfspaceCoupling c;
  c.n = n;
  c.pair = moment_matched_pair(n);
  long C = 2L * n + 2;
  for (int i = n; i >= 0; --i) c.z.push_back(-(1L << i));
  for (int i = 0; i <= n; ++i) c.z.push_back(1L << i);
  const int m = n;
  for (long comp = 1; comp <= C; ++comp) {
    auto delta = [&](long i) { return (comp == n + 1 + i ? 1L : 0L) - (comp == n + 2 - i ? 1L : 0L); };
    std::vector<std::pair<std::vector<long>, Rat>> atoms;
    std::vector<long> xs;
    // depth-first over the chain y_0 = 0, y_1, ..., y_n
    auto rec = [&](auto&& self, long i, long y, Rat pr) -> void {
      if (i > n) {
        std::vector<long> x = xs;
        x.push_back(-y + (comp == C ? 1 : 0) - (comp == 1 ? 1 : 0));
        atoms.emplace_back(std::move(x), pr);
        return;
      }
      long dl = delta(i);
      long b = ((-y + dl) % 2 + 2) % 2;
      long u = (b + y - dl) / 2;
      const auto& lam = b ? c.pair.lambda1 : c.pair.lambda0;
      for (long v = -m; v <= m; ++v) {
        const Rat& p = lam[v + m];
        if (p == 0) continue;
        long yi = v + u;
        xs.push_back(2 * yi - y + dl);
        self(self, i + 1, yi, pr * p);
        xs.pop_back();
      }
    };
    rec(rec, 1, 0, Rat(1));
    Rat tot = 0;
    for (const auto& a : atoms) tot += a.second;
    if (tot != 1) throw VerificationError("coupling component is not a distribution");
    c.components.push_back(std::move(atoms));
  }
  return c;
}

bool coupling_support_ok(const HalfspaceCoupling& c) {
  long bound = 3L * c.n + 1;
  for (std::size_t k = 0; k < c.components.size(); ++k)
    for (const auto& [x, pr] : c.components[k]) {
      long s = 0;
      for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] > bound || x[i] < -bound) return false;
        s += (1L << i) * x[i];
      }
      if (s != c.z[k]) return false;
    }
  return true;
}

std::vector<Rat> coupling_moment(const HalfspaceCoupling& c, const std::vector<unsigned>& d) {
  require(d.size() == static_cast<std::size_t>(c.n), "one exponent per x_1..x_n");
  std::vector<Rat> out;
  for (const auto& comp : c.components) {
    Rat e = 0;
    for (const auto& [x, pr] : comp) {
      Rat v = pr;
      for (std::size_t i = 0; i < d.size(); ++i) v *= rpow(Rat(x[i]), d[i]);
      e += v;
    }
    out.push_back(e);
  }
  return out;
}

std::vector<Rat> coupling_expectation(const HalfspaceCoupling& c, const SparsePolynomial& p) {
  require(p.num_vars() == static_cast<std::size_t>(c.n) + 1, "p must have n+1 variables");
  std::vector<Rat> out;
  for (const auto& comp : c.components) {
    Rat e = 0;
    for (const auto& [x, pr] : comp) {
      std::vector<Rat> pt(x.begin(), x.end());
      e += pr * p.evaluate(pt);
    }
    out.push_back(e);
  }
  return out;
}

UnivariatePolynomial degree_nonincreasing_map(const SparsePolynomial& p, int n) {
  require(n >= 1 && n <= 2, "degree map is materialized for n <= 2");
  require(p.num_vars() == static_cast<std::size_t>(n) + 1, "p must have n+1 variables");
  require(p.degree() <= 4 * n, "deg p must be at most 4n");
  MomentMatchedPair mm = moment_matched_pair(n);
  // variables of the image: x_1..x_n, then z
  std::size_t V = static_cast<std::size_t>(n) + 1;
  std::vector<SparsePolynomial> images;
  SparsePolynomial last = SparsePolynomial::variable(V, static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    images.push_back(SparsePolynomial::variable(V, static_cast<std::size_t>(i)));
    last -= SparsePolynomial::variable(V, static_cast<std::size_t>(i)) * Rat(pow2(i));
  }
  images.push_back(last * Rat(pow2(-n)));
  SparsePolynomial sub = p.substitute(images);
  std::vector<Rat> coeffs(static_cast<std::size_t>(std::max(p.degree(), 0)) + 1);
  for (const auto& [e, cf] : sub.terms()) {
    Rat v = cf;
    for (int i = 0; i < n; ++i) v *= mm.alphas[e[i]];
    coeffs[e[n]] += v;
  }
  UnivariatePolynomial q(coeffs);
  HalfspaceCoupling c = halfspace_moment_coupling(n);
  auto ex = coupling_expectation(c, p);
  for (std::size_t k = 0; k < ex.size(); ++k)
    if (q(Rat(c.z[k])) != ex[k]) throw VerificationError("coupling components disagree with a single q");
  return q;
}

SignPatternCert sign_pattern_infeasible(int n) {
  require(n >= 1 && n <= 2, "sign pattern LP needs 1 <= n <= 2");
  long R = 3L * n + 1;
  std::vector<Point> pts;
  std::vector<int> vals;
  std::vector<long> x(static_cast<std::size_t>(n) + 1);
  long span = 2 * R + 1, total = 1;
  for (int i = 0; i < n; ++i) total *= span;
  for (int i = 0; i <= n; ++i) {
    for (int sgn_side : {1, -1}) {
      long target = sgn_side * (1L << i);
      for (long g = 0; g < total; ++g) {
        long r = g, s = 0;
        for (int j = n - 1; j >= 0; --j) {
          x[j] = r % span - R;
          r /= span;
        }
        for (int j = 0; j < n; ++j) s += (1L << j) * x[j];
        long rest = target - s;
        if (rest % (1L << n) != 0) continue;
        x[n] = rest / (1L << n);
        if (x[n] < -R || x[n] > R) continue;
        pts.emplace_back(x.begin(), x.end());
        int v = (i % 2 == 0) ? 1 : -1;
        vals.push_back(sgn_side > 0 ? v : -v);
      }
    }
  }
  SignPatternCert c;
  c.n = n;
  c.degree = 2 * n;
  c.g = BooleanFunction(std::move(pts), std::move(vals), "sign-pattern_" + std::to_string(n));
  LinearProgram lp = threshold_lp(c.g, c.degree);
  auto out = solve(lp);
  if (out.status != LPStatus::Infeasible) throw VerificationError("sign pattern is feasible at degree 2n");
  if (!verify_farkas(lp, out.farkas)) throw VerificationError("Farkas certificate fails");
  c.farkas = out.farkas;
  auto w = gordan_witness(c.g, c.degree);
  if (!w) throw VerificationError("no Gordan witness at degree 2n");
  c.gordan = *w;
  c.rep_above = sign_representation(c.g, c.degree + 1);
  return c;
}

WitnessCheck verify_lower_cert(const RationalLowerBoundCert& c) {
  auto fail = [](std::string s) { return WitnessCheck{false, std::move(s)}; };
  std::size_t k = c.S.size();
  if (k == 0) return fail("S is empty");
  if (c.points.size() != 2 * k || c.psi.size() != 2 * k) return fail("points and psi must list S then -S");
  if (c.delta <= 0 || c.delta > 1) return fail("delta outside (0,1]");
  if (c.implied_bound != 2 * c.delta / (1 + c.delta)) return fail("implied bound is not 2 delta/(1+delta)");
  std::set<Point> seen;
  for (std::size_t i = 0; i < k; ++i) {
    Point neg = c.S[i];
    for (auto& v : neg) v = -v;
    if (c.points[i] != c.S[i] || c.points[k + i] != neg) return fail("points are not S followed by -S");
    seen.insert(c.S[i]);
  }
  for (std::size_t i = 0; i < k; ++i) {
    Point neg = c.S[i];
    for (auto& v : neg) v = -v;
    if (seen.count(neg)) return fail("S meets -S");
  }
  for (std::size_t i = 0; i < k; ++i) {
    if (c.psi[i] <= 0) return fail("psi is not positive on S");
    if (c.psi[i] < c.delta * abs(c.psi[k + i])) return fail("psi(x) < delta |psi(-x)|");
  }
  std::size_t dim = c.S[0].size();
  std::vector<unsigned> caps(dim);
  for (std::size_t j = 0; j < dim; ++j) {
    std::set<Rat> vs;
    for (const auto& p : c.points) vs.insert(p[j]);
    caps[j] = static_cast<unsigned>(vs.size() - 1);
  }
  for (const auto& e : monomial_basis(caps, c.d)) {
    Rat s = 0;
    for (std::size_t x = 0; x < c.points.size(); ++x)
      if (c.psi[x] != 0) s += c.psi[x] * monomial_value(e, c.points[x]);
    if (s != 0) return fail("psi is not orthogonal to a monomial of degree " + std::to_string(total_degree(e)));
  }
  return {};
}

BooleanFunction cert_function(const RationalLowerBoundCert& c) {
  std::vector<int> v(c.points.size(), 1);
  for (std::size_t i = c.S.size(); i < v.size(); ++i) v[i] = -1;
  return BooleanFunction(c.points, std::move(v), "criterion");
}

namespace {

RationalLowerBoundCert finish_cert(std::vector<Point> S, std::vector<Rat> psi_pos, std::vector<Rat> psi_neg, int d) {
  RationalLowerBoundCert c;
  c.S = std::move(S);
  c.d = d;
  c.points = c.S;
  for (const auto& p : c.S) {
    Point q = p;
    for (auto& v : q) v = -v;
    c.points.push_back(std::move(q));
  }
  c.psi = psi_pos;
  c.psi.insert(c.psi.end(), psi_neg.begin(), psi_neg.end());
  std::optional<Rat> ratio;
  for (std::size_t i = 0; i < psi_pos.size(); ++i) {
    if (psi_pos[i] <= 0) throw VerificationError("psi is not positive on S");
    if (psi_neg[i] == 0) continue;
    Rat r = psi_pos[i] / abs(psi_neg[i]);
    if (!ratio || r < *ratio) ratio = r;
  }
  c.delta = (!ratio || *ratio > 1) ? Rat(1) : *ratio;
  if (c.delta <= 0) throw VerificationError("delta is not positive");
  c.implied_bound = 2 * c.delta / (1 + c.delta);
  auto chk = verify_lower_cert(c);
  if (!chk.ok) throw VerificationError("criterion certificate: " + chk.reason);
  return c;
}

}  // namespace

HalfspaceCriterion halfspace_criterion_cert(int n, unsigned bits) {
  HalfspaceCriterion h;
  h.pattern = sign_pattern_infeasible(n);
  const BooleanFunction& g = h.pattern.g;
  std::vector<Rat> phi(g.size());
  for (std::size_t x = 0; x < g.size(); ++x) {
    auto i = g.index_of(h.pattern.gordan.points[x]);
    phi[*i] = h.pattern.gordan.weights[x] * g.value(*i);
  }
  h.sqrt2 = rational_power_near(Rat(2), 1, 2, bits);
  auto p = [&](const Point& x) {
    Rat s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) s += Rat(pow2(static_cast<long>(i))) * x[i];
    Rat v = 1;
    for (int j = 0; j < n; ++j) v *= s - Rat(pow2(j)) * h.sqrt2;
    return v;
  };
  Rat sg = (n % 2 == 0) ? 1 : -1;
  std::vector<Point> S;
  std::vector<Rat> pos, neg;
  BooleanFunction f = make_named("HS-GRID", {n});
  for (std::size_t x = 0; x < g.size(); ++x) {
    const Point& a = g.point(x);
    long s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += (1L << i) * a[i].get_num().get_si();
    if (s <= 0) continue;  // A, not -A
    Point b = a;
    for (auto& v : b) v = -v;
    std::size_t xb = *g.index_of(b);
    Rat psi_a = sg * (phi[x] - phi[xb]) * p(a);
    Rat psi_b = sg * (phi[xb] - phi[x]) * p(b);
    if (psi_a == 0) continue;
    if (f.value_at(a) != 1 || f.value_at(b) != -1) throw VerificationError("halfspace is not +1 on A and -1 on -A");
    S.push_back(a);
    pos.push_back(psi_a);
    neg.push_back(psi_b);
  }
  if (S.empty()) throw VerificationError("psi vanishes on A");
  h.cert = finish_cert(std::move(S), std::move(pos), std::move(neg), n);
  Rat s_lo = root_floor(Rat(2), 2, 128);
  h.floor = exp_bounds(-9 * s_lo);
  h.floor_holds = h.cert.delta > h.floor.hi;
  return h;
}

namespace {

UnivariatePolynomial excluded_product(long n, const std::set<long>& S) {
  std::vector<Rat> roots;
  for (long i = -n; i <= n; ++i)
    if (!S.count(i < 0 ? -i : i) || i == 0) roots.push_back(Rat(i));
  return UnivariatePolynomial::from_roots(roots);
}

Rat parity_sign(long n) { return n % 2 == 0 ? Rat(1) : Rat(-1); }

}  // namespace

MajCriterionInput maj_small_degree_preset(long n, int d, unsigned bits) {
  require(d >= 1 && ipow(2, static_cast<unsigned>(d)) <= Int(n), "small-degree preset needs 1 <= d <= log n");
  long D = iroot_floor(Int(n), static_cast<unsigned>(d)).get_si();
  require(D >= 2, "Delta must be at least 2");
  MajCriterionInput in;
  in.preset = "small-degree";
  std::set<long> S;
  long pw = 1;
  for (int i = 0; i <= d; ++i, pw *= D) {
    S.insert(pw);
    in.S.push_back(pw);
  }
  Rat s = rational_power_near(Rat(D), 1, 2, bits);
  std::vector<Rat> roots;
  pw = 1;
  for (int i = 0; i < d; ++i, pw *= D) roots.push_back(Rat(pw) * s);
  in.r = UnivariatePolynomial::from_roots(roots) * excluded_product(n, S) * parity_sign(n);
  // exp(-18 / sqrt Delta)
  Rat s_lo = root_floor(Rat(D), 2, 128), s_hi = root_ceil(Rat(D), 2, 128);
  Interval a = exp_bounds(Rat(-18) / s_lo), b = exp_bounds(Rat(-18) / s_hi);
  in.floor = Interval{a.lo, b.hi};
  return in;
}

MajCriterionInput maj_high_degree_preset(long n, int d, unsigned bits) {
  require(ipow(2, static_cast<unsigned>(d)) > Int(n) && 55L * d < n, "high-degree preset needs log n < d < n/55");
  // k = ceil(d / log2(n/d)): least k with n^k >= 2^d d^k
  long k = 1;
  while (ipow(Int(n), static_cast<unsigned>(k)) < ipow(2, static_cast<unsigned>(d)) * ipow(Int(d), static_cast<unsigned>(k)))
    ++k;
  MajCriterionInput in;
  in.preset = "high-degree";
  std::set<long> S;
  for (long i = 1; i <= k; ++i) S.insert(i);
  for (long i = 1; i <= d; ++i)
    S.insert(iroot_floor(ipow(Int(d), static_cast<unsigned>(d - i)) * ipow(Int(n), static_cast<unsigned>(i)),
                         static_cast<unsigned>(d)).get_si());
  in.S.assign(S.begin(), S.end());
  std::vector<Rat> roots;
  for (long i = 1; i <= k; ++i) roots.push_back(Rat(2 * i + 1, 2));
  for (long i = 1; i <= d - 1; ++i)
    roots.push_back(Rat(d) * rational_power_near(make_rat(n, d), 2 * i + 1, static_cast<unsigned>(2 * d), bits));
  in.r = UnivariatePolynomial::from_roots(roots) * excluded_product(n, S) * parity_sign(n);
  return in;
}

MajCriterionInput maj_near_linear_preset(long n, int d) {
  require(d >= 0 && d <= n - 1, "near-linear preset needs d <= n-1");
  MajCriterionInput in;
  in.preset = "near-linear";
  std::vector<Rat> roots{Rat(0)};
  for (long i = 1; i <= d; ++i) roots.push_back(Rat(2 * i + 1, 2));
  for (long i = d + 2; i <= n; ++i) {
    roots.push_back(Rat(i));
    roots.push_back(Rat(-i));
  }
  for (long i = 1; i <= d + 1; ++i) in.S.push_back(i);
  in.r = UnivariatePolynomial::from_roots(roots) * parity_sign(n);
  return in;
}

std::optional<MajCriterionInput> maj_preset(long n, int d, unsigned bits) {
  if (d < 1 || d > n - 1) return std::nullopt;
  if (ipow(2, static_cast<unsigned>(d)) <= Int(n)) return maj_small_degree_preset(n, d, bits);
  if (55L * d < n) return maj_high_degree_preset(n, d, bits);
  return maj_near_linear_preset(n, d);
}

RationalLowerBoundCert maj_criterion_cert(long n, int d, const std::vector<long>& S, const UnivariatePolynomial& r) {
  require(n >= 1 && d >= 0 && d <= 2 * n - 1, "need 0 <= d <= 2n-1");
  require(!S.empty(), "S must be nonempty");
  require(r.degree() <= 2 * n - d - 1, "deg r exceeds 2n-d-1");
  std::set<long> Sset(S.begin(), S.end());
  for (long t : Sset) require(t >= 1 && t <= n, "S must lie in {1..n}");
  for (long t = -n; t <= n; ++t)
    if (!Sset.count(t < 0 ? -t : t) || t == 0)
      if (r(Rat(t)) != 0) throw PreconditionError("r does not vanish at t = " + std::to_string(t));
  std::vector<Point> pts;
  std::vector<Rat> pos, neg;
  for (long t : Sset) {
    Rat sgn_t = (t % 2 == 0) ? 1 : -1;
    pts.push_back({Rat(t)});
    pos.push_back(sgn_t * Rat(binomial(2 * n, n + t)) * r(Rat(t)));
    neg.push_back(sgn_t * Rat(binomial(2 * n, n - t)) * r(Rat(-t)));
  }
  return finish_cert(std::move(pts), std::move(pos), std::move(neg), d);
}

std::vector<MajTableRow> maj_error_table(long n, const std::vector<int>& ds, const Rat& precision) {
  require(n >= 1 && n <= 32, "majority table needs 1 <= n <= 32");
  BooleanFunction sg = sign_function(symmetric_grid(n));
  std::vector<MajTableRow> rows;
  for (int d : ds) {
    require(d >= 0, "degrees must be non-negative");
    MajTableRow row;
    row.n = n;
    row.d = d;
    std::optional<UnivariateApproximant> best;
    auto consider = [&](UnivariateApproximant u) {
      if (!best || u.verified_error < best->verified_error) best = std::move(u);
    };
    if (d >= n) {
      consider(maj_exact_interpolant(n));
    } else if (d >= 1) {
      consider(newman(Rat(n), d).approx);
      if (d >= 2 && ipow(2, static_cast<unsigned>(d)) > Int(n)) consider(maj_univariate_upper(n, d));
    }
    BracketHints hints;
    if (best) {
      row.construction_upper = best->verified_error;
      row.construction_method = best->method;
      hints.known_upper = to_multivariate(*best);
      hints.known_upper_method = best->method;
    } else {
      row.construction_upper = 1;
      row.construction_method = "zero";
    }
    if (auto in = maj_preset(n, d)) {
      RationalLowerBoundCert c = maj_criterion_cert(n, d, in->S, in->r);
      if (in->floor && !(c.delta >= in->floor->lo)) throw VerificationError("delta below the closed-form floor");
      row.criterion_lower = c.implied_bound;
      row.criterion_method = in->preset;
      hints.known_lower = c.implied_bound;
      hints.known_lower_method = "criterion:" + in->preset;
    }
    row.bracket = rational_error_bracket(sg, d, precision, hints);
    if (!verify_bracket(sg, row.bracket)) throw VerificationError("bracket fails its re-check");
    Rat crit = row.criterion_lower.value_or(Rat(0));
    row.sandwich = crit <= row.bracket.lower && row.bracket.lower <= row.bracket.upper &&
                   row.bracket.upper <= row.construction_upper;
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string maj_table_csv(const std::vector<MajTableRow>& rows) {
  std::ostringstream os;
  os << "n,d,criterion_lower,lower,upper,construction_upper,criterion_method,lower_method,upper_method,construction_method\n";
  for (const auto& r : rows) {
    os << r.n << ',' << r.d << ',' << (r.criterion_lower ? to_string(*r.criterion_lower) : std::string()) << ','
       << to_string(r.bracket.lower) << ',' << to_string(r.bracket.upper) << ',' << to_string(r.construction_upper)
       << ',' << r.criterion_method << ',' << r.bracket.lower_method << ',' << r.bracket.upper_method << ','
       << r.construction_method << '\n';
  }
  return os.str();
}

}  // namespace signrep

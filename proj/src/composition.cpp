#include "signrep/composition.hpp"

#include <algorithm>
#include <bit>
#include <functional>

#include "signrep/cube.hpp"
#include "signrep/errors.hpp"

namespace signrep {

namespace {

// cube index of a point: bit (k-1-i) set iff x_i = +1
inline bool bit_of(std::size_t idx, std::size_t k, std::size_t i) { return (idx >> (k - 1 - i)) & 1u; }

void require_cube(const BooleanFunction& F, const char* what) {
  require(F.is_cube(), std::string(what) + " must live on the cube {-1,+1}^k");
}

std::vector<Rat> weights_by_index(const DualWitness& w, const BooleanFunction& f) {
  require(w.points.size() == w.weights.size(), "witness points and weights differ in length");
  std::vector<Rat> out(f.size());
  for (std::size_t x = 0; x < w.points.size(); ++x) {
    auto i = f.index_of(w.points[x]);
    require(i.has_value(), "witness point outside the domain");
    out[*i] = w.weights[x];
  }
  return out;
}

// Mixed-radix walk over the product domain in the order used by compose().
template <class Fn>
void for_each_product(const std::vector<std::size_t>& sizes, Fn&& fn) {
  std::size_t total = 1;
  for (auto s : sizes) total *= s;
  std::vector<std::size_t> idx(sizes.size(), 0);
  for (std::size_t g = 0; g < total; ++g) {
    std::size_t r = g;
    for (std::size_t i = sizes.size(); i-- > 0;) {
      idx[i] = r % sizes[i];
      r /= sizes[i];
    }
    fn(g, idx);
  }
}

std::vector<Rat> values_on_domain(const BooleanFunction& H, const SparsePolynomial& p) {
  if (H.is_cube()) return cube_values(p.reduce_pm1());
  std::vector<Rat> v;
  v.reserve(H.size());
  for (const auto& x : H.points()) v.push_back(p.evaluate(x));
  return v;
}

Rat sup_error(const BooleanFunction& f, const SparsePolynomial& p) {
  auto v = values_on_domain(f, p);
  Rat worst = 0;
  for (std::size_t x = 0; x < f.size(); ++x) {
    Rat e = abs(Rat(f.value(x) - v[x]));
    if (e > worst) worst = e;
  }
  return worst;
}

}  // namespace

CombinatorialProfile combinatorial_profile(const BooleanFunction& F) {
  require_cube(F, "F");
  std::size_t k = F.dimension();
  require(k <= 20, "combinatorial profile needs k <= 20");
  std::size_t N = std::size_t(1) << k;
  const auto& val = F.values();
  CombinatorialProfile prof;
  prof.per_point_certificates.resize(N);
  prof.per_point_bs.resize(N);
  // masks are over index bits; coordinate i is bit k-1-i
  std::vector<std::size_t> masks(N);
  for (std::size_t m = 0; m < N; ++m) masks[m] = m;
  std::stable_sort(masks.begin(), masks.end(),
                   [](std::size_t a, std::size_t b) { return std::popcount(a) < std::popcount(b); });
  for (std::size_t x = 0; x < N; ++x) {
    for (std::size_t fixed : masks) {
      std::size_t freem = (N - 1) & ~fixed;
      bool mono = true;
      // enumerate submasks of the free set
      for (std::size_t s = freem;; s = (s - 1) & freem) {
        if (val[(x & fixed) | s] != val[x]) {
          mono = false;
          break;
        }
        if (s == 0) break;
      }
      if (mono) {
        for (std::size_t i = 0; i < k; ++i)
          if (bit_of(fixed, k, i)) prof.per_point_certificates[x].push_back(i);
        break;
      }
    }
    prof.certificate_complexity =
        std::max(prof.certificate_complexity, static_cast<int>(prof.per_point_certificates[x].size()));
  }
  // block sensitivity: largest packing of disjoint sensitive blocks
  std::vector<int> best(N);
  for (std::size_t x = 0; x < N; ++x) {
    best[0] = 0;
    for (std::size_t m = 1; m < N; ++m) {
      std::size_t low = m & (~m + 1);
      int b = best[m & ~low];
      std::size_t rest = m & ~low;
      for (std::size_t s = rest;; s = (s - 1) & rest) {
        std::size_t B = s | low;
        if (val[x ^ B] != val[x]) b = std::max(b, 1 + best[m & ~B]);
        if (s == 0) break;
      }
      best[m] = b;
    }
    prof.per_point_bs[x] = best[N - 1];
    prof.block_sensitivity = std::max(prof.block_sensitivity, best[N - 1]);
  }
  return prof;
}

Rat flip_agreement(const BooleanFunction& F, std::size_t x, const std::vector<Rat>& alpha) {
  require_cube(F, "F");
  std::size_t k = F.dimension();
  require(alpha.size() == k, "one flip probability per coordinate");
  Rat agree = 0;
  for (std::size_t flip = 0; flip < (std::size_t(1) << k); ++flip) {
    Rat pr = 1;
    for (std::size_t i = 0; i < k; ++i) pr *= bit_of(flip, k, i) ? alpha[i] : Rat(1 - alpha[i]);
    if (F.value(x ^ flip) == F.value(x)) agree += pr;
  }
  return agree;
}

SparsePolynomial brs_conjunction(const std::vector<RationalApproximant>& approximants,
                                 const std::vector<BooleanFunction>& functions, DomainCap cap) {
  std::size_t k = approximants.size();
  require(k >= 1 && functions.size() == k, "need one function per approximant");
  Rat total = 0;
  std::size_t dim = 0;
  for (std::size_t i = 0; i < k; ++i) {
    if (!verify_approximant(functions[i], approximants[i]))
      throw VerificationError("approximant " + std::to_string(i + 1) + " fails its re-check");
    total += approximants[i].verified_error;
    dim += functions[i].dimension();
  }
  require(total < 1, "approximation errors must sum to less than 1");
  std::vector<SparsePolynomial> P, Q;
  std::size_t off = 0;
  for (std::size_t i = 0; i < k; ++i) {
    P.push_back(approximants[i].numerator.embed(dim, off));
    Q.push_back(approximants[i].denominator.embed(dim, off));
    off += functions[i].dimension();
  }
  bool cube = std::all_of(functions.begin(), functions.end(), [](const auto& f) { return f.is_cube(); });
  auto tidy = [&](SparsePolynomial p) { return cube ? p.reduce_pm1() : p; };
  SparsePolynomial all_q = SparsePolynomial::constant(dim, 1);
  for (const auto& q : Q) all_q = tidy(all_q * q);
  SparsePolynomial out = all_q * Rat(static_cast<long>(k) - 1);
  for (std::size_t i = 0; i < k; ++i) {
    SparsePolynomial term = P[i];
    for (std::size_t j = 0; j < k; ++j)
      if (j != i) term = tidy(term * Q[j]);
    out += term;
  }
  BooleanFunction H = compose({and_pm(k), functions}, cap);
  auto v = values_on_domain(H, out);
  for (std::size_t x = 0; x < H.size(); ++x)
    if (sgn(v[x]) != H.value(x)) throw VerificationError("BRS polynomial misses the sign at a product point");
  return out;
}

ComposedWitness compose_witness_threshold(const DualWitness& Psi, const BooleanFunction& F, const DualWitness& mu,
                                          const BooleanFunction& f, const Rat& eps) {
  require_cube(F, "F");
  require(!f.is_constant(), "inner function must be nonconstant");
  require(mu.kind == WitnessKind::Gordan, "mu must be a Gordan distribution");
  require(Psi.kind == WitnessKind::Approx, "Psi must be an approximation dual");
  if (auto c = verify_witness(mu, f); !c.ok) throw PreconditionError("mu: " + c.reason);
  if (auto c = verify_witness(Psi, F); !c.ok) throw PreconditionError("Psi: " + c.reason);
  require(Psi.degree_weights.empty(), "Psi must use plain total degree");
  require(Psi.correlation > eps, "Psi must correlate with F above eps");
  std::size_t k = F.dimension();
  auto psi = weights_by_index(Psi, F);
  auto m = weights_by_index(mu, f);
  ComposedWitness out;
  out.composed = compose({F, std::vector<BooleanFunction>(k, f)});
  Rat scale = Rat(ipow(2, static_cast<unsigned>(k)));
  std::vector<Rat> zeta(out.composed.size());
  for_each_product(std::vector<std::size_t>(k, f.size()), [&](std::size_t g, const std::vector<std::size_t>& idx) {
    std::size_t z = 0;
    Rat w = scale;
    for (std::size_t i = 0; i < k; ++i) {
      z = (z << 1) | (f.value(idx[i]) == 1 ? 1u : 0u);
      w *= m[idx[i]];
    }
    zeta[g] = w * psi[z];
  });
  int D = Psi.orthogonality_degree + 1, d = mu.orthogonality_degree + 1;
  out.claimed_orthogonality = D * d;
  out.claimed_correlation_bound = eps;
  out.zeta.kind = WitnessKind::Approx;
  out.zeta.points = out.composed.points();
  out.zeta.weights = std::move(zeta);
  out.zeta.orthogonality_degree = D * d - 1;
  for (std::size_t x = 0; x < out.composed.size(); ++x) {
    out.zeta.l1_mass += abs(out.zeta.weights[x]);
    out.zeta.correlation += out.zeta.weights[x] * out.composed.value(x);
  }
  out.l1_mass = out.zeta.l1_mass;
  out.correlation = out.zeta.correlation;
  if (auto c = verify_composed(out); !c.ok) throw VerificationError("composed witness: " + c.reason);
  return out;
}

ComposedWitness compose_witness_approx(const DualWitness& Psi, const BooleanFunction& F,
                                       const std::vector<DualWitness>& psis, const std::vector<BooleanFunction>& fs,
                                       const Rat& delta) {
  require_cube(F, "F");
  std::size_t k = F.dimension();
  require(psis.size() == k && fs.size() == k, "need one inner witness per coordinate of F");
  require(Psi.kind == WitnessKind::Approx, "Psi must be an approximation dual");
  if (auto c = verify_witness(Psi, F); !c.ok) throw PreconditionError("Psi: " + c.reason);
  require(delta > 0 && delta < 1, "delta must lie in (0,1)");
  std::vector<std::vector<Rat>> w(k);
  int vmin = -1;
  for (std::size_t i = 0; i < k; ++i) {
    if (auto c = verify_witness(psis[i], fs[i]); !c.ok) throw PreconditionError("psi_" + std::to_string(i + 1) + ": " + c.reason);
    require(psis[i].l1_mass == 1, "inner witness must have l1 mass 1");
    require(psis[i].correlation > 1 - delta, "inner witness correlation must exceed 1 - delta");
    require(psis[i].orthogonality_degree >= 0, "inner witness must be orthogonal to constants");
    require(psis[i].degree_weights.empty(), "inner witnesses must use plain total degree");
    w[i] = weights_by_index(psis[i], fs[i]);
    int v = psis[i].orthogonality_degree + 1;
    vmin = vmin < 0 ? v : std::min(vmin, v);
  }
  auto psi = weights_by_index(Psi, F);
  CombinatorialProfile prof = combinatorial_profile(F);
  ComposedWitness out;
  out.composed = compose({F, fs});
  Rat scale = Rat(ipow(2, static_cast<unsigned>(k)));
  std::vector<std::size_t> sizes;
  for (const auto& f : fs) sizes.push_back(f.size());
  std::vector<Rat> zeta(out.composed.size());
  for_each_product(sizes, [&](std::size_t g, const std::vector<std::size_t>& idx) {
    std::size_t z = 0;
    Rat v = scale;
    for (std::size_t i = 0; i < k; ++i) {
      const Rat& a = w[i][idx[i]];
      z = (z << 1) | (a >= 0 ? 1u : 0u);
      v *= abs(a);
    }
    zeta[g] = v * psi[z];
  });
  int D = Psi.orthogonality_degree + 1;
  out.claimed_orthogonality = Psi.degree_weights.empty() ? D * vmin : D;
  out.certificate_bound = Psi.correlation - 2 + 2 * rpow(Rat(1 - delta), static_cast<unsigned>(prof.certificate_complexity));
  out.bs_bound = Psi.correlation - 4 * delta * prof.block_sensitivity;
  out.claimed_correlation_bound = std::max(out.certificate_bound, out.bs_bound);
  out.strict_bound = false;
  out.zeta.kind = WitnessKind::Approx;
  out.zeta.points = out.composed.points();
  out.zeta.weights = std::move(zeta);
  out.zeta.orthogonality_degree = out.claimed_orthogonality - 1;
  for (std::size_t x = 0; x < out.composed.size(); ++x) {
    out.zeta.l1_mass += abs(out.zeta.weights[x]);
    out.zeta.correlation += out.zeta.weights[x] * out.composed.value(x);
  }
  out.l1_mass = out.zeta.l1_mass;
  out.correlation = out.zeta.correlation;
  if (auto c = verify_composed(out); !c.ok) throw VerificationError("composed witness: " + c.reason);
  return out;
}

WitnessCheck verify_composed(const ComposedWitness& w) {
  if (w.zeta.l1_mass != 1) return {false, "l1 mass is not 1"};
  if (w.zeta.orthogonality_degree != w.claimed_orthogonality - 1) return {false, "orthogonality degree mismatch"};
  auto c = verify_witness(w.zeta, w.composed);
  if (!c.ok) return c;
  if (w.zeta.l1_mass != w.l1_mass || w.zeta.correlation != w.correlation) return {false, "recorded totals differ"};
  if (w.strict_bound ? w.correlation <= w.claimed_correlation_bound : w.correlation < w.claimed_correlation_bound)
    return {false, "correlation below the claimed bound"};
  return {};
}

RobustComposition robust_compose(const SparsePolynomial& P, const BooleanFunction& F,
                                 const std::vector<SparsePolynomial>& ps, const std::vector<BooleanFunction>& fs) {
  require_cube(F, "F");
  std::size_t k = F.dimension();
  require(P.num_vars() == k, "outer polynomial arity differs from F");
  for (const auto& [e, c] : P.terms())
    for (unsigned a : e) require(a <= 1, "outer polynomial must be multilinear");
  require(ps.size() == k && fs.size() == k, "need one inner polynomial per coordinate");
  RobustComposition out;
  out.outer_error = sup_error(F, P);
  std::size_t dim = 0;
  for (const auto& f : fs) dim += f.dimension();
  std::vector<SparsePolynomial> images;
  std::size_t off = 0;
  out.inner_error = 0;
  for (std::size_t i = 0; i < k; ++i) {
    require(ps[i].num_vars() == fs[i].dimension(), "inner polynomial arity differs from its function");
    Rat di = sup_error(fs[i], ps[i]);
    out.inner_error = std::max(out.inner_error, di);
    images.push_back(ps[i].embed(dim, off) * Rat(1 / (1 + di)));
    off += fs[i].dimension();
  }
  out.phi = P.substitute(images);
  out.composed = compose({F, fs});
  if (out.composed.is_cube()) out.phi = out.phi.reduce_pm1();
  out.error = sup_error(out.composed, out.phi);
  CombinatorialProfile prof = combinatorial_profile(F);
  const Rat& d = out.inner_error;
  out.certificate_bound =
      out.outer_error + 2 - 2 * rpow(Rat(1 - d / (1 + d)), static_cast<unsigned>(prof.certificate_complexity));
  out.bs_bound = out.outer_error + 4 * d * prof.block_sensitivity / (1 + d);
  if (out.error > std::min(out.certificate_bound, out.bs_bound))
    throw VerificationError("robust composition exceeds its error bound");
  return out;
}

AndReducibility and_reducible(const BooleanFunction& F) {
  require_cube(F, "F");
  std::size_t k = F.dimension();
  require(k >= 1 && k <= 16, "AND-reducibility needs 1 <= k <= 16");
  auto AND = [](int u, int v) { return (u == -1 && v == -1) ? -1 : 1; };
  auto OR = [](int u, int v) { return (u == -1 || v == -1) ? -1 : 1; };
  static const char* names[8] = {"x_i & x_j",  "x_i & ~x_j",  "~x_i & x_j",  "~x_i & ~x_j",
                                 "x_i | x_j", "x_i | ~x_j", "~x_i | x_j", "~x_i | ~x_j"};
  auto form = [&](int f, int a, int b) {
    int u = (f & 2) ? -a : a, v = (f & 1) ? -b : b;
    return f < 4 ? AND(u, v) : OR(u, v);
  };
  AndReducibility out;
  out.reducible = true;
  std::size_t N = std::size_t(1) << k;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j) {
      std::size_t bi = std::size_t(1) << (k - 1 - i), bj = std::size_t(1) << (k - 1 - j);
      std::size_t freem = bi | bj;
      bool found = false;
      for (std::size_t base = 0; base < N && !found; ++base) {
        if (base & freem) continue;
        // table t[a][b], a,b in {+1,-1}
        for (int f = 0; f < 8 && !found; ++f) {
          bool ok = true;
          for (int a : {1, -1})
            for (int b : {1, -1}) {
              if (i == j && a != b) continue;
              std::size_t x = base | (a == 1 ? bi : 0) | (b == 1 ? bj : 0);
              if (F.value(x) != form(f, a, b)) ok = false;
            }
          if (ok) {
            PairWitness pw{i, j, std::vector<int>(k, 0), names[f]};
            for (std::size_t t = 0; t < k; ++t)
              if (t != i && t != j) pw.fixing[t] = bit_of(base, k, t) ? 1 : -1;
            out.witnesses.push_back(std::move(pw));
            found = true;
          }
        }
      }
      if (!found) {
        out.reducible = false;
        if (!out.failing_pair) out.failing_pair = std::make_pair(i, j);
      }
    }
  return out;
}

Amplification two_to_k_amplify(const BooleanFunction& f, const RationalApproximant& A2, int k, DomainCap cap) {
  require(k >= 2, "need k >= 2");
  require(A2.verified_error < Rat(1, 2), "input approximant must have error < 1/2");
  if (!verify_approximant(f, A2)) throw VerificationError("input approximant fails its re-check");
  Amplification out;
  Rat target(1, k);
  if (A2.verified_error < target) {
    out.boost_degree = 1;
    out.boosted = A2;
  } else {
    for (int kk = 1;; ++kk) {
      require(kk <= 64, "boost degree search exhausted");
      RationalApproximant b = error_boost(f, A2, kk);
      if (b.verified_error < target) {
        out.boost_degree = kk;
        out.boosted = std::move(b);
        break;
      }
    }
  }
  out.sign_rep = brs_conjunction(std::vector<RationalApproximant>(static_cast<std::size_t>(k), out.boosted),
                                 std::vector<BooleanFunction>(static_cast<std::size_t>(k), f), cap);
  out.degree = out.sign_rep.degree();
  return out;
}

namespace {

void require_not_false(const BooleanFunction& f) {
  bool all_false = std::all_of(f.values().begin(), f.values().end(), [](int v) { return v == 1; });
  require(!all_false, "functions must not be identically false (+1)");
}

}  // namespace

MainFiniteReport verify_main_finite(const BooleanFunction& f, const BooleanFunction& g, const Rat& precision) {
  require_not_false(f);
  require_not_false(g);
  MainFiniteReport rep;
  rep.d = threshold_degree(compose({and_pm(2), {f, g}})).degree;
  rep.degrees = {4 * rep.d, 2 * rep.d};
  rep.brackets.push_back(rational_error_bracket(f, 4 * rep.d, precision));
  rep.brackets.push_back(rational_error_bracket(g, 2 * rep.d, precision));
  rep.upper_sum = rep.brackets[0].upper + rep.brackets[1].upper;
  rep.holds = rep.upper_sum < 1;
  return rep;
}

MainFiniteReport verify_main_finite_multi(const std::vector<BooleanFunction>& fs, const Rat& precision) {
  require(fs.size() >= 2, "need at least two functions");
  for (const auto& f : fs) require_not_false(f);
  MainFiniteReport rep;
  rep.d = threshold_degree(compose({and_pm(fs.size()), fs})).degree;
  long D = 8L * rep.d * static_cast<long>(ceil_log2(Int(static_cast<unsigned long>(2 * fs.size()))));
  rep.upper_sum = 0;
  for (const auto& f : fs) {
    rep.degrees.push_back(static_cast<int>(D));
    rep.brackets.push_back(rational_error_bracket(f, static_cast<int>(D), precision));
    rep.upper_sum += rep.brackets.back().upper;
  }
  rep.holds = rep.upper_sum < 1;
  return rep;
}

}  // namespace signrep

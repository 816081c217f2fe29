#include "signrep/density.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <numeric>

#include "signrep/errors.hpp"
#include "signrep/lp.hpp"

namespace signrep {

namespace {

// value of f at the cube index whose bit (n-1-i) is set iff x_i = +1
std::vector<int> truth_table(const BooleanFunction& f) { return f.values(); }

Exponent mask_exponent(std::size_t n, unsigned mask) {
  Exponent e(n, 0);
  for (std::size_t i = 0; i < n; ++i) e[i] = (mask >> i) & 1u;
  return e;
}

int chi(unsigned mask, std::size_t n, std::size_t x) {
  int v = 1;
  for (std::size_t i = 0; i < n; ++i)
    if (((mask >> i) & 1u) && !((x >> (n - 1 - i)) & 1u)) v = -v;
  return v;
}

std::optional<std::vector<Rat>> solve_support(const std::vector<int>& tt, std::size_t n,
                                              const std::vector<unsigned>& masks) {
  LinearProgram lp(masks.size());
  for (std::size_t x = 0; x < tt.size(); ++x) {
    std::vector<Rat> row(masks.size());
    for (std::size_t j = 0; j < masks.size(); ++j) row[j] = tt[x] * chi(masks[j], n, x);
    lp.add_row(std::move(row), Relation::GreaterEq, Rat(1));
  }
  auto out = solve(lp);
  if (out.status != LPStatus::Feasible) return std::nullopt;
  return out.solution;
}

using Perm = std::vector<std::size_t>;

std::vector<Perm> all_perms(std::size_t n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<Perm> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// g(x) = f(x o pi): coordinate i of the argument of f is x_{pi[i]}, with input negations
std::vector<int> transform(const std::vector<int>& tt, std::size_t n, const Perm& pi, unsigned neg, int out) {
  std::vector<int> g(tt.size());
  for (std::size_t x = 0; x < tt.size(); ++x) {
    std::size_t y = 0;
    for (std::size_t i = 0; i < n; ++i) {
      bool b = (x >> (n - 1 - pi[i])) & 1u;
      if ((neg >> i) & 1u) b = !b;
      if (b) y |= std::size_t(1) << (n - 1 - i);
    }
    g[x] = out * tt[y];
  }
  return g;
}

unsigned permute_mask(unsigned mask, const Perm& pi) {
  unsigned m = 0;
  for (std::size_t i = 0; i < pi.size(); ++i)
    if ((mask >> i) & 1u) m |= 1u << pi[i];
  return m;
}

struct CanonicalForm {
  std::vector<int> table;
  Perm pi;  // table = transform(f, pi, neg, out)
};

CanonicalForm npn_canonical(const std::vector<int>& tt, std::size_t n) {
  CanonicalForm best{tt, {}};
  bool first = true;
  for (const auto& pi : all_perms(n))
    for (unsigned neg = 0; neg < (1u << n); ++neg)
      for (int out : {1, -1}) {
        auto g = transform(tt, n, pi, neg, out);
        if (first || g < best.table) {
          best = {std::move(g), pi};
          first = false;
        }
      }
  return best;
}

std::mutex cache_mu;
std::map<std::pair<std::size_t, std::vector<int>>, std::vector<unsigned>>& density_cache() {
  static std::map<std::pair<std::size_t, std::vector<int>>, std::vector<unsigned>> c;
  return c;
}

// minimum support for a truth table, searched by size with symmetry pruning
std::vector<unsigned> search_support(const std::vector<int>& tt, std::size_t n, std::size_t& lp_solves) {
  std::size_t M = std::size_t(1) << n;
  // monomials in graded order
  std::vector<unsigned> mons(M);
  std::iota(mons.begin(), mons.end(), 0u);
  std::stable_sort(mons.begin(), mons.end(), [](unsigned a, unsigned b) { return std::popcount(a) < std::popcount(b); });
  std::vector<std::size_t> rank(M);
  for (std::size_t j = 0; j < M; ++j) rank[mons[j]] = j;
  // permutations fixing f up to input negations and output sign
  std::vector<Perm> stab;
  for (const auto& pi : all_perms(n)) {
    bool ok = false;
    for (unsigned neg = 0; neg < (1u << n) && !ok; ++neg)
      for (int out : {1, -1})
        if (transform(tt, n, pi, neg, out) == tt) ok = true;
    if (ok) stab.push_back(pi);
  }
  for (std::size_t k = 1; k <= M; ++k) {
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      std::vector<unsigned> masks;
      for (auto i : idx) masks.push_back(mons[i]);
      // skip unless lexicographically least in its orbit
      bool least = true;
      for (const auto& pi : stab) {
        std::vector<std::size_t> img;
        for (unsigned m : masks) img.push_back(rank[permute_mask(m, pi)]);
        std::sort(img.begin(), img.end());
        if (img < idx) {
          least = false;
          break;
        }
      }
      if (least) {
        ++lp_solves;
        if (solve_support(tt, n, masks)) return masks;
      }
      // next combination
      std::size_t i = k;
      while (i > 0 && idx[i - 1] == M - k + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  throw VerificationError("no sign-representation over all monomials");
}

}  // namespace

BooleanFunction kp_transform(const BooleanFunction& f) {
  require(f.is_cube(), "KP transform needs a cube function");
  std::size_t n = f.dimension();
  require(3 * n <= 24, "KP transform exceeds the cube cap");
  std::vector<Point> pts = cube_domain(3 * n);
  std::vector<int> vals;
  vals.reserve(pts.size());
  for (const auto& w : pts) {
    Point a(n);
    for (std::size_t i = 0; i < n; ++i) a[i] = (w[2 * n + i] == -1) ? w[n + i] : w[i];
    vals.push_back(f.value_at(a));
  }
  return BooleanFunction(std::move(pts), std::move(vals), f.name() + "^KP");
}

std::optional<SparsePolynomial> support_sign_representation(const BooleanFunction& f,
                                                            const std::vector<Exponent>& support) {
  require(f.is_cube(), "support search needs a cube function");
  std::size_t n = f.dimension();
  std::vector<unsigned> masks;
  for (const auto& e : support) {
    require(e.size() == n, "monomial arity differs from f");
    unsigned m = 0;
    for (std::size_t i = 0; i < n; ++i) {
      require(e[i] <= 1, "support monomials must be multilinear");
      if (e[i]) m |= 1u << i;
    }
    masks.push_back(m);
  }
  auto sol = solve_support(truth_table(f), n, masks);
  if (!sol) return std::nullopt;
  SparsePolynomial p(n);
  for (std::size_t j = 0; j < masks.size(); ++j) p.add_term(mask_exponent(n, masks[j]), (*sol)[j]);
  for (std::size_t x = 0; x < f.size(); ++x)
    if (sgn(p.evaluate(f.point(x))) != f.value(x)) throw VerificationError("support representation misses a sign");
  return p;
}

DensityReport density_exact(const BooleanFunction& f) {
  require(f.is_cube(), "exact density needs a cube function");
  std::size_t n = f.dimension();
  require(n <= 4, "exact density is limited to n <= 4");
  auto tt = truth_table(f);
  CanonicalForm cf = npn_canonical(tt, n);
  DensityReport rep;
  std::vector<unsigned> canon;
  {
    std::lock_guard<std::mutex> lk(cache_mu);
    auto it = density_cache().find({n, cf.table});
    if (it != density_cache().end()) {
      canon = it->second;
      rep.method = "exact-search(cached)";
    }
  }
  if (canon.empty()) {
    canon = search_support(cf.table, n, rep.lp_solves);
    std::lock_guard<std::mutex> lk(cache_mu);
    density_cache()[{n, cf.table}] = canon;
    rep.method = "exact-search";
  }
  // canonical(x) = +-f(y) with y_i = +-x_{pi[i]}, so x_j becomes +-y_{pi^-1(j)}
  Perm inv(n);
  for (std::size_t i = 0; i < n; ++i) inv[cf.pi[i]] = i;
  for (unsigned m : canon) rep.support.push_back(mask_exponent(n, permute_mask(m, inv)));
  std::sort(rep.support.begin(), rep.support.end());
  auto w = support_sign_representation(f, rep.support);
  ++rep.lp_solves;
  if (!w) throw VerificationError("mapped support fails to sign-represent f");
  rep.witness = *w;
  rep.value = static_cast<int>(rep.support.size());
  return rep;
}

DensityLowerBound density_lower_from_kp(const BooleanFunction& f, const std::optional<ParitySubstitution>& sub) {
  require(f.is_cube(), "KP bound needs a cube function");
  DegreeReport dr = threshold_degree(f);
  DensityLowerBound out;
  out.degthr = dr.degree;
  out.bound = ipow(2, static_cast<unsigned>(dr.degree));
  out.witness = dr.dual;
  out.applies_to = f.name() + "^KP";
  if (sub) {
    BooleanFunction K = kp_transform(f);
    const BooleanFunction& H = sub->H;
    require(H.is_cube() && H.dimension() == sub->sets.size() && sub->signs.size() == sub->sets.size(),
            "substitution needs one parity per input of H");
    for (std::size_t x = 0; x < K.size(); ++x) {
      const Point& w = K.point(x);
      Point a(H.dimension());
      for (std::size_t i = 0; i < a.size(); ++i) {
        int v = sub->signs[i];
        for (std::size_t j : sub->sets[i]) {
          require(j < w.size(), "parity index out of range");
          if (w[j] < 0) v = -v;
        }
        a[i] = v;
      }
      if (H.value_at(a) != K.value(x)) throw VerificationError("substitution does not reproduce f^KP");
    }
    out.applies_to = H.name();
  }
  return out;
}

}  // namespace signrep

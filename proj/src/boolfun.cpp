#include "signrep/boolfun.hpp"

#include <algorithm>
#include <numeric>

#include "signrep/errors.hpp"

namespace signrep {

BooleanFunction::BooleanFunction(std::vector<Point> points, std::vector<int> values, std::string name)
    : name_(std::move(name)) {
  require(points.size() == values.size(), "domain and value lists differ in length");
  require(!points.empty(), "empty domain");
  dim_ = points[0].size();
  for (const auto& p : points) require(p.size() == dim_, "domain points differ in dimension");
  for (int v : values) require(v == 1 || v == -1, "values must be +1 or -1");
  bool sorted = true;
  for (std::size_t i = 1; i < points.size() && sorted; ++i)
    if (!(points[i - 1] < points[i])) sorted = false;
  if (sorted) {
    points_ = std::move(points);
    values_ = std::move(values);
    return;
  }
  std::vector<std::size_t> order(points.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return points[a] < points[b]; });
  points_.reserve(points.size());
  values_.reserve(points.size());
  for (std::size_t i : order) {
    points_.push_back(std::move(points[i]));
    values_.push_back(values[i]);
  }
  for (std::size_t i = 1; i < points_.size(); ++i)
    require(points_[i - 1] != points_[i], "domain points must be distinct");
}

std::optional<std::size_t> BooleanFunction::index_of(const Point& x) const {
  auto it = std::lower_bound(points_.begin(), points_.end(), x);
  if (it == points_.end() || *it != x) return std::nullopt;
  return static_cast<std::size_t>(it - points_.begin());
}

int BooleanFunction::value_at(const Point& x) const {
  auto i = index_of(x);
  if (!i) throw PreconditionError("point outside the domain");
  return values_[*i];
}

std::vector<Rat> BooleanFunction::coordinate_values(std::size_t i) const {
  std::vector<Rat> v;
  for (const auto& p : points_) v.push_back(p[i]);
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

bool BooleanFunction::is_cube() const {
  if (dim_ >= 63 || points_.size() != (std::size_t(1) << dim_)) return false;
  for (const auto& p : points_)
    for (const auto& c : p)
      if (c != 1 && c != -1) return false;
  return true;
}

bool BooleanFunction::is_constant() const {
  return std::all_of(values_.begin(), values_.end(), [&](int v) { return v == values_[0]; });
}

std::vector<Point> grid_domain(const std::vector<Rat>& axis, std::size_t n) {
  std::vector<Point> out;
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= axis.size();
  out.reserve(total);
  std::vector<std::size_t> d(n, 0);
  for (std::size_t g = 0; g < total; ++g) {
    Point p(n);
    std::size_t r = g;
    for (std::size_t i = n; i-- > 0;) {
      p[i] = axis[r % axis.size()];
      r /= axis.size();
    }
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<Point> cube_domain(std::size_t n) { return grid_domain({Rat(-1), Rat(1)}, n); }

namespace {

void check_cap(long double count, const DomainCap& cap) {
  if (count > static_cast<long double>(cap.max_points))
    throw ResourceError("domain would exceed the cap of " + std::to_string(cap.max_points) + " points");
}

template <class F>
BooleanFunction tabulate(std::vector<Point> dom, F&& f, std::string name) {
  std::vector<int> vals;
  vals.reserve(dom.size());
  for (const auto& p : dom) vals.push_back(f(p));
  return BooleanFunction(std::move(dom), std::move(vals), std::move(name));
}

Rat coord_sum(const Point& p) {
  Rat s = 0;
  for (const auto& c : p) s += c;
  return s;
}

std::vector<Rat> int_axis(long lo, long hi) {
  std::vector<Rat> a;
  for (long v = lo; v <= hi; ++v) a.push_back(Rat(v));
  return a;
}

long double ipow_ld(long double b, std::size_t e) {
  long double r = 1;
  for (std::size_t i = 0; i < e; ++i) r *= b;
  return r;
}

}  // namespace

BooleanFunction majority(std::size_t n) {
  return tabulate(cube_domain(n), [](const Point& p) { return coord_sum(p) > 0 ? 1 : -1; },
                  "MAJ_" + std::to_string(n));
}

BooleanFunction parity(std::size_t n) {
  return tabulate(cube_domain(n), [](const Point& p) {
    int s = 1;
    for (const auto& c : p) s *= (c > 0 ? 1 : -1);
    return s;
  }, "PARITY_" + std::to_string(n));
}

BooleanFunction and_pm(std::size_t n) {
  return tabulate(cube_domain(n), [](const Point& p) {
    return std::all_of(p.begin(), p.end(), [](const Rat& c) { return c == -1; }) ? -1 : 1;
  }, "AND_" + std::to_string(n));
}

BooleanFunction or_pm(std::size_t n) {
  return tabulate(cube_domain(n), [](const Point& p) {
    return std::any_of(p.begin(), p.end(), [](const Rat& c) { return c == -1; }) ? -1 : 1;
  }, "OR-PM_" + std::to_string(n));
}

BooleanFunction or_bits(std::size_t n) {
  return tabulate(grid_domain({Rat(0), Rat(1)}, n), [](const Point& p) {
    return std::all_of(p.begin(), p.end(), [](const Rat& c) { return c == 0; }) ? 1 : -1;
  }, "OR_" + std::to_string(n));
}

BooleanFunction sign_on_grid(long n) {
  require(n >= 1, "SIGN needs n >= 1");
  std::vector<Point> dom;
  for (long t = -n; t <= n; ++t)
    if (t != 0) dom.push_back({Rat(t)});
  return tabulate(std::move(dom), [](const Point& p) { return p[0] > 0 ? 1 : -1; }, "SIGN_" + std::to_string(n));
}

BooleanFunction make_named(const std::string& family, const std::vector<long>& params, DomainCap cap) {
  auto param = [&](std::size_t i, const char* what) {
    require(params.size() > i, family + " needs parameter " + what);
    return params[i];
  };
  auto cube_n = [&](long n) {
    require(n >= 1 && n <= 24, family + ": n out of range");
    check_cap(ipow_ld(2, static_cast<std::size_t>(n)), cap);
    return static_cast<std::size_t>(n);
  };
  if (family == "MAJ") return majority(cube_n(param(0, "n")));
  if (family == "PARITY") return parity(cube_n(param(0, "n")));
  if (family == "AND") return and_pm(cube_n(param(0, "n")));
  if (family == "OR-PM") return or_pm(cube_n(param(0, "n")));
  if (family == "ID") return make_named("DICT", {param(0, "n"), 1}, cap);
  if (family == "DICT") {
    std::size_t n = cube_n(param(0, "n"));
    long i = param(1, "i");
    require(i >= 1 && static_cast<std::size_t>(i) <= n, "DICT index out of range");
    return tabulate(cube_domain(n), [&](const Point& p) { return p[i - 1] > 0 ? 1 : -1; },
                    "x" + std::to_string(i));
  }
  if (family == "CONST") {
    std::size_t n = cube_n(param(0, "n"));
    long v = param(1, "value");
    require(v == 1 || v == -1, "CONST value must be +-1");
    return tabulate(cube_domain(n), [&](const Point&) { return static_cast<int>(v); }, "CONST");
  }
  if (family == "OR") {
    long n = param(0, "n");
    require(n >= 1 && n <= 24, "OR: n out of range");
    check_cap(ipow_ld(2, n), cap);
    return or_bits(static_cast<std::size_t>(n));
  }
  if (family == "ODD-MAX-BIT") {
    long n = param(0, "n");
    require(n >= 1 && n <= 24, "ODD-MAX-BIT: n out of range");
    check_cap(ipow_ld(2, n), cap);
    return tabulate(grid_domain({Rat(0), Rat(1)}, n), [](const Point& p) {
      Int s = 1, w = 1;
      for (std::size_t i = 0; i < p.size(); ++i) {
        w *= -2;
        if (p[i] == 1) s += w;
      }
      return s > 0 ? 1 : -1;
    }, "ODD-MAX-BIT_" + std::to_string(n));
  }
  if (family == "HALFSPACE") {
    long n = param(0, "n");
    long k = params.size() > 1 ? params[1] : n;
    require(n >= 1 && k >= 1 && n * k <= 24, "HALFSPACE: size out of range");
    check_cap(ipow_ld(2, n * k), cap);
    return tabulate(cube_domain(n * k), [&](const Point& p) {
      Int s = 1;
      for (long i = 1; i <= n; ++i)
        for (long j = 1; j <= k; ++j)
          if (p[(i - 1) * k + (j - 1)] > 0) s += ipow(2, i);
          else s -= ipow(2, i);
      return s > 0 ? 1 : -1;
    }, "HALFSPACE_" + std::to_string(n) + "x" + std::to_string(k));
  }
  if (family == "AND-OR") {
    long n = param(0, "n");
    require(n >= 1 && n * n <= 24, "AND-OR: size out of range");
    check_cap(ipow_ld(2, n * n), cap);
    return tabulate(cube_domain(n * n), [&](const Point& p) {
      for (long i = 0; i < n; ++i) {
        bool all = true;
        for (long j = 0; j < n; ++j)
          if (p[i * n + j] != -1) all = false;
        if (all) return -1;
      }
      return 1;
    }, "AND-OR_" + std::to_string(n));
  }
  if (family == "MINSKY-PAPERT") {
    long m = param(0, "m");
    long w = 4 * m * m;
    require(m >= 1 && m * w <= 24, "MINSKY-PAPERT: size out of range");
    check_cap(ipow_ld(2, m * w), cap);
    return tabulate(cube_domain(m * w), [&](const Point& p) {
      for (long i = 0; i < m; ++i) {
        bool all = true;
        for (long j = 0; j < w; ++j)
          if (p[i * w + j] != -1) all = false;
        if (all) return -1;
      }
      return 1;
    }, "MINSKY-PAPERT_" + std::to_string(m));
  }
  if (family == "HS-GRID") {
    long n = param(0, "n");
    require(n >= 1, "HS-GRID: n >= 1");
    check_cap(ipow_ld(6.0L * n + 3, n + 1), cap);
    return tabulate(grid_domain(int_axis(-(3 * n + 1), 3 * n + 1), n + 1), [](const Point& p) {
      Rat s = 1;
      for (std::size_t i = 0; i < p.size(); ++i) s += pow2(static_cast<long>(i) + 1) * p[i];
      return s > 0 ? 1 : -1;
    }, "HS-GRID_" + std::to_string(n));
  }
  if (family == "DFA-HS") {
    long n = param(0, "n");
    require(n >= 1, "DFA-HS: n >= 1");
    check_cap(ipow_ld(5, n), cap);
    return tabulate(grid_domain(int_axis(-2, 2), n), [](const Point& p) {
      Rat s = 1;
      for (std::size_t i = 0; i < p.size(); ++i) s += pow2(static_cast<long>(i) + 1) * p[i];
      return s > 0 ? 1 : -1;
    }, "DFA-HS_" + std::to_string(n));
  }
  if (family == "SIGN") return sign_on_grid(param(0, "n"));
  throw PreconditionError("unknown family: " + family);
}

BooleanFunction compose(const CompositionSpec& spec, DomainCap cap) {
  const auto& F = spec.outer;
  std::size_t k = spec.inner.size();
  require(F.is_cube() && F.dimension() == k, "outer function must live on {-1,+1}^k with k = number of inner functions");
  long double total = 1;
  for (const auto& g : spec.inner) total *= static_cast<long double>(g.size());
  check_cap(total, cap);
  std::size_t dim = 0;
  for (const auto& g : spec.inner) dim += g.dimension();
  std::vector<Point> dom;
  std::vector<int> vals;
  dom.reserve(static_cast<std::size_t>(total));
  vals.reserve(static_cast<std::size_t>(total));
  std::vector<std::size_t> idx(k, 0);
  for (std::size_t g = 0; g < static_cast<std::size_t>(total); ++g) {
    std::size_t r = g;
    for (std::size_t i = k; i-- > 0;) {
      idx[i] = r % spec.inner[i].size();
      r /= spec.inner[i].size();
    }
    Point p;
    p.reserve(dim);
    std::size_t fidx = 0;
    for (std::size_t i = 0; i < k; ++i) {
      const auto& pt = spec.inner[i].point(idx[i]);
      p.insert(p.end(), pt.begin(), pt.end());
      fidx = (fidx << 1) | (spec.inner[i].value(idx[i]) == 1 ? 1u : 0u);
    }
    dom.push_back(std::move(p));
    vals.push_back(F.value(fidx));
  }
  std::string name = F.name() + "(";
  for (std::size_t i = 0; i < k; ++i) name += (i ? "," : "") + spec.inner[i].name();
  return BooleanFunction(std::move(dom), std::move(vals), name + ")");
}

BooleanFunction negate(const BooleanFunction& f) {
  std::vector<int> v = f.values();
  for (int& x : v) x = -x;
  return BooleanFunction(f.points(), std::move(v), "not " + f.name());
}

BooleanFunction reflect(const BooleanFunction& f) {
  std::vector<Point> pts = f.points();
  for (auto& p : pts)
    for (auto& c : p) c = -c;
  return BooleanFunction(std::move(pts), f.values(), f.name() + "(-x)");
}

BooleanFunction restrict_cube(const BooleanFunction& h, const std::vector<int>& fix) {
  require(h.is_cube() && fix.size() == h.dimension(), "restriction needs a cube function and one entry per variable");
  std::vector<std::size_t> freev;
  for (std::size_t i = 0; i < fix.size(); ++i) {
    require(fix[i] == 0 || fix[i] == 1 || fix[i] == -1, "fixings must be 0 or +-1");
    if (fix[i] == 0) freev.push_back(i);
  }
  std::size_t m = freev.size();
  std::vector<Point> dom = cube_domain(m);
  std::vector<int> vals;
  std::size_t n = h.dimension();
  for (const auto& p : dom) {
    std::size_t idx = 0;
    std::size_t j = 0;
    for (std::size_t i = 0; i < n; ++i) {
      int b = fix[i] != 0 ? fix[i] : (p[j++] > 0 ? 1 : -1);
      idx = (idx << 1) | (b == 1 ? 1u : 0u);
    }
    vals.push_back(h.value(idx));
  }
  return BooleanFunction(std::move(dom), std::move(vals), h.name() + "|restricted");
}

BooleanFunction subfunction(const BooleanFunction& h, const std::vector<int>& y, const std::vector<int>& z) {
  require(h.is_cube(), "subfunction needs a cube function");
  require(y.size() == h.dimension() && z.size() == h.dimension(), "patterns must match the arity");
  std::vector<int> fix(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) {
    require((y[i] == 1 || y[i] == -1) && (z[i] == 1 || z[i] == -1), "patterns must be +-1 vectors");
    // (x AND y) OR z with -1 = true
    if (z[i] == -1) fix[i] = -1;
    else if (y[i] == 1) fix[i] = 1;
    else fix[i] = 0;
  }
  return restrict_cube(h, fix);
}

}  // namespace signrep

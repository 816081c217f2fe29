#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "signrep/rational.hpp"

namespace signrep {

using Point = std::vector<Rat>;

// Hard cap on materialized domains; raisable up to 2^24.
struct DomainCap {
  std::size_t max_points = std::size_t(1) << 20;
};

// f: X -> {-1,+1} on a finite X of rational points. -1 means true.
// Points are kept in lexicographic order.
class BooleanFunction {
 public:
  BooleanFunction() = default;
  BooleanFunction(std::vector<Point> points, std::vector<int> values, std::string name = "");

  std::size_t size() const { return points_.size(); }
  std::size_t dimension() const { return dim_; }
  const std::vector<Point>& points() const { return points_; }
  const Point& point(std::size_t i) const { return points_[i]; }
  const std::vector<int>& values() const { return values_; }
  int value(std::size_t i) const { return values_[i]; }
  const std::string& name() const { return name_; }

  std::optional<std::size_t> index_of(const Point& x) const;
  int value_at(const Point& x) const;  // throws if x is not in the domain

  // Sorted distinct values taken by coordinate i over the domain.
  std::vector<Rat> coordinate_values(std::size_t i) const;
  // True iff the domain is exactly {-1,+1}^dimension.
  bool is_cube() const;
  bool is_constant() const;

  friend bool operator==(const BooleanFunction& a, const BooleanFunction& b) {
    return a.points_ == b.points_ && a.values_ == b.values_;
  }

 private:
  std::size_t dim_ = 0;
  std::vector<Point> points_;
  std::vector<int> values_;
  std::string name_;
};

std::vector<Point> cube_domain(std::size_t n);
std::vector<Point> grid_domain(const std::vector<Rat>& axis, std::size_t n);

// Named families. Parameter conventions:
//   MAJ n | PARITY n | AND n | OR-PM n | ID n  (cube; ID is x_1)
//   CONST n v (cube, v = +-1) | DICT n i (x_i, 1-based)
//   OR n (bits, +1 iff x = 0) | ODD-MAX-BIT n (bits)
//   HALFSPACE n [k] (cube, n*k variables x_ij row-major, k defaults to n)
//   AND-OR n (cube, n^2 variables) | MINSKY-PAPERT m (cube, m * 4m^2 variables)
//   HS-GRID n ({0,+-1,..,+-(3n+1)}^(n+1)) | DFA-HS n ({0,+-1,+-2}^n)
//   SIGN n (univariate, {+-1,..,+-n})
BooleanFunction make_named(const std::string& family, const std::vector<long>& params, DomainCap cap = {});

BooleanFunction majority(std::size_t n);
BooleanFunction parity(std::size_t n);
BooleanFunction and_pm(std::size_t n);
BooleanFunction or_pm(std::size_t n);
BooleanFunction or_bits(std::size_t n);
BooleanFunction sign_on_grid(long n);

struct CompositionSpec {
  BooleanFunction outer;  // on {-1,+1}^k
  std::vector<BooleanFunction> inner;
};

BooleanFunction compose(const CompositionSpec& spec, DomainCap cap = {});
BooleanFunction negate(const BooleanFunction& f);
BooleanFunction reflect(const BooleanFunction& f);
// f(x) = h(..., (x_i AND y_i) OR z_i, ...) on the cube of free variables,
// i.e. those with y_i = -1 (true) and z_i = +1 (false).
BooleanFunction subfunction(const BooleanFunction& h, const std::vector<int>& y, const std::vector<int>& z);

// Restriction of a cube function by fixing coordinates (0 = free).
BooleanFunction restrict_cube(const BooleanFunction& h, const std::vector<int>& fix);

}  // namespace signrep

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "signrep/errors.hpp"
#include "signrep/lp.hpp"

using namespace signrep;

namespace {

// Vertex enumeration for a bounded 2-variable LP with rows a.x >= b.
std::optional<Rat> brute_max_2d(const std::vector<std::vector<Rat>>& A, const std::vector<Rat>& b,
                                const std::vector<Rat>& c) {
  std::optional<Rat> best;
  for (std::size_t i = 0; i < A.size(); ++i)
    for (std::size_t j = i + 1; j < A.size(); ++j) {
      Rat det = A[i][0] * A[j][1] - A[i][1] * A[j][0];
      if (det == 0) continue;
      Rat x = (b[i] * A[j][1] - A[i][1] * b[j]) / det;
      Rat y = (A[i][0] * b[j] - b[i] * A[j][0]) / det;
      bool ok = true;
      for (std::size_t k = 0; k < A.size() && ok; ++k) ok = A[k][0] * x + A[k][1] * y >= b[k];
      if (!ok) continue;
      Rat v = c[0] * x + c[1] * y;
      if (!best || v > *best) best = v;
    }
  return best;
}

}  // namespace

TEST_CASE("textbook maximization") {
  // max 3x + 5y, x <= 4, 2y <= 12, 3x + 2y <= 18, x, y >= 0 -> 36 at (2, 6)
  LinearProgram lp(2);
  lp.add_row({Rat(1), Rat(0)}, Relation::LessEq, Rat(4));
  lp.add_row({Rat(0), Rat(2)}, Relation::LessEq, Rat(12));
  lp.add_row({Rat(3), Rat(2)}, Relation::LessEq, Rat(18));
  lp.set_lower(0, 0);
  lp.set_lower(1, 0);
  lp.objective = {Rat(3), Rat(5)};
  lp.sense = Sense::Maximize;
  LPOutcome o = solve(lp);
  REQUIRE(o.status == LPStatus::Optimal);
  CHECK(*o.objective_value == 36);
  CHECK(o.solution == std::vector<Rat>{Rat(2), Rat(6)});
  CHECK(verify_optimal(lp, o.solution, o.duals));
}

TEST_CASE("equalities, free variables and fractional optimum") {
  // min x + y with x - y = 1/3, x + 2y >= 1, free variables
  LinearProgram lp(2);
  lp.add_row({Rat(1), Rat(-1)}, Relation::Equal, make_rat(1, 3));
  lp.add_row({Rat(1), Rat(2)}, Relation::GreaterEq, Rat(1));
  lp.objective = {Rat(1), Rat(1)};
  LPOutcome o = solve(lp);
  REQUIRE(o.status == LPStatus::Optimal);
  // y = 2/9, x = 5/9
  CHECK(o.solution == std::vector<Rat>{make_rat(5, 9), make_rat(2, 9)});
  CHECK(*o.objective_value == make_rat(7, 9));
  CHECK(verify_optimal(lp, o.solution, o.duals));
}

TEST_CASE("infeasible systems come with a Farkas certificate") {
  LinearProgram lp(2);
  lp.add_row({Rat(1), Rat(1)}, Relation::GreaterEq, Rat(3));
  lp.add_row({Rat(1), Rat(0)}, Relation::LessEq, Rat(1));
  lp.add_row({Rat(0), Rat(1)}, Relation::LessEq, Rat(1));
  LPOutcome o = solve(lp);
  REQUIRE(o.status == LPStatus::Infeasible);
  CHECK(verify_farkas(lp, o.farkas));
  // a tampered certificate is rejected
  std::vector<Rat> bad = o.farkas;
  bad[0] += 1;
  CHECK_FALSE(verify_farkas(lp, bad));
  // normalized rows: the two <= rows are negated
  auto rows = normalize(lp);
  REQUIRE(rows.size() == 3);
  CHECK(rows[1].a == std::vector<Rat>{Rat(-1), Rat(0)});
  CHECK(rows[1].b == -1);
}

TEST_CASE("unbounded and feasibility-only problems") {
  LinearProgram lp(1);
  lp.add_row({Rat(1)}, Relation::GreaterEq, Rat(0));
  lp.objective = {Rat(1)};
  lp.sense = Sense::Maximize;
  CHECK(solve(lp).status == LPStatus::Unbounded);
  LinearProgram f(2);
  f.add_row({Rat(2), Rat(3)}, Relation::Equal, Rat(7));
  LPOutcome o = solve(f);
  REQUIRE(o.status == LPStatus::Feasible);
  CHECK(verify_feasible(f, o.solution));
}

TEST_CASE("Beale's cycling example terminates under both rules") {
  // min -3/4 x4 + 20 x5 - 1/2 x6 + 6 x7 (classic cycling instance for Dantzig's rule)
  auto build = [] {
    LinearProgram lp(4);
    lp.add_row({make_rat(1, 4), Rat(-8), Rat(-1), Rat(9)}, Relation::LessEq, Rat(0));
    lp.add_row({make_rat(1, 2), Rat(-12), make_rat(-1, 2), Rat(3)}, Relation::LessEq, Rat(0));
    lp.add_row({Rat(0), Rat(0), Rat(1), Rat(0)}, Relation::LessEq, Rat(1));
    for (std::size_t j = 0; j < 4; ++j) lp.set_lower(j, 0);
    lp.objective = {make_rat(-3, 4), Rat(20), make_rat(-1, 2), Rat(6)};
    return lp;
  };
  for (bool bland : {false, true}) {
    SimplexOptions opt;
    opt.bland_only = bland;
    LPOutcome o = solve(build(), opt);
    REQUIRE(o.status == LPStatus::Optimal);
    CHECK(*o.objective_value == make_rat(-5, 4));
  }
}

TEST_CASE("pivot limit raises a resource error") {
  LinearProgram lp(3);
  lp.add_row({Rat(1), Rat(1), Rat(1)}, Relation::LessEq, Rat(10));
  lp.add_row({Rat(1), Rat(-1), Rat(2)}, Relation::GreaterEq, Rat(1));
  for (std::size_t j = 0; j < 3; ++j) lp.set_lower(j, 0);
  lp.objective = {Rat(1), Rat(2), Rat(3)};
  lp.sense = Sense::Maximize;
  SimplexOptions opt;
  opt.pivot_limit = 0;
  CHECK_THROWS_AS(solve(lp, opt), ResourceError);
}

TEST_CASE("trace output is produced on request") {
  LinearProgram lp(1);
  lp.add_row({Rat(1)}, Relation::GreaterEq, Rat(2));
  lp.objective = {Rat(1)};
  std::ostringstream os;
  SimplexOptions opt;
  opt.trace = &os;
  LPOutcome o = solve(lp, opt);
  CHECK(*o.objective_value == 2);
  CHECK_FALSE(os.str().empty());
}

TEST_CASE("random bounded 2-variable programs match vertex enumeration") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> c(-6, 6);
  int infeasible = 0;
  for (int t = 0; t < 150; ++t) {
    std::vector<std::vector<Rat>> A;
    std::vector<Rat> b;
    // box -5 <= x, y <= 5
    A.push_back({Rat(1), Rat(0)}), b.push_back(Rat(-5));
    A.push_back({Rat(-1), Rat(0)}), b.push_back(Rat(-5));
    A.push_back({Rat(0), Rat(1)}), b.push_back(Rat(-5));
    A.push_back({Rat(0), Rat(-1)}), b.push_back(Rat(-5));
    for (int r = 0; r < 4; ++r) {
      A.push_back({Rat(c(rng)), Rat(c(rng))});
      b.push_back(Rat(c(rng)));
    }
    std::vector<Rat> obj{Rat(c(rng)), Rat(c(rng))};
    LinearProgram lp(2);
    for (std::size_t r = 0; r < A.size(); ++r) lp.add_row(A[r], Relation::GreaterEq, b[r]);
    lp.objective = obj;
    lp.sense = Sense::Maximize;
    LPOutcome o = solve(lp);
    auto ref = brute_max_2d(A, b, obj);
    if (!ref) {
      ++infeasible;
      CHECK(o.status == LPStatus::Infeasible);
      CHECK(verify_farkas(lp, o.farkas));
    } else {
      REQUIRE(o.status == LPStatus::Optimal);
      CHECK(*o.objective_value == *ref);
      CHECK(verify_optimal(lp, o.solution, o.duals));
    }
  }
  CHECK(infeasible > 0);
}

#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <vector>

#include "signrep/rational.hpp"

namespace signrep {

enum class Relation { LessEq, Equal, GreaterEq };
enum class Sense { Minimize, Maximize };

// Variables are free unless given bounds. An empty objective means a pure
// feasibility problem.
struct LinearProgram {
  std::size_t num_vars = 0;
  std::vector<std::vector<Rat>> rows;
  std::vector<Relation> relations;
  std::vector<Rat> rhs;
  std::vector<Rat> objective;
  Sense sense = Sense::Minimize;
  std::vector<std::optional<Rat>> lower, upper;  // empty or one per variable

  explicit LinearProgram(std::size_t n = 0) : num_vars(n) {}
  void add_row(std::vector<Rat> a, Relation r, Rat b);
  void set_lower(std::size_t j, Rat v);
  void set_upper(std::size_t j, Rat v);
};

// Every constraint rewritten as a.x >= b or a.x = b, in this order: the
// rows (<= rows negated), then lower bounds x_j >= l_j, then upper bounds
// -x_j >= -u_j, each in variable order. Farkas multipliers and duals are
// indexed by this list.
struct NormalizedRow {
  std::vector<Rat> a;
  Rat b;
  bool equality;
};
std::vector<NormalizedRow> normalize(const LinearProgram& lp);

enum class LPStatus { Optimal, Feasible, Infeasible, Unbounded };
const char* to_string(LPStatus s);

struct LPOutcome {
  LPStatus status = LPStatus::Infeasible;
  std::vector<Rat> solution;         // Optimal / Feasible / Unbounded (a feasible point)
  std::optional<Rat> objective_value;  // Optimal, in the caller's sense
  // Infeasible: y >= 0 on inequality rows with sum y_i a_i = 0, sum y_i b_i = 1.
  std::vector<Rat> farkas;
  // Optimal: y >= 0 on inequality rows with sum y_i a_i = c_min and
  // sum y_i b_i equal to the minimum, where c_min = c (or -c when maximizing).
  std::vector<Rat> duals;
  std::size_t pivots = 0;
};

struct SimplexOptions {
  std::size_t pivot_limit = 10'000'000;
  // Consecutive degenerate pivots tolerated under the largest-coefficient
  // rule before switching to Bland's rule for the rest of the phase.
  std::size_t degenerate_switch = 32;
  bool bland_only = false;
  std::ostream* trace = nullptr;  // tableau dump after every pivot
};

// Exact simplex. Throws ResourceError when the pivot limit is reached and
// VerificationError if an internal exact re-check fails.
LPOutcome solve(const LinearProgram& lp, const SimplexOptions& opt = {});

bool verify_feasible(const LinearProgram& lp, const std::vector<Rat>& x);
bool verify_farkas(const LinearProgram& lp, const std::vector<Rat>& y);
bool verify_optimal(const LinearProgram& lp, const std::vector<Rat>& x, const std::vector<Rat>& y);

}  // namespace signrep

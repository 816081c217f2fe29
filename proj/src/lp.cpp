#include "signrep/lp.hpp"

#include <ostream>

#include "signrep/errors.hpp"

namespace signrep {

void LinearProgram::add_row(std::vector<Rat> a, Relation r, Rat b) {
  require(a.size() == num_vars, "row length differs from the variable count");
  rows.push_back(std::move(a));
  relations.push_back(r);
  rhs.push_back(std::move(b));
}

void LinearProgram::set_lower(std::size_t j, Rat v) {
  require(j < num_vars, "bound index out of range");
  if (lower.empty()) lower.resize(num_vars);
  lower[j] = std::move(v);
}

void LinearProgram::set_upper(std::size_t j, Rat v) {
  require(j < num_vars, "bound index out of range");
  if (upper.empty()) upper.resize(num_vars);
  upper[j] = std::move(v);
}

const char* to_string(LPStatus s) {
  switch (s) {
    case LPStatus::Optimal: return "optimal";
    case LPStatus::Feasible: return "feasible";
    case LPStatus::Infeasible: return "infeasible";
    case LPStatus::Unbounded: return "unbounded";
  }
  return "?";
}

std::vector<NormalizedRow> normalize(const LinearProgram& lp) {
  require(lp.rows.size() == lp.relations.size() && lp.rows.size() == lp.rhs.size(), "malformed linear program");
  require(lp.lower.empty() || lp.lower.size() == lp.num_vars, "lower bounds need one entry per variable");
  require(lp.upper.empty() || lp.upper.size() == lp.num_vars, "upper bounds need one entry per variable");
  std::vector<NormalizedRow> out;
  for (std::size_t i = 0; i < lp.rows.size(); ++i) {
    require(lp.rows[i].size() == lp.num_vars, "row length differs from the variable count");
    NormalizedRow r{lp.rows[i], lp.rhs[i], lp.relations[i] == Relation::Equal};
    if (lp.relations[i] == Relation::LessEq) {
      for (auto& v : r.a) v = -v;
      r.b = -r.b;
    }
    out.push_back(std::move(r));
  }
  for (std::size_t j = 0; j < lp.lower.size(); ++j)
    if (lp.lower[j]) {
      NormalizedRow r{std::vector<Rat>(lp.num_vars), *lp.lower[j], false};
      r.a[j] = 1;
      out.push_back(std::move(r));
    }
  for (std::size_t j = 0; j < lp.upper.size(); ++j)
    if (lp.upper[j]) {
      NormalizedRow r{std::vector<Rat>(lp.num_vars), -*lp.upper[j], false};
      r.a[j] = -1;
      out.push_back(std::move(r));
    }
  return out;
}

namespace {

// Standard form: min c.z  s.t.  A z = b, z >= 0, b >= 0, with one artificial
// per row appended after the C structural columns.
class Simplex {
 public:
  Simplex(std::vector<std::vector<Rat>> A, std::vector<Rat> b, std::size_t C, const SimplexOptions& opt,
          std::size_t& pivots)
      : R_(A.size()), C_(C), opt_(opt), pivots_(pivots) {
    W_ = C_ + R_ + 1;
    T_.resize(R_);
    for (std::size_t r = 0; r < R_; ++r) {
      T_[r].resize(W_);
      for (std::size_t j = 0; j < C_; ++j) T_[r][j] = std::move(A[r][j]);
      T_[r][C_ + r] = 1;
      T_[r][W_ - 1] = std::move(b[r]);
    }
    basis_.resize(R_);
    for (std::size_t r = 0; r < R_; ++r) basis_[r] = C_ + r;
  }

  // Phase 1. Returns the optimal sum of artificials.
  Rat phase1() {
    cost_.assign(C_ + R_, Rat(0));
    for (std::size_t r = 0; r < R_; ++r) cost_[C_ + r] = 1;
    price();
    run(C_ + R_);
    return -obj_[W_ - 1];
  }

  void drive_out_artificials() {
    for (std::size_t r = 0; r < R_; ++r) {
      if (basis_[r] < C_) continue;
      for (std::size_t j = 0; j < C_; ++j)
        if (T_[r][j] != 0) {
          pivot(r, j);
          break;
        }
    }
  }

  // Phase 2 with the given structural costs. Returns false if unbounded.
  bool phase2(const std::vector<Rat>& c) {
    cost_.assign(C_ + R_, Rat(0));
    for (std::size_t j = 0; j < C_; ++j) cost_[j] = c[j];
    price();
    return run(C_);
  }

  // y = c_B B^{-1}, read from the artificial columns.
  std::vector<Rat> duals() const {
    std::vector<Rat> y(R_);
    for (std::size_t r = 0; r < R_; ++r) y[r] = cost_[C_ + r] - obj_[C_ + r];
    return y;
  }

  std::vector<Rat> primal() const {
    std::vector<Rat> z(C_);
    for (std::size_t r = 0; r < R_; ++r)
      if (basis_[r] < C_) z[basis_[r]] = T_[r][W_ - 1];
    return z;
  }

  Rat value() const { return -obj_[W_ - 1]; }

 private:
  void price() {
    obj_.assign(W_, Rat(0));
    for (std::size_t j = 0; j < C_ + R_; ++j) obj_[j] = cost_[j];
    for (std::size_t r = 0; r < R_; ++r) {
      const Rat& cb = cost_[basis_[r]];
      if (cb == 0) continue;
      for (std::size_t j = 0; j < W_; ++j)
        if (T_[r][j] != 0) obj_[j] -= cb * T_[r][j];
    }
  }

  // Columns [0, allowed) may enter. Returns false on unboundedness.
  bool run(std::size_t allowed) {
    bool bland = opt_.bland_only;
    std::size_t streak = 0;
    for (;;) {
      std::size_t enter = W_;
      if (bland) {
        for (std::size_t j = 0; j < allowed; ++j)
          if (sgn(obj_[j]) < 0) {
            enter = j;
            break;
          }
      } else {
        for (std::size_t j = 0; j < allowed; ++j)
          if (sgn(obj_[j]) < 0 && (enter == W_ || obj_[j] < obj_[enter])) enter = j;
      }
      if (enter == W_) return true;
      std::size_t leave = R_;
      Rat best, ratio;
      for (std::size_t r = 0; r < R_; ++r) {
        if (sgn(T_[r][enter]) <= 0) continue;
        ratio = T_[r][W_ - 1] / T_[r][enter];
        if (leave == R_ || ratio < best || (ratio == best && basis_[r] < basis_[leave])) {
          leave = r;
          best = ratio;
        }
      }
      if (leave == R_) return false;
      if (best == 0) {
        if (++streak > opt_.degenerate_switch) bland = true;
      } else {
        streak = 0;
      }
      pivot(leave, enter);
    }
  }

  void pivot(std::size_t r, std::size_t c) {
    if (++pivots_ > opt_.pivot_limit)
      throw ResourceError("simplex pivot limit of " + std::to_string(opt_.pivot_limit) + " reached");
    auto& prow = T_[r];
    Rat inv = 1 / prow[c];
    std::vector<std::size_t> nz;
    for (std::size_t j = 0; j < W_; ++j)
      if (prow[j] != 0) {
        prow[j] *= inv;
        nz.push_back(j);
      }
    Rat f, tmp;
    auto eliminate = [&](std::vector<Rat>& row) {
      if (row[c] == 0) return;
      f = row[c];
      for (std::size_t j : nz) {
        mpq_mul(tmp.get_mpq_t(), f.get_mpq_t(), prow[j].get_mpq_t());
        mpq_sub(row[j].get_mpq_t(), row[j].get_mpq_t(), tmp.get_mpq_t());
      }
    };
    for (std::size_t i = 0; i < R_; ++i)
      if (i != r) eliminate(T_[i]);
    if (!obj_.empty()) eliminate(obj_);
    basis_[r] = c;
    if (opt_.trace) dump(*opt_.trace);
  }

  void dump(std::ostream& os) const {
    os << "pivot " << pivots_ << "\n";
    for (std::size_t r = 0; r < R_; ++r) {
      os << "  [" << basis_[r] << "]";
      for (const auto& v : T_[r]) os << " " << to_string(v);
      os << "\n";
    }
    os << "  obj";
    for (const auto& v : obj_) os << " " << to_string(v);
    os << "\n";
  }

  std::size_t R_, C_, W_ = 0;
  const SimplexOptions& opt_;
  std::size_t& pivots_;
  std::vector<std::vector<Rat>> T_;
  std::vector<Rat> obj_, cost_;
  std::vector<std::size_t> basis_;
};

// Columns of the transposed system: one per inequality row, two per equality.
struct Columns {
  std::vector<std::size_t> row_of;  // normalized row index
  std::vector<int> sign;            // +1 or -1
};

Columns make_columns(const std::vector<NormalizedRow>& rows) {
  Columns c;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    c.row_of.push_back(i);
    c.sign.push_back(1);
    if (rows[i].equality) {
      c.row_of.push_back(i);
      c.sign.push_back(-1);
    }
  }
  return c;
}

std::vector<Rat> fold(const Columns& cols, const std::vector<Rat>& z, std::size_t m) {
  std::vector<Rat> y(m);
  for (std::size_t k = 0; k < cols.row_of.size(); ++k)
    if (z[k] != 0) y[cols.row_of[k]] += cols.sign[k] * z[k];
  return y;
}

struct FarkasRun {
  bool certificate_found;
  std::vector<Rat> y;  // Farkas multipliers
  std::vector<Rat> x;  // feasible point otherwise
};

// { sum y_i a_i = 0, sum y_i b_i = 1, y >= 0 on inequalities }.
FarkasRun farkas_system(const std::vector<NormalizedRow>& rows, std::size_t n, const SimplexOptions& opt,
                        std::size_t& pivots) {
  Columns cols = make_columns(rows);
  std::size_t C = cols.row_of.size();
  std::vector<std::vector<Rat>> A(n + 1, std::vector<Rat>(C));
  for (std::size_t k = 0; k < C; ++k) {
    const auto& row = rows[cols.row_of[k]];
    for (std::size_t j = 0; j < n; ++j)
      if (row.a[j] != 0) A[j][k] = cols.sign[k] * row.a[j];
    A[n][k] = cols.sign[k] * row.b;
  }
  std::vector<Rat> b(n + 1);
  b[n] = 1;
  Simplex s(std::move(A), std::move(b), C, opt, pivots);
  Rat w = s.phase1();
  FarkasRun out;
  if (w == 0) {
    out.certificate_found = true;
    out.y = fold(cols, s.primal(), rows.size());
    return out;
  }
  out.certificate_found = false;
  std::vector<Rat> v = s.duals();
  Rat vs = v[n];
  if (vs <= 0) throw VerificationError("phase-one dual has a non-positive scale");
  out.x.resize(n);
  for (std::size_t j = 0; j < n; ++j) out.x[j] = -v[j] / vs;
  return out;
}

Rat dot(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
  return s;
}

}  // namespace

bool verify_feasible(const LinearProgram& lp, const std::vector<Rat>& x) {
  if (x.size() != lp.num_vars) return false;
  for (const auto& r : normalize(lp)) {
    Rat v = dot(r.a, x);
    if (r.equality ? v != r.b : v < r.b) return false;
  }
  return true;
}

bool verify_farkas(const LinearProgram& lp, const std::vector<Rat>& y) {
  auto rows = normalize(lp);
  if (y.size() != rows.size()) return false;
  std::vector<Rat> comb(lp.num_vars);
  Rat rhs = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!rows[i].equality && y[i] < 0) return false;
    if (y[i] == 0) continue;
    for (std::size_t j = 0; j < lp.num_vars; ++j) comb[j] += y[i] * rows[i].a[j];
    rhs += y[i] * rows[i].b;
  }
  for (const auto& c : comb)
    if (c != 0) return false;
  return rhs > 0;
}

bool verify_optimal(const LinearProgram& lp, const std::vector<Rat>& x, const std::vector<Rat>& y) {
  if (!verify_feasible(lp, x)) return false;
  auto rows = normalize(lp);
  if (y.size() != rows.size() || lp.objective.size() != lp.num_vars) return false;
  std::vector<Rat> c = lp.objective;
  if (lp.sense == Sense::Maximize)
    for (auto& v : c) v = -v;
  std::vector<Rat> comb(lp.num_vars);
  Rat dual_value = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!rows[i].equality && y[i] < 0) return false;
    if (y[i] == 0) continue;
    for (std::size_t j = 0; j < lp.num_vars; ++j) comb[j] += y[i] * rows[i].a[j];
    dual_value += y[i] * rows[i].b;
  }
  if (comb != c) return false;
  return dot(c, x) == dual_value;
}

LPOutcome solve(const LinearProgram& lp, const SimplexOptions& opt) {
  auto rows = normalize(lp);
  std::size_t n = lp.num_vars, m = rows.size();
  LPOutcome out;
  auto certify_infeasible = [&](const std::vector<Rat>& y) {
    out.status = LPStatus::Infeasible;
    out.farkas = y;
    if (!verify_farkas(lp, out.farkas)) throw VerificationError("Farkas certificate failed the exact re-check");
  };

  if (lp.objective.empty()) {
    FarkasRun fr = farkas_system(rows, n, opt, out.pivots);
    if (fr.certificate_found) {
      certify_infeasible(fr.y);
    } else {
      out.status = LPStatus::Feasible;
      out.solution = std::move(fr.x);
      if (!verify_feasible(lp, out.solution)) throw VerificationError("feasible point failed the exact re-check");
    }
    return out;
  }

  require(lp.objective.size() == n, "objective length differs from the variable count");
  std::vector<Rat> c = lp.objective;
  if (lp.sense == Sense::Maximize)
    for (auto& v : c) v = -v;

  // Dual: max b.y  s.t.  sum y_i a_i = c, y >= 0 on inequalities.
  Columns cols = make_columns(rows);
  std::size_t C = cols.row_of.size();
  std::vector<int> sigma(n, 1);
  std::vector<std::vector<Rat>> A(n, std::vector<Rat>(C));
  std::vector<Rat> b(n);
  for (std::size_t j = 0; j < n; ++j) {
    if (c[j] < 0) sigma[j] = -1;
    b[j] = sigma[j] * c[j];
  }
  std::vector<Rat> cost(C);
  for (std::size_t k = 0; k < C; ++k) {
    const auto& row = rows[cols.row_of[k]];
    for (std::size_t j = 0; j < n; ++j)
      if (row.a[j] != 0) A[j][k] = sigma[j] * cols.sign[k] * row.a[j];
    cost[k] = -cols.sign[k] * row.b;
  }
  Simplex s(std::move(A), std::move(b), C, opt, out.pivots);
  Rat w = s.phase1();
  if (w == 0) {
    s.drive_out_artificials();
    if (s.phase2(cost)) {
      std::vector<Rat> y = s.duals();
      out.status = LPStatus::Optimal;
      out.solution.resize(n);
      for (std::size_t j = 0; j < n; ++j) out.solution[j] = -sigma[j] * y[j];
      out.duals = fold(cols, s.primal(), m);
      Rat val = dot(c, out.solution);
      out.objective_value = lp.sense == Sense::Maximize ? Rat(-val) : val;
      if (!verify_optimal(lp, out.solution, out.duals))
        throw VerificationError("optimality certificate failed the exact re-check");
      return out;
    }
    // dual unbounded: primal infeasible
    FarkasRun fr = farkas_system(rows, n, opt, out.pivots);
    if (!fr.certificate_found) throw VerificationError("dual unbounded but primal feasible");
    certify_infeasible(fr.y);
    return out;
  }
  FarkasRun fr = farkas_system(rows, n, opt, out.pivots);
  if (fr.certificate_found) {
    certify_infeasible(fr.y);
    return out;
  }
  out.status = LPStatus::Unbounded;
  out.solution = std::move(fr.x);
  if (!verify_feasible(lp, out.solution)) throw VerificationError("feasible point failed the exact re-check");
  return out;
}

}  // namespace signrep

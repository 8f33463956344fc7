#pragma once

// Dense two-phase primal simplex for small linear programs.
//
// The solver accepts maximize/minimize objectives, <=/>=/= constraints and
// per-variable bounds (lower bound may be -inf, upper bound may be +inf).
// Internally the problem is rewritten over nonnegative variables:
//   - a variable with finite lower bound l is shifted, x = x' + l;
//   - a free variable is split into a difference of two nonnegative ones;
//   - a finite upper bound becomes an extra <= row.
// Rows and columns are equilibrated with power-of-two scale factors before
// the tableau is built, and every Optimal answer is re-verified against the
// unscaled input. Verification failure raises NumericFailure, so a wrong
// answer is never reported silently.
//
// Pivoting: Dantzig rule with smallest-index tie-breaking, switching to
// Bland's rule after 2*(rows+cols) consecutive degenerate pivots. All
// choices are index-deterministic, so identical inputs give bitwise
// identical solutions.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "robdea/errors.hpp"

namespace robdea {

enum class Relation { LessEqual, GreaterEqual, Equal };
enum class ObjectiveSense { Maximize, Minimize };
enum class LpStatus { Optimal, Infeasible, Unbounded };

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

struct LinearConstraint {
    std::vector<double> coeffs;
    Relation relation = Relation::LessEqual;
    double rhs = 0.0;
};

struct LinearProgram {
    ObjectiveSense sense = ObjectiveSense::Maximize;
    std::vector<double> objective;
    std::vector<LinearConstraint> constraints;
    std::vector<double> lower_bounds;  // default 0
    std::vector<double> upper_bounds;  // default +inf

    LinearProgram() = default;
    explicit LinearProgram(std::size_t num_vars, ObjectiveSense s = ObjectiveSense::Maximize)
        : sense(s),
          objective(num_vars, 0.0),
          lower_bounds(num_vars, 0.0),
          upper_bounds(num_vars, kInfinity) {}

    std::size_t num_variables() const { return objective.size(); }

    void add_constraint(std::vector<double> row, Relation rel, double rhs) {
        constraints.push_back(LinearConstraint{std::move(row), rel, rhs});
    }

    void set_free(std::size_t j) { lower_bounds.at(j) = -kInfinity; }

    void validate() const {
        const std::size_t n = num_variables();
        if (lower_bounds.size() != n || upper_bounds.size() != n)
            throw InvalidInput("linear program: bound vectors must match variable count");
        for (std::size_t j = 0; j < n; ++j) {
            if (std::isnan(objective[j]) || std::isinf(objective[j]))
                throw InvalidInput("linear program: objective coefficient not finite");
            if (std::isnan(lower_bounds[j]) || std::isnan(upper_bounds[j]))
                throw InvalidInput("linear program: NaN bound");
            if (lower_bounds[j] > upper_bounds[j])
                throw InvalidInput("linear program: lower bound exceeds upper bound");
            if (lower_bounds[j] == kInfinity || upper_bounds[j] == -kInfinity)
                throw InvalidInput("linear program: bound has wrong sign of infinity");
        }
        for (const LinearConstraint& c : constraints) {
            if (c.coeffs.size() != n)
                throw InvalidInput("linear program: constraint row length mismatch");
            for (double a : c.coeffs)
                if (std::isnan(a) || std::isinf(a))
                    throw InvalidInput("linear program: constraint coefficient not finite");
            if (std::isnan(c.rhs) || std::isinf(c.rhs))
                throw InvalidInput("linear program: right-hand side not finite");
        }
    }
};

struct LpSolution {
    LpStatus status = LpStatus::Infeasible;
    double objective_value = 0.0;              // meaningful iff Optimal
    std::vector<double> variable_values;       // nonempty iff Optimal
    std::size_t iterations = 0;
};

struct SimplexOptions {
    double feasibility_tol = 1e-9;
    double optimality_tol = 1e-9;
    double pivot_tol = 1e-10;
    std::size_t max_iterations = 50000;
};

namespace detail {

// Nearest power of two to 1/value, clamped to a sane range. Power-of-two
// scaling keeps the equilibration exact in binary floating point.
inline double pow2_inverse_scale(double max_abs) {
    if (max_abs <= 0.0) return 1.0;
    int exp = 0;
    std::frexp(max_abs, &exp);           // max_abs = f * 2^exp, f in [0.5, 1)
    if (exp > 512 || exp < -512) exp = std::clamp(exp, -512, 512);
    return std::ldexp(1.0, -exp + 1);    // scale into [1, 2)
}

struct StandardizedLp {
    // Rewritten problem: maximize obj . x'  subject to rows, x' >= 0.
    std::vector<std::vector<double>> rows;
    std::vector<Relation> rels;
    std::vector<double> rhs;
    std::vector<double> obj;
    std::size_t num_cols = 0;

    // Map back to the caller's variables: value(j) = plus - minus + shift.
    struct VarMap {
        std::size_t plus_col;
        std::size_t minus_col;   // == plus_col when the variable was not split
        bool split = false;
        double shift = 0.0;
    };
    std::vector<VarMap> var_map;

    std::vector<double> col_scale;  // x'_j = col_scale[j] * tableau variable
};

inline StandardizedLp standardize(const LinearProgram& lp) {
    StandardizedLp std_lp;
    const std::size_t n = lp.num_variables();
    std_lp.var_map.resize(n);

    std::size_t next_col = 0;
    for (std::size_t j = 0; j < n; ++j) {
        auto& vm = std_lp.var_map[j];
        if (lp.lower_bounds[j] == -kInfinity) {
            vm.split = true;
            vm.plus_col = next_col++;
            vm.minus_col = next_col++;
        } else {
            vm.plus_col = vm.minus_col = next_col++;
            vm.shift = lp.lower_bounds[j];
        }
    }
    std_lp.num_cols = next_col;

    auto expand_row = [&](const std::vector<double>& coeffs, double rhs) {
        std::vector<double> row(std_lp.num_cols, 0.0);
        double shifted_rhs = rhs;
        for (std::size_t j = 0; j < n; ++j) {
            const double a = coeffs[j];
            if (a == 0.0) continue;
            const auto& vm = std_lp.var_map[j];
            row[vm.plus_col] += a;
            if (vm.split)
                row[vm.minus_col] -= a;
            else
                shifted_rhs -= a * vm.shift;
        }
        return std::make_pair(std::move(row), shifted_rhs);
    };

    for (const LinearConstraint& c : lp.constraints) {
        auto [row, rhs] = expand_row(c.coeffs, c.rhs);
        std_lp.rows.push_back(std::move(row));
        std_lp.rels.push_back(c.relation);
        std_lp.rhs.push_back(rhs);
    }

    // Finite upper bounds become rows over the transformed columns.
    for (std::size_t j = 0; j < n; ++j) {
        if (lp.upper_bounds[j] == kInfinity) continue;
        const auto& vm = std_lp.var_map[j];
        std::vector<double> row(std_lp.num_cols, 0.0);
        row[vm.plus_col] = 1.0;
        double rhs = lp.upper_bounds[j];
        if (vm.split)
            row[vm.minus_col] = -1.0;
        else
            rhs -= vm.shift;
        std_lp.rows.push_back(std::move(row));
        std_lp.rels.push_back(Relation::LessEqual);
        std_lp.rhs.push_back(rhs);
    }

    std_lp.obj.assign(std_lp.num_cols, 0.0);
    const double sign = lp.sense == ObjectiveSense::Maximize ? 1.0 : -1.0;
    for (std::size_t j = 0; j < n; ++j) {
        const double c = sign * lp.objective[j];
        if (c == 0.0) continue;
        const auto& vm = std_lp.var_map[j];
        std_lp.obj[vm.plus_col] += c;
        if (vm.split) std_lp.obj[vm.minus_col] -= c;
    }

    // Equilibrate: one row pass, one column pass, powers of two only.
    const std::size_t m = std_lp.rows.size();
    for (std::size_t i = 0; i < m; ++i) {
        double max_abs = 0.0;
        for (double a : std_lp.rows[i]) max_abs = std::max(max_abs, std::fabs(a));
        const double s = pow2_inverse_scale(max_abs);
        if (s != 1.0) {
            for (double& a : std_lp.rows[i]) a *= s;
            std_lp.rhs[i] *= s;
        }
    }
    std_lp.col_scale.assign(std_lp.num_cols, 1.0);
    for (std::size_t j = 0; j < std_lp.num_cols; ++j) {
        double max_abs = 0.0;
        for (std::size_t i = 0; i < m; ++i) max_abs = std::max(max_abs, std::fabs(std_lp.rows[i][j]));
        const double s = pow2_inverse_scale(max_abs);
        if (s != 1.0) {
            for (std::size_t i = 0; i < m; ++i) std_lp.rows[i][j] *= s;
            std_lp.obj[j] *= s;
            std_lp.col_scale[j] = s;
        }
    }
    return std_lp;
}

class SimplexTableau {
public:
    SimplexTableau(const StandardizedLp& std_lp, const SimplexOptions& opts)
        : opts_(opts), num_structural_(std_lp.num_cols) {
        const std::size_t m = std_lp.rows.size();

        // Count auxiliary columns: one slack/surplus per inequality, one
        // artificial per >= or = row (after sign-normalizing rhs >= 0).
        std::vector<int> row_sign(m, 1);
        std::vector<Relation> rels(std_lp.rels);
        for (std::size_t i = 0; i < m; ++i) {
            if (std_lp.rhs[i] < 0.0) {
                row_sign[i] = -1;
                if (rels[i] == Relation::LessEqual) rels[i] = Relation::GreaterEqual;
                else if (rels[i] == Relation::GreaterEqual) rels[i] = Relation::LessEqual;
            }
        }
        std::size_t num_slack = 0, num_art = 0;
        for (std::size_t i = 0; i < m; ++i) {
            if (rels[i] != Relation::Equal) ++num_slack;
            if (rels[i] != Relation::LessEqual) ++num_art;
        }
        art_start_ = num_structural_ + num_slack;
        num_cols_ = art_start_ + num_art;
        rhs_col_ = num_cols_;

        tab_.assign(m + 1, std::vector<double>(num_cols_ + 1, 0.0));
        basis_.assign(m, 0);

        std::size_t slack_at = num_structural_;
        std::size_t art_at = art_start_;
        for (std::size_t i = 0; i < m; ++i) {
            auto& row = tab_[i];
            for (std::size_t j = 0; j < num_structural_; ++j)
                row[j] = row_sign[i] * std_lp.rows[i][j];
            row[rhs_col_] = row_sign[i] * std_lp.rhs[i];
            switch (rels[i]) {
                case Relation::LessEqual:
                    row[slack_at] = 1.0;
                    basis_[i] = slack_at++;
                    break;
                case Relation::GreaterEqual:
                    row[slack_at] = -1.0;
                    ++slack_at;
                    row[art_at] = 1.0;
                    basis_[i] = art_at++;
                    break;
                case Relation::Equal:
                    row[art_at] = 1.0;
                    basis_[i] = art_at++;
                    break;
            }
        }
    }

    // Phase 1 alone: drive the artificial sum to zero. True iff the total
    // infeasibility ends below the feasibility tolerance.
    bool run_phase1() {
        const std::size_t m = num_rows();
        if (art_start_ == num_cols_) return true;  // slack basis is feasible
        cost_scale_ = 1.0;  // phase-1 costs are unit
        // Maximize -(sum of artificials).
        auto& z = tab_[m];
        std::fill(z.begin(), z.end(), 0.0);
        for (std::size_t i = 0; i < m; ++i) {
            if (basis_[i] < art_start_) continue;
            for (std::size_t j = 0; j <= rhs_col_; ++j) z[j] -= tab_[i][j];
        }
        for (std::size_t j = art_start_; j < num_cols_; ++j) z[j] += 1.0;  // cost of artificials
        if (!iterate(num_cols_)) throw NumericFailure("simplex: phase 1 reported unbounded");
        return tab_[m][rhs_col_] >= -opts_.feasibility_tol;
    }

    // Runs both phases. Returns Optimal/Infeasible/Unbounded.
    LpStatus run(const std::vector<double>& objective) {
        const std::size_t m = num_rows();
        if (!run_phase1()) return LpStatus::Infeasible;
        pivot_out_artificials();

        // Phase 2 over structural + slack columns only.
        cost_scale_ = 1.0;
        for (double c : objective) cost_scale_ = std::max(cost_scale_, std::fabs(c));
        auto& z = tab_[m];
        std::fill(z.begin(), z.end(), 0.0);
        for (std::size_t j = 0; j < num_structural_; ++j) z[j] = -objective[j];
        for (std::size_t i = 0; i < m; ++i) {
            const std::size_t b = basis_[i];
            if (b >= num_structural_) continue;
            const double c = objective[b];
            if (c == 0.0) continue;
            for (std::size_t j = 0; j <= rhs_col_; ++j) z[j] += c * tab_[i][j];
        }
        // Basic columns must price to zero exactly.
        for (std::size_t i = 0; i < m; ++i) z[basis_[i]] = 0.0;

        if (!iterate(art_start_)) return LpStatus::Unbounded;
        return LpStatus::Optimal;
    }

    std::vector<double> extract(std::size_t num_structural) const {
        std::vector<double> x(num_structural, 0.0);
        for (std::size_t i = 0; i < num_rows(); ++i)
            if (basis_[i] < num_structural) x[basis_[i]] = tab_[i][rhs_col_];
        return x;
    }

    std::size_t iterations() const { return iterations_; }

private:
    std::size_t num_rows() const { return basis_.size(); }

    // Pivot column selection over columns [0, allowed_cols). The optimality
    // threshold is relative to the magnitude of the phase's cost vector.
    std::size_t pick_entering(std::size_t allowed_cols, bool bland) const {
        const auto& z = tab_[num_rows()];
        std::size_t best = allowed_cols;
        double best_val = -opts_.optimality_tol * cost_scale_;
        for (std::size_t j = 0; j < allowed_cols; ++j) {
            if (z[j] < best_val) {
                best = j;
                best_val = z[j];
                if (bland) break;
            }
        }
        return best;  // == allowed_cols when optimal
    }

    // Minimum-ratio row for column j; ties take the smallest basis index.
    std::size_t pick_leaving(std::size_t j) const {
        const std::size_t m = num_rows();
        std::size_t best = m;
        double best_ratio = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            const double a = tab_[i][j];
            if (a <= opts_.pivot_tol) continue;
            const double ratio = tab_[i][rhs_col_] / a;
            if (best == m || ratio < best_ratio - 1e-12 ||
                (ratio <= best_ratio + 1e-12 && basis_[i] < basis_[best])) {
                best = i;
                best_ratio = ratio;
            }
        }
        return best;  // == m when unbounded in this column
    }

    void pivot(std::size_t row, std::size_t col) {
        auto& prow = tab_[row];
        const double p = prow[col];
        if (std::fabs(p) <= opts_.pivot_tol)
            throw NumericFailure("simplex: pivot element below tolerance");
        const double inv = 1.0 / p;
        for (double& a : prow) a *= inv;
        prow[col] = 1.0;
        for (std::size_t i = 0; i <= num_rows(); ++i) {
            if (i == row) continue;
            auto& r = tab_[i];
            const double f = r[col];
            if (f == 0.0) continue;
            for (std::size_t j = 0; j <= rhs_col_; ++j) r[j] -= f * prow[j];
            r[col] = 0.0;
        }
        basis_[row] = col;
        ++iterations_;
    }

    // Returns false if an unbounded direction was detected.
    bool iterate(std::size_t allowed_cols) {
        const std::size_t bland_threshold = 2 * (num_rows() + num_cols_);
        std::size_t degenerate_streak = 0;
        while (true) {
            if (iterations_ >= opts_.max_iterations)
                throw NumericFailure("simplex: iteration limit exceeded");
            const bool bland = degenerate_streak > bland_threshold;
            const std::size_t j = pick_entering(allowed_cols, bland);
            if (j == allowed_cols) return true;  // optimal for this phase
            const std::size_t i = pick_leaving(j);
            if (i == num_rows()) {
                // No blocking row. A reduced cost at roundoff level is not
                // evidence of a real unbounded ray; retire the column.
                if (tab_[num_rows()][j] >= -1e4 * opts_.optimality_tol * cost_scale_) {
                    tab_[num_rows()][j] = 0.0;
                    continue;
                }
                return false;  // unbounded
            }
            const double step = tab_[i][rhs_col_] / tab_[i][j];
            if (step <= 1e-12) ++degenerate_streak; else degenerate_streak = 0;
            pivot(i, j);
        }
    }

    // After phase 1, drive remaining artificials out of the basis. A row in
    // which no structural/slack pivot exists is linearly dependent; its
    // artificial stays basic at level zero and the row can never be chosen
    // by a later ratio test.
    void pivot_out_artificials() {
        for (std::size_t i = 0; i < num_rows(); ++i) {
            if (basis_[i] < art_start_) continue;
            for (std::size_t j = 0; j < art_start_; ++j) {
                if (std::fabs(tab_[i][j]) > opts_.pivot_tol) {
                    pivot(i, j);
                    break;
                }
            }
        }
    }

    SimplexOptions opts_;
    std::size_t num_structural_ = 0;
    std::size_t art_start_ = 0;
    std::size_t num_cols_ = 0;
    std::size_t rhs_col_ = 0;
    std::vector<std::vector<double>> tab_;
    std::vector<std::size_t> basis_;
    std::size_t iterations_ = 0;
    double cost_scale_ = 1.0;
};

inline double evaluate_row(const std::vector<double>& coeffs, const std::vector<double>& x) {
    double s = 0.0;
    for (std::size_t j = 0; j < coeffs.size(); ++j) s += coeffs[j] * x[j];
    return s;
}

// Check an Optimal answer against the unscaled input.
inline void verify_solution(const LinearProgram& lp, const LpSolution& sol, double tol) {
    for (std::size_t j = 0; j < lp.num_variables(); ++j) {
        const double x = sol.variable_values[j];
        if (x < lp.lower_bounds[j] - tol * (1.0 + std::fabs(lp.lower_bounds[j])) ||
            x > lp.upper_bounds[j] + tol * (1.0 + std::fabs(lp.upper_bounds[j])))
            throw NumericFailure("simplex: solution violates a variable bound");
    }
    for (const LinearConstraint& c : lp.constraints) {
        double activity = 0.0, magnitude = 0.0, row_norm = 0.0;
        for (std::size_t j = 0; j < c.coeffs.size(); ++j) {
            activity += c.coeffs[j] * sol.variable_values[j];
            magnitude += std::fabs(c.coeffs[j] * sol.variable_values[j]);
            row_norm = std::max(row_norm, std::fabs(c.coeffs[j]));
        }
        // Row-norm-relative backward error; the internal feasibility gate
        // works on row-equilibrated data, so the unscaled check must admit
        // the same relative slack.
        const double slack = tol * std::max({1.0, std::fabs(c.rhs), magnitude, row_norm});
        const bool ok = (c.relation == Relation::LessEqual && activity <= c.rhs + slack) ||
                        (c.relation == Relation::GreaterEqual && activity >= c.rhs - slack) ||
                        (c.relation == Relation::Equal && std::fabs(activity - c.rhs) <= slack);
        if (!ok) throw NumericFailure("simplex: solution violates a constraint");
    }
}

}  // namespace detail

inline LpSolution solve(const LinearProgram& lp, const SimplexOptions& opts = {}) {
    lp.validate();
    LpSolution sol;

    const detail::StandardizedLp std_lp = detail::standardize(lp);
    detail::SimplexTableau tableau(std_lp, opts);
    const LpStatus status = tableau.run(std_lp.obj);
    sol.status = status;
    sol.iterations = tableau.iterations();
    if (status != LpStatus::Optimal) return sol;

    std::vector<double> w = tableau.extract(std_lp.num_cols);
    // Standard-form variables are nonnegative; basic values can drift a few
    // ulps below zero and column unscaling would amplify that.
    for (std::size_t j = 0; j < w.size(); ++j) w[j] = std::max(w[j], 0.0) * std_lp.col_scale[j];

    sol.variable_values.resize(lp.num_variables());
    for (std::size_t j = 0; j < lp.num_variables(); ++j) {
        const auto& vm = std_lp.var_map[j];
        sol.variable_values[j] =
            vm.split ? w[vm.plus_col] - w[vm.minus_col] : w[vm.plus_col] + vm.shift;
    }
    sol.objective_value = detail::evaluate_row(lp.objective, sol.variable_values);
    detail::verify_solution(lp, sol, 100 * opts.feasibility_tol);
    return sol;
}

// A bare constraint system with per-variable bounds; used by the fixed-delta
// feasibility oracles where no objective is involved.
struct ConstraintSystem {
    std::vector<LinearConstraint> constraints;
    std::vector<double> lower_bounds;
    std::vector<double> upper_bounds;

    explicit ConstraintSystem(std::size_t num_vars = 0)
        : lower_bounds(num_vars, 0.0), upper_bounds(num_vars, kInfinity) {}

    std::size_t num_variables() const { return lower_bounds.size(); }

    void add_constraint(std::vector<double> row, Relation rel, double rhs) {
        constraints.push_back(LinearConstraint{std::move(row), rel, rhs});
    }

    void set_free(std::size_t j) { lower_bounds.at(j) = -kInfinity; }
};

// Phase-1 feasibility: true iff phase 1 drives the total infeasibility below
// the feasibility tolerance. Agrees with solving a zero objective and
// checking for Optimal, but skips phase 2 and the strict re-verification;
// near a feasibility boundary the witness points can be enormous and exact
// recomputation would reject answers the tolerance semantics admit.
inline bool is_feasible(const ConstraintSystem& system, const SimplexOptions& opts = {}) {
    LinearProgram lp(system.num_variables());
    lp.constraints = system.constraints;
    lp.lower_bounds = system.lower_bounds;
    lp.upper_bounds = system.upper_bounds;
    lp.validate();
    const detail::StandardizedLp std_lp = detail::standardize(lp);
    detail::SimplexTableau tableau(std_lp, opts);
    return tableau.run_phase1();
}

inline bool is_feasible(const std::vector<LinearConstraint>& constraints, std::size_t num_vars,
                        const SimplexOptions& opts = {}) {
    ConstraintSystem system(num_vars);
    system.constraints = constraints;
    return is_feasible(system, opts);
}

}  // namespace robdea

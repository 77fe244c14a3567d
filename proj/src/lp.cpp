#include "simplexity/lp.hpp"

#include <cstddef>
#include <stdexcept>

namespace simplexity::lp {

namespace {

class Tableau {
  public:
    Tableau(const Program& p) : p_(p) {
        const int n = p.num_vars;
        if (static_cast<int>(p.objective.size()) != n)
            throw std::invalid_argument("objective length does not match num_vars");
        for (const Constraint& c : p.constraints)
            if (static_cast<int>(c.coeffs.size()) != n)
                throw std::invalid_argument("constraint length does not match num_vars");
        if (!p.nonneg.empty() && static_cast<int>(p.nonneg.size()) != n)
            throw std::invalid_argument("nonneg flags length does not match num_vars");

        // Split free variables into positive and negative parts.
        pos_col_.resize(static_cast<std::size_t>(n));
        neg_col_.resize(static_cast<std::size_t>(n), -1);
        int cols = 0;
        for (int j = 0; j < n; ++j) {
            pos_col_[static_cast<std::size_t>(j)] = cols++;
            if (p.nonneg.empty() || !p.nonneg[static_cast<std::size_t>(j)])
                neg_col_[static_cast<std::size_t>(j)] = cols++;
        }
        structural_cols_ = cols;

        const std::size_t m = p.constraints.size();
        rows_.assign(m, {});
        basis_.assign(m, -1);

        // Count slack/surplus columns, then artificials, to fix the layout:
        // [structural | slack+surplus | artificial | rhs].
        int extra = 0;
        for (const Constraint& c : p.constraints)
            if (c.rel != Relation::Equal) ++extra;
        first_artificial_ = structural_cols_ + extra;

        int next_extra = structural_cols_;
        int next_artificial = first_artificial_;
        total_cols_ = first_artificial_;  // artificials appended below

        for (std::size_t i = 0; i < m; ++i) {
            const Constraint& c = p.constraints[i];
            const bool flip = c.rhs < 0;
            Relation rel = c.rel;
            if (flip && rel == Relation::LessEq)
                rel = Relation::GreaterEq;
            else if (flip && rel == Relation::GreaterEq)
                rel = Relation::LessEq;

            std::vector<Rational>& row = rows_[i];
            row.assign(static_cast<std::size_t>(first_artificial_) + m + 1, Rational(0));
            for (int j = 0; j < n; ++j) {
                Rational a = c.coeffs[static_cast<std::size_t>(j)];
                if (flip) a = -a;
                row[static_cast<std::size_t>(pos_col_[static_cast<std::size_t>(j)])] = a;
                if (neg_col_[static_cast<std::size_t>(j)] >= 0)
                    row[static_cast<std::size_t>(neg_col_[static_cast<std::size_t>(j)])] = -a;
            }
            rhs(i) = flip ? Rational(-c.rhs) : c.rhs;

            if (rel == Relation::LessEq) {
                row[static_cast<std::size_t>(next_extra)] = 1;
                basis_[i] = next_extra++;
            } else if (rel == Relation::GreaterEq) {
                row[static_cast<std::size_t>(next_extra)] = -1;
                ++next_extra;
                row[static_cast<std::size_t>(next_artificial)] = 1;
                basis_[i] = next_artificial++;
            } else {
                row[static_cast<std::size_t>(next_artificial)] = 1;
                basis_[i] = next_artificial++;
            }
        }
        total_cols_ = next_artificial;
        for (auto& row : rows_) {
            // trim each row to [0, total_cols_) + rhs slot
            row[static_cast<std::size_t>(total_cols_)] = row[row.size() - 1];
            row.resize(static_cast<std::size_t>(total_cols_) + 1);
        }
    }

    Status run() {
        // Phase 1: minimize the sum of artificials.
        if (first_artificial_ < total_cols_) {
            std::vector<Rational> cost(static_cast<std::size_t>(total_cols_), Rational(0));
            for (int j = first_artificial_; j < total_cols_; ++j)
                cost[static_cast<std::size_t>(j)] = 1;
            install_cost(cost);
            const Status s = iterate(total_cols_);
            if (s != Status::Optimal)
                throw std::logic_error("phase-1 subproblem cannot be unbounded");
            if (objective_value_ != 0) return Status::Infeasible;
            evict_artificials();
        }

        // Phase 2: original objective over structural columns.
        std::vector<Rational> cost(static_cast<std::size_t>(total_cols_), Rational(0));
        for (int j = 0; j < p_.num_vars; ++j) {
            Rational c = p_.objective[static_cast<std::size_t>(j)];
            if (p_.maximize) c = -c;
            cost[static_cast<std::size_t>(pos_col_[static_cast<std::size_t>(j)])] = c;
            if (neg_col_[static_cast<std::size_t>(j)] >= 0)
                cost[static_cast<std::size_t>(neg_col_[static_cast<std::size_t>(j)])] = -c;
        }
        install_cost(cost);
        return iterate(first_artificial_);
    }

    std::vector<Rational> extract_solution() const {
        std::vector<Rational> std_vals(static_cast<std::size_t>(total_cols_), Rational(0));
        for (std::size_t i = 0; i < rows_.size(); ++i)
            std_vals[static_cast<std::size_t>(basis_[i])] = rows_[i][static_cast<std::size_t>(total_cols_)];
        std::vector<Rational> x(static_cast<std::size_t>(p_.num_vars));
        for (int j = 0; j < p_.num_vars; ++j) {
            Rational v = std_vals[static_cast<std::size_t>(pos_col_[static_cast<std::size_t>(j)])];
            if (neg_col_[static_cast<std::size_t>(j)] >= 0)
                v -= std_vals[static_cast<std::size_t>(neg_col_[static_cast<std::size_t>(j)])];
            x[static_cast<std::size_t>(j)] = v;
        }
        return x;
    }

  private:
    Rational& rhs(std::size_t i) { return rows_[i][rows_[i].size() - 1]; }

    void install_cost(const std::vector<Rational>& cost) {
        cost_ = cost;
        objective_value_ = 0;
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const Rational cb = cost[static_cast<std::size_t>(basis_[i])];
            if (cb == 0) continue;
            for (int j = 0; j < total_cols_; ++j)
                cost_[static_cast<std::size_t>(j)] -= cb * rows_[i][static_cast<std::size_t>(j)];
            objective_value_ += cb * rows_[i][static_cast<std::size_t>(total_cols_)];
        }
    }

    void pivot(std::size_t row, int col) {
        std::vector<Rational>& pr = rows_[row];
        const Rational pivot_val = pr[static_cast<std::size_t>(col)];
        for (auto& v : pr) v /= pivot_val;
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (i == row) continue;
            const Rational factor = rows_[i][static_cast<std::size_t>(col)];
            if (factor == 0) continue;
            for (std::size_t j = 0; j < pr.size(); ++j) rows_[i][j] -= factor * pr[j];
        }
        const Rational cfactor = cost_[static_cast<std::size_t>(col)];
        if (cfactor != 0) {
            for (int j = 0; j < total_cols_; ++j)
                cost_[static_cast<std::size_t>(j)] -= cfactor * pr[static_cast<std::size_t>(j)];
            objective_value_ += cfactor * pr[static_cast<std::size_t>(total_cols_)];
        }
        basis_[row] = col;
    }

    // Bland's rule over columns [0, allowed_cols).
    Status iterate(int allowed_cols) {
        while (true) {
            int entering = -1;
            for (int j = 0; j < allowed_cols; ++j) {
                if (cost_[static_cast<std::size_t>(j)] < 0) {
                    entering = j;
                    break;
                }
            }
            if (entering < 0) return Status::Optimal;

            std::size_t leaving = rows_.size();
            Rational best_ratio;
            for (std::size_t i = 0; i < rows_.size(); ++i) {
                const Rational& a = rows_[i][static_cast<std::size_t>(entering)];
                if (a <= 0) continue;
                Rational ratio = rows_[i][static_cast<std::size_t>(total_cols_)] / a;
                if (leaving == rows_.size() || ratio < best_ratio ||
                    (ratio == best_ratio && basis_[i] < basis_[leaving])) {
                    leaving = i;
                    best_ratio = ratio;
                }
            }
            if (leaving == rows_.size()) return Status::Unbounded;
            pivot(leaving, entering);
        }
    }

    // After a zero-optimum phase 1, force artificials out of the basis;
    // rows that cannot pivot on any real column are redundant and dropped.
    void evict_artificials() {
        for (std::size_t i = 0; i < rows_.size();) {
            if (basis_[i] < first_artificial_) {
                ++i;
                continue;
            }
            int col = -1;
            for (int j = 0; j < first_artificial_; ++j) {
                if (rows_[i][static_cast<std::size_t>(j)] != 0) {
                    col = j;
                    break;
                }
            }
            if (col >= 0) {
                pivot(i, col);
                ++i;
            } else {
                rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(i));
                basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
            }
        }
    }

    const Program& p_;
    std::vector<std::vector<Rational>> rows_;  // each row: columns + rhs
    std::vector<Rational> cost_;               // reduced costs
    Rational objective_value_;                 // of the current cost vector
    std::vector<int> basis_;
    std::vector<int> pos_col_, neg_col_;
    int structural_cols_ = 0;
    int first_artificial_ = 0;
    int total_cols_ = 0;
};

}  // namespace

Result solve(const Program& p) {
    Tableau tableau(p);
    const Status status = tableau.run();
    Result result;
    result.status = status;
    if (status != Status::Optimal) return result;
    result.x = tableau.extract_solution();
    for (int j = 0; j < p.num_vars; ++j)
        result.objective_value += p.objective[static_cast<std::size_t>(j)] * result.x[static_cast<std::size_t>(j)];
    return result;
}

}  // namespace simplexity::lp

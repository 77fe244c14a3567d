#include "simplexity/weight_lp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "simplexity/geometry.hpp"
#include "simplexity/lp.hpp"

namespace simplexity {

namespace {

int folded_value_count(int n) { return (n + 1) / 2; }

}  // namespace

LPProblem build_lp(const std::vector<ConstraintClass>& classes, int n) {
    if (n < 1) throw std::invalid_argument("dimension must be positive");
    if (classes.empty()) throw std::invalid_argument("cannot build the weight LP from an empty class list");

    LPProblem p;
    p.n = n;
    p.folded_values = folded_value_count(n);
    p.rows.reserve(classes.size());
    for (const ConstraintClass& cls : classes) {
        if (cls.volume <= 0) throw std::invalid_argument("constraint class with non-positive volume");
        if (static_cast<int>(cls.folded.size()) != n)
            throw std::invalid_argument("folded profile length does not match dimension");
        LPProblem::Row row;
        row.volume = cls.volume;
        row.folded_counts.assign(static_cast<std::size_t>(p.folded_values), 0);
        for (int d : cls.folded) {
            if (d < 1 || d > p.folded_values)
                throw std::invalid_argument("folded value out of range");
            ++row.folded_counts[static_cast<std::size_t>(d - 1)];
        }
        p.rows.push_back(std::move(row));
    }
    p.normalization.assign(static_cast<std::size_t>(p.folded_values), 0);
    for (int m = 1; m <= n; ++m) ++p.normalization[static_cast<std::size_t>(std::min(m, n + 1 - m) - 1)];
    return p;
}

LPSolution solve_lp(const LPProblem& p) {
    const int k = p.folded_values;
    lp::Program prog;
    prog.num_vars = k + 1;  // beta_1..beta_k, then g
    prog.objective.assign(static_cast<std::size_t>(k) + 1, Rational(0));
    prog.objective[static_cast<std::size_t>(k)] = 1;

    for (const LPProblem::Row& row : p.rows) {
        lp::Constraint c;
        c.coeffs.assign(static_cast<std::size_t>(k) + 1, Rational(0));
        for (int d = 0; d < k; ++d)
            c.coeffs[static_cast<std::size_t>(d)] = row.volume * row.folded_counts[static_cast<std::size_t>(d)];
        c.coeffs[static_cast<std::size_t>(k)] = -1;
        c.rel = lp::Relation::LessEq;
        c.rhs = 0;
        prog.constraints.push_back(std::move(c));
    }
    lp::Constraint norm;
    norm.coeffs.assign(static_cast<std::size_t>(k) + 1, Rational(0));
    for (int d = 0; d < k; ++d) norm.coeffs[static_cast<std::size_t>(d)] = p.normalization[static_cast<std::size_t>(d)];
    norm.rel = lp::Relation::Equal;
    norm.rhs = 1;
    prog.constraints.push_back(std::move(norm));

    const lp::Result result = lp::solve(prog);
    if (result.status != lp::Status::Optimal)
        throw std::logic_error("weight LP reported infeasible/unbounded; inputs must be corrupt");

    LPSolution sol;
    sol.g_star = result.x[static_cast<std::size_t>(k)];
    if (sol.g_star <= 0)
        throw std::logic_error("weight LP optimum must be positive for a non-empty class list");

    sol.alpha_star.n = p.n;
    sol.alpha_star.mode = WeightMode::Exact;
    sol.alpha_star.exact.reserve(static_cast<std::size_t>(p.n));
    for (int m = 1; m <= p.n; ++m)
        sol.alpha_star.exact.push_back(result.x[static_cast<std::size_t>(std::min(m, p.n + 1 - m) - 1)]);

    for (std::size_t i = 0; i < p.rows.size(); ++i) {
        Rational weighted(0);
        for (int d = 0; d < k; ++d)
            weighted += Rational(p.rows[i].folded_counts[static_cast<std::size_t>(d)]) *
                        result.x[static_cast<std::size_t>(d)];
        weighted *= p.rows[i].volume;
        if (weighted > sol.g_star)
            throw std::logic_error("LP solution violates a class constraint; solver bug");
        if (weighted == sol.g_star) sol.tight_classes.push_back(i);
    }
    if (sol.tight_classes.empty())
        throw std::logic_error("LP optimum with no tight constraint; solver bug");

    sol.bound = Rational(1) / sol.g_star;
    return sol;
}

Rational lower_bound_from_lp(const LPSolution& s) { return s.bound; }

WeightVector analytic_weights(int n) {
    if (n < 1) throw std::invalid_argument("dimension must be positive");
    WeightVector w;
    w.n = n;
    w.mode = WeightMode::Analytic;
    w.analytic.reserve(static_cast<std::size_t>(n));
    const double log_factorial = std::lgamma(static_cast<double>(n) + 1.0);
    const double c = (1.0 + log_factorial) / n;
    for (int i = 1; i <= n; ++i)
        w.analytic.push_back(c - 0.5 * std::log(static_cast<double>(i) * (n + 1 - i)));
    return w;
}

AnalyticBoundReport verify_analytic_bound(int n, const std::vector<ConstraintClass>& classes) {
    const WeightVector w = analytic_weights(n);
    AnalyticBoundReport report;
    report.n = n;
    report.threshold = std::pow(static_cast<double>(n) + 1.0, (1.0 - n) / 2.0);
    report.tolerance = 1e-9;
    report.implied_bound = std::pow(static_cast<double>(n) + 1.0, (n - 1.0) / 2.0);
    report.all_within = true;
    bool first = true;
    for (const ConstraintClass& cls : classes) {
        const double v = weighted_volume(cls.witness, std::span<const double>(w.analytic));
        if (first || v > report.max_weighted_volume) report.max_weighted_volume = v;
        first = false;
        if (v > report.threshold + report.tolerance) report.all_within = false;
    }
    return report;
}

HFunctionAnalysis h_function_analysis(int n) {
    if (n < 1) throw std::invalid_argument("dimension must be positive");
    HFunctionAnalysis analysis;
    const double log_factorial = std::lgamma(static_cast<double>(n) + 1.0);
    analysis.t_max = log_factorial;
    analysis.h_max = std::exp(log_factorial);

    // log h(t) = t + log(1 + ln n! - t), valid while the second factor is
    // positive, which holds throughout the sampled neighborhood.
    auto log_h = [log_factorial](double t) { return t + std::log(1.0 + log_factorial - t); };
    analysis.local_max_confirmed = true;
    for (double delta : {0.1, 0.01}) {
        if (!(log_h(analysis.t_max - delta) < log_factorial) ||
            !(log_h(analysis.t_max + delta) < log_factorial))
            analysis.local_max_confirmed = false;
    }
    return analysis;
}

}  // namespace simplexity

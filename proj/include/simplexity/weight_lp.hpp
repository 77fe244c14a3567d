#pragma once

#include <cstddef>
#include <vector>

#include "simplexity/enumeration.hpp"
#include "simplexity/rational.hpp"

namespace simplexity {

enum class WeightMode { Exact, Analytic };

// The symmetric weight vector alpha_1..alpha_n with sum 1 and
// alpha_m = alpha_(n+1-m). Exact entries drive the LP path; analytic
// entries (log weights) drive the floating path. The mode is explicit,
// never inferred.
struct WeightVector {
    int n = 0;
    WeightMode mode = WeightMode::Exact;
    std::vector<Rational> exact;
    std::vector<double> analytic;
};

// min g subject to one constraint per class,
//   volume * sum_d counts[d] * beta_d <= g,
// and the normalization sum_m alpha_m = 1 written over the folded
// variables beta_1..beta_ceil(n/2).
struct LPProblem {
    int n = 0;
    int folded_values = 0;  // number of beta variables
    struct Row {
        Rational volume;
        std::vector<int> folded_counts;  // multiplicity of each folded value
    };
    std::vector<Row> rows;             // one per class, class order preserved
    std::vector<int> normalization;    // multiplicity of beta_d in sum alpha
};

struct LPSolution {
    Rational g_star;
    WeightVector alpha_star;                  // exact, unfolded, length n
    std::vector<std::size_t> tight_classes;   // row indices where equality holds
    Rational bound;                           // 1 / g_star
};

LPProblem build_lp(const std::vector<ConstraintClass>& classes, int n);

// Exact optimum via the rational simplex engine. Well-formed inputs are
// always feasible and bounded (uniform weights witness feasibility), so
// any other engine outcome is an internal error.
LPSolution solve_lp(const LPProblem& p);

Rational lower_bound_from_lp(const LPSolution& s);

// alpha_i = c - (1/2) ln(i(n+1-i)) with c = (1 + ln n!)/n.
WeightVector analytic_weights(int n);

struct AnalyticBoundReport {
    int n = 0;
    double max_weighted_volume = 0.0;
    double threshold = 0.0;  // (n+1)^((1-n)/2)
    double tolerance = 0.0;
    bool all_within = false;
    double implied_bound = 0.0;  // F(n) = (n+1)^((n-1)/2)
};

// Checks V^alpha(witness) <= (n+1)^((1-n)/2) + 1e-9 for every class; a
// failure signals an implementation bug, not new mathematics.
AnalyticBoundReport verify_analytic_bound(int n, const std::vector<ConstraintClass>& classes);

struct HFunctionAnalysis {
    double t_max = 0.0;  // ln n!
    double h_max = 0.0;  // n!
    bool local_max_confirmed = false;
};

// h(t) = e^t (1 + ln n! - t) peaks at t = ln n! with value n!; the report
// also samples t_max +/- {0.1, 0.01} to confirm the maximum numerically.
HFunctionAnalysis h_function_analysis(int n);

}  // namespace simplexity

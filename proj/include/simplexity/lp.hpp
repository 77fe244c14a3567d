#pragma once

#include <vector>

#include "simplexity/rational.hpp"

namespace simplexity::lp {

enum class Relation { LessEq, GreaterEq, Equal };

struct Constraint {
    std::vector<Rational> coeffs;
    Relation rel;
    Rational rhs;
};

// A small dense linear program over exact rationals. Variables are free
// unless flagged nonneg. Defaults to minimization.
struct Program {
    int num_vars = 0;
    bool maximize = false;
    std::vector<Rational> objective;
    std::vector<Constraint> constraints;
    std::vector<bool> nonneg;  // empty means all free
};

enum class Status { Optimal, Infeasible, Unbounded };

struct Result {
    Status status;
    Rational objective_value;
    std::vector<Rational> x;
};

// Two-phase primal simplex with Bland's anti-cycling rule: entering
// variable is the lowest-index column with negative reduced cost, leaving
// variable the lowest-index basic variable among minimum-ratio ties.
// Fully deterministic, no tolerances anywhere.
Result solve(const Program& p);

}  // namespace simplexity::lp

#pragma once

#include <optional>
#include <string>
#include <vector>

namespace simplexity {

// Closed-form dissection lower bounds. Everything here is evaluated in
// long double, directly for small n and in the log domain once n! leaves
// the comfortable range, then returned as double.

// E(n) = n! / (2 (sqrt(n+1)/2)^(n+1))
double euclidean_bound(int n);

// 2 (sqrt(n+1)/2)^(n+1), the determinant bound matching E(n).
double lemma1_rho_bound(int n);

// (1/2) 6^(n/2) (n+1)^(-(n+1)/2) n!, the closed-form lower expression of
// the hyperbolic-volume bound. Deliberately not labelled H(n): it only
// bounds that quantity from below.
double smith_bound(int n);

// F(n) = (n+1)^((n-1)/2)
double asymptotic_bound(int n);

// (F(n)/E(n))^(1/n); approaches e/2 = 1.359140914... from below.
double ratio_diagnostic(int n);

struct BoundsRow {
    int n;
    double E;
    double F;
    double H_lower;
    double rho_bound;
    std::optional<long> known_dis;  // reference constants for n = 3..8
};

std::vector<BoundsRow> bounds_table(int n_max);

// CSV with header "n,E,F,H_lower,rho_bound,known_dis"; ten significant
// digits, integers without a decimal point.
std::string bounds_table_csv(const std::vector<BoundsRow>& rows);

}  // namespace simplexity

#include "simplexity/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace simplexity {

namespace {

// Bareiss elimination on an n x n matrix with entries in {-1,0,1}.
// Intermediate entries are k x k minors, so for n <= kMaxDim everything
// fits comfortably in 64 bits (Hadamard: |minor| <= k^(k/2)).
std::int64_t bareiss_det(std::int64_t* m, int n) {
    std::int64_t sign = 1;
    std::int64_t prev = 1;
    auto at = [&](int r, int c) -> std::int64_t& { return m[r * n + c]; };
    for (int k = 0; k < n; ++k) {
        int pivot_row = -1;
        for (int r = k; r < n; ++r) {
            if (at(r, k) != 0) {
                pivot_row = r;
                break;
            }
        }
        if (pivot_row < 0) return 0;
        if (pivot_row != k) {
            for (int c = k; c < n; ++c) std::swap(at(pivot_row, c), at(k, c));
            sign = -sign;
        }
        const std::int64_t pivot = at(k, k);
        for (int r = k + 1; r < n; ++r) {
            for (int c = k + 1; c < n; ++c)
                at(r, c) = (at(r, c) * pivot - at(r, k) * at(k, c)) / prev;
            at(r, k) = 0;
        }
        prev = pivot;
    }
    return sign * prev;
}

}  // namespace

std::int64_t det_from_masks(const VertexBits* verts, int n) {
    std::int64_t mat[kMaxDim * kMaxDim];
    const VertexBits base = verts[0];
    for (int i = 0; i < n; ++i) {
        const VertexBits v = verts[i + 1];
        for (int j = 1; j <= n; ++j)
            mat[i * n + (j - 1)] = coordinate(v, j, n) - coordinate(base, j, n);
    }
    return bareiss_det(mat, n);
}

std::int64_t simplex_det(const Simplex01& s) {
    // Subtracting row 0 of M(S) from the others reduces the bordered
    // (n+1)x(n+1) determinant to the n x n difference determinant.
    return det_from_masks(s.vertices().data(), s.dim());
}

Rational volume(const Simplex01& s) {
    Int det(static_cast<long>(std::llabs(simplex_det(s))));
    return make_rational(std::move(det), factorial_int(s.dim()));
}

ColumnProfile column_profile(const Simplex01& s) {
    const int n = s.dim();
    ColumnProfile counts(static_cast<std::size_t>(n), 0);
    for (VertexBits v : s.vertices())
        for (int j = 1; j <= n; ++j) counts[static_cast<std::size_t>(j - 1)] += coordinate(v, j, n);
    return counts;
}

FoldedProfile fold_profile(const ColumnProfile& p, int n) {
    FoldedProfile folded;
    folded.reserve(p.size());
    for (int ij : p) {
        if (ij <= 0 || ij >= n + 1)
            throw std::invalid_argument("column count " + std::to_string(ij) +
                                        " outside 1.." + std::to_string(n) +
                                        "; profile comes from a degenerate simplex");
        folded.push_back(std::min(ij, n + 1 - ij));
    }
    std::sort(folded.begin(), folded.end());
    return folded;
}

Rational weighted_volume(const Simplex01& s, std::span<const Rational> alpha) {
    if (static_cast<int>(alpha.size()) != s.dim())
        throw std::invalid_argument("weight vector length does not match simplex dimension");
    const ColumnProfile profile = column_profile(s);
    Rational weight_sum(0);
    for (int ij : profile) weight_sum += alpha[static_cast<std::size_t>(ij - 1)];
    return volume(s) * weight_sum;
}

double weighted_volume(const Simplex01& s, std::span<const double> alpha) {
    if (static_cast<int>(alpha.size()) != s.dim())
        throw std::invalid_argument("weight vector length does not match simplex dimension");
    const ColumnProfile profile = column_profile(s);
    double weight_sum = 0.0;
    for (int ij : profile) weight_sum += alpha[static_cast<std::size_t>(ij - 1)];
    return volume(s).get_d() * weight_sum;
}

Lemma5Report lemma5_check(const Simplex01& s) {
    const int n = s.dim();
    const std::int64_t det = simplex_det(s);
    const ColumnProfile profile = column_profile(s);

    Int lhs_num(static_cast<long>(det));
    lhs_num *= lhs_num;

    Int rhs_num(1);
    for (int ij : profile) {
        rhs_num *= ij;
        rhs_num *= (n + 1 - ij);
    }
    Lemma5Report report;
    report.lhs = Rational(std::move(lhs_num));
    report.rhs = make_rational(std::move(rhs_num), pow_int(Int(n + 1), static_cast<unsigned long>(n - 1)));
    report.slack = report.rhs - report.lhs;
    report.holds = report.slack >= 0;
    return report;
}

}  // namespace simplexity

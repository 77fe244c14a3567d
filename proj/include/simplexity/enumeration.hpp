#pragma once

#include <cstdint>
#include <vector>

#include "simplexity/geometry.hpp"
#include "simplexity/rational.hpp"
#include "simplexity/simplex.hpp"

namespace simplexity {

// One LP constraint: every 0/1-simplex sharing this exact volume and
// folded column profile contributes the same weighted-volume functional.
struct ConstraintClass {
    Rational volume;       // > 0
    FoldedProfile folded;  // sorted, length n
    std::uint64_t count;   // simplices in the class
    Simplex01 witness;     // lexicographically first member encountered
};

struct EnumerationSummary {
    int n = 0;
    std::uint64_t total_subsets = 0;
    std::uint64_t degenerate = 0;
    std::uint64_t nondegenerate = 0;
    std::vector<ConstraintClass> classes;  // sorted: volume desc, folded lex asc
    std::int64_t rho = 0;                  // max |det M(S)|
    Rational max_volume;                   // rho / n!
};

inline constexpr int kEnumerationMaxDim = 6;

// Scans every (n+1)-subset of the 2^n cube vertices exactly once, in
// lexicographic order of sorted vertex masks, and aggregates the
// non-degenerate simplices into constraint classes. The scan partitions
// by smallest vertex and merges per-partition results in fixed order, so
// the output is identical for every thread_budget (<= 0 picks the
// hardware concurrency). n = 6 walks C(64,7) ~ 6.2e8 subsets and must be
// acknowledged with allow_long_running.
EnumerationSummary enumerate_classes(int n, int thread_budget = 0, bool allow_long_running = false);

// Maximal |det M(S)| over 0/1-simplices; equals the maximal determinant
// of an n x n 0/1 matrix.
std::int64_t rho(int n, int thread_budget = 0, bool allow_long_running = false);

// n! / rho(n), the Euclidean dissection bound, as an exact rational.
Rational euclidean_lower_bound_exact(int n, int thread_budget = 0, bool allow_long_running = false);
Rational euclidean_lower_bound_exact(int n, std::int64_t rho_value);

// Single-threaded walk over all (n+1)-subsets in lexicographic order;
// calls f(verts, det) for every subset, degenerate ones included. Used by
// streamed exhaustive checks.
template <typename F>
void scan_simplices(int n, F&& f) {
    const int k = n + 1;
    const VertexBits total = VertexBits{1} << n;
    std::vector<VertexBits> c(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) c[static_cast<std::size_t>(i)] = static_cast<VertexBits>(i);
    while (true) {
        f(static_cast<const VertexBits*>(c.data()), det_from_masks(c.data(), n));
        int i = k - 1;
        while (i >= 0 && c[static_cast<std::size_t>(i)] == total - static_cast<VertexBits>(k - i)) --i;
        if (i < 0) break;
        ++c[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
    }
}

}  // namespace simplexity

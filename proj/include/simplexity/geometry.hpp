#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "simplexity/rational.hpp"
#include "simplexity/simplex.hpp"

namespace simplexity {

// counts[j-1] = i_j = number of vertices whose j-th coordinate is 1.
using ColumnProfile = std::vector<int>;

// Sorted multiset of min(i_j, n+1-i_j); the invariant of a simplex under
// coordinate permutations and 0/1 reflections.
using FoldedProfile = std::vector<int>;

// Signed determinant of the (n+1)x(n+1) matrix whose rows are (1, v_i),
// by fraction-free integer elimination. Zero iff the simplex is degenerate.
std::int64_t simplex_det(const Simplex01& s);

// Fraction-free determinant of the n x n difference matrix of an
// (n+1)-vertex set given as masks. Shared by the enumerator's hot loop.
std::int64_t det_from_masks(const VertexBits* verts, int n);

// |det M(S)| / n!
Rational volume(const Simplex01& s);

ColumnProfile column_profile(const Simplex01& s);

// Rejects profiles containing 0 or n+1 (degenerate simplices have no
// folded profile).
FoldedProfile fold_profile(const ColumnProfile& p, int n);

// V^alpha(S) = volume(S) * sum_j alpha[i_j]. The exact overload is the LP
// path; the double overload is the analytic-weights path.
Rational weighted_volume(const Simplex01& s, std::span<const Rational> alpha);
double weighted_volume(const Simplex01& s, std::span<const double> alpha);

struct Lemma5Report {
    bool holds;
    Rational lhs;    // (det M)^2
    Rational rhs;    // (n+1)^(1-n) * prod i_j * prod (n+1-i_j)
    Rational slack;  // rhs - lhs
};

// Exact check of (det M)^2 <= (n+1)^(1-n) prod i_j prod (n+1-i_j).
Lemma5Report lemma5_check(const Simplex01& s);

}  // namespace simplexity

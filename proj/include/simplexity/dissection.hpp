#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "simplexity/rational.hpp"
#include "simplexity/simplex.hpp"

namespace simplexity {

// A claimed dissection of the unit n-cube. The axis is the prismoid
// direction (1-based coordinate index) used by default for the slice
// invariants; every axis works for the cube.
struct Dissection {
    int n = 0;
    int axis = 1;
    std::vector<Simplex01> simplices;
};

// V(i) = total volume of simplices with exactly i vertices in the
// hyperplane x_axis = 0, for i = 1..n.
struct ClassVolumeVector {
    int axis = 1;
    std::vector<Rational> V;
};

// c_i = n * C(n-1, i-1) * V(i).
struct BernsteinCoefficients {
    int axis = 1;
    std::vector<Rational> c;
};

struct OverlapWitness {
    std::size_t first = 0;
    std::size_t second = 0;
    std::vector<Rational> point;  // interior to both simplices
};

// V_{k,m} = total volume of simplices whose column k holds exactly m ones;
// sums[k-1][m-1]. For a genuine cube dissection every entry is 1/n.
struct PropositionTable {
    std::vector<std::vector<Rational>> sums;
    bool all_equal = false;
};

struct VerificationReport {
    bool partition_ok = false;
    Rational volume_sum;
    std::optional<OverlapWitness> overlap;
    std::vector<ClassVolumeVector> class_volumes;  // one per axis 1..n
    bool class_volumes_ok = false;                 // every V(i) == 1/n
    PropositionTable proposition;
    bool proposition_ok = false;
};

// Validates and assembles a dissection: consistent dimensions, axis in
// range, no degenerate simplex (reported with its index).
Dissection make_dissection(int n, int axis, std::vector<Simplex01> simplices);

// Exact interior-intersection test between two non-degenerate simplices:
// maximizes the margin s with all barycentric coordinates of a common
// point >= s for both simplices. Interiors meet iff the optimum is
// positive, in which case an interior point is returned.
std::optional<std::vector<Rational>> interior_intersection(const Simplex01& a,
                                                           const Simplex01& b);

// Full partition check plus the slice invariants. thread_budget <= 0
// means use the hardware default; the overlap scan parallelizes over
// simplex pairs and always reports the lexicographically first pair.
VerificationReport verify_partition(const Dissection& d, int thread_budget = 0);

ClassVolumeVector class_volumes(const Dissection& d, int axis);

BernsteinCoefficients bernstein_coefficients(const Dissection& d, int axis);

// sum_i c_i t^(n-i) (1-t)^(i-1) evaluated exactly; 1 for the cube at
// every t. Convention 0^0 = 1 covers the endpoints. Rejects t outside
// [0,1].
Rational section_polynomial_eval(const Dissection& d, int axis, const Rational& t);

PropositionTable check_proposition_vkm(const Dissection& d);

// Determinant of the (m+1)x(m+1) Bernstein evaluation matrix at m+1
// equally spaced rationals in [0,1], and the independence predicate it
// supports.
Rational bernstein_evaluation_det(int m);
bool bernstein_independence_check(int m);

}  // namespace simplexity

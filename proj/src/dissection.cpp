#include "simplexity/dissection.hpp"

#include <atomic>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>

#include "simplexity/geometry.hpp"
#include "simplexity/lp.hpp"

namespace simplexity {

namespace {

int resolve_threads(int budget) {
    if (budget > 0) return budget;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

Rational rational_pow(const Rational& base, int e) {
    if (e < 0) throw std::invalid_argument("negative exponent");
    if (e == 0) return Rational(1);  // covers 0^0 = 1
    Rational r = base;
    for (int i = 1; i < e; ++i) r *= base;
    return r;
}

// Exact determinant by rational Gaussian elimination with row pivoting on
// the first nonzero entry.
Rational rational_det(std::vector<std::vector<Rational>> a) {
    const std::size_t n = a.size();
    Rational det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col] == 0) ++pivot;
        if (pivot == n) return Rational(0);
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            det = -det;
        }
        det *= a[col][col];
        for (std::size_t row = col + 1; row < n; ++row) {
            if (a[row][col] == 0) continue;
            const Rational factor = a[row][col] / a[col][col];
            for (std::size_t j = col; j < n; ++j) a[row][j] -= factor * a[col][j];
        }
    }
    return det;
}

}  // namespace

Dissection make_dissection(int n, int axis, std::vector<Simplex01> simplices) {
    if (n < 1 || n > kMaxDim) throw std::invalid_argument("dimension out of range");
    if (axis < 1 || axis > n) throw std::invalid_argument("axis out of range");
    if (simplices.empty()) throw std::invalid_argument("dissection contains no simplices");
    for (std::size_t i = 0; i < simplices.size(); ++i) {
        if (simplices[i].dim() != n)
            throw std::invalid_argument("simplex " + std::to_string(i) +
                                        " has dimension " + std::to_string(simplices[i].dim()) +
                                        ", expected " + std::to_string(n));
        if (simplex_det(simplices[i]) == 0)
            throw std::invalid_argument("simplex " + std::to_string(i) + " is degenerate");
    }
    return Dissection{n, axis, std::move(simplices)};
}

std::optional<std::vector<Rational>> interior_intersection(const Simplex01& a,
                                                           const Simplex01& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("simplex dimension mismatch");
    const int n = a.dim();
    const int verts = n + 1;

    // Variables: barycentric lambda_0..lambda_n of the common point in a,
    // mu_0..mu_n in b, and the margin s. Maximize s subject to both
    // weighted vertex sums describing the same point. Every variable is
    // free; the normalization rows bound s from above by 1/(n+1).
    lp::Program prog;
    prog.num_vars = 2 * verts + 1;
    prog.maximize = true;
    const int s_var = 2 * verts;
    prog.objective.assign(static_cast<std::size_t>(prog.num_vars), Rational(0));
    prog.objective[static_cast<std::size_t>(s_var)] = 1;

    auto zero_row = [&] {
        lp::Constraint c;
        c.coeffs.assign(static_cast<std::size_t>(prog.num_vars), Rational(0));
        c.rhs = 0;
        return c;
    };

    lp::Constraint norm_a = zero_row();
    lp::Constraint norm_b = zero_row();
    for (int i = 0; i < verts; ++i) {
        norm_a.coeffs[static_cast<std::size_t>(i)] = 1;
        norm_b.coeffs[static_cast<std::size_t>(verts + i)] = 1;
    }
    norm_a.rel = norm_b.rel = lp::Relation::Equal;
    norm_a.rhs = norm_b.rhs = 1;
    prog.constraints.push_back(std::move(norm_a));
    prog.constraints.push_back(std::move(norm_b));

    for (int j = 1; j <= n; ++j) {
        lp::Constraint match = zero_row();
        for (int i = 0; i < verts; ++i) {
            match.coeffs[static_cast<std::size_t>(i)] = coordinate(a.vertices()[static_cast<std::size_t>(i)], j, n);
            match.coeffs[static_cast<std::size_t>(verts + i)] =
                -coordinate(b.vertices()[static_cast<std::size_t>(i)], j, n);
        }
        match.rel = lp::Relation::Equal;
        prog.constraints.push_back(std::move(match));
    }

    for (int v = 0; v < 2 * verts; ++v) {
        lp::Constraint margin = zero_row();
        margin.coeffs[static_cast<std::size_t>(v)] = 1;
        margin.coeffs[static_cast<std::size_t>(s_var)] = -1;
        margin.rel = lp::Relation::GreaterEq;
        prog.constraints.push_back(std::move(margin));
    }

    const lp::Result result = lp::solve(prog);
    if (result.status != lp::Status::Optimal)
        throw std::logic_error("margin LP must be feasible and bounded for full-dimensional simplices");
    if (result.objective_value <= 0) return std::nullopt;

    std::vector<Rational> point(static_cast<std::size_t>(n), Rational(0));
    for (int j = 1; j <= n; ++j) {
        Rational x(0);
        for (int i = 0; i < verts; ++i)
            if (coordinate(a.vertices()[static_cast<std::size_t>(i)], j, n))
                x += result.x[static_cast<std::size_t>(i)];
        point[static_cast<std::size_t>(j - 1)] = x;
    }
    return point;
}

VerificationReport verify_partition(const Dissection& d, int thread_budget) {
    VerificationReport report;

    report.volume_sum = 0;
    for (const Simplex01& s : d.simplices) report.volume_sum += volume(s);

    const std::size_t count = d.simplices.size();
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    pairs.reserve(count * (count - 1) / 2);
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = i + 1; j < count; ++j) pairs.emplace_back(i, j);

    std::vector<std::optional<std::vector<Rational>>> hits(pairs.size());
    int workers = resolve_threads(thread_budget);
    if (pairs.size() < static_cast<std::size_t>(workers)) workers = static_cast<int>(pairs.size());
    if (workers <= 1 || pairs.size() <= 1) {
        for (std::size_t p = 0; p < pairs.size(); ++p)
            hits[p] = interior_intersection(d.simplices[pairs[p].first], d.simplices[pairs[p].second]);
    } else {
        std::atomic<std::size_t> next{0};
        auto run = [&] {
            for (;;) {
                const std::size_t p = next.fetch_add(1);
                if (p >= pairs.size()) return;
                hits[p] = interior_intersection(d.simplices[pairs[p].first],
                                                d.simplices[pairs[p].second]);
            }
        };
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) pool.emplace_back(run);
        for (std::thread& t : pool) t.join();
    }
    for (std::size_t p = 0; p < pairs.size(); ++p) {
        if (hits[p]) {
            report.overlap = OverlapWitness{pairs[p].first, pairs[p].second, std::move(*hits[p])};
            break;
        }
    }

    report.partition_ok = report.volume_sum == 1 && !report.overlap;

    const Rational share = make_rational(1, d.n);
    report.class_volumes_ok = true;
    report.class_volumes.reserve(static_cast<std::size_t>(d.n));
    for (int axis = 1; axis <= d.n; ++axis) {
        report.class_volumes.push_back(class_volumes(d, axis));
        for (const Rational& v : report.class_volumes.back().V)
            if (v != share) report.class_volumes_ok = false;
    }

    report.proposition = check_proposition_vkm(d);
    report.proposition_ok = report.proposition.all_equal;
    return report;
}

ClassVolumeVector class_volumes(const Dissection& d, int axis) {
    if (axis < 1 || axis > d.n) throw std::invalid_argument("axis out of range");
    ClassVolumeVector cv;
    cv.axis = axis;
    cv.V.assign(static_cast<std::size_t>(d.n), Rational(0));
    for (const Simplex01& s : d.simplices) {
        int zeros = 0;
        for (VertexBits v : s.vertices())
            if (coordinate(v, axis, d.n) == 0) ++zeros;
        // 1 <= zeros <= n for a non-degenerate simplex
        cv.V[static_cast<std::size_t>(zeros - 1)] += volume(s);
    }
    return cv;
}

BernsteinCoefficients bernstein_coefficients(const Dissection& d, int axis) {
    const ClassVolumeVector cv = class_volumes(d, axis);
    BernsteinCoefficients bc;
    bc.axis = axis;
    bc.c.reserve(static_cast<std::size_t>(d.n));
    for (int i = 1; i <= d.n; ++i)
        bc.c.push_back(Rational(d.n) * Rational(binomial_int(d.n - 1, i - 1)) *
                       cv.V[static_cast<std::size_t>(i - 1)]);
    return bc;
}

Rational section_polynomial_eval(const Dissection& d, int axis, const Rational& t) {
    if (t < 0 || t > 1) throw std::invalid_argument("t outside [0,1]");
    const BernsteinCoefficients bc = bernstein_coefficients(d, axis);
    const Rational one_minus_t = Rational(1) - t;
    Rational total(0);
    for (int i = 1; i <= d.n; ++i)
        total += bc.c[static_cast<std::size_t>(i - 1)] * rational_pow(t, d.n - i) *
                 rational_pow(one_minus_t, i - 1);
    return total;
}

PropositionTable check_proposition_vkm(const Dissection& d) {
    PropositionTable table;
    table.sums.assign(static_cast<std::size_t>(d.n),
                      std::vector<Rational>(static_cast<std::size_t>(d.n), Rational(0)));
    for (const Simplex01& s : d.simplices) {
        const Rational vol = volume(s);
        const ColumnProfile profile = column_profile(s);
        for (int k = 1; k <= d.n; ++k) {
            const int m = profile[static_cast<std::size_t>(k - 1)];
            table.sums[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(m - 1)] += vol;
        }
    }
    const Rational share = make_rational(1, d.n);
    table.all_equal = true;
    for (const auto& row : table.sums)
        for (const Rational& v : row)
            if (v != share) table.all_equal = false;
    return table;
}

Rational bernstein_evaluation_det(int m) {
    if (m < 0) throw std::invalid_argument("negative Bernstein degree");
    const std::size_t size = static_cast<std::size_t>(m) + 1;
    std::vector<std::vector<Rational>> a(size, std::vector<Rational>(size));
    for (std::size_t r = 0; r < size; ++r) {
        const Rational t = m == 0 ? Rational(0) : make_rational(static_cast<long>(r), m);
        const Rational one_minus_t = Rational(1) - t;
        for (std::size_t i = 0; i < size; ++i)
            a[r][i] = rational_pow(t, static_cast<int>(i)) *
                      rational_pow(one_minus_t, m - static_cast<int>(i));
    }
    return rational_det(std::move(a));
}

bool bernstein_independence_check(int m) { return bernstein_evaluation_det(m) != 0; }

}  // namespace simplexity

// Acceptance suite: one line per criterion, PASS/FAIL/SKIP, exit 0 iff no
// criterion failed. Runs the real CLI binary for the end-to-end criterion
// and stays in-process everywhere else. All tolerances are pinned here as
// named constants; everything not named here is compared exactly.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "simplexity/bounds.hpp"
#include "simplexity/dissection.hpp"
#include "simplexity/enumeration.hpp"
#include "simplexity/geometry.hpp"
#include "simplexity/io.hpp"
#include "simplexity/lp.hpp"
#include "simplexity/rational.hpp"
#include "simplexity/simplex.hpp"
#include "simplexity/weight_lp.hpp"

using namespace simplexity;

namespace {

// Pinned tolerances and budgets. Exact-arithmetic criteria use none.
constexpr double kAnalyticTolerance = 1e-9;    // criterion 6 slack
constexpr double kIdentityRelTol = 1e-9;       // criterion 7 F/E identity
constexpr double kRatioWindow = 0.02;          // criterion 7 distance to e/2
constexpr double kEOverTwo = 1.359140914;      // criterion 7 limit
constexpr double kEnumerateBudgetSec = 600.0;  // criterion 1 wall clock
constexpr double kLpBudgetSec = 60.0;          // criterion 1 wall clock

enum class Verdict { Pass, Fail, Skip };

struct Outcome {
    Verdict verdict;
    std::string detail;
};

Outcome pass(std::string detail) { return {Verdict::Pass, std::move(detail)}; }
Outcome fail(std::string detail) { return {Verdict::Fail, std::move(detail)}; }
Outcome skip(std::string detail) { return {Verdict::Skip, std::move(detail)}; }

const EnumerationSummary& cached_classes(int n) {
    static std::map<int, EnumerationSummary> memo;
    auto it = memo.find(n);
    if (it == memo.end()) it = memo.emplace(n, enumerate_classes(n)).first;
    return it->second;
}

std::string fixture(const std::string& name) {
    return std::string(FIXTURES_DIR) + "/" + name;
}

int run_command(const std::string& cmd) {
    const int rc = std::system(cmd.c_str());
    if (rc == -1) return -1;
    if (WIFEXITED(rc)) return WEXITSTATUS(rc);
    return -2;
}

std::string fmt_seconds(double s) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2fs", s);
    return buf;
}

// criterion 1: the real binary reproduces bound 60 at n = 5 within budget.
Outcome criterion1() {
    const std::string cli = SIMPLEXITY_CLI_PATH;
    const auto dir = std::filesystem::temp_directory_path() / "simplexity-acceptance";
    std::filesystem::create_directories(dir);
    const std::string classes = (dir / "classes5.json").string();
    const std::string lp_out = (dir / "lp5.json").string();
    const std::string log = (dir / "cli.log").string();

    using clock = std::chrono::steady_clock;
    auto t0 = clock::now();
    int rc = run_command("\"" + cli + "\" enumerate -n 5 -o \"" + classes +
                         "\" > \"" + log + "\" 2>&1");
    const double enum_sec = std::chrono::duration<double>(clock::now() - t0).count();
    if (rc != 0) return fail("enumerate exited with code " + std::to_string(rc));

    t0 = clock::now();
    rc = run_command("\"" + cli + "\" lp -n 5 --classes \"" + classes +
                     "\" --format json -o \"" + lp_out + "\" >> \"" + log + "\" 2>&1");
    const double lp_sec = std::chrono::duration<double>(clock::now() - t0).count();
    if (rc != 0) return fail("lp exited with code " + std::to_string(rc));

    const io::Json result = io::load_json(lp_out);
    if (result.at("bound") != "60")
        return fail("bound = " + result.at("bound").dump() + ", expected \"60\"");
    if (result.at("g_star") != "1/60")
        return fail("g_star = " + result.at("g_star").dump() + ", expected \"1/60\"");
    if (enum_sec >= kEnumerateBudgetSec)
        return fail("enumerate took " + fmt_seconds(enum_sec));
    if (lp_sec >= kLpBudgetSec) return fail("lp took " + fmt_seconds(lp_sec));
    return pass("bound = 60 exactly; enumerate " + fmt_seconds(enum_sec) +
                ", lp " + fmt_seconds(lp_sec));
}

// criterion 2: sanity ladder, independent LP oracle at n = 3 and 4, and
// bound >= n!/rho(n) exactly for every n solved here.
Outcome criterion2() {
    std::vector<Rational> bounds;
    for (int n = 1; n <= 5; ++n)
        bounds.push_back(solve_lp(build_lp(cached_classes(n).classes, n)).bound);

    if (bounds[0] != 1) return fail("n=1 bound " + to_fraction_string(bounds[0]));
    if (bounds[1] != 2) return fail("n=2 bound " + to_fraction_string(bounds[1]));
    if (bounds[2] != 5) return fail("n=3 bound " + to_fraction_string(bounds[2]) +
                                    ", hand reduction gives 5");

    // The oracle path never touches the production enumerator or solver:
    // brute-force classes -> vertex enumeration over the LP polyhedron.
    for (int n : {3, 4}) {
        const auto oracle_classes = oracle::classes_bruteforce(n);
        LPProblem p;
        p.n = n;
        p.folded_values = (n + 1) / 2;
        for (const auto& cls : oracle_classes.classes) {
            LPProblem::Row row;
            row.volume = cls.volume;
            row.folded_counts.assign(static_cast<std::size_t>(p.folded_values), 0);
            for (int d : cls.folded) ++row.folded_counts[static_cast<std::size_t>(d - 1)];
            p.rows.push_back(std::move(row));
        }
        p.normalization.assign(static_cast<std::size_t>(p.folded_values), 0);
        for (int m = 1; m <= n; ++m)
            ++p.normalization[static_cast<std::size_t>(std::min(m, n + 1 - m) - 1)];

        const auto oracle_g = oracle::weight_lp_vertex_oracle(p);
        if (!oracle_g) return fail("vertex oracle found no optimum at n=" + std::to_string(n));
        const Rational oracle_bound = Rational(1) / *oracle_g;
        if (bounds[static_cast<std::size_t>(n - 1)] != oracle_bound)
            return fail("n=" + std::to_string(n) + " solver gives " +
                        to_fraction_string(bounds[static_cast<std::size_t>(n - 1)]) +
                        ", oracle gives " + to_fraction_string(oracle_bound));
    }

    for (int n = 1; n <= 5; ++n) {
        const Rational floor_bound =
            euclidean_lower_bound_exact(n, cached_classes(n).rho);
        if (bounds[static_cast<std::size_t>(n - 1)] < floor_bound)
            return fail("n=" + std::to_string(n) + " LP bound below n!/rho(n)");
    }

    std::string detail = "bounds";
    for (const auto& b : bounds) detail += " " + to_fraction_string(b);
    return pass(detail + "; oracle agrees at n=3,4; all >= n!/rho(n)");
}

// criterion 3 (optional): bound 240 at n = 6. Off by default because the
// enumeration walks 6.2e8 subsets; either point SIMPLEXITY_CLASSES6 at a
// precomputed class file or set SIMPLEXITY_RUN_LONG=1 to enumerate here.
Outcome criterion3() {
    std::optional<EnumerationSummary> summary;
    const char* classes6 = std::getenv("SIMPLEXITY_CLASSES6");
    const char* run_long = std::getenv("SIMPLEXITY_RUN_LONG");
    if (classes6 != nullptr) {
        const io::ClassFile file = io::load_class_file(classes6);
        if (file.n != 6) return fail("SIMPLEXITY_CLASSES6 has n=" + std::to_string(file.n));
        EnumerationSummary s;
        s.n = 6;
        s.classes = file.classes;
        s.rho = file.rho;
        summary = std::move(s);
    } else if (run_long != nullptr && std::string(run_long) == "1") {
        summary = enumerate_classes(6, 0, true);
    } else {
        return skip("optional; set SIMPLEXITY_RUN_LONG=1 or SIMPLEXITY_CLASSES6=<file>");
    }

    const auto sol = solve_lp(build_lp(summary->classes, 6));
    if (sol.bound != 240)
        return fail("n=6 bound " + to_fraction_string(sol.bound) + ", expected 240");
    return pass("n=6 bound = 240 exactly over " +
                std::to_string(summary->classes.size()) + " classes");
}

// criterion 4: rho(1..5) against the all-matrix brute force, plus the
// exact integer form of Lemma 1 with equality exactly at n = 3.
Outcome criterion4() {
    std::string rhos = "rho";
    bool equality_at_3 = false;
    for (int n = 1; n <= 5; ++n) {
        const std::int64_t fast = cached_classes(n).rho;
        const long long brute = oracle::rho_bruteforce(n);
        if (fast != brute)
            return fail("rho(" + std::to_string(n) + ") = " + std::to_string(fast) +
                        " but brute force over all 0/1 matrices gives " +
                        std::to_string(brute));

        // Lemma 1 squared and cleared of radicals:
        // rho^2 * 4^n <= (n+1)^(n+1), exact integers. Equality also holds
        // trivially at n = 1; the criterion asks for it at n = 3.
        const Int lhs = Int(static_cast<long>(fast)) * Int(static_cast<long>(fast)) *
                        pow_int(Int(4), static_cast<unsigned long>(n));
        const Int rhs = pow_int(Int(n + 1), static_cast<unsigned long>(n) + 1);
        if (lhs > rhs) return fail("Lemma 1 violated at n=" + std::to_string(n));
        if (n == 3 && lhs == rhs) equality_at_3 = true;
        rhos += " " + std::to_string(fast);
    }
    if (!equality_at_3) return fail("Lemma 1 not tight at n=3");
    return pass(rhos + " vs brute force; Lemma 1 holds, equality at n=3");
}

// criterion 5: Lemma 5 for every non-degenerate simplex, exhaustively for
// n <= 4 with the exact rational API, streamed for n = 5 in overflow-safe
// integers with periodic cross-checks against the API.
Outcome criterion5() {
    std::uint64_t checked_small = 0;
    for (int n = 1; n <= 4; ++n) {
        std::uint64_t violations = 0;
        scan_simplices(n, [&](const VertexBits* verts, std::int64_t det) {
            if (det == 0) return;
            Simplex01 s(n, std::vector<VertexBits>(verts, verts + n + 1));
            if (!lemma5_check(s).holds) ++violations;
            ++checked_small;
        });
        if (violations != 0)
            return fail(std::to_string(violations) + " violations at n=" + std::to_string(n));
    }

    // n = 5: det^2 * 6^4 <= prod_j i_j (6 - i_j), integers well inside
    // int64 (lhs <= 25 * 1296, rhs <= 9^5).
    const int n = 5;
    std::uint64_t checked5 = 0;
    std::uint64_t violations5 = 0;
    std::uint64_t api_mismatch = 0;
    scan_simplices(n, [&](const VertexBits* verts, std::int64_t det) {
        if (det == 0) return;
        ++checked5;
        std::int64_t rhs = 1;
        for (int b = 0; b < n; ++b) {
            int ones = 0;
            for (int i = 0; i <= n; ++i) ones += static_cast<int>((verts[i] >> b) & 1u);
            rhs *= static_cast<std::int64_t>(ones) * (n + 1 - ones);
        }
        const std::int64_t lhs = det * det * 1296;  // 6^(n-1)
        if (lhs > rhs) ++violations5;
        if (checked5 % 9973 == 0) {
            Simplex01 s(n, std::vector<VertexBits>(verts, verts + n + 1));
            if (lemma5_check(s).holds != (lhs <= rhs)) ++api_mismatch;
        }
    });
    if (violations5 != 0) return fail(std::to_string(violations5) + " violations at n=5");
    if (api_mismatch != 0)
        return fail("streamed check disagrees with lemma5_check " +
                    std::to_string(api_mismatch) + " times");
    return pass(std::to_string(checked_small) + " simplices exhaustively (n<=4), " +
                std::to_string(checked5) + " streamed (n=5), zero violations");
}

// criterion 6: analytic weights keep every class at or below the uniform
// threshold, implying dis(n) >= F(n).
Outcome criterion6() {
    for (int n = 1; n <= 5; ++n) {
        const auto report = verify_analytic_bound(n, cached_classes(n).classes);
        if (report.tolerance != kAnalyticTolerance)
            return fail("tolerance drifted from the pinned 1e-9");
        if (!report.all_within)
            return fail("max V^alpha = " + std::to_string(report.max_weighted_volume) +
                        " exceeds threshold at n=" + std::to_string(n));
    }
    if (asymptotic_bound(3) != 4.0) return fail("F(3) != 4");
    if (asymptotic_bound(5) != 36.0) return fail("F(5) != 36");
    return pass("V^alpha within (n+1)^((1-n)/2) + 1e-9 for n=1..5; F(3) = 4, F(5) = 36");
}

// criterion 7: closed forms. E(3) exact, the F/E identity to 1e-9 for
// n <= 50, and (F/E)^(1/n) approaching e/2 from below.
Outcome criterion7() {
    if (euclidean_bound(3) != 3.0) return fail("E(3) != 3 in double arithmetic");

    for (int n = 1; n <= 50; ++n) {
        const double actual = asymptotic_bound(n) / euclidean_bound(n);
        long double expected = 1.0L;  // (n+1)^n / (2^n n!) as a running product
        for (int i = 1; i <= n; ++i)
            expected *= static_cast<long double>(n + 1) / (2.0L * i);
        const double rel = std::abs(actual - static_cast<double>(expected)) /
                           static_cast<double>(expected);
        if (rel > kIdentityRelTol)
            return fail("F/E identity off by rel " + std::to_string(rel) +
                        " at n=" + std::to_string(n));
    }

    const double r10 = ratio_diagnostic(10);
    const double r50 = ratio_diagnostic(50);
    const double r100 = ratio_diagnostic(100);
    const double r300 = ratio_diagnostic(300);
    if (!(r10 < r50 && r50 < r100 && r100 < r300))
        return fail("(F/E)^(1/n) not monotone over n in {10,50,100,300}");
    if (!(r300 < kEOverTwo)) return fail("(F/E)^(1/n) exceeded e/2");
    if (kEOverTwo - r300 > kRatioWindow)
        return fail("(F/E)^(1/n) at n=300 is " + std::to_string(r300) +
                    ", more than 0.02 from e/2");
    char buf[64];
    std::snprintf(buf, sizeof(buf), "ratio(300) = %.6f", r300);
    return pass("E(3) = 3 exactly; F/E identity to 1e-9 for n<=50; " + std::string(buf));
}

// criterion 8: both valid fixtures verify with the documented invariants,
// and the slice data agrees across the two structurally different
// dissections.
Outcome criterion8() {
    const Rational third = make_rational(1, 3);
    std::vector<Dissection> dissections;
    for (const char* name : {"cube3_5tet.json", "cube3_6tet.json"}) {
        auto d = io::load_dissection(fixture(name));
        const auto report = verify_partition(d);
        if (!report.partition_ok || report.volume_sum != 1)
            return fail(std::string(name) + " did not verify as a partition");
        for (const auto& cv : report.class_volumes)
            for (const auto& v : cv.V)
                if (v != third) return fail(std::string(name) + " has V(i) != 1/3");
        if (!report.proposition_ok)
            return fail(std::string(name) + " failed the V_{k,m} table");
        for (const auto& row : report.proposition.sums)
            for (const auto& v : row)
                if (v != third) return fail(std::string(name) + " table entry != 1/3");
        for (int axis = 1; axis <= 3; ++axis) {
            const auto bc = bernstein_coefficients(d, axis);
            if (bc.c != std::vector<Rational>{Rational(1), Rational(2), Rational(1)})
                return fail(std::string(name) + " Bernstein coefficients != (1,2,1)");
            for (const auto& t : {Rational(0), make_rational(1, 4), make_rational(1, 2),
                                  make_rational(3, 4), Rational(1)})
                if (section_polynomial_eval(d, axis, t) != 1)
                    return fail(std::string(name) + " section polynomial != 1");
        }
        dissections.push_back(std::move(d));
    }
    for (int axis = 1; axis <= 3; ++axis) {
        const auto a = class_volumes(dissections[0], axis);
        const auto b = class_volumes(dissections[1], axis);
        if (a.V != b.V) return fail("V(i) differs between the two dissections");
    }
    return pass("5- and 6-simplex dissections verify; V(i) = 1/3, c = (1,2,1), "
                "section = 1, table = 1/3, identical across dissections");
}

// criterion 9: negative controls are rejected for the right reasons.
Outcome criterion9() {
    const auto overlapping = verify_partition(io::load_dissection(fixture("cube3_overlap.json")));
    if (overlapping.partition_ok) return fail("overlapping input accepted");
    if (!overlapping.overlap.has_value()) return fail("no overlap witness reported");
    if (overlapping.overlap->first >= overlapping.overlap->second)
        return fail("overlap witness indices are not ordered");
    if (overlapping.overlap->point.size() != 3)
        return fail("overlap witness point has wrong dimension");

    const auto incomplete = verify_partition(io::load_dissection(fixture("cube3_incomplete.json")));
    if (incomplete.partition_ok) return fail("incomplete input accepted");
    if (incomplete.volume_sum != make_rational(2, 3))
        return fail("incomplete volume sum " + to_fraction_string(incomplete.volume_sum) +
                    ", expected 2/3");
    if (incomplete.overlap.has_value())
        return fail("incomplete fixture wrongly reported an overlap");
    return pass("overlap rejected with witness pair (" +
                std::to_string(overlapping.overlap->first) + "," +
                std::to_string(overlapping.overlap->second) +
                "); incomplete rejected with volume 2/3");
}

// criterion 10: Bernstein evaluation matrices stay nonsingular through m = 12.
Outcome criterion10() {
    for (int m = 0; m <= 12; ++m) {
        if (bernstein_evaluation_det(m) == 0)
            return fail("singular evaluation matrix at m=" + std::to_string(m));
        if (!bernstein_independence_check(m))
            return fail("independence check false at m=" + std::to_string(m));
    }
    return pass("evaluation determinant nonzero for m = 0..12, exact arithmetic");
}

}  // namespace

int main() {
    using Criterion = Outcome (*)();
    const std::vector<Criterion> criteria = {
        criterion1, criterion2, criterion3, criterion4, criterion5,
        criterion6, criterion7, criterion8, criterion9, criterion10,
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome outcome = [&] {
            try {
                return criteria[i]();
            } catch (const std::exception& e) {
                return fail(std::string("exception: ") + e.what());
            }
        }();
        const char* label = outcome.verdict == Verdict::Pass   ? "PASS"
                            : outcome.verdict == Verdict::Fail ? "FAIL"
                                                               : "SKIP";
        if (outcome.verdict == Verdict::Fail) ++failures;
        std::printf("criterion %zu: %s (%s)\n", i + 1, label, outcome.detail.c_str());
        std::fflush(stdout);
    }
    if (failures != 0) std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}

#include "simplexity/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <map>
#include <stdexcept>
#include <thread>
#include <utility>

namespace simplexity {

namespace {

int resolve_threads(int thread_budget) {
    if (thread_budget > 0) return thread_budget;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// Folded profiles are keyed by the count of each folded value d in
// 1..ceil(n/2): three bits per count, so the whole multiset packs into
// nine bits for n <= 6.
constexpr int kFoldedBits = 9;

std::uint32_t packed_key(std::int64_t abs_det, std::uint32_t folded_counts) {
    return (static_cast<std::uint32_t>(abs_det) << kFoldedBits) | folded_counts;
}

struct ClassAccum {
    std::uint64_t count = 0;
    VertexBits witness[kEnumerationMaxDim + 1];
};

struct PartitionResult {
    std::uint64_t degenerate = 0;
    std::uint64_t nondegenerate = 0;
    // (key, accum) pairs sorted by key; compacted from the dense table.
    std::vector<std::pair<std::uint32_t, ClassAccum>> classes;
};

// Upper bound on |det| from the Hadamard-type estimate, used only to size
// the dense accumulation table.
std::size_t det_bound(int n) {
    const double b = 2.0 * std::pow(std::sqrt(n + 1.0) / 2.0, n + 1.0);
    return static_cast<std::size_t>(b) + 2;
}

// Enumerates all (n+1)-subsets whose smallest vertex is v0, in
// lexicographic order, aggregating into a dense table indexed by
// (|det|, packed folded counts).
void scan_partition(int n, VertexBits v0, std::vector<ClassAccum>& table, PartitionResult& out) {
    const int k = n + 1;
    const VertexBits total = VertexBits{1} << n;
    VertexBits c[kEnumerationMaxDim + 2];
    c[0] = v0;
    for (int i = 1; i < k; ++i) c[i] = v0 + static_cast<VertexBits>(i);
    if (c[k - 1] >= total) return;

    while (true) {
        const std::int64_t det = det_from_masks(c, n);
        if (det == 0) {
            ++out.degenerate;
        } else {
            ++out.nondegenerate;
            std::uint32_t folded_counts = 0;
            for (int j = 1; j <= n; ++j) {
                int ones = 0;
                for (int i = 0; i < k; ++i) ones += coordinate(c[i], j, n);
                const int folded = std::min(ones, n + 1 - ones);
                folded_counts += 1u << (3 * (folded - 1));
            }
            const std::uint32_t key = packed_key(det < 0 ? -det : det, folded_counts);
            ClassAccum& acc = table[key];
            if (acc.count == 0)
                for (int i = 0; i < k; ++i) acc.witness[i] = c[i];
            ++acc.count;
        }
        // advance to the next combination with first element fixed at v0
        int i = k - 1;
        while (i >= 1 && c[i] == total - static_cast<VertexBits>(k - i)) --i;
        if (i < 1) break;
        ++c[i];
        for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
    }

    for (std::uint32_t key = 0; key < table.size(); ++key) {
        if (table[key].count > 0) {
            out.classes.emplace_back(key, table[key]);
            table[key].count = 0;
        }
    }
}

std::uint64_t binomial_u64(std::uint64_t n, std::uint64_t k) {
    Int b = binomial_int(static_cast<int>(n), static_cast<int>(k));
    return b.get_ui();
}

}  // namespace

EnumerationSummary enumerate_classes(int n, int thread_budget, bool allow_long_running) {
    if (n < 1 || n > kEnumerationMaxDim)
        throw std::invalid_argument("enumeration supports 1 <= n <= " +
                                    std::to_string(kEnumerationMaxDim) + ", got " + std::to_string(n));
    if (n == kEnumerationMaxDim && !allow_long_running)
        throw std::invalid_argument("n = 6 scans ~6.2e8 subsets; pass the long-running flag to confirm");

    const VertexBits total = VertexBits{1} << n;
    const int partitions = static_cast<int>(total) - n;  // smallest vertex in 0 .. 2^n-(n+1)
    std::vector<PartitionResult> results(static_cast<std::size_t>(partitions));

    const std::size_t table_size = det_bound(n) << kFoldedBits;
    const int workers = std::min(resolve_threads(thread_budget), partitions);
    std::atomic<int> next{0};

    auto work = [&]() {
        std::vector<ClassAccum> table(table_size);
        while (true) {
            const int v0 = next.fetch_add(1);
            if (v0 >= partitions) break;
            scan_partition(n, static_cast<VertexBits>(v0), table,
                           results[static_cast<std::size_t>(v0)]);
        }
    };

    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int t = 0; t < workers; ++t) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }

    // Merge partitions in ascending smallest-vertex order. Keeping the
    // first witness seen preserves the global lexicographic minimum.
    EnumerationSummary summary;
    summary.n = n;
    std::map<std::uint32_t, ClassAccum> merged;
    for (const PartitionResult& part : results) {
        summary.degenerate += part.degenerate;
        summary.nondegenerate += part.nondegenerate;
        for (const auto& [key, acc] : part.classes) {
            auto [it, inserted] = merged.emplace(key, acc);
            if (!inserted) it->second.count += acc.count;
        }
    }
    summary.total_subsets = binomial_u64(total, static_cast<std::uint64_t>(n) + 1);

    const Int n_factorial = factorial_int(n);
    for (const auto& [key, acc] : merged) {
        ConstraintClass cls{
            make_rational(Int(static_cast<long>(key >> kFoldedBits)), n_factorial),
            FoldedProfile{},
            acc.count,
            Simplex01(n, std::vector<VertexBits>(acc.witness, acc.witness + n + 1)),
        };
        for (int d = 1; d <= (n + 1) / 2; ++d) {
            const std::uint32_t c = (key >> (3 * (d - 1))) & 7u;
            for (std::uint32_t r = 0; r < c; ++r) cls.folded.push_back(d);
        }
        summary.rho = std::max<std::int64_t>(summary.rho, static_cast<std::int64_t>(key >> kFoldedBits));
        summary.classes.push_back(std::move(cls));
    }
    std::sort(summary.classes.begin(), summary.classes.end(),
              [](const ConstraintClass& a, const ConstraintClass& b) {
                  if (a.volume != b.volume) return a.volume > b.volume;
                  return a.folded < b.folded;
              });
    summary.max_volume = make_rational(Int(static_cast<long>(summary.rho)), n_factorial);
    return summary;
}

std::int64_t rho(int n, int thread_budget, bool allow_long_running) {
    return enumerate_classes(n, thread_budget, allow_long_running).rho;
}

Rational euclidean_lower_bound_exact(int n, std::int64_t rho_value) {
    if (rho_value <= 0) throw std::invalid_argument("rho must be positive");
    return make_rational(factorial_int(n), Int(static_cast<long>(rho_value)));
}

Rational euclidean_lower_bound_exact(int n, int thread_budget, bool allow_long_running) {
    return euclidean_lower_bound_exact(n, rho(n, thread_budget, allow_long_running));
}

}  // namespace simplexity

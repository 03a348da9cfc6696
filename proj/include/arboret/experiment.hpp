#pragma once

#include <atomic>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "arboret/codec.hpp"
#include "arboret/entropy.hpp"
#include "arboret/enumerate.hpp"
#include "arboret/lzpipe.hpp"
#include "arboret/rng.hpp"
#include "arboret/sample.hpp"

namespace arboret {

/// Worker cap: ARBORET_THREADS if set, else hardware concurrency; at least 1.
inline int worker_count() {
    if (const char* env = std::getenv("ARBORET_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw >= 1 ? static_cast<int>(hw) : 1;
}

/// Runs fn(trial) for trial in [0, trials).  fn must only write state owned
/// by its trial index, so results do not depend on the worker count.
template <typename Fn>
inline void parallel_trials(long trials, Fn&& fn, int workers = worker_count()) {
    if (trials <= 0) return;
    if (workers <= 1 || trials == 1) {
        for (long t = 0; t < trials; ++t) fn(t);
        return;
    }
    std::atomic<long> next{0};
    std::exception_ptr error;
    std::mutex error_mu;
    auto run = [&] {
        for (;;) {
            long t = next.fetch_add(1);
            if (t >= trials) return;
            try {
                fn(t);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mu);
                if (!error) error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(run);
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

namespace detail {

inline std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

struct MeanVar {
    long count = 0;
    double mean = 0.0;
    double m2 = 0.0;

    void add(double x) {
        ++count;
        double d = x - mean;
        mean += d / static_cast<double>(count);
        m2 += d * (x - mean);
    }

    double stderr_mean() const {
        if (count < 2) return 0.0;
        double var = m2 / static_cast<double>(count - 1);
        return std::sqrt(var / static_cast<double>(count));
    }
};

}  // namespace detail

// ---------------------------------------------------------------------------
// Redundancy measurement.
// ---------------------------------------------------------------------------

struct RedundancyRow {
    std::string model;
    int n = 0;
    double p = 0.0;
    long trials = 0;
    double bits_mean = 0.0;
    double bits_stderr = 0.0;
    double redundancy_mean = 0.0;
};

/// ER pipeline: sample a spanning tree of ER(n, p), compress with
/// bit-extraction + LZ78, and compare payload bits against the spanning-tree
/// entropy bound, per extracted symbol.
inline RedundancyRow measure_er_redundancy(int n, double p, long trials, std::uint64_t seed,
                                           std::uint64_t stream_base = 0,
                                           int workers = worker_count()) {
    struct Trial {
        bool ok = false;
        double bits = 0.0;
        double symbols = 0.0;
    };
    std::vector<Trial> results(static_cast<std::size_t>(trials));
    parallel_trials(
        trials,
        [&](long t) {
            Rng rng(seed, stream_base + static_cast<std::uint64_t>(t));
            auto tree = sample_er_spanning(n, p, rng);
            if (!tree) return;
            BitString bits = bit_extract_bits(*tree);
            results[t].ok = true;
            results[t].bits = static_cast<double>(lz78_encode(bits).bits.size());
            results[t].symbols = static_cast<double>(bits.size());
        },
        workers);
    detail::MeanVar bits_acc, sym_acc;
    for (const auto& r : results) {
        if (!r.ok) continue;
        bits_acc.add(r.bits);
        sym_acc.add(r.symbols);
    }
    RedundancyRow row;
    row.model = "er-lz78";
    row.n = n;
    row.p = p;
    row.trials = bits_acc.count;
    row.bits_mean = bits_acc.mean;
    row.bits_stderr = bits_acc.stderr_mean();
    if (sym_acc.count > 0 && sym_acc.mean > 0.0)
        row.redundancy_mean = (bits_acc.mean - er_tree_upper(n, p)) / sym_acc.mean;
    return row;
}

/// SGT pipeline: sample a tree, compress its child-count sequence with LZW
/// (framed), and compare payload bits against the tree's own information
/// content, per node.
inline RedundancyRow measure_sgt_redundancy(const ChildrenDistribution& dist, int K, long trials,
                                            std::uint64_t seed, std::uint64_t stream_base = 0,
                                            int workers = worker_count()) {
    struct Trial {
        bool ok = false;
        double bits = 0.0;
        double info = 0.0;
        double nodes = 0.0;
    };
    std::vector<Trial> results(static_cast<std::size_t>(trials));
    parallel_trials(
        trials,
        [&](long t) {
            Rng rng(seed, stream_base + static_cast<std::uint64_t>(t));
            auto tree = sample_sgt(dist, rng);
            if (!tree) return;
            auto frame = compress_sgt(*tree, K);
            results[t].ok = true;
            results[t].bits = static_cast<double>(frame.payload.size());
            results[t].info = -sgt_tree_log2p(dist, *tree);
            results[t].nodes = static_cast<double>(tree->n());
        },
        workers);
    detail::MeanVar bits_acc, red_acc;
    for (const auto& r : results) {
        if (!r.ok) continue;
        bits_acc.add(r.bits);
        red_acc.add((r.bits - r.info) / r.nodes);
    }
    RedundancyRow row;
    row.model = "sgt-lzw";
    row.n = 0;
    row.p = dist.p0();
    row.trials = bits_acc.count;
    row.bits_mean = bits_acc.mean;
    row.bits_stderr = bits_acc.stderr_mean();
    row.redundancy_mean = red_acc.mean;
    return row;
}

// ---------------------------------------------------------------------------
// Figure tables (CSV text, deterministic).
// ---------------------------------------------------------------------------

/// Exhaustive uniform-ordered averages of the structural codecs per n, with
/// the entropy floor log2 C_{n-1} and the 2n-2 reference line.
inline std::string experiment_uniform(int n_max = 14) {
    std::string csv = "n,trees,avg_pc,avg_td,avg_te,entropy,bound\n";
    for (int n = 1; n <= n_max; ++n) {
        unsigned long long trees = 0;
        unsigned long long pc_sum = 0, td_sum = 0, te_sum = 0;
        enumerate_ordered(n, [&](const OrderedTree& t) {
            ++trees;
            pc_sum += pc_encode(t).size();
            td_sum += td_bits(td_encode(t)).size();
            te_sum += treeexplorer_encode(t).size();
        });
        double m = static_cast<double>(trees);
        csv += std::to_string(n) + "," + std::to_string(trees) + "," +
               detail::fmt(static_cast<double>(pc_sum) / m) + "," +
               detail::fmt(static_cast<double>(td_sum) / m) + "," +
               detail::fmt(static_cast<double>(te_sum) / m) + "," +
               detail::fmt(log2_mpz(catalan(n - 1))) + "," +
               detail::fmt(2.0 * n - 2.0) + "\n";
    }
    return csv;
}

/// Fixed-cost adjacency-list baseline against the ordered-tree entropy and
/// the TreeExplorer average bound.
inline std::string experiment_adjlist(const std::vector<int>& ns) {
    std::string csv = "n,entropy,te_bound,adjlist_bits\n";
    for (int n : ns) {
        csv += std::to_string(n) + "," + detail::fmt(log2_mpz(catalan(n - 1))) + "," +
               detail::fmt(2.0 * n - 2.0) + "," + std::to_string(adjlist_cost(n)) + "\n";
    }
    return csv;
}

/// Exhaustive uniform-ordered Newick cost against TD and PC.
inline std::string experiment_newick(int n_max = 14) {
    std::string csv = "n,trees,avg_newick,avg_td,avg_pc\n";
    for (int n = 2; n <= n_max; ++n) {
        unsigned long long trees = 0;
        unsigned long long nw_sum = 0, td_sum = 0, pc_sum = 0;
        enumerate_ordered(n, [&](const OrderedTree& t) {
            ++trees;
            nw_sum += static_cast<unsigned long long>(newick_cost(t));
            td_sum += td_bits(td_encode(t)).size();
            pc_sum += pc_encode(t).size();
        });
        double m = static_cast<double>(trees);
        csv += std::to_string(n) + "," + std::to_string(trees) + "," +
               detail::fmt(static_cast<double>(nw_sum) / m) + "," +
               detail::fmt(static_cast<double>(td_sum) / m) + "," +
               detail::fmt(static_cast<double>(pc_sum) / m) + "\n";
    }
    return csv;
}

/// Spanning-tree entropy bound over p for fixed n, with the p = 1/2
/// maximum-entropy level (n-2) log2 n.
inline std::string experiment_er_sweep(int n, const std::vector<double>& ps) {
    std::string csv = "n,p,tree_upper,max_line\n";
    double maxline = (n - 2) * std::log2(static_cast<double>(n));
    for (double p : ps) {
        csv += std::to_string(n) + "," + detail::fmt(p) + "," +
               detail::fmt(er_tree_upper(n, p)) + "," + detail::fmt(maxline) + "\n";
    }
    return csv;
}

/// Entropy bound at the giant-component threshold, total and per node.
inline std::string experiment_giant(const std::vector<int>& ns) {
    std::string csv = "n,threshold_bits,per_node\n";
    for (int n : ns) {
        double b = giant_threshold_upper(n);
        csv += std::to_string(n) + "," + detail::fmt(b) + "," +
               detail::fmt(b / static_cast<double>(n)) + "\n";
    }
    return csv;
}

/// ER pipeline redundancy rows; p(n) = min(1, 1.5 ln n / n) keeps the graphs
/// connected often enough to sample while staying sparse.
inline double er_sweep_p(int n) {
    double p = 1.5 * std::log(static_cast<double>(n)) / static_cast<double>(n);
    return p > 1.0 ? 1.0 : p;
}

inline std::string experiment_redundancy(const std::vector<int>& ns, long trials,
                                         std::uint64_t seed, int workers = worker_count()) {
    std::string csv = "model,n,p,trials,bits_mean,bits_stderr,redundancy_mean\n";
    for (std::size_t i = 0; i < ns.size(); ++i) {
        int n = ns[i];
        RedundancyRow row = measure_er_redundancy(n, er_sweep_p(n), trials, seed,
                                                  static_cast<std::uint64_t>(i) << 32, workers);
        csv += row.model + "," + std::to_string(row.n) + "," + detail::fmt(row.p) + "," +
               std::to_string(row.trials) + "," + detail::fmt(row.bits_mean) + "," +
               detail::fmt(row.bits_stderr) + "," + detail::fmt(row.redundancy_mean) + "\n";
    }
    return csv;
}

}  // namespace arboret

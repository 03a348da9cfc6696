#pragma once

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "arboret/dist.hpp"
#include "arboret/enumerate.hpp"
#include "arboret/labeled.hpp"
#include "arboret/rng.hpp"
#include "arboret/sample.hpp"

namespace arboret {

/// Growth constants of the unordered rooted tree counts:
/// count(n) ~ OTTER_C * OTTER_D^n * n^{-3/2}.
inline constexpr double OTTER_C = 0.4399240125710253;
inline constexpr double OTTER_D = 2.9557652856519949;

enum class BoundKind { exact, upper, asymptotic };

inline const char* bound_kind_name(BoundKind k) {
    switch (k) {
        case BoundKind::exact: return "exact";
        case BoundKind::upper: return "upper";
        default: return "asymptotic";
    }
}

struct EntropyReport {
    std::string model;
    std::vector<std::pair<std::string, double>> params;
    std::optional<double> exact;
    std::optional<double> bound;
    BoundKind bound_kind = BoundKind::upper;
    std::vector<std::pair<std::string, double>> extras;
};

inline double binary_entropy(double p) {
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("p must lie in [0,1]");
    if (p == 0.0 || p == 1.0) return 0.0;
    return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

inline double log2_mpz(const mpz_class& x) {
    if (x <= 0) throw std::invalid_argument("log2 of nonpositive value");
    long exp2 = 0;
    double mant = mpz_get_d_2exp(&exp2, x.get_mpz_t());
    return static_cast<double>(exp2) + std::log2(mant);
}

/// Entropy of the uniform distribution over unordered rooted trees on n
/// nodes: exact log2 of the count plus the printed asymptotic form
/// 1.5635 n - 1.5 log2 n - 1.1846.
inline EntropyReport uniform_unordered_entropy(int n) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    EntropyReport r;
    r.model = "uniform-unordered";
    r.params = {{"n", static_cast<double>(n)}};
    r.exact = log2_mpz(count_unordered(n));
    r.bound = 1.5635 * n - 1.5 * std::log2(static_cast<double>(n)) - 1.1846;
    r.bound_kind = BoundKind::asymptotic;
    return r;
}

/// Entropy of the uniform distribution over ordered rooted trees on n
/// nodes, log2 C_{n-1}.  The extra reports log2 C_n since one common
/// indexing convention attaches C_n to n-node trees.
inline EntropyReport uniform_ordered_entropy(int n) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    EntropyReport r;
    r.model = "uniform-ordered";
    r.params = {{"n", static_cast<double>(n)}};
    r.exact = log2_mpz(catalan(n - 1));
    r.extras = {{"log2_catalan_n", log2_mpz(catalan(n))}};
    return r;
}

/// log2 of the labeled tree count: (n-2)log2 n unrooted, (n-1)log2 n
/// rooted; degenerate n in {1,2} clamps to count 1.
inline double labeled_entropy(int n, bool rooted = false) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (n <= 2 && !rooted) return 0.0;
    if (n == 1) return 0.0;
    double e = rooted ? (n - 1) : (n - 2);
    return e * std::log2(static_cast<double>(n));
}

/// H_T = H_C / (1 - mean) for a subcritical children distribution.
inline double sgt_entropy(const ChildrenDistribution& dist) {
    double cbar = dist.mean();
    if (cbar >= 1.0)
        throw std::domain_error("sgt_entropy requires a subcritical distribution");
    return dist.entropy_bits() / (1.0 - cbar);
}

/// E[n] = 1 / (1 - mean).
inline double sgt_expected_nodes(const ChildrenDistribution& dist) {
    double cbar = dist.mean();
    if (cbar >= 1.0)
        throw std::domain_error("sgt_expected_nodes requires a subcritical distribution");
    return 1.0 / (1.0 - cbar);
}

/// E[nodes at depth i] = mean^i.
inline double sgt_expected_level(const ChildrenDistribution& dist, int level) {
    if (level < 0) throw std::invalid_argument("level must be >= 0");
    return std::pow(dist.mean(), level);
}

/// Zero-order bound on the entropy of the size-conditioned model: n * H_C.
inline double cgw_bound_zero(const ChildrenDistribution& dist, int n) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    return n * dist.entropy_bits();
}

/// First-order bound: H_{C,n-1} + (n-1) * E_{X ~ C,n-1}[ H_{C,n-1-X} ],
/// where C,m is the children distribution truncated to counts <= m and
/// renormalized.
inline double cgw_bound_first(const ChildrenDistribution& dist, int n) {
    if (n < 2) throw std::invalid_argument("n must be >= 2");
    ChildrenDistribution head = dist.truncated(n - 1);
    double expectation = 0.0;
    for (std::size_t i = 0; i < head.support().size(); ++i) {
        int x = head.support()[i];
        expectation += head.mass()[i] * dist.truncated(n - 1 - x).entropy_bits();
    }
    return head.entropy_bits() + (n - 1) * expectation;
}

/// H of the ER graph source: C(n,2) * H(p).
inline double er_graph_entropy(int n, double p) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    return 0.5 * n * (n - 1) * binary_entropy(p);
}

/// E[number of spanning trees of G(n,p)] = p^{n-1} * n^{n-2}.
inline double expected_spanning_count(int n, double p) {
    if (n < 2) throw std::invalid_argument("n must be >= 2");
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("p must lie in [0,1]");
    return std::pow(p, n - 1) * std::pow(static_cast<double>(n), n - 2);
}

/// log2 of the same expectation, safe for large n.
inline double expected_spanning_log2(int n, double p) {
    if (n < 2) throw std::invalid_argument("n must be >= 2");
    if (p <= 0.0) throw std::invalid_argument("p must be positive");
    return (n - 1) * std::log2(p) + (n - 2) * std::log2(static_cast<double>(n));
}

/// Upper bound on the entropy of the ER spanning-tree source:
/// (n-1)(H(p) + log2(n p)) - log2 n.
inline double er_tree_upper(int n, double p) {
    if (n < 2) throw std::invalid_argument("n must be >= 2");
    if (p <= 0.0 || p > 1.0) throw std::invalid_argument("p must lie in (0,1]");
    double lg_n = std::log2(static_cast<double>(n));
    return (n - 1) * (binary_entropy(p) + lg_n + std::log2(p)) - lg_n;
}

/// The bound printed for the giant-component threshold p = 1/(n-1):
/// (n-1)log2 n - (n-2)log2(n-2).
inline double giant_threshold_upper(int n) {
    if (n < 3) throw std::invalid_argument("n must be >= 3");
    return (n - 1) * std::log2(static_cast<double>(n)) -
           (n - 2) * std::log2(static_cast<double>(n - 2));
}

namespace detail {

inline long long bareiss_det_i64(std::vector<std::vector<long long>>& a) {
    const int m = static_cast<int>(a.size());
    long long prev = 1;
    int sign = 1;
    for (int k = 0; k < m - 1; ++k) {
        if (a[k][k] == 0) {
            int piv = -1;
            for (int i = k + 1; i < m; ++i)
                if (a[i][k] != 0) {
                    piv = i;
                    break;
                }
            if (piv < 0) return 0;
            std::swap(a[k], a[piv]);
            sign = -sign;
        }
        for (int i = k + 1; i < m; ++i)
            for (int j = k + 1; j < m; ++j) {
                __int128 t = static_cast<__int128>(a[i][j]) * a[k][k] -
                             static_cast<__int128>(a[i][k]) * a[k][j];
                a[i][j] = static_cast<long long>(t / prev);  // division is exact
            }
        prev = a[k][k];
    }
    return sign > 0 ? a[m - 1][m - 1] : -a[m - 1][m - 1];
}

inline mpz_class bareiss_det_mpz(std::vector<std::vector<mpz_class>>& a) {
    const int m = static_cast<int>(a.size());
    mpz_class prev = 1;
    int sign = 1;
    mpz_class t;
    for (int k = 0; k < m - 1; ++k) {
        if (a[k][k] == 0) {
            int piv = -1;
            for (int i = k + 1; i < m; ++i)
                if (a[i][k] != 0) {
                    piv = i;
                    break;
                }
            if (piv < 0) return 0;
            std::swap(a[k], a[piv]);
            sign = -sign;
        }
        for (int i = k + 1; i < m; ++i)
            for (int j = k + 1; j < m; ++j) {
                t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        prev = a[k][k];
    }
    return sign > 0 ? a[m - 1][m - 1] : mpz_class(-a[m - 1][m - 1]);
}

}  // namespace detail

/// Exact spanning-tree count via the matrix-tree theorem (determinant of a
/// Laplacian minor, fraction-free elimination); 0 for disconnected graphs.
inline mpz_class kirchhoff_count(const SimpleGraph& g) {
    const int n = g.n();
    if (n == 1) return 1;
    const int m = n - 1;  // drop the row/column of label 1
    if (n <= 12) {
        // Entries of the elimination stay below the Hadamard bound
        // (sqrt(m) * n)^m < 2^63 for n <= 12.
        std::vector<std::vector<long long>> a(m, std::vector<long long>(m, 0));
        for (int u = 2; u <= n; ++u) {
            a[u - 2][u - 2] = static_cast<long long>(g.neighbors(u).size());
            for (int v : g.neighbors(u))
                if (v >= 2) a[u - 2][v - 2] -= 1;
        }
        return mpz_class(static_cast<long>(detail::bareiss_det_i64(a)));
    }
    std::vector<std::vector<mpz_class>> a(m, std::vector<mpz_class>(m, 0));
    for (int u = 2; u <= n; ++u) {
        a[u - 2][u - 2] = static_cast<long>(g.neighbors(u).size());
        for (int v : g.neighbors(u))
            if (v >= 2) a[u - 2][v - 2] -= 1;
    }
    return detail::bareiss_det_mpz(a);
}

struct ConditionalEntropyEstimate {
    double bits;      // mean log2 spanning count over connected draws
    long accepted;    // connected draws
    long discarded;   // disconnected draws
};

/// Monte Carlo estimate of E[log2 s(G)] over connected G(n,p) draws.
inline ConditionalEntropyEstimate mc_conditional_tree_entropy(int n, double p, long trials,
                                                              Rng& rng) {
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");
    double sum = 0.0;
    long accepted = 0, discarded = 0;
    for (long i = 0; i < trials; ++i) {
        SimpleGraph g = sample_er_graph(n, p, rng);
        if (!g.connected()) {
            ++discarded;
            continue;
        }
        sum += log2_mpz(kirchhoff_count(g));
        ++accepted;
    }
    if (accepted == 0)
        throw std::domain_error("all sampled graphs were disconnected");
    return {sum / accepted, accepted, discarded};
}

/// Streaming frequency table for empirical entropy estimates.
class FrequencyTable {
public:
    void add(const std::string& key) {
        ++counts_[key];
        ++total_;
    }

    long total() const { return total_; }
    std::size_t distinct() const { return counts_.size(); }

    /// Plug-in estimate -sum f log2 f over empirical frequencies.
    double plugin_bits() const {
        if (total_ == 0) throw std::invalid_argument("no samples");
        double h = 0.0;
        for (const auto& [key, c] : counts_) {
            double f = static_cast<double>(c) / static_cast<double>(total_);
            h -= f * std::log2(f);
        }
        return h;
    }

    /// Plug-in estimate plus the Miller-Madow bias correction
    /// (distinct-1)/(2N ln 2).
    double miller_madow_bits() const {
        return plugin_bits() + (static_cast<double>(distinct()) - 1.0) /
                                   (2.0 * static_cast<double>(total_) * std::log(2.0));
    }

private:
    std::unordered_map<std::string, long> counts_;
    long total_ = 0;
};

inline double plugin_entropy(const std::vector<std::string>& samples) {
    if (samples.empty()) throw std::invalid_argument("no samples");
    FrequencyTable t;
    for (const auto& s : samples) t.add(s);
    return t.plugin_bits();
}

}  // namespace arboret

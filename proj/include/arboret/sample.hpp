#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <vector>

#include "arboret/dist.hpp"
#include "arboret/labeled.hpp"
#include "arboret/ordered_tree.hpp"
#include "arboret/rng.hpp"

namespace arboret {

/// Uniform draw over all C_{n-1} ordered rooted trees with n nodes.
///
/// Cycle-lemma construction: shuffle n-1 up-steps and n down-steps, rotate
/// to begin just after the first position where the prefix sum attains its
/// minimum; the rotation is the unique one whose proper prefixes are
/// nonnegative with the final down-step closing the root.  Dropping that
/// final step leaves a uniform Dyck word, read as descend/ascend moves.
inline OrderedTree sample_uniform_ordered(int n, Rng& rng) {
    if (n < 1) throw std::invalid_argument("sample_uniform_ordered needs n >= 1");
    if (n == 1) return OrderedTree::single();
    const int m = n - 1;
    std::vector<int> steps(2 * m + 1, -1);
    for (int i = 0; i < m; ++i) steps[i] = +1;
    for (int i = 2 * m; i > 0; --i) {
        int j = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(i) + 1));
        std::swap(steps[i], steps[j]);
    }
    int sum = 0, best = 1, best_pos = -1;
    for (int i = 0; i < 2 * m + 1; ++i) {
        sum += steps[i];
        if (sum < best) {
            best = sum;
            best_pos = i;
        }
    }
    std::vector<std::vector<int>> kids(n);
    std::vector<int> stack{0};
    int used = 1;
    for (int k = 0; k < 2 * m; ++k) {
        int s = steps[(best_pos + 1 + k) % (2 * m + 1)];
        if (s > 0) {
            int id = used++;
            kids[stack.back()].push_back(id);
            stack.push_back(id);
        } else {
            stack.pop_back();
        }
    }
    return OrderedTree::from_children(kids, 0);
}

/// Uniform draw over all n^{n-2} labeled trees (random Prufer sequence).
inline LabeledTree sample_uniform_labeled(int n, Rng& rng) {
    if (n < 1) throw std::invalid_argument("sample_uniform_labeled needs n >= 1");
    if (n == 1) return LabeledTree::single();
    if (n == 2) return LabeledTree(2, {{1, 2}});
    std::vector<int> seq(n - 2);
    for (int& x : seq) x = 1 + static_cast<int>(rng.next_below(n));
    return prufer_decode(seq, n);
}

/// Grows a simply generated tree breadth-first, drawing each node's child
/// count independently.  Returns nullopt when the node count would exceed
/// `node_cap` (the partial tree is discarded).
inline std::optional<OrderedTree> sample_sgt(const ChildrenDistribution& dist, Rng& rng,
                                             int node_cap = 1 << 20) {
    std::vector<std::vector<int>> kids;
    kids.emplace_back();
    std::size_t head = 0;
    while (head < kids.size()) {
        int c = dist.sample(rng);
        if (kids.size() + c > static_cast<std::size_t>(node_cap)) return std::nullopt;
        for (int j = 0; j < c; ++j) {
            kids[head].push_back(static_cast<int>(kids.size()));
            kids.emplace_back();
        }
        ++head;
    }
    return OrderedTree::from_children(kids, 0);
}

/// P(t) under the SGT model: product of pmf over all child counts; 0 when
/// some count lies outside the support.
inline double sgt_tree_probability(const ChildrenDistribution& dist, const OrderedTree& t) {
    double p = 1.0;
    for (int c : t.child_counts()) {
        double q = dist.pmf(c);
        if (q == 0.0) return 0.0;
        p *= q;
    }
    return p;
}

/// log2 P(t); -inf never occurs for trees drawn from the model.
inline double sgt_tree_log2p(const ChildrenDistribution& dist, const OrderedTree& t) {
    double lp = 0.0;
    for (int c : t.child_counts()) lp += std::log2(dist.pmf(c));
    return lp;
}

/// True when some assignment of child counts from the support to exactly n
/// nodes sums to n-1.  Zero is always in the support, so this reduces to an
/// unbounded coin problem: fewest draws reaching n-1 must not exceed n.
inline bool cgw_feasible(const ChildrenDistribution& dist, int n) {
    const int target = n - 1;
    std::vector<int> min_draws(target + 1, -1);
    min_draws[0] = 0;
    for (int s = 1; s <= target; ++s) {
        int best = -1;
        for (int c : dist.support()) {
            if (c == 0 || c > s || min_draws[s - c] < 0) continue;
            int cand = min_draws[s - c] + 1;
            if (best < 0 || cand < best) best = cand;
        }
        min_draws[s] = best;
    }
    return min_draws[target] >= 0 && min_draws[target] <= n;
}

/// Galton-Watson tree conditioned on having exactly n nodes, by rejection.
/// Returns nullopt when the size is unreachable for the support or when
/// max_rejects draws all miss.
inline std::optional<OrderedTree> sample_cgw(const ChildrenDistribution& dist, int n,
                                             Rng& rng, long max_rejects = 1000000) {
    if (n < 1) throw std::invalid_argument("sample_cgw needs n >= 1");
    if (!cgw_feasible(dist, n)) return std::nullopt;
    for (long attempt = 0; attempt <= max_rejects; ++attempt) {
        auto t = sample_sgt(dist, rng, n);
        if (t && t->n() == n) return t;
    }
    return std::nullopt;
}

/// G(n, p): every unordered pair an independent Bernoulli(p) edge.
/// Skip-sampling: jump between successful pairs with geometric gaps.
inline SimpleGraph sample_er_graph(int n, double p, Rng& rng) {
    if (n < 1) throw std::invalid_argument("sample_er_graph needs n >= 1");
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("p must lie in [0,1]");
    SimpleGraph g(n);
    if (p == 0.0 || n == 1) return g;
    if (p == 1.0) {
        for (int u = 1; u <= n; ++u)
            for (int v = u + 1; v <= n; ++v) g.add_edge(u, v);
        return g;
    }
    const double log_q = std::log1p(-p);
    int u = 1, v = 1;  // current pair; advanced before each test
    while (true) {
        double r = rng.next_double();
        if (r <= 0.0) return g;  // infinite gap
        long gap = 1 + static_cast<long>(std::floor(std::log(r) / log_q));
        while (gap > 0) {
            long row_left = n - v;
            if (gap <= row_left) {
                v += static_cast<int>(gap);
                gap = 0;
            } else {
                gap -= row_left;
                ++u;
                if (u >= n) return g;
                v = u;
            }
        }
        g.add_edge(u, v);
    }
}

/// Uniform spanning tree of a connected graph by Wilson's loop-erased
/// random walks; nullopt when the graph is disconnected.
inline std::optional<LabeledTree> sample_uniform_spanning_tree(const SimpleGraph& g,
                                                              Rng& rng) {
    const int n = g.n();
    if (!g.connected()) return std::nullopt;
    if (n == 1) return LabeledTree::single();
    std::vector<bool> in_tree(n + 1, false);
    std::vector<int> nxt(n + 1, 0);
    in_tree[1] = true;
    std::vector<std::pair<int, int>> edges;
    edges.reserve(n - 1);
    for (int v = 2; v <= n; ++v) {
        if (in_tree[v]) continue;
        int u = v;
        while (!in_tree[u]) {
            const auto& nb = g.neighbors(u);
            nxt[u] = nb[rng.next_below(nb.size())];
            u = nxt[u];
        }
        u = v;
        while (!in_tree[u]) {
            in_tree[u] = true;
            edges.push_back({u, nxt[u]});
            u = nxt[u];
        }
    }
    return LabeledTree(n, std::move(edges));
}

/// Two-stage ER spanning-tree source: draw G(n,p) until connected, then a
/// uniform spanning tree of it.  nullopt when max_retries graphs in a row
/// are disconnected.
inline std::optional<LabeledTree> sample_er_spanning(int n, double p, Rng& rng,
                                                     long max_retries = 1000000) {
    if (n < 1) throw std::invalid_argument("sample_er_spanning needs n >= 1");
    if (p <= 0.0 && n > 1) throw std::invalid_argument("p must be positive");
    for (long attempt = 0; attempt <= max_retries; ++attempt) {
        SimpleGraph g = sample_er_graph(n, p, rng);
        if (!g.connected()) continue;
        return sample_uniform_spanning_tree(g, rng);
    }
    return std::nullopt;
}

}  // namespace arboret

#pragma once

#include <algorithm>
#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "arboret/errors.hpp"
#include "arboret/ordered_tree.hpp"

namespace arboret {

class DisjointSets {
public:
    explicit DisjointSets(int n) : parent_(n), size_(n, 1) {
        for (int i = 0; i < n; ++i) parent_[i] = i;
    }

    int find(int x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    /// Returns false if x and y were already in the same set.
    bool unite(int x, int y) {
        x = find(x);
        y = find(y);
        if (x == y) return false;
        if (size_[x] < size_[y]) std::swap(x, y);
        parent_[y] = x;
        size_[x] += size_[y];
        return true;
    }

private:
    std::vector<int> parent_;
    std::vector<int> size_;
};

/// Tree on labels 1..n stored as a normalized edge list: each edge has
/// u < v and the list is sorted lexicographically.
class LabeledTree {
public:
    static LabeledTree single() { return LabeledTree(1, {}); }

    LabeledTree(int n, std::vector<std::pair<int, int>> edges)
        : n_(n), edges_(std::move(edges)) {
        if (n_ < 1) throw std::invalid_argument("tree needs at least one node");
        if (edges_.size() + 1 != static_cast<std::size_t>(n_))
            throw std::invalid_argument("tree must have n-1 edges");
        DisjointSets dsu(n_);
        for (auto& [u, v] : edges_) {
            if (u < 1 || u > n_ || v < 1 || v > n_ || u == v)
                throw std::invalid_argument("edge endpoints out of range");
            if (u > v) std::swap(u, v);
            if (!dsu.unite(u - 1, v - 1))
                throw std::invalid_argument("edges contain a cycle");
        }
        std::sort(edges_.begin(), edges_.end());
    }

    int n() const { return n_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    /// Neighbor lists indexed by label (entry 0 unused), ascending.
    std::vector<std::vector<int>> adjacency() const {
        std::vector<std::vector<int>> adj(n_ + 1);
        for (auto [u, v] : edges_) {
            adj[u].push_back(v);
            adj[v].push_back(u);
        }
        for (auto& a : adj) std::sort(a.begin(), a.end());
        return adj;
    }

    /// Shape obtained by rooting at label 1 and ordering children by label.
    OrderedTree rooted_shape() const {
        auto adj = adjacency();
        std::vector<std::vector<int>> kids(n_);
        std::vector<int> queue{1};
        std::vector<bool> seen(n_ + 1, false);
        seen[1] = true;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int u = queue[head];
            for (int w : adj[u]) {
                if (seen[w]) continue;
                seen[w] = true;
                kids[u - 1].push_back(w - 1);
                queue.push_back(w);
            }
        }
        return OrderedTree::from_children(kids, 0);
    }

    bool operator==(const LabeledTree& o) const {
        return n_ == o.n_ && edges_ == o.edges_;
    }
    bool operator!=(const LabeledTree& o) const { return !(*this == o); }

    /// Compact canonical key ("u-v,u-v,...") for frequency counting.
    std::string key() const {
        std::string s = std::to_string(n_) + ":";
        for (auto [u, v] : edges_)
            s += std::to_string(u) + "-" + std::to_string(v) + ",";
        return s;
    }

private:
    int n_;
    std::vector<std::pair<int, int>> edges_;
};

/// Simple undirected graph on labels 1..n.
class SimpleGraph {
public:
    explicit SimpleGraph(int n) : n_(n), adj_(n + 1) {
        if (n < 1) throw std::invalid_argument("graph needs at least one node");
    }

    SimpleGraph(int n, const std::vector<std::pair<int, int>>& edges)
        : SimpleGraph(n) {
        for (auto [u, v] : edges) add_edge(u, v);
    }

    static SimpleGraph complete(int n) {
        SimpleGraph g(n);
        for (int u = 1; u <= n; ++u)
            for (int v = u + 1; v <= n; ++v) g.add_edge(u, v);
        return g;
    }

    static SimpleGraph from_tree(const LabeledTree& t) {
        return SimpleGraph(t.n(), t.edges());
    }

    void add_edge(int u, int v) {
        if (u < 1 || u > n_ || v < 1 || v > n_ || u == v)
            throw std::invalid_argument("edge endpoints out of range");
        if (u > v) std::swap(u, v);
        if (!edges_.insert({u, v}).second) return;
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }

    bool has_edge(int u, int v) const {
        if (u > v) std::swap(u, v);
        return edges_.count({u, v}) != 0;
    }

    int n() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }

    std::vector<std::pair<int, int>> edge_list() const {
        return {edges_.begin(), edges_.end()};
    }

    const std::vector<int>& neighbors(int u) const { return adj_[u]; }

    bool connected() const {
        if (n_ == 1) return true;
        std::vector<bool> seen(n_ + 1, false);
        std::vector<int> queue{1};
        seen[1] = true;
        int reached = 1;
        for (std::size_t head = 0; head < queue.size(); ++head)
            for (int w : adj_[queue[head]])
                if (!seen[w]) {
                    seen[w] = true;
                    ++reached;
                    queue.push_back(w);
                }
        return reached == n_;
    }

private:
    int n_;
    std::set<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
};

/// Prufer sequence of a labeled tree, length n-2 (empty for n <= 2).
/// Convention: repeatedly delete the smallest-labeled leaf and record its
/// neighbor.
inline std::vector<int> prufer_encode(const LabeledTree& t) {
    const int n = t.n();
    if (n < 2) throw std::invalid_argument("prufer_encode needs n >= 2");
    auto adj = t.adjacency();
    std::vector<int> degree(n + 1, 0);
    for (int v = 1; v <= n; ++v) degree[v] = static_cast<int>(adj[v].size());
    std::vector<bool> removed(n + 1, false);
    std::vector<int> seq;
    seq.reserve(n - 2);
    // Pointer-scan leaf selection: overall O(n) amortized.
    int ptr = 1;
    while (ptr <= n && degree[ptr] != 1) ++ptr;
    int leaf = ptr;
    for (int k = 0; k < n - 2; ++k) {
        int nb = -1;
        for (int w : adj[leaf])
            if (!removed[w]) {
                nb = w;
                break;
            }
        seq.push_back(nb);
        removed[leaf] = true;
        if (--degree[nb] == 1 && nb < ptr) {
            leaf = nb;
        } else {
            while (ptr <= n && (removed[ptr] || degree[ptr] != 1)) ++ptr;
            leaf = ptr;
        }
    }
    return seq;
}

/// Inverse of prufer_encode; `seq` entries must lie in 1..n, n = |seq| + 2.
inline LabeledTree prufer_decode(const std::vector<int>& seq, int n) {
    if (n < 2) throw std::invalid_argument("prufer_decode needs n >= 2");
    if (static_cast<int>(seq.size()) != n - 2)
        throw std::invalid_argument("prufer sequence must have n-2 entries");
    std::vector<int> degree(n + 1, 1);
    for (int x : seq) {
        if (x < 1 || x > n) throw std::invalid_argument("prufer label out of range");
        ++degree[x];
    }
    std::vector<std::pair<int, int>> edges;
    edges.reserve(n - 1);
    int ptr = 1;
    while (degree[ptr] != 1) ++ptr;
    int leaf = ptr;
    for (int x : seq) {
        edges.push_back({leaf, x});
        if (--degree[x] == 1 && x < ptr) {
            leaf = x;
        } else {
            ++ptr;
            while (degree[ptr] != 1) ++ptr;
            leaf = ptr;
        }
    }
    edges.push_back({leaf, n});
    return LabeledTree(n, std::move(edges));
}

/// Text form: one "u v" line per edge, 1-based labels, lexicographic order.
inline std::string edge_list_text(const LabeledTree& t) {
    std::string out;
    for (auto [u, v] : t.edges())
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

/// Parses one edge-list block.  Node count is 1 + edge count unless a larger
/// `n` is given explicitly.
inline LabeledTree parse_edge_list(const std::string& text) {
    std::vector<std::pair<int, int>> edges;
    int maxlabel = 1;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && (text[i] == ' ' || text[i] == '\t' ||
                                   text[i] == '\n' || text[i] == '\r'))
            ++i;
    };
    auto read_int = [&]() -> int {
        std::size_t start = i;
        int val = 0;
        while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
            val = val * 10 + (text[i] - '0');
            ++i;
        }
        if (i == start) throw ParseError("expected a label", i);
        return val;
    };
    skip_ws();
    while (i < text.size()) {
        int u = read_int();
        skip_ws();
        int v = read_int();
        skip_ws();
        edges.push_back({u, v});
        maxlabel = std::max({maxlabel, u, v});
    }
    return LabeledTree(maxlabel, std::move(edges));
}

}  // namespace arboret

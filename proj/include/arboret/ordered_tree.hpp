#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "arboret/errors.hpp"

namespace arboret {

/// Rooted tree with an ordering on each node's children.
///
/// Nodes are identified by their BFS rank: the root is 0 and ids increase
/// level by level, left to right.  Construction renumbers arbitrary input
/// ids into this canonical form, so two OrderedTree values are equal exactly
/// when they are the same ordered tree.  A handy consequence: parent ids are
/// always smaller than child ids.
class OrderedTree {
public:
    /// The one-node tree.
    static OrderedTree single() {
        OrderedTree t;
        t.children_.assign(1, {});
        t.parent_.assign(1, -1);
        return t;
    }

    /// Builds from adjacency-down lists with an arbitrary id scheme.
    /// `children[v]` lists v's children in order; `root` is v's entry point.
    static OrderedTree from_children(const std::vector<std::vector<int>>& children,
                                     int root = 0) {
        const int n = static_cast<int>(children.size());
        if (n == 0 || root < 0 || root >= n)
            throw std::invalid_argument("tree must have a root node");
        std::vector<int> order;
        order.reserve(n);
        std::vector<int> newid(n, -1);
        order.push_back(root);
        newid[root] = 0;
        for (std::size_t head = 0; head < order.size(); ++head) {
            for (int c : children[order[head]]) {
                if (c < 0 || c >= n)
                    throw std::invalid_argument("child id out of range");
                if (newid[c] != -1)
                    throw std::invalid_argument("node has two parents");
                newid[c] = static_cast<int>(order.size());
                order.push_back(c);
            }
        }
        if (static_cast<int>(order.size()) != n)
            throw std::invalid_argument("unreachable nodes in tree input");
        OrderedTree t;
        t.children_.assign(n, {});
        t.parent_.assign(n, -1);
        for (int v = 0; v < n; ++v) {
            int old = order[v];
            t.children_[v].reserve(children[old].size());
            for (int c : children[old]) {
                t.children_[v].push_back(newid[c]);
                t.parent_[newid[c]] = v;
            }
        }
        return t;
    }

    int n() const { return static_cast<int>(children_.size()); }

    int parent(int v) const { return parent_[v]; }

    const std::vector<int>& children(int v) const { return children_[v]; }

    int leaf_count() const {
        int l = 0;
        for (const auto& c : children_)
            if (c.empty()) ++l;
        return l;
    }

    /// Child counts indexed by BFS rank (node ids are BFS ranks already).
    std::vector<int> child_counts() const {
        std::vector<int> out(children_.size());
        for (std::size_t v = 0; v < children_.size(); ++v)
            out[v] = static_cast<int>(children_[v].size());
        return out;
    }

    /// Depth of every node; root has depth 0.
    std::vector<int> depths() const {
        std::vector<int> d(children_.size(), 0);
        for (int v = 1; v < n(); ++v) d[v] = d[parent_[v]] + 1;
        return d;
    }

    int height() const {
        int h = 0;
        for (int d : depths()) h = std::max(h, d);
        return h;
    }

    /// Number of nodes at each depth, index 0 = root level.
    std::vector<int> level_sizes() const {
        std::vector<int> sizes(height() + 1, 0);
        for (int d : depths()) ++sizes[d];
        return sizes;
    }

    /// Order-insensitive shape key: equal exactly for trees that coincide
    /// after forgetting child order (AHU canonical form).
    std::string unordered_key() const {
        std::vector<std::string> key(children_.size());
        for (int v = n() - 1; v >= 0; --v) {
            std::vector<std::string> parts;
            parts.reserve(children_[v].size());
            for (int c : children_[v]) parts.push_back(std::move(key[c]));
            std::sort(parts.begin(), parts.end());
            std::string k = "(";
            for (const auto& p : parts) k += p;
            k += ")";
            key[v] = std::move(k);
        }
        return key[0];
    }

    bool operator==(const OrderedTree& o) const { return children_ == o.children_; }
    bool operator!=(const OrderedTree& o) const { return !(*this == o); }

private:
    OrderedTree() = default;

    std::vector<std::vector<int>> children_;
    std::vector<int> parent_;
};

/// Parses the nested-parenthesis form: each node is "(" + children + ")".
inline OrderedTree parse_paren(const std::string& text) {
    if (text.empty()) throw ParseError("empty input", 0);
    std::vector<std::vector<int>> kids;
    std::vector<int> stack;
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (c == '(') {
            int id = static_cast<int>(kids.size());
            kids.emplace_back();
            if (!stack.empty())
                kids[stack.back()].push_back(id);
            else if (id != 0)
                throw ParseError("unexpected second root", i);
            stack.push_back(id);
        } else if (c == ')') {
            if (stack.empty()) throw ParseError("unbalanced ')'", i);
            stack.pop_back();
            if (stack.empty() && i + 1 != text.size())
                throw ParseError("trailing characters after root", i + 1);
        } else {
            throw ParseError("unexpected character", i);
        }
    }
    if (!stack.empty()) throw ParseError("unbalanced '('", text.size());
    return OrderedTree::from_children(kids, 0);
}

inline std::string to_paren(const OrderedTree& t) {
    std::vector<std::string> text(t.n());
    for (int v = t.n() - 1; v >= 0; --v) {
        std::string s = "(";
        for (int c : t.children(v)) s += text[c];
        s += ")";
        text[v] = std::move(s);
    }
    return text[0];
}

inline int leaf_count(const OrderedTree& t) { return t.leaf_count(); }

/// Node ids in BFS order.  Ids coincide with BFS ranks by construction, so
/// this is the identity sequence; kept as the named traversal primitive.
inline std::vector<int> bfs_order(const OrderedTree& t) {
    std::vector<int> order(t.n());
    for (int v = 0; v < t.n(); ++v) order[v] = v;
    return order;
}

}  // namespace arboret

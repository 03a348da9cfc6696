#pragma once

#include <vector>

#include "arboret/errors.hpp"
#include "arboret/ordered_tree.hpp"

namespace arboret {

/// Maps an ordered tree with n nodes to a full binary tree with 2n-1 nodes.
///
/// The root contributes a single node; every other node Y contributes a
/// child-node/sibling-node pair.  The pair hangs under the child-node of
/// Y's parent when Y is a first child, otherwise under the sibling-node of
/// Y's left sibling; within a pair the child-node is the left child.  A
/// node's child-node stays a leaf when the node has no children, and its
/// sibling-node stays a leaf when it has no right sibling, so every output
/// node ends up with exactly 0 or 2 children.
inline OrderedTree double_node(const OrderedTree& t) {
    const int n = t.n();
    std::vector<std::vector<int>> kids(2 * n - 1);
    std::vector<int> child_node(n, -1);
    std::vector<int> sibling_node(n, -1);
    int next_id = 0;
    child_node[0] = next_id++;
    for (int v = 0; v < n; ++v) {
        const auto& c = t.children(v);
        for (std::size_t j = 0; j < c.size(); ++j) {
            int y = c[j];
            int anchor = (j == 0) ? child_node[v] : sibling_node[c[j - 1]];
            child_node[y] = next_id++;
            sibling_node[y] = next_id++;
            kids[anchor].push_back(child_node[y]);
            kids[anchor].push_back(sibling_node[y]);
        }
    }
    return OrderedTree::from_children(kids, 0);
}

/// Inverse of double_node.  Throws DecodeError when the input is not a full
/// binary tree (some node with exactly one child) or has even node count.
inline OrderedTree double_node_inverse(const OrderedTree& b) {
    const int m = b.n();
    if (m % 2 == 0) throw DecodeError("not_full_binary: even node count");
    for (int v = 0; v < m; ++v)
        if (b.children(v).size() != 0 && b.children(v).size() != 2)
            throw DecodeError("not_full_binary: node with one child");
    const int n = (m + 1) / 2;
    std::vector<std::vector<int>> kids(n);
    std::vector<int> par(n, -1);
    // Walk the binary tree reinterpreting left edges as "first child" and
    // right edges as "next sibling".  Stack holds (binary anchor, original
    // node whose list the anchor extends, sibling flag).  Pushing the left
    // anchor first makes the right spine pop first, so each sibling chain is
    // appended to its parent's child list in order.
    struct Item {
        int anchor;
        int orig;
        bool sibling_of;  // anchor is a sibling-node of `orig`
    };
    int next_orig = 0;
    int root_orig = next_orig++;
    std::vector<Item> stack{{0, root_orig, false}};
    while (!stack.empty()) {
        Item it = stack.back();
        stack.pop_back();
        if (b.children(it.anchor).empty()) continue;
        int left = b.children(it.anchor)[0];
        int right = b.children(it.anchor)[1];
        // The pair under this anchor introduces one original node.
        int y = next_orig++;
        int parent = it.sibling_of ? par[it.orig] : it.orig;
        par[y] = parent;
        kids[parent].push_back(y);
        stack.push_back({left, y, false});
        stack.push_back({right, y, true});
    }
    return OrderedTree::from_children(kids, 0);
}

}  // namespace arboret

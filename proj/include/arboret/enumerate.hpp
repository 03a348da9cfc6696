#pragma once

#include <gmpxx.h>

#include <functional>
#include <stdexcept>
#include <vector>

#include "arboret/labeled.hpp"
#include "arboret/ordered_tree.hpp"

namespace arboret {

/// C_m = (2m choose m)/(m+1); C_0 = 1.
inline mpz_class catalan(int m) {
    if (m < 0) throw std::invalid_argument("catalan index must be >= 0");
    mpz_class c = 1;
    for (int i = 1; i <= m; ++i) {
        c *= 2 * (2 * i - 1);
        mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), i + 1);
    }
    return c;
}

/// Number of distinct unordered rooted trees on n nodes
/// (1, 1, 2, 4, 9, 20, 48, 115, ...), by the Euler-transform recurrence
///   a(n+1) = (1/n) * sum_{k=1..n} ( sum_{d|k} d*a(d) ) * a(n-k+1).
inline mpz_class count_unordered(int n) {
    if (n < 1) throw std::invalid_argument("count_unordered needs n >= 1");
    std::vector<mpz_class> a(n + 1);
    a[1] = 1;
    std::vector<mpz_class> b(n + 1);  // b[k] = sum_{d|k} d*a(d)
    for (int m = 1; m < n; ++m) {
        // a(1..m) known; extend b to index m, then compute a(m+1).
        b[m] = 0;
        for (int d = 1; d <= m; ++d)
            if (m % d == 0) b[m] += d * a[d];
        mpz_class s = 0;
        for (int k = 1; k <= m; ++k) s += b[k] * a[m - k + 1];
        mpz_divexact_ui(s.get_mpz_t(), s.get_mpz_t(), m);
        a[m + 1] = s;
    }
    return a[n];
}

/// Cayley's count of labeled (unrooted) trees, n^{n-2}; 1 for n in {1,2}.
inline mpz_class count_labeled(int n) {
    if (n < 1) throw std::invalid_argument("count_labeled needs n >= 1");
    if (n <= 2) return 1;
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), n, n - 2);
    return r;
}

/// Calls `fn` once per ordered rooted tree with n nodes (C_{n-1} trees).
inline void enumerate_ordered(int n, const std::function<void(const OrderedTree&)>& fn,
                              int cap = 16) {
    if (n < 1) throw std::invalid_argument("enumerate_ordered needs n >= 1");
    if (n > cap) throw std::invalid_argument("enumerate_ordered: n exceeds cap");
    // Depth-first construction: at each step either open a new child of the
    // current node or close the current node, i.e. generate Dyck words.
    std::vector<std::vector<int>> kids;
    std::vector<int> stack;
    std::function<void()> step = [&] {
        int used = static_cast<int>(kids.size());
        if (stack.empty()) {
            fn(OrderedTree::from_children(kids, 0));
            return;
        }
        if (used < n) {
            int id = used;
            kids.emplace_back();
            kids[stack.back()].push_back(id);
            stack.push_back(id);
            step();
            stack.pop_back();
            kids[stack.back()].pop_back();
            kids.pop_back();
        }
        // Closing is allowed unless unopened nodes could never be attached,
        // which cannot happen: any remaining node can attach to an ancestor
        // still on the stack or to the root's later children.  The only real
        // constraint is that the root closes last.
        if (static_cast<int>(stack.size()) > 1 || used == n) {
            int top = stack.back();
            stack.pop_back();
            step();
            stack.push_back(top);
        }
    };
    kids.emplace_back();
    stack.push_back(0);
    step();
}

/// Calls `fn` once per unordered rooted tree on n nodes, presented as the
/// canonical ordered representative (lexicographically maximal level
/// sequence), using the Beyer-Hedetniemi successor rule.
inline void enumerate_unordered(int n, const std::function<void(const OrderedTree&)>& fn,
                                int cap = 16) {
    if (n < 1) throw std::invalid_argument("enumerate_unordered needs n >= 1");
    if (n > cap) throw std::invalid_argument("enumerate_unordered: n exceeds cap");
    auto emit = [&](const std::vector<int>& level) {
        std::vector<std::vector<int>> kids(n);
        std::vector<int> last_at_depth(n + 2, -1);
        for (int i = 0; i < n; ++i) {
            if (i > 0) kids[last_at_depth[level[i] - 1]].push_back(i);
            last_at_depth[level[i]] = i;
        }
        fn(OrderedTree::from_children(kids, 0));
    };
    std::vector<int> level(n);
    for (int i = 0; i < n; ++i) level[i] = i + 1;  // the path
    while (true) {
        emit(level);
        int p = -1;
        for (int i = n - 1; i >= 0; --i)
            if (level[i] > 2) {
                p = i;
                break;
            }
        if (p < 0) break;
        int q = -1;
        for (int i = p - 1; i >= 0; --i)
            if (level[i] == level[p] - 1) {
                q = i;
                break;
            }
        for (int i = p; i < n; ++i) level[i] = level[i - (p - q)];
    }
}

/// Calls `fn` once per labeled tree on n nodes via all n^{n-2} Prufer
/// sequences (n <= cap; counts grow fast).
inline void enumerate_labeled(int n, const std::function<void(const LabeledTree&)>& fn,
                              int cap = 9) {
    if (n < 1) throw std::invalid_argument("enumerate_labeled needs n >= 1");
    if (n > cap) throw std::invalid_argument("enumerate_labeled: n exceeds cap");
    if (n == 1) {
        fn(LabeledTree::single());
        return;
    }
    if (n == 2) {
        fn(LabeledTree(2, {{1, 2}}));
        return;
    }
    std::vector<int> seq(n - 2, 1);
    while (true) {
        fn(prufer_decode(seq, n));
        int i = n - 3;
        while (i >= 0 && seq[i] == n) {
            seq[i] = 1;
            --i;
        }
        if (i < 0) break;
        ++seq[i];
    }
}

}  // namespace arboret

#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "arboret/bitstring.hpp"
#include "arboret/dist.hpp"
#include "arboret/errors.hpp"
#include "arboret/frame.hpp"
#include "arboret/labeled.hpp"
#include "arboret/lz.hpp"
#include "arboret/ordered_tree.hpp"

namespace arboret {

// ---------------------------------------------------------------------------
// SGT sequence: child counts in BFS order.  The map is a bijection between
// ordered trees and sequences whose total is length-1 with every proper
// prefix sum >= its length (a valid BFS profile); leaves are the zeros, so
// a concatenated stream of trees is self-delimiting.
// ---------------------------------------------------------------------------

inline SymbolSequence sgt_sequence(const OrderedTree& t) {
    SymbolSequence s;
    s.symbols = t.child_counts();
    int maxc = 0;
    for (int c : s.symbols) maxc = std::max(maxc, c);
    s.alphabet = std::max(2, maxc + 1);
    return s;
}

inline OrderedTree sgt_sequence_inverse(const std::vector<int>& symbols) {
    const std::size_t n = symbols.size();
    if (n == 0) throw DecodeError("empty sequence is not a tree");
    long sum = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (symbols[i] < 0) throw DecodeError("negative child count");
        sum += symbols[i];
        if (i + 1 < n && sum < static_cast<long>(i) + 1)
            throw DecodeError("invalid BFS profile: ran out of nodes");
    }
    if (sum != static_cast<long>(n) - 1)
        throw DecodeError("invalid BFS profile: child counts sum to " + std::to_string(sum) +
                          ", want " + std::to_string(n - 1));
    std::vector<std::vector<int>> kids(n);
    int next = 1;
    for (std::size_t v = 0; v < n; ++v)
        for (int j = 0; j < symbols[v]; ++j) kids[v].push_back(next++);
    return OrderedTree::from_children(kids, 0);
}

inline OrderedTree sgt_sequence_inverse(const SymbolSequence& s) {
    return sgt_sequence_inverse(s.symbols);
}

/// Splits a concatenation of SGT sequences at tree boundaries (where the
/// running expected-node count is exhausted).
inline std::vector<std::vector<int>> sgt_sequence_split(const std::vector<int>& symbols) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    long need = 1;
    for (int x : symbols) {
        if (x < 0) throw DecodeError("negative child count");
        cur.push_back(x);
        need += x - 1;
        if (need == 0) {
            out.push_back(std::move(cur));
            cur.clear();
            need = 1;
        }
    }
    if (!cur.empty()) throw DecodeError("trailing partial tree");
    return out;
}

// ---------------------------------------------------------------------------
// SGT + LZW pipeline (frame codec id 5).  The payload stores the alphabet
// bound K in its first 8 bits, then the LZW stream.
// ---------------------------------------------------------------------------

inline CodecFrame compress_sgt(const OrderedTree& t, int K) {
    if (K < 2 || K > 255) throw std::invalid_argument("alphabet bound K must be in [2, 255]");
    SymbolSequence s = sgt_sequence(t);
    for (int c : s.symbols)
        if (c >= K) throw std::invalid_argument("child count " + std::to_string(c) +
                                                " not below alphabet bound " + std::to_string(K));
    s.alphabet = K;
    CodecFrame f;
    f.codec = CodecId::sgt_lzw;
    f.node_count = static_cast<std::uint32_t>(t.n());
    f.payload.append_bits(static_cast<std::uint64_t>(K), 8);
    f.payload.append(lzw_encode(s));
    return f;
}

inline OrderedTree decompress_sgt_frame(const CodecFrame& f) {
    if (f.codec != CodecId::sgt_lzw) throw FrameError("not an sgt-lzw frame");
    if (f.payload.size() < 8) throw DecodeError("payload too short for alphabet byte");
    BitReader r(f.payload);
    int K = static_cast<int>(r.read_bits(8));
    if (K < 2) throw DecodeError("bad alphabet bound");
    BitString rest;
    while (!r.exhausted()) rest.push_back(r.read_bit());
    OrderedTree t = sgt_sequence_inverse(lzw_decode(rest, K));
    if (static_cast<std::uint32_t>(t.n()) != f.node_count)
        throw FrameError("node count disagrees with payload");
    return t;
}

// ---------------------------------------------------------------------------
// Bit extraction for labeled trees.  Nodes are processed in BFS order from
// node 1 (children in ascending label order).  The current node emits one
// adjacency bit for each still-undiscovered node in ascending label order;
// a 1 attaches that node.  Pairs with both endpoints already in the revealed
// component are never emitted, so exactly n-1 ones appear in total.
// ---------------------------------------------------------------------------

struct ExtractionTrace {
    std::vector<std::pair<int, int>> pairs;  // (u, w) in emission order
    std::vector<long> per_node;              // bits emitted by the i-th processed node
    long total = 0;
};

namespace detail {

inline BitString bit_extract_core(const LabeledTree& t, ExtractionTrace* trace) {
    const int n = t.n();
    auto adj = t.adjacency();
    BitString bits;
    // Doubly linked list over undiscovered labels, ascending.
    std::vector<int> nxt(n + 2), prv(n + 2);
    for (int v = 1; v <= n + 1; ++v) {
        nxt[v] = v + 1;
        prv[v] = v - 1;
    }
    int head = 2;  // node 1 starts discovered
    auto remove = [&](int v) {
        if (v == head) head = nxt[v];
        nxt[prv[v]] = nxt[v];
        prv[nxt[v]] = prv[v];
    };
    std::vector<char> is_neighbor(n + 1, 0);
    std::vector<int> queue{1};
    std::size_t qpos = 0;
    while (qpos < queue.size()) {
        int u = queue[qpos++];
        for (int w : adj[u]) is_neighbor[w] = 1;
        long emitted = 0;
        for (int w = head; w <= n; w = nxt[w]) {
            bool edge = is_neighbor[w];
            bits.push_back(edge);
            if (trace) trace->pairs.emplace_back(u, w);
            ++emitted;
            if (edge) {
                remove(w);
                queue.push_back(w);
            }
        }
        for (int w : adj[u]) is_neighbor[w] = 0;
        if (trace) {
            trace->per_node.push_back(emitted);
            trace->total += emitted;
        }
    }
    return bits;
}

}  // namespace detail

inline std::pair<BitString, ExtractionTrace> bit_extract(const LabeledTree& t) {
    ExtractionTrace trace;
    BitString bits = detail::bit_extract_core(t, &trace);
    return {std::move(bits), std::move(trace)};
}

/// Extraction bits only; skips the trace bookkeeping (the pair list is
/// quadratic in n for sparse trees, which matters at measurement scale).
inline BitString bit_extract_bits(const LabeledTree& t) {
    return detail::bit_extract_core(t, nullptr);
}

inline LabeledTree bit_extract_inverse(const BitString& bits, int n) {
    if (n < 1) throw std::invalid_argument("need n >= 1");
    std::vector<int> nxt(n + 2), prv(n + 2);
    for (int v = 1; v <= n + 1; ++v) {
        nxt[v] = v + 1;
        prv[v] = v - 1;
    }
    int head = 2;
    auto remove = [&](int v) {
        if (v == head) head = nxt[v];
        nxt[prv[v]] = nxt[v];
        prv[nxt[v]] = prv[v];
    };
    std::vector<std::pair<int, int>> edges;
    std::vector<int> queue{1};
    std::size_t qpos = 0;
    std::size_t i = 0;
    while (qpos < queue.size()) {
        int u = queue[qpos++];
        for (int w = head; w <= n; w = nxt[w]) {
            if (i == bits.size()) throw DecodeError("bit stream ends mid-extraction");
            if (bits.bit(i++)) {
                edges.emplace_back(u, w);
                remove(w);
                queue.push_back(w);
            }
        }
    }
    if (head <= n) throw DecodeError("bits do not describe a spanning tree");
    if (i != bits.size()) throw DecodeError("trailing bits after extraction");
    return LabeledTree(n, std::move(edges));
}

// ---------------------------------------------------------------------------
// ER spanning tree + LZ78 pipeline (frame codec id 6).
// ---------------------------------------------------------------------------

inline CodecFrame compress_er_tree(const LabeledTree& t) {
    CodecFrame f;
    f.codec = CodecId::er_lz78;
    f.node_count = static_cast<std::uint32_t>(t.n());
    f.payload = lz78_encode(bit_extract_bits(t)).bits;
    return f;
}

inline LabeledTree decompress_er_frame(const CodecFrame& f) {
    if (f.codec != CodecId::er_lz78) throw FrameError("not an er-lz78 frame");
    SymbolSequence s = lz78_decode(f.payload, 2);
    BitString bits;
    for (int v : s.symbols) bits.push_back(v != 0);
    return bit_extract_inverse(bits, static_cast<int>(f.node_count));
}

// ---------------------------------------------------------------------------
// Expected extracted-bit count h(n) under the independence approximation:
// E[A_1] = n-1, E[A_i] = (1-p) E[A_{i-1}] - 1 + p, summed over the n nodes.
// ---------------------------------------------------------------------------

inline double expected_extracted_bits(long n, double p) {
    if (n < 2) throw std::invalid_argument("need n >= 2");
    if (!(p > 0.0) || p > 1.0) throw std::invalid_argument("need 0 < p <= 1");
    const long double q = 1.0L - static_cast<long double>(p);
    const long double pl = static_cast<long double>(p);
    const long double qn = std::pow(q, static_cast<long double>(n));
    const long double geo = (1.0L - qn) / pl;  // sum of q^0..q^{n-1}
    long double h = (static_cast<long double>(n) - 1.0L) * geo -
                    (q / pl) * (static_cast<long double>(n) - geo);
    return static_cast<double>(h);
}

/// Same quantity by iterating the recursion; cross-check oracle.
inline double expected_extracted_bits_recursive(long n, double p) {
    if (n < 2) throw std::invalid_argument("need n >= 2");
    if (!(p > 0.0) || p > 1.0) throw std::invalid_argument("need 0 < p <= 1");
    long double a = static_cast<long double>(n) - 1.0L;
    long double sum = a;
    for (long i = 2; i <= n; ++i) {
        a = (1.0L - static_cast<long double>(p)) * a - 1.0L + static_cast<long double>(p);
        sum += a;
    }
    return static_cast<double>(sum);
}

// ---------------------------------------------------------------------------
// Redundancy bound formulas (leading terms only; the O(.) remainders are
// not computable constants).
// ---------------------------------------------------------------------------

/// Per-symbol LZ78 redundancy leading term ln(ln l)/ln l.
inline double lz78_redundancy_bound(long l) {
    if (l < 3) throw std::invalid_argument("need l >= 3");
    double lnl = std::log(static_cast<double>(l));
    return std::log(lnl) / lnl;
}

/// Upper bound on the average per-symbol redundancy of LZW over a single
/// SGT's child-count sequence.  C_alpha is the Savari constant for the
/// alphabet; it defaults to the alphabet size.
inline double sgt_redundancy_bound(const ChildrenDistribution& dist, double c_alpha) {
    const double hc = dist.entropy_bits();
    if (!(hc > 0.0)) throw std::domain_error("children distribution is degenerate (H_C = 0)");
    if (!(c_alpha > 0.0)) throw std::invalid_argument("need C_alpha > 0");
    const double p0 = dist.p0();
    const double log2e = 1.4426950408889634;
    const double K = log2e * std::log2(c_alpha * log2e / hc);
    const double lp0 = std::log2(p0);
    return K * (p0 - lp0 - 1.0) - lp0 + 1.0 / p0 + p0 * (1.0 + lp0 + std::log2(c_alpha)) - 2.0;
}

inline double sgt_redundancy_bound(const ChildrenDistribution& dist) {
    return sgt_redundancy_bound(dist, static_cast<double>(dist.max_support() + 1));
}

}  // namespace arboret

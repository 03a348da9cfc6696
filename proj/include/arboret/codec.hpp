#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "arboret/bitstring.hpp"
#include "arboret/errors.hpp"
#include "arboret/ordered_tree.hpp"

namespace arboret {

// ---------------------------------------------------------------------------
// Pit-climbing (PC)
//
// Traversal from the leftmost leaf; one UP per climb to a new node, one
// UPSEEN per climb to an already-visited node, one FALL per descent to the
// leftmost leaf of the next unexplored subtree.  Equivalent recursive
// grammar over a node with subtrees T1..Tk:
//   k = 0:  (empty)
//   k = 1:  code(T1) UP
//   k >= 2: code(T1) UP FALL code(T2) { UPSEEN FALL code(Ti) } UPSEEN
// Bits: UP -> 1, FALL -> 0, UPSEEN -> 00.
//
// The ternary code is uniquely decodable; the bit-level code is NOT.  The
// smallest collision is n = 5: "(()(())())" and "(()(()()))" both map to
// 10100000, because ...UPSEEN FALL(leaf)... and ...FALL(chain) UPSEEN...
// read identically as zeros.  pc_decode therefore returns one well-defined
// preimage: at each ambiguous zero it prefers the FALL reading whenever a
// complete parse remains possible.
// ---------------------------------------------------------------------------

inline TernaryCode pc_ternary(const OrderedTree& t) {
    TernaryCode code{TernaryKind::PC, {}};
    struct Frame {
        int v;
        std::size_t idx;
    };
    std::vector<Frame> stack{{0, 0}};
    while (!stack.empty()) {
        Frame& f = stack.back();
        const auto& kids = t.children(f.v);
        if (f.idx < kids.size()) {
            if (f.idx == 1) {
                code.symbols.push_back(TernaryCode::UP);
                code.symbols.push_back(TernaryCode::FALL);
            } else if (f.idx >= 2) {
                code.symbols.push_back(TernaryCode::UPSEEN);
                code.symbols.push_back(TernaryCode::FALL);
            }
            int child = kids[f.idx];
            ++f.idx;
            stack.push_back({child, 0});
        } else {
            if (kids.size() == 1)
                code.symbols.push_back(TernaryCode::UP);
            else if (kids.size() >= 2)
                code.symbols.push_back(TernaryCode::UPSEEN);
            stack.pop_back();
        }
    }
    return code;
}

inline BitString pc_binarize(const TernaryCode& code) {
    if (code.kind != TernaryKind::PC)
        throw std::invalid_argument("expected a PC-kind ternary code");
    BitString b;
    for (std::uint8_t s : code.symbols) {
        switch (s) {
            case TernaryCode::UP: b.push_back(true); break;
            case TernaryCode::FALL: b.push_back(false); break;
            default:
                b.push_back(false);
                b.push_back(false);
        }
    }
    return b;
}

inline BitString pc_encode(const OrderedTree& t) { return pc_binarize(pc_ternary(t)); }

/// n + 2l - 3 bits for n >= 2; the single-node tree has the empty code.
inline long pc_length(long n, long l) {
    if (n < 1 || l < 1) throw std::invalid_argument("need n >= 1, l >= 1");
    if (l > n) throw std::invalid_argument("leaf count cannot exceed node count");
    if (n == 1) return 0;
    return n + 2 * l - 3;
}

/// Deterministic parse of a PC *ternary* code (this direction is uniquely
/// decodable).
inline OrderedTree pc_ternary_decode(const TernaryCode& code) {
    if (code.kind != TernaryKind::PC)
        throw std::invalid_argument("expected a PC-kind ternary code");
    std::vector<std::vector<int>> kids;
    auto new_node = [&kids] {
        kids.emplace_back();
        return static_cast<int>(kids.size()) - 1;
    };
    int current = new_node();
    std::vector<int> stack;
    bool after_fall = true;  // start state behaves like "just fell": a leaf in hand
    for (std::uint8_t s : code.symbols) {
        switch (s) {
            case TernaryCode::UP: {
                int p = new_node();
                kids[p].push_back(current);
                current = p;
                after_fall = false;
                break;
            }
            case TernaryCode::FALL: {
                if (after_fall) throw DecodeError("two consecutive falls");
                stack.push_back(current);
                current = new_node();
                after_fall = true;
                break;
            }
            default: {
                if (stack.empty()) throw DecodeError("climb with no fall to match");
                kids[stack.back()].push_back(current);
                current = stack.back();
                stack.pop_back();
                after_fall = false;
            }
        }
    }
    if (!stack.empty()) throw DecodeError("unclosed fall");
    if (after_fall && code.symbols.size() > 0) throw DecodeError("code ends on a fall");
    return OrderedTree::from_children(kids, current);
}

namespace detail {

/// Can the suffix of `b` starting at bit i complete a PC parse, given stack
/// depth s and whether the parser just fell (must climb next)?  Forced moves
/// are followed iteratively; only "free zero" states (where FALL and UPSEEN
/// compete) branch, and those are memoized.
class PcFeasibility {
public:
    explicit PcFeasibility(const BitString& b) : b_(b) {}

    bool feasible(std::size_t i, std::size_t s, bool must_climb) {
        while (true) {
            if (i == b_.size()) return s == 0 && !must_climb;
            if (b_.bit(i)) {  // UP
                ++i;
                must_climb = false;
                continue;
            }
            if (must_climb) {  // only UPSEEN fits
                if (s == 0 || i + 1 >= b_.size() || b_.bit(i + 1)) return false;
                i += 2;
                --s;
                must_climb = false;
                continue;
            }
            // Free zero: FALL vs UPSEEN.
            std::uint64_t key = (static_cast<std::uint64_t>(i) << 32) | s;
            auto it = memo_.find(key);
            if (it != memo_.end()) return it->second;
            bool ok = feasible(i + 1, s + 1, true);
            if (!ok && s >= 1 && i + 1 < b_.size() && !b_.bit(i + 1))
                ok = feasible(i + 2, s - 1, false);
            memo_.emplace(key, ok);
            return ok;
        }
    }

private:
    const BitString& b_;
    std::unordered_map<std::uint64_t, bool> memo_;
};

}  // namespace detail

/// Parses a PC bit string into one of its preimages (the unique one when the
/// string is unambiguous).  Throws DecodeError when no tree has this code.
inline OrderedTree pc_decode(const BitString& b) {
    if (b.empty()) return OrderedTree::single();
    detail::PcFeasibility oracle(b);
    if (!oracle.feasible(0, 0, true)) throw DecodeError("not a pit-climbing code");
    std::vector<std::vector<int>> kids;
    auto new_node = [&kids] {
        kids.emplace_back();
        return static_cast<int>(kids.size()) - 1;
    };
    int current = new_node();
    std::vector<int> stack;
    std::size_t i = 0;
    bool must_climb = true;
    while (i < b.size()) {
        if (b.bit(i)) {  // UP
            int p = new_node();
            kids[p].push_back(current);
            current = p;
            ++i;
            must_climb = false;
            continue;
        }
        if (!must_climb && oracle.feasible(i + 1, stack.size() + 1, true)) {  // FALL
            stack.push_back(current);
            current = new_node();
            ++i;
            must_climb = true;
            continue;
        }
        // UPSEEN
        if (stack.empty() || i + 1 >= b.size() || b.bit(i + 1))
            throw DecodeError("not a pit-climbing code");
        kids[stack.back()].push_back(current);
        current = stack.back();
        stack.pop_back();
        i += 2;
        must_climb = false;
    }
    return OrderedTree::from_children(kids, current);
}

// ---------------------------------------------------------------------------
// Tunnel-digging (TD)
//
// Non-root nodes in BFS order, one LEAF/NONLEAF symbol each, with a TUNNEL
// between consecutive nodes whose parents differ.  Bits: LEAF -> 1,
// NONLEAF -> 00, TUNNEL -> 0.  The bit form collides (see the X/Z pair in
// the tests), so the ternary form is the lossless unit and frames pack it
// at 2 bits per symbol; td_bits serves length accounting.
// ---------------------------------------------------------------------------

inline TernaryCode td_encode(const OrderedTree& t) {
    TernaryCode code{TernaryKind::TD, {}};
    for (int v = 1; v < t.n(); ++v) {
        if (v > 1 && t.parent(v) != t.parent(v - 1))
            code.symbols.push_back(TernaryCode::TUNNEL);
        code.symbols.push_back(t.children(v).empty() ? TernaryCode::LEAF
                                                     : TernaryCode::NONLEAF);
    }
    return code;
}

inline OrderedTree td_decode(const TernaryCode& code) {
    if (code.kind != TernaryKind::TD)
        throw std::invalid_argument("expected a TD-kind ternary code");
    if (code.symbols.empty()) return OrderedTree::single();
    std::vector<std::vector<int>> kids{{}};
    std::vector<int> pending{0};  // nodes awaiting their child group, BFS order
    std::size_t next_parent = 0;
    std::size_t i = 0;
    const auto& sym = code.symbols;
    while (i < sym.size()) {
        if (next_parent == pending.size()) throw DecodeError("symbols after last group");
        int parent = pending[next_parent++];
        bool group_empty = true;
        while (i < sym.size() && sym[i] != TernaryCode::TUNNEL) {
            int id = static_cast<int>(kids.size());
            kids.emplace_back();
            kids[parent].push_back(id);
            if (sym[i] == TernaryCode::NONLEAF) pending.push_back(id);
            group_empty = false;
            ++i;
        }
        if (group_empty) throw DecodeError("empty group");
        if (i < sym.size()) {
            ++i;  // consume the tunnel
            if (i == sym.size()) throw DecodeError("trailing tunnel");
        }
    }
    if (next_parent != pending.size()) throw DecodeError("missing child group");
    return OrderedTree::from_children(kids, 0);
}

inline BitString td_bits(const TernaryCode& code) {
    if (code.kind != TernaryKind::TD)
        throw std::invalid_argument("expected a TD-kind ternary code");
    BitString b;
    for (std::uint8_t s : code.symbols) {
        switch (s) {
            case TernaryCode::LEAF: b.push_back(true); break;
            case TernaryCode::TUNNEL: b.push_back(false); break;
            default:
                b.push_back(false);
                b.push_back(false);
        }
    }
    return b;
}

/// 3n - 2l - 3 bits for n >= 2; 0 for the single-node tree.
inline long td_length(long n, long l) {
    if (n < 1 || l < 1) throw std::invalid_argument("need n >= 1, l >= 1");
    if (l > n) throw std::invalid_argument("leaf count cannot exceed node count");
    if (n == 1) return 0;
    return 3 * n - 2 * l - 3;
}

// ---------------------------------------------------------------------------
// TreeExplorer: PC when l < n/2, TD otherwise (ties to TD), with a one-bit
// method prefix.  The accounting form concatenates the raw bit codes; the
// frame payload form keeps the TD branch as packed ternary so that decoding
// is well defined.
// ---------------------------------------------------------------------------

inline bool treeexplorer_picks_pc(const OrderedTree& t) {
    return 2 * t.leaf_count() < t.n();
}

inline BitString treeexplorer_encode(const OrderedTree& t) {
    BitString b;
    if (treeexplorer_picks_pc(t)) {
        b.push_back(false);
        b.append(pc_encode(t));
    } else {
        b.push_back(true);
        b.append(td_bits(td_encode(t)));
    }
    return b;
}

inline BitString treeexplorer_payload(const OrderedTree& t) {
    BitString b;
    if (treeexplorer_picks_pc(t)) {
        b.push_back(false);
        b.append(pc_encode(t));
    } else {
        b.push_back(true);
        b.append(td_encode(t).packed());
    }
    return b;
}

inline OrderedTree treeexplorer_decode(const BitString& b) {
    if (b.empty()) throw DecodeError("empty TreeExplorer code");
    BitString rest;
    for (std::size_t i = 1; i < b.size(); ++i) rest.push_back(b.bit(i));
    if (!b.bit(0)) return pc_decode(rest);
    return td_decode(TernaryCode::unpacked(TernaryKind::TD, rest));
}

// ---------------------------------------------------------------------------
// Newick structural text: every internal node is "(" + children + ")" with
// comma separators, leaves are empty, no trailing semicolon.  Costed at
// 2 bits per structural character.
// ---------------------------------------------------------------------------

inline std::string newick_emit(const OrderedTree& t) {
    std::vector<std::string> text(t.n());
    for (int v = t.n() - 1; v >= 0; --v) {
        if (t.children(v).empty()) continue;  // leaf stays empty
        std::string s = "(";
        const auto& kids = t.children(v);
        for (std::size_t j = 0; j < kids.size(); ++j) {
            if (j > 0) s += ",";
            s += text[kids[j]];
        }
        s += ")";
        text[v] = std::move(s);
    }
    return text[0];
}

inline OrderedTree newick_parse(const std::string& s) {
    if (s.empty()) return OrderedTree::single();
    std::vector<std::vector<int>> kids;
    std::size_t pos = 0;
    std::function<int()> parse_node = [&]() -> int {
        int id = static_cast<int>(kids.size());
        kids.emplace_back();
        if (pos < s.size() && s[pos] == '(') {
            ++pos;
            while (true) {
                int child = parse_node();  // may grow kids; index after the call
                kids[id].push_back(child);
                if (pos >= s.size()) throw ParseError("unterminated '('", pos);
                if (s[pos] == ',') {
                    ++pos;
                    continue;
                }
                if (s[pos] == ')') {
                    ++pos;
                    break;
                }
                throw ParseError("expected ',' or ')'", pos);
            }
        }
        return id;
    };
    int root = parse_node();
    if (pos != s.size()) throw ParseError("trailing characters", pos);
    return OrderedTree::from_children(kids, root);
}

/// 2 bits per structural character: 4n - 2l - 2 for n >= 2, 0 for n = 1.
inline long newick_cost(const OrderedTree& t) {
    if (t.n() == 1) return 0;
    return 4L * t.n() - 2L * t.leaf_count() - 2;
}

// ---------------------------------------------------------------------------
// Fixed-width baselines.
// ---------------------------------------------------------------------------

inline int ceil_log2(long n) {
    if (n < 1) throw std::invalid_argument("need n >= 1");
    int w = 0;
    while ((1L << w) < n) ++w;
    return w;
}

/// Adjacency-list cost, 2n ceil(log2 n) bits.
inline long adjlist_cost(long n) { return 2 * n * ceil_log2(n); }

/// Extra cost of naming n labels: n ceil(log2 n) bits.
inline long label_overhead(long n) { return n * ceil_log2(n); }

}  // namespace arboret

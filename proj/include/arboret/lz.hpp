#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "arboret/bitstring.hpp"
#include "arboret/codec.hpp"
#include "arboret/errors.hpp"

namespace arboret {

struct SymbolSequence {
    int alphabet = 2;
    std::vector<int> symbols;

    void validate() const {
        if (alphabet < 2) throw std::invalid_argument("alphabet size must be >= 2");
        for (int s : symbols)
            if (s < 0 || s >= alphabet)
                throw std::invalid_argument("symbol outside alphabet");
    }

    bool operator==(const SymbolSequence& o) const {
        return alphabet == o.alphabet && symbols == o.symbols;
    }
};

namespace detail {

/// Insertion-ordered prefix-closed phrase trie; node 0 is the empty phrase.
/// Small alphabets get a flat per-node child array (binary extraction streams
/// run to millions of symbols, so child lookup must be O(1) there).
class PhraseTrie {
public:
    explicit PhraseTrie(int alphabet) : flat_(alphabet <= kFlatMax ? alphabet : 0) {
        parent_.push_back(-1);
        via_.push_back(-1);
        if (flat_) kids_.assign(static_cast<std::size_t>(flat_), -1);
    }

    int child(int node, int symbol) const {
        if (flat_) return kids_[static_cast<std::size_t>(node) * flat_ + symbol];
        auto it = edges_.find({node, symbol});
        return it == edges_.end() ? -1 : it->second;
    }

    int insert(int node, int symbol) {
        int id = static_cast<int>(parent_.size());
        parent_.push_back(node);
        via_.push_back(symbol);
        if (flat_) {
            kids_.resize(kids_.size() + static_cast<std::size_t>(flat_), -1);
            kids_[static_cast<std::size_t>(node) * flat_ + symbol] = id;
        } else {
            edges_.emplace(std::pair<int, int>{node, symbol}, id);
        }
        return id;
    }

    int parent(int node) const { return parent_[node]; }
    int last_symbol(int node) const { return via_[node]; }
    int size() const { return static_cast<int>(parent_.size()); }

    std::vector<int> phrase(int node) const {
        std::vector<int> out;
        for (int v = node; v != 0; v = parent_[v]) out.push_back(via_[v]);
        std::reverse(out.begin(), out.end());
        return out;
    }

private:
    static constexpr int kFlatMax = 8;
    int flat_;  // alphabet size when the flat child array is in use, else 0
    std::vector<int> parent_;
    std::vector<int> via_;
    std::vector<std::int32_t> kids_;
    std::map<std::pair<int, int>, int> edges_;
};

}  // namespace detail

struct Lz78Result {
    BitString bits;
    long phrases = 0;
};

// ---------------------------------------------------------------------------
// LZ78.  Phrase j (1-indexed) is sent as ceil(log2 j) index bits naming its
// longest proper prefix among phrases 0..j-1 (0 = empty phrase) followed by
// ceil(log2 A) bits for the extending symbol.  A final partial phrase (input
// ended inside a known phrase) is sent as a 1-flag plus index only; the
// decoder recognizes it because exactly 1 + ceil(log2 j) bits remain, which
// no full unit can occupy while the symbol field is 2+ bits wide.  For A = 2
// the symbol field is 1 bit and that length test would be ambiguous, so the
// partial phrase p is sent instead as the full unit (parent(p), last symbol
// of p): same bit cost, uniform decoding.
// ---------------------------------------------------------------------------

namespace detail {

template <class SymbolAt>
Lz78Result lz78_encode_core(std::size_t length, int alphabet, SymbolAt at) {
    const int sym_width = ceil_log2(alphabet);
    PhraseTrie trie(alphabet);
    Lz78Result out;
    int node = 0;
    for (std::size_t i = 0; i < length; ++i) {
        int sym = at(i);
        int next = trie.child(node, sym);
        if (next >= 0) {
            node = next;
            continue;
        }
        ++out.phrases;
        out.bits.append_bits(static_cast<std::uint64_t>(node), ceil_log2(out.phrases));
        out.bits.append_bits(static_cast<std::uint64_t>(sym), sym_width);
        trie.insert(node, sym);
        node = 0;
    }
    if (node != 0) {  // final partial phrase
        ++out.phrases;
        if (sym_width >= 2) {
            out.bits.push_back(true);
            out.bits.append_bits(static_cast<std::uint64_t>(node), ceil_log2(out.phrases));
        } else {
            out.bits.append_bits(static_cast<std::uint64_t>(trie.parent(node)),
                                 ceil_log2(out.phrases));
            out.bits.append_bits(static_cast<std::uint64_t>(trie.last_symbol(node)), sym_width);
        }
    }
    return out;
}

}  // namespace detail

inline Lz78Result lz78_encode(const SymbolSequence& s) {
    s.validate();
    return detail::lz78_encode_core(s.symbols.size(), s.alphabet,
                                    [&](std::size_t i) { return s.symbols[i]; });
}

/// Binary LZ78 straight off a bit stream, without widening to int symbols.
inline Lz78Result lz78_encode(const BitString& bits) {
    return detail::lz78_encode_core(bits.size(), 2,
                                    [&](std::size_t i) { return bits.bit(i) ? 1 : 0; });
}

inline SymbolSequence lz78_decode(const BitString& bits, int alphabet) {
    if (alphabet < 2) throw std::invalid_argument("alphabet size must be >= 2");
    const int sym_width = ceil_log2(alphabet);
    detail::PhraseTrie trie(alphabet);
    SymbolSequence out;
    out.alphabet = alphabet;
    BitReader r(bits);
    long count = 0;
    while (!r.exhausted()) {
        int w = ceil_log2(count + 1);  // index width for the next phrase
        if (sym_width >= 2 && r.remaining() == static_cast<std::size_t>(1 + w)) {
            if (!r.read_bit()) throw DecodeError("bad partial-phrase flag");
            int idx = static_cast<int>(r.read_bits(w));
            if (idx < 1 || idx >= trie.size()) throw DecodeError("partial index out of range");
            for (int v : trie.phrase(idx)) out.symbols.push_back(v);
            break;
        }
        if (r.remaining() < static_cast<std::size_t>(w + sym_width))
            throw DecodeError("truncated phrase unit");
        int idx = static_cast<int>(r.read_bits(w));
        if (idx >= trie.size()) throw DecodeError("phrase index out of range");
        int sym = static_cast<int>(r.read_bits(sym_width));
        if (sym >= alphabet) throw DecodeError("symbol outside alphabet");
        for (int v : trie.phrase(idx)) out.symbols.push_back(v);
        out.symbols.push_back(sym);
        trie.insert(idx, sym);
        ++count;
    }
    return out;
}

// ---------------------------------------------------------------------------
// LZW.  Table starts as the alphabet; each emission uses the current code
// width ceil(log2(table size)) and then inserts current-string + next-symbol
// (so emission k has width ceil(log2(A + k - 1))).  No reset, no EOF code:
// the payload bit length delimits the stream.
// ---------------------------------------------------------------------------

inline BitString lzw_encode(const SymbolSequence& s) {
    s.validate();
    const int A = s.alphabet;
    detail::PhraseTrie trie(A);
    std::vector<int> code_of{-1};  // trie node -> table code (root has none)
    for (int a = 0; a < A; ++a) {
        trie.insert(0, a);
        code_of.push_back(a);
    }
    long table = A;
    BitString out;
    int node = 0;
    for (int sym : s.symbols) {
        int next = trie.child(node, sym);
        if (next >= 0) {
            node = next;
            continue;
        }
        out.append_bits(static_cast<std::uint64_t>(code_of[node]), ceil_log2(table));
        trie.insert(node, sym);
        code_of.push_back(static_cast<int>(table));
        ++table;
        node = trie.child(0, sym);
    }
    if (node != 0) out.append_bits(static_cast<std::uint64_t>(code_of[node]), ceil_log2(table));
    return out;
}

inline SymbolSequence lzw_decode(const BitString& bits, int alphabet) {
    if (alphabet < 2) throw std::invalid_argument("alphabet size must be >= 2");
    SymbolSequence out;
    out.alphabet = alphabet;
    std::vector<std::vector<int>> table(alphabet);
    for (int a = 0; a < alphabet; ++a) table[a] = {a};
    BitReader r(bits);
    std::vector<int> prev;
    while (!r.exhausted()) {
        int width = ceil_log2(static_cast<long>(table.size()) + (prev.empty() ? 0 : 1));
        if (r.remaining() < static_cast<std::size_t>(width))
            throw DecodeError("truncated code");
        int code = static_cast<int>(r.read_bits(width));
        std::vector<int> cur;
        if (code < static_cast<int>(table.size())) {
            cur = table[code];
        } else if (code == static_cast<int>(table.size()) && !prev.empty()) {
            cur = prev;  // the entry being defined by this very emission
            cur.push_back(prev[0]);
        } else {
            throw DecodeError("code out of range");
        }
        if (!prev.empty()) {
            std::vector<int> entry = prev;
            entry.push_back(cur[0]);
            table.push_back(std::move(entry));
        }
        out.symbols.insert(out.symbols.end(), cur.begin(), cur.end());
        prev = std::move(cur);
    }
    return out;
}

}  // namespace arboret

#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "arboret/bitstring.hpp"
#include "arboret/codec.hpp"
#include "arboret/errors.hpp"
#include "arboret/ordered_tree.hpp"

namespace arboret {

enum class CodecId : std::uint8_t {
    pc = 0,
    td_ternary = 1,
    treeexplorer = 2,
    adjlist = 3,
    newick = 4,
    sgt_lzw = 5,
    er_lz78 = 6,
};

inline const char* codec_name(CodecId id) {
    switch (id) {
        case CodecId::pc: return "pc";
        case CodecId::td_ternary: return "td";
        case CodecId::treeexplorer: return "treeexplorer";
        case CodecId::adjlist: return "adjlist";
        case CodecId::newick: return "newick";
        case CodecId::sgt_lzw: return "sgt-lzw";
        case CodecId::er_lz78: return "er-lz78";
    }
    return "?";
}

/// Bit-exact container for encoded trees: magic "ATC1", codec id byte,
/// node count (LE32), payload bit length (LE32), payload bytes packed
/// most-significant-bit first and zero-padded to a byte boundary.
struct CodecFrame {
    CodecId codec;
    std::uint32_t node_count = 0;
    BitString payload;

    static constexpr char MAGIC[4] = {'A', 'T', 'C', '1'};

    std::vector<std::uint8_t> pack() const {
        std::vector<std::uint8_t> out;
        out.reserve(13 + payload.bytes().size());
        for (char c : MAGIC) out.push_back(static_cast<std::uint8_t>(c));
        out.push_back(static_cast<std::uint8_t>(codec));
        auto le32 = [&out](std::uint32_t v) {
            for (int i = 0; i < 4; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
        };
        le32(node_count);
        le32(static_cast<std::uint32_t>(payload.size()));
        const auto& pb = payload.bytes();
        out.insert(out.end(), pb.begin(), pb.end());
        return out;
    }

    static CodecFrame unpack(const std::vector<std::uint8_t>& bytes) {
        if (bytes.size() < 13) throw FrameError("frame truncated: header needs 13 bytes");
        for (int i = 0; i < 4; ++i)
            if (bytes[i] != static_cast<std::uint8_t>(MAGIC[i]))
                throw FrameError("bad magic");
        if (bytes[4] > 6) throw FrameError("unknown codec id " + std::to_string(bytes[4]));
        auto le32 = [&bytes](std::size_t at) {
            std::uint32_t v = 0;
            for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(bytes[at + i]) << (8 * i);
            return v;
        };
        CodecFrame f;
        f.codec = static_cast<CodecId>(bytes[4]);
        f.node_count = le32(5);
        std::uint32_t nbits = le32(9);
        std::size_t nbytes = (nbits + 7) / 8;
        if (bytes.size() != 13 + nbytes)
            throw FrameError("payload byte count does not match bit length");
        std::vector<std::uint8_t> pb(bytes.begin() + 13, bytes.end());
        if (nbits % 8 != 0 && !pb.empty() &&
            (pb.back() & static_cast<std::uint8_t>(0xFF >> (nbits % 8))) != 0)
            throw FrameError("nonzero padding bits");
        f.payload = BitString::from_bytes(std::move(pb), nbits);
        return f;
    }
};

/// Wraps an ordered tree with one of the lossless structural codecs
/// (pc, td_ternary, treeexplorer).
inline CodecFrame encode_tree(const OrderedTree& t, CodecId codec) {
    CodecFrame f;
    f.codec = codec;
    f.node_count = static_cast<std::uint32_t>(t.n());
    switch (codec) {
        case CodecId::pc: f.payload = pc_encode(t); break;
        case CodecId::td_ternary: f.payload = td_encode(t).packed(); break;
        case CodecId::treeexplorer: f.payload = treeexplorer_payload(t); break;
        default:
            throw std::invalid_argument("codec does not encode a bare ordered tree");
    }
    return f;
}

inline OrderedTree decode_tree(const CodecFrame& f) {
    OrderedTree t = OrderedTree::single();
    switch (f.codec) {
        case CodecId::pc: t = pc_decode(f.payload); break;
        case CodecId::td_ternary:
            t = td_decode(TernaryCode::unpacked(TernaryKind::TD, f.payload));
            break;
        case CodecId::treeexplorer: t = treeexplorer_decode(f.payload); break;
        case CodecId::adjlist:
        case CodecId::newick:
            throw FrameError("accounting-only codec has no decoder");
        default:
            throw FrameError("frame is not a bare ordered-tree encoding");
    }
    if (static_cast<std::uint32_t>(t.n()) != f.node_count)
        throw FrameError("node count disagrees with payload");
    return t;
}

}  // namespace arboret

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "arboret/errors.hpp"

namespace arboret {

/// Bit sequence stored most-significant-bit-first inside each byte, which is
/// exactly the CodecFrame payload layout.
class BitString {
public:
    BitString() = default;

    static BitString from_string01(const std::string& s) {
        BitString b;
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (s[i] != '0' && s[i] != '1') throw ParseError("expected '0' or '1'", i);
            b.push_back(s[i] == '1');
        }
        return b;
    }

    /// Reinterprets packed bytes; `nbits` trailing-padding-aware length.
    static BitString from_bytes(std::vector<std::uint8_t> bytes, std::size_t nbits) {
        if (nbits > 8 * bytes.size())
            throw FrameError("bit length exceeds payload bytes");
        if (bytes.size() * 8 >= nbits + 8)
            throw FrameError("payload has excess bytes");
        BitString b;
        b.bytes_ = std::move(bytes);
        b.nbits_ = nbits;
        // Zero any padding bits so equality is structural.
        if (nbits % 8 != 0 && !b.bytes_.empty())
            b.bytes_.back() &= static_cast<std::uint8_t>(0xFF << (8 - nbits % 8));
        return b;
    }

    void push_back(bool bit) {
        if (nbits_ % 8 == 0) bytes_.push_back(0);
        if (bit) bytes_.back() |= static_cast<std::uint8_t>(1u << (7 - nbits_ % 8));
        ++nbits_;
    }

    /// Appends `width` bits of `value`, most significant first.
    void append_bits(std::uint64_t value, int width) {
        for (int i = width - 1; i >= 0; --i) push_back((value >> i) & 1u);
    }

    void append(const BitString& other) {
        for (std::size_t i = 0; i < other.size(); ++i) push_back(other.bit(i));
    }

    bool bit(std::size_t i) const {
        return (bytes_[i / 8] >> (7 - i % 8)) & 1u;
    }

    std::size_t size() const { return nbits_; }
    bool empty() const { return nbits_ == 0; }

    const std::vector<std::uint8_t>& bytes() const { return bytes_; }

    std::string to_string01() const {
        std::string s;
        s.reserve(nbits_);
        for (std::size_t i = 0; i < nbits_; ++i) s += bit(i) ? '1' : '0';
        return s;
    }

    bool operator==(const BitString& o) const {
        return nbits_ == o.nbits_ && bytes_ == o.bytes_;
    }
    bool operator!=(const BitString& o) const { return !(*this == o); }

private:
    std::vector<std::uint8_t> bytes_;
    std::size_t nbits_ = 0;
};

/// Sequential reader over a BitString; overruns raise DecodeError.
class BitReader {
public:
    explicit BitReader(const BitString& bits) : bits_(bits) {}

    bool read_bit() {
        if (pos_ >= bits_.size()) throw DecodeError("bit stream exhausted");
        return bits_.bit(pos_++);
    }

    std::uint64_t read_bits(int width) {
        std::uint64_t v = 0;
        for (int i = 0; i < width; ++i) v = (v << 1) | (read_bit() ? 1u : 0u);
        return v;
    }

    std::size_t remaining() const { return bits_.size() - pos_; }
    std::size_t position() const { return pos_; }
    bool exhausted() const { return pos_ == bits_.size(); }

private:
    const BitString& bits_;
    std::size_t pos_ = 0;
};

/// Three-symbol code, either in the parenthesis-coding sense (UP / UPSEEN /
/// FALL) or the top-down sense (LEAF / NONLEAF / TUNNEL).
enum class TernaryKind { PC, TD };

struct TernaryCode {
    // PC meaning:        TD meaning:
    static constexpr std::uint8_t UP = 0;       // LEAF
    static constexpr std::uint8_t UPSEEN = 1;   // NONLEAF
    static constexpr std::uint8_t FALL = 2;     // TUNNEL
    static constexpr std::uint8_t LEAF = 0;
    static constexpr std::uint8_t NONLEAF = 1;
    static constexpr std::uint8_t TUNNEL = 2;

    TernaryKind kind;
    std::vector<std::uint8_t> symbols;

    bool operator==(const TernaryCode& o) const {
        return kind == o.kind && symbols == o.symbols;
    }

    /// 2-bit-per-symbol packing used inside CodecFrames.
    BitString packed() const {
        BitString b;
        for (std::uint8_t s : symbols) b.append_bits(s, 2);
        return b;
    }

    static TernaryCode unpacked(TernaryKind kind, const BitString& b) {
        if (b.size() % 2 != 0) throw DecodeError("odd packed ternary length");
        TernaryCode c{kind, {}};
        c.symbols.reserve(b.size() / 2);
        BitReader r(b);
        while (!r.exhausted()) {
            auto s = static_cast<std::uint8_t>(r.read_bits(2));
            if (s > 2) throw DecodeError("invalid ternary symbol");
            c.symbols.push_back(s);
        }
        return c;
    }
};

}  // namespace arboret

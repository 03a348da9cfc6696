#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace arboret {

/// Malformed textual input (parenthesis trees, Newick, distribution files).
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " (offset " + std::to_string(offset) + ")"),
          offset_(offset) {}
    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

/// A bit/symbol stream that cannot be the output of the matching encoder.
class DecodeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Corrupt or truncated CodecFrame container.
class FrameError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace arboret

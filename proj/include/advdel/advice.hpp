#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace advdel {

/// Number of bits in the binary representation of value (0 for 0).
int bit_length(std::uint64_t value);
/// Smallest w with 2^w >= value; 0 for value <= 1.
int ceil_log2(std::uint64_t value);

/// Length of the self-delimiting code of value: 2 * bit_length(value) + 1.
std::size_t self_delimiting_length(std::uint64_t value);

/// L ones, a zero, then value in L bits (big-endian), L = bit_length(value).
std::vector<bool> encode_self_delimiting(std::uint64_t value);

/// Append-only advice bit sequence written by an advisor.
class AdviceTape {
public:
    AdviceTape() = default;
    explicit AdviceTape(std::vector<bool> bits) : bits_(std::move(bits)) {}

    void write_bit(bool b) { bits_.push_back(b); }
    /// Big-endian fixed-width field. Throws std::overflow_error if value >= 2^width.
    void write_fixed(std::uint64_t value, int width);
    void write_self_delimiting(std::uint64_t value);

    std::size_t size() const noexcept { return bits_.size(); }
    bool operator[](std::size_t i) const { return bits_[i]; }
    const std::vector<bool> &bits() const noexcept { return bits_; }

    /// "0"/"1" characters, for tests and diagnostics.
    std::string to_bit_string() const;
    static AdviceTape from_bit_string(std::string_view bits);

    bool operator==(const AdviceTape &) const = default;

private:
    std::vector<bool> bits_;
};

/// "<bit length> <hex payload>", payload bytes MSB-first, zero padded.
std::string serialize_tape(const AdviceTape &tape);
AdviceTape parse_tape(std::string_view text);

/// Sequential reader over a tape. Reads past the written end return filler
/// bits from a generator seeded with `filler_seed`, mimicking a tape that
/// starts out random.
class AdviceReader {
public:
    explicit AdviceReader(const AdviceTape &tape, std::uint64_t filler_seed = 0);

    bool read_bit();
    std::uint64_t read_fixed(int width);
    /// Throws AdviceError on a malformed or non-canonical prefix.
    std::uint64_t read_self_delimiting();

    std::size_t bits_read() const noexcept { return position_; }
    /// Bits read beyond what the advisor wrote.
    std::size_t filler_bits_read() const noexcept;

private:
    const AdviceTape *tape_;
    std::size_t position_ = 0;
    std::mt19937_64 filler_;
};

}  // namespace advdel

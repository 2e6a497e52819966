#include "advdel/advice.hpp"

#include <bit>
#include <charconv>
#include <stdexcept>

#include "advdel/errors.hpp"

namespace advdel {

int bit_length(std::uint64_t value) { return static_cast<int>(std::bit_width(value)); }

int ceil_log2(std::uint64_t value) { return value <= 1 ? 0 : bit_length(value - 1); }

std::size_t self_delimiting_length(std::uint64_t value) { return 2 * static_cast<std::size_t>(bit_length(value)) + 1; }

std::vector<bool> encode_self_delimiting(std::uint64_t value)
{
    const int length = bit_length(value);
    std::vector<bool> out(length, true);
    out.push_back(false);
    for (int i = length - 1; i >= 0; --i)
        out.push_back((value >> i) & 1U);
    return out;
}

void AdviceTape::write_fixed(std::uint64_t value, int width)
{
    if (width < 0 || width > 64)
        throw std::invalid_argument("field width must be in 0..64");
    if (width < 64 && value >> width)
        throw std::overflow_error("value " + std::to_string(value) + " does not fit in " + std::to_string(width) +
                                  " bits");
    for (int i = width - 1; i >= 0; --i)
        bits_.push_back((value >> i) & 1U);
}

void AdviceTape::write_self_delimiting(std::uint64_t value)
{
    for (bool b : encode_self_delimiting(value))
        bits_.push_back(b);
}

std::string AdviceTape::to_bit_string() const
{
    std::string s;
    s.reserve(bits_.size());
    for (bool b : bits_)
        s.push_back(b ? '1' : '0');
    return s;
}

AdviceTape AdviceTape::from_bit_string(std::string_view bits)
{
    std::vector<bool> out;
    for (char c : bits) {
        if (c != '0' && c != '1')
            throw ParseError("bit string may only contain 0 and 1");
        out.push_back(c == '1');
    }
    return AdviceTape(std::move(out));
}

std::string serialize_tape(const AdviceTape &tape)
{
    static constexpr char kHex[] = "0123456789abcdef";
    std::string out = std::to_string(tape.size());
    if (tape.size() == 0)
        return out;
    out.push_back(' ');
    for (std::size_t byte = 0; byte * 8 < tape.size(); ++byte) {
        unsigned value = 0;
        for (std::size_t i = 0; i < 8; ++i) {
            const std::size_t pos = byte * 8 + i;
            value = (value << 1) | (pos < tape.size() && tape[pos] ? 1U : 0U);
        }
        out.push_back(kHex[value >> 4]);
        out.push_back(kHex[value & 15U]);
    }
    return out;
}

AdviceTape parse_tape(std::string_view text)
{
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' '))
        text.remove_suffix(1);
    const auto space = text.find(' ');
    const std::string_view length_part = text.substr(0, space);
    std::size_t length = 0;
    const auto [ptr, ec] = std::from_chars(length_part.data(), length_part.data() + length_part.size(), length);
    if (ec != std::errc{} || ptr != length_part.data() + length_part.size())
        throw ParseError("tape must start with its bit length");
    const std::string_view hex = space == std::string_view::npos ? std::string_view{} : text.substr(space + 1);
    if (hex.size() != 2 * ((length + 7) / 8))
        throw ParseError("tape payload has wrong number of hex digits for " + std::to_string(length) + " bits");
    std::vector<bool> bits;
    bits.reserve(length);
    for (std::size_t i = 0; i < hex.size(); ++i) {
        const char c = hex[i];
        unsigned nibble = 0;
        if (c >= '0' && c <= '9')
            nibble = static_cast<unsigned>(c - '0');
        else if (c >= 'a' && c <= 'f')
            nibble = static_cast<unsigned>(c - 'a' + 10);
        else if (c >= 'A' && c <= 'F')
            nibble = static_cast<unsigned>(c - 'A' + 10);
        else
            throw ParseError("invalid hex digit in tape payload");
        for (int b = 3; b >= 0; --b) {
            const std::size_t pos = 4 * i + static_cast<std::size_t>(3 - b);
            const bool value = (nibble >> b) & 1U;
            if (pos < length)
                bits.push_back(value);
            else if (value)
                throw ParseError("tape padding bits must be zero");
        }
    }
    return AdviceTape(std::move(bits));
}

AdviceReader::AdviceReader(const AdviceTape &tape, std::uint64_t filler_seed) : tape_(&tape), filler_(filler_seed) {}

bool AdviceReader::read_bit()
{
    const std::size_t pos = position_++;
    if (pos < tape_->size())
        return (*tape_)[pos];
    return filler_() & 1U;
}

std::uint64_t AdviceReader::read_fixed(int width)
{
    if (width < 0 || width > 64)
        throw std::invalid_argument("field width must be in 0..64");
    std::uint64_t value = 0;
    for (int i = 0; i < width; ++i)
        value = (value << 1) | (read_bit() ? 1U : 0U);
    return value;
}

std::uint64_t AdviceReader::read_self_delimiting()
{
    int length = 0;
    while (read_bit()) {
        if (++length > 64)
            throw AdviceError("self-delimiting length prefix exceeds 64 bits");
    }
    const std::uint64_t value = read_fixed(length);
    if (bit_length(value) != length)
        throw AdviceError("self-delimiting value has a leading zero");
    return value;
}

std::size_t AdviceReader::filler_bits_read() const noexcept
{
    return position_ > tape_->size() ? position_ - tape_->size() : 0;
}

}  // namespace advdel

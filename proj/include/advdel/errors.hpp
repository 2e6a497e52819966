#pragma once

#include <stdexcept>
#include <string>

namespace advdel {

/// A desk-scale search limit (enumeration order, search budget) was exceeded.
class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed graph, tape, manifest or trace text.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Advice that the paired algorithm cannot interpret, or an advisor invariant broke.
class AdviceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An online strategy violated the delayed-deletion protocol.
class EngineError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace advdel

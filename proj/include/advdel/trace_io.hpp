#pragma once

#include <string>
#include <string_view>

#include "advdel/engine.hpp"

namespace advdel {

// Traces are written as JSON lines, one record per line:
//
//   {"type":"start","mode":"node","initial_bits":3}
//   {"type":"step","step":1,"revealed":0,"bits":0,"events":[...]}
//   {"type":"end","deletions":2,"total_bits":9,"deleted":[...]}
//
// An event is {"member":i,"violation":[labels],"deleted":x}; a deleted
// element is a label in node mode and a [u,v] pair in edge mode.
std::string write_trace(const Trace &trace);
/// Throws ParseError on malformed input.
Trace parse_trace(std::string_view text);

}  // namespace advdel

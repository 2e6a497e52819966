#pragma once

#include <filesystem>
#include <string>

#include "advdel/gadgets.hpp"

namespace advdel {

// A family directory holds
//
//   manifest.json     kind, mode, parameter, optimum_size, unique_optimum,
//                     expected_leaves, member list
//   obstruction.txt   graph list of F
//   base.txt          H (or the remainder graph D)
//   member_NNN.txt    one instance per member, reveal order = label order
//
// Each manifest member entry is {"file", "choice", "expected_optimum"}.
void write_family(const Family &family, const std::filesystem::path &dir);
/// Throws ParseError on a malformed manifest or member file.
Family read_family(const std::filesystem::path &dir);

/// ObstructionSet from a graph list file; redundant members are rejected.
ObstructionSet load_obstruction(const std::filesystem::path &path);
std::string write_obstruction(const ObstructionSet &f);

}  // namespace advdel

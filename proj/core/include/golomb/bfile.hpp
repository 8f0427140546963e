#pragma once

// OEIS b-file interchange: one "index value" pair per line, single space,
// indices from 1, every line newline-terminated.

#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

#include "golomb/checked.hpp"

namespace golomb {

void write_bfile(std::ostream& out, std::span<const Value> values);

// Reads a b-file back. Blank lines and '#' comments are skipped; indices must
// run 1, 2, 3, ... without gaps. Throws std::runtime_error on malformed input.
std::vector<Value> read_bfile(std::istream& in);

// "1,3,3" or "1 3 3" -> {1, 3, 3}. Throws std::invalid_argument.
std::vector<Value> parse_value_list(std::string_view text);

}  // namespace golomb

#include "golomb/bfile.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace golomb {

void write_bfile(std::ostream& out, std::span<const Value> values) {
  std::int64_t n = 1;
  for (Value v : values) out << n++ << ' ' << v << '\n';
}

std::vector<Value> read_bfile(std::istream& in) {
  std::vector<Value> out;
  std::string line;
  std::int64_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    std::int64_t index = 0;
    Value value = 0;
    std::string extra;
    if (!(fields >> index >> value) || (fields >> extra)) {
      throw std::runtime_error("b-file line " + std::to_string(lineno) + ": expected \"index value\"");
    }
    if (index != static_cast<std::int64_t>(out.size()) + 1) {
      throw std::runtime_error("b-file line " + std::to_string(lineno) + ": index " +
                               std::to_string(index) + " out of sequence");
    }
    out.push_back(value);
  }
  return out;
}

std::vector<Value> parse_value_list(std::string_view text) {
  const auto is_space = [](char c) { return c == ' ' || c == '\n' || c == '\t' || c == '\r'; };
  std::vector<Value> out;
  std::size_t pos = 0;
  const auto skip_spaces = [&] {
    while (pos < text.size() && is_space(text[pos])) ++pos;
  };
  skip_spaces();
  while (pos < text.size()) {
    Value v = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), v);
    if (ec != std::errc{}) {
      throw std::invalid_argument("bad integer in list near \"" + std::string(text.substr(pos, 16)) + "\"");
    }
    out.push_back(v);
    pos = static_cast<std::size_t>(ptr - text.data());
    if (pos < text.size() && !is_space(text[pos]) && text[pos] != ',') {
      throw std::invalid_argument("bad separator in integer list");
    }
    // A separator is whitespace with at most one comma, and must be followed
    // by another value.
    skip_spaces();
    if (pos < text.size() && text[pos] == ',') {
      ++pos;
      skip_spaces();
      if (pos >= text.size()) throw std::invalid_argument("trailing comma in integer list");
    }
  }
  if (out.empty()) throw std::invalid_argument("empty integer list");
  return out;
}

}  // namespace golomb

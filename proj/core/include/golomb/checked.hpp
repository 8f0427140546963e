#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace golomb {

using Value = std::int64_t;

// Raised by closed-form helpers when an intermediate leaves the int64 range.
class OverflowError : public std::overflow_error {
 public:
  explicit OverflowError(const std::string& what) : std::overflow_error(what) {}
};

namespace checked {

inline std::optional<Value> add(Value a, Value b) {
  Value r;
  if (__builtin_add_overflow(a, b, &r)) return std::nullopt;
  return r;
}

inline std::optional<Value> sub(Value a, Value b) {
  Value r;
  if (__builtin_sub_overflow(a, b, &r)) return std::nullopt;
  return r;
}

inline std::optional<Value> mul(Value a, Value b) {
  Value r;
  if (__builtin_mul_overflow(a, b, &r)) return std::nullopt;
  return r;
}

// Throwing variants for code paths where overflow is reported as OverflowError.
inline Value add_or_throw(Value a, Value b, const char* ctx) {
  if (auto r = add(a, b)) return *r;
  throw OverflowError(std::string("int64 overflow in ") + ctx);
}

inline Value mul_or_throw(Value a, Value b, const char* ctx) {
  if (auto r = mul(a, b)) return *r;
  throw OverflowError(std::string("int64 overflow in ") + ctx);
}

}  // namespace checked
}  // namespace golomb

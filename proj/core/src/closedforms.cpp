#include "golomb/closedforms.hpp"

namespace golomb {

namespace {

using u128 = unsigned __int128;
using i128 = __int128;

// Digit-by-digit binary square root.
u128 isqrt_u128(u128 x) {
  u128 result = 0;
  u128 bit = u128{1} << 126;
  while (bit > x) bit >>= 2;
  while (bit != 0) {
    if (x >= result + bit) {
      x -= result + bit;
      result = (result >> 1) + bit;
    } else {
      result >>= 1;
    }
    bit >>= 2;
  }
  return result;
}

Value narrow(i128 v, const char* ctx) {
  if (v > INT64_MAX || v < INT64_MIN) throw OverflowError(std::string("int64 overflow in ") + ctx);
  return static_cast<Value>(v);
}

void require_params(std::int64_t j, std::int64_t s) {
  if (j < 1) throw std::invalid_argument("j must be >= 1");
  if (s < 0) throw std::invalid_argument("s must be >= 0");
}

i128 p_m_wide(std::int64_t j, std::int64_t s, i128 m) {
  return 1 + (m + 1) * (s + 1) + static_cast<i128>(j) * m * (m + 1) / 2;
}

}  // namespace

IsqrtResult isqrt_exact(std::uint64_t x) {
  const u128 r = isqrt_u128(x);
  return {static_cast<std::uint64_t>(r), r * r == x};
}

std::int64_t freq_lambda1(std::int64_t j, std::int64_t s, Value value) {
  require_params(j, s);
  if (value < 1) throw std::invalid_argument("value must be >= 1");
  if ((value - 1) % j != 0) return 0;
  return checked::add_or_throw(value, s, "frequency");
}

LeafPosition p_m(std::int64_t j, std::int64_t s, std::int64_t m) {
  require_params(j, s);
  if (m < 0) throw std::invalid_argument("m must be >= 0");
  return {m, narrow(p_m_wide(j, s, m), "p_m")};
}

std::int64_t F_of(std::int64_t j, std::int64_t s, std::int64_t n) {
  require_params(j, s);
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (p_m_wide(j, s, 0) > n) return 1;

  // p_m <= n  <=>  j m^2 + (2s + 2 + j) m + 2(s + 2 - n) <= 0; bracket m with
  // the positive root, then correct the rounding.
  const i128 b = 2 * static_cast<i128>(s) + 2 + j;
  const i128 disc = b * b - 4 * static_cast<i128>(j) * 2 * (static_cast<i128>(s) + 2 - n);
  const auto root = static_cast<i128>(isqrt_u128(static_cast<u128>(disc)));
  i128 m = (root - b) / (2 * static_cast<i128>(j));
  if (m < 0) m = 0;
  while (p_m_wide(j, s, m + 1) <= n) ++m;
  while (m > 0 && p_m_wide(j, s, m) > n) --m;
  return narrow(p_m_wide(j, s, m), "F(n)");
}

Value leaf_quadratic_root(std::int64_t j, std::int64_t s, std::int64_t label) {
  require_params(j, s);
  const i128 lin = 2 * static_cast<i128>(s) - j;
  const i128 disc = lin * lin + 4 * (2 * static_cast<i128>(j) * label + 2 * static_cast<i128>(s) + 1 - 3 * static_cast<i128>(j));
  if (disc < 0) throw FormulaInconsistency("negative discriminant at label " + std::to_string(label));
  const u128 root = isqrt_u128(static_cast<u128>(disc));
  if (root * root != static_cast<u128>(disc)) {
    throw FormulaInconsistency("discriminant not a perfect square at label " + std::to_string(label));
  }
  const i128 numerator = -lin + static_cast<i128>(root);
  if (numerator % 2 != 0) {
    throw FormulaInconsistency("odd numerator at label " + std::to_string(label));
  }
  return narrow(numerator / 2, "closed form");
}

Value g_closed_lambda1(std::int64_t j, std::int64_t s, std::int64_t n) {
  const std::int64_t f = F_of(j, s, n);
  // Below the first leaf p_0 only the initial leaf (weight 1) is counted. The
  // quadratic has roots 1 and j-2s-1 there, so the positive root is wrong
  // whenever j > 2s+2.
  if (f == 1) return 1;
  const Value g = leaf_quadratic_root(j, s, f);
  if (g < 1 || (g - 1) % j != 0) {
    throw FormulaInconsistency("closed form gave " + std::to_string(g) + ", not 1 mod j");
  }
  return g;
}

Value golomb_closed(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  const Value eight_n = checked::mul_or_throw(8, n, "8n");
  const auto root = static_cast<Value>(isqrt_exact(static_cast<std::uint64_t>(eight_n)).root);
  return (root + 1) / 2;
}

ReducedParams reduce_params(std::int64_t j, std::int64_t s) {
  if (j < 1) throw std::invalid_argument("j must be >= 1");
  if (s < j) throw std::invalid_argument("parameter reduction needs s >= j");
  ReducedParams rp{.q = s / j, .r = s % j};
  const i128 q = rp.q;
  rp.alpha = narrow(q * (rp.r + 1) + static_cast<i128>(j) * q * (q - 1) / 2, "alpha");
  return rp;
}

Value g_1s1_closed(std::int64_t s, std::int64_t n) {
  if (s < 0) throw std::invalid_argument("s must be >= 0");
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  const i128 binom = static_cast<i128>(s) * (s + 1) / 2;
  const Value shifted = narrow(n + binom, "n + C(s+1,2)");
  return golomb_closed(shifted) - s;
}

}  // namespace golomb

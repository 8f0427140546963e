#pragma once

// Closed forms for the lambda = 1 solutions g_{j,s,1} with tree-derived
// initial conditions. The solution is the run-length sequence
// 1^{s+1}, (j+1)^{s+j+1}, (2j+1)^{s+2j+1}, ...
//
// Everything here is integer arithmetic; no floating point.

#include <cstdint>
#include <stdexcept>
#include <string>

#include "golomb/checked.hpp"

namespace golomb {

// A closed form produced a non-integer or out-of-family value. Never expected
// on valid input; it signals an implementation defect.
class FormulaInconsistency : public std::logic_error {
 public:
  explicit FormulaInconsistency(const std::string& what) : std::logic_error(what) {}
};

struct IsqrtResult {
  std::uint64_t root = 0;
  bool exact = false;

  friend bool operator==(const IsqrtResult&, const IsqrtResult&) = default;
};

// floor(sqrt(x)) and whether x is a perfect square.
IsqrtResult isqrt_exact(std::uint64_t x);

// Number of times `value` occurs in g_{j,s,1}: value+s when value = 1 mod j,
// else 0.
std::int64_t freq_lambda1(std::int64_t j, std::int64_t s, Value value);

struct LeafPosition {
  std::int64_t m = 0;
  std::int64_t p_m = 0;  // label of the (m+1)-th leaf
};

// p_m = 1 + sum_{i=0..m} (s + ij + 1) = 1 + (m+1)(s+1) + j*m(m+1)/2.
LeafPosition p_m(std::int64_t j, std::int64_t s, std::int64_t m);

// F(n) = max({p_m : p_m <= n} u {1}).
std::int64_t F_of(std::int64_t j, std::int64_t s, std::int64_t n);

// Positive root of g^2 + (2s-j)g + (3j-2s-1-2j*label) = 0, i.e.
// ((j-2s) + sqrt((2s-j)^2 + 4(2j*label + 2s + 1 - 3j))) / 2. Throws
// FormulaInconsistency unless the discriminant is a perfect square and the
// numerator even.
Value leaf_quadratic_root(std::int64_t j, std::int64_t s, std::int64_t label);

// g_{j,s,1}(n) = leaf_quadratic_root(F(n)) for F(n) > 1, and 1 when no leaf
// p_m lies at or below n. Result is checked to be = 1 (mod j).
Value g_closed_lambda1(std::int64_t j, std::int64_t s, std::int64_t n);

// Golomb's g_{1,0,1}(n) = floor((floor(sqrt(8n)) + 1) / 2).
Value golomb_closed(std::int64_t n);

struct ReducedParams {
  std::int64_t q = 0;
  std::int64_t r = 0;
  std::int64_t alpha = 0;  // sum_{i=0..q-1} (r + ij + 1)
};

// s = qj + r with 0 <= r < j, so that g_{j,s,1}(n) = g_{j,r,1}(n+alpha) - qj.
// Requires s >= j >= 1.
ReducedParams reduce_params(std::int64_t j, std::int64_t s);

// g_{1,s,1}(n) = floor((floor(sqrt(8(n + C(s+1,2)))) + 1) / 2) - s.
Value g_1s1_closed(std::int64_t s, std::int64_t n);

}  // namespace golomb

#pragma once

// Evaluators for the nested recursion family
//
//   R(n) = sum_{i=1..k} R(n - s - (i-1)j - R(n - ij)) + nu
//
// and its k = 1, nu = lambda*j specialization g_{j,s,lambda}. Sequences are
// 1-indexed; index 0 never exists.

#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "golomb/checked.hpp"

namespace golomb {

struct GeneralParams {
  std::int64_t k = 1;
  std::int64_t j = 1;
  std::int64_t s = 0;
  Value nu = 0;

  // Throws std::invalid_argument unless k >= 1, j >= 1, s >= 0.
  void validate() const;
  friend bool operator==(const GeneralParams&, const GeneralParams&) = default;
};

struct GolombParams {
  std::int64_t j = 1;
  std::int64_t s = 0;
  std::int64_t lambda = 1;

  // Throws std::invalid_argument unless j >= 1, s >= 0, lambda >= 1.
  void validate() const;
  GeneralParams to_general() const;
  friend bool operator==(const GolombParams&, const GolombParams&) = default;
};

std::string to_string(const GeneralParams& p);
std::string to_string(const GolombParams& p);

// Initial segment g(1..L). Immutable after construction.
class InitialConditions {
 public:
  explicit InitialConditions(std::vector<Value> values);

  std::int64_t size() const { return static_cast<std::int64_t>(values_.size()); }
  // 1-indexed access.
  Value operator()(std::int64_t n) const { return values_.at(static_cast<std::size_t>(n - 1)); }
  std::span<const Value> values() const { return values_; }

 private:
  std::vector<Value> values_;
};

enum class Source { Recursion, TreeWeight, ClosedForm };

std::string_view to_string(Source s);

using AnyParams = std::variant<GeneralParams, GolombParams>;

// A finite prefix a(1..N) of an integer sequence together with the engine
// that produced it.
class SequenceBuffer {
 public:
  SequenceBuffer(std::vector<Value> values, AnyParams params, Source source);

  std::int64_t size() const { return static_cast<std::int64_t>(values_.size()); }
  bool empty() const { return values_.empty(); }
  Value operator()(std::int64_t n) const { return values_.at(static_cast<std::size_t>(n - 1)); }
  std::span<const Value> values() const { return values_; }
  const AnyParams& params() const { return params_; }
  Source source() const { return source_; }

 private:
  std::vector<Value> values_;
  AnyParams params_;
  Source source_;
};

enum class EvalErrorKind { ArgumentOutOfRange, Overflow };

// Thrown when the recursion leaves its domain. `partial()` holds every value
// assigned before the failing index, so partial().size() == at() - 1.
class EvalError : public std::runtime_error {
 public:
  EvalError(EvalErrorKind kind, std::int64_t at, Value inner, std::vector<Value> partial);

  EvalErrorKind kind() const { return kind_; }
  std::int64_t at() const { return at_; }
  Value inner() const { return inner_; }
  std::span<const Value> partial() const { return partial_; }

 private:
  EvalErrorKind kind_;
  std::int64_t at_;
  Value inner_;
  std::vector<Value> partial_;
};

// R(1..n_max). Values past the initial segment use only earlier terms, in
// O(k * n_max). Throws EvalError, or std::invalid_argument on bad params.
SequenceBuffer eval_general(const GeneralParams& params, const InitialConditions& init,
                            std::int64_t n_max);

// g(n) = g(n - s - g(n - j)) + lambda*j. Agrees exactly with eval_general on
// (k=1, nu=lambda*j), including the errors raised.
SequenceBuffer eval_golomb(const GolombParams& params, const InitialConditions& init,
                           std::int64_t n_max);

struct FrequencyTable {
  std::map<Value, std::int64_t> entries;
  std::int64_t range_end = 0;  // counts cover indices [1, range_end]

  std::int64_t count(Value v) const;
};

struct SequenceStats {
  bool is_slow = true;
  bool is_monotone = true;
  Value max_step = 0;
  FrequencyTable frequency;
};

SequenceStats analyze(const SequenceBuffer& seq);
FrequencyTable frequency_table(std::span<const Value> values);
std::int64_t frequency_of(const SequenceBuffer& seq, Value value);

}  // namespace golomb

#include "golomb/recurrence.hpp"

#include <sstream>
#include <utility>

namespace golomb {

void GeneralParams::validate() const {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (j < 1) throw std::invalid_argument("j must be >= 1");
  if (s < 0) throw std::invalid_argument("s must be >= 0");
}

void GolombParams::validate() const {
  if (j < 1) throw std::invalid_argument("j must be >= 1");
  if (s < 0) throw std::invalid_argument("s must be >= 0");
  if (lambda < 1) throw std::invalid_argument("lambda must be >= 1");
}

GeneralParams GolombParams::to_general() const {
  return GeneralParams{1, j, s, checked::mul_or_throw(lambda, j, "lambda*j")};
}

std::string to_string(const GeneralParams& p) {
  std::ostringstream os;
  os << "k=" << p.k << " j=" << p.j << " s=" << p.s << " nu=" << p.nu;
  return os.str();
}

std::string to_string(const GolombParams& p) {
  std::ostringstream os;
  os << "j=" << p.j << " s=" << p.s << " lambda=" << p.lambda;
  return os.str();
}

std::string_view to_string(Source s) {
  switch (s) {
    case Source::Recursion: return "recursion";
    case Source::TreeWeight: return "tree";
    case Source::ClosedForm: return "closed";
  }
  return "?";
}

InitialConditions::InitialConditions(std::vector<Value> values) : values_(std::move(values)) {
  if (values_.empty()) throw std::invalid_argument("initial conditions must be non-empty");
}

SequenceBuffer::SequenceBuffer(std::vector<Value> values, AnyParams params, Source source)
    : values_(std::move(values)), params_(params), source_(source) {}

namespace {

std::string describe(EvalErrorKind kind, std::int64_t at, Value inner) {
  std::ostringstream os;
  if (kind == EvalErrorKind::ArgumentOutOfRange) {
    os << "nested argument " << inner << " outside [1, " << at - 1 << "] at n=" << at;
  } else {
    os << "int64 overflow at n=" << at;
  }
  return os.str();
}

std::vector<Value> seed(const InitialConditions& init, std::int64_t n_max) {
  if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
  auto v = init.values();
  auto take = std::min<std::int64_t>(n_max, init.size());
  std::vector<Value> out;
  out.reserve(static_cast<std::size_t>(n_max));
  out.assign(v.begin(), v.begin() + take);
  return out;
}

}  // namespace

EvalError::EvalError(EvalErrorKind kind, std::int64_t at, Value inner, std::vector<Value> partial)
    : std::runtime_error(describe(kind, at, inner)),
      kind_(kind),
      at_(at),
      inner_(inner),
      partial_(std::move(partial)) {}

SequenceBuffer eval_general(const GeneralParams& params, const InitialConditions& init,
                            std::int64_t n_max) {
  params.validate();
  std::vector<Value> r = seed(init, n_max);

  auto fail = [&](EvalErrorKind kind, std::int64_t n, Value inner) -> EvalError {
    return EvalError(kind, n, inner, r);
  };

  for (std::int64_t n = init.size() + 1; n <= n_max; ++n) {
    Value sum = 0;
    for (std::int64_t i = 1; i <= params.k; ++i) {
      // n - ij
      auto ij = checked::mul(i, params.j);
      auto inner = ij ? checked::sub(n, *ij) : std::nullopt;
      if (!inner) throw fail(EvalErrorKind::Overflow, n, 0);
      if (*inner < 1 || *inner > n - 1) throw fail(EvalErrorKind::ArgumentOutOfRange, n, *inner);
      Value nested = r[static_cast<std::size_t>(*inner - 1)];

      // n - s - (i-1)j - R(n - ij)
      auto shift = checked::mul(i - 1, params.j);
      std::optional<Value> outer = checked::sub(n, params.s);
      if (outer && shift) outer = checked::sub(*outer, *shift);
      if (outer) outer = checked::sub(*outer, nested);
      if (!outer || !shift) throw fail(EvalErrorKind::Overflow, n, nested);
      if (*outer < 1 || *outer > n - 1) throw fail(EvalErrorKind::ArgumentOutOfRange, n, *outer);

      auto next = checked::add(sum, r[static_cast<std::size_t>(*outer - 1)]);
      if (!next) throw fail(EvalErrorKind::Overflow, n, *outer);
      sum = *next;
    }
    auto value = checked::add(sum, params.nu);
    if (!value) throw fail(EvalErrorKind::Overflow, n, sum);
    r.push_back(*value);
  }
  return SequenceBuffer(std::move(r), params, Source::Recursion);
}

SequenceBuffer eval_golomb(const GolombParams& params, const InitialConditions& init,
                           std::int64_t n_max) {
  params.validate();
  const Value step = params.to_general().nu;
  const std::int64_t j = params.j;
  const std::int64_t s = params.s;
  std::vector<Value> g = seed(init, n_max);

  for (std::int64_t n = init.size() + 1; n <= n_max; ++n) {
    const std::int64_t back = n - j;  // j <= n - 1 cannot overflow for j, n > 0
    if (back < 1) throw EvalError(EvalErrorKind::ArgumentOutOfRange, n, back, g);
    const Value nested = g[static_cast<std::size_t>(back - 1)];
    std::optional<Value> outer = checked::sub(n - s, nested);
    if (!outer) throw EvalError(EvalErrorKind::Overflow, n, nested, g);
    if (*outer < 1 || *outer > n - 1) {
      throw EvalError(EvalErrorKind::ArgumentOutOfRange, n, *outer, g);
    }
    const Value base = g[static_cast<std::size_t>(*outer - 1)];
    auto value = checked::add(base, step);
    if (!value) throw EvalError(EvalErrorKind::Overflow, n, base, g);
    g.push_back(*value);
  }
  return SequenceBuffer(std::move(g), params, Source::Recursion);
}

std::int64_t FrequencyTable::count(Value v) const {
  auto it = entries.find(v);
  return it == entries.end() ? 0 : it->second;
}

FrequencyTable frequency_table(std::span<const Value> values) {
  FrequencyTable t;
  t.range_end = static_cast<std::int64_t>(values.size());
  // Solutions are mostly long runs; batching by run keeps map traffic low.
  std::size_t i = 0;
  while (i < values.size()) {
    std::size_t k = i;
    while (k < values.size() && values[k] == values[i]) ++k;
    t.entries[values[i]] += static_cast<std::int64_t>(k - i);
    i = k;
  }
  return t;
}

SequenceStats analyze(const SequenceBuffer& seq) {
  SequenceStats st;
  auto v = seq.values();
  for (std::size_t i = 1; i < v.size(); ++i) {
    // Differences of int64 values can overflow; saturate through __int128.
    const __int128 d = static_cast<__int128>(v[i]) - v[i - 1];
    if (d < 0) st.is_monotone = false;
    if (d != 0 && d != 1) st.is_slow = false;
    const Value dv = d > INT64_MAX ? INT64_MAX : d < INT64_MIN ? INT64_MIN : static_cast<Value>(d);
    if (i == 1 || dv > st.max_step) st.max_step = dv;
  }
  st.frequency = frequency_table(v);
  return st;
}

std::int64_t frequency_of(const SequenceBuffer& seq, Value value) {
  std::int64_t c = 0;
  for (Value x : seq.values()) c += (x == value);
  return c;
}

}  // namespace golomb

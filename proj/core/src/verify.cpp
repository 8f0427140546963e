#include "golomb/verify.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <future>
#include <sstream>
#include <thread>

#include "golomb/closedforms.hpp"
#include "golomb/pruning.hpp"
#include "golomb/recurrence.hpp"
#include "golomb/treemodel.hpp"

namespace golomb {

namespace {

using Checks = std::vector<CheckOutcome>;

std::string cell(const GolombParams& p) { return to_string(p); }

// First index where two sequences differ, or 0.
std::int64_t first_mismatch(std::span<const Value> a, std::span<const Value> b) {
  const auto n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] != b[i]) return static_cast<std::int64_t>(i + 1);
  }
  return a.size() == b.size() ? 0 : static_cast<std::int64_t>(n + 1);
}

CheckOutcome compare(std::string name, std::span<const Value> a, std::span<const Value> b) {
  const auto bad = first_mismatch(a, b);
  CheckOutcome c{std::move(name), bad == 0, {}};
  if (bad) c.detail = "first mismatch at n=" + std::to_string(bad);
  return c;
}

// Runs `body`, turning escaped exceptions into a failed outcome.
CheckOutcome guarded(std::string name, const std::function<CheckOutcome()>& body) {
  try {
    return body();
  } catch (const std::exception& e) {
    return {std::move(name), false, e.what()};
  }
}

Checks tree_cell(const GolombParams& p, const VerifyGrid& grid) {
  Checks out;
  for (auto variant : {TreeVariant::Knot, TreeVariant::Tail}) {
    const std::string name = "leaf weights " + std::string(to_string(variant)) + " " + cell(p);
    out.push_back(guarded(name, [&] {
      auto g = eval_golomb(p, initial_conditions(variant, p), grid.n_tree);
      auto w = leaf_weight_sequence(variant, p, grid.n_tree);
      return compare(name, g.values(), w.values());
    }));
  }

  {
    const std::string name = "specialization " + cell(p);
    out.push_back(guarded(name, [&] {
      auto init = initial_conditions(TreeVariant::Knot, p);
      auto a = eval_golomb(p, init, grid.n_tree);
      auto b = eval_general(p.to_general(), init, grid.n_tree);
      return compare(name, a.values(), b.values());
    }));
  }

  {
    const std::string name = "prune identity " + cell(p);
    out.push_back(guarded(name, [&] {
      const auto first = prune_threshold(p) + 1;
      auto report = verify_prune_identity(p, first, std::max(first - 1, grid.n_tree));
      CheckOutcome c{name, report.all_passed(), {}};
      if (!c.passed) {
        for (const auto& r : report.rows) {
          if (!r.passed) {
            c.detail = "n=" + std::to_string(r.n) + " d=" + std::to_string(r.d_structural) +
                       " expected " + std::to_string(r.d_formula);
            break;
          }
        }
      } else {
        c.detail = std::to_string(report.rows.size()) + " values of n";
      }
      return c;
    }));
  }

  const std::int64_t n_struct = std::min(grid.n_tree, grid.n_structural);
  for (auto variant : {TreeVariant::Knot, TreeVariant::Tail}) {
    const std::string name = "structural leaves " + std::string(to_string(variant)) + " " + cell(p);
    out.push_back(guarded(name, [&] {
      auto tree = build_labeled_tree(variant, p, n_struct);
      const bool ok = leaf_records(tree, n_struct) == leaf_records(variant, p, n_struct);
      return CheckOutcome{name, ok, ok ? "" : "arithmetic and structural leaves differ"};
    }));
  }

  if (p.lambda == 1) {
    const std::string name = "lambda1 collapse " + cell(p);
    out.push_back(guarded(name, [&] {
      return compare(name, leaf_weight_sequence(TreeVariant::Knot, p, grid.n_tree).values(),
                     leaf_weight_sequence(TreeVariant::Tail, p, grid.n_tree).values());
    }));
  }
  return out;
}

Checks closed_cell(std::int64_t j, std::int64_t s, const VerifyGrid& grid) {
  Checks out;
  const GolombParams p{j, s, 1};
  const std::string tag = "j=" + std::to_string(j) + " s=" + std::to_string(s);

  std::vector<Value> g;
  try {
    auto seq = eval_golomb(p, initial_conditions(TreeVariant::Knot, p), grid.n_closed);
    g.assign(seq.values().begin(), seq.values().end());
  } catch (const std::exception& e) {
    out.push_back({"lambda1 recursion " + tag, false, e.what()});
    return out;
  }

  out.push_back(guarded("frequency " + tag, [&] {
    const auto table = frequency_table(g);
    // The last value may be cut off by the prefix edge.
    for (Value v = 1; v < g.back(); ++v) {
      if (table.count(v) != freq_lambda1(j, s, v)) {
        return CheckOutcome{"frequency " + tag, false, "value " + std::to_string(v)};
      }
    }
    return CheckOutcome{"frequency " + tag, true, {}};
  }));

  out.push_back(guarded("closed form " + tag, [&] {
    std::vector<Value> closed;
    closed.reserve(g.size());
    for (std::int64_t n = 1; n <= grid.n_closed; ++n) closed.push_back(g_closed_lambda1(j, s, n));
    return compare("closed form " + tag, g, closed);
  }));

  if (s >= j) {
    out.push_back(guarded("reduction " + tag, [&] {
      const auto rp = reduce_params(j, s);
      const GolombParams reduced{j, rp.r, 1};
      auto h = eval_golomb(reduced, initial_conditions(TreeVariant::Knot, reduced),
                           grid.n_closed + rp.alpha);
      std::vector<Value> shifted;
      for (std::int64_t n = 1; n <= grid.n_closed; ++n) shifted.push_back(h(n + rp.alpha) - rp.q * j);
      return compare("reduction " + tag, g, shifted);
    }));
  }

  if (j == 1) {
    out.push_back(guarded("g_1s1 closed form " + tag, [&] {
      std::vector<Value> closed;
      for (std::int64_t n = 1; n <= grid.n_closed; ++n) closed.push_back(g_1s1_closed(s, n));
      return compare("g_1s1 closed form " + tag, g, closed);
    }));
  }
  return out;
}

Checks fixed_checks() {
  Checks out;
  out.push_back(guarded("prune K(52) -> K(31)", [] {
    const GolombParams p{2, 4, 3};
    auto r = prune(prefix_view(TreeVariant::Knot, p, 52));
    const bool ok = r.d == 31 && structurally_equal(r.result, prefix_view(TreeVariant::Knot, p, 31));
    return CheckOutcome{"prune K(52) -> K(31)", ok, "d=" + std::to_string(r.d)};
  }));
  out.push_back(guarded("golomb closed form", [] {
    auto g = eval_golomb({1, 0, 1}, InitialConditions({1}), 100000);
    std::vector<Value> closed;
    for (std::int64_t n = 1; n <= 100000; ++n) closed.push_back(golomb_closed(n));
    return compare("golomb closed form", g.values(), closed);
  }));
  return out;
}

}  // namespace

std::vector<CheckOutcome> run_verification(const VerifyGrid& grid) {
  std::vector<std::function<Checks()>> jobs;
  jobs.emplace_back(fixed_checks);
  for (std::int64_t j = 1; j <= grid.j_max; ++j) {
    for (std::int64_t s = 0; s <= grid.s_max; ++s) {
      for (std::int64_t lambda = 1; lambda <= grid.lambda_max; ++lambda) {
        jobs.emplace_back([=, &grid] { return tree_cell({j, s, lambda}, grid); });
      }
      jobs.emplace_back([=, &grid] { return closed_cell(j, s, grid); });
    }
  }

  unsigned workers = grid.threads ? grid.threads : std::max(1u, std::thread::hardware_concurrency());
  std::vector<Checks> results(jobs.size());
  std::atomic<std::size_t> next{0};
  std::vector<std::future<void>> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.push_back(std::async(std::launch::async, [&] {
      for (std::size_t k; (k = next.fetch_add(1)) < jobs.size();) results[k] = jobs[k]();
    }));
  }
  for (auto& f : pool) f.get();

  std::vector<CheckOutcome> out;
  for (auto& r : results) std::move(r.begin(), r.end(), std::back_inserter(out));
  return out;
}

}  // namespace golomb

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "golomb/closedforms.hpp"
#include "golomb/pruning.hpp"
#include "golomb/recurrence.hpp"
#include "golomb/treemodel.hpp"
#include "oracles.hpp"

using namespace golomb;

namespace {

struct Verdict {
  bool passed = true;
  std::string detail;

  void fail(const std::string& why) {
    if (passed) detail = why;
    passed = false;
  }
};

std::vector<Value> vec(const SequenceBuffer& b) { return {b.values().begin(), b.values().end()}; }

std::vector<Value> tree_recursion(TreeVariant variant, const GolombParams& p, std::int64_t n_max) {
  return vec(eval_golomb(p, initial_conditions(variant, p), n_max));
}

std::vector<Value> lambda1(std::int64_t j, std::int64_t s, std::int64_t n_max) {
  return tree_recursion(TreeVariant::Knot, {j, s, 1}, n_max);
}

std::string at(const std::string& what, std::int64_t n) { return what + " at n=" + std::to_string(n); }

Verdict golomb_baseline() {
  Verdict v;
  const std::int64_t n_max = 1'000'000;
  auto g = vec(eval_golomb({1, 0, 1}, InitialConditions({1}), n_max));
  for (std::int64_t n = 1; n <= n_max && v.passed; ++n) {
    if (g[n - 1] != golomb_closed(n)) v.fail(at("closed form differs", n));
  }
  auto freq = frequency_table(g);
  for (Value x = 1; x < g.back() && v.passed; ++x) {
    if (freq.count(x) != x) v.fail(at("phi(n) != n", x));
  }
  v.detail = v.passed ? "n <= 10^6, " + std::to_string(g.back() - 1) + " full runs" : v.detail;
  return v;
}

Verdict odd_runs() {
  Verdict v;
  auto seq = eval_general({1, 2, 0, 2}, InitialConditions({1, 3, 3}), 10'000);
  auto stats = analyze(seq);
  const auto& g = seq.values();
  if (!stats.is_monotone) v.fail("not monotone");
  if (stats.is_slow) v.fail("slow");
  for (Value x = 1; x < g.back() && v.passed; ++x) {
    const auto c = stats.frequency.count(x);
    if (c != (x % 2 ? x : 0)) v.fail(at("wrong frequency", x));
  }
  if (v.passed) v.detail = "max step " + std::to_string(stats.max_step);
  return v;
}

Verdict leaf_weights() {
  Verdict v;
  int cells = 0;
  for (auto variant : {TreeVariant::Knot, TreeVariant::Tail}) {
    for (std::int64_t j = 1; j <= 4; ++j) {
      for (std::int64_t lambda = 1; lambda <= 4; ++lambda) {
        for (std::int64_t s = 0; s <= 4; ++s) {
          const GolombParams p{j, s, lambda};
          if (tree_recursion(variant, p, 5000) != vec(leaf_weight_sequence(variant, p, 5000))) {
            v.fail(std::string(to_string(variant)) + " " + to_string(p));
          }
          ++cells;
        }
      }
    }
  }
  if (v.passed) v.detail = std::to_string(cells) + " cells, n <= 5000";
  return v;
}

Verdict reference_prefixes() {
  Verdict v;
  const GolombParams p{2, 4, 3};
  const std::vector<Value> knot{1, 1, 1, 1, 1, 3, 3, 3, 3, 3, 3, 3, 5, 5, 7, 7, 9, 9, 9, 9, 9, 9, 9, 9, 9, 11};
  const std::vector<Value> tail{1, 1, 1, 1, 1, 3, 3, 3, 3, 3, 3, 5, 5, 7, 7, 7, 9};
  if (vec(leaf_weight_sequence(TreeVariant::Knot, p, 26)) != knot) v.fail("knot tree prefix");
  if (tree_recursion(TreeVariant::Knot, p, 26) != knot) v.fail("knot recursion prefix");
  if (vec(leaf_weight_sequence(TreeVariant::Tail, p, 17)) != tail) v.fail("tail tree prefix");
  if (tree_recursion(TreeVariant::Tail, p, 17) != tail) v.fail("tail recursion prefix");

  auto tree = assign_labels(build_skeleton(TreeVariant::Tail, 2, 3, 3), 4);
  std::vector<std::int64_t> tails;
  for (NodeId id : tree.traversal()) {
    if (tree.skeleton().node(id).kind.tag == NodeKindTag::TailNode) tails.push_back(tree.labels(id).first);
  }
  if (tails != std::vector<std::int64_t>{17, 34, 57}) v.fail("tail node labels");
  if (v.passed) v.detail = "26 + 17 values, tail nodes 17 34 57";
  return v;
}

Verdict pruning() {
  Verdict v;
  std::int64_t rows = 0;
  for (std::int64_t j = 1; j <= 3; ++j) {
    for (std::int64_t lambda = 1; lambda <= 3; ++lambda) {
      for (std::int64_t s = 0; s <= 3; ++s) {
        const GolombParams p{j, s, lambda};
        auto report = verify_prune_identity(p, prune_threshold(p) + 1, 2000);
        for (const auto& r : report.rows) {
          if (!r.passed || r.weight_drop != lambda * j) v.fail(at(to_string(p), r.n));
        }
        rows += static_cast<std::int64_t>(report.rows.size());
      }
    }
  }
  auto fig = verify_prune_identity({2, 4, 3}, 52, 52);
  const auto& r = fig.rows.at(0);
  if (!(r.n == 52 && r.d_structural == 31 && r.d_formula == 31 && r.passed && r.weight_drop == 6)) {
    v.fail("P K(52) != K(31) at (2,4,3)");
  }
  if (v.passed) v.detail = std::to_string(rows) + " rows; P K(52) = K(31) at (2,4,3)";
  return v;
}

Verdict frequencies() {
  Verdict v;
  for (std::int64_t j = 1; j <= 4; ++j) {
    for (std::int64_t s = 0; s <= 4; ++s) {
      auto g = lambda1(j, s, 20'000);
      auto freq = frequency_table(g);
      for (Value x = 1; x < g.back(); ++x) {
        if (freq.count(x) != freq_lambda1(j, s, x)) {
          v.fail(at("j=" + std::to_string(j) + " s=" + std::to_string(s), x));
          break;
        }
      }
    }
  }
  if (v.passed) v.detail = "20 cells, n <= 20000";
  return v;
}

Verdict closed_form() {
  Verdict v;
  std::int64_t inconsistencies = 0;
  for (std::int64_t j = 1; j <= 4; ++j) {
    for (std::int64_t s = 0; s <= 4; ++s) {
      auto g = lambda1(j, s, 20'000);
      for (std::int64_t n = 1; n <= 20'000; ++n) {
        try {
          if (g_closed_lambda1(j, s, n) != g[n - 1]) v.fail(at("j=" + std::to_string(j) + " s=" + std::to_string(s), n));
        } catch (const FormulaInconsistency& e) {
          ++inconsistencies;
          v.fail(e.what());
        }
      }
    }
  }
  if (v.passed) v.detail = "20 cells, n <= 20000, 0 formula inconsistencies";
  else v.detail += " (" + std::to_string(inconsistencies) + " inconsistencies)";
  return v;
}

Verdict reduction() {
  Verdict v;
  int cells = 0;
  for (std::int64_t j = 1; j <= 3; ++j) {
    for (std::int64_t s = j; s <= j + 6; ++s) {
      const auto red = reduce_params(j, s);
      auto g = lambda1(j, s, 10'000);
      auto h = lambda1(j, red.r, 10'000 + red.alpha);
      for (std::int64_t n = 1; n <= 10'000; ++n) {
        if (g[n - 1] != h[n + red.alpha - 1] - red.q * j) {
          v.fail(at("j=" + std::to_string(j) + " s=" + std::to_string(s), n));
          break;
        }
      }
      ++cells;
    }
  }
  if (v.passed) v.detail = std::to_string(cells) + " cells, n <= 10000";
  return v;
}

Verdict g1s1() {
  Verdict v;
  for (std::int64_t s = 0; s <= 6; ++s) {
    auto g = lambda1(1, s, 100'000);
    for (std::int64_t n = 1; n <= 100'000; ++n) {
      const Value c = g_1s1_closed(s, n);
      if (c != g[n - 1] || (s == 0 && c != golomb_closed(n))) {
        v.fail(at("s=" + std::to_string(s), n));
        break;
      }
    }
  }
  if (v.passed) v.detail = "s <= 6, n <= 10^5";
  return v;
}

Verdict oracle_equivalence() {
  Verdict v;
  std::mt19937_64 rng(20240521);
  for (int trial = 0; trial < 20; ++trial) {
    GeneralParams gp;
    std::vector<Value> init;
    if (trial % 4 == 3) {
      gp = {2, std::int64_t(rng() % 2 + 2), std::int64_t(rng() % 2), 0};
      init.assign(static_cast<std::size_t>(2 * gp.j + gp.s), 1);
    } else {
      const GolombParams p{std::int64_t(rng() % 3 + 1), std::int64_t(rng() % 4), std::int64_t(rng() % 3 + 1)};
      gp = p.to_general();
      auto tree = initial_conditions(trial % 2 ? TreeVariant::Tail : TreeVariant::Knot, p);
      init.assign(tree.values().begin(), tree.values().end());
      if (trial % 4 == 2) init.back() += 1;
    }
    std::vector<Value> got;
    try {
      got = vec(eval_general(gp, InitialConditions(init), 60));
    } catch (const EvalError& e) {
      got.assign(e.partial().begin(), e.partial().end());
    }
    oracle::Naive naive{gp.k, gp.j, gp.s, gp.nu, init};
    std::vector<Value> want;
    for (std::int64_t n = 1; n <= 60; ++n) {
      auto x = naive.at(n);
      if (!x) break;
      want.push_back(*x);
    }
    if (got != want) v.fail("memo != naive for " + to_string(gp));
  }
  int cells = 0;
  for (auto variant : {TreeVariant::Knot, TreeVariant::Tail}) {
    for (std::int64_t j = 1; j <= 3; ++j) {
      for (std::int64_t lambda = 1; lambda <= 3; ++lambda) {
        for (std::int64_t s = 0; s <= 3; ++s) {
          const GolombParams p{j, s, lambda};
          auto tree = build_labeled_tree(variant, p, 3000);
          if (leaf_records(variant, p, 3000) != leaf_records(tree, 3000)) {
            v.fail(std::string("fast != structural for ") + std::string(to_string(variant)) + " " + to_string(p));
          }
          ++cells;
        }
      }
    }
  }
  if (v.passed) v.detail = "20 naive configs; " + std::to_string(cells) + " structural cells, n <= 3000";
  return v;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria{
      {"Golomb baseline", golomb_baseline},
      {"odd-run sequence", odd_runs},
      {"recursion equals leaf weights", leaf_weights},
      {"reference prefixes", reference_prefixes},
      {"pruning identity", pruning},
      {"lambda=1 frequencies", frequencies},
      {"lambda=1 closed form", closed_form},
      {"parameter reduction", reduction},
      {"g_{1,s,1} closed form", g1s1},
      {"oracle equivalence", oracle_equivalence},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v.fail(std::string("exception: ") + e.what());
    }
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] %2zu %-32s %s (%lld ms)\n", v.passed ? "PASS" : "FAIL", i + 1, criteria[i].first,
                v.detail.c_str(), static_cast<long long>(ms));
    failed += !v.passed;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}

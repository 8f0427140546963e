#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "golomb/bfile.hpp"
#include "golomb/closedforms.hpp"
#include "golomb/pruning.hpp"
#include "golomb/recurrence.hpp"

namespace golomb::cli {

namespace {

using nlohmann::json;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

GolombParams golomb_params(const CommandConfig& c) {
  GolombParams p{c.j, c.s, c.lambda};
  p.validate();
  return p;
}

bool is_general(const CommandConfig& c) { return c.k.has_value() || c.nu.has_value(); }

std::vector<Value> load_init_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  // b-file if at least two content lines, each holding exactly two fields;
  // otherwise a flat value list.
  std::istringstream lines(text);
  int content_lines = 0;
  bool pairs = true;
  for (std::string line; std::getline(lines, line);) {
    if (line.find_first_not_of(" \t\r") == std::string::npos || line[0] == '#') continue;
    std::istringstream fields(line);
    int count = 0;
    for (std::string f; fields >> f;) ++count;
    pairs = pairs && count == 2 && line.find(',') == std::string::npos;
    ++content_lines;
  }
  if (pairs && content_lines >= 2) {
    std::istringstream again(text);
    return read_bfile(again);
  }
  return parse_value_list(text);
}

InitialConditions resolve_init(const CommandConfig& c) {
  switch (c.init_source) {
    case InitSource::ExplicitList:
      if (c.init_values.empty()) throw UsageError("--init needs at least one value");
      return InitialConditions(c.init_values);
    case InitSource::File: {
      auto v = load_init_file(c.init_file);
      if (v.empty()) throw UsageError("initial-condition file is empty");
      return InitialConditions(std::move(v));
    }
    case InitSource::TreeDerived:
      break;
  }
  if (is_general(c) && (c.k.value_or(1) != 1 || c.nu.value_or(c.lambda * c.j) != c.lambda * c.j)) {
    throw UsageError("tree-derived initial conditions exist only for k=1, nu=lambda*j; pass --init");
  }
  return initial_conditions(c.variant, golomb_params(c));
}

SequenceBuffer recursion_sequence(const CommandConfig& c) {
  auto init = resolve_init(c);
  if (is_general(c)) {
    GeneralParams gp{c.k.value_or(1), c.j, c.s, c.nu.value_or(c.lambda * c.j)};
    gp.validate();
    return eval_general(gp, init, c.n);
  }
  return eval_golomb(golomb_params(c), init, c.n);
}

SequenceBuffer closed_sequence(const CommandConfig& c) {
  if (c.lambda != 1) throw UsageError("closed forms exist only for lambda=1");
  std::vector<Value> v;
  v.reserve(static_cast<std::size_t>(c.n));
  for (std::int64_t n = 1; n <= c.n; ++n) v.push_back(g_closed_lambda1(c.j, c.s, n));
  return SequenceBuffer(std::move(v), golomb_params(c), Source::ClosedForm);
}

json params_json(const AnyParams& params) {
  return std::visit(
      [](const auto& p) -> json {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, GeneralParams>) {
          return {{"k", p.k}, {"j", p.j}, {"s", p.s}, {"nu", p.nu}};
        } else {
          return {{"j", p.j}, {"s", p.s}, {"lambda", p.lambda}};
        }
      },
      params);
}

void emit_sequence(const SequenceBuffer& seq, OutputFormat format, std::ostream& out) {
  switch (format) {
    case OutputFormat::Plain: {
      const char* sep = "";
      for (Value v : seq.values()) {
        out << sep << v;
        sep = " ";
      }
      out << '\n';
      break;
    }
    case OutputFormat::Csv: {
      out << "n,value\n";
      std::int64_t n = 1;
      for (Value v : seq.values()) out << n++ << ',' << v << '\n';
      break;
    }
    case OutputFormat::BFile:
      write_bfile(out, seq.values());
      break;
    case OutputFormat::Json: {
      json doc{{"params", params_json(seq.params())},
               {"source", std::string(to_string(seq.source()))},
               {"values", std::vector<Value>(seq.values().begin(), seq.values().end())}};
      out << doc.dump() << '\n';
      break;
    }
  }
}

int run_freq(const CommandConfig& c, std::ostream& out) {
  const auto seq = recursion_sequence(c);
  const auto stats = analyze(seq);
  const bool formula = c.lambda == 1 && !is_general(c) && c.init_source == InitSource::TreeDerived;
  const Value edge = seq(seq.size());

  json rows = json::array();
  if (c.format == OutputFormat::Csv) out << "value,count,formula,partial\n";
  if (c.format == OutputFormat::Plain) out << "value\tcount\tformula\n";
  for (const auto& [value, count] : stats.frequency.entries) {
    std::optional<std::int64_t> expected;
    if (formula && value >= 1) expected = freq_lambda1(c.j, c.s, value);
    const bool partial = value == edge;
    switch (c.format) {
      case OutputFormat::Json:
        rows.push_back({{"value", value},
                        {"count", count},
                        {"formula", expected ? json(*expected) : json(nullptr)},
                        {"partial", partial}});
        break;
      case OutputFormat::Csv:
        out << value << ',' << count << ',' << (expected ? std::to_string(*expected) : "") << ','
            << (partial ? 1 : 0) << '\n';
        break;
      default:
        out << value << '\t' << count << '\t' << (expected ? std::to_string(*expected) : "-")
            << (partial ? "\t(cut off by prefix)" : "") << '\n';
        break;
    }
  }
  if (c.format == OutputFormat::Json) {
    out << json{{"params", params_json(seq.params())}, {"n", c.n}, {"frequency", rows}}.dump() << '\n';
  }
  return kOk;
}

std::string_view case_name(PruneCase pc) {
  switch (pc) {
    case PruneCase::ManyChains: return "1 (>=2 chains)";
    case PruneCase::FewChains: return "2 (<2 chains, >=j labels)";
    case PruneCase::Untouched: return "3 (<j labels)";
  }
  return "?";
}

std::string shape_text(const SubtreeShape& sh) {
  std::ostringstream os;
  os << "K" << sh.index << "{super=" << sh.supernode_labels << (sh.stem ? (sh.index == 0 ? " leaf" : " knot") : "") << " chains=[";
  for (std::size_t i = 0; i < sh.chains.size(); ++i) os << (i ? "," : "") << sh.chains[i];
  os << "]}";
  return os.str();
}

int run_prune(const CommandConfig& c, std::ostream& out) {
  const auto p = golomb_params(c);
  if (c.variant != TreeVariant::Knot) throw UsageError("prune supports the knot variant only");
  if (c.n <= prune_threshold(p)) {
    throw UsageError("prune needs n > 3+2s+lambda*j = " + std::to_string(prune_threshold(p)));
  }
  const auto view = prefix_view(TreeVariant::Knot, p, c.n);
  const auto r = prune(view);
  const auto w = leaf_weight_sequence(TreeVariant::Knot, p, c.n);
  const std::int64_t d_formula = c.n - p.s - w(c.n - p.j);
  const bool match = r.d == d_formula &&
                     structurally_equal(r.result, prefix_view(TreeVariant::Knot, p, d_formula));
  const bool ok = match && r.weight_drop == p.lambda * p.j;

  if (c.format == OutputFormat::Json) {
    out << json{{"params", params_json(p)},
                {"n", c.n},
                {"m", view.m},
                {"case", static_cast<int>(r.partial_case)},
                {"d", r.d},
                {"d_formula", d_formula},
                {"labels_removed", r.labels_removed},
                {"weight_drop", r.weight_drop},
                {"structural_match", match}}
               .dump()
        << '\n';
  } else {
    out << "params      " << to_string(p) << '\n';
    out << "K(" << c.n << ")       ";
    for (const auto& sh : view.subtrees) out << shape_text(sh) << ' ';
    out << "\nm           " << view.m << (view.incomplete ? " (incomplete)" : " (complete)") << '\n';
    out << "case        " << case_name(r.partial_case) << '\n';
    out << "pruned      ";
    for (const auto& sh : r.result.subtrees) out << shape_text(sh) << ' ';
    out << "\nremoved     " << r.labels_removed << " labels\n";
    out << "d           " << r.d << '\n';
    out << "n-s-w(n-j)  " << d_formula << '\n';
    out << "weight drop " << r.weight_drop << " (lambda*j = " << p.lambda * p.j << ")\n";
    out << (ok ? "OK" : "MISMATCH") << ": P K(" << c.n << ") " << (match ? "=" : "!=") << " K("
        << d_formula << ")\n";
  }
  return ok ? kOk : kVerificationFailed;
}

int run_verify(const CommandConfig& c, std::ostream& out) {
  const auto outcomes = run_verification(c.grid);
  std::int64_t failed = 0;
  for (const auto& o : outcomes) {
    failed += !o.passed;
    out << (o.passed ? "PASS " : "FAIL ") << o.name;
    if (!o.detail.empty()) out << "  [" << o.detail << "]";
    out << '\n';
  }
  out << outcomes.size() << " checks, " << failed << " failed\n";
  return failed ? kVerificationFailed : kOk;
}

int dispatch(const CommandConfig& c, std::ostream& out) {
  if (c.n < 1) throw UsageError("--n must be >= 1");
  switch (c.subcommand) {
    case Subcommand::Gen:
      emit_sequence(recursion_sequence(c), c.format, out);
      return kOk;
    case Subcommand::Tree:
      emit_sequence(leaf_weight_sequence(c.variant, golomb_params(c), c.n), c.format, out);
      return kOk;
    case Subcommand::Closed:
      emit_sequence(closed_sequence(c), c.format, out);
      return kOk;
    case Subcommand::Freq:
      return run_freq(c, out);
    case Subcommand::Prune:
      return run_prune(c, out);
    case Subcommand::Verify:
      return run_verify(c, out);
    case Subcommand::Dot:
      out << to_dot(build_labeled_tree(c.variant, golomb_params(c), c.n), c.n);
      return kOk;
    case Subcommand::Bfile: {
      switch (c.engine) {
        case Engine::Recursion:
          emit_sequence(recursion_sequence(c), OutputFormat::BFile, out);
          break;
        case Engine::Tree:
          emit_sequence(leaf_weight_sequence(c.variant, golomb_params(c), c.n), OutputFormat::BFile, out);
          break;
        case Engine::Closed:
          emit_sequence(closed_sequence(c), OutputFormat::BFile, out);
          break;
      }
      return kOk;
    }
  }
  return kInvalidArguments;
}

}  // namespace

int run(const CommandConfig& config, std::ostream& out, std::ostream& err) {
  try {
    return dispatch(config, out);
  } catch (const EvalError& e) {
    err << "error: " << e.what() << " (index " << e.at() << ")\n";
    return kEngineError;
  } catch (const OverflowError& e) {
    err << "error: " << e.what() << '\n';
    return kEngineError;
  } catch (const FormulaInconsistency& e) {
    err << "error: " << e.what() << '\n';
    return kEngineError;
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << '\n';
    return kEngineError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidArguments;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidArguments;
  }
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized Golomb recursion: sequences, trees, closed forms"};
  app.require_subcommand(1);

  CommandConfig config;
  std::string variant = "knot";
  std::string format = "plain";
  std::string engine = "recursion";
  std::string init_list;

  const std::map<std::string, OutputFormat> formats{
      {"plain", OutputFormat::Plain}, {"csv", OutputFormat::Csv},
      {"bfile", OutputFormat::BFile}, {"json", OutputFormat::Json}};

  auto add_params = [&](CLI::App* sub, bool with_variant) {
    sub->add_option("--j", config.j, "inner shift j (>= 1)");
    sub->add_option("--s", config.s, "outer shift s (>= 0)");
    sub->add_option("--lambda", config.lambda, "lambda (>= 1)");
    sub->add_option("--n", config.n, "number of terms / label cutoff");
    if (with_variant) {
      sub->add_option("--variant", variant, "tree variant")->check(CLI::IsMember({"knot", "tail"}));
    }
  };
  auto add_init = [&](CLI::App* sub) {
    auto* list = sub->add_option("--init", init_list, "explicit initial conditions, e.g. 1,3,3");
    sub->add_option("--init-file", config.init_file, "initial conditions from a b-file or value list")
        ->excludes(list);
    sub->add_option("--k", config.k, "number of summed terms (general recursion)");
    sub->add_option("--nu", config.nu, "additive constant (general recursion)");
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"plain", "csv", "bfile", "json"}));
  };

  auto* gen = app.add_subcommand("gen", "sequence from the recursion");
  add_params(gen, true);
  add_init(gen);
  add_format(gen);

  auto* tree = app.add_subcommand("tree", "leaf-weight sequence of the labeled tree");
  add_params(tree, true);
  add_format(tree);

  auto* closed = app.add_subcommand("closed", "lambda=1 closed-form values");
  add_params(closed, false);
  add_format(closed);

  auto* freq = app.add_subcommand("freq", "frequency table, empirical vs formula");
  add_params(freq, true);
  add_init(freq);
  add_format(freq);

  auto* prune_cmd = app.add_subcommand("prune", "pruning trace for K(n)");
  add_params(prune_cmd, false);
  add_format(prune_cmd);

  auto* verify = app.add_subcommand("verify", "run the cross-verification suite");
  bool grid_default = false;
  verify->add_flag("--grid-default", grid_default, "default grid (j,lambda<=3, s<=3)");
  verify->add_option("--j-max", config.grid.j_max);
  verify->add_option("--s-max", config.grid.s_max);
  verify->add_option("--lambda-max", config.grid.lambda_max);
  verify->add_option("--n-tree", config.grid.n_tree);
  verify->add_option("--n-closed", config.grid.n_closed);
  verify->add_option("--threads", config.grid.threads);

  auto* dot = app.add_subcommand("dot", "Graphviz DOT of the labeled tree prefix K(n)");
  add_params(dot, true);

  auto* bfile = app.add_subcommand("bfile", "OEIS b-file");
  add_params(bfile, true);
  add_init(bfile);
  bfile->add_option("--source", engine, "engine")->check(CLI::IsMember({"recursion", "tree", "closed"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalidArguments;
  }

  const std::pair<CLI::App*, Subcommand> subs[] = {
      {gen, Subcommand::Gen},         {tree, Subcommand::Tree},     {closed, Subcommand::Closed},
      {freq, Subcommand::Freq},       {prune_cmd, Subcommand::Prune}, {verify, Subcommand::Verify},
      {dot, Subcommand::Dot},         {bfile, Subcommand::Bfile}};
  for (const auto& [sub, kind] : subs) {
    if (sub->parsed()) config.subcommand = kind;
  }

  config.variant = *parse_variant(variant);
  config.format = formats.at(format);
  config.engine = engine == "tree" ? Engine::Tree : engine == "closed" ? Engine::Closed : Engine::Recursion;
  try {
    if (!init_list.empty()) {
      config.init_source = InitSource::ExplicitList;
      config.init_values = parse_value_list(init_list);
    } else if (!config.init_file.empty()) {
      config.init_source = InitSource::File;
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidArguments;
  }
  if (grid_default) {
    const auto threads = config.grid.threads;
    config.grid = VerifyGrid{};
    config.grid.threads = threads;
  }
  return run(config, out, err);
}

}  // namespace golomb::cli

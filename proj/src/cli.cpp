#include "torext/cli.hpp"

#include <algorithm>
#include <sstream>

#include <CLI11.hpp>

#include "torext/criteria.hpp"
#include "torext/errors.hpp"
#include "torext/oracle.hpp"
#include "torext/realization.hpp"
#include "torext/serialize.hpp"

namespace torext {

namespace {

// "h=2,hj=2,nj=4,r=3,m=3"; omitted keys keep their defaults.
void apply_bounds(const std::string& text, TrialPlan& plan) {
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw ParseError("--bounds: expected key=value, got '" + item + "'");
    const std::string key = item.substr(0, eq);
    int value = 0;
    try {
      std::size_t used = 0;
      value = std::stoi(item.substr(eq + 1), &used);
      if (used != item.size() - eq - 1) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ParseError("--bounds: '" + item + "' has a non-integer value");
    }
    if (key == "h") plan.bounds.max_q_genus = value;
    else if (key == "hj") plan.bounds.max_component_genus = value;
    else if (key == "nj") plan.bounds.max_boundary = value;
    else if (key == "r") plan.bounds.max_components = value;
    else if (key == "m") plan.exponent_bound = value;
    else throw ParseError("--bounds: unknown key '" + key + "' (expected h, hj, nj, r, m)");
  }
}

Integer parse_integer(const std::string& text, const std::string& flag) {
  Integer x;
  if (text.empty() || x.set_str(text, 10) != 0) throw ParseError(flag + ": expected an integer, got '" + text + "'");
  return x;
}

void emit_report(const AnalysisReport& report, const std::string& format, std::ostream& out) {
  if (format == "text") {
    out << to_text(report);
  } else {
    out << to_json(report).dump(2) << '\n';
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Torelli extension criteria for subsurface diffeomorphisms", "torext"};
  app.require_subcommand(1);

  std::string config_path, word_path, delta_path, format = "json", bounds, m_text = "1";
  std::uint64_t seed = 0;
  int trials = 200;
  bool companion = false;
  std::vector<std::string> only;

  auto* analyze_cmd = app.add_subcommand("analyze", "Decide the extension criteria for a word of twists in Q");
  analyze_cmd->add_option("--config", config_path, "Subsurface configuration JSON")->required();
  analyze_cmd->add_option("--word", word_path, "Twist word JSON")->required();
  analyze_cmd->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));

  auto* realize_cmd = app.add_subcommand("realize", "Build a twist word with a prescribed difference map");
  realize_cmd->add_option("--config", config_path, "Subsurface configuration JSON")->required();
  realize_cmd->add_option("--delta", delta_path, "Difference map JSON")->required();
  realize_cmd->add_flag("--companion", companion, "Emit the Torelli bi-twist word instead");

  auto* check_cmd = app.add_subcommand("check", "Run the randomized invariant suite");
  check_cmd->add_option("--seed", seed, "Random seed");
  check_cmd->add_option("--trials", trials, "Trials per invariant");
  check_cmd->add_option("--bounds", bounds, "Comma-separated h=,hj=,nj=,r=,m= bounds");
  check_cmd->add_option("--invariant", only, "Restrict to the named invariants");

  auto* ranks_cmd = app.add_subcommand("ranks", "Ranks of K_0(c), H_1(c)bar and the completely reducible maps");
  ranks_cmd->add_option("--config", config_path, "Subsurface configuration JSON")->required();

  auto* example_cmd = app.add_subcommand("example4", "Bounding-pair counterexample with twist exponent m");
  example_cmd->add_option("--m", m_text, "Twist exponent (nonzero)");
  example_cmd->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitParse;
  }

  try {
    if (analyze_cmd->parsed()) {
      const HomologyModel model = HomologyModel::build(config_from_json(read_json_file(config_path)));
      const TwistWord word = word_from_json(read_json_file(word_path));
      const AnalysisReport report = analyze(model, word);
      for (const auto& w : report.warnings) err << "warning: " << w << '\n';
      emit_report(report, format, out);
      return kExitOk;
    }
    if (realize_cmd->parsed()) {
      const HomologyModel model = HomologyModel::build(config_from_json(read_json_file(config_path)));
      const DifferenceMap delta = delta_from_json(model, read_json_file(delta_path));
      const Realization real = realize_delta(model, delta);
      out << to_json(companion ? real.bitwist : real.word).dump(2) << '\n';
      return kExitOk;
    }
    if (check_cmd->parsed()) {
      TrialPlan plan;
      plan.seed = seed;
      plan.trials = trials;
      apply_bounds(bounds, plan);
      try {
        plan.validate();
      } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
      }
      std::vector<InvariantReport> reports;
      if (only.empty()) {
        reports = verify_all(plan);
      } else {
        const auto names = invariant_names();
        for (const auto& name : only) {
          if (std::find(names.begin(), names.end(), name) == names.end())
            throw ParseError("--invariant: unknown invariant '" + name + "'");
          reports.push_back(verify_invariant(name, plan));
        }
      }
      out << to_json(reports).dump(2) << '\n';
      bool failed = false;
      for (const auto& r : reports) {
        if (!r.passed()) {
          err << "FAIL " << r.invariant << ": " << r.failures.size() << " of " << r.trials << " trials\n";
          failed = true;
        }
      }
      return failed ? kExitCheckFailed : kExitOk;
    }
    if (ranks_cmd->parsed()) {
      out << to_json(group_ranks(config_from_json(read_json_file(config_path)))).dump() << '\n';
      return kExitOk;
    }
    if (example_cmd->parsed()) {
      const Integer m = parse_integer(m_text, "--m");
      if (m == 0) throw ParseError("--m: the exponent must be nonzero");
      emit_report(example4_report(m), format, out);
      return kExitOk;
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const InvalidConfig& e) {
    err << "invalid config: " << e.what() << '\n';
    return kExitParse;
  } catch (const DimensionError& e) {
    err << "dimension error: " << e.what() << '\n';
    return kExitDimension;
  } catch (const LocusError& e) {
    err << "locus error: " << e.what() << '\n';
    return kExitDimension;
  } catch (const NotSymmetric& e) {
    err << "not symmetric: " << e.what() << '\n';
    return kExitNotSymmetric;
  } catch (const NotCompletelyReducible& e) {
    err << "not completely reducible: " << e.what() << '\n';
    return kExitNotCompletelyReducible;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitParse;
}

}  // namespace torext

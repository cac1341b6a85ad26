// folnewt: command-line front end for the Newton non-degeneracy toolkit.

#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "folnewt/decision.hpp"
#include "folnewt/report.hpp"

namespace {

using folnewt::Outcome;
using nlohmann::json;

constexpr int exit_ok = 0;
constexpr int exit_negative = 1;
constexpr int exit_undetermined = 2;
constexpr int exit_usage = 64;
constexpr int exit_disagree = 70;

struct Settings {
  std::string input;
  std::size_t fuel_spairs = 10000;
  std::size_t fuel_blowups = 64;
  std::string strategy = "deepest-first";
  std::string emit_dot;
  std::string route = "direct";
  bool text = false;
  bool serial = false;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

folnewt::DecisionOptions decision_options(const Settings& s) {
  folnewt::DecisionOptions o;
  o.fuel.max_spair_reductions = s.fuel_spairs;
  o.max_blowups = s.fuel_blowups;
  auto strategy = folnewt::parse_strategy(s.strategy);
  if (!strategy) throw UsageError("unknown strategy " + s.strategy);
  o.strategy = *strategy;
  o.policy = s.serial ? folnewt::ExecPolicy::serial : folnewt::ExecPolicy::parallel;
  return o;
}

int outcome_code(Outcome o) {
  switch (o) {
    case Outcome::non_degenerate: return exit_ok;
    case Outcome::degenerate: return exit_negative;
    case Outcome::undetermined: return exit_undetermined;
  }
  return exit_undetermined;
}

int tri_code(folnewt::Tri t) {
  switch (t) {
    case folnewt::Tri::yes: return exit_ok;
    case folnewt::Tri::no: return exit_negative;
    case folnewt::Tri::undetermined: return exit_undetermined;
  }
  return exit_undetermined;
}

void write_dot(const Settings& s, const folnewt::Atlas& atlas) {
  if (s.emit_dot.empty()) return;
  std::ofstream out(s.emit_dot);
  if (!out) throw UsageError("cannot write " + s.emit_dot);
  out << folnewt::atlas_dot(atlas);
}

int run(const std::string& command, const Settings& s) {
  const auto started = std::chrono::steady_clock::now();
  const std::string text = read_input(s.input);
  json report = folnewt::report_header(command, text);
  report["options"] = {{"strategy", s.strategy},
                       {"fuel_spairs", s.fuel_spairs},
                       {"fuel_blowups", s.fuel_blowups},
                       {"policy", s.serial ? "serial" : "parallel"}};
  int code = exit_ok;
  bool undetermined = false;
  folnewt::groebner::FuelUsage usage;

  if (command == "validate") {
    json result = {{"valid", true}, {"error", nullptr}};
    try {
      const folnewt::Atlas atlas = folnewt::load_space(text);
      result["divisor"] = folnewt::to_json(atlas.root().divisor);
      result["free"] = folnewt::to_json(atlas.root().free);
      result["integrable"] = std::string(folnewt::to_string(folnewt::integrability_check(atlas.root(), {})));
    } catch (const folnewt::InputError& e) {
      result["valid"] = false;
      result["error"] = e.what();
      code = exit_negative;
    }
    report["result"] = result;
  } else {
    const folnewt::Atlas atlas = folnewt::load_space(text);
    const folnewt::DecisionOptions opts = decision_options(s);
    if (command == "polyhedra") {
      report["result"] = {{"strata", atlas.fabric().strata().size()}};
      report["polyhedra"] = folnewt::to_json(folnewt::newton_polyhedra_system(atlas, opts.policy));
      write_dot(s, atlas);
    } else if (command == "logsing") {
      const folnewt::LogsingResult r = folnewt::logsing_empty(atlas, opts.fuel, opts.policy);
      report["result"] = folnewt::to_json(r);
      usage = r.usage;
      code = tri_code(r.empty);
    } else if (command == "check-nnd") {
      folnewt::Verdict v;
      if (s.route == "direct") {
        v = folnewt::check_nnd_direct(atlas, opts);
      } else if (s.route == "theorem") {
        folnewt::DesingResult d{atlas, false, {}};
        v = folnewt::check_nnd_via_theorem(atlas, opts, &d);
        report["blowup_log"] = folnewt::blowup_log_json(d.atlas);
        write_dot(s, d.atlas);
      } else {
        throw UsageError("unknown route " + s.route);
      }
      report["result"] = folnewt::to_json(v);
      report["result"]["route"] = s.route;
      usage = v.usage;
      code = outcome_code(v.outcome);
    } else if (command == "desing") {
      const folnewt::DesingResult d = folnewt::desingularize(atlas, opts.strategy, opts.max_blowups, opts.policy);
      json centers = json::array();
      for (const auto& c : d.centers) centers.push_back(folnewt::to_json(c));
      report["result"] = {{"complete", d.complete},
                          {"blowups", d.centers.size()},
                          {"centers", centers},
                          {"atlas", folnewt::atlas_json(d.atlas)}};
      report["blowup_log"] = folnewt::blowup_log_json(d.atlas);
      report["polyhedra"] = folnewt::to_json(folnewt::newton_polyhedra_system(d.atlas, opts.policy));
      write_dot(s, d.atlas);
      code = d.complete ? exit_ok : exit_undetermined;
    } else if (command == "equiv") {
      const folnewt::EquivalenceReport r = folnewt::verify_equivalence(atlas, opts);
      report["result"] = {{"agreement", std::string(folnewt::to_string(r.agreement))},
                          {"direct", folnewt::to_json(r.direct)},
                          {"theorem", folnewt::to_json(r.theorem)}};
      usage = r.direct.usage;
      usage += r.theorem.usage;
      switch (r.agreement) {
        case folnewt::Agreement::agree: code = outcome_code(r.direct.outcome); break;
        case folnewt::Agreement::disagree: code = exit_disagree; break;
        case folnewt::Agreement::undetermined: code = exit_undetermined; break;
      }
    }
  }
  undetermined = code == exit_undetermined;
  report["fuel_usage"] = folnewt::to_json(usage);
  report["undetermined"] = undetermined;
  const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started);
  report["timings"] = {{"total_ms", elapsed.count()}};
  if (s.text) {
    std::cout << folnewt::render_text(report);
  } else {
    std::cout << report.dump(2) << "\n";
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Newton non-degeneracy of logarithmic foliated spaces"};
  app.require_subcommand(1);
  Settings settings;
  std::string chosen;
  const std::vector<std::pair<std::string, std::string>> commands = {
      {"polyhedra", "Print the Newton polyhedra system"},
      {"logsing", "Decide whether the logarithmic singular locus is empty"},
      {"check-nnd", "Decide Newton non-degeneracy"},
      {"desing", "Desingularize the polyhedra system by combinatorial blow-ups"},
      {"equiv", "Run both deciders and compare"},
      {"validate", "Check an input document"}};
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("input", settings.input, "Input JSON document ('-' for stdin)")->required();
    sub->add_option("--fuel-spairs", settings.fuel_spairs, "S-pair reductions per Groebner run")
        ->check(CLI::PositiveNumber);
    sub->add_option("--fuel-blowups", settings.fuel_blowups, "Maximum number of blow-ups")->check(CLI::NonNegativeNumber);
    sub->add_option("--strategy", settings.strategy, "Center selection strategy")
        ->check(CLI::IsMember({"deepest-first", "lex-first", "widest-polyhedron"}));
    sub->add_option("--emit-dot", settings.emit_dot, "Write the chart tree as Graphviz DOT");
    if (name == "check-nnd") {
      sub->add_option("--route", settings.route, "Decision route")->check(CLI::IsMember({"direct", "theorem"}));
    }
    auto* json_flag = sub->add_flag("--json", "JSON report on stdout (default)");
    sub->add_flag("--text", settings.text, "Human-readable summary instead of JSON")->excludes(json_flag);
    sub->add_flag("--serial", settings.serial, "Use the serial reference path");
    sub->callback([&chosen, name = name] { chosen = name; });
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_usage;
  }
  try {
    return run(chosen, settings);
  } catch (const folnewt::InputError& e) {
    std::cerr << "folnewt: invalid input: " << e.what() << "\n";
  } catch (const UsageError& e) {
    std::cerr << "folnewt: " << e.what() << "\n";
  }
  return exit_usage;
}

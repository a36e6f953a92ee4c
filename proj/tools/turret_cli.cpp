// Command-line front end: classify, simulate, sweep, regions and verify.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "turret/checks.hpp"
#include "turret/config.hpp"

namespace fs = std::filesystem;
using namespace turret;

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kConfigError = 2, kPrecondition = 3 };

struct Common {
  std::string config;
  std::string out;
  std::optional<std::uint64_t> seed;
  bool degrees = false;
};

void add_common(CLI::App* cmd, Common& c, bool needs_config) {
  auto* opt = cmd->add_option("--config", c.config, "Run configuration (JSON)");
  if (needs_config) opt->required();
  cmd->add_option("--out", c.out, "Output directory (overrides output.dir)");
  cmd->add_option("--seed", c.seed, "Seed override for every seeded policy");
  cmd->add_flag("--degrees", c.degrees, "Angles in the config are in degrees");
}

RunConfig load(const Common& c) {
  auto cfg = load_config(c.config, ParseOptions{c.degrees, c.seed});
  if (!c.out.empty()) cfg.output_dir = c.out;
  return cfg;
}

void require_outside_target(const GameState& s) {
  for (int i = 0; i < kNumAttackers; ++i) {
    if (!(s.attackers[i].r >= 1.0)) {
      throw std::invalid_argument("attacker A" + std::to_string(i + 1) + " starts inside the target (r < 1)");
    }
  }
}

fs::path output_path(const RunConfig& c, const std::string& suffix) {
  return fs::path(c.output_dir) / (c.output_prefix + suffix);
}

std::string file_tag(const std::string& name) {
  std::string out;
  for (char ch : name) {
    if (std::isalnum(static_cast<unsigned char>(ch))) {
      out += ch;
    } else if (!out.empty() && out.back() != '_') {
      out += '_';
    }
  }
  while (!out.empty() && out.back() == '_') out.pop_back();
  return out;
}

int cmd_classify(const Common& opt) {
  const auto c = load(opt);
  require_outside_target(c.state);
  std::cout << classification_json(classify(c.state, c.speeds), c).dump(2) << '\n';
  return kOk;
}

int cmd_regions(const Common& opt) {
  const auto c = load(opt);
  require_outside_target(c.state);
  std::cout << regions_json(build_regions(c.state, c.speeds), c.state, c).dump(2) << '\n';
  return kOk;
}

int cmd_simulate(const Common& opt) {
  const auto c = load(opt);
  require_outside_target(c.state);
  if (c.sim.scenario == "open_loop") {
    const auto m = open_loop_matrix(c.state, c.speeds, c.sim.dt, c.sim.t_max);
    nlohmann::json doc = {
        {"header", output_header(c)},
        {"aggressive_direction", to_string(m.aggressive)},
        {"J",
         {{"aggressive", {{"slow", m.J[0][0]}, {"fast", m.J[0][1]}}},
          {"conservative", {{"slow", m.J[1][0]}, {"fast", m.J[1][1]}}}}},
    };
    const auto path = output_path(c, "_table.json");
    write_file(path, doc.dump(2) + "\n");
    std::printf("aggressive=%s  J(aggr,slow)=%d J(aggr,fast)=%d J(cons,slow)=%d J(cons,fast)=%d  -> %s\n",
                to_string(m.aggressive).c_str(), m.J[0][0], m.J[0][1], m.J[1][0], m.J[1][1], path.c_str());
    return kOk;
  }
  for (std::size_t k = 0; k < c.turret.size(); ++k) {
    const auto cfg = make_sim_config(c, c.turret[k]);
    const auto tr = simulate(cfg);
    const std::string stem = "_" + std::to_string(k + 1) + "_" + file_tag(cfg.turret.name);
    const auto csv = output_path(c, stem + ".csv");
    const auto events = output_path(c, stem + "_events.json");
    auto ev = events_json(tr, c);
    ev["turret_policy"] = cfg.turret.name;
    ev["attacker_policy"] = cfg.attackers.name;
    ev["true_nu"] = cfg.true_nu();
    write_file(csv, trajectory_csv(tr, c));
    write_file(events, ev.dump(2) + "\n");
    std::printf("%-22s vs %-18s J=%d captures=%d t_F=%s  -> %s\n", cfg.turret.name.c_str(),
                cfg.attackers.name.c_str(), tr.J, tr.captures(), format_number(tr.t_F).c_str(), csv.c_str());
  }
  return kOk;
}

int cmd_sweep(const Common& opt) {
  const auto c = load(opt);
  const auto grid = run_sweep(c.sweep);
  const auto csv = output_path(c, "_grid.csv");
  const auto curves = output_path(c, "_curves.json");
  write_file(csv, sweep_csv(grid, c));
  write_file(curves, curves_json(sweep_curves(c.sweep), c).dump(2) + "\n");
  const auto counts = label_counts(grid);
  for (int k = 0; k < kNumCases; ++k) {
    if (counts[k]) std::printf("%-22s %7d cells  %d component(s)\n", to_string(Case(k)), counts[k],
                               connected_components(grid, Case(k)));
  }
  std::printf("-> %s, %s\n", csv.c_str(), curves.c_str());
  return kOk;
}

int cmd_verify(const Common& opt, const std::vector<int>& ids) {
  const auto results = run_checks(ids, [](const CheckResult& r) {
    std::printf("%s\n", format_check(r).c_str());
    std::fflush(stdout);
  });
  const auto report = checks_json(results);
  if (!opt.out.empty()) write_file(fs::path(opt.out) / "verify.json", report.dump(2) + "\n");
  return report["passed"].get<bool>() ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Turret versus two attackers with unknown attacker speed"};
  app.require_subcommand(1);
  Common opt;
  std::vector<int> ids;

  auto* classify_cmd = app.add_subcommand("classify", "Print the case label and the memberships behind it");
  auto* simulate_cmd = app.add_subcommand("simulate", "Simulate each configured turret policy");
  auto* sweep_cmd = app.add_subcommand("sweep", "Classify a grid of second-attacker positions");
  auto* regions_cmd = app.add_subcommand("regions", "Print every winning region as arcs");
  auto* verify_cmd = app.add_subcommand("verify", "Run the numerical certification suite");
  for (auto* cmd : {classify_cmd, simulate_cmd, sweep_cmd, regions_cmd}) add_common(cmd, opt, true);
  verify_cmd->add_option("--out", opt.out, "Directory for verify.json");
  verify_cmd->add_option("--check", ids, "Run only these check ids");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kConfigError;
  }

  try {
    if (*classify_cmd) return cmd_classify(opt);
    if (*simulate_cmd) return cmd_simulate(opt);
    if (*sweep_cmd) return cmd_sweep(opt);
    if (*regions_cmd) return cmd_regions(opt);
    if (*verify_cmd) return cmd_verify(opt, ids);
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return kConfigError;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "precondition violated: %s\n", e.what());
    return kPrecondition;
  } catch (const std::domain_error& e) {
    std::fprintf(stderr, "precondition violated: %s\n", e.what());
    return kPrecondition;
  } catch (const NoCapture& e) {
    std::fprintf(stderr, "precondition violated: %s\n", e.what());
    return kPrecondition;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 4;
  }
  return kOk;
}

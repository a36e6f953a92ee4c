#pragma once

// Run configuration documents and the files written from them.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "turret/simulator.hpp"
#include "turret/sweep.hpp"

namespace turret {

inline constexpr const char* kVersion = "1.0.0";

/// Schema violation. pointer() is a JSON pointer to the offending key.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string pointer, const std::string& what)
      : std::runtime_error(pointer.empty() ? what : pointer + ": " + what), pointer_(std::move(pointer)) {}
  [[nodiscard]] const std::string& pointer() const noexcept { return pointer_; }

 private:
  std::string pointer_;
};

struct SimSection {
  double dt = 1e-3;
  double t_max = 30.0;
  std::uint64_t seed = 0;
  Tolerances tol;
  bool track_regions = true;
  bool stop_when_regions_vanish = false;
  /// "single" runs each turret policy once; "open_loop" produces the 2x2 commitment table.
  std::string scenario = "single";

  bool operator==(const SimSection&) const = default;
};

struct RunConfig {
  SpeedParams speeds;
  Speed true_speed = Speed::Slow;
  GameState state;
  SimSection sim;
  std::vector<PolicySpec> turret{PolicySpec{.name = "pursue"}};
  PolicySpec attackers{.name = "ss_fh"};
  /// Sweep ranges; theta bounds default to the half circle CW of the turret.
  SweepSpec sweep;
  std::string output_dir = ".";
  std::string output_prefix = "run";

  bool operator==(const RunConfig&) const = default;
};

struct ParseOptions {
  /// Angles in the document are in degrees.
  bool degrees = false;
  std::optional<std::uint64_t> seed;
};

[[nodiscard]] RunConfig parse_config(const nlohmann::json& doc, const ParseOptions& opt = {});
/// Reads and parses a file; I/O and syntax problems are reported as ConfigError at "".
[[nodiscard]] RunConfig load_config(const std::filesystem::path& path, const ParseOptions& opt = {});
/// Canonical document (radians) that parses back to an equal configuration.
[[nodiscard]] nlohmann::json to_json(const RunConfig& c);

/// FNV-1a 64-bit hash of the canonical document without its output section, as 16 hex digits.
[[nodiscard]] std::string config_hash(const RunConfig& c);

[[nodiscard]] SimConfig make_sim_config(const RunConfig& c, const PolicySpec& turret);

/// Header object carried by every JSON output.
[[nodiscard]] nlohmann::json output_header(const RunConfig& c);
/// Comment line prepended to every CSV output.
[[nodiscard]] std::string csv_header(const RunConfig& c);

/// Shortest round-trip decimal form; inf and nan spelled out.
[[nodiscard]] std::string format_number(double x);

[[nodiscard]] std::string trajectory_csv(const Trajectory& t, const RunConfig& c);
[[nodiscard]] nlohmann::json events_json(const Trajectory& t, const RunConfig& c);
[[nodiscard]] std::string sweep_csv(const SweepGrid& g, const RunConfig& c);
[[nodiscard]] nlohmann::json curves_json(const std::vector<NamedCurve>& curves, const RunConfig& c);
[[nodiscard]] nlohmann::json classification_json(const Classification& cls, const RunConfig& c);
[[nodiscard]] nlohmann::json regions_json(const RegionBundle& b, const GameState& s, const RunConfig& c);
[[nodiscard]] nlohmann::json arcset_json(const ArcSet& s);

/// Writes text to a file, creating parent directories. Throws std::runtime_error.
void write_file(const std::filesystem::path& path, const std::string& text);

}  // namespace turret

#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qfb/dynamics.hpp"
#include "qfb/measurement.hpp"
#include "qfb/systems.hpp"
#include "qfb/trajectory.hpp"

namespace qfb {

// Anything wrong with a config file, preset name, or --set override.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// INI-style sections of ordered key=value pairs; duplicate sections merge and
// the last occurrence of a key wins.
struct Config {
  using Entries = std::vector<std::pair<std::string, std::string>>;
  std::vector<std::pair<std::string, Entries>> sections;

  const std::string* find(const std::string& section, const std::string& key) const;
  void set(const std::string& section, const std::string& key,
           const std::string& value);
  // "section.key=value"; used by --set and by sweep axes.
  void set_dotted(const std::string& dotted_key, const std::string& value);
};

Config parse_config_text(const std::string& text, const std::string& origin);
Config parse_config_file(const std::string& path);

enum class SystemKind { spin, driven_qubit, rydberg, ramsey_dilation };

struct OutputOptions {
  bool final_only = false;
  enum class Content { metrics, feedback_fields };
  Content content = Content::metrics;
};

// One [sweep] entry: a dotted config key and the list of values it takes.
struct SweepAxis {
  std::string section;
  std::string key;
  std::vector<std::string> values;
  std::string name() const { return section + "." + key; }
};

struct Scenario {
  std::string name;
  SystemKind kind = SystemKind::spin;
  HamiltonianSpec spec;
  Vector psi0;
  Vector target;  // empty when the scenario defines no target state
  KrausFamily family;
  ControlSchedule schedule;
  OutputOptions output;
  double reference_frequency = 0.0;  // scales relative noise mu/sigma
  DilationParams dilation;           // meaningful for ramsey_dilation only
  RydbergParams rydberg_params;      // meaningful for rydberg only
};

// Builds every simulation object from a parsed config; throws ConfigError on
// missing keys, unparseable values, or inconsistent combinations.
Scenario build_scenario(const Config& cfg);

// Axes of the optional [sweep] section, in file order.
std::vector<SweepAxis> sweep_axes(const Config& cfg);

// Preset name -> bundled config; otherwise treated as a file path.
Config load_config(const std::string& name_or_path);

}  // namespace qfb

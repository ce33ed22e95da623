#include "qfb/scenario.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "qfb/presets.hpp"

namespace qfb {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

double to_double(const std::string& s, const std::string& what) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size())
      throw ConfigError("trailing characters in value for " + what + ": '" + s + "'");
    return v;
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception&) {
    throw ConfigError("cannot parse number for " + what + ": '" + s + "'");
  }
}

int to_int(const std::string& s, const std::string& what) {
  try {
    std::size_t pos = 0;
    const long v = std::stol(s, &pos);
    if (pos != s.size())
      throw ConfigError("trailing characters in value for " + what + ": '" + s + "'");
    return static_cast<int>(v);
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception&) {
    throw ConfigError("cannot parse integer for " + what + ": '" + s + "'");
  }
}

bool to_bool(const std::string& s, const std::string& what) {
  if (s == "true" || s == "1" || s == "yes" || s == "on") return true;
  if (s == "false" || s == "0" || s == "no" || s == "off") return false;
  throw ConfigError("cannot parse boolean for " + what + ": '" + s + "'");
}

std::string key_name(const std::string& section, const std::string& key) {
  return "[" + section + "] " + key;
}

const std::string* find_opt(const Config& cfg, const std::string& sec,
                            const std::string& key) {
  return cfg.find(sec, key);
}

std::string require_string(const Config& cfg, const std::string& sec,
                           const std::string& key) {
  const std::string* v = cfg.find(sec, key);
  if (!v) throw ConfigError("missing required key " + key_name(sec, key));
  return *v;
}

double require_double(const Config& cfg, const std::string& sec,
                      const std::string& key) {
  return to_double(require_string(cfg, sec, key), key_name(sec, key));
}

double get_double(const Config& cfg, const std::string& sec,
                  const std::string& key, double def) {
  const std::string* v = cfg.find(sec, key);
  return v ? to_double(*v, key_name(sec, key)) : def;
}

int require_int(const Config& cfg, const std::string& sec,
                const std::string& key) {
  return to_int(require_string(cfg, sec, key), key_name(sec, key));
}

bool get_bool(const Config& cfg, const std::string& sec, const std::string& key,
              bool def) {
  const std::string* v = cfg.find(sec, key);
  return v ? to_bool(*v, key_name(sec, key)) : def;
}

Vector qubit_state(const std::string& name, const std::string& what) {
  Vector v = Vector::Zero(2);
  if (name == "plus")
    v(0) = 1.0;
  else if (name == "minus")
    v(1) = 1.0;
  else
    throw ConfigError(what + ": unknown qubit state '" + name +
                      "' (expected plus or minus)");
  return v;
}

Vector rydberg_state(const std::string& name, const std::string& what) {
  if (name == "gg") return rydberg_ket(ryd::gg);
  if (name == "T") return rydberg_triplet();
  throw ConfigError(what + ": unknown pair state '" + name +
                    "' (expected gg or T)");
}

void check_keys(const Config& cfg, const std::string& section,
                const std::set<std::string>& allowed) {
  for (const auto& sec : cfg.sections) {
    if (sec.first != section) continue;
    for (const auto& kv : sec.second)
      if (!allowed.count(kv.first))
        throw ConfigError("unknown key " + key_name(section, kv.first));
  }
}

}  // namespace

const std::string* Config::find(const std::string& section,
                                const std::string& key) const {
  const std::string* hit = nullptr;
  for (const auto& sec : sections) {
    if (sec.first != section) continue;
    for (const auto& kv : sec.second)
      if (kv.first == key) hit = &kv.second;
  }
  return hit;
}

void Config::set(const std::string& section, const std::string& key,
                 const std::string& value) {
  for (auto sec = sections.rbegin(); sec != sections.rend(); ++sec) {
    if (sec->first != section) continue;
    for (auto kv = sec->second.rbegin(); kv != sec->second.rend(); ++kv) {
      if (kv->first == key) {
        kv->second = value;
        return;
      }
    }
    sec->second.emplace_back(key, value);
    return;
  }
  sections.push_back({section, {{key, value}}});
}

void Config::set_dotted(const std::string& dotted_key, const std::string& value) {
  const std::size_t dot = dotted_key.find('.');
  if (dot == std::string::npos || dot == 0 || dot + 1 == dotted_key.size())
    throw ConfigError("override key must look like section.key, got '" +
                      dotted_key + "'");
  set(dotted_key.substr(0, dot), dotted_key.substr(dot + 1), value);
}

Config parse_config_text(const std::string& text, const std::string& origin) {
  Config cfg;
  Config::Entries* current = nullptr;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::size_t hash = line.find_first_of("#;");
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const std::string where = origin + ":" + std::to_string(lineno);
    if (line.front() == '[') {
      if (line.back() != ']')
        throw ConfigError(where + ": malformed section header '" + line + "'");
      const std::string name = trim(line.substr(1, line.size() - 2));
      if (name.empty()) throw ConfigError(where + ": empty section name");
      cfg.sections.push_back({name, {}});
      current = &cfg.sections.back().second;
      continue;
    }
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError(where + ": expected key = value, got '" + line + "'");
    if (!current)
      throw ConfigError(where + ": key outside of any [section]");
    const std::string key = trim(line.substr(0, eq));
    if (key.empty()) throw ConfigError(where + ": empty key");
    current->emplace_back(key, trim(line.substr(eq + 1)));
  }
  return cfg;
}

Config parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str(), path);
}

Config load_config(const std::string& name_or_path) {
  for (const std::string& name : preset_names())
    if (name == name_or_path)
      return parse_config_text(preset_text(name), "preset:" + name);
  std::ifstream probe(name_or_path);
  if (!probe) {
    std::string names;
    for (const std::string& name : preset_names())
      names += (names.empty() ? "" : ", ") + name;
    throw ConfigError("'" + name_or_path +
                      "' is neither a preset (" + names +
                      ") nor a readable config file");
  }
  probe.close();
  return parse_config_file(name_or_path);
}

std::vector<SweepAxis> sweep_axes(const Config& cfg) {
  std::vector<SweepAxis> axes;
  for (const auto& sec : cfg.sections) {
    if (sec.first != "sweep") continue;
    for (const auto& kv : sec.second) {
      SweepAxis axis;
      const std::size_t dot = kv.first.find('.');
      if (dot == std::string::npos || dot == 0 || dot + 1 == kv.first.size())
        throw ConfigError("[sweep] keys must look like section.key, got '" +
                          kv.first + "'");
      axis.section = kv.first.substr(0, dot);
      axis.key = kv.first.substr(dot + 1);
      axis.values = split_list(kv.second);
      axes.push_back(std::move(axis));
    }
  }
  return axes;
}

namespace {

KrausFamily build_family(const Config& cfg, int dim) {
  const std::string* p0 = find_opt(cfg, "measurement", "p0");
  const std::string* plist = find_opt(cfg, "measurement", "p");
  const std::string* p14 = find_opt(cfg, "measurement", "p14");
  try {
    if (plist) {
      const std::vector<std::string> items = split_list(*plist);
      std::vector<double> p;
      for (const std::string& item : items)
        p.push_back(to_double(item, "[measurement] p"));
      if (static_cast<int>(p.size()) != dim)
        throw ConfigError("[measurement] p needs exactly " +
                          std::to_string(dim) + " entries, got " +
                          std::to_string(p.size()));
      return kraus_nlevel(p);
    }
    if (p0) {
      if (dim != 2)
        throw ConfigError("[measurement] p0 only fits two-level systems; "
                          "use p or p14/p58/p9");
      return kraus_qubit(to_double(*p0, "[measurement] p0"));
    }
    if (p14) {
      if (dim != 9)
        throw ConfigError("[measurement] p14/p58/p9 fit the nine-level system only");
      const double v14 = to_double(*p14, "[measurement] p14");
      const double v9 = require_double(cfg, "measurement", "p9");
      const double v58 =
          get_double(cfg, "measurement", "p58", (1.0 - 4.0 * v14 - v9) / 4.0);
      std::vector<double> p(9, v58);
      p[0] = p[1] = p[2] = p[3] = v14;
      p[8] = v9;
      return kraus_nlevel(p);
    }
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("invalid measurement distribution: ") + e.what());
  }
  throw ConfigError("missing [measurement] distribution (p0, p, or p14/p58/p9)");
}

void apply_noise_section(const Config& cfg, Scenario& s, double freq_factor) {
  bool has_noise = false;
  for (const auto& sec : cfg.sections)
    if (sec.first == "noise" && !sec.second.empty()) has_noise = true;
  if (!has_noise) return;
  check_keys(cfg, "noise", {"kind", "amplitudes", "mu", "sigma", "resample_dt"});

  const std::string* kind = find_opt(cfg, "noise", "kind");
  if (!kind) throw ConfigError("missing required key [noise] kind");
  if (*kind == "none") {
    s.spec.noise = NoiseProcess{};
    return;
  }
  if (*kind == "static") {
    const std::string* amps = find_opt(cfg, "noise", "amplitudes");
    if (amps) {
      std::vector<double> values;
      for (const std::string& item : split_list(*amps))
        values.push_back(freq_factor * to_double(item, "[noise] amplitudes"));
      if (values.size() != s.spec.noise_generators.size())
        throw ConfigError("[noise] amplitudes needs one entry per noise channel (" +
                          std::to_string(s.spec.noise_generators.size()) + ")");
      s.spec.noise.static_amplitudes = values;
    } else if (s.spec.noise.kind != NoiseKind::static_offsets) {
      throw ConfigError("[noise] kind=static requires amplitudes for this system");
    }
    s.spec.noise.kind = NoiseKind::static_offsets;
    return;
  }
  if (*kind == "gaussian") {
    NoiseProcess n;
    n.kind = NoiseKind::gaussian_stochastic;
    n.mu = s.reference_frequency * get_double(cfg, "noise", "mu", 0.0);
    n.sigma = s.reference_frequency * get_double(cfg, "noise", "sigma", 0.0);
    n.resample_dt =
        get_double(cfg, "noise", "resample_dt", s.schedule.tau / 10.0);
    if (n.sigma < 0.0) throw ConfigError("[noise] sigma must be non-negative");
    if (!(n.resample_dt > 0.0))
      throw ConfigError("[noise] resample_dt must be positive");
    if (s.schedule.effective_step() > n.resample_dt * (1.0 + 1e-12))
      throw ConfigError(
          "[schedule] step_dt must not exceed [noise] resample_dt");
    if (s.spec.noise_generators.empty())
      throw ConfigError("[noise] kind=gaussian needs a system with noise channels");
    s.spec.noise = n;
    return;
  }
  throw ConfigError("[noise] kind must be none, static, or gaussian, got '" +
                    *kind + "'");
}

}  // namespace

Scenario build_scenario(const Config& cfg) {
  static const std::set<std::string> kSections = {
      "system", "noise", "measurement", "schedule", "output", "sweep"};
  for (const auto& sec : cfg.sections)
    if (!kSections.count(sec.first))
      throw ConfigError("unknown section [" + sec.first + "]");

  Scenario s;
  const std::string kind = require_string(cfg, "system", "kind");
  const std::string unit_name = find_opt(cfg, "system", "freq_unit")
                                    ? *find_opt(cfg, "system", "freq_unit")
                                    : "rad";
  double freq = 1.0;
  if (unit_name == "cycles")
    freq = 2.0 * M_PI;
  else if (unit_name != "rad")
    throw ConfigError("[system] freq_unit must be rad or cycles, got '" +
                      unit_name + "'");

  check_keys(cfg, "schedule", {"tau", "K", "step_dt"});
  s.schedule.tau = require_double(cfg, "schedule", "tau");
  s.schedule.K = require_int(cfg, "schedule", "K");
  s.schedule.step_dt = get_double(cfg, "schedule", "step_dt", 0.0);
  try {
    s.schedule.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("invalid [schedule]: ") + e.what());
  }

  if (kind == "spin") {
    check_keys(cfg, "system",
               {"kind", "freq_unit", "psi0", "target", "omega_L", "theta", "phi",
                "omega_eps", "theta_p", "phi_p"});
    SpinFieldParams p;
    p.omega_L = freq * require_double(cfg, "system", "omega_L");
    p.theta = get_double(cfg, "system", "theta", 0.0);
    p.phi = get_double(cfg, "system", "phi", 0.0);
    p.omega_eps = freq * get_double(cfg, "system", "omega_eps", 0.0);
    p.theta_p = get_double(cfg, "system", "theta_p", p.theta);
    p.phi_p = get_double(cfg, "system", "phi_p", p.phi);
    s.kind = SystemKind::spin;
    s.spec = spin_hamiltonians(p);
    s.reference_frequency = p.omega_L;
  } else if (kind == "driven-qubit") {
    check_keys(cfg, "system",
               {"kind", "freq_unit", "psi0", "target", "omega0", "beta0",
                "d_eps", "d_beta"});
    DrivenQubitParams p;
    p.omega0 = freq * require_double(cfg, "system", "omega0");
    p.beta0 = freq * require_double(cfg, "system", "beta0");
    p.d_eps = freq * get_double(cfg, "system", "d_eps", 0.0);
    p.d_beta = freq * get_double(cfg, "system", "d_beta", 0.0);
    s.kind = SystemKind::driven_qubit;
    s.spec = driven_qubit_hamiltonians(p);
    s.reference_frequency = p.omega0;
  } else if (kind == "rydberg") {
    check_keys(cfg, "system",
               {"kind", "freq_unit", "psi0", "target", "omega1", "omega2",
                "delta", "V"});
    RydbergParams p;
    p.omega1 = freq * require_double(cfg, "system", "omega1");
    p.omega2 = freq * require_double(cfg, "system", "omega2");
    p.delta = freq * require_double(cfg, "system", "delta");
    p.V = freq * require_double(cfg, "system", "V");
    s.kind = SystemKind::rydberg;
    s.spec = rydberg_hamiltonian(p);
    s.rydberg_params = p;
    s.reference_frequency = p.omega1;
  } else if (kind == "ramsey-dilation") {
    check_keys(cfg, "system",
               {"kind", "freq_unit", "g", "t_int", "omega_L", "omega_eps",
                "a0", "b0"});
    DilationParams p;
    p.g = freq * require_double(cfg, "system", "g");
    p.omega_L = freq * require_double(cfg, "system", "omega_L");
    p.omega_eps = freq * get_double(cfg, "system", "omega_eps", 0.0);
    p.t_int = require_double(cfg, "system", "t_int");
    p.a0 = cx(get_double(cfg, "system", "a0", 0.8), 0.0);
    p.b0 = cx(get_double(cfg, "system", "b0", 0.6), 0.0);
    if (std::abs(std::norm(p.a0) + std::norm(p.b0) - 1.0) > 1e-12)
      throw ConfigError("[system] a0/b0 must satisfy a0^2 + b0^2 = 1");
    s.kind = SystemKind::ramsey_dilation;
    s.dilation = p;
    s.spec.h0 = p.omega_L * 0.5 * pauli_z();
    s.reference_frequency = p.omega_L;
  } else {
    throw ConfigError(
        "[system] kind must be spin, driven-qubit, rydberg, or ramsey-dilation, "
        "got '" + kind + "'");
  }

  if (s.kind == SystemKind::ramsey_dilation) {
    s.psi0 = Vector(2);
    s.psi0 << s.dilation.a0, s.dilation.b0;
  } else if (s.spec.dim() == 2) {
    s.psi0 = qubit_state(find_opt(cfg, "system", "psi0")
                             ? *find_opt(cfg, "system", "psi0")
                             : "plus",
                         "[system] psi0");
    const std::string* tgt = find_opt(cfg, "system", "target");
    if (tgt && *tgt != "none") s.target = qubit_state(*tgt, "[system] target");
  } else {
    s.psi0 = rydberg_state(find_opt(cfg, "system", "psi0")
                               ? *find_opt(cfg, "system", "psi0")
                               : "gg",
                           "[system] psi0");
    const std::string* tgt = find_opt(cfg, "system", "target");
    if (tgt && *tgt != "none") s.target = rydberg_state(*tgt, "[system] target");
  }

  apply_noise_section(cfg, s, freq);
  try {
    s.spec.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("invalid system: ") + e.what());
  }

  if (s.kind != SystemKind::ramsey_dilation) {
    check_keys(cfg, "measurement", {"p0", "p", "p14", "p58", "p9"});
    s.family = build_family(cfg, s.spec.dim());
  } else {
    check_keys(cfg, "measurement", {});
  }

  check_keys(cfg, "output", {"final_only", "content"});
  s.output.final_only = get_bool(cfg, "output", "final_only", false);
  const std::string* content = find_opt(cfg, "output", "content");
  if (content) {
    if (*content == "metrics")
      s.output.content = OutputOptions::Content::metrics;
    else if (*content == "feedback-fields")
      s.output.content = OutputOptions::Content::feedback_fields;
    else
      throw ConfigError(
          "[output] content must be metrics or feedback-fields, got '" +
          *content + "'");
  }
  return s;
}

}  // namespace qfb

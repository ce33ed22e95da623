#include "qfb/presets.hpp"

#include <stdexcept>

namespace qfb {

namespace {

struct Preset {
  const char* name;
  const char* description;
  const char* text;
};

// Shared spin-field block: Larmor frequency 1, direction (pi/3, pi/4), the
// actual field 5% stronger and tilted short by 2% in both angles.
constexpr char kFig1[] = R"(
[system]
kind = spin
omega_L = 1
theta = 1.0471975511965976
phi = 0.78539816339744828
omega_eps = 0.05
theta_p = 1.0262536001726656
phi_p = 0.76969020012949929
psi0 = plus

[noise]
kind = static

[measurement]
p0 = 0.2

[schedule]
tau = 0.12566370614359174
K = 250
)";

constexpr char kFig3[] = R"(
[system]
kind = rydberg
freq_unit = cycles
omega1 = 0.015
omega2 = 0.015
delta = 0.74
V = 0.015
psi0 = gg
target = T

[noise]
kind = gaussian
mu = 0.05
sigma = 0.01
resample_dt = 500

[measurement]
p14 = 0.055555555555555552
p58 = 0.16666666666666666
p9 = 0.1111111111111111

[schedule]
tau = 1
K = 3500
)";

constexpr char kFig4[] = R"(
[system]
kind = driven-qubit
omega0 = 1
beta0 = 1
d_eps = 0.1
d_beta = 0.1
psi0 = plus

[noise]
kind = static

[measurement]
p0 = 0.25

[schedule]
tau = 0.088857658763167327
K = 100

[output]
final_only = true

[sweep]
system.d_eps = 0, 0.02, 0.04, 0.06, 0.08, 0.1
system.d_beta = 0, 0.02, 0.04, 0.06, 0.08, 0.1
)";

constexpr char kFig5[] = R"(
[system]
kind = rydberg
freq_unit = cycles
omega1 = 0.015
omega2 = 0.015
delta = 0.74
V = 0.015
psi0 = gg
target = T

[noise]
kind = gaussian
mu = 0.05
sigma = 0.01
resample_dt = 500

[measurement]
p14 = 0.055555555555555552
p58 = 0.16666666666666666
p9 = 0.1111111111111111

[schedule]
tau = 1
K = 3500

[sweep]
noise.mu = 0, 0.05, 0.1, 0.15, 0.2, 0.25, 0.3
)";

constexpr char kFig6[] = R"(
[system]
kind = driven-qubit
omega0 = 1
beta0 = 1
d_eps = 0.1
d_beta = 0.1
psi0 = plus

[noise]
kind = static

[measurement]
p0 = 0.25

[schedule]
tau = 0.088857658763167327
K = 500

[sweep]
measurement.p0 = 0.05, 0.1, 0.15, 0.2, 0.25, 0.3, 0.35, 0.4, 0.45
)";

constexpr char kFig7[] = R"(
[system]
kind = rydberg
freq_unit = cycles
omega1 = 0.015
omega2 = 0.015
delta = 0.74
V = 0.015
psi0 = gg
target = T

[noise]
kind = gaussian
mu = 0.1
sigma = 0.1
resample_dt = 500

[measurement]
p14 = 0.055555555555555552
p9 = 0.1111111111111111

[schedule]
tau = 1
K = 1167

[sweep]
measurement.p14 = 0.01, 0.055555555555555552, 0.083333333333333329, 0.1111111111111111
)";

constexpr char kFig8[] = R"(
[system]
kind = spin
omega_L = 1
theta = 1.0471975511965976
phi = 0.78539816339744828
omega_eps = 0.05
theta_p = 1.0262536001726656
phi_p = 0.76969020012949929
psi0 = plus

[noise]
kind = static

[measurement]
p0 = 0.2

[schedule]
tau = 0.12566370614359174
K = 50

[output]
content = feedback-fields
)";

constexpr Preset kPresets[] = {
    {"fig1", "spin-1/2 in a misaligned static field; single-run spin tracking",
     kFig1},
    {"fig3",
     "Rydberg atom pair under stochastic laser noise; controlled entangling "
     "oscillation",
     kFig3},
    {"fig4",
     "driven qubit; grid sweep of static offsets, final-time fidelity only",
     kFig4},
    {"fig5", "Rydberg atom pair; sweep of the noise mean at weak sigma", kFig5},
    {"fig6", "driven qubit; sweep of the measurement strength p0", kFig6},
    {"fig7", "Rydberg atom pair; sweep of the measurement strength p14", kFig7},
    {"fig8",
     "spin-1/2 static-field scenario; per-cycle feedback field tabulation",
     kFig8},
};

}  // namespace

std::vector<std::string> preset_names() {
  std::vector<std::string> names;
  for (const Preset& p : kPresets) names.push_back(p.name);
  return names;
}

std::string preset_text(const std::string& name) {
  for (const Preset& p : kPresets)
    if (name == p.name) return p.text;
  throw std::out_of_range("unknown preset '" + name + "'");
}

std::string preset_description(const std::string& name) {
  for (const Preset& p : kPresets)
    if (name == p.name) return p.description;
  throw std::out_of_range("unknown preset '" + name + "'");
}

}  // namespace qfb

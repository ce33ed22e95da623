#pragma once

#include <string>
#include <vector>

namespace qfb {

// Bundled scenario configs, keyed by short names.
std::vector<std::string> preset_names();
std::string preset_text(const std::string& name);
std::string preset_description(const std::string& name);

}  // namespace qfb

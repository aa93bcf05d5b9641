#pragma once

#include <string>

#include "lzs/qubit_model.hpp"
#include "lzs/sweep.hpp"

namespace lzs {

/// Validated run description loaded from a flat key = value file.
/// Units are fixed by the format: GHz, mPhi0, kelvin.
struct RunConfig {
    QubitSpec qubit;
    double omega = 0.0;   // drive.omega
    double gamma2 = 0.0;  // rates.gamma2
    GridSpec grid;
    Model model = Model::first_diamond;
};

/// Parses and validates a config file. Unknown keys are rejected; errors
/// name the key and line.
RunConfig load_config(const std::string& path);

/// Same, from an in-memory string ('name' only labels error messages).
RunConfig parse_config(const std::string& text, const std::string& name = "<config>");

/// Canonical echo of every parameter as ordered key/value pairs; writing
/// these lines back as "key = value" reproduces an equivalent config.
std::vector<std::pair<std::string, std::string>> echo_config(const RunConfig& cfg);

}  // namespace lzs

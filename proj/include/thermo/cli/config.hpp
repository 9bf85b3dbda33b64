#pragma once

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "thermo/model.hpp"

namespace thermo::cli {

/// Malformed config text or flags; maps to exit code 2.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Mode { Ies, Ics, Bounds, Bath };

std::string_view mode_name(Mode m);
Mode parse_mode(std::string_view s);

struct SweepAxis {
    std::string variable;
    double min = 0.0;
    double max = 0.0;
    int count = 2;
    bool log = false;
};

struct ScenarioConfig {
    Mode mode = Mode::Ies;
    ReadoutParams params;
    /// Parameters set by the user, as opposed to defaults.
    std::set<std::string> explicit_params;
    std::optional<SweepAxis> sweep;
    std::optional<SweepAxis> sweep2;
    /// ies: full|steady|steady_simplified|short_time|short_time_simplified
    /// bath: full|weak|strong
    std::string formula = "full";
    std::string out_path;
    std::string format = "csv";
    std::string svg_path;
    bool fig2 = false;
};

/// Parses `key = value` lines grouped under [general], [params], [sweep], [sweep2]
/// and [output] headers, layered on top of `base`. '#' starts a comment.
ScenarioConfig parse_config(std::string_view text, ScenarioConfig base = {});
ScenarioConfig load_config_file(const std::string& path, ScenarioConfig base = {});

/// Throws ConfigError for an unusable configuration.
void check_config(const ScenarioConfig& config);

/// Values of one axis; n_qubits axes are rounded to distinct integers.
std::vector<double> axis_values(const SweepAxis& axis);

}  // namespace thermo::cli

#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fbp/radial_stationary.hpp"

namespace fbp::cli {

/// Bad configuration file or conflicting flags (exit code 2).
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::optional<double> radius;
    std::optional<double> sigma_tilde;
    std::vector<int> modes;  // empty: 2..nmax where a range is wanted, 2 where one mode is
    int nmax = 12;
    int n_r = 20;
    int n_theta = 32;
    std::map<std::string, double> tolerances;
    std::filesystem::path out = "fbp_out";
    std::uint64_t seed = 20240607;
    double eps_max = 0.2;
    std::vector<double> eps_ladder;
    std::vector<double> bessel_x;
    bool tamper_m_tilde = false;

    /// Defaults for every named tolerance and ladder.
    static RunConfig defaults();

    /// R_S = 2 when neither geometry field is set.
    [[nodiscard]] StationaryState base() const;
    [[nodiscard]] double tolerance(const std::string& name) const;
    /// Modes for range commands: the explicit list, or 2..nmax.
    [[nodiscard]] std::vector<int> mode_range() const;
    /// First explicit mode, or 2.
    [[nodiscard]] int single_mode() const;
    /// Throws ConfigError on any invalid field.
    void validate() const;
};

/// Reads a TOML file over `into`. Unknown keys, wrong types and parse
/// errors raise ConfigError naming the file, line and field.
void load_config(const std::filesystem::path& path, RunConfig& into);

}  // namespace fbp::cli

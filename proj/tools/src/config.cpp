#include "fbp/cli/config.hpp"

#include <cmath>
#include <sstream>

#include <toml.hpp>

namespace fbp::cli {

namespace {

std::string where(const std::filesystem::path& path, const toml::node& node, const std::string& field) {
    std::ostringstream os;
    os << path.string() << ":" << node.source().begin.line << ": field '" << field << "'";
    return os.str();
}

double as_number(const std::filesystem::path& path, const toml::node& node, const std::string& field) {
    if (const auto v = node.value<double>()) return *v;
    throw ConfigError(where(path, node, field) + " must be a number");
}

long long as_integer(const std::filesystem::path& path, const toml::node& node, const std::string& field) {
    if (node.is_integer()) return node.as_integer()->get();
    throw ConfigError(where(path, node, field) + " must be an integer");
}

template <class T, class Read>
std::vector<T> as_list(const std::filesystem::path& path, const toml::node& node, const std::string& field, Read read) {
    const toml::array* arr = node.as_array();
    if (arr == nullptr) throw ConfigError(where(path, node, field) + " must be an array");
    std::vector<T> out;
    for (std::size_t i = 0; i < arr->size(); ++i) {
        out.push_back(static_cast<T>(read(path, (*arr)[i], field + "[" + std::to_string(i) + "]")));
    }
    return out;
}

const toml::table& section(const std::filesystem::path& path, const toml::node& node, const std::string& name) {
    const toml::table* t = node.as_table();
    if (t == nullptr) throw ConfigError(where(path, node, name) + " must be a table");
    return *t;
}

[[noreturn]] void unknown(const std::filesystem::path& path, const toml::node& node, const std::string& field) {
    throw ConfigError(where(path, node, field) + " is not a known setting");
}

}  // namespace

RunConfig RunConfig::defaults() {
    RunConfig c;
    c.tolerances = {
        {"bessel_identity", 1e-13}, {"radius_residual", 1e-12}, {"lemma_fd", 1e-6},
        {"pde_residual", 1e-9},     {"dual_assembly", 1e-10},   {"mu_prime", 1e-12},
        {"slope", 0.2},             {"frechet_first", 1e-6},    {"frechet_second", 1e-4},
        {"pitchfork", 1e-10},
    };
    for (int k = 0; k < 8; ++k) c.eps_ladder.push_back(0.1 / std::pow(2.0, k));
    c.bessel_x = {0.5, 1.0, 2.0, 5.0, 10.0, 20.0, 50.0};
    return c;
}

StationaryState RunConfig::base() const {
    if (sigma_tilde) return StationaryState::from_sigma_tilde(*sigma_tilde);
    return StationaryState::from_radius(radius.value_or(2.0));
}

double RunConfig::tolerance(const std::string& name) const {
    const auto it = tolerances.find(name);
    if (it == tolerances.end()) throw ConfigError("unknown tolerance '" + name + "'");
    return it->second;
}

std::vector<int> RunConfig::mode_range() const {
    if (!modes.empty()) return modes;
    std::vector<int> out;
    for (int n = 2; n <= nmax; ++n) out.push_back(n);
    return out;
}

int RunConfig::single_mode() const { return modes.empty() ? 2 : modes.front(); }

void RunConfig::validate() const {
    if (radius && sigma_tilde) throw ConfigError("radius and sigma_tilde are mutually exclusive");
    if (radius && !(*radius > 0.0 && std::isfinite(*radius))) throw ConfigError("radius must be positive");
    if (sigma_tilde && !(*sigma_tilde > 0.0 && *sigma_tilde < 1.0)) {
        throw ConfigError("sigma_tilde must lie in (0, 1)");
    }
    for (int n : modes) {
        if (n < 2 || n > 100) throw ConfigError("modes must lie in [2, 100], got " + std::to_string(n));
    }
    if (nmax < 2 || nmax > 100) throw ConfigError("nmax must lie in [2, 100]");
    if (n_r < 8) throw ConfigError("n_r must be >= 8");
    if (n_theta < 16 || n_theta % 2 != 0) throw ConfigError("n_theta must be even and >= 16");
    for (const auto& [name, value] : tolerances) {
        if (!(value > 0.0)) throw ConfigError("tolerance '" + name + "' must be positive");
    }
    if (!(eps_max > 0.0)) throw ConfigError("eps_max must be positive");
    for (double e : eps_ladder) {
        if (!(e > 0.0)) throw ConfigError("eps_ladder entries must be positive");
    }
    if (eps_ladder.size() < 2) throw ConfigError("eps_ladder needs at least two entries");
    for (double x : bessel_x) {
        if (!(x >= 0.0)) throw ConfigError("bessel_x entries must be >= 0");
    }
}

void load_config(const std::filesystem::path& path, RunConfig& into) {
    toml::table root;
    try {
        root = toml::parse_file(path.string());
    } catch (const toml::parse_error& e) {
        std::ostringstream os;
        os << path.string() << ":" << e.source().begin.line << ":" << e.source().begin.column << ": "
           << e.description();
        throw ConfigError(os.str());
    }
    RunConfig c = into;
    for (const auto& [key, node] : root) {
        const std::string k(key.str());
        if (k == "geometry") {
            for (const auto& [gk, gv] : section(path, node, k)) {
                const std::string f = k + "." + std::string(gk.str());
                if (gk == "radius") c.radius = as_number(path, gv, f);
                else if (gk == "sigma_tilde") c.sigma_tilde = as_number(path, gv, f);
                else unknown(path, gv, f);
            }
        } else if (k == "modes") {
            for (const auto& [mk, mv] : section(path, node, k)) {
                const std::string f = k + "." + std::string(mk.str());
                if (mk == "n") c.modes = as_list<int>(path, mv, f, as_integer);
                else if (mk == "nmax") c.nmax = static_cast<int>(as_integer(path, mv, f));
                else unknown(path, mv, f);
            }
        } else if (k == "grid") {
            for (const auto& [gk, gv] : section(path, node, k)) {
                const std::string f = k + "." + std::string(gk.str());
                if (gk == "n_r") c.n_r = static_cast<int>(as_integer(path, gv, f));
                else if (gk == "n_theta") c.n_theta = static_cast<int>(as_integer(path, gv, f));
                else unknown(path, gv, f);
            }
        } else if (k == "tolerances") {
            for (const auto& [tk, tv] : section(path, node, k)) {
                const std::string name(tk.str());
                const std::string f = k + "." + name;
                if (c.tolerances.count(name) == 0) unknown(path, tv, f);
                const double v = as_number(path, tv, f);
                if (!(v > 0.0)) throw ConfigError(where(path, tv, f) + " must be positive");
                c.tolerances[name] = v;
            }
        } else if (k == "output") {
            for (const auto& [ok, ov] : section(path, node, k)) {
                const std::string f = k + "." + std::string(ok.str());
                if (ok != "dir") unknown(path, ov, f);
                const auto s = ov.value<std::string>();
                if (!s) throw ConfigError(where(path, ov, f) + " must be a string");
                c.out = *s;
            }
        } else if (k == "run") {
            for (const auto& [rk, rv] : section(path, node, k)) {
                const std::string f = k + "." + std::string(rk.str());
                if (rk == "seed") {
                    const long long s = as_integer(path, rv, f);
                    if (s < 0) throw ConfigError(where(path, rv, f) + " must be >= 0");
                    c.seed = static_cast<std::uint64_t>(s);
                } else if (rk == "eps_max") {
                    c.eps_max = as_number(path, rv, f);
                } else if (rk == "eps_ladder") {
                    c.eps_ladder = as_list<double>(path, rv, f, as_number);
                } else if (rk == "bessel_x") {
                    c.bessel_x = as_list<double>(path, rv, f, as_number);
                } else {
                    unknown(path, rv, f);
                }
            }
        } else {
            unknown(path, node, k);
        }
    }
    if (c.radius && c.sigma_tilde) {
        throw ConfigError(path.string() + ": geometry.radius and geometry.sigma_tilde are mutually exclusive");
    }
    into = c;
}

}  // namespace fbp::cli

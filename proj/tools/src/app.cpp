#include "fbp/cli/app.hpp"

#include <ostream>

#include <CLI11.hpp>

#include "fbp/errors.hpp"

namespace fbp::cli {

namespace {

struct Flags {
    std::string config;
    std::optional<double> rs;
    std::optional<double> sigma_tilde;
    std::optional<int> n;
    std::optional<int> nmax;
    std::optional<std::string> out;
    std::optional<int> nr;
    std::optional<int> ntheta;
    bool tamper = false;
};

void add_common(CLI::App* sub, Flags& f) {
    sub->add_option("--config", f.config, "TOML configuration file")->check(CLI::ExistingFile);
    sub->add_option("--rs", f.rs, "stationary radius R_S");
    sub->add_option("--sigma-tilde", f.sigma_tilde, "external nutrient level, 0 < sigma~ < 1");
    sub->add_option("--n", f.n, "mode index");
    sub->add_option("--nmax", f.nmax, "largest mode for range commands");
    sub->add_option("--out", f.out, "output directory");
    sub->add_option("--nr", f.nr, "radial nodes N_R");
    sub->add_option("--ntheta", f.ntheta, "angular nodes N_theta");
}

RunConfig resolve(const Flags& f) {
    RunConfig c = RunConfig::defaults();
    if (!f.config.empty()) load_config(f.config, c);
    if (f.rs && f.sigma_tilde) throw ConfigError("--rs and --sigma-tilde are mutually exclusive");
    if (f.rs) {
        c.radius = f.rs;
        c.sigma_tilde.reset();
    }
    if (f.sigma_tilde) {
        c.sigma_tilde = f.sigma_tilde;
        c.radius.reset();
    }
    if (f.n) c.modes = {*f.n};
    if (f.nmax) c.nmax = *f.nmax;
    if (f.out) c.out = *f.out;
    if (f.nr) c.n_r = *f.nr;
    if (f.ntheta) c.n_theta = *f.ntheta;
    c.tamper_m_tilde = f.tamper;
    c.validate();
    return c;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Bifurcation analysis of a free-boundary tumor model", "fbpbif"};
    app.require_subcommand(1);
    Flags f;
    const char* names[] = {"radius", "bessel-table", "expansion", "bifpoints", "branch", "verify"};
    const char* help[] = {
        "stationary radius, nutrient level and boundary derivatives (JSON)",
        "modified Bessel values, derivatives and identity residuals (CSV)",
        "remainder ladder of the second-order expansion of F (CSV)",
        "bifurcation points, second-order coefficients and pitchfork verdicts (CSV)",
        "continuation of the mode-n branch with contour export (CSV, JSON, SVG)",
        "full verification suite (text report)",
    };
    CLI::App* subs[6];
    for (int i = 0; i < 6; ++i) {
        subs[i] = app.add_subcommand(names[i], help[i]);
        add_common(subs[i], f);
    }
    subs[5]->add_flag("--tamper-m-tilde", f.tamper)->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "fbpbif: " << e.what() << "\n";
        return kExitUsage;
    }

    RunConfig config;
    try {
        config = resolve(f);
        // surface geometry errors as usage errors
        (void)config.base();
    } catch (const ConfigError& e) {
        err << "fbpbif: config error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DomainError& e) {
        err << "fbpbif: config error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (subs[0]->parsed()) return cmd_radius(config, out);
        if (subs[1]->parsed()) return cmd_bessel_table(config, out);
        if (subs[2]->parsed()) return cmd_expansion(config, out);
        if (subs[3]->parsed()) return cmd_bifpoints(config, out);
        if (subs[4]->parsed()) return cmd_branch(config, out, err);
        return cmd_verify(config, out);
    } catch (const ConfigError& e) {
        err << "fbpbif: config error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DomainError& e) {
        err << "fbpbif: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "fbpbif: " << e.what() << "\n";
        return kExitFailure;
    }
}

}  // namespace fbp::cli

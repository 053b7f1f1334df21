#include "bargheat/cli.hpp"
#include "bargheat/errors.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

int main(int argc, char** argv) {
    CLI::App app{"Bargmann transform heat solvers and verification suites"};
    app.require_subcommand(0, 1);

    const std::vector<std::pair<std::string, std::string>> subs = {
        {"transform", "forward (real init) or inverse (complex init) transform at probe points"},
        {"solve", "evaluate a heat solution over the (t, point) grid"},
        {"kernel", "tabulate the Mehler or complex-harmonic kernel"},
        {"verify", "run a named check suite"},
        {"table", "acceptance summary, one row per criterion"},
    };
    for (const auto& [name, help] : subs) app.add_subcommand(name, help)->fallthrough();

    // Flags stay strings so that the config file and the command line share one parser.
    const std::vector<std::pair<std::string, std::string>> keys = {
        {"op", "operator: dirac-real dirac-complex euler-real euler-complex harmonic-real harmonic-complex"},
        {"a", "operator / transform parameter (default 1)"},
        {"t", "comma-separated times"},
        {"x", "comma-separated real probes"},
        {"z", "comma-separated complex probes, e.g. 1+0.5i"},
        {"s", "second Mehler argument (kernel)"},
        {"w", "second complex-kernel argument (kernel)"},
        {"init", "initial condition: expression in x or z, or a PolyGauss record"},
        {"kernel", "mehler | complex-harmonic"},
        {"method", "exact | series | quadrature"},
        {"suite", "isometry | intertwine | residual | semigroup | lemma23 | errata"},
        {"quad-order", "quadrature order (default 64)"},
        {"tolerance", "cross-check tolerance (default 1e-8)"},
        {"format", "csv | json (default csv)"},
    };
    std::map<std::string, std::string> given;
    for (const auto& [key, help] : keys) app.add_option("--" + key, given[key], help);
    bool alt_constants = false;
    app.add_flag("--alt-constants", alt_constants, "kernel: 2i complex prefactor or the unhalved hyperbolic Mehler form");
    std::string config_path;
    app.add_option("--config", config_path, "file of 'key = value' lines; flags override it");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    bargheat::cli::RunConfig config;
    try {
        if (!config_path.empty()) {
            std::ifstream in(config_path);
            if (!in) throw bargheat::UsageError("cannot read config file '" + config_path + "'");
            std::stringstream buf;
            buf << in.rdbuf();
            bargheat::cli::apply_config_text(buf.str(), config);
        }
        for (const auto& [key, help] : keys)
            if (app.count("--" + key) > 0) bargheat::cli::apply_setting(key, given[key], config);
        if (alt_constants) config.alt_constants = true;
        for (auto* sub : app.get_subcommands()) config.subcommand = sub->get_name();
        if (config.subcommand.empty()) throw bargheat::UsageError("no subcommand given (see --help)");
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return bargheat::cli::run(config, std::cout, std::cerr);
}

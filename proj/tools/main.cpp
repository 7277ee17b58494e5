#include "common.hpp"

int run_density(const rlcli::CommonOpts&, const std::string& heavy, const std::string& light);
int run_decompose(const rlcli::CommonOpts&, const std::string& heavy, const std::string& light,
                  const std::string& strategy);
int run_ramsey(const rlcli::CommonOpts&, const std::vector<std::string>& families, bool minimal,
               const std::string& emit_core);
int run_conjecture(const rlcli::CommonOpts&);
int run_explore(const rlcli::CommonOpts&, const std::string& fixture);
int run_mc(const rlcli::CommonOpts&, const std::string& heavy, const std::string& light,
           const std::vector<int>& ns, const std::vector<double>& cgrid, int trials,
           bool endpoints);
int run_catalog(const rlcli::CommonOpts&, int n, bool connected);

int main(int argc, char** argv) {
    CLI::App app{"ramsey-lab: density, decomposition and Ramsey workbench for small graphs"};
    app.require_subcommand(1);

    rlcli::CommonOpts opts;

    std::string heavy = "K4", light = "K3";
    auto* density = app.add_subcommand("density", "exact density report for graph6 inputs");
    rlcli::add_common_flags(density, opts);
    density->add_option("--heavy", heavy, "heavy family spec");
    density->add_option("--light", light, "light family spec");
    bool with_pair = false;
    density->add_flag("--pair", with_pair, "include pair densities and lemma report");

    std::string strategy = "auto";
    auto* decompose = app.add_subcommand("decompose", "anti-Ramsey edge bipartitions");
    rlcli::add_common_flags(decompose, opts);
    decompose->add_option("--heavy", heavy, "heavy family spec");
    decompose->add_option("--light", light, "light family spec");
    decompose->add_option("--strategy", strategy, "auto|integer:k")->capture_default_str();

    std::vector<std::string> family_specs;
    bool minimal = false;
    std::string emit_core;
    auto* ramsey = app.add_subcommand("ramsey", "exact Ramsey decisions");
    rlcli::add_common_flags(ramsey, opts);
    ramsey->add_option("--family", family_specs, "family spec per color (repeat)")->required();
    ramsey->add_flag("--minimal", minimal, "emit a minimally Ramsey subgraph");
    ramsey->add_option("--emit-core", emit_core,
                       "write a core fixture extracted from the minimal subgraph (2 families)");

    auto* conjecture = app.add_subcommand("conjecture-scan",
                                          "forest-deletion scan over a graph6 stream");
    rlcli::add_common_flags(conjecture, opts);

    std::string fixture;
    auto* explore = app.add_subcommand("explore", "exploration trace over a core fixture");
    rlcli::add_common_flags(explore, opts, false);
    explore->add_option("--fixture", fixture, "core fixture JSON file")->required();

    std::vector<int> ns = {8};
    std::vector<double> cgrid = {0.25, 0.5, 1.0, 2.0, 4.0};
    int trials = 200;
    bool endpoints = true;
    auto* mc = app.add_subcommand("mc-threshold", "Monte-Carlo Ramsey fraction table");
    rlcli::add_common_flags(mc, opts, false);
    mc->add_option("--heavy", heavy, "heavy family spec");
    mc->add_option("--light", light, "light family spec");
    mc->add_option("--n", ns, "vertex counts");
    mc->add_option("--c-grid", cgrid, "multipliers of n^(-1/alpha)");
    mc->add_option("--trials", trials, "trials per cell")->check(CLI::PositiveNumber);
    mc->add_flag("--endpoints,!--no-endpoints", endpoints, "include p=0 and p=1 rows");

    int catalog_n = 6;
    bool connected_only = false;
    auto* catalog = app.add_subcommand("catalog", "emit all small graphs as graph6");
    rlcli::add_common_flags(catalog, opts, false);
    catalog->add_option("--n", catalog_n, "vertex count (<= 8)")->required();
    catalog->add_flag("--connected", connected_only, "connected representatives only");

    CLI11_PARSE(app, argc, argv);

    try {
        if (density->parsed())
            return run_density(opts, with_pair ? heavy : "", with_pair ? light : "");
        if (decompose->parsed()) return run_decompose(opts, heavy, light, strategy);
        if (ramsey->parsed()) return run_ramsey(opts, family_specs, minimal, emit_core);
        if (conjecture->parsed()) return run_conjecture(opts);
        if (explore->parsed()) return run_explore(opts, fixture);
        if (mc->parsed()) return run_mc(opts, heavy, light, ns, cgrid, trials, endpoints);
        if (catalog->parsed()) return run_catalog(opts, catalog_n, connected_only);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

#include <string>

#include <CLI11.hpp>

#include "adshiggs/pipeline.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Higgs-bundle construction and verification of closed AdS 3-manifolds"};
    app.require_subcommand(1);

    std::string fault, out_file, out_dir, config_path;

    CLI::App* identities =
        app.add_subcommand("identities", "Certify the displayed algebraic identities exactly");
    identities->add_option("--inject-fault", fault,
                           "Flip one sign in the named identity (metric-entries, detg, "
                           "fiber-geodesic, gauss-map, domination-lemma)");
    identities->add_option("--out", out_file, "Also write the certificates JSON here");

    CLI::App* report = app.add_subcommand("report", "Run the full pipeline and print a report");
    report->add_option("config", config_path, "Run configuration (JSON)")->required();
    report->add_option("--out", out_dir, "Directory for report.json and CSV dumps");

    CLI::App* fields = app.add_subcommand("fields", "Dump field CSVs for external plotting");
    fields->add_option("config", config_path, "Run configuration (JSON)")->required();
    fields->add_option("--out", out_dir, "Output directory");

    CLI::App* solve = app.add_subcommand("solve", "Run the torus Hitchin solver");
    solve->add_option("config", config_path, "Run configuration (JSON)")->required();

    CLI11_PARSE(app, argc, argv);

    if (identities->parsed()) return adshiggs::cmd_identities(fault, out_file);
    if (report->parsed()) return adshiggs::cmd_report(config_path, out_dir);
    if (fields->parsed()) return adshiggs::cmd_fields(config_path, out_dir);
    if (solve->parsed()) return adshiggs::cmd_solve(config_path);
    return 1;
}

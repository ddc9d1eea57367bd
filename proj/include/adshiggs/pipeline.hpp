#pragma once

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "adshiggs/ads.hpp"
#include "adshiggs/config.hpp"
#include "adshiggs/grassmann.hpp"
#include "adshiggs/higgs.hpp"
#include "adshiggs/identities.hpp"

namespace adshiggs {

/// Grid, fields and metric realized from a RunConfig; when the config says
/// "solve", the metric comes from the torus solver.
struct Pipeline {
    GridPtr grid;
    HiggsData data;
    HarmonicMetric metric;
    std::optional<HitchinResult> solver;
};

Pipeline build_pipeline(const RunConfig& cfg);

nlohmann::json certificates_json(Fault fault);

/// Full report: flatness, Euler numbers, domination, splitting classes,
/// Pfaffian/Hopf, transversality sweep, AdS volume against pi^2 |e1+e2|,
/// fiber diagnostics, conformality. Closed-chart-only quantities are null
/// on a disk patch.
nlohmann::json run_report(const RunConfig& cfg, const Pipeline& pipe);

/// CSV dumps (x, y, named columns): g1, g2, Vol(g1), Vol(g2), Pfaffian,
/// |XW - YZ|, <f_z,f_z>; plus grid metadata JSON.
void dump_fields(const RunConfig& cfg, const Pipeline& pipe, const std::string& out_dir);

/// Command entry points (exit codes: 0 ok, 2 certification failure,
/// 3 solver non-convergence, 4 config error).
int cmd_identities(const std::string& fault_name, const std::string& out_file);
int cmd_report(const std::string& config_path, const std::string& out_dir);
int cmd_fields(const std::string& config_path, const std::string& out_dir);
int cmd_solve(const std::string& config_path);

}  // namespace adshiggs

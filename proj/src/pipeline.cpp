#include "adshiggs/pipeline.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>

namespace adshiggs {

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<std::size_t> sample_nodes(const JetEvaluator& jets, std::size_t count) {
    std::vector<std::size_t> valid;
    const GridPtr& grid = jets.grid();
    for (std::size_t i = 0; i < grid->size(); ++i)
        if (grid->inside[i] && jets.point_valid(i)) valid.push_back(i);
    std::vector<std::size_t> out;
    if (valid.empty()) return out;
    for (std::size_t s = 0; s < count; ++s)
        out.push_back(valid[valid.size() * (2 * s + 1) / (2 * count)]);
    return out;
}

struct TransversalitySweep {
    double min_abs = 0.0;
    bool all_above_threshold = true;
    std::size_t nodes = 0;
};

TransversalitySweep transversality_sweep(const JetEvaluator& jets, int n_theta) {
    TransversalitySweep sweep;
    sweep.min_abs = std::numeric_limits<double>::infinity();
    const GridPtr& grid = jets.grid();
    for (std::size_t i = 0; i < grid->size(); ++i) {
        if (!grid->inside[i] || !jets.point_valid(i)) continue;
        ++sweep.nodes;
        for (int t = 0; t < n_theta; ++t) {
            const TransversalityReport rep =
                transversality(jets.at_with_c(i, 2.0 * kPi * t / n_theta, cxd{}));
            sweep.min_abs = std::min(sweep.min_abs, rep.abs_xw_minus_yz);
            sweep.all_above_threshold = sweep.all_above_threshold && rep.transverse;
        }
    }
    if (sweep.nodes == 0) {
        sweep.min_abs = 0.0;
        sweep.all_above_threshold = false;
    }
    return sweep;
}

void write_csv(const std::filesystem::path& path, const std::string& header,
               const std::vector<std::string>& rows) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << header << "\n";
    for (const auto& r : rows) out << r << "\n";
}

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

}  // namespace

Pipeline build_pipeline(const RunConfig& cfg) {
    Pipeline pipe;
    pipe.grid = make_grid(cfg.domain);

    ComplexField alpha = realize_field(cfg.alpha, pipe.grid, "alpha");
    ComplexField beta = realize_field(cfg.beta, pipe.grid, "beta");
    ComplexField gamma = realize_field(cfg.gamma, pipe.grid, "gamma");
    ComplexField delta = realize_field(cfg.delta, pipe.grid, "delta");
    try {
        pipe.data = make_higgs_data(std::move(alpha), std::move(beta), std::move(gamma),
                                    std::move(delta), cfg.e1, cfg.e2);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("higgs data: ") + e.what());
    }

    if (cfg.metric.solve) {
        const double ih = cfg.metric.initial_h, ik = cfg.metric.initial_k;
        HarmonicMetric initial = make_harmonic_metric(
            sample(pipe.grid, [ih](cxd) { return cxd{ih, 0.0}; }),
            sample(pipe.grid, [ik](cxd) { return cxd{ik, 0.0}; }));
        HitchinOptions opt;
        opt.tol = cfg.metric.tol;
        opt.max_iter = cfg.metric.max_iter;
        pipe.solver = solve_hitchin_torus(pipe.data, initial, opt);
        pipe.metric = pipe.solver->metric;
    } else {
        ComplexField h = realize_field(cfg.metric.h, pipe.grid, "h");
        ComplexField k = realize_field(cfg.metric.k, pipe.grid, "k");
        try {
            pipe.metric = make_harmonic_metric(std::move(h), std::move(k));
        } catch (const std::invalid_argument& e) {
            throw ConfigError(std::string("metric: ") + e.what());
        }
    }
    return pipe;
}

nlohmann::json certificates_json(Fault fault) {
    nlohmann::json out;
    out["schema"] = 1;
    out["fault_injected"] = fault_name(fault);
    bool all_ok = true;
    out["groups"] = nlohmann::json::array();
    for (const CertificateGroup& group : certify_all(fault)) {
        nlohmann::json gj;
        gj["name"] = group.name;
        gj["ok"] = group.ok();
        if (!group.note.empty()) gj["note"] = group.note;
        gj["entries"] = nlohmann::json::array();
        for (const Certificate& c : group.entries) {
            nlohmann::json cj;
            cj["identity"] = c.identity;
            cj["ok"] = c.ok;
            cj["residual_terms"] = c.residual_terms;
            if (!c.ok) cj["residual"] = c.residual;
            gj["entries"].push_back(cj);
        }
        all_ok = all_ok && group.ok();
        out["groups"].push_back(gj);
    }
    out["all_ok"] = all_ok;
    return out;
}

nlohmann::json run_report(const RunConfig& cfg, const Pipeline& pipe) {
    nlohmann::json rep;
    rep["schema"] = 1;

    {
        nlohmann::json dj;
        dj["kind"] = cfg.domain.kind == ChartKind::torus        ? "torus"
                     : cfg.domain.kind == ChartKind::disk_patch ? "disk"
                                                                : "octagon";
        dj["n"] = cfg.domain.n;
        dj["nodes"] = pipe.grid->size();
        dj["area"] = pipe.grid->total_weight();
        rep["domain"] = dj;
    }

    if (pipe.solver) {
        rep["solver"] = {{"newton_steps_k", pipe.solver->newton_steps_k},
                         {"newton_steps_h", pipe.solver->newton_steps_h},
                         {"flatness_sup", pipe.solver->residual_sup}};
    }

    const FlatnessResult flat = flatness_residual(assemble_connection(pipe.data, pipe.metric));
    rep["flatness"] = {{"sup", flat.sup},
                       {"paper_ref", "curvature of d + H^-1 dH + Phi + Phi^{*H} vanishes"}};

    const bool closed = pipe.grid->closed_surface();
    if (closed) {
        const EulerResult eu1 = euler_number(pipe.data, pipe.metric, Factor::first);
        const EulerResult eu2 = euler_number(pipe.data, pipe.metric, Factor::second);
        rep["euler_numbers"] = {{"e1_declared", pipe.data.e1},
                                {"e2_declared", pipe.data.e2},
                                {"e1_measured", eu1.value},
                                {"e2_measured", eu2.value},
                                {"paper_ref", "e_i = (1/2pi) integral of Vol(g_i)"}};
    } else {
        rep["euler_numbers"] = nullptr;
    }

    {
        const PullbackMetric g1 = pullback_metric(pipe.data, pipe.metric, Factor::first);
        const PullbackMetric g2 = pullback_metric(pipe.data, pipe.metric, Factor::second);
        const DominationReport dom = domination_report(g1, g2);
        rep["domination"] = {{"dominated", dom.dominated},
                             {"margin", dom.margin},
                             {"failing_nodes", dom.failing_nodes},
                             {"tested_nodes", dom.tested_nodes},
                             {"paper_ref", "g1 - g2 positive definite (strict domination)"}};
    }

    {
        const auto [f1, f2] = splitting_euler_classes(pipe.data.e1, pipe.data.e2);
        rep["splitting_euler_classes"] = {
            {"F1", f1}, {"F2", f2}, {"paper_ref", "F1, F2 have Euler classes |e1-e2|, |e1+e2|"}};
    }

    {
        const PfaffianHopf ph = pfaffian_and_hopf(pipe.data);
        double hopf_sup = 0.0;
        for (std::size_t i = 0; i < ph.hopf.v.size(); ++i)
            if (ph.hopf.valid[i]) hopf_sup = std::max(hopf_sup, std::abs(ph.hopf.v[i]));
        rep["pfaffian"] = {
            {"sup", ph.pfaffian_sup},
            {"vanishing_everywhere", ph.pfaffian_sup <= ph.tol},
            {"hopf_sup", hopf_sup},
            {"paper_ref", "Pfaffian ab-cd and Hopf differential -2(ab+cd) of Phi"}};
    }

    const JetEvaluator jets(pipe.data, pipe.metric);
    {
        const TransversalitySweep sweep = transversality_sweep(jets, cfg.n_theta);
        rep["transversality"] = {
            {"min_abs_xw_minus_yz", sweep.min_abs},
            {"all_above_threshold", sweep.all_above_threshold},
            {"paper_ref", "s transverse iff (s, s_x, s_y, s_theta) independent, i.e. XW != YZ"}};
    }

    if (closed) {
        const VolumeResult vol = ads_volume(pipe.data, pipe.metric, cfg.n_theta);
        nlohmann::json vj = {{"measured", vol.volume},
                             {"theta_shortcut", vol.theta_shortcut},
                             {"predicted", vol.predicted},
                             {"nontransverse_nodes", vol.nontransverse_nodes},
                             {"paper_ref", "volume of M / rho1 x rho2 equals pi^2 |e1 + e2|"}};
        vj["ratio"] = vol.predicted > 0.0 ? nlohmann::json(vol.volume / vol.predicted)
                                          : nlohmann::json();
        rep["volume"] = vj;
    } else {
        rep["volume"] = nullptr;
    }

    {
        nlohmann::json fj = nlohmann::json::array();
        for (std::size_t node : sample_nodes(jets, 5)) {
            const FiberReport fr = fiber_report(pipe.data, pipe.metric, node);
            fj.push_back({{"node", node},
                          {"geodesic_residual", fr.geodesic_residual},
                          {"timelike_error", fr.timelike_error},
                          {"winding_component2", fr.winding_component2},
                          {"winding_component3", fr.winding_component3}});
        }
        rep["fibers"] = {{"samples", fj},
                         {"paper_ref", "fibers develop to time-like geodesics turning once"}};
    }

    {
        const ConformalityReport conf = conformality_report(pipe.data, pipe.metric);
        rep["conformality"] = {
            {"max_deviation", conf.max_deviation},
            {"pfaffian_sup", conf.pfaffian_sup},
            {"minimal", conf.conformal},
            {"non_immersion_nodes", conf.non_immersion_nodes},
            {"paper_ref", "f conformal iff ab = cd; <f_z,f_z> = -8(ab - cd)"}};
    }

    return rep;
}

void dump_fields(const RunConfig& cfg, const Pipeline& pipe, const std::string& out_dir) {
    namespace fs = std::filesystem;
    fs::create_directories(out_dir);
    const GridPtr& grid = pipe.grid;

    auto xy = [&](std::size_t i) {
        return fmt(grid->z[i].real()) + "," + fmt(grid->z[i].imag());
    };

    auto dump_complex = [&](const std::string& name, const ComplexField& f) {
        std::vector<std::string> rows;
        for (std::size_t i = 0; i < f.v.size(); ++i)
            if (grid->inside[i] && f.valid[i])
                rows.push_back(xy(i) + "," + fmt(f.v[i].real()) + "," + fmt(f.v[i].imag()));
        write_csv(fs::path(out_dir) / (name + ".csv"), "x,y,re,im", rows);
    };

    const PullbackMetric g1 = pullback_metric(pipe.data, pipe.metric, Factor::first);
    const PullbackMetric g2 = pullback_metric(pipe.data, pipe.metric, Factor::second);
    auto dump_metric = [&](const std::string& name, const PullbackMetric& pm) {
        std::vector<std::string> rows;
        for (std::size_t i = 0; i < pm.p.size(); ++i)
            if (grid->inside[i] && pm.valid[i])
                rows.push_back(xy(i) + "," + fmt(pm.p[i].real()) + "," + fmt(pm.p[i].imag()) +
                               "," + fmt(pm.m[i]));
        write_csv(fs::path(out_dir) / (name + ".csv"), "x,y,p_re,p_im,m", rows);
    };
    dump_metric("g1", g1);
    dump_metric("g2", g2);

    dump_complex("vol_g1", pullback_volume_form(pipe.data, pipe.metric, Factor::first));
    dump_complex("vol_g2", pullback_volume_form(pipe.data, pipe.metric, Factor::second));

    const PfaffianHopf ph = pfaffian_and_hopf(pipe.data);
    dump_complex("pfaffian", ph.pfaffian);

    {
        const JetEvaluator jets(pipe.data, pipe.metric);
        std::vector<std::string> rows;
        for (std::size_t i = 0; i < grid->size(); ++i) {
            if (!grid->inside[i] || !jets.point_valid(i)) continue;
            double min_abs = std::numeric_limits<double>::infinity();
            double mean = 0.0;
            for (int t = 0; t < cfg.n_theta; ++t) {
                const FrameJet j = jets.at_with_c(i, 2.0 * kPi * t / cfg.n_theta, cxd{});
                const cxd q = j.X * j.W - j.Y * j.Z;
                min_abs = std::min(min_abs, std::abs(q));
                mean += q.real() / cfg.n_theta;
            }
            rows.push_back(xy(i) + "," + fmt(min_abs) + "," + fmt(mean));
        }
        write_csv(fs::path(out_dir) / "xw_minus_yz.csv", "x,y,min_abs,theta_mean", rows);
    }

    const ConformalityReport conf = conformality_report(pipe.data, pipe.metric);
    dump_complex("wedge_fz", conf.wedge_fz);

    nlohmann::json meta = {{"schema", 1},
                           {"kind", cfg.domain.kind == ChartKind::torus        ? "torus"
                                    : cfg.domain.kind == ChartKind::disk_patch ? "disk"
                                                                               : "octagon"},
                           {"n", grid->n},
                           {"nodes", grid->size()},
                           {"area", grid->total_weight()}};
    std::ofstream meta_out(fs::path(out_dir) / "grid.json");
    meta_out << meta.dump(2) << "\n";
}

int cmd_identities(const std::string& fault_arg, const std::string& out_file) {
    Fault fault;
    try {
        fault = fault_from_name(fault_arg);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
    const nlohmann::json out = certificates_json(fault);
    std::cout << out.dump(2) << "\n";
    if (!out_file.empty()) {
        std::ofstream f(out_file);
        f << out.dump(2) << "\n";
    }
    return out["all_ok"].get<bool>() ? 0 : 2;
}

namespace {

int run_with_config(const std::string& config_path,
                    const std::function<int(const RunConfig&, const Pipeline&)>& body) {
    try {
        const RunConfig cfg = load_config(config_path);
        const Pipeline pipe = build_pipeline(cfg);
        return body(cfg, pipe);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 4;
    } catch (const ObstructionError& e) {
        std::cerr << "solver error: " << e.what() << "\n";
        return 3;
    } catch (const ConvergenceError& e) {
        std::cerr << "solver error: " << e.what() << "\n";
        return 3;
    }
}

}  // namespace

int cmd_report(const std::string& config_path, const std::string& out_dir) {
    return run_with_config(config_path, [&](const RunConfig& cfg, const Pipeline& pipe) {
        const nlohmann::json rep = run_report(cfg, pipe);
        std::cout << rep.dump(2) << "\n";
        const std::string dir = !out_dir.empty() ? out_dir : cfg.out_dir;
        if (!dir.empty()) {
            std::filesystem::create_directories(dir);
            std::ofstream f(std::filesystem::path(dir) / "report.json");
            f << rep.dump(2) << "\n";
            dump_fields(cfg, pipe, dir);
        }
        return 0;
    });
}

int cmd_fields(const std::string& config_path, const std::string& out_dir) {
    return run_with_config(config_path, [&](const RunConfig& cfg, const Pipeline& pipe) {
        const std::string dir = !out_dir.empty() ? out_dir : cfg.out_dir;
        if (dir.empty()) {
            std::cerr << "config error: fields needs --out DIR (or run.out_dir in the config)\n";
            return 4;
        }
        dump_fields(cfg, pipe, dir);
        return 0;
    });
}

int cmd_solve(const std::string& config_path) {
    return run_with_config(config_path, [&](const RunConfig& cfg, const Pipeline& pipe) {
        (void)cfg;
        nlohmann::json out;
        out["schema"] = 1;
        if (!pipe.solver) {
            std::cerr << "config error: solve needs \"metric\": {\"solve\": true}\n";
            return 4;
        }
        double kmin = std::numeric_limits<double>::infinity(), kmax = 0.0;
        double hmin = std::numeric_limits<double>::infinity(), hmax = 0.0;
        for (std::size_t i = 0; i < pipe.metric.k.v.size(); ++i) {
            if (!pipe.metric.k.valid[i]) continue;
            kmin = std::min(kmin, pipe.metric.k.v[i].real());
            kmax = std::max(kmax, pipe.metric.k.v[i].real());
            hmin = std::min(hmin, pipe.metric.h.v[i].real());
            hmax = std::max(hmax, pipe.metric.h.v[i].real());
        }
        out["k_range"] = {kmin, kmax};
        out["h_range"] = {hmin, hmax};
        out["newton_steps_k"] = pipe.solver->newton_steps_k;
        out["newton_steps_h"] = pipe.solver->newton_steps_h;
        out["flatness_sup"] = pipe.solver->residual_sup;
        std::cout << out.dump(2) << "\n";
        return 0;
    });
}

}  // namespace adshiggs

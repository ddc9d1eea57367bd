#include "adshiggs/config.hpp"

#include <fstream>

#include "adshiggs/expr.hpp"

namespace adshiggs {

namespace {

FieldSpec parse_field_spec(const nlohmann::json& j, const std::string& name) {
    FieldSpec spec;
    if (j.is_string()) {
        spec.expr = j.get<std::string>();
        return spec;
    }
    if (j.is_number()) {
        spec.expr = std::to_string(j.get<double>());
        return spec;
    }
    if (j.is_array()) {
        spec.is_inline = true;
        for (const auto& entry : j) {
            if (!entry.is_array() || entry.size() != 2)
                throw ConfigError("field '" + name + "': inline samples must be [re, im] pairs");
            spec.inline_values.emplace_back(entry[0].get<double>(), entry[1].get<double>());
        }
        return spec;
    }
    throw ConfigError("field '" + name + "': expected expression string or inline sample array");
}

int require_even(const nlohmann::json& j, const std::string& name) {
    if (!j.is_number_integer()) throw ConfigError(name + " must be an integer");
    const int v = j.get<int>();
    if (v % 2 != 0) throw ConfigError(name + " must be even");
    return v;
}

}  // namespace

RunConfig parse_config(const nlohmann::json& j) {
    RunConfig cfg;
    if (!j.is_object()) throw ConfigError("config must be a JSON object");

    if (!j.contains("domain")) throw ConfigError("missing 'domain'");
    const auto& dom = j.at("domain");
    const std::string kind = dom.value("kind", "");
    if (kind == "torus")
        cfg.domain.kind = ChartKind::torus;
    else if (kind == "disk")
        cfg.domain.kind = ChartKind::disk_patch;
    else if (kind == "octagon")
        cfg.domain.kind = ChartKind::octagon;
    else
        throw ConfigError("domain.kind must be 'torus', 'disk' or 'octagon'");
    cfg.domain.n = dom.value("n", 16);
    if (dom.contains("modulus")) {
        const auto& m = dom.at("modulus");
        if (!m.is_array() || m.size() != 2) throw ConfigError("domain.modulus must be [re, im]");
        cfg.domain.modulus = cxd{m[0].get<double>(), m[1].get<double>()};
    }
    cfg.domain.radius = dom.value("radius", 0.7);

    if (!j.contains("higgs")) throw ConfigError("missing 'higgs'");
    const auto& hj = j.at("higgs");
    for (const char* name : {"alpha", "beta", "gamma", "delta"})
        if (!hj.contains(name)) throw ConfigError(std::string("higgs.") + name + " is required");
    cfg.alpha = parse_field_spec(hj.at("alpha"), "alpha");
    cfg.beta = parse_field_spec(hj.at("beta"), "beta");
    cfg.gamma = parse_field_spec(hj.at("gamma"), "gamma");
    cfg.delta = parse_field_spec(hj.at("delta"), "delta");
    cfg.e1 = require_even(hj.value("e1", nlohmann::json(0)), "higgs.e1");
    cfg.e2 = require_even(hj.value("e2", nlohmann::json(0)), "higgs.e2");

    if (!j.contains("metric")) throw ConfigError("missing 'metric'");
    const auto& mj = j.at("metric");
    if (mj.value("solve", false)) {
        cfg.metric.solve = true;
        if (cfg.domain.kind != ChartKind::torus)
            throw ConfigError("metric.solve requires a torus domain");
        cfg.metric.initial_h = mj.value("initial_h", 1.0);
        cfg.metric.initial_k = mj.value("initial_k", 1.0);
        cfg.metric.tol = mj.value("tol", 1e-11);
        cfg.metric.max_iter = mj.value("max_iter", 25);
        if (!(cfg.metric.initial_h > 0.0) || !(cfg.metric.initial_k > 0.0))
            throw ConfigError("metric initial values must be positive");
    } else {
        if (!mj.contains("h") || !mj.contains("k"))
            throw ConfigError("metric needs 'h' and 'k' (or \"solve\": true)");
        cfg.metric.h = parse_field_spec(mj.at("h"), "h");
        cfg.metric.k = parse_field_spec(mj.at("k"), "k");
    }

    if (j.contains("run")) {
        const auto& rj = j.at("run");
        cfg.n_theta = rj.value("n_theta", 16);
        cfg.out_dir = rj.value("out_dir", std::string{});
    }
    return cfg;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError(std::string("JSON parse error: ") + e.what());
    }
    return parse_config(j);
}

GridPtr make_grid(const DomainSpec& spec) {
    try {
        switch (spec.kind) {
            case ChartKind::torus: return make_torus(spec.n, spec.modulus);
            case ChartKind::disk_patch: return make_disk_patch(spec.radius, spec.n);
            case ChartKind::octagon: return make_genus2_octagon(spec.n);
        }
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("domain: ") + e.what());
    }
    throw ConfigError("domain: unknown kind");
}

ComplexField realize_field(const FieldSpec& spec, const GridPtr& grid, const std::string& name) {
    if (spec.is_inline) {
        if (spec.inline_values.size() != grid->size())
            throw ConfigError("field '" + name + "': " + std::to_string(spec.inline_values.size()) +
                              " inline samples for " + std::to_string(grid->size()) + " nodes");
        ComplexField f = make_field(grid);
        f.v = spec.inline_values;
        return f;
    }
    try {
        const ExprAst ast = parse(spec.expr);
        return sample(grid, [&](cxd z) { return eval(ast, z); });
    } catch (const ParseError& e) {
        throw ConfigError("field '" + name + "': " + e.what());
    } catch (const EvalError& e) {
        throw ConfigError("field '" + name + "': " + e.what());
    }
}

}  // namespace adshiggs

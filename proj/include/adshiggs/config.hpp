#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "adshiggs/domains.hpp"

namespace adshiggs {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DomainSpec {
    ChartKind kind = ChartKind::torus;
    int n = 16;
    cxd modulus{0.0, 1.0};  // torus
    double radius = 0.7;    // disk patch
};

/// A field given either as an expression in z or as inline samples
/// (row-major [re, im] pairs, one per grid node).
struct FieldSpec {
    std::string expr = "0";
    std::vector<cxd> inline_values;
    bool is_inline = false;
};

struct MetricSpec {
    bool solve = false;     // torus only
    FieldSpec h, k;         // used when solve is false
    double initial_h = 1.0;
    double initial_k = 1.0;
    double tol = 1e-11;
    int max_iter = 25;
};

struct RunConfig {
    DomainSpec domain;
    FieldSpec alpha, beta, gamma, delta;
    int e1 = 0, e2 = 0;
    MetricSpec metric;
    int n_theta = 16;
    std::string out_dir;  // optional; CSV/JSON dumps land here when set
};

/// Throws ConfigError with a message (expression errors carry positions).
RunConfig parse_config(const nlohmann::json& j);
RunConfig load_config(const std::string& path);

GridPtr make_grid(const DomainSpec& spec);

/// Samples a FieldSpec on the grid; expression text is parsed by the
/// expression module, inline values must match the node count.
ComplexField realize_field(const FieldSpec& spec, const GridPtr& grid, const std::string& name);

}  // namespace adshiggs

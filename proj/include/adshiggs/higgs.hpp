#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "adshiggs/core_algebra.hpp"
#include "adshiggs/domains.hpp"

namespace adshiggs {

/// The four holomorphic field samples plus the declared Euler numbers.
/// deg L = e1/2 and deg N = e2/2 are implied; line bundles are represented
/// through their degrees and the single-chart trivialization only.
struct HiggsData {
    ComplexField alpha, beta, gamma, delta;
    int e1 = 0, e2 = 0;
};

/// Sup of |dzbar f| over derivative-valid nodes.
double holomorphy_residual(const ComplexField& f);

/// Validates: shared grid, even Euler numbers with |e_i| <= 2g-2 on closed
/// charts (torus forces e_i = 0, the genus-2 octagon allows |e_i| <= 2), and
/// holomorphy of the four fields within holomorphy_tol (relative; pass a
/// nonpositive value for the default, 50 h^2 for grid spacing h).
HiggsData make_higgs_data(ComplexField alpha, ComplexField beta, ComplexField gamma,
                          ComplexField delta, int e1, int e2, double holomorphy_tol = -1.0);

/// Diagonal entries of the harmonic metrics H1 = diag(1/k, k),
/// H2 = diag(1/h, h); strictly positive real fields.
struct HarmonicMetric {
    ComplexField h, k;
};

HarmonicMetric make_harmonic_metric(ComplexField h, ComplexField k);

enum class Factor { first, second };

/// Connection forms A_z, A_zbar per node, N = 2 for one SL(2) factor or
/// N = 4 for the tensor product in the frame (LN, LN^-1, L^-1 N, L^-1 N^-1).
template <int N>
struct Connection {
    GridPtr grid;
    std::vector<Eigen::Matrix<cxd, N, N>> a_z, a_zbar;
    std::vector<uint8_t> valid;
};

/// One SL(2) factor:
///   A_z = [[-dlog m, p], [q, dlog m]],  A_zbar = [[0, m^2 conj(q)], [m^-2 conj(p), 0]]
/// with (m, p, q) = (k, alpha, beta) or (h, gamma, delta).
Connection<2> assemble_connection(const HiggsData& data, const HarmonicMetric& metric,
                                  Factor which);

/// The 4x4 connection with diagonal dlog terms from H = H1 (x) H2 and the
/// Higgs field Phi + Phi^{*H} pattern.
Connection<4> assemble_connection(const HiggsData& data, const HarmonicMetric& metric);

/// The Higgs field Phi = phi1 (x) Id + Id (x) phi2 at one point.
CMat4 higgs_field_matrix(cxd alpha, cxd beta, cxd gamma, cxd delta);

struct FlatnessResult {
    RealField field;  // pointwise Frobenius norm of the curvature
    double sup = 0.0;
};

/// Curvature F = dz A_zbar - dzbar A_z + [A_z, A_zbar] of d + A, by nested
/// central differences of the connection entries.
FlatnessResult flatness_residual(const Connection<2>& conn);
FlatnessResult flatness_residual(const Connection<4>& conn);

struct PullbackMetric {
    GridPtr grid;
    std::vector<cxd> p;     // dz^2 coefficient
    std::vector<double> m;  // dz dzbar coefficient, with dz dzbar == dx^2 + dy^2
    std::vector<uint8_t> valid;

    // [[m + 2 Re p, -2 Im p], [-2 Im p, m - 2 Re p]]
    Eigen::Matrix2d real_matrix(std::size_t node) const;
};

/// g1 = 4 alpha beta dz^2 + 4(k^2|beta|^2 + k^-2|alpha|^2) dz dzbar + conj,
/// and the h/gamma/delta version for the second factor.
PullbackMetric pullback_metric(const HiggsData& data, const HarmonicMetric& metric, Factor which);

/// Vol(g1) = 4(k^-2|alpha|^2 - k^2|beta|^2) dx ^ dy (and the h version).
ComplexField pullback_volume_form(const HiggsData& data, const HarmonicMetric& metric,
                                  Factor which);

struct EulerResult {
    double value = 0.0;             // (1/2pi) integral of Vol(g_i)
    double distance_to_even = 0.0;  // to the nearest even integer
};

/// Throws std::invalid_argument on non-closed charts.
EulerResult euler_number(const HiggsData& data, const HarmonicMetric& metric, Factor which);

struct DominationReport {
    bool dominated = false;  // g1 - g2 positive definite at every tested node
    double margin = 0.0;     // min over nodes of the smaller eigenvalue
    std::size_t failing_nodes = 0;
    std::size_t tested_nodes = 0;
    std::vector<uint8_t> node_dominated;  // per-node verdict (0 on untested nodes)
};

DominationReport domination_report(const PullbackMetric& g1, const PullbackMetric& g2);

struct PfaffianHopf {
    ComplexField pfaffian;  // alpha beta - gamma delta
    ComplexField hopf;      // -2 (alpha beta + gamma delta)
    double pfaffian_sup = 0.0;
    double tol = 0.0;
    std::vector<uint8_t> vanishing;  // |pfaffian| <= tol at the node
};

/// Pass tol <= 0 for the default 1e-8 * (field scale)^2.
PfaffianHopf pfaffian_and_hopf(const HiggsData& data, double tol = -1.0);

/// (|e1 - e2|, |e1 + e2|): Euler classes of the splitting E = F1 + F2.
/// Throws std::invalid_argument on odd input.
std::pair<int, int> splitting_euler_classes(int e1, int e2);

/// Scale of the flat disk solution k = scale * (1 - |z|^2) for
/// (alpha, beta) = (1, 0); fixed once by minimizing the flatness residual
/// over the scale and frozen here (see calibrate_fuchsian_scale).
inline constexpr double kFuchsianDiskScale = 1.0;

/// h = 1, k = kFuchsianDiskScale * (1 - |z|^2) on the given chart.
HarmonicMetric fuchsian_disk_metric(GridPtr grid);

/// Golden-section search for the scale minimizing the flatness residual of
/// the (alpha, beta) = (1, 0) disk connection; regression target for
/// kFuchsianDiskScale.
double calibrate_fuchsian_scale(const GridPtr& grid);

struct ObstructionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct HitchinOptions {
    double tol = 1e-11;     // sup-norm target for the scalar residual
    int max_iter = 25;      // Newton steps per factor
    double cg_tol = 1e-12;  // relative CG tolerance for the linear solves
};

struct HitchinResult {
    HarmonicMetric metric;
    double residual_sup = 0.0;  // flatness of the assembled 4x4 connection
    int newton_steps_k = 0;
    int newton_steps_h = 0;
};

/// Damped Newton on (log k, log h) driving the diagonal curvature of the two
/// factors to zero on a torus. Data must be constant (the holomorphic
/// sections on a torus in this trivialization). Throws ObstructionError when
/// the integrated equation cannot balance (one of alpha/beta, or gamma/delta,
/// identically zero while the other is not), ConvergenceError after max_iter.
HitchinResult solve_hitchin_torus(const HiggsData& data, const HarmonicMetric& initial,
                                  const HitchinOptions& options = {});

}  // namespace adshiggs

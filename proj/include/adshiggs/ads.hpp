#pragma once

#include "adshiggs/core_algebra.hpp"
#include "adshiggs/domains.hpp"
#include "adshiggs/higgs.hpp"

namespace adshiggs {

/// The section s = (0, g e^{i theta}, g^-1 e^{-i theta}, 0) of the unit
/// circle bundle and its covariant derivatives at one point and angle:
///   s_z    = (X, 0, 0, Y) + c s_theta
///   s_zbar = (Z, 0, 0, W) + conj(c) s_theta
/// with g = (h/k)^{-1/2}, c = i g^-1 dz g, and
///   X = gamma g E + alpha g^-1 E^-1      Y = beta g E + delta g^-1 E^-1
///   Z = h^2 conj(delta) g E + k^2 conj(beta) g^-1 E^-1
///   W = k^-2 conj(alpha) g E + h^-2 conj(gamma) g^-1 E^-1.
struct FrameJet {
    double theta = 0.0;
    double g = 1.0;
    cxd c;
    cxd X, Y, Z, W;
    CVec4 s, s_theta, s_z, s_zbar;
};

FrameJet make_frame_jet(cxd alpha, cxd beta, cxd gamma, cxd delta, double h, double k, cxd c,
                        double theta);

/// Precomputes the g field and its logarithmic derivative once for a
/// (data, metric) pair; jets are then cheap per (node, theta).
class JetEvaluator {
  public:
    JetEvaluator(const HiggsData& data, const HarmonicMetric& metric);

    const GridPtr& grid() const { return grid_; }

    /// Fields available at the node (no derivative needed).
    bool point_valid(std::size_t node) const { return point_valid_[node]; }
    /// c = i g^-1 dz g available at the node.
    bool jet_valid(std::size_t node) const { return jet_valid_[node]; }

    /// Full jet; throws std::domain_error outside the jet-valid mask.
    FrameJet at(std::size_t node, double theta) const;

    /// Jet with a caller-supplied c (needs only point validity).
    FrameJet at_with_c(std::size_t node, double theta, cxd c) const;

  private:
    GridPtr grid_;
    std::vector<cxd> alpha_, beta_, gamma_, delta_;
    std::vector<double> h_, k_, g_;
    std::vector<cxd> c_;
    std::vector<uint8_t> point_valid_, jet_valid_;
};

struct TransversalityReport {
    double abs_xw_minus_yz = 0.0;
    double frame_det_abs = 0.0;  // |det(s, s_x, s_y, s_theta)|, equals 4 |XW - YZ|
    double threshold = 0.0;      // 1e-8 * (local field scale)^2
    bool transverse = false;
    bool corroborated = false;   // the two quantities agree
};

TransversalityReport transversality(const FrameJet& jet);

struct LorentzMetric {
    Eigen::Matrix3cd complex_frame;  // basis (s_z, s_zbar, s_theta)
    Eigen::Matrix3d real_frame;      // basis (s_x, s_y, s_theta)
    Signature real_signature;
    double real_frame_imag_error = 0.0;
};

/// Assembles G from the six closed-form entries; the real frame follows
/// by the change of basis s_x = s_z + s_zbar, s_y = i (s_z - s_zbar),
/// giving det(real) = -4 det(complex).
LorentzMetric lorentz_metric(const FrameJet& jet);

struct VolumeResult {
    double volume = 0.0;          // integral of |XW - YZ| dx dy dtheta
    double theta_shortcut = 0.0;  // 2 pi * integral of |theta-average of XW - YZ|
    double predicted = 0.0;       // pi^2 |e1 + e2|
    double min_abs_xw_yz = 0.0;
    std::size_t nontransverse_nodes = 0;
    int n_theta = 0;
};

/// Integrates |XW - YZ| over the chart times [0, 2pi). The integrand is a
/// degree-2 trigonometric polynomial in theta, so the periodic trapezoid
/// rule with n_theta >= 8 carries no theta discretization error once the
/// sign is constant; n_theta < 8 is rejected. Throws on non-closed charts.
VolumeResult ads_volume(const HiggsData& data, const HarmonicMetric& metric, int n_theta = 16,
                        int threads = 0);

struct FiberReport {
    double geodesic_residual = 0.0;  // sup over theta of |dtheta s_theta + s|
    double timelike_error = 0.0;     // sup of |Q(s_theta, s_theta) - 1|
    int winding_component2 = 0;      // expected +1
    int winding_component3 = 0;      // expected -1
    int n_theta = 0;
};

/// Samples the fiber through one node; the theta derivative is taken
/// spectrally from the samples (the components are single-frequency loops).
FiberReport fiber_report(const HiggsData& data, const HarmonicMetric& metric, std::size_t node,
                         int n_theta = 64);

}  // namespace adshiggs

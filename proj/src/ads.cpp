#include "adshiggs/ads.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "adshiggs/parallel.hpp"

namespace adshiggs {

namespace {
constexpr double kPi = std::numbers::pi;
}

FrameJet make_frame_jet(cxd alpha, cxd beta, cxd gamma, cxd delta, double h, double k, cxd c,
                        double theta) {
    if (!(h > 0.0) || !(k > 0.0))
        throw std::invalid_argument("make_frame_jet: metric entries must be positive");
    FrameJet j;
    j.theta = theta;
    j.g = std::sqrt(k / h);  // (h k^-1)^(-1/2)
    j.c = c;
    const cxd e{std::cos(theta), std::sin(theta)};
    const cxd ge = j.g * e;
    const cxd gi_ei = std::conj(e) / j.g;

    j.X = gamma * ge + alpha * gi_ei;
    j.Y = beta * ge + delta * gi_ei;
    j.Z = h * h * std::conj(delta) * ge + k * k * std::conj(beta) * gi_ei;
    j.W = std::conj(alpha) / (k * k) * ge + std::conj(gamma) / (h * h) * gi_ei;

    j.s << 0.0, ge, gi_ei, 0.0;
    j.s_theta << 0.0, I * ge, -I * gi_ei, 0.0;
    j.s_z = j.c * j.s_theta;
    j.s_z(0) += j.X;
    j.s_z(3) += j.Y;
    j.s_zbar = std::conj(j.c) * j.s_theta;
    j.s_zbar(0) += j.Z;
    j.s_zbar(3) += j.W;
    return j;
}

JetEvaluator::JetEvaluator(const HiggsData& data, const HarmonicMetric& metric) {
    grid_ = data.alpha.grid;
    if (metric.h.grid != grid_)
        throw std::invalid_argument("JetEvaluator: data and metric on different grids");
    const std::size_t nn = grid_->size();
    alpha_.resize(nn);
    beta_.resize(nn);
    gamma_.resize(nn);
    delta_.resize(nn);
    h_.resize(nn);
    k_.resize(nn);
    g_.resize(nn);
    c_.assign(nn, cxd{});
    point_valid_.assign(nn, 0);
    jet_valid_.assign(nn, 0);

    ComplexField gfield = make_field(grid_);
    for (std::size_t i = 0; i < nn; ++i) {
        alpha_[i] = data.alpha.v[i];
        beta_[i] = data.beta.v[i];
        gamma_[i] = data.gamma.v[i];
        delta_[i] = data.delta.v[i];
        h_[i] = metric.h.v[i].real();
        k_[i] = metric.k.v[i].real();
        point_valid_[i] = data.alpha.valid[i] && data.beta.valid[i] && data.gamma.valid[i] &&
                          data.delta.valid[i] && metric.h.valid[i] && metric.k.valid[i];
        if (point_valid_[i]) {
            g_[i] = std::sqrt(k_[i] / h_[i]);
            gfield.v[i] = g_[i];
        }
        gfield.valid[i] = point_valid_[i];
    }

    const ComplexField dg = derivative(gfield, Deriv::dz);
    for (std::size_t i = 0; i < nn; ++i) {
        if (point_valid_[i] && dg.valid[i]) {
            c_[i] = I * dg.v[i] / g_[i];
            jet_valid_[i] = 1;
        }
    }
}

FrameJet JetEvaluator::at(std::size_t node, double theta) const {
    if (!jet_valid_[node])
        throw std::domain_error("JetEvaluator: c is not available at this node");
    return at_with_c(node, theta, c_[node]);
}

FrameJet JetEvaluator::at_with_c(std::size_t node, double theta, cxd c) const {
    if (!point_valid_[node])
        throw std::domain_error("JetEvaluator: fields are not valid at this node");
    return make_frame_jet(alpha_[node], beta_[node], gamma_[node], delta_[node], h_[node],
                          k_[node], c, theta);
}

TransversalityReport transversality(const FrameJet& jet) {
    TransversalityReport rep;
    const cxd q = jet.X * jet.W - jet.Y * jet.Z;
    rep.abs_xw_minus_yz = std::abs(q);
    const double scale = std::max({std::abs(jet.X), std::abs(jet.Y), std::abs(jet.Z),
                                   std::abs(jet.W)});
    rep.threshold = 1e-8 * scale * scale;
    rep.transverse = rep.abs_xw_minus_yz > rep.threshold;

    CMat4 frame;
    frame.col(0) = jet.s;
    frame.col(1) = jet.s_z + jet.s_zbar;            // s_x
    frame.col(2) = I * (jet.s_z - jet.s_zbar);      // s_y
    frame.col(3) = jet.s_theta;
    rep.frame_det_abs = std::abs(frame.determinant());

    const double four_q = 4.0 * rep.abs_xw_minus_yz;
    const double denom = std::max(rep.frame_det_abs, four_q);
    rep.corroborated = denom == 0.0 ? true
                                    : std::abs(rep.frame_det_abs - four_q) / denom < 1e-9;
    return rep;
}

LorentzMetric lorentz_metric(const FrameJet& jet) {
    LorentzMetric m;
    const cxd c = jet.c, cb = std::conj(jet.c);
    Eigen::Matrix3cd& g = m.complex_frame;
    g(0, 0) = -jet.X * jet.Y + c * c;
    g(1, 1) = -jet.Z * jet.W + cb * cb;
    g(0, 1) = g(1, 0) = -0.5 * (jet.X * jet.W + jet.Y * jet.Z) + c * cb;
    g(0, 2) = g(2, 0) = c;
    g(1, 2) = g(2, 1) = cb;
    g(2, 2) = 1.0;

    Eigen::Matrix3cd p = Eigen::Matrix3cd::Zero();
    p(0, 0) = 1.0;
    p(0, 1) = I;
    p(1, 0) = 1.0;
    p(1, 1) = -I;
    p(2, 2) = 1.0;
    const Eigen::Matrix3cd gr = p.transpose() * g * p;
    m.real_frame_imag_error = gr.imag().cwiseAbs().maxCoeff();
    m.real_frame = gr.real();
    m.real_frame = 0.5 * (m.real_frame + m.real_frame.transpose().eval());
    m.real_signature = signature(m.real_frame);
    return m;
}

VolumeResult ads_volume(const HiggsData& data, const HarmonicMetric& metric, int n_theta,
                        int threads) {
    const GridPtr grid = data.alpha.grid;
    if (!grid->closed_surface())
        throw std::invalid_argument("ads_volume: chart is not a closed-surface domain");
    if (n_theta < 8)
        throw std::invalid_argument("ads_volume: n_theta must be at least 8 (the integrand has "
                                    "trigonometric degree 2)");

    const JetEvaluator jets(data, metric);
    const std::size_t nn = grid->size();
    std::vector<double> node_abs(nn, 0.0), node_mean(nn, 0.0), node_min(nn, 0.0);
    std::vector<uint8_t> node_warn(nn, 0);

    parallel_for(
        nn,
        [&](std::size_t begin, std::size_t end) {
            for (std::size_t i = begin; i < end; ++i) {
                if (!grid->inside[i] || !jets.point_valid(i)) continue;
                double acc_abs = 0.0, acc_signed = 0.0;
                double min_abs = std::numeric_limits<double>::infinity();
                double scale = 0.0;
                for (int t = 0; t < n_theta; ++t) {
                    const FrameJet j = jets.at_with_c(i, 2.0 * kPi * t / n_theta, cxd{});
                    const cxd q = j.X * j.W - j.Y * j.Z;
                    acc_abs += std::abs(q);
                    acc_signed += q.real();
                    min_abs = std::min(min_abs, std::abs(q));
                    scale = std::max({scale, std::abs(j.X), std::abs(j.Y), std::abs(j.Z),
                                      std::abs(j.W)});
                }
                node_abs[i] = acc_abs * (2.0 * kPi / n_theta);
                node_mean[i] = acc_signed / n_theta;
                node_min[i] = min_abs;
                node_warn[i] = min_abs <= 1e-8 * scale * scale;
            }
        },
        threads);

    VolumeResult r;
    r.n_theta = n_theta;
    r.predicted = kPi * kPi * std::abs(data.e1 + data.e2);
    r.min_abs_xw_yz = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < nn; ++i) {
        if (!grid->inside[i] || !jets.point_valid(i)) continue;
        r.volume += grid->weight[i] * node_abs[i];
        r.theta_shortcut += grid->weight[i] * 2.0 * kPi * std::abs(node_mean[i]);
        r.min_abs_xw_yz = std::min(r.min_abs_xw_yz, node_min[i]);
        r.nontransverse_nodes += node_warn[i];
    }
    if (!std::isfinite(r.min_abs_xw_yz)) r.min_abs_xw_yz = 0.0;
    return r;
}

FiberReport fiber_report(const HiggsData& data, const HarmonicMetric& metric, std::size_t node,
                         int n_theta) {
    if (n_theta < 8) throw std::invalid_argument("fiber_report: n_theta must be at least 8");
    const JetEvaluator jets(data, metric);

    FiberReport rep;
    rep.n_theta = n_theta;
    std::vector<CVec4> s(n_theta), s_th(n_theta);
    for (int t = 0; t < n_theta; ++t) {
        const FrameJet j = jets.at_with_c(node, 2.0 * kPi * t / n_theta, cxd{});
        s[t] = j.s;
        s_th[t] = j.s_theta;
        rep.timelike_error =
            std::max(rep.timelike_error, std::abs(q_form(j.s_theta, j.s_theta) - cxd{1.0, 0.0}));
    }

    // Spectral theta derivative of the sampled loop, component by component.
    const int half = n_theta / 2;
    std::vector<CVec4> ds(n_theta, CVec4::Zero());
    for (int comp = 0; comp < 4; ++comp) {
        for (int m = -half + 1; m < half; ++m) {
            cxd coeff = 0.0;
            for (int t = 0; t < n_theta; ++t)
                coeff += s_th[t](comp) * std::exp(cxd{0.0, -2.0 * kPi * m * t / n_theta});
            coeff /= static_cast<double>(n_theta);
            if (m == 0) continue;
            const cxd dcoeff = cxd{0.0, static_cast<double>(m)} * coeff;
            for (int t = 0; t < n_theta; ++t)
                ds[t](comp) += dcoeff * std::exp(cxd{0.0, 2.0 * kPi * m * t / n_theta});
        }
    }
    for (int t = 0; t < n_theta; ++t)
        rep.geodesic_residual =
            std::max(rep.geodesic_residual, (ds[t] + s[t]).cwiseAbs().maxCoeff());

    auto winding = [&](int comp) {
        double total = 0.0;
        for (int t = 0; t < n_theta; ++t) {
            const cxd a = s[t](comp);
            const cxd b = s[(t + 1) % n_theta](comp);
            total += std::arg(b / a);
        }
        return static_cast<int>(std::lround(total / (2.0 * kPi)));
    };
    rep.winding_component2 = winding(1);
    rep.winding_component3 = winding(2);
    return rep;
}

}  // namespace adshiggs

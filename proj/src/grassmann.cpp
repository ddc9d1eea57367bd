#include "adshiggs/grassmann.hpp"

#include <algorithm>
#include <cmath>

namespace adshiggs {

double Plucker6::max_abs() const {
    double s = 0.0;
    for (const cxd& c : p) s = std::max(s, std::abs(c));
    return s;
}

Plucker6 Plucker6::operator+(const Plucker6& o) const {
    Plucker6 out;
    for (int i = 0; i < 6; ++i) out.p[i] = p[i] + o.p[i];
    return out;
}

Plucker6 Plucker6::operator-(const Plucker6& o) const {
    Plucker6 out;
    for (int i = 0; i < 6; ++i) out.p[i] = p[i] - o.p[i];
    return out;
}

Plucker6 plucker(const CVec4& u, const CVec4& v) {
    auto minor = [&](int i, int k) { return u(i) * v(k) - u(k) * v(i); };
    Plucker6 out;
    out.p = {minor(0, 1), minor(0, 2), minor(0, 3), minor(1, 2), minor(1, 3), minor(2, 3)};
    return out;
}

cxd wedge_form(const Plucker6& p, const Plucker6& q) {
    return p[0] * q[5] + p[5] * q[0] - p[1] * q[4] - p[4] * q[1] + p[2] * q[3] + p[3] * q[2];
}

cxd quadric_residual(const Plucker6& p) { return p[0] * p[5] - p[1] * p[4] + p[2] * p[3]; }

Eigen::MatrixXd wedge_gram_real() {
    Eigen::MatrixXd g = Eigen::MatrixXd::Zero(6, 6);
    g(0, 5) = g(5, 0) = 1.0;
    g(1, 4) = g(4, 1) = -1.0;
    g(2, 3) = g(3, 2) = 1.0;
    return g;
}

GaussMapResult gauss_map(const FrameJet& jet) {
    GaussMapResult r;
    r.f = plucker(jet.s, jet.s_theta);
    r.gram(0, 0) = q_form(jet.s, jet.s);
    r.gram(0, 1) = q_form(jet.s, jet.s_theta);
    r.gram(1, 0) = q_form(jet.s_theta, jet.s);
    r.gram(1, 1) = q_form(jet.s_theta, jet.s_theta);
    r.gram_error = (r.gram - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff();
    r.quadric_error = std::abs(quadric_residual(r.f));
    return r;
}

Plucker6 gauss_fz_closed_form(cxd alpha, cxd beta, cxd gamma, cxd delta) {
    Plucker6 out;
    const cxd two_i{0.0, 2.0};
    out.p = {two_i * alpha, -two_i * gamma, 0.0, 0.0, -two_i * delta, two_i * beta};
    return out;
}

GaussDerivativeResult gauss_derivative(const HiggsData& data, const HarmonicMetric& metric,
                                       double theta) {
    const JetEvaluator jets(data, metric);
    const GridPtr grid = jets.grid();
    const std::size_t nn = grid->size();

    GaussDerivativeResult r;
    r.grid = grid;
    r.numeric.assign(nn, Plucker6{});
    r.valid.assign(nn, 0);
    for (std::size_t i = 0; i < nn; ++i) {
        if (!jets.jet_valid(i)) continue;
        const FrameJet j = jets.at(i, theta);

        // s_{theta,z} = (X_theta, 0, 0, Y_theta) - c s with X_theta, Y_theta
        // the theta derivatives of the scalars.
        const cxd e{std::cos(theta), std::sin(theta)};
        const cxd ge = j.g * e;
        const cxd gi_ei = std::conj(e) / j.g;
        const cxd x_theta = I * (data.gamma.v[i] * ge - data.alpha.v[i] * gi_ei);
        const cxd y_theta = I * (data.beta.v[i] * ge - data.delta.v[i] * gi_ei);
        CVec4 s_theta_z = -j.c * j.s;
        s_theta_z(0) += x_theta;
        s_theta_z(3) += y_theta;

        Plucker6 fz = plucker(j.s_z, j.s_theta) + plucker(j.s, s_theta_z);
        r.numeric[i] = fz;
        r.valid[i] = 1;

        const Plucker6 closed = gauss_fz_closed_form(data.alpha.v[i], data.beta.v[i],
                                                     data.gamma.v[i], data.delta.v[i]);
        r.max_mismatch = std::max(r.max_mismatch, (fz - closed).max_abs());
    }
    return r;
}

ConformalityReport conformality_report(const HiggsData& data, const HarmonicMetric& metric,
                                       double tol) {
    ConformalityReport rep;
    rep.pfaffian = make_field(data.alpha.grid);
    rep.wedge_fz = make_field(data.alpha.grid);

    double scale = 0.0;
    for (const ComplexField* f : {&data.alpha, &data.beta, &data.gamma, &data.delta})
        for (std::size_t i = 0; i < f->v.size(); ++i)
            if (f->valid[i]) scale = std::max(scale, std::abs(f->v[i]));
    rep.tol = tol > 0.0 ? tol : 1e-8 * std::max(1.0, scale * scale);

    const GaussDerivativeResult numeric = gauss_derivative(data, metric, 0.0);
    const std::size_t nn = rep.pfaffian.v.size();
    for (std::size_t i = 0; i < nn; ++i) {
        const bool point_ok = data.alpha.valid[i] && data.beta.valid[i] &&
                              data.gamma.valid[i] && data.delta.valid[i];
        rep.pfaffian.valid[i] = rep.wedge_fz.valid[i] = point_ok;
        if (!point_ok) continue;
        ++rep.tested_nodes;
        rep.pfaffian.v[i] =
            data.alpha.v[i] * data.beta.v[i] - data.gamma.v[i] * data.delta.v[i];
        rep.pfaffian_sup = std::max(rep.pfaffian_sup, std::abs(rep.pfaffian.v[i]));

        const Plucker6 fz = numeric.valid[i]
                                ? numeric.numeric[i]
                                : gauss_fz_closed_form(data.alpha.v[i], data.beta.v[i],
                                                       data.gamma.v[i], data.delta.v[i]);
        rep.wedge_fz.v[i] = wedge_form(fz, fz);
        rep.max_deviation =
            std::max(rep.max_deviation, std::abs(rep.wedge_fz.v[i] + 8.0 * rep.pfaffian.v[i]));
        if (fz.max_abs() <= 1e-8 * std::max(1.0, scale)) ++rep.non_immersion_nodes;
    }
    rep.conformal = rep.pfaffian_sup <= rep.tol;
    return rep;
}

}  // namespace adshiggs

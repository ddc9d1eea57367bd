#include "adshiggs/core_algebra.hpp"

#include <cmath>

namespace adshiggs {

CMat4 tensor_product(const CMat2& a, const CMat2& b) {
    CMat4 out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
    return out;
}

CVec4 tensor_product(const Eigen::Vector2cd& u, const Eigen::Vector2cd& v) {
    CVec4 out;
    out << u(0) * v(0), u(0) * v(1), u(1) * v(0), u(1) * v(1);
    return out;
}

cxd q_form(const CVec4& u, const CVec4& v) {
    return 0.5 * (-u(0) * v(3) - u(3) * v(0) + u(1) * v(2) + u(2) * v(1));
}

CMat4 q_form_matrix() {
    CMat4 q = CMat4::Zero();
    q(0, 3) = q(3, 0) = -0.5;
    q(1, 2) = q(2, 1) = 0.5;
    return q;
}

CVec4 real_structure(const CVec4& v, double h, double k) {
    if (!(h > 0.0) || !(k > 0.0))
        throw std::invalid_argument("real_structure: metric entries must be positive");
    CVec4 out;
    out << h * k * std::conj(v(3)), k / h * std::conj(v(2)), h / k * std::conj(v(1)),
        std::conj(v(0)) / (h * k);
    return out;
}

Signature signature(const Eigen::MatrixXd& m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("signature: matrix must be square");
    const double scale = m.cwiseAbs().maxCoeff();
    if ((m - m.transpose()).cwiseAbs().maxCoeff() > 1e-10 * std::max(1.0, scale))
        throw std::invalid_argument("signature: matrix not symmetric within tolerance");

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
    const auto& ev = es.eigenvalues();
    const double spectral = ev.cwiseAbs().maxCoeff();
    const double thresh = 1e-10 * spectral;

    Signature sig;
    for (Eigen::Index i = 0; i < ev.size(); ++i) {
        if (ev(i) > thresh)
            ++sig.positive;
        else if (ev(i) < -thresh)
            ++sig.negative;
        else
            ++sig.zero;
    }
    return sig;
}

}  // namespace adshiggs

#pragma once

#include <complex>
#include <stdexcept>

#include <Eigen/Dense>

namespace adshiggs {

using cxd = std::complex<double>;
using CVec4 = Eigen::Vector4cd;
using CMat2 = Eigen::Matrix2cd;
using CMat4 = Eigen::Matrix4cd;

constexpr cxd I{0.0, 1.0};

/// Sign counts of a real symmetric matrix: eigenvalues > 0, < 0, and
/// within the zero threshold. Counts sum to the matrix dimension.
struct Signature {
    int positive = 0;
    int negative = 0;
    int zero = 0;

    bool operator==(const Signature&) const = default;
};

/// Kronecker product of two 2x2 matrices in the tensor frame ordering
/// (e1⊗f1, e1⊗f2, e2⊗f1, e2⊗f2), so (A⊗B)(u⊗v) = Au ⊗ Bv.
CMat4 tensor_product(const CMat2& a, const CMat2& b);

/// Tensor product of two 2-vectors in the same frame ordering.
CVec4 tensor_product(const Eigen::Vector2cd& u, const Eigen::Vector2cd& v);

/// The signature-(2,2) bilinear form in the tensor frame:
/// q(u,v) = (-u1 v4 - u4 v1 + u2 v3 + u3 v2) / 2.
/// Symmetric and bilinear (not sesquilinear).
cxd q_form(const CVec4& u, const CVec4& v);

/// The 4x4 matrix of q_form, for Gram-matrix style checks.
CMat4 q_form_matrix();

/// Anti-linear real structure for positive metric entries h, k:
/// tau(v) = (hk conj(v4), h^-1 k conj(v3), h k^-1 conj(v2), h^-1 k^-1 conj(v1)).
/// Involutive for all h, k > 0.
CVec4 real_structure(const CVec4& v, double h, double k);

/// Eigenvalue sign counts of a real symmetric matrix. The zero threshold is
/// 1e-10 times the spectral norm. Throws std::invalid_argument when the
/// input is not symmetric within 1e-10 (relative to its max entry).
Signature signature(const Eigen::MatrixXd& m);

}  // namespace adshiggs

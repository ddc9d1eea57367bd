#pragma once

#include <array>

#include "adshiggs/ads.hpp"
#include "adshiggs/core_algebra.hpp"

namespace adshiggs {

/// Plucker coordinates of a 2-plane, minors in the fixed order
/// (p12, p13, p14, p23, p24, p34). Decomposable vectors satisfy
/// p12 p34 - p13 p24 + p14 p23 = 0 (the Klein quadric).
struct Plucker6 {
    std::array<cxd, 6> p{};

    cxd& operator[](int i) { return p[i]; }
    const cxd& operator[](int i) const { return p[i]; }
    double max_abs() const;

    Plucker6 operator+(const Plucker6& o) const;
    Plucker6 operator-(const Plucker6& o) const;
};

Plucker6 plucker(const CVec4& u, const CVec4& v);

/// Wedge pairing read against the standard 4-form:
/// p12 q34 + p34 q12 - p13 q24 - p24 q13 + p14 q23 + p23 q14.
/// Equals det[u v w x] on plucker(u,v), plucker(w,x).
cxd wedge_form(const Plucker6& p, const Plucker6& q);

/// p12 p34 - p13 p24 + p14 p23; zero exactly on decomposable vectors.
cxd quadric_residual(const Plucker6& p);

/// Gram matrix of wedge_form on the standard basis (e_i ^ e_j); its
/// signature is (3,3).
Eigen::MatrixXd wedge_gram_real();

struct GaussMapResult {
    Plucker6 f;                 // s ^ s_theta
    Eigen::Matrix2cd gram;      // q_form Gram of (s, s_theta); identity for a unit frame
    double gram_error = 0.0;    // max |gram - Id|
    double quadric_error = 0.0; // |quadric_residual(f)|
};

GaussMapResult gauss_map(const FrameJet& jet);

/// f_z = (2i alpha, -2i gamma, 0, 0, -2i delta, 2i beta).
Plucker6 gauss_fz_closed_form(cxd alpha, cxd beta, cxd gamma, cxd delta);

struct GaussDerivativeResult {
    GridPtr grid;
    std::vector<Plucker6> numeric;  // s_z ^ s_theta + s ^ s_{theta,z} per node
    std::vector<uint8_t> valid;
    double max_mismatch = 0.0;      // against the closed form, sup over valid nodes
};

/// Numeric f_z from the jet (s_{theta,z} = (X_theta, 0, 0, Y_theta) - c s)
/// compared against the closed form; a mismatch beyond roundoff would
/// indicate convention drift between the frames.
GaussDerivativeResult gauss_derivative(const HiggsData& data, const HarmonicMetric& metric,
                                       double theta);

struct ConformalityReport {
    ComplexField wedge_fz;   // <f_z, f_z> per node
    ComplexField pfaffian;   // alpha beta - gamma delta
    double max_deviation = 0.0;  // sup |<f_z,f_z> + 8 pfaffian|
    double pfaffian_sup = 0.0;
    double tol = 0.0;
    bool conformal = false;      // pfaffian sup below tol => minimal
    std::size_t non_immersion_nodes = 0;  // f_z below threshold
    std::size_t tested_nodes = 0;
};

/// <f_z,f_z> is computed from the numeric f_z on derivative-valid nodes and
/// from the closed form elsewhere. Pass tol <= 0 for the default
/// 1e-8 * (field scale)^2.
ConformalityReport conformality_report(const HiggsData& data, const HarmonicMetric& metric,
                                       double tol = -1.0);

}  // namespace adshiggs

#pragma once

#include <array>
#include <string>
#include <vector>

#include "adshiggs/laurent.hpp"

namespace adshiggs {

using PolyVec4 = std::array<LaurentPoly, 4>;
using PolyVec6 = std::array<LaurentPoly, 6>;

/// The formal frame jet on the unit circle bundle, over the symbol
/// alphabet. The scalar c = i g^-1 dg is the free symbol w.
///   s       = (0, gE, g^-1 E^-1, 0)
///   s_theta = (0, i gE, -i g^-1 E^-1, 0)
///   s_z     = (X, 0, 0, Y) + w s_theta
///   s_zbar  = (Z, 0, 0, W) + w* s_theta
///   X = c gE + a g^-1 E^-1         Y = b gE + d g^-1 E^-1
///   Z = h^2 d* gE + k^2 b* g^-1 E^-1   W = k^-2 a* gE + h^-2 c* g^-1 E^-1
struct JetSymbols {
    PolyVec4 s, s_theta, s_z, s_zbar;
    PolyVec4 s_theta_z;  // (X_theta, 0, 0, Y_theta) - w s
    LaurentPoly X, Y, Z, W;
};

JetSymbols jet_symbols();

/// Bilinear form on formal 4-vectors: (-u1 v4 - u4 v1 + u2 v3 + u3 v2)/2.
LaurentPoly q_form_sym(const PolyVec4& u, const PolyVec4& v);

/// Plucker minors in the order (p12, p13, p14, p23, p24, p34).
PolyVec6 plucker_sym(const PolyVec4& u, const PolyVec4& v);

/// Wedge pairing against the standard 4-form:
/// p12 q34 + p34 q12 - p13 q24 - p24 q13 + p14 q23 + p23 q14.
LaurentPoly wedge_form_sym(const PolyVec6& p, const PolyVec6& q);

struct Certificate {
    std::string identity;
    bool ok = false;
    std::size_t residual_terms = 0;
    std::string residual;  // normal form of the residual when nonzero
};

struct CertificateGroup {
    std::string name;
    std::vector<Certificate> entries;
    std::string note;

    bool ok() const {
        for (const auto& e : entries)
            if (!e.ok) return false;
        return true;
    }
};

/// Deliberate single-sign mutations, one per certified identity, used to
/// exercise the failure path end to end.
enum class Fault {
    none,
    metric_entries,
    detg,
    fiber_geodesic,
    gauss_map,
    domination_lemma,
};

Fault fault_from_name(const std::string& name);
std::string fault_name(Fault f);

/// The six entries of the Lorentz metric G in the basis (s_z, s_zbar,
/// s_theta), each proved equal to its closed form as an exact polynomial.
CertificateGroup certify_metric_entries(Fault fault = Fault::none);

/// det G = -1/4 (XW - YZ)^2, with the w-dependence cancelling.
CertificateGroup certify_detg(Fault fault = Fault::none);

/// d/dtheta s = s_theta, d/dtheta s_theta = -s, and the norms
/// Q(s,s) = Q(s_theta,s_theta) = 1, Q(s,s_theta) = 0.
CertificateGroup certify_fiber_geodesic(Fault fault = Fault::none);

/// Klein-quadric membership of f = s ^ s_theta, the closed form
/// f_z = (2ia, -2ic, 0, 0, -2id, 2ib), and <f_z,f_z> = -8(ab - cd).
CertificateGroup certify_gauss_map(Fault fault = Fault::none);

/// The expansion step of the independence lemma:
/// |u h^-1 c + u* h d*|^2 - |u k^-1 a + u* k b*|^2
///   = (cd u^2 + c*d* u*^2 + uu*(h^-2 cc* + h^2 dd*))
///   - (ab u^2 + a*b* u*^2 + uu*(k^-2 aa* + k^2 bb*)).
CertificateGroup certify_domination_lemma(Fault fault = Fault::none);

/// Runs the whole suite with at most one injected fault.
std::vector<CertificateGroup> certify_all(Fault fault = Fault::none);

}  // namespace adshiggs

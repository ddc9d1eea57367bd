#include "adshiggs/identities.hpp"

#include <initializer_list>
#include <stdexcept>
#include <utility>

namespace adshiggs {

namespace {

LaurentPoly mono(GaussQ coeff, std::initializer_list<std::pair<Sym, int>> factors) {
    Exps e{};
    for (const auto& [s, k] : factors) e[s] = static_cast<int16_t>(e[s] + k);
    return LaurentPoly::monomial(std::move(coeff), e);
}

const GaussQ kOne{1};
const GaussQ kI = GaussQ::i();

void require_even_g(const LaurentPoly& p, const char* what) {
    if (!p.even_in_g())
        throw std::logic_error(std::string("odd power of g survives expansion in ") + what);
}

Certificate check_zero(std::string name, const LaurentPoly& residual) {
    Certificate c;
    c.identity = std::move(name);
    c.ok = residual.is_zero();
    c.residual_terms = residual.term_count();
    if (!c.ok) c.residual = residual.str();
    return c;
}

template <std::size_t N>
Certificate check_zero_vec(std::string name, const std::array<LaurentPoly, N>& residual) {
    Certificate c;
    c.identity = std::move(name);
    c.ok = true;
    for (std::size_t i = 0; i < N; ++i) {
        c.residual_terms += residual[i].term_count();
        if (!residual[i].is_zero()) {
            c.ok = false;
            if (!c.residual.empty()) c.residual += "; ";
            c.residual += "[" + std::to_string(i + 1) + "] " + residual[i].str();
        }
    }
    return c;
}

}  // namespace

JetSymbols jet_symbols() {
    JetSymbols j;
    const LaurentPoly ge = mono(kOne, {{SymG, 1}, {SymE, 1}});
    const LaurentPoly gi_ei = mono(kOne, {{SymG, -1}, {SymE, -1}});
    const LaurentPoly zero;

    j.s = {zero, ge, gi_ei, zero};
    j.s_theta = {zero, kI * ge, -(kI * gi_ei), zero};

    j.X = mono(kOne, {{SymC, 1}, {SymG, 1}, {SymE, 1}}) +
          mono(kOne, {{SymA, 1}, {SymG, -1}, {SymE, -1}});
    j.Y = mono(kOne, {{SymB, 1}, {SymG, 1}, {SymE, 1}}) +
          mono(kOne, {{SymD, 1}, {SymG, -1}, {SymE, -1}});
    j.Z = mono(kOne, {{SymDc, 1}, {SymH, 2}, {SymG, 1}, {SymE, 1}}) +
          mono(kOne, {{SymBc, 1}, {SymK, 2}, {SymG, -1}, {SymE, -1}});
    j.W = mono(kOne, {{SymAc, 1}, {SymK, -2}, {SymG, 1}, {SymE, 1}}) +
          mono(kOne, {{SymCc, 1}, {SymH, -2}, {SymG, -1}, {SymE, -1}});

    const LaurentPoly w = LaurentPoly::var(SymW);
    const LaurentPoly wc = LaurentPoly::var(SymWc);
    for (int i = 0; i < 4; ++i) {
        j.s_z[i] = w * j.s_theta[i];
        j.s_zbar[i] = wc * j.s_theta[i];
        j.s_theta_z[i] = -(w * j.s[i]);
    }
    j.s_z[0] += j.X;
    j.s_z[3] += j.Y;
    j.s_zbar[0] += j.Z;
    j.s_zbar[3] += j.W;
    j.s_theta_z[0] += j.X.theta_derivative();
    j.s_theta_z[3] += j.Y.theta_derivative();
    return j;
}

LaurentPoly q_form_sym(const PolyVec4& u, const PolyVec4& v) {
    const GaussQ half(1, 2);
    return half * (-(u[0] * v[3]) - u[3] * v[0] + u[1] * v[2] + u[2] * v[1]);
}

PolyVec6 plucker_sym(const PolyVec4& u, const PolyVec4& v) {
    auto minor = [&](int i, int k) { return u[i] * v[k] - u[k] * v[i]; };
    return {minor(0, 1), minor(0, 2), minor(0, 3), minor(1, 2), minor(1, 3), minor(2, 3)};
}

LaurentPoly wedge_form_sym(const PolyVec6& p, const PolyVec6& q) {
    return p[0] * q[5] + p[5] * q[0] - p[1] * q[4] - p[4] * q[1] + p[2] * q[3] + p[3] * q[2];
}

Fault fault_from_name(const std::string& name) {
    if (name.empty() || name == "none") return Fault::none;
    if (name == "metric-entries") return Fault::metric_entries;
    if (name == "detg") return Fault::detg;
    if (name == "fiber-geodesic") return Fault::fiber_geodesic;
    if (name == "gauss-map") return Fault::gauss_map;
    if (name == "domination-lemma") return Fault::domination_lemma;
    throw std::invalid_argument("unknown fault name: " + name);
}

std::string fault_name(Fault f) {
    switch (f) {
        case Fault::none: return "none";
        case Fault::metric_entries: return "metric-entries";
        case Fault::detg: return "detg";
        case Fault::fiber_geodesic: return "fiber-geodesic";
        case Fault::gauss_map: return "gauss-map";
        case Fault::domination_lemma: return "domination-lemma";
    }
    return "none";
}

CertificateGroup certify_metric_entries(Fault fault) {
    JetSymbols j = jet_symbols();
    if (fault == Fault::metric_entries) j.s_z[3] = -j.s_z[3];  // sign flip on the Y slot

    const LaurentPoly w = LaurentPoly::var(SymW);
    const LaurentPoly wc = LaurentPoly::var(SymWc);
    const LaurentPoly one(1L);
    const GaussQ half(1, 2);

    struct Entry {
        const char* name;
        LaurentPoly value;
        LaurentPoly target;
    };
    const Entry entries[] = {
        {"Q(s_theta,s_theta) = 1", q_form_sym(j.s_theta, j.s_theta), one},
        {"Q(s_z,s_theta) = c", q_form_sym(j.s_z, j.s_theta), w},
        {"Q(s_zbar,s_theta) = conj(c)", q_form_sym(j.s_zbar, j.s_theta), wc},
        {"Q(s_z,s_z) = -XY + c^2", q_form_sym(j.s_z, j.s_z), -(j.X * j.Y) + w * w},
        {"Q(s_zbar,s_zbar) = -ZW + conj(c)^2", q_form_sym(j.s_zbar, j.s_zbar),
         -(j.Z * j.W) + wc * wc},
        {"Q(s_z,s_zbar) = -(XW+YZ)/2 + c conj(c)", q_form_sym(j.s_z, j.s_zbar),
         -(half * (j.X * j.W + j.Y * j.Z)) + w * wc},
    };

    CertificateGroup group;
    group.name = "metric-entries";
    for (const auto& e : entries) {
        require_even_g(e.value, e.name);
        require_even_g(e.target, e.name);
        group.entries.push_back(check_zero(e.name, e.value - e.target));
    }
    return group;
}

CertificateGroup certify_detg(Fault fault) {
    JetSymbols j = jet_symbols();
    const LaurentPoly w = LaurentPoly::var(SymW);
    const LaurentPoly wc = LaurentPoly::var(SymWc);
    const GaussQ half(1, 2);

    // G in the basis (s_z, s_zbar, s_theta), from the certified entries.
    LaurentPoly g[3][3];
    g[0][0] = -(j.X * j.Y) + w * w;
    g[1][1] = -(j.Z * j.W) + wc * wc;
    g[0][1] = g[1][0] = -(half * (j.X * j.W + j.Y * j.Z)) + w * wc;
    g[0][2] = g[2][0] = w;
    g[1][2] = g[2][1] = wc;
    g[2][2] = LaurentPoly(1L);
    if (fault == Fault::detg) g[0][2] = -w;

    const LaurentPoly det = g[0][0] * (g[1][1] * g[2][2] - g[1][2] * g[2][1]) -
                            g[0][1] * (g[1][0] * g[2][2] - g[1][2] * g[2][0]) +
                            g[0][2] * (g[1][0] * g[2][1] - g[1][1] * g[2][0]);
    const LaurentPoly xw_yz = j.X * j.W - j.Y * j.Z;
    const LaurentPoly target = GaussQ(-1, 4) * (xw_yz * xw_yz);
    require_even_g(det, "det G");
    require_even_g(target, "det G target");

    CertificateGroup group;
    group.name = "detg";
    group.entries.push_back(check_zero("det G = -1/4 (XW - YZ)^2", det - target));
    return group;
}

CertificateGroup certify_fiber_geodesic(Fault fault) {
    JetSymbols j = jet_symbols();
    if (fault == Fault::fiber_geodesic) j.s_theta[2] = -j.s_theta[2];

    PolyVec4 first, second;
    for (int i = 0; i < 4; ++i) {
        first[i] = j.s[i].theta_derivative() - j.s_theta[i];
        second[i] = j.s_theta[i].theta_derivative() + j.s[i];
    }

    CertificateGroup group;
    group.name = "fiber-geodesic";
    group.entries.push_back(check_zero_vec("d/dtheta s = s_theta", first));
    group.entries.push_back(check_zero_vec("d/dtheta s_theta = -s", second));
    group.entries.push_back(
        check_zero("Q(s,s) = 1", q_form_sym(j.s, j.s) - LaurentPoly(1L)));
    group.entries.push_back(check_zero(
        "Q(s_theta,s_theta) = 1", q_form_sym(j.s_theta, j.s_theta) - LaurentPoly(1L)));
    group.entries.push_back(check_zero("Q(s,s_theta) = 0", q_form_sym(j.s, j.s_theta)));
    return group;
}

CertificateGroup certify_gauss_map(Fault fault) {
    const JetSymbols j = jet_symbols();

    const PolyVec6 f = plucker_sym(j.s, j.s_theta);
    PolyVec6 fz = plucker_sym(j.s_z, j.s_theta);
    const PolyVec6 fz2 = plucker_sym(j.s, j.s_theta_z);
    for (int i = 0; i < 6; ++i) fz[i] += fz2[i];

    const GaussQ two_i = GaussQ::imag(2);
    PolyVec6 target = {two_i * LaurentPoly::var(SymA),  -(two_i * LaurentPoly::var(SymC)),
                       LaurentPoly{},                   LaurentPoly{},
                       -(two_i * LaurentPoly::var(SymD)), two_i * LaurentPoly::var(SymB)};
    if (fault == Fault::gauss_map)
        for (auto& t : target) t = -t;

    PolyVec6 fz_residual;
    for (int i = 0; i < 6; ++i) {
        require_even_g(fz[i], "f_z component");
        fz_residual[i] = fz[i] - target[i];
    }

    const LaurentPoly pf = LaurentPoly::var(SymA) * LaurentPoly::var(SymB) -
                           LaurentPoly::var(SymC) * LaurentPoly::var(SymD);
    const LaurentPoly wedge_f = wedge_form_sym(f, f);
    const LaurentPoly wedge_fz = wedge_form_sym(fz, fz);
    require_even_g(wedge_f, "f wedge f");
    require_even_g(wedge_fz, "<f_z,f_z>");

    CertificateGroup group;
    group.name = "gauss-map";
    group.note =
        "minor order (p12,p13,p14,p23,p24,p34); dictionary to the displayed 6-tuple: "
        "identity permutation, overall sign +1; zero slots are p14 and p23";
    group.entries.push_back(check_zero("f wedge f = 0 (Klein quadric)", wedge_f));
    group.entries.push_back(
        check_zero_vec("f_z = (2ia, -2ic, 0, 0, -2id, 2ib)", fz_residual));
    group.entries.push_back(check_zero("<f_z,f_z> = -8(ab - cd)",
                                       wedge_fz + GaussQ(8) * pf));
    return group;
}

CertificateGroup certify_domination_lemma(Fault fault) {
    const LaurentPoly u = LaurentPoly::var(SymU);
    const LaurentPoly uc = LaurentPoly::var(SymUc);
    const LaurentPoly a = LaurentPoly::var(SymA), ac = LaurentPoly::var(SymAc);
    const LaurentPoly b = LaurentPoly::var(SymB), bc = LaurentPoly::var(SymBc);
    const LaurentPoly c = LaurentPoly::var(SymC), cc = LaurentPoly::var(SymCc);
    const LaurentPoly d = LaurentPoly::var(SymD), dc = LaurentPoly::var(SymDc);

    const LaurentPoly p1 = u * LaurentPoly::var(SymH, -1) * c + uc * LaurentPoly::var(SymH) * dc;
    const LaurentPoly p2 = u * LaurentPoly::var(SymK, -1) * a + uc * LaurentPoly::var(SymK) * bc;
    const LaurentPoly lhs = p1 * p1.conjugate() - p2 * p2.conjugate();

    LaurentPoly h2dd = mono(kOne, {{SymH, 2}}) * d * dc;
    if (fault == Fault::domination_lemma) h2dd = -h2dd;
    const LaurentPoly rhs_g2 = c * d * u * u + cc * dc * uc * uc +
                               u * uc * (mono(kOne, {{SymH, -2}}) * c * cc + h2dd);
    const LaurentPoly rhs_g1 = a * b * u * u + ac * bc * uc * uc +
                               u * uc * (mono(kOne, {{SymK, -2}}) * a * ac +
                                         mono(kOne, {{SymK, 2}}) * b * bc);

    CertificateGroup group;
    group.name = "domination-lemma";
    group.entries.push_back(check_zero(
        "|u c/h + u* h d*|^2 - |u a/k + u* k b*|^2 expands to the g2 - g1 second-fundamental "
        "combination",
        lhs - (rhs_g2 - rhs_g1)));
    return group;
}

std::vector<CertificateGroup> certify_all(Fault fault) {
    return {certify_metric_entries(fault), certify_detg(fault), certify_fiber_geodesic(fault),
            certify_gauss_map(fault), certify_domination_lemma(fault)};
}

}  // namespace adshiggs

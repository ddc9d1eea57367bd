#include "adshiggs/higgs.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace adshiggs {

namespace {

double field_scale(const ComplexField& f) {
    double s = 0.0;
    for (std::size_t i = 0; i < f.v.size(); ++i)
        if (f.valid[i]) s = std::max(s, std::abs(f.v[i]));
    return s;
}

void require_same_grid(const ComplexField& a, const ComplexField& b, const char* what) {
    if (a.grid != b.grid) throw std::invalid_argument(std::string(what) + ": fields on different grids");
}

// dlog of a positive real field, as a complex field.
ComplexField dlog(const ComplexField& f) {
    ComplexField logf = f;
    for (std::size_t i = 0; i < f.v.size(); ++i)
        if (f.valid[i]) logf.v[i] = std::log(f.v[i].real());
    return derivative(logf, Deriv::dz);
}

}  // namespace

double holomorphy_residual(const ComplexField& f) {
    const ComplexField d = derivative(f, Deriv::dzbar);
    double sup = 0.0;
    for (std::size_t i = 0; i < d.v.size(); ++i)
        if (d.valid[i]) sup = std::max(sup, std::abs(d.v[i]));
    return sup;
}

HiggsData make_higgs_data(ComplexField alpha, ComplexField beta, ComplexField gamma,
                          ComplexField delta, int e1, int e2, double holomorphy_tol) {
    require_same_grid(alpha, beta, "make_higgs_data");
    require_same_grid(alpha, gamma, "make_higgs_data");
    require_same_grid(alpha, delta, "make_higgs_data");
    if (e1 % 2 != 0 || e2 % 2 != 0)
        throw std::invalid_argument("make_higgs_data: Euler numbers must be even");

    const ChartGrid& g = *alpha.grid;
    if (g.closed_surface()) {
        const int bound = 2 * g.genus() - 2;
        if (std::abs(e1) > bound || std::abs(e2) > bound)
            throw std::invalid_argument("make_higgs_data: |e_i| must be <= 2g-2 for this chart");
    }

    const double h = std::abs(g.step_a);
    const double tol = holomorphy_tol > 0.0 ? holomorphy_tol : 50.0 * h * h;
    for (const ComplexField* f : {&alpha, &beta, &gamma, &delta}) {
        const double scale = field_scale(*f);
        if (scale == 0.0) continue;
        const double res = holomorphy_residual(*f);
        if (res > tol * scale)
            throw std::invalid_argument("make_higgs_data: field fails the dzbar residual check");
    }
    return HiggsData{std::move(alpha), std::move(beta), std::move(gamma), std::move(delta), e1, e2};
}

HarmonicMetric make_harmonic_metric(ComplexField h, ComplexField k) {
    require_same_grid(h, k, "make_harmonic_metric");
    for (const ComplexField* f : {&h, &k}) {
        double scale = field_scale(*f);
        for (std::size_t i = 0; i < f->v.size(); ++i) {
            if (!f->valid[i]) continue;
            if (!(f->v[i].real() > 0.0))
                throw std::invalid_argument("make_harmonic_metric: entries must be positive");
            if (std::abs(f->v[i].imag()) > 1e-12 * std::max(1.0, scale))
                throw std::invalid_argument("make_harmonic_metric: entries must be real");
        }
    }
    return HarmonicMetric{std::move(h), std::move(k)};
}

Connection<2> assemble_connection(const HiggsData& data, const HarmonicMetric& metric,
                                  Factor which) {
    const ComplexField& m = which == Factor::first ? metric.k : metric.h;
    const ComplexField& p = which == Factor::first ? data.alpha : data.gamma;
    const ComplexField& q = which == Factor::first ? data.beta : data.delta;
    require_same_grid(m, p, "assemble_connection");

    const ComplexField dl = dlog(m);
    Connection<2> conn;
    conn.grid = p.grid;
    const std::size_t nn = p.grid->size();
    conn.a_z.assign(nn, Eigen::Matrix2cd::Zero());
    conn.a_zbar.assign(nn, Eigen::Matrix2cd::Zero());
    conn.valid.assign(nn, 0);
    for (std::size_t i = 0; i < nn; ++i) {
        if (!(dl.valid[i] && p.valid[i] && q.valid[i] && m.valid[i])) continue;
        const double mv = m.v[i].real();
        conn.a_z[i] << -dl.v[i], p.v[i], q.v[i], dl.v[i];
        conn.a_zbar[i] << 0.0, mv * mv * std::conj(q.v[i]), std::conj(p.v[i]) / (mv * mv), 0.0;
        conn.valid[i] = 1;
    }
    return conn;
}

CMat4 higgs_field_matrix(cxd alpha, cxd beta, cxd gamma, cxd delta) {
    CMat4 phi = CMat4::Zero();
    phi(0, 1) = gamma;
    phi(0, 2) = alpha;
    phi(1, 0) = delta;
    phi(1, 3) = alpha;
    phi(2, 0) = beta;
    phi(2, 3) = gamma;
    phi(3, 1) = beta;
    phi(3, 2) = delta;
    return phi;
}

Connection<4> assemble_connection(const HiggsData& data, const HarmonicMetric& metric) {
    require_same_grid(data.alpha, metric.k, "assemble_connection");
    const ComplexField dlh = dlog(metric.h);
    const ComplexField dlk = dlog(metric.k);

    Connection<4> conn;
    conn.grid = data.alpha.grid;
    const std::size_t nn = conn.grid->size();
    conn.a_z.assign(nn, CMat4::Zero());
    conn.a_zbar.assign(nn, CMat4::Zero());
    conn.valid.assign(nn, 0);
    for (std::size_t i = 0; i < nn; ++i) {
        if (!(dlh.valid[i] && dlk.valid[i] && data.alpha.valid[i] && data.beta.valid[i] &&
              data.gamma.valid[i] && data.delta.valid[i]))
            continue;
        const cxd a = data.alpha.v[i], b = data.beta.v[i];
        const cxd c = data.gamma.v[i], d = data.delta.v[i];
        const double h = metric.h.v[i].real(), k = metric.k.v[i].real();
        const cxd lh = dlh.v[i], lk = dlk.v[i];

        CMat4 az = higgs_field_matrix(a, b, c, d);
        az(0, 0) = -lh - lk;  // dlog(h^-1 k^-1)
        az(1, 1) = lh - lk;   // dlog(h k^-1)
        az(2, 2) = -lh + lk;  // dlog(h^-1 k)
        az(3, 3) = lh + lk;   // dlog(h k)

        CMat4 azb = CMat4::Zero();
        const cxd h2d = h * h * std::conj(d), k2b = k * k * std::conj(b);
        const cxd hm2c = std::conj(c) / (h * h), km2a = std::conj(a) / (k * k);
        azb(0, 1) = h2d;
        azb(0, 2) = k2b;
        azb(1, 0) = hm2c;
        azb(1, 3) = k2b;
        azb(2, 0) = km2a;
        azb(2, 3) = h2d;
        azb(3, 1) = km2a;
        azb(3, 2) = hm2c;

        conn.a_z[i] = az;
        conn.a_zbar[i] = azb;
        conn.valid[i] = 1;
    }
    return conn;
}

namespace {

template <int N>
FlatnessResult flatness_impl(const Connection<N>& conn) {
    const GridPtr& grid = conn.grid;
    const std::size_t nn = grid->size();

    // Differentiate each matrix entry as a field.
    std::vector<Eigen::Matrix<cxd, N, N>> d_azbar(nn, Eigen::Matrix<cxd, N, N>::Zero());
    std::vector<Eigen::Matrix<cxd, N, N>> d_az(nn, Eigen::Matrix<cxd, N, N>::Zero());
    std::vector<uint8_t> dvalid(nn, 1);
    for (int r = 0; r < N; ++r) {
        for (int col = 0; col < N; ++col) {
            ComplexField entry_z = make_field(grid), entry_zb = make_field(grid);
            entry_z.valid = conn.valid;
            entry_zb.valid = conn.valid;
            for (std::size_t i = 0; i < nn; ++i) {
                entry_z.v[i] = conn.a_z[i](r, col);
                entry_zb.v[i] = conn.a_zbar[i](r, col);
            }
            const ComplexField dz_of_azbar = derivative(entry_zb, Deriv::dz);
            const ComplexField dzbar_of_az = derivative(entry_z, Deriv::dzbar);
            for (std::size_t i = 0; i < nn; ++i) {
                d_azbar[i](r, col) = dz_of_azbar.v[i];
                d_az[i](r, col) = dzbar_of_az.v[i];
                dvalid[i] = dvalid[i] && dz_of_azbar.valid[i] && dzbar_of_az.valid[i];
            }
        }
    }

    FlatnessResult out;
    out.field.grid = grid;
    out.field.v.assign(nn, 0.0);
    out.field.valid.assign(nn, 0);
    for (std::size_t i = 0; i < nn; ++i) {
        if (!(dvalid[i] && conn.valid[i])) continue;
        const Eigen::Matrix<cxd, N, N> f = d_azbar[i] - d_az[i] +
                                           conn.a_z[i] * conn.a_zbar[i] -
                                           conn.a_zbar[i] * conn.a_z[i];
        out.field.v[i] = f.norm();
        out.field.valid[i] = 1;
        out.sup = std::max(out.sup, out.field.v[i]);
    }
    return out;
}

}  // namespace

FlatnessResult flatness_residual(const Connection<2>& conn) { return flatness_impl(conn); }
FlatnessResult flatness_residual(const Connection<4>& conn) { return flatness_impl(conn); }

Eigen::Matrix2d PullbackMetric::real_matrix(std::size_t node) const {
    Eigen::Matrix2d out;
    const double re = p[node].real(), im = p[node].imag();
    out << m[node] + 2.0 * re, -2.0 * im, -2.0 * im, m[node] - 2.0 * re;
    return out;
}

PullbackMetric pullback_metric(const HiggsData& data, const HarmonicMetric& metric, Factor which) {
    const ComplexField& p = which == Factor::first ? data.alpha : data.gamma;
    const ComplexField& q = which == Factor::first ? data.beta : data.delta;
    const ComplexField& m = which == Factor::first ? metric.k : metric.h;
    require_same_grid(p, m, "pullback_metric");

    PullbackMetric out;
    out.grid = p.grid;
    const std::size_t nn = p.grid->size();
    out.p.assign(nn, cxd{});
    out.m.assign(nn, 0.0);
    out.valid.assign(nn, 0);
    for (std::size_t i = 0; i < nn; ++i) {
        if (!(p.valid[i] && q.valid[i] && m.valid[i])) continue;
        const double mv = m.v[i].real();
        out.p[i] = 4.0 * p.v[i] * q.v[i];
        out.m[i] = 4.0 * (mv * mv * std::norm(q.v[i]) + std::norm(p.v[i]) / (mv * mv));
        out.valid[i] = 1;
    }
    return out;
}

ComplexField pullback_volume_form(const HiggsData& data, const HarmonicMetric& metric,
                                  Factor which) {
    const ComplexField& p = which == Factor::first ? data.alpha : data.gamma;
    const ComplexField& q = which == Factor::first ? data.beta : data.delta;
    const ComplexField& m = which == Factor::first ? metric.k : metric.h;
    require_same_grid(p, m, "pullback_volume_form");

    ComplexField out = make_field(p.grid);
    for (std::size_t i = 0; i < out.v.size(); ++i) {
        if (!(p.valid[i] && q.valid[i] && m.valid[i])) {
            out.valid[i] = 0;
            continue;
        }
        const double mv = m.v[i].real();
        out.v[i] = 4.0 * (std::norm(p.v[i]) / (mv * mv) - mv * mv * std::norm(q.v[i]));
        out.valid[i] = p.valid[i];
    }
    return out;
}

EulerResult euler_number(const HiggsData& data, const HarmonicMetric& metric, Factor which) {
    if (!data.alpha.grid->closed_surface())
        throw std::invalid_argument("euler_number: chart is not a closed-surface domain");
    EulerResult r;
    r.value = integrate(pullback_volume_form(data, metric, which)) / (2.0 * std::numbers::pi);
    const double nearest_even = 2.0 * std::round(r.value / 2.0);
    r.distance_to_even = std::abs(r.value - nearest_even);
    return r;
}

DominationReport domination_report(const PullbackMetric& g1, const PullbackMetric& g2) {
    if (g1.grid != g2.grid)
        throw std::invalid_argument("domination_report: metrics on different grids");
    DominationReport rep;
    rep.dominated = true;
    rep.margin = std::numeric_limits<double>::infinity();
    rep.node_dominated.assign(g1.p.size(), 0);
    for (std::size_t i = 0; i < g1.p.size(); ++i) {
        if (!(g1.valid[i] && g2.valid[i])) continue;
        ++rep.tested_nodes;
        const Eigen::Matrix2d d = g1.real_matrix(i) - g2.real_matrix(i);
        const double mean = 0.5 * (d(0, 0) + d(1, 1));
        const double disc = std::hypot(0.5 * (d(0, 0) - d(1, 1)), d(0, 1));
        const double low = mean - disc;
        rep.margin = std::min(rep.margin, low);
        if (low > 0.0) {
            rep.node_dominated[i] = 1;
        } else {
            rep.dominated = false;
            ++rep.failing_nodes;
        }
    }
    if (rep.tested_nodes == 0) {
        rep.dominated = false;
        rep.margin = 0.0;
    }
    return rep;
}

PfaffianHopf pfaffian_and_hopf(const HiggsData& data, double tol) {
    PfaffianHopf out;
    out.pfaffian = make_field(data.alpha.grid);
    out.hopf = make_field(data.alpha.grid);
    const std::size_t nn = out.pfaffian.v.size();
    out.vanishing.assign(nn, 0);

    double scale = 0.0;
    for (const ComplexField* f : {&data.alpha, &data.beta, &data.gamma, &data.delta})
        scale = std::max(scale, field_scale(*f));
    out.tol = tol > 0.0 ? tol : 1e-8 * std::max(1.0, scale * scale);

    for (std::size_t i = 0; i < nn; ++i) {
        const bool ok = data.alpha.valid[i] && data.beta.valid[i] && data.gamma.valid[i] &&
                        data.delta.valid[i];
        out.pfaffian.valid[i] = out.hopf.valid[i] = ok;
        if (!ok) continue;
        const cxd ab = data.alpha.v[i] * data.beta.v[i];
        const cxd cd = data.gamma.v[i] * data.delta.v[i];
        out.pfaffian.v[i] = ab - cd;
        out.hopf.v[i] = -2.0 * (ab + cd);
        out.pfaffian_sup = std::max(out.pfaffian_sup, std::abs(out.pfaffian.v[i]));
        out.vanishing[i] = std::abs(out.pfaffian.v[i]) <= out.tol;
    }
    return out;
}

std::pair<int, int> splitting_euler_classes(int e1, int e2) {
    if (e1 % 2 != 0 || e2 % 2 != 0)
        throw std::invalid_argument("splitting_euler_classes: Euler numbers must be even");
    return {std::abs(e1 - e2), std::abs(e1 + e2)};
}

HarmonicMetric fuchsian_disk_metric(GridPtr grid) {
    ComplexField h = sample(grid, [](cxd) { return cxd{1.0, 0.0}; });
    ComplexField k = sample(grid, [](cxd z) {
        return cxd{kFuchsianDiskScale * (1.0 - std::norm(z)), 0.0};
    });
    return make_harmonic_metric(std::move(h), std::move(k));
}

double calibrate_fuchsian_scale(const GridPtr& grid) {
    ComplexField one = sample(grid, [](cxd) { return cxd{1.0, 0.0}; });
    ComplexField zero = make_field(grid);
    const HiggsData data =
        make_higgs_data(std::move(one), zero, zero, zero, 0, 0, 1e-12);

    auto residual_at = [&](double s) {
        ComplexField h = sample(grid, [](cxd) { return cxd{1.0, 0.0}; });
        ComplexField k = sample(grid, [s](cxd z) { return cxd{s * (1.0 - std::norm(z)), 0.0}; });
        const HarmonicMetric metric = make_harmonic_metric(std::move(h), std::move(k));
        return flatness_residual(assemble_connection(data, metric, Factor::first)).sup;
    };

    double lo = 0.5, hi = 2.0;
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
    double f1 = residual_at(x1), f2 = residual_at(x2);
    for (int it = 0; it < 60; ++it) {
        if (f1 < f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - gr * (hi - lo);
            f1 = residual_at(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + gr * (hi - lo);
            f2 = residual_at(x2);
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace adshiggs

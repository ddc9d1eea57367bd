#include "adshiggs/domains.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace adshiggs {

namespace {

constexpr double kPi = std::numbers::pi;

struct OctagonSides {
    std::array<cxd, 8> center;
    double side_radius;
};

OctagonSides octagon_sides(double rv) {
    // Geodesic through two adjacent vertices: circle orthogonal to the unit
    // circle, center on the bisector at distance rho.
    OctagonSides s;
    const double rho = (rv * rv + 1.0) / (2.0 * rv * std::cos(kPi / 8.0));
    s.side_radius = std::sqrt(rho * rho - 1.0);
    for (int j = 0; j < 8; ++j) {
        const double phi = kPi / 8.0 + j * kPi / 4.0;
        s.center[j] = rho * cxd{std::cos(phi), std::sin(phi)};
    }
    return s;
}

bool octagon_inside(const OctagonSides& s, cxd z) {
    const double r2 = s.side_radius * s.side_radius;
    for (const cxd& c : s.center)
        if (std::norm(z - c) < r2) return false;
    return true;
}

// Interior angle at a vertex for vertex radius rv: the angle between the
// two boundary arcs meeting there. Hyperbolic angles equal Euclidean ones
// in the conformal disk model.
double octagon_interior_angle(double rv) {
    const OctagonSides s = octagon_sides(rv);
    const cxd v = rv * cxd{std::cos(kPi / 4.0), std::sin(kPi / 4.0)};  // vertex between sides 0, 1
    const cxd prev = cxd{rv, 0.0};
    const cxd next = rv * cxd{std::cos(kPi / 2.0), std::sin(kPi / 2.0)};

    auto tangent_toward = [&](const cxd& center, const cxd& other) {
        cxd t = cxd{0.0, 1.0} * (v - center);
        if ((t.real() * (other - v).real() + t.imag() * (other - v).imag()) < 0.0) t = -t;
        return t / std::abs(t);
    };
    const cxd tm = tangent_toward(s.center[0], prev);
    const cxd tp = tangent_toward(s.center[1], next);
    double c = tm.real() * tp.real() + tm.imag() * tp.imag();
    c = std::clamp(c, -1.0, 1.0);
    return std::acos(c);
}

// Masked cell weight: cell area clipped by a 4x4 supersampled inside test.
double cell_fraction(cxd center, double h, const std::function<bool(cxd)>& inside) {
    int count = 0;
    for (int si = 0; si < 4; ++si)
        for (int sj = 0; sj < 4; ++sj) {
            const double ox = ((si + 0.5) / 4.0 - 0.5) * h;
            const double oy = ((sj + 0.5) / 4.0 - 0.5) * h;
            if (inside(center + cxd{ox, oy})) ++count;
        }
    return count / 16.0;
}

std::shared_ptr<ChartGrid> make_masked(ChartKind kind, int n, double half_extent,
                                       const std::function<bool(cxd)>& inside_test) {
    auto g = std::make_shared<ChartGrid>();
    g->kind = kind;
    g->n = n;
    g->periodic = false;
    const double h = 2.0 * half_extent / n;
    g->step_a = cxd{h, 0.0};
    g->step_b = cxd{0.0, h};
    g->z.resize(static_cast<std::size_t>(n) * n);
    g->weight.assign(g->z.size(), 0.0);
    g->inside.assign(g->z.size(), 0);
    g->deriv_ok.assign(g->z.size(), 0);

    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) {
            const cxd zc{-half_extent + (i + 0.5) * h, -half_extent + (j + 0.5) * h};
            const std::size_t id = g->idx(i, j);
            g->z[id] = zc;
            const double frac = cell_fraction(zc, h, inside_test);
            if (frac > 0.0) {
                g->inside[id] = 1;
                g->weight[id] = frac * h * h;
            }
        }
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) {
            if (i == 0 || j == 0 || i == n - 1 || j == n - 1) continue;
            const std::size_t id = g->idx(i, j);
            g->deriv_ok[id] = g->inside[id] && g->inside[g->idx(i - 1, j)] &&
                              g->inside[g->idx(i + 1, j)] && g->inside[g->idx(i, j - 1)] &&
                              g->inside[g->idx(i, j + 1)];
        }
    return g;
}

}  // namespace

double ChartGrid::total_weight() const {
    double acc = 0.0;
    for (std::size_t i = 0; i < weight.size(); ++i)
        if (inside[i]) acc += weight[i];
    return acc;
}

GridPtr make_torus(int n, cxd modulus) {
    if (n < 8) throw std::invalid_argument("make_torus: need n >= 8");
    if (!(modulus.imag() > 1e-12))
        throw std::invalid_argument("make_torus: modulus must have positive imaginary part");
    auto g = std::make_shared<ChartGrid>();
    g->kind = ChartKind::torus;
    g->n = n;
    g->modulus = modulus;
    g->periodic = true;
    g->step_a = cxd{1.0 / n, 0.0};
    g->step_b = modulus / static_cast<double>(n);
    g->z.resize(static_cast<std::size_t>(n) * n);
    g->weight.assign(g->z.size(), modulus.imag() / (static_cast<double>(n) * n));
    g->inside.assign(g->z.size(), 1);
    g->deriv_ok.assign(g->z.size(), 1);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i)
            g->z[g->idx(i, j)] = static_cast<double>(i) * g->step_a +
                                 static_cast<double>(j) * g->step_b;
    return g;
}

GridPtr make_disk_patch(double radius, int n) {
    if (!(radius > 0.0) || !(radius < 1.0))
        throw std::invalid_argument("make_disk_patch: radius must lie in (0,1)");
    if (n < 8) throw std::invalid_argument("make_disk_patch: need n >= 8");
    auto g = make_masked(ChartKind::disk_patch, n, radius,
                         [radius](cxd z) { return std::abs(z) <= radius; });
    g->radius = radius;
    return g;
}

double octagon_vertex_radius() {
    static const double rv = [] {
        double lo = 0.5, hi = 0.99;  // interior angle decreases in rv
        for (int it = 0; it < 200; ++it) {
            const double mid = 0.5 * (lo + hi);
            if (octagon_interior_angle(mid) > kPi / 4.0)
                lo = mid;
            else
                hi = mid;
        }
        return 0.5 * (lo + hi);
    }();
    return rv;
}

GridPtr make_genus2_octagon(int n) {
    if (n < 64) throw std::invalid_argument("make_genus2_octagon: need n >= 64");
    const double rv = octagon_vertex_radius();
    const OctagonSides sides = octagon_sides(rv);
    auto g = make_masked(ChartKind::octagon, n, rv,
                         [sides](cxd z) { return octagon_inside(sides, z); });
    g->vertex_radius = rv;
    return g;
}

ComplexField make_field(GridPtr grid) {
    ComplexField f;
    f.v.assign(grid->size(), cxd{});
    f.valid = grid->inside;
    f.grid = std::move(grid);
    return f;
}

ComplexField sample(GridPtr grid, const std::function<cxd(cxd)>& fn) {
    ComplexField f = make_field(grid);
    for (std::size_t i = 0; i < f.v.size(); ++i)
        if (f.valid[i]) f.v[i] = fn(f.grid->z[i]);
    return f;
}

ComplexField derivative(const ComplexField& f, Deriv dir) {
    const ChartGrid& g = *f.grid;
    if (f.v.size() != g.size()) throw std::invalid_argument("derivative: field/grid mismatch");
    ComplexField out;
    out.grid = f.grid;
    out.v.assign(g.size(), cxd{});
    out.valid.assign(g.size(), 0);

    const int n = g.n;
    auto wrap = [n](int i) { return (i % n + n) % n; };

    // Centered half-differences along the two index directions.
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            const std::size_t id = g.idx(i, j);
            std::size_t ip, im, jp, jm;
            if (g.periodic) {
                ip = g.idx(wrap(i + 1), j);
                im = g.idx(wrap(i - 1), j);
                jp = g.idx(i, wrap(j + 1));
                jm = g.idx(i, wrap(j - 1));
            } else {
                if (!g.deriv_ok[id]) continue;
                ip = g.idx(i + 1, j);
                im = g.idx(i - 1, j);
                jp = g.idx(i, j + 1);
                jm = g.idx(i, j - 1);
            }
            if (!(f.valid[id] && f.valid[ip] && f.valid[im] && f.valid[jp] && f.valid[jm]))
                continue;
            const cxd da = 0.5 * (f.v[ip] - f.v[im]);
            const cxd db = 0.5 * (f.v[jp] - f.v[jm]);
            // da = a dz f + conj(a) dzbar f, db = b dz f + conj(b) dzbar f.
            const cxd a = g.step_a, b = g.step_b;
            const cxd det = a * std::conj(b) - std::conj(a) * b;
            const cxd dz = (std::conj(b) * da - std::conj(a) * db) / det;
            const cxd dzbar = (a * db - b * da) / det;
            switch (dir) {
                case Deriv::dz: out.v[id] = dz; break;
                case Deriv::dzbar: out.v[id] = dzbar; break;
                case Deriv::dx: out.v[id] = dz + dzbar; break;
                case Deriv::dy: out.v[id] = I * (dz - dzbar); break;
            }
            out.valid[id] = 1;
        }
    }
    return out;
}

double integrate(const RealField& f) {
    const ChartGrid& g = *f.grid;
    if (f.v.size() != g.size()) throw std::invalid_argument("integrate: field/grid mismatch");
    double acc = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i)
        if (g.inside[i] && f.valid[i]) acc += g.weight[i] * f.v[i];
    return acc;
}

double integrate(const ComplexField& f) {
    const ChartGrid& g = *f.grid;
    if (f.v.size() != g.size()) throw std::invalid_argument("integrate: field/grid mismatch");
    double scale = 0.0, max_imag = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (!(g.inside[i] && f.valid[i])) continue;
        scale = std::max(scale, std::abs(f.v[i]));
        max_imag = std::max(max_imag, std::abs(f.v[i].imag()));
    }
    if (max_imag > 1e-9 * std::max(1.0, scale))
        throw std::invalid_argument("integrate: field is not real on valid nodes");
    double acc = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i)
        if (g.inside[i] && f.valid[i]) acc += g.weight[i] * f.v[i].real();
    return acc;
}

double integrate_renormalized(const RealField& f) {
    const ChartGrid& g = *f.grid;
    double valid_area = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i)
        if (g.inside[i] && f.valid[i]) valid_area += g.weight[i];
    if (valid_area == 0.0) throw std::invalid_argument("integrate_renormalized: empty mask");
    return integrate(f) * g.total_weight() / valid_area;
}

}  // namespace adshiggs

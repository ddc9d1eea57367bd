#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "adshiggs/higgs.hpp"

namespace adshiggs {

namespace {

// Discrete d^2/dz dzbar = Laplacian/4 on the periodic lattice
// z = i a + j b, via the inverse lattice metric (J^T J)^-1 with
// J = [[Re a, Re b], [Im a, Im b]].
class QuarterLaplacian {
  public:
    explicit QuarterLaplacian(const ChartGrid& g) : n_(g.n) {
        const double ja = g.step_a.real(), jb = g.step_b.real();
        const double jc = g.step_a.imag(), jd = g.step_b.imag();
        const double det = ja * jd - jb * jc;
        // (J^T J)^-1 entries.
        const double inv = 1.0 / (det * det);
        m11_ = (jb * jb + jd * jd) * inv;
        m22_ = (ja * ja + jc * jc) * inv;
        m12_ = -(ja * jb + jc * jd) * inv;
    }

    void apply(const std::vector<double>& u, std::vector<double>& out) const {
        const int n = n_;
        auto at = [&](int i, int j) {
            return u[static_cast<std::size_t>((j % n + n) % n) * n + (i % n + n) % n];
        };
        for (int j = 0; j < n; ++j) {
            for (int i = 0; i < n; ++i) {
                const double upp = at(i + 1, j) - 2.0 * at(i, j) + at(i - 1, j);
                const double uqq = at(i, j + 1) - 2.0 * at(i, j) + at(i, j - 1);
                const double upq = 0.25 * (at(i + 1, j + 1) - at(i + 1, j - 1) -
                                           at(i - 1, j + 1) + at(i - 1, j - 1));
                out[static_cast<std::size_t>(j) * n + i] =
                    0.25 * (m11_ * upp + 2.0 * m12_ * upq + m22_ * uqq);
            }
        }
    }

  private:
    int n_;
    double m11_, m12_, m22_;
};

double sup_norm(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s = std::max(s, std::abs(x));
    return s;
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

struct ScalarFactor {
    std::vector<double> p2, q2;  // |alpha|^2, |beta|^2 (or gamma/delta)
    std::vector<double> u;       // log of the metric entry
    int newton_steps = 0;
};

// Solves quarter_lap(u) + p2 e^{-2u} - q2 e^{2u} = 0 by damped Newton with
// matrix-free CG on the SPD system -quarter_lap + 2(p2 e^{-2u} + q2 e^{2u}).
void solve_factor(const ChartGrid& grid, ScalarFactor& f, const HitchinOptions& opt,
                  const char* name) {
    const std::size_t nn = f.u.size();
    const QuarterLaplacian lap(grid);

    double sup_p = 0.0, sup_q = 0.0;
    for (std::size_t i = 0; i < nn; ++i) {
        sup_p = std::max(sup_p, f.p2[i]);
        sup_q = std::max(sup_q, f.q2[i]);
    }
    if ((sup_p > 0.0) != (sup_q > 0.0))
        throw ObstructionError(std::string("solve_hitchin_torus: factor ") + name +
                               " has no solution: the integrated equation forces the integral "
                               "of a positive density to vanish (one of the two fields is "
                               "identically zero)");
    if (sup_p == 0.0 && sup_q == 0.0) return;  // flat abelian case: keep the initial metric

    std::vector<double> r(nn), lap_u(nn), diag(nn), delta(nn), trial(nn);
    auto residual = [&](const std::vector<double>& u, std::vector<double>& out) {
        lap.apply(u, out);
        for (std::size_t i = 0; i < nn; ++i)
            out[i] += f.p2[i] * std::exp(-2.0 * u[i]) - f.q2[i] * std::exp(2.0 * u[i]);
    };

    residual(f.u, r);
    double rsup = sup_norm(r);
    for (int step = 0; step < opt.max_iter && rsup > opt.tol; ++step) {
        for (std::size_t i = 0; i < nn; ++i)
            diag[i] = 2.0 * (f.p2[i] * std::exp(-2.0 * f.u[i]) + f.q2[i] * std::exp(2.0 * f.u[i]));

        // CG on A delta = r with A = -quarter_lap + diag.
        auto apply_a = [&](const std::vector<double>& v, std::vector<double>& out) {
            lap.apply(v, out);
            for (std::size_t i = 0; i < nn; ++i) out[i] = -out[i] + diag[i] * v[i];
        };
        std::fill(delta.begin(), delta.end(), 0.0);
        std::vector<double> res = r, p = r, ap(nn);
        double rr = dot(res, res);
        const double rr0 = rr;
        for (std::size_t it = 0; it < 40 * nn && rr > opt.cg_tol * opt.cg_tol * rr0; ++it) {
            apply_a(p, ap);
            const double alpha = rr / dot(p, ap);
            for (std::size_t i = 0; i < nn; ++i) {
                delta[i] += alpha * p[i];
                res[i] -= alpha * ap[i];
            }
            const double rr_new = dot(res, res);
            const double beta = rr_new / rr;
            rr = rr_new;
            for (std::size_t i = 0; i < nn; ++i) p[i] = res[i] + beta * p[i];
        }

        // Newton direction is -A^{-1} r with J = -A, i.e. u += lambda*delta... J delta = -r
        // and J = quarter_lap - diag = -A, so the update is u + lambda * delta.
        double lambda = 1.0;
        double trial_sup = rsup;
        for (int halve = 0; halve < 30; ++halve) {
            for (std::size_t i = 0; i < nn; ++i) trial[i] = f.u[i] + lambda * delta[i];
            residual(trial, r);
            trial_sup = sup_norm(r);
            if (trial_sup < rsup) break;
            lambda *= 0.5;
        }
        if (trial_sup >= rsup)
            throw ConvergenceError(std::string("solve_hitchin_torus: factor ") + name +
                                   " stalled (damping failed to reduce the residual)");
        f.u = trial;
        rsup = trial_sup;
        ++f.newton_steps;
    }
    if (rsup > opt.tol)
        throw ConvergenceError(std::string("solve_hitchin_torus: factor ") + name +
                               " did not reach tolerance in " + std::to_string(opt.max_iter) +
                               " Newton steps (residual " + std::to_string(rsup) + ")");
}

void require_constant(const ComplexField& f, const char* name) {
    cxd ref{};
    bool have_ref = false;
    double dev = 0.0, scale = 0.0;
    for (std::size_t i = 0; i < f.v.size(); ++i) {
        if (!f.valid[i]) continue;
        if (!have_ref) {
            ref = f.v[i];
            have_ref = true;
        }
        dev = std::max(dev, std::abs(f.v[i] - ref));
        scale = std::max(scale, std::abs(f.v[i]));
    }
    if (dev > 1e-10 * std::max(1.0, scale))
        throw std::invalid_argument(std::string("solve_hitchin_torus: field ") + name +
                                    " is not constant; holomorphic sections on the torus are "
                                    "constants in this trivialization");
}

}  // namespace

HitchinResult solve_hitchin_torus(const HiggsData& data, const HarmonicMetric& initial,
                                  const HitchinOptions& options) {
    const GridPtr grid = data.alpha.grid;
    if (grid->kind != ChartKind::torus)
        throw std::invalid_argument("solve_hitchin_torus: needs a torus chart");
    require_constant(data.alpha, "alpha");
    require_constant(data.beta, "beta");
    require_constant(data.gamma, "gamma");
    require_constant(data.delta, "delta");

    const std::size_t nn = grid->size();
    ScalarFactor fk, fh;
    fk.p2.resize(nn);
    fk.q2.resize(nn);
    fk.u.resize(nn);
    fh.p2.resize(nn);
    fh.q2.resize(nn);
    fh.u.resize(nn);
    for (std::size_t i = 0; i < nn; ++i) {
        fk.p2[i] = std::norm(data.alpha.v[i]);
        fk.q2[i] = std::norm(data.beta.v[i]);
        fk.u[i] = std::log(initial.k.v[i].real());
        fh.p2[i] = std::norm(data.gamma.v[i]);
        fh.q2[i] = std::norm(data.delta.v[i]);
        fh.u[i] = std::log(initial.h.v[i].real());
    }

    solve_factor(*grid, fk, options, "k");
    solve_factor(*grid, fh, options, "h");

    ComplexField hf = make_field(grid), kf = make_field(grid);
    for (std::size_t i = 0; i < nn; ++i) {
        hf.v[i] = std::exp(fh.u[i]);
        kf.v[i] = std::exp(fk.u[i]);
    }

    HitchinResult result;
    result.metric = make_harmonic_metric(std::move(hf), std::move(kf));
    result.newton_steps_k = fk.newton_steps;
    result.newton_steps_h = fh.newton_steps;
    result.residual_sup = flatness_residual(assemble_connection(data, result.metric)).sup;
    return result;
}

}  // namespace adshiggs

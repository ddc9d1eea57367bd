// Acceptance suite: runs the quantitative end-to-end checks and prints one
// pass/fail line per criterion. Exit code 0 iff all criteria pass.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <vector>

#include "adshiggs/ads.hpp"
#include "adshiggs/grassmann.hpp"
#include "adshiggs/higgs.hpp"
#include "adshiggs/identities.hpp"

using namespace adshiggs;

namespace {

constexpr double kPi = std::numbers::pi;

int failures = 0;

void report(int index, const char* name, bool ok, const std::string& detail) {
    std::printf("%s  %2d. %-38s %s\n", ok ? "PASS" : "FAIL", index, name, detail.c_str());
    if (!ok) ++failures;
}

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
    char buf[160];
    std::snprintf(buf, sizeof buf, f, a, b, c);
    return buf;
}

ComplexField constant(const GridPtr& g, cxd value) {
    return sample(g, [value](cxd) { return value; });
}

std::mt19937 rng(20250801);

cxd random_cxd(double scale = 1.0) {
    std::uniform_real_distribution<double> u(-scale, scale);
    return {u(rng), u(rng)};
}

// 1. Exact symbolic certification of the displayed identities, < 10 s.
void criterion_symbolic() {
    const auto start = std::chrono::steady_clock::now();
    bool ok = true;
    std::size_t residual_terms = 0;
    for (const CertificateGroup& g : certify_all()) {
        ok = ok && g.ok();
        for (const Certificate& c : g.entries) residual_terms += c.residual_terms;
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                            .count();
    ok = ok && residual_terms == 0 && secs < 10.0;
    report(1, "symbolic certification suite", ok,
           fmt("residual terms %.0f, %.2f s (< 10 s)", double(residual_terms), secs));
}

// 2. Unit-norm structure, symbolically and at 1000 random numeric jets.
void criterion_unit_norm() {
    const JetSymbols js = jet_symbols();
    bool ok = q_form_sym(js.s, js.s) == LaurentPoly(1L) &&
              q_form_sym(js.s_theta, js.s_theta) == LaurentPoly(1L) &&
              q_form_sym(js.s, js.s_theta).is_zero();

    double worst = 0.0;
    std::uniform_real_distribution<double> pos(0.3, 2.5), ang(0.0, 2.0 * kPi);
    for (int trial = 0; trial < 1000; ++trial) {
        const FrameJet j = make_frame_jet(random_cxd(), random_cxd(), random_cxd(), random_cxd(),
                                          pos(rng), pos(rng), random_cxd(), ang(rng));
        worst = std::max(worst, std::abs(q_form(j.s, j.s) - cxd{1.0, 0.0}));
        worst = std::max(worst, std::abs(q_form(j.s_theta, j.s_theta) - cxd{1.0, 0.0}));
        worst = std::max(worst, std::abs(q_form(j.s, j.s_theta)));
    }
    ok = ok && worst <= 1e-12;
    report(2, "unit-norm structure of the frame", ok, fmt("max deviation %.2e (<= 1e-12)", worst));
}

// 3 + 4. Volume endpoint and Euler number on the genus-2 octagon at n = 512.
void criterion_volume_and_euler() {
    const auto start = std::chrono::steady_clock::now();
    const GridPtr oct = make_genus2_octagon(512);
    const HiggsData data = make_higgs_data(constant(oct, 1.0), constant(oct, 0.0),
                                           constant(oct, 0.0), constant(oct, 0.0), 2, 0);
    const HarmonicMetric metric = fuchsian_disk_metric(oct);

    const VolumeResult vol = ads_volume(data, metric, 16, /*threads=*/1);
    const double vol1 = integrate(pullback_volume_form(data, metric, Factor::first));
    const double vol2 = integrate(pullback_volume_form(data, metric, Factor::second));
    const double cross = 0.5 * kPi * std::abs(vol1 + vol2);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                            .count();

    const double predicted = 2.0 * kPi * kPi;
    const bool ok3 = std::abs(vol.volume - predicted) < 0.01 * predicted &&
                     std::abs(cross - vol.volume) < 0.01 * predicted &&
                     std::abs(vol.predicted - predicted) == 0.0 && secs < 60.0;
    report(3, "volume pi^2 |e1+e2| = 2 pi^2 within 1%", ok3,
           fmt("measured %.4f vs 19.7392, cross-check %.4f", vol.volume, cross) +
               fmt(", %.1f s (< 60 s)", secs));

    const EulerResult e1 = euler_number(data, metric, Factor::first);
    const double area = [&] {
        RealField density;
        density.grid = oct;
        density.valid = oct->inside;
        density.v.resize(oct->size());
        for (std::size_t i = 0; i < oct->size(); ++i) {
            const double r2 = std::norm(oct->z[i]);
            density.v[i] = 4.0 / ((1.0 - r2) * (1.0 - r2));
        }
        return integrate(density);
    }();
    const bool ok4 = std::abs(e1.value - 2.0) <= 0.02 &&
                     std::abs(area - 4.0 * kPi) < 0.01 * 4.0 * kPi;
    report(4, "euler number (1/2pi) Int Vol(g1) = 2.00", ok4,
           fmt("measured %.4f (+- 0.02), area %.4f vs 4 pi", e1.value, area));
}

// 5. Torus Hitchin solver: convergence and the obstruction case.
void criterion_solver() {
    const GridPtr torus = make_torus(16, cxd{0.0, 1.0});
    const HarmonicMetric initial =
        make_harmonic_metric(constant(torus, 1.0), constant(torus, 1.0));

    bool ok = true;
    std::string detail;
    try {
        const HiggsData data = make_higgs_data(constant(torus, 2.0), constant(torus, 0.5),
                                               constant(torus, 0.0), constant(torus, 0.0), 0, 0);
        const HitchinResult res = solve_hitchin_torus(data, initial);
        double kerr = 0.0;
        for (std::size_t i = 0; i < torus->size(); ++i)
            kerr = std::max(kerr, std::abs(res.metric.k.v[i].real() - 2.0));
        ok = res.residual_sup <= 1e-10 && res.newton_steps_k <= 25;
        detail = fmt("k error %.2e, flatness %.2e, %g Newton steps", kerr, res.residual_sup,
                     double(res.newton_steps_k));
    } catch (const std::exception& e) {
        ok = false;
        detail = std::string("unexpected: ") + e.what();
    }

    bool obstructed = false;
    try {
        const HiggsData data = make_higgs_data(constant(torus, 1.0), constant(torus, 0.0),
                                               constant(torus, 0.0), constant(torus, 0.0), 0, 0);
        solve_hitchin_torus(data, initial);
    } catch (const ObstructionError&) {
        obstructed = true;
    }
    ok = ok && obstructed;
    report(5, "hitchin solver: k -> 2 and obstruction", ok,
           detail + (obstructed ? ", obstruction rejected" : ", obstruction NOT rejected"));
}

// 6. Order-2 convergence of the explicit disk solution.
void criterion_convergence() {
    auto residual_at = [](int n) {
        const GridPtr disk = make_disk_patch(0.7, n);
        const HiggsData data = make_higgs_data(constant(disk, 1.0), constant(disk, 0.0),
                                               constant(disk, 0.0), constant(disk, 0.0), 0, 0);
        const FlatnessResult res = flatness_residual(
            assemble_connection(data, fuchsian_disk_metric(disk), Factor::first));
        double sup = 0.0;
        for (std::size_t i = 0; i < disk->size(); ++i)
            if (res.field.valid[i] && std::abs(disk->z[i]) < 0.6)
                sup = std::max(sup, res.field.v[i]);
        return sup;
    };
    const double r128 = residual_at(128), r256 = residual_at(256);
    const double ratio = r128 / r256;
    const bool ok = ratio >= 3.5 && ratio <= 4.5;
    report(6, "explicit-solution order-2 convergence", ok,
           fmt("residual %.3e -> %.3e, ratio %.2f in [3.5, 4.5]", r128, r256, ratio));
}

// 7. Domination implies transversality on random synthetic fields.
void criterion_domination_transversality() {
    const GridPtr disk = make_disk_patch(0.6, 16);
    std::size_t dominated_nodes = 0, counterexamples = 0;
    for (int set = 0; set < 50; ++set) {
        auto poly = [&](cxd c0, double scale) {
            const cxd c1 = random_cxd(scale), c2 = random_cxd(scale);
            return sample(disk, [=](cxd z) { return c0 + c1 * z + c2 * z * z; });
        };
        // First factor strong, second weak, so domination holds somewhere.
        const HiggsData data = make_higgs_data(
            poly(cxd{2.0, 0.0} + random_cxd(0.5), 0.6), poly(random_cxd(0.4), 0.3),
            poly(random_cxd(0.3), 0.2), poly(random_cxd(0.3), 0.2), 0, 0);
        std::uniform_real_distribution<double> u(-0.3, 0.3);
        const double h0 = u(rng), k0 = u(rng);
        const HarmonicMetric metric = make_harmonic_metric(
            sample(disk, [=](cxd z) { return std::exp(h0 * z.real()); }),
            sample(disk, [=](cxd z) { return std::exp(k0 * z.imag()); }));

        const DominationReport dom = domination_report(pullback_metric(data, metric, Factor::first),
                                                       pullback_metric(data, metric, Factor::second));
        const JetEvaluator jets(data, metric);
        for (std::size_t i = 0; i < disk->size(); ++i) {
            if (!dom.node_dominated[i] || !jets.point_valid(i)) continue;
            ++dominated_nodes;
            for (int t = 0; t < 64; ++t) {
                const TransversalityReport rep =
                    transversality(jets.at_with_c(i, 2.0 * kPi * t / 64.0, cxd{}));
                if (!rep.transverse) {
                    ++counterexamples;
                    break;
                }
            }
        }
    }
    const bool ok = counterexamples == 0 && dominated_nodes > 0;
    report(7, "domination implies transversality", ok,
           fmt("%g dominated nodes x 64 angles, %g counterexamples", double(dominated_nodes),
               double(counterexamples)));
}

// 8. Grassmannian diagnostics.
void criterion_grassmannian() {
    std::uniform_real_distribution<double> pos(0.3, 2.5), ang(0.0, 2.0 * kPi);
    double quadric = 0.0, gram = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
        const FrameJet j = make_frame_jet(random_cxd(), random_cxd(), random_cxd(), random_cxd(),
                                          pos(rng), pos(rng), random_cxd(), ang(rng));
        const GaussMapResult r = gauss_map(j);
        quadric = std::max(quadric, r.quadric_error);
        gram = std::max(gram, r.gram_error);
    }

    const GridPtr disk = make_disk_patch(0.6, 32);
    auto poly = [&](double scale) {
        const cxd c0 = random_cxd(scale), c1 = random_cxd(scale), c2 = random_cxd(scale);
        return sample(disk, [=](cxd z) { return c0 + c1 * z + c2 * z * z; });
    };
    const HiggsData data = make_higgs_data(poly(1.0), poly(1.0), poly(0.5), poly(0.5), 0, 0);
    const HarmonicMetric metric = make_harmonic_metric(
        sample(disk, [](cxd z) { return std::exp(0.2 * z.real()); }),
        sample(disk, [](cxd z) { return std::exp(-0.1 * z.imag()); }));
    const GaussDerivativeResult gd = gauss_derivative(data, metric, 0.7);
    const ConformalityReport conf = conformality_report(data, metric);

    const bool ok = quadric <= 1e-12 && gram <= 1e-12 && gd.max_mismatch <= 1e-10 &&
                    conf.max_deviation <= 1e-10;
    report(8, "gauss map into the Klein quadric", ok,
           fmt("quadric %.1e, gram %.1e", quadric, gram) +
               fmt(", f_z mismatch %.1e, <f_z,f_z>+8 Pf %.1e", gd.max_mismatch,
                   conf.max_deviation));
}

// 9. Fiber geodesics: residual and winding.
void criterion_fibers() {
    const GridPtr torus = make_torus(8, cxd{0.0, 1.0});
    const HiggsData data =
        make_higgs_data(constant(torus, random_cxd()), constant(torus, random_cxd()),
                        constant(torus, random_cxd()), constant(torus, random_cxd()), 0, 0);
    const HarmonicMetric metric =
        make_harmonic_metric(constant(torus, 1.3), constant(torus, 0.8));

    double residual = 0.0;
    bool winding_ok = true;
    for (std::size_t node = 0; node < torus->size(); node += 7) {
        const FiberReport rep = fiber_report(data, metric, node);
        residual = std::max({residual, rep.geodesic_residual, rep.timelike_error});
        winding_ok = winding_ok && rep.winding_component2 == 1 && rep.winding_component3 == -1;
    }
    const bool ok = residual <= 1e-12 && winding_ok;
    report(9, "time-like geodesic fibers, winding 1", ok,
           fmt("max residual %.2e (<= 1e-12), winding ", residual) +
               (winding_ok ? "+1/-1" : "WRONG"));
}

// 10. Splitting Euler classes over the exhaustive even table.
void criterion_splitting() {
    bool ok = true;
    for (int e1 = -4; e1 <= 4; e1 += 2)
        for (int e2 = -4; e2 <= 4; e2 += 2) {
            const auto [f1, f2] = splitting_euler_classes(e1, e2);
            ok = ok && f1 == std::abs(e1 - e2) && f2 == std::abs(e1 + e2);
        }
    report(10, "splitting Euler classes table", ok, "e1, e2 in {-4,-2,0,2,4}");
}

}  // namespace

int main() {
    criterion_symbolic();
    criterion_unit_norm();
    criterion_volume_and_euler();
    criterion_solver();
    criterion_convergence();
    criterion_domination_transversality();
    criterion_grassmannian();
    criterion_fibers();
    criterion_splitting();
    if (failures == 0)
        std::printf("all acceptance criteria passed\n");
    else
        std::printf("%d acceptance criteria FAILED\n", failures);
    return failures == 0 ? 0 : 1;
}

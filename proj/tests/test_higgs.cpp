#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "adshiggs/higgs.hpp"

using namespace adshiggs;

namespace {

constexpr double kPi = std::numbers::pi;
std::mt19937 rng(4242);

cxd random_cxd(double scale = 1.0) {
    std::uniform_real_distribution<double> u(-scale, scale);
    return {u(rng), u(rng)};
}

ComplexField constant(const GridPtr& g, cxd value) {
    return sample(g, [value](cxd) { return value; });
}

HiggsData constant_data(const GridPtr& g, cxd a, cxd b, cxd c, cxd d, int e1 = 0, int e2 = 0) {
    return make_higgs_data(constant(g, a), constant(g, b), constant(g, c), constant(g, d), e1, e2);
}

HarmonicMetric constant_metric(const GridPtr& g, double h, double k) {
    return make_harmonic_metric(constant(g, h), constant(g, k));
}

}  // namespace

TEST_CASE("higgs data validation") {
    const GridPtr torus = make_torus(8, cxd{0.0, 1.0});
    CHECK_THROWS_AS(constant_data(torus, 1.0, 0.0, 0.0, 0.0, 1, 0), std::invalid_argument);
    CHECK_THROWS_AS(constant_data(torus, 1.0, 0.0, 0.0, 0.0, 2, 0), std::invalid_argument);
    CHECK_NOTHROW(constant_data(torus, 1.0, 0.0, 0.0, 0.0, 0, 0));

    const GridPtr oct = make_genus2_octagon(64);
    CHECK_NOTHROW(constant_data(oct, 1.0, 0.0, 0.0, 0.0, 2, 0));
    CHECK_THROWS_AS(constant_data(oct, 1.0, 0.0, 0.0, 0.0, 4, 0), std::invalid_argument);

    // conj(z) is not holomorphic.
    const GridPtr disk = make_disk_patch(0.5, 32);
    ComplexField bad = sample(disk, [](cxd z) { return std::conj(z); });
    CHECK_THROWS_AS(make_higgs_data(bad, constant(disk, 0.0), constant(disk, 0.0),
                                    constant(disk, 0.0), 0, 0),
                    std::invalid_argument);

    CHECK_THROWS_AS(make_harmonic_metric(constant(disk, -1.0), constant(disk, 1.0)),
                    std::invalid_argument);
}

TEST_CASE("connection matrices match the displayed pattern") {
    const GridPtr g = make_torus(8, cxd{0.0, 1.0});

    SUBCASE("alpha = 1, rest zero, h = k = 1") {
        const HiggsData data = constant_data(g, 1.0, 0.0, 0.0, 0.0);
        const HarmonicMetric metric = constant_metric(g, 1.0, 1.0);
        const Connection<4> conn = assemble_connection(data, metric);
        CMat4 az_expected = CMat4::Zero();
        az_expected(0, 2) = az_expected(1, 3) = 1.0;  // alpha slots
        CMat4 azb_expected = CMat4::Zero();
        azb_expected(2, 0) = azb_expected(3, 1) = 1.0;  // k^-2 conj(alpha) slots
        CHECK((conn.a_z[0] - az_expected).cwiseAbs().maxCoeff() < 1e-15);
        CHECK((conn.a_zbar[0] - azb_expected).cwiseAbs().maxCoeff() < 1e-15);
    }

    SUBCASE("A_zbar is H^-1 conj(Phi)^T H") {
        const cxd a = random_cxd(), b = random_cxd(), c = random_cxd(), d = random_cxd();
        const double h = 1.3, k = 0.8;
        const HiggsData data = constant_data(g, a, b, c, d);
        const HarmonicMetric metric = constant_metric(g, h, k);
        const Connection<4> conn = assemble_connection(data, metric);

        CHECK((conn.a_z[5] - higgs_field_matrix(a, b, c, d)).cwiseAbs().maxCoeff() < 1e-15);

        CMat2 h1, h2;
        h1 << 1.0 / k, 0.0, 0.0, k;
        h2 << 1.0 / h, 0.0, 0.0, h;
        const CMat4 big_h = tensor_product(h1, h2);
        const CMat4 phi = higgs_field_matrix(a, b, c, d);
        const CMat4 expected = big_h.inverse() * phi.conjugate().transpose() * big_h;
        CHECK((conn.a_zbar[5] - expected).cwiseAbs().maxCoeff() < 1e-13);
    }

    SUBCASE("4x4 equals the tensor sum of the 2x2 factors") {
        const GridPtr disk = make_disk_patch(0.6, 32);
        ComplexField alpha = sample(disk, [](cxd z) { return 1.0 + 0.3 * z; });
        ComplexField beta = sample(disk, [](cxd z) { return 0.2 * z * z; });
        ComplexField gamma = sample(disk, [](cxd z) { return 0.1 - 0.2 * z; });
        ComplexField delta = sample(disk, [](cxd) { return cxd{0.05, 0.02}; });
        const HiggsData data = make_higgs_data(std::move(alpha), std::move(beta),
                                               std::move(gamma), std::move(delta), 0, 0);
        const HarmonicMetric metric = make_harmonic_metric(
            sample(disk, [](cxd z) { return std::exp(0.2 * z.real() - 0.3 * z.imag()); }),
            sample(disk, [](cxd z) { return std::exp(-0.1 * z.real() + 0.2 * z.imag()); }));

        const Connection<4> big = assemble_connection(data, metric);
        const Connection<2> f1 = assemble_connection(data, metric, Factor::first);
        const Connection<2> f2 = assemble_connection(data, metric, Factor::second);
        const CMat2 id = CMat2::Identity();
        for (std::size_t i = 0; i < disk->size(); ++i) {
            if (!big.valid[i]) continue;
            REQUIRE(f1.valid[i]);
            REQUIRE(f2.valid[i]);
            const CMat4 az_sum =
                tensor_product(f1.a_z[i], id) + tensor_product(id, f2.a_z[i]);
            const CMat4 azb_sum =
                tensor_product(f1.a_zbar[i], id) + tensor_product(id, f2.a_zbar[i]);
            CHECK((big.a_z[i] - az_sum).cwiseAbs().maxCoeff() < 1e-13);
            CHECK((big.a_zbar[i] - azb_sum).cwiseAbs().maxCoeff() < 1e-13);
        }
    }
}

TEST_CASE("flatness residual") {
    const GridPtr g = make_torus(12, cxd{0.0, 1.0});

    SUBCASE("zero Higgs field with unit metric is flat") {
        const HiggsData data = constant_data(g, 0.0, 0.0, 0.0, 0.0);
        const HarmonicMetric metric = constant_metric(g, 1.0, 1.0);
        CHECK(flatness_residual(assemble_connection(data, metric)).sup < 1e-14);
    }

    SUBCASE("constant balance k = (|alpha|/|beta|)^(1/2)") {
        const cxd alpha{0.8, -0.6};  // |alpha| = 1
        const cxd beta{2.0, 0.0};
        const double k = std::sqrt(std::abs(alpha) / std::abs(beta));
        const HiggsData data = constant_data(g, alpha, beta, 0.0, 0.0);
        const HarmonicMetric metric = constant_metric(g, 1.7, k);
        CHECK(flatness_residual(assemble_connection(data, metric, Factor::first)).sup < 1e-13);
    }

    SUBCASE("explicit disk solution converges at order 2") {
        auto residual_at = [](int n) {
            const GridPtr disk = make_disk_patch(0.7, n);
            const HiggsData data = constant_data(disk, 1.0, 0.0, 0.0, 0.0);
            const HarmonicMetric metric = fuchsian_disk_metric(disk);
            const FlatnessResult res =
                flatness_residual(assemble_connection(data, metric, Factor::first));
            double sup = 0.0;
            for (std::size_t i = 0; i < disk->size(); ++i)
                if (res.field.valid[i] && std::abs(disk->z[i]) < 0.6)
                    sup = std::max(sup, res.field.v[i]);
            return sup;
        };
        const double ratio = residual_at(128) / residual_at(256);
        CHECK(ratio > 3.5);
        CHECK(ratio < 4.5);
    }

    SUBCASE("calibration of the disk scale lands on the frozen constant") {
        const double s = calibrate_fuchsian_scale(make_disk_patch(0.7, 96));
        CHECK(std::abs(s - kFuchsianDiskScale) < 1e-3);
    }
}

TEST_CASE("hitchin solver on the torus") {
    const GridPtr g = make_torus(16, cxd{0.0, 1.0});

    SUBCASE("constants alpha=2, beta=1/2 converge to k = 2") {
        const HiggsData data = constant_data(g, 2.0, 0.5, 0.0, 0.0);
        const HitchinResult res = solve_hitchin_torus(data, constant_metric(g, 1.0, 1.0));
        for (std::size_t i = 0; i < g->size(); ++i)
            CHECK(std::abs(res.metric.k.v[i].real() - 2.0) < 1e-9);
        CHECK(res.residual_sup <= 1e-10);
        CHECK(res.newton_steps_k <= 25);
    }

    SUBCASE("obstruction: alpha nonzero, beta zero") {
        const HiggsData data = constant_data(g, 1.0, 0.0, 0.0, 0.0);
        CHECK_THROWS_AS(solve_hitchin_torus(data, constant_metric(g, 1.0, 1.0)),
                        ObstructionError);
    }

    SUBCASE("zero fields keep the initial constant metric") {
        const HiggsData data = constant_data(g, 0.0, 0.0, 0.0, 0.0);
        const HitchinResult res = solve_hitchin_torus(data, constant_metric(g, 1.0, 2.5));
        CHECK(res.metric.k.v[0].real() == doctest::Approx(2.5).epsilon(1e-14));
        CHECK(res.residual_sup < 1e-13);
    }

    SUBCASE("nonconstant initial guess still converges") {
        const HiggsData data = constant_data(g, 2.0, 0.5, 0.0, 0.0);
        ComplexField h0 = constant(g, 1.0);
        ComplexField k0 = sample(g, [](cxd z) {
            return cxd{1.0 + 0.2 * std::cos(2.0 * kPi * z.real()), 0.0};
        });
        const HitchinResult res =
            solve_hitchin_torus(data, make_harmonic_metric(std::move(h0), std::move(k0)));
        for (std::size_t i = 0; i < g->size(); ++i)
            CHECK(std::abs(res.metric.k.v[i].real() - 2.0) < 1e-8);
    }

    SUBCASE("nonconstant data is rejected") {
        ComplexField alpha = sample(g, [](cxd z) {
            return std::exp(cxd{0.0, 2.0 * kPi * z.real()});
        });
        ComplexField rest = constant(g, 0.0);
        CHECK_THROWS_AS(
            solve_hitchin_torus(make_higgs_data(std::move(alpha), rest, rest, rest, 0, 0),
                                constant_metric(g, 1.0, 1.0)),
            std::invalid_argument);
    }
}

TEST_CASE("pull-back metric and volume form") {
    SUBCASE("fuchsian data develops the hyperbolic metric") {
        const GridPtr disk = make_disk_patch(0.7, 64);
        const HiggsData data = constant_data(disk, 1.0, 0.0, 0.0, 0.0);
        const HarmonicMetric metric = fuchsian_disk_metric(disk);
        const PullbackMetric g1 = pullback_metric(data, metric, Factor::first);
        const ComplexField vol = pullback_volume_form(data, metric, Factor::first);
        for (std::size_t i = 0; i < disk->size(); ++i) {
            if (!g1.valid[i]) continue;
            const double r2 = std::norm(disk->z[i]);
            const double hyp = 4.0 / ((1.0 - r2) * (1.0 - r2));
            CHECK(std::abs(g1.p[i]) < 1e-14);
            CHECK(g1.m[i] == doctest::Approx(hyp).epsilon(1e-12));
            CHECK(vol.v[i].real() == doctest::Approx(hyp).epsilon(1e-12));
        }

        // Cross-check: the density 4/(1-|z|^2)^2 has Gauss curvature -1,
        // K = -(1/2 lambda) Laplacian log lambda with Laplacian = 4 dz dzbar.
        ComplexField log_lambda = make_field(disk);
        for (std::size_t i = 0; i < disk->size(); ++i)
            if (g1.valid[i]) log_lambda.v[i] = std::log(g1.m[i]);
        log_lambda.valid = g1.valid;
        const ComplexField lap = derivative(derivative(log_lambda, Deriv::dz), Deriv::dzbar);
        for (std::size_t i = 0; i < disk->size(); ++i) {
            if (!lap.valid[i] || std::abs(disk->z[i]) > 0.5) continue;
            const double lambda = g1.m[i];
            const double curv = -4.0 * lap.v[i].real() / (2.0 * lambda);
            CHECK(curv == doctest::Approx(-1.0).epsilon(1e-3));
        }
    }

    SUBCASE("degenerate and zero cases") {
        const GridPtr g = make_torus(8, cxd{0.0, 1.0});
        const HarmonicMetric unit = constant_metric(g, 1.0, 1.0);

        const HiggsData zero = constant_data(g, 0.0, 0.0, 0.0, 0.0);
        const PullbackMetric g0 = pullback_metric(zero, unit, Factor::first);
        CHECK(std::abs(g0.p[0]) == 0.0);
        CHECK(g0.m[0] == 0.0);

        const HiggsData ones = constant_data(g, 1.0, 1.0, 0.0, 0.0);
        const PullbackMetric g1 = pullback_metric(ones, unit, Factor::first);
        const Eigen::Matrix2d real = g1.real_matrix(0);
        CHECK(real(0, 0) == doctest::Approx(16.0));
        CHECK(real(1, 1) == doctest::Approx(0.0));
        CHECK(real(0, 1) == doctest::Approx(0.0));

        // Vol(g1) vanishes for alpha = beta at k = 1 and flips sign under
        // alpha <-> beta, k <-> 1/k.
        CHECK(pullback_volume_form(ones, unit, Factor::first).v[0] == cxd{0.0, 0.0});
        const HiggsData ab = constant_data(g, cxd{1.0, 0.5}, cxd{0.3, -0.1}, 0.0, 0.0);
        const HiggsData ba = constant_data(g, cxd{0.3, -0.1}, cxd{1.0, 0.5}, 0.0, 0.0);
        const HarmonicMetric mk = constant_metric(g, 1.0, 1.7);
        const HarmonicMetric mki = constant_metric(g, 1.0, 1.0 / 1.7);
        const cxd v1 = pullback_volume_form(ab, mk, Factor::first).v[0];
        const cxd v2 = pullback_volume_form(ba, mki, Factor::first).v[0];
        CHECK(std::abs(v1 + v2) < 1e-13);
    }
}

TEST_CASE("euler numbers on closed charts") {
    const GridPtr oct = make_genus2_octagon(256);
    const HiggsData data = constant_data(oct, 1.0, 0.0, 0.0, 0.0, 2, 0);
    const HarmonicMetric metric = fuchsian_disk_metric(oct);
    const EulerResult e1 = euler_number(data, metric, Factor::first);
    CHECK(std::abs(e1.value - 2.0) < 2e-2);
    const EulerResult e2 = euler_number(data, metric, Factor::second);
    CHECK(std::abs(e2.value) < 1e-12);

    // Swapping alpha and beta flips the sign.
    const HiggsData swapped = constant_data(oct, 0.0, 1.0, 0.0, 0.0, -2, 0);
    const EulerResult e1s = euler_number(swapped, metric, Factor::first);
    CHECK(std::abs(e1s.value + 2.0) < 2e-2);

    const GridPtr disk = make_disk_patch(0.5, 32);
    const HiggsData ddata = constant_data(disk, 1.0, 0.0, 0.0, 0.0);
    CHECK_THROWS_AS(euler_number(ddata, fuchsian_disk_metric(disk), Factor::first),
                    std::invalid_argument);
}

TEST_CASE("domination report") {
    const GridPtr disk = make_disk_patch(0.6, 48);
    const HiggsData fuchs = constant_data(disk, 1.0, 0.0, 0.0, 0.0);
    const HarmonicMetric metric = fuchsian_disk_metric(disk);
    const PullbackMetric g1 = pullback_metric(fuchs, metric, Factor::first);
    const PullbackMetric g2 = pullback_metric(fuchs, metric, Factor::second);  // zero

    const DominationReport ok = domination_report(g1, g2);
    CHECK(ok.dominated);
    CHECK(ok.margin > 0.0);

    const DominationReport eq = domination_report(g1, g1);
    CHECK_FALSE(eq.dominated);

    const DominationReport swapped = domination_report(g2, g1);
    CHECK_FALSE(swapped.dominated);
    CHECK(swapped.failing_nodes == swapped.tested_nodes);
}

TEST_CASE("pfaffian, hopf and the characteristic polynomial of Phi") {
    const GridPtr g = make_torus(8, cxd{0.0, 1.0});

    SUBCASE("pfaffian vanishes when alpha beta = gamma delta") {
        const cxd a = random_cxd(), b = random_cxd();
        const HiggsData data = constant_data(g, a, b, a, b);
        const PfaffianHopf ph = pfaffian_and_hopf(data);
        CHECK(ph.pfaffian_sup < 1e-14);
        CHECK(ph.vanishing[0]);
    }

    SUBCASE("gamma = delta = 0 reduces to the first factor") {
        const cxd a{1.5, 0.3}, b{-0.2, 0.7};
        const HiggsData data = constant_data(g, a, b, 0.0, 0.0);
        const PfaffianHopf ph = pfaffian_and_hopf(data);
        CHECK(std::abs(ph.pfaffian.v[0] - a * b) < 1e-15);
        CHECK(std::abs(ph.hopf.v[0] + 2.0 * a * b) < 1e-15);
    }

    SUBCASE("char poly coefficients from numeric eigenvalues") {
        for (int trial = 0; trial < 10; ++trial) {
            const cxd a = random_cxd(), b = random_cxd(), c = random_cxd(), d = random_cxd();
            const CMat4 phi = higgs_field_matrix(a, b, c, d);
            const Eigen::ComplexEigenSolver<CMat4> es(phi);
            const auto& ev = es.eigenvalues();
            cxd e2 = 0.0, e4 = 1.0;
            for (int i = 0; i < 4; ++i) {
                e4 *= ev(i);
                for (int j = i + 1; j < 4; ++j) e2 += ev(i) * ev(j);
            }
            const cxd hopf = -2.0 * (a * b + c * d);
            const cxd pf = a * b - c * d;
            CHECK(std::abs(e2 - hopf) < 1e-10);
            CHECK(std::abs(e4 - pf * pf) < 1e-10);
        }
    }
}

TEST_CASE("splitting euler classes") {
    CHECK(splitting_euler_classes(2, 0) == std::pair<int, int>{2, 2});
    CHECK(splitting_euler_classes(2, -2) == std::pair<int, int>{4, 0});
    CHECK(splitting_euler_classes(4, 4) == std::pair<int, int>{0, 8});
    CHECK_THROWS_AS(splitting_euler_classes(1, 0), std::invalid_argument);
}

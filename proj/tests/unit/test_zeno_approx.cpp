#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "zenoswitch/error.hpp"
#include "zenoswitch/zeno_approx.hpp"

using namespace zeno;

namespace {

Trajectory pump_on(double oe, double dk, double g, double L, double stride = 0.01) {
    FieldState f;
    f.a_s = 1.0;
    WaveguideParams p;
    p.omega1 = 1;
    p.omega2 = oe;
    p.delta_k = dk;
    p.gamma = g;
    p.length = L;
    IntegratorSettings s;
    s.dense_output_stride = stride;
    return propagate_undepleted(f, p, 1.0, s);
}

}  // namespace

TEST(Regime, FactorTenThresholds) {
    EXPECT_EQ(classify_regime(10, 0).kind, RegimeKind::CQZ);
    EXPECT_EQ(classify_regime(10, 0.99).kind, RegimeKind::CQZ);
    EXPECT_EQ(classify_regime(10, 1).kind, RegimeKind::Intermediate);
    EXPECT_EQ(classify_regime(10, 100).kind, RegimeKind::Intermediate);
    EXPECT_EQ(classify_regime(10, 101).kind, RegimeKind::IQZ);
    EXPECT_STREQ(to_string(RegimeKind::IQZ), "IQZ");
}

TEST(Suppression, Coefficients) {
    auto c = suppression_coefficients(0.01, 10, 100);
    EXPECT_NEAR(c.s_cqz, 1e-4 / (1e-4 + 100), 1e-18);
    EXPECT_NEAR(c.kappa_eff, 1.0, 1e-12);
    EXPECT_NEAR(c.s_iqz, 1e-4 * 1e4 / 1e4, 1e-16);
    EXPECT_NEAR(c.s_cqz / c.s_iqz, suppression_ratio(10, 100), 1e-3 * 0.01);
}

TEST(Suppression, Ratio) {
    EXPECT_DOUBLE_EQ(suppression_ratio(3, 3), 1.0);
    EXPECT_DOUBLE_EQ(suppression_ratio(10, 100), 0.01);
    EXPECT_THROW(suppression_ratio(10, 0), DomainError);
}

TEST(CqzSignal, PhaseSuppressedByMismatchRatio) {
    const double z = 3;
    auto a = cqz_signal(1, 1, 0.01, 10, z);
    const double off = z / (2 * 0.01);
    EXPECT_NEAR(std::arg(a.amplitude) / off, 1e-6, 1e-9);
    EXPECT_FALSE(a.regime_warning);
}

TEST(CqzSignal, PumpOffLimitRecoversLinearPhase) {
    auto a = cqz_signal(1, 1, 10, 0, 2);
    EXPECT_NEAR(std::arg(a.amplitude), 2 / 20.0, 1e-15);
    EXPECT_DOUBLE_EQ(std::abs(a.amplitude), 1.0);
    EXPECT_TRUE(a.regime_warning);
}

TEST(CqzSignal, EnvelopeMatchesIntegrator) {
    auto traj = pump_on(10, 0.01, 0, 20, 0.002);
    double conv_num = 0, conv_formula = 0;
    for (const auto& f : traj) {
        conv_num = std::max(conv_num, 1 - std::norm(f.a_s));
        conv_formula = std::max(conv_formula, 1 - std::norm(cqz_signal(1, 1, 0.01, 10, f.z).amplitude));
    }
    EXPECT_NEAR(conv_formula, 1 - 1 / 1.02, 1e-6);
    EXPECT_NEAR(conv_num, conv_formula, 0.1 * conv_formula);
    const double env_min = 1 / std::sqrt(1 + 2.0 / 100);
    EXPECT_NEAR(std::abs(cqz_signal(1, 1, 0.01, 10, std::numbers::pi / 10).amplitude), env_min, 1e-12);
}

TEST(IqzSignal, ExponentArithmetic) {
    auto a = iqz_signal(1, 1, 0, 10, 100, 1);
    EXPECT_NEAR(1 - std::norm(a.first_order), 1 - std::exp(-1.0), 1e-12);
    EXPECT_NEAR(1 - std::norm(a.first_order), 0.632, 1e-3);
}

TEST(IqzSignal, LossGrowsWithGamma) {
    double prev = 0;
    for (double g : {20.0, 50.0, 100.0, 1e3, 1e4}) {
        auto a = iqz_signal(1, 1, 0.01, 10, g, 2);
        EXPECT_GT(1 - std::norm(a.adiabatic), prev);
        prev = 1 - std::norm(a.adiabatic);
    }
    EXPECT_GT(prev, 0.99);
}

TEST(IqzSignal, ZeroGammaRejected) { EXPECT_THROW(iqz_signal(1, 1, 0, 10, 0, 1), DomainError); }

TEST(IqzSignal, IntermediateGammaAgainstIntegrator) {
    auto traj = pump_on(10, 0.01, 50, 5, 0.05);
    for (const auto& f : traj) {
        if (f.z < 2) continue;
        const double c = std::abs(iqz_signal(1, 1, 0.01, 10, 50, f.z).adiabatic);
        EXPECT_NEAR(f.mu(Wave::Signal), c, 0.05 * c) << f.z;
    }
}

TEST(IqzSignal, LossLawInValidityRegime) {
    auto end = pump_on(100, 0, 500, 1, 0.5).back();
    const double law = 500.0 * 1 / (100.0 * 100.0);
    EXPECT_NEAR(1 - std::norm(end.a_s), law, 0.1 * law);
}

TEST(Dressed, SimpleValuesAndRoundTrip) {
    FieldState f;
    f.a_h = 1.0;
    auto [ap, am] = dressed_amplitudes(f, 0.3);
    EXPECT_NEAR(std::abs(ap - 0.5), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(am - 0.5), 0.0, 1e-15);

    f.z = 1.7;
    f.a_h = cplx(0.3, -0.8);
    f.a_d = cplx(-1.1, 0.25);
    auto [bp, bm] = dressed_amplitudes(f, 0.9);
    auto [h, d] = undress(bp, bm, 0.9, f.z);
    EXPECT_NEAR(std::abs(h - f.a_h), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(d - f.a_d), 0.0, 1e-15);
}

TEST(Dressed, AdiabaticValuesMatchIntegratorAverage) {
    const double dk = 0.01, oe = 10;
    auto traj = pump_on(oe, dk, 0, 5, 0.001);
    cplx sum_p{}, sum_m{};
    int n = 0;
    for (const auto& f : traj) {
        if (f.z < 1) continue;
        auto [ap, am] = dressed_amplitudes(f, dk);
        auto [ep, em] = adiabatic_dressed_amplitudes(f.a_s, 1, dk, oe);
        sum_p += ap / ep;
        sum_m += am / em;
        ++n;
    }
    EXPECT_NEAR(std::abs(sum_p / double(n) - 1.0), 0.0, 0.1);
    EXPECT_NEAR(std::abs(sum_m / double(n) - 1.0), 0.0, 0.1);
}

TEST(ZenoProperties, LossMonotoneInGammaAndCqzBound) {
    double prev = -1;
    for (double g : {0.0, 1.0, 5.0, 20.0}) {
        auto traj = pump_on(10, 0.01, g, 5, 0.005);
        const double loss = 1 - std::norm(traj.back().a_s);
        EXPECT_GT(loss, prev) << g;
        prev = loss;
        if (g == 0)
            for (const auto& f : traj) EXPECT_LE(1 - std::norm(f.a_s), 0.02) << f.z;
    }
}

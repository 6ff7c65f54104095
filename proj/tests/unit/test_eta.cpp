#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "oracles/brute_zeta.hpp"
#include "oracles/quad_phase.hpp"
#include "zstr/errors.hpp"
#include "zstr/eta.hpp"

using zstr::ComplexValue;
using zstr::EtaArgument;
using zstr::PrecisionSpec;
using zstr::Strategy;

namespace {

PrecisionSpec accelerated(double p) { return {p, Strategy::Accelerated, false}; }
PrecisionSpec truncated(double p) { return {p, Strategy::Truncated, false}; }

struct Reference {
    double sigma, t, re, im;
};

// Independent 30-digit evaluation of the analytically continued eta.
constexpr Reference kReference[] = {
    {0, 0, 0.5, 0.0},
    {0, 1, 0.53259318176309617, 0.22938485772852589},
    {0, 9.064720283654388, -1.5987345268086903, -0.27833866963908097},
    {0, 30, -1.0683345863538877, -3.3977755979511449},
    {0.25, 5, 1.8744232714600911, 0.31645938437576809},
    {0.5, 14.134725, -1.6212257387225212e-8, -2.6635049326646233e-7},
    {0.5, 100, -1.0339379224100385, 0.76319662774264266},
    {0.8, 357.612, 0.66705745512272058, 0.21114915040012329},
    {1, 0, 0.69314718055994531, 0.0},
    {1, 50, 0.90794761622041862, 0.51780255113417824},
    {2, -7, 1.0368743432771111, 0.3445924307476847},
    {3.5, 120, 1.0230193768578678, 0.095978555155037354},
    {9, 22, 1.0017775750595636, 0.00090405521073608768},
    {10, 22, 1.0008846269099808, 0.00044567253829039944},
    {20, 3, 1.0000004641511555, 8.3298729242567206e-7},
    {0.1, 400, -2.974824689316673, -8.5592780402652823},
};

}  // namespace

TEST(TruncationLength, KnownCounts) {
    EXPECT_EQ(zstr::truncation_length(4.0, 3.0).n_terms, 12);
    EXPECT_EQ(zstr::truncation_length(1.5, 3.0).n_terms, 200);
    EXPECT_EQ(zstr::truncation_length(0.5, 3.0).n_terms, 2'000'000);
    EXPECT_EQ(zstr::truncation_length(1000.0, 3.0).n_terms, 3);
    EXPECT_EQ(zstr::truncation_length(12.0, 3.0).n_terms, 4);
    EXPECT_EQ(zstr::truncation_length(3.0, 3.0).n_terms, 20);
}

TEST(TruncationLength, RejectsNonPositiveSigma) {
    EXPECT_THROW(zstr::truncation_length(0.0, 3.0), zstr::DomainError);
    EXPECT_THROW(zstr::truncation_length(-1.0, 3.0), zstr::DomainError);
    EXPECT_THROW(zstr::truncation_length(1.0, 0.0), zstr::DomainError);
    EXPECT_THROW(zstr::truncation_length(0.01, 3.0), zstr::DomainError);  // 2e300 terms
}

TEST(TruncationLength, MonotoneInSigmaAndP) {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> sig(0.3, 40.0), prec(0.5, 8.0);
    for (int i = 0; i < 500; ++i) {
        const double s1 = sig(rng), s2 = sig(rng), p1 = prec(rng), p2 = prec(rng);
        const double p = std::min(p1, 3.0);
        const auto lo = std::min(s1, s2), hi = std::max(s1, s2);
        if (lo < 0.5) continue;
        EXPECT_GE(zstr::truncation_length(lo, p).n_terms, zstr::truncation_length(hi, p).n_terms);
        const double s = std::max(s1, 1.0);
        EXPECT_LE(zstr::truncation_length(s, std::min(p1, p2)).n_terms,
                  zstr::truncation_length(s, std::max(p1, p2)).n_terms);
    }
}

TEST(EtaArgument, Validates) {
    EXPECT_THROW(EtaArgument(-0.1, 3.0), zstr::DomainError);
    EXPECT_THROW(EtaArgument(std::nan(""), 3.0), zstr::DomainError);
    EXPECT_THROW(EtaArgument(1.0, INFINITY), zstr::DomainError);
    EXPECT_NO_THROW(EtaArgument(0.0, -5.0));
}

TEST(EtaTerm, FirstTermIsExactlyOne) {
    const auto v = zstr::eta_term(1, EtaArgument(3.7, 123.4));
    EXPECT_EQ(v.real(), 1.0);
    EXPECT_EQ(v.imag(), 0.0);
}

TEST(EtaTerm, ModuliAndAngleAtNinePlus22i) {
    const EtaArgument s(9.0, 22.0);
    EXPECT_DOUBLE_EQ(std::abs(zstr::eta_term(2, s)), 0.001953125);
    EXPECT_NEAR(std::abs(zstr::eta_term(3, s)), 0.0000508053, 1e-10);
    const double deg = std::arg(zstr::eta_term(2, s)) * 180.0 / std::numbers::pi;
    EXPECT_NEAR(deg, 26.29, 0.01);
}

TEST(EtaTerm, CompensatedPhaseMatchesQuadOracle) {
    // Large heights where t * ln n carries more bits than a double holds.
    const double heights[] = {1.0e8, 3.3e9, 2.67653395649e11, 9.87654321e12};
    const std::int64_t ns[] = {2, 3, 17, 1000, 123457, 2'000'000};
    for (double t : heights) {
        for (auto n : ns) {
            const auto v = zstr::eta_term(n, EtaArgument(0.0, t), true);
            const double expected = zstr::oracle::reduced_phase_quad(t, n);
            // v = (-1)^(n-1) exp(-i phase)
            ComplexValue unsigned_v = (n % 2 == 0) ? -v : v;
            const double got = -std::arg(unsigned_v);
            double diff = std::remainder(got - expected, 2 * std::numbers::pi);
            EXPECT_LT(std::abs(diff), 1e-14) << "t=" << t << " n=" << n;
        }
    }
}

TEST(EtaTerm, CompensatedAgreesWithPlainAtModestHeight) {
    const EtaArgument s(0.7, 31.25);
    for (std::int64_t n = 1; n < 200; ++n) {
        EXPECT_LT(std::abs(zstr::eta_term(n, s, true) - zstr::eta_term(n, s, false)), 1e-14);
    }
}

TEST(Eta, MatchesReferenceValuesAccelerated) {
    for (const auto& r : kReference) {
        const auto v = zstr::eta(EtaArgument(r.sigma, r.t), accelerated(12));
        EXPECT_NEAR(v.real(), r.re, 5e-12) << r.sigma << "+" << r.t << "i";
        EXPECT_NEAR(v.imag(), r.im, 5e-12) << r.sigma << "+" << r.t << "i";
    }
}

TEST(Eta, DefaultPrecisionMeetsItsBound) {
    for (const auto& r : kReference) {
        const auto v = zstr::eta(EtaArgument(r.sigma, r.t));
        EXPECT_LT(std::abs(v - ComplexValue(r.re, r.im)), 1e-6 * std::pow(2.0, -r.sigma));
    }
}

TEST(Eta, EndpointsOfRealAxis) {
    EXPECT_NEAR(zstr::eta(EtaArgument(1, 0), accelerated(12)).real(), std::numbers::ln2, 1e-13);
    EXPECT_NEAR(zstr::eta(EtaArgument(0, 0), accelerated(12)).real(), 0.5, 1e-11);
}

TEST(Eta, TruncatedMatchesAtLargeSigma) {
    const auto v9 = zstr::eta(EtaArgument(9, 22), truncated(8));
    EXPECT_NEAR(v9.real(), 1.0017775750595636, 1e-10);
    EXPECT_NEAR(v9.imag(), 0.00090405521073608768, 1e-10);
}

TEST(Eta, TruncatedRejectsZeroSigma) {
    EXPECT_THROW(zstr::eta(EtaArgument(0, 3), truncated(3)), zstr::DomainError);
    EXPECT_NO_THROW(zstr::eta(EtaArgument(0, 3), accelerated(3)));
}

TEST(Eta, RejectsBadPrecision) {
    EXPECT_THROW(zstr::eta(EtaArgument(1, 3), PrecisionSpec{0.0, Strategy::Accelerated, false}),
                 zstr::DomainError);
}

TEST(Eta, ConjugateSymmetry) {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> sig(0.0, 12.0), tt(0.0, 300.0);
    for (int i = 0; i < 200; ++i) {
        const EtaArgument s(sig(rng), tt(rng));
        const auto a = zstr::eta(s);
        const auto b = zstr::eta(s.conjugate());
        EXPECT_LT(std::abs(a - std::conj(b)), 1e-6);
    }
}

TEST(Eta, LargeSigmaDominance) {
    std::mt19937_64 rng(12);
    std::uniform_real_distribution<double> sig(20.0, 60.0), tt(-500.0, 500.0);
    for (int i = 0; i < 200; ++i) {
        const double sigma = sig(rng);
        const auto v = zstr::eta(EtaArgument(sigma, tt(rng)));
        EXPECT_LE(std::abs(v - 1.0), 2.0 * std::pow(2.0, -sigma));
    }
}

TEST(Eta, RealAxisStrictlyIncreasingOnUnitInterval) {
    double prev = -1.0;
    for (int k = 0; k <= 200; ++k) {
        const double sigma = k / 200.0;
        const auto v = zstr::eta(EtaArgument(sigma, 0.0), accelerated(12));
        EXPECT_EQ(v.imag(), 0.0);
        EXPECT_GT(v.real(), prev);
        prev = v.real();
    }
    EXPECT_NEAR(prev, std::numbers::ln2, 1e-12);
}

TEST(Eta, StrategiesAgreeWhereTruncationPassesLastStationaryPoint) {
    // The truncation rule only bounds the tail once n exceeds t / pi; there
    // 10^-3 2^-sigma holds.
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> sig(0.9, 20.0), tt(0.0, 400.0);
    int checked = 0;
    while (checked < 150) {
        const double sigma = sig(rng), t = tt(rng);
        const auto n = zstr::truncation_length(sigma, 3.0).n_terms;
        if (static_cast<double>(n) < 1.5 * t / std::numbers::pi) continue;
        const EtaArgument s(sigma, t);
        const auto a = zstr::eta(s, truncated(3));
        const auto b = zstr::eta(s, accelerated(10));
        EXPECT_LE(std::abs(a - b), 1e-3 * std::pow(2.0, -sigma)) << sigma << " " << t;
        ++checked;
    }
}

TEST(Eta, AcceleratedLengthGrowsWithHeight) {
    EXPECT_LT(zstr::accelerated_length(EtaArgument(0.5, 10), 6),
              zstr::accelerated_length(EtaArgument(0.5, 100), 6));
    EXPECT_LT(zstr::accelerated_length(EtaArgument(0.5, 100), 6),
              zstr::accelerated_length(EtaArgument(0.5, 100), 12));
}

TEST(ZetaFromEta, MatchesBruteForceSeries) {
    const double pi2_6 = std::numbers::pi * std::numbers::pi / 6.0;
    EXPECT_NEAR(zstr::zeta_from_eta(EtaArgument(2, 0), accelerated(12)).real(), pi2_6, 1e-12);
    EXPECT_NEAR(zstr::oracle::brute_force_zeta({2.0, 0.0}).real(), pi2_6, 1e-12);

    const auto z3 = zstr::oracle::brute_force_zeta({3.0, 0.0});
    EXPECT_NEAR(zstr::zeta_from_eta(EtaArgument(3, 0), accelerated(12)).real(), z3.real(), 1e-10);
    EXPECT_NEAR(z3.real(), 1.2020569, 1e-7);

    for (auto [sigma, t] : {std::pair{1.6, 3.0}, {2.5, 40.0}, {4.0, -17.0}, {1.75, 120.0}}) {
        const auto fast = zstr::zeta_from_eta(EtaArgument(sigma, t));
        const auto slow = zstr::oracle::brute_force_zeta({sigma, t});
        EXPECT_LT(std::abs(fast - slow), 1e-6) << sigma << " " << t;
    }
}

TEST(ZetaFromEta, PoleAndDenominatorZeros) {
    EXPECT_THROW(zstr::zeta_from_eta(EtaArgument(1, 0)), zstr::PoleError);
    EXPECT_THROW(zstr::zeta_from_eta(EtaArgument(1, zstr::trivial_zero_t(1))), zstr::DenominatorZeroError);
    EXPECT_THROW(zstr::zeta_from_eta(EtaArgument(1, -zstr::trivial_zero_t(3))), zstr::DenominatorZeroError);
    EXPECT_NO_THROW(zstr::zeta_from_eta(EtaArgument(1, zstr::trivial_zero_t(1) + 1e-3)));
}

TEST(ReflectionResidual, SmallInsideStrip) {
    EXPECT_LT(zstr::reflection_residual(EtaArgument(0.5, 14.134725)), 1e-6);
    EXPECT_LT(zstr::reflection_residual(EtaArgument(0.3, 10.0)), 1e-6);
    EXPECT_LT(zstr::reflection_residual(EtaArgument(0.5, 0.5)), 1e-6);
    EXPECT_LT(zstr::reflection_residual(EtaArgument(0.9, 60.0)), 1e-6);
}

TEST(ReflectionResidual, Errors) {
    EXPECT_THROW(zstr::reflection_residual(EtaArgument(0.0, 3.0)), zstr::DomainError);
    EXPECT_THROW(zstr::reflection_residual(EtaArgument(1.0, 3.0)), zstr::DomainError);
    EXPECT_THROW(zstr::reflection_residual(EtaArgument(1.5, 3.0)), zstr::DomainError);
}

TEST(TrivialZero, Locations) {
    EXPECT_NEAR(zstr::trivial_zero_t(1), 9.0647, 1e-4);
    EXPECT_NEAR(zstr::trivial_zero_t(2), 18.1294, 1e-4);
    // 7 x 9.0647 would give 63.4529; the exact value is 63.45304...
    EXPECT_NEAR(zstr::trivial_zero_t(7), 63.45304198558, 1e-10);
    EXPECT_DOUBLE_EQ(zstr::trivial_zero_t(1), 2 * std::numbers::pi / std::numbers::ln2);
    EXPECT_THROW(zstr::trivial_zero_t(0), zstr::DomainError);
    EXPECT_THROW(zstr::trivial_zero_t(-2), zstr::DomainError);
}

TEST(TrivialZero, EtaVanishesThere) {
    for (int k = 1; k <= 7; ++k) {
        EXPECT_LT(std::abs(zstr::eta(EtaArgument(1.0, zstr::trivial_zero_t(k)), accelerated(12))), 1e-12);
    }
}

/**
 * @file test_frames.cpp
 * @brief Left/right frame fields: product identities, shifted ODEs, constancy
 *        laws, and the circle geometry of their traces.
 */

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "s3surf/curve.hpp"
#include "s3surf/frames.hpp"

using namespace s3surf;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

SampledCurve helix(double kappa, double tau, double smax = kTwoPi) {
    CurveSpec spec;
    spec.family = ProperHelix{kappa, tau};
    spec.s_max = smax;
    return integrate_frenet_s3(spec);
}

SampledCurve general_helix(double b, int sign, double kappa = 1.0, double smax = 2.0 * kTwoPi) {
    CurveSpec spec;
    spec.family = GeneralHelix{b, sign, Profile::constant(kappa)};
    spec.s_max = smax;
    return integrate_frenet_s3(spec);
}

} // namespace

TEST_CASE("frame fields are imaginary, orthonormal, and satisfy the product identities") {
    for (const auto& c : {helix(1.0, 2.0), helix(0.7, -0.4), general_helix(1.5, +1)}) {
        for (Side side : {Side::Left, Side::Right}) {
            const auto f = (side == Side::Left) ? left_frames(c) : right_frames(c);
            CHECK(max_real_part(f) <= 1e-10);
            CHECK(frame_orthonormality_defect(f) <= 1e-9);
            const auto r = frame_identity_residuals(c, side);
            CHECK(r.max() <= 1e-10);
        }
    }
}

TEST_CASE("standard seed pins the frames at s = 0") {
    const auto c = helix(1.0, 0.5);
    const auto L = left_frames(c);
    const auto R = right_frames(c);
    CHECK(norm(L.T[0] - kE2) <= 1e-12);
    CHECK(norm(L.N[0] - kE3) <= 1e-12);
    CHECK(norm(L.B[0] - kE4) <= 1e-12);
    CHECK(norm(R.T[0] + kE2) <= 1e-12);
    CHECK(norm(R.N[0] + kE3) <= 1e-12);
    CHECK(norm(R.B[0] + kE4) <= 1e-12);
}

TEST_CASE("left triple is right-handed, right triple is left-handed") {
    const auto c = helix(1.2, -0.8);
    const auto L = left_frames(c);
    const auto R = right_frames(c);
    double worstL = 0.0, worstR = 0.0;
    for (std::size_t i = 0; i < c.size(); i += 100) {
        worstL = std::max(worstL,
                          norm(cross(imag3(L.T[i]), imag3(L.N[i])) - imag3(L.B[i])));
        worstR = std::max(worstR,
                          norm(cross(imag3(R.T[i]), imag3(R.N[i])) + imag3(R.B[i])));
    }
    CHECK(worstL <= 1e-9);
    CHECK(worstR <= 1e-9);
}

TEST_CASE("shifted frame ODEs hold to truncation order") {
    for (const auto& c : {helix(1.0, 2.0), helix(2.0, -1.0)}) {
        for (Side side : {Side::Left, Side::Right}) {
            const auto f = (side == Side::Left) ? left_frames(c) : right_frames(c);
            const auto r = frame_ode_residuals(c, f);
            CHECK(r.max() <= 1e-5);
        }
    }
    // Varying curvature as well.
    std::vector<std::pair<double, double>> rows;
    for (int i = 0; i <= 4000; ++i) {
        const double s = 2.0 * kTwoPi * i / 4000.0;
        rows.emplace_back(s, 1.0 + 0.3 * std::sin(s));
    }
    CurveSpec spec;
    spec.family = GeneralHelix{1.0, +1, Profile::table(rows)};
    spec.s_max = 2.0 * kTwoPi;
    const auto c = integrate_frenet_s3(spec);
    const auto f = left_frames(c);
    CHECK(frame_ode_residuals(c, f).max() <= 1e-4);
}

TEST_CASE("unit torsion freezes one binormal field") {
    {
        const auto c = helix(1.0, 1.0);
        const auto L = left_frames(c);
        double worst = 0.0;
        for (std::size_t i = 0; i < c.size(); ++i)
            worst = std::max(worst, norm(L.B[i] - L.B[0]));
        CHECK(worst <= 1e-8);
        CHECK(norm(L.B[0] - kE4) <= 1e-12);
    }
    {
        const auto c = helix(1.0, -1.0);
        const auto R = right_frames(c);
        double worst = 0.0;
        for (std::size_t i = 0; i < c.size(); ++i)
            worst = std::max(worst, norm(R.B[i] - R.B[0]));
        CHECK(worst <= 1e-8);
        CHECK(norm(R.B[0] + kE4) <= 1e-12);
    }
}

TEST_CASE("geodesics freeze the tangent fields and withhold N, B") {
    CurveSpec spec;
    spec.family = GreatCircle{};
    spec.s_max = kTwoPi;
    const auto c = integrate_frenet_s3(spec);
    const auto L = left_frames(c);
    const auto R = right_frames(c);
    double worst = 0.0;
    for (std::size_t i = 0; i < c.size(); ++i) {
        worst = std::max(worst, norm(L.T[i] - L.T[0]));
        worst = std::max(worst, norm(R.T[i] - R.T[0]));
    }
    CHECK(worst <= 1e-9);
    CHECK_FALSE(L.has_NB);
    CHECK_THROWS_AS(require_full(L), MissingFrame);
    CHECK_THROWS_AS(frame_identity_residuals(c, Side::Left), MissingFrame);
    CHECK_THROWS_AS(trace_geometry(L, c), MissingFrame);
}

TEST_CASE("general helix traces are circles with curvature b and a shared axis") {
    for (double b : {0.5, 1.0, 2.0}) {
        const auto c = general_helix(b, +1);
        const auto L = left_frames(c);
        const auto tg = trace_geometry(L, c);
        REQUIRE_FALSE(tg.degenerate);

        double khat_err = 0.0;
        for (double k : tg.khat) khat_err = std::max(khat_err, std::abs(k - b));
        CHECK(khat_err <= 1e-5);

        const double cosT_expect = b / std::sqrt(1.0 + b * b);
        const double cosB_expect = 1.0 / std::sqrt(1.0 + b * b);
        double cT_err = 0.0, cB_err = 0.0;
        for (double v : tg.cos_T) cT_err = std::max(cT_err, std::abs(v - cosT_expect));
        for (double v : tg.cos_B) cB_err = std::max(cB_err, std::abs(v - cosB_expect));
        CHECK(cT_err <= 1e-4);
        CHECK(cB_err <= 1e-4);

        // T-trace and B-trace axes coincide.
        CHECK(norm(tg.pole - tg.pole_B) <= 1e-4);
    }
}

TEST_CASE("right-side traces mirror the left-side law with the opposite shift") {
    const double b = 1.5;
    const auto c = general_helix(b, -1);  // tau = b kappa - 1
    const auto R = right_frames(c);
    const auto tg = trace_geometry(R, c);
    REQUIRE_FALSE(tg.degenerate);
    double khat_err = 0.0;
    for (double k : tg.khat) khat_err = std::max(khat_err, std::abs(k - b));
    CHECK(khat_err <= 1e-5);
    CHECK(norm(tg.pole - tg.pole_B) <= 1e-4);
}

TEST_CASE("vanishing shifted torsion makes the trace a great circle") {
    const auto c = helix(1.0, 1.0);
    const auto L = left_frames(c);
    CHECK_THROWS_AS(trace_geometry(L, c, /*strict=*/true), DegenerateTrace);
    const auto tg = trace_geometry(L, c, /*strict=*/false);
    CHECK(tg.degenerate);
    double khat_max = 0.0;
    for (double k : tg.khat) khat_max = std::max(khat_max, std::abs(k));
    CHECK(khat_max <= 1e-6);
    // Axis sign is taken from the frozen binormal: B == e4 throughout.
    CHECK(norm(tg.pole - Vec3{0.0, 0.0, 1.0}) <= 1e-6);
    for (double v : tg.cos_T) CHECK(std::abs(v) <= 1e-8);
}

TEST_CASE("trace curvature follows (tau - 1) / kappa pointwise") {
    const auto c = helix(2.0, 0.5, kTwoPi);
    const auto L = left_frames(c);
    const auto tg = trace_geometry(L, c);
    const double expect = (0.5 - 1.0) / 2.0;
    double err = 0.0;
    for (double k : tg.khat) err = std::max(err, std::abs(k - expect));
    CHECK(err <= 1e-5);

    const auto R = right_frames(c);
    const auto tgR = trace_geometry(R, c);
    const double expectR = (0.5 + 1.0) / 2.0;
    double errR = 0.0;
    for (double k : tgR.khat) errR = std::max(errR, std::abs(k - expectR));
    CHECK(errR <= 1e-5);
}

TEST_CASE("degenerate sample counts are rejected") {
    CurveSpec spec;
    spec.family = ProperHelix{1.0, 0.5};
    spec.s_max = 0.003;
    const auto c = integrate_frenet_s3(spec);
    const auto L = left_frames(c);
    CHECK_THROWS_AS(frame_ode_residuals(c, L), TooFewSamples);
    CHECK_THROWS_AS(trace_geometry(L, c), TooFewSamples);
}

/**
 * @file test_correspond.cpp
 * @brief Sphere/flat-space translation-surface correspondence: torsion
 *        shifts, round trips, node-wise isometry, the Gauss-curvature match,
 *        and the mean-curvature shift law.
 */

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "s3surf/correspond.hpp"
#include "s3surf/curve.hpp"
#include "s3surf/curve_r3.hpp"

using namespace s3surf;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

SampledCurve make_curve(CurveFamily fam, double smax, double h = 1e-3,
                        SeedFrame seed = SeedFrame{}) {
    CurveSpec spec;
    spec.family = fam;
    spec.s_max = smax;
    spec.h = h;
    spec.seed = seed;
    return integrate_frenet_s3(spec);
}

SeedFrame rotated_seed(double theta) {
    SeedFrame seed;
    seed.t = Quat{0.0, std::cos(theta), std::sin(theta), 0.0};
    seed.n = Quat{0.0, -std::sin(theta), std::cos(theta), 0.0};
    return seed;
}

} // namespace

TEST_CASE("lift shifts the torsions by -1 (alpha slot) and +1 (beta slot)") {
    const auto a = make_curve(ProperHelix{1.0, 2.0}, 10.0);
    const auto b = make_curve(ProperHelix{1.0, -1.0}, 10.0);
    const auto [la, lb] = lift_to_r3(a, b);

    CHECK(la.has_frame);
    CHECK(lb.has_frame);
    for (std::size_t i = 0; i < la.size(); i += 500) {
        CHECK(la.tau[i] == 1.0);  // 2 - 1
        CHECK(lb.tau[i] == 0.0);  // -1 + 1
    }
    const auto ia = fd_curve_invariants(la);
    const auto ib = fd_curve_invariants(lb);
    double ka_err = 0.0, ta_err = 0.0, kb_err = 0.0, tb_err = 0.0;
    for (std::size_t i = 0; i < ia.s.size(); ++i) {
        ka_err = std::max(ka_err, std::abs(ia.kappa_fd[i] - 1.0));
        ta_err = std::max(ta_err, std::abs(ia.tau_fd[i] - 1.0));
        kb_err = std::max(kb_err, std::abs(ib.kappa_fd[i] - 1.0));
        tb_err = std::max(tb_err, std::abs(ib.tau_fd[i]));
    }
    CHECK(ka_err <= 1e-5);
    CHECK(ta_err <= 1e-5);
    CHECK(kb_err <= 1e-5);
    CHECK(tb_err <= 1e-5);

    // The tangent field is the frame field read as a 3-vector.
    const auto La = left_frames(a);
    const auto Rb = right_frames(b);
    double t_err = 0.0;
    for (std::size_t i = 0; i < la.size(); i += 100) {
        t_err = std::max(t_err, norm(la.t[i] - imag3(La.T[i])));
        t_err = std::max(t_err, norm(lb.t[i] + imag3(Rb.T[i])));
    }
    CHECK(t_err <= 1e-12);

    // Position really integrates that tangent.
    double fd_err = 0.0;
    const double h = 1e-3;
    for (std::size_t i = 1; i + 1 < la.size(); i += 97) {
        const Vec3 d = (la.pos[i + 1] - la.pos[i - 1]) / (2.0 * h);
        fd_err = std::max(fd_err, norm(d - la.t[i]));
    }
    CHECK(fd_err <= 1e-6);
}

TEST_CASE("unit-torsion generator lifts to a closed planar unit circle") {
    const auto a = make_curve(ProperHelix{1.0, 1.0}, kTwoPi);
    const auto b = make_curve(ProperHelix{1.0, -1.0}, kTwoPi);
    const auto [la, lb] = lift_to_r3(a, b);

    CHECK(norm(la.pos.back() - la.pos.front()) <= 1e-9);  // closes after 2*pi
    double plane_err = 0.0;
    const Vec3 bin = la.b.front();
    for (std::size_t i = 0; i < la.size(); i += 50)
        plane_err = std::max(plane_err, std::abs(dot(la.pos[i] - la.pos.front(), bin)));
    CHECK(plane_err <= 1e-9);

    CHECK(norm(lb.pos.back() - lb.pos.front()) <= 1e-9);
}

TEST_CASE("geodesics lift to straight lines") {
    const auto a = make_curve(GreatCircle{}, 2.0);
    const auto b = clifford_factor_curve(0.6, 0.8, 0.0, 2.0, 1e-3);
    const auto [la, lb] = lift_to_r3(a, b);

    CHECK_FALSE(la.has_frame);
    CHECK(std::holds_alternative<LineR3>(la.spec.family));
    double line_err = 0.0;
    for (std::size_t i = 0; i < la.size(); i += 100)
        line_err = std::max(line_err, norm(la.pos[i] - la.s[i] * la.t.front()));
    CHECK(line_err <= 1e-12);

    // The factor-circle's line direction is (R1^2 - R2^2, 0, 2 R1 R2).
    const double A = 0.36 - 0.64, B = 2.0 * 0.6 * 0.8;
    CHECK(norm(lb.t.front() - Vec3{A, 0.0, B}) <= 1e-12);
}

TEST_CASE("reverse lift undoes the shifts and round trips") {
    const auto a = make_curve(ProperHelix{1.0, 2.0}, 4.0);
    const auto b = make_curve(ProperHelix{0.8, -0.3}, 4.0, 1e-3, rotated_seed(2.0));
    const auto [la, lb] = lift_to_r3(a, b);
    const auto [ra, rb] = reverse_lift(la, lb);

    const auto* pa = std::get_if<ProperHelix>(&ra.family);
    REQUIRE(pa != nullptr);
    CHECK(std::abs(pa->kappa - 1.0) <= 1e-12);
    CHECK(std::abs(pa->tau - 2.0) <= 1e-12);
    const auto* pb = std::get_if<ProperHelix>(&rb.family);
    REQUIRE(pb != nullptr);
    CHECK(std::abs(pb->kappa - 0.8) <= 1e-12);
    CHECK(std::abs(pb->tau + 0.3) <= 1e-12);

    // Lift of the recovered specs reproduces the flat-space invariants.
    const auto a2 = integrate_frenet_s3(ra);
    const auto b2 = integrate_frenet_s3(rb);
    const auto [la2, lb2] = lift_to_r3(a2, b2);
    const auto inv = fd_curve_invariants(la2);
    double k_err = 0.0, t_err = 0.0;
    for (std::size_t i = 0; i < inv.s.size(); ++i) {
        k_err = std::max(k_err, std::abs(inv.kappa_fd[i] - 1.0));
        t_err = std::max(t_err, std::abs(inv.tau_fd[i] - 1.0));
    }
    CHECK(k_err <= 1e-5);
    CHECK(t_err <= 1e-5);
}

TEST_CASE("reverse lift of independent flat-space curves") {
    // Circular helix (1, 1) in the alpha slot -> sphere spec (1, 2).
    SampledCurveR3 helix;
    helix.spec.family = HelixR3{1.0, 1.0};
    // Planar circle (2, 0) in the beta slot -> sphere spec (2, -1).
    SampledCurveR3 circle;
    circle.spec.family = HelixR3{2.0, 0.0};
    const auto [ra, rb] = reverse_lift(helix, circle);
    const auto* pa = std::get_if<ProperHelix>(&ra.family);
    REQUIRE(pa != nullptr);
    CHECK(pa->kappa == 1.0);
    CHECK(pa->tau == 2.0);
    const auto* pb = std::get_if<ProperHelix>(&rb.family);
    REQUIRE(pb != nullptr);
    CHECK(pb->kappa == 2.0);
    CHECK(pb->tau == -1.0);

    // A straight line maps to a great circle.
    SampledCurveR3 line;
    line.spec.family = LineR3{};
    const auto [rl, rl2] = reverse_lift(line, line);
    CHECK(std::holds_alternative<GreatCircle>(rl.family));
    CHECK(std::holds_alternative<GreatCircle>(rl2.family));

    // Vanishing curvature without a line declaration is rejected.
    SampledCurveR3 badc;
    badc.spec.family = HelixR3{0.0, 0.5};
    CHECK_THROWS_AS(reverse_lift(badc, line), VanishingCurvature);
}

TEST_CASE("corresponded circle pairs: plane versus constant-H torus") {
    const double C = 0.5;
    const double R1 = std::sqrt((1.0 - C) / 2.0), R2 = std::sqrt((1.0 + C) / 2.0);
    const auto a = make_curve(GreatCircle{}, 2.0);
    const auto b = clifford_factor_curve(R1, R2, 0.0, 2.0, 1e-3);
    const auto pair = make_correspondence(a, b);
    const auto res = verify_correspondence(pair);

    CHECK(res.isometry_max() <= 1e-12);
    CHECK(res.shift_law <= 1e-10);
    CHECK(res.gauss <= 1e-10);

    // Flat-space side is a plane; sphere side is the constant-H torus.
    for (std::size_t q = 0; q < pair.r3_report.H.size(); q += 101) {
        CHECK(std::abs(pair.r3_report.H[q]) <= 1e-12);
        CHECK(std::abs(pair.s3_report.H[q] + C / std::sqrt(1.0 - C * C)) <= 1e-12);
    }
    const auto cor = cmc_implies_flat(res);
    CHECK(cor.applicable);
    CHECK(cor.holds);
}

TEST_CASE("minimal product torus corresponds to a minimal plane") {
    const double r = 1.0 / std::sqrt(2.0);
    const auto a = make_curve(GreatCircle{}, 2.0);
    const auto b = clifford_factor_curve(r, r, 0.0, 2.0, 1e-3);
    const auto res = verify_correspondence(make_correspondence(a, b));
    CHECK(res.shift_law <= 1e-12);
    CHECK(res.gauss <= 1e-12);
    CHECK(res.cmc_s3);
    CHECK(res.cmc_r3);
    CHECK(res.flat_s3);
    CHECK(res.flat_r3);
}

TEST_CASE("shift law and curvature match hold node-wise on curved pairs") {
    struct Case {
        CurveFamily a, b;
    };
    const std::vector<Case> cases = {
        {ProperHelix{1.0, 0.5}, ProperHelix{0.8, -0.3}},
        {ProperHelix{1.2, 2.0}, ProperHelix{0.7, 0.4}},
        {GeneralHelix{1.5, +1, Profile::constant(1.0)}, ProperHelix{1.0, -1.0}},
        {ProperHelix{1.0, 1.0}, ProperHelix{0.9, 1.3}},
    };
    for (const auto& c : cases) {
        const auto a = make_curve(c.a, 0.5);
        const auto b = make_curve(c.b, 0.5, 1e-3, rotated_seed(2.0));
        const auto pair = make_correspondence(a, b);
        const auto res = verify_correspondence(pair);
        CHECK(res.isometry_max() <= 1e-12);
        CHECK(res.shift_law <= 1e-10);
        CHECK(res.gauss <= 1e-10);
        CHECK_FALSE(res.notes.empty());
    }
}

TEST_CASE("non-matching gauges are rejected") {
    const auto a = make_curve(ProperHelix{1.0, 0.5}, 0.3);
    const auto b = make_curve(ProperHelix{0.8, -0.3}, 0.3, 1e-3, rotated_seed(2.0));
    auto pair = make_correspondence(a, b);
    // Rotate the beta partner by 90 degrees about the z-axis: an isometric
    // embedding, but no longer the constructed frame gauge.
    for (auto& v : pair.beta_r3.t) v = Vec3{-v.y, v.x, v.z};
    for (auto& v : pair.beta_r3.n) v = Vec3{-v.y, v.x, v.z};
    for (auto& v : pair.beta_r3.b) v = Vec3{-v.y, v.x, v.z};
    for (auto& v : pair.beta_r3.pos) v = Vec3{-v.y, v.x, v.z};
    pair.r3_report = r3_translation_surface(pair.alpha_r3, pair.beta_r3);
    CHECK_THROWS_AS(verify_correspondence(pair), GaugeMismatch);
}

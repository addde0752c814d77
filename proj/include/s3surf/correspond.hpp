#pragma once
/**
 * @file correspond.hpp
 * @brief Correspondence between product surfaces alpha(s) * beta(t) in the
 *        unit quaternions and additive surfaces alpha~(s) + beta~(t) in flat
 *        3-space.
 *
 * The flat-space partners integrate position' = tangent where the tangent,
 * normal, and binormal are the quaternionic frame fields read as 3-vectors
 * (drop the w-component, keep (x, y, z) order):
 *   alpha~ uses the left frames of alpha            -> torsion shift -1,
 *   beta~  uses the negated right frames of beta    -> torsion shift +1.
 * With this gauge the first fundamental forms coincide node-wise by
 * construction, Gauss curvatures coincide, and the mean curvatures differ by
 * the pointwise term F / sqrt(1 - F^2) built from the tabulated pairing F.
 */

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "s3surf/curve.hpp"
#include "s3surf/curve_r3.hpp"
#include "s3surf/errors.hpp"
#include "s3surf/frames.hpp"
#include "s3surf/linalg.hpp"
#include "s3surf/oracle.hpp"
#include "s3surf/quaternion.hpp"
#include "s3surf/surface.hpp"

namespace s3surf {

namespace detail {

/// Any unit vector orthogonal to u.
inline Vec3 any_orthogonal(const Vec3& u) {
    const Vec3 trial = (std::abs(u.x) < 0.9) ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
    return normalized(trial - dot(trial, u) * u);
}

/// Frame-field tangent of the flat-space partner at a node.
inline Vec3 lift_tangent(const Quat& alpha, const Quat& t, Side side) {
    if (side == Side::Left) return imag3(qmul(qconj(alpha), t));
    return -imag3(qmul(alpha, qconj(t)));
}

/**
 * @brief Re-integration of a sphere curve with the flat-space position
 *        carried in the state, so the partner curve has the same order of
 *        accuracy as the frames themselves.
 */
inline SampledCurveR3 integrate_lift(const CurveSpec& spec, Side side) {
    const SampledCurve sph = integrate_frenet_s3(spec);
    const double shift = (side == Side::Left) ? -1.0 : +1.0;

    SampledCurveR3 out;
    out.s = sph.s;
    out.has_frame = sph.has_frame;
    const std::size_t n = sph.size();
    out.pos.resize(n);
    out.t.resize(n);
    out.kappa.resize(n);
    if (sph.has_frame) {
        out.n.resize(n);
        out.b.resize(n);
        out.tau.resize(n);
    }

    for (std::size_t i = 0; i < n; ++i) {
        out.t[i] = lift_tangent(sph.alpha[i], sph.t[i], side);
        out.kappa[i] = sph.kappa[i];
        if (sph.has_frame) {
            if (side == Side::Left) {
                out.n[i] = imag3(qmul(qconj(sph.alpha[i]), sph.n[i]));
                out.b[i] = imag3(qmul(qconj(sph.alpha[i]), sph.b[i]));
            } else {
                out.n[i] = -imag3(qmul(sph.alpha[i], qconj(sph.n[i])));
                out.b[i] = -imag3(qmul(sph.alpha[i], qconj(sph.b[i])));
            }
            out.tau[i] = sph.tau[i] + shift;
        }
    }

    if (!sph.has_frame) {
        // Geodesic: the tangent field is constant, the partner is a line.
        const Vec3 dir = out.t.front();
        for (std::size_t i = 0; i < n; ++i) out.pos[i] = (sph.s[i] - sph.s.front()) * dir;
        out.spec.family = LineR3{};
    } else {
        // Position by quadrature of the frame tangent: re-run the Frenet
        // integration with the position row appended so every RK4 stage uses
        // the exact stage frames.
        const double h = sph.step();
        struct State {
            std::array<Quat, 4> rows;
            Vec3 p;
        };
        State st{{sph.alpha[0], sph.t[0], sph.n[0], sph.b[0]}, Vec3{0, 0, 0}};
        out.pos[0] = st.p;
        auto deriv = [&](const State& x, double s) -> State {
            const double k = kappa_at(spec.family, s);
            const double tau = tau_at(spec.family, s);
            State d;
            d.rows[0] = x.rows[1];
            d.rows[1] = k * x.rows[2] - x.rows[0];
            d.rows[2] = -k * x.rows[1] + tau * x.rows[3];
            d.rows[3] = -tau * x.rows[2];
            d.p = lift_tangent(x.rows[0], x.rows[1], side);
            return d;
        };
        auto axpy = [](const State& x, double c, const State& d) -> State {
            State y;
            for (int r = 0; r < 4; ++r) y.rows[r] = x.rows[r] + c * d.rows[r];
            y.p = x.p + c * d.p;
            return y;
        };
        for (std::size_t i = 0; i + 1 < n; ++i) {
            const double s = sph.s[i];
            const State k1 = deriv(st, s);
            const State k2 = deriv(axpy(st, h / 2.0, k1), s + h / 2.0);
            const State k3 = deriv(axpy(st, h / 2.0, k2), s + h / 2.0);
            const State k4 = deriv(axpy(st, h, k3), s + h);
            State nx;
            for (int r = 0; r < 4; ++r)
                nx.rows[r] = st.rows[r] +
                             (h / 6.0) * (k1.rows[r] + 2.0 * k2.rows[r] + 2.0 * k3.rows[r] +
                                          k4.rows[r]);
            nx.p = st.p + (h / 6.0) * (k1.p + 2.0 * k2.p + 2.0 * k3.p + k4.p);
            mgs(nx.rows, 4);
            st = nx;
            out.pos[i + 1] = st.p;
        }
        // Family record with the shifted torsion for round tripping.
        if (const auto* ph = std::get_if<ProperHelix>(&spec.family)) {
            out.spec.family = HelixR3{ph->kappa, ph->tau + shift};
        } else {
            std::vector<std::array<double, 3>> rows;
            rows.reserve(n);
            for (std::size_t i = 0; i < n; ++i)
                rows.push_back({out.s[i], out.kappa[i], out.tau[i]});
            out.spec.family = TabulatedR3{std::move(rows)};
        }
    }

    out.spec.s_min = spec.s_min;
    out.spec.s_max = spec.s_max;
    out.spec.h = spec.h;
    out.spec.seed.origin = Vec3{0, 0, 0};
    out.spec.seed.t = out.t.front();
    if (out.has_frame) {
        out.spec.seed.n = out.n.front();
        out.spec.seed.b = out.b.front();
    } else {
        out.spec.seed.n = any_orthogonal(out.t.front());
        out.spec.seed.b = cross(out.t.front(), out.spec.seed.n);
    }
    return out;
}

} // namespace detail

/**
 * @brief Flat-space partner curves of a surface pair: left lift of alpha,
 *        negated right lift of beta.  Recomputed invariants satisfy
 *        (kappa~, tau~) = (kappa, tau - 1) for alpha and (kappa, tau + 1)
 *        for beta.
 */
inline std::pair<SampledCurveR3, SampledCurveR3> lift_to_r3(const SampledCurve& alpha,
                                                            const SampledCurve& beta) {
    return {detail::integrate_lift(alpha.spec, Side::Left),
            detail::integrate_lift(beta.spec, Side::Right)};
}

struct TorsionShiftRecord {
    double alpha_shift = -1.0;
    double beta_shift = +1.0;
};

struct CorrespondencePair {
    SurfaceGrid s3;
    GeometryReport s3_report;
    SampledCurveR3 alpha_r3, beta_r3;
    R3SurfaceReport r3_report;
    TorsionShiftRecord shift;
};

inline CorrespondencePair make_correspondence(const SampledCurve& alpha,
                                              const SampledCurve& beta,
                                              double delta = kDefaultRegularityMargin) {
    CorrespondencePair pair;
    pair.s3 = build_surface(alpha, beta, delta);
    pair.s3_report = analyze(pair.s3);
    auto lifted = lift_to_r3(alpha, beta);
    pair.alpha_r3 = std::move(lifted.first);
    pair.beta_r3 = std::move(lifted.second);
    pair.r3_report = r3_translation_surface(pair.alpha_r3, pair.beta_r3, delta);
    return pair;
}

struct CorrespondenceResiduals {
    double isometry_E = 0.0, isometry_F = 0.0, isometry_G = 0.0;
    double shift_law = 0.0;  ///< max |H~ - H - F/sqrt(1-F^2)|
    double gauss = 0.0;      ///< max |K~ - K|
    bool cmc_s3 = false, cmc_r3 = false;
    bool flat_s3 = false, flat_r3 = false;
    std::string notes;

    double isometry_max() const {
        return std::max(isometry_E, std::max(isometry_F, isometry_G));
    }
};

/**
 * @brief Node-wise comparison of the two sides.
 *
 * The flat-space metric cross term is compared against the (negated)
 * tabulated pairing — the two metrics must coincide exactly in this gauge;
 * a deviation beyond gauge_tol means the pair was not assembled by
 * lift_to_r3 and raises GaugeMismatch.
 */
inline CorrespondenceResiduals verify_correspondence(const CorrespondencePair& pair,
                                                     double gauge_tol = 1e-6) {
    const auto& s3 = pair.s3_report;
    const auto& r3 = pair.r3_report;
    CorrespondenceResiduals res;

    double worstF = 0.0;
    for (std::size_t i = 0; i < s3.ns; ++i)
        for (std::size_t j = 0; j < s3.nt; ++j) {
            const std::size_t q = s3.idx(i, j);
            worstF = std::max(worstF, std::abs(r3.F[q] + s3.forms.F[q]));
        }
    if (worstF > gauge_tol)
        throw GaugeMismatch(
            "flat-space metric cross term deviates from the sphere-side metric by " +
            std::to_string(worstF) + "; the pair is not in the constructed frame gauge");

    res.isometry_F = worstF;
    for (std::size_t i = 0; i < s3.ns; ++i) {
        const double Ea = dot(pair.alpha_r3.t[i], pair.alpha_r3.t[i]);
        res.isometry_E = std::max(res.isometry_E, std::abs(Ea - 1.0));
    }
    for (std::size_t j = 0; j < s3.nt; ++j) {
        const double Gb = dot(pair.beta_r3.t[j], pair.beta_r3.t[j]);
        res.isometry_G = std::max(res.isometry_G, std::abs(Gb - 1.0));
    }

    for (std::size_t q = 0; q < s3.H.size(); ++q) {
        const double F = s3.forms.F[q];
        const double shift_term = F / std::sqrt(1.0 - F * F);
        res.shift_law = std::max(res.shift_law, std::abs(r3.H[q] - s3.H[q] - shift_term));
        res.gauss = std::max(res.gauss, std::abs(r3.K[q] - s3.K[q]));
    }

    res.cmc_s3 = summarize(s3.H).stdev <= 1e-6;
    res.cmc_r3 = summarize(r3.H).stdev <= 1e-6;
    res.flat_s3 = summarize(s3.K).abs_max <= 1e-6;
    res.flat_r3 = summarize(r3.K).abs_max <= 1e-6;
    res.notes =
        "cross pairings in the second form use the partner curve's tangent field; "
        "single-curve pairings would disagree with the finite-difference measurement";
    return res;
}

/// If both sides are constant-mean-curvature, both must be flat.
struct CmcFlatCorollary {
    bool applicable = false;  ///< both sides CMC
    bool holds = false;       ///< both sides flat (only meaningful when applicable)
};

inline CmcFlatCorollary cmc_implies_flat(const CorrespondenceResiduals& res) {
    CmcFlatCorollary c;
    c.applicable = res.cmc_s3 && res.cmc_r3;
    c.holds = res.flat_s3 && res.flat_r3;
    return c;
}

/**
 * @brief Sphere-side curve specs recovered from flat-space partners by
 *        inverting the torsion shifts: alpha-slot tau = tau~ + 1, beta-slot
 *        tau = tau~ - 1; straight lines map to great circles.
 */
inline std::pair<CurveSpec, CurveSpec> reverse_lift(const SampledCurveR3& alpha,
                                                    const SampledCurveR3& beta) {
    auto convert = [](const SampledCurveR3& c, double shift) -> CurveSpec {
        CurveSpec spec;
        spec.s_min = c.spec.s_min;
        spec.s_max = c.spec.s_max;
        spec.h = c.spec.h;
        if (std::holds_alternative<LineR3>(c.spec.family)) {
            spec.family = GreatCircle{};
            return spec;
        }
        if (const auto* hx = std::get_if<HelixR3>(&c.spec.family)) {
            if (hx->kappa <= kKappaThreshold)
                throw VanishingCurvature(
                    "flat-space curve has vanishing curvature but is not declared a line");
            spec.family = ProperHelix{hx->kappa, hx->tau + shift};
            return spec;
        }
        const auto& rows = std::get<TabulatedR3>(c.spec.family).rows;
        std::vector<std::array<double, 3>> shifted;
        shifted.reserve(rows.size());
        for (const auto& r : rows) {
            if (r[1] <= kKappaThreshold)
                throw VanishingCurvature(
                    "flat-space curve table has vanishing curvature at s = " +
                    std::to_string(r[0]));
            shifted.push_back({r[0], r[1], r[2] + shift});
        }
        spec.family = Tabulated{std::move(shifted)};
        return spec;
    };
    return {convert(alpha, +1.0), convert(beta, -1.0)};
}

} // namespace s3surf

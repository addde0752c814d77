#pragma once
/**
 * @file curve_r3.hpp
 * @brief Classical Euclidean Frenet curves from prescribed curvature/torsion:
 *        the R^3 side of the sphere <-> flat-space correspondence.
 *
 * Same integrator design as the S^3 engine (RK4 + modified Gram-Schmidt on
 * the (t, n, b) rows, position integrated alongside), minus the ambient
 * -alpha coupling. Straight lines (kappa == 0) carry no (n, b).
 */

#include <array>
#include <cmath>
#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "s3surf/curve.hpp"
#include "s3surf/errors.hpp"
#include "s3surf/linalg.hpp"

namespace s3surf {

struct LineR3 {};

struct HelixR3 {
    double kappa = 1.0;
    double tau = 0.0;
};

struct TabulatedR3 {
    std::vector<std::array<double, 3>> rows;  ///< (s, kappa, tau)
};

using CurveFamilyR3 = std::variant<LineR3, HelixR3, TabulatedR3>;

struct SeedFrameR3 {
    Vec3 origin{0, 0, 0};
    Vec3 t{1, 0, 0};
    Vec3 n{0, 1, 0};
    Vec3 b{0, 0, 1};
};

struct CurveSpecR3 {
    CurveFamilyR3 family = LineR3{};
    double s_min = 0.0;
    double s_max = 1.0;
    double h = kDefaultStep;
    SeedFrameR3 seed{};
};

inline double kappa_at(const CurveFamilyR3& f, double s) {
    return std::visit(
        [s](const auto& fam) -> double {
            using T = std::decay_t<decltype(fam)>;
            if constexpr (std::is_same_v<T, LineR3>)
                return 0.0;
            else if constexpr (std::is_same_v<T, HelixR3>)
                return fam.kappa;
            else
                return detail::interp_column(fam.rows, s, 1);
        },
        f);
}

inline double tau_at(const CurveFamilyR3& f, double s) {
    return std::visit(
        [s](const auto& fam) -> double {
            using T = std::decay_t<decltype(fam)>;
            if constexpr (std::is_same_v<T, LineR3>)
                return 0.0;
            else if constexpr (std::is_same_v<T, HelixR3>)
                return fam.tau;
            else
                return detail::interp_column(fam.rows, s, 2);
        },
        f);
}

struct SampledCurveR3 {
    CurveSpecR3 spec;
    std::vector<double> s;
    std::vector<Vec3> pos, t, n, b;  ///< n, b empty when has_frame == false
    std::vector<double> kappa, tau;  ///< tau empty when has_frame == false
    bool has_frame = false;

    std::size_t size() const { return s.size(); }
    double step() const { return s.size() > 1 ? s[1] - s[0] : 0.0; }
};

namespace detail {

inline void mgs3(std::array<Vec3, 3>& m, int rows) {
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < i; ++j)
            m[static_cast<std::size_t>(i)] = m[static_cast<std::size_t>(i)] -
                dot(m[static_cast<std::size_t>(i)], m[static_cast<std::size_t>(j)]) * m[static_cast<std::size_t>(j)];
        m[static_cast<std::size_t>(i)] = normalized(m[static_cast<std::size_t>(i)]);
    }
}

inline void validate_seed_r3(const SeedFrameR3& seed, bool need_nb) {
    std::array<Vec3, 3> m = {seed.t, seed.n, seed.b};
    const int rows = need_nb ? 3 : 1;
    for (int i = 0; i < rows; ++i) {
        if (std::abs(norm(m[static_cast<std::size_t>(i)]) - 1.0) > 1e-9)
            throw NotOrthogonal("R^3 seed frame row " + std::to_string(i) + " is not unit");
        for (int j = 0; j < i; ++j)
            if (std::abs(dot(m[static_cast<std::size_t>(i)], m[static_cast<std::size_t>(j)])) > 1e-9)
                throw NotOrthogonal("R^3 seed frame rows " + std::to_string(j) + "," +
                                    std::to_string(i) + " are not orthogonal");
    }
    if (need_nb && !(dot(cross(seed.t, seed.n), seed.b) > 0.0))
        throw NotOrthogonal("R^3 seed frame is negatively oriented");
}

} // namespace detail

/**
 * @brief Integrate the Euclidean Frenet system t' = kappa n, n' = -kappa t +
 *        tau b, b' = -tau n with position' = t.
 */
inline SampledCurveR3 integrate_frenet_r3(const CurveSpecR3& spec) {
    if (!(spec.h > 0.0)) throw ConfigError("curve step h must be positive");
    if (!(spec.s_max > spec.s_min)) throw ConfigError("curve range must satisfy s_max > s_min");
    if (const auto* tab = std::get_if<TabulatedR3>(&spec.family)) {
        if (tab->rows.size() < 2) throw ConfigError("tabulated R^3 curve needs at least 2 rows");
        for (std::size_t i = 1; i < tab->rows.size(); ++i)
            if (!(tab->rows[i][0] > tab->rows[i - 1][0]))
                throw ConfigError("tabulated s values must be strictly increasing (row " +
                                  std::to_string(i + 1) + ")");
    }

    const bool need_nb = !std::holds_alternative<LineR3>(spec.family);
    detail::validate_seed_r3(spec.seed, need_nb);

    const double span = spec.s_max - spec.s_min;
    const auto steps = static_cast<std::size_t>(std::max<long long>(1, std::llround(span / spec.h)));
    const double h = span / static_cast<double>(steps);

    SampledCurveR3 out;
    out.spec = spec;
    out.has_frame = need_nb;

    auto check_kappa = [&](double sv) {
        if (need_nb && kappa_at(spec.family, sv) < kKappaThreshold)
            throw VanishingCurvature("R^3 curvature below threshold near s = " + std::to_string(sv) +
                                     " (use the line family for straight curves)");
    };

    if (!need_nb) {
        // closed form: straight line from the origin along t
        for (std::size_t i = 0; i <= steps; ++i) {
            const double sv = spec.s_min + h * static_cast<double>(i);
            out.s.push_back(sv);
            out.pos.push_back(spec.seed.origin + sv * spec.seed.t);
            out.t.push_back(spec.seed.t);
            out.kappa.push_back(0.0);
        }
        return out;
    }

    std::array<Vec3, 3> frame = {spec.seed.t, spec.seed.n, spec.seed.b};
    detail::mgs3(frame, 3);
    Vec3 pos = spec.seed.origin;

    auto push_node = [&](double sv) {
        out.s.push_back(sv);
        out.pos.push_back(pos);
        out.t.push_back(frame[0]);
        out.n.push_back(frame[1]);
        out.b.push_back(frame[2]);
        out.kappa.push_back(kappa_at(spec.family, sv));
        out.tau.push_back(tau_at(spec.family, sv));
    };

    struct State {
        Vec3 p;
        std::array<Vec3, 3> f;
    };
    auto deriv = [&](const State& st, double sv) {
        const double k = kappa_at(spec.family, sv);
        const double tq = tau_at(spec.family, sv);
        State d;
        d.p = st.f[0];
        d.f[0] = k * st.f[1];
        d.f[1] = -k * st.f[0] + tq * st.f[2];
        d.f[2] = -tq * st.f[1];
        return d;
    };
    auto axpy = [](const State& st, double c, const State& d) {
        State o;
        o.p = st.p + c * d.p;
        for (int r = 0; r < 3; ++r)
            o.f[static_cast<std::size_t>(r)] =
                st.f[static_cast<std::size_t>(r)] + c * d.f[static_cast<std::size_t>(r)];
        return o;
    };

    check_kappa(spec.s_min);
    push_node(spec.s_min);
    for (std::size_t i = 0; i < steps; ++i) {
        const double sv = spec.s_min + h * static_cast<double>(i);
        State st{pos, frame};
        const State k1 = deriv(st, sv);
        const State k2 = deriv(axpy(st, h / 2.0, k1), sv + h / 2.0);
        const State k3 = deriv(axpy(st, h / 2.0, k2), sv + h / 2.0);
        const State k4 = deriv(axpy(st, h, k3), sv + h);

        pos = st.p + (h / 6.0) * (k1.p + 2.0 * k2.p + 2.0 * k3.p + k4.p);
        for (int r = 0; r < 3; ++r) {
            const auto ri = static_cast<std::size_t>(r);
            frame[ri] = st.f[ri] + (h / 6.0) * (k1.f[ri] + 2.0 * k2.f[ri] + 2.0 * k3.f[ri] + k4.f[ri]);
        }
        detail::mgs3(frame, 3);

        const double s_next = spec.s_min + h * static_cast<double>(i + 1);
        check_kappa(s_next);
        push_node(s_next);
    }
    return out;
}

struct CurveInvariantsR3 {
    std::vector<double> s;
    std::vector<double> kappa_fd;  ///< |t'|
    std::vector<double> tau_fd;    ///< -<b', n>; empty without a frame
};

/// Central-difference recovery of (kappa, tau) for Euclidean curves.
inline CurveInvariantsR3 fd_curve_invariants(const SampledCurveR3& c) {
    if (c.size() < 5)
        throw TooFewSamples("fd_curve_invariants: need at least 5 samples, got " +
                            std::to_string(c.size()));
    const double h = c.step();
    CurveInvariantsR3 inv;
    for (std::size_t i = 1; i + 1 < c.size(); ++i) {
        inv.s.push_back(c.s[i]);
        inv.kappa_fd.push_back(norm((c.t[i + 1] - c.t[i - 1]) / (2.0 * h)));
        if (c.has_frame)
            inv.tau_fd.push_back(-dot((c.b[i + 1] - c.b[i - 1]) / (2.0 * h), c.n[i]));
    }
    return inv;
}

/// Max orthonormality defect of the (t, n, b) rows over all nodes.
inline double orthonormality_drift(const SampledCurveR3& c) {
    double worst = 0.0;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (!c.has_frame) {
            worst = std::max(worst, std::abs(norm(c.t[i]) - 1.0));
            continue;
        }
        const std::array<Vec3, 3> m = {c.t[i], c.n[i], c.b[i]};
        for (int r = 0; r < 3; ++r)
            for (int cc = 0; cc < 3; ++cc) {
                const double g = dot(m[static_cast<std::size_t>(r)], m[static_cast<std::size_t>(cc)]);
                worst = std::max(worst, std::abs(g - (r == cc ? 1.0 : 0.0)));
            }
    }
    return worst;
}

} // namespace s3surf

#pragma once
/**
 * @file curve.hpp
 * @brief Arc-length curve synthesis on S^3 from prescribed curvature/torsion.
 *
 * The engine integrates the sphere Frenet system
 *
 *     alpha' = t,   t' = kappa n - alpha,   n' = -kappa t + tau b,   b' = -tau n
 *
 * with classical RK4 on the frame-row matrix followed by modified
 * Gram-Schmidt re-orthonormalization each step (rows in the order alpha, t,
 * n, b).  Geodesic families (kappa == 0) carry only (alpha, t); their normal
 * and binormal are undefined and any access raises MissingFrame.
 */

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "s3surf/errors.hpp"
#include "s3surf/quaternion.hpp"

namespace s3surf {

inline constexpr double kKappaThreshold = 1e-8;  ///< below this, a curve counts as geodesic
inline constexpr double kDefaultStep = 1e-3;

// ---------------------------------------------------------------------------
// Curvature profiles (constants or piecewise-linear tables)
// ---------------------------------------------------------------------------

/// Scalar profile over arc length: a constant or a linearly interpolated table.
class Profile {
public:
    static Profile constant(double v) {
        Profile p;
        p.const_ = v;
        return p;
    }

    /// rows = (s, value); s strictly increasing, >= 2 rows.
    static Profile table(std::vector<std::pair<double, double>> rows) {
        if (rows.size() < 2) throw ConfigError("profile table needs at least 2 rows");
        for (std::size_t i = 1; i < rows.size(); ++i)
            if (!(rows[i].first > rows[i - 1].first))
                throw ConfigError("profile table s values must be strictly increasing (row " +
                                  std::to_string(i + 1) + ")");
        Profile p;
        p.rows_ = std::move(rows);
        return p;
    }

    /// Value at s; tables clamp to their end values outside the covered range.
    double at(double s) const {
        if (rows_.empty()) return const_;
        if (s <= rows_.front().first) return rows_.front().second;
        if (s >= rows_.back().first) return rows_.back().second;
        auto it = std::upper_bound(rows_.begin(), rows_.end(), s,
                                   [](double v, const auto& r) { return v < r.first; });
        const auto& [s1, v1] = *it;
        const auto& [s0, v0] = *(it - 1);
        const double w = (s - s0) / (s1 - s0);
        return v0 + w * (v1 - v0);
    }

    bool is_constant() const { return rows_.empty(); }

private:
    double const_ = 0.0;
    std::vector<std::pair<double, double>> rows_;
};

// ---------------------------------------------------------------------------
// Curve families
// ---------------------------------------------------------------------------

struct GreatCircle {};

struct ProperHelix {
    double kappa = 1.0;
    double tau = 0.0;
};

/// tau(s) = b * kappa(s) + sign (sign in {+1, -1}).
struct GeneralHelix {
    double b = 1.0;
    int sign = +1;
    Profile kappa = Profile::constant(1.0);
};

/// Closed-form factor curve (cos t, (R1^2-R2^2) sin t, 0, 2 R1 R2 sin t).
struct CliffordFactor {
    double r1 = 1.0 / std::numbers::sqrt2;
    double r2 = 1.0 / std::numbers::sqrt2;
};

/// Explicit (s, kappa, tau) rows, linearly interpolated.
struct Tabulated {
    std::vector<std::array<double, 3>> rows;
};

using CurveFamily = std::variant<GreatCircle, ProperHelix, GeneralHelix, CliffordFactor, Tabulated>;

/// Initial frame at s_min; defaults to the standard gauge (e1, e2, e3, e4).
struct SeedFrame {
    Quat alpha = kE1;
    Quat t = kE2;
    Quat n = kE3;
    Quat b = kE4;
};

struct CurveSpec {
    CurveFamily family = GreatCircle{};
    double s_min = 0.0;
    double s_max = 1.0;
    double h = kDefaultStep;
    SeedFrame seed{};
};

/// Seed frame with tangent and normal rotated by theta in their plane; the
/// binormal row stays fixed, so binormal-pinned constructions remain
/// co-axial while the initial tangent moves.  theta == 0 is the standard
/// gauge.
inline SeedFrame rotated_tangent_seed(double theta) {
    SeedFrame seed;
    seed.t = Quat{0.0, std::cos(theta), std::sin(theta), 0.0};
    seed.n = Quat{0.0, -std::sin(theta), std::cos(theta), 0.0};
    return seed;
}

/// True for families whose curvature is identically zero (no (n, b) frame).
inline bool is_geodesic_family(const CurveFamily& f) {
    return std::holds_alternative<GreatCircle>(f) || std::holds_alternative<CliffordFactor>(f);
}

namespace detail {

inline double interp_column(const std::vector<std::array<double, 3>>& rows, double s, int col) {
    if (s <= rows.front()[0]) return rows.front()[static_cast<std::size_t>(col)];
    if (s >= rows.back()[0]) return rows.back()[static_cast<std::size_t>(col)];
    auto it = std::upper_bound(rows.begin(), rows.end(), s,
                               [](double v, const auto& r) { return v < r[0]; });
    const auto& hi = *it;
    const auto& lo = *(it - 1);
    const double w = (s - lo[0]) / (hi[0] - lo[0]);
    return lo[static_cast<std::size_t>(col)] +
           w * (hi[static_cast<std::size_t>(col)] - lo[static_cast<std::size_t>(col)]);
}

} // namespace detail

/// Curvature of the family at arc length s.
inline double kappa_at(const CurveFamily& f, double s) {
    return std::visit(
        [s](const auto& fam) -> double {
            using T = std::decay_t<decltype(fam)>;
            if constexpr (std::is_same_v<T, GreatCircle> || std::is_same_v<T, CliffordFactor>)
                return 0.0;
            else if constexpr (std::is_same_v<T, ProperHelix>)
                return fam.kappa;
            else if constexpr (std::is_same_v<T, GeneralHelix>)
                return fam.kappa.at(s);
            else
                return detail::interp_column(fam.rows, s, 1);
        },
        f);
}

/// Torsion of the family at arc length s (meaningless for geodesic families).
inline double tau_at(const CurveFamily& f, double s) {
    return std::visit(
        [s](const auto& fam) -> double {
            using T = std::decay_t<decltype(fam)>;
            if constexpr (std::is_same_v<T, GreatCircle> || std::is_same_v<T, CliffordFactor>)
                return 0.0;
            else if constexpr (std::is_same_v<T, ProperHelix>)
                return fam.tau;
            else if constexpr (std::is_same_v<T, GeneralHelix>)
                return fam.b * fam.kappa.at(s) + static_cast<double>(fam.sign);
            else
                return detail::interp_column(fam.rows, s, 2);
        },
        f);
}

// ---------------------------------------------------------------------------
// Sampled curves
// ---------------------------------------------------------------------------

/// One arc-length station: position, Frenet frame and invariants.
struct FrenetSample {
    double s = 0.0;
    Quat alpha, t, n, b;
    double kappa = 0.0, tau = 0.0;
};

struct SampledCurve {
    CurveSpec spec;
    std::vector<double> s;
    std::vector<Quat> alpha, t, n, b;  ///< n, b empty when has_frame == false
    std::vector<double> kappa, tau;    ///< tau empty when has_frame == false
    bool has_frame = false;

    std::size_t size() const { return s.size(); }
    double step() const { return s.size() > 1 ? s[1] - s[0] : 0.0; }

    /// Full Frenet sample; raises MissingFrame for geodesic curves.
    FrenetSample sample(std::size_t i) const {
        if (!has_frame)
            throw MissingFrame("FrenetSample: normal/binormal undefined for a geodesic curve");
        return {s[i], alpha[i], t[i], n[i], b[i], kappa[i], tau[i]};
    }
};

namespace detail {

/// Modified Gram-Schmidt on the leading `rows` rows, in place, in order.
inline void mgs(std::array<Quat, 4>& m, int rows) {
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < i; ++j) m[static_cast<std::size_t>(i)] -=
            dot(m[static_cast<std::size_t>(i)], m[static_cast<std::size_t>(j)]) * m[static_cast<std::size_t>(j)];
        m[static_cast<std::size_t>(i)] = normalized(m[static_cast<std::size_t>(i)]);
    }
}

struct SeedCheckResult {
    std::array<Quat, 4> rows;
};

/// Validate (and machine-snap) an orthonormal, positively oriented seed.
inline std::array<Quat, 4> validate_seed(const SeedFrame& seed, bool need_nb) {
    std::array<Quat, 4> m = {seed.alpha, seed.t, seed.n, seed.b};
    const int rows = need_nb ? 4 : 2;
    for (int i = 0; i < rows; ++i) {
        const auto& ri = m[static_cast<std::size_t>(i)];
        if (std::abs(norm(ri) - 1.0) > 1e-9)
            throw NotOrthogonal("seed frame row " + std::to_string(i) + " is not unit (|r| = " +
                                std::to_string(norm(ri)) + ")");
        for (int j = 0; j < i; ++j)
            if (std::abs(dot(ri, m[static_cast<std::size_t>(j)])) > 1e-9)
                throw NotOrthogonal("seed frame rows " + std::to_string(j) + "," +
                                    std::to_string(i) + " are not orthogonal");
    }
    if (need_nb) {
        const double d = det4({std::array<double, 4>{m[0].w, m[0].x, m[0].y, m[0].z},
                               {m[1].w, m[1].x, m[1].y, m[1].z},
                               {m[2].w, m[2].x, m[2].y, m[2].z},
                               {m[3].w, m[3].x, m[3].y, m[3].z}});
        if (!(d > 0.0))
            throw NotOrthogonal("seed frame is negatively oriented (det = " + std::to_string(d) + ")");
    }
    mgs(m, rows);  // snap entry round-off to machine orthonormality
    return m;
}

} // namespace detail

/**
 * @brief Integrate the S^3 Frenet system for the given spec.
 *
 * Frame families (ProperHelix, GeneralHelix, Tabulated) integrate the full
 * 4-row system; geodesic families integrate (alpha, t) only.  The step is
 * snapped so the range divides evenly: h_eff = span / round(span / h).
 *
 * Throws VanishingCurvature when a frame family's curvature drops below
 * kKappaThreshold anywhere on the range, ConfigError for malformed specs and
 * NotOrthogonal for bad seeds.
 */
inline SampledCurve integrate_frenet_s3(const CurveSpec& spec) {
    if (!(spec.h > 0.0)) throw ConfigError("curve step h must be positive");
    if (!(spec.s_max > spec.s_min)) throw ConfigError("curve range must satisfy s_max > s_min");

    if (const auto* cf = std::get_if<CliffordFactor>(&spec.family)) {
        // Closed form; the seed frame is not used by this family.
        const double a = cf->r1 * cf->r1 - cf->r2 * cf->r2;
        const double b2 = 2.0 * cf->r1 * cf->r2;
        if (std::abs(cf->r1 * cf->r1 + cf->r2 * cf->r2 - 1.0) > 1e-10)
            throw BadRadii("clifford factor radii: R1^2 + R2^2 = " +
                           std::to_string(cf->r1 * cf->r1 + cf->r2 * cf->r2));
        SampledCurve out;
        out.spec = spec;
        const double span = spec.s_max - spec.s_min;
        const auto steps = static_cast<std::size_t>(std::max<long long>(1, std::llround(span / spec.h)));
        const double h = span / static_cast<double>(steps);
        out.s.reserve(steps + 1);
        for (std::size_t i = 0; i <= steps; ++i) {
            const double sv = spec.s_min + h * static_cast<double>(i);
            out.s.push_back(sv);
            out.alpha.push_back({std::cos(sv), a * std::sin(sv), 0.0, b2 * std::sin(sv)});
            out.t.push_back({-std::sin(sv), a * std::cos(sv), 0.0, b2 * std::cos(sv)});
            out.kappa.push_back(0.0);
        }
        out.has_frame = false;
        return out;
    }

    // validate family parameters
    std::visit(
        [](const auto& fam) {
            using T = std::decay_t<decltype(fam)>;
            if constexpr (std::is_same_v<T, ProperHelix>) {
                if (fam.kappa < 0.0) throw ConfigError("helix curvature must be non-negative");
            } else if constexpr (std::is_same_v<T, GeneralHelix>) {
                if (fam.sign != 1 && fam.sign != -1)
                    throw ConfigError("general helix sign must be +1 or -1");
            } else if constexpr (std::is_same_v<T, Tabulated>) {
                if (fam.rows.size() < 2) throw ConfigError("tabulated curve needs at least 2 rows");
                for (std::size_t i = 0; i < fam.rows.size(); ++i) {
                    if (fam.rows[i][1] < 0.0)
                        throw ConfigError("tabulated curvature must be non-negative (row " +
                                          std::to_string(i + 1) + ")");
                    if (i > 0 && !(fam.rows[i][0] > fam.rows[i - 1][0]))
                        throw ConfigError("tabulated s values must be strictly increasing (row " +
                                          std::to_string(i + 1) + ")");
                }
            }
        },
        spec.family);

    const bool need_nb = !is_geodesic_family(spec.family);
    auto state = detail::validate_seed(spec.seed, need_nb);
    const int rows = need_nb ? 4 : 2;

    const double span = spec.s_max - spec.s_min;
    const auto steps = static_cast<std::size_t>(std::max<long long>(1, std::llround(span / spec.h)));
    const double h = span / static_cast<double>(steps);

    SampledCurve out;
    out.spec = spec;
    out.has_frame = need_nb;
    out.s.reserve(steps + 1);

    auto check_kappa = [&](double sv) {
        const double k = kappa_at(spec.family, sv);
        if (need_nb && k < kKappaThreshold)
            throw VanishingCurvature("curvature " + std::to_string(k) + " below threshold near s = " +
                                     std::to_string(sv) +
                                     " (use the great-circle family for geodesics)");
        return k;
    };

    auto push_node = [&](double sv, const std::array<Quat, 4>& m) {
        out.s.push_back(sv);
        out.alpha.push_back(m[0]);
        out.t.push_back(m[1]);
        out.kappa.push_back(kappa_at(spec.family, sv));
        if (need_nb) {
            out.n.push_back(m[2]);
            out.b.push_back(m[3]);
            out.tau.push_back(tau_at(spec.family, sv));
        }
    };

    // derivative of the frame rows at (state, s)
    auto deriv = [&](const std::array<Quat, 4>& m, double sv) {
        std::array<Quat, 4> d{};
        const double k = need_nb ? kappa_at(spec.family, sv) : 0.0;
        const double tq = need_nb ? tau_at(spec.family, sv) : 0.0;
        d[0] = m[1];
        d[1] = (need_nb ? k * m[2] : Quat{}) - m[0];
        if (need_nb) {
            d[2] = -k * m[1] + tq * m[3];
            d[3] = -tq * m[2];
        }
        return d;
    };

    check_kappa(spec.s_min);
    push_node(spec.s_min, state);

    for (std::size_t i = 0; i < steps; ++i) {
        const double sv = spec.s_min + h * static_cast<double>(i);
        const auto k1 = deriv(state, sv);
        std::array<Quat, 4> m2{};
        for (int r = 0; r < rows; ++r)
            m2[static_cast<std::size_t>(r)] = state[static_cast<std::size_t>(r)] + (h / 2.0) * k1[static_cast<std::size_t>(r)];
        const auto k2 = deriv(m2, sv + h / 2.0);
        std::array<Quat, 4> m3{};
        for (int r = 0; r < rows; ++r)
            m3[static_cast<std::size_t>(r)] = state[static_cast<std::size_t>(r)] + (h / 2.0) * k2[static_cast<std::size_t>(r)];
        const auto k3 = deriv(m3, sv + h / 2.0);
        std::array<Quat, 4> m4{};
        for (int r = 0; r < rows; ++r)
            m4[static_cast<std::size_t>(r)] = state[static_cast<std::size_t>(r)] + h * k3[static_cast<std::size_t>(r)];
        const auto k4 = deriv(m4, sv + h);

        for (int r = 0; r < rows; ++r) {
            const auto ri = static_cast<std::size_t>(r);
            state[ri] += (h / 6.0) * (k1[ri] + 2.0 * k2[ri] + 2.0 * k3[ri] + k4[ri]);
        }
        detail::mgs(state, rows);

        const double s_next = spec.s_min + h * static_cast<double>(i + 1);
        check_kappa(s_next);
        push_node(s_next, state);
    }
    return out;
}

/// Closed-form Clifford factor curve on [s_min, s_max]; see CliffordFactor.
inline SampledCurve clifford_factor_curve(double r1, double r2, double s_min = 0.0,
                                          double s_max = 2.0 * std::numbers::pi,
                                          double h = kDefaultStep) {
    CurveSpec spec;
    spec.family = CliffordFactor{r1, r2};
    spec.s_min = s_min;
    spec.s_max = s_max;
    spec.h = h;
    return integrate_frenet_s3(spec);
}

// ---------------------------------------------------------------------------
// Finite-difference invariants (integrator-independent oracle)
// ---------------------------------------------------------------------------

struct CurveInvariants {
    std::vector<double> s;         ///< interior nodes
    std::vector<double> kappa_fd;  ///< |t' + alpha| (central differences)
    std::vector<double> tau_fd;    ///< -<b', n>; empty when the curve has no frame
};

/**
 * @brief Recover (kappa, tau) from samples by central differences.
 *
 * kappa = |t'(s) + alpha(s)| and tau = -<b'(s), n(s)> on the sphere; interior
 * nodes only.  Requires at least 5 samples (TooFewSamples otherwise).
 */
inline CurveInvariants fd_curve_invariants(const SampledCurve& c) {
    if (c.size() < 5)
        throw TooFewSamples("fd_curve_invariants: need at least 5 samples, got " +
                            std::to_string(c.size()));
    const double h = c.step();
    CurveInvariants inv;
    inv.s.reserve(c.size() - 2);
    for (std::size_t i = 1; i + 1 < c.size(); ++i) {
        inv.s.push_back(c.s[i]);
        const Quat tp = (c.t[i + 1] - c.t[i - 1]) / (2.0 * h);
        inv.kappa_fd.push_back(norm(tp + c.alpha[i]));
        if (c.has_frame) {
            const Quat bp = (c.b[i + 1] - c.b[i - 1]) / (2.0 * h);
            inv.tau_fd.push_back(-dot(bp, c.n[i]));
        }
    }
    return inv;
}

/// Max over nodes of the frame-matrix orthonormality defect ||M M^T - I||_inf.
inline double orthonormality_drift(const SampledCurve& c) {
    double worst = 0.0;
    for (std::size_t i = 0; i < c.size(); ++i) {
        std::array<Quat, 4> m = {c.alpha[i], c.t[i], c.has_frame ? c.n[i] : Quat{},
                                 c.has_frame ? c.b[i] : Quat{}};
        const int rows = c.has_frame ? 4 : 2;
        for (int r = 0; r < rows; ++r)
            for (int cidx = 0; cidx < rows; ++cidx) {
                const double g = dot(m[static_cast<std::size_t>(r)], m[static_cast<std::size_t>(cidx)]);
                worst = std::max(worst, std::abs(g - (r == cidx ? 1.0 : 0.0)));
            }
    }
    return worst;
}

/// Frame determinant at node i (full-frame curves only); positive for valid frames.
inline double frame_determinant(const SampledCurve& c, std::size_t i) {
    if (!c.has_frame) throw MissingFrame("frame_determinant: curve has no (n, b)");
    return det4({std::array<double, 4>{c.alpha[i].w, c.alpha[i].x, c.alpha[i].y, c.alpha[i].z},
                 {c.t[i].w, c.t[i].x, c.t[i].y, c.t[i].z},
                 {c.n[i].w, c.n[i].x, c.n[i].y, c.n[i].z},
                 {c.b[i].w, c.b[i].x, c.b[i].y, c.b[i].z}});
}

} // namespace s3surf

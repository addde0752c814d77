#pragma once
/**
 * @file surface.hpp
 * @brief Translation surfaces X(s,t) = alpha(s) * beta(t) in the unit
 *        quaternions: grid construction, closed-form normal and fundamental
 *        forms, mean/Gauss curvature, and the minimality / flatness /
 *        umbilicity residuals.  Also the additive analogue X = alpha + beta
 *        in Euclidean 3-space.
 *
 * Sign conventions (fixed once, used consistently everywhere):
 *  - The tabulated cross term F(i,j) is the frame pairing
 *    <T_alpha(s_i), That_beta(t_j)>; the metric cross term <X_s, X_t> is its
 *    negative.  All coefficient formulas below account for this.
 *  - The reported normal is N = (alpha' beta' - F X) / sqrt(1 - F^2); the
 *    mean curvature is taken with respect to the opposite orientation -N, so
 *    that a pair of great circles with constant pairing C yields
 *    H = -C / sqrt(1 - C^2).
 */

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "s3surf/curve.hpp"
#include "s3surf/curve_r3.hpp"
#include "s3surf/errors.hpp"
#include "s3surf/frames.hpp"
#include "s3surf/linalg.hpp"
#include "s3surf/quaternion.hpp"

namespace s3surf {

constexpr double kDefaultRegularityMargin = 1e-3;

enum class TrimPolicy { Throw, TrimLargestRectangle };

namespace detail {

/// Largest all-true axis-aligned subrectangle of a row-major mask
/// (histogram-stack method).  Returns {i0, i1, j0, j1} half-open.
struct Window {
    std::size_t i0 = 0, i1 = 0, j0 = 0, j1 = 0;
    std::size_t rows() const { return i1 - i0; }
    std::size_t cols() const { return j1 - j0; }
    std::size_t area() const { return rows() * cols(); }
};

inline Window largest_true_rectangle(const std::vector<std::uint8_t>& mask, std::size_t ns,
                                     std::size_t nt) {
    Window best;
    std::vector<std::size_t> height(nt, 0);
    std::vector<std::size_t> stack;  // column indices with increasing heights
    for (std::size_t i = 0; i < ns; ++i) {
        for (std::size_t j = 0; j < nt; ++j)
            height[j] = mask[i * nt + j] ? height[j] + 1 : 0;
        stack.clear();
        for (std::size_t j = 0; j <= nt; ++j) {
            const std::size_t h = (j < nt) ? height[j] : 0;
            while (!stack.empty() && height[stack.back()] >= h) {
                const std::size_t rect_h = height[stack.back()];
                stack.pop_back();
                const std::size_t left = stack.empty() ? 0 : stack.back() + 1;
                if (rect_h * (j - left) > best.area())
                    best = Window{i + 1 - rect_h, i + 1, left, j};
            }
            if (j < nt) stack.push_back(j);
        }
    }
    return best;
}

} // namespace detail

/**
 * @brief Tensor-product grid of a translation surface over the native nodes
 *        of its two generator curves (possibly restricted to a trimmed
 *        all-regular window).
 */
struct SurfaceGrid {
    SampledCurve alpha, beta;
    QuatFrameSamples La;  ///< left frames of alpha
    QuatFrameSamples Rb;  ///< right frames of beta
    double delta = kDefaultRegularityMargin;
    std::size_t i0 = 0, j0 = 0;  ///< window offsets into the curve arrays
    std::size_t ns = 0, nt = 0;  ///< window extents
    bool trimmed = false;
    std::vector<double> F;  ///< row-major ns x nt frame pairing

    std::size_t idx(std::size_t i, std::size_t j) const { return i * nt + j; }
    double s(std::size_t i) const { return alpha.s[i0 + i]; }
    double t(std::size_t j) const { return beta.s[j0 + j]; }
    Quat X(std::size_t i, std::size_t j) const {
        return qmul(alpha.alpha[i0 + i], beta.alpha[j0 + j]);
    }
    Quat X_s(std::size_t i, std::size_t j) const {
        return qmul(alpha.t[i0 + i], beta.alpha[j0 + j]);
    }
    Quat X_t(std::size_t i, std::size_t j) const {
        return qmul(alpha.alpha[i0 + i], beta.t[j0 + j]);
    }
};

/**
 * @brief Populate the surface grid and its frame-pairing table; every node of
 *        the returned window satisfies |F| <= 1 - delta.
 *
 * With TrimPolicy::Throw (default), any irregular node raises
 * RegularityViolation listing the offending (s, t) pairs.  With
 * TrimPolicy::TrimLargestRectangle the largest all-regular axis-aligned
 * subrectangle is kept instead (at least 5x5, else the violation is raised
 * anyway).
 */
inline SurfaceGrid build_surface(const SampledCurve& alpha, const SampledCurve& beta,
                                 double delta = kDefaultRegularityMargin,
                                 TrimPolicy policy = TrimPolicy::Throw) {
    if (!(delta > 0.0 && delta < 1.0))
        throw ConfigError("regularity margin must lie in (0, 1), got " + std::to_string(delta));
    SurfaceGrid g;
    g.alpha = alpha;
    g.beta = beta;
    g.La = left_frames(alpha);
    g.Rb = right_frames(beta);
    g.delta = delta;
    const std::size_t ns = alpha.size(), nt = beta.size();

    std::vector<double> Ffull(ns * nt);
    std::vector<std::uint8_t> regular(ns * nt);
    std::size_t bad = 0;
    for (std::size_t i = 0; i < ns; ++i) {
        const Quat& Ta = g.La.T[i];
        for (std::size_t j = 0; j < nt; ++j) {
            const double f = dot(Ta, g.Rb.T[j]);
            Ffull[i * nt + j] = f;
            const bool ok = std::abs(f) <= 1.0 - delta;
            regular[i * nt + j] = ok ? 1 : 0;
            if (!ok) ++bad;
        }
    }

    if (bad == 0) {
        g.i0 = g.j0 = 0;
        g.ns = ns;
        g.nt = nt;
        g.F = std::move(Ffull);
        return g;
    }

    if (policy == TrimPolicy::TrimLargestRectangle) {
        const auto w = detail::largest_true_rectangle(regular, ns, nt);
        if (w.rows() >= 5 && w.cols() >= 5) {
            g.i0 = w.i0;
            g.j0 = w.j0;
            g.ns = w.rows();
            g.nt = w.cols();
            g.trimmed = true;
            g.F.resize(g.ns * g.nt);
            for (std::size_t i = 0; i < g.ns; ++i)
                for (std::size_t j = 0; j < g.nt; ++j)
                    g.F[g.idx(i, j)] = Ffull[(g.i0 + i) * nt + (g.j0 + j)];
            return g;
        }
    }

    std::string msg = "surface fails |F| <= 1 - delta at " + std::to_string(bad) +
                      " node(s); first offenders:";
    std::size_t listed = 0;
    for (std::size_t i = 0; i < ns && listed < 10; ++i)
        for (std::size_t j = 0; j < nt && listed < 10; ++j)
            if (!regular[i * nt + j]) {
                msg += " (s=" + std::to_string(alpha.s[i]) + ", t=" + std::to_string(beta.s[j]) +
                       ", F=" + std::to_string(Ffull[i * nt + j]) + ")";
                ++listed;
            }
    throw RegularityViolation(msg);
}

/// Closed-form surface normal N = (alpha' beta' - F X) / sqrt(1 - F^2).
inline std::vector<Quat> closed_form_normal(const SurfaceGrid& g) {
    std::vector<Quat> N(g.ns * g.nt);
    for (std::size_t i = 0; i < g.ns; ++i)
        for (std::size_t j = 0; j < g.nt; ++j) {
            const double F = g.F[g.idx(i, j)];
            const Quat num = qmul(g.alpha.t[g.i0 + i], g.beta.t[g.j0 + j]) - F * g.X(i, j);
            N[g.idx(i, j)] = num / std::sqrt(1.0 - F * F);
        }
    return N;
}

/**
 * @brief First and second fundamental form coefficient grids.
 *
 * E = G = 1 exactly; F is the frame pairing (see file header for the sign
 * relative to the metric cross term).  The second-form coefficients are taken
 * with respect to the reported normal:
 *   e = kappa_alpha <B_alpha, That_beta> / sqrt(1 - F^2),
 *   f = sqrt(1 - F^2),
 *   g = -kappa_beta <T_alpha, Bhat_beta> / sqrt(1 - F^2),
 * with e (resp. g) identically zero when alpha (resp. beta) is a geodesic.
 */
struct FundForms {
    std::size_t ns = 0, nt = 0;
    std::vector<double> E, F, G, e, f, g;

    std::size_t idx(std::size_t i, std::size_t j) const { return i * nt + j; }
};

inline FundForms closed_form_second_form(const SurfaceGrid& grid) {
    FundForms ff;
    ff.ns = grid.ns;
    ff.nt = grid.nt;
    const std::size_t n = grid.ns * grid.nt;
    ff.E.assign(n, 1.0);
    ff.G.assign(n, 1.0);
    ff.F = grid.F;
    ff.e.assign(n, 0.0);
    ff.f.assign(n, 0.0);
    ff.g.assign(n, 0.0);
    for (std::size_t i = 0; i < grid.ns; ++i) {
        const double ka = grid.alpha.has_frame ? grid.alpha.kappa[grid.i0 + i] : 0.0;
        for (std::size_t j = 0; j < grid.nt; ++j) {
            const std::size_t q = ff.idx(i, j);
            const double F = grid.F[q];
            const double root = std::sqrt(1.0 - F * F);
            ff.f[q] = root;
            if (grid.alpha.has_frame)
                ff.e[q] = ka * dot(grid.La.B[grid.i0 + i], grid.Rb.T[grid.j0 + j]) / root;
            if (grid.beta.has_frame)
                ff.g[q] = -grid.beta.kappa[grid.j0 + j] *
                          dot(grid.La.T[grid.i0 + i], grid.Rb.B[grid.j0 + j]) / root;
        }
    }
    return ff;
}

/// Mean curvature in the -N orientation: H = -(e + 2 f F + g) / (2 (1 - F^2)).
inline std::vector<double> mean_curvature(const FundForms& ff) {
    std::vector<double> H(ff.E.size());
    for (std::size_t q = 0; q < H.size(); ++q) {
        const double F = ff.F[q];
        H[q] = -(ff.e[q] + 2.0 * ff.f[q] * F + ff.g[q]) / (2.0 * (1.0 - F * F));
    }
    return H;
}

/// Extrinsic and intrinsic Gauss curvature: K_ext = (e g - f^2)/(E G - F^2),
/// K = K_ext + 1.
inline std::pair<std::vector<double>, std::vector<double>> gauss_curvature(const FundForms& ff) {
    std::vector<double> Kext(ff.E.size()), K(ff.E.size());
    for (std::size_t q = 0; q < Kext.size(); ++q) {
        const double F = ff.F[q];
        Kext[q] = (ff.e[q] * ff.g[q] - ff.f[q] * ff.f[q]) / (1.0 - F * F);
        K[q] = Kext[q] + 1.0;
    }
    return {Kext, K};
}

/// Frame-level minimality residual
/// kappa_a <B_a, T^_b> - kappa_b <T_a, B^_b> - 2 F (F^2 - 1);
/// identically equal to -2 (1 - F^2)^{3/2} H.
inline std::vector<double> minimality_residual(const SurfaceGrid& grid) {
    std::vector<double> r(grid.ns * grid.nt, 0.0);
    for (std::size_t i = 0; i < grid.ns; ++i) {
        const double ka = grid.alpha.has_frame ? grid.alpha.kappa[grid.i0 + i] : 0.0;
        for (std::size_t j = 0; j < grid.nt; ++j) {
            const std::size_t q = grid.idx(i, j);
            const double F = grid.F[q];
            double lhs = 0.0;
            if (grid.alpha.has_frame)
                lhs += ka * dot(grid.La.B[grid.i0 + i], grid.Rb.T[grid.j0 + j]);
            if (grid.beta.has_frame)
                lhs -= grid.beta.kappa[grid.j0 + j] *
                       dot(grid.La.T[grid.i0 + i], grid.Rb.B[grid.j0 + j]);
            r[q] = lhs - 2.0 * F * (F * F - 1.0);
        }
    }
    return r;
}

/// Frame-level flatness residual kappa_a kappa_b <B_a, T^_b> <T_a, B^_b>;
/// identically equal to -K (1 - F^2)^2.
inline std::vector<double> flatness_residual(const SurfaceGrid& grid) {
    std::vector<double> r(grid.ns * grid.nt, 0.0);
    if (!grid.alpha.has_frame || !grid.beta.has_frame) return r;
    for (std::size_t i = 0; i < grid.ns; ++i) {
        const double ka = grid.alpha.kappa[grid.i0 + i];
        for (std::size_t j = 0; j < grid.nt; ++j) {
            const std::size_t q = grid.idx(i, j);
            r[q] = ka * grid.beta.kappa[grid.j0 + j] *
                   dot(grid.La.B[grid.i0 + i], grid.Rb.T[grid.j0 + j]) *
                   dot(grid.La.T[grid.i0 + i], grid.Rb.B[grid.j0 + j]);
        }
    }
    return r;
}

/// Umbilicity defect |lambda_1 - lambda_2| = 2 sqrt(max(0, H^2 - K_ext)) from
/// the same H and K_ext used everywhere else.
inline std::vector<double> umbilicity_defect(const FundForms& ff) {
    const auto H = mean_curvature(ff);
    const auto [Kext, K] = gauss_curvature(ff);
    (void)K;
    std::vector<double> d(H.size());
    for (std::size_t q = 0; q < d.size(); ++q)
        d[q] = 2.0 * std::sqrt(std::max(0.0, H[q] * H[q] - Kext[q]));
    return d;
}

struct SummaryStats {
    double min = 0.0, max = 0.0, mean = 0.0, abs_max = 0.0, stdev = 0.0;
};

inline SummaryStats summarize(const std::vector<double>& v) {
    SummaryStats s;
    if (v.empty()) return s;
    s.min = s.max = v.front();
    double sum = 0.0;
    for (double x : v) {
        s.min = std::min(s.min, x);
        s.max = std::max(s.max, x);
        s.abs_max = std::max(s.abs_max, std::abs(x));
        sum += x;
    }
    s.mean = sum / static_cast<double>(v.size());
    double var = 0.0;
    for (double x : v) var += (x - s.mean) * (x - s.mean);
    s.stdev = std::sqrt(var / static_cast<double>(v.size()));
    return s;
}

/**
 * @brief Full per-node geometry of a translation surface plus pass/fail style
 *        summary flags.
 */
struct GeometryReport {
    std::size_t ns = 0, nt = 0;
    std::vector<double> s, t;  ///< window node coordinates
    FundForms forms;
    std::vector<double> H, K, K_ext;
    std::vector<double> min_res, flat_res, umb_defect;
    std::vector<Quat> N;

    std::size_t idx(std::size_t i, std::size_t j) const { return i * nt + j; }
};

inline GeometryReport analyze(const SurfaceGrid& grid) {
    GeometryReport rep;
    rep.ns = grid.ns;
    rep.nt = grid.nt;
    rep.s.reserve(grid.ns);
    rep.t.reserve(grid.nt);
    for (std::size_t i = 0; i < grid.ns; ++i) rep.s.push_back(grid.s(i));
    for (std::size_t j = 0; j < grid.nt; ++j) rep.t.push_back(grid.t(j));
    rep.forms = closed_form_second_form(grid);
    rep.H = mean_curvature(rep.forms);
    auto [Kext, K] = gauss_curvature(rep.forms);
    rep.K_ext = std::move(Kext);
    rep.K = std::move(K);
    rep.min_res = minimality_residual(grid);
    rep.flat_res = flatness_residual(grid);
    rep.umb_defect = umbilicity_defect(rep.forms);
    rep.N = closed_form_normal(grid);
    return rep;
}

struct GeometrySummary {
    SummaryStats F, H, K, K_ext, min_res, umb_defect;
    bool minimal = false;     ///< |H|_inf <= 1e-6
    bool flat = false;        ///< |K|_inf <= 1e-6
    bool cmc = false;         ///< stdev(H) <= 1e-6
    bool constant_F = false;  ///< stdev(F) <= 1e-6
    double min_umb_defect = 0.0;
};

inline GeometrySummary summarize(const GeometryReport& rep) {
    GeometrySummary s;
    s.F = summarize(rep.forms.F);
    s.H = summarize(rep.H);
    s.K = summarize(rep.K);
    s.K_ext = summarize(rep.K_ext);
    s.min_res = summarize(rep.min_res);
    s.umb_defect = summarize(rep.umb_defect);
    s.minimal = s.H.abs_max <= 1e-6;
    s.flat = s.K.abs_max <= 1e-6;
    s.cmc = s.H.stdev <= 1e-6;
    s.constant_F = s.F.stdev <= 1e-6;
    s.min_umb_defect = s.umb_defect.min;
    return s;
}

// ---------------------------------------------------------------------------
// Euclidean additive translation surfaces X(s, t) = alpha(s) + beta(t).
// ---------------------------------------------------------------------------

/**
 * @brief Geometry of X = alpha + beta in R^3: E = G = 1, F = <t_a, t_b>,
 *        f = 0, normal cross(t_b, t_a)/sqrt(1 - F^2), e = kappa_a <n_a, N>,
 *        g = kappa_b <n_b, N>.
 */
struct R3SurfaceReport {
    std::size_t ns = 0, nt = 0;
    std::vector<double> s, t;
    std::vector<double> F, e, g;  ///< f == 0 identically
    std::vector<double> H, K;
    std::vector<Vec3> N;

    std::size_t idx(std::size_t i, std::size_t j) const { return i * nt + j; }
};

inline R3SurfaceReport r3_translation_surface(const SampledCurveR3& alpha,
                                              const SampledCurveR3& beta,
                                              double delta = kDefaultRegularityMargin) {
    R3SurfaceReport rep;
    rep.ns = alpha.size();
    rep.nt = beta.size();
    rep.s = alpha.s;
    rep.t = beta.s;
    const std::size_t n = rep.ns * rep.nt;
    rep.F.resize(n);
    rep.e.assign(n, 0.0);
    rep.g.assign(n, 0.0);
    rep.H.resize(n);
    rep.K.resize(n);
    rep.N.resize(n);
    std::size_t bad = 0;
    std::string offenders;
    for (std::size_t i = 0; i < rep.ns; ++i)
        for (std::size_t j = 0; j < rep.nt; ++j) {
            const std::size_t q = rep.idx(i, j);
            const double F = dot(alpha.t[i], beta.t[j]);
            rep.F[q] = F;
            if (std::abs(F) > 1.0 - delta) {
                if (bad < 10)
                    offenders += " (s=" + std::to_string(alpha.s[i]) +
                                 ", t=" + std::to_string(beta.s[j]) + ")";
                ++bad;
                continue;
            }
            const double root = std::sqrt(1.0 - F * F);
            const Vec3 N = cross(beta.t[j], alpha.t[i]) / root;
            rep.N[q] = N;
            if (alpha.has_frame) rep.e[q] = alpha.kappa[i] * dot(alpha.n[i], N);
            if (beta.has_frame) rep.g[q] = beta.kappa[j] * dot(beta.n[j], N);
            rep.H[q] = (rep.e[q] + rep.g[q]) / (2.0 * (1.0 - F * F));
            rep.K[q] = rep.e[q] * rep.g[q] / (1.0 - F * F);
        }
    if (bad > 0)
        throw RegularityViolation("flat-space surface fails |F| <= 1 - delta at " +
                                  std::to_string(bad) + " node(s); first offenders:" + offenders);
    return rep;
}

} // namespace s3surf

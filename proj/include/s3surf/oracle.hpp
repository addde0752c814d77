#pragma once
/**
 * @file oracle.hpp
 * @brief Independent finite-difference measurement of surface geometry.
 *
 * Everything here works from a raw grid of sample points only — no frame
 * fields, no closed forms — so it can adjudicate the analytic formulas.
 * Central differences of second order on interior nodes; the normal comes
 * from Gram–Schmidt of the ambient basis against the tangent span and is
 * sign-aligned to a caller-provided reference field when one is given.
 */

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <vector>

#include "s3surf/curve.hpp"
#include "s3surf/curve_r3.hpp"
#include "s3surf/errors.hpp"
#include "s3surf/linalg.hpp"
#include "s3surf/quaternion.hpp"

namespace s3surf {

/// Row-major grid of surface points X(s_i, t_j) = alpha(s_i) * beta(t_j).
inline std::vector<Quat> product_grid(const SampledCurve& a, const SampledCurve& b) {
    std::vector<Quat> X;
    X.reserve(a.size() * b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) X.push_back(qmul(a.alpha[i], b.alpha[j]));
    return X;
}

/// Row-major grid of surface points X(s_i, t_j) = alpha(s_i) + beta(t_j).
inline std::vector<Vec3> sum_grid(const SampledCurveR3& a, const SampledCurveR3& b) {
    std::vector<Vec3> X;
    X.reserve(a.size() * b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) X.push_back(a.pos[i] + b.pos[j]);
    return X;
}

/// Every stride-th node of a row-major grid in both directions.
template <class T>
std::vector<T> subsample_grid(const std::vector<T>& X, std::size_t ns, std::size_t nt,
                              std::size_t stride) {
    std::vector<T> out;
    for (std::size_t i = 0; i < ns; i += stride)
        for (std::size_t j = 0; j < nt; j += stride) out.push_back(X[i * nt + j]);
    return out;
}

/**
 * @brief Finite-difference fundamental forms on the interior nodes of a grid.
 *
 * Grids are row-major ns x nt; outputs cover interior nodes only, i.e. they
 * are (ns-2) x (nt-2) and out-node (i, j) corresponds to in-node
 * (i+1, j+1).
 */
struct OracleForms {
    std::size_t ns = 0, nt = 0;  ///< interior-node extents
    double h_s = 0.0, h_t = 0.0;
    std::vector<double> E, F, G, e, f, g, H, K_ext;
    std::vector<Quat> N;

    std::size_t idx(std::size_t i, std::size_t j) const { return i * nt + j; }
};

struct OracleFormsR3 {
    std::size_t ns = 0, nt = 0;
    double h_s = 0.0, h_t = 0.0;
    std::vector<double> E, F, G, e, f, g, H, K_ext;
    std::vector<Vec3> N;

    std::size_t idx(std::size_t i, std::size_t j) const { return i * nt + j; }
};

namespace detail {

inline Quat remove_span(Quat v, const Quat* basis[], int count) {
    for (int k = 0; k < count; ++k) v = v - dot(v, *basis[k]) * (*basis[k]);
    return v;
}

inline Vec3 remove_span3(Vec3 v, const Vec3* basis[], int count) {
    for (int k = 0; k < count; ++k) v = v - dot(v, *basis[k]) * (*basis[k]);
    return v;
}

} // namespace detail

/**
 * @brief S^3 ambient: N is the unit vector orthogonal to span{X, X_s, X_t}.
 * @param refN optional full-grid (ns x nt) reference normals used only to fix
 *        the sign of N node-by-node.
 */
inline OracleForms fd_fundamental_forms(const std::vector<Quat>& X, std::size_t ns,
                                        std::size_t nt, double hs, double ht,
                                        const std::vector<Quat>* refN = nullptr) {
    if (ns < 5 || nt < 5)
        throw TooFewSamples("finite-difference forms need a grid of at least 5x5 nodes");
    OracleForms o;
    o.ns = ns - 2;
    o.nt = nt - 2;
    o.h_s = hs;
    o.h_t = ht;
    const std::size_t n = o.ns * o.nt;
    o.E.resize(n);
    o.F.resize(n);
    o.G.resize(n);
    o.e.resize(n);
    o.f.resize(n);
    o.g.resize(n);
    o.H.resize(n);
    o.K_ext.resize(n);
    o.N.resize(n);

    const Quat basis[4] = {kE1, kE2, kE3, kE4};
    auto at = [&](std::size_t i, std::size_t j) -> const Quat& { return X[i * nt + j]; };
    Quat prevN = Quat{0, 0, 0, 0};

    for (std::size_t i = 1; i + 1 < ns; ++i)
        for (std::size_t j = 1; j + 1 < nt; ++j) {
            const Quat Xc = at(i, j);
            const Quat Xs = (at(i + 1, j) - at(i - 1, j)) / (2.0 * hs);
            const Quat Xt = (at(i, j + 1) - at(i, j - 1)) / (2.0 * ht);
            const Quat Xss = (at(i + 1, j) - 2.0 * Xc + at(i - 1, j)) / (hs * hs);
            const Quat Xtt = (at(i, j + 1) - 2.0 * Xc + at(i, j - 1)) / (ht * ht);
            const Quat Xst = (at(i + 1, j + 1) - at(i + 1, j - 1) - at(i - 1, j + 1) +
                              at(i - 1, j - 1)) /
                             (4.0 * hs * ht);

            const double E = dot(Xs, Xs), F = dot(Xs, Xt), G = dot(Xt, Xt);
            if (std::sqrt(std::max(0.0, E * G - F * F)) < 1e-8)
                throw DegenerateTangents("tangents are parallel at an interior node");

            // Orthonormal basis of span{X, X_s, X_t}.
            const Quat u1 = normalized(Xc);
            Quat u2 = Xs - dot(Xs, u1) * u1;
            u2 = normalized(u2);
            const Quat* span12[2] = {&u1, &u2};
            Quat u3 = detail::remove_span(Xt, span12, 2);
            u3 = normalized(u3);
            const Quat* span[3] = {&u1, &u2, &u3};

            Quat bestN{0, 0, 0, 0};
            double bestNorm = -1.0;
            for (const Quat& b : basis) {
                const Quat cand = detail::remove_span(b, span, 3);
                const double nn = norm(cand);
                if (nn > bestNorm) {
                    bestNorm = nn;
                    bestN = cand;
                }
            }
            Quat N = normalized(bestN);
            if (refN != nullptr) {
                if (dot(N, (*refN)[i * nt + j]) < 0.0) N = -N;
            } else if (norm(prevN) > 0.5 && dot(N, prevN) < 0.0) {
                N = -N;
            }
            prevN = N;

            const std::size_t q = o.idx(i - 1, j - 1);
            o.E[q] = E;
            o.F[q] = F;
            o.G[q] = G;
            o.e[q] = dot(Xss, N);
            o.f[q] = dot(Xst, N);
            o.g[q] = dot(Xtt, N);
            const double W = E * G - F * F;
            o.H[q] = (o.e[q] * G - 2.0 * o.f[q] * F + o.g[q] * E) / (2.0 * W);
            o.K_ext[q] = (o.e[q] * o.g[q] - o.f[q] * o.f[q]) / W;
            o.N[q] = N;
        }
    return o;
}

/// Euclidean ambient: N is the unit vector orthogonal to span{X_s, X_t}.
inline OracleFormsR3 fd_fundamental_forms(const std::vector<Vec3>& X, std::size_t ns,
                                          std::size_t nt, double hs, double ht,
                                          const std::vector<Vec3>* refN = nullptr) {
    if (ns < 5 || nt < 5)
        throw TooFewSamples("finite-difference forms need a grid of at least 5x5 nodes");
    OracleFormsR3 o;
    o.ns = ns - 2;
    o.nt = nt - 2;
    o.h_s = hs;
    o.h_t = ht;
    const std::size_t n = o.ns * o.nt;
    o.E.resize(n);
    o.F.resize(n);
    o.G.resize(n);
    o.e.resize(n);
    o.f.resize(n);
    o.g.resize(n);
    o.H.resize(n);
    o.K_ext.resize(n);
    o.N.resize(n);

    const Vec3 basis[3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    auto at = [&](std::size_t i, std::size_t j) -> const Vec3& { return X[i * nt + j]; };
    Vec3 prevN{0, 0, 0};

    for (std::size_t i = 1; i + 1 < ns; ++i)
        for (std::size_t j = 1; j + 1 < nt; ++j) {
            const Vec3 Xc = at(i, j);
            const Vec3 Xs = (at(i + 1, j) - at(i - 1, j)) / (2.0 * hs);
            const Vec3 Xt = (at(i, j + 1) - at(i, j - 1)) / (2.0 * ht);
            const Vec3 Xss = (at(i + 1, j) - 2.0 * Xc + at(i - 1, j)) / (hs * hs);
            const Vec3 Xtt = (at(i, j + 1) - 2.0 * Xc + at(i, j - 1)) / (ht * ht);
            const Vec3 Xst = (at(i + 1, j + 1) - at(i + 1, j - 1) - at(i - 1, j + 1) +
                              at(i - 1, j - 1)) /
                             (4.0 * hs * ht);

            const double E = dot(Xs, Xs), F = dot(Xs, Xt), G = dot(Xt, Xt);
            if (norm(cross(Xs, Xt)) < 1e-8)
                throw DegenerateTangents("tangents are parallel at an interior node");

            const Vec3 u1 = normalized(Xs);
            const Vec3* span1[1] = {&u1};
            Vec3 u2 = detail::remove_span3(Xt, span1, 1);
            u2 = normalized(u2);
            const Vec3* span[2] = {&u1, &u2};

            Vec3 bestN{0, 0, 0};
            double bestNorm = -1.0;
            for (const Vec3& b : basis) {
                const Vec3 cand = detail::remove_span3(b, span, 2);
                const double nn = norm(cand);
                if (nn > bestNorm) {
                    bestNorm = nn;
                    bestN = cand;
                }
            }
            Vec3 N = normalized(bestN);
            if (refN != nullptr) {
                if (dot(N, (*refN)[i * nt + j]) < 0.0) N = -N;
            } else if (norm(prevN) > 0.5 && dot(N, prevN) < 0.0) {
                N = -N;
            }
            prevN = N;

            const std::size_t q = o.idx(i - 1, j - 1);
            o.E[q] = E;
            o.F[q] = F;
            o.G[q] = G;
            o.e[q] = dot(Xss, N);
            o.f[q] = dot(Xst, N);
            o.g[q] = dot(Xtt, N);
            const double W = E * G - F * F;
            o.H[q] = (o.e[q] * G - 2.0 * o.f[q] * F + o.g[q] * E) / (2.0 * W);
            o.K_ext[q] = (o.e[q] * o.g[q] - o.f[q] * o.f[q]) / W;
            o.N[q] = N;
        }
    return o;
}

/// Principal curvatures from the Weingarten map of (E, F, G, e, f, g).
struct PrincipalCurvatures {
    std::vector<double> lambda1, lambda2;  ///< lambda1 >= lambda2
};

template <class Forms>
PrincipalCurvatures shape_operator(const Forms& forms) {
    PrincipalCurvatures pc;
    const std::size_t n = forms.E.size();
    pc.lambda1.resize(n);
    pc.lambda2.resize(n);
    for (std::size_t q = 0; q < n; ++q) {
        const double W = forms.E[q] * forms.G[q] - forms.F[q] * forms.F[q];
        const double m = (forms.e[q] * forms.G[q] - 2.0 * forms.f[q] * forms.F[q] +
                          forms.g[q] * forms.E[q]) /
                         (2.0 * W);
        const double d = (forms.e[q] * forms.g[q] - forms.f[q] * forms.f[q]) / W;
        const double disc = std::sqrt(std::max(0.0, m * m - d));
        pc.lambda1[q] = m + disc;
        pc.lambda2[q] = m - disc;
    }
    return pc;
}

/// Observed convergence order from errors at stencil widths h and h/2.
inline double richardson_order(double err_coarse, double err_fine) {
    if (err_fine <= 0.0) return std::numeric_limits<double>::infinity();
    if (err_coarse <= 0.0) return 0.0;
    return std::log2(err_coarse / err_fine);
}

} // namespace s3surf

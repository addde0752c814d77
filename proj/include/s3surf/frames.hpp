#pragma once
/**
 * @file frames.hpp
 * @brief Left and right quaternionic frames of a sphere curve, their shifted
 *        Frenet-type ODEs, and the geometry of their traces on the imaginary
 *        unit sphere.
 *
 * For a unit-speed curve alpha with Frenet rows (alpha, t, n, b):
 *
 *   left:   T = conj(alpha) t,  N = conj(alpha) n,  B = conj(alpha) b
 *   right:  T^ = alpha conj(t), N^ = alpha conj(n), B^ = alpha conj(b)
 *
 * All six fields are purely imaginary unit quaternions.  They satisfy the
 * product identities (T = conj(b) n, ..., T^ = -b conj(n), ...) and the
 * shifted ODEs T' = kappa N, N' = -kappa T + (tau -+ 1) B, B' = -(tau -+ 1) N
 * with "-" on the left side and "+" on the right side.
 */

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "s3surf/curve.hpp"
#include "s3surf/errors.hpp"
#include "s3surf/linalg.hpp"
#include "s3surf/quaternion.hpp"

namespace s3surf {

enum class Side { Left, Right };

struct QuatFrameSamples {
    Side side = Side::Left;
    std::vector<Quat> T, N, B;  ///< N, B empty for geodesic parents
    bool has_NB = false;

    std::size_t size() const { return T.size(); }
};

/// Throws MissingFrame unless the frame set carries N and B.
inline void require_full(const QuatFrameSamples& f) {
    if (!f.has_NB)
        throw MissingFrame("frame N/B requested for a geodesic curve (kappa == 0)");
}

inline QuatFrameSamples left_frames(const SampledCurve& c) {
    QuatFrameSamples out;
    out.side = Side::Left;
    out.has_NB = c.has_frame;
    out.T.reserve(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        out.T.push_back(qmul(qconj(c.alpha[i]), c.t[i]));
        if (c.has_frame) {
            out.N.push_back(qmul(qconj(c.alpha[i]), c.n[i]));
            out.B.push_back(qmul(qconj(c.alpha[i]), c.b[i]));
        }
    }
    return out;
}

inline QuatFrameSamples right_frames(const SampledCurve& c) {
    QuatFrameSamples out;
    out.side = Side::Right;
    out.has_NB = c.has_frame;
    out.T.reserve(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        out.T.push_back(qmul(c.alpha[i], qconj(c.t[i])));
        if (c.has_frame) {
            out.N.push_back(qmul(c.alpha[i], qconj(c.n[i])));
            out.B.push_back(qmul(c.alpha[i], qconj(c.b[i])));
        }
    }
    return out;
}

struct FrameIdentityResiduals {
    double T = 0.0, N = 0.0, B = 0.0;

    double max() const { return std::max(T, std::max(N, B)); }
};

/**
 * @brief Pointwise residuals of the frame product identities.
 *
 * Left side:  T = conj(b) n,    N = conj(t) b,    B = conj(n) t.
 * Right side: T^ = -b conj(n),  N^ = -t conj(b),  B^ = -n conj(t).
 */
inline FrameIdentityResiduals frame_identity_residuals(const SampledCurve& c, Side side) {
    if (!c.has_frame)
        throw MissingFrame("frame identities need (n, b); curve is a geodesic");
    FrameIdentityResiduals r;
    for (std::size_t i = 0; i < c.size(); ++i) {
        Quat viaT, viaN, viaB, defT, defN, defB;
        if (side == Side::Left) {
            defT = qmul(qconj(c.alpha[i]), c.t[i]);
            defN = qmul(qconj(c.alpha[i]), c.n[i]);
            defB = qmul(qconj(c.alpha[i]), c.b[i]);
            viaT = qmul(qconj(c.b[i]), c.n[i]);
            viaN = qmul(qconj(c.t[i]), c.b[i]);
            viaB = qmul(qconj(c.n[i]), c.t[i]);
        } else {
            defT = qmul(c.alpha[i], qconj(c.t[i]));
            defN = qmul(c.alpha[i], qconj(c.n[i]));
            defB = qmul(c.alpha[i], qconj(c.b[i]));
            viaT = -qmul(c.b[i], qconj(c.n[i]));
            viaN = -qmul(c.t[i], qconj(c.b[i]));
            viaB = -qmul(c.n[i], qconj(c.t[i]));
        }
        r.T = std::max(r.T, norm(defT - viaT));
        r.N = std::max(r.N, norm(defN - viaN));
        r.B = std::max(r.B, norm(defB - viaB));
    }
    return r;
}

struct FrameOdeResiduals {
    double T = 0.0, N = 0.0, B = 0.0;

    double max() const { return std::max(T, std::max(N, B)); }
};

/**
 * @brief Central-difference residuals of the shifted frame ODEs over the
 *        interior nodes; the torsion shift is -1 (left) or +1 (right).
 */
inline FrameOdeResiduals frame_ode_residuals(const SampledCurve& c, const QuatFrameSamples& f) {
    require_full(f);
    if (c.size() < 5)
        throw TooFewSamples("frame_ode_residuals: need at least 5 samples");
    const double h = c.step();
    const double shift = (f.side == Side::Left) ? -1.0 : +1.0;
    FrameOdeResiduals r;
    for (std::size_t i = 1; i + 1 < c.size(); ++i) {
        const double k = c.kappa[i];
        const double teff = c.tau[i] + shift;
        const Quat dT = (f.T[i + 1] - f.T[i - 1]) / (2.0 * h);
        const Quat dN = (f.N[i + 1] - f.N[i - 1]) / (2.0 * h);
        const Quat dB = (f.B[i + 1] - f.B[i - 1]) / (2.0 * h);
        r.T = std::max(r.T, norm(dT - k * f.N[i]));
        r.N = std::max(r.N, norm(dN - (-k * f.T[i] + teff * f.B[i])));
        r.B = std::max(r.B, norm(dB - (-teff * f.N[i])));
    }
    return r;
}

/// Least-squares plane fit through a point cloud: unit normal of the
/// covariance plane (smallest principal direction).
inline Vec3 fit_plane_normal(const std::vector<Vec3>& pts, Vec3& centroid_out) {
    Vec3 m{0, 0, 0};
    for (const auto& p : pts) m += p;
    m = m / static_cast<double>(pts.size());
    Sym3 cov;
    for (const auto& p : pts) {
        const Vec3 d = p - m;
        cov.a00 += d.x * d.x;
        cov.a01 += d.x * d.y;
        cov.a02 += d.x * d.z;
        cov.a11 += d.y * d.y;
        cov.a12 += d.y * d.z;
        cov.a22 += d.z * d.z;
    }
    centroid_out = m;
    return eigen_sym3(cov).vectors[0];
}

struct TraceGeometry {
    std::vector<double> s;       ///< interior nodes carrying khat
    std::vector<double> khat;    ///< spherical curvature of the T-trace
    Vec3 pole{0, 0, 1};          ///< fitted axis of the T-trace circle
    Vec3 pole_B{0, 0, 1};        ///< fitted axis of the B-trace circle
    std::vector<double> cos_T;   ///< <T, pole> at every node
    std::vector<double> cos_B;   ///< <B, pole> at every node
    bool degenerate = false;     ///< T-trace is a great circle (axis sign from B)
};

/**
 * @brief Curvature and axis of the tangent-frame trace on the imaginary
 *        2-sphere.
 *
 * The trace parameter is shat with d(shat) = kappa ds; the spherical
 * curvature is khat = <T_shatshat + T, B>, constant (= b) for general
 * helices with tau = b kappa + 1 on the left side (tau = b kappa - 1 on the
 * right).  The axis is a least-squares plane fit; its sign follows the trace
 * centroid, or the binormal direction when the trace is a great circle
 * (degenerate case; strict mode raises DegenerateTrace instead).
 */
inline TraceGeometry trace_geometry(const QuatFrameSamples& f, const SampledCurve& c,
                                    bool strict = false) {
    require_full(f);
    if (c.size() < 5) throw TooFewSamples("trace_geometry: need at least 5 samples");
    const double h = c.step();

    TraceGeometry out;
    for (std::size_t i = 1; i + 1 < c.size(); ++i) {
        const double k = c.kappa[i];
        const double kprime = (c.kappa[i + 1] - c.kappa[i - 1]) / (2.0 * h);
        const Quat T1 = (f.T[i + 1] - f.T[i - 1]) / (2.0 * h);
        const Quat T2 = (f.T[i + 1] - 2.0 * f.T[i] + f.T[i - 1]) / (h * h);
        // d^2T/dshat^2 = T'' / kappa^2 - T' kappa' / kappa^3
        const Quat Tss = T2 / (k * k) - (kprime / (k * k * k)) * T1;
        out.s.push_back(c.s[i]);
        out.khat.push_back(dot(Tss + f.T[i], f.B[i]));
    }

    std::vector<Vec3> tpts, bpts;
    tpts.reserve(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        tpts.push_back(imag3(f.T[i]));
        bpts.push_back(imag3(f.B[i]));
    }
    Vec3 mT, mB;
    Vec3 uT = fit_plane_normal(tpts, mT);
    // Out-of-plane offset of the centroid: cos(cone angle) for a small
    // circle, ~0 for any arc of a great circle.
    const double offT = dot(mT, uT);
    if (std::abs(offT) > 1e-6) {
        if (offT < 0.0) uT = -uT;
    } else {
        out.degenerate = true;
        if (strict)
            throw DegenerateTrace(
                "tangent trace is a great circle (shifted torsion vanishes); axis sign is "
                "ambiguous");
        if (dot(imag3(f.B[0]), uT) < 0.0) uT = -uT;
    }
    out.pole = uT;

    // B-trace axis: when B is constant the trace is a single point and the
    // axis is B itself; otherwise fit the plane like for T.
    double spreadB = 0.0;
    for (const auto& p : bpts) spreadB = std::max(spreadB, norm(p - bpts.front()));
    if (spreadB < 1e-8) {
        out.pole_B = normalized(bpts.front());
    } else {
        Vec3 uB = fit_plane_normal(bpts, mB);
        const double offB = dot(mB, uB);
        if (std::abs(offB) > 1e-6) {
            if (offB < 0.0) uB = -uB;
        } else if (dot(uB, uT) < 0.0) {
            uB = -uB;
        }
        out.pole_B = uB;
    }

    out.cos_T.reserve(c.size());
    out.cos_B.reserve(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        out.cos_T.push_back(dot(imag3(f.T[i]), out.pole));
        out.cos_B.push_back(dot(imag3(f.B[i]), out.pole));
    }
    return out;
}

/// Max |w-component| over all frame fields: the traces must stay imaginary.
inline double max_real_part(const QuatFrameSamples& f) {
    double worst = 0.0;
    for (const auto& q : f.T) worst = std::max(worst, std::abs(q.w));
    for (const auto& q : f.N) worst = std::max(worst, std::abs(q.w));
    for (const auto& q : f.B) worst = std::max(worst, std::abs(q.w));
    return worst;
}

/// Max orthonormality defect of the (T, N, B) triple over all nodes.
inline double frame_orthonormality_defect(const QuatFrameSamples& f) {
    require_full(f);
    double worst = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
        const Quat* rows[3] = {&f.T[i], &f.N[i], &f.B[i]};
        for (int r = 0; r < 3; ++r)
            for (int c2 = 0; c2 < 3; ++c2)
                worst = std::max(worst,
                                 std::abs(dot(*rows[r], *rows[c2]) - (r == c2 ? 1.0 : 0.0)));
    }
    return worst;
}

} // namespace s3surf

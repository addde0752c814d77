#pragma once
/**
 * @file quaternion.hpp
 * @brief Hamilton quaternion algebra on R^4 with refinements for the unit
 *        sphere S^3 and the purely imaginary unit sphere.
 *
 * Components are stored as (w, x, y, z) = w + i x + j y + k z.  The same type
 * doubles as a plain 4-vector: S^3 frame fields are quaternion products, so a
 * unified type keeps the algebra friction-free.
 */

#include <cmath>
#include <string>

#include "s3surf/errors.hpp"
#include "s3surf/linalg.hpp"

namespace s3surf {

inline constexpr double kUnitTol = 1e-12;        ///< tolerance for algebraic unit checks
inline constexpr double kRenormalizeTol = 1e-8;  ///< max drift UnitQuat will absorb

struct Quat {
    double w = 0.0, x = 0.0, y = 0.0, z = 0.0;

    friend constexpr Quat operator+(Quat a, Quat b) {
        return {a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z};
    }
    friend constexpr Quat operator-(Quat a, Quat b) {
        return {a.w - b.w, a.x - b.x, a.y - b.y, a.z - b.z};
    }
    friend constexpr Quat operator*(double s, Quat q) { return {s * q.w, s * q.x, s * q.y, s * q.z}; }
    friend constexpr Quat operator*(Quat q, double s) { return s * q; }
    friend constexpr Quat operator/(Quat q, double s) { return {q.w / s, q.x / s, q.y / s, q.z / s}; }
    constexpr Quat operator-() const { return {-w, -x, -y, -z}; }
    Quat& operator+=(Quat o) { w += o.w; x += o.x; y += o.y; z += o.z; return *this; }
    Quat& operator-=(Quat o) { w -= o.w; x -= o.x; y -= o.y; z -= o.z; return *this; }
};

inline constexpr Quat kE1{1, 0, 0, 0};
inline constexpr Quat kE2{0, 1, 0, 0};
inline constexpr Quat kE3{0, 0, 1, 0};
inline constexpr Quat kE4{0, 0, 0, 1};

/// Euclidean inner product of R^4 (bi-invariant metric of S^3).
constexpr double dot(Quat a, Quat b) { return a.w * b.w + a.x * b.x + a.y * b.y + a.z * b.z; }

inline double norm(Quat a) { return std::sqrt(dot(a, a)); }

/// Hamilton product, row-by-row.
constexpr Quat qmul(Quat a, Quat b) {
    return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
            a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
            a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

constexpr Quat qconj(Quat a) { return {a.w, -a.x, -a.y, -a.z}; }

/// Multiplicative inverse conj(a)/|a|^2; throws ZeroQuaternion near zero.
inline Quat qinv(Quat a) {
    const double n2 = dot(a, a);
    if (!(n2 > 1e-300)) throw ZeroQuaternion("qinv: |a|^2 = " + std::to_string(n2));
    return qconj(a) / n2;
}

inline Quat normalized(Quat a) {
    const double n = norm(a);
    if (!(n > 1e-300)) throw ZeroQuaternion("normalized: zero quaternion");
    return a / n;
}

/// Drop the real part: the standard identification of pure quaternions with R^3.
constexpr Vec3 imag3(Quat a) { return {a.x, a.y, a.z}; }

/// Embed an R^3 vector as a pure quaternion.
constexpr Quat embed3(Vec3 v) { return {0.0, v.x, v.y, v.z}; }

/**
 * @brief Unit quaternion (point of S^3).
 *
 * Construction renormalizes inputs whose norm drifted by at most
 * kRenormalizeTol (absorbing integrator round-off) and rejects anything
 * farther from the sphere — a large violation is a bug, not drift.
 */
class UnitQuat {
public:
    explicit UnitQuat(Quat q) : q_(check(q)) {}
    const Quat& value() const { return q_; }
    operator const Quat&() const { return q_; }

private:
    static Quat check(Quat q) {
        const double n = norm(q);
        if (std::abs(n - 1.0) > kRenormalizeTol)
            throw ZeroQuaternion("UnitQuat: |q| = " + std::to_string(n) +
                                 " deviates from 1 beyond renormalization tolerance");
        return q / n;
    }
    Quat q_;
};

/**
 * @brief Purely imaginary unit quaternion (point of the 2-sphere of
 *        imaginary directions inside S^3).
 */
class PureUnit {
public:
    explicit PureUnit(Quat q) : q_(check(q)) {}
    const Quat& value() const { return q_; }
    operator const Quat&() const { return q_; }

private:
    static Quat check(Quat q) {
        if (std::abs(q.w) > kUnitTol)
            throw NotOrthogonal("PureUnit: real part " + std::to_string(q.w) + " exceeds tolerance");
        const double n = norm(q);
        if (std::abs(n - 1.0) > kRenormalizeTol)
            throw ZeroQuaternion("PureUnit: |q| = " + std::to_string(n) + " not a unit vector");
        return q / n;
    }
    Quat q_;
};

/**
 * @brief Product of two orthogonal pure unit quaternions, which is again pure
 *        and equals the 3-vector cross product of the imaginary parts.
 *
 * Throws NotOrthogonal when |<a,b>| exceeds 1e-10: the identity only holds
 * for orthogonal arguments.
 */
inline Quat pure_product_as_cross(const PureUnit& a, const PureUnit& b) {
    if (std::abs(dot(a.value(), b.value())) > 1e-10)
        throw NotOrthogonal("pure_product_as_cross: arguments not orthogonal, <a,b> = " +
                            std::to_string(dot(a.value(), b.value())));
    return embed3(cross(imag3(a.value()), imag3(b.value())));
}

} // namespace s3surf

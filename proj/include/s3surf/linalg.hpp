#pragma once
/**
 * @file linalg.hpp
 * @brief Small dense linear algebra used across the library: 3-vectors,
 *        3x3 symmetric eigen-decomposition (Jacobi), and 4x4 determinants.
 *
 * Deliberately minimal — the library only ever needs fixed tiny sizes, so a
 * dependency-free implementation keeps the header-only build self-contained.
 */

#include <array>
#include <cmath>
#include <cstddef>

namespace s3surf {

/// Plain 3-vector for the R^3 side of the correspondence and for projections.
struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;

    friend constexpr Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
    friend constexpr Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
    friend constexpr Vec3 operator*(double s, Vec3 v) { return {s * v.x, s * v.y, s * v.z}; }
    friend constexpr Vec3 operator*(Vec3 v, double s) { return s * v; }
    friend constexpr Vec3 operator/(Vec3 v, double s) { return {v.x / s, v.y / s, v.z / s}; }
    constexpr Vec3 operator-() const { return {-x, -y, -z}; }
    Vec3& operator+=(Vec3 o) { x += o.x; y += o.y; z += o.z; return *this; }
};

constexpr double dot(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

constexpr Vec3 cross(Vec3 a, Vec3 b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline double norm(Vec3 v) { return std::sqrt(dot(v, v)); }

inline Vec3 normalized(Vec3 v) {
    const double n = norm(v);
    return {v.x / n, v.y / n, v.z / n};
}

/// Row-major 3x3 symmetric matrix as a flat array {a00,a01,a02,a11,a12,a22}.
struct Sym3 {
    double a00 = 0, a01 = 0, a02 = 0, a11 = 0, a12 = 0, a22 = 0;
};

struct EigenSym3 {
    std::array<double, 3> values{};          ///< ascending order
    std::array<Vec3, 3> vectors{};           ///< unit, matching values
};

/**
 * @brief Cyclic Jacobi eigen-decomposition of a symmetric 3x3 matrix.
 *
 * A handful of sweeps drives all off-diagonal entries to machine zero for
 * 3x3 inputs; eigenpairs are returned sorted by ascending eigenvalue.
 */
inline EigenSym3 eigen_sym3(const Sym3& m) {
    double a[3][3] = {{m.a00, m.a01, m.a02}, {m.a01, m.a11, m.a12}, {m.a02, m.a12, m.a22}};
    double v[3][3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};

    for (int sweep = 0; sweep < 32; ++sweep) {
        double off = std::abs(a[0][1]) + std::abs(a[0][2]) + std::abs(a[1][2]);
        if (off == 0.0) break;
        for (int p = 0; p < 2; ++p) {
            for (int q = p + 1; q < 3; ++q) {
                if (std::abs(a[p][q]) < 1e-300) continue;
                const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (int k = 0; k < 3; ++k) {
                    const double akp = a[k][p], akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for (int k = 0; k < 3; ++k) {
                    const double apk = a[p][k], aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
                for (int k = 0; k < 3; ++k) {
                    const double vkp = v[k][p], vkq = v[k][q];
                    v[k][p] = c * vkp - s * vkq;
                    v[k][q] = s * vkp + c * vkq;
                }
            }
        }
    }

    EigenSym3 out;
    std::array<int, 3> order = {0, 1, 2};
    // insertion sort by eigenvalue
    for (int i = 1; i < 3; ++i)
        for (int j = i; j > 0 && a[order[j]][order[j]] < a[order[j - 1]][order[j - 1]]; --j)
            std::swap(order[j], order[j - 1]);
    for (int i = 0; i < 3; ++i) {
        const int k = order[i];
        out.values[static_cast<std::size_t>(i)] = a[k][k];
        out.vectors[static_cast<std::size_t>(i)] = Vec3{v[0][k], v[1][k], v[2][k]};
    }
    return out;
}

/// Determinant of a 4x4 matrix given as four row arrays.
inline double det4(const std::array<std::array<double, 4>, 4>& m) {
    auto det3 = [](double a, double b, double c, double d, double e, double f, double g,
                   double h, double i) {
        return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g);
    };
    double out = 0.0;
    for (int col = 0; col < 4; ++col) {
        double sub[9];
        int idx = 0;
        for (int r = 1; r < 4; ++r)
            for (int c = 0; c < 4; ++c)
                if (c != col) sub[idx++] = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
        const double minor =
            det3(sub[0], sub[1], sub[2], sub[3], sub[4], sub[5], sub[6], sub[7], sub[8]);
        out += ((col % 2 == 0) ? 1.0 : -1.0) * m[0][static_cast<std::size_t>(col)] * minor;
    }
    return out;
}

} // namespace s3surf

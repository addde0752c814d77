#pragma once
/**
 * @file stereo.hpp
 * @brief Stereographic projection of unit quaternions into flat 3-space.
 *
 * The projection pole is one of the eight signed coordinate axes.  A point
 * x projects to y = (x - <x,P> P) / (1 - <x,P>); the three coordinates of y
 * are read off along the non-pole axes in ascending index order, so e.g.
 * pole -e1 maps e1 to the origin and e2 to (1, 0, 0).  Points within 1e-3
 * of the pole are rejected (the map blows up there).
 */

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "s3surf/errors.hpp"
#include "s3surf/quaternion.hpp"

namespace s3surf {

/// Minimum allowed distance from any projected point to the pole.
inline constexpr double kPoleClearance = 1e-3;

/// The eight candidate poles in the order auto-selection scans them.
inline const std::vector<std::string>& pole_names() {
    static const std::vector<std::string> names = {"+e1", "-e1", "+e2", "-e2",
                                                   "+e3", "-e3", "+e4", "-e4"};
    return names;
}

inline Quat pole_from_name(const std::string& name) {
    static const std::array<Quat, 8> poles = {kE1, -kE1, kE2, -kE2, kE3, -kE3, kE4, -kE4};
    const auto& names = pole_names();
    for (std::size_t i = 0; i < names.size(); ++i)
        if (name == names[i]) return poles[i];
    throw ConfigError("unknown pole '" + name + "' (expected auto or one of +e1 -e1 +e2 -e2 " +
                      "+e3 -e3 +e4 -e4)");
}

/// Distance from x to the pole point on the sphere (chordal).
inline double pole_distance(const Quat& x, const Quat& pole) { return norm(x - pole); }

/**
 * @brief Pick the pole farthest from the data: maximize the minimum chordal
 *        distance over the eight candidates; ties resolve to the first name
 *        in pole_names() order.
 */
inline std::string choose_auto_pole(const std::vector<Quat>& points) {
    const auto& names = pole_names();
    std::string best = names.front();
    double best_min = -1.0;
    for (const auto& name : names) {
        const Quat p = pole_from_name(name);
        double worst = std::numeric_limits<double>::infinity();
        for (const auto& x : points) worst = std::min(worst, pole_distance(x, p));
        if (worst > best_min) {
            best_min = worst;
            best = name;
        }
    }
    return best;
}

namespace detail {

/// Indices of the three coordinate axes other than the pole axis, ascending.
inline std::array<std::size_t, 3> off_pole_axes(const Quat& pole) {
    const std::array<double, 4> c = {pole.w, pole.x, pole.y, pole.z};
    std::size_t axis = 0;
    for (std::size_t i = 0; i < 4; ++i)
        if (std::abs(c[i]) > 0.5) axis = i;
    std::array<std::size_t, 3> out{};
    std::size_t k = 0;
    for (std::size_t i = 0; i < 4; ++i)
        if (i != axis) out[k++] = i;
    return out;
}

} // namespace detail

/**
 * @brief Project one unit quaternion from the given pole.  Throws
 *        PoleCollision if x is within kPoleClearance of the pole.
 */
inline Vec3 stereographic_project(const Quat& x, const Quat& pole) {
    if (pole_distance(x, pole) < kPoleClearance) {
        std::ostringstream os;
        os << "point (" << x.w << ", " << x.x << ", " << x.y << ", " << x.z
           << ") lies within " << kPoleClearance << " of the projection pole";
        throw PoleCollision(os.str());
    }
    const double d = dot(x, pole);
    const Quat y = (x - pole * d) * (1.0 / (1.0 - d));
    const std::array<double, 4> c = {y.w, y.x, y.y, y.z};
    const auto axes = detail::off_pole_axes(pole);
    return Vec3{c[axes[0]], c[axes[1]], c[axes[2]]};
}

/**
 * @brief Project a batch; if any point collides with the pole, throw one
 *        PoleCollision listing up to ten offending indices.
 */
inline std::vector<Vec3> stereographic_project_all(const std::vector<Quat>& points,
                                                   const Quat& pole) {
    std::vector<std::size_t> offenders;
    for (std::size_t i = 0; i < points.size(); ++i)
        if (pole_distance(points[i], pole) < kPoleClearance) offenders.push_back(i);
    if (!offenders.empty()) {
        std::ostringstream os;
        os << offenders.size() << " point(s) lie within " << kPoleClearance
           << " of the projection pole; first offenders (index):";
        const std::size_t show = std::min<std::size_t>(offenders.size(), 10);
        for (std::size_t k = 0; k < show; ++k) os << ' ' << offenders[k];
        throw PoleCollision(os.str());
    }
    std::vector<Vec3> out;
    out.reserve(points.size());
    for (const auto& x : points) out.push_back(stereographic_project(x, pole));
    return out;
}

} // namespace s3surf

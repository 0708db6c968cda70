// Copyright 2026 The Topogate Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * Computational geometry for topological invariants: winding numbers of
 * planar polyline loops around puncture points, and signed solid angles
 * subtended by 3D polyline loops.
 */

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "topogate/errors.hpp"

namespace topogate::geometry {

inline constexpr double kOnPathTol = 1e-9;

struct Point2D {
    double x = 0.0;
    double y = 0.0;
};

struct Point3D {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

inline Point2D operator-(Point2D a, Point2D b) { return {a.x - b.x, a.y - b.y}; }
inline Point2D operator+(Point2D a, Point2D b) { return {a.x + b.x, a.y + b.y}; }
inline Point2D operator*(double s, Point2D a) { return {s * a.x, s * a.y}; }
inline double dot(Point2D a, Point2D b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point2D a, Point2D b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point2D a) { return std::hypot(a.x, a.y); }

inline Point3D operator-(Point3D a, Point3D b) {
    return {a.x - b.x, a.y - b.y, a.z - b.z};
}
inline Point3D operator+(Point3D a, Point3D b) {
    return {a.x + b.x, a.y + b.y, a.z + b.z};
}
inline Point3D operator*(double s, Point3D a) { return {s * a.x, s * a.y, s * a.z}; }
inline double dot(Point3D a, Point3D b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Point3D cross(Point3D a, Point3D b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(Point3D a) { return std::sqrt(dot(a, a)); }

inline bool finite(Point2D p) { return std::isfinite(p.x) && std::isfinite(p.y); }
inline bool finite(Point3D p) {
    return std::isfinite(p.x) && std::isfinite(p.y) && std::isfinite(p.z);
}

namespace detail {

template <class Point>
void validate_loop(const std::vector<Point>& vertices) {
    if (vertices.size() < 3) {
        throw std::invalid_argument("closed path needs at least 3 vertices");
    }
    for (const auto& v : vertices) {
        if (!finite(v)) {
            throw std::invalid_argument("closed path vertex is not finite");
        }
    }
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        const auto& a = vertices[i];
        const auto& b = vertices[(i + 1) % vertices.size()];
        if (norm(b - a) == 0.0) {
            throw std::invalid_argument(
                "closed path has coincident consecutive vertices at index " +
                std::to_string(i));
        }
    }
}

} // namespace detail

/// Polyline loop in the plane. Traversal order is vertex[i] -> vertex[i+1]
/// with an implicit closing segment from the last vertex back to the first.
class ClosedPath2D {
  public:
    explicit ClosedPath2D(std::vector<Point2D> vertices)
        : vertices_(std::move(vertices)) {
        detail::validate_loop(vertices_);
    }

    const std::vector<Point2D>& vertices() const { return vertices_; }
    std::size_t size() const { return vertices_.size(); }

    ClosedPath2D reversed() const {
        std::vector<Point2D> rev(vertices_.rbegin(), vertices_.rend());
        return ClosedPath2D(std::move(rev));
    }

  private:
    std::vector<Point2D> vertices_;
};

/// Polyline loop in 3D, closed implicitly like ClosedPath2D.
class ClosedPath3D {
  public:
    explicit ClosedPath3D(std::vector<Point3D> vertices)
        : vertices_(std::move(vertices)) {
        detail::validate_loop(vertices_);
    }

    const std::vector<Point3D>& vertices() const { return vertices_; }
    std::size_t size() const { return vertices_.size(); }

    ClosedPath3D reversed() const {
        std::vector<Point3D> rev(vertices_.rbegin(), vertices_.rend());
        return ClosedPath3D(std::move(rev));
    }

  private:
    std::vector<Point3D> vertices_;
};

/// Distance from point p to the segment [a, b].
inline double point_segment_distance(Point2D p, Point2D a, Point2D b) {
    const Point2D ab = b - a;
    const double len2 = dot(ab, ab);
    if (len2 == 0.0) {
        return norm(p - a);
    }
    const double t = std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
    return norm(p - (a + t * ab));
}

inline double point_segment_distance(Point3D p, Point3D a, Point3D b) {
    const Point3D ab = b - a;
    const double len2 = dot(ab, ab);
    if (len2 == 0.0) {
        return norm(p - a);
    }
    const double t = std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
    return norm(p - (a + t * ab));
}

/// Smallest distance from `point` to any segment of `path`.
inline double distance_to_path(const ClosedPath2D& path, Point2D point) {
    const auto& v = path.vertices();
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < v.size(); ++i) {
        best = std::min(best,
                        point_segment_distance(point, v[i], v[(i + 1) % v.size()]));
    }
    return best;
}

inline double distance_to_path(const ClosedPath3D& path, Point3D point) {
    const auto& v = path.vertices();
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < v.size(); ++i) {
        best = std::min(best,
                        point_segment_distance(point, v[i], v[(i + 1) % v.size()]));
    }
    return best;
}

/**
 * Signed number of counterclockwise turns of `path` around `point`.
 *
 * Computed by summing the signed angle subtended by every segment at the
 * point; the total is an integer multiple of 2*pi for any closed loop that
 * avoids the point. The sum is rounded to the nearest integer and the
 * residual is required to stay below 1e-6 turns. Repeated traversals
 * accumulate naturally (a loop listed twice has winding +-2).
 *
 * Throws PointOnPath if the point lies within `on_path_tol` of any segment.
 */
inline int winding_number(const ClosedPath2D& path, Point2D point,
                          double on_path_tol = kOnPathTol) {
    if (!finite(point)) {
        throw std::invalid_argument("winding_number: point is not finite");
    }
    if (distance_to_path(path, point) <= on_path_tol) {
        throw PointOnPath("winding_number: point lies on the path");
    }
    const auto& v = path.vertices();
    double total = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Point2D a = v[i] - point;
        const Point2D b = v[(i + 1) % v.size()] - point;
        total += std::atan2(cross(a, b), dot(a, b));
    }
    const double turns = total / (2.0 * std::numbers::pi);
    const double rounded = std::round(turns);
    if (std::abs(turns - rounded) >= 1e-6) {
        throw Error("winding_number: angle sum residual " +
                    std::to_string(std::abs(turns - rounded)) +
                    " turns; path is numerically degenerate at this point");
    }
    return static_cast<int>(rounded);
}

/// Winding numbers of one loop around a list of punctures. PointOnPath
/// carries the index of the first offending puncture.
inline std::vector<int> winding_vector(const ClosedPath2D& path,
                                       std::span<const Point2D> punctures,
                                       double on_path_tol = kOnPathTol) {
    std::vector<int> result;
    result.reserve(punctures.size());
    for (std::size_t i = 0; i < punctures.size(); ++i) {
        try {
            result.push_back(winding_number(path, punctures[i], on_path_tol));
        } catch (const PointOnPath&) {
            throw PointOnPath("winding_vector: puncture " + std::to_string(i) +
                                  " lies on the path",
                              i);
        }
    }
    return result;
}

/// True iff every obstacle keeps a distance strictly greater than `min_dist`
/// from every segment of the path.
inline bool path_clearance(const ClosedPath2D& path,
                           std::span<const Point2D> obstacles, double min_dist) {
    if (!(min_dist > 0.0)) {
        throw std::invalid_argument("path_clearance: min_dist must be positive");
    }
    for (const auto& obstacle : obstacles) {
        if (distance_to_path(path, obstacle) <= min_dist) {
            return false;
        }
    }
    return true;
}

namespace detail {

/// Orthonormal frame of the best-fit plane of a vertex set: centroid,
/// right-handed in-plane axes (u, v) and normal n = u x v. The normal is
/// the smallest-variance principal direction of the vertex cloud, with a
/// deterministic sign (largest-magnitude coordinate made positive).
struct PlaneFrame {
    Point3D centroid;
    Point3D u, v, n;
    double max_vertex_offset = 0.0; // largest |(p - centroid) . n|
};

/// Jacobi eigen-decomposition of a symmetric 3x3 matrix. Returns
/// eigenvalues ascending with matching eigenvectors (rows of `vecs`).
inline void symmetric_eigen3(std::array<std::array<double, 3>, 3> m,
                             std::array<double, 3>& vals,
                             std::array<std::array<double, 3>, 3>& vecs) {
    vecs = {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
    for (int sweep = 0; sweep < 50; ++sweep) {
        double off = std::abs(m[0][1]) + std::abs(m[0][2]) + std::abs(m[1][2]);
        if (off == 0.0) {
            break;
        }
        for (int p = 0; p < 2; ++p) {
            for (int q = p + 1; q < 3; ++q) {
                if (m[p][q] == 0.0) {
                    continue;
                }
                const double theta = (m[q][q] - m[p][p]) / (2.0 * m[p][q]);
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (int k = 0; k < 3; ++k) {
                    const double mkp = m[k][p], mkq = m[k][q];
                    m[k][p] = c * mkp - s * mkq;
                    m[k][q] = s * mkp + c * mkq;
                }
                for (int k = 0; k < 3; ++k) {
                    const double mpk = m[p][k], mqk = m[q][k];
                    m[p][k] = c * mpk - s * mqk;
                    m[q][k] = s * mpk + c * mqk;
                }
                for (int k = 0; k < 3; ++k) {
                    const double vpk = vecs[p][k], vqk = vecs[q][k];
                    vecs[p][k] = c * vpk - s * vqk;
                    vecs[q][k] = s * vpk + c * vqk;
                }
            }
        }
    }
    std::array<int, 3> order = {0, 1, 2};
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return m[a][a] < m[b][b]; });
    std::array<double, 3> sorted_vals;
    std::array<std::array<double, 3>, 3> sorted_vecs;
    for (int i = 0; i < 3; ++i) {
        sorted_vals[i] = m[order[i]][order[i]];
        sorted_vecs[i] = vecs[order[i]];
    }
    vals = sorted_vals;
    vecs = sorted_vecs;
}

inline PlaneFrame fit_plane(const std::vector<Point3D>& points) {
    PlaneFrame frame;
    const double inv = 1.0 / static_cast<double>(points.size());
    Point3D c{0, 0, 0};
    for (const auto& p : points) {
        c = c + p;
    }
    frame.centroid = inv * c;
    std::array<std::array<double, 3>, 3> cov{};
    for (const auto& p : points) {
        const Point3D d = p - frame.centroid;
        const std::array<double, 3> v = {d.x, d.y, d.z};
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) {
                cov[i][j] += inv * v[i] * v[j];
            }
        }
    }
    std::array<double, 3> vals;
    std::array<std::array<double, 3>, 3> vecs;
    symmetric_eigen3(cov, vals, vecs);
    Point3D n{vecs[0][0], vecs[0][1], vecs[0][2]};
    Point3D u{vecs[2][0], vecs[2][1], vecs[2][2]};
    const double nn = norm(n);
    n = (1.0 / nn) * n;
    // Deterministic normal sign: make the largest-magnitude coordinate
    // positive, so certifications and plane-limited solid angles agree on a
    // single orientation convention.
    const double ax = std::abs(n.x), ay = std::abs(n.y), az = std::abs(n.z);
    double lead = n.z;
    if (ax >= ay && ax >= az) {
        lead = n.x;
    } else if (ay >= az) {
        lead = n.y;
    }
    if (lead < 0.0) {
        n = -1.0 * n;
    }
    u = u - dot(u, n) * n;
    const double un = norm(u);
    if (un == 0.0) {
        // Degenerate cloud; pick any axis orthogonal to n.
        u = std::abs(n.x) < 0.9 ? cross(n, Point3D{1, 0, 0}) : cross(n, Point3D{0, 1, 0});
        u = (1.0 / norm(u)) * u;
    } else {
        u = (1.0 / un) * u;
    }
    frame.n = n;
    frame.u = u;
    frame.v = cross(n, u);
    for (const auto& p : points) {
        frame.max_vertex_offset =
            std::max(frame.max_vertex_offset, std::abs(dot(p - frame.centroid, n)));
    }
    return frame;
}

inline double bounding_diameter(const std::vector<Point3D>& points) {
    Point3D lo = points.front(), hi = points.front();
    for (const auto& p : points) {
        lo = {std::min(lo.x, p.x), std::min(lo.y, p.y), std::min(lo.z, p.z)};
        hi = {std::max(hi.x, p.x), std::max(hi.y, p.y), std::max(hi.z, p.z)};
    }
    return norm(hi - lo);
}

/// Winding of the path projected into the frame's (u, v) plane around the
/// projection of `point`. Precondition: configuration is planar.
inline int projected_winding(const ClosedPath3D& path, const PlaneFrame& frame,
                             Point3D point, double on_path_tol) {
    std::vector<Point2D> flat;
    flat.reserve(path.size());
    for (const auto& p : path.vertices()) {
        const Point3D d = p - frame.centroid;
        flat.push_back({dot(d, frame.u), dot(d, frame.v)});
    }
    const Point3D d = point - frame.centroid;
    return winding_number(ClosedPath2D(std::move(flat)),
                          {dot(d, frame.u), dot(d, frame.v)}, on_path_tol);
}

} // namespace detail

/**
 * Signed solid angle (steradians) subtended at `apex` by the closed loop.
 *
 * The loop is projected onto the unit sphere around the apex and fanned into
 * spherical triangles from the first vertex; each triangle contributes its
 * signed solid angle via the Van Oosterom-Strandberg formula
 *     Omega_t = 2 * atan2(a . (b x c),
 *                         1 + a.b + b.c + c.a)        (unit vectors a, b, c)
 * and degenerate (zero-area) triangles contribute nothing. Loops traversed
 * counterclockwise as seen from inside the subtended cone give positive
 * values; reversing the traversal negates the result. One full solid-angle
 * period is 4*pi: a loop is reported by the representative obtained from its
 * own flat spanning fan, which for a simple planar loop is the value that is
 * continuous in the apex everywhere off the loop plane.
 *
 * When the loop is planar and the apex lies in that same plane (within
 * 1e-9 of the loop diameter) the fan becomes numerically meaningless; the
 * result is then defined as 2*pi times the in-plane winding number, which
 * equals the one-sided limit of the generic case.
 *
 * Throws ApexOnPath if the apex lies within `on_path_tol` of any segment.
 */
inline double solid_angle(const ClosedPath3D& path, Point3D apex,
                          double on_path_tol = kOnPathTol) {
    if (!finite(apex)) {
        throw std::invalid_argument("solid_angle: apex is not finite");
    }
    if (distance_to_path(path, apex) <= on_path_tol) {
        throw ApexOnPath("solid_angle: apex lies on the path");
    }
    const auto& verts = path.vertices();

    const detail::PlaneFrame frame = detail::fit_plane(verts);
    const double plane_tol = 1e-9 * detail::bounding_diameter(verts);
    const double apex_offset = std::abs(dot(apex - frame.centroid, frame.n));
    if (frame.max_vertex_offset <= plane_tol && apex_offset <= plane_tol) {
        return 2.0 * std::numbers::pi *
               detail::projected_winding(path, frame, apex, on_path_tol);
    }

    std::vector<Point3D> unit;
    unit.reserve(verts.size());
    for (const auto& p : verts) {
        const Point3D d = p - apex;
        unit.push_back((1.0 / norm(d)) * d);
    }
    double total = 0.0;
    const Point3D& a = unit[0];
    for (std::size_t i = 1; i + 1 < unit.size(); ++i) {
        const Point3D& b = unit[i];
        const Point3D& c = unit[i + 1];
        const double numer = dot(a, cross(b, c));
        const double denom = 1.0 + dot(a, b) + dot(b, c) + dot(c, a);
        if (numer == 0.0 && denom <= 0.0) {
            // Flat triangle spanning a half great circle: zero area, but the
            // atan2 branch is undefined. Skip it.
            continue;
        }
        total += 2.0 * std::atan2(numer, denom);
    }
    return total;
}

} // namespace topogate::geometry

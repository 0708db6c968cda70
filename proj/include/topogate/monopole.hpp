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
 * Solid-angle phase model for a charge circling a magnetic monopole.
 *
 * A closed loop subtending solid angle Omega at the monopole imparts the
 * phase n_q * Omega / 2, with n_q the integer charge quantum. The phase is
 * holonomic in general (it follows the loop geometry), but for a planar loop
 * whose plane contains the monopole it collapses to n_q * w * pi with w the
 * in-plane winding number, i.e. it becomes a topological invariant.
 */

#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>

#include "topogate/errors.hpp"
#include "topogate/geometry.hpp"

namespace topogate::monopole {

using geometry::ClosedPath3D;
using geometry::Point3D;

struct MonopoleConfig {
    Point3D position;
    int charge_quantum = 1;
};

inline void validate(const MonopoleConfig& cfg) {
    if (!geometry::finite(cfg.position)) {
        throw std::invalid_argument("MonopoleConfig: non-finite position");
    }
    if (cfg.charge_quantum < 1) {
        throw std::invalid_argument("MonopoleConfig: charge quantum must be >= 1");
    }
}

/// Phase acquired by the charge along the loop: n_q * Omega / 2.
inline double monopole_phase(const ClosedPath3D& path, const MonopoleConfig& cfg) {
    validate(cfg);
    return 0.5 * cfg.charge_quantum * geometry::solid_angle(path, cfg.position);
}

/// Character of the phase a loop produces.
struct PhaseCharacter {
    bool topological = false;
    /// In-plane winding number; meaningful only when topological.
    int winding = 0;
};

/**
 * Certify whether the loop's phase is a topological invariant: it is exactly
 * when all vertices are coplanar within `tol` and the monopole lies in that
 * same plane within `tol`. The certified winding is measured in the
 * right-handed frame of the best-fit plane. `tol` defaults to 1e-9 times the
 * loop's bounding diameter.
 */
inline PhaseCharacter certify_topological(const ClosedPath3D& path,
                                          const MonopoleConfig& cfg,
                                          std::optional<double> tol = {}) {
    validate(cfg);
    if (geometry::distance_to_path(path, cfg.position) <= geometry::kOnPathTol) {
        throw ApexOnPath("certify_topological: monopole lies on the path");
    }
    const auto& verts = path.vertices();
    const double tolerance =
        tol.value_or(1e-9 * geometry::detail::bounding_diameter(verts));
    if (!(tolerance > 0.0)) {
        throw std::invalid_argument("certify_topological: tol must be positive");
    }
    const geometry::detail::PlaneFrame frame = geometry::detail::fit_plane(verts);
    const double monopole_offset =
        std::abs(geometry::dot(cfg.position - frame.centroid, frame.n));
    if (frame.max_vertex_offset > tolerance || monopole_offset > tolerance) {
        return {false, 0};
    }
    return {true,
            geometry::detail::projected_winding(path, frame, cfg.position,
                                                geometry::kOnPathTol)};
}

} // namespace topogate::monopole

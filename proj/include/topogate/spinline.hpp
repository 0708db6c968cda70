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
 * Spin holonomy engine: path-ordered SU(2) phases for a magnetic moment
 * carried through static electric-field regions.
 *
 * A straight segment with displacement dl in field E rotates the spin by
 *     U = exp(i * kappa * sigma . (E x dl)),
 * so the angle depends only on the product |E| * |dl| and the axis only on
 * the field/motion geometry; the traversal speed never enters. Units are
 * natural (hbar = c = 1) with all material constants folded into kappa.
 */

#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "topogate/errors.hpp"
#include "topogate/gates.hpp"
#include "topogate/geometry.hpp"

namespace topogate::spinline {

using geometry::Point3D;

/// One straight-line trajectory piece through a constant electric field.
/// The rotation axis unit(E x dl) is constant along the piece by
/// construction; programs that need an axis change use several segments.
struct SpinSegment {
    Point3D dl;    ///< displacement, model length units
    Point3D field; ///< electric field, model field units
};

/// Hardware layout the program runs on.
///  - flying:       the carrier moves along +x through transverse fields
///                  (E in the y-z plane).
///  - static_field: the field is fixed along x and the carrier moves in the
///                  y-z plane.
enum class Architecture { flying, static_field };

struct SpinProgram {
    Architecture arch = Architecture::flying;
    double kappa = 1.0; ///< spin-orbit coupling, absorbs all constants
    std::vector<SpinSegment> segments;
};

namespace detail {

inline void validate_segment(const SpinSegment& seg) {
    if (!geometry::finite(seg.dl) || !geometry::finite(seg.field)) {
        throw std::invalid_argument("SpinSegment: non-finite component");
    }
    if (geometry::norm(seg.dl) == 0.0) {
        throw std::invalid_argument("SpinSegment: displacement must be nonzero");
    }
}

inline void validate_architecture(const SpinSegment& seg, Architecture arch,
                                  std::size_t index) {
    if (arch == Architecture::flying) {
        if (seg.dl.y != 0.0 || seg.dl.z != 0.0 || seg.dl.x <= 0.0) {
            throw ArchitectureViolation(
                "flying architecture: segment " + std::to_string(index) +
                " must move along +x");
        }
        if (seg.field.x != 0.0) {
            throw ArchitectureViolation(
                "flying architecture: segment " + std::to_string(index) +
                " field must lie in the y-z plane");
        }
    } else {
        if (seg.field.y != 0.0 || seg.field.z != 0.0 || seg.field.x == 0.0) {
            throw ArchitectureViolation(
                "static architecture: segment " + std::to_string(index) +
                " field must point along x");
        }
        if (seg.dl.x != 0.0) {
            throw ArchitectureViolation(
                "static architecture: segment " + std::to_string(index) +
                " must move in the y-z plane");
        }
    }
}

} // namespace detail

/// exp(i kappa sigma . (E x dl)), evaluated in closed form as
/// cos(a) I + i sin(a) sigma . n with a = kappa |E x dl| and n the unit
/// axis. Returns the identity when E and dl are parallel.
inline gates::Unitary segment_rotation(const SpinSegment& seg, double kappa) {
    detail::validate_segment(seg);
    if (!std::isfinite(kappa)) {
        throw std::invalid_argument("segment_rotation: kappa must be finite");
    }
    const Point3D w = kappa * geometry::cross(seg.field, seg.dl);
    const double angle = geometry::norm(w);
    if (angle == 0.0) {
        return gates::Unitary::identity(2);
    }
    const Point3D axis = (1.0 / angle) * w;
    const double c = std::cos(angle), s = std::sin(angle);
    using gates::Complex;
    // cos(a) I + i sin(a) (nx sx + ny sy + nz sz)
    return gates::Unitary(
        2, {Complex(c, s * axis.z), Complex(s * axis.y, s * axis.x),
            Complex(-s * axis.y, s * axis.x), Complex(c, -s * axis.z)});
}

/// Path-ordered product of the segment rotations, first segment applied
/// first: U = U_k ... U_1. The result is special unitary (det = 1).
inline gates::Unitary holonomy(const SpinProgram& prog) {
    gates::Unitary u = gates::Unitary::identity(2);
    for (std::size_t i = 0; i < prog.segments.size(); ++i) {
        detail::validate_architecture(prog.segments[i], prog.arch, i);
        u = segment_rotation(prog.segments[i], prog.kappa) * u;
    }
    return u;
}

/**
 * Compile an arbitrary 2x2 unitary into a spin program. The target is ZYZ
 * decomposed and each nonzero factor becomes one segment:
 *
 *  - flying: dl = (1, 0, 0); E along z makes R_y (E x dl points along +y)
 *    and E along -y makes R_z (E x dl points along +z), with |E| carrying
 *    the angle.
 *  - static_field: E = (1, 0, 0); dl along y makes R_z (E x dl along +z)
 *    and dl along -z makes R_y, with |dl| carrying the angle.
 *
 * The global phase of the target is dropped: holonomy(result) equals the
 * target up to phase.
 */
inline SpinProgram compile_su2(const gates::Unitary& target, Architecture arch,
                               double kappa) {
    if (target.dim() != 2) {
        throw DimensionMismatch("compile_su2: need a 2x2 target");
    }
    if (kappa == 0.0 || !std::isfinite(kappa)) {
        throw ZeroCoupling("compile_su2: kappa must be nonzero and finite");
    }
    const gates::EulerZYZ angles = gates::euler_zyz(target);
    SpinProgram prog;
    prog.arch = arch;
    prog.kappa = kappa;
    const auto emit_rz = [&](double angle) {
        if (angle == 0.0) {
            return;
        }
        if (arch == Architecture::flying) {
            prog.segments.push_back({{1.0, 0.0, 0.0}, {0.0, -angle / kappa, 0.0}});
        } else {
            prog.segments.push_back({{0.0, angle / kappa, 0.0}, {1.0, 0.0, 0.0}});
        }
    };
    const auto emit_ry = [&](double angle) {
        if (angle == 0.0) {
            return;
        }
        if (arch == Architecture::flying) {
            prog.segments.push_back({{1.0, 0.0, 0.0}, {0.0, 0.0, angle / kappa}});
        } else {
            prog.segments.push_back({{0.0, 0.0, -angle / kappa}, {1.0, 0.0, 0.0}});
        }
    };
    emit_rz(angles.beta);
    emit_ry(angles.theta);
    emit_rz(angles.alpha);
    return prog;
}

/// Homotopy data of the original line-charge configuration: a moment mu
/// circling a linear charge density lambda n times.
struct ACLineSpec {
    double mu = 0.0;
    double lambda = 0.0;
    int n = 0;
};

/// phi = 4 pi n mu lambda (natural units).
inline double ac_line_phase(const ACLineSpec& spec) {
    if (!std::isfinite(spec.mu) || !std::isfinite(spec.lambda)) {
        throw std::invalid_argument("ac_line_phase: non-finite parameter");
    }
    return 4.0 * std::numbers::pi * spec.n * spec.mu * spec.lambda;
}

} // namespace topogate::spinline

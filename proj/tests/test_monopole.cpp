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

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "topogate/errors.hpp"
#include "topogate/geometry.hpp"
#include "topogate/monopole.hpp"

using namespace topogate;
using geometry::ClosedPath3D;
using geometry::Point3D;
using monopole::MonopoleConfig;

namespace {

constexpr double kPi = std::numbers::pi;

/// Star-shaped loop of n vertices in the z = 0 plane around the origin,
/// counterclockwise, radii jittered by `rng`.
ClosedPath3D planar_star(std::mt19937_64& rng, std::size_t n) {
    std::uniform_real_distribution<double> radius(0.6, 1.9);
    std::vector<Point3D> v;
    v.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double phi = 2.0 * kPi * static_cast<double>(k) / static_cast<double>(n);
        const double r = radius(rng);
        v.push_back({r * std::cos(phi), r * std::sin(phi), 0.0});
    }
    return ClosedPath3D(std::move(v));
}

ClosedPath3D rotate_translate(const ClosedPath3D& path, double tilt, Point3D shift) {
    std::vector<Point3D> v;
    const double c = std::cos(tilt), s = std::sin(tilt);
    for (const auto& p : path.vertices()) {
        v.push_back({p.x + shift.x, c * p.y - s * p.z + shift.y,
                     s * p.y + c * p.z + shift.z});
    }
    return ClosedPath3D(std::move(v));
}

} // namespace

TEST_CASE("config validation") {
    CHECK_THROWS_AS(monopole::validate({{0, 0, 0}, 0}), std::invalid_argument);
    CHECK_THROWS_AS(monopole::validate({{0, 0, 0}, -2}), std::invalid_argument);
    CHECK_NOTHROW(monopole::validate({{1, 2, 3}, 1}));
}

TEST_CASE("distant loops give a vanishing phase") {
    std::vector<Point3D> v;
    for (int k = 0; k < 64; ++k) {
        const double phi = 2.0 * kPi * k / 64.0;
        v.push_back({20.0 + 0.05 * std::cos(phi), 0.05 * std::sin(phi), 8.0});
    }
    CHECK(std::abs(monopole::monopole_phase(ClosedPath3D(v), {{0, 0, 0}, 1})) < 1e-5);
}

TEST_CASE("planar loops through the monopole plane give pi per turn") {
    std::mt19937_64 rng(7);
    const auto loop = planar_star(rng, 1000);
    const MonopoleConfig cfg{{0.05, -0.1, 0.0}, 1};
    CHECK(monopole::monopole_phase(loop, cfg) == Catch::Approx(kPi).margin(1e-4));

    // Equatorial circle about a centred monopole.
    std::vector<Point3D> circle;
    for (int k = 0; k < 1000; ++k) {
        const double phi = 2.0 * kPi * k / 1000.0;
        circle.push_back({std::cos(phi), std::sin(phi), 0.0});
    }
    CHECK(monopole::monopole_phase(ClosedPath3D(circle), {{0, 0, 0}, 1}) ==
          Catch::Approx(kPi).margin(1e-4));

    // Orientation reversal flips the phase sign.
    CHECK(monopole::monopole_phase(loop.reversed(), cfg) ==
          Catch::Approx(-kPi).margin(1e-4));
}

TEST_CASE("phase scales exactly with the charge quantum") {
    std::mt19937_64 rng(9);
    const auto loop = rotate_translate(planar_star(rng, 200), 0.4, {0.3, 0, 0.2});
    for (int nq : {1, 2, 5}) {
        const MonopoleConfig base{{0.3, 0.0, 0.2}, 1};
        const MonopoleConfig scaled{{0.3, 0.0, 0.2}, nq};
        CHECK(monopole::monopole_phase(loop, scaled) ==
              Catch::Approx(nq * monopole::monopole_phase(loop, base)).margin(1e-12));
    }
}

TEST_CASE("phase is additive under concatenation at a shared base point") {
    std::mt19937_64 rng(13);
    // Two tilted loops sharing their first vertex neighbourhood.
    const auto a = rotate_translate(planar_star(rng, 120), 0.3, {0, 0, 0.8});
    const auto b = rotate_translate(planar_star(rng, 90), -0.5, {0, 0, 0.8});
    std::vector<Point3D> joined = a.vertices();
    joined.push_back(a.vertices().front());
    joined.insert(joined.end(), b.vertices().begin(), b.vertices().end());
    joined.push_back(b.vertices().front());
    const ClosedPath3D both(joined);
    const MonopoleConfig cfg{{0, 0, 0}, 1};
    CHECK(monopole::monopole_phase(both, cfg) ==
          Catch::Approx(monopole::monopole_phase(a, cfg) +
                        monopole::monopole_phase(b, cfg))
              .margin(1e-9));
}

TEST_CASE("certification separates topological from holonomic loops") {
    std::mt19937_64 rng(21);
    const auto flat = planar_star(rng, 400);

    const auto in_plane = monopole::certify_topological(flat, {{0.1, 0.2, 0.0}, 1});
    CHECK(in_plane.topological);
    CHECK(in_plane.winding == 1);

    const auto reversed =
        monopole::certify_topological(flat.reversed(), {{0.1, 0.2, 0.0}, 1});
    CHECK(reversed.topological);
    CHECK(reversed.winding == -1);

    // Loop tilted 10 degrees out of its plane is merely holonomic.
    const auto tilted = rotate_translate(flat, 10.0 * kPi / 180.0, {0, 0, 0});
    std::vector<Point3D> mixed = tilted.vertices();
    mixed[3].z += 0.2; // make sure no single plane fits
    CHECK_FALSE(monopole::certify_topological(ClosedPath3D(mixed), {{0, 0, 0}, 1})
                    .topological);

    // Exactly planar but the monopole misses the plane by 1.
    CHECK_FALSE(
        monopole::certify_topological(flat, {{0.0, 0.0, 1.0}, 1}).topological);

    // A planar loop that does not enclose the monopole is still certified,
    // with winding zero.
    const auto outside = monopole::certify_topological(flat, {{5.0, 0.0, 0.0}, 1});
    CHECK(outside.topological);
    CHECK(outside.winding == 0);

    CHECK_THROWS_AS(
        monopole::certify_topological(flat, {flat.vertices()[2], 1}),
        ApexOnPath);
}

TEST_CASE("certified loops keep their phase under in-plane deformation") {
    std::mt19937_64 rng(33);
    std::uniform_real_distribution<double> jitter(-0.05, 0.05);
    const MonopoleConfig cfg{{0, 0, 0}, 1};
    const auto base = planar_star(rng, 300);
    const auto cert = monopole::certify_topological(base, cfg);
    REQUIRE(cert.topological);
    const double phase = monopole::monopole_phase(base, cfg);
    CHECK(phase == Catch::Approx(cert.winding * kPi).margin(1e-6));

    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Point3D> moved;
        for (const auto& p : base.vertices()) {
            moved.push_back({p.x + jitter(rng), p.y + jitter(rng), 0.0});
        }
        const ClosedPath3D deformed(moved);
        const auto c = monopole::certify_topological(deformed, cfg);
        REQUIRE(c.topological);
        REQUIRE(c.winding == cert.winding);
        CHECK(monopole::monopole_phase(deformed, cfg) ==
              Catch::Approx(phase).margin(1e-6));
    }
}

TEST_CASE("multi-turn planar loops certify with their full winding") {
    std::mt19937_64 rng(64);
    const auto once = planar_star(rng, 150);
    std::vector<Point3D> twice = once.vertices();
    twice.insert(twice.end(), once.vertices().begin(), once.vertices().end());
    const ClosedPath3D doubled(twice);
    const MonopoleConfig cfg{{0, 0, 0}, 1};
    const auto cert = monopole::certify_topological(doubled, cfg);
    CHECK(cert.topological);
    CHECK(cert.winding == 2);
    CHECK(monopole::monopole_phase(doubled, cfg) ==
          Catch::Approx(2.0 * kPi).margin(1e-6));
}

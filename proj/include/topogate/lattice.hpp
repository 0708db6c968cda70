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
 * Abelian lattice register with dual-rail qubits.
 *
 * Each qubit is one particle shared between two sites: occupancy of the
 * a-site encodes |0>, of the b-site |1> (bit q of a little-endian basis
 * index). Every qubit also owns a fixed, always-occupied ancilla of the
 * opposite particle species. Diagonal phase gates are enacted by moving the
 * content of one site along a closed loop: each encircled occupied particle
 * contributes winding * sign(mover, obstacle) * phi0 to the accumulated
 * phase, so the operator depends only on the homotopy class of the loop.
 * The only non-diagonal primitive is a tunnelling pulse between the two
 * rails, which acts as R_x(theta) on the qubit.
 */

#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "topogate/errors.hpp"
#include "topogate/gates.hpp"
#include "topogate/geometry.hpp"

namespace topogate::lattice {

using geometry::ClosedPath2D;
using geometry::Point2D;

enum class ParticleType { x_kind, y_kind };

inline ParticleType opposite(ParticleType t) {
    return t == ParticleType::x_kind ? ParticleType::y_kind : ParticleType::x_kind;
}

/**
 * Encirclement phase rule: moving a particle of type `mover` once
 * counterclockwise around an occupied obstacle of type `obstacle` multiplies
 * the branch amplitude by exp(i * phi0 * sign(mover, obstacle)).
 *
 * Two physical modes are supported:
 *  - distinct species (charge around flux): sign(X,Y) = -sign(Y,X) = +-1,
 *    same-species signs zero;
 *  - a single self-interacting species (anyons): all four signs +1.
 */
class PhaseRule {
  public:
    PhaseRule(double phi0, int sign_xy, int sign_yx, int sign_xx, int sign_yy)
        : phi0_(phi0), xy_(sign_xy), yx_(sign_yx), xx_(sign_xx), yy_(sign_yy) {
        if (!std::isfinite(phi0)) {
            throw std::invalid_argument("PhaseRule: phi0 must be finite");
        }
        const auto ok = [](int s) { return s == -1 || s == 0 || s == 1; };
        if (!ok(xy_) || !ok(yx_) || !ok(xx_) || !ok(yy_)) {
            throw std::invalid_argument("PhaseRule: signs must be in {-1, 0, +1}");
        }
        if (xx_ != yy_ || xx_ == -1) {
            throw std::invalid_argument(
                "PhaseRule: same-species signs must be equal and in {0, +1}");
        }
        const bool antisymmetric = (xy_ == 0 || yx_ == 0 || xy_ == -yx_);
        const bool anyonic = (xy_ == 1 && yx_ == 1 && xx_ == 1);
        if (!antisymmetric && !anyonic) {
            throw std::invalid_argument(
                "PhaseRule: cross-species signs must be antisymmetric, or all "
                "signs +1 for a self-interacting species");
        }
    }

    /// Distinct-species mode: X around Y gives +phi0, Y around X gives
    /// -phi0, same species never interact.
    static PhaseRule charge_dipole(double phi0) { return {phi0, 1, -1, 0, 0}; }

    /// Single-species mode: every encirclement gives +phi0.
    static PhaseRule anyon(double phi0) { return {phi0, 1, 1, 1, 1}; }

    double phi0() const { return phi0_; }

    int sign(ParticleType mover, ParticleType obstacle) const {
        if (mover == ParticleType::x_kind) {
            return obstacle == ParticleType::x_kind ? xx_ : xy_;
        }
        return obstacle == ParticleType::y_kind ? yy_ : yx_;
    }

    int sign_xy() const { return xy_; }
    int sign_yx() const { return yx_; }
    int sign_xx() const { return xx_; }
    int sign_yy() const { return yy_; }

  private:
    double phi0_;
    int xy_, yx_, xx_, yy_;
};

enum class RailSite { a, b };

struct QubitSites {
    Point2D a;
    Point2D b;
    Point2D ancilla;
};

/// Immutable register layout: qubit sites, ancilla sites, phase rule and the
/// clearance radius every move path must keep from every site.
class LatticeRegister {
  public:
    LatticeRegister(std::vector<QubitSites> sites, PhaseRule rule,
                    double clearance)
        : sites_(std::move(sites)), rule_(rule), clearance_(clearance) {
        if (sites_.empty()) {
            throw std::invalid_argument("LatticeRegister: need at least one qubit");
        }
        if (!(clearance_ > 0.0) || !std::isfinite(clearance_)) {
            throw std::invalid_argument("LatticeRegister: clearance must be positive");
        }
        std::vector<Point2D> all = all_sites();
        for (const auto& p : all) {
            if (!geometry::finite(p)) {
                throw std::invalid_argument("LatticeRegister: non-finite site");
            }
        }
        for (std::size_t i = 0; i < all.size(); ++i) {
            for (std::size_t j = i + 1; j < all.size(); ++j) {
                if (geometry::norm(all[i] - all[j]) <= 2.0 * clearance_) {
                    throw std::invalid_argument(
                        "LatticeRegister: sites closer than twice the clearance");
                }
            }
        }
    }

    /// Row layout with qubit pitch 4: qubit q sits at column x = 4q with
    /// rails at y = +1 (a) and y = -1 (b) and its ancilla at y = -2. The
    /// margins guarantee that the compiled loops below clear every site.
    static LatticeRegister row_layout(std::size_t n_qubits, PhaseRule rule,
                                      double clearance = 0.25) {
        std::vector<QubitSites> sites;
        sites.reserve(n_qubits);
        for (std::size_t q = 0; q < n_qubits; ++q) {
            const double x = 4.0 * static_cast<double>(q);
            sites.push_back({{x, 1.0}, {x, -1.0}, {x, -2.0}});
        }
        return LatticeRegister(std::move(sites), rule, clearance);
    }

    std::size_t n_qubits() const { return sites_.size(); }
    const PhaseRule& rule() const { return rule_; }
    double clearance() const { return clearance_; }
    const QubitSites& sites(std::size_t qubit) const { return sites_.at(qubit); }

    /// Even qubits carry an X particle, odd ones a Y particle.
    ParticleType qubit_type(std::size_t qubit) const {
        return qubit % 2 == 0 ? ParticleType::x_kind : ParticleType::y_kind;
    }
    ParticleType ancilla_type(std::size_t qubit) const {
        return opposite(qubit_type(qubit));
    }

    Point2D site(std::size_t qubit, RailSite which) const {
        const auto& s = sites_.at(qubit);
        return which == RailSite::a ? s.a : s.b;
    }

    std::vector<Point2D> all_sites() const {
        std::vector<Point2D> all;
        all.reserve(3 * sites_.size());
        for (const auto& s : sites_) {
            all.push_back(s.a);
            all.push_back(s.b);
            all.push_back(s.ancilla);
        }
        return all;
    }

  private:
    std::vector<QubitSites> sites_;
    PhaseRule rule_;
    double clearance_;
};

/// Closed move of whatever occupies one rail site. The path must start and
/// end at that site and keep the register clearance from every other site,
/// occupied or not, because the branch geometry cannot depend on occupancy.
struct MoveInstruction {
    std::size_t qubit = 0;
    RailSite site = RailSite::a;
    ClosedPath2D path;
};

/// Integrated tunnelling pulse between the two rails of one qubit; enacts
/// R_x(theta) there.
struct HoppingPulse {
    std::size_t qubit = 0;
    double theta = 0.0;
};

using Instruction = std::variant<MoveInstruction, HoppingPulse>;
using Program = std::vector<Instruction>;

/// Normalized register state, little-endian: bit q of a basis index is 0
/// when qubit q's particle is at its a-site and 1 when at its b-site.
class RegisterState {
  public:
    explicit RegisterState(std::vector<std::complex<double>> amplitudes)
        : amplitudes_(std::move(amplitudes)) {
        const std::size_t d = amplitudes_.size();
        if (d == 0 || (d & (d - 1)) != 0) {
            throw std::invalid_argument("RegisterState: dimension must be 2^n");
        }
        double norm2 = 0.0;
        for (const auto& a : amplitudes_) {
            norm2 += std::norm(a);
        }
        if (std::abs(norm2 - 1.0) > 1e-12) {
            throw std::invalid_argument("RegisterState: state is not normalized");
        }
    }

    static RegisterState basis(std::size_t n_qubits, std::size_t index) {
        std::vector<std::complex<double>> amps(std::size_t{1} << n_qubits,
                                               {0.0, 0.0});
        amps.at(index) = 1.0;
        return RegisterState(std::move(amps));
    }

    std::size_t dim() const { return amplitudes_.size(); }
    std::size_t n_qubits() const {
        std::size_t n = 0, d = amplitudes_.size();
        while (d > 1) {
            d >>= 1;
            ++n;
        }
        return n;
    }
    const std::vector<std::complex<double>>& amplitudes() const {
        return amplitudes_;
    }

  private:
    std::vector<std::complex<double>> amplitudes_;
};

namespace detail {

inline void check_qubit(const LatticeRegister& reg, std::size_t qubit,
                        const char* who) {
    if (qubit >= reg.n_qubits()) {
        throw InvalidQubit(std::string(who) + ": qubit " + std::to_string(qubit) +
                           " out of range for " + std::to_string(reg.n_qubits()) +
                           " qubits");
    }
}

/// Clearance obstacles for a move: every register site except the moved one.
inline std::vector<Point2D> move_obstacles(const LatticeRegister& reg,
                                           const MoveInstruction& mv) {
    std::vector<Point2D> obstacles;
    obstacles.reserve(3 * reg.n_qubits() - 1);
    for (std::size_t q = 0; q < reg.n_qubits(); ++q) {
        const auto& s = reg.sites(q);
        if (q != mv.qubit || mv.site != RailSite::a) {
            obstacles.push_back(s.a);
        }
        if (q != mv.qubit || mv.site != RailSite::b) {
            obstacles.push_back(s.b);
        }
        obstacles.push_back(s.ancilla);
    }
    return obstacles;
}

inline void validate_move(const LatticeRegister& reg, const MoveInstruction& mv) {
    check_qubit(reg, mv.qubit, "apply_move");
    const Point2D start = reg.site(mv.qubit, mv.site);
    if (geometry::norm(mv.path.vertices().front() - start) > 1e-9) {
        throw std::invalid_argument(
            "MoveInstruction: path must start at the moved site");
    }
    const auto obstacles = move_obstacles(reg, mv);
    if (!geometry::path_clearance(mv.path, obstacles, reg.clearance())) {
        throw ClearanceViolation(
            "MoveInstruction: path passes within the clearance radius of a site");
    }
}

} // namespace detail

/**
 * Apply a closed move to the register state.
 *
 * The move acts only on basis states whose moved site is occupied. There the
 * amplitude picks up exp(i * phi0 * sum_k sign(mover, type_k) * n_k), where k
 * runs over every ancilla (always occupied) and over the occupied rail of
 * every other qubit in that basis state, and n_k is the winding number of
 * the path around site k. The operator is diagonal, so any two moves
 * commute, and it depends on the path only through those winding numbers.
 */
inline RegisterState apply_move(const RegisterState& state,
                                const LatticeRegister& reg,
                                const MoveInstruction& mv) {
    if (state.n_qubits() != reg.n_qubits()) {
        throw DimensionMismatch("apply_move: state and register sizes differ");
    }
    detail::validate_move(reg, mv);
    const ParticleType mover = reg.qubit_type(mv.qubit);
    const auto& rule = reg.rule();

    // Winding sums are basis-independent per site; precompute them.
    double ancilla_sum = 0.0;
    std::vector<std::array<double, 2>> rail_term(reg.n_qubits(), {0.0, 0.0});
    for (std::size_t q = 0; q < reg.n_qubits(); ++q) {
        const int s_anc = rule.sign(mover, reg.ancilla_type(q));
        if (s_anc != 0) {
            ancilla_sum += s_anc * geometry::winding_number(mv.path,
                                                            reg.sites(q).ancilla);
        }
        if (q == mv.qubit) {
            continue; // the mover's own empty rail never contributes
        }
        const int s_rail = rule.sign(mover, reg.qubit_type(q));
        if (s_rail != 0) {
            rail_term[q][0] =
                s_rail * geometry::winding_number(mv.path, reg.sites(q).a);
            rail_term[q][1] =
                s_rail * geometry::winding_number(mv.path, reg.sites(q).b);
        }
    }

    const std::size_t moved_bit = (mv.site == RailSite::b) ? 1 : 0;
    std::vector<std::complex<double>> amps = state.amplitudes();
    for (std::size_t basis = 0; basis < amps.size(); ++basis) {
        if (((basis >> mv.qubit) & 1u) != moved_bit) {
            continue; // moved site empty in this branch
        }
        double winding_sum = ancilla_sum;
        for (std::size_t q = 0; q < reg.n_qubits(); ++q) {
            if (q == mv.qubit) {
                continue;
            }
            winding_sum += rail_term[q][(basis >> q) & 1u];
        }
        amps[basis] *= std::polar(1.0, rule.phi0() * winding_sum);
    }
    return RegisterState(std::move(amps));
}

/// R_x(theta) on the pulsed qubit: a single particle in two modes is an
/// exact two-level system under tunnelling.
inline RegisterState apply_hopping(const RegisterState& state,
                                   const HoppingPulse& pulse) {
    const std::size_t n = state.n_qubits();
    if (pulse.qubit >= n) {
        throw InvalidQubit("apply_hopping: qubit " + std::to_string(pulse.qubit) +
                           " out of range");
    }
    if (!std::isfinite(pulse.theta)) {
        throw std::invalid_argument("apply_hopping: theta must be finite");
    }
    const double c = std::cos(pulse.theta);
    const std::complex<double> is(0.0, std::sin(pulse.theta));
    const std::size_t stride = std::size_t{1} << pulse.qubit;
    std::vector<std::complex<double>> amps = state.amplitudes();
    for (std::size_t base = 0; base < amps.size(); base += 2 * stride) {
        for (std::size_t offset = 0; offset < stride; ++offset) {
            const std::size_t i0 = base + offset;
            const std::size_t i1 = i0 + stride;
            const auto v0 = amps[i0], v1 = amps[i1];
            amps[i0] = c * v0 + is * v1;
            amps[i1] = is * v0 + c * v1;
        }
    }
    return RegisterState(std::move(amps));
}

namespace detail {

/// Closed loop from `start` that winds `turns` times around `target` and
/// zero times around everything else: an out-and-back stem followed by a
/// repeated rectangle of half-extents (hx, hy) centred on the target. The
/// stem runs along the column x = stem_x and the corridor along y =
/// corridor_y; callers choose those so every other site stays clear.
inline ClosedPath2D stem_and_rectangle(Point2D start, Point2D target, int turns,
                                       double stem_x, double corridor_y,
                                       double hx, double hy) {
    const double entry_x = target.x + (stem_x <= target.x ? -hx : hx);
    const Point2D stem_top{stem_x, start.y};
    const Point2D stem_bottom{stem_x, corridor_y};
    const Point2D entry{entry_x, corridor_y};
    const double far_x = target.x + (stem_x <= target.x ? hx : -hx);
    // Rectangle corners, starting after `entry`, oriented so one cycle winds
    // +1 for positive turns.
    const double y_top = target.y + hy;
    const double y_bot = target.y - hy;
    std::vector<Point2D> cycle;
    if ((stem_x <= target.x) == (turns > 0)) {
        cycle = {{entry_x, y_bot}, {far_x, y_bot}, {far_x, y_top}};
    } else {
        cycle = {{far_x, y_top}, {far_x, y_bot}, {entry_x, y_bot}};
    }
    std::vector<Point2D> vertices{start};
    if (stem_top.x != start.x || stem_top.y != start.y) {
        vertices.push_back(stem_top);
    }
    vertices.push_back(stem_bottom);
    if (entry.x != stem_bottom.x || entry.y != stem_bottom.y) {
        vertices.push_back(entry);
    }
    const int n_turns = std::abs(turns);
    for (int t = 0; t < n_turns; ++t) {
        vertices.insert(vertices.end(), cycle.begin(), cycle.end());
        vertices.push_back(entry);
    }
    if (entry.x != stem_bottom.x || entry.y != stem_bottom.y) {
        vertices.push_back(stem_bottom);
    }
    if (stem_top.x != start.x || stem_top.y != start.y) {
        vertices.push_back(stem_top);
    }
    return ClosedPath2D(std::move(vertices));
}

/// The compiled loops below assume the row layout's margins; for custom
/// layouts the winding pattern could silently differ even when clearance
/// holds, so every emitted loop is checked to wind `turns` times around
/// `target` and zero times around every other site.
inline void require_isolated_winding(const LatticeRegister& reg,
                                     const MoveInstruction& mv, Point2D target,
                                     int turns, const char* who) {
    const auto obstacles = detail::move_obstacles(reg, mv);
    if (!geometry::path_clearance(mv.path, obstacles, reg.clearance())) {
        throw LayoutInfeasible(std::string(who) +
                               ": no clear loop exists in this layout");
    }
    for (const auto& site : obstacles) {
        const int expected = geometry::norm(site - target) == 0.0 ? turns : 0;
        if (geometry::winding_number(mv.path, site) != expected) {
            throw LayoutInfeasible(std::string(who) +
                                   ": layout puts a site inside the loop");
        }
    }
}

} // namespace detail

/**
 * Move realizing P(n * phi0) on `qubit` up to a global phase.
 *
 * The emitted loop starts at the a-site and winds -n * sign(mover, ancilla)
 * times around the qubit's own ancilla, encircling no other site, so the
 * induced operator is diag(e^{-i n phi0}, 1) = e^{-i n phi0} P(n phi0).
 */
inline MoveInstruction compile_p(const LatticeRegister& reg, std::size_t qubit,
                                 int n) {
    detail::check_qubit(reg, qubit, "compile_p");
    if (n == 0) {
        throw std::invalid_argument("compile_p: n must be nonzero");
    }
    const int s = reg.rule().sign(reg.qubit_type(qubit), reg.ancilla_type(qubit));
    if (s == 0) {
        throw LayoutInfeasible(
            "compile_p: the phase rule gives this qubit no coupling to its ancilla");
    }
    const auto& sites = reg.sites(qubit);
    // Stem one pitch-quarter to the right of the column, rectangle hugging
    // the ancilla between the b-site and the ancilla's far side.
    const double dx = 1.0, dy = 0.5;
    const double corridor_y = sites.ancilla.y + dy;
    MoveInstruction mv{qubit, RailSite::a,
                       detail::stem_and_rectangle(sites.a, sites.ancilla, -n * s,
                                                  sites.a.x + dx, corridor_y, dx,
                                                  dy)};
    detail::require_isolated_winding(reg, mv, sites.ancilla, -n * s, "compile_p");
    return mv;
}

/**
 * Move realizing C(n * phi0) on the qubit pair, exactly (no global-phase
 * residue): the loop starts at qubit_i's b-site and winds
 * n * sign(type_i, type_j) times around qubit_j's b-site only, so a phase
 * fires exactly when both particles sit on their b-rails.
 */
inline MoveInstruction compile_c(const LatticeRegister& reg, std::size_t qubit_i,
                                 std::size_t qubit_j, int n) {
    detail::check_qubit(reg, qubit_i, "compile_c");
    detail::check_qubit(reg, qubit_j, "compile_c");
    if (qubit_i == qubit_j) {
        throw SameQubit("compile_c: control and target must differ");
    }
    if (n == 0) {
        throw std::invalid_argument("compile_c: n must be nonzero");
    }
    const int s = reg.rule().sign(reg.qubit_type(qubit_i), reg.qubit_type(qubit_j));
    if (s == 0) {
        throw LayoutInfeasible(
            "compile_c: the phase rule gives these qubit species no coupling");
    }
    const Point2D from = reg.sites(qubit_i).b;
    const Point2D to = reg.sites(qubit_j).b;
    // Corridor halfway between the rails, rectangle hugging the target
    // b-site between its a-site and its ancilla.
    const double dy = 0.5;
    MoveInstruction mv{qubit_i, RailSite::b,
                       detail::stem_and_rectangle(from, to, n * s, from.x,
                                                  from.y + dy, dy, dy)};
    detail::require_isolated_winding(reg, mv, to, n * s, "compile_c");
    return mv;
}

namespace detail {

/// Smallest-|n| solution of n * phi0 = target (mod 2pi) with positive n
/// preferred, or 0 if none exists with |n| <= n_max.
inline int solve_phase_multiple(double phi0, double target, int n_max,
                                double tol = 1e-9) {
    for (int sign : {+1, -1}) {
        for (int n = 1; n <= n_max; ++n) {
            const double residue =
                std::remainder(sign * n * phi0 - target, 2.0 * std::numbers::pi);
            if (std::abs(residue) < tol) {
                return sign * n;
            }
        }
        // fallthrough: scan negatives after exhausting positives
    }
    return 0;
}

} // namespace detail

/**
 * Three-step Hadamard program: P(n phi0), R_x(pi/4) hop, P(n phi0), with n
 * the smallest multiple satisfying n * phi0 = -pi/2 (mod 2pi), positive n
 * preferred. The hop makes the program dynamical rather than topological.
 * Throws IncommensuratePhase if no |n| <= n_max works.
 */
inline Program compile_hadamard(const LatticeRegister& reg, std::size_t qubit,
                                int n_max) {
    detail::check_qubit(reg, qubit, "compile_hadamard");
    if (n_max < 1) {
        throw std::invalid_argument("compile_hadamard: n_max must be >= 1");
    }
    const int n = detail::solve_phase_multiple(reg.rule().phi0(),
                                               -0.5 * std::numbers::pi, n_max);
    if (n == 0) {
        throw IncommensuratePhase(
            "compile_hadamard: no multiple of phi0 matches -pi/2 within n_max = " +
            std::to_string(n_max));
    }
    Program prog;
    prog.push_back(compile_p(reg, qubit, n));
    prog.push_back(HoppingPulse{qubit, 0.25 * std::numbers::pi});
    prog.push_back(compile_p(reg, qubit, n));
    return prog;
}

inline RegisterState apply_instruction(const RegisterState& state,
                                       const LatticeRegister& reg,
                                       const Instruction& instr) {
    if (const auto* mv = std::get_if<MoveInstruction>(&instr)) {
        return apply_move(state, reg, *mv);
    }
    return apply_hopping(state, std::get<HoppingPulse>(instr));
}

/// Unitary of a whole program, assembled by applying it to each basis state.
inline gates::Unitary program_unitary(const LatticeRegister& reg,
                                      const Program& prog) {
    const std::size_t n = reg.n_qubits();
    const std::size_t d = std::size_t{1} << n;
    std::vector<std::complex<double>> entries(d * d, {0.0, 0.0});
    for (std::size_t col = 0; col < d; ++col) {
        RegisterState state = RegisterState::basis(n, col);
        for (const auto& instr : prog) {
            state = apply_instruction(state, reg, instr);
        }
        for (std::size_t row = 0; row < d; ++row) {
            entries[row * d + col] = state.amplitudes()[row];
        }
    }
    return gates::Unitary(d, std::move(entries));
}

} // namespace topogate::lattice

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
 * Backend-independent circuit IR, statevector simulation, compilation to
 * the lattice and spin backends, and compile verification.
 *
 * Qubit ordering is little-endian everywhere: qubit 0 is the least
 * significant bit of a basis index, and basis labels print as bitstrings
 * "q_{n-1} ... q_0".
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <iterator>
#include <numbers>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "topogate/errors.hpp"
#include "topogate/gates.hpp"
#include "topogate/lattice.hpp"
#include "topogate/spinline.hpp"

namespace topogate::circuit {

using Complex = std::complex<double>;

enum class GateKind { h, p, c, rx, ry, rz };

inline const char* kind_name(GateKind kind) {
    switch (kind) {
        case GateKind::h: return "H";
        case GateKind::p: return "P";
        case GateKind::c: return "C";
        case GateKind::rx: return "Rx";
        case GateKind::ry: return "Ry";
        case GateKind::rz: return "Rz";
    }
    return "?";
}

/// One gate application. `angle` is phi for P/C and theta for rotations;
/// it is ignored for H. C takes two targets, everything else one.
struct GateInstr {
    GateKind kind = GateKind::h;
    double angle = 0.0;
    std::vector<std::size_t> targets;
};

class Circuit {
  public:
    Circuit(std::size_t n_qubits, std::vector<GateInstr> instrs)
        : n_qubits_(n_qubits), instrs_(std::move(instrs)) {
        if (n_qubits_ < 1) {
            throw std::invalid_argument("Circuit: need at least one qubit");
        }
        for (const auto& g : instrs_) {
            const std::size_t want = g.kind == GateKind::c ? 2 : 1;
            if (g.targets.size() != want) {
                throw std::invalid_argument(std::string("Circuit: gate ") +
                                            kind_name(g.kind) + " takes " +
                                            std::to_string(want) + " target(s)");
            }
            for (const auto t : g.targets) {
                if (t >= n_qubits_) {
                    throw std::invalid_argument("Circuit: target out of range");
                }
            }
            if (want == 2 && g.targets[0] == g.targets[1]) {
                throw std::invalid_argument("Circuit: C targets must differ");
            }
            if (!std::isfinite(g.angle)) {
                throw std::invalid_argument("Circuit: gate angle must be finite");
            }
        }
    }

    std::size_t n_qubits() const { return n_qubits_; }
    std::size_t dim() const { return std::size_t{1} << n_qubits_; }
    const std::vector<GateInstr>& instrs() const { return instrs_; }

  private:
    std::size_t n_qubits_;
    std::vector<GateInstr> instrs_;
};

/// The 2x2 (or 4x4 for C) matrix of one gate.
inline gates::Unitary gate_matrix(const GateInstr& g) {
    switch (g.kind) {
        case GateKind::h: return gates::hadamard();
        case GateKind::p: return gates::phase_gate(g.angle);
        case GateKind::c: return gates::cphase_gate(g.angle);
        case GateKind::rx: return gates::rx_gate(g.angle);
        case GateKind::ry: return gates::ry_gate(g.angle);
        case GateKind::rz: return gates::rz_gate(g.angle);
    }
    throw std::invalid_argument("gate_matrix: unknown kind");
}

namespace detail {

inline void apply_single(std::vector<Complex>& amps, const gates::Unitary& u,
                         std::size_t qubit) {
    const std::size_t stride = std::size_t{1} << qubit;
    for (std::size_t base = 0; base < amps.size(); base += 2 * stride) {
        for (std::size_t offset = 0; offset < stride; ++offset) {
            const std::size_t i0 = base + offset;
            const std::size_t i1 = i0 + stride;
            const Complex v0 = amps[i0], v1 = amps[i1];
            amps[i0] = u(0, 0) * v0 + u(0, 1) * v1;
            amps[i1] = u(1, 0) * v0 + u(1, 1) * v1;
        }
    }
}

inline void apply_gate(std::vector<Complex>& amps, const GateInstr& g) {
    if (g.kind == GateKind::c) {
        const Complex phase = std::polar(1.0, g.angle);
        const std::size_t m0 = std::size_t{1} << g.targets[0];
        const std::size_t m1 = std::size_t{1} << g.targets[1];
        for (std::size_t i = 0; i < amps.size(); ++i) {
            if ((i & m0) && (i & m1)) {
                amps[i] *= phase;
            }
        }
        return;
    }
    apply_single(amps, gate_matrix(g), g.targets[0]);
}

} // namespace detail

/// Run the circuit on an explicit initial state vector.
inline std::vector<Complex> simulate(const Circuit& c,
                                     std::vector<Complex> initial) {
    if (initial.size() != c.dim()) {
        throw DimensionMismatch("simulate: initial state has dimension " +
                                std::to_string(initial.size()) + ", circuit needs " +
                                std::to_string(c.dim()));
    }
    double norm2 = 0.0;
    for (const auto& a : initial) {
        norm2 += std::norm(a);
    }
    if (std::abs(norm2 - 1.0) > 1e-9) {
        throw std::invalid_argument("simulate: initial state is not normalized");
    }
    for (const auto& g : c.instrs()) {
        detail::apply_gate(initial, g);
    }
    return initial;
}

/// Parse a basis label "q_{n-1} ... q_0" into its little-endian index.
inline std::size_t parse_basis_label(const std::string& bits,
                                     std::size_t n_qubits) {
    if (bits.size() != n_qubits) {
        throw DimensionMismatch("basis label '" + bits + "' needs exactly " +
                                std::to_string(n_qubits) + " bits");
    }
    std::size_t index = 0;
    for (const char ch : bits) {
        if (ch != '0' && ch != '1') {
            throw std::invalid_argument("basis label must be a bitstring");
        }
        index = (index << 1) | static_cast<std::size_t>(ch - '0');
    }
    return index;
}

/// Run the circuit on a computational basis state given as a bitstring.
inline std::vector<Complex> simulate(const Circuit& c, const std::string& label) {
    std::vector<Complex> state(c.dim(), Complex(0.0, 0.0));
    state[parse_basis_label(label, c.n_qubits())] = 1.0;
    return simulate(c, std::move(state));
}

/// Run the circuit on |0...0>.
inline std::vector<Complex> simulate(const Circuit& c) {
    std::vector<Complex> state(c.dim(), Complex(0.0, 0.0));
    state[0] = 1.0;
    return simulate(c, std::move(state));
}

inline constexpr std::size_t kMaxUnitaryQubits = 12;

/// Full 2^n x 2^n matrix of the circuit, built column by column.
inline gates::Unitary circuit_unitary(const Circuit& c) {
    if (c.n_qubits() > kMaxUnitaryQubits) {
        throw TooLarge("circuit_unitary: refusing to build a dense matrix on " +
                       std::to_string(c.n_qubits()) + " qubits");
    }
    const std::size_t d = c.dim();
    std::vector<Complex> entries(d * d, Complex(0.0, 0.0));
    for (std::size_t col = 0; col < d; ++col) {
        std::vector<Complex> state(d, Complex(0.0, 0.0));
        state[col] = 1.0;
        state = simulate(c, std::move(state));
        for (std::size_t row = 0; row < d; ++row) {
            entries[row * d + col] = state[row];
        }
    }
    return gates::Unitary(d, std::move(entries));
}

// ---------------------------------------------------------------------------
// Backends and compilation

struct LatticeBackend {
    lattice::LatticeRegister reg;
    int n_max = 8; ///< search bound for phase multiples n * phi0
};

struct SpinBackend {
    double kappa = 1.0;
    spinline::Architecture arch = spinline::Architecture::flying;
};

enum class BackendKind { lattice, spin };

/// How a backend realizes one gate kind.
enum class GateCapability {
    topological_ab, ///< encirclement phase on the lattice
    topological_ac, ///< spin holonomy segment program
    dynamical,      ///< Hamiltonian pulse, not phase accumulation
    unsupported,
};

inline const char* capability_name(GateCapability c) {
    switch (c) {
        case GateCapability::topological_ab: return "TOPOLOGICAL(AB)";
        case GateCapability::topological_ac: return "TOPOLOGICAL(AC)";
        case GateCapability::dynamical: return "DYNAMICAL";
        case GateCapability::unsupported: return "UNSUPPORTED";
    }
    return "?";
}

/**
 * Capability matrix. The lattice realizes P and C as encirclement phases and
 * falls back to pulses for H (via its hopping step) and Rx; Ry and Rz have no
 * lattice primitive and are rejected rather than synthesized. The spin
 * backend realizes every single-qubit gate as a holonomy and has no
 * two-qubit interaction.
 */
inline GateCapability capability(BackendKind backend, GateKind kind) {
    if (backend == BackendKind::lattice) {
        switch (kind) {
            case GateKind::p:
            case GateKind::c: return GateCapability::topological_ab;
            case GateKind::h:
            case GateKind::rx: return GateCapability::dynamical;
            case GateKind::ry:
            case GateKind::rz: return GateCapability::unsupported;
        }
    } else {
        switch (kind) {
            case GateKind::c: return GateCapability::unsupported;
            default: return GateCapability::topological_ac;
        }
    }
    return GateCapability::unsupported;
}

/// Per-instruction realization tags, aligned with Circuit::instrs().
struct CapabilityReport {
    std::vector<GateCapability> tags;
};

/// Per-qubit holonomy programs; the circuit unitary is their tensor product.
struct SpinCircuitProgram {
    std::vector<spinline::SpinProgram> per_qubit;
};

namespace detail {

inline int phase_multiple_or_throw(const LatticeBackend& backend, double angle,
                                   const char* gate) {
    if (std::abs(std::remainder(angle, 2.0 * std::numbers::pi)) < 1e-9) {
        return 0; // identity phase, nothing to emit
    }
    const int n = lattice::detail::solve_phase_multiple(backend.reg.rule().phi0(),
                                                        angle, backend.n_max);
    if (n == 0) {
        throw IncommensuratePhase(std::string(gate) + " angle " +
                                  std::to_string(angle) +
                                  " is not a reachable multiple of phi0 = " +
                                  std::to_string(backend.reg.rule().phi0()) +
                                  " within n_max = " +
                                  std::to_string(backend.n_max));
    }
    return n;
}

} // namespace detail

/**
 * Compile to lattice moves and pulses. P and C become single moves tagged
 * TOPOLOGICAL(AB); their angles must be integer multiples of the register's
 * phi0 (mod 2pi) within the backend's n_max. H becomes the three-step
 * move/hop/move program and Rx a bare hop, both tagged DYNAMICAL.
 */
inline std::pair<lattice::Program, CapabilityReport>
compile(const Circuit& c, const LatticeBackend& backend) {
    if (backend.reg.n_qubits() != c.n_qubits()) {
        throw DimensionMismatch("compile: register and circuit sizes differ");
    }
    lattice::Program prog;
    CapabilityReport report;
    for (const auto& g : c.instrs()) {
        const GateCapability tag = capability(BackendKind::lattice, g.kind);
        switch (g.kind) {
            case GateKind::p: {
                const int n = detail::phase_multiple_or_throw(backend, g.angle, "P");
                if (n != 0) {
                    prog.push_back(lattice::compile_p(backend.reg, g.targets[0], n));
                }
                break;
            }
            case GateKind::c: {
                const int n = detail::phase_multiple_or_throw(backend, g.angle, "C");
                if (n != 0) {
                    // Deterministic choice: always move the lower-indexed
                    // qubit's particle.
                    const auto lo = std::min(g.targets[0], g.targets[1]);
                    const auto hi = std::max(g.targets[0], g.targets[1]);
                    prog.push_back(lattice::compile_c(backend.reg, lo, hi, n));
                }
                break;
            }
            case GateKind::h: {
                auto steps =
                    lattice::compile_hadamard(backend.reg, g.targets[0], backend.n_max);
                prog.insert(prog.end(), std::make_move_iterator(steps.begin()),
                            std::make_move_iterator(steps.end()));
                break;
            }
            case GateKind::rx:
                prog.push_back(lattice::HoppingPulse{g.targets[0], g.angle});
                break;
            case GateKind::ry:
            case GateKind::rz:
                throw UnsupportedGate(std::string("lattice backend cannot realize ") +
                                      kind_name(g.kind));
        }
        report.tags.push_back(tag);
    }
    return {std::move(prog), std::move(report)};
}

/// Compile to per-qubit spin programs, all tagged TOPOLOGICAL(AC).
/// Two-qubit gates are rejected.
inline std::pair<SpinCircuitProgram, CapabilityReport>
compile(const Circuit& c, const SpinBackend& backend) {
    SpinCircuitProgram prog;
    prog.per_qubit.assign(c.n_qubits(),
                          spinline::SpinProgram{backend.arch, backend.kappa, {}});
    CapabilityReport report;
    for (const auto& g : c.instrs()) {
        if (g.kind == GateKind::c) {
            throw UnsupportedGate(
                "spin backend cannot realize the two-qubit gate C");
        }
        auto piece = spinline::compile_su2(gate_matrix(g), backend.arch,
                                           backend.kappa);
        auto& target = prog.per_qubit[g.targets[0]];
        target.segments.insert(target.segments.end(), piece.segments.begin(),
                               piece.segments.end());
        report.tags.push_back(GateCapability::topological_ac);
    }
    return {std::move(prog), std::move(report)};
}

inline constexpr std::size_t kMaxVerifyQubits = 8;

/// True iff the lattice program's unitary equals the circuit's up to a
/// global phase at tolerance `tol`.
inline bool verify_compilation(const Circuit& c, const LatticeBackend& backend,
                               const lattice::Program& prog, double tol) {
    if (c.n_qubits() > kMaxVerifyQubits) {
        throw TooLarge("verify_compilation: too many qubits");
    }
    if (backend.reg.n_qubits() != c.n_qubits()) {
        throw DimensionMismatch("verify_compilation: register and circuit differ");
    }
    return gates::equal_up_to_phase(lattice::program_unitary(backend.reg, prog),
                                    circuit_unitary(c), tol);
}

/// Spin variant: the program unitary is the little-endian tensor product of
/// the per-qubit holonomies.
inline bool verify_compilation(const Circuit& c, const SpinBackend&,
                               const SpinCircuitProgram& prog, double tol) {
    if (c.n_qubits() > kMaxVerifyQubits) {
        throw TooLarge("verify_compilation: too many qubits");
    }
    if (prog.per_qubit.size() != c.n_qubits()) {
        throw DimensionMismatch(
            "verify_compilation: program and circuit qubit counts differ");
    }
    gates::Unitary total = spinline::holonomy(prog.per_qubit.back());
    for (std::size_t q = prog.per_qubit.size() - 1; q-- > 0;) {
        total = gates::kron(total, spinline::holonomy(prog.per_qubit[q]));
    }
    return gates::equal_up_to_phase(total, circuit_unitary(c), tol);
}

} // namespace topogate::circuit

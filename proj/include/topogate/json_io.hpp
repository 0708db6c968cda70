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
 * JSON wire formats. All formats are documented in the README; in brief:
 *
 *  - 2D/3D path:   [[x, y], ...] / [[x, y, z], ...] in traversal order,
 *                  closure implicit
 *  - unitary:      {"dim": d, "entries": [[[re, im], ...], ...]} row-major
 *  - circuit:      {"qubits": n, "gates": [{"kind": "H", "targets": [0]},
 *                  {"kind": "P", "phi": 1.57, "targets": [0]}, ...]}
 *  - spin program: {"arch": "flying"|"static", "kappa": k,
 *                  "segments": [{"dl": [x,y,z], "E": [x,y,z]}, ...]}
 *  - lattice program file: {"backend": "lattice", "register": {...},
 *                  "instructions": [{"move": {...}} | {"hop": {...}}, ...]}
 *  - spin program file: {"backend": "spin", "qubits": n, "programs": [...]}
 */

#pragma once

#include <complex>
#include <string>
#include <vector>

#include <json.hpp>

#include "topogate/circuit.hpp"
#include "topogate/gates.hpp"
#include "topogate/geometry.hpp"
#include "topogate/lattice.hpp"
#include "topogate/monopole.hpp"
#include "topogate/spinline.hpp"

namespace topogate::io {

using nlohmann::json;

// -------------------------------------------------------------------- paths

inline json to_json(const geometry::ClosedPath2D& path) {
    json arr = json::array();
    for (const auto& p : path.vertices()) {
        arr.push_back({p.x, p.y});
    }
    return arr;
}

inline json to_json(const geometry::ClosedPath3D& path) {
    json arr = json::array();
    for (const auto& p : path.vertices()) {
        arr.push_back({p.x, p.y, p.z});
    }
    return arr;
}

inline geometry::ClosedPath2D path2d_from_json(const json& j) {
    std::vector<geometry::Point2D> pts;
    for (const auto& row : j) {
        if (!row.is_array() || row.size() != 2) {
            throw std::invalid_argument("path vertex must be [x, y]");
        }
        pts.push_back({row[0].get<double>(), row[1].get<double>()});
    }
    return geometry::ClosedPath2D(std::move(pts));
}

inline geometry::ClosedPath3D path3d_from_json(const json& j) {
    std::vector<geometry::Point3D> pts;
    for (const auto& row : j) {
        if (!row.is_array() || row.size() != 3) {
            throw std::invalid_argument("path vertex must be [x, y, z]");
        }
        pts.push_back(
            {row[0].get<double>(), row[1].get<double>(), row[2].get<double>()});
    }
    return geometry::ClosedPath3D(std::move(pts));
}

// ----------------------------------------------------------------- unitaries

inline json to_json(const gates::Unitary& u) {
    json rows = json::array();
    for (std::size_t i = 0; i < u.dim(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < u.dim(); ++j) {
            row.push_back({u(i, j).real(), u(i, j).imag()});
        }
        rows.push_back(std::move(row));
    }
    return {{"dim", u.dim()}, {"entries", std::move(rows)}};
}

inline gates::Unitary unitary_from_json(const json& j) {
    const auto dim = j.at("dim").get<std::size_t>();
    const auto& rows = j.at("entries");
    if (rows.size() != dim) {
        throw std::invalid_argument("unitary: row count does not match dim");
    }
    std::vector<gates::Complex> entries;
    entries.reserve(dim * dim);
    for (const auto& row : rows) {
        if (row.size() != dim) {
            throw std::invalid_argument("unitary: column count does not match dim");
        }
        for (const auto& cell : row) {
            if (!cell.is_array() || cell.size() != 2) {
                throw std::invalid_argument("unitary entry must be [re, im]");
            }
            entries.emplace_back(cell[0].get<double>(), cell[1].get<double>());
        }
    }
    return gates::Unitary(dim, std::move(entries));
}

inline json state_to_json(const std::vector<std::complex<double>>& amps) {
    json arr = json::array();
    for (const auto& a : amps) {
        arr.push_back({a.real(), a.imag()});
    }
    return arr;
}

// ------------------------------------------------------------------ circuits

inline json to_json(const circuit::Circuit& c) {
    json gates_json = json::array();
    for (const auto& g : c.instrs()) {
        json item = {{"kind", circuit::kind_name(g.kind)}, {"targets", g.targets}};
        switch (g.kind) {
            case circuit::GateKind::p:
            case circuit::GateKind::c: item["phi"] = g.angle; break;
            case circuit::GateKind::rx:
            case circuit::GateKind::ry:
            case circuit::GateKind::rz: item["theta"] = g.angle; break;
            case circuit::GateKind::h: break;
        }
        gates_json.push_back(std::move(item));
    }
    return {{"qubits", c.n_qubits()}, {"gates", std::move(gates_json)}};
}

inline circuit::GateKind gate_kind_from_name(const std::string& name) {
    if (name == "H") return circuit::GateKind::h;
    if (name == "P") return circuit::GateKind::p;
    if (name == "C") return circuit::GateKind::c;
    if (name == "Rx") return circuit::GateKind::rx;
    if (name == "Ry") return circuit::GateKind::ry;
    if (name == "Rz") return circuit::GateKind::rz;
    throw std::invalid_argument("unknown gate kind '" + name + "'");
}

inline circuit::Circuit circuit_from_json(const json& j) {
    const auto n = j.at("qubits").get<std::size_t>();
    std::vector<circuit::GateInstr> instrs;
    for (const auto& item : j.at("gates")) {
        circuit::GateInstr g;
        g.kind = gate_kind_from_name(item.at("kind").get<std::string>());
        g.targets = item.at("targets").get<std::vector<std::size_t>>();
        switch (g.kind) {
            case circuit::GateKind::p:
            case circuit::GateKind::c: g.angle = item.at("phi").get<double>(); break;
            case circuit::GateKind::rx:
            case circuit::GateKind::ry:
            case circuit::GateKind::rz:
                g.angle = item.at("theta").get<double>();
                break;
            case circuit::GateKind::h: break;
        }
        instrs.push_back(std::move(g));
    }
    return circuit::Circuit(n, std::move(instrs));
}

// ----------------------------------------------------------- lattice register

inline json to_json(const lattice::LatticeRegister& reg) {
    json sites = json::array();
    for (std::size_t q = 0; q < reg.n_qubits(); ++q) {
        const auto& s = reg.sites(q);
        sites.push_back({{"a", {s.a.x, s.a.y}},
                         {"b", {s.b.x, s.b.y}},
                         {"ancilla", {s.ancilla.x, s.ancilla.y}}});
    }
    const auto& rule = reg.rule();
    return {{"qubits", reg.n_qubits()},
            {"clearance", reg.clearance()},
            {"rule",
             {{"phi0", rule.phi0()},
              {"signs",
               {{"xy", rule.sign_xy()},
                {"yx", rule.sign_yx()},
                {"xx", rule.sign_xx()},
                {"yy", rule.sign_yy()}}}}},
            {"sites", std::move(sites)}};
}

inline lattice::LatticeRegister register_from_json(const json& j) {
    const auto& rule_json = j.at("rule");
    const auto& signs = rule_json.at("signs");
    const lattice::PhaseRule rule(rule_json.at("phi0").get<double>(),
                                  signs.at("xy").get<int>(),
                                  signs.at("yx").get<int>(),
                                  signs.at("xx").get<int>(),
                                  signs.at("yy").get<int>());
    std::vector<lattice::QubitSites> sites;
    for (const auto& s : j.at("sites")) {
        const auto pt = [](const json& arr) -> geometry::Point2D {
            return {arr.at(0).get<double>(), arr.at(1).get<double>()};
        };
        sites.push_back({pt(s.at("a")), pt(s.at("b")), pt(s.at("ancilla"))});
    }
    if (sites.size() != j.at("qubits").get<std::size_t>()) {
        throw std::invalid_argument("register: qubit count does not match sites");
    }
    return lattice::LatticeRegister(std::move(sites), rule,
                                    j.at("clearance").get<double>());
}

// ------------------------------------------------------------ spin programs

inline std::string arch_name(spinline::Architecture arch) {
    return arch == spinline::Architecture::flying ? "flying" : "static";
}

inline spinline::Architecture arch_from_name(const std::string& name) {
    if (name == "flying") return spinline::Architecture::flying;
    if (name == "static") return spinline::Architecture::static_field;
    throw std::invalid_argument("unknown architecture '" + name + "'");
}

inline json to_json(const spinline::SpinProgram& prog) {
    json segments = json::array();
    for (const auto& s : prog.segments) {
        segments.push_back({{"dl", {s.dl.x, s.dl.y, s.dl.z}},
                            {"E", {s.field.x, s.field.y, s.field.z}}});
    }
    return {{"arch", arch_name(prog.arch)},
            {"kappa", prog.kappa},
            {"segments", std::move(segments)}};
}

inline spinline::SpinProgram spin_program_from_json(const json& j) {
    spinline::SpinProgram prog;
    prog.arch = arch_from_name(j.at("arch").get<std::string>());
    prog.kappa = j.at("kappa").get<double>();
    for (const auto& s : j.at("segments")) {
        const auto vec = [](const json& arr) -> geometry::Point3D {
            return {arr.at(0).get<double>(), arr.at(1).get<double>(),
                    arr.at(2).get<double>()};
        };
        prog.segments.push_back({vec(s.at("dl")), vec(s.at("E"))});
    }
    return prog;
}

// ------------------------------------------------------------- program files

inline json to_json(const lattice::MoveInstruction& mv) {
    return {{"qubit", mv.qubit},
            {"site", mv.site == lattice::RailSite::a ? "a" : "b"},
            {"path", to_json(mv.path)}};
}

inline lattice::MoveInstruction move_from_json(const json& j) {
    const auto site_name = j.at("site").get<std::string>();
    if (site_name != "a" && site_name != "b") {
        throw std::invalid_argument("move site must be 'a' or 'b'");
    }
    return {j.at("qubit").get<std::size_t>(),
            site_name == "a" ? lattice::RailSite::a : lattice::RailSite::b,
            path2d_from_json(j.at("path"))};
}

inline json program_file_json(const lattice::LatticeRegister& reg,
                              const lattice::Program& prog) {
    json instructions = json::array();
    for (const auto& instr : prog) {
        if (const auto* mv = std::get_if<lattice::MoveInstruction>(&instr)) {
            instructions.push_back({{"move", to_json(*mv)}});
        } else {
            const auto& hop = std::get<lattice::HoppingPulse>(instr);
            instructions.push_back(
                {{"hop", {{"qubit", hop.qubit}, {"theta", hop.theta}}}});
        }
    }
    return {{"backend", "lattice"},
            {"register", to_json(reg)},
            {"instructions", std::move(instructions)}};
}

inline json program_file_json(std::size_t n_qubits,
                              const circuit::SpinCircuitProgram& prog) {
    json programs = json::array();
    for (const auto& p : prog.per_qubit) {
        programs.push_back(to_json(p));
    }
    return {{"backend", "spin"},
            {"qubits", n_qubits},
            {"programs", std::move(programs)}};
}

inline lattice::Program lattice_program_from_json(const json& j) {
    lattice::Program prog;
    for (const auto& item : j) {
        if (item.contains("move")) {
            prog.push_back(move_from_json(item.at("move")));
        } else if (item.contains("hop")) {
            const auto& hop = item.at("hop");
            prog.push_back(lattice::HoppingPulse{
                hop.at("qubit").get<std::size_t>(), hop.at("theta").get<double>()});
        } else {
            throw std::invalid_argument("program instruction must be move or hop");
        }
    }
    return prog;
}

inline circuit::SpinCircuitProgram spin_circuit_program_from_json(const json& j) {
    circuit::SpinCircuitProgram prog;
    for (const auto& item : j.at("programs")) {
        prog.per_qubit.push_back(spin_program_from_json(item));
    }
    if (prog.per_qubit.size() != j.at("qubits").get<std::size_t>()) {
        throw std::invalid_argument("spin program file: qubit count mismatch");
    }
    return prog;
}

// ------------------------------------------------------------ monopole model

inline json to_json(const monopole::MonopoleConfig& cfg) {
    return {{"position", {cfg.position.x, cfg.position.y, cfg.position.z}},
            {"n_q", cfg.charge_quantum}};
}

inline monopole::MonopoleConfig monopole_from_json(const json& j) {
    const auto& pos = j.at("position");
    monopole::MonopoleConfig cfg{{pos.at(0).get<double>(), pos.at(1).get<double>(),
                                  pos.at(2).get<double>()},
                                 j.at("n_q").get<int>()};
    monopole::validate(cfg);
    return cfg;
}

} // namespace topogate::io

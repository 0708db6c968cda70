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

// Batch front end. Payload goes to stdout (or -o files), diagnostics to
// stderr. Exit codes:
//   0  success / verification match
//   1  verification mismatch
//   2  malformed input (bad JSON, bad schema, bad flag values)
//   3  dimension errors and size guards
//   4  unsupported gate for the chosen backend
//   5  phase not commensurate with the register's phi0
//   6  query point or apex lies on the path
//   7  other domain errors (clearance, layout, architecture, coupling)

#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "topogate/circuit.hpp"
#include "topogate/errors.hpp"
#include "topogate/gates.hpp"
#include "topogate/geometry.hpp"
#include "topogate/json_io.hpp"
#include "topogate/lattice.hpp"
#include "topogate/monopole.hpp"
#include "topogate/spinline.hpp"

namespace {

using nlohmann::json;
using namespace topogate;

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open '" + path + "'");
    }
    return json::parse(in);
}

void emit(const json& payload, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << payload.dump() << "\n";
        return;
    }
    std::ofstream out(out_path);
    if (!out) {
        throw std::invalid_argument("cannot write '" + out_path + "'");
    }
    out << payload.dump() << "\n";
}

void print_scalar(double value) { std::printf("%.12g\n", value); }

struct CompileOptions {
    std::string circuit_path;
    std::string backend;
    std::string output;
    double phi0 = 0.5 * std::numbers::pi;
    int n_max = 8;
    double kappa = 1.0;
    std::string arch = "flying";
};

int run_compile(const CompileOptions& opt) {
    const circuit::Circuit circ = io::circuit_from_json(load_json(opt.circuit_path));
    json program_json;
    circuit::CapabilityReport report;
    if (opt.backend == "lattice") {
        circuit::LatticeBackend backend{
            lattice::LatticeRegister::row_layout(
                circ.n_qubits(), lattice::PhaseRule::charge_dipole(opt.phi0)),
            opt.n_max};
        auto [prog, rep] = circuit::compile(circ, backend);
        program_json = io::program_file_json(backend.reg, prog);
        report = std::move(rep);
    } else {
        circuit::SpinBackend backend{opt.kappa, io::arch_from_name(opt.arch)};
        auto [prog, rep] = circuit::compile(circ, backend);
        program_json = io::program_file_json(circ.n_qubits(), prog);
        report = std::move(rep);
    }
    emit(program_json, opt.output);
    for (std::size_t i = 0; i < report.tags.size(); ++i) {
        const auto& g = circ.instrs()[i];
        std::string targets;
        for (const auto t : g.targets) {
            targets += (targets.empty() ? "q" : " q") + std::to_string(t);
        }
        std::printf("gate %zu: %-2s %-8s -> %s\n", i, circuit::kind_name(g.kind),
                    targets.c_str(), circuit::capability_name(report.tags[i]));
    }
    return 0;
}

int run_verify(const std::string& circuit_path, const std::string& program_path,
               double tol) {
    const circuit::Circuit circ = io::circuit_from_json(load_json(circuit_path));
    const json prog_json = load_json(program_path);
    const auto backend_name = prog_json.at("backend").get<std::string>();
    gates::Unitary target = circuit::circuit_unitary(circ);
    gates::Unitary realized = gates::Unitary::identity(target.dim());
    if (backend_name == "lattice") {
        const auto reg = io::register_from_json(prog_json.at("register"));
        if (reg.n_qubits() != circ.n_qubits()) {
            throw DimensionMismatch("verify: register and circuit qubit counts differ");
        }
        realized = lattice::program_unitary(
            reg, io::lattice_program_from_json(prog_json.at("instructions")));
    } else if (backend_name == "spin") {
        const auto prog = io::spin_circuit_program_from_json(prog_json);
        if (prog.per_qubit.size() != circ.n_qubits()) {
            throw DimensionMismatch("verify: program and circuit qubit counts differ");
        }
        gates::Unitary total = spinline::holonomy(prog.per_qubit.back());
        for (std::size_t q = prog.per_qubit.size() - 1; q-- > 0;) {
            total = gates::kron(total, spinline::holonomy(prog.per_qubit[q]));
        }
        realized = std::move(total);
    } else {
        throw std::invalid_argument("unknown backend '" + backend_name + "'");
    }
    const double deviation = gates::phase_distance(realized, target);
    std::printf("max deviation (up to global phase): %.12g\n", deviation);
    return deviation <= tol ? 0 : 1;
}

int dispatch(int argc, char** argv) {
    CLI::App app{"Topological quantum gate toolkit"};
    app.require_subcommand(1);

    // simulate
    auto* sim = app.add_subcommand("simulate", "run a circuit and print amplitudes");
    std::string sim_circuit, sim_initial, sim_output;
    sim->add_option("circuit", sim_circuit, "circuit JSON file")->required();
    sim->add_option("--initial", sim_initial,
                    "basis bitstring q_{n-1}...q_0 (default all zeros)");
    sim->add_option("-o,--output", sim_output, "write amplitudes to a file");

    // compile
    auto* comp = app.add_subcommand("compile", "compile a circuit to a backend");
    CompileOptions comp_opt;
    comp->add_option("circuit", comp_opt.circuit_path, "circuit JSON file")
        ->required();
    comp->add_option("--backend", comp_opt.backend, "lattice or spin")
        ->required()
        ->check(CLI::IsMember({"lattice", "spin"}));
    comp->add_option("-o,--output", comp_opt.output, "program file to write");
    comp->add_option("--phi0", comp_opt.phi0,
                     "lattice base phase (default pi/2)");
    comp->add_option("--n-max", comp_opt.n_max,
                     "largest phase multiple searched (default 8)");
    comp->add_option("--kappa", comp_opt.kappa, "spin coupling (default 1)");
    comp->add_option("--arch", comp_opt.arch, "spin architecture")
        ->check(CLI::IsMember({"flying", "static"}));

    // verify
    auto* ver = app.add_subcommand("verify", "check a program against a circuit");
    std::string ver_circuit, ver_program;
    double ver_tol = 1e-10;
    ver->add_option("circuit", ver_circuit, "circuit JSON file")->required();
    ver->add_option("program", ver_program, "program JSON file")->required();
    ver->add_option("--tol", ver_tol, "match tolerance (default 1e-10)");

    // decompose
    auto* dec = app.add_subcommand("decompose", "ZYZ angles of a 2x2 unitary");
    std::string dec_unitary;
    dec->add_option("unitary", dec_unitary, "unitary JSON file")->required();

    // geometry commands
    auto* wind = app.add_subcommand("winding", "winding number of a 2D loop");
    std::string wind_path;
    std::vector<double> wind_point;
    wind->add_option("path", wind_path, "2D path JSON file")->required();
    wind->add_option("--point", wind_point, "puncture x y")
        ->required()
        ->expected(2);

    auto* sangle = app.add_subcommand("solid-angle", "solid angle of a 3D loop");
    std::string sangle_path;
    std::vector<double> sangle_apex;
    sangle->add_option("path", sangle_path, "3D path JSON file")->required();
    sangle->add_option("--apex", sangle_apex, "apex x y z")->required()->expected(3);

    auto* mono = app.add_subcommand("monopole-phase",
                                    "phase of a charge loop around a monopole");
    std::string mono_path;
    std::vector<double> mono_pos;
    int mono_nq = 1;
    mono->add_option("path", mono_path, "3D path JSON file")->required();
    mono->add_option("--monopole", mono_pos, "monopole x y z")
        ->required()
        ->expected(3);
    mono->add_option("--nq", mono_nq, "charge quantum (default 1)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (sim->parsed()) {
        const circuit::Circuit circ = io::circuit_from_json(load_json(sim_circuit));
        const auto amps = sim_initial.empty() ? circuit::simulate(circ)
                                              : circuit::simulate(circ, sim_initial);
        emit(io::state_to_json(amps), sim_output);
        return 0;
    }
    if (comp->parsed()) {
        return run_compile(comp_opt);
    }
    if (ver->parsed()) {
        return run_verify(ver_circuit, ver_program, ver_tol);
    }
    if (dec->parsed()) {
        const auto u = io::unitary_from_json(load_json(dec_unitary));
        const gates::EulerZYZ e = gates::euler_zyz(u);
        emit({{"alpha", e.alpha}, {"theta", e.theta}, {"beta", e.beta},
              {"delta", e.delta}},
             "");
        return 0;
    }
    if (wind->parsed()) {
        const auto path = io::path2d_from_json(load_json(wind_path));
        const int w = geometry::winding_number(path, {wind_point[0], wind_point[1]});
        std::printf("%d\n", w);
        return 0;
    }
    if (sangle->parsed()) {
        const auto path = io::path3d_from_json(load_json(sangle_path));
        print_scalar(geometry::solid_angle(
            path, {sangle_apex[0], sangle_apex[1], sangle_apex[2]}));
        return 0;
    }
    if (mono->parsed()) {
        const auto path = io::path3d_from_json(load_json(mono_path));
        const monopole::MonopoleConfig cfg{{mono_pos[0], mono_pos[1], mono_pos[2]},
                                           mono_nq};
        print_scalar(monopole::monopole_phase(path, cfg));
        return 0;
    }
    return 2;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return dispatch(argc, argv);
    } catch (const PointOnPath& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 6;
    } catch (const ApexOnPath& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 6;
    } catch (const UnsupportedGate& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const IncommensuratePhase& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 5;
    } catch (const DimensionMismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const TooLarge& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 7;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: malformed input: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 7;
    }
}

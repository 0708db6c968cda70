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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct RunResult {
    int exit_code = -1;
    std::string out;
};

const fs::path& work_dir() {
    static const fs::path dir = [] {
        auto d = fs::temp_directory_path() / "topogate_cli_test";
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

fs::path write_file(const std::string& name, const std::string& content) {
    const fs::path p = work_dir() / name;
    std::ofstream(p) << content;
    return p;
}

RunResult run(const std::string& args) {
    const fs::path out_file = work_dir() / "stdout.txt";
    const std::string cmd = std::string(TOPOGATE_CLI_PATH) + " " + args + " > " +
                            out_file.string() + " 2> " +
                            (work_dir() / "stderr.txt").string();
    const int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WEXITSTATUS(status);
    std::ostringstream ss;
    ss << std::ifstream(out_file).rdbuf();
    r.out = ss.str();
    return r;
}

const char* kHCircuit = R"({"qubits":1,"gates":[{"kind":"H","targets":[0]}]})";
const char* kSynthCircuit =
    R"({"qubits":1,"gates":[
        {"kind":"P","phi":-1.5707963267948966,"targets":[0]},
        {"kind":"Rx","theta":0.7853981633974483,"targets":[0]},
        {"kind":"P","phi":-1.5707963267948966,"targets":[0]}]})";

} // namespace

TEST_CASE("simulate prints little-endian amplitudes") {
    const auto circ = write_file("h.json", kHCircuit);
    const auto r = run("simulate " + circ.string());
    REQUIRE(r.exit_code == 0);
    const json amps = json::parse(r.out);
    REQUIRE(amps.size() == 2);
    CHECK(amps[0][0].get<double>() == Catch::Approx(0.7071).margin(1e-4));
    CHECK(amps[0][1].get<double>() == Catch::Approx(0.0).margin(1e-12));
    CHECK(amps[1][0].get<double>() == Catch::Approx(0.7071).margin(1e-4));

    // The move/hop/move synthesis prints the same state.
    const auto synth = write_file("synth.json", kSynthCircuit);
    const auto rs = run("simulate " + synth.string());
    REQUIRE(rs.exit_code == 0);
    const json amps2 = json::parse(rs.out);
    for (int i = 0; i < 2; ++i) {
        for (int part = 0; part < 2; ++part) {
            CHECK(amps2[i][part].get<double>() ==
                  Catch::Approx(amps[i][part].get<double>()).margin(1e-4));
        }
    }

    // Identical invocations produce byte-identical output.
    CHECK(run("simulate " + circ.string()).out == r.out);

    const auto from_one = run("simulate " + circ.string() + " --initial 1");
    const json amps3 = json::parse(from_one.out);
    CHECK(amps3[1][0].get<double>() == Catch::Approx(-0.7071).margin(1e-4));
}

TEST_CASE("simulate rejects malformed and mismatched input") {
    const auto broken = write_file("broken.json", "{not json");
    CHECK(run("simulate " + broken.string()).exit_code == 2);

    const auto circ = write_file("h2.json", kHCircuit);
    CHECK(run("simulate " + circ.string() + " --initial 01").exit_code == 3);

    CHECK(run("simulate " + (work_dir() / "missing.json").string()).exit_code == 2);
}

TEST_CASE("compile reports capabilities and writes programs") {
    const auto circ = write_file(
        "pc.json",
        R"({"qubits":2,"gates":[
            {"kind":"P","phi":1.5707963267948966,"targets":[0]},
            {"kind":"C","phi":3.141592653589793,"targets":[0,1]}]})");
    const auto prog = (work_dir() / "pc_prog.json").string();
    const auto r = run("compile " + circ.string() +
                       " --backend lattice --phi0 1.5707963267948966 -o " + prog);
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("TOPOLOGICAL(AB)") != std::string::npos);
    const json pj = json::parse(std::ifstream(prog));
    CHECK(pj.at("backend") == "lattice");
    CHECK(pj.at("instructions").size() == 2);

    // Verification against the source circuit passes...
    CHECK(run("verify " + circ.string() + " " + prog).exit_code == 0);
    // ...and against a different circuit fails with exit 1.
    const auto other = write_file(
        "other.json",
        R"({"qubits":2,"gates":[{"kind":"P","phi":-1.5707963267948966,"targets":[0]}]})");
    CHECK(run("verify " + other.string() + " " + prog).exit_code == 1);
    // Qubit-count mismatch is a dimension error.
    const auto one = write_file("one.json", kHCircuit);
    CHECK(run("verify " + one.string() + " " + prog).exit_code == 3);
}

TEST_CASE("compile failure exit codes") {
    const auto two_qubit = write_file(
        "cz.json",
        R"({"qubits":2,"gates":[{"kind":"C","phi":3.141592653589793,"targets":[0,1]}]})");
    CHECK(run("compile " + two_qubit.string() + " --backend spin").exit_code == 4);

    const auto odd_phase = write_file(
        "odd.json", R"({"qubits":1,"gates":[{"kind":"P","phi":1.0,"targets":[0]}]})");
    CHECK(run("compile " + odd_phase.string() +
              " --backend lattice --phi0 1.5707963267948966 --n-max 10")
              .exit_code == 5);
}

TEST_CASE("spin compile verifies end to end") {
    const auto circ = write_file(
        "spin.json",
        R"({"qubits":2,"gates":[
            {"kind":"H","targets":[0]},
            {"kind":"Rz","theta":0.7,"targets":[0]},
            {"kind":"Ry","theta":-0.4,"targets":[1]}]})");
    const auto prog = (work_dir() / "spin_prog.json").string();
    const auto r = run("compile " + circ.string() +
                       " --backend spin --arch static --kappa 0.8 -o " + prog);
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("TOPOLOGICAL(AC)") != std::string::npos);
    CHECK(run("verify " + circ.string() + " " + prog + " --tol 1e-10").exit_code ==
          0);
}

TEST_CASE("decompose prints the euler angles of a unitary file") {
    // Hadamard as JSON.
    const double s = 0.7071067811865476;
    json u = {{"dim", 2},
              {"entries", {{{s, 0.0}, {s, 0.0}}, {{s, 0.0}, {-s, 0.0}}}}};
    const auto file = write_file("h_unitary.json", u.dump());
    const auto r = run("decompose " + file.string());
    REQUIRE(r.exit_code == 0);
    const json angles = json::parse(r.out);
    CHECK(angles.at("alpha").get<double>() ==
          Catch::Approx(1.5707963267948966).margin(1e-10));
    CHECK(angles.at("theta").get<double>() ==
          Catch::Approx(0.7853981633974483).margin(1e-10));
    CHECK(angles.at("beta").get<double>() == Catch::Approx(0.0).margin(1e-10));
    CHECK(angles.at("delta").get<double>() ==
          Catch::Approx(-1.5707963267948966).margin(1e-10));

    // A non-unitary file is malformed input.
    json bad = {{"dim", 2}, {"entries", {{{1.0, 0.0}, {0.0, 0.0}}, {{0.0, 0.0}, {2.0, 0.0}}}}};
    const auto bad_file = write_file("bad_unitary.json", bad.dump());
    CHECK(run("decompose " + bad_file.string()).exit_code == 2);
}

TEST_CASE("geometry subcommands print scalars") {
    const auto square =
        write_file("square.json", "[[1,-1],[1,1],[-1,1],[-1,-1]]");
    const auto r = run("winding " + square.string() + " --point 0 0");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out == "1\n");

    // Point on the path: exit 6.
    CHECK(run("winding " + square.string() + " --point 1 0").exit_code == 6);

    // Planar loop in a plane containing the monopole: phase pi.
    std::ostringstream loop;
    loop << "[";
    for (int k = 0; k < 1000; ++k) {
        const double phi = 2.0 * 3.14159265358979323846 * k / 1000.0;
        loop << (k ? "," : "") << "[" << std::cos(phi) << "," << std::sin(phi)
             << ",0]";
    }
    loop << "]";
    const auto circle = write_file("circle.json", loop.str());
    const auto mp = run("monopole-phase " + circle.string() + " --monopole 0 0 0");
    REQUIRE(mp.exit_code == 0);
    CHECK(std::stod(mp.out) == Catch::Approx(3.14159265).margin(1e-4));

    const auto sa = run("solid-angle " + circle.string() + " --apex 0 0 -5");
    REQUIRE(sa.exit_code == 0);
    CHECK(std::stod(sa.out) ==
          Catch::Approx(2 * 3.14159265358979 * (1 - 5 / std::sqrt(26.0)))
              .margin(1e-4));

    CHECK(run("solid-angle " + circle.string() + " --apex 1 0 0").exit_code == 6);
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run("frobnicate").exit_code == 2);
    CHECK(run("simulate").exit_code == 2);
    const auto square = write_file("sq2.json", "[[1,-1],[1,1],[-1,1],[-1,-1]]");
    CHECK(run("winding " + square.string() + " --point 1").exit_code == 2);
}

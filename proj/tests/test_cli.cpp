// Copyright 2026 The twoq Authors
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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include <unsupported/Eigen/MatrixFunctions>

#include "support.hpp"
#include "twoq/cli/angle.hpp"
#include "twoq/cli/commands.hpp"
#include "twoq/cli/document.hpp"
#include "twoq/cli/named_gate.hpp"
#include "twoq/errors.hpp"
#include "twoq/gates.hpp"

using namespace twoq;
using namespace twoq::cli;
using namespace twoq::testing;
using nlohmann::json;

namespace {

const cplx I1(0.0, 1.0);

struct Run {
  int status;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = run_cli(args, out, err);
  return {status, out.str(), err.str()};
}

std::filesystem::path write_file(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::current_path() / ("cli_test_" + name);
  std::ofstream(path) << text;
  return path;
}

std::string identity_json() { return matrix_to_json(Eigen::MatrixXcd::Identity(4, 4)).dump(); }

// Value printed after "key: " in command output.
std::string field(const std::string& text, const std::string& key) {
  const auto at = text.find(key + ": ");
  if (at == std::string::npos) return {};
  const auto start = at + key.size() + 2;
  return text.substr(start, text.find('\n', start) - start);
}

}  // namespace

TEST_CASE("angle expressions") {
  CHECK(parse_angle("pi/5") == kPi / 5);
  CHECK(parse_angle("2pi/3") == 2 * kPi / 3);
  CHECK(parse_angle("2*pi/3") == 2 * kPi / 3);
  CHECK(parse_angle("-3*pi/4") == -3 * kPi / 4);
  CHECK(parse_angle("0.25") == 0.25);
  CHECK(parse_angle("(pi+1)/2") == (kPi + 1) / 2);
  CHECK(parse_angle(" pi ") == kPi);
  CHECK(parse_angle("1e-3") == 1e-3);
  CHECK(parse_angle("pi - pi/4") == kPi - kPi / 4);
  for (const char* bad : {"", "pi/", "foo", "(pi", "1/0", "2pi)", "--"})
    CHECK_THROWS_AS(parse_angle(bad), ParseError);
}

TEST_CASE("named gates match their closed forms") {
  Unitary4 cnot = Unitary4::Zero();
  cnot(0, 0) = cnot(1, 1) = cnot(2, 3) = cnot(3, 2) = 1;
  CHECK(max_abs_diff(resolve_gate("CNOT").matrix, cnot) <= 1e-15);
  CHECK(max_abs_diff(resolve_gate("cx").matrix, cnot) <= 1e-15);

  Unitary4 cz = Unitary4::Identity();
  cz(3, 3) = -1;
  CHECK(max_abs_diff(resolve_gate("CZ").matrix, cz) <= 1e-15);

  Unitary4 swap = Unitary4::Zero();
  swap(0, 0) = swap(1, 2) = swap(2, 1) = swap(3, 3) = 1;
  CHECK(max_abs_diff(resolve_gate("SWAP").matrix, swap) <= 1e-15);

  Unitary4 root = Unitary4::Zero();
  root(0, 0) = root(3, 3) = 1;
  root(1, 1) = root(2, 2) = (1.0 - I1) / 2.0;
  root(1, 2) = root(2, 1) = (1.0 + I1) / 2.0;
  CHECK(max_abs_diff(resolve_gate("sqrt_swap").matrix, root) <= 1e-15);

  const Unitary4 h = kPi / 2 * tensor(pauli::x(), pauli::x()) + kPi / 4 * tensor(pauli::y(), pauli::y());
  CHECK(max_abs_diff(resolve_gate("B").matrix, Unitary4((I1 * 0.5 * h).exp())) <= 1e-15);

  Unitary4 cp = Unitary4::Identity();
  cp(3, 3) = std::polar(1.0, 2 * kPi / 3);
  CHECK(max_abs_diff(resolve_gate("CPHASE(2pi/3)").matrix, cp) <= 1e-15);

  const cplx e = std::polar(1.0, kPi / 6);
  Unitary4 zz = Unitary4::Zero();
  zz.diagonal() << e, std::conj(e), std::conj(e), e;
  CHECK(max_abs_diff(resolve_gate("zz(pi/3)").matrix, zz) <= 1e-15);

  CHECK(resolve_gate("CPHASE(2pi/3)").name == "CPHASE(2pi/3)");
}

TEST_CASE("named gate errors") {
  CHECK_THROWS_AS(resolve_gate("TOFFOLI"), ParseError);
  CHECK_THROWS_AS(resolve_gate("CPHASE"), ParseError);
  CHECK_THROWS_AS(resolve_gate("CPHASE()"), ParseError);
  CHECK_THROWS_AS(resolve_gate("CNOT(pi)"), ParseError);
  CHECK_THROWS_AS(resolve_gate("ZZ(pi"), ParseError);
  CHECK_THROWS_AS(resolve_gate("MATRIX(does_not_exist.json)"), ParseError);
  const auto small = write_file("small.json", matrix_to_json(Eigen::MatrixXcd::Identity(2, 2)).dump());
  CHECK_THROWS_AS(resolve_gate("MATRIX(" + small.string() + ")"), ParseError);
}

TEST_CASE("matrix interchange") {
  const json nested = json::parse("[[[0,0],[1,0]],[[1,0],[0,0]]]");
  const json flat = json::parse("[[0,0],[1,0],[1,0],[0,0]]");
  CHECK(matrix_from_json(nested, 1e-10) == Eigen::MatrixXcd(pauli::x()));
  CHECK(matrix_from_json(flat, 1e-10) == Eigen::MatrixXcd(pauli::x()));

  std::mt19937_64 rng(51);
  const Unitary4 u = haar4(rng);
  CHECK(Unitary4(matrix_from_json(matrix_to_json(u), 1e-10)) == u);

  CHECK_THROWS_AS(matrix_from_json(json::parse("[[[2,0],[0,0]],[[0,0],[1,0]]]"), 1e-10), NonUnitaryError);
  CHECK_THROWS_AS(matrix_from_json(json::parse("[[1,0],[0,0],[0,0]]"), 1e-10), ParseError);
  CHECK_THROWS_AS(matrix_from_json(json::parse("[[[1,0],[0,0]],[[0,0]]]"), 1e-10), ParseError);
  CHECK_THROWS_AS(matrix_from_json(json::parse("[[1,\"a\"],[0,0],[0,0],[1,0]]"), 1e-10), ParseError);
  CHECK_THROWS_AS(matrix_from_json(json::parse("{}"), 1e-10), ParseError);

  const auto bad = write_file("bad.json", "[[1,0],");
  CHECK_THROWS_AS(load_matrix_file(bad, 1e-10), ParseError);

  Unitary4 near = Unitary4::Identity();
  near(0, 0) = 1 + 1e-12;
  CHECK_NOTHROW(matrix_from_json(matrix_to_json(near), 1e-10));
}

TEST_CASE("circuit documents round trip") {
  std::mt19937_64 rng(52);
  for (int k = 0; k < 10; ++k) {
    CircuitDocument doc;
    doc.entangler = {"MATRIX(x.json)", haar4(rng)};
    doc.target = GateDescriptor{"T", haar4(rng)};
    SynthesisResult r = synthesize(doc.target->matrix, doc.entangler.matrix);
    doc.circuit = r.circuit;
    doc.report = r.report;
    const std::string text = emit(doc);
    const CircuitDocument back = parse_document(text);
    CHECK(back == doc);
    CHECK(emit(back) == text);
  }

  CircuitDocument bare;
  bare.entangler = resolve_gate("CNOT");
  bare.circuit.add_entangler();
  bare.circuit.add_local(random_local(rng));
  bare.circuit.phase = random_phase(rng);
  const CircuitDocument back = parse_document(emit(bare));
  CHECK(back == bare);
  CHECK_FALSE(back.target.has_value());
  CHECK_FALSE(back.report.has_value());
  REQUIRE(back.circuit.elements.size() == 2);
  CHECK(std::holds_alternative<EntanglerApp>(back.circuit.elements[0]));

  CircuitDocument other = bare;
  other.circuit.phase *= -1.0;
  CHECK_FALSE(other == bare);
}

TEST_CASE("malformed circuit documents") {
  CHECK_THROWS_AS(parse_document("not json"), ParseError);
  CHECK_THROWS_AS(parse_document("[]"), ParseError);
  CHECK_THROWS_AS(parse_document(R"({"format":"other","version":1})"), ParseError);

  CircuitDocument doc;
  doc.entangler = resolve_gate("CZ");
  doc.circuit.add_entangler();
  json j = to_json(doc);
  j["elements"][0]["kind"] = "measure";
  CHECK_THROWS_AS(document_from_json(j), ParseError);
  j = to_json(doc);
  j["version"] = 2;
  CHECK_THROWS_AS(document_from_json(j), ParseError);
  j = to_json(doc);
  j["header"].erase("tolerances");
  CHECK_THROWS_AS(document_from_json(j), ParseError);
  j = to_json(doc);
  j.erase("phase");
  CHECK_THROWS_AS(document_from_json(j), ParseError);
}

TEST_CASE("synth command") {
  const Run a = run({"synth", "--target", "CNOT", "--entangler", "ZZ(pi/3)"});
  REQUIRE(a.status == 0);
  const CircuitDocument doc = parse_document(a.out);
  REQUIRE(doc.report.has_value());
  CHECK(doc.report->entangler_count == 2);
  CHECK(doc.entangler.name == "ZZ(pi/3)");
  CHECK(doc.target->name == "CNOT");

  const Run b = run({"synth", "--target", "SQRT_SWAP", "--entangler", "CPHASE(2pi/3)"});
  REQUIRE(b.status == 0);
  const CircuitDocument root = parse_document(b.out);
  CHECK(root.report->entangler_count == 6);
  CHECK(root.report->local_count == 7);

  const auto id = write_file("id.json", identity_json());
  const Run c = run({"synth", "--target", "MATRIX(" + id.string() + ")", "--entangler", "CNOT"});
  REQUIRE(c.status == 0);
  CHECK(parse_document(c.out).report->entangler_count == 0);

  const auto out = std::filesystem::current_path() / "cli_test_out.json";
  const Run d = run({"synth", "--target", "SWAP", "--entangler", "CNOT", "--out", out.string(), "--tol", "1e-9"});
  REQUIRE(d.status == 0);
  CHECK(field(d.out, "entangler_count") == "6");
  const CircuitDocument saved = load_document(out);
  CHECK(saved.tolerances.verify_tol == 1e-9);
  CHECK(saved.report->entangler_count == 6);
}

TEST_CASE("classify command") {
  const Run cnot = run({"classify", "--gate", "CNOT"});
  REQUIRE(cnot.status == 0);
  CHECK(field(cnot.out, "canonical") == "(1.5707963267948966, 0, 0)");
  CHECK(field(cnot.out, "class") == "Entangling");
  CHECK(field(cnot.out, "bound") == "6");
  CHECK(field(cnot.out, "n") == "1");
  CHECK(field(cnot.out, "apps_per_unit") == "1");

  const Run swap = run({"classify", "--gate", "SWAP"});
  REQUIRE(swap.status == 0);
  CHECK(field(swap.out, "class") == "SwapClass");
  CHECK(field(swap.out, "bound").empty());

  const Run cp = run({"classify", "--gate", "CPHASE(pi/5)"});
  REQUIRE(cp.status == 0);
  CHECK(field(cp.out, "class") == "Entangling");
  CHECK(field(cp.out, "bound") == "18");
  const std::string vec = field(cp.out, "canonical");
  double c1 = 0, c2 = 1, c3 = 1;
  CHECK(std::sscanf(vec.c_str(), "(%lf, %lf, %lf)", &c1, &c2, &c3) == 3);
  CHECK(std::abs(c1 - kPi / 10) < 1e-10);
  CHECK(std::abs(c2) < 1e-10);
  CHECK(std::abs(c3) < 1e-10);

  const auto id = write_file("id.json", identity_json());
  const Run local = run({"classify", "--gate", "MATRIX(" + id.string() + ")"});
  CHECK(field(local.out, "class") == "Local");
}

TEST_CASE("verify command") {
  const auto path = std::filesystem::current_path() / "cli_test_root.json";
  REQUIRE(run({"synth", "--target", "SQRT_SWAP", "--entangler", "CPHASE(2pi/3)", "--out", path.string()}).status == 0);

  const Run self = run({"verify", "--circuit", path.string(), "--target", "SQRT_SWAP"});
  CHECK(self.status == 0);
  CHECK(std::stod(field(self.out, "residual")) < 1e-8);
  CHECK(self.out.find("PASS") != std::string::npos);

  const Run wrong = run({"verify", "--circuit", path.string(), "--target", "SWAP"});
  CHECK(wrong.status == static_cast<int>(ExitCode::verification_failed));
  CHECK(std::stod(field(wrong.out, "residual")) > 0.1);
  CHECK(wrong.out.find("FAIL") != std::string::npos);

  const Run cnot = run({"verify", "--circuit", path.string(), "--target", "CNOT"});
  CHECK(cnot.status == static_cast<int>(ExitCode::verification_failed));

  const auto junk = write_file("junk.json", "{\"format\": 3}");
  const Run bad = run({"verify", "--circuit", junk.string(), "--target", "CNOT"});
  CHECK(bad.status == static_cast<int>(ExitCode::parse_error));
  CHECK_FALSE(bad.err.empty());
}

TEST_CASE("exit codes are distinct per failure kind") {
  CHECK(run({"--help"}).status == 0);
  CHECK(run({}).status == static_cast<int>(ExitCode::usage));
  CHECK(run({"synth", "--target", "CNOT"}).status == static_cast<int>(ExitCode::usage));
  CHECK(run({"frobnicate"}).status == static_cast<int>(ExitCode::usage));

  const Run unknown = run({"synth", "--target", "NOPE", "--entangler", "CNOT"});
  CHECK(unknown.status == static_cast<int>(ExitCode::parse_error));
  CHECK(unknown.err.find("NOPE") != std::string::npos);

  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(4, 4);
  m(0, 0) = 1.5;
  const auto nonunitary = write_file("nonunitary.json", matrix_to_json(m).dump());
  const Run nu = run({"synth", "--target", "MATRIX(" + nonunitary.string() + ")", "--entangler", "CNOT"});
  CHECK(nu.status == static_cast<int>(ExitCode::non_unitary));

  const Run ne = run({"synth", "--target", "CNOT", "--entangler", "SWAP"});
  CHECK(ne.status == static_cast<int>(ExitCode::not_entangling));
  const auto id = write_file("id.json", identity_json());
  const Run ne2 = run({"synth", "--target", "CNOT", "--entangler", "MATRIX(" + id.string() + ")"});
  CHECK(ne2.status == static_cast<int>(ExitCode::not_entangling));

  const Run badtol = run({"synth", "--target", "CNOT", "--entangler", "CNOT", "--tol", "-1"});
  CHECK(badtol.status == static_cast<int>(ExitCode::parse_error));

  std::set<std::string> messages{unknown.err, nu.err, ne.err};
  CHECK(messages.size() == 3);
}

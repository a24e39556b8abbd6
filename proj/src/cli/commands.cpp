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

#include "twoq/cli/commands.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <optional>

#include "CLI11.hpp"
#include "twoq/cli/document.hpp"
#include "twoq/cli/named_gate.hpp"
#include "twoq/compiler.hpp"
#include "twoq/errors.hpp"
#include "twoq/kak.hpp"

namespace twoq::cli {

namespace {

int code(ExitCode c) { return static_cast<int>(c); }

ToleranceConfig tolerances(std::optional<double> verify_tol) {
  ToleranceConfig tol;
  if (verify_tol) tol.verify_tol = *verify_tol;
  try {
    tol.validate();
  } catch (const Error& e) {
    throw ParseError(std::string("--tol: ") + e.what());
  }
  return tol;
}

int run_synth(const std::string& target_spec, const std::string& entangler_spec, std::optional<double> verify_tol,
              const std::string& out_path, std::ostream& out) {
  const ToleranceConfig tol = tolerances(verify_tol);
  CircuitDocument doc;
  doc.tolerances = tol;
  doc.entangler = resolve_gate(entangler_spec, tol);
  doc.target = resolve_gate(target_spec, tol);
  SynthesisResult result = synthesize(doc.target->matrix, doc.entangler.matrix, tol);
  doc.circuit = std::move(result.circuit);
  doc.report = result.report;

  const std::string text = emit(doc);
  if (out_path.empty()) {
    out << text;
    return code(ExitCode::ok);
  }
  std::ofstream file(out_path);
  if (!file) throw ParseError("cannot write '" + out_path + "'");
  file << text;
  if (!file) throw ParseError("failed writing '" + out_path + "'");

  const SynthesisReport& r = *doc.report;
  out << "wrote " << out_path << "\n"
      << "entangler_count: " << r.entangler_count << "\n"
      << "local_count: " << r.local_count << "\n"
      << "bound: " << r.bound << "\n"
      << "residual: " << r.residual << "\n";
  return code(ExitCode::ok);
}

int run_classify(const std::string& gate_spec, std::ostream& out) {
  const ToleranceConfig tol;
  const GateDescriptor gate = resolve_gate(gate_spec, tol);
  const KakDecomposition kak = kak_decompose(gate.matrix, tol);
  const GateClass cls = classify(kak.c, tol);
  out << "gate: " << gate.name << "\n"
      << "canonical: " << kak.c << "\n"
      << "class: " << to_string(cls) << "\n";
  if (cls == GateClass::Entangling) {
    const BoundReport b = upper_bound(gate.matrix, tol);
    out << "gamma: " << b.gamma << "\n"
        << "apps_per_unit: " << b.apps_per_unit << "\n"
        << "n: " << b.n << "\n"
        << "bound: " << b.bound << "\n";
  }
  return code(ExitCode::ok);
}

int run_verify(const std::string& circuit_path, const std::string& target_spec, std::optional<double> verify_tol,
               std::ostream& out) {
  const CircuitDocument doc = load_document(circuit_path);
  ToleranceConfig tol = doc.tolerances;
  if (verify_tol) tol.verify_tol = *verify_tol;
  const GateDescriptor target = resolve_gate(target_spec, tol);
  const double residual = phase_distance(evaluate(doc.circuit, doc.entangler.matrix), target.matrix);
  const bool pass = residual < tol.verify_tol;
  out << "residual: " << residual << "\n"
      << "verify_tol: " << tol.verify_tol << "\n"
      << (pass ? "PASS" : "FAIL") << "\n";
  return code(pass ? ExitCode::ok : ExitCode::verification_failed);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact two-qubit gate synthesis over a fixed entangling gate", "twoq"};
  app.require_subcommand(1);

  std::string target, entangler, gate, circuit, out_path;
  std::optional<double> synth_tol, verify_tol;

  auto* synth = app.add_subcommand("synth", "Synthesize a target gate from an entangler and local gates");
  synth->add_option("--target", target, "Target gate, e.g. CNOT, SQRT_SWAP, CPHASE(2pi/3), MATRIX(file.json)")
      ->required();
  synth->add_option("--entangler", entangler, "Entangling gate to build from")->required();
  synth->add_option("--tol", synth_tol, "Verification tolerance (default 1e-8)");
  synth->add_option("--out", out_path, "Write the circuit document here instead of stdout");

  auto* cls = app.add_subcommand("classify", "Print canonical vector, gate class and entangler bound");
  cls->add_option("--gate", gate, "Gate to classify")->required();

  auto* verify = app.add_subcommand("verify", "Check a circuit document against a target gate");
  verify->add_option("--circuit", circuit, "Circuit document path")->required();
  verify->add_option("--target", target, "Target gate")->required();
  verify->add_option("--tol", verify_tol, "Verification tolerance (default from the document)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return code(ExitCode::ok);
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return code(ExitCode::ok);
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return code(ExitCode::usage);
  }

  const auto precision = out.precision(17);
  struct Restore {
    std::ostream& os;
    std::streamsize p;
    ~Restore() { os.precision(p); }
  } restore{out, precision};

  try {
    if (synth->parsed()) return run_synth(target, entangler, synth_tol, out_path, out);
    if (cls->parsed()) return run_classify(gate, out);
    if (verify->parsed()) return run_verify(circuit, target, verify_tol, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return code(ExitCode::parse_error);
  } catch (const NonUnitaryError& e) {
    err << "non-unitary input: " << e.what() << "\n";
    return code(ExitCode::non_unitary);
  } catch (const NotEntanglingError& e) {
    err << "entangler is not entangling: " << e.what() << "\n";
    return code(ExitCode::not_entangling);
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return code(ExitCode::domain_error);
  } catch (const VerificationError& e) {
    err << "verification failed: " << e.what() << "\n";
    return code(ExitCode::verification_failed);
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return code(ExitCode::internal);
  }
  return code(ExitCode::usage);
}

}  // namespace twoq::cli

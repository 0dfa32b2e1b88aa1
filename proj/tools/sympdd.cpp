// Copyright 2026 The sympdd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// sympdd <homogenize|suppress|eulerian|verify|fock-check> [options]
//
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 I/O error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "sympdd/error.hpp"
#include "sympdd/experiments.hpp"

namespace {

constexpr int kExitVerify = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

void emit(const sympdd::ExperimentConfig& cfg, const sympdd::CsvTable& table) {
  if (cfg.out.empty()) {
    sympdd::write_csv(std::cout, table);
    return;
  }
  // Render fully before touching the file so a failure leaves nothing behind.
  std::ostringstream buf;
  sympdd::write_csv(buf, table);
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f) throw sympdd::IoError("cannot write " + cfg.out);
  f << buf.str();
  f.close();
  if (!f) throw sympdd::IoError("failed writing " + cfg.out);
  if (cfg.mode == sympdd::Mode::homogenize || cfg.mode == sympdd::Mode::suppress) {
    const auto script = sympdd::emit_plot_script(cfg.out);
    std::cerr << "wrote " << cfg.out << " and " << script << '\n';
  } else {
    std::cerr << "wrote " << cfg.out << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decoupling and homogenization of quadratic bosonic Hamiltonians"};
  app.set_version_flag("--version", sympdd::kVersion);

  std::string mode_name;
  std::string config_path;
  std::map<std::string, std::string> raw;
  app.add_option("mode", mode_name, "homogenize, suppress, eulerian, verify or fock-check")
      ->required()
      ->check(CLI::IsMember({"homogenize", "suppress", "eulerian", "verify", "fock-check"}));
  app.add_option("--config", config_path, "key = value file, or a previous sympdd CSV");

  const std::pair<const char*, const char*> keys[] = {
      {"--n", "modes (homogenize, eulerian)"},
      {"--ns", "system modes (suppress)"},
      {"--ne-max", "sweep n_E over 1..N (suppress)"},
      {"--ne", "comma separated n_E list (suppress)"},
      {"--k", "entry scale of the random A"},
      {"--tau", "comma separated pulse spacings"},
      {"--t", "total time"},
      {"--trials", "Monte Carlo trajectories per point"},
      {"--seed", "master seed"},
      {"--out", "output CSV path (default stdout)"},
      {"--threads", "worker threads, 0 for all cores"},
  };
  for (const auto& [flag, help] : keys) {
    const std::string key = std::string(flag).substr(2);
    app.add_option_function<std::string>(
        flag, [&raw, key](const std::string& v) { raw[key] = v; }, help);
  }
  bool inject_fault = false;
  app.add_flag("--inject-fault", inject_fault, "verify: asymmetrize A to exercise error reporting");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }
  if (inject_fault) raw["inject_fault"] = "1";

  try {
    const sympdd::Mode mode = sympdd::parse_mode(mode_name);
    sympdd::Settings file;
    if (!config_path.empty()) file = sympdd::read_config_file(config_path);
    const sympdd::ExperimentConfig cfg = sympdd::resolve(mode, file, raw);

    switch (mode) {
      case sympdd::Mode::homogenize:
        emit(cfg, sympdd::run_homogenization_sweep(cfg));
        break;
      case sympdd::Mode::suppress:
        emit(cfg, sympdd::run_suppression_sweep(cfg));
        break;
      case sympdd::Mode::eulerian:
        emit(cfg, sympdd::run_eulerian(cfg));
        break;
      case sympdd::Mode::fock_check:
        emit(cfg, sympdd::run_fock_check(cfg));
        break;
      case sympdd::Mode::verify: {
        const auto report = sympdd::run_verify(cfg);
        sympdd::write_report(std::cout, report);
        if (!cfg.out.empty()) {
          std::ofstream f(cfg.out, std::ios::binary);
          if (!f) throw sympdd::IoError("cannot write " + cfg.out);
          sympdd::write_report(f, report);
        }
        return report.passed() ? 0 : kExitVerify;
      }
    }
  } catch (const sympdd::IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const sympdd::InputError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const sympdd::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitVerify;
  }
  return 0;
}

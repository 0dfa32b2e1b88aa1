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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include "doctest.h"
#include "sympdd/error.hpp"
#include "sympdd/experiments.hpp"

using namespace sympdd;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir() {
  const fs::path dir = fs::temp_directory_path() / ("sympdd_test_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  return dir;
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string(SYMPDD_CLI) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

Settings parse(const std::string& text) {
  std::istringstream in(text);
  return parse_config(in);
}

}  // namespace

TEST_CASE("mode names") {
  for (Mode m : {Mode::homogenize, Mode::suppress, Mode::eulerian, Mode::verify, Mode::fock_check}) {
    CHECK(parse_mode(to_string(m)) == m);
  }
  CHECK(std::string(to_string(Mode::fock_check)) == "fock-check");
  CHECK_THROWS_AS(parse_mode("homogenise"), InputError);
}

TEST_CASE("config parsing") {
  const Settings s = parse("# comment\n n = 3 \n\ntau = 0.1, 0.01\nn-e = 2\n");
  CHECK(s.at("n") == "3");
  CHECK(s.at("tau") == "0.1, 0.01");
  CHECK(s.at("ne") == "2");
  CHECK_THROWS_AS(parse("n 3\n"), InputError);
  CHECK_THROWS_AS(parse(" = 3\n"), InputError);

  // A CSV contributes only its config echo.
  const Settings c = parse("# sympdd-csv v1\n# steps = 4\n# config.n = 2\n# config.k = 0.5\ntau,x\n1,2\n");
  CHECK(c.size() == 2);
  CHECK(c.at("n") == "2");
  CHECK(c.at("k") == "0.5");
}

TEST_CASE("resolve applies defaults, file, then flags") {
  const auto h = resolve(Mode::homogenize, {}, {});
  CHECK(h.n == 4);
  CHECK(h.k == 1.0);
  CHECK(h.taus == std::vector<double>{1e-1, 1e-2, 1e-3, 1e-4, 1e-5});
  CHECK(h.seed == 20260101);

  const auto s = resolve(Mode::suppress, {}, {});
  CHECK(s.n_e == std::vector<int>{1, 10, 20, 40, 80});
  CHECK(s.k == 0.1);
  CHECK(s.taus == std::vector<double>{1e-3});

  const auto e = resolve(Mode::eulerian, {}, {});
  CHECK(e.n == 1);

  const auto over = resolve(Mode::suppress, {{"k", "0.2"}, {"ne_max", "3"}}, {{"k", "0.3"}});
  CHECK(over.k == 0.3);
  CHECK(over.n_e == std::vector<int>{1, 2, 3});

  CHECK_THROWS_AS(resolve(Mode::homogenize, {{"mode", "suppress"}}, {}), InputError);
  CHECK_THROWS_AS(resolve(Mode::homogenize, {{"bogus", "1"}}, {}), InputError);
  CHECK_THROWS_AS(resolve(Mode::homogenize, {{"n", "two"}}, {}), InputError);
  CHECK_THROWS_AS(resolve(Mode::homogenize, {{"n", "0"}}, {}), InputError);
  CHECK_THROWS_AS(resolve(Mode::suppress, {{"tau", "0.1,0.2"}}, {}), InputError);
  CHECK_THROWS_AS(resolve(Mode::eulerian, {{"n", "4"}}, {}), InputError);
  CHECK_THROWS_AS(resolve(Mode::homogenize, {{"tau", "-1"}}, {}), InputError);
}

TEST_CASE("config echo round trip") {
  const auto cfg = resolve(Mode::suppress, {}, {{"ne", "2,5"}, {"k", "0.25"}, {"seed", "7"}});
  std::ostringstream text;
  for (const auto& [key, value] : cfg.echo()) text << key << " = " << value << '\n';
  const auto back = resolve(Mode::suppress, parse(text.str()), {});
  CHECK(back.echo() == cfg.echo());
}

TEST_CASE("random symmetric matrix") {
  Rng rng(3);
  const Matrix m = random_symmetric_matrix(6, 0.5, rng);
  CHECK(m == m.transpose());
  CHECK(m.minCoeff() >= 0.0);
  CHECK(m.maxCoeff() <= 0.5);
  Rng again(3);
  CHECK(random_symmetric_matrix(6, 0.5, again) == m);
}

TEST_CASE("homogenization sweep output") {
  auto cfg = resolve(Mode::homogenize, {}, {{"n", "2"}, {"tau", "0.1,0.01"}, {"trials", "8"}});
  cfg.threads = 1;
  const CsvTable table = run_homogenization_sweep(cfg);
  REQUIRE(table.rows.size() == 2);
  CHECK(table.columns.front() == "tau");
  std::ostringstream a;
  write_csv(a, table);
  CHECK(a.str().rfind(std::string(kCsvMagic) + "\n", 0) == 0);
  CHECK(a.str().find("# config.n = 2") != std::string::npos);

  cfg.threads = 3;
  std::ostringstream b;
  write_csv(b, run_homogenization_sweep(cfg));
  CHECK(a.str() == b.str());
}

TEST_CASE("eulerian output") {
  const auto cfg = resolve(Mode::eulerian, {}, {{"tau", "0.1,0.05"}});
  const CsvTable table = run_eulerian(cfg);
  REQUIRE(table.rows.size() == 2);
  CHECK(table.columns == std::vector<std::string>{"tau", "cycles", "deviation", "rotation_rate",
                                                   "residual"});
}

TEST_CASE("verify passes and detects an injected fault") {
  auto cfg = resolve(Mode::verify, {}, {});
  const auto report = run_verify(cfg);
  CHECK(report.passed());
  CHECK(report.items.size() == 8);
  cfg.inject_fault = true;
  const auto broken = run_verify(cfg);
  CHECK_FALSE(broken.passed());
  std::ostringstream out;
  write_report(out, broken);
  CHECK(out.str().find("FAIL model_construction") != std::string::npos);
}

TEST_CASE("plot script") {
  const fs::path dir = scratch_dir();
  const fs::path empty = dir / "empty.csv";
  std::ofstream(empty).close();
  CHECK_THROWS_AS(emit_plot_script(empty.string()), FormatError);
  const fs::path odd = dir / "odd.csv";
  std::ofstream(odd) << kCsvMagic << "\nfoo,bar\n1,2\n";
  CHECK_THROWS_AS(emit_plot_script(odd.string()), FormatError);
  CHECK_THROWS_AS(emit_plot_script((dir / "missing.csv").string()), IoError);
  fs::remove_all(dir);
}

TEST_CASE("command line") {
  const fs::path dir = scratch_dir();
  const std::string out1 = (dir / "h1.csv").string();
  const std::string out2 = (dir / "h2.csv").string();
  const std::string args = "homogenize --n 2 --tau 0.1,0.01 --trials 6 --threads 1 --out ";
  CHECK(run_cli(args + out1) == 0);
  CHECK(run_cli(args + out2) == 0);
  CHECK(slurp(out1) == slurp(out2));
  CHECK(fs::exists(out1 + ".plot.py"));

  // Rerun from the CSV itself as the config.
  const std::string out3 = (dir / "h3.csv").string();
  CHECK(run_cli("homogenize --config " + out1 + " --out " + out3) == 0);
  CHECK(slurp(out1) == slurp(out3));

  CHECK(run_cli("--version") == 0);
  CHECK(run_cli("") == 2);
  CHECK(run_cli("dance") == 2);
  CHECK(run_cli("homogenize --bogus 1") == 2);
  CHECK(run_cli("homogenize --n 0") == 2);
  CHECK(run_cli("suppress --config " + out1) == 2);
  CHECK(run_cli("homogenize --config " + (dir / "nope.cfg").string()) == 3);
  CHECK(run_cli("homogenize --n 1 --tau 0.1 --trials 2 --out " + (dir / "no/such/dir.csv").string()) ==
        3);
  CHECK(run_cli("verify --inject-fault") == 1);
  fs::remove_all(dir);
}

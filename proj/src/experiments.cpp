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

#include "sympdd/experiments.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "sympdd/averaging.hpp"
#include "sympdd/error.hpp"
#include "sympdd/error_analysis.hpp"
#include "sympdd/eulerian.hpp"
#include "sympdd/fock_oracle.hpp"
#include "sympdd/format.hpp"
#include "sympdd/groups.hpp"
#include "sympdd/schemes.hpp"

namespace sympdd {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) out.push_back(trim(item));
  return out;
}

double parse_double(const std::string& key, const std::string& text) {
  double v = 0.0;
  const auto* end = text.data() + text.size();
  const auto res = std::from_chars(text.data(), end, v);
  if (res.ec != std::errc() || res.ptr != end || !std::isfinite(v)) {
    throw InputError("bad number for " + key + ": '" + text + "'");
  }
  return v;
}

template <typename Int>
Int parse_int(const std::string& key, const std::string& text) {
  Int v = 0;
  const auto* end = text.data() + text.size();
  const auto res = std::from_chars(text.data(), end, v);
  if (res.ec != std::errc() || res.ptr != end) {
    throw InputError("bad integer for " + key + ": '" + text + "'");
  }
  return v;
}

std::string canonical_key(std::string key) {
  std::replace(key.begin(), key.end(), '-', '_');
  if (key == "n_s") return "ns";
  if (key == "n_e") return "ne";
  if (key == "n_e_max") return "ne_max";
  if (key == "master_seed") return "seed";
  return key;
}

template <typename T>
std::string join(const std::vector<T>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    if constexpr (std::is_floating_point_v<T>) {
      out += format_double(v[i]);
    } else {
      out += std::to_string(v[i]);
    }
  }
  return out;
}

void apply_settings(ExperimentConfig& cfg, const Settings& s) {
  // ne_max before ne so an explicit list wins inside one source.
  if (auto it = s.find("ne_max"); it != s.end()) {
    const int m = parse_int<int>("ne_max", it->second);
    if (m < 0) throw InputError("ne_max must be >= 0");
    cfg.n_e.clear();
    for (int i = (m == 0 ? 0 : 1); i <= m; ++i) cfg.n_e.push_back(i);
  }
  for (const auto& [key, value] : s) {
    if (key == "ne_max") continue;
    if (key == "mode") {
      if (parse_mode(value) != cfg.mode) {
        throw InputError("config is for mode '" + value + "' but '" + to_string(cfg.mode) +
                         "' was requested");
      }
    } else if (key == "n") {
      cfg.n = parse_int<int>(key, value);
    } else if (key == "ns") {
      cfg.n_s = parse_int<int>(key, value);
    } else if (key == "ne") {
      cfg.n_e.clear();
      for (const auto& item : split(value, ',')) cfg.n_e.push_back(parse_int<int>(key, item));
    } else if (key == "k") {
      cfg.k = parse_double(key, value);
    } else if (key == "tau") {
      cfg.taus.clear();
      for (const auto& item : split(value, ',')) cfg.taus.push_back(parse_double(key, item));
    } else if (key == "t") {
      cfg.t = parse_double(key, value);
    } else if (key == "trials") {
      cfg.trials = parse_int<int>(key, value);
    } else if (key == "seed") {
      cfg.seed = parse_int<std::uint64_t>(key, value);
    } else if (key == "out") {
      cfg.out = value;
    } else if (key == "threads") {
      cfg.threads = parse_int<unsigned>(key, value);
    } else if (key == "inject_fault") {
      cfg.inject_fault = value == "1" || value == "true";
    } else {
      throw InputError("unknown config key '" + key + "'");
    }
  }
}

DecouplingGroup homogenization_group(int n) { return DecouplingGroup::homogenization(n); }

std::ofstream open_output(const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot write " + path);
  return f;
}

}  // namespace

const char* to_string(Mode mode) {
  switch (mode) {
    case Mode::homogenize:
      return "homogenize";
    case Mode::suppress:
      return "suppress";
    case Mode::eulerian:
      return "eulerian";
    case Mode::verify:
      return "verify";
    case Mode::fock_check:
      return "fock-check";
  }
  return "?";
}

Mode parse_mode(const std::string& text) {
  for (Mode m : {Mode::homogenize, Mode::suppress, Mode::eulerian, Mode::verify,
                 Mode::fock_check}) {
    if (text == to_string(m)) return m;
  }
  throw InputError("unknown mode '" + text + "'");
}

std::vector<std::pair<std::string, std::string>> ExperimentConfig::echo() const {
  return {{"mode", to_string(mode)},
          {"n", std::to_string(n)},
          {"ns", std::to_string(n_s)},
          {"ne", join(n_e)},
          {"k", format_double(k)},
          {"tau", join(taus)},
          {"t", format_double(t)},
          {"trials", std::to_string(trials)},
          {"seed", std::to_string(seed)}};
}

void ExperimentConfig::validate() const {
  if (n < 1) throw InputError("n must be >= 1");
  if (n_s < 1) throw InputError("ns must be >= 1");
  for (int e : n_e) {
    if (e < 0) throw InputError("ne entries must be >= 0");
  }
  if (!(k >= 0.0)) throw InputError("k must be >= 0");
  for (double tau : taus) {
    if (!(tau > 0.0)) throw InputError("tau values must be positive");
  }
  if (!(t > 0.0)) throw InputError("t must be positive");
  if (trials < 1) throw InputError("trials must be >= 1");
  switch (mode) {
    case Mode::homogenize:
      if (taus.empty()) throw InputError("tau sweep is empty");
      break;
    case Mode::suppress:
      if (n_e.empty()) throw InputError("ne range is empty");
      if (taus.size() != 1) throw InputError("suppress takes exactly one tau");
      break;
    case Mode::eulerian:
      if (taus.empty()) throw InputError("tau sweep is empty");
      if (n > 3) throw InputError("eulerian mode supports n <= 3");
      break;
    case Mode::verify:
    case Mode::fock_check:
      break;
  }
}

Settings parse_config(std::istream& in) {
  Settings out;
  std::string line;
  bool csv = false;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (lineno == 1 && trim(line) == kCsvMagic) {
      csv = true;
      continue;
    }
    std::string body;
    if (csv) {
      const std::string tag = "# config.";
      if (line.rfind(tag, 0) != 0) continue;
      body = line.substr(tag.size());
    } else {
      body = line.substr(0, line.find('#'));
    }
    body = trim(body);
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos) {
      throw InputError("config line " + std::to_string(lineno) + ": expected key = value");
    }
    const std::string key = canonical_key(trim(body.substr(0, eq)));
    const std::string value = trim(body.substr(eq + 1));
    if (key.empty()) throw InputError("config line " + std::to_string(lineno) + ": empty key");
    out[key] = value;
  }
  return out;
}

Settings read_config_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot read config " + path);
  return parse_config(f);
}

ExperimentConfig resolve(Mode mode, const Settings& file, const Settings& flags) {
  ExperimentConfig cfg;
  cfg.mode = mode;
  switch (mode) {
    case Mode::homogenize:
      cfg.n = 4;
      cfg.k = 1.0;
      cfg.taus = {1e-1, 1e-2, 1e-3, 1e-4, 1e-5};
      break;
    case Mode::suppress:
      cfg.n_s = 2;
      cfg.n_e = {1, 10, 20, 40, 80};
      cfg.k = 0.1;
      cfg.taus = {1e-3};
      break;
    case Mode::eulerian:
      cfg.n = 1;
      cfg.k = 1.0;
      cfg.taus = {1e-1, 1e-2, 1e-3};
      break;
    case Mode::verify:
    case Mode::fock_check:
      cfg.k = 1.0;
      break;
  }
  Settings f = file;
  Settings g = flags;
  for (auto* s : {&f, &g}) {
    Settings canon;
    for (const auto& [key, value] : *s) canon[canonical_key(key)] = value;
    *s = canon;
  }
  apply_settings(cfg, f);
  apply_settings(cfg, g);
  cfg.validate();
  return cfg;
}

Matrix random_symmetric_matrix(int dim, double k, Rng& rng) {
  Matrix m(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) m(i, j) = k * rng.uniform01();
  }
  return 0.5 * (m + m.transpose());
}

void write_csv(std::ostream& out, const CsvTable& table) {
  out << kCsvMagic << '\n';
  for (const auto& [key, value] : table.metadata) out << "# " << key << " = " << value << '\n';
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    out << (i ? "," : "") << table.columns[i];
  }
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
    out << '\n';
  }
}

namespace {

CsvTable start_table(const ExperimentConfig& cfg) {
  CsvTable table;
  table.metadata.emplace_back("version", kVersion);
  for (const auto& [key, value] : cfg.echo()) table.metadata.emplace_back("config." + key, value);
  return table;
}

}  // namespace

CsvTable run_homogenization_sweep(const ExperimentConfig& cfg) {
  cfg.validate();
  CsvTable table = start_table(cfg);
  Rng rng(derive_seed(cfg.seed, 0xA11CEull));
  const Matrix a = QuadraticModel(random_symmetric_matrix(2 * cfg.n, cfg.k, rng)).a();
  const auto group = homogenization_group(cfg.n);
  const double a_norm = op_norm(a);
  table.metadata.emplace_back("realized_k", format_double(a.cwiseAbs().maxCoeff()));
  table.metadata.emplace_back("a_opnorm", format_double(a_norm));
  table.columns = {"tau", "mc_mean", "mc_stderr", "analytic", "bound", "trials", "seed"};

  std::vector<std::int64_t> steps;
  std::vector<double> realized;
  for (std::size_t row = 0; row < cfg.taus.size(); ++row) {
    const double tau = cfg.taus[row];
    const auto est = monte_carlo_expected_error(a, group, tau, cfg.t, cfg.trials,
                                                derive_seed(cfg.seed, row), cfg.threads);
    steps.push_back(est.steps);
    realized.push_back(est.realized_t);
    if (!est.warning.empty()) {
      table.metadata.emplace_back("warning", "tau=" + format_double(tau) + ": " + est.warning);
    }
    table.rows.push_back({format_double(tau), format_double(est.mean), format_double(est.std_error),
                          format_double(analytic_approximation(a, group, tau, est.realized_t)),
                          format_double(upper_bound_homogenization(tau, est.realized_t, cfg.n,
                                                                   a_norm)),
                          std::to_string(cfg.trials), std::to_string(cfg.seed)});
  }
  table.metadata.emplace_back("steps", join(steps));
  table.metadata.emplace_back("realized_t", join(realized));
  return table;
}

CsvTable run_suppression_sweep(const ExperimentConfig& cfg) {
  cfg.validate();
  CsvTable table = start_table(cfg);
  table.columns = {"n_E", "mc_mean", "mc_stderr", "analytic", "bound"};
  const double tau = cfg.taus.front();
  std::vector<double> ks;
  std::vector<std::int64_t> steps;
  for (std::size_t row = 0; row < cfg.n_e.size(); ++row) {
    const int n_e = cfg.n_e[row];
    Rng rng(derive_seed(cfg.seed, 0x5EED0000ull + static_cast<std::uint64_t>(n_e)));
    const PartitionedModel pm(cfg.n_s, n_e,
                              random_symmetric_matrix(2 * (cfg.n_s + n_e), cfg.k, rng));
    const auto group = DecouplingGroup::suppression(cfg.n_s, n_e);
    const auto est = monte_carlo_expected_error(pm.a(), group, tau, cfg.t, cfg.trials,
                                                derive_seed(cfg.seed, row), cfg.threads);
    ks.push_back(pm.k());
    steps.push_back(est.steps);
    if (!est.warning.empty()) table.metadata.emplace_back("warning", est.warning);
    table.rows.push_back(
        {std::to_string(n_e), format_double(est.mean), format_double(est.std_error),
         format_double(analytic_approximation(pm.a(), group, tau, est.realized_t)),
         format_double(upper_bound_suppression(tau, est.realized_t, cfg.n_s, n_e, pm.k()))});
  }
  table.metadata.emplace_back("realized_k", join(ks));
  table.metadata.emplace_back("steps", join(steps));
  return table;
}

std::vector<IntMatrix> homogenization_generators(int n) {
  if (n < 1) throw InvalidDimension("need n >= 1");
  std::vector<IntMatrix> gens;
  gens.push_back(symplectic_form_int(n));
  GroupElement flip = GroupElement::identity(n);
  flip.sp.signs[0] = -1;
  gens.push_back(element_matrix(flip));
  for (int i = 0; i + 1 < n; ++i) {
    GroupElement swap = GroupElement::identity(n);
    std::swap(swap.sp.perm[static_cast<std::size_t>(i)], swap.sp.perm[static_cast<std::size_t>(i + 1)]);
    gens.push_back(element_matrix(swap));
  }
  return gens;
}

namespace {

CayleyGraph homogenization_graph(int n) {
  std::vector<IntMatrix> vertices;
  for (const auto& g : enumerate_homogenization_group(n)) vertices.push_back(element_matrix(g));
  return build_cayley_graph(std::move(vertices), homogenization_generators(n));
}

// Component of K orthogonal to J in the Hilbert-Schmidt sense.
double rotation_residual(const Matrix& k, double rate, int n) {
  return std::sqrt(hs_norm_sq(k - rate * symplectic_form(n).matrix));
}

}  // namespace

CsvTable run_eulerian(const ExperimentConfig& cfg) {
  cfg.validate();
  CsvTable table = start_table(cfg);
  Rng rng(derive_seed(cfg.seed, 0xE01Eull));
  const Matrix a = QuadraticModel(random_symmetric_matrix(2 * cfg.n, cfg.k, rng)).a();
  const CayleyGraph graph = homogenization_graph(cfg.n);
  const double per_pass = static_cast<double>(graph.edge_count());
  const Matrix target = target_evolution(a, homogenization_group(cfg.n), cfg.t).matrix();
  table.metadata.emplace_back("lambda", format_double(a.trace() / (2.0 * cfg.n)));
  table.metadata.emplace_back("cycle_length", std::to_string(graph.edge_count()));
  table.columns = {"tau", "cycles", "deviation", "rotation_rate", "residual"};
  for (double tau : cfg.taus) {
    const int cycles = static_cast<int>(std::max<long long>(1, std::llround(cfg.t / (tau * per_pass))));
    const EulerianRun run = eulerian_evolution(a, graph, cfg.t, cycles);
    const auto splits = split_generators(graph, run.tau);
    const Matrix k = first_order_generator(a, graph, splits, kDefaultSubsteps);
    const double rate = fit_rotation_rate(k);
    table.rows.push_back({format_double(run.tau), std::to_string(cycles),
                          format_double(op_norm(run.evolution.matrix() - target)),
                          format_double(rate), format_double(rotation_residual(k, rate, cfg.n))});
  }
  if (!cfg.out.empty()) {
    const double tau = cfg.taus.front();
    const int cycles = static_cast<int>(std::max<long long>(1, std::llround(cfg.t / (tau * per_pass))));
    const double realized_tau = cfg.t / (cycles * per_pass);
    const std::string path = cfg.out + ".pulses.csv";
    auto f = open_output(path);
    write_pulse_schedule(f, find_eulerian_cycle(graph), split_generators(graph, realized_tau));
    if (!f) throw IoError("failed writing " + path);
    table.metadata.emplace_back("pulses", std::filesystem::path(path).filename().string());
  }
  return table;
}

CsvTable run_fock_check(const ExperimentConfig& cfg) {
  cfg.validate();
  CsvTable table = start_table(cfg);
  table.columns = {"case", "cutoff", "defect", "unitarity_defect", "top_level_leakage"};
  const std::vector<std::pair<std::string, Matrix>> cases = {
      {"single_mode", cfg.k * Matrix::Identity(2, 2)},
      {"beamsplitter", beamsplitter_preset(cfg.k)}};
  for (const auto& [name, a] : cases) {
    for (int d : {10, 20, 40}) {
      const auto r = heisenberg_check(a, cfg.t, d);
      table.rows.push_back({name, std::to_string(d), format_double(r.defect),
                            format_double(r.unitarity_defect), format_double(r.top_level_leakage)});
    }
  }
  return table;
}

bool VerifyReport::passed() const {
  return std::all_of(items.begin(), items.end(), [](const VerifyItem& i) { return i.passed; });
}

namespace {

ComplexMatrix random_complex(int n, Rng& rng) {
  ComplexMatrix x(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) x(i, j) = {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
  }
  return x;
}

template <typename F>
VerifyItem guarded(const std::string& name, F&& body) {
  VerifyItem item;
  item.name = name;
  try {
    body(item);
  } catch (const Error& e) {
    item.passed = false;
    item.detail = std::string("construction error: ") + e.what();
  }
  return item;
}

}  // namespace

VerifyReport run_verify(const ExperimentConfig& cfg) {
  VerifyReport report;
  Rng rng(derive_seed(cfg.seed, 0x7E51ull));

  report.items.push_back(guarded("model_construction", [&](VerifyItem& it) {
    for (int n = 1; n <= 4; ++n) {
      Matrix a = random_symmetric_matrix(2 * n, 1.0, rng);
      if (cfg.inject_fault) a(0, 1) += 1e-3;
      QuadraticModel model(a);
      const double d = symplectic_defect(evolve(model, 1.0).matrix(), symplectic_form(n).matrix);
      it.max_defect = std::max(it.max_defect, d);
      ++it.checked;
    }
    it.passed = it.max_defect <= 1e-9;
  }));

  report.items.push_back(guarded("finite_decoupling", [&](VerifyItem& it) {
    for (int n = 1; n <= kMaxUnitaryDecouplingModes; ++n) {
      const auto set = enumerate_unitary_decoupling_set(n);
      for (int trial = 0; trial < 50; ++trial) {
        const ComplexMatrix x = random_complex(n, rng);
        const ComplexMatrix expect = x.trace() / static_cast<double>(n) * ComplexMatrix::Identity(n, n);
        it.max_defect = std::max(it.max_defect, (pi0_map(x, set) - expect).cwiseAbs().maxCoeff());
        ++it.checked;
      }
    }
    it.passed = it.max_defect <= 1e-12;
  }));

  report.items.push_back(guarded("homogenization_average", [&](VerifyItem& it) {
    bool orders = true;
    for (int n = 1; n <= kMaxEnumeratedModes; ++n) {
      const auto group = enumerate_homogenization_group(n);
      orders = orders && group.size() == homogenization_group_order(n);
      const int trials = n <= 4 ? 5 : 1;
      for (int trial = 0; trial < trials; ++trial) {
        const Matrix a = random_symmetric_matrix(2 * n, 1.0, rng);
        it.max_defect =
            std::max(it.max_defect, (pi_map(a, group) - pi_map_closed_form(a)).cwiseAbs().maxCoeff());
        ++it.checked;
      }
    }
    it.passed = orders && it.max_defect <= 1e-12;
    if (!orders) it.detail = "group order mismatch";
  }));

  report.items.push_back(guarded("suppression_exactness", [&](VerifyItem& it) {
    int mismatches = 0;
    for (int n_e : {0, 1, 10, 80}) {
      const PartitionedModel pm(2, n_e, random_symmetric_matrix(2 * (2 + n_e), 0.1, rng));
      Matrix expect = Matrix::Zero(pm.a().rows(), pm.a().cols());
      expect.topLeftCorner(4, 4) = pm.a_s();
      expect.bottomRightCorner(2 * n_e, 2 * n_e) = pm.a_e();
      const Matrix got = tilde_pi(pm);
      mismatches += static_cast<int>((got.array() != expect.array()).count());
      it.max_defect = std::max(it.max_defect, (got - expect).cwiseAbs().maxCoeff());
      ++it.checked;
    }
    it.passed = mismatches == 0;
    it.detail = "mismatched_entries=" + std::to_string(mismatches);
  }));

  report.items.push_back(guarded("trotter_convergence", [&](VerifyItem& it) {
    const Matrix a = random_symmetric_matrix(2, 1.0, rng);
    const auto group = homogenization_group(1);
    const Matrix target = target_evolution(a, group, 1.0).matrix();
    double prev = 0.0;
    bool ok = true;
    std::string ratios;
    for (int n : {8, 16, 32, 64}) {
      const double dev = op_norm(deterministic_cycle(a, group, 1.0, n).matrix() - target);
      if (n > 8) {
        const double r = prev / dev;
        ok = ok && r >= 1.6 && r <= 2.4;
        ratios += (ratios.empty() ? "" : ",") + format_double(r);
      }
      it.max_defect = std::max(it.max_defect, dev);
      prev = dev;
      ++it.checked;
    }
    it.passed = ok;
    it.detail = "ratios=" + ratios;
  }));

  report.items.push_back(guarded("eulerian_first_order", [&](VerifyItem& it) {
    const Matrix a = random_symmetric_matrix(2, 1.0, rng);
    const CayleyGraph graph = homogenization_graph(1);
    const auto cycle = find_eulerian_cycle(graph);
    const auto splits = split_generators(graph, 1e-2);
    const Matrix k = first_order_generator(a, graph, splits, kDefaultSubsteps);
    const double rate = fit_rotation_rate(k);
    const double lambda = a.trace() / 2.0;
    it.max_defect = std::max(rotation_residual(k, rate, 1), std::abs(rate - lambda));
    it.checked = static_cast<int>(cycle.length());
    it.passed = is_eulerian_cycle(graph, cycle) && it.max_defect <= 1e-3 * op_norm(a);
    it.detail = "rate=" + format_double(rate) + " lambda=" + format_double(lambda);
  }));

  report.items.push_back(guarded("generator_vs_monte_carlo", [&](VerifyItem& it) {
    // Walk-scale generator against the simulated walk; the published scale
    // differs by the factor reported in `detail`.
    const Matrix a = random_symmetric_matrix(2, 1.0, rng);
    const auto group = homogenization_group(1);
    const double tau = 1e-2;
    const auto mc = monte_carlo_expected_error(a, group, tau, 1.0, 4000, cfg.seed, cfg.threads);
    const double walk = exact_expected_error(a, group, tau, 1.0, DiffusionScale::walk);
    const double published = exact_expected_error(a, group, tau, 1.0, DiffusionScale::published);
    it.max_defect = std::abs(walk - mc.mean);
    it.checked = mc.trials;
    it.passed = it.max_defect <= 3.0 * mc.std_error;
    it.detail = "mc=" + format_double(mc.mean) + " sigma=" + format_double(mc.std_error) +
                " walk=" + format_double(walk) + " published_over_mc=" + format_double(published / mc.mean);
  }));

  report.items.push_back(guarded("fock_oracle", [&](VerifyItem& it) {
    const double pi = std::acos(-1.0);
    const auto single = heisenberg_check(Matrix::Identity(2, 2), pi, 40);
    const auto bs = heisenberg_check(beamsplitter_preset(1.0), 1.0, 25);
    // Exact presets sit at roundoff, which grows with d; squeezing has a
    // genuine truncation error that must shrink.
    Matrix squeeze(2, 2);
    squeeze << 0.1, 0.0, 0.0, -0.1;
    double prev_exact = INFINITY;
    double prev_squeeze = INFINITY;
    bool monotone = true;
    for (int d : {10, 20, 40}) {
      const double exact = heisenberg_check(Matrix::Identity(2, 2), pi, d).defect;
      const double sq = heisenberg_check(squeeze, 0.5, d).defect;
      monotone = monotone && exact <= std::max(prev_exact, kFockRoundoffFloor) &&
                 sq < prev_squeeze;
      prev_exact = exact;
      prev_squeeze = sq;
    }
    it.checked = 8;
    it.max_defect = std::max(single.defect, bs.defect);
    it.passed = single.defect <= 1e-8 && bs.defect <= 1e-6 && monotone &&
                std::max(single.unitarity_defect, bs.unitarity_defect) <= 1e-12;
    it.detail = "single=" + format_double(single.defect) + " beamsplitter=" + format_double(bs.defect) +
                " squeeze_d40=" + format_double(prev_squeeze);
  }));

  return report;
}

void write_report(std::ostream& out, const VerifyReport& report) {
  int passed = 0;
  for (const auto& it : report.items) {
    passed += it.passed ? 1 : 0;
    out << (it.passed ? "PASS " : "FAIL ") << it.name << " checked=" << it.checked
        << " max_defect=" << format_double(it.max_defect);
    if (!it.detail.empty()) out << ' ' << it.detail;
    out << '\n';
  }
  out << passed << '/' << report.items.size() << " passed\n";
}

std::string emit_plot_script(const std::string& csv_path) {
  std::ifstream in(csv_path, std::ios::binary);
  if (!in) throw IoError("cannot read " + csv_path);
  std::string line;
  std::string header;
  int rows = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (header.empty()) {
      header = trim(line);
    } else {
      ++rows;
    }
  }
  if (header.empty() || rows == 0) throw FormatError(csv_path + " has no data rows");

  bool tau_sweep = false;
  if (header == "tau,mc_mean,mc_stderr,analytic,bound,trials,seed") {
    tau_sweep = true;
  } else if (header != "n_E,mc_mean,mc_stderr,analytic,bound") {
    throw FormatError(csv_path + ": unrecognized columns '" + header + "'");
  }

  const std::string script_path = csv_path + ".plot.py";
  const std::string name = std::filesystem::path(csv_path).filename().string();
  auto f = open_output(script_path);
  f << "#!/usr/bin/env python3\n"
    << "import os\n"
    << "import matplotlib\n"
    << "matplotlib.use(\"Agg\")\n"
    << "import matplotlib.pyplot as plt\n\n"
    << "here = os.path.dirname(os.path.abspath(__file__))\n"
    << "csv_path = os.path.join(here, \"" << name << "\")\n"
    << "with open(csv_path) as f:\n"
    << "    lines = [l.strip() for l in f if l.strip() and not l.startswith(\"#\")]\n"
    << "cols = lines[0].split(\",\")\n"
    << "data = {c: [] for c in cols}\n"
    << "for l in lines[1:]:\n"
    << "    for c, v in zip(cols, l.split(\",\")):\n"
    << "        data[c].append(float(v))\n\n"
    << "fig, ax = plt.subplots()\n";
  if (tau_sweep) {
    f << "x = [1.0 / v for v in data[\"tau\"]]\n"
      << "ax.errorbar(x, data[\"mc_mean\"], yerr=data[\"mc_stderr\"], fmt=\"o\", label=\"Monte Carlo\")\n"
      << "ax.plot(x, data[\"analytic\"], \"k-\", label=\"2 tau t ||A - Pi(A)||^2\")\n"
      << "ax.plot(x, data[\"bound\"], \"-\", color=\"0.6\", label=\"16 tau t n ||A||^2\")\n"
      << "ax.set_xscale(\"log\")\n"
      << "ax.set_yscale(\"log\")\n"
      << "ax.set_xlabel(\"1 / tau\")\n";
  } else {
    f << "x = data[\"n_E\"]\n"
      << "ax.errorbar(x, data[\"mc_mean\"], yerr=data[\"mc_stderr\"], fmt=\"o\", label=\"Monte Carlo\")\n"
      << "ax.plot(x, data[\"analytic\"], \"k-\", label=\"analytic\")\n"
      << "ax.plot(x, data[\"bound\"], \"-\", color=\"0.6\", label=\"16 tau t n_S n_E k^2\")\n"
      << "ax.set_xlabel(\"n_E\")\n";
  }
  f << "ax.set_ylabel(\"E[eps(t)]\")\n"
    << "ax.legend()\n"
    << "fig.savefig(os.path.splitext(csv_path)[0] + \".png\", dpi=150)\n";
  if (!f) throw IoError("failed writing " + script_path);
  return script_path;
}

}  // namespace sympdd

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

// Batch experiments behind the sympdd command line tool.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sympdd/rng.hpp"
#include "sympdd/symplectic.hpp"

namespace sympdd {

inline constexpr const char* kVersion = "1.0.0";
inline constexpr const char* kCsvMagic = "# sympdd-csv v1";

enum class Mode { homogenize, suppress, eulerian, verify, fock_check };

const char* to_string(Mode mode);
Mode parse_mode(const std::string& text);

/// Fully resolved experiment parameters. Unset fields take mode defaults in
/// resolve().
struct ExperimentConfig {
  Mode mode = Mode::homogenize;
  int n = 4;
  int n_s = 2;
  std::vector<int> n_e;  // explicit environment sizes
  double k = 1.0;
  std::vector<double> taus;
  double t = 1.0;
  int trials = 20;
  std::uint64_t seed = 20260101;
  std::string out;  // empty: stdout
  unsigned threads = 0;
  bool inject_fault = false;

  /// `key = value` lines in a fixed key order; parse_config reads them back.
  std::vector<std::pair<std::string, std::string>> echo() const;
  void validate() const;
};

/// Raw key = value settings from a config file or flags, before defaults.
using Settings = std::map<std::string, std::string>;

/// Parses `key = value` lines with `#` comments. A sympdd CSV is accepted as
/// well: its `# config.key = value` metadata lines are read and everything
/// else is skipped. Throws InputError on malformed lines.
Settings parse_config(std::istream& in);
Settings read_config_file(const std::string& path);

/// Applies mode defaults, then `file`, then `flags` (flags win).
ExperimentConfig resolve(Mode mode, const Settings& file, const Settings& flags);

/// Entries uniform in [0, k], symmetrized as (M + M^T) / 2.
Matrix random_symmetric_matrix(int dim, double k, Rng& rng);

/// A finished experiment: metadata lines, column names and formatted rows.
struct CsvTable {
  std::vector<std::pair<std::string, std::string>> metadata;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

void write_csv(std::ostream& out, const CsvTable& table);

CsvTable run_homogenization_sweep(const ExperimentConfig& cfg);
CsvTable run_suppression_sweep(const ExperimentConfig& cfg);
CsvTable run_eulerian(const ExperimentConfig& cfg);
CsvTable run_fock_check(const ExperimentConfig& cfg);

struct VerifyItem {
  std::string name;
  bool passed = false;
  int checked = 0;
  double max_defect = 0.0;
  std::string detail;
};

struct VerifyReport {
  std::vector<VerifyItem> items;
  bool passed() const;
};

VerifyReport run_verify(const ExperimentConfig& cfg);
void write_report(std::ostream& out, const VerifyReport& report);

/// Generators of the homogenization group in block layout: J, the sign flip
/// of mode 0 and the adjacent transpositions. For n = 1 this is {J, -1}.
std::vector<IntMatrix> homogenization_generators(int n);

/**
 * Writes a matplotlib script next to `csv_path` (same name with `.plot.py`
 * appended) that reads the CSV by relative path. Returns the script path.
 * Throws FormatError for an empty or unrecognized CSV, IoError when files
 * cannot be read or written.
 */
std::string emit_plot_script(const std::string& csv_path);

}  // namespace sympdd

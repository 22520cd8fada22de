#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "edgesched/instance.hpp"

namespace edgesched {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Instance files are JSON objects with exactly these keys:
//   m, n        integers
//   accuracies  m+1 numbers
//   times       m+1 rows of n numbers
//   comm_times  n numbers (optional)
//   T           number
// Numbers are written with 17 significant digits, so a write/read cycle
// reproduces every double bit for bit and a read/write cycle reproduces the
// bytes. Unknown keys are rejected.
std::string instance_to_json(const Instance& inst);
Instance instance_from_json(const std::string& text);  // validated

Instance read_instance(const std::string& path);
void write_instance(const Instance& inst, const std::string& path);

// One solver run, one CSV line. Optional fields stay empty when they do not
// apply (lp_objective for non-LP algorithms, seed for instances loaded from
// files).
struct RunRecord {
  std::string algorithm;
  int n = 0;
  int m = 0;
  double deadline = 0.0;
  double total_accuracy = 0.0;
  std::optional<double> lp_objective;
  double makespan = 0.0;
  double ed_load = 0.0;
  double es_load = 0.0;
  double violation_pct = 0.0;
  int fractional_jobs = 0;
  double runtime_ms = 0.0;
  std::optional<std::uint64_t> seed;
};

RunRecord make_record(const Instance& inst, const SolveReport& rep,
                      std::optional<std::uint64_t> seed = std::nullopt);

std::string csv_header();
std::string to_csv_row(const RunRecord& rec);
RunRecord parse_csv_row(const std::string& line);  // IoError on malformed input

// Appends rows to a CSV file, writing the header first when the file is new
// or empty.
void append_csv(const std::string& path, const std::vector<RunRecord>& records);

}  // namespace edgesched

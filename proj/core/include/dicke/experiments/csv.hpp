#pragma once

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <string>
#include <vector>

namespace dicke::experiments {

struct Row {
  std::vector<double> coords;
  std::string quantity;
  double value{0.0};
  std::string method{"analytic"};  // analytic | ed | convergence
  int n_max{0};                    // 0 for analytic rows
  double residual{std::numeric_limits<double>::quiet_NaN()};  // relative
  std::string flag{"ok"};
  double wall_time{0.0};  // seconds

  bool failed() const { return flag.rfind("fail:", 0) == 0; }
};

struct RunMetadata {
  std::string version;
  std::string experiment;
  std::string config_hash;
  std::uint64_t seed{0};
  std::string timestamp;
  std::vector<std::string> notes;
};

struct SweepResult {
  RunMetadata meta;
  std::vector<std::string> coord_names;
  std::vector<Row> rows;
  std::vector<std::string> failures;
};

struct CsvOptions {
  bool timings{false};
  bool timestamp{true};
};

// 17 significant digits; "inf", "-inf", "nan" for non-finite values.
std::string format_double(double x);

void write_csv(std::ostream& out, const SweepResult& r,
               const CsvOptions& opts = {});
void write_csv_file(const std::string& path, const SweepResult& r,
                    const CsvOptions& opts = {});

}  // namespace dicke::experiments

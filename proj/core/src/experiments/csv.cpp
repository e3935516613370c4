#include "dicke/experiments/csv.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <stdexcept>

namespace dicke::experiments {

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_csv(std::ostream& out, const SweepResult& r,
               const CsvOptions& opts) {
  out << "# version: " << r.meta.version << '\n'
      << "# experiment: " << r.meta.experiment << '\n'
      << "# config_hash: " << r.meta.config_hash << '\n'
      << "# seed: " << r.meta.seed << '\n';
  if (opts.timestamp) out << "# timestamp: " << r.meta.timestamp << '\n';
  for (const auto& n : r.meta.notes) out << "# notes: " << n << '\n';

  for (const auto& c : r.coord_names) out << c << ',';
  out << "quantity,value,method,n_max,residual,flag";
  if (opts.timings) out << ",wall_time";
  out << '\n';

  for (const Row& row : r.rows) {
    for (double c : row.coords) out << format_double(c) << ',';
    out << row.quantity << ',' << format_double(row.value) << ',' << row.method
        << ',';
    if (row.n_max > 0) out << row.n_max;
    out << ',';
    if (!std::isnan(row.residual)) out << format_double(row.residual);
    out << ',' << row.flag;
    if (opts.timings) out << ',' << format_double(row.wall_time);
    out << '\n';
  }
}

void write_csv_file(const std::string& path, const SweepResult& r,
                    const CsvOptions& opts) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  write_csv(out, r, opts);
  if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

}  // namespace dicke::experiments

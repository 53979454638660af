#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "logfreeze/experiments.hpp"

namespace logfreeze::output {

std::string version();

// "# logfreeze <version> config_hash=<16 hex> seed=<n>"
std::string header_line(std::uint64_t config_hash, std::uint64_t seed);
// Only line that may differ between reruns: workers, wall time, UTC timestamp.
std::string meta_line(int workers, double wall_seconds);

// %.17g
std::string fmt(double v);

// Header, config echo, meta line, then tab-separated stat and info tables.
void write_summary(std::ostream& os, const experiments::RunSummary& s);
// Header plus one column per sample vector.
void write_samples(std::ostream& os, const experiments::RunSummary& s);

struct Table {
  std::string source;  // free-text provenance for the header
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};
void write_table(std::ostream& os, const Table& t, std::uint64_t hash, std::uint64_t seed);

}  // namespace logfreeze::output

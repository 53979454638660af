#include "logfreeze/output.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>

#include "logfreeze/config.hpp"

#ifndef LOGFREEZE_VERSION
#define LOGFREEZE_VERSION "0.0.0"
#endif

namespace logfreeze::output {

std::string version() { return LOGFREEZE_VERSION; }

std::string header_line(std::uint64_t config_hash, std::uint64_t seed) {
  char buf[128];
  std::snprintf(buf, sizeof buf, "# logfreeze %s config_hash=%016llx seed=%llu", LOGFREEZE_VERSION,
                static_cast<unsigned long long>(config_hash), static_cast<unsigned long long>(seed));
  return buf;
}

std::string meta_line(int workers, double wall_seconds) {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char ts[32];
  std::strftime(ts, sizeof ts, "%Y-%m-%dT%H:%M:%SZ", &tm);
  char buf[160];
  std::snprintf(buf, sizeof buf, "# meta workers=%d wall_seconds=%.3f timestamp=%s", workers, wall_seconds, ts);
  return buf;
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

void preamble(std::ostream& os, const experiments::RunSummary& s) {
  os << header_line(config::config_hash(s.config), s.config.master_seed) << '\n';
  os << "# config " << config::canonical(s.config) << '\n';
  os << meta_line(s.config.n_workers, s.wall_seconds) << '\n';
}

}  // namespace

void write_summary(std::ostream& os, const experiments::RunSummary& s) {
  preamble(os, s);
  os << "experiment\t" << s.experiment << "\n\n";
  os << "statistic\testimate\tse\tn\ttheory\ttheory_ref\n";
  for (const auto& st : s.stats) {
    os << st.name << '\t' << fmt(st.estimate) << '\t' << fmt(st.se) << '\t' << st.n << '\t' << fmt(st.theory) << '\t'
       << (st.theory_ref.empty() ? "-" : st.theory_ref) << '\n';
  }
  if (!s.info.empty()) {
    os << "\ninfo\tvalue\n";
    for (const auto& kv : s.info) os << kv.first << '\t' << fmt(kv.second) << '\n';
  }
}

void write_samples(std::ostream& os, const experiments::RunSummary& s) {
  preamble(os, s);
  for (std::size_t k = 0; k < s.sample_columns.size(); ++k) os << (k ? "\t" : "") << s.sample_columns[k];
  os << '\n';
  const std::size_t n = s.samples.empty() ? 0 : s.samples[0].size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < s.samples.size(); ++k) os << (k ? "\t" : "") << fmt(s.samples[k][i]);
    os << '\n';
  }
}

void write_table(std::ostream& os, const Table& t, std::uint64_t hash, std::uint64_t seed) {
  os << header_line(hash, seed) << '\n';
  os << "# source " << t.source << '\n';
  for (std::size_t k = 0; k < t.columns.size(); ++k) os << (k ? "\t" : "") << t.columns[k];
  os << '\n';
  for (const auto& r : t.rows) {
    for (std::size_t k = 0; k < r.size(); ++k) os << (k ? "\t" : "") << fmt(r[k]);
    os << '\n';
  }
}

}  // namespace logfreeze::output

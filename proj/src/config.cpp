#include "logfreeze/config.hpp"

#include <fstream>
#include <set>

#include "logfreeze/error.hpp"

namespace logfreeze::config {

using nlohmann::json;
using experiments::ExperimentConfig;

namespace {

void check_keys(const json& obj, const std::string& where, const std::set<std::string>& allowed) {
  if (!obj.is_object()) throw ConfigError("config: '" + where + "' must be an object");
  for (auto it = obj.begin(); it != obj.end(); ++it)
    if (!allowed.count(it.key())) throw ConfigError("config: unknown key '" + where + "." + it.key() + "'");
}

template <class T>
void read(const json& obj, const char* key, T& dst, const std::string& where) {
  if (!obj.contains(key)) return;
  try {
    dst = obj.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ConfigError("config: bad value for '" + where + "." + key + "': " + e.what());
  }
}

}  // namespace

ExperimentConfig from_json(const json& j, ExperimentConfig c) {
  check_keys(j, "<root>", {"field", "sampling", "grids", "zeta", "output"});
  if (j.contains("field")) {
    const auto& f = j["field"];
    check_keys(f, "field", {"ensemble", "N", "L", "n_grid", "W"});
    if (f.contains("ensemble")) {
      std::string e;
      read(f, "ensemble", e, "field");
      c.ensemble = experiments::ensemble_from_string(e);
    }
    read(f, "N", c.N, "field");
    read(f, "L", c.L, "field");
    read(f, "n_grid", c.n_grid, "field");
    read(f, "W", c.W, "field");
  }
  if (j.contains("sampling")) {
    const auto& s = j["sampling"];
    check_keys(s, "sampling", {"n_samples", "seed", "workers"});
    read(s, "n_samples", c.n_samples, "sampling");
    read(s, "seed", c.master_seed, "sampling");
    read(s, "workers", c.n_workers, "sampling");
  }
  if (j.contains("grids")) {
    const auto& g = j["grids"];
    check_keys(g, "grids", {"beta", "x", "q"});
    read(g, "beta", c.beta_grid, "grids");
    read(g, "x", c.x_grid, "grids");
    read(g, "q", c.q_grid, "grids");
  }
  if (j.contains("zeta")) {
    const auto& z = j["zeta"];
    check_keys(z, "zeta", {"T", "windows", "points_per_unit", "prime_limit"});
    read(z, "T", c.T, "zeta");
    read(z, "windows", c.windows, "zeta");
    read(z, "points_per_unit", c.points_per_unit, "zeta");
    read(z, "prime_limit", c.prime_limit, "zeta");
  }
  if (j.contains("output")) {
    const auto& o = j["output"];
    check_keys(o, "output", {"emit_samples"});
    read(o, "emit_samples", c.emit_samples, "output");
  }
  return c;
}

ExperimentConfig load_file(const std::string& path, ExperimentConfig base) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw ConfigError("config: " + path + ": " + e.what());
  }
  return from_json(j, std::move(base));
}

json to_json(const ExperimentConfig& c) {
  return json{
      {"field", {{"ensemble", experiments::to_string(c.ensemble)}, {"N", c.N}, {"L", c.L}, {"n_grid", c.n_grid}, {"W", c.W}}},
      {"sampling", {{"n_samples", c.n_samples}, {"seed", c.master_seed}}},
      {"grids", {{"beta", c.beta_grid}, {"x", c.x_grid}, {"q", c.q_grid}}},
      {"zeta", {{"T", c.T}, {"windows", c.windows}, {"points_per_unit", c.points_per_unit}, {"prime_limit", c.prime_limit}}},
      {"output", {{"emit_samples", c.emit_samples}}}};
}

std::string canonical(const ExperimentConfig& c) { return to_json(c).dump(); }

std::uint64_t fnv1a64(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t config_hash(const ExperimentConfig& c) { return fnv1a64(canonical(c)); }

}  // namespace logfreeze::config

#pragma once

#include <cstdint>
#include <cstdio>
#include <map>
#include <string>

#include <json.hpp>

namespace sp4bg {

/// 64-bit FNV-1a.
inline std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

inline std::string hex_digest(std::string_view s) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(s)));
  return buf;
}

/// One CLI invocation. The digest covers the command output only, so it is
/// stable across runs with the same flags and seed; wall time is not.
struct RunManifest {
  std::string command;
  std::string ring;
  std::map<std::string, std::string> flags;
  std::uint64_t seed = 0;
  std::string version;
  double wall_time_s = 0;
  std::string digest;
  int exit_code = 0;

  nlohmann::json to_json() const {
    return {{"command", command}, {"ring", ring},       {"flags", flags},   {"seed", seed},
            {"version", version}, {"wall_time_s", wall_time_s}, {"digest", digest}, {"exit_code", exit_code}};
  }

  static RunManifest from_json(const nlohmann::json& j) {
    RunManifest m;
    m.command = j.at("command").get<std::string>();
    m.ring = j.at("ring").get<std::string>();
    m.flags = j.at("flags").get<std::map<std::string, std::string>>();
    m.seed = j.at("seed").get<std::uint64_t>();
    m.version = j.at("version").get<std::string>();
    m.wall_time_s = j.at("wall_time_s").get<double>();
    m.digest = j.at("digest").get<std::string>();
    m.exit_code = j.value("exit_code", 0);
    return m;
  }

  /// Equal up to wall time.
  bool same_run(const RunManifest& o) const {
    return command == o.command && ring == o.ring && flags == o.flags && seed == o.seed && version == o.version &&
           digest == o.digest && exit_code == o.exit_code;
  }
};

}  // namespace sp4bg

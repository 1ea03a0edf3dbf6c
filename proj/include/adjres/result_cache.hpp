#pragma once

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>

#include <json.hpp>

#include "adjres/bbw.hpp"

namespace adjres {

// Optional content-addressed on-disk cache for cohomology rows, enabled by
// setting ADJRES_CACHE to a directory path. Keys are hashed request strings;
// results are deterministic, so entries never need invalidation.
class ResultCache {
 public:
  static ResultCache& instance() {
    static ResultCache c;
    return c;
  }

  bool enabled() const { return !dir_.empty(); }

  std::optional<CohomResult> load(const std::string& key) const {
    if (!enabled()) return std::nullopt;
    std::ifstream in(path_for(key));
    if (!in) return std::nullopt;
    nlohmann::json j;
    in >> j;
    if (j.value("key", "") != key) return std::nullopt;
    CohomResult res;
    for (const auto& g : j["groups"]) {
      int q = g["q"].get<int>();
      for (const auto& r : g["reps"]) {
        Weight w = r["weight"].get<std::vector<int>>();
        res.add(q, w, Int(r["mult"].get<std::string>()));
      }
    }
    return res;
  }

  void store(const std::string& key, const CohomResult& res) const {
    if (!enabled()) return;
    nlohmann::json j;
    j["schema"] = "1";
    j["key"] = key;
    j["groups"] = nlohmann::json::array();
    for (const auto& [q, reps] : res.groups) {
      nlohmann::json g;
      g["q"] = q;
      g["reps"] = nlohmann::json::array();
      for (const auto& [w, m] : reps) g["reps"].push_back({{"weight", w}, {"mult", m.str()}});
      j["groups"].push_back(g);
    }
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    std::string tmp = path_for(key) + ".tmp";
    {
      std::ofstream out(tmp);
      out << j.dump();
    }
    std::filesystem::rename(tmp, path_for(key), ec);
    if (ec) std::remove(tmp.c_str());
  }

 private:
  ResultCache() {
    if (const char* env = std::getenv("ADJRES_CACHE")) dir_ = env;
  }

  std::string path_for(const std::string& key) const {
    char buf[20];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(fnv1a64(key)));
    return dir_ + "/" + buf + ".json";
  }

  std::string dir_;
};

}  // namespace adjres

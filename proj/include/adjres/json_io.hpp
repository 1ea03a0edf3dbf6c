#pragma once

#include <json.hpp>

#include "adjres/betti_table.hpp"
#include "adjres/weyman.hpp"

namespace adjres {

inline nlohmann::json cohom_to_json(const RootSystem& rs, const CohomResult& c) {
  nlohmann::json groups = nlohmann::json::array();
  for (const auto& [q, reps] : c.groups) {
    nlohmann::json g;
    g["q"] = q;
    g["reps"] = nlohmann::json::array();
    for (const auto& [w, m] : reps)
      g["reps"].push_back(
          {{"weight", w}, {"dim", weyl_dim(rs, w).str()}, {"mult", m.convert_to<long>()}});
    groups.push_back(std::move(g));
  }
  nlohmann::json j;
  j["schema"] = "1";
  j["groups"] = std::move(groups);
  return j;
}

inline nlohmann::json betti_to_json(const AdjointVariety& X, const BettiTable& t,
                                    const std::string& sheaf) {
  nlohmann::json j;
  j["schema"] = "1";
  j["type"] = X.rs->lie_type.str();
  j["sheaf"] = sheaf;
  j["terms"] = nlohmann::json::array();
  for (const auto& [u, es] : t.terms) {
    nlohmann::json term;
    term["u"] = u;
    term["entries"] = nlohmann::json::array();
    for (const auto& e : es) {
      nlohmann::json entry;
      entry["twist"] = e.twist;
      if (is_zero(e.rep))
        entry["rep"] = "trivial";
      else
        entry["rep"] = e.rep;
      entry["mult"] = e.mult.convert_to<long>();
      term["entries"].push_back(std::move(entry));
    }
    j["terms"].push_back(std::move(term));
  }
  return j;
}

}  // namespace adjres

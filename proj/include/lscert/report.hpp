#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "lscert/dist.hpp"
#include "lscert/rational.hpp"

namespace lscert {

// Insertion-ordered JSON keeps reports byte-deterministic.
using Json = nlohmann::ordered_json;

inline Json rational_json(const Rational& q) { return rat_to_string(q); }

inline Json dist_json(const Dist& d) {
  Json j;
  j["value"] = d.to_string();
  j["value_sq"] = rat_to_string(d.sq());
  return j;
}

struct CheckRecord {
  std::string name;
  std::string anchor;   // which certified statement the check witnesses
  std::string verdict;  // "pass" | "fail" | "not-applicable"
  std::string reason;   // set for fail / not-applicable
  Json data;

  static CheckRecord pass(std::string name, std::string anchor, Json data = Json::object()) {
    return {std::move(name), std::move(anchor), "pass", "", std::move(data)};
  }
  static CheckRecord fail(std::string name, std::string anchor, std::string reason,
                          Json data = Json::object()) {
    return {std::move(name), std::move(anchor), "fail", std::move(reason), std::move(data)};
  }
  static CheckRecord outcome(bool ok, std::string name, std::string anchor, std::string reason,
                             Json data = Json::object()) {
    return ok ? pass(std::move(name), std::move(anchor), std::move(data))
              : fail(std::move(name), std::move(anchor), std::move(reason), std::move(data));
  }

  Json to_json() const;
};

struct Report {
  std::string scenario;
  std::string description;
  Json parameters;
  std::vector<CheckRecord> checks;

  bool pass() const;
  Json to_json() const;
  // Canonical serialized form; two runs of one scenario produce identical bytes.
  std::string to_string() const;
};

}  // namespace lscert

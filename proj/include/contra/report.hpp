#pragma once

/**
 * @file report.hpp
 * @brief Structured outcome of a single verification.
 */

#include <chrono>
#include <string>
#include <utility>

#include "contra/linalg.hpp"

namespace contra {

enum class Status { pass, fail, precondition_failed };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::precondition_failed:
      return "precondition-failed";
  }
  return "unknown";
}

/**
 * A verdict plus the evidence behind it.
 *
 * Witnesses are free-form JSON keyed by what they show. A failing report always
 * carries at least one witness; expect() records the witness at the moment a
 * condition fails.
 */
struct CheckReport {
  std::string id;
  Status status = Status::pass;
  json witnesses = json::object();
  std::chrono::duration<double> elapsed{0};

  explicit CheckReport(std::string check_id = {}) : id(std::move(check_id)) {}

  bool passed() const { return status == Status::pass; }

  /// Records `key` as a witness and downgrades to fail when `ok` is false.
  bool expect(bool ok, const std::string& key, json witness) {
    if (!ok) {
      if (status == Status::pass) status = Status::fail;
      json& failures = witnesses["failures"];
      if (!failures.is_array()) failures = json::array();
      failures.push_back(json{{"what", key}, {"witness", std::move(witness)}});
    }
    return ok;
  }

  bool expect(bool ok, const std::string& key) { return expect(ok, key, json(true)); }

  void record(const std::string& key, json value) { witnesses[key] = std::move(value); }

  void precondition_failed(const std::string& why, json witness = json(nullptr)) {
    status = Status::precondition_failed;
    witnesses["precondition"] = json{{"what", why}, {"witness", std::move(witness)}};
  }

  /// Folds a sub-report in under `key`; the worst status wins.
  void absorb(const std::string& key, const CheckReport& sub) {
    witnesses[key] = sub.to_json(false);
    if (sub.status == Status::precondition_failed) {
      status = Status::precondition_failed;
    } else if (sub.status == Status::fail && status == Status::pass) {
      status = Status::fail;
    }
  }

  json to_json(bool include_elapsed = true) const {
    json j{{"id", id}, {"status", contra::to_string(status)}, {"witnesses", witnesses}};
    if (include_elapsed) j["elapsed_seconds"] = elapsed.count();
    return j;
  }
};

/// Times `body(report)` and stores the duration in the report.
template <typename Body>
CheckReport timed_check(std::string id, Body&& body) {
  CheckReport report(std::move(id));
  const auto start = std::chrono::steady_clock::now();
  std::forward<Body>(body)(report);
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

}  // namespace contra

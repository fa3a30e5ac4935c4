#pragma once

/**
 * @file report.hpp
 * @brief Verification reports: named clauses with pass/fail and a witness.
 */

#include <json.hpp>

#include <string>
#include <utility>
#include <vector>

namespace zinbiel {

struct Clause {
  std::string name;
  bool passed = true;
  /// Zero-based basis indices of the first failing instance (empty on pass).
  std::vector<int> witness;
  /// Human-readable sides of the failed identity.
  std::string detail;
};

class Report {
 public:
  Report() = default;
  explicit Report(std::string subject) : subject_(std::move(subject)) {}

  const std::string& subject() const { return subject_; }
  const std::vector<Clause>& clauses() const { return clauses_; }

  bool passed() const {
    for (const auto& c : clauses_)
      if (!c.passed) return false;
    return true;
  }

  void pass(std::string name) { clauses_.push_back({std::move(name), true, {}, {}}); }
  void fail(std::string name, std::vector<int> witness, std::string detail) {
    clauses_.push_back({std::move(name), false, std::move(witness), std::move(detail)});
  }
  void add(Clause c) { clauses_.push_back(std::move(c)); }
  void check(std::string name, bool ok, std::string detail = {}) {
    clauses_.push_back({std::move(name), ok, {}, ok ? std::string{} : std::move(detail)});
  }

  /// Appends the clauses of another report, prefixing their names.
  void merge(const Report& other, const std::string& prefix = {}) {
    for (auto c : other.clauses_) {
      if (!prefix.empty()) c.name = prefix + ": " + c.name;
      clauses_.push_back(std::move(c));
    }
  }

  const Clause* first_failure() const {
    for (const auto& c : clauses_)
      if (!c.passed) return &c;
    return nullptr;
  }

  const Clause* find(const std::string& name) const {
    for (const auto& c : clauses_)
      if (c.name == name) return &c;
    return nullptr;
  }

  std::string to_text() const {
    std::string out = subject_ + ": " + (passed() ? "PASS" : "FAIL") + "\n";
    for (const auto& c : clauses_) {
      out += "  [" + std::string(c.passed ? "pass" : "FAIL") + "] " + c.name;
      if (!c.passed) {
        if (!c.witness.empty()) {
          out += " at (";
          for (std::size_t i = 0; i < c.witness.size(); ++i)
            out += (i ? "," : "") + std::to_string(c.witness[i] + 1);
          out += ")";
        }
        if (!c.detail.empty()) out += ": " + c.detail;
      }
      out += "\n";
    }
    return out;
  }

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["subject"] = subject_;
    j["verdict"] = passed() ? "pass" : "fail";
    j["clauses"] = nlohmann::json::array();
    for (const auto& c : clauses_) {
      nlohmann::json jc{{"name", c.name}, {"passed", c.passed}};
      if (!c.passed) {
        std::vector<int> one_based;
        for (int w : c.witness) one_based.push_back(w + 1);
        jc["witness"] = one_based;
        jc["detail"] = c.detail;
      }
      j["clauses"].push_back(std::move(jc));
    }
    return j;
  }

 private:
  std::string subject_;
  std::vector<Clause> clauses_;
};

}  // namespace zinbiel

#pragma once

#include <Eigen/Core>

#include <string>
#include <string_view>
#include <vector>

namespace qha {

struct CheckOutcome {
  std::string id;
  bool passed = true;
  std::vector<Eigen::Index> witness;  // first counterexample, basis indices
  std::string detail;
};

class CheckReport {
 public:
  void pass(std::string id) { outcomes_.push_back({std::move(id), true, {}, {}}); }
  void fail(std::string id, std::vector<Eigen::Index> witness, std::string detail = {}) {
    outcomes_.push_back({std::move(id), false, std::move(witness), std::move(detail)});
  }
  void add(CheckOutcome o) { outcomes_.push_back(std::move(o)); }
  void merge(const CheckReport& other) {
    outcomes_.insert(outcomes_.end(), other.outcomes_.begin(), other.outcomes_.end());
  }

  bool passed() const {
    for (const auto& o : outcomes_)
      if (!o.passed) return false;
    return true;
  }
  bool has(std::string_view id) const { return find(id) != nullptr; }
  bool passed(std::string_view id) const {
    const CheckOutcome* o = find(id);
    return o && o->passed;
  }
  const CheckOutcome* find(std::string_view id) const {
    for (const auto& o : outcomes_)
      if (o.id == id) return &o;
    return nullptr;
  }
  std::vector<std::string> failed_ids() const {
    std::vector<std::string> ids;
    for (const auto& o : outcomes_)
      if (!o.passed) ids.push_back(o.id);
    return ids;
  }
  const std::vector<CheckOutcome>& outcomes() const { return outcomes_; }

 private:
  std::vector<CheckOutcome> outcomes_;
};

using AydReport = CheckReport;

}  // namespace qha

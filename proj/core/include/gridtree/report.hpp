#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace gridtree {

struct CheckResult {
  std::string name;
  bool passed = true;
  std::string detail;
};

/// Ordered list of named pass/fail checks. Passes iff every entry passes.
class VerifyReport {
 public:
  void add(std::string name, bool passed, std::string detail = {});

  bool ok() const;
  const std::vector<CheckResult>& entries() const { return entries_; }

  /// nullptr when the check was not run.
  const CheckResult* find(std::string_view name) const;
  bool passed(std::string_view name) const;

  /// One line per check: "<name>: pass" or "<name>: fail <detail>".
  std::string render() const;

  friend bool operator==(const VerifyReport&, const VerifyReport&);

 private:
  std::vector<CheckResult> entries_;
};

inline bool operator==(const CheckResult& a, const CheckResult& b) {
  return a.name == b.name && a.passed == b.passed && a.detail == b.detail;
}

}  // namespace gridtree

#include "gridtree/report.hpp"

#include <algorithm>

namespace gridtree {

void VerifyReport::add(std::string name, bool passed, std::string detail) {
  entries_.push_back({std::move(name), passed, std::move(detail)});
}

bool VerifyReport::ok() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const CheckResult& c) { return c.passed; });
}

const CheckResult* VerifyReport::find(std::string_view name) const {
  for (const auto& c : entries_) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

bool VerifyReport::passed(std::string_view name) const {
  const CheckResult* c = find(name);
  return c != nullptr && c->passed;
}

std::string VerifyReport::render() const {
  std::string out;
  for (const auto& c : entries_) {
    out += c.name;
    out += c.passed ? ": pass" : ": fail";
    if (!c.passed && !c.detail.empty()) {
      out += ' ';
      out += c.detail;
    }
    out += '\n';
  }
  return out;
}

bool operator==(const VerifyReport& a, const VerifyReport& b) { return a.entries_ == b.entries_; }

}  // namespace gridtree

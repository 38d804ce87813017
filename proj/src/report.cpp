#include "freeplate/report.hpp"

#include <algorithm>

namespace freeplate {

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::inconclusive: return "inconclusive";
  }
  return "fail";
}

bool CheckReport::passed() const {
  return std::none_of(items.begin(), items.end(), [](const CheckItem& i) { return i.status == CheckStatus::fail; });
}

void CheckReport::add(std::string check, bool ok, double value, double tolerance) {
  items.push_back({std::move(check), ok ? CheckStatus::pass : CheckStatus::fail, value, tolerance});
}

}  // namespace freeplate

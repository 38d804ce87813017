#pragma once

#include <string>
#include <vector>

namespace freeplate {

enum class CheckStatus { pass, fail, inconclusive };

const char* to_string(CheckStatus s);

struct CheckItem {
  std::string check;
  CheckStatus status = CheckStatus::pass;
  double value = 0.0;
  double tolerance = 0.0;
};

struct CheckReport {
  std::vector<CheckItem> items;
  bool passed() const;
  void add(std::string check, bool ok, double value, double tolerance);
};

}  // namespace freeplate

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "freeplate/report.hpp"

namespace freeplate {

struct ManifestEntry {
  std::string check_id;
  std::string module;
  std::string ref;  // the lemma or fact the check exercises
};

const std::vector<ManifestEntry>& verify_manifest();
const std::vector<std::string>& verify_modules();

struct VerificationEntry {
  std::string check_id;
  std::string ref;
  CheckStatus status = CheckStatus::pass;
  double value = 0.0;
  double tolerance = 0.0;
  double runtime_ms = 0.0;
  std::string detail;
};

struct VerificationReport {
  std::vector<VerificationEntry> entries;
  bool passed() const;
};

// selection: "all" or one of verify_modules()
VerificationReport verify_suite(std::string_view selection, std::uint64_t seed = 0);

std::string verification_to_json(const VerificationReport& r, bool include_timings);
std::string verification_to_csv(const VerificationReport& r, bool include_timings);

}  // namespace freeplate

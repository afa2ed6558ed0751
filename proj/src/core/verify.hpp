#pragma once

#include <chrono>
#include <optional>

#include "core/textio.hpp"

namespace idem {

/// One machine-readable verification run: per-item status with witnesses
/// for failures and timing; field order is stable for golden output.
struct VerifyItem {
  std::string name;
  std::string status;  // pass | fail | skip
  std::string witness;
  double ms = 0;
};

struct VerificationReport {
  std::string suite;
  std::vector<VerifyItem> items;
  int passed = 0, failed = 0, skipped = 0;

  bool ok() const { return failed == 0; }
  void add(const std::string& name, bool pass, const std::string& witness = "",
           double ms = 0);
  void skip(const std::string& name, const std::string& why);
};

// Suites: duality | adjunction | localization-oracle | sheaf | patching |
// tensor | congruence | stone. `bound` caps enumeration sizes where a
// suite enumerates; `doc` adds document blocks to the instance pool.
VerificationReport run_suite(const std::string& suite, const Document* doc, int bound);

std::vector<std::string> suite_names();

}  // namespace idem

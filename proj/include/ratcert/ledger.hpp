#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace ratcert {

/// One recomputed identity: what was computed, the value obtained, the value
/// required, and whether they agree.
struct LedgerLine {
  std::string label;
  std::string value;
  std::string expected;
  bool pass = false;
};

/// A checked list of identities backing one certificate step.  Every line is
/// recomputed from scratch by the producing routine; a failing line means the
/// engine disagrees with its own bookkeeping, so producers throw instead of
/// returning a ledger with all_pass() == false.
struct Ledger {
  std::string title;
  std::vector<LedgerLine> lines;

  bool all_pass() const;
  void add(const std::string& label, const std::string& value, const std::string& expected);
  /// Aligned three-column text table with a [ok]/[FAIL] marker per line.
  std::string text_table() const;
  nlohmann::json to_json() const;
};

}  // namespace ratcert

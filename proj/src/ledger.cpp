#include "ratcert/ledger.hpp"

#include <algorithm>
#include <sstream>

namespace ratcert {

bool Ledger::all_pass() const {
  return std::all_of(lines.begin(), lines.end(), [](const LedgerLine& l) { return l.pass; });
}

void Ledger::add(const std::string& label, const std::string& value, const std::string& expected) {
  lines.push_back({label, value, expected, value == expected});
}

std::string Ledger::text_table() const {
  std::size_t wl = 5, wv = 5, we = 8;
  for (const LedgerLine& l : lines) {
    wl = std::max(wl, l.label.size());
    wv = std::max(wv, l.value.size());
    we = std::max(we, l.expected.size());
  }
  std::ostringstream out;
  auto pad = [](const std::string& s, std::size_t w) {
    return s + std::string(w - s.size(), ' ');
  };
  out << title << "\n";
  out << pad("check", wl) << "  " << pad("value", wv) << "  " << pad("expected", we) << "\n";
  out << std::string(wl + wv + we + 4 + 7, '-') << "\n";
  for (const LedgerLine& l : lines) {
    out << pad(l.label, wl) << "  " << pad(l.value, wv) << "  " << pad(l.expected, we) << "  "
        << (l.pass ? "[ok]" : "[FAIL]") << "\n";
  }
  return out.str();
}

nlohmann::json Ledger::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (const LedgerLine& l : lines) {
    rows.push_back({{"label", l.label},
                    {"value", l.value},
                    {"expected", l.expected},
                    {"pass", l.pass}});
  }
  return {{"title", title}, {"lines", rows}, {"all_pass", all_pass()}};
}

}  // namespace ratcert

#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ratcert/group.hpp"

namespace ratcert {

// One named example group shipped with the project, together with the
// classification it must reproduce.  The raw JSON is kept so serialization
// round-trips can be tested byte for byte.
struct CatalogEntry {
  std::string name;
  std::string expected_label;
  long expected_order = 0;
  nlohmann::json group_json;

  MatrixGroup load() const;
};

// Loads data/catalog.json from the shipped data directory (or an explicit
// path).  Throws input_error on unreadable files or malformed entries.
std::vector<CatalogEntry> load_catalog();
std::vector<CatalogEntry> load_catalog(const std::string& path);

// Entry lookup by name; throws input_error listing the known names.
const CatalogEntry& find_entry(const std::vector<CatalogEntry>& entries,
                               const std::string& name);

}  // namespace ratcert

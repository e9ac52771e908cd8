#include "ratcert/catalog.hpp"

#include <fstream>
#include <sstream>

#include "ratcert/config.hpp"
#include "ratcert/error.hpp"

namespace ratcert {

using nlohmann::json;

MatrixGroup CatalogEntry::load() const {
  return close(GroupInput::from_json(group_json));
}

std::vector<CatalogEntry> load_catalog() {
  return load_catalog(std::string(kDefaultDataDir) + "/catalog.json");
}

std::vector<CatalogEntry> load_catalog(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot read catalog file: " + path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw input_error(std::string("catalog parse error: ") + e.what());
  }
  if (!doc.is_array()) throw input_error("catalog file is not a JSON array");
  std::vector<CatalogEntry> entries;
  for (const json& j : doc) {
    if (!j.is_object() || !j.contains("name") || !j.contains("expected") ||
        !j.contains("group"))
      throw input_error("catalog entry misses name/expected/group");
    CatalogEntry e;
    e.name = j.at("name").get<std::string>();
    const json& exp = j.at("expected");
    if (!exp.contains("label") || !exp.contains("order"))
      throw input_error("catalog entry '" + e.name + "' misses expected label/order");
    e.expected_label = exp.at("label").get<std::string>();
    e.expected_order = exp.at("order").get<long>();
    e.group_json = j.at("group");
    entries.push_back(std::move(e));
  }
  return entries;
}

const CatalogEntry& find_entry(const std::vector<CatalogEntry>& entries,
                               const std::string& name) {
  for (const CatalogEntry& e : entries)
    if (e.name == name) return e;
  std::ostringstream known;
  for (std::size_t i = 0; i < entries.size(); ++i)
    known << (i ? ", " : "") << entries[i].name;
  throw input_error("unknown catalog entry '" + name + "' (known: " + known.str() + ")");
}

}  // namespace ratcert

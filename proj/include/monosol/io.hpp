#pragma once

// JSON readers for certificate files and tuple fixtures.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "monosol/certificates.hpp"
#include "monosol/equation.hpp"

namespace monosol {

using Json = nlohmann::json;

/// Missing or unreadable data files.
class FixtureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FixtureError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Json read_json_file(const std::string& path) {
  try {
    return Json::parse(read_text_file(path));
  } catch (const Json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

/// $MONOSOL_DATA_DIR, else the directory baked in at build time.
inline std::string data_dir() {
  if (const char* env = std::getenv("MONOSOL_DATA_DIR"); env && *env) return env;
#ifdef MONOSOL_DATA_DIR
  return MONOSOL_DATA_DIR;
#else
  return "data";
#endif
}

/// {family, a, k, scale_num, scale_den, entries}; entries are strings ("p/q" or decimals) or integers.
inline EmbeddedCertificate certificate_from_json(const Json& j) {
  try {
    EmbeddedCertificate c;
    c.family = j.at("family").get<std::string>();
    c.a = j.at("a").get<std::int64_t>();
    c.k = j.at("k").get<int>();
    c.scale_num = j.at("scale_num").get<std::int64_t>();
    c.scale_den = j.at("scale_den").get<std::int64_t>();
    for (const auto& e : j.at("entries")) c.entries.push_back(e.is_string() ? e.get<std::string>() : e.dump());
    if (c.scale_num <= 0 || c.scale_den <= 0) throw InputError("certificate scale must be positive");
    return c;
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed certificate: ") + e.what());
  }
}

inline Json certificate_to_json(const EmbeddedCertificate& c) {
  return Json{{"family", c.family}, {"a", c.a},           {"k", c.k},
              {"scale_num", c.scale_num}, {"scale_den", c.scale_den}, {"entries", c.entries}};
}

inline std::map<int, std::vector<std::int64_t>> tuples_from_json(const Json& j) {
  std::map<int, std::vector<std::int64_t>> out;
  try {
    for (const auto& [key, value] : j.items()) out[std::stoi(key)] = value.get<std::vector<std::int64_t>>();
  } catch (const std::exception& e) {
    throw InputError(std::string("malformed tuple file: ") + e.what());
  }
  return out;
}

}  // namespace monosol

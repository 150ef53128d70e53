#pragma once

// CSV and JSON rendering of experiment artifacts. Every artifact embeds its resolved config.

#include <json.hpp>

#include <string>
#include <vector>

#include "jarnik/exact.hpp"

namespace jarnik::io {

using Json = nlohmann::ordered_json;

struct Artifact {
  Json config = Json::object();
  std::vector<std::string> columns;
  std::vector<std::vector<Json>> rows;
  Json extra = Json::object();  // fit reports, flags; CSV renders them as trailing comment lines
};

/// "# config: {...}" header, column line, rows, then "# key: value" lines for `extra`.
std::string render_csv(const Artifact& a);
/// {"config": ..., "columns": ..., "rows": [{column: value}], extra keys...}
std::string render_json(const Artifact& a);
std::string render(const Artifact& a, const std::string& format);

Json rational_json(const Rational& q);
Json rational_list_json(const std::vector<Rational>& qs);
Json number_json(double x);  // null for non-finite values

/// Writes `text` to the path, replacing it. Throws std::runtime_error on I/O failure.
void write_file(const std::string& path, const std::string& text);

}  // namespace jarnik::io

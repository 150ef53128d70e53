#include "jarnik/io.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

#include "jarnik/errors.hpp"

namespace jarnik::io {

namespace {

std::string cell(const Json& v) {
  switch (v.type()) {
    case Json::value_t::string:
      return v.get<std::string>();
    case Json::value_t::number_integer:
      return std::to_string(v.get<std::int64_t>());
    case Json::value_t::number_unsigned:
      return std::to_string(v.get<std::uint64_t>());
    case Json::value_t::number_float:
      return format_double(v.get<double>());
    case Json::value_t::boolean:
      return v.get<bool>() ? "true" : "false";
    case Json::value_t::null:
      return "";
    default:
      return v.dump();
  }
}

}  // namespace

std::string render_csv(const Artifact& a) {
  std::string out = "# config: " + a.config.dump() + "\n";
  for (std::size_t i = 0; i < a.columns.size(); ++i) out += (i ? "," : "") + a.columns[i];
  out += "\n";
  for (const auto& row : a.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + cell(row[i]);
    out += "\n";
  }
  for (const auto& [key, value] : a.extra.items()) out += "# " + key + ": " + value.dump() + "\n";
  return out;
}

std::string render_json(const Artifact& a) {
  Json doc = Json::object();
  doc["config"] = a.config;
  doc["columns"] = a.columns;
  Json rows = Json::array();
  for (const auto& row : a.rows) {
    Json obj = Json::object();
    for (std::size_t i = 0; i < row.size() && i < a.columns.size(); ++i) obj[a.columns[i]] = row[i];
    rows.push_back(std::move(obj));
  }
  doc["rows"] = std::move(rows);
  for (const auto& [key, value] : a.extra.items()) doc[key] = value;
  return doc.dump(2) + "\n";
}

std::string render(const Artifact& a, const std::string& format) {
  if (format == "csv") return render_csv(a);
  if (format == "json") return render_json(a);
  throw InvalidInput("unknown format: " + format);
}

Json rational_json(const Rational& q) { return to_string(q); }

Json rational_list_json(const std::vector<Rational>& qs) {
  Json out = Json::array();
  for (const auto& q : qs) out.push_back(to_string(q));
  return out;
}

Json number_json(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw std::runtime_error("cannot open " + path + " for writing");
  f << text;
  if (!f) throw std::runtime_error("failed writing " + path);
}

}  // namespace jarnik::io

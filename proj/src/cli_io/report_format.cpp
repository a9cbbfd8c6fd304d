#include <cstdio>
#include <string>

#include "json.hpp"
#include "zetaladder/run.hpp"

namespace zl {
namespace {

std::string format_real(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

// RFC 4180 quoting when needed.
std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

std::string csv_cell(const Cell& c) {
  if (const double* d = std::get_if<double>(&c)) return format_real(*d);
  if (const std::int64_t* i = std::get_if<std::int64_t>(&c)) return std::to_string(*i);
  return csv_field(std::get<std::string>(c));
}

}  // namespace

std::string format_csv(const RunConfig& cfg, const Table& t) {
  std::string out = "# config: " + config_to_json(cfg) + "\n";
  for (std::size_t i = 0; i < t.columns.size(); ++i) {
    if (i) out += ',';
    out += csv_field(t.columns[i]);
  }
  out += '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += csv_cell(row[i]);
    }
    out += '\n';
  }
  return out;
}

std::string format_json(const RunConfig& cfg, const Table& t) {
  nlohmann::ordered_json doc;
  doc["config"] = nlohmann::ordered_json::parse(config_to_json(cfg));
  doc["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : t.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size() && i < t.columns.size(); ++i)
      std::visit([&](const auto& v) { obj[t.columns[i]] = v; }, row[i]);
    doc["rows"].push_back(std::move(obj));
  }
  return doc.dump(2) + "\n";
}

Table law_table(const std::vector<LawReport>& reports) {
  Table t;
  t.columns = {"law_id", "T", "k", "r", "lhs", "rhs", "abs_residual", "rel_residual", "notes"};
  for (const LawReport& r : reports)
    t.rows.push_back({std::string(to_string(r.law_id)), r.T, std::int64_t{r.k}, std::int64_t{r.r},
                      r.lhs, r.rhs, r.abs_residual, r.rel_residual, r.notes});
  return t;
}

}  // namespace zl

#include "qtower/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace qtower {

Report &Report::param(std::string key, Value v) {
  params.emplace_back(std::move(key), std::move(v));
  return *this;
}

Table &Report::table(std::string name, std::vector<std::string> columns) {
  tables.push_back({std::move(name), std::move(columns), {}});
  return tables.back();
}

std::string value_str(const Value &v) {
  if (auto *i = std::get_if<long>(&v))
    return std::to_string(*i);
  if (auto *b = std::get_if<bool>(&v))
    return *b ? "true" : "false";
  return std::get<std::string>(v);
}

namespace {

// Display width in code points; labels may carry a few multi-byte symbols.
std::size_t width(const std::string &s) {
  return static_cast<std::size_t>(std::count_if(
      s.begin(), s.end(), [](char c) { return (c & 0xC0) != 0x80; }));
}

nlohmann::json to_json(const Value &v) {
  if (auto *i = std::get_if<long>(&v))
    return *i;
  if (auto *b = std::get_if<bool>(&v))
    return *b;
  return std::get<std::string>(v);
}

} // namespace

std::string Report::text() const {
  std::ostringstream os;
  if (!summary.empty())
    os << summary << '\n';
  for (const auto &[k, v] : params)
    os << k << ": " << value_str(v) << '\n';
  for (const auto &t : tables) {
    os << '\n' << t.name << '\n';
    std::vector<std::size_t> w(t.columns.size());
    for (std::size_t c = 0; c < t.columns.size(); ++c)
      w[c] = width(t.columns[c]);
    std::vector<std::vector<std::string>> cells;
    for (const auto &row : t.rows) {
      cells.emplace_back();
      for (std::size_t c = 0; c < row.size(); ++c) {
        cells.back().push_back(value_str(row[c]));
        w[c] = std::max(w[c], width(cells.back().back()));
      }
    }
    auto line = [&](const std::vector<std::string> &r) {
      std::string out;
      for (std::size_t c = 0; c < r.size(); ++c) {
        out += r[c];
        if (c + 1 < r.size())
          out += std::string(w[c] - width(r[c]) + 2, ' ');
      }
      os << "  " << out << '\n';
    };
    line(t.columns);
    std::vector<std::string> rule;
    for (auto x : w)
      rule.push_back(std::string(x, '-'));
    line(rule);
    for (const auto &r : cells)
      line(r);
    if (t.rows.empty())
      os << "  (none)\n";
  }
  return os.str();
}

std::string Report::json() const {
  nlohmann::ordered_json j;
  j["command"] = command;
  if (!summary.empty())
    j["summary"] = summary;
  nlohmann::ordered_json p = nlohmann::ordered_json::object();
  for (const auto &[k, v] : params)
    p[k] = to_json(v);
  j["params"] = p;
  nlohmann::ordered_json tabs = nlohmann::ordered_json::object();
  for (const auto &t : tables) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto &r : t.rows) {
      nlohmann::ordered_json row;
      for (std::size_t c = 0; c < r.size(); ++c)
        row[t.columns[c]] = to_json(r[c]);
      rows.push_back(row);
    }
    tabs[t.name] = rows;
  }
  j["tables"] = tabs;
  return j.dump(2) + "\n";
}

} // namespace qtower

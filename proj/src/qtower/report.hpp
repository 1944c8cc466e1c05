#pragma once

#include <string>
#include <variant>
#include <vector>

namespace qtower {

using Value = std::variant<long, std::string, bool>;

struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<Value>> rows;
};

/// One command result. Text and JSON are rendered from the same data, so
/// both carry the same numbers.
struct Report {
  std::string command;
  std::string summary;
  std::vector<std::pair<std::string, Value>> params;
  std::vector<Table> tables;

  Report &param(std::string key, Value v);
  Table &table(std::string name, std::vector<std::string> columns);

  std::string text() const;
  std::string json() const;
};

std::string value_str(const Value &v);

} // namespace qtower

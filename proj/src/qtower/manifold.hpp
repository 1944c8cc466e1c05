#pragma once

#include "qtower/serre.hpp"
#include "qtower/structures.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace qtower {

/// A base manifold as read from a TOML description:
///
///   name = "S4"
///   dim = 4                        # optional
///   betti = {"0" = 1, "4" = 1}
///   [algebra]                      # optional
///   max_degree = 8
///   basis = {"4" = ["u"], "8" = ["v"]}
///   products = [["u", "u", "v"]]   # value: name, "-name", "0" or coordinates
///   [classes]                      # optional
///   p1 = "zero"                    # or "nonzero", "unknown", [coords]
struct ManifoldFile {
  std::string name;
  std::string origin;
  GradedDims betti;
  std::optional<int> dim;
  bool has_algebra = false;
  BasePresentation presentation;
  std::map<std::string, ClassStatus> classes;

  /// Explicit dim, else the top degree with nonzero Betti number.
  int dimension() const;
  StructureQuery query(int level, int bundle_level = 0) const;
};

/// Parse errors (bad TOML, unreadable file) throw ErrorKind::parse, schema
/// problems throw ErrorKind::validation; both carry file:line:column.
ManifoldFile parse_manifold(const std::string &path);
ManifoldFile parse_manifold_text(std::string_view text,
                                 const std::string &origin);

} // namespace qtower

#pragma once

#include "qtower/catalog.hpp"
#include "qtower/exactalg.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qtower {

enum class ClassStatus { zero, nonzero, unknown };
enum class Tristate { yes, no, unknown };

const char *to_string(ClassStatus s);
const char *to_string(Tristate t);

/// Lift of a bundle from cover level `bundle_level` to level `level`
/// (4 String, 8 Fivebrane, 12 Ninebrane, 16 the next stage).
struct StructureQuery {
  int level = 8;
  int bundle_level = 0;
  GradedDims betti;
  std::map<std::string, ClassStatus> declared;

  /// Declared status of p_i, or zero when b_{4i} = 0, else unknown.
  ClassStatus status(int i) const;
  /// Throws a validation Error on illegal levels.
  void validate() const;
};

struct LabeledDim {
  std::string label;
  long dim = 0;
};

struct StructureReport {
  Tristate exists = Tristate::unknown;
  /// Obstruction classes consulted, in order, with their status.
  std::vector<std::pair<std::string, ClassStatus>> obstructions;
  std::optional<long> torsor;
  /// Degree-(k-1) summands of the Spin bundle's total space.
  std::vector<LabeledDim> spin_bundle;
  /// Same degree for the lifted bundle.
  std::vector<LabeledDim> lifted_bundle;
  std::vector<LabeledDim> kernel;
  bool surjective = false;
  bool bijective = false;

  static long total(const std::vector<LabeledDim> &v);
};

/// yes iff every obstruction p_i with bundle_level < 4i <= level is zero;
/// no if one is nonzero; unknown otherwise.
Tristate obstruction_survey(const StructureQuery &q);

/// b_{k-1}. Throws a precondition Error unless the survey says yes.
long structure_torsor(const StructureQuery &q);

/// Degree-7 comparison of the Spin bundle and its Fivebrane lift. Needs
/// p1 = p2 = 0 and b1 = 0.
StructureReport fivebrane_decomposition(const StructureQuery &q);

/// Degree-11 comparison of the Spin bundle and its Ninebrane lift. Needs
/// p1 = p2 = p3 = 0 and b1 = 0.
StructureReport ninebrane_decomposition(const StructureQuery &q);

/// Survey, torsor and (at levels 8 and 12) the decomposition in one report.
StructureReport structure_report(const StructureQuery &q);

struct MapFactor {
  int degree = 0;       // i in K(V, i)
  int from_degree = 0;  // V = H^{from_degree}(X; Q)
  long dim = 0;
};

/// Factors K(H^{w-i}(X;Q), i), i = 0..w, with zero factors dropped; the
/// window w is k-1 for lifts of classifying maps and k-2 at group level.
std::vector<MapFactor> mapping_space_decompose(int k, const GradedDims &betti,
                                               bool group_level = false);

/// dim of pi_0 of the classifying-level mapping space: b_{k-1}.
long pi0_of_mapping_space(int k, const GradedDims &betti);

std::string factor_str(const MapFactor &f);

} // namespace qtower

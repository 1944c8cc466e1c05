#include "qtower/structures.hpp"

#include "qtower/errors.hpp"

namespace qtower {

const char *to_string(ClassStatus s) {
  switch (s) {
  case ClassStatus::zero: return "zero";
  case ClassStatus::nonzero: return "nonzero";
  case ClassStatus::unknown: return "unknown";
  }
  return "?";
}

const char *to_string(Tristate t) {
  switch (t) {
  case Tristate::yes: return "yes";
  case Tristate::no: return "no";
  case Tristate::unknown: return "unknown";
  }
  return "?";
}

ClassStatus StructureQuery::status(int i) const {
  auto it = declared.find("p" + std::to_string(i));
  if (it != declared.end())
    return it->second;
  return betti.at(4 * i) == 0 ? ClassStatus::zero : ClassStatus::unknown;
}

void StructureQuery::validate() const {
  if (level != 4 && level != 8 && level != 12 && level != 16)
    throw validation_error("structure level must be 4, 8, 12 or 16, got " +
                           std::to_string(level));
  if (bundle_level < 0 || bundle_level >= level)
    throw validation_error("bundle level " + std::to_string(bundle_level) +
                           " must lie in [0, " + std::to_string(level) + ")");
  if (betti.at(0) != 1)
    throw validation_error("b0 must be 1");
}

long StructureReport::total(const std::vector<LabeledDim> &v) {
  long t = 0;
  for (const auto &x : v)
    t += x.dim;
  return t;
}

namespace {

std::vector<std::pair<std::string, ClassStatus>>
consulted(const StructureQuery &q) {
  std::vector<std::pair<std::string, ClassStatus>> out;
  for (int i = 1; 4 * i <= q.level; ++i)
    if (4 * i > q.bundle_level)
      out.emplace_back("p" + std::to_string(i), q.status(i));
  return out;
}

void require_hypotheses(const StructureQuery &q, int top_class,
                     const std::string &what) {
  for (int i = 1; i <= top_class; ++i) {
    ClassStatus s = q.status(i);
    if (s != ClassStatus::zero)
      throw precondition_error(what + " needs p" + std::to_string(i) +
                               " = 0, but p" + std::to_string(i) + " is " +
                               to_string(s));
  }
  if (q.betti.at(1) != 0)
    throw precondition_error(what + " needs a simply connected base, but b1 = " +
                             std::to_string(q.betti.at(1)));
}

} // namespace

Tristate obstruction_survey(const StructureQuery &q) {
  q.validate();
  bool unknown = false;
  for (const auto &[name, s] : consulted(q)) {
    if (s == ClassStatus::nonzero)
      return Tristate::no;
    unknown = unknown || s == ClassStatus::unknown;
  }
  return unknown ? Tristate::unknown : Tristate::yes;
}

long structure_torsor(const StructureQuery &q) {
  Tristate t = obstruction_survey(q);
  if (t != Tristate::yes) {
    std::string which;
    for (const auto &[name, s] : consulted(q))
      if (s != ClassStatus::zero)
        which += (which.empty() ? "" : ", ") + name + " is " + to_string(s);
    throw precondition_error("level " + std::to_string(q.level) +
                             " structures need vanishing obstructions: " +
                             which);
  }
  return q.betti.at(q.level - 1);
}

StructureReport fivebrane_decomposition(const StructureQuery &q) {
  require_hypotheses(q, 2, "Fivebrane decomposition");
  const long b4 = q.betti.at(4), b7 = q.betti.at(7);
  StructureReport r;
  r.exists = Tristate::yes;
  r.obstructions = {{"p1", q.status(1)}, {"p2", q.status(2)}};
  r.torsor = b7;
  r.spin_bundle = {{"a7", 1}, {"a3⊗H4", b4}, {"H7", b7}};
  r.lifted_bundle = {{"a7", 1}, {"H7", b7}};
  r.kernel = {{"S·φ4", b4}};
  r.surjective = true;
  r.bijective = b4 == 0;
  return r;
}

StructureReport ninebrane_decomposition(const StructureQuery &q) {
  require_hypotheses(q, 3, "Ninebrane decomposition");
  const long b4 = q.betti.at(4), b8 = q.betti.at(8), b11 = q.betti.at(11);
  StructureReport r;
  r.exists = Tristate::yes;
  r.obstructions = {{"p1", q.status(1)}, {"p2", q.status(2)}, {"p3", q.status(3)}};
  r.torsor = b11;
  r.spin_bundle = {{"a11", 1}, {"a7⊗H4", b4}, {"a3⊗H8", b8}, {"H11", b11}};
  r.lifted_bundle = {{"a11", 1}, {"H11", b11}};
  r.kernel = {{"F·φ4", b4}, {"S·ψ8", b8}};
  r.surjective = true;
  r.bijective = b4 == 0 && b8 == 0;
  return r;
}

StructureReport structure_report(const StructureQuery &q) {
  StructureReport r;
  r.exists = obstruction_survey(q);
  r.obstructions = consulted(q);
  r.torsor = structure_torsor(q);
  if (q.level == 8 || q.level == 12) {
    StructureQuery spin = q;
    spin.bundle_level = 0;
    StructureReport d = q.level == 8 ? fivebrane_decomposition(spin)
                                     : ninebrane_decomposition(spin);
    r.spin_bundle = d.spin_bundle;
    r.lifted_bundle = d.lifted_bundle;
    r.kernel = d.kernel;
    r.surjective = d.surjective;
    r.bijective = d.bijective;
  }
  return r;
}

std::vector<MapFactor> mapping_space_decompose(int k, const GradedDims &betti,
                                               bool group_level) {
  if (k < 4 || k % 4 != 0)
    throw validation_error("mapping-space level must be a positive multiple "
                           "of 4, got " + std::to_string(k));
  const int w = group_level ? k - 2 : k - 1;
  std::vector<MapFactor> out;
  for (int i = 0; i <= w; ++i) {
    long d = betti.at(w - i);
    if (d > 0)
      out.push_back({i, w - i, d});
  }
  return out;
}

long pi0_of_mapping_space(int k, const GradedDims &betti) {
  for (const auto &f : mapping_space_decompose(k, betti, false))
    if (f.degree == 0)
      return f.dim;
  return 0;
}

std::string factor_str(const MapFactor &f) {
  std::string v = "Q" + (f.dim > 1 ? "^" + std::to_string(f.dim) : "");
  return "K(" + v + "," + std::to_string(f.degree) + ")";
}

} // namespace qtower

#include "qtower/commands.hpp"

#include "qtower/catalog.hpp"
#include "qtower/errors.hpp"
#include "qtower/gauge.hpp"
#include "qtower/serre.hpp"
#include "qtower/structures.hpp"
#include "qtower/sullivan.hpp"

#include <algorithm>
#include <cstdlib>

namespace qtower {

int default_max_degree() {
  if (const char *env = std::getenv("QTOWER_MAX_DEGREE")) {
    char *end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v <= 256)
      return static_cast<int>(v);
  }
  return kDefaultMaxDegree;
}

namespace {

int resolve(int max_degree) {
  return max_degree > 0 ? max_degree : default_max_degree();
}

Value exact_value(const EMProduct &e) {
  if (e.exact_through() == EMProduct::complete)
    return std::string("complete");
  return static_cast<long>(e.exact_through());
}

void factor_table(Report &r, const std::string &name, const EMProduct &e) {
  auto &t = r.table(name, {"degree", "multiplicity"});
  for (const auto &[d, m] : e.factors())
    t.rows.push_back({static_cast<long>(d), static_cast<long>(m)});
}

GroupSpec group_level_spec(const std::string &text) {
  GroupSpec g = GroupSpec::parse(text);
  if (g.classifying)
    throw groupspec_error("'" + text +
                          "' is a classifying space; gauge groups need a "
                          "group\n" + catalog_listing());
  return g;
}

void manifold_params(Report &r, const ManifoldFile &m) {
  r.param("manifold", m.name);
  r.param("dim", static_cast<long>(m.dimension()));
}

std::string dims_str(const std::vector<LabeledDim> &v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i)
    out += (i ? "," : "") + std::to_string(v[i].dim);
  return out + ")";
}

void summand_table(Report &r, const std::string &name,
                   const std::vector<LabeledDim> &v) {
  auto &t = r.table(name, {"summand", "dim"});
  for (const auto &x : v)
    t.rows.push_back({x.label, x.dim});
}

} // namespace

Report tower_type_report(const std::string &spec, int max_degree) {
  max_degree = resolve(max_degree);
  GroupSpec g = GroupSpec::parse(spec);
  EMProduct e = rational_type(g, max_degree);
  Report r;
  r.command = "tower type";
  r.summary = e.str();
  r.param("group", g.str());
  r.param("max_degree", static_cast<long>(max_degree));
  r.param("exact_through", exact_value(e));
  factor_table(r, "factors", e);
  return r;
}

Report tower_model_report(const std::string &spec, const std::string &kill,
                          int max_degree) {
  max_degree = resolve(max_degree);
  GroupSpec g = GroupSpec::parse(spec);
  if (!g.classifying)
    throw usage_error("tower model needs a classifying space, e.g. b" + spec);
  GeneratorSet base = bcohomology_generators(g, max_degree);
  RelativeModel rm;
  try {
    rm = relative_model_of_cover(base, kill);
  } catch (const std::invalid_argument &e) {
    throw usage_error(e.what());
  }
  std::vector<Generator> rest;
  for (const auto &x : base.items())
    if (x.name != kill)
      rest.push_back(x);
  GradedDims expect = poincare_dims(FreeGCA(rest), max_degree);
  GradedDims got = cohomology_dims(rm.total, max_degree);

  Report r;
  r.command = "tower model";
  r.summary = rm.total.str();
  r.param("group", g.str());
  r.param("kill", kill);
  r.param("max_degree", static_cast<long>(max_degree));
  r.param("d_squared_zero", d_squared_check(rm.total, max_degree + 1));
  r.param("minimal", rm.total.is_minimal());
  r.param("quasi_isomorphic", got == expect);
  auto &gt = r.table("generators", {"name", "degree", "differential", "part"});
  const auto &gens = rm.total.algebra().generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool in_base = std::find(rm.inclusion.begin(), rm.inclusion.end(), i) !=
                   rm.inclusion.end();
    gt.rows.push_back({gens[i].name, static_cast<long>(gens[i].degree),
                       rm.total.d_of(i).str(),
                       std::string(in_base ? "base" : "fiber")});
  }
  auto &ct = r.table("cohomology", {"degree", "total", "quotient"});
  for (int d = 0; d <= max_degree; ++d)
    if (got.at(d) || expect.at(d))
      ct.rows.push_back({static_cast<long>(d), got.at(d), expect.at(d)});
  return r;
}

Report tower_trivial_report(const std::string &spec) {
  GroupSpec g = GroupSpec::parse(spec);
  TrivialityVerdict v = is_rationally_trivial(g);
  Report r;
  r.command = "tower trivial";
  r.summary = std::string(v.trivial ? "trivial" : "nontrivial") + " (k=" +
              std::to_string(v.cover_level) + (v.trivial ? " >= " : " < ") +
              std::to_string(v.threshold) + ")";
  r.param("group", g.str());
  r.param("cover_level", static_cast<long>(v.cover_level));
  r.param("threshold", static_cast<long>(v.threshold));
  r.param("trivial", v.trivial);
  return r;
}

Report tower_split_report(int p, int q, int k, int max_degree) {
  max_degree = resolve(max_degree);
  if (p < 0 || q < 0 || k < 0)
    throw usage_error("tower split needs p, q, cover >= 0");
  IndefiniteSplit s = split_indefinite(p, q, k, max_degree);
  Report r;
  r.command = "tower split";
  r.summary = s.first.str() + " x " + s.second.str();
  r.param("p", static_cast<long>(p));
  r.param("q", static_cast<long>(q));
  r.param("cover", static_cast<long>(k));
  r.param("regime", std::string(s.product_regime ? "product" : "split"));
  r.param("product_threshold", static_cast<long>(s.product_threshold));
  auto &t = r.table("factors", {"factor", "rank", "type", "torsion"});
  t.rows.push_back({std::string("first"), static_cast<long>(p), s.first.str(),
                    s.first_trivial});
  t.rows.push_back({std::string("second"), static_cast<long>(q),
                    s.second.str(), s.second_trivial});
  return r;
}

Report structures_report(const ManifoldFile &m, int level, int bundle_level) {
  StructureQuery q = m.query(level, bundle_level);
  StructureReport s = structure_report(q);
  Report r;
  r.command = "structures report";
  manifold_params(r, m);
  r.param("level", static_cast<long>(level));
  r.param("bundle_level", static_cast<long>(bundle_level));
  r.param("exists", std::string(to_string(s.exists)));
  r.param("torsor_dim", *s.torsor);
  auto &ot = r.table("obstructions", {"class", "degree", "status"});
  for (const auto &[name, st] : s.obstructions)
    ot.rows.push_back({name, static_cast<long>(4 * std::stoi(name.substr(1))),
                       std::string(to_string(st))});
  if (!s.spin_bundle.empty()) {
    r.summary = "decomposition " + dims_str(s.spin_bundle) + ", kernel " +
                std::to_string(StructureReport::total(s.kernel));
    r.param("kernel_dim", StructureReport::total(s.kernel));
    r.param("surjective", s.surjective);
    r.param("bijective", s.bijective);
    summand_table(r, "spin_bundle", s.spin_bundle);
    summand_table(r, "lifted_bundle", s.lifted_bundle);
    summand_table(r, "kernel", s.kernel);
  } else {
    r.summary = "torsor dim " + std::to_string(*s.torsor);
  }
  return r;
}

Report maps_decompose_report(const ManifoldFile &m, int level,
                             bool group_level) {
  auto factors = mapping_space_decompose(level, m.betti, group_level);
  Report r;
  r.command = "maps decompose";
  manifold_params(r, m);
  r.param("level", static_cast<long>(level));
  r.param("variant", std::string(group_level ? "group" : "classifying"));
  r.param("window", static_cast<long>(group_level ? level - 2 : level - 1));
  r.param("pi_zero", pi0_of_mapping_space(level, m.betti));
  std::string summary;
  for (const auto &f : factors)
    summary += (summary.empty() ? "" : " x ") + factor_str(f);
  r.summary = summary.empty() ? "*" : summary;
  auto &t = r.table("factors", {"degree", "cohomology", "dim", "factor"});
  for (const auto &f : factors)
    t.rows.push_back({static_cast<long>(f.degree),
                      static_cast<long>(f.from_degree), f.dim, factor_str(f)});
  return r;
}

Report ss_run_report(const ManifoldFile &m, const std::string &fiber,
                     int max_total, bool verify_algebra) {
  max_total = resolve(max_total);
  m.presentation.check_associative(verify_algebra);
  FiberSpec fs = parse_fiber(fiber);
  if (fs.empty())
    throw usage_error("--fiber needs at least one generator");
  SpectralSequence ss = run_to_einfty(e2_page(m.presentation, fs, max_total));

  Report r;
  r.command = "ss run";
  manifold_params(r, m);
  std::string fnames;
  for (const auto &g : fs)
    fnames += (fnames.empty() ? "" : ",") + g.name + "->" +
              (g.target.empty() ? "0" : g.target);
  r.param("fiber", fnames);
  r.param("max_total", static_cast<long>(max_total));
  r.param("verified_algebra", verify_algebra);
  r.param("last_page", static_cast<long>(ss.last_page()));

  auto &e2 = r.table("e_two", {"s", "t", "dim"});
  for (int n = 0; n <= max_total; ++n)
    for (auto [s, t] : ss.support(2, n))
      e2.rows.push_back({static_cast<long>(s), static_cast<long>(t), ss.e2(s, t)});
  auto &dt = r.table("differentials", {"page", "s", "t", "rank"});
  for (int rr = 2; rr < ss.last_page(); ++rr)
    for (int n = 0; n <= max_total; ++n)
      for (int s = 0; s <= n; ++s)
        if (const QMatrix *d = ss.differential(rr, s, n - s))
          dt.rows.push_back({static_cast<long>(rr), static_cast<long>(s),
                             static_cast<long>(n - s),
                             static_cast<long>(rank(*d))});
  auto &ei = r.table("e_infinity", {"s", "t", "dim", "basis"});
  auto &hc = r.table("cohomology", {"n", "dim", "summands"});
  for (int n = 0; n <= max_total; ++n) {
    auto sums = ss.total_space_cohomology(n);
    std::string desc;
    for (const auto &x : sums) {
      std::string labels;
      for (const auto &l : x.labels)
        labels += (labels.empty() ? "" : " ") + l;
      ei.rows.push_back({static_cast<long>(x.s), static_cast<long>(x.t), x.dim,
                         labels});
      desc += (desc.empty() ? "" : " + ") + std::string("E(") +
              std::to_string(x.s) + "," + std::to_string(x.t) + ")";
    }
    if (ss.total_dim(n) > 0)
      hc.rows.push_back({static_cast<long>(n), ss.total_dim(n), desc});
  }
  return r;
}

Report gauge_pi_report(const std::string &group, const ManifoldFile &m,
                       int q_lo, int q_hi, bool based) {
  if (q_lo < 0 || q_hi < q_lo)
    throw usage_error("bad --q range");
  GroupSpec g = group_level_spec(group);
  EMProduct e = rational_type(g, q_hi + std::max(m.betti.top_degree(), 0) + 1);
  GaugeQuery gq{e, m.betti, based, q_lo, q_hi};
  auto pis = gauge_pi(gq);
  Report r;
  r.command = "gauge pi";
  r.param("group", g.str());
  r.param("type", e.str());
  manifold_params(r, m);
  r.param("based", based);
  auto &t = r.table("homotopy", {"q", "dim"});
  for (const auto &[q, d] : pis)
    t.rows.push_back({static_cast<long>(q), d});
  return r;
}

Report gauge_connectivity_report(const std::string &group,
                                 const ManifoldFile &m, bool based,
                                 int max_degree) {
  max_degree = resolve(max_degree);
  GroupSpec g = group_level_spec(group);
  EMProduct e = rational_type(g, max_degree);
  Connectivity c = connectivity(e, m.betti, based, -1);
  Report r;
  r.command = "gauge connectivity";
  r.summary = "connectivity " + std::string(c.saturated ? ">= " : "= ") +
              std::to_string(c.value);
  r.param("group", g.str());
  r.param("type", e.str());
  manifold_params(r, m);
  r.param("based", based);
  r.param("max_degree", static_cast<long>(max_degree));
  r.param("connectivity", static_cast<long>(c.value));
  r.param("lower_bound_only", c.saturated);
  r.param("window", static_cast<long>(c.window));
  // The group is (k-1)-connected when k is its first surviving degree.
  const long gk = e.empty() ? static_cast<long>(c.window)
                            : static_cast<long>(e.factors().begin()->first - 1);
  r.param("group_connectivity", gk);
  r.param("guaranteed", gk - static_cast<long>(m.dimension()));
  return r;
}

Report gauge_periodicity_report(const std::string &group,
                                const ManifoldFile &m, int q_lo, int q_hi,
                                bool based) {
  if (q_lo < 0 || q_hi < q_lo)
    throw usage_error("bad --q range");
  GroupSpec g = group_level_spec(group);
  const int top = std::max(m.betti.top_degree(), 0);
  EMProduct e = rational_type(g, q_hi + top + 1);
  int k = std::max(g.cover_level, family_cover_level(g.family));
  GaugeQuery gq{e, m.betti, based, q_lo, q_hi};
  bool ok = periodicity_check(gq, k);
  Report r;
  r.command = "gauge periodicity";
  r.summary = ok ? "periodic" : "not periodic";
  r.param("group", g.str());
  r.param("type", e.str());
  manifold_params(r, m);
  r.param("based", based);
  r.param("from", static_cast<long>(std::max(k, q_lo)));
  r.param("to", static_cast<long>(q_hi));
  r.param("periodic", ok);
  auto &t = r.table("homotopy", {"q", "dim", "dim_shifted"});
  for (int q = std::max(k, q_lo); q + 4 <= q_hi; ++q)
    t.rows.push_back({static_cast<long>(q), gauge_pi(e, m.betti, based, q),
                      gauge_pi(e, m.betti, based, q + 4)});
  return r;
}

} // namespace qtower

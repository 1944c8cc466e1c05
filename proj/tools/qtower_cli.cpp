#include "qtower/qtower.h"

#include <CLI11.hpp>

#include <cstdio>
#include <functional>
#include <string>

namespace {

struct Options {
  bool json = false;
  int max_degree = 0;
  std::string spec, kill, manifold, fiber, group, q_range;
  int p = -1, q = -1, cover = 0, level = 0, bundle_level = 0, max_total = 0;
  bool group_level = false, verify_algebra = false, based = false;
};

bool parse_range(const std::string &s, int &lo, int &hi) {
  try {
    auto dots = s.find("..");
    std::size_t used = 0;
    if (dots == std::string::npos) {
      lo = hi = std::stoi(s, &used);
      return used == s.size() && lo >= 0;
    }
    lo = std::stoi(s.substr(0, dots), &used);
    if (used != dots)
      return false;
    std::string rest = s.substr(dots + 2);
    hi = std::stoi(rest, &used);
    return used == rest.size() && lo >= 0 && hi >= lo;
  } catch (const std::exception &) {
    return false;
  }
}

int finish(qt_status st, qt_report *r, bool json) {
  if (st != QT_OK) {
    std::fprintf(stderr, "error: %s\n", qt_last_error());
    return static_cast<int>(st);
  }
  std::fputs(json ? qt_report_json(r) : qt_report_text(r), stdout);
  qt_report_free(r);
  return 0;
}

int with_manifold(const Options &o,
                  const std::function<qt_status(qt_manifold *, qt_report **)> &f) {
  qt_manifold *m = nullptr;
  qt_status st = qt_manifold_load(o.manifold.c_str(), &m);
  if (st != QT_OK)
    return finish(st, nullptr, o.json);
  qt_report *r = nullptr;
  st = f(m, &r);
  qt_manifold_free(m);
  return finish(st, r, o.json);
}

int usage(const std::string &msg) {
  std::fprintf(stderr, "error: %s\n", msg.c_str());
  return QT_ERR_USAGE;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Rational homotopy of Whitehead towers, tangential structures "
               "and gauge groups"};
  app.fallthrough();
  app.require_subcommand(1);
  Options o;
  std::function<int()> action;
  app.add_flag("--json", o.json, "Emit machine-readable JSON");

  auto *tower = app.add_subcommand("tower", "Catalog of groups and covers");
  tower->require_subcommand(1);
  auto *ttype = tower->add_subcommand("type", "Rational type of a group");
  ttype->add_option("group", o.spec, "Group spec, e.g. spin:9<12>")->required();
  ttype->add_option("--max-degree", o.max_degree, "Degree bound");
  ttype->callback([&] {
    action = [&] {
      qt_report *r = nullptr;
      qt_status st = qt_tower_type(o.spec.c_str(), o.max_degree, &r);
      return finish(st, r, o.json);
    };
  });

  auto *tmodel = tower->add_subcommand("model", "Relative minimal model of a cover");
  tmodel->add_option("group", o.spec, "Classifying space, e.g. bstring:7")->required();
  tmodel->add_option("--kill", o.kill, "Generator to kill")->required();
  tmodel->add_option("--max-degree", o.max_degree, "Degree bound");
  tmodel->callback([&] {
    action = [&] {
      qt_report *r = nullptr;
      qt_status st = qt_tower_model(o.spec.c_str(), o.kill.c_str(), o.max_degree, &r);
      return finish(st, r, o.json);
    };
  });

  auto *ttriv = tower->add_subcommand("trivial", "Triviality threshold check");
  ttriv->add_option("group", o.spec, "Group spec with a rank")->required();
  ttriv->callback([&] {
    action = [&] {
      qt_report *r = nullptr;
      qt_status st = qt_tower_trivial(o.spec.c_str(), &r);
      return finish(st, r, o.json);
    };
  });

  auto *tsplit = tower->add_subcommand("split", "Covers of Spin(p,q)");
  tsplit->add_option("--p", o.p, "p")->required();
  tsplit->add_option("--q", o.q, "q")->required();
  tsplit->add_option("--cover", o.cover, "Cover level k")->required();
  tsplit->add_option("--max-degree", o.max_degree, "Degree bound");
  tsplit->callback([&] {
    action = [&] {
      qt_report *r = nullptr;
      qt_status st = qt_tower_split(o.p, o.q, o.cover, o.max_degree, &r);
      return finish(st, r, o.json);
    };
  });

  auto *structures = app.add_subcommand("structures", "Structures on bundles");
  structures->require_subcommand(1);
  auto *srep = structures->add_subcommand("report", "Obstructions, torsor, decomposition");
  srep->add_option("--level", o.level, "Target level 4, 8, 12 or 16")->required();
  srep->add_option("--manifold", o.manifold, "Manifold file")->required();
  srep->add_option("--bundle-level", o.bundle_level, "Current cover level");
  srep->callback([&] {
    action = [&] {
      return with_manifold(o, [&](qt_manifold *m, qt_report **r) {
        return qt_structures_report(m, o.level, o.bundle_level, r);
      });
    };
  });

  auto *maps = app.add_subcommand("maps", "Mapping spaces of lifts");
  maps->require_subcommand(1);
  auto *mdec = maps->add_subcommand("decompose", "EM decomposition of the lift space");
  mdec->add_option("--level", o.level, "Level k")->required();
  mdec->add_option("--manifold", o.manifold, "Manifold file")->required();
  mdec->add_flag("--group-level", o.group_level, "Group-level variant");
  mdec->callback([&] {
    action = [&] {
      return with_manifold(o, [&](qt_manifold *m, qt_report **r) {
        return qt_maps_decompose(m, o.level, o.group_level ? 1 : 0, r);
      });
    };
  });

  auto *ss = app.add_subcommand("ss", "Serre spectral sequence");
  ss->require_subcommand(1);
  auto *srun = ss->add_subcommand("run", "Run to E_infinity");
  srun->add_option("--manifold", o.manifold, "Manifold file")->required();
  srun->add_option("--fiber", o.fiber, "Fiber generators, e.g. a3,a7")->required();
  srun->add_option("--max-total", o.max_total, "Total degree bound");
  srun->add_flag("--verify-algebra", o.verify_algebra, "Check associativity fully");
  srun->callback([&] {
    action = [&] {
      return with_manifold(o, [&](qt_manifold *m, qt_report **r) {
        return qt_ss_run(m, o.fiber.c_str(), o.max_total, o.verify_algebra ? 1 : 0, r);
      });
    };
  });

  auto *gauge = app.add_subcommand("gauge", "Rational homotopy of gauge groups");
  gauge->require_subcommand(1);
  auto add_gauge_common = [&](CLI::App *c) {
    c->add_option("--group", o.group, "Structure group spec")->required();
    c->add_option("--manifold", o.manifold, "Manifold file")->required();
    c->add_flag("--based", o.based, "Based gauge group");
  };
  auto *gpi = gauge->add_subcommand("pi", "Homotopy group dimensions");
  add_gauge_common(gpi);
  gpi->add_option("--q", o.q_range, "Degree range A..B")->required();
  gpi->callback([&] {
    action = [&] {
      int lo = 0, hi = 0;
      if (!parse_range(o.q_range, lo, hi))
        return usage("--q expects A..B");
      return with_manifold(o, [&](qt_manifold *m, qt_report **r) {
        return qt_gauge_pi(o.group.c_str(), m, lo, hi, o.based ? 1 : 0, r);
      });
    };
  });
  auto *gconn = gauge->add_subcommand("connectivity", "Connectivity of the gauge group");
  add_gauge_common(gconn);
  gconn->add_option("--max-degree", o.max_degree, "Degree bound for stable groups");
  gconn->callback([&] {
    action = [&] {
      return with_manifold(o, [&](qt_manifold *m, qt_report **r) {
        return qt_gauge_connectivity(o.group.c_str(), m, o.based ? 1 : 0,
                                     o.max_degree, r);
      });
    };
  });
  auto *gper = gauge->add_subcommand("periodicity", "Check pi_q = pi_{q+4}");
  add_gauge_common(gper);
  gper->add_option("--q", o.q_range, "Degree range A..B");
  gper->callback([&] {
    action = [&] {
      int lo = 0, hi = qt_default_max_degree();
      if (!o.q_range.empty() && !parse_range(o.q_range, lo, hi))
        return usage("--q expects A..B");
      return with_manifold(o, [&](qt_manifold *m, qt_report **r) {
        return qt_gauge_periodicity(o.group.c_str(), m, lo, hi, o.based ? 1 : 0, r);
      });
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? 0 : QT_ERR_USAGE;
  }
  return action ? action() : usage("no command given");
}

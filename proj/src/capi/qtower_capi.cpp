#include "qtower/qtower.h"

#include "qtower/commands.hpp"
#include "qtower/errors.hpp"

#include <exception>
#include <new>
#include <string>

struct qt_manifold {
  qtower::ManifoldFile file;
};

struct qt_report {
  qtower::Report report;
  std::string text;
  std::string json;
};

namespace {

thread_local std::string last_error;

template <class F> qt_status guarded(F &&f) {
  try {
    last_error.clear();
    f();
    return QT_OK;
  } catch (const qtower::Error &e) {
    last_error = e.what();
    return static_cast<qt_status>(e.kind());
  } catch (const std::bad_alloc &) {
    last_error = "out of memory";
  } catch (const std::exception &e) {
    last_error = std::string("internal error: ") + e.what();
  } catch (...) {
    last_error = "internal error";
  }
  return QT_ERR_INTERNAL;
}

qt_status emit(qt_report **out, qtower::Report r) {
  auto *h = new qt_report{std::move(r), {}, {}};
  h->text = h->report.text();
  h->json = h->report.json();
  *out = h;
  return QT_OK;
}

bool check_out(const void *p) {
  if (p)
    return true;
  last_error = "null argument";
  return false;
}

} // namespace

extern "C" {

const char *qt_version(void) { return "0.1.0"; }

const char *qt_last_error(void) { return last_error.c_str(); }

int qt_default_max_degree(void) { return qtower::default_max_degree(); }

qt_status qt_manifold_load(const char *path, qt_manifold **out) {
  if (!check_out(path) || !check_out(out))
    return QT_ERR_USAGE;
  return guarded([&] { *out = new qt_manifold{qtower::parse_manifold(path)}; });
}

qt_status qt_manifold_parse(const char *text, const char *origin,
                            qt_manifold **out) {
  if (!check_out(text) || !check_out(out))
    return QT_ERR_USAGE;
  return guarded([&] {
    *out = new qt_manifold{
        qtower::parse_manifold_text(text, origin ? origin : "<string>")};
  });
}

void qt_manifold_free(qt_manifold *m) { delete m; }

qt_status qt_manifold_betti(const qt_manifold *m, int degree, long *out) {
  if (!check_out(m) || !check_out(out))
    return QT_ERR_USAGE;
  *out = m->file.betti.at(degree);
  return QT_OK;
}

qt_status qt_manifold_dim(const qt_manifold *m, int *out) {
  if (!check_out(m) || !check_out(out))
    return QT_ERR_USAGE;
  *out = m->file.dimension();
  return QT_OK;
}

qt_status qt_tower_type(const char *spec, int max_degree, qt_report **out) {
  if (!check_out(spec) || !check_out(out))
    return QT_ERR_USAGE;
  return guarded([&] { emit(out, qtower::tower_type_report(spec, max_degree)); });
}

qt_status qt_tower_model(const char *spec, const char *kill, int max_degree,
                         qt_report **out) {
  if (!check_out(spec) || !check_out(kill) || !check_out(out))
    return QT_ERR_USAGE;
  return guarded(
      [&] { emit(out, qtower::tower_model_report(spec, kill, max_degree)); });
}

qt_status qt_tower_trivial(const char *spec, qt_report **out) {
  if (!check_out(spec) || !check_out(out))
    return QT_ERR_USAGE;
  return guarded([&] { emit(out, qtower::tower_trivial_report(spec)); });
}

qt_status qt_tower_split(int p, int q, int cover, int max_degree,
                         qt_report **out) {
  if (!check_out(out))
    return QT_ERR_USAGE;
  return guarded(
      [&] { emit(out, qtower::tower_split_report(p, q, cover, max_degree)); });
}

qt_status qt_structures_report(const qt_manifold *m, int level,
                               int bundle_level, qt_report **out) {
  if (!check_out(m) || !check_out(out))
    return QT_ERR_USAGE;
  return guarded([&] {
    emit(out, qtower::structures_report(m->file, level, bundle_level));
  });
}

qt_status qt_maps_decompose(const qt_manifold *m, int level, int group_level,
                            qt_report **out) {
  if (!check_out(m) || !check_out(out))
    return QT_ERR_USAGE;
  return guarded([&] {
    emit(out, qtower::maps_decompose_report(m->file, level, group_level != 0));
  });
}

qt_status qt_ss_run(const qt_manifold *m, const char *fiber, int max_total,
                    int verify_algebra, qt_report **out) {
  if (!check_out(m) || !check_out(fiber) || !check_out(out))
    return QT_ERR_USAGE;
  return guarded([&] {
    emit(out, qtower::ss_run_report(m->file, fiber, max_total,
                                    verify_algebra != 0));
  });
}

qt_status qt_gauge_pi(const char *group, const qt_manifold *m, int q_lo,
                      int q_hi, int based, qt_report **out) {
  if (!check_out(group) || !check_out(m) || !check_out(out))
    return QT_ERR_USAGE;
  return guarded([&] {
    emit(out, qtower::gauge_pi_report(group, m->file, q_lo, q_hi, based != 0));
  });
}

qt_status qt_gauge_connectivity(const char *group, const qt_manifold *m,
                                int based, int max_degree, qt_report **out) {
  if (!check_out(group) || !check_out(m) || !check_out(out))
    return QT_ERR_USAGE;
  return guarded([&] {
    emit(out, qtower::gauge_connectivity_report(group, m->file, based != 0,
                                                max_degree));
  });
}

qt_status qt_gauge_periodicity(const char *group, const qt_manifold *m,
                               int q_lo, int q_hi, int based, qt_report **out) {
  if (!check_out(group) || !check_out(m) || !check_out(out))
    return QT_ERR_USAGE;
  return guarded([&] {
    emit(out, qtower::gauge_periodicity_report(group, m->file, q_lo, q_hi,
                                               based != 0));
  });
}

const char *qt_report_text(const qt_report *r) { return r ? r->text.c_str() : ""; }

const char *qt_report_json(const qt_report *r) { return r ? r->json.c_str() : ""; }

const char *qt_report_summary(const qt_report *r) {
  return r ? r->report.summary.c_str() : "";
}

void qt_report_free(qt_report *r) { delete r; }

} // extern "C"

#ifndef QTOWER_QTOWER_H
#define QTOWER_QTOWER_H

/* C interface to the qtower library. Every call returns a qt_status; on
 * failure qt_last_error() describes the problem for the calling thread.
 * Reports and manifolds are opaque and must be released with their _free
 * function. Strings returned from a report live as long as the report. */

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define QT_API __declspec(dllexport)
#else
#define QT_API __attribute__((visibility("default")))
#endif

typedef enum qt_status {
  QT_OK = 0,
  QT_ERR_USAGE = 1,
  QT_ERR_PARSE = 2,
  QT_ERR_VALIDATION = 3,
  QT_ERR_GROUPSPEC = 4,
  QT_ERR_PRECONDITION = 5,
  QT_ERR_INTERNAL = 70
} qt_status;

typedef struct qt_manifold qt_manifold;
typedef struct qt_report qt_report;

QT_API const char *qt_version(void);
QT_API const char *qt_last_error(void);
/* Default degree bound: QTOWER_MAX_DEGREE or 24. Pass max_degree <= 0 to
 * any call below to use it. */
QT_API int qt_default_max_degree(void);

QT_API qt_status qt_manifold_load(const char *path, qt_manifold **out);
QT_API qt_status qt_manifold_parse(const char *text, const char *origin,
                                   qt_manifold **out);
QT_API void qt_manifold_free(qt_manifold *m);
QT_API qt_status qt_manifold_betti(const qt_manifold *m, int degree,
                                   long *out);
QT_API qt_status qt_manifold_dim(const qt_manifold *m, int *out);

QT_API qt_status qt_tower_type(const char *spec, int max_degree,
                               qt_report **out);
QT_API qt_status qt_tower_model(const char *spec, const char *kill,
                                int max_degree, qt_report **out);
QT_API qt_status qt_tower_trivial(const char *spec, qt_report **out);
QT_API qt_status qt_tower_split(int p, int q, int cover, int max_degree,
                                qt_report **out);

QT_API qt_status qt_structures_report(const qt_manifold *m, int level,
                                      int bundle_level, qt_report **out);
QT_API qt_status qt_maps_decompose(const qt_manifold *m, int level,
                                   int group_level, qt_report **out);
QT_API qt_status qt_ss_run(const qt_manifold *m, const char *fiber,
                           int max_total, int verify_algebra,
                           qt_report **out);

QT_API qt_status qt_gauge_pi(const char *group, const qt_manifold *m,
                             int q_lo, int q_hi, int based, qt_report **out);
QT_API qt_status qt_gauge_connectivity(const char *group,
                                       const qt_manifold *m, int based,
                                       int max_degree, qt_report **out);
QT_API qt_status qt_gauge_periodicity(const char *group,
                                      const qt_manifold *m, int q_lo,
                                      int q_hi, int based, qt_report **out);

QT_API const char *qt_report_text(const qt_report *r);
QT_API const char *qt_report_json(const qt_report *r);
/* First line of the text rendering (e.g. the EM product for tower type). */
QT_API const char *qt_report_summary(const qt_report *r);
QT_API void qt_report_free(qt_report *r);

#ifdef __cplusplus
}
#endif

#endif

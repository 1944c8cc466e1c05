#pragma once

#include "qtower/manifold.hpp"
#include "qtower/report.hpp"

#include <string>

namespace qtower {

constexpr int kDefaultMaxDegree = 24;

/// QTOWER_MAX_DEGREE if set to a positive integer, else 24.
int default_max_degree();

Report tower_type_report(const std::string &spec, int max_degree);
Report tower_model_report(const std::string &spec, const std::string &kill,
                          int max_degree);
Report tower_trivial_report(const std::string &spec);
Report tower_split_report(int p, int q, int k, int max_degree);

Report structures_report(const ManifoldFile &m, int level, int bundle_level);
Report maps_decompose_report(const ManifoldFile &m, int level, bool group_level);
Report ss_run_report(const ManifoldFile &m, const std::string &fiber,
                     int max_total, bool verify_algebra);

Report gauge_pi_report(const std::string &group, const ManifoldFile &m,
                       int q_lo, int q_hi, bool based);
Report gauge_connectivity_report(const std::string &group,
                                 const ManifoldFile &m, bool based,
                                 int max_degree);
Report gauge_periodicity_report(const std::string &group,
                                const ManifoldFile &m, int q_lo, int q_hi,
                                bool based);

} // namespace qtower

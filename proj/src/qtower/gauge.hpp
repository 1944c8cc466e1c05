#pragma once

#include "qtower/catalog.hpp"
#include "qtower/exactalg.hpp"
#include "qtower/gca.hpp"

#include <map>

namespace qtower {

struct GaugeQuery {
  EMProduct group;
  GradedDims base;
  bool based = false;
  int q_lo = 0;
  int q_hi = 0;
};

/// dim pi_q = sum_r b_r(X) mult_G(r + q), r >= 1 for the based group.
/// Throws a precondition Error when r + q passes the group's exact window.
long gauge_pi(const EMProduct &group, const GradedDims &base, bool based, int q);

std::map<int, long> gauge_pi(const GaugeQuery &q);

/// pi_n of the gauge group over S^m: mult(n + m) + mult(n). Same window rule
/// as gauge_pi.
long sphere_case(int m, const EMProduct &group, int n);

struct Connectivity {
  /// Largest c with pi_q = 0 for all q <= c (-1 if pi_0 != 0).
  int value = -1;
  /// True when every degree in the checkable window vanished, so `value`
  /// is only a lower bound.
  bool saturated = false;
  int window = 0;
};

/// `window` caps the search; by default it is what the group's exact range
/// allows over this base.
Connectivity connectivity(const EMProduct &group, const GradedDims &base,
                          bool based, int window = -1);

/// pi_q == pi_{q+4} for q in [max(k, q_lo), q_hi - 4].
bool periodicity_check(const GaugeQuery &q, int k);

/// Gauge group of the universal bundle: the Betti profile is the Poincare
/// series of H*(BG) from `bgens`, summed over r + q <= window top.
long universal_bundle_pi(const GeneratorSet &bgens, const EMProduct &group,
                         int q);

} // namespace qtower

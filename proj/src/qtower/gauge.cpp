#include "qtower/gauge.hpp"

#include "qtower/errors.hpp"

#include <algorithm>

namespace qtower {

long gauge_pi(const EMProduct &group, const GradedDims &base, bool based,
              int q) {
  if (q < 0)
    throw std::invalid_argument("gauge_pi: negative degree");
  long total = 0;
  for (const auto &[r, b] : base.entries()) {
    if (based && r == 0)
      continue;
    if (r + q > group.exact_through())
      throw precondition_error(
          "pi_" + std::to_string(q) + " needs pi_" + std::to_string(r + q) +
          " of the group, which is only known through degree " +
          std::to_string(group.exact_through()));
    total += b * group.multiplicity(r + q);
  }
  return total;
}

std::map<int, long> gauge_pi(const GaugeQuery &q) {
  if (q.q_lo < 0 || q.q_hi < q.q_lo)
    throw usage_error("bad degree range " + std::to_string(q.q_lo) + ".." +
                      std::to_string(q.q_hi));
  std::map<int, long> out;
  for (int d = q.q_lo; d <= q.q_hi; ++d)
    out[d] = gauge_pi(q.group, q.base, q.based, d);
  return out;
}

long sphere_case(int m, const EMProduct &group, int n) {
  if (m < 1)
    throw std::invalid_argument("sphere_case: m must be >= 1");
  if (n + m > group.exact_through())
    throw precondition_error("pi_" + std::to_string(n) + " over S^" +
                             std::to_string(m) + " needs pi_" +
                             std::to_string(n + m) +
                             " of the group, which is only known through degree " +
                             std::to_string(group.exact_through()));
  return group.multiplicity(n + m) + group.multiplicity(n);
}

Connectivity connectivity(const EMProduct &group, const GradedDims &base,
                          bool based, int window) {
  Connectivity c;
  int top = 0;
  for (const auto &[r, b] : base.entries())
    if (!(based && r == 0))
      top = std::max(top, r);
  if (window < 0) {
    if (group.exact_through() == EMProduct::complete)
      window = std::max(group.top_degree(), 0);
    else
      window = group.exact_through() - top;
  }
  c.window = window;
  for (int q = 0; q <= window; ++q) {
    if (gauge_pi(group, base, based, q) != 0) {
      c.value = q - 1;
      return c;
    }
  }
  c.value = window;
  c.saturated = true;
  return c;
}

bool periodicity_check(const GaugeQuery &q, int k) {
  for (int d = std::max(k, q.q_lo); d + 4 <= q.q_hi; ++d)
    if (gauge_pi(q.group, q.base, q.based, d) !=
        gauge_pi(q.group, q.base, q.based, d + 4))
      return false;
  return true;
}

long universal_bundle_pi(const GeneratorSet &bgens, const EMProduct &group,
                         int q) {
  const int top = group.exact_through() == EMProduct::complete
                      ? group.top_degree()
                      : group.exact_through();
  if (q > top)
    throw precondition_error("pi_" + std::to_string(q) +
                             " lies past the group's window " +
                             std::to_string(top));
  GradedDims betti = poincare_dims(FreeGCA(bgens), std::max(top - q, 0));
  long total = 0;
  for (const auto &[r, b] : betti.entries())
    total += b * group.multiplicity(r + q);
  return total;
}

} // namespace qtower

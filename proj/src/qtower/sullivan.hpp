#pragma once

#include "qtower/catalog.hpp"
#include "qtower/gca.hpp"

#include <map>
#include <string>
#include <vector>

namespace qtower {

/// Free graded-commutative algebra with a differential given on generators.
class CDGA {
public:
  CDGA() = default;
  /// Generators missing from `d` get d = 0. Throws std::invalid_argument if
  /// some d(g) is not homogeneous of degree |g| + 1.
  CDGA(FreeGCA algebra, const std::map<std::string, Polynomial> &d);

  /// Same, without the degree check. Only for building deliberately broken
  /// models in regression tests.
  static CDGA unchecked(FreeGCA algebra,
                        const std::map<std::string, Polynomial> &d);

  const FreeGCA &algebra() const { return alg_; }
  const Polynomial &d_of(std::size_t gen) const { return d_[gen]; }
  const Polynomial &d_of(const std::string &name) const;

  /// True when every d(g) lies in the decomposables (no linear terms).
  bool is_minimal() const;

  std::string str() const;

private:
  FreeGCA alg_;
  std::vector<Polynomial> d_;
};

/// Extends the differential to p by the left Leibniz rule
/// d(xy) = d(x) y + (-1)^{|x|} x d(y).
Polynomial differential_extend(const CDGA &c, const Polynomial &p);

/// d(d(g)) == 0 for every generator g with |g| <= max_degree.
bool d_squared_check(const CDGA &c, int max_degree);

/// Dimensions of H^n for n <= max_degree via exact ranks of d on monomial
/// bases. Throws a precondition Error when d^2 != 0 below max_degree + 1.
GradedDims cohomology_dims(const CDGA &c, int max_degree);

/// Matrix of d : A^n -> A^{n+1} in the monomial bases of basis_in_degree.
QMatrix differential_matrix(const CDGA &c, int n);

struct RelativeModel {
  CDGA base;
  CDGA total;
  CDGA fiber;
  /// Position in total of base generator i.
  std::vector<std::size_t> inclusion;
  /// Position in total of fiber generator i.
  std::vector<std::size_t> projection;
};

/// Kills the even generator `killed` of (Lambda base_gens, 0) by adjoining
/// sy<|killed|> in degree |killed| - 1 with d(sy) = killed.
RelativeModel relative_model_of_cover(const GeneratorSet &base_gens,
                                      const std::string &killed);

/// (Lambda(y_m), 0) -> (Lambda(y_m, sy_m), d sy_m = y_m) -> (Lambda(sy_m), 0)
/// for every factor K(Q, m).
RelativeModel pathspace_model(const EMProduct &fiber_degrees);

/// Relative model assembled from a total CDGA and the names of its base
/// generators; the fiber gets the quotient differential.
RelativeModel split_relative(const CDGA &total,
                             const std::vector<std::string> &base_names);

/// Q[p_1..p_n] (x) Lambda(a_3..a_{4n-1}) with d(a_{4i-1}) = p_i.
CDGA koszul_cdga(int n);

} // namespace qtower

#pragma once

#include "qtower/gca.hpp"

#include <climits>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qtower {

/// A rational homotopy type recorded as a product of K(Q, degree) factors.
class EMProduct {
public:
  static constexpr int complete = INT_MAX;

  EMProduct() = default;
  EMProduct(std::initializer_list<int> degrees);

  void add(int degree, int multiplicity = 1);
  int multiplicity(int degree) const;
  const std::map<int, int> &factors() const { return factors_; }
  bool empty() const { return factors_.empty(); }
  /// Degrees as a sorted multiset.
  std::vector<int> degrees() const;
  int top_degree() const { return empty() ? -1 : factors_.rbegin()->first; }

  /// Degree through which the factor list is known to be exact; `complete`
  /// when nothing was truncated.
  int exact_through() const { return exact_through_; }
  void set_exact_through(int d) { exact_through_ = d; }

  /// "K(Q,3) x K(Q,7)^2 x K(Q,11)"; "*" for the empty product.
  std::string str() const;

  friend bool operator==(const EMProduct &a, const EMProduct &b) {
    return a.factors_ == b.factors_;
  }

private:
  std::map<int, int> factors_;
  int exact_through_ = complete;
};

/// Shift every factor up by one degree (the classifying-space functor).
EMProduct classifying_space(const EMProduct &e);
/// Drop factors of degree < k.
EMProduct cover(const EMProduct &e, int k);

enum class Family {
  SO,
  Spin,
  SpinPQ,
  StableO,
  String,
  Fivebrane,
  TwoSpin,
  Ninebrane,
  E8,
};

/// A group (or, with `classifying`, its classifying space) from the catalog.
///
/// Text form: `[b]family[:n | :p,q][<k>]`, e.g. `spin:9<12>`, `so:6`,
/// `spinpq:7,9<8>`, `stableO<8>`, `fivebrane:9`, `bstring`.
struct GroupSpec {
  Family family = Family::Spin;
  std::optional<int> rank;
  int p = 0;
  int q = 0;
  /// k of the (k-1)-connected cover <k> at group level; 0 for none.
  int cover_level = 0;
  bool classifying = false;

  /// Throws a groupspec Error (with the catalog listing) on bad input.
  static GroupSpec parse(std::string_view text);
  std::string str() const;
  bool has_definite_rank() const;

  friend bool operator==(const GroupSpec &, const GroupSpec &) = default;
};

std::string catalog_listing();

/// Default cover level carried by a named family (String 4, Fivebrane 8,
/// TwoSpin 11, Ninebrane 12; 0 otherwise).
int family_cover_level(Family f);

/// Rational homotopy type of Spin(n) (equivalently SO(n)), before covers.
EMProduct spin_type(int n);

EMProduct rational_type(const GroupSpec &g, int max_degree);

/// Cover level from which Spin(n)<k> is rationally trivial.
int triviality_threshold(int n);

struct TrivialityVerdict {
  bool trivial = false;
  int cover_level = 0;
  int threshold = 0;
};

/// Throws a precondition Error for families without a definite rank.
TrivialityVerdict is_rationally_trivial(const GroupSpec &g);

struct IndefiniteSplit {
  EMProduct first;
  EMProduct second;
  bool first_trivial = false;
  bool second_trivial = false;
  /// k < 4 floor((min(p,q)-1)/2): both factors survive.
  bool product_regime = false;
  int product_threshold = 0;
};

IndefiniteSplit split_indefinite(int p, int q, int k, int max_degree);

/// Fiber of BO<level> -> BO<level-4> in the stable tower (level >= 4, a
/// multiple of 4): K(Q, level-5) for level >= 8, empty at level 4.
EMProduct whitehead_fiber(int level);

/// Generators of H*(BG; Q) for the classifying space of g, one per factor,
/// named p<i> / e (uncovered) or x<deg> / chi<deg> (covered).
GeneratorSet bcohomology_generators(const GroupSpec &g, int max_degree);

} // namespace qtower

#pragma once

#include "qtower/exactalg.hpp"

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace qtower {

/// Finitely presented graded-commutative algebra standing in for H*(M; Q),
/// truncated above max_degree.
class BasePresentation {
public:
  struct ClassEntry {
    int degree = 0;
    RatVector coords; // length = dim(degree); all zero for a vanishing class
  };

  BasePresentation() : BasePresentation(0) {}
  explicit BasePresentation(int max_degree);

  /// Named basis with unknown products, built from Betti numbers
  /// (h<deg>_<j>; just h<deg> when the degree is one-dimensional).
  static BasePresentation from_betti(const GradedDims &betti, int max_degree);

  int max_degree() const { return max_degree_; }
  void set_basis(int degree, std::vector<std::string> names);
  const std::vector<std::string> &basis(int degree) const;
  std::size_t dim(int degree) const { return basis(degree).size(); }
  GradedDims betti() const;
  /// (degree, index) of a basis element by name.
  std::optional<std::pair<int, std::size_t>> find(const std::string &name) const;

  bool products_known() const { return products_known_; }
  void set_products_known(bool known) { products_known_ = known; }

  /// Records e_{di,a} * e_{dj,b} = value and fills in the graded-commutative
  /// partner. Throws a validation Error naming the triple on a conflict.
  void add_product(int di, std::size_t a, int dj, std::size_t b,
                   const RatVector &value);

  /// Product of homogeneous elements given by coordinates. Throws a
  /// precondition Error if a needed product is unknown.
  RatVector multiply(int di, const RatVector &a, int dj,
                     const RatVector &b) const;

  void set_class(const std::string &name, int degree, RatVector coords);
  const std::map<std::string, ClassEntry> &classes() const { return classes_; }
  const ClassEntry *find_class(const std::string &name) const;

  /// Associativity on basis triples: a deterministic sample, or all triples
  /// when `full`. Throws a validation Error naming the first bad triple.
  void check_associative(bool full) const;

private:
  int max_degree_;
  std::map<int, std::vector<std::string>> basis_;
  std::map<std::tuple<int, std::size_t, int, std::size_t>, RatVector> products_;
  std::map<std::string, ClassEntry> classes_;
  bool products_known_ = true;

  RatVector basis_product(int di, std::size_t a, int dj, std::size_t b) const;
};

struct FiberGenerator {
  std::string name;
  int degree = 0;
  /// Name of the distinguished base class hit by transgression; empty for 0.
  std::string target;
};

using FiberSpec = std::vector<FiberGenerator>;

/// a3,a7,a11 style list; a_m transgresses to p_{(m+1)/4}.
FiberSpec parse_fiber(const std::string &list);

struct Summand {
  int s = 0;
  int t = 0;
  long dim = 0;
  std::vector<std::string> labels;
};

/// Spectral sequence of C = H*(M) (x) Lambda(fiber), D(a) = transgression,
/// filtered by base degree. Pages r >= 2 through total degree `bound`.
class SpectralSequence {
public:
  int bound() const { return bound_; }
  /// Page index holding E_infinity once finished; 2 before that.
  int last_page() const { return last_page_; }
  bool finished() const { return finished_; }

  long dim(int r, int s, int t) const;
  long e2(int s, int t) const { return dim(2, s, t); }
  long einfty(int s, int t) const;
  /// Matrix of d_r : E_r^{s,t} -> E_r^{s+r,t-r+1} in the page's chosen
  /// bases; nullptr when either side vanishes.
  const QMatrix *differential(int r, int s, int t) const;
  /// Bidegrees (s,t) with s+t = n and nonzero E_r.
  std::vector<std::pair<int, int>> support(int r, int n) const;
  /// Labels of the E_2 basis at (s,t), e.g. "u4⊗a3".
  std::vector<std::string> e2_labels(int s, int t) const;

  /// dim H^n(C, D), computed directly from the complex.
  long total_dim(int n) const;

  /// E_infinity summands on the antidiagonal s+t = n, labelled by the
  /// leading E_2 basis element of each representative.
  std::vector<Summand> total_space_cohomology(int n) const;

  friend SpectralSequence e2_page(const BasePresentation &, const FiberSpec &,
                                  int);
  friend SpectralSequence run_to_einfty(SpectralSequence);

  struct Cell {
    int s;
    std::size_t b;
    int t;
    std::size_t f;
  };

private:
  int bound_ = 0;
  int last_page_ = 2;
  bool finished_ = false;
  // Complex C^n for n <= bound + 2 and D : C^n -> C^{n+1}.
  std::vector<std::vector<Cell>> cells_;
  std::vector<QMatrix> D_;
  std::vector<std::vector<std::string>> cell_labels_;
  // (r, s, t) -> dim, nonzero entries only.
  std::map<std::tuple<int, int, int>, long> dims_;
  std::map<std::tuple<int, int, int>, QMatrix> diffs_;
  std::map<std::tuple<int, int>, std::vector<std::string>> inf_labels_;
  std::vector<long> total_;
};

/// Builds the complex and E_2 = H*(M) (x) Lambda(fiber) through total degree
/// `bound`. Throws a validation Error for fiber/class mismatches and a
/// precondition Error when a transgression target is undeclared.
SpectralSequence e2_page(const BasePresentation &base, const FiberSpec &fiber,
                         int bound);

/// Runs every page to E_infinity. Page dimensions are cross-checked against
/// the ranks of the computed differentials, and E_infinity against H(C, D).
SpectralSequence run_to_einfty(SpectralSequence ss);

} // namespace qtower

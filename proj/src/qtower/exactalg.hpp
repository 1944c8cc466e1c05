#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace qtower {

/// Exact rational number, always in lowest terms with a positive denominator.
class Rat {
public:
  Rat() = default;
  Rat(long v) : v_(v) {}
  Rat(int v) : v_(v) {}
  Rat(long num, long den);
  explicit Rat(const mpq_class &v) : v_(v) { v_.canonicalize(); }

  /// Parses "a" or "a/b" (optional sign). Throws std::invalid_argument.
  static Rat parse(std::string_view text);

  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }
  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }
  const mpq_class &raw() const { return v_; }

  std::string str() const { return v_.get_str(); }

  Rat operator-() const { return Rat(mpq_class(-v_)); }
  Rat &operator+=(const Rat &o) { v_ += o.v_; return *this; }
  Rat &operator-=(const Rat &o) { v_ -= o.v_; return *this; }
  Rat &operator*=(const Rat &o) { v_ *= o.v_; return *this; }
  Rat &operator/=(const Rat &o);

  friend Rat operator+(Rat a, const Rat &b) { return a += b; }
  friend Rat operator-(Rat a, const Rat &b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat &b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat &b) { return a /= b; }
  friend bool operator==(const Rat &a, const Rat &b) { return a.v_ == b.v_; }
  friend bool operator<(const Rat &a, const Rat &b) { return a.v_ < b.v_; }
  friend std::ostream &operator<<(std::ostream &os, const Rat &r) {
    return os << r.str();
  }

private:
  mpq_class v_{0};
};

using RatVector = std::vector<Rat>;

/// Dense matrix over Q, row-major.
class QMatrix {
public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  QMatrix(std::initializer_list<std::initializer_list<Rat>> rows);

  static QMatrix identity(std::size_t n);
  /// Matrix whose columns are the given vectors (all of length `rows`).
  static QMatrix from_columns(std::size_t rows,
                              const std::vector<RatVector> &cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rat &operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  RatVector apply(const RatVector &x) const;
  void swap_rows(std::size_t a, std::size_t b);
  void scale_row(std::size_t r, const Rat &s);

  friend bool operator==(const QMatrix &, const QMatrix &) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> data_;
};

/// Reduced row echelon form together with its pivot columns.
struct Echelon {
  QMatrix reduced;
  std::vector<std::size_t> pivots;
};

Echelon rref(QMatrix m);
std::size_t rank(const QMatrix &m);
/// Basis of the right kernel {x : m x = 0}; one vector per free column.
std::vector<RatVector> kernel_basis(const QMatrix &m);

/// Dimension of the span of a family of vectors of common length `len`.
std::size_t span_dim(std::size_t len, const std::vector<RatVector> &vs);

/// Solves m x = b if consistent. Returns false when b is not in the image.
bool solve(const QMatrix &m, const RatVector &b, RatVector &x);

/// Degree -> dimension, zero entries never stored.
class GradedDims {
public:
  GradedDims() = default;
  GradedDims(std::initializer_list<std::pair<const int, long>> init);

  long at(int degree) const;
  void set(int degree, long dim);
  void add(int degree, long dim) { set(degree, at(degree) + dim); }

  const std::map<int, long> &entries() const { return dims_; }
  bool empty() const { return dims_.empty(); }
  /// Largest degree with a nonzero entry, -1 when empty.
  int top_degree() const;
  long total() const;

  friend bool operator==(const GradedDims &, const GradedDims &) = default;
  friend std::ostream &operator<<(std::ostream &os, const GradedDims &g);

private:
  std::map<int, long> dims_;
};

} // namespace qtower

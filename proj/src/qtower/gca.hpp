#pragma once

#include "qtower/exactalg.hpp"

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace qtower {

struct Generator {
  std::string name;
  int degree = 1;
  bool odd() const { return degree % 2 != 0; }
  friend bool operator==(const Generator &, const Generator &) = default;
};

/// Ordered generators; the order fixes the monomial normal form.
class GeneratorSet {
public:
  GeneratorSet() = default;
  /// Throws std::invalid_argument on duplicate names or degree < 1.
  explicit GeneratorSet(std::vector<Generator> gens);

  std::size_t size() const { return gens_.size(); }
  const Generator &operator[](std::size_t i) const { return gens_[i]; }
  const std::vector<Generator> &items() const { return gens_; }
  std::optional<std::size_t> index_of(const std::string &name) const;

  friend bool operator==(const GeneratorSet &, const GeneratorSet &) = default;

private:
  std::vector<Generator> gens_;
};

/// Exponent vector indexed by generator position. Odd generators carry
/// exponent 0 or 1.
struct Monomial {
  std::vector<int> exps;
  auto operator<=>(const Monomial &) const = default;
};

class Polynomial {
public:
  Polynomial() = default;
  explicit Polynomial(std::shared_ptr<const GeneratorSet> gens)
      : gens_(std::move(gens)) {}

  const std::shared_ptr<const GeneratorSet> &generators() const { return gens_; }
  const std::map<Monomial, Rat> &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Adds c * m; drops the term if the coefficient cancels.
  void add_term(const Monomial &m, const Rat &c);
  Rat coefficient(const Monomial &m) const;

  /// Degree of a homogeneous polynomial; nullopt when zero or inhomogeneous.
  std::optional<int> degree() const;
  bool is_homogeneous() const;

  Polynomial &operator+=(const Polynomial &o);
  Polynomial &operator-=(const Polynomial &o);
  Polynomial &operator*=(const Rat &c);
  friend Polynomial operator+(Polynomial a, const Polynomial &b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial &b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rat &c) { return a *= c; }
  friend Polynomial operator*(const Polynomial &a, const Polynomial &b);
  friend bool operator==(const Polynomial &a, const Polynomial &b);
  friend Polynomial multiply(const Polynomial &a, const Polynomial &b);

  std::string str() const;

private:
  void require_same(const Polynomial &o) const;

  std::shared_ptr<const GeneratorSet> gens_;
  std::map<Monomial, Rat> terms_;
};

int monomial_degree(const GeneratorSet &gens, const Monomial &m);
std::string monomial_str(const GeneratorSet &gens, const Monomial &m);

/// Product of two monomials in normal form: (sign, product). Sign 0 means
/// the product vanishes because an odd generator would be squared.
std::pair<int, Monomial> multiply_monomials(const GeneratorSet &gens,
                                            const Monomial &a,
                                            const Monomial &b);

/// Bilinear graded-commutative product. Throws std::invalid_argument when the
/// operands live over different generator sets.
Polynomial multiply(const Polynomial &a, const Polynomial &b);

/// Free graded-commutative algebra over Q.
class FreeGCA {
public:
  FreeGCA() : gens_(std::make_shared<const GeneratorSet>()) {}
  explicit FreeGCA(GeneratorSet gens)
      : gens_(std::make_shared<const GeneratorSet>(std::move(gens))) {}
  explicit FreeGCA(std::vector<Generator> gens)
      : FreeGCA(GeneratorSet(std::move(gens))) {}

  const GeneratorSet &generators() const { return *gens_; }
  const std::shared_ptr<const GeneratorSet> &generators_ptr() const {
    return gens_;
  }

  Polynomial zero() const { return Polynomial(gens_); }
  Polynomial one() const;
  Polynomial scalar(const Rat &c) const;
  Polynomial generator(const std::string &name) const;
  Polynomial monomial(const Monomial &m, const Rat &c = Rat(1)) const;
  Monomial unit_monomial() const { return Monomial{std::vector<int>(gens_->size(), 0)}; }

  /// All monomials of total degree d, ascending lexicographic order of
  /// exponent vectors.
  std::vector<Monomial> basis_in_degree(int d) const;

private:
  std::shared_ptr<const GeneratorSet> gens_;
};

/// Dimensions of the algebra in degrees 0..max_degree, from the product
/// formula prod_even (1 - t^d)^{-1} prod_odd (1 + t^d).
GradedDims poincare_dims(const FreeGCA &alg, int max_degree);

} // namespace qtower

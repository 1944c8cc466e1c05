#include "qtower/exactalg.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace qtower {

Rat::Rat(long num, long den) {
  if (den == 0)
    throw std::invalid_argument("Rat: zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rat &Rat::operator/=(const Rat &o) {
  if (o.is_zero())
    throw std::domain_error("Rat: division by zero");
  v_ /= o.v_;
  return *this;
}

namespace {

bool valid_integer(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+'))
    s.remove_prefix(1);
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isdigit(c) != 0;
  });
}

} // namespace

Rat Rat::parse(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den =
      slash == std::string_view::npos ? std::string_view{"1"}
                                      : text.substr(slash + 1);
  if (!valid_integer(num) || !valid_integer(den) || den.front() == '-' ||
      den.front() == '+')
    throw std::invalid_argument("not an exact rational: '" + std::string(text) +
                                "'");
  std::string n(num);
  if (n.front() == '+')
    n.erase(0, 1);
  mpz_class zn(n), zd{std::string(den)};
  if (zd == 0)
    throw std::invalid_argument("zero denominator in '" + std::string(text) +
                                "'");
  return Rat(mpq_class(zn, zd));
}

QMatrix::QMatrix(std::initializer_list<std::initializer_list<Rat>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto &r : rows) {
    if (r.size() != cols_)
      throw std::invalid_argument("QMatrix: ragged initializer");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    m(i, i) = 1;
  return m;
}

QMatrix QMatrix::from_columns(std::size_t rows,
                              const std::vector<RatVector> &cols) {
  QMatrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows)
      throw std::invalid_argument("QMatrix::from_columns: length mismatch");
    for (std::size_t r = 0; r < rows; ++r)
      m(r, c) = cols[c][r];
  }
  return m;
}

RatVector QMatrix::apply(const RatVector &x) const {
  if (x.size() != cols_)
    throw std::invalid_argument("QMatrix::apply: length mismatch");
  RatVector y(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (!(*this)(r, c).is_zero() && !x[c].is_zero())
        y[r] += (*this)(r, c) * x[c];
  return y;
}

void QMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b)
    return;
  for (std::size_t c = 0; c < cols_; ++c)
    std::swap((*this)(a, c), (*this)(b, c));
}

void QMatrix::scale_row(std::size_t r, const Rat &s) {
  for (std::size_t c = 0; c < cols_; ++c)
    (*this)(r, c) *= s;
}

Echelon rref(QMatrix m) {
  Echelon out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t piv = row;
    while (piv < m.rows() && m(piv, col).is_zero())
      ++piv;
    if (piv == m.rows())
      continue;
    m.swap_rows(piv, row);
    m.scale_row(row, Rat(1) / m(row, col));
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero())
        continue;
      Rat f = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c)
        if (!m(row, c).is_zero())
          m(r, c) -= f * m(row, c);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const QMatrix &m) { return rref(m).pivots.size(); }

std::vector<RatVector> kernel_basis(const QMatrix &m) {
  auto e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots)
    is_pivot[p] = true;
  std::vector<RatVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free])
      continue;
    RatVector v(m.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i)
      v[e.pivots[i]] = -e.reduced(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t span_dim(std::size_t len, const std::vector<RatVector> &vs) {
  if (vs.empty())
    return 0;
  return rank(QMatrix::from_columns(len, vs));
}

bool solve(const QMatrix &m, const RatVector &b, RatVector &x) {
  if (b.size() != m.rows())
    throw std::invalid_argument("solve: length mismatch");
  QMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c)
      aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  auto e = rref(std::move(aug));
  if (!e.pivots.empty() && e.pivots.back() == m.cols())
    return false;
  x.assign(m.cols(), Rat(0));
  for (std::size_t i = 0; i < e.pivots.size(); ++i)
    x[e.pivots[i]] = e.reduced(i, m.cols());
  return true;
}

GradedDims::GradedDims(std::initializer_list<std::pair<const int, long>> init) {
  for (const auto &[d, v] : init)
    set(d, v);
}

long GradedDims::at(int degree) const {
  auto it = dims_.find(degree);
  return it == dims_.end() ? 0 : it->second;
}

void GradedDims::set(int degree, long dim) {
  if (degree < 0 || dim < 0)
    throw std::invalid_argument("GradedDims: negative degree or dimension");
  if (dim == 0)
    dims_.erase(degree);
  else
    dims_[degree] = dim;
}

int GradedDims::top_degree() const {
  return dims_.empty() ? -1 : dims_.rbegin()->first;
}

long GradedDims::total() const {
  long t = 0;
  for (const auto &[d, v] : dims_)
    t += v;
  return t;
}

std::ostream &operator<<(std::ostream &os, const GradedDims &g) {
  os << '{';
  bool first = true;
  for (const auto &[d, v] : g.dims_) {
    os << (first ? "" : ", ") << d << ':' << v;
    first = false;
  }
  return os << '}';
}

} // namespace qtower

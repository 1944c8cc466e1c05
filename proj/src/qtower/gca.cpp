#include "qtower/gca.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

namespace qtower {

GeneratorSet::GeneratorSet(std::vector<Generator> gens) : gens_(std::move(gens)) {
  std::set<std::string> seen;
  for (const auto &g : gens_) {
    if (g.degree < 1)
      throw std::invalid_argument("generator '" + g.name + "' has degree < 1");
    if (g.name.empty())
      throw std::invalid_argument("generator with empty name");
    if (!seen.insert(g.name).second)
      throw std::invalid_argument("duplicate generator name '" + g.name + "'");
  }
}

std::optional<std::size_t> GeneratorSet::index_of(const std::string &name) const {
  for (std::size_t i = 0; i < gens_.size(); ++i)
    if (gens_[i].name == name)
      return i;
  return std::nullopt;
}

int monomial_degree(const GeneratorSet &gens, const Monomial &m) {
  int d = 0;
  for (std::size_t i = 0; i < m.exps.size(); ++i)
    d += m.exps[i] * gens[i].degree;
  return d;
}

std::string monomial_str(const GeneratorSet &gens, const Monomial &m) {
  std::string out;
  for (std::size_t i = 0; i < m.exps.size(); ++i) {
    if (m.exps[i] == 0)
      continue;
    if (!out.empty())
      out += '*';
    out += gens[i].name;
    if (m.exps[i] > 1)
      out += '^' + std::to_string(m.exps[i]);
  }
  return out.empty() ? "1" : out;
}

std::pair<int, Monomial> multiply_monomials(const GeneratorSet &gens,
                                            const Monomial &a,
                                            const Monomial &b) {
  Monomial out{std::vector<int>(gens.size(), 0)};
  int swaps = 0;
  // Odd generators of a that sit after position j; b's factor at j must
  // move left past each of them.
  int odd_in_a_after = 0;
  for (std::size_t k = 0; k < gens.size(); ++k)
    if (gens[k].odd())
      odd_in_a_after += a.exps[k];
  for (std::size_t j = 0; j < gens.size(); ++j) {
    if (gens[j].odd()) {
      odd_in_a_after -= a.exps[j];
      if (a.exps[j] + b.exps[j] > 1)
        return {0, out};
      if (b.exps[j] == 1)
        swaps += odd_in_a_after;
    }
    out.exps[j] = a.exps[j] + b.exps[j];
  }
  return {swaps % 2 == 0 ? 1 : -1, out};
}

void Polynomial::add_term(const Monomial &m, const Rat &c) {
  if (c.is_zero())
    return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero())
      terms_.erase(it);
  }
}

Rat Polynomial::coefficient(const Monomial &m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rat(0) : it->second;
}

std::optional<int> Polynomial::degree() const {
  if (terms_.empty() || !gens_)
    return std::nullopt;
  int d = monomial_degree(*gens_, terms_.begin()->first);
  for (const auto &[m, c] : terms_)
    if (monomial_degree(*gens_, m) != d)
      return std::nullopt;
  return d;
}

bool Polynomial::is_homogeneous() const { return is_zero() || degree().has_value(); }

void Polynomial::require_same(const Polynomial &o) const {
  if (gens_ == o.gens_)
    return;
  if (!gens_ || !o.gens_ || !(*gens_ == *o.gens_))
    throw std::invalid_argument("polynomials over different generator sets");
}

Polynomial &Polynomial::operator+=(const Polynomial &o) {
  if (!gens_)
    gens_ = o.gens_;
  require_same(o);
  for (const auto &[m, c] : o.terms_)
    add_term(m, c);
  return *this;
}

Polynomial &Polynomial::operator-=(const Polynomial &o) {
  if (!gens_)
    gens_ = o.gens_;
  require_same(o);
  for (const auto &[m, c] : o.terms_)
    add_term(m, -c);
  return *this;
}

Polynomial &Polynomial::operator*=(const Rat &c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto &[m, v] : terms_)
    v *= c;
  return *this;
}

Polynomial multiply(const Polynomial &a, const Polynomial &b) {
  a.require_same(b);
  Polynomial out(a.gens_);
  for (const auto &[ma, ca] : a.terms_)
    for (const auto &[mb, cb] : b.terms_) {
      auto [sign, m] = multiply_monomials(*a.gens_, ma, mb);
      if (sign != 0)
        out.add_term(m, sign > 0 ? ca * cb : -(ca * cb));
    }
  return out;
}

Polynomial operator*(const Polynomial &a, const Polynomial &b) {
  return multiply(a, b);
}

bool operator==(const Polynomial &a, const Polynomial &b) {
  if (a.gens_ != b.gens_ && a.gens_ && b.gens_ && !(*a.gens_ == *b.gens_))
    return false;
  return a.terms_ == b.terms_;
}

std::string Polynomial::str() const {
  if (terms_.empty())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto &[m, c] : terms_) {
    Rat mag = c.sign() < 0 ? -c : c;
    if (first)
      os << (c.sign() < 0 ? "-" : "");
    else
      os << (c.sign() < 0 ? " - " : " + ");
    std::string mono = monomial_str(*gens_, m);
    if (mono == "1")
      os << mag;
    else if (mag == Rat(1))
      os << mono;
    else
      os << mag << '*' << mono;
    first = false;
  }
  return os.str();
}

Polynomial FreeGCA::one() const { return scalar(Rat(1)); }

Polynomial FreeGCA::scalar(const Rat &c) const {
  Polynomial p(gens_);
  p.add_term(unit_monomial(), c);
  return p;
}

Polynomial FreeGCA::generator(const std::string &name) const {
  auto idx = gens_->index_of(name);
  if (!idx)
    throw std::invalid_argument("unknown generator '" + name + "'");
  Monomial m = unit_monomial();
  m.exps[*idx] = 1;
  return monomial(m);
}

Polynomial FreeGCA::monomial(const Monomial &m, const Rat &c) const {
  if (m.exps.size() != gens_->size())
    throw std::invalid_argument("monomial length does not match generators");
  for (std::size_t i = 0; i < m.exps.size(); ++i)
    if (m.exps[i] < 0 || ((*gens_)[i].odd() && m.exps[i] > 1))
      throw std::invalid_argument("monomial violates exponent constraints");
  Polynomial p(gens_);
  p.add_term(m, c);
  return p;
}

namespace {

void enumerate(const GeneratorSet &gens, std::size_t idx, int remaining,
               Monomial &cur, std::vector<Monomial> &out) {
  if (idx == gens.size()) {
    if (remaining == 0)
      out.push_back(cur);
    return;
  }
  const int deg = gens[idx].degree;
  const int max_exp = gens[idx].odd() ? 1 : remaining / deg;
  for (int e = 0; e <= max_exp && e * deg <= remaining; ++e) {
    cur.exps[idx] = e;
    enumerate(gens, idx + 1, remaining - e * deg, cur, out);
  }
  cur.exps[idx] = 0;
}

} // namespace

std::vector<Monomial> FreeGCA::basis_in_degree(int d) const {
  std::vector<Monomial> out;
  if (d < 0)
    return out;
  Monomial cur = unit_monomial();
  enumerate(*gens_, 0, d, cur, out);
  return out; // exponent 0 is tried first at every position: ascending lex
}

GradedDims poincare_dims(const FreeGCA &alg, int max_degree) {
  if (max_degree < 0)
    throw std::invalid_argument("poincare_dims: negative degree bound");
  std::vector<long> c(static_cast<std::size_t>(max_degree) + 1, 0);
  c[0] = 1;
  for (const auto &g : alg.generators().items()) {
    const int d = g.degree;
    if (g.odd()) {
      for (int n = max_degree; n >= d; --n)
        c[n] += c[n - d];
    } else {
      for (int n = d; n <= max_degree; ++n)
        c[n] += c[n - d];
    }
  }
  GradedDims out;
  for (int n = 0; n <= max_degree; ++n)
    out.set(n, c[n]);
  return out;
}

} // namespace qtower

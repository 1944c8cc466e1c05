#include "qtower/sullivan.hpp"

#include "qtower/errors.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace qtower {

namespace {

std::vector<Polynomial> collect_d(const FreeGCA &alg,
                                  const std::map<std::string, Polynomial> &d,
                                  bool check_degree) {
  const auto &gens = alg.generators();
  std::vector<Polynomial> out(gens.size(), alg.zero());
  for (const auto &[name, poly] : d) {
    auto idx = gens.index_of(name);
    if (!idx)
      throw std::invalid_argument("differential given on unknown generator '" +
                                  name + "'");
    if (poly.is_zero())
      continue;
    if (!(*poly.generators() == gens))
      throw std::invalid_argument("d(" + name +
                                  ") lives over a different algebra");
    if (check_degree && poly.degree() != gens[*idx].degree + 1)
      throw std::invalid_argument("d(" + name + ") = " + poly.str() +
                                  " is not homogeneous of degree " +
                                  std::to_string(gens[*idx].degree + 1));
    // Rebind to this algebra's generator set so products never mix owners.
    Polynomial rebound(alg.generators_ptr());
    for (const auto &[m, c] : poly.terms())
      rebound.add_term(m, c);
    out[*idx] = std::move(rebound);
  }
  return out;
}

} // namespace

CDGA::CDGA(FreeGCA algebra, const std::map<std::string, Polynomial> &d)
    : alg_(std::move(algebra)), d_(collect_d(alg_, d, true)) {}

CDGA CDGA::unchecked(FreeGCA algebra,
                     const std::map<std::string, Polynomial> &d) {
  CDGA c;
  c.alg_ = std::move(algebra);
  c.d_ = collect_d(c.alg_, d, false);
  return c;
}

const Polynomial &CDGA::d_of(const std::string &name) const {
  auto idx = alg_.generators().index_of(name);
  if (!idx)
    throw std::invalid_argument("unknown generator '" + name + "'");
  return d_[*idx];
}

bool CDGA::is_minimal() const {
  for (const auto &p : d_)
    for (const auto &[m, c] : p.terms()) {
      int len = 0;
      for (int e : m.exps)
        len += e;
      if (len <= 1)
        return false;
    }
  return true;
}

std::string CDGA::str() const {
  const auto &gens = alg_.generators();
  std::string out = "L(";
  for (std::size_t i = 0; i < gens.size(); ++i)
    out += (i ? "," : "") + gens[i].name;
  out += ")";
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (!d_[i].is_zero())
      out += ", d(" + gens[i].name + ") = " + d_[i].str();
  return out;
}

Polynomial differential_extend(const CDGA &c, const Polynomial &p) {
  const auto &alg = c.algebra();
  const auto &gens = alg.generators();
  Polynomial out = alg.zero();
  for (const auto &[m, coeff] : p.terms()) {
    // m = g_0^{e_0} ... g_{n-1}^{e_{n-1}}; differentiate one power at a time.
    Monomial prefix = alg.unit_monomial();
    int prefix_deg = 0;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const int e = m.exps[i];
      if (e == 0)
        continue;
      if (!c.d_of(i).is_zero()) {
        Monomial rest = m;
        rest.exps[i] = 0;
        for (std::size_t j = 0; j < i; ++j)
          rest.exps[j] = 0;
        Monomial power = alg.unit_monomial();
        power.exps[i] = e - 1;
        Polynomial term = alg.monomial(prefix) *
                          (alg.monomial(power, Rat(e)) * c.d_of(i)) *
                          alg.monomial(rest);
        out += term * (prefix_deg % 2 == 0 ? coeff : -coeff);
      }
      prefix.exps[i] = e;
      prefix_deg += e * gens[i].degree;
    }
  }
  return out;
}

bool d_squared_check(const CDGA &c, int max_degree) {
  const auto &gens = c.algebra().generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (gens[i].degree <= max_degree &&
        !differential_extend(c, c.d_of(i)).is_zero())
      return false;
  return true;
}

QMatrix differential_matrix(const CDGA &c, int n) {
  const auto &alg = c.algebra();
  auto src = alg.basis_in_degree(n);
  auto dst = alg.basis_in_degree(n + 1);
  std::map<Monomial, std::size_t> index;
  for (std::size_t i = 0; i < dst.size(); ++i)
    index.emplace(dst[i], i);
  QMatrix m(dst.size(), src.size());
  for (std::size_t j = 0; j < src.size(); ++j) {
    Polynomial dp = differential_extend(c, alg.monomial(src[j]));
    for (const auto &[mono, coeff] : dp.terms()) {
      auto it = index.find(mono);
      if (it == index.end())
        throw std::logic_error("differential left its degree");
      m(it->second, j) = coeff;
    }
  }
  return m;
}

GradedDims cohomology_dims(const CDGA &c, int max_degree) {
  if (max_degree < 0)
    throw std::invalid_argument("cohomology_dims: negative degree bound");
  if (!d_squared_check(c, max_degree + 1))
    throw precondition_error("d^2 != 0 on " + c.str());
  GradedDims out;
  std::size_t prev_rank = 0;
  for (int n = 0; n <= max_degree; ++n) {
    QMatrix dn = differential_matrix(c, n);
    std::size_t r = rank(dn);
    out.set(n, static_cast<long>(dn.cols() - r - prev_rank));
    prev_rank = r;
  }
  return out;
}

RelativeModel split_relative(const CDGA &total,
                             const std::vector<std::string> &base_names) {
  const auto &gens = total.algebra().generators();
  std::set<std::string> in_base(base_names.begin(), base_names.end());
  RelativeModel rm;
  rm.total = total;

  std::vector<Generator> bgens, fgens;
  for (const auto &name : base_names) {
    auto idx = gens.index_of(name);
    if (!idx)
      throw std::invalid_argument("base generator '" + name +
                                  "' not in total algebra");
    rm.inclusion.push_back(*idx);
    bgens.push_back(gens[*idx]);
  }
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (!in_base.count(gens[i].name)) {
      rm.projection.push_back(i);
      fgens.push_back(gens[i]);
    }

  // Base: restriction of d, which must not leave the base.
  FreeGCA balg(bgens);
  std::map<std::string, Polynomial> bd;
  for (std::size_t k = 0; k < bgens.size(); ++k) {
    const auto &dp = total.d_of(rm.inclusion[k]);
    Polynomial q = balg.zero();
    for (const auto &[m, c] : dp.terms()) {
      Monomial bm = balg.unit_monomial();
      for (std::size_t i = 0; i < gens.size(); ++i) {
        if (m.exps[i] == 0)
          continue;
        auto pos = std::find(rm.inclusion.begin(), rm.inclusion.end(), i);
        if (pos == rm.inclusion.end())
          throw std::invalid_argument("d(" + bgens[k].name +
                                      ") leaves the base subalgebra");
        bm.exps[pos - rm.inclusion.begin()] = m.exps[i];
      }
      q.add_term(bm, c);
    }
    bd.emplace(bgens[k].name, q);
  }
  rm.base = CDGA(balg, bd);

  // Fiber: set base generators to zero.
  FreeGCA falg(fgens);
  std::map<std::string, Polynomial> fd;
  for (std::size_t k = 0; k < fgens.size(); ++k) {
    const auto &dp = total.d_of(rm.projection[k]);
    Polynomial q = falg.zero();
    for (const auto &[m, c] : dp.terms()) {
      bool touches_base = false;
      for (auto i : rm.inclusion)
        touches_base = touches_base || m.exps[i] != 0;
      if (touches_base)
        continue;
      Monomial fm = falg.unit_monomial();
      for (std::size_t j = 0; j < rm.projection.size(); ++j)
        fm.exps[j] = m.exps[rm.projection[j]];
      q.add_term(fm, c);
    }
    fd.emplace(fgens[k].name, q);
  }
  rm.fiber = CDGA(falg, fd);
  return rm;
}

RelativeModel relative_model_of_cover(const GeneratorSet &base_gens,
                                      const std::string &killed) {
  auto idx = base_gens.index_of(killed);
  if (!idx)
    throw std::invalid_argument("generator '" + killed +
                                "' is not in the base");
  const int deg = base_gens[*idx].degree;
  if (deg % 2 != 0)
    throw std::invalid_argument("cannot kill odd generator '" + killed + "'");
  std::vector<Generator> gens = base_gens.items();
  std::vector<std::string> base_names;
  for (const auto &g : gens)
    base_names.push_back(g.name);
  const std::string sy = "sy" + std::to_string(deg);
  gens.push_back({sy, deg - 1});
  FreeGCA total(gens);
  CDGA c(total, {{sy, total.generator(killed)}});
  return split_relative(c, base_names);
}

RelativeModel pathspace_model(const EMProduct &fiber_degrees) {
  std::vector<Generator> gens;
  std::vector<std::string> base_names;
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const auto &[m, mult] : fiber_degrees.factors()) {
    if (m < 2)
      throw std::invalid_argument("pathspace model needs degrees >= 2");
    for (int j = 1; j <= mult; ++j) {
      std::string tag = std::to_string(m) + (mult > 1 ? "_" + std::to_string(j) : "");
      gens.push_back({"y" + tag, m});
      base_names.push_back("y" + tag);
    }
  }
  for (const auto &[m, mult] : fiber_degrees.factors())
    for (int j = 1; j <= mult; ++j) {
      std::string tag = std::to_string(m) + (mult > 1 ? "_" + std::to_string(j) : "");
      gens.push_back({"sy" + tag, m - 1});
      pairs.emplace_back("sy" + tag, "y" + tag);
    }
  FreeGCA total(gens);
  std::map<std::string, Polynomial> d;
  for (const auto &[sy, y] : pairs)
    d.emplace(sy, total.generator(y));
  return split_relative(CDGA(total, d), base_names);
}

CDGA koszul_cdga(int n) {
  if (n < 0)
    throw std::invalid_argument("koszul_cdga: negative rank");
  std::vector<Generator> gens;
  for (int i = 1; i <= n; ++i)
    gens.push_back({"p" + std::to_string(i), 4 * i});
  for (int i = 1; i <= n; ++i)
    gens.push_back({"a" + std::to_string(4 * i - 1), 4 * i - 1});
  FreeGCA alg(gens);
  std::map<std::string, Polynomial> d;
  for (int i = 1; i <= n; ++i)
    d.emplace("a" + std::to_string(4 * i - 1),
              alg.generator("p" + std::to_string(i)));
  return CDGA(alg, d);
}

} // namespace qtower

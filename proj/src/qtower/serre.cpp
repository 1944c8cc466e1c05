#include "qtower/serre.hpp"

#include "qtower/errors.hpp"
#include "qtower/gca.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace qtower {

namespace {

const std::vector<std::string> kEmptyBasis;

bool all_zero(const RatVector &v) {
  return std::all_of(v.begin(), v.end(), [](const Rat &x) { return x.is_zero(); });
}

std::string vec_str(const RatVector &v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i)
    out += (i ? "," : "") + v[i].str();
  return out + "]";
}

} // namespace

BasePresentation::BasePresentation(int max_degree) : max_degree_(max_degree) {
  if (max_degree < 0)
    throw std::invalid_argument("BasePresentation: negative max_degree");
  basis_[0] = {"1"};
}

BasePresentation BasePresentation::from_betti(const GradedDims &betti,
                                              int max_degree) {
  BasePresentation bp(std::max(max_degree, betti.top_degree()));
  for (const auto &[d, n] : betti.entries()) {
    if (d == 0) {
      if (n != 1)
        throw validation_error("b0 must be 1");
      continue;
    }
    std::vector<std::string> names;
    for (long j = 1; j <= n; ++j)
      names.push_back("h" + std::to_string(d) +
                      (n > 1 ? "_" + std::to_string(j) : ""));
    bp.set_basis(d, std::move(names));
  }
  bp.products_known_ = false;
  return bp;
}

void BasePresentation::set_basis(int degree, std::vector<std::string> names) {
  if (degree < 0 || degree > max_degree_)
    throw validation_error("basis degree " + std::to_string(degree) +
                           " outside 0.." + std::to_string(max_degree_));
  if (degree == 0 && names != std::vector<std::string>{"1"})
    throw validation_error("degree 0 basis must be [\"1\"]");
  for (const auto &n : names) {
    if (n.empty())
      throw validation_error("empty basis name in degree " +
                             std::to_string(degree));
    auto hit = find(n);
    if (hit && hit->first != degree)
      throw validation_error("basis name '" + n + "' used in degrees " +
                             std::to_string(hit->first) + " and " +
                             std::to_string(degree));
  }
  if (std::set<std::string>(names.begin(), names.end()).size() != names.size())
    throw validation_error("duplicate basis name in degree " +
                           std::to_string(degree));
  if (names.empty())
    basis_.erase(degree);
  else
    basis_[degree] = std::move(names);
}

const std::vector<std::string> &BasePresentation::basis(int degree) const {
  auto it = basis_.find(degree);
  return it == basis_.end() ? kEmptyBasis : it->second;
}

GradedDims BasePresentation::betti() const {
  GradedDims g;
  for (const auto &[d, names] : basis_)
    g.set(d, static_cast<long>(names.size()));
  return g;
}

std::optional<std::pair<int, std::size_t>>
BasePresentation::find(const std::string &name) const {
  for (const auto &[d, names] : basis_)
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == name)
        return std::make_pair(d, i);
  return std::nullopt;
}

void BasePresentation::add_product(int di, std::size_t a, int dj, std::size_t b,
                                   const RatVector &value) {
  if (a >= dim(di) || b >= dim(dj))
    throw validation_error("product operand out of range");
  const int dk = di + dj;
  const std::string triple = "(" + basis(di)[a] + ", " + basis(dj)[b] + ", " +
                             vec_str(value) + ")";
  if (value.size() != dim(dk))
    throw validation_error("product " + triple + ": value needs " +
                           std::to_string(dim(dk)) + " coordinates");
  if (di == 0 || dj == 0) {
    // Unit products are fixed by the algebra structure.
    RatVector expect(dim(dk));
    expect[di == 0 ? b : a] = 1;
    if (value != expect)
      throw validation_error("product " + triple + " contradicts the unit");
    return;
  }
  RatVector partner = value;
  if ((di * dj) % 2 != 0)
    for (auto &x : partner)
      x = -x;
  auto put = [&](std::tuple<int, std::size_t, int, std::size_t> key,
                 const RatVector &v) {
    auto [it, fresh] = products_.try_emplace(key, v);
    if (!fresh && it->second != v)
      throw validation_error("inconsistent multiplication table at " + triple +
                             ": graded commutativity forces " + vec_str(v) +
                             " but " + vec_str(it->second) + " is recorded");
  };
  put({di, a, dj, b}, value);
  put({dj, b, di, a}, partner);
}

RatVector BasePresentation::basis_product(int di, std::size_t a, int dj,
                                          std::size_t b) const {
  const int dk = di + dj;
  if (di == 0 || dj == 0) {
    RatVector v(dim(dk));
    v[di == 0 ? b : a] = 1;
    return v;
  }
  if (dim(dk) == 0)
    return {};
  auto it = products_.find({di, a, dj, b});
  if (it != products_.end())
    return it->second;
  if (!products_known_)
    throw precondition_error("product " + basis(di)[a] + " * " +
                             basis(dj)[b] +
                             " is needed but the base has no algebra block");
  return RatVector(dim(dk));
}

RatVector BasePresentation::multiply(int di, const RatVector &a, int dj,
                                     const RatVector &b) const {
  const int dk = di + dj;
  RatVector out(dk <= max_degree_ ? dim(dk) : 0);
  if (out.empty())
    return out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero())
      continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j].is_zero())
        continue;
      RatVector p = basis_product(di, i, dj, j);
      Rat c = a[i] * b[j];
      for (std::size_t k = 0; k < p.size(); ++k)
        if (!p[k].is_zero())
          out[k] += c * p[k];
    }
  }
  return out;
}

void BasePresentation::set_class(const std::string &name, int degree,
                                 RatVector coords) {
  if (coords.empty())
    coords.assign(dim(degree), Rat(0));
  if (coords.size() != dim(degree))
    throw validation_error("class '" + name + "' needs " +
                           std::to_string(dim(degree)) +
                           " coordinates in degree " + std::to_string(degree));
  classes_[name] = {degree, std::move(coords)};
}

const BasePresentation::ClassEntry *
BasePresentation::find_class(const std::string &name) const {
  auto it = classes_.find(name);
  return it == classes_.end() ? nullptr : &it->second;
}

void BasePresentation::check_associative(bool full) const {
  if (!products_known_)
    return;
  std::vector<std::pair<int, std::size_t>> elems;
  for (const auto &[d, names] : basis_)
    if (d > 0)
      for (std::size_t i = 0; i < names.size(); ++i)
        elems.emplace_back(d, i);
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> triples;
  for (std::size_t x = 0; x < elems.size(); ++x)
    for (std::size_t y = 0; y < elems.size(); ++y)
      for (std::size_t z = 0; z < elems.size(); ++z)
        if (elems[x].first + elems[y].first + elems[z].first <= max_degree_)
          triples.emplace_back(x, y, z);
  const std::size_t budget = 256;
  const std::size_t stride =
      full || triples.size() <= budget ? 1 : triples.size() / budget;
  auto unit = [&](std::pair<int, std::size_t> e) {
    RatVector v(dim(e.first));
    v[e.second] = 1;
    return v;
  };
  for (std::size_t k = 0; k < triples.size(); k += stride) {
    auto [x, y, z] = triples[k];
    auto [dx, ix] = elems[x];
    auto [dy, iy] = elems[y];
    auto [dz, iz] = elems[z];
    RatVector left = multiply(dx + dy, multiply(dx, unit(elems[x]), dy, unit(elems[y])),
                              dz, unit(elems[z]));
    RatVector right = multiply(dx, unit(elems[x]), dy + dz,
                               multiply(dy, unit(elems[y]), dz, unit(elems[z])));
    if (left != right)
      throw validation_error("multiplication not associative on (" +
                             basis(dx)[ix] + ", " + basis(dy)[iy] + ", " +
                             basis(dz)[iz] + ")");
  }
}

FiberSpec parse_fiber(const std::string &list) {
  FiberSpec out;
  std::set<std::string> seen;
  std::stringstream ss(list);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    tok.erase(std::remove_if(tok.begin(), tok.end(),
                             [](unsigned char c) { return std::isspace(c); }),
              tok.end());
    if (tok.empty())
      continue;
    std::string name = tok, target;
    bool explicit_target = false;
    if (auto eq = tok.find('='); eq != std::string::npos) {
      name = tok.substr(0, eq);
      target = tok.substr(eq + 1);
      explicit_target = true;
      if (target == "0")
        target.clear();
    }
    std::size_t digits = name.size();
    while (digits > 0 && std::isdigit(static_cast<unsigned char>(name[digits - 1])))
      --digits;
    if (digits == 0 || digits == name.size())
      throw validation_error("fiber generator '" + name +
                             "' must be a name ending in its degree");
    const int deg = std::stoi(name.substr(digits));
    if (deg % 2 == 0)
      throw validation_error("fiber generator '" + name +
                             "' must have odd degree");
    if (!explicit_target) {
      if ((deg + 1) % 4 != 0)
        throw validation_error("fiber generator '" + name +
                               "' has no default transgression; write " +
                               name + "=<class>");
      target = "p" + std::to_string((deg + 1) / 4);
    }
    if (!seen.insert(name).second)
      throw validation_error("fiber generator '" + name + "' listed twice");
    out.push_back({name, deg, target});
  }
  return out;
}

namespace {

using Cell = SpectralSequence::Cell;

// Subspace {x in F^lo C^n : Dx in F^hi C^{n+1}}, as spanning vectors.
class FilteredComplex {
public:
  FilteredComplex(const std::vector<std::vector<Cell>> &cells,
                  const std::vector<QMatrix> &D)
      : cells_(cells), D_(D) {}

  const std::vector<RatVector> &zset(int n, int lo, int hi) {
    lo = std::max(lo, 0);
    hi = std::clamp(hi, lo, n + 2);
    auto key = std::make_tuple(n, lo, hi);
    auto it = cache_.find(key);
    if (it != cache_.end())
      return it->second;
    std::vector<RatVector> out;
    const auto &src = cells_[n];
    std::vector<std::size_t> cols;
    for (std::size_t j = 0; j < src.size(); ++j)
      if (src[j].s >= lo)
        cols.push_back(j);
    if (!cols.empty()) {
      std::vector<std::size_t> rows;
      if (static_cast<std::size_t>(n + 1) < cells_.size()) {
        const auto &dst = cells_[n + 1];
        for (std::size_t i = 0; i < dst.size(); ++i)
          if (dst[i].s < hi)
            rows.push_back(i);
      }
      QMatrix sub(rows.size(), cols.size());
      for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j)
          sub(i, j) = D_[n](rows[i], cols[j]);
      for (const auto &k : kernel_basis(sub)) {
        RatVector full(src.size());
        for (std::size_t j = 0; j < cols.size(); ++j)
          full[cols[j]] = k[j];
        out.push_back(std::move(full));
      }
    }
    return cache_.emplace(key, std::move(out)).first->second;
  }

  std::vector<RatVector> image(int n, const std::vector<RatVector> &xs) const {
    std::vector<RatVector> out;
    for (const auto &x : xs) {
      RatVector y = D_[n].apply(x);
      if (!all_zero(y))
        out.push_back(std::move(y));
    }
    return out;
  }

private:
  const std::vector<std::vector<Cell>> &cells_;
  const std::vector<QMatrix> &D_;
  std::map<std::tuple<int, int, int>, std::vector<RatVector>> cache_;
};

struct PageEntry {
  std::vector<RatVector> reps;   // basis of Z modulo B
  std::vector<RatVector> bspan;  // spanning set of B
};

// Columns of `b` followed by candidates; keeps the candidates that are
// independent modulo span(b).
std::vector<RatVector> complement(std::size_t len, const std::vector<RatVector> &b,
                                  const std::vector<RatVector> &cand) {
  std::vector<RatVector> all = b;
  all.insert(all.end(), cand.begin(), cand.end());
  if (all.empty())
    return {};
  auto e = rref(QMatrix::from_columns(len, all));
  std::vector<RatVector> out;
  for (auto p : e.pivots)
    if (p >= b.size())
      out.push_back(cand[p - b.size()]);
  return out;
}

} // namespace

SpectralSequence e2_page(const BasePresentation &base, const FiberSpec &fiber,
                         int bound) {
  if (bound < 0)
    throw std::invalid_argument("spectral sequence: negative bound");

  // Transgression targets as coordinate vectors in degree m + 1.
  std::vector<RatVector> tau;
  std::vector<Generator> fgens;
  for (const auto &g : fiber) {
    fgens.push_back({g.name, g.degree});
    const int td = g.degree + 1;
    RatVector v(td <= base.max_degree() ? base.dim(td) : 0);
    if (!g.target.empty()) {
      if (const auto *c = base.find_class(g.target)) {
        if (c->degree != td)
          throw validation_error("transgression target " + g.target +
                                 " has degree " + std::to_string(c->degree) +
                                 ", expected " + std::to_string(td));
        v = c->coords;
      } else if (auto hit = base.find(g.target)) {
        if (hit->first != td)
          throw validation_error("transgression target " + g.target +
                                 " has degree " + std::to_string(hit->first) +
                                 ", expected " + std::to_string(td));
        v[hit->second] = 1;
      } else if (!v.empty()) {
        throw precondition_error("class " + g.target + " (degree " +
                                 std::to_string(td) +
                                 ") is not declared on the base");
      }
    }
    tau.push_back(std::move(v));
  }
  for (std::size_t i = 0; i < fgens.size(); ++i)
    if (fgens[i].degree % 2 == 0)
      throw validation_error("fiber generator " + fgens[i].name +
                             " has even degree");
  FreeGCA falg(fgens);

  SpectralSequence ss;
  ss.bound_ = bound;
  const int top = bound + 2;
  std::vector<std::vector<Monomial>> fbasis(top + 1);
  std::vector<std::map<Monomial, std::size_t>> findex(top + 1);
  for (int t = 0; t <= top; ++t) {
    fbasis[t] = falg.basis_in_degree(t);
    for (std::size_t i = 0; i < fbasis[t].size(); ++i)
      findex[t].emplace(fbasis[t][i], i);
  }

  ss.cells_.resize(top + 1);
  ss.cell_labels_.resize(top + 1);
  std::vector<std::map<std::tuple<int, std::size_t, std::size_t>, std::size_t>>
      where(top + 1);
  for (int n = 0; n <= top; ++n)
    for (int s = 0; s <= n; ++s) {
      const int t = n - s;
      for (std::size_t b = 0; b < base.dim(s); ++b)
        for (std::size_t f = 0; f < fbasis[t].size(); ++f) {
          where[n][{s, b, f}] = ss.cells_[n].size();
          ss.cells_[n].push_back({s, b, t, f});
          std::string bl = base.basis(s)[b];
          std::string fl = monomial_str(falg.generators(), fbasis[t][f]);
          ss.cell_labels_[n].push_back(
              t == 0 ? bl : s == 0 ? fl : bl + "⊗" + fl);
        }
    }

  // D(b a_I) = sum_l (-1)^{|b| + l - 1} (b tau_l) a_{I - l}.
  ss.D_.clear();
  for (int n = 0; n <= top; ++n) {
    const std::size_t rows = n + 1 <= top ? ss.cells_[n + 1].size() : 0;
    QMatrix D(rows, ss.cells_[n].size());
    if (n + 1 <= top) {
      for (std::size_t j = 0; j < ss.cells_[n].size(); ++j) {
        const Cell &c = ss.cells_[n][j];
        const Monomial &m = fbasis[c.t][c.f];
        RatVector bvec(base.dim(c.s));
        bvec[c.b] = 1;
        int l = 0;
        for (std::size_t i = 0; i < fgens.size(); ++i) {
          if (m.exps[i] == 0)
            continue;
          ++l;
          if (all_zero(tau[i]))
            continue;
          RatVector prod = base.multiply(c.s, bvec, fgens[i].degree + 1, tau[i]);
          if (prod.empty() || all_zero(prod))
            continue;
          Monomial rest = m;
          rest.exps[i] = 0;
          const int s2 = c.s + fgens[i].degree + 1;
          const int t2 = c.t - fgens[i].degree;
          const std::size_t f2 = findex[t2].at(rest);
          const bool neg = (c.s + l - 1) % 2 != 0;
          for (std::size_t k = 0; k < prod.size(); ++k)
            if (!prod[k].is_zero())
              D(where[n + 1].at({s2, k, f2}), j) += neg ? -prod[k] : prod[k];
        }
      }
    }
    ss.D_.push_back(std::move(D));
  }

  for (int n = 0; n <= bound; ++n)
    for (const auto &c : ss.cells_[n])
      ++ss.dims_[{2, c.s, c.t}];

  ss.total_.assign(bound + 1, 0);
  std::size_t prev = 0;
  for (int n = 0; n <= bound; ++n) {
    std::size_t r = rank(ss.D_[n]);
    ss.total_[n] = static_cast<long>(ss.cells_[n].size() - r - prev);
    prev = r;
  }
  return ss;
}

SpectralSequence run_to_einfty(SpectralSequence ss) {
  if (ss.finished_)
    return ss;
  const int bound = ss.bound_;
  const int nmax = bound + 1;  // pages are needed one degree past the bound
  const int last = bound + 3;  // E_r is stable for r >= n + 2
  FilteredComplex fc(ss.cells_, ss.D_);

  auto entry = [&](int r, int s, int n) {
    PageEntry e;
    const std::size_t len = ss.cells_[n].size();
    const auto &z = fc.zset(n, s, s + r);
    e.bspan = fc.zset(n, s + 1, s + r);
    if (n >= 1) {
      auto img = fc.image(n - 1, fc.zset(n - 1, s - r + 1, s));
      e.bspan.insert(e.bspan.end(), img.begin(), img.end());
    }
    e.reps = complement(len, e.bspan, z);
    return e;
  };

  std::map<std::tuple<int, int, int>, long> dims;
  std::map<std::tuple<int, int>, PageEntry> cur;
  for (int r = 2; r <= last; ++r) {
    cur.clear();
    for (int n = 0; n <= nmax; ++n)
      for (int s = 0; s <= n; ++s) {
        PageEntry e = entry(r, s, n);
        if (!e.reps.empty()) {
          if (n <= bound)
            dims[{r, s, n - s}] = static_cast<long>(e.reps.size());
          cur.emplace(std::make_pair(s, n), std::move(e));
        }
      }
    if (r == 2) {
      std::map<std::tuple<int, int, int>, long> e2;
      for (const auto &[k, v] : dims)
        if (std::get<0>(k) == 2)
          e2.emplace(k, v);
      if (e2 != ss.dims_)
        throw std::logic_error("E_2 does not match H(M) (x) Lambda");
    }
    if (r == last) {
      for (const auto &[sn, e] : cur) {
        auto [s, n] = sn;
        if (n > bound)
          continue;
        // Labels: pivots of the filtration-s components of the reps.
        std::vector<std::size_t> idx;
        for (std::size_t j = 0; j < ss.cells_[n].size(); ++j)
          if (ss.cells_[n][j].s == s)
            idx.push_back(j);
        QMatrix lead(e.reps.size(), idx.size());
        for (std::size_t i = 0; i < e.reps.size(); ++i)
          for (std::size_t j = 0; j < idx.size(); ++j)
            lead(i, j) = e.reps[i][idx[j]];
        std::vector<std::string> labels;
        for (auto p : rref(lead).pivots)
          labels.push_back(ss.cell_labels_[n][idx[p]]);
        ss.inf_labels_[{s, n - s}] = std::move(labels);
      }
      break;
    }
    // d_r on representatives.
    for (const auto &[sn, e] : cur) {
      auto [s, n] = sn;
      if (n + 1 > nmax)
        continue;
      auto tgt = cur.find({s + r, n + 1});
      if (tgt == cur.end())
        continue;
      const auto &te = tgt->second;
      std::vector<RatVector> cols = te.reps;
      cols.insert(cols.end(), te.bspan.begin(), te.bspan.end());
      QMatrix basis = QMatrix::from_columns(ss.cells_[n + 1].size(), cols);
      QMatrix d(te.reps.size(), e.reps.size());
      bool nonzero = false;
      for (std::size_t j = 0; j < e.reps.size(); ++j) {
        RatVector y = ss.D_[n].apply(e.reps[j]), x;
        if (!solve(basis, y, x))
          throw std::logic_error("d_r image left Z_r");
        for (std::size_t i = 0; i < te.reps.size(); ++i) {
          d(i, j) = x[i];
          nonzero = nonzero || !x[i].is_zero();
        }
      }
      if (nonzero)
        ss.diffs_.emplace(std::make_tuple(r, s, n - s), std::move(d));
    }
  }

  // dim E_{r+1} = dim E_r - rank(d_r out) - rank(d_r in).
  for (int r = 2; r < last; ++r)
    for (int n = 0; n <= bound; ++n)
      for (int s = 0; s <= n; ++s) {
        const int t = n - s;
        auto get = [&](int rr, int ss_, int tt) {
          auto it = dims.find({rr, ss_, tt});
          return it == dims.end() ? 0L : it->second;
        };
        long out = 0, in = 0;
        if (auto it = ss.diffs_.find({r, s, t}); it != ss.diffs_.end())
          out = static_cast<long>(rank(it->second));
        if (auto it = ss.diffs_.find({r, s - r, t + r - 1}); it != ss.diffs_.end())
          in = static_cast<long>(rank(it->second));
        if (get(r + 1, s, t) != get(r, s, t) - out - in)
          throw std::logic_error("page bookkeeping failed at E_" +
                                 std::to_string(r + 1) + "^{" +
                                 std::to_string(s) + "," + std::to_string(t) +
                                 "}");
      }

  for (int n = 0; n <= bound; ++n) {
    long sum = 0;
    for (int s = 0; s <= n; ++s) {
      auto it = dims.find({last, s, n - s});
      sum += it == dims.end() ? 0 : it->second;
    }
    if (sum != ss.total_[n])
      throw std::logic_error("E_infinity does not converge to H^" +
                             std::to_string(n) + "(C, D)");
  }

  ss.dims_ = std::move(dims);
  ss.last_page_ = last;
  ss.finished_ = true;
  return ss;
}

long SpectralSequence::dim(int r, int s, int t) const {
  if (s < 0 || t < 0 || s + t > bound_)
    return 0;
  if (r > last_page_)
    r = last_page_;
  if (!finished_ && r != 2)
    throw std::logic_error("spectral sequence has only E_2");
  auto it = dims_.find({r, s, t});
  return it == dims_.end() ? 0 : it->second;
}

long SpectralSequence::einfty(int s, int t) const {
  if (!finished_)
    throw std::logic_error("spectral sequence not run to E_infinity");
  return dim(last_page_, s, t);
}

const QMatrix *SpectralSequence::differential(int r, int s, int t) const {
  auto it = diffs_.find({r, s, t});
  return it == diffs_.end() ? nullptr : &it->second;
}

std::vector<std::pair<int, int>> SpectralSequence::support(int r, int n) const {
  std::vector<std::pair<int, int>> out;
  for (int s = 0; s <= n; ++s)
    if (dim(r, s, n - s) > 0)
      out.emplace_back(s, n - s);
  return out;
}

std::vector<std::string> SpectralSequence::e2_labels(int s, int t) const {
  std::vector<std::string> out;
  const int n = s + t;
  if (n < 0 || n >= static_cast<int>(cells_.size()))
    return out;
  for (std::size_t j = 0; j < cells_[n].size(); ++j)
    if (cells_[n][j].s == s)
      out.push_back(cell_labels_[n][j]);
  return out;
}

long SpectralSequence::total_dim(int n) const {
  if (n < 0 || n > bound_)
    throw std::out_of_range("total degree outside the computed window");
  return total_[n];
}

std::vector<Summand> SpectralSequence::total_space_cohomology(int n) const {
  if (!finished_)
    throw std::logic_error("spectral sequence not run to E_infinity");
  if (n < 0 || n > bound_)
    throw std::out_of_range("total degree outside the computed window");
  std::vector<Summand> out;
  for (int s = n; s >= 0; --s) {
    const int t = n - s;
    long d = einfty(s, t);
    if (d == 0)
      continue;
    auto it = inf_labels_.find({s, t});
    out.push_back({s, t, d,
                   it == inf_labels_.end() ? std::vector<std::string>{}
                                           : it->second});
  }
  std::sort(out.begin(), out.end(),
            [](const Summand &a, const Summand &b) { return a.s < b.s; });
  return out;
}

} // namespace qtower

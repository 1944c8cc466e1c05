#include "qtower/manifold.hpp"

#include "qtower/errors.hpp"

#include "third_party/toml.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace qtower {

int ManifoldFile::dimension() const {
  return dim ? *dim : std::max(betti.top_degree(), 0);
}

StructureQuery ManifoldFile::query(int level, int bundle_level) const {
  StructureQuery q;
  q.level = level;
  q.bundle_level = bundle_level;
  q.betti = betti;
  q.declared = classes;
  return q;
}

namespace {

class Reader {
public:
  explicit Reader(std::string origin) : origin_(std::move(origin)) {}

  [[noreturn]] void fail(const toml::node &n, const std::string &msg) const {
    fail_at(n.source(), msg);
  }
  [[noreturn]] void fail_at(const toml::source_region &src,
                            const std::string &msg) const {
    std::ostringstream os;
    os << origin_;
    if (src.begin.line > 0)
      os << ':' << src.begin.line << ':' << src.begin.column;
    os << ": " << msg;
    throw validation_error(os.str());
  }

  int degree_key(const toml::key &k, const toml::node &where) const {
    const std::string s(k.str());
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) {
          return std::isdigit(c) != 0;
        }) || s.size() > 4)
      fail_at(k.source().begin.line ? k.source() : where.source(),
              "degree key \"" + s + "\" is not a non-negative integer");
    return std::stoi(s);
  }

  long integer(const toml::node &n, const std::string &what) const {
    if (n.is_floating_point())
      fail(n, what + " must be an exact integer, not a float");
    auto v = n.value<int64_t>();
    if (!n.is_integer() || !v)
      fail(n, what + " must be an integer");
    return static_cast<long>(*v);
  }

  Rat rational(const toml::node &n, const std::string &what) const {
    if (n.is_integer())
      return Rat(static_cast<long>(*n.value<int64_t>()));
    if (n.is_string()) {
      try {
        return Rat::parse(*n.value<std::string>());
      } catch (const std::invalid_argument &) {
      }
    }
    fail(n, what + " must be an integer or an \"a/b\" string");
  }

  const std::string &origin() const { return origin_; }

private:
  std::string origin_;
};

RatVector coordinates(const Reader &rd, const toml::array &arr,
                      std::size_t len, const std::string &what) {
  if (arr.size() != len)
    rd.fail(arr, what + " needs " + std::to_string(len) + " coordinates, got " +
                     std::to_string(arr.size()));
  RatVector v;
  for (const auto &x : arr)
    v.push_back(rd.rational(x, what));
  return v;
}

} // namespace

ManifoldFile parse_manifold_text(std::string_view text,
                                 const std::string &origin) {
  toml::table root;
  try {
    root = toml::parse(text, origin);
  } catch (const toml::parse_error &e) {
    std::ostringstream os;
    os << origin << ':' << e.source().begin.line << ':'
       << e.source().begin.column << ": " << e.description();
    throw parse_error(os.str());
  }
  Reader rd(origin);
  ManifoldFile mf;
  mf.origin = origin;

  for (const auto &[k, v] : root) {
    static const char *known[] = {"name", "betti", "dim", "algebra", "classes"};
    if (std::find(std::begin(known), std::end(known), k.str()) == std::end(known))
      rd.fail_at(k.source(), "unknown key '" + std::string(k.str()) + "'");
  }

  if (auto *n = root.get("name")) {
    if (!n->is_string())
      rd.fail(*n, "name must be a string");
    mf.name = *n->value<std::string>();
  } else {
    auto slash = origin.find_last_of('/');
    mf.name = origin.substr(slash == std::string::npos ? 0 : slash + 1);
    if (auto dot = mf.name.rfind('.'); dot != std::string::npos && dot > 0)
      mf.name.resize(dot);
  }

  auto *betti = root.get("betti");
  if (!betti)
    rd.fail_at(root.source(), "missing required table 'betti'");
  if (!betti->is_table())
    rd.fail(*betti, "betti must be a table of degree = dimension");
  for (const auto &[k, v] : *betti->as_table()) {
    const int d = rd.degree_key(k, v);
    const long n = rd.integer(v, "betti[\"" + std::string(k.str()) + "\"]");
    if (n < 0)
      rd.fail(v, "betti[\"" + std::string(k.str()) + "\"] is negative");
    mf.betti.set(d, n);
  }
  if (mf.betti.at(0) != 1)
    rd.fail(*betti, "betti[\"0\"] must be 1");

  if (auto *n = root.get("dim")) {
    const long d = rd.integer(*n, "dim");
    if (d < mf.betti.top_degree())
      rd.fail(*n, "dim " + std::to_string(d) +
                      " is below the top nonzero Betti degree " +
                      std::to_string(mf.betti.top_degree()));
    mf.dim = static_cast<int>(d);
  }

  if (auto *alg = root.get("algebra")) {
    if (!alg->is_table())
      rd.fail(*alg, "algebra must be a table");
    const auto &at = *alg->as_table();
    for (const auto &[k, v] : at) {
      if (k.str() != "max_degree" && k.str() != "basis" && k.str() != "products")
        rd.fail_at(k.source(), "unknown key 'algebra." + std::string(k.str()) + "'");
    }
    int maxd = std::max(mf.betti.top_degree(), 0);
    if (auto *m = at.get("max_degree")) {
      const long v = rd.integer(*m, "algebra.max_degree");
      if (v < mf.betti.top_degree())
        rd.fail(*m, "algebra.max_degree is below the top nonzero Betti degree");
      maxd = static_cast<int>(v);
    }
    BasePresentation bp(maxd);
    auto *basis = at.get("basis");
    if (!basis || !basis->is_table())
      rd.fail(basis ? *basis : *alg, "algebra.basis must be a table");
    std::map<int, const toml::node *> seen;
    for (const auto &[k, v] : *basis->as_table()) {
      const int d = rd.degree_key(k, v);
      if (!v.is_array())
        rd.fail(v, "algebra.basis[\"" + std::string(k.str()) +
                       "\"] must be a list of names");
      std::vector<std::string> names;
      for (const auto &x : *v.as_array()) {
        if (!x.is_string())
          rd.fail(x, "basis names must be strings");
        names.push_back(*x.value<std::string>());
      }
      if (d > maxd)
        rd.fail(v, "basis degree " + std::to_string(d) +
                       " is above algebra.max_degree");
      if (static_cast<long>(names.size()) != mf.betti.at(d))
        rd.fail(v, "basis in degree " + std::to_string(d) + " has " +
                       std::to_string(names.size()) + " elements but betti says " +
                       std::to_string(mf.betti.at(d)));
      try {
        bp.set_basis(d, std::move(names));
      } catch (const Error &e) {
        rd.fail(v, e.what());
      }
      seen[d] = &v;
    }
    for (const auto &[d, n] : mf.betti.entries())
      if (d > 0 && !seen.count(d))
        rd.fail(*basis, "algebra.basis lacks degree " + std::to_string(d) +
                            " (betti " + std::to_string(n) + ")");

    if (auto *prods = at.get("products")) {
      if (!prods->is_array())
        rd.fail(*prods, "algebra.products must be a list of triples");
      for (const auto &entry : *prods->as_array()) {
        const auto *tri = entry.as_array();
        if (!tri || tri->size() != 3)
          rd.fail(entry, "each product must be [left, right, value]");
        auto operand = [&](const toml::node &x) {
          if (!x.is_string())
            rd.fail(x, "product operands must be basis names");
          auto hit = bp.find(*x.value<std::string>());
          if (!hit)
            rd.fail(x, "unknown basis element '" + *x.value<std::string>() + "'");
          return *hit;
        };
        auto [dl, il] = operand(*tri->get(0));
        auto [dr, ir] = operand(*tri->get(1));
        const int dk = dl + dr;
        const auto &val = *tri->get(2);
        RatVector v(dk <= maxd ? bp.dim(dk) : 0);
        if (val.is_array()) {
          v = coordinates(rd, *val.as_array(), v.size(), "product value");
        } else if (val.is_string()) {
          std::string s = *val.value<std::string>();
          bool neg = !s.empty() && s[0] == '-';
          if (neg)
            s.erase(0, 1);
          if (s != "0") {
            auto hit = bp.find(s);
            if (!hit || hit->first != dk)
              rd.fail(val, "product value '" + s + "' is not a basis element "
                           "of degree " + std::to_string(dk));
            v[hit->second] = neg ? Rat(-1) : Rat(1);
          }
        } else if (val.is_integer() && *val.value<int64_t>() == 0) {
          // explicit zero
        } else {
          rd.fail(val, "product value must be a basis name, \"0\" or coordinates");
        }
        if (dk > maxd)
          continue;
        try {
          bp.add_product(dl, il, dr, ir, v);
        } catch (const Error &e) {
          rd.fail(entry, e.what());
        }
      }
    }
    mf.presentation = std::move(bp);
    mf.has_algebra = true;
  } else {
    mf.presentation = BasePresentation::from_betti(mf.betti, 0);
  }

  if (auto *cls = root.get("classes")) {
    if (!cls->is_table())
      rd.fail(*cls, "classes must be a table");
    for (const auto &[k, v] : *cls->as_table()) {
      const std::string name(k.str());
      if (name.size() < 2 || name[0] != 'p' ||
          !std::all_of(name.begin() + 1, name.end(),
                       [](unsigned char c) { return std::isdigit(c) != 0; }) ||
          name.size() > 4 || name[1] == '0')
        rd.fail_at(k.source(), "class '" + name +
                                   "' is not a Pontrjagin class p<i>");
      const int deg = 4 * std::stoi(name.substr(1));
      const std::size_t len =
          deg <= mf.presentation.max_degree() ? mf.presentation.dim(deg) : 0;
      if (v.is_string()) {
        const std::string s = *v.value<std::string>();
        if (s == "zero") {
          mf.classes[name] = ClassStatus::zero;
          mf.presentation.set_class(name, deg, RatVector(len));
        } else if (s == "nonzero") {
          if (len == 0)
            rd.fail(v, name + " cannot be nonzero: b" + std::to_string(deg) +
                           " = 0");
          mf.classes[name] = ClassStatus::nonzero;
        } else if (s == "unknown") {
          mf.classes[name] = ClassStatus::unknown;
        } else {
          rd.fail(v, "class status must be \"zero\", \"nonzero\", \"unknown\" "
                     "or a coordinate list");
        }
      } else if (v.is_array()) {
        RatVector c = coordinates(rd, *v.as_array(), len, "class " + name);
        bool zero = std::all_of(c.begin(), c.end(),
                                [](const Rat &x) { return x.is_zero(); });
        mf.classes[name] = zero ? ClassStatus::zero : ClassStatus::nonzero;
        mf.presentation.set_class(name, deg, std::move(c));
      } else {
        rd.fail(v, "class " + name + " must be a status string or coordinates");
      }
    }
  }
  return mf;
}

ManifoldFile parse_manifold(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw parse_error(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_manifold_text(ss.str(), path);
}

} // namespace qtower

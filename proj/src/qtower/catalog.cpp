#include "qtower/catalog.hpp"

#include "qtower/errors.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace qtower {

EMProduct::EMProduct(std::initializer_list<int> degrees) {
  for (int d : degrees)
    add(d);
}

void EMProduct::add(int degree, int multiplicity) {
  if (degree < 1 || multiplicity < 0)
    throw std::invalid_argument("EMProduct: degree must be >= 1");
  if (multiplicity > 0)
    factors_[degree] += multiplicity;
}

int EMProduct::multiplicity(int degree) const {
  auto it = factors_.find(degree);
  return it == factors_.end() ? 0 : it->second;
}

std::vector<int> EMProduct::degrees() const {
  std::vector<int> out;
  for (const auto &[d, m] : factors_)
    out.insert(out.end(), static_cast<std::size_t>(m), d);
  return out;
}

std::string EMProduct::str() const {
  if (factors_.empty())
    return "*";
  std::string out;
  for (const auto &[d, m] : factors_) {
    if (!out.empty())
      out += " x ";
    out += "K(Q," + std::to_string(d) + ")";
    if (m > 1)
      out += "^" + std::to_string(m);
  }
  return out;
}

EMProduct classifying_space(const EMProduct &e) {
  EMProduct out;
  for (const auto &[d, m] : e.factors())
    out.add(d + 1, m);
  if (e.exact_through() != EMProduct::complete)
    out.set_exact_through(e.exact_through() + 1);
  return out;
}

EMProduct cover(const EMProduct &e, int k) {
  if (k < 0)
    throw std::invalid_argument("cover: negative level");
  EMProduct out;
  for (const auto &[d, m] : e.factors())
    if (d >= k)
      out.add(d, m);
  out.set_exact_through(e.exact_through());
  return out;
}

namespace {

struct FamilyName {
  const char *name;
  Family family;
};

constexpr FamilyName kFamilies[] = {
    {"so", Family::SO},
    {"spin", Family::Spin},
    {"spinpq", Family::SpinPQ},
    {"stableo", Family::StableO},
    {"string", Family::String},
    {"fivebrane", Family::Fivebrane},
    {"twospin", Family::TwoSpin},
    {"2spin", Family::TwoSpin},
    {"ninebrane", Family::Ninebrane},
    {"e8", Family::E8},
};

const char *family_name(Family f) {
  switch (f) {
  case Family::SO: return "so";
  case Family::Spin: return "spin";
  case Family::SpinPQ: return "spinpq";
  case Family::StableO: return "stableO";
  case Family::String: return "string";
  case Family::Fivebrane: return "fivebrane";
  case Family::TwoSpin: return "twospin";
  case Family::Ninebrane: return "ninebrane";
  case Family::E8: return "e8";
  }
  return "?";
}

bool is_named_cover(Family f) {
  return f == Family::String || f == Family::Fivebrane ||
         f == Family::TwoSpin || f == Family::Ninebrane;
}

int parse_int(std::string_view s, std::string_view whole) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
    throw groupspec_error("bad number '" + std::string(s) + "' in group spec '" +
                          std::string(whole) + "'\n" + catalog_listing());
  return v;
}

[[noreturn]] void bad_spec(std::string_view whole, const std::string &why) {
  throw groupspec_error("unknown group spec '" + std::string(whole) + "': " +
                        why + "\n" + catalog_listing());
}

// Degrees of the stable orthogonal group's rational homotopy, 3 mod 4.
EMProduct stable_type(int max_degree) {
  EMProduct e;
  for (int d = 3; d <= max_degree; d += 4)
    e.add(d);
  e.set_exact_through(std::max(max_degree, 0));
  return e;
}

EMProduct truncate(const EMProduct &e, int max_degree) {
  EMProduct out;
  bool dropped = false;
  for (const auto &[d, m] : e.factors()) {
    if (d <= max_degree)
      out.add(d, m);
    else
      dropped = true;
  }
  int exact = e.exact_through();
  if (dropped)
    exact = std::min(exact, max_degree);
  out.set_exact_through(exact);
  return out;
}

int effective_cover(const GroupSpec &g) {
  return std::max(g.cover_level, family_cover_level(g.family));
}

// Group-level type before covering, valid through `max_degree`.
EMProduct uncovered_group_type(const GroupSpec &g, int max_degree) {
  switch (g.family) {
  case Family::SO:
  case Family::Spin:
    return spin_type(*g.rank);
  case Family::SpinPQ: {
    EMProduct e = spin_type(g.p);
    const EMProduct second = spin_type(g.q);
    for (const auto &[d, m] : second.factors())
      e.add(d, m);
    return e;
  }
  case Family::StableO:
    return stable_type(max_degree);
  case Family::String:
  case Family::Fivebrane:
  case Family::TwoSpin:
  case Family::Ninebrane:
    return g.rank ? spin_type(*g.rank) : stable_type(max_degree);
  case Family::E8: {
    // Only the degrees 3 and 15 are carried; 15 is the last certified one.
    EMProduct e{3, 15};
    e.set_exact_through(15);
    return e;
  }
  }
  return {};
}

} // namespace

int family_cover_level(Family f) {
  switch (f) {
  case Family::String: return 4;
  case Family::Fivebrane: return 8;
  case Family::TwoSpin: return 11;
  case Family::Ninebrane: return 12;
  default: return 0;
  }
}

std::string catalog_listing() {
  return "catalog: so:N, spin:N (N >= 2), spinpq:P,Q, stableO, string[:N], "
         "fivebrane[:N], twospin[:N], ninebrane[:N], e8; optional cover "
         "suffix <K> on so/spin/spinpq/stableO/e8; prefix 'b' for the "
         "classifying space (e.g. bspin:7, bstring)";
}

GroupSpec GroupSpec::parse(std::string_view text) {
  std::string lower;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c)))
      lower += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  std::string_view s = lower;
  if (s.empty())
    bad_spec(text, "empty");

  GroupSpec g;
  std::optional<int> cover;
  if (auto lt = s.find('<'); lt != std::string_view::npos) {
    if (s.back() != '>')
      bad_spec(text, "cover suffix must look like <K>");
    cover = parse_int(s.substr(lt + 1, s.size() - lt - 2), text);
    s = s.substr(0, lt);
  }
  std::string_view fam = s, args;
  if (auto colon = s.find(':'); colon != std::string_view::npos) {
    fam = s.substr(0, colon);
    args = s.substr(colon + 1);
    if (args.empty())
      bad_spec(text, "missing rank after ':'");
  }

  auto lookup = [](std::string_view name) -> std::optional<Family> {
    for (const auto &f : kFamilies)
      if (name == f.name)
        return f.family;
    return std::nullopt;
  };
  auto fam_id = lookup(fam);
  if (!fam_id && fam.size() > 1 && fam.front() == 'b') {
    fam_id = lookup(fam.substr(1));
    g.classifying = fam_id.has_value();
  }
  if (!fam_id)
    bad_spec(text, "unknown family '" + std::string(fam) + "'");
  g.family = *fam_id;

  switch (g.family) {
  case Family::SO:
  case Family::Spin:
    if (args.empty())
      bad_spec(text, "rank required");
    g.rank = parse_int(args, text);
    if (*g.rank < 2)
      bad_spec(text, "rank must be >= 2");
    break;
  case Family::SpinPQ: {
    auto comma = args.find(',');
    if (comma == std::string_view::npos)
      bad_spec(text, "signature must be P,Q");
    g.p = parse_int(args.substr(0, comma), text);
    g.q = parse_int(args.substr(comma + 1), text);
    if (g.p < 0 || g.q < 0)
      bad_spec(text, "signature entries must be >= 0");
    break;
  }
  case Family::StableO:
  case Family::E8:
    if (!args.empty())
      bad_spec(text, "this family takes no rank");
    break;
  default:
    if (!args.empty()) {
      g.rank = parse_int(args, text);
      if (*g.rank < 2)
        bad_spec(text, "rank must be >= 2");
    }
    break;
  }
  if (cover) {
    if (is_named_cover(g.family))
      bad_spec(text, "named covers fix their own level");
    if (*cover < 0)
      bad_spec(text, "cover level must be >= 0");
    g.cover_level = *cover;
  }
  return g;
}

std::string GroupSpec::str() const {
  std::string out = classifying ? "b" : "";
  out += family_name(family);
  if (family == Family::SpinPQ)
    out += ":" + std::to_string(p) + "," + std::to_string(q);
  else if (rank)
    out += ":" + std::to_string(*rank);
  if (cover_level > 0)
    out += "<" + std::to_string(cover_level) + ">";
  return out;
}

bool GroupSpec::has_definite_rank() const {
  return family == Family::SpinPQ || rank.has_value();
}

EMProduct spin_type(int n) {
  EMProduct e;
  if (n < 2)
    return e;
  const int m = n / 2;
  if (n % 2 == 1) {
    for (int i = 1; i <= m; ++i)
      e.add(4 * i - 1);
  } else {
    for (int i = 1; 4 * i - 1 <= 4 * m - 5; ++i)
      e.add(4 * i - 1);
    e.add(2 * m - 1);
  }
  return e;
}

EMProduct rational_type(const GroupSpec &g, int max_degree) {
  if (max_degree < 1)
    throw std::invalid_argument("rational_type: max_degree must be >= 1");
  EMProduct e = cover(uncovered_group_type(g, max_degree), effective_cover(g));
  if (g.classifying)
    e = classifying_space(e);
  return truncate(e, max_degree);
}

int triviality_threshold(int n) {
  if (n < 2)
    return 0;
  if (n == 2)
    return 2; // Spin(2) is a circle: only degree 1 survives
  return 4 * ((n - 1) / 2);
}

TrivialityVerdict is_rationally_trivial(const GroupSpec &g) {
  if (!g.has_definite_rank())
    throw precondition_error("triviality threshold needs a definite rank; '" +
                             g.str() + "' is stable or exceptional");
  TrivialityVerdict v;
  v.cover_level = effective_cover(g);
  v.threshold = g.family == Family::SpinPQ
                    ? std::max(triviality_threshold(g.p),
                               triviality_threshold(g.q))
                    : triviality_threshold(*g.rank);
  v.trivial = v.cover_level >= v.threshold;
  return v;
}

IndefiniteSplit split_indefinite(int p, int q, int k, int max_degree) {
  if (p < 0 || q < 0 || k < 0)
    throw std::invalid_argument("split_indefinite: negative argument");
  IndefiniteSplit out;
  out.first = truncate(cover(spin_type(p), k), max_degree);
  out.second = truncate(cover(spin_type(q), k), max_degree);
  out.first_trivial = k >= triviality_threshold(p);
  out.second_trivial = k >= triviality_threshold(q);
  out.product_threshold = 4 * ((std::min(p, q) - 1) / 2);
  if (std::min(p, q) < 1)
    out.product_threshold = 0;
  out.product_regime = k < out.product_threshold;
  return out;
}

EMProduct whitehead_fiber(int level) {
  if (level < 4 || level % 4 != 0)
    throw std::invalid_argument("whitehead_fiber: level must be 4, 8, 12, ...");
  // BO<k> is B(O<k-1>): the classifying type with degrees >= k.
  GroupSpec lower{Family::StableO, std::nullopt, 0, 0, level - 5, true};
  GroupSpec upper{Family::StableO, std::nullopt, 0, 0, level - 1, true};
  if (level == 4)
    lower.cover_level = 0;
  EMProduct below = rational_type(lower, level + 4);
  EMProduct above = rational_type(upper, level + 4);
  EMProduct fiber;
  for (const auto &[d, m] : below.factors())
    if (m > above.multiplicity(d) && d > 1)
      fiber.add(d - 1, m - above.multiplicity(d));
  return fiber;
}

namespace {

void append_factor_generators(std::vector<Generator> &out, int rank,
                              int group_cover, const std::string &suffix,
                              int max_degree) {
  const bool covered = group_cover > 0;
  const int m = rank / 2;
  const int top_p = rank % 2 == 1 ? m : m - 1;
  for (int i = 1; i <= top_p; ++i) {
    const int deg = 4 * i;
    if (deg - 1 < group_cover || deg > max_degree)
      continue;
    out.push_back({(covered ? "x" + std::to_string(deg)
                            : "p" + std::to_string(i)) + suffix,
                   deg});
  }
  if (rank % 2 == 0 && rank >= 2) {
    const int deg = rank;
    if (deg - 1 >= group_cover && deg <= max_degree)
      out.push_back({(covered ? "chi" + std::to_string(deg) : std::string("e")) +
                         suffix,
                     deg});
  }
}

} // namespace

GeneratorSet bcohomology_generators(const GroupSpec &g, int max_degree) {
  const int k = effective_cover(g);
  std::vector<Generator> gens;
  switch (g.family) {
  case Family::SO:
  case Family::Spin:
    append_factor_generators(gens, *g.rank, k, "", max_degree);
    break;
  case Family::SpinPQ:
    append_factor_generators(gens, g.p, k, "", max_degree);
    append_factor_generators(gens, g.q, k, "'", max_degree);
    break;
  case Family::E8:
    for (int d : {4, 16})
      if (d - 1 >= k && d <= max_degree)
        gens.push_back({(k > 0 ? "x" : "y") + std::to_string(d), d});
    break;
  default:
    if (g.rank) {
      append_factor_generators(gens, *g.rank, k, "", max_degree);
    } else {
      for (int i = 1; 4 * i <= max_degree; ++i)
        if (4 * i - 1 >= k)
          gens.push_back({(k > 0 ? "x" + std::to_string(4 * i)
                                 : "p" + std::to_string(i)),
                          4 * i});
    }
    break;
  }
  std::stable_sort(gens.begin(), gens.end(),
                   [](const Generator &a, const Generator &b) {
                     return a.degree < b.degree;
                   });
  return GeneratorSet(std::move(gens));
}

} // namespace qtower

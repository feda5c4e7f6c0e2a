#include "germkit/germ_rules.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <regex>
#include <set>
#include <sstream>

#include "germkit/errors.hpp"
#include "text_util.hpp"

namespace germkit {

namespace {

struct TypeName {
  ComponentType type;
  std::string_view canonical;
  std::string_view alias;
};

constexpr TypeName kTypeNames[] = {
    {ComponentType::k1A, "k1A", "k1A"},       {ComponentType::k2A, "k2A", "k2A"},
    {ComponentType::cD2, "cD/2", "cD2"},      {ComponentType::cAx2, "cAx/2", "cAx2"},
    {ComponentType::cE2, "cE/2", "cE2"},      {ComponentType::cD3, "cD/3", "cD3"},
    {ComponentType::IIA, "IIA", "IIA"},       {ComponentType::IIdual, "IIdual", "II^vee"},
    {ComponentType::IEdual, "IEdual", "IE^vee"}, {ComponentType::IDdual, "IDdual", "ID^vee"},
    {ComponentType::IC, "IC", "IC"},          {ComponentType::IIB, "IIB", "IIB"},
    {ComponentType::kAD, "kAD", "kAD"},       {ComponentType::k3A, "k3A", "k3A"},
};

using Counts = std::map<ComponentType, std::int64_t>;

std::int64_t count(const Counts& c, ComponentType t) {
  auto it = c.find(t);
  return it == c.end() ? 0 : it->second;
}

// Exactly `lead_count` components of `lead` and every other component in `rest`.
bool lead_plus_rest(const Counts& c, ComponentType lead, std::int64_t lead_count,
                    std::initializer_list<ComponentType> rest) {
  if (count(c, lead) != lead_count) return false;
  for (const auto& [t, k] : c) {
    if (t == lead) continue;
    if (std::find(rest.begin(), rest.end(), t) == rest.end()) return false;
  }
  return true;
}

bool only(const Counts& c, ComponentType t) { return c.size() == 1 && c.begin()->first == t; }

struct QuotientTag {
  std::int64_t n;
  std::vector<std::int64_t> weights;
};

std::optional<QuotientTag> parse_numeric_quotient(const std::string& tag) {
  static const std::regex re(R"(^1/(\d+)\((-?\d+),(-?\d+),(-?\d+)\)$)");
  std::smatch m;
  if (!std::regex_match(tag, m, re)) return std::nullopt;
  QuotientTag q;
  q.n = std::stoll(m[1].str());
  if (q.n < 2) return std::nullopt;
  for (int i = 2; i <= 4; ++i) q.weights.push_back(mod_pos(std::stoll(m[i].str()), q.n));
  return q;
}

bool is_ic_point(const NonGorPoint& p) {
  const std::int64_t m = p.index;
  if (m < 5 || m % 2 == 0) return false;
  if (p.tag == "1/m(2,m-2,1)") return true;
  auto q = parse_numeric_quotient(p.tag);
  return q && q->n == m && q->weights == std::vector<std::int64_t>{2 % m, m - 2, 1};
}

bool is_odd_cyclic_point(const NonGorPoint& p) {
  const std::int64_t n = p.index;
  if (n < 3 || n % 2 == 0) return false;
  if (p.tag == "1/(2k-1)(1,-1,k)") return true;
  auto q = parse_numeric_quotient(p.tag);
  return q && q->n == n && q->weights == std::vector<std::int64_t>{1, n - 1, (n + 1) / 2};
}

bool is_half_point(const NonGorPoint& p) { return p.index == 2 && p.tag == "1/2(1,1,1)"; }

bool is_cam_point(const NonGorPoint& p) { return p.tag == "cA/m" || p.tag == "cA/" + std::to_string(p.index); }

bool tag_with_index(const NonGorPoint& p, std::string_view tag, std::int64_t index) {
  return p.index == index && p.tag == tag;
}

using PointCheck = std::function<std::optional<std::string>(const std::vector<NonGorPoint>&, const Counts&)>;

PointCheck single_point(std::function<bool(const NonGorPoint&)> ok, std::string what) {
  return [ok, what](const std::vector<NonGorPoint>& pts, const Counts&) -> std::optional<std::string> {
    if (pts.size() != 1) {
      return "needs exactly one non-Gorenstein point (" + what + "), got " + std::to_string(pts.size());
    }
    if (!ok(pts[0])) return "point '" + pts[0].tag + "' of index " + std::to_string(pts[0].index) + " is not " + what;
    return std::nullopt;
  };
}

PointCheck two_points(std::function<bool(const NonGorPoint&)> first, std::function<bool(const NonGorPoint&)> second,
                      std::string what) {
  return [first, second, what](const std::vector<NonGorPoint>& pts, const Counts&) -> std::optional<std::string> {
    if (pts.size() != 2) {
      return "needs exactly two non-Gorenstein points (" + what + "), got " + std::to_string(pts.size());
    }
    if ((first(pts[0]) && second(pts[1])) || (first(pts[1]) && second(pts[0]))) return std::nullopt;
    return "points do not match " + what;
  };
}

struct KindBound {
  bool allowed = false;
  std::optional<std::int64_t> max_n;  // empty = unconstrained
};

struct RowSpec {
  int row;
  std::function<bool(const Counts&, std::int64_t gorenstein)> matches;
  KindBound f, d, cb;
  PointCheck points;
  std::vector<std::string> notes;
};

KindBound upto(std::int64_t n) { return {true, n}; }
KindBound any_n() { return {true, std::nullopt}; }
KindBound none() { return {}; }

const std::vector<RowSpec>& rows() {
  using T = ComponentType;
  static const std::vector<RowSpec> table = {
      {1, [](const Counts& c, std::int64_t g) { return c.empty() && g > 0; }, none(), none(), upto(2),
       [](const std::vector<NonGorPoint>& pts, const Counts&) -> std::optional<std::string> {
         if (!pts.empty()) return "a Gorenstein germ has no non-Gorenstein points";
         return std::nullopt;
       },
       {}},
      {2,
       [](const Counts& c, std::int64_t g) {
         return g == 0 && (only(c, T::cAx2) || only(c, T::cD2) || only(c, T::cE2));
       },
       none(), none(), upto(2),
       [](const std::vector<NonGorPoint>& pts, const Counts& c) -> std::optional<std::string> {
         std::string want = std::string(to_string(c.begin()->first));
         return single_point([want](const NonGorPoint& p) { return tag_with_index(p, want, 2); }, want)(pts, c);
       },
       {}},
      {3, [](const Counts& c, std::int64_t g) { return g == 0 && only(c, T::cD3); }, upto(2), upto(4), upto(5),
       single_point([](const NonGorPoint& p) { return tag_with_index(p, "cD/3", 3); }, "cD/3"), {}},
      {4, [](const Counts& c, std::int64_t g) { return g == 0 && only(c, T::IIA); }, upto(4), upto(7), upto(7),
       single_point([](const NonGorPoint& p) { return tag_with_index(p, "cAx/4", 4); }, "cAx/4"), {}},
      {5, [](const Counts& c, std::int64_t g) { return g == 0 && only(c, T::IIdual) && count(c, T::IIdual) == 2; },
       none(), none(), upto(2),
       single_point([](const NonGorPoint& p) { return tag_with_index(p, "cAx/4", 4); }, "cAx/4"), {}},
      {6, [](const Counts& c, std::int64_t g) { return g == 0 && lead_plus_rest(c, T::IIdual, 1, {T::IIA}); },
       upto(2), upto(4), upto(5),
       single_point([](const NonGorPoint& p) { return tag_with_index(p, "cAx/4", 4); }, "cAx/4"), {}},
      {7, [](const Counts& c, std::int64_t g) { return g == 0 && lead_plus_rest(c, T::IIB, 1, {T::IIA}); },
       none(), upto(2), upto(3),
       single_point([](const NonGorPoint& p) { return tag_with_index(p, "cAx/4", 4); }, "cAx/4"), {}},
      {8, [](const Counts& c, std::int64_t g) { return g == 0 && lead_plus_rest(c, T::IC, 1, {T::k1A}); },
       upto(2), upto(4), upto(5), single_point(is_ic_point, "1/m(2,m-2,1) with m odd, m >= 5"), {}},
      {9, [](const Counts& c, std::int64_t g) { return g == 0 && only(c, T::k1A); }, any_n(), any_n(), any_n(),
       single_point(is_cam_point, "cA/m"), {"N unconstrained by the table"}},
      {10, [](const Counts& c, std::int64_t g) { return g == 0 && lead_plus_rest(c, T::k3A, 1, {T::k1A}); },
       none(), upto(2), upto(3), two_points(is_odd_cyclic_point, is_half_point, "1/(2k-1)(1,-1,k) and 1/2(1,1,1)"),
       {"consistent with the table; existence open"}},
      {11,
       [](const Counts& c, std::int64_t g) {
         return g == 0 && lead_plus_rest(c, T::kAD, 1, {T::k1A, T::cD2, T::cAx2});
       },
       upto(2), upto(4), upto(5),
       two_points(is_odd_cyclic_point,
                  [](const NonGorPoint& p) {
                    return p.index == 2 && (p.tag == "cA/2" || p.tag == "cAx/2" || p.tag == "cD/2");
                  },
                  "1/(2k-1)(1,-1,k) and one of cA/2, cAx/2, cD/2"),
       {}},
      {12,
       [](const Counts& c, std::int64_t g) { return g == 0 && count(c, T::k2A) >= 1 && lead_plus_rest(c, T::k2A, count(c, T::k2A), {T::k1A}); },
       any_n(), any_n(), any_n(),
       [](const std::vector<NonGorPoint>& pts, const Counts&) -> std::optional<std::string> {
         if (pts.size() < 2) return "needs at least two non-Gorenstein points";
         return std::nullopt;
       },
       {"N left open by the table"}},
  };
  return table;
}

const char* kind_word(GermKind k) {
  switch (k) {
    case GermKind::Flipping: return "flipping";
    case GermKind::Divisorial: return "divisorial";
    case GermKind::ConicBundle: return "Q-conic bundle";
  }
  return "";
}

}  // namespace

ComponentType parse_component_type(std::string_view s) {
  for (const auto& n : kTypeNames) {
    if (s == n.canonical || s == n.alias) return n.type;
  }
  throw InputError("unknown component type '" + std::string(s) + "'");
}

std::string_view to_string(ComponentType t) {
  for (const auto& n : kTypeNames) {
    if (n.type == t) return n.canonical;
  }
  return "?";
}

GermKind parse_germ_kind(std::string_view s) {
  if (s == "f") return GermKind::Flipping;
  if (s == "d") return GermKind::Divisorial;
  if (s == "cb") return GermKind::ConicBundle;
  throw InputError("kind must be f, d or cb, got '" + std::string(s) + "'");
}

std::string_view to_string(GermKind k) {
  switch (k) {
    case GermKind::Flipping: return "f";
    case GermKind::Divisorial: return "d";
    case GermKind::ConicBundle: return "cb";
  }
  return "?";
}

GermDescriptor parse_descriptor(std::string_view text) {
  GermDescriptor g;
  std::optional<GermKind> kind;
  for (const auto& [line, tok] : detail::directive_lines(text)) {
    try {
      if (tok[0] == "component") {
        if (tok.size() != 2 && tok.size() != 3) throw ParseError(line, "expected 'component <type> [curve=<id>]'");
        std::string curve;
        if (tok.size() == 3) {
          auto kv = detail::split_key_value(tok[2]);
          if (!kv || kv->first != "curve" || kv->second.empty()) throw ParseError(line, "expected curve=<id>");
          curve = kv->second;
        }
        if (tok[1] == "gorenstein") {
          if (!curve.empty()) throw ParseError(line, "gorenstein components take no curve=");
          ++g.gorenstein_components;
        } else {
          g.components.push_back(parse_component_type(tok[1]));
          g.curves.push_back(curve);
        }
      } else if (tok[0] == "kind") {
        if (tok.size() != 2) throw ParseError(line, "expected 'kind f|d|cb'");
        if (kind) throw ParseError(line, "kind given twice");
        kind = parse_germ_kind(tok[1]);
      } else if (tok[0] == "point") {
        std::optional<std::int64_t> index, ell;
        std::optional<std::string> tag;
        for (std::size_t i = 1; i < tok.size(); ++i) {
          auto kv = detail::split_key_value(tok[i]);
          if (!kv) throw ParseError(line, "expected key=value, got '" + tok[i] + "'");
          if (kv->first == "index" && !index) {
            index = detail::parse_int(kv->second);
            if (!index) throw ParseError(line, "index must be an integer");
          } else if (kv->first == "ell" && !ell) {
            ell = detail::parse_int(kv->second);
            if (!ell) throw ParseError(line, "ell must be an integer");
          } else if (kv->first == "tag" && !tag) {
            tag = kv->second;
          } else {
            throw ParseError(line, "unexpected attribute '" + kv->first + "'");
          }
        }
        if (!index || !tag) throw ParseError(line, "point needs index= and tag=");
        g.points.push_back(NonGorPoint::make(*index, *tag, ell));
      } else {
        throw ParseError(line, "unknown keyword '" + tok[0] + "'");
      }
    } catch (const ParseError&) {
      throw;
    } catch (const InputError& e) {
      throw ParseError(line, e.what());
    }
  }
  if (!kind) throw ParseError(1, "descriptor needs a 'kind' line");
  g.kind = *kind;
  if (g.n() < 1) throw ParseError(1, "descriptor needs at least one component");
  return g;
}

std::string to_text(const GermDescriptor& g) {
  std::ostringstream out;
  for (std::size_t i = 0; i < g.components.size(); ++i) {
    out << "component " << to_string(g.components[i]);
    if (i < g.curves.size() && !g.curves[i].empty()) out << " curve=" << g.curves[i];
    out << "\n";
  }
  for (std::int64_t i = 0; i < g.gorenstein_components; ++i) out << "component gorenstein\n";
  out << "kind " << to_string(g.kind) << "\n";
  for (const auto& p : g.points) {
    out << "point index=" << p.index << " tag=" << p.tag;
    if (p.ell) out << " ell=" << *p.ell;
    out << "\n";
  }
  return out.str();
}

std::string_view to_string(Citation c) {
  switch (c) {
    case Citation::IcMeetsK2aExcluded: return "an IC component cannot meet a k2A component";
    case Citation::KadK3aMeetsK2aExcluded: return "a kAD or k3A component cannot meet a k2A component";
    case Citation::IIdualMeetsIIBExcluded: return "a II^dual component cannot meet a IIB component";
    case Citation::ClassificationTable: return "classification table";
  }
  return "";
}

std::string_view citation_key(Citation c) {
  switch (c) {
    case Citation::IcMeetsK2aExcluded: return "ic-k2a";
    case Citation::KadK3aMeetsK2aExcluded: return "kad-k3a-k2a";
    case Citation::IIdualMeetsIIBExcluded: return "iidual-iib";
    case Citation::ClassificationTable: return "table";
  }
  return "";
}

std::optional<Citation> forbidden_pair(ComponentType a, ComponentType b) {
  using T = ComponentType;
  auto is = [&](T x, T y) { return (a == x && b == y) || (a == y && b == x); };
  if (is(T::IC, T::k2A)) return Citation::IcMeetsK2aExcluded;
  if (is(T::k2A, T::kAD) || is(T::k2A, T::k3A)) return Citation::KadK3aMeetsK2aExcluded;
  if (is(T::IIdual, T::IIB)) return Citation::IIdualMeetsIIBExcluded;
  return std::nullopt;
}

TableVerdict validate_against_table(const GermDescriptor& g) {
  TableVerdict v;
  Counts counts;
  for (auto t : g.components) ++counts[t];

  for (auto it = counts.begin(); it != counts.end(); ++it) {
    for (auto jt = std::next(it); jt != counts.end(); ++jt) {
      if (auto c = forbidden_pair(it->first, jt->first)) {
        v.reason = "forbidden combination " + std::string(to_string(it->first)) + " + " +
                   std::string(to_string(jt->first));
        v.citation = c;
        return v;
      }
    }
  }
  if (g.n() < 2) {
    v.reason = "a reducible central curve needs N >= 2, got " + std::to_string(g.n());
    v.citation = Citation::ClassificationTable;
    return v;
  }
  if (g.gorenstein_components > 0 && !counts.empty()) {
    v.reason = "typed and untyped (Gorenstein) components cannot be mixed";
    v.citation = Citation::ClassificationTable;
    return v;
  }

  for (const auto& rs : rows()) {
    if (!rs.matches(counts, g.gorenstein_components)) continue;
    v.citation = Citation::ClassificationTable;
    const KindBound& kb = g.kind == GermKind::Flipping ? rs.f : g.kind == GermKind::Divisorial ? rs.d : rs.cb;
    const std::string row = "row " + std::to_string(rs.row);
    if (!kb.allowed) {
      v.reason = row + " has no " + kind_word(g.kind) + " case";
      return v;
    }
    if (kb.max_n && g.n() > *kb.max_n) {
      v.reason = row + ": " + kind_word(g.kind) + " bound " + std::to_string(*kb.max_n) + ", got N = " +
                 std::to_string(g.n());
      return v;
    }
    if (auto problem = rs.points(g.points, counts)) {
      v.reason = row + ": " + *problem;
      return v;
    }
    v.accepted = true;
    v.row = rs.row;
    v.citation.reset();
    v.notes = rs.notes;
    return v;
  }
  v.reason = "no table row matches this combination of component types";
  v.citation = Citation::ClassificationTable;
  return v;
}

ComponentBound component_bound(ComponentType leading, GermKind leading_kind, GermKind germ_kind) {
  using T = ComponentType;
  ComponentBound b;
  static const std::set<T> hypothesis = {T::cD3, T::IC, T::kAD, T::IIdual, T::IIB, T::k3A};
  if (!hypothesis.count(leading)) {
    b.clause = "not applicable: leading type " + std::string(to_string(leading)) +
               " is outside cD/3, IC, kAD, IIdual, IIB, k3A";
    return b;
  }
  b.applicable = true;
  const bool birational = germ_kind != GermKind::ConicBundle;
  b.max_n = birational ? 4 : 5;
  b.clause = birational ? "(1) N <= 4 for a birational germ" : "(1) N <= 5";
  if (leading_kind == GermKind::Divisorial) {
    if (leading == T::IIdual) {
      b.notes.push_back("clause (2) excludes a IIdual leading component");
    } else if (germ_kind == GermKind::Divisorial) {
      b.max_n = 2;
      b.exact = true;
      b.clause = "(3) divisorial leading component and divisorial germ: N = 2";
    } else if (b.max_n > 3) {
      b.max_n = 3;
      b.clause = "(2) divisorial leading component: N <= 3";
    }
  } else if (leading == T::IIdual) {
    b.notes.push_back("clause (2) excludes a IIdual leading component");
  }
  if (germ_kind == GermKind::Flipping) {
    b.max_n = 2;
    b.exact = true;
    b.clause = "(4) flipping germ: N = 2";
  }
  return b;
}

Rational flip_transfer(const FlipGermData& d, const Rational& k_dot_c) {
  if (d.index_x < 1) throw InputError("index(X) must be >= 1");
  if (k_dot_c >= 0) throw InputError("K_X.C must be negative, got " + to_string(k_dot_c));
  Rational scaled = Rational(static_cast<long>(d.index_x)) * k_dot_c;
  scaled.canonicalize();
  if (!is_integral(scaled)) {
    throw InputError("index(X) * K_X.C must be an integer, got " + to_string(scaled));
  }
  std::int64_t l = 1;
  for (auto i : d.plus_indices) {
    if (i < 1) throw InputError("plus indices must be >= 1");
    l = std::lcm(l, i);
  }
  if (!d.w_values.empty()) {
    Rational expected = kc_from_w(d.w_values);
    if (expected != -k_dot_c) {
      throw InputError("w-values give -K.C = " + to_string(expected) + ", not " + to_string(-k_dot_c));
    }
  }
  Rational out = -scaled / Rational(static_cast<long>(l));
  out.canonicalize();
  return out;
}

Rational kc_from_w(const std::vector<Rational>& w_values) {
  Rational out = 1;
  for (const auto& w : w_values) {
    if (w < 0 || w >= 1) throw InputError("w-values must lie in [0, 1), got " + to_string(w));
    out -= w;
  }
  return out;
}

std::vector<Table2Row> table2_rows() {
  auto q = [](std::int64_t n, std::int64_t d) { return make_rational(n, d); };
  return {
      {"cD/3", "one index-2 point", 3, false, 0, q(-1, 3), q(1, 2), {2}},
      {"cD/3", "no non-Gorenstein point", 3, false, 0, q(-1, 3), q(1, 1), {}},
      {"IIA", "index-2 and index-3 points", 4, false, 0, q(-1, 4), q(1, 6), {2, 3}},
      {"IIA", "one index-2 point (first family)", 4, false, 0, q(-1, 4), q(1, 2), {2}},
      {"IIA", "one index-2 point (second family)", 4, false, 0, q(-1, 4), q(1, 2), {2}},
      {"IC", "one index-2 point", 1, true, 5, q(-1, 1), q(1, 2), {2}},
      {"IC", "no non-Gorenstein point", 1, true, 5, q(-1, 1), q(1, 1), {}},
      {"kAD", "one index-2 point", 2, true, 3, q(-1, 2), q(1, 2), {2}},
  };
}

bool Table2Report::all_pass() const {
  return std::all_of(lines.begin(), lines.end(), [](const Table2Line& l) { return l.pass; });
}

namespace {

// c/m written with m folded into the denominator: -1/m, -1/(2m).
std::string per_m(const Rational& c) {
  const std::string den = c.get_den() == 1 ? "m" : "(" + c.get_den().get_str() + "m)";
  return c.get_num().get_str() + "/" + den;
}

}  // namespace

Table2Report check_table2(const std::vector<Table2Row>& rows, std::int64_t m_max) {
  Table2Report report;
  for (const auto& row : rows) {
    Table2Line line;
    line.label = row.type + ", " + row.variant;
    line.pass = true;
    std::vector<std::int64_t> ms;
    if (row.parametric) {
      for (std::int64_t m = row.m_min; m <= m_max; m += 2) ms.push_back(m);
    } else {
      ms.push_back(1);
    }
    if (ms.empty()) {
      line.pass = false;
      line.detail = "no parameter values in range";
    }
    std::int64_t lcm_plus = 1;
    for (auto i : row.plus_indices) lcm_plus = std::lcm(lcm_plus, i);
    for (auto m : ms) {
      const std::int64_t index = row.index_coef * m;
      Rational kc = row.kc_coef / Rational(static_cast<long>(m));
      kc.canonicalize();
      const std::string at = row.parametric ? " at m = " + std::to_string(m) : "";
      Rational prod = Rational(static_cast<long>(index)) * abs(kc);
      if (prod != 1) {
        line.pass = false;
        line.detail = "index * |K.C| = " + to_string(prod) + at;
        break;
      }
      Rational kplus;
      try {
        kplus = flip_transfer(FlipGermData{index, {}, row.plus_indices}, kc);
      } catch (const InputError& e) {
        line.pass = false;
        line.detail = std::string(e.what()) + at;
        break;
      }
      if (kplus != row.k_plus) {
        line.pass = false;
        line.detail = "K+.C+ computed " + to_string(kplus) + ", table says " + to_string(row.k_plus) + at;
        break;
      }
      if (lcm_plus % denominator_of(kplus) != 0) {
        line.pass = false;
        line.detail = "denominator of K+.C+ does not divide lcm of plus indices" + at;
        break;
      }
    }
    if (line.pass) {
      std::ostringstream d;
      d << "index " << (row.parametric ? (row.index_coef == 1 ? "m" : std::to_string(row.index_coef) + "m")
                                       : std::to_string(row.index_coef))
        << ", K.C = " << (row.parametric ? per_m(row.kc_coef) : to_string(row.kc_coef))
        << ", K+.C+ = " << to_string(row.k_plus);
      if (row.parametric) d << " (checked for odd m in [" << row.m_min << ", " << m_max << "])";
      line.detail = d.str();
    }
    report.lines.push_back(std::move(line));
  }
  return report;
}

PushResult push_inequalities(const PushScenario& s) {
  if (s.local_index < 1) throw InputError("local index must be >= 1");
  if (s.steps && *s.steps < 0) throw InputError("step count must be >= 0");
  if (s.flips < 0) throw InputError("flip count must be >= 0");
  PushResult r;
  r.strict = s.flips > 0;
  const Rational drop = make_rational(1, s.local_index);
  const std::int64_t steps = s.steps.value_or(0);
  r.final_bound = s.start - Rational(static_cast<long>(steps)) * drop;
  r.trace.push_back("start: K.L = " + to_string(s.start));
  for (std::int64_t l = 1; l <= steps; ++l) {
    r.trace.push_back("after " + std::to_string(l) + " divisorial step(s): K'.L' <= " +
                      to_string(s.start - Rational(static_cast<long>(l)) * drop));
  }
  if (r.strict) r.trace.push_back(std::to_string(s.flips) + " flip(s): bounds become strict");
  if (s.floor) {
    // Largest l with start - l/n >= floor (> floor when strict).
    Rational room = (s.start - *s.floor) * Rational(static_cast<long>(s.local_index));
    BigInt fl;
    mpz_fdiv_q(fl.get_mpz_t(), room.get_num_mpz_t(), room.get_den_mpz_t());
    if (r.strict && Rational(fl) == room) fl -= 1;
    r.max_steps = fl.get_si();
    r.trace.push_back(std::string(r.strict ? "strict " : "") + "floor " + to_string(*s.floor) + ": l <= " +
                      std::to_string(*r.max_steps));
  }
  return r;
}

}  // namespace germkit

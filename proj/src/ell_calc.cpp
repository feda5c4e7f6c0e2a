#include "germkit/ell_calc.hpp"

#include <algorithm>
#include <sstream>

#include "germkit/errors.hpp"

namespace germkit {

namespace {

void check_index(const std::string& label, std::int64_t index) {
  if (index < 2) throw InputError("point '" + label + "' needs index >= 2, got " + std::to_string(index));
}

std::map<std::string, PointWeight> merged(const EllDivisor& a, const EllDivisor& b, std::int64_t sb) {
  std::map<std::string, PointWeight> raw = a.points();
  for (const auto& [label, pw] : b.points()) {
    auto it = raw.find(label);
    if (it == raw.end()) {
      raw.emplace(label, PointWeight{pw.index, checked_mul(sb, pw.weight)});
    } else {
      if (it->second.index != pw.index) {
        throw InputError("index mismatch at point '" + label + "': " + std::to_string(it->second.index) +
                         " vs " + std::to_string(pw.index));
      }
      it->second.weight = checked_add(it->second.weight, checked_mul(sb, pw.weight));
    }
  }
  return raw;
}

}  // namespace

EllDivisor EllDivisor::normalize(std::int64_t c, const std::map<std::string, PointWeight>& raw) {
  EllDivisor out;
  out.c_ = c;
  for (const auto& [label, pw] : raw) {
    check_index(label, pw.index);
    out.c_ = checked_add(out.c_, floor_div(pw.weight, pw.index));
    out.points_.emplace(label, PointWeight{pw.index, mod_pos(pw.weight, pw.index)});
  }
  return out;
}

EllDivisor EllDivisor::normalize(std::int64_t c,
                                 const std::vector<std::pair<MarkedPoint, std::int64_t>>& raw) {
  std::map<std::string, PointWeight> m;
  for (const auto& [pt, w] : raw) {
    if (!m.emplace(pt.label, PointWeight{pt.index, w}).second) {
      throw InputError("duplicate point label '" + pt.label + "'");
    }
  }
  return normalize(c, m);
}

std::int64_t EllDivisor::weight(const std::string& label) const {
  auto it = points_.find(label);
  return it == points_.end() ? 0 : it->second.weight;
}

std::optional<std::int64_t> EllDivisor::index_of(const std::string& label) const {
  auto it = points_.find(label);
  if (it == points_.end()) return std::nullopt;
  return it->second.index;
}

std::string EllDivisor::to_string() const {
  std::ostringstream out;
  out << '(' << c_;
  for (const auto& [label, pw] : points_) {
    if (pw.weight == 0) continue;
    out << " + ";
    if (pw.weight != 1) out << pw.weight;
    out << label;
  }
  out << ')';
  return out.str();
}

bool EllDivisor::operator==(const EllDivisor& other) const {
  if (c_ != other.c_) return false;
  auto covered = [](const EllDivisor& x, const EllDivisor& y) {
    for (const auto& [label, pw] : x.points_) {
      if (pw.weight != 0 && y.weight(label) != pw.weight) return false;
    }
    return true;
  };
  return covered(*this, other) && covered(other, *this);
}

EllDivisor tensor(const EllDivisor& a, const EllDivisor& b) {
  return EllDivisor::normalize(checked_add(a.c(), b.c()), merged(a, b, 1));
}

EllDivisor dual(const EllDivisor& a) {
  return EllDivisor::normalize(-a.c(), merged(EllDivisor{}, a, -1));
}

EllDivisor power(const EllDivisor& a, std::int64_t k) {
  return EllDivisor::normalize(checked_mul(k, a.c()), merged(EllDivisor{}, a, k));
}

Rational ell_deg(const EllDivisor& l) {
  Rational deg(static_cast<long>(l.c()));
  for (const auto& [label, pw] : l.points()) deg += make_rational(pw.weight, pw.index);
  return deg;
}

std::int64_t h0(const EllDivisor& l) { return std::max<std::int64_t>(0, l.c() + 1); }
std::int64_t h1(const EllDivisor& l) { return std::max<std::int64_t>(0, -l.c() - 1); }

GlobalEllDivisor GlobalEllDivisor::make(std::vector<std::string> components, std::vector<EllDivisor> parts,
                                        std::optional<NodeInfo> node) {
  if (components.empty()) throw InputError("global divisor needs at least one component");
  if (components.size() != parts.size()) throw InputError("one divisor per component required");
  for (std::size_t i = 0; i < components.size(); ++i) {
    for (std::size_t j = i + 1; j < components.size(); ++j) {
      if (components[i] == components[j]) throw InputError("duplicate component '" + components[i] + "'");
    }
  }
  if (node) {
    if (node->length != 1 && node->length != 2) throw InputError("node length must be 1 or 2");
    check_index(node->label, node->index);
    for (std::size_t i = 0; i < parts.size(); ++i) {
      auto idx = parts[i].index_of(node->label);
      if (!idx || *idx != node->index) {
        throw InputError("node point '" + node->label + "' must appear on component '" + components[i] +
                         "' with index " + std::to_string(node->index));
      }
    }
  }
  GlobalEllDivisor g;
  g.components_ = std::move(components);
  g.parts_ = std::move(parts);
  g.node_ = std::move(node);
  return g;
}

const EllDivisor& GlobalEllDivisor::on(const std::string& component) const {
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (components_[i] == component) return parts_[i];
  }
  throw InputError("unknown component '" + component + "'");
}

bool GlobalEllDivisor::same_universe(const GlobalEllDivisor& other) const {
  if (components_ != other.components_) return false;
  if (node_.has_value() != other.node_.has_value()) return false;
  if (node_ && (node_->label != other.node_->label || node_->index != other.node_->index ||
                node_->length != other.node_->length)) {
    return false;
  }
  return true;
}

Rational ell_deg(const GlobalEllDivisor& l) {
  Rational total = 0;
  for (const auto& p : l.parts()) total += ell_deg(p);
  return total;
}

namespace {

template <typename F>
GlobalEllDivisor componentwise(const GlobalEllDivisor& a, const GlobalEllDivisor* b, F f) {
  if (b && !a.same_universe(*b)) throw InputError("global divisors live on different component sets");
  std::vector<EllDivisor> parts;
  for (std::size_t i = 0; i < a.parts().size(); ++i) {
    parts.push_back(b ? f(a.parts()[i], &b->parts()[i]) : f(a.parts()[i], nullptr));
  }
  return GlobalEllDivisor::make(a.components(), std::move(parts), a.node());
}

}  // namespace

GlobalEllDivisor tensor(const GlobalEllDivisor& a, const GlobalEllDivisor& b) {
  return componentwise(a, &b, [](const EllDivisor& x, const EllDivisor* y) { return tensor(x, *y); });
}

GlobalEllDivisor dual(const GlobalEllDivisor& a) {
  return componentwise(a, nullptr, [](const EllDivisor& x, const EllDivisor*) { return dual(x); });
}

GlobalEllDivisor power(const GlobalEllDivisor& a, std::int64_t k) {
  return componentwise(a, nullptr, [k](const EllDivisor& x, const EllDivisor*) { return power(x, k); });
}

int node_invariant_dim(std::int64_t g, std::int64_t t, int lambda, std::int64_t m) {
  if (m < 2) throw InputError("node index must be >= 2");
  if (lambda != 1 && lambda != 2) throw InputError("node length must be 1 or 2");
  int count = 0;
  for (int j = 0; j < lambda; ++j) {
    if (mod_pos(checked_add(g, checked_mul(j, t)), m) == 0) ++count;
  }
  return count;
}

std::int64_t glued_h0(const EllDivisor& l1, const EllDivisor& l2, int node_dim) {
  std::int64_t a = h0(l1), b = h0(l2);
  bool evaluates = node_dim >= 1 && (a > 0 || b > 0);
  return a + b - (evaluates ? 1 : 0);
}

std::int64_t glued_image_on_first(const EllDivisor& l1, const EllDivisor& l2, int node_dim) {
  return std::min(h0(l1), glued_h0(l1, l2, node_dim));
}

Thm812Result thm812_check(const GlobalEllDivisor& a, const GlobalEllDivisor& b, std::int64_t d,
                          ContractionKind kind) {
  if (d < 2) throw InputError("thickening degree d must be >= 2");
  if (!a.same_universe(b)) throw InputError("A and B must share components and node data");
  Rational da = ell_deg(a), db = ell_deg(b);
  Thm812Result r;
  r.scaled = da + Rational(static_cast<long>(d)) * db;
  r.normalized = db + da / Rational(static_cast<long>(d));
  int s = sgn(r.scaled);
  if (s < 0) r.verdict = StepVerdict::Contradiction;
  else if (s > 0) r.verdict = StepVerdict::Holds;
  else if (kind == ContractionKind::Birational) r.verdict = StepVerdict::Contradiction;
  else if (kind == ContractionKind::Unknown) r.verdict = StepVerdict::ForcesCb;
  else r.verdict = StepVerdict::Holds;
  return r;
}

const char* to_string(StepVerdict v) {
  switch (v) {
    case StepVerdict::Holds: return "holds";
    case StepVerdict::ForcesCb: return "forces-cb";
    case StepVerdict::Contradiction: return "contradiction";
  }
  return "holds";
}

const char* to_string(ContractionKind k) {
  switch (k) {
    case ContractionKind::Birational: return "birational";
    case ContractionKind::ConicBundle: return "cb";
    case ContractionKind::Unknown: return "unknown";
  }
  return "unknown";
}

}  // namespace germkit

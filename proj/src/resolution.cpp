#include "germkit/resolution.hpp"

#include "germkit/errors.hpp"
#include "germkit/linalg.hpp"

namespace germkit {

Rational Codiscrepancy::max_coeff() const {
  Rational best = 0;
  for (const auto& [id, v] : coeffs) {
    if (v > best) best = v;
  }
  return best;
}

Codiscrepancy codiscrepancy(const ConfigGraph& g, const std::vector<std::string>& cluster) {
  for (const auto& id : cluster) {
    if (g.vertex(g.index_of(id)).kind != VertexKind::Exceptional) {
      throw InputError("vertex '" + id + "' is not exceptional");
    }
  }
  IntersectionMatrix m = intersection_matrix(g, cluster);
  if (!is_negative_definite(m)) {
    throw ContractibilityError("cluster is not contractible: intersection form is not negative definite");
  }
  const std::size_t n = m.size();
  linalg::IntMatrix a(n, std::vector<BigInt>(n));
  std::vector<BigInt> rhs(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = static_cast<long>(m.entries[i][j]);
    rhs[i] = 2 + m.entries[i][i];  // 2 - a_i with a_i = -self
  }
  auto x = linalg::solve(a, rhs);
  if (!x) throw ContractibilityError("singular intersection matrix");

  for (std::size_t i = 0; i < n; ++i) {
    Rational row = 0;
    for (std::size_t j = 0; j < n; ++j) row += Rational(a[i][j]) * (*x)[j];
    if (row != Rational(rhs[i])) throw InternalError("codiscrepancy residual check failed");
  }

  Codiscrepancy d;
  d.cluster = cluster;
  for (std::size_t i = 0; i < n; ++i) d.coeffs.emplace(cluster[i], (*x)[i]);
  return d;
}

std::vector<Codiscrepancy> all_codiscrepancies(const ConfigGraph& g) {
  std::vector<Codiscrepancy> out;
  for (const auto& c : exceptional_clusters(g)) out.push_back(codiscrepancy(g, c.vertices));
  return out;
}

KReport k_dot_components(const ConfigGraph& g, const std::vector<Codiscrepancy>& deltas) {
  std::map<std::string, Rational> coeff;
  for (const auto& d : deltas) {
    for (const auto& [id, v] : d.coeffs) coeff[id] = v;
  }
  for (auto e : g.exceptional_indices()) {
    if (!coeff.count(g.vertex(e).id)) {
      throw InputError("missing codiscrepancy for exceptional vertex '" + g.vertex(e).id + "'");
    }
  }
  KReport r;
  r.germ_feasible = true;
  for (auto c : g.component_indices()) {
    ComponentK k;
    k.id = g.vertex(c).id;
    k.adjacent_sum = 0;
    for (auto w : g.neighbors(c)) {
      if (g.vertex(w).kind == VertexKind::Exceptional) k.adjacent_sum += coeff.at(g.vertex(w).id);
    }
    k.k_dot_c = k.adjacent_sum - 1;
    k.k_negative = k.adjacent_sum < 1;
    r.germ_feasible = r.germ_feasible && k.k_negative;
    r.components.push_back(std::move(k));
  }
  return r;
}

SingularityClass singularity_class(const Codiscrepancy& d) {
  Rational top = d.max_coeff();
  if (top < 1) return SingularityClass::LogTerminal;
  if (top == 1) return SingularityClass::LogCanonicalStrict;
  return SingularityClass::NotLogCanonical;
}

std::string_view to_string(SingularityClass c) {
  switch (c) {
    case SingularityClass::LogTerminal: return "log_terminal";
    case SingularityClass::LogCanonicalStrict: return "log_canonical_strict";
    case SingularityClass::NotLogCanonical: return "not_log_canonical";
  }
  return "not_log_canonical";
}

}  // namespace germkit

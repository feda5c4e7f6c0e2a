#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "germkit/dual_graph.hpp"
#include "germkit/rational.hpp"

namespace germkit {

struct Codiscrepancy {
  std::vector<std::string> cluster;  // input order
  std::map<std::string, Rational> coeffs;

  const Rational& at(const std::string& id) const { return coeffs.at(id); }
  Rational max_coeff() const;
};

struct ComponentK {
  std::string id;
  Rational adjacent_sum;  // sum of d_E over adjacent exceptional E
  Rational k_dot_c;       // -1 + adjacent_sum
  bool k_negative;
};

struct KReport {
  std::vector<ComponentK> components;  // input order
  bool germ_feasible;
};

enum class SingularityClass { LogTerminal, LogCanonicalStrict, NotLogCanonical };

// Solves M·d = (2 - a_j) for the cluster; throws ContractibilityError unless
// the intersection form is negative definite.
Codiscrepancy codiscrepancy(const ConfigGraph& g, const std::vector<std::string>& cluster);

// One codiscrepancy per exceptional cluster, in cluster order.
std::vector<Codiscrepancy> all_codiscrepancies(const ConfigGraph& g);

KReport k_dot_components(const ConfigGraph& g, const std::vector<Codiscrepancy>& deltas);

SingularityClass singularity_class(const Codiscrepancy& d);

std::string_view to_string(SingularityClass c);

}  // namespace germkit

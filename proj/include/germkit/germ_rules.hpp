#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "germkit/class_group.hpp"
#include "germkit/rational.hpp"

namespace germkit {

enum class ComponentType { k1A, k2A, cD2, cAx2, cE2, cD3, IIA, IIdual, IEdual, IDdual, IC, IIB, kAD, k3A };
enum class GermKind { Flipping, Divisorial, ConicBundle };

struct GermDescriptor {
  std::vector<ComponentType> components;
  // Graph vertex realizing each typed component; empty when not given.
  std::vector<std::string> curves;
  // Components declared as "gorenstein": germs without non-Gorenstein points,
  // which carry no type in the classification.
  std::int64_t gorenstein_components = 0;
  GermKind kind;
  std::vector<NonGorPoint> points;

  std::int64_t n() const { return static_cast<std::int64_t>(components.size()) + gorenstein_components; }
};

GermDescriptor parse_descriptor(std::string_view text);
std::string to_text(const GermDescriptor& g);

ComponentType parse_component_type(std::string_view s);
GermKind parse_germ_kind(std::string_view s);
std::string_view to_string(ComponentType t);
std::string_view to_string(GermKind k);

enum class Citation {
  IcMeetsK2aExcluded,       // an IC component cannot meet a k2A component
  KadK3aMeetsK2aExcluded,   // kAD or k3A cannot meet k2A
  IIdualMeetsIIBExcluded,   // II^dual cannot meet IIB
  ClassificationTable,      // N-bounds and point data of the main table
};

std::string_view to_string(Citation c);
// Short stable identifier: ic-k2a, kad-k3a-k2a, iidual-iib, table.
std::string_view citation_key(Citation c);

struct TableVerdict {
  bool accepted = false;
  int row = 0;
  std::string reason;
  std::optional<Citation> citation;
  std::vector<std::string> notes;
};

TableVerdict validate_against_table(const GermDescriptor& g);

std::optional<Citation> forbidden_pair(ComponentType a, ComponentType b);

struct ComponentBound {
  bool applicable = false;
  std::int64_t max_n = 0;
  bool exact = false;  // N equals max_n rather than bounded by it
  std::string clause;
  std::vector<std::string> notes;
};

ComponentBound component_bound(ComponentType leading, GermKind leading_kind, GermKind germ_kind);

struct FlipGermData {
  std::int64_t index_x;
  std::vector<Rational> w_values;  // optional; empty means not supplied
  std::vector<std::int64_t> plus_indices;
};

// K_{X+}·C+ = -index(X)·(K_X·C) / lcm(plus indices).
Rational flip_transfer(const FlipGermData& d, const Rational& k_dot_c);

// -K·C from the w-invariants.
Rational kc_from_w(const std::vector<Rational>& w_values);

struct Table2Row {
  std::string type;
  std::string variant;
  std::int64_t index_coef;  // index(X) = index_coef, times m when parametric
  bool parametric;
  std::int64_t m_min;       // smallest odd m checked when parametric
  Rational kc_coef;         // K_X·C = kc_coef, divided by m when parametric
  Rational k_plus;
  std::vector<std::int64_t> plus_indices;
};

std::vector<Table2Row> table2_rows();

struct Table2Line {
  std::string label;
  bool pass;
  std::string detail;
};

struct Table2Report {
  std::vector<Table2Line> lines;
  bool all_pass() const;
};

Table2Report check_table2(const std::vector<Table2Row>& rows = table2_rows(), std::int64_t m_max = 49);

struct PushScenario {
  Rational start;                      // K-value before the contractions
  std::int64_t local_index = 1;        // n of each divisorial step
  std::optional<std::int64_t> steps;   // explicit step count, if known
  std::optional<Rational> floor;       // value the result must stay at or above
  std::int64_t flips = 0;              // flips make every bound strict
};

struct PushResult {
  std::vector<std::string> trace;
  Rational final_bound;  // upper bound on the K-value after `steps` (or 0) steps
  bool strict = false;
  std::optional<std::int64_t> max_steps;  // implied integer bound on the step count
};

PushResult push_inequalities(const PushScenario& s);

}  // namespace germkit

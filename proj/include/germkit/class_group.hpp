#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "germkit/rational.hpp"

namespace germkit {

struct NonGorPoint {
  std::int64_t index;
  std::string tag;
  std::optional<std::int64_t> ell;  // carried, never computed with

  static NonGorPoint make(std::int64_t index, std::string tag, std::optional<std::int64_t> ell = {});
};

struct PrimitivityReport {
  std::int64_t index;
  std::int64_t image_order;
  std::int64_t splitting_degree;
  bool primitive;
  // When the divisor is not known to generate the local class group the
  // splitting degree is only an upper bound.
  bool generator_assumed;
  std::string note;
};

// Intersection value D·C at a point of index m; only its denominator matters.
PrimitivityReport local_primitivity(const Rational& d_dot_c, std::int64_t m, bool generator = true);

struct PointSplitting {
  std::int64_t index;
  std::int64_t splitting_degree;  // 1 = primitive
};

struct GlobalImprimitivity {
  bool primitive;
  std::int64_t degree;
  std::optional<std::int64_t> base_A;  // base singularity A_{degree-1}; empty when smooth
  bool contradiction;
  std::string rule;  // which case fired
};

GlobalImprimitivity global_imprimitivity(const std::vector<PointSplitting>& points);

struct ClscSummary {
  std::int64_t rank;
  bool torsion_free;
  std::vector<std::int64_t> local_orders;
  std::int64_t torsion_order_bound;  // lcm of local orders; torsion divides one of them
  std::string note;
};

ClscSummary clsc_rank(std::int64_t components, const std::vector<std::int64_t>& local_orders);

}  // namespace germkit

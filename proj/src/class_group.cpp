#include "germkit/class_group.hpp"

#include <numeric>

#include "germkit/errors.hpp"

namespace germkit {

NonGorPoint NonGorPoint::make(std::int64_t index, std::string tag, std::optional<std::int64_t> ell) {
  if (index < 2) throw InputError("point index must be >= 2, got " + std::to_string(index));
  if (ell && *ell < 0) throw InputError("ell must be >= 0, got " + std::to_string(*ell));
  if (tag.empty()) throw InputError("point tag must be nonempty");
  return NonGorPoint{index, std::move(tag), ell};
}

PrimitivityReport local_primitivity(const Rational& d_dot_c, std::int64_t m, bool generator) {
  if (m < 2) throw InputError("index must be >= 2, got " + std::to_string(m));
  std::int64_t den = denominator_of(d_dot_c);
  if (m % den != 0) {
    throw InputError("inconsistent input: denominator of " + to_string(d_dot_c) + " does not divide " +
                     std::to_string(m));
  }
  PrimitivityReport r;
  r.index = m;
  r.image_order = den;
  r.splitting_degree = m / den;
  r.primitive = r.splitting_degree == 1;
  r.generator_assumed = generator;
  if (!generator) r.note = "divisor not known to generate; splitting degree is an upper bound";
  return r;
}

GlobalImprimitivity global_imprimitivity(const std::vector<PointSplitting>& points) {
  if (points.empty()) throw InputError("need at least one non-Gorenstein point");
  for (const auto& p : points) {
    if (p.index < 2 || p.splitting_degree < 1 || p.index % p.splitting_degree != 0) {
      throw InputError("splitting degree must divide the point index");
    }
  }
  GlobalImprimitivity g{true, 1, std::nullopt, false, "primitive"};
  std::size_t imprimitive = 0;
  for (const auto& p : points) imprimitive += p.splitting_degree > 1 ? 1 : 0;
  if (imprimitive > 0) {
    if (points.size() == 1) {
      g.primitive = false;
      g.degree = points[0].splitting_degree;
      g.rule = "single locally imprimitive point";
    } else {
      g.contradiction = true;
      g.rule = "locally imprimitive point alongside other non-Gorenstein points";
    }
  } else if (points.size() == 2) {
    std::int64_t k = std::gcd(points[0].index, points[1].index);
    if (k > 1) {
      g.primitive = false;
      g.degree = k;
      g.rule = "two primitive points with non-coprime indices";
    }
  }
  if (g.degree > 1) g.base_A = g.degree - 1;
  return g;
}

ClscSummary clsc_rank(std::int64_t components, const std::vector<std::int64_t>& local_orders) {
  if (components < 1) throw InputError("need at least one component");
  ClscSummary s;
  s.rank = components;
  s.local_orders = local_orders;
  s.torsion_free = local_orders.empty();
  s.torsion_order_bound = 1;
  for (auto m : local_orders) {
    if (m < 2) throw InputError("local class group orders must be >= 2");
    s.torsion_order_bound = std::lcm(s.torsion_order_bound, m);
  }
  s.note = s.torsion_free ? "torsion-free"
                          : "torsion is cyclic and embeds in a single local group Z/m_i";
  return s;
}

}  // namespace germkit

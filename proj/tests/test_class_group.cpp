#include <gtest/gtest.h>

#include "germkit/class_group.hpp"
#include "germkit/errors.hpp"
#include "support.hpp"

using namespace germkit;
using germkit::testing::Q;

TEST(LocalPrimitivity, K1AcImprimitive) {
  auto r = local_primitivity(Q(-1, 4), 12);
  EXPECT_EQ(r.image_order, 4);
  EXPECT_EQ(r.splitting_degree, 3);
  EXPECT_FALSE(r.primitive);
  EXPECT_TRUE(r.generator_assumed);
  EXPECT_TRUE(r.note.empty());
}

TEST(LocalPrimitivity, IIdual) {
  EXPECT_TRUE(local_primitivity(Q(-1, 4), 4).primitive);
  auto r = local_primitivity(Q(-1, 2), 4);
  EXPECT_FALSE(r.primitive);
  EXPECT_EQ(r.splitting_degree, 2);
}

TEST(LocalPrimitivity, GeneratorFlagAddsNote) {
  auto r = local_primitivity(Q(-1, 2), 4, false);
  EXPECT_FALSE(r.generator_assumed);
  EXPECT_FALSE(r.note.empty());
  EXPECT_EQ(r.splitting_degree, 2);
}

TEST(LocalPrimitivity, Errors) {
  EXPECT_THROW(local_primitivity(Q(-1, 3), 4), InputError);
  EXPECT_THROW(local_primitivity(Q(-1, 2), 1), InputError);
}

TEST(GlobalImprimitivity, SingleImprimitivePoint) {
  auto g = global_imprimitivity({{4, 2}});
  EXPECT_FALSE(g.primitive);
  EXPECT_EQ(g.degree, 2);
  EXPECT_EQ(g.base_A, 1);
  EXPECT_FALSE(g.contradiction);
}

TEST(GlobalImprimitivity, TwoPrimitivePoints) {
  auto g = global_imprimitivity({{4, 1}, {6, 1}});
  EXPECT_FALSE(g.primitive);
  EXPECT_EQ(g.degree, 2);
  EXPECT_EQ(g.base_A, 1);
  auto coprime = global_imprimitivity({{4, 1}, {5, 1}});
  EXPECT_TRUE(coprime.primitive);
  EXPECT_EQ(coprime.degree, 1);
}

TEST(GlobalImprimitivity, SinglePrimitivePoint) {
  auto g = global_imprimitivity({{5, 1}});
  EXPECT_TRUE(g.primitive);
  EXPECT_EQ(g.degree, 1);
  EXPECT_FALSE(g.base_A.has_value());
}

TEST(GlobalImprimitivity, ImprimitiveWithOthersIsContradiction) {
  auto g = global_imprimitivity({{4, 2}, {3, 1}});
  EXPECT_TRUE(g.contradiction);
  EXPECT_THROW(global_imprimitivity({}), InputError);
  EXPECT_THROW(global_imprimitivity({{4, 3}}), InputError);
}

TEST(Clsc, Examples) {
  auto a = clsc_rank(2, {5});
  EXPECT_EQ(a.rank, 2);
  EXPECT_FALSE(a.torsion_free);
  EXPECT_EQ(a.torsion_order_bound, 5);

  auto b = clsc_rank(1, {4, 6});
  EXPECT_EQ(b.rank, 1);
  EXPECT_EQ(b.torsion_order_bound, 12);
  EXPECT_NE(b.note.find("single"), std::string::npos);

  auto c = clsc_rank(3, {});
  EXPECT_TRUE(c.torsion_free);
  EXPECT_EQ(c.torsion_order_bound, 1);
}

TEST(NonGorPoint, Validation) {
  EXPECT_THROW(NonGorPoint::make(1, "cA/1"), InputError);
  EXPECT_THROW(NonGorPoint::make(3, "cA/3", -1), InputError);
  EXPECT_EQ(NonGorPoint::make(3, "cA/3", 2).ell, 2);
}

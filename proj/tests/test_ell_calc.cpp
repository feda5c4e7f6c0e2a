#include <gtest/gtest.h>

#include "germkit/disproof.hpp"
#include "germkit/ell_calc.hpp"
#include "germkit/errors.hpp"
#include "support.hpp"

using namespace germkit;
using germkit::testing::Q;

namespace {

using Raw = std::map<std::string, PointWeight>;

EllDivisor L(std::int64_t c, Raw raw = {}) { return EllDivisor::normalize(c, raw); }

// Section data at (m, m', a') = (5, 3, 2), point P of index 5 shared by both components.
GlobalEllDivisor global_b() {
  return GlobalEllDivisor::make({"C1", "C2"}, {L(-1, {{"P", {5, 3}}, {"R", {3, 1}}}), L(-1, {{"P", {5, 4}}})},
                                NodeInfo{"P", 5, 1});
}
GlobalEllDivisor global_a() {
  return GlobalEllDivisor::make({"C1", "C2"}, {L(-1, {{"P", {5, 4}}, {"R", {3, 1}}}), L(0, {{"P", {5, 2}}})},
                                NodeInfo{"P", 5, 1});
}

const TraceStep& step(const DisproofTrace& t, const std::string& name) {
  const TraceStep* s = t.find(name);
  if (!s) throw std::runtime_error("missing step " + name);
  return *s;
}

}  // namespace

TEST(Normalize, SingleCarry) {
  auto l = L(0, {{"P", {5, 7}}});
  EXPECT_EQ(l.c(), 1);
  EXPECT_EQ(l.weight("P"), 2);
}

TEST(Normalize, SquaredDivisorAtSeven) {
  auto l = L(-1, {{"P", {7, 12}}, {"R", {2, 2}}});
  EXPECT_EQ(l, L(1, {{"P", {7, 5}}}));
  EXPECT_EQ(l.weight("R"), 0);
  EXPECT_EQ(l.index_of("R"), 2);  // zero weights keep their index
}

TEST(Normalize, SquareOfHalfWeightAnyOddM) {
  for (std::int64_t m = 3; m <= 49; m += 2) {
    auto a2 = L(0, {{"P", {m, (m - 1) / 2}}, {"R", {2, 1}}});
    EXPECT_EQ(power(a2, 2), L(1, {{"P", {m, m - 1}}})) << m;
    EXPECT_EQ(L(0, {{"P", {m, m - 1}}, {"R", {2, 2}}}), L(1, {{"P", {m, m - 1}}})) << m;
  }
}

TEST(Normalize, NegativeRawWeights) {
  auto l = L(0, {{"P", {5, -1}}});
  EXPECT_EQ(l.c(), -1);
  EXPECT_EQ(l.weight("P"), 4);
  EXPECT_THROW(L(0, {{"P", {1, 0}}}), InputError);
  EXPECT_THROW(EllDivisor::normalize(0, std::vector<std::pair<MarkedPoint, std::int64_t>>{
                                            {{"P", 3}, 1}, {{"P", 3}, 2}}),
               InputError);
}

TEST(EllDivisor, Printing) {
  EXPECT_EQ(L(-2, {{"P", {3, 2}}, {"R", {2, 1}}}).to_string(), "(-2 + 2P + R)");
  EXPECT_EQ(L(-1, {{"R", {2, 2}}}).to_string(), "(0)");
  EXPECT_EQ(EllDivisor::constant(-1).to_string(), "(-1)");
}

TEST(Tensor, BSquaredIsMinusOne) {
  auto b2 = L(-1, {{"R", {2, 1}}});
  EXPECT_EQ(tensor(b2, b2), EllDivisor::constant(-1));
  EXPECT_EQ(power(b2, 2), EllDivisor::constant(-1));
}

TEST(Tensor, IndexMismatchRejected) {
  EXPECT_THROW(tensor(L(0, {{"P", {3, 1}}}), L(0, {{"P", {5, 1}}})), InputError);
}

TEST(Dual, Examples) {
  EXPECT_EQ(dual(L(-1, {{"P", {7, 6}}, {"R", {5, 1}}})), L(-1, {{"P", {7, 1}}, {"R", {5, 4}}}));
  EXPECT_EQ(dual(EllDivisor::constant(0)), EllDivisor::constant(0));
  EXPECT_EQ(power(L(0, {{"P", {5, 2}}}), -1), dual(L(0, {{"P", {5, 2}}})));
}

TEST(EllDeg, Examples) {
  EXPECT_EQ(ell_deg(EllDivisor::constant(0)), Q(0));
  EXPECT_EQ(ell_deg(L(-2, {{"P", {3, 2}}, {"R", {2, 1}}})), Q(-5, 6));
  EXPECT_EQ(ell_deg(global_b()), Q(-4, 15));
  EXPECT_EQ(ell_deg(global_a()), Q(8, 15));
  EXPECT_EQ(ell_deg(global_a()) + 2 * ell_deg(global_b()), Q(0));
}

TEST(Cohomology, Examples) {
  auto l = L(-2, {{"P", {3, 2}}, {"R", {2, 1}}});
  EXPECT_EQ(h1(l), 1);
  EXPECT_EQ(h0(l), 0);
  for (std::int64_t m = 5; m <= 11; m += 2) EXPECT_EQ(h0(L(0, {{"P", {m, (m - 1) / 2}}, {"R", {2, 1}}})), 1);
  auto minus_one = L(-1, {{"P", {7, 3}}, {"Q", {4, 1}}});
  EXPECT_EQ(h0(minus_one), 0);
  EXPECT_EQ(h1(minus_one), 0);
}

TEST(GlobalEllDivisor, Validation) {
  EXPECT_THROW(GlobalEllDivisor::make({}, {}), InputError);
  EXPECT_THROW(GlobalEllDivisor::make({"C1"}, {}), InputError);
  EXPECT_THROW(GlobalEllDivisor::make({"C1", "C1"}, {L(0), L(0)}), InputError);
  EXPECT_THROW(GlobalEllDivisor::make({"C1", "C2"}, {L(0, {{"P", {5, 1}}}), L(0)}, NodeInfo{"P", 5, 1}),
               InputError);
  EXPECT_THROW(global_a().on("C9"), InputError);
  auto other = GlobalEllDivisor::make({"C1"}, {L(0)});
  EXPECT_THROW(tensor(global_a(), other), InputError);
}

TEST(GlobalEllDivisor, ComponentwiseOperations) {
  auto t = tensor(dual(global_a()), power(global_b(), 2));
  EXPECT_EQ(t.on("C1"), L(-1, {{"P", {5, 2}}, {"R", {3, 1}}}));
  EXPECT_EQ(t.on("C2"), L(-1, {{"P", {5, 1}}}));
  EXPECT_EQ(ell_deg(t), -ell_deg(global_a()) + 2 * ell_deg(global_b()));
}

TEST(NodeInvariantDim, Examples) {
  EXPECT_EQ(node_invariant_dim(1, 0, 2, 5), 0);
  EXPECT_EQ(node_invariant_dim(0, 1, 2, 5), 1);
  EXPECT_EQ(node_invariant_dim(0, 0, 2, 5), 2);
  EXPECT_EQ(node_invariant_dim(-1, 1, 2, 5), 1);
  EXPECT_THROW(node_invariant_dim(0, 0, 3, 5), InputError);
}

TEST(GluedH0, NodeCorrection) {
  auto one = L(0), none = L(-1);
  EXPECT_EQ(glued_h0(one, one, 1), 1);
  EXPECT_EQ(glued_h0(one, one, 0), 2);
  EXPECT_EQ(glued_h0(none, none, 1), 0);
  EXPECT_EQ(glued_image_on_first(one, none, 1), 0);
  EXPECT_EQ(glued_image_on_first(one, none, 0), 1);
}

TEST(Thm812, SectionDataAtTwo) {
  auto r = thm812_check(global_a(), global_b(), 2, ContractionKind::Unknown);
  EXPECT_EQ(r.scaled, Q(0));
  EXPECT_EQ(r.normalized, Q(0));
  EXPECT_EQ(r.verdict, StepVerdict::ForcesCb);
  EXPECT_EQ(thm812_check(global_a(), global_b(), 2, ContractionKind::Birational).verdict,
            StepVerdict::Contradiction);
}

TEST(Thm812, SectionDataAtThree) {
  auto r = thm812_check(global_a(), global_b(), 3, ContractionKind::Unknown);
  EXPECT_EQ(r.scaled, Q(-4, 15));
  EXPECT_EQ(r.normalized, Q(-4, 45));
  EXPECT_EQ(r.verdict, StepVerdict::Contradiction);
}

TEST(Thm812, TrivialHolds) {
  auto a = GlobalEllDivisor::make({"C"}, {EllDivisor::constant(1)});
  auto b = GlobalEllDivisor::make({"C"}, {EllDivisor::constant(0)});
  auto r = thm812_check(a, b, 2, ContractionKind::Birational);
  EXPECT_EQ(r.normalized, Q(1, 2));
  EXPECT_EQ(r.verdict, StepVerdict::Holds);
  EXPECT_THROW(thm812_check(a, b, 1, ContractionKind::Birational), InputError);
}

TEST(IcDisproof, FiveThreeTwo) {
  auto t = ic_disproof(5, 3, 2);
  ASSERT_FALSE(t.rejected());
  EXPECT_TRUE(t.consistent());
  EXPECT_EQ(step(t, "d=2: deg A + 2 deg B").value, Q(0));
  EXPECT_EQ(step(t, "d=2: deg A + 2 deg B").verdict, StepVerdict::ForcesCb);
  EXPECT_EQ(step(t, "d=3: deg A + 3 deg B").value, Q(-4, 15));
  EXPECT_EQ(t.outcome, StepVerdict::Contradiction);
}

TEST(IcDisproof, SevenFiveThree) {
  auto t = ic_disproof(7, 5, 3);
  ASSERT_FALSE(t.rejected());
  EXPECT_EQ(step(t, "d=2: deg A + 2 deg B").value, Q(0));
  EXPECT_EQ(step(t, "d=3: deg A + 3 deg B").value, Q(-6, 35));
  EXPECT_EQ(t.outcome, StepVerdict::Contradiction);
}

TEST(IcDisproof, KNegativityRejection) {
  auto t = ic_disproof(5, 3, 1);
  ASSERT_TRUE(t.rejected());
  EXPECT_NE(t.rejection->find("K-negativity fails"), std::string::npos);
  EXPECT_NE(t.rejection->find("4/15"), std::string::npos);
  EXPECT_TRUE(t.steps.empty());
}

TEST(KadDisproof, K3aAtThree) {
  auto t = kad_disproof(3, 5, 3, KadSubcase::K3A);
  ASSERT_FALSE(t.rejected());
  EXPECT_TRUE(t.consistent());
  EXPECT_EQ(step(t, "h1(A2.B2.omega)").value, Q(1));
  EXPECT_EQ(step(t, "h1(A2.B2.omega)").form, "(-2 + 2P + R)");
  EXPECT_EQ(step(t, "h1(B2^2.omega)").value, Q(1));
  EXPECT_EQ(step(t, "h0(gr1 O)").value, Q(0));
  EXPECT_EQ(step(t, "h0(S2 gr1 O)").value, Q(0));
  EXPECT_EQ(t.outcome, StepVerdict::Contradiction);
}

TEST(KadDisproof, KadDegreeTableAndH1Step) {
  auto t = kad_disproof(5, 3, 2, KadSubcase::KAD);
  ASSERT_FALSE(t.rejected());
  EXPECT_TRUE(t.consistent());
  EXPECT_EQ(step(t, "deg A2^2").form, "(1 + 4P)");
  EXPECT_EQ(step(t, "deg B2^2").value, Q(-1));
  const auto& h = step(t, "h1(omega.E.B2)");
  EXPECT_EQ(h.value, Q(1));
  EXPECT_EQ(h.form, "(-2 + 4P + R)");
  EXPECT_EQ(t.outcome, StepVerdict::Contradiction);
}

TEST(KadDisproof, Rejections) {
  auto t = kad_disproof(3, 3, 1, KadSubcase::K3A);
  ASSERT_TRUE(t.rejected());
  EXPECT_NE(t.rejection->find("m'-a' = 2"), std::string::npos);
  EXPECT_TRUE(kad_disproof(4, 5, 3, KadSubcase::KAD).rejected());  // even m
  EXPECT_TRUE(kad_disproof(5, 5, 3, KadSubcase::K3A).rejected());  // k3A needs m = 3
  EXPECT_EQ(parse_subcase("k3a"), KadSubcase::K3A);
  EXPECT_THROW(parse_subcase("kxx"), InputError);
}

TEST(Sweeps, SmallBoundsAllContradicted) {
  for (auto s : {ic_sweep(15), kad_sweep(15, KadSubcase::K3A), kad_sweep(15, KadSubcase::KAD)}) {
    EXPECT_TRUE(s.ok()) << s.script;
    EXPECT_GT(s.admissible, 0) << s.script;
    EXPECT_EQ(s.contradictions, s.admissible) << s.script;
  }
}

TEST(Sweeps, IcSurvivorsSatisfyTheConstraints) {
  // Every tuple that survives the d = 2 step must have 2a' = m'+1 and m > m'.
  for (std::int64_t m = 5; m <= 21; m += 2) {
    for (std::int64_t mp = 3; mp <= 21; mp += 2) {
      for (std::int64_t ap = 1; ap < mp; ++ap) {
        auto t = ic_disproof(m, mp, ap);
        if (t.rejected()) continue;
        EXPECT_EQ(step(t, "d=2: deg A + 2 deg B").value, Q(mp + 1 - 2 * ap, mp));
        EXPECT_EQ(t.outcome, StepVerdict::Contradiction);
        if (!t.find("d=3: deg A + 3 deg B")) continue;
        EXPECT_EQ(2 * ap, mp + 1);
        EXPECT_GT(m, mp);
        EXPECT_EQ(step(t, "d=3: deg A + 3 deg B").value, Q(-(m + mp), 2 * m * mp));
      }
    }
  }
}

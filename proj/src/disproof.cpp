#include "germkit/disproof.hpp"

#include <numeric>

#include "germkit/errors.hpp"

namespace germkit {

namespace {

Rational q(std::int64_t n, std::int64_t d = 1) { return make_rational(n, d); }

bool satisfies(const Rational& v, Relation r, const Rational& t) {
  switch (r) {
    case Relation::Eq: return v == t;
    case Relation::Lt: return v < t;
    case Relation::Le: return v <= t;
    case Relation::Gt: return v > t;
    case Relation::Ge: return v >= t;
  }
  return false;
}

class Recorder {
 public:
  explicit Recorder(DisproofTrace& t) : trace_(t) {}

  TraceStep& number(const std::string& name, const Rational& value, Relation rel, const Rational& target,
                    StepVerdict verdict = StepVerdict::Holds) {
    TraceStep s{name, "", "", value, rel, target, satisfies(value, rel, target), verdict};
    trace_.steps.push_back(std::move(s));
    if (verdict == StepVerdict::Contradiction) trace_.outcome = StepVerdict::Contradiction;
    else if (verdict == StepVerdict::ForcesCb && trace_.outcome == StepVerdict::Holds) {
      trace_.outcome = StepVerdict::ForcesCb;
    }
    return trace_.steps.back();
  }

  // A divisor step: value is a cohomology count or degree of `l`, and the
  // normal form is compared with the asserted one when given.
  TraceStep& divisor(const std::string& name, const EllDivisor& l, const std::optional<EllDivisor>& expected,
                     const Rational& value, Relation rel, const Rational& target,
                     StepVerdict verdict = StepVerdict::Holds) {
    TraceStep& s = number(name, value, rel, target, verdict);
    s.form = l.to_string();
    if (expected) {
      s.expected_form = expected->to_string();
      s.as_claimed = s.as_claimed && (l == *expected);
    }
    return s;
  }

 private:
  DisproofTrace& trace_;
};

Rational vanishing(const EllDivisor& l) { return q(h0(l) + h1(l)); }

// Node fibre invariant dimension at a reduced node, read from the weight of
// the node point on the first component. The two sides must sum to 0 mod m.
int reduced_node_dim(const EllDivisor& l1, const EllDivisor& l2, const std::string& p, std::int64_t m) {
  if (mod_pos(l1.weight(p) + l2.weight(p), m) != 0) {
    throw InternalError("node weights do not glue at " + p + ": " + l1.to_string() + " / " + l2.to_string());
  }
  return node_invariant_dim(l1.weight(p), 0, 1, m);
}

using Pts = std::vector<std::pair<MarkedPoint, std::int64_t>>;

EllDivisor D(std::int64_t c, Pts pts) { return EllDivisor::normalize(c, pts); }

}  // namespace

bool DisproofTrace::consistent() const {
  for (const auto& s : steps) {
    if (!s.as_claimed) return false;
  }
  return true;
}

const TraceStep* DisproofTrace::find(const std::string& name) const {
  for (const auto& s : steps) {
    if (s.name == name) return &s;
  }
  return nullptr;
}

DisproofTrace ic_disproof(std::int64_t m, std::int64_t mp, std::int64_t ap) {
  DisproofTrace t;
  t.script = "ic";
  t.inputs = {{"m", m}, {"m'", mp}, {"a'", ap}};
  if (m < 5 || m % 2 == 0) {
    t.rejection = "m must be odd and >= 5";
    return t;
  }
  if (mp < 3) {
    t.rejection = "m' must be >= 3";
    return t;
  }
  if (ap <= 0 || ap >= mp) {
    t.rejection = "need 0 < a' < m'";
    return t;
  }
  if (std::gcd(ap, mp) != 1) {
    t.rejection = "need gcd(a', m') = 1";
    return t;
  }
  const Rational kc = q(m + 1, 2 * m) - q(ap, mp);
  if (kc >= 0) {
    t.rejection = "K-negativity fails: (m+1)/(2m) - a'/m' = " + to_string(kc);
    return t;
  }
  if (2 * (mp - ap) >= mp) {
    t.rejection = "need 2(m'-a') < m', got " + std::to_string(2 * (mp - ap));
    return t;
  }

  Recorder rec(t);
  const MarkedPoint P{"P", m}, R{"R", mp};
  const NodeInfo node{"P", m, 2};
  const std::vector<std::string> comps{"C1", "C2"};

  auto A = GlobalEllDivisor::make(comps, {D(-1, {{P, m - 1}, {R, 1}}), D(0, {{P, 2}})}, node);
  auto B = GlobalEllDivisor::make(comps, {D(-1, {{P, (m + 1) / 2}, {R, mp - ap}}), D(-1, {{P, m - 1}})}, node);

  EllDivisor omega1 = D(-1, {{P, (m + 1) / 2}, {R, mp - ap}});
  rec.divisor("K.C1", omega1, std::nullopt, ell_deg(omega1), Relation::Lt, 0);
  rec.number("deg A", ell_deg(A), Relation::Eq, q(1, m) + q(1, mp));
  rec.number("deg B", ell_deg(B), Relation::Eq, q(1, 2) - q(1, 2 * m) - q(ap, mp));

  auto d2 = thm812_check(A, B, 2, ContractionKind::Unknown);
  rec.number("d=2: deg A + 2 deg B", d2.scaled, Relation::Eq, q(mp + 1 - 2 * ap, mp), d2.verdict);
  if (d2.verdict == StepVerdict::Contradiction) return t;

  rec.number("2a' - (m'+1)", q(2 * ap - (mp + 1)), Relation::Eq, 0);
  rec.number("m - m'", q(m - mp), Relation::Gt, 0);

  auto ext = tensor(dual(A), power(B, 2));
  const EllDivisor& e1 = ext.on("C1");
  const EllDivisor& e2 = ext.on("C2");
  rec.divisor("h1(A^-1 B^2 | C1)", e1, D(-1, {{P, 2}, {R, mp - 2}}), q(h1(e1)), Relation::Eq, 0);
  rec.divisor("h1(A^-1 B^2 | C2)", e2, D(-1, {{P, m - 4}}), q(h1(e2)), Relation::Eq, 0);
  // Weight data of the length-2 node for this instance: g = 4 - m, t = m - 2.
  int nd = node_invariant_dim(mod_pos(4 - m, m), m - 2, 2, m);
  rec.number("node invariant sections", q(nd), Relation::Eq, 0);
  rec.number("h1(A^-1 B^2)", q(h1(e1) + h1(e2) + nd), Relation::Eq, 0);

  auto d3 = thm812_check(A, B, 3, ContractionKind::Unknown);
  rec.number("d=3: deg A + 3 deg B", d3.scaled, Relation::Eq, -q(m + mp, 2 * m * mp), d3.verdict);
  return t;
}

DisproofTrace kad_disproof(std::int64_t m, std::int64_t mp, std::int64_t ap, KadSubcase subcase) {
  DisproofTrace t;
  t.script = subcase == KadSubcase::K3A ? "k3a" : "kad";
  t.inputs = {{"m", m}, {"m'", mp}, {"a'", ap}};
  if (subcase == KadSubcase::K3A && m != 3) {
    t.rejection = "subcase k3A needs m = 3";
    return t;
  }
  if (subcase == KadSubcase::KAD && (m < 5 || m % 2 == 0)) {
    t.rejection = "subcase kAD needs m odd and >= 5";
    return t;
  }
  if (mp < 3) {
    t.rejection = "m' must be >= 3";
    return t;
  }
  if (ap <= 0 || ap >= mp) {
    t.rejection = "need 0 < a' < m'";
    return t;
  }
  if (std::gcd(ap, mp) != 1) {
    t.rejection = "need gcd(a', m') = 1";
    return t;
  }
  if (2 * (mp - ap) >= mp) {
    t.rejection = "need m'-a' < m'/2, got m'-a' = " + std::to_string(mp - ap);
    return t;
  }

  Recorder rec(t);
  const MarkedPoint P{"P", m}, Q{"Q", mp}, R{"R", 2};
  const std::int64_t s = mp - ap;
  const std::int64_t half_up = (m + 1) / 2, half_down = (m - 1) / 2;

  if (subcase == KadSubcase::K3A) {
    EllDivisor w1 = D(-1, {{P, 2}, {Q, s}}), w2 = D(-1, {{P, 1}, {R, 1}});
    EllDivisor A1 = D(-1, {{P, 2}, {Q, s}}), B1 = D(0, {{Q, 1}});
    EllDivisor A2 = D(-1, {{P, 1}, {R, 1}}), B2 = D(-1, {{R, 1}});

    rec.number("H^i(gr0 omega)", vanishing(w1) + vanishing(w2), Relation::Eq, 0);
    auto a2w = tensor(A2, w2), b2w = tensor(B2, w2), a1w = tensor(A1, w1), b1w = tensor(B1, w1);
    rec.divisor("A2.omega", a2w, D(-1, {{P, 2}}), vanishing(a2w), Relation::Eq, 0);
    rec.divisor("B2.omega", b2w, D(-1, {{P, 1}}), vanishing(b2w), Relation::Eq, 0);
    rec.divisor("A1.omega", a1w, D(-1, {{P, 1}, {Q, 2 * s}}), vanishing(a1w), Relation::Eq, 0);
    rec.divisor("B1.omega", b1w, D(-1, {{P, 2}, {Q, s + 1}}), vanishing(b1w), Relation::Eq, 0);
    rec.number("H^i(gr1 omega)", vanishing(a2w) + vanishing(b2w) + vanishing(a1w) + vanishing(b1w),
               Relation::Eq, 0);

    auto abw = tensor(tensor(A2, B2), w2), bbw = tensor(power(B2, 2), w2);
    rec.divisor("h1(A2.B2.omega)", abw, D(-2, {{P, 2}, {R, 1}}), q(h1(abw)), Relation::Eq, 1);
    rec.divisor("h1(B2^2.omega)", bbw, D(-2, {{P, 1}, {R, 1}}), q(h1(bbw)), Relation::Eq, 1);
    Rational s2_h1 = q(h1(abw) + h1(bbw));
    rec.number("h1(S2 gr1 O . omega) lower bound", s2_h1, Relation::Ge, 2);
    // The cokernel of S2(gr1) -> gr2 has length at most 1.
    rec.number("h1(gr2 omega) lower bound", s2_h1 - 1, Relation::Ge, 1, StepVerdict::ForcesCb);

    std::int64_t gr1 = glued_h0(A1, A2, reduced_node_dim(A1, A2, "P", m)) +
                       glued_h0(B1, B2, reduced_node_dim(B1, B2, "P", m));
    rec.number("h0(gr1 O)", q(gr1), Relation::Eq, 0);

    auto a1a1 = power(A1, 2), a2a2 = power(A2, 2), b1b1 = power(B1, 2), b2b2 = power(B2, 2);
    auto a1b1 = tensor(A1, B1), a2b2 = tensor(A2, B2);
    rec.divisor("A1^2", a1a1, D(-1, {{P, 1}, {Q, 2 * s}}), q(h0(a1a1)), Relation::Eq, 0);
    rec.divisor("A2^2", a2a2, D(-1, {{P, 2}}), q(h0(a2a2)), Relation::Eq, 0);
    rec.divisor("B1^2", b1b1, D(0, {{Q, 2}}), q(h0(b1b1)), Relation::Eq, 1);
    rec.divisor("B2^2", b2b2, D(-1, {}), q(h0(b2b2)), Relation::Eq, 0);
    rec.divisor("A1.B1", a1b1, D(-1, {{P, 2}, {Q, s + 1}}), q(h0(a1b1)), Relation::Eq, 0);
    rec.divisor("A2.B2", a2b2, D(-1, {{P, 1}}), q(h0(a2b2)), Relation::Eq, 0);
    std::int64_t s2 = glued_h0(a1a1, a2a2, reduced_node_dim(a1a1, a2a2, "P", m)) +
                      glued_h0(a1b1, a2b2, reduced_node_dim(a1b1, a2b2, "P", m)) +
                      glued_h0(b1b1, b2b2, reduced_node_dim(b1b1, b2b2, "P", m));
    rec.number("h0(S2 gr1 O)", q(s2), Relation::Eq, 0);
    rec.number("h0(gr2 O) upper bound", q(s2 + 1), Relation::Le, 1);
    rec.number("independent images of t1, t2 in H0(gr2 O)", q(2), Relation::Gt, q(s2 + 1),
               StepVerdict::Contradiction);
    return t;
  }

  EllDivisor A1 = D(-1, {{P, half_up}, {Q, s}}), A2 = D(0, {{P, half_down}, {R, 1}});
  EllDivisor B1 = D(0, {{Q, 1}}), B2 = D(-1, {{R, 1}});
  EllDivisor w1 = D(-1, {{P, half_up}, {Q, s}}), w2 = D(-1, {{P, half_down}, {R, 1}});

  struct Row {
    const char* name;
    EllDivisor value;
    EllDivisor expected;
  };
  std::vector<Row> table = {
      {"A1", A1, D(-1, {{P, half_up}, {Q, s}})},
      {"A2", A2, D(0, {{P, half_down}, {R, 1}})},
      {"B1", B1, D(0, {{Q, 1}})},
      {"B2", B2, D(-1, {{R, 1}})},
      {"A1^2", power(A1, 2), D(-1, {{P, 1}, {Q, 2 * s}})},
      {"A2^2", power(A2, 2), D(1, {{P, m - 1}})},
      {"B1^2", power(B1, 2), D(0, {{Q, 2}})},
      {"B2^2", power(B2, 2), D(-1, {})},
      {"A1.B1", tensor(A1, B1), D(-1, {{P, half_up}, {Q, s + 1}})},
      {"A2.B2", tensor(A2, B2), D(0, {{P, half_down}})},
  };
  for (const auto& row : table) {
    rec.divisor(std::string("deg ") + row.name, row.value, row.expected, ell_deg(row.value), Relation::Eq,
                ell_deg(row.expected));
  }

  auto ext1 = tensor(power(B1, 2), dual(A1));
  std::optional<EllDivisor> ext1_stated;
  if (ap + 2 < mp) ext1_stated = D(-1, {{P, half_down}, {Q, ap + 2}});
  rec.divisor("h1(B1^2.A1^-1)", ext1, ext1_stated, q(h1(ext1)), Relation::Eq, 0);

  EllDivisor D1 = power(B1, 2), E1 = A1;
  EllDivisor D2 = D(0, {}), E2 = D(-1, {{P, half_down}, {R, 1}});
  rec.number("H^i(gr0 omega)", vanishing(w1) + vanishing(w2), Relation::Eq, 0);
  auto wb1 = tensor(w1, B1), wb2 = tensor(w2, B2);
  rec.divisor("omega.B1", wb1, D(-1, {{P, half_up}, {Q, s + 1}}), vanishing(wb1), Relation::Eq, 0);
  rec.divisor("omega.B2", wb2, D(-1, {{P, half_down}}), vanishing(wb2), Relation::Eq, 0);

  auto ebd1 = tensor(tensor(E1, B1), dual(D1)), ebd2 = tensor(tensor(E2, B2), dual(D2));
  rec.divisor("h1(E.B.D^-1 | C1)", ebd1, D(-1, {{P, half_up}, {Q, s - 1}}), q(h1(ebd1)), Relation::Eq, 0);
  rec.divisor("h1(E.B.D^-1 | C2)", ebd2, D(-1, {{P, half_down}}), q(h1(ebd2)), Relation::Eq, 0);

  auto we1 = tensor(w1, E1), we2 = tensor(w2, E2);
  rec.divisor("omega.E1", we1, D(-1, {{P, 1}, {Q, 2 * s}}), vanishing(we1), Relation::Eq, 0);
  rec.divisor("omega.E2", we2, D(-1, {{P, m - 1}}), vanishing(we2), Relation::Eq, 0);

  auto web2 = tensor(tensor(w2, E2), B2);
  rec.divisor("h1(omega.E.B2)", web2, D(-2, {{P, m - 1}, {R, 1}}), q(h1(web2)), Relation::Eq, 1,
              StepVerdict::ForcesCb);

  rec.number("length of O/N at generic points", q(4), Relation::Eq, 4);
  std::int64_t gr1 = glued_h0(A1, A2, reduced_node_dim(A1, A2, "P", m)) +
                     glued_h0(B1, B2, reduced_node_dim(B1, B2, "P", m));
  rec.number("h0(gr1 O)", q(gr1), Relation::Eq, 1);
  rec.number("mult of t1, t2 along C1 lower bound", q(2), Relation::Ge, 2);

  auto a1a1 = power(A1, 2), a2a2 = power(A2, 2), b1b1 = power(B1, 2), b2b2 = power(B2, 2);
  auto a1b1 = tensor(A1, B1), a2b2 = tensor(A2, B2);
  std::int64_t on_c1 = glued_image_on_first(a1a1, a2a2, reduced_node_dim(a1a1, a2a2, "P", m)) +
                       glued_image_on_first(a1b1, a2b2, reduced_node_dim(a1b1, a2b2, "P", m)) +
                       glued_image_on_first(b1b1, b2b2, reduced_node_dim(b1b1, b2b2, "P", m));
  rec.number("image of H0(gr2 O) on C1", q(on_c1), Relation::Eq, 0);
  rec.number("mult of t2 along C1 lower bound", q(on_c1 == 0 ? 3 : 2), Relation::Ge, 3);
  rec.number("mult(t1) * mult(t2) along C1 lower bound", q(2 * (on_c1 == 0 ? 3 : 2)), Relation::Gt, 4,
             on_c1 == 0 ? StepVerdict::Contradiction : StepVerdict::Holds);
  return t;
}

namespace {

void check_outcome(SweepSummary& s, const DisproofTrace& t, const std::string& tag) {
  if (!t.consistent()) {
    for (const auto& step : t.steps) {
      if (!step.as_claimed) {
        s.failures.push_back(tag + ": step '" + step.name + "' computed " + to_string(step.value) +
                             (step.form.empty() ? "" : " " + step.form) + ", expected " + to_string(step.relation) +
                             " " + to_string(step.target) +
                             (step.expected_form.empty() ? "" : " " + step.expected_form));
      }
    }
  }
  if (t.outcome == StepVerdict::Contradiction) ++s.contradictions;
  else s.failures.push_back(tag + ": no contradiction reached");
}

std::string tuple_tag(std::int64_t m, std::int64_t mp, std::int64_t ap) {
  return "(" + std::to_string(m) + "," + std::to_string(mp) + "," + std::to_string(ap) + ")";
}

std::string rejection_key(const std::string& reason) {
  auto cut = reason.find_first_of(":,");
  return cut == std::string::npos ? reason : reason.substr(0, cut);
}

}  // namespace

SweepSummary ic_sweep(std::int64_t sweep_max) {
  SweepSummary s;
  s.script = "ic";
  s.sweep_max = sweep_max;
  for (std::int64_t m = 5; m <= sweep_max; m += 2) {
    for (std::int64_t mp = 3; mp <= sweep_max; ++mp) {
      for (std::int64_t ap = 1; ap < mp; ++ap) {
        ++s.tuples;
        auto t = ic_disproof(m, mp, ap);
        const std::string tag = tuple_tag(m, mp, ap);
        if (t.rejected()) {
          ++s.rejections[rejection_key(*t.rejection)];
          continue;
        }
        ++s.admissible;
        const TraceStep* d2 = t.find("d=2: deg A + 2 deg B");
        if (!d2 || d2->value != q(mp + 1 - 2 * ap, mp)) s.failures.push_back(tag + ": d=2 value mismatch");
        if (d2 && d2->value == 0) {
          ++s.forced_cb;
          if (2 * ap != mp + 1 || m <= mp) s.failures.push_back(tag + ": survivor violates 2a'=m'+1, m>m'");
          const TraceStep* d3 = t.find("d=3: deg A + 3 deg B");
          if (!d3 || d3->value != -q(m + mp, 2 * m * mp) || d3->value >= 0) {
            s.failures.push_back(tag + ": d=3 value mismatch");
          }
        }
        check_outcome(s, t, tag);
      }
    }
  }
  return s;
}

SweepSummary kad_sweep(std::int64_t sweep_max, KadSubcase subcase) {
  SweepSummary s;
  s.script = subcase == KadSubcase::K3A ? "k3a" : "kad";
  s.sweep_max = sweep_max;
  std::vector<std::int64_t> ms;
  if (subcase == KadSubcase::K3A) ms = {3};
  else for (std::int64_t m = 5; m <= sweep_max; m += 2) ms.push_back(m);
  for (auto m : ms) {
    for (std::int64_t mp = 3; mp <= sweep_max; ++mp) {
      for (std::int64_t ap = 1; ap < mp; ++ap) {
        ++s.tuples;
        auto t = kad_disproof(m, mp, ap, subcase);
        if (t.rejected()) {
          ++s.rejections[rejection_key(*t.rejection)];
          continue;
        }
        ++s.admissible;
        for (const auto& step : t.steps) {
          if (step.verdict == StepVerdict::ForcesCb) {
            ++s.forced_cb;
            break;
          }
        }
        check_outcome(s, t, tuple_tag(m, mp, ap));
      }
    }
  }
  return s;
}

const char* to_string(Relation r) {
  switch (r) {
    case Relation::Eq: return "=";
    case Relation::Lt: return "<";
    case Relation::Le: return "<=";
    case Relation::Gt: return ">";
    case Relation::Ge: return ">=";
  }
  return "=";
}

const char* to_string(KadSubcase s) { return s == KadSubcase::K3A ? "k3a" : "kad"; }

KadSubcase parse_subcase(const std::string& s) {
  if (s == "k3a" || s == "k3A") return KadSubcase::K3A;
  if (s == "kad" || s == "kAD") return KadSubcase::KAD;
  throw InputError("subcase must be k3a or kad, got '" + s + "'");
}

}  // namespace germkit

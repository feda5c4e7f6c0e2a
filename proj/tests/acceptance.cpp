// Prints one PASS/FAIL line per acceptance criterion; exits 1 if any fails.

#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include "germkit/class_group.hpp"
#include "germkit/corpus.hpp"
#include "germkit/cyclic_quot.hpp"
#include "germkit/disproof.hpp"
#include "germkit/ell_calc.hpp"
#include "germkit/germ_rules.hpp"
#include "germkit/resolution.hpp"
#include "oracles.hpp"

using namespace germkit;

namespace {

Rational Q(std::int64_t n, std::int64_t d = 1) { return make_rational(n, d); }

// Collects the first failing fact of a criterion.
struct Check {
  std::string failure;
  void expect(bool ok, const std::string& what) {
    if (!ok && failure.empty()) failure = what;
  }
};

ConfigGraph corpus_graph(const std::string& name) { return parse_graph(Corpus::builtin().file(name)); }

std::map<std::string, Rational> k_values(const ConfigGraph& g) {
  std::map<std::string, Rational> out;
  for (const auto& c : k_dot_components(g, all_codiscrepancies(g)).components) out[c.id] = c.k_dot_c;
  return out;
}

void iidual(Check& c) {
  auto g = corpus_graph("iidual.graph");
  auto d = codiscrepancy(g, {"v3", "v2", "v4", "v7"});
  c.expect(d.at("v3") == 1 && d.at("v2") == Q(3, 4) && d.at("v4") == Q(3, 4) && d.at("v7") == Q(1, 2),
           "delta on the star");
  auto k = k_values(g);
  for (const char* id : {"v1", "v5", "v6", "v8"}) {
    c.expect(k[id] == Q(-1, 4), std::string("K.C at ") + id);
    c.expect(local_primitivity(k[id], 4).primitive, std::string("primitivity at ") + id);
  }
  c.expect(k["v9"] == Q(-1, 2), "K.C at the square component");
  c.expect(local_primitivity(k["v9"], 4).splitting_degree == 2, "splitting degree of the square component");
}

void k1a_c(Check& c) {
  auto chain = HJChain::make({3, 2, 5, 4, 2});
  auto s = chain_to_quot(chain);
  c.expect(s == CycQuot::make(144, 59), "quotient 1/144(1,59)");
  auto cert = classify_T(s);
  c.expect(cert.verdict && t_index(cert) == 12, "class T of index 12");
  auto g = corpus_graph("k1a_c_k2.graph");
  auto d = codiscrepancy(g, {"e1", "e2", "e3", "e4", "e5"});
  c.expect(d.at("e2") == Q(3, 4), "d at E2");
  auto k = k_values(g);
  c.expect(k["c1"] == Q(-1, 4), "K.C1");
  c.expect(local_primitivity(k["c1"], 12).splitting_degree == 3, "splitting degree 3");
}

void k1a_a(Check& c) {
  for (std::int64_t m = 3; m <= 30; ++m) {
    std::vector<std::int64_t> entries(static_cast<std::size_t>(m - 2), 2);
    entries.push_back(m + 2);
    auto chain = HJChain::make(entries);
    auto s = chain_to_quot(chain);
    const std::string at = " at m = " + std::to_string(m);
    c.expect(s == CycQuot::make(m * m, m * (m - 1) - 1), "quotient" + at);
    auto cert = classify_T(s);
    c.expect(cert.verdict && t_index(cert) == m, "class T" + at);
    c.expect(quot_to_chain(s) == chain, "round trip" + at);
  }
}

void cd3(Check& c) {
  auto g = corpus_graph("cd3_a.graph");
  auto clusters = exceptional_clusters(g);
  c.expect(clusters.size() == 2, "two clusters reported");
  auto d = codiscrepancy(g, {"v4", "v3", "v5", "v7"});
  c.expect(d.at("v4") == 1 && d.at("v3") == Q(2, 3) && d.at("v5") == Q(2, 3) && d.at("v7") == Q(2, 3),
           "fork delta");
  c.expect(singularity_class(d) == SingularityClass::LogCanonicalStrict, "fork is log canonical");
  auto extra = codiscrepancy(g, {"v1"});
  c.expect(extra.at("v1") == 0 && du_val_A(HJChain::make({2})) == 1, "extra A1 cluster");
  Rational table_value;
  for (const auto& r : table2_rows())
    if (r.type == "cD/3") table_value = r.kc_coef;
  for (const auto& [id, v] : k_values(g)) c.expect(v == Q(-1, 3) && v == table_value, "K.C at " + id);
}

void ic_sweep_replay(Check& c) {
  std::int64_t admissible = 0, survivors = 0;
  for (std::int64_t m = 5; m <= 49; m += 2) {
    for (std::int64_t mp = 3; mp <= 49; ++mp) {
      for (std::int64_t ap = 1; ap < mp; ++ap) {
        auto t = ic_disproof(m, mp, ap);
        if (t.rejected()) continue;
        ++admissible;
        std::ostringstream at;
        at << " at (" << m << "," << mp << "," << ap << ")";
        const TraceStep* d2 = t.find("d=2: deg A + 2 deg B");
        c.expect(d2 && d2->value == Q(mp + 1 - 2 * ap, mp), "d = 2 value" + at.str());
        c.expect(t.consistent() && t.outcome == StepVerdict::Contradiction, "contradiction" + at.str());
        if (const TraceStep* d3 = t.find("d=3: deg A + 3 deg B")) {
          ++survivors;
          c.expect(2 * ap == mp + 1 && m > mp, "survivor constraints" + at.str());
          c.expect(d3->value == -Q(m + mp, 2 * m * mp) && d3->value < 0, "d = 3 value" + at.str());
        }
      }
    }
  }
  c.expect(admissible > 0 && survivors > 0, "sweep is nonempty");
  auto summary = ic_sweep(49);
  c.expect(summary.ok() && summary.admissible == admissible, "sweep summary agrees");
}

void kad_scripts(Check& c) {
  std::int64_t k3a = 0, kad = 0;
  for (std::int64_t mp = 3; mp <= 49; ++mp) {
    for (std::int64_t ap = 1; ap < mp; ++ap) {
      auto t = kad_disproof(3, mp, ap, KadSubcase::K3A);
      if (!t.rejected()) {
        ++k3a;
        const std::string at = " at (3," + std::to_string(mp) + "," + std::to_string(ap) + ")";
        auto value = [&](const char* name) {
          const TraceStep* s = t.find(name);
          return s ? s->value : Q(-99);
        };
        c.expect(value("h1(A2.B2.omega)") == 1 && value("h1(B2^2.omega)") == 1, "k3A h1 values" + at);
        c.expect(value("h0(gr1 O)") == 0 && value("h0(S2 gr1 O)") == 0, "k3A h0 values" + at);
        c.expect(t.consistent() && t.outcome == StepVerdict::Contradiction, "k3A contradiction" + at);
      }
      for (std::int64_t m = 5; m <= 49; m += 2) {
        auto u = kad_disproof(m, mp, ap, KadSubcase::KAD);
        if (u.rejected()) continue;
        ++kad;
        const std::string at = " at (" + std::to_string(m) + "," + std::to_string(mp) + "," + std::to_string(ap) + ")";
        std::size_t degree_steps = 0;
        for (const auto& s : u.steps) degree_steps += s.name.rfind("deg ", 0) == 0 && s.as_claimed ? 1 : 0;
        c.expect(degree_steps == 10, "kAD degree table" + at);
        const TraceStep* h = u.find("h1(omega.E.B2)");
        c.expect(h && h->value == 1 && h->as_claimed, "kAD h1 step" + at);
        c.expect(u.consistent() && u.outcome == StepVerdict::Contradiction, "kAD contradiction" + at);
      }
    }
  }
  c.expect(k3a > 0 && kad > 0, "both subcases have admissible tuples");
}

void table2(Check& c) {
  auto report = check_table2();
  c.expect(report.all_pass(), "check_table2");
  std::set<std::string> k_plus;
  for (const auto& r : table2_rows()) {
    const std::int64_t m = r.parametric ? r.m_min : 1;
    const std::int64_t index = r.index_coef * m;
    Rational kc = r.kc_coef / Rational(static_cast<long>(m));
    c.expect(Rational(static_cast<long>(index)) * abs(kc) == 1, "index * |K.C| for " + r.type);
    auto kp = flip_transfer({index, {}, r.plus_indices}, kc);
    c.expect(kp == r.k_plus, "K+ for " + r.type + ", " + r.variant);
    k_plus.insert(to_string(kp));
  }
  c.expect(k_plus == std::set<std::string>{"1/2", "1", "1/6"}, "K+ values 1/2, 1, 1/6");
}

void rules(Check& c) {
  auto corpus = Corpus::builtin();
  auto verdict = [&](const std::string& f) { return validate_against_table(parse_descriptor(corpus.file(f))); };
  const std::map<std::string, int> rows = {
      {"cd3_a.germ", 3}, {"cd3_b.germ", 3},    {"cd3_c.germ", 3},    {"iia.germ", 4},
      {"iidual.germ", 6}, {"iib.germ", 7},     {"ic.germ", 8},       {"k1a_a_m3.germ", 9},
      {"k1a_c_k2.germ", 9}, {"kad.germ", 11},  {"cax2_pair.germ", 2}, {"gorenstein.germ", 1}};
  for (const auto& [f, row] : rows) {
    auto v = verdict(f);
    c.expect(v.accepted && v.row == row, f + " in row " + std::to_string(row));
  }
  const std::map<std::string, Citation> forbidden = {
      {"forbidden_ic_k2a.germ", Citation::IcMeetsK2aExcluded},
      {"forbidden_k2a_kad.germ", Citation::KadK3aMeetsK2aExcluded},
      {"forbidden_k2a_k3a.germ", Citation::KadK3aMeetsK2aExcluded},
      {"forbidden_iidual_iib.germ", Citation::IIdualMeetsIIBExcluded}};
  for (const auto& [f, cite] : forbidden) {
    auto v = verdict(f);
    c.expect(!v.accepted && v.citation == cite, f + " rejected with its citation");
  }
  c.expect(!verdict("iia_flip_n5.germ").accepted, "IIA flipping N = 5 rejected");
  auto n4 = verdict("iia_flip_n4.germ");
  c.expect(n4.accepted && n4.row == 4, "IIA flipping N = 4 accepted");
}

void properties(Check& c) {
  std::mt19937_64 rng(1);
  using oracle::uniform;
  for (int i = 0; i < 1000; ++i) {
    std::map<std::string, PointWeight> ra, rb;
    for (const char* label : {"P", "Q", "R"}) {
      const auto m = uniform(rng, 2, 11);
      ra[label] = {m, uniform(rng, 0, m - 1)};
      rb[label] = {m, uniform(rng, 0, m - 1)};
    }
    auto a = EllDivisor::normalize(uniform(rng, -5, 5), ra);
    auto b = EllDivisor::normalize(uniform(rng, -5, 5), rb);
    c.expect(ell_deg(tensor(a, b)) == ell_deg(a) + ell_deg(b), "degree additivity");
    c.expect(ell_deg(dual(a)) == -ell_deg(a), "degree of the dual");
    c.expect(dual(dual(a)) == a, "dual involution");
    c.expect(h0(a) - h1(a) == a.c() + 1, "h0 - h1 = c + 1");
  }
  for (std::int64_t n = 2; n <= 200; ++n)
    for (std::int64_t q = 1; q < n; ++q)
      if (std::gcd(n, q) == 1) {
        auto s = CycQuot::make(n, q);
        c.expect(chain_to_quot(quot_to_chain(s)) == s, "round trip at " + s.to_string());
      }
  const auto t_set = oracle::t_singularities(400);
  for (std::int64_t n = 2; n <= 400; ++n)
    for (std::int64_t q = 1; q < n; ++q)
      if (std::gcd(n, q) == 1) {
        auto s = CycQuot::make(n, q);
        c.expect(classify_T(s).verdict == (t_set.count({n, q}) == 1), "T agreement at " + s.to_string());
      }
  for (int i = 0; i < 10000; ++i) {
    const auto n = static_cast<std::size_t>(uniform(rng, 1, 5));
    auto m = i % 2 == 0 ? oracle::random_symmetric(rng, n, -6, 1) : oracle::random_graph_matrix(rng, n);
    IntersectionMatrix im{std::vector<std::string>(n, "x"), m};
    c.expect(is_negative_definite(im) == oracle::negative_definite(m), "negative definiteness oracle");
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria = {
      {"IIdual example: delta, K-values, primitivity", iidual},
      {"k1A-c at k = 2: quotient, class T, delta, K.C1, splitting degree", k1a_c},
      {"k1A-a family 3 <= m <= 30: quotient, class T, round trip", k1a_a},
      {"cD/3 case a): fork delta, K-values, extra A1 cluster", cd3},
      {"IC sweep to 49: d = 2 and d = 3 values, all contradicted", ic_sweep_replay},
      {"k3A and kAD scripts to 49: cohomology values, contradictions", kad_scripts},
      {"Table 2 consistency and flipped K-values", table2},
      {"rule engine: corpus rows, forbidden pairs, IIA flipping bound", rules},
      {"property suites: ell-divisors, HJ round trips, class T, definiteness", properties},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.failure = std::string("exception: ") + e.what();
    }
    const bool ok = c.failure.empty();
    failed += ok ? 0 : 1;
    std::cout << (ok ? "PASS" : "FAIL") << " " << (i + 1) << " " << criteria[i].first;
    if (!ok) std::cout << " (" << c.failure << ")";
    std::cout << "\n";
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria pass\n";
  return failed == 0 ? 0 : 1;
}

#include "germkit/corpus.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include "corpus_data.hpp"
#include "germkit/class_group.hpp"
#include "germkit/errors.hpp"
#include "germkit/resolution.hpp"

namespace germkit {

namespace {

std::string str(const Rational& r) { return to_string(r); }

Json cluster_json(const ConfigGraph& g, const Cluster& c, std::optional<Codiscrepancy>& delta) {
  Json j;
  j["vertices"] = c.vertices;
  j["shape"] = std::string(to_string(c.shape));
  IntersectionMatrix m = intersection_matrix(g, c.vertices);
  Json minors = Json::array();
  for (const auto& v : leading_minors(m)) minors.push_back(v.get_str());
  j["minors"] = minors;
  const bool nd = is_negative_definite(m);
  j["negative_definite"] = nd;
  if (nd) {
    delta = codiscrepancy(g, c.vertices);
    Json d = Json::object();
    for (const auto& id : c.vertices) d[id] = str(delta->at(id));
    j["delta"] = d;
    j["max_delta"] = str(delta->max_coeff());
    j["class"] = std::string(to_string(singularity_class(*delta)));
  }
  if (c.shape == ClusterShape::Chain) {
    auto order = chain_order(g, c);
    std::vector<std::int64_t> entries;
    for (const auto& id : order) entries.push_back(-g.vertex(g.index_of(id)).self_int);
    j["chain_order"] = order;
    j["chain_info"] = chain_report(HJChain::make(entries));
  }
  return j;
}

}  // namespace

Json analyze(const ConfigGraph& g, const AnalyzeOptions& opts) {
  Json j;
  j["vertices"] = g.size();
  j["exceptional"] = g.exceptional_indices().size();
  j["component_count"] = g.component_indices().size();
  j["tree"] = is_tree(g);

  std::vector<Codiscrepancy> deltas;
  bool contractible = true;
  Json clusters = Json::array();
  std::vector<std::int64_t> t_indices;
  std::size_t non_du_val = 0;
  for (const auto& c : exceptional_clusters(g)) {
    std::optional<Codiscrepancy> delta;
    Json cj = cluster_json(g, c, delta);
    if (delta) deltas.push_back(std::move(*delta));
    else contractible = false;
    const bool du_val = cj.contains("chain_info") && !cj["chain_info"]["du_val"].is_null();
    if (!du_val) ++non_du_val;
    if (cj.contains("chain_info") && cj["chain_info"]["t"]["verdict"].get<bool>()) {
      t_indices.push_back(cj["chain_info"]["t"]["index"].get<std::int64_t>());
    }
    clusters.push_back(std::move(cj));
  }
  j["clusters"] = clusters;
  j["contractible"] = contractible;

  std::optional<std::int64_t> index = opts.index;
  std::string source = index ? "given" : "";
  if (!index && non_du_val == 1 && t_indices.size() == 1) {
    index = t_indices[0];
    source = "class T chain";
  }
  if (index) {
    j["index"] = *index;
    j["index_source"] = source;
  } else {
    j["index"] = nullptr;
    j["index_source"] = nullptr;
  }
  j["generator"] = opts.generator;

  Json comps = Json::array();
  if (contractible) {
    KReport k = k_dot_components(g, deltas);
    for (const auto& c : k.components) {
      Json cj{{"id", c.id},
              {"adjacent_sum", str(c.adjacent_sum)},
              {"k_dot_c", str(c.k_dot_c)},
              {"k_negative", c.k_negative}};
      if (index) {
        try {
          cj["primitivity"] = to_json(local_primitivity(c.k_dot_c, *index, opts.generator));
        } catch (const InputError& e) {
          cj["primitivity"] = Json{{"error", e.what()}};
        }
      }
      comps.push_back(cj);
    }
    j["feasible"] = k.germ_feasible;
  } else {
    j["feasible"] = false;
  }
  j["components"] = comps;
  return j;
}

std::string render_analysis(const Json& j) {
  std::ostringstream out;
  out << "vertices: " << j["vertices"].get<std::size_t>() << " (" << j["exceptional"].get<std::size_t>()
      << " exceptional, " << j["component_count"].get<std::size_t>() << " components)\n";
  out << "tree: " << (j["tree"].get<bool>() ? "yes" : "no") << "\n";
  std::size_t n = 0;
  for (const auto& c : j["clusters"]) {
    out << "cluster " << ++n << " (" << c["shape"].get<std::string>() << "):";
    for (const auto& v : c["vertices"]) out << " " << v.get<std::string>();
    out << "\n  leading minors:";
    for (const auto& v : c["minors"]) out << " " << v.get<std::string>();
    out << "\n  negative definite: " << (c["negative_definite"].get<bool>() ? "yes" : "no") << "\n";
    if (c.contains("delta")) {
      out << "  delta:";
      for (const auto& [id, v] : c["delta"].items()) out << " " << id << "=" << v.get<std::string>();
      out << "\n  class: " << c["class"].get<std::string>() << " (max " << c["max_delta"].get<std::string>()
          << ")\n";
    }
    if (c.contains("chain_info")) {
      std::istringstream lines(render_chain_report(c["chain_info"]));
      for (std::string line; std::getline(lines, line);) out << "  " << line << "\n";
    }
  }
  out << "contractible: " << (j["contractible"].get<bool>() ? "yes" : "no") << "\n";
  if (!j["index"].is_null()) {
    out << "index: " << j["index"].get<std::int64_t>() << " (" << j["index_source"].get<std::string>()
        << "), K generates the local class group: " << (j["generator"].get<bool>() ? "assumed" : "not assumed")
        << "\n";
  }
  for (const auto& c : j["components"]) {
    out << "component " << c["id"].get<std::string>() << ": K.C = " << c["k_dot_c"].get<std::string>()
        << " (delta.C = " << c["adjacent_sum"].get<std::string>() << ")";
    if (c["k_dot_c"].get<std::string>() == "0") out << " K.C = 0, infeasible";
    else out << (c["k_negative"].get<bool>() ? " K-negative" : " not K-negative");
    if (c.contains("primitivity")) {
      const auto& p = c["primitivity"];
      if (p.contains("error")) {
        out << "; primitivity: " << p["error"].get<std::string>();
      } else {
        out << "; " << (p["primitive"].get<bool>() ? "primitive" : "imprimitive") << ", splitting degree "
            << p["splitting_degree"].get<std::int64_t>();
        if (!p["generator_assumed"].get<bool>()) out << " (upper bound)";
      }
    }
    out << "\n";
  }
  out << "feasible: " << (j["feasible"].get<bool>() ? "yes" : "no") << "\n";
  return out.str();
}

Corpus Corpus::builtin() {
  Corpus c;
  for (const auto& [name, text] : detail::embedded_corpus()) c.files.emplace(name, text);
  return c;
}

Corpus Corpus::from_directory(const std::string& dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) throw InputError("not a directory: " + dir);
  Corpus c;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    auto ext = entry.path().extension().string();
    if (ext != ".graph" && ext != ".germ" && ext != ".json") continue;
    std::ifstream in(entry.path());
    std::stringstream buf;
    buf << in.rdbuf();
    c.files.emplace(entry.path().filename().string(), buf.str());
  }
  return c;
}

const std::string& Corpus::file(const std::string& name) const {
  auto it = files.find(name);
  if (it == files.end()) throw InputError("corpus has no file '" + name + "'");
  return it->second;
}

bool VerifyReport::ok() const { return failures() == 0 && !checks.empty(); }

std::size_t VerifyReport::failures() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const VerifyCheck& c) {
    return !c.pass;
  }));
}

Json VerifyReport::to_json() const {
  Json j;
  j["sweep_max"] = sweep_max;
  Json cs = Json::array();
  for (const auto& c : checks) {
    cs.push_back({{"section", c.section},
                  {"subject", c.subject},
                  {"item", c.item},
                  {"pass", c.pass},
                  {"origin", c.origin},
                  {"expected", c.expected},
                  {"computed", c.computed}});
  }
  j["checks"] = cs;
  j["total"] = checks.size();
  j["failed"] = failures();
  j["ok"] = ok();
  return j;
}

std::string VerifyReport::to_text() const {
  std::ostringstream out;
  for (const auto& c : checks) {
    out << (c.pass ? "PASS " : "FAIL ") << c.section << " " << c.subject << " " << c.item << " [" << c.origin
        << "]\n";
    if (!c.pass) {
      out << "  expected: " << c.expected << "\n";
      out << "  computed: " << c.computed << "\n";
    }
  }
  out << "verify-paper: " << checks.size() << " checks, " << failures() << " failed (sweep max " << sweep_max
      << ")\n";
  return out.str();
}

std::string k1a_a_graph(std::int64_t m, std::int64_t right_bullets) {
  if (m < 3) throw InputError("k1A-a needs m >= 3");
  if (right_bullets < 1) throw InputError("k1A-a needs at least one right bullet");
  std::ostringstream out;
  out << "vertex l kind=comp self=-1\n";
  for (std::int64_t i = 1; i <= m - 1; ++i) {
    out << "vertex e" << i << " kind=exc self=" << (i == m - 1 ? -(m + 2) : -2) << "\n";
  }
  for (std::int64_t j = 1; j <= right_bullets; ++j) out << "vertex r" << j << " kind=comp self=-1\n";
  out << "edge l e1\n";
  for (std::int64_t i = 1; i < m - 1; ++i) out << "edge e" << i << " e" << i + 1 << "\n";
  for (std::int64_t j = 1; j <= right_bullets; ++j) out << "edge e" << m - 1 << " r" << j << "\n";
  return out.str();
}

std::string k1a_c_graph(std::int64_t k) {
  if (k < 2) throw InputError("k1A-c needs k >= 2");
  std::vector<std::int64_t> chain{2 * k - 1};
  chain.insert(chain.end(), static_cast<std::size_t>(k - 1), 2);
  chain.push_back(5);
  chain.push_back(k + 2);
  chain.insert(chain.end(), static_cast<std::size_t>(2 * k - 3), 2);
  std::ostringstream out;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    out << "vertex e" << i + 1 << " kind=exc self=" << -chain[i] << "\n";
  }
  out << "vertex c1 kind=comp self=-1\nvertex c0 kind=comp self=-1\n";
  for (std::size_t i = 1; i < chain.size(); ++i) out << "edge e" << i << " e" << i + 1 << "\n";
  out << "edge c1 e2\nedge c0 e" << chain.size() << "\n";
  return out.str();
}

namespace {

// Plain (key-sorted) json so comparisons ignore insertion order.
nlohmann::json plain(const Json& j) { return nlohmann::json::parse(j.dump()); }

class Verifier {
 public:
  explicit Verifier(VerifyReport& r) : report_(r) {}

  void check(const std::string& section, const std::string& subject, const std::string& item,
             const nlohmann::json& expected, const nlohmann::json& computed, const std::string& origin) {
    report_.checks.push_back(
        {section, subject, item, expected == computed, expected.dump(), computed.dump(), origin});
  }

  void check_bool(const std::string& section, const std::string& subject, const std::string& item, bool pass,
                  const std::string& expected, const std::string& computed, const std::string& origin) {
    report_.checks.push_back({section, subject, item, pass, expected, computed, origin});
  }

  // Runs `body`; an exception becomes a failed check named `item`.
  void guarded(const std::string& section, const std::string& subject, const std::string& item,
               const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception& e) {
      check_bool(section, subject, item, false, "no error", e.what(), "trivial");
    }
  }

 private:
  VerifyReport& report_;
};

// Projections of an analysis report onto the shapes used in expected.json.
nlohmann::json project(const Json& a, const std::string& key) {
  nlohmann::json out;
  if (key == "tree") return a["tree"].get<bool>();
  if (key == "feasible") return a["feasible"].get<bool>();
  if (key == "clusters") {
    out = nlohmann::json::array();
    for (const auto& c : a["clusters"]) {
      std::string s = c["shape"].get<std::string>();
      for (const auto& v : c["vertices"]) s += " " + v.get<std::string>();
      out.push_back(s);
    }
    return out;
  }
  if (key == "delta") {
    out = nlohmann::json::object();
    for (const auto& c : a["clusters"]) {
      if (!c.contains("delta")) continue;
      for (const auto& [id, v] : c["delta"].items()) out[id] = v;
    }
    return out;
  }
  if (key == "class") {
    out = nlohmann::json::array();
    for (const auto& c : a["clusters"]) out.push_back(c.contains("class") ? c["class"].get<std::string>() : std::string("uncontractible"));
    return out;
  }
  if (key == "k_dot_c" || key == "splitting") {
    out = nlohmann::json::object();
    for (const auto& c : a["components"]) {
      const std::string id = c["id"].get<std::string>();
      if (key == "k_dot_c") out[id] = c["k_dot_c"];
      else if (c.contains("primitivity") && c["primitivity"].contains("splitting_degree")) {
        out[id] = c["primitivity"]["splitting_degree"];
      } else {
        out[id] = nullptr;
      }
    }
    return out;
  }
  if (key == "quotients" || key == "du_val" || key == "t_index") {
    out = nlohmann::json::object();
    for (const auto& c : a["clusters"]) {
      if (!c.contains("chain_info")) continue;
      const std::string first = c["chain_order"][0].get<std::string>();
      const auto& info = c["chain_info"];
      if (key == "quotients") out[first] = info["quotient"];
      else if (key == "du_val") out[first] = plain(info["du_val"]);
      else out[first] = info["t"]["verdict"].get<bool>() ? plain(info["t"]["index"]) : nlohmann::json(nullptr);
    }
    return out;
  }
  throw InputError("unknown expectation key '" + key + "'");
}

std::string verdict_summary(const TableVerdict& v) {
  if (v.accepted) return "accepted row " + std::to_string(v.row);
  return "rejected (" + (v.citation ? std::string(citation_key(*v.citation)) : std::string("?")) + "): " + v.reason;
}

ConfigGraph without(const ConfigGraph& g, const std::set<std::string>& drop) {
  std::vector<Vertex> vs;
  for (const auto& v : g.vertices()) {
    if (!drop.count(v.id)) vs.push_back(v);
  }
  std::vector<std::pair<std::string, std::string>> es;
  for (const auto& [a, b] : g.edges()) {
    const auto& ia = g.vertex(a).id;
    const auto& ib = g.vertex(b).id;
    if (!drop.count(ia) && !drop.count(ib)) es.emplace_back(ia, ib);
  }
  return ConfigGraph::create(std::move(vs), std::move(es));
}

void run_case(Verifier& v, const Corpus& corpus, const std::string& name, const nlohmann::json& entry) {
  const std::string section = "case";
  const ConfigGraph g = parse_graph(corpus.file(entry.at("graph").get<std::string>()));
  AnalyzeOptions opts;
  if (entry.contains("index")) opts.index = entry["index"].get<std::int64_t>();
  const Json a = analyze(g, opts);
  std::optional<GermDescriptor> germ;
  if (entry.contains("germ")) germ = parse_descriptor(corpus.file(entry["germ"].get<std::string>()));

  for (const auto& [key, e] : entry.at("expect").items()) {
    const std::string origin = e.at("origin").get<std::string>();
    if (key == "row") {
      if (!germ) throw InputError("case '" + name + "' expects a row but has no germ file");
      TableVerdict tv = validate_against_table(*germ);
      nlohmann::json computed = tv.accepted ? nlohmann::json(tv.row) : nlohmann::json(verdict_summary(tv));
      v.check(section, name, key, e.at("value"), computed, origin);
      continue;
    }
    v.check(section, name, key, e.at("value"), project(a, key), origin);
  }

  if (!entry.contains("variants")) return;
  for (const auto& var : entry["variants"]) {
    std::set<std::string> drop;
    for (const auto& id : var.at("remove")) drop.insert(id.get<std::string>());
    std::string label = name + "-minus";
    for (const auto& id : drop) label += "-" + id;
    v.guarded("variant", label, "load", [&] {
      if (!germ) throw InputError("variant needs a germ file");
      const ConfigGraph h = without(g, drop);
      const Json ha = analyze(h, opts);
      GermDescriptor d = *germ;
      d.components.clear();
      d.curves.clear();
      for (std::size_t i = 0; i < germ->components.size(); ++i) {
        if (drop.count(germ->curves[i])) continue;
        d.components.push_back(germ->components[i]);
        d.curves.push_back(germ->curves[i]);
      }
      d.kind = parse_germ_kind(var.at("kind").get<std::string>());
      const std::string origin = var.at("origin").get<std::string>();
      v.check("variant", label, "n", var.at("n"), d.n(), origin);
      v.check("variant", label, "feasible", true, ha["feasible"].get<bool>(), origin);
      TableVerdict tv = validate_against_table(d);
      v.check_bool("variant", label, "kind " + var.at("kind").get<std::string>(), tv.accepted,
                   "accepted", verdict_summary(tv), origin);
    });
  }
}

std::string pad(std::int64_t v) {
  std::string s = std::to_string(v);
  return std::string(s.size() < 2 ? 2 - s.size() : 0, '0') + s;
}

void run_k1a_a(Verifier& v, std::int64_t m) {
  const std::string subject = "k1a_a m=" + pad(m);
  v.guarded("family", subject, "load", [&] {
    const Json a = analyze(parse_graph(k1a_a_graph(m, m + 1)));
    const auto& info = a["clusters"][0]["chain_info"];
    const std::int64_t n = m * m, q = m * (m - 1) - 1;
    v.check("family", subject, "quotient", CycQuot{n, q}.to_string(), info["quotient"].get<std::string>(),
            "stated");
    v.check("family", subject, "class T index", m,
            info["t"]["verdict"].get<bool>() ? plain(info["t"]["index"]) : nlohmann::json(nullptr), "stated");
    v.check("family", subject, "round trip", info["chain"].get<std::string>(),
            quot_to_chain(CycQuot::make(n, q)).to_string(), "trivial");
    nlohmann::json kc = nlohmann::json::object();
    kc["l"] = str(make_rational(-(m - 1), m));
    for (std::int64_t j = 1; j <= m + 1; ++j) kc["r" + std::to_string(j)] = str(make_rational(-1, m));
    v.check("family", subject, "k_dot_c", kc, project(a, "k_dot_c"), "derived");

    std::string bad;
    for (std::int64_t big_n = 2; big_n <= m + 1; ++big_n) {
      GermDescriptor d;
      d.components.assign(static_cast<std::size_t>(big_n), ComponentType::k1A);
      d.curves.assign(static_cast<std::size_t>(big_n), "");
      d.kind = big_n == m + 1 ? GermKind::ConicBundle : big_n >= m - 1 ? GermKind::Divisorial : GermKind::Flipping;
      d.points.push_back(NonGorPoint::make(m, "cA/" + std::to_string(m)));
      TableVerdict tv = validate_against_table(d);
      if (!tv.accepted || tv.row != 9) bad += " N=" + std::to_string(big_n) + ": " + verdict_summary(tv) + ";";
    }
    v.check_bool("family", subject, "germ kinds N=2.." + std::to_string(m + 1), bad.empty(), "all accepted in row 9",
                 bad.empty() ? "all accepted in row 9" : bad, "stated");
  });
}

void run_k1a_c(Verifier& v, std::int64_t k) {
  const std::string subject = "k1a_c k=" + std::to_string(k);
  v.guarded("family", subject, "load", [&] {
    const std::int64_t m = 2 * k * (2 * k - 1);
    AnalyzeOptions opts;
    const Json a = analyze(parse_graph(k1a_c_graph(k)), opts);
    const auto& cl = a["clusters"][0];
    const auto& info = cl["chain_info"];
    v.check("family", subject, "quotient", CycQuot{m * m, m * (2 * k + 1) - 1}.to_string(),
            info["quotient"].get<std::string>(), "stated");
    v.check("family", subject, "class T index", m,
            info["t"]["verdict"].get<bool>() ? plain(info["t"]["index"]) : nlohmann::json(nullptr), "stated");
    v.check("family", subject, "delta at E2", str(make_rational(2 * k - 1, 2 * k)),
            cl["delta"]["e2"].get<std::string>(), "stated");
    auto kc = project(a, "k_dot_c");
    v.check("family", subject, "K.C1", str(make_rational(-1, 2 * k)), kc["c1"], "stated");
    auto split = project(a, "splitting");
    v.check("family", subject, "splitting degree of C1", 2 * k - 1, split["c1"], "stated");
    v.check("family", subject, "splitting degree of square", 1, split["c0"], "stated");
  });
}

void run_descriptor(Verifier& v, const Corpus& corpus, const std::string& file, const nlohmann::json& e) {
  const GermDescriptor d = parse_descriptor(corpus.file(file));
  const TableVerdict tv = validate_against_table(d);
  const std::string origin = e.at("origin").get<std::string>();
  nlohmann::json expected = {{"accepted", e.at("accepted")}};
  nlohmann::json computed = {{"accepted", tv.accepted}};
  if (e.contains("row")) {
    expected["row"] = e["row"];
    computed["row"] = tv.accepted ? nlohmann::json(tv.row) : nlohmann::json(nullptr);
  }
  if (e.contains("citation")) {
    expected["citation"] = e["citation"];
    computed["citation"] = tv.citation ? nlohmann::json(std::string(citation_key(*tv.citation))) : nlohmann::json(nullptr);
  }
  v.check("descriptor", file, "verdict", expected, computed, origin);
}

void add_sweep(Verifier& v, const SweepSummary& s) {
  const Json j = to_json(s);
  std::ostringstream computed;
  computed << s.admissible << " admissible of " << s.tuples << ", " << s.contradictions << " contradicted";
  for (const auto& f : s.failures) computed << "; " << f;
  v.check_bool("sweep", s.script, "all admissible tuples contradicted", s.ok(), "every admissible tuple contradicted",
               computed.str(), "stated");
}

}  // namespace

VerifyReport verify_paper(std::int64_t sweep_max, const Corpus& corpus) {
  if (sweep_max < 5) throw InputError("sweep max must be >= 5");
  VerifyReport report;
  report.sweep_max = sweep_max;
  Verifier v(report);

  nlohmann::json expected;
  try {
    expected = nlohmann::json::parse(corpus.file("expected.json"));
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("expected.json: ") + e.what());
  }

  // nlohmann::json objects iterate in key order, which fixes the report order.
  for (const auto& [name, entry] : expected.at("cases").items()) {
    v.guarded("case", name, "load", [&] { run_case(v, corpus, name, entry); });
  }
  for (std::int64_t m = 3; m <= 30; ++m) run_k1a_a(v, m);
  for (std::int64_t k = 2; k <= 6; ++k) run_k1a_c(v, k);
  if (expected.contains("descriptors")) {
    for (const auto& [file, e] : expected["descriptors"].items()) {
      v.guarded("descriptor", file, "load", [&] { run_descriptor(v, corpus, file, e); });
    }
  }
  add_sweep(v, ic_sweep(sweep_max));
  add_sweep(v, kad_sweep(sweep_max, KadSubcase::K3A));
  add_sweep(v, kad_sweep(sweep_max, KadSubcase::KAD));
  for (const auto& line : check_table2(table2_rows(), sweep_max).lines) {
    v.check_bool("table2", line.label, "transfer", line.pass, "consistent", line.detail, "stated");
  }
  return report;
}

}  // namespace germkit

#include "germkit/report.hpp"

#include <sstream>

namespace germkit {

namespace {

std::string str(const Rational& r) { return to_string(r); }

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void render_t(std::ostringstream& out, const Json& t) {
  if (!t.at("verdict").get<bool>()) {
    out << "class T: no\n";
    return;
  }
  out << "class T: yes, index " << t.at("index").get<std::int64_t>() << " (d = " << t.at("d").get<std::int64_t>()
      << ", m = " << t.at("m").get<std::int64_t>() << ", a = " << t.at("a").get<std::int64_t>() << ")\n";
  out << "derivation:";
  for (const auto& step : t.at("derivation")) {
    out << " " << step.at("step").get<std::string>() << " " << step.at("chain").get<std::string>() << ";";
  }
  out << "\n";
}

}  // namespace

Json to_json(const TCertificate& cert) {
  Json j;
  j["quotient"] = cert.quot.to_string();
  j["chain"] = cert.chain.to_string();
  j["verdict"] = cert.verdict;
  if (cert.verdict) {
    j["index"] = t_index(cert);
    j["d"] = cert.d;
    j["m"] = cert.m;
    j["a"] = cert.a;
    Json steps = Json::array();
    for (const auto& s : cert.derivation) {
      steps.push_back({{"step", to_string(s.kind)}, {"chain", s.chain.to_string()}});
    }
    j["derivation"] = steps;
  }
  return j;
}

Json chain_report(const HJChain& chain) {
  CycQuot quot = chain_to_quot(chain);
  Json j;
  j["chain"] = chain.to_string();
  j["quotient"] = quot.to_string();
  j["n"] = quot.n;
  j["q"] = quot.q;
  j["q_inverse"] = inverse_residue(quot);
  HJChain rev{std::vector<std::int64_t>(chain.entries.rbegin(), chain.entries.rend())};
  j["reversed_chain"] = rev.to_string();
  if (auto r = du_val_A(chain)) j["du_val"] = "A" + std::to_string(*r);
  else j["du_val"] = nullptr;
  j["t"] = to_json(classify_T(quot));
  return j;
}

Json quot_report(const CycQuot& quot) {
  Json j;
  j["quotient"] = quot.to_string();
  j["n"] = quot.n;
  j["q"] = quot.q;
  HJChain chain = quot_to_chain(quot);
  j["chain"] = chain.to_string();
  j["q_inverse"] = inverse_residue(quot);
  if (auto r = du_val_A(chain)) j["du_val"] = "A" + std::to_string(*r);
  else j["du_val"] = nullptr;
  j["t"] = to_json(classify_T(quot));
  return j;
}

Json to_json(const PrimitivityReport& r) {
  return Json{{"index", r.index},
              {"image_order", r.image_order},
              {"splitting_degree", r.splitting_degree},
              {"primitive", r.primitive},
              {"generator_assumed", r.generator_assumed},
              {"note", r.note}};
}

Json to_json(const DisproofTrace& t) {
  Json j;
  j["script"] = t.script;
  Json inputs = Json::object();
  for (const auto& [k, v] : t.inputs) inputs[k] = v;
  j["inputs"] = inputs;
  j["rejected"] = t.rejected();
  if (t.rejection) j["rejection"] = *t.rejection;
  Json steps = Json::array();
  for (const auto& s : t.steps) {
    Json step;
    step["name"] = s.name;
    step["value"] = str(s.value);
    step["relation"] = to_string(s.relation);
    step["target"] = str(s.target);
    if (!s.form.empty()) step["form"] = s.form;
    if (!s.expected_form.empty()) step["expected_form"] = s.expected_form;
    step["as_claimed"] = s.as_claimed;
    step["verdict"] = to_string(s.verdict);
    steps.push_back(step);
  }
  j["steps"] = steps;
  j["consistent"] = t.consistent();
  j["outcome"] = to_string(t.outcome);
  return j;
}

Json to_json(const SweepSummary& s) {
  Json j;
  j["script"] = s.script;
  j["sweep_max"] = s.sweep_max;
  j["tuples"] = s.tuples;
  j["admissible"] = s.admissible;
  j["contradictions"] = s.contradictions;
  j["forced_cb"] = s.forced_cb;
  Json rej = Json::object();
  for (const auto& [k, v] : s.rejections) rej[k] = v;
  j["rejections"] = rej;
  j["failures"] = s.failures;
  j["ok"] = s.ok();
  return j;
}

Json to_json(const TableVerdict& v, const GermDescriptor& g) {
  Json j;
  Json comps = Json::array();
  for (auto t : g.components) comps.push_back(std::string(to_string(t)));
  for (std::int64_t i = 0; i < g.gorenstein_components; ++i) comps.push_back("gorenstein");
  j["components"] = comps;
  j["n"] = g.n();
  j["kind"] = std::string(to_string(g.kind));
  Json pts = Json::array();
  for (const auto& p : g.points) {
    Json pj{{"index", p.index}, {"tag", p.tag}};
    if (p.ell) pj["ell"] = *p.ell;
    pts.push_back(pj);
  }
  j["points"] = pts;
  j["accepted"] = v.accepted;
  if (v.accepted) j["row"] = v.row;
  if (!v.reason.empty()) j["reason"] = v.reason;
  if (v.citation) {
    j["citation"] = std::string(citation_key(*v.citation));
    j["citation_text"] = std::string(to_string(*v.citation));
  }
  j["notes"] = v.notes;
  return j;
}

Json to_json(const Table2Report& r) {
  Json lines = Json::array();
  for (const auto& l : r.lines) lines.push_back({{"label", l.label}, {"pass", l.pass}, {"detail", l.detail}});
  return Json{{"lines", lines}, {"all_pass", r.all_pass()}};
}

std::string render_chain_report(const Json& j) {
  std::ostringstream out;
  out << "chain " << j.at("chain").get<std::string>() << " -> " << j.at("quotient").get<std::string>() << "\n";
  out << "reversed " << j.at("reversed_chain").get<std::string>() << " -> 1/" << j.at("n").get<std::int64_t>()
      << "(1," << j.at("q_inverse").get<std::int64_t>() << ")\n";
  out << "Du Val: " << (j.at("du_val").is_null() ? "no" : j.at("du_val").get<std::string>()) << "\n";
  render_t(out, j.at("t"));
  return out.str();
}

std::string render_quot_report(const Json& j) {
  std::ostringstream out;
  out << j.at("quotient").get<std::string>() << " -> chain " << j.at("chain").get<std::string>() << "\n";
  out << "inverse residue q' = " << j.at("q_inverse").get<std::int64_t>() << "\n";
  out << "Du Val: " << (j.at("du_val").is_null() ? "no" : j.at("du_val").get<std::string>()) << "\n";
  render_t(out, j.at("t"));
  return out.str();
}

std::string render_trace(const Json& j) {
  std::ostringstream out;
  out << "script " << j.at("script").get<std::string>() << " with";
  for (const auto& [k, v] : j.at("inputs").items()) out << " " << k << " = " << v.get<std::int64_t>();
  out << "\n";
  if (j.at("rejected").get<bool>()) {
    out << "rejected: " << j.at("rejection").get<std::string>() << "\n";
    return out.str();
  }
  for (const auto& s : j.at("steps")) {
    out << "  " << (s.at("as_claimed").get<bool>() ? "ok  " : "BAD ") << s.at("name").get<std::string>() << ": "
        << s.at("value").get<std::string>() << " " << s.at("relation").get<std::string>() << " "
        << s.at("target").get<std::string>();
    if (s.contains("form")) {
      out << "  [" << s.at("form").get<std::string>();
      if (s.contains("expected_form")) out << " vs " << s.at("expected_form").get<std::string>();
      out << "]";
    }
    if (s.at("verdict").get<std::string>() != "holds") out << "  => " << s.at("verdict").get<std::string>();
    out << "\n";
  }
  out << "consistent: " << yes_no(j.at("consistent").get<bool>()) << "\n";
  out << "outcome: " << j.at("outcome").get<std::string>() << "\n";
  return out.str();
}

std::string render_sweep(const Json& j) {
  std::ostringstream out;
  out << "sweep " << j.at("script").get<std::string>() << " up to " << j.at("sweep_max").get<std::int64_t>()
      << ": " << j.at("tuples").get<std::int64_t>() << " tuples, " << j.at("admissible").get<std::int64_t>()
      << " admissible, " << j.at("contradictions").get<std::int64_t>() << " contradictions, "
      << j.at("forced_cb").get<std::int64_t>() << " reaching the cb boundary\n";
  for (const auto& [k, v] : j.at("rejections").items()) {
    out << "  rejected (" << k << "): " << v.get<std::int64_t>() << "\n";
  }
  for (const auto& f : j.at("failures")) out << "  FAILURE " << f.get<std::string>() << "\n";
  out << (j.at("ok").get<bool>() ? "all admissible tuples contradicted\n" : "sweep FAILED\n");
  return out.str();
}

std::string render_verdict(const Json& j) {
  std::ostringstream out;
  out << "components:";
  for (const auto& c : j.at("components")) out << " " << c.get<std::string>();
  out << " (N = " << j.at("n").get<std::int64_t>() << "), kind " << j.at("kind").get<std::string>() << "\n";
  for (const auto& p : j.at("points")) {
    out << "point " << p.at("tag").get<std::string>() << " of index " << p.at("index").get<std::int64_t>();
    if (p.contains("ell")) out << ", ell " << p.at("ell").get<std::int64_t>();
    out << "\n";
  }
  if (j.at("accepted").get<bool>()) {
    out << "accepted: row " << j.at("row").get<int>() << "\n";
  } else {
    out << "rejected: " << j.at("reason").get<std::string>() << "\n";
  }
  if (j.contains("citation")) {
    out << "citation: " << j.at("citation").get<std::string>() << " (" << j.at("citation_text").get<std::string>()
        << ")\n";
  }
  for (const auto& n : j.at("notes")) out << "note: " << n.get<std::string>() << "\n";
  return out.str();
}

}  // namespace germkit

#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>

#include <CLI11.hpp>

#include "germkit/corpus.hpp"
#include "germkit/errors.hpp"
#include "germkit/report.hpp"

using namespace germkit;

namespace {

constexpr int kPass = 0;
constexpr int kMismatch = 1;
constexpr int kInputError = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<std::int64_t> parse_int_list(const std::string& s) {
  std::vector<std::int64_t> out;
  if (s.empty()) return out;
  std::stringstream in(s);
  for (std::string part; std::getline(in, part, ',');) {
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(part, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != part.size()) throw InputError("not an integer: '" + part + "'");
    out.push_back(v);
  }
  return out;
}

void emit(const Json& j, bool json, const std::string& text) {
  if (json) std::cout << j.dump(2) << "\n";
  else std::cout << text;
}

Json flip_report(std::int64_t index, const std::string& kc_text, const std::string& plus,
                 const std::string& w_text) {
  FlipGermData d;
  d.index_x = index;
  d.plus_indices = parse_int_list(plus);
  if (!w_text.empty()) {
    std::stringstream in(w_text);
    for (std::string part; std::getline(in, part, ',');) d.w_values.push_back(parse_rational(part));
  }
  Rational kc = parse_rational(kc_text);
  Rational kp = flip_transfer(d, kc);
  std::int64_t l = 1;
  for (auto i : d.plus_indices) l = std::lcm(l, i);
  Json j;
  j["index"] = index;
  j["k_dot_c"] = to_string(kc);
  j["plus_indices"] = d.plus_indices;
  j["lcm"] = l;
  if (!d.w_values.empty()) j["k_dot_c_from_w"] = to_string(-kc_from_w(d.w_values));
  j["k_plus"] = to_string(kp);
  return j;
}

std::string render_flip(const Json& j) {
  std::ostringstream out;
  out << "index(X) = " << j["index"].get<std::int64_t>() << ", K.C = " << j["k_dot_c"].get<std::string>() << "\n";
  if (j.contains("k_dot_c_from_w")) out << "K.C from w-values = " << j["k_dot_c_from_w"].get<std::string>() << "\n";
  out << "plus indices:";
  for (const auto& i : j["plus_indices"]) out << " " << i.get<std::int64_t>();
  out << " (lcm " << j["lcm"].get<std::int64_t>() << ")\n";
  out << "K+.C+ = " << j["k_plus"].get<std::string>() << "\n";
  return out.str();
}

struct DisproveArgs {
  std::optional<std::int64_t> m, mp, ap, sweep_max;
  std::string subcase = "kad";
};

void add_disprove_options(CLI::App* cmd, DisproveArgs& a) {
  cmd->add_option("--m", a.m, "index m of the first point");
  cmd->add_option("--mprime", a.mp, "index m' of the second point");
  cmd->add_option("--aprime", a.ap, "weight a'");
  cmd->add_option("--sweep-max", a.sweep_max, "sweep all tuples up to this bound instead");
}

int run_disprove(const DisproveArgs& a, bool json, std::optional<KadSubcase> subcase) {
  if (a.sweep_max) {
    if (a.m || a.mp || a.ap) throw InputError("give either a tuple or --sweep-max, not both");
    if (*a.sweep_max < 3) throw InputError("--sweep-max must be >= 3");
    SweepSummary s = subcase ? kad_sweep(*a.sweep_max, *subcase) : ic_sweep(*a.sweep_max);
    Json j = to_json(s);
    emit(j, json, render_sweep(j));
    return s.ok() ? kPass : kMismatch;
  }
  if (!a.m || !a.mp || !a.ap) throw InputError("need --m, --mprime and --aprime (or --sweep-max)");
  DisproofTrace t = subcase ? kad_disproof(*a.m, *a.mp, *a.ap, *subcase) : ic_disproof(*a.m, *a.mp, *a.ap);
  Json j = to_json(t);
  emit(j, json, render_trace(j));
  if (t.rejected()) return kInputError;
  return t.consistent() && t.outcome == StepVerdict::Contradiction ? kPass : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations for extremal curve germs"};
  app.require_subcommand(1);
  bool json = false;

  auto* analyze_cmd = app.add_subcommand("analyze", "report on a dual graph file");
  std::string graph_file;
  std::optional<std::int64_t> index;
  bool no_generator = false;
  analyze_cmd->add_option("file", graph_file, "graph file")->required();
  analyze_cmd->add_option("--index", index, "index of the common point");
  analyze_cmd->add_flag("--no-generator", no_generator, "K is not known to generate the local class group");

  auto* verify_cmd = app.add_subcommand("verify-paper", "run the built-in corpus, families, sweeps and tables");
  std::int64_t sweep_max = 49;
  std::string corpus_dir;
  verify_cmd->add_option("--sweep-max", sweep_max, "upper bound for the sweeps")->capture_default_str();
  verify_cmd->add_option("--corpus", corpus_dir, "use a corpus directory instead of the built-in one");

  auto* quot_cmd = app.add_subcommand("quot", "cyclic quotient of a Hirzebruch-Jung chain");
  std::string chain_text;
  quot_cmd->add_option("chain", chain_text, "chain such as 2,5 or [2,5]")->required();

  auto* tchain_cmd = app.add_subcommand("tchain", "chain and class T test for 1/n(1,q)");
  std::int64_t n = 0, q = 0;
  tchain_cmd->add_option("n", n)->required();
  tchain_cmd->add_option("q", q)->required();

  auto* classify_cmd = app.add_subcommand("classify", "check a germ descriptor against the classification table");
  std::string germ_file;
  classify_cmd->add_option("file", germ_file, "descriptor file")->required();

  auto* flip_cmd = app.add_subcommand("flip", "K-value of the flipped curve");
  std::int64_t flip_index = 0;
  std::string kc_text, plus_text, w_text;
  flip_cmd->add_option("--index", flip_index, "index of X")->required();
  flip_cmd->add_option("--kc", kc_text, "K_X.C as P/Q")->required();
  flip_cmd->add_option("--plus-indices", plus_text, "indices of the flipped side, comma separated")->required();
  flip_cmd->add_option("--w", w_text, "w-values, comma separated (optional cross-check)");

  auto* ic_cmd = app.add_subcommand("ic-disprove", "replay the IC impossibility argument");
  DisproveArgs ic_args;
  add_disprove_options(ic_cmd, ic_args);

  auto* kad_cmd = app.add_subcommand("kad-disprove", "replay the k3A / kAD impossibility argument");
  DisproveArgs kad_args;
  add_disprove_options(kad_cmd, kad_args);
  kad_cmd->add_option("--subcase", kad_args.subcase, "k3a or kad")->required();

  for (auto* cmd : app.get_subcommands([](CLI::App*) { return true; })) {
    cmd->add_flag("--json", json, "machine-readable output");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kPass : kInputError;
  }

  try {
    if (analyze_cmd->parsed()) {
      AnalyzeOptions opts;
      opts.index = index;
      opts.generator = !no_generator;
      Json j = analyze(parse_graph(read_file(graph_file)), opts);
      emit(j, json, render_analysis(j));
      return kPass;
    }
    if (verify_cmd->parsed()) {
      Corpus corpus = corpus_dir.empty() ? Corpus::builtin() : Corpus::from_directory(corpus_dir);
      VerifyReport r = verify_paper(sweep_max, corpus);
      emit(r.to_json(), json, r.to_text());
      return r.ok() ? kPass : kMismatch;
    }
    if (quot_cmd->parsed()) {
      Json j = chain_report(parse_chain(chain_text));
      emit(j, json, render_chain_report(j));
      return kPass;
    }
    if (tchain_cmd->parsed()) {
      Json j = quot_report(CycQuot::make(n, q));
      emit(j, json, render_quot_report(j));
      return kPass;
    }
    if (classify_cmd->parsed()) {
      GermDescriptor d = parse_descriptor(read_file(germ_file));
      TableVerdict v = validate_against_table(d);
      Json j = to_json(v, d);
      emit(j, json, render_verdict(j));
      return v.accepted ? kPass : kMismatch;
    }
    if (flip_cmd->parsed()) {
      Json j = flip_report(flip_index, kc_text, plus_text, w_text);
      emit(j, json, render_flip(j));
      return kPass;
    }
    if (ic_cmd->parsed()) return run_disprove(ic_args, json, std::nullopt);
    if (kad_cmd->parsed()) return run_disprove(kad_args, json, parse_subcase(kad_args.subcase));
  } catch (const InputError& e) {
    if (json) std::cout << Json{{"error", e.what()}}.dump(2) << "\n";
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kMismatch;
  }
  return kInputError;
}

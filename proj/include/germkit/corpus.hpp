#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "germkit/dual_graph.hpp"
#include "germkit/report.hpp"

namespace germkit {

struct AnalyzeOptions {
  // Index of the point all components pass through; inferred from a unique
  // class T chain when absent.
  std::optional<std::int64_t> index;
  bool generator = true;  // K-values generate the local class group
};

// Full report on a configuration: clusters, codiscrepancies, quotient types,
// K-values and (when an index is known) primitivity per component.
Json analyze(const ConfigGraph& g, const AnalyzeOptions& opts = {});
std::string render_analysis(const Json& report);

// File name -> contents. The built-in corpus is compiled into the library.
struct Corpus {
  std::map<std::string, std::string> files;

  static Corpus builtin();
  static Corpus from_directory(const std::string& dir);
  const std::string& file(const std::string& name) const;  // throws InputError
};

struct VerifyCheck {
  std::string section;  // case, variant, family, descriptor, sweep, table2
  std::string subject;
  std::string item;
  bool pass = false;
  std::string expected;
  std::string computed;
  std::string origin;  // stated, derived or trivial
};

struct VerifyReport {
  std::int64_t sweep_max = 49;
  std::vector<VerifyCheck> checks;

  bool ok() const;
  std::size_t failures() const;
  Json to_json() const;
  std::string to_text() const;
};

VerifyReport verify_paper(std::int64_t sweep_max = 49, const Corpus& corpus = Corpus::builtin());

// Generated family members, in the graph line format.
std::string k1a_a_graph(std::int64_t m, std::int64_t right_bullets);
std::string k1a_c_graph(std::int64_t k);

}  // namespace germkit

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "germkit/ell_calc.hpp"
#include "germkit/rational.hpp"

namespace germkit {

enum class Relation { Eq, Lt, Le, Gt, Ge };

struct TraceStep {
  std::string name;
  std::string form;           // divisor in normal form, empty for pure numbers
  std::string expected_form;  // form the script asserts, empty when none
  Rational value;
  Relation relation;
  Rational target;
  bool as_claimed;  // value satisfies relation/target and form matches
  StepVerdict verdict;
};

struct DisproofTrace {
  std::string script;
  std::vector<std::pair<std::string, std::int64_t>> inputs;
  std::optional<std::string> rejection;  // failed precondition, if any
  std::vector<TraceStep> steps;
  StepVerdict outcome = StepVerdict::Holds;

  bool rejected() const { return rejection.has_value(); }
  bool consistent() const;
  const TraceStep* find(const std::string& name) const;
};

enum class KadSubcase { K3A, KAD };

DisproofTrace ic_disproof(std::int64_t m, std::int64_t mp, std::int64_t ap);
DisproofTrace kad_disproof(std::int64_t m, std::int64_t mp, std::int64_t ap, KadSubcase subcase);

struct SweepSummary {
  std::string script;
  std::int64_t sweep_max = 0;
  std::int64_t tuples = 0;
  std::int64_t admissible = 0;
  std::int64_t contradictions = 0;
  std::int64_t forced_cb = 0;  // admissible tuples whose d = 2 value is exactly 0
  std::map<std::string, std::int64_t> rejections;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty() && admissible > 0 && contradictions == admissible; }
};

SweepSummary ic_sweep(std::int64_t sweep_max);
SweepSummary kad_sweep(std::int64_t sweep_max, KadSubcase subcase);

const char* to_string(Relation r);
const char* to_string(KadSubcase s);
KadSubcase parse_subcase(const std::string& s);

}  // namespace germkit

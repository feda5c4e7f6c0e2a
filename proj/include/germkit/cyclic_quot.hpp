#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace germkit {

// Hirzebruch–Jung chain [a1, ..., ar], every ai >= 2, read left to right.
struct HJChain {
  std::vector<std::int64_t> entries;

  static HJChain make(std::vector<std::int64_t> entries);  // validates
  std::string to_string() const;                          // "[a1,a2,...]"
  bool operator==(const HJChain&) const = default;
};

// Cyclic quotient surface singularity 1/n(1, q).
struct CycQuot {
  std::int64_t n;
  std::int64_t q;

  static CycQuot make(std::int64_t n, std::int64_t q);  // validates
  std::string to_string() const;                       // "1/n(1,q)"
  bool operator==(const CycQuot&) const = default;
};

enum class TStepKind { Base, PrependTwo, AppendTwo };

struct TStep {
  TStepKind kind;
  HJChain chain;  // chain after this step
};

struct TCertificate {
  CycQuot quot;
  HJChain chain;
  bool verdict = false;
  std::vector<TStep> derivation;  // base first, ends at `chain`
  std::int64_t d = 0, m = 0, a = 0;
};

HJChain parse_chain(const std::string& text);  // "a1,a2,..." or "[a1,...]"

CycQuot chain_to_quot(const HJChain& c);
HJChain quot_to_chain(const CycQuot& s);

// q' with q·q' ≡ 1 (mod n); the reversed chain realizes 1/n(1, q').
std::int64_t inverse_residue(const CycQuot& s);

// Class T test with a recursion witness and an arithmetic witness
// (n = d·m², q = d·m·a − 1, 0 < a < m, gcd(a, m) = 1, m ≥ 2). The two are
// computed independently; disagreement raises InternalError.
TCertificate classify_T(const CycQuot& s);

std::int64_t t_index(const TCertificate& cert);  // throws InputError when not T

// r when the chain is all 2's (type A_r).
std::optional<std::int64_t> du_val_A(const HJChain& c);

// Forward recursion steps.
HJChain t_step(const HJChain& c, TStepKind kind);
bool is_t_base(const HJChain& c);

const char* to_string(TStepKind k);

}  // namespace germkit

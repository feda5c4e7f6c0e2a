#include "germkit/cyclic_quot.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "germkit/errors.hpp"
#include "germkit/rational.hpp"
#include "text_util.hpp"

namespace germkit {

HJChain HJChain::make(std::vector<std::int64_t> entries) {
  if (entries.empty()) throw InputError("chain must be nonempty");
  for (auto a : entries) {
    if (a < 2) throw InputError("chain entries must be >= 2, got " + std::to_string(a));
  }
  return HJChain{std::move(entries)};
}

std::string HJChain::to_string() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < entries.size(); ++i) out << (i ? "," : "") << entries[i];
  out << ']';
  return out.str();
}

CycQuot CycQuot::make(std::int64_t n, std::int64_t q) {
  if (n < 2) throw InputError("n must be >= 2");
  if (q <= 0 || q >= n) throw InputError("need 0 < q < n");
  if (std::gcd(n, q) != 1) throw InputError("need gcd(n, q) = 1");
  return CycQuot{n, q};
}

std::string CycQuot::to_string() const {
  return "1/" + std::to_string(n) + "(1," + std::to_string(q) + ")";
}

HJChain parse_chain(const std::string& text) {
  std::string s = text;
  s.erase(std::remove_if(s.begin(), s.end(), [](char ch) { return ch == ' ' || ch == '\t'; }), s.end());
  if (s.size() >= 2 && s.front() == '[' && s.back() == ']') s = s.substr(1, s.size() - 2);
  if (s.empty()) throw InputError("empty chain");
  std::vector<std::int64_t> entries;
  for (const auto& part : detail::split(s, ',')) {
    auto v = detail::parse_int(part);
    if (!v) throw InputError("chain entry is not an integer: '" + part + "'");
    entries.push_back(*v);
  }
  return HJChain::make(std::move(entries));
}

CycQuot chain_to_quot(const HJChain& c) {
  // Evaluate a_i - 1/(...) from the right, keeping the value as num/den.
  std::int64_t num = c.entries.back(), den = 1;
  for (std::size_t i = c.entries.size() - 1; i-- > 0;) {
    std::int64_t next = checked_add(checked_mul(c.entries[i], num), -den);
    den = num;
    num = next;
  }
  if (num == 1) throw InternalError("continued fraction collapsed to 1");
  return CycQuot::make(num, den);
}

HJChain quot_to_chain(const CycQuot& s) {
  std::vector<std::int64_t> out;
  std::int64_t n = s.n, q = s.q;
  while (q > 0) {
    std::int64_t a = (n + q - 1) / q;
    out.push_back(a);
    std::int64_t r = a * q - n;
    n = q;
    q = r;
  }
  return HJChain::make(std::move(out));
}

std::int64_t inverse_residue(const CycQuot& s) {
  // Extended Euclid on (q, n).
  std::int64_t old_r = s.q, r = s.n, old_x = 1, x = 0;
  while (r != 0) {
    std::int64_t t = old_r / r;
    std::tie(old_r, r) = std::make_pair(r, old_r - t * r);
    std::tie(old_x, x) = std::make_pair(x, old_x - t * x);
  }
  return mod_pos(old_x, s.n);
}

bool is_t_base(const HJChain& c) {
  const auto& e = c.entries;
  if (e.size() == 1) return e[0] == 4;
  if (e.front() != 3 || e.back() != 3) return false;
  return std::all_of(e.begin() + 1, e.end() - 1, [](std::int64_t a) { return a == 2; });
}

HJChain t_step(const HJChain& c, TStepKind kind) {
  std::vector<std::int64_t> e = c.entries;
  switch (kind) {
    case TStepKind::PrependTwo:
      e.back() += 1;
      e.insert(e.begin(), 2);
      break;
    case TStepKind::AppendTwo:
      e.front() += 1;
      e.push_back(2);
      break;
    case TStepKind::Base:
      break;
  }
  return HJChain{std::move(e)};
}

namespace {

// Undo recursion steps until a base appears; empty when the chain is not T.
std::vector<TStep> recursion_witness(const HJChain& chain) {
  std::vector<TStep> reversed;
  HJChain cur = chain;
  while (!is_t_base(cur)) {
    auto& e = cur.entries;
    if (e.size() < 2) return {};
    TStepKind kind;
    if (e.front() == 2 && e.back() >= 3) kind = TStepKind::PrependTwo;
    else if (e.back() == 2 && e.front() >= 3) kind = TStepKind::AppendTwo;
    else return {};
    reversed.push_back({kind, cur});
    if (kind == TStepKind::PrependTwo) {
      e.erase(e.begin());
      e.back() -= 1;
    } else {
      e.pop_back();
      e.front() -= 1;
    }
  }
  reversed.push_back({TStepKind::Base, cur});
  std::reverse(reversed.begin(), reversed.end());
  return reversed;
}

struct Arith {
  std::int64_t d, m, a;
};

std::vector<Arith> arithmetic_witnesses(const CycQuot& s) {
  std::vector<Arith> out;
  for (std::int64_t m = 2; m * m <= s.n; ++m) {
    if (s.n % (m * m) != 0) continue;
    std::int64_t d = s.n / (m * m);
    if ((s.q + 1) % (d * m) != 0) continue;
    std::int64_t a = (s.q + 1) / (d * m);
    if (a > 0 && a < m && std::gcd(a, m) == 1) out.push_back({d, m, a});
  }
  return out;
}

}  // namespace

TCertificate classify_T(const CycQuot& s) {
  TCertificate cert;
  cert.quot = s;
  cert.chain = quot_to_chain(s);
  auto steps = recursion_witness(cert.chain);
  auto arith = arithmetic_witnesses(s);
  if (arith.size() > 1) throw InternalError("ambiguous class T data for " + s.to_string());
  const bool by_recursion = !steps.empty();
  const bool by_arithmetic = !arith.empty();
  if (by_recursion != by_arithmetic) {
    throw InternalError("class T witnesses disagree for " + s.to_string());
  }
  if (!by_recursion) return cert;

  HJChain replay = steps.front().chain;
  for (std::size_t i = 1; i < steps.size(); ++i) {
    replay = t_step(replay, steps[i].kind);
    if (!(replay == steps[i].chain)) throw InternalError("class T derivation does not replay");
  }
  if (!(replay == cert.chain)) throw InternalError("class T derivation ends at the wrong chain");

  cert.verdict = true;
  cert.derivation = std::move(steps);
  cert.d = arith[0].d;
  cert.m = arith[0].m;
  cert.a = arith[0].a;
  return cert;
}

std::int64_t t_index(const TCertificate& cert) {
  if (!cert.verdict) throw InputError(cert.quot.to_string() + " is not of class T");
  return cert.m;
}

std::optional<std::int64_t> du_val_A(const HJChain& c) {
  if (std::all_of(c.entries.begin(), c.entries.end(), [](std::int64_t a) { return a == 2; })) {
    return static_cast<std::int64_t>(c.entries.size());
  }
  return std::nullopt;
}

const char* to_string(TStepKind k) {
  switch (k) {
    case TStepKind::Base: return "base";
    case TStepKind::PrependTwo: return "prepend-2";
    case TStepKind::AppendTwo: return "append-2";
  }
  return "base";
}

}  // namespace germkit

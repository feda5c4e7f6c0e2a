#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "germkit/rational.hpp"

namespace germkit {

struct MarkedPoint {
  std::string label;
  std::int64_t index;
};

struct PointWeight {
  std::int64_t index;
  std::int64_t weight;
  bool operator==(const PointWeight&) const = default;
};

// Normal form (c + Σ w_P·P♯) on a component ≅ ℙ¹, with 0 <= w_P < m_P.
// Points with weight 0 stay in the point set so the index is remembered.
class EllDivisor {
 public:
  EllDivisor() = default;

  // Carries raw weights into c: w <- raw mod m, c <- c + floor(raw / m).
  static EllDivisor normalize(std::int64_t c, const std::map<std::string, PointWeight>& raw);
  static EllDivisor normalize(std::int64_t c, const std::vector<std::pair<MarkedPoint, std::int64_t>>& raw);
  static EllDivisor constant(std::int64_t c) { return normalize(c, std::map<std::string, PointWeight>{}); }

  std::int64_t c() const { return c_; }
  const std::map<std::string, PointWeight>& points() const { return points_; }
  std::int64_t weight(const std::string& label) const;
  std::optional<std::int64_t> index_of(const std::string& label) const;

  // "(-1 + 2P + R)"; zero weights omitted, weight 1 printed bare.
  std::string to_string() const;

  // Equal when c and every non-zero weight agree.
  bool operator==(const EllDivisor& other) const;

 private:
  std::int64_t c_ = 0;
  std::map<std::string, PointWeight> points_;
};

EllDivisor tensor(const EllDivisor& a, const EllDivisor& b);
EllDivisor dual(const EllDivisor& a);
EllDivisor power(const EllDivisor& a, std::int64_t k);

Rational ell_deg(const EllDivisor& l);
std::int64_t h0(const EllDivisor& l);
std::int64_t h1(const EllDivisor& l);

struct NodeInfo {
  std::string label;
  std::int64_t index;
  int length;  // λ ∈ {1, 2}
};

// Per-component family on C = ∪ C_i; the node point must appear with the
// same index on every component.
class GlobalEllDivisor {
 public:
  static GlobalEllDivisor make(std::vector<std::string> components, std::vector<EllDivisor> parts,
                               std::optional<NodeInfo> node = {});

  const std::vector<std::string>& components() const { return components_; }
  const std::vector<EllDivisor>& parts() const { return parts_; }
  const EllDivisor& on(const std::string& component) const;
  const std::optional<NodeInfo>& node() const { return node_; }

  bool same_universe(const GlobalEllDivisor& other) const;

 private:
  std::vector<std::string> components_;
  std::vector<EllDivisor> parts_;
  std::optional<NodeInfo> node_;
};

Rational ell_deg(const GlobalEllDivisor& l);
GlobalEllDivisor tensor(const GlobalEllDivisor& a, const GlobalEllDivisor& b);
GlobalEllDivisor dual(const GlobalEllDivisor& a);
GlobalEllDivisor power(const GlobalEllDivisor& a, std::int64_t k);

// Number of j in [0, λ) with g + j·t ≡ 0 (mod m).
int node_invariant_dim(std::int64_t g, std::int64_t t, int lambda, std::int64_t m);

// h⁰ of a divisor glued from two components at a reduced node (λ = 1):
// h⁰(L1) + h⁰(L2) minus one when the node fibre is invariant and a section
// can be evaluated there.
std::int64_t glued_h0(const EllDivisor& l1, const EllDivisor& l2, int node_dim);

// Dimension of the image of global sections in the restriction to the first
// component.
std::int64_t glued_image_on_first(const EllDivisor& l1, const EllDivisor& l2, int node_dim);

enum class ContractionKind { Birational, ConicBundle, Unknown };
enum class StepVerdict { Holds, ForcesCb, Contradiction };

struct Thm812Result {
  Rational scaled;      // ℓ-deg(A) + d·ℓ-deg(B)
  Rational normalized;  // ℓ-deg(B) + ℓ-deg(A)/d
  StepVerdict verdict;
};

Thm812Result thm812_check(const GlobalEllDivisor& a, const GlobalEllDivisor& b, std::int64_t d,
                          ContractionKind kind);

const char* to_string(StepVerdict v);
const char* to_string(ContractionKind k);

}  // namespace germkit

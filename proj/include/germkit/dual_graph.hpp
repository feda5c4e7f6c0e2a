#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "germkit/rational.hpp"

namespace germkit {

enum class VertexKind { Exceptional, Component };

struct Vertex {
  std::string id;
  VertexKind kind;
  int self_int;
};

// Simple connected graph of smooth rational curves. Immutable once built.
class ConfigGraph {
 public:
  // Validates ids, self-intersections, simplicity and connectivity.
  static ConfigGraph create(std::vector<Vertex> vertices,
                            std::vector<std::pair<std::string, std::string>> edges);

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }
  const Vertex& vertex(std::size_t i) const { return vertices_.at(i); }
  std::size_t size() const { return vertices_.size(); }

  std::optional<std::size_t> find(std::string_view id) const;
  std::size_t index_of(std::string_view id) const;  // throws InputError
  bool adjacent(std::size_t a, std::size_t b) const;
  // Neighbours in input order.
  const std::vector<std::size_t>& neighbors(std::size_t i) const { return adj_.at(i); }
  const std::vector<std::vector<std::size_t>>& neighbors_table() const { return adj_; }

  std::vector<std::size_t> component_indices() const;
  std::vector<std::size_t> exceptional_indices() const;

 private:
  std::vector<Vertex> vertices_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
  std::vector<std::vector<std::size_t>> adj_;
  std::map<std::string, std::size_t, std::less<>> index_;
};

enum class ClusterShape { Chain, Fork, Other };

struct Cluster {
  std::vector<std::string> vertices;  // input order
  ClusterShape shape;
};

struct IntersectionMatrix {
  std::vector<std::string> ids;
  std::vector<std::vector<std::int64_t>> entries;
  std::size_t size() const { return ids.size(); }
};

ConfigGraph parse_graph(std::string_view text);
// Serializes back to the line format; parse_graph(to_text(g)) reproduces g.
std::string to_text(const ConfigGraph& g);

bool is_tree(const ConfigGraph& g);

std::vector<Cluster> exceptional_clusters(const ConfigGraph& g);

// Vertices of a chain cluster from one end to the other, starting at the end
// that appears first in input order. Throws InputError if not a chain.
std::vector<std::string> chain_order(const ConfigGraph& g, const Cluster& cluster);

IntersectionMatrix intersection_matrix(const ConfigGraph& g, const std::vector<std::string>& subset);

// Leading principal minors det(M[0..k, 0..k]) for k = 1..n.
std::vector<BigInt> leading_minors(const IntersectionMatrix& m);

bool is_negative_definite(const IntersectionMatrix& m);

std::string_view to_string(ClusterShape s);
std::string_view to_string(VertexKind k);

}  // namespace germkit

#include "germkit/dual_graph.hpp"

#include <algorithm>
#include <charconv>
#include <regex>
#include <set>
#include <sstream>

#include "germkit/errors.hpp"
#include "germkit/linalg.hpp"
#include "text_util.hpp"

namespace germkit {

namespace {

const std::regex& id_pattern() {
  static const std::regex re("^[A-Za-z0-9_]+$");
  return re;
}

std::string self_int_problem(const Vertex& v) {
  if (v.kind == VertexKind::Exceptional && v.self_int > -2) {
    return "exceptional vertex '" + v.id + "' needs self <= -2, got " + std::to_string(v.self_int);
  }
  if (v.kind == VertexKind::Component && v.self_int != -1) {
    return "component vertex '" + v.id + "' needs self = -1, got " + std::to_string(v.self_int);
  }
  return {};
}

std::vector<std::size_t> reachable_from(const std::vector<std::vector<std::size_t>>& adj,
                                        std::size_t start,
                                        const std::vector<bool>* allowed = nullptr) {
  std::vector<bool> seen(adj.size(), false);
  std::vector<std::size_t> stack{start}, order;
  seen[start] = true;
  while (!stack.empty()) {
    std::size_t v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (std::size_t w : adj[v]) {
      if (seen[w] || (allowed && !(*allowed)[w])) continue;
      seen[w] = true;
      stack.push_back(w);
    }
  }
  std::sort(order.begin(), order.end());
  return order;
}

}  // namespace

ConfigGraph ConfigGraph::create(std::vector<Vertex> vertices,
                                std::vector<std::pair<std::string, std::string>> edges) {
  ConfigGraph g;
  if (vertices.empty()) throw InputError("graph has no vertices");
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const Vertex& v = vertices[i];
    if (!std::regex_match(v.id, id_pattern())) throw InputError("invalid vertex id '" + v.id + "'");
    if (auto p = self_int_problem(v); !p.empty()) throw InputError(p);
    if (!g.index_.emplace(v.id, i).second) throw InputError("duplicate vertex id '" + v.id + "'");
  }
  g.vertices_ = std::move(vertices);
  g.adj_.assign(g.vertices_.size(), {});
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& [a, b] : edges) {
    std::size_t i = g.index_of(a), j = g.index_of(b);
    if (i == j) throw InputError("loop at vertex '" + a + "'");
    auto key = std::minmax(i, j);
    if (!seen.insert(key).second) throw InputError("multi-edge between '" + a + "' and '" + b + "'");
    g.edges_.emplace_back(key.first, key.second);
    g.adj_[i].push_back(j);
    g.adj_[j].push_back(i);
  }
  for (auto& row : g.adj_) std::sort(row.begin(), row.end());
  if (reachable_from(g.adj_, 0).size() != g.vertices_.size()) {
    throw InputError("graph is disconnected");
  }
  return g;
}

std::optional<std::size_t> ConfigGraph::find(std::string_view id) const {
  auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t ConfigGraph::index_of(std::string_view id) const {
  auto i = find(id);
  if (!i) throw InputError("unknown vertex id '" + std::string(id) + "'");
  return *i;
}

bool ConfigGraph::adjacent(std::size_t a, std::size_t b) const {
  const auto& row = adj_.at(a);
  return std::binary_search(row.begin(), row.end(), b);
}

std::vector<std::size_t> ConfigGraph::component_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (vertices_[i].kind == VertexKind::Component) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> ConfigGraph::exceptional_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (vertices_[i].kind == VertexKind::Exceptional) out.push_back(i);
  }
  return out;
}

ConfigGraph parse_graph(std::string_view text) {
  std::vector<Vertex> vertices;
  std::vector<int> vertex_lines;
  std::vector<std::pair<std::string, std::string>> edges;
  std::map<std::string, int> declared;
  std::set<std::pair<std::string, std::string>> edge_keys;
  std::vector<std::pair<int, std::pair<std::string, std::string>>> pending;

  for (const auto& [line_no, tokens] : detail::directive_lines(text)) {
    const std::string& kw = tokens[0];
    if (kw == "vertex") {
      if (tokens.size() != 4) throw ParseError(line_no, "expected 'vertex <id> kind=exc|comp self=<int>'");
      Vertex v{tokens[1], VertexKind::Exceptional, 0};
      if (!std::regex_match(v.id, id_pattern())) throw ParseError(line_no, "invalid vertex id '" + v.id + "'");
      std::optional<std::string> kind, self;
      for (std::size_t t = 2; t < 4; ++t) {
        auto kv = detail::split_key_value(tokens[t]);
        if (!kv) throw ParseError(line_no, "expected key=value, got '" + tokens[t] + "'");
        if (kv->first == "kind" && !kind) kind = kv->second;
        else if (kv->first == "self" && !self) self = kv->second;
        else throw ParseError(line_no, "unexpected attribute '" + kv->first + "'");
      }
      if (!kind || !self) throw ParseError(line_no, "vertex needs both kind= and self=");
      if (*kind == "exc") v.kind = VertexKind::Exceptional;
      else if (*kind == "comp") v.kind = VertexKind::Component;
      else throw ParseError(line_no, "unknown kind '" + *kind + "'");
      auto value = detail::parse_int(*self);
      if (!value || *value < -1000000 || *value > 1000000) {
        throw ParseError(line_no, "self must be an integer, got '" + *self + "'");
      }
      v.self_int = static_cast<int>(*value);
      if (auto p = self_int_problem(v); !p.empty()) throw ParseError(line_no, p);
      if (!declared.emplace(v.id, line_no).second) throw ParseError(line_no, "duplicate vertex id '" + v.id + "'");
      vertices.push_back(v);
      vertex_lines.push_back(line_no);
    } else if (kw == "edge") {
      if (tokens.size() != 3) throw ParseError(line_no, "expected 'edge <id> <id>'");
      const std::string &a = tokens[1], &b = tokens[2];
      if (a == b) throw ParseError(line_no, "loop at vertex '" + a + "'");
      auto key = std::minmax(a, b);
      if (!edge_keys.emplace(key.first, key.second).second) {
        throw ParseError(line_no, "multi-edge between '" + a + "' and '" + b + "'");
      }
      pending.push_back({line_no, {a, b}});
    } else {
      throw ParseError(line_no, "unknown keyword '" + kw + "'");
    }
  }
  if (vertices.empty()) throw ParseError(1, "graph has no vertices");
  for (const auto& [line_no, e] : pending) {
    for (const auto* id : {&e.first, &e.second}) {
      if (!declared.count(*id)) throw ParseError(line_no, "unknown vertex id '" + *id + "'");
    }
    edges.push_back(e);
  }

  std::vector<std::vector<std::size_t>> adj(vertices.size());
  std::map<std::string, std::size_t> idx;
  for (std::size_t i = 0; i < vertices.size(); ++i) idx[vertices[i].id] = i;
  for (const auto& [a, b] : edges) {
    adj[idx[a]].push_back(idx[b]);
    adj[idx[b]].push_back(idx[a]);
  }
  auto reach = reachable_from(adj, 0);
  if (reach.size() != vertices.size()) {
    std::vector<bool> in(vertices.size(), false);
    for (auto i : reach) in[i] = true;
    std::size_t first_out = 0;
    while (in[first_out]) ++first_out;
    throw ParseError(vertex_lines[first_out],
                     "graph is disconnected: '" + vertices[first_out].id + "' is unreachable from '" +
                         vertices[0].id + "'");
  }
  return ConfigGraph::create(std::move(vertices), std::move(edges));
}

std::string to_text(const ConfigGraph& g) {
  std::ostringstream out;
  for (const auto& v : g.vertices()) {
    out << "vertex " << v.id << " kind=" << (v.kind == VertexKind::Exceptional ? "exc" : "comp")
        << " self=" << v.self_int << "\n";
  }
  for (const auto& [a, b] : g.edges()) {
    out << "edge " << g.vertex(a).id << " " << g.vertex(b).id << "\n";
  }
  return out.str();
}

bool is_tree(const ConfigGraph& g) {
  // Connectivity is a construction invariant; a connected graph is a tree
  // exactly when it has |V| - 1 edges.
  return g.edges().size() + 1 == g.size();
}

std::vector<Cluster> exceptional_clusters(const ConfigGraph& g) {
  std::vector<bool> allowed(g.size(), false);
  for (auto i : g.exceptional_indices()) allowed[i] = true;
  std::vector<bool> assigned(g.size(), false);
  std::vector<Cluster> out;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (!allowed[i] || assigned[i]) continue;
    auto members = reachable_from(g.neighbors_table(), i, &allowed);
    std::size_t edge_count = 0, deg3 = 0, deg_high = 0;
    Cluster c;
    for (auto v : members) {
      assigned[v] = true;
      c.vertices.push_back(g.vertex(v).id);
      std::size_t deg = 0;
      for (auto w : g.neighbors(v)) deg += allowed[w] ? 1 : 0;
      edge_count += deg;
      if (deg == 3) ++deg3;
      if (deg > 3) ++deg_high;
    }
    edge_count /= 2;
    const bool tree = edge_count + 1 == members.size();
    if (tree && deg3 == 0 && deg_high == 0) c.shape = ClusterShape::Chain;
    else if (tree && deg3 == 1 && deg_high == 0) c.shape = ClusterShape::Fork;
    else c.shape = ClusterShape::Other;
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<std::string> chain_order(const ConfigGraph& g, const Cluster& cluster) {
  if (cluster.shape != ClusterShape::Chain) throw InputError("cluster is not a chain");
  std::set<std::size_t> members;
  for (const auto& id : cluster.vertices) members.insert(g.index_of(id));
  auto inner_degree = [&](std::size_t v) {
    std::size_t d = 0;
    for (auto w : g.neighbors(v)) d += members.count(w);
    return d;
  };
  std::size_t start = *members.begin();
  for (auto v : members) {
    if (inner_degree(v) <= 1) {
      start = v;
      break;
    }
  }
  std::vector<std::string> out{g.vertex(start).id};
  std::size_t prev = start, cur = start;
  while (out.size() < members.size()) {
    for (auto w : g.neighbors(cur)) {
      if (members.count(w) && w != prev) {
        prev = cur;
        cur = w;
        break;
      }
    }
    out.push_back(g.vertex(cur).id);
  }
  return out;
}

IntersectionMatrix intersection_matrix(const ConfigGraph& g, const std::vector<std::string>& subset) {
  IntersectionMatrix m;
  std::vector<std::size_t> idx;
  for (const auto& id : subset) idx.push_back(g.index_of(id));
  m.ids = subset;
  m.entries.assign(idx.size(), std::vector<std::int64_t>(idx.size(), 0));
  for (std::size_t i = 0; i < idx.size(); ++i) {
    for (std::size_t j = 0; j < idx.size(); ++j) {
      if (i == j) m.entries[i][j] = g.vertex(idx[i]).self_int;
      else m.entries[i][j] = g.adjacent(idx[i], idx[j]) ? 1 : 0;
    }
  }
  return m;
}

std::vector<BigInt> leading_minors(const IntersectionMatrix& m) {
  std::vector<BigInt> out;
  for (std::size_t k = 1; k <= m.size(); ++k) {
    linalg::IntMatrix sub(k, std::vector<BigInt>(k));
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) sub[i][j] = static_cast<long>(m.entries[i][j]);
    }
    out.push_back(linalg::determinant(std::move(sub)));
  }
  return out;
}

bool is_negative_definite(const IntersectionMatrix& m) {
  auto minors = leading_minors(m);
  for (std::size_t k = 0; k < minors.size(); ++k) {
    // (-1)^(k+1) * minor_(k+1) must be positive.
    int s = sgn(minors[k]);
    if ((k % 2 == 0 && s >= 0) || (k % 2 == 1 && s <= 0)) return false;
  }
  return true;
}

std::string_view to_string(ClusterShape s) {
  switch (s) {
    case ClusterShape::Chain: return "chain";
    case ClusterShape::Fork: return "fork";
    case ClusterShape::Other: return "other";
  }
  return "other";
}

std::string_view to_string(VertexKind k) { return k == VertexKind::Exceptional ? "exc" : "comp"; }

}  // namespace germkit

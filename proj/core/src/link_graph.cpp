#include "coalescent/link_graph.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "coalescent/errors.hpp"

namespace coalescent {

bool LinkGraph::has_node(VertexId v) const {
  return std::binary_search(nodes.begin(), nodes.end(), v);
}

bool LinkGraph::has_edge(VertexId a, VertexId b) const {
  const GraphEdge e = a < b ? GraphEdge{a, b} : GraphEdge{b, a};
  return std::binary_search(edges.begin(), edges.end(), e);
}

std::size_t LinkGraph::degree(VertexId v) const {
  return static_cast<std::size_t>(std::count_if(
      edges.begin(), edges.end(), [v](const GraphEdge& e) { return e.first == v || e.second == v; }));
}

bool LinkGraph::is_simple_cycle() const {
  if (nodes.size() < 3 || edges.size() != nodes.size()) return false;
  for (VertexId v : nodes) {
    if (degree(v) != 2) return false;
  }
  // 2-regular and connected means one cycle.
  std::map<VertexId, std::vector<VertexId>> adj;
  for (const auto& [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::set<VertexId> seen{nodes.front()};
  std::vector<VertexId> stack{nodes.front()};
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    for (VertexId w : adj[v]) {
      if (seen.insert(w).second) stack.push_back(w);
    }
  }
  return seen.size() == nodes.size();
}

LinkGraph link_graph(const SimplicialComplex& c, VertexId v) {
  const auto idx = c.find(Simplex{v});
  if (!idx) throw Error(ErrorCode::SimplexNotInComplex, "vertex " + c.label(v));
  LinkGraph g;
  for (std::size_t e : c.coface_indices(*idx)) {
    const Simplex& edge = c.simplex(e);
    g.nodes.push_back(edge[0] == v ? edge[1] : edge[0]);
    for (std::size_t t : c.coface_indices(e)) {
      const Simplex& tri = c.simplex(t);
      if (!c.coface_indices(t).empty()) {
        throw Error(ErrorCode::DimensionTooHigh,
                    "simplex " + c.label(tri) + " has a coface; link graphs need dimension <= 2");
      }
      const Simplex rest = tri.without_vertex(v);
      g.edges.emplace_back(rest[0], rest[1]);
    }
  }
  std::sort(g.nodes.begin(), g.nodes.end());
  std::sort(g.edges.begin(), g.edges.end());
  g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
  return g;
}

namespace {

struct Lowpoint {
  const std::vector<std::vector<std::pair<std::size_t, std::size_t>>>& adj;
  std::vector<int> discovery;
  std::vector<int> low;
  std::vector<bool> is_bridge;
  int tick = 0;

  void visit(std::size_t root) {
    // Iterative DFS; frames hold (node, parent edge, next neighbour slot).
    struct Frame {
      std::size_t node;
      std::size_t via;
      std::size_t next;
    };
    const std::size_t none = static_cast<std::size_t>(-1);
    std::vector<Frame> stack{{root, none, 0}};
    discovery[root] = low[root] = ++tick;
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.next < adj[f.node].size()) {
        const auto [w, edge] = adj[f.node][f.next++];
        if (edge == f.via) continue;
        if (discovery[w] == 0) {
          discovery[w] = low[w] = ++tick;
          stack.push_back({w, edge, 0});
        } else {
          low[f.node] = std::min(low[f.node], discovery[w]);
        }
        continue;
      }
      const Frame done = f;
      stack.pop_back();
      if (!stack.empty()) {
        Frame& parent = stack.back();
        low[parent.node] = std::min(low[parent.node], low[done.node]);
        if (low[done.node] > discovery[parent.node]) is_bridge[done.via] = true;
      }
    }
  }
};

}  // namespace

std::vector<GraphEdge> bridges(const LinkGraph& g) {
  std::map<VertexId, std::size_t> slot;
  for (std::size_t i = 0; i < g.nodes.size(); ++i) slot[g.nodes[i]] = i;
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(g.nodes.size());
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    const std::size_t a = slot.at(g.edges[e].first);
    const std::size_t b = slot.at(g.edges[e].second);
    adj[a].emplace_back(b, e);
    adj[b].emplace_back(a, e);
  }
  Lowpoint lp{adj, std::vector<int>(g.nodes.size(), 0), std::vector<int>(g.nodes.size(), 0),
              std::vector<bool>(g.edges.size(), false)};
  for (std::size_t v = 0; v < g.nodes.size(); ++v) {
    if (lp.discovery[v] == 0) lp.visit(v);
  }
  std::vector<GraphEdge> out;
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    if (lp.is_bridge[e]) out.push_back(g.edges[e]);
  }
  return out;
}

std::vector<VertexId> nodes_on_cycles(const LinkGraph& g) {
  const auto br = bridges(g);
  std::set<VertexId> out;
  for (const auto& e : g.edges) {
    if (std::binary_search(br.begin(), br.end(), e)) continue;
    out.insert(e.first);
    out.insert(e.second);
  }
  return {out.begin(), out.end()};
}

bool has_cycle(const LinkGraph& g) { return bridges(g).size() < g.edges.size(); }

}  // namespace coalescent

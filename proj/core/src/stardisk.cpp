#include "coalescent/stardisk.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <map>
#include <set>

#include "coalescent/errors.hpp"

namespace coalescent {

std::vector<StarDiskResult> StarDiskReport::failures() const {
  std::vector<StarDiskResult> out;
  for (const auto& r : per_vertex) {
    if (!r.holds) out.push_back(r);
  }
  for (const auto& r : per_edge) {
    if (!r.holds) out.push_back(r);
  }
  return out;
}

namespace {

void require_dim_at_most_2(const SimplicialComplex& c) {
  if (c.dim() > 2) {
    throw Error(ErrorCode::DimensionTooHigh,
                "star-disk checks need dimension <= 2, got " + std::to_string(c.dim()));
  }
}

}  // namespace

StarDiskResult vertex_star_disk(const SimplicialComplex& c, VertexId v) {
  require_dim_at_most_2(c);
  const LinkGraph g = link_graph(c, v);
  const auto br = bridges(g);
  const auto on_cycle = nodes_on_cycles(g);

  StarDiskResult out;
  out.point = Simplex{v};
  for (const Simplex& s : star(c, v)) {
    bool ok = false;
    if (s.size() == 1) {
      ok = br.size() < g.edges.size();
    } else if (s.size() == 2) {
      const VertexId w = s[0] == v ? s[1] : s[0];
      ok = std::binary_search(on_cycle.begin(), on_cycle.end(), w);
    } else {
      const Simplex rest = s.without_vertex(v);
      ok = !std::binary_search(br.begin(), br.end(), GraphEdge{rest[0], rest[1]});
    }
    if (!ok) out.failing_simplices.push_back(s);
  }
  out.holds = out.failing_simplices.empty();
  return out;
}

StarDiskResult edge_star_disk(const SimplicialComplex& c, const Simplex& edge) {
  const auto idx = c.find(edge);
  if (!idx || edge.size() != 2) {
    throw Error(ErrorCode::SimplexNotInComplex, "edge " + to_string(edge));
  }
  StarDiskResult out;
  out.point = edge;
  const auto& tris = c.coface_indices(*idx);
  if (tris.size() < 2) {
    out.holds = false;
    out.failing_simplices.push_back(edge);
    for (std::size_t t : tris) out.failing_simplices.push_back(c.simplex(t));
  }
  return out;
}

StarDiskReport star_disk_report(const SimplicialComplex& c) {
  require_dim_at_most_2(c);
  StarDiskReport report;
  for (const Simplex& s : c.simplices()) {
    if (s.size() == 1) {
      report.per_vertex.push_back(vertex_star_disk(c, s[0]));
    } else if (s.size() == 2) {
      report.per_edge.push_back(edge_star_disk(c, s));
    }
  }
  report.all_hold =
      std::all_of(report.per_vertex.begin(), report.per_vertex.end(),
                  [](const auto& r) { return r.holds; }) &&
      std::all_of(report.per_edge.begin(), report.per_edge.end(),
                  [](const auto& r) { return r.holds; });
  return report;
}

namespace {

using Edge = std::pair<VertexId, VertexId>;

Edge make_edge(VertexId a, VertexId b) { return a < b ? Edge{a, b} : Edge{b, a}; }

// Disc test for the closure of a set of triangles: connected, no edge in more
// than two triangles, Euler characteristic 1, boundary a single simple cycle,
// and `centre` off the boundary.
bool is_disc_with_interior_vertex(const std::vector<Simplex>& triangles, VertexId centre) {
  std::map<Edge, int> edge_count;
  std::set<VertexId> verts;
  for (const auto& t : triangles) {
    for (std::size_t i = 0; i < 3; ++i) verts.insert(t[i]);
    edge_count[make_edge(t[0], t[1])]++;
    edge_count[make_edge(t[0], t[2])]++;
    edge_count[make_edge(t[1], t[2])]++;
  }
  std::map<VertexId, std::vector<VertexId>> boundary_adj;
  std::size_t boundary_edges = 0;
  for (const auto& [e, n] : edge_count) {
    if (n > 2) return false;
    if (n == 1) {
      ++boundary_edges;
      boundary_adj[e.first].push_back(e.second);
      boundary_adj[e.second].push_back(e.first);
    }
  }
  const auto euler = static_cast<long>(verts.size()) - static_cast<long>(edge_count.size()) +
                     static_cast<long>(triangles.size());
  if (euler != 1) return false;

  // Connectivity of the closure through its edges.
  std::map<VertexId, std::vector<VertexId>> adj;
  for (const auto& [e, n] : edge_count) {
    adj[e.first].push_back(e.second);
    adj[e.second].push_back(e.first);
  }
  std::set<VertexId> reached{*verts.begin()};
  std::vector<VertexId> stack{*verts.begin()};
  while (!stack.empty()) {
    const VertexId x = stack.back();
    stack.pop_back();
    for (VertexId y : adj[x]) {
      if (reached.insert(y).second) stack.push_back(y);
    }
  }
  if (reached.size() != verts.size()) return false;

  if (boundary_edges < 3 || boundary_adj.contains(centre)) return false;
  for (const auto& [x, nbrs] : boundary_adj) {
    if (nbrs.size() != 2) return false;
  }
  std::set<VertexId> cycle{boundary_adj.begin()->first};
  stack = {boundary_adj.begin()->first};
  while (!stack.empty()) {
    const VertexId x = stack.back();
    stack.pop_back();
    for (VertexId y : boundary_adj[x]) {
      if (cycle.insert(y).second) stack.push_back(y);
    }
  }
  return cycle.size() == boundary_adj.size();
}

}  // namespace

StarDiskResult brute_force_disk_oracle(const SimplicialComplex& c, VertexId v,
                                       std::size_t max_star_triangles) {
  require_dim_at_most_2(c);
  const std::vector<Simplex> st = star(c, v);
  std::vector<Simplex> triangles;
  for (const auto& s : st) {
    if (s.size() == 3) triangles.push_back(s);
  }
  if (triangles.size() > max_star_triangles) {
    throw Error(ErrorCode::StarTooLarge,
                "vertex " + c.label(v) + " lies in " + std::to_string(triangles.size()) +
                    " triangles (limit " + std::to_string(max_star_triangles) + ")");
  }
  // Include/exclude backtracking; a branch dies once an edge {v,x} is fully
  // decided with a count other than 0 or 2.
  std::map<VertexId, std::size_t> last;
  for (std::size_t i = 0; i < triangles.size(); ++i) {
    for (VertexId x : triangles[i]) {
      if (x != v) last[x] = i;
    }
  }
  std::map<VertexId, int> used;
  std::vector<bool> covered(st.size(), false);
  std::vector<Simplex> chosen;
  const auto settled = [&](std::size_t i) {
    for (VertexId x : triangles[i]) {
      if (x != v && last[x] == i && used[x] != 0 && used[x] != 2) return false;
    }
    return true;
  };
  const auto visit = [&](auto&& self, std::size_t i) -> void {
    if (i == triangles.size()) {
      if (chosen.empty() || !is_disc_with_interior_vertex(chosen, v)) return;
      for (std::size_t k = 0; k < st.size(); ++k) {
        if (covered[k]) continue;
        covered[k] = std::any_of(chosen.begin(), chosen.end(),
                                 [&](const Simplex& t) { return st[k].is_face_of(t); });
      }
      return;
    }
    if (settled(i)) self(self, i + 1);
    chosen.push_back(triangles[i]);
    for (VertexId x : triangles[i]) {
      if (x != v) ++used[x];
    }
    if (settled(i)) self(self, i + 1);
    for (VertexId x : triangles[i]) {
      if (x != v) --used[x];
    }
    chosen.pop_back();
  };
  visit(visit, 0);
  StarDiskResult out;
  out.point = Simplex{v};
  for (std::size_t k = 0; k < st.size(); ++k) {
    if (!covered[k]) out.failing_simplices.push_back(st[k]);
  }
  out.holds = out.failing_simplices.empty();
  return out;
}

// --- circle maps ---------------------------------------------------------------

namespace {

void require_well_formed(const CycleMap& m) {
  if (m.cycle_length < 3 || m.images.size() != static_cast<std::size_t>(m.cycle_length)) {
    throw Error(ErrorCode::InvalidParameter,
                "a cycle map needs k >= 3 and exactly k images");
  }
  for (int img : m.images) {
    if (img < 0 || img >= m.cycle_length) {
      throw Error(ErrorCode::InvalidParameter,
                  "image " + std::to_string(img) + " outside 0.." +
                      std::to_string(m.cycle_length - 1));
    }
  }
}

// Shortest signed step from a to b around the cycle; none when antipodal.
std::optional<int> shortest_step(int a, int b, int k) {
  const int d = ((b - a) % k + k) % k;
  if (2 * d == k) return std::nullopt;
  return 2 * d < k ? d : d - k;
}

int step_or_throw(const CycleMap& m, int i) {
  const int k = m.cycle_length;
  const auto step = shortest_step(m.images[i], m.images[(i + 1) % k], k);
  if (!step) {
    throw Error(ErrorCode::NotSimplicial, "positions " + std::to_string(i) + " and " +
                                              std::to_string((i + 1) % k) + " map to antipodal points");
  }
  return *step;
}

Rational circular_distance(const Rational& d, int k) {
  const Rational kk(k);
  const Rational q = d / kk;
  const Integer fl = numerator(q) >= 0 ? Integer(numerator(q) / denominator(q))
                                       : Integer(-((-numerator(q) + denominator(q) - 1) /
                                                   denominator(q)));
  const Rational r = d - kk * Rational(fl);
  return std::min(r, kk - r);
}

}  // namespace

bool is_simplicial(const CycleMap& m) {
  require_well_formed(m);
  const int k = m.cycle_length;
  for (int i = 0; i < k; ++i) {
    const auto step = shortest_step(m.images[i], m.images[(i + 1) % k], k);
    if (!step || std::abs(*step) > 1) return false;
  }
  return true;
}

int circle_degree(const CycleMap& m) {
  require_well_formed(m);
  const int k = m.cycle_length;
  int total = 0;
  for (int i = 0; i < k; ++i) total += step_or_throw(m, i);
  // The closed walk returns to its start, so the total is a multiple of k.
  return total / k;
}

int max_vertex_displacement(const CycleMap& m) {
  require_well_formed(m);
  const int k = m.cycle_length;
  int best = 0;
  for (int i = 0; i < k; ++i) {
    const int d = ((m.images[i] - i) % k + k) % k;
    best = std::max(best, std::min(d, k - d));
  }
  return best;
}

Rational max_displacement(const CycleMap& m) {
  require_well_formed(m);
  const int k = m.cycle_length;
  const Rational half(k, 2);
  Rational best(0);
  for (int i = 0; i < k; ++i) {
    // Lifted displacement moves linearly from d0 to d0 + step - 1 along edge i.
    int d0 = ((m.images[i] - i) % k + k) % k;
    if (2 * d0 > k) d0 -= k;
    const int step = step_or_throw(m, i);
    const Rational lo(std::min(d0, d0 + step - 1));
    const Rational hi(std::max(d0, d0 + step - 1));
    best = std::max({best, circular_distance(lo, k), circular_distance(hi, k)});
    for (int j = -2; j <= 1; ++j) {
      const Rational antipode = Rational(j * k) + half;
      if (lo <= antipode && antipode <= hi) best = std::max(best, half);
    }
  }
  return best;
}

}  // namespace coalescent

#include <doctest.h>

#include <random>

#include "coalescent/builders.hpp"
#include "coalescent/collapse.hpp"
#include "coalescent/errors.hpp"
#include "coalescent/link_graph.hpp"
#include "coalescent/stardisk.hpp"
#include "oracles.hpp"

using namespace coalescent;

namespace {

std::size_t components(const std::vector<VertexId>& nodes, const std::vector<GraphEdge>& edges) {
  std::map<VertexId, VertexId> parent;
  for (auto v : nodes) parent[v] = v;
  const auto find = [&](VertexId v) {
    while (parent[v] != v) v = parent[v];
    return v;
  };
  std::size_t count = nodes.size();
  for (auto [a, b] : edges) {
    const auto ra = find(a), rb = find(b);
    if (ra != rb) {
      parent[ra] = rb;
      --count;
    }
  }
  return count;
}

std::vector<GraphEdge> bridges_by_deletion(const LinkGraph& g) {
  std::vector<GraphEdge> out;
  const auto base = components(g.nodes, g.edges);
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    auto rest = g.edges;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
    if (components(g.nodes, rest) > base) out.push_back(g.edges[i]);
  }
  return out;
}

LinkGraph random_link(std::mt19937_64& rng) {
  const auto c = oracle::random_graph(rng, 8, rng() % 12);
  LinkGraph g;
  g.nodes = c.vertices();
  for (const auto& e : c.simplices_of_dim(1)) g.edges.push_back({e[0], e[1]});
  return g;
}

}  // namespace

TEST_CASE("link graphs") {
  const auto sphere = boundary_sphere(2).complex;
  const auto g = link_graph(sphere, 0);
  CHECK(g.nodes == std::vector<VertexId>{1, 2, 3});
  CHECK(g.is_simple_cycle());
  const auto fan = disc_fan(5).complex;
  CHECK(link_graph(fan, 0).is_simple_cycle());
  CHECK(link_graph(fan, 0).nodes.size() == 5);
  const auto rim = link_graph(fan, 1);
  CHECK(rim.edges == std::vector<GraphEdge>{{0, 2}, {0, 5}});
  CHECK_FALSE(rim.is_simple_cycle());
  CHECK(rim.degree(0) == 2);
  CHECK_THROWS_AS(link_graph(full_simplex(3).complex, 0), Error);
  CHECK_THROWS_AS(link_graph(fan, 42), Error);
}

TEST_CASE("property: bridges agree with deletion") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 300; ++trial) {
    const auto g = random_link(rng);
    const auto b = bridges(g);
    CHECK(b == bridges_by_deletion(g));
    CHECK(has_cycle(g) == (b.size() < g.edges.size()));
    for (auto v : nodes_on_cycles(g)) {
      bool on_non_bridge = false;
      for (const auto& e : g.edges) {
        if ((e.first == v || e.second == v) && !std::binary_search(b.begin(), b.end(), e)) on_non_bridge = true;
      }
      CHECK(on_non_bridge);
    }
  }
}

TEST_CASE("closed surfaces pass everywhere") {
  const auto report = star_disk_report(boundary_sphere(2).complex);
  CHECK(report.all_hold);
  CHECK(report.failures().empty());
  CHECK(report.per_vertex.size() == 4);
  CHECK(report.per_edge.size() == 6);
  const auto octahedron = SimplicialComplex::from_maximal(
      {{0, 2, 4}, {0, 2, 5}, {0, 3, 4}, {0, 3, 5}, {1, 2, 4}, {1, 2, 5}, {1, 3, 4}, {1, 3, 5}});
  CHECK(star_disk_report(octahedron).all_hold);
  CHECK(link_graph(octahedron, 0).nodes == std::vector<VertexId>{2, 3, 4, 5});
}

TEST_CASE("a disc fails on its boundary") {
  const auto fan = disc_fan(5).complex;
  const auto report = star_disk_report(fan);
  CHECK_FALSE(report.all_hold);
  CHECK(report.per_vertex[0].holds);
  for (std::size_t v = 1; v <= 5; ++v) {
    CHECK_FALSE(report.per_vertex[v].holds);
    CHECK(report.per_vertex[v].failing_simplices.size() == star(fan, static_cast<VertexId>(v)).size());
  }
  const auto rim_edge = edge_star_disk(fan, Simplex{1, 2});
  CHECK_FALSE(rim_edge.holds);
  CHECK(rim_edge.failing_simplices == std::vector<Simplex>{Simplex{1, 2}, Simplex{0, 1, 2}});
  CHECK(edge_star_disk(fan, Simplex{0, 1}).holds);
  CHECK_THROWS_AS(star_disk_report(full_simplex(3).complex), Error);
}

TEST_CASE("property: star-disk everywhere rules out free faces") {
  std::mt19937_64 rng(17);
  int holding = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const auto c = oracle::random_2complex(rng, 6, 4 + rng() % 8, 0);
    const auto report = star_disk_report(c);
    if (report.all_hold) {
      ++holding;
      CHECK(free_faces(c).empty());
    }
    for (const auto& f : free_faces(c)) {
      const auto& r = f.free_face.size() == 1 ? report.per_vertex : report.per_edge;
      const auto it = std::find_if(r.begin(), r.end(), [&](const StarDiskResult& x) { return x.point == f.free_face; });
      REQUIRE(it != r.end());
      CHECK_FALSE(it->holds);
    }
  }
  MESSAGE("random complexes with star-disk everywhere: " << holding);
  for (const auto& c : {boundary_sphere(2).complex, bings_house().complex}) {
    CHECK(star_disk_report(c).all_hold);
    CHECK(free_faces(c).empty());
  }
}

TEST_CASE("property: link criterion agrees with the disc-enumeration oracle") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 200; ++trial) {
    const auto c = oracle::random_2complex(rng, 7, rng() % 10, rng() % 3);
    for (auto v : c.vertices()) {
      const auto fast = vertex_star_disk(c, v);
      const auto slow = brute_force_disk_oracle(c, v);
      CHECK(fast.holds == slow.holds);
      CHECK(fast.failing_simplices == slow.failing_simplices);
    }
  }
  const auto dunce = dunce_hat(DunceHatScheme::Minimal8).complex;
  for (auto v : dunce.vertices()) {
    const auto slow = brute_force_disk_oracle(dunce, v, 20);
    CHECK(vertex_star_disk(dunce, v).failing_simplices == slow.failing_simplices);
  }
}

TEST_CASE("disc oracle guard") {
  const auto fan = disc_fan(13).complex;
  try {
    brute_force_disk_oracle(fan, 0);
    FAIL("expected StarTooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::StarTooLarge);
  }
  CHECK(brute_force_disk_oracle(fan, 0, 13).holds);
}

TEST_CASE("circle map degrees") {
  CHECK(circle_degree({6, {0, 1, 2, 3, 4, 5}}) == 1);
  CHECK(circle_degree({6, {2, 2, 2, 2, 2, 2}}) == 0);
  CHECK(circle_degree({6, {0, 5, 4, 3, 2, 1}}) == -1);
  CHECK(circle_degree({5, {1, 2, 3, 4, 0}}) == 1);
  CHECK(circle_degree({4, {3, 2, 1, 2}}) == 0);
  const CycleMap doubled{12, {0, 2, 4, 6, 8, 10, 0, 2, 4, 6, 8, 10}};
  CHECK_FALSE(is_simplicial(doubled));
  CHECK(circle_degree(doubled) == 2);
  try {
    circle_degree({4, {0, 2, 0, 2}});
    FAIL("expected NotSimplicial");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotSimplicial);
  }
  CHECK_THROWS_AS(circle_degree({4, {0, 1, 2}}), Error);
  CHECK(max_displacement({6, {0, 1, 2, 3, 4, 5}}) == 0);
  CHECK(max_displacement({6, {1, 2, 3, 4, 5, 0}}) == 1);
}

TEST_CASE("vertex displacement alone does not force degree one") {
  const CycleMap m{4, {3, 2, 1, 2}};
  CHECK(is_simplicial(m));
  CHECK(max_vertex_displacement(m) == 1);
  CHECK(circle_degree(m) == 0);
  CHECK(max_displacement(m) >= 2);
}

TEST_CASE("exhaustive: simplicial self-maps moving points less than half way have degree one") {
  for (int k = 3; k <= 8; ++k) {
    std::vector<int> images(static_cast<std::size_t>(k), 0);
    std::size_t checked = 0;
    const auto visit = [&](auto&& self, int i) -> void {
      if (i == k) {
        const CycleMap m{k, images};
        if (!is_simplicial(m)) return;
        ++checked;
        CHECK(circle_degree(m) == oracle::degree_by_preimages(images, k));
        if (max_displacement(m) * 2 < k) CHECK(circle_degree(m) == 1);
        return;
      }
      for (int x = 0; x < k; ++x) {
        if (i > 0) {
          const int d = std::abs(x - images[static_cast<std::size_t>(i - 1)]);
          if (std::min(d, k - d) > 1) continue;
        }
        images[static_cast<std::size_t>(i)] = x;
        self(self, i + 1);
      }
    };
    visit(visit, 0);
    CHECK(checked > 0);
  }
}

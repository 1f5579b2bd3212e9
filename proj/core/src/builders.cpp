#include "coalescent/builders.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "coalescent/errors.hpp"
#include "coalescent/evidence.hpp"
#include "coalescent/numeric.hpp"
#include "coalescent/stardisk.hpp"

namespace coalescent {

namespace {

void require(bool ok, const std::string& name, const std::string& what) {
  if (!ok) throw Error(ErrorCode::BuildDefect, name + ": " + what);
}

void validate_contractible_core(const NamedComplex& nc) {
  const Census cs = census(nc.complex);
  require(cs.connected, nc.name, "not connected");
  require(cs.euler_characteristic == 1, nc.name,
          "Euler characteristic " + std::to_string(cs.euler_characteristic));
  require(homology(nc.complex).trivial(), nc.name, "reduced homology is not trivial");
}

void validate_marks(const NamedComplex& nc) {
  for (const auto& [role, v] : nc.marked_vertices) {
    require(nc.complex.has_vertex(v), nc.name, "marked vertex " + role + " missing");
  }
  for (const auto& [role, list] : nc.marked_simplices) {
    for (const Simplex& s : list) {
      require(nc.complex.contains(s), nc.name, "marked simplex " + role + " missing");
    }
  }
}

void validate_dunce_hat(const NamedComplex& nc) {
  validate_marks(nc);
  validate_contractible_core(nc);
  require(free_faces(nc.complex).empty(), nc.name, "has free faces");
  const auto failures = star_disk_report(nc.complex).failures();
  require(failures.size() == 1 && failures.front().point == Simplex{nc.marked_vertices.at("V")},
          nc.name, "star-disk must fail at V only");
}

// Renumbers vertices densely in the given order and installs labels.
SimplicialComplex renumbered(const SimplicialComplex& c, const std::map<VertexId, VertexId>& ids,
                             Labels labels) {
  std::vector<std::vector<VertexId>> facets;
  for (const Simplex& f : c.facets()) {
    std::vector<VertexId> verts;
    for (VertexId v : f) verts.push_back(ids.at(v));
    facets.push_back(std::move(verts));
  }
  return SimplicialComplex::from_maximal(facets, std::move(labels));
}

using Coord = std::array<Rational, 3>;

struct DunceBuild {
  NamedComplex named;
  // Barycentric coordinates of the subdivided triangle's vertices, before
  // the quotient, and where each lands in the final complex.
  std::vector<Coord> coords;
  std::vector<VertexId> final_id;
};

// Side parameter of a boundary point. Sides run B->A, B->C and C->A; the
// parameter is measured from the tail so that equal values are identified.
std::optional<Rational> side_parameter(const Coord& p) {
  if (p[2] == 0) return p[0];
  if (p[0] == 0) return p[2];
  if (p[1] == 0) return p[0];
  return std::nullopt;
}

DunceBuild build_dunce_quotient(int edgewise, int rounds) {
  if (edgewise < 1 || rounds < 0) {
    throw Error(ErrorCode::InvalidParameter, "subdivision parameters out of range");
  }
  const int m = edgewise;
  std::map<std::array<int, 3>, VertexId> grid;
  std::vector<Coord> coords;
  for (int i = m; i >= 0; --i) {
    for (int j = m - i; j >= 0; --j) {
      const int k = m - i - j;
      grid[{i, j, k}] = static_cast<VertexId>(coords.size());
      coords.push_back({Rational(i, m), Rational(j, m), Rational(k, m)});
    }
  }
  std::vector<std::vector<VertexId>> facets;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; i + j < m; ++j) {
      const int k = m - 1 - i - j;
      facets.push_back({grid.at({i + 1, j, k}), grid.at({i, j + 1, k}), grid.at({i, j, k + 1})});
      if (k >= 1) {
        facets.push_back({grid.at({i, j + 1, k}), grid.at({i + 1, j, k}), grid.at({i + 1, j + 1, k - 1})});
      }
    }
  }
  SimplicialComplex c = SimplicialComplex::from_maximal(facets);

  for (int r = 0; r < rounds; ++r) {
    std::vector<Coord> next(c.size());
    for (std::size_t s = 0; s < c.size(); ++s) {
      const Simplex& sx = c.simplex(s);
      Coord sum{Rational(0), Rational(0), Rational(0)};
      for (VertexId v : sx) {
        for (int a = 0; a < 3; ++a) sum[a] += coords[v][a];
      }
      for (int a = 0; a < 3; ++a) sum[a] /= Rational(static_cast<long>(sx.size()));
      next[s] = sum;
    }
    c = barycentric_subdivision(c);
    coords = std::move(next);
  }

  std::vector<VertexId> corners;
  std::map<Rational, std::vector<VertexId>> sides;
  std::vector<VertexId> interior;
  for (VertexId v : c.vertices()) {
    const auto s = side_parameter(coords[v]);
    if (!s) {
      interior.push_back(v);
    } else if (*s == 0 || *s == 1) {
      corners.push_back(v);
    } else {
      sides[*s].push_back(v);
    }
  }
  require(corners.size() == 3, "dunce-hat", "corner class must have three members");
  std::vector<std::vector<VertexId>> classes{corners};
  std::vector<std::string> class_labels{"V"};
  for (const auto& [s, members] : sides) {
    require(members.size() == 3, "dunce-hat", "side point " + to_string(s) + " is not on all three sides");
    classes.push_back(members);
    class_labels.push_back("a" + std::to_string(classes.size() - 1));
  }
  const SimplicialComplex q = quotient(c, classes, class_labels);

  DunceBuild out;
  out.coords = coords;
  out.final_id.assign(coords.size(), 0);
  std::map<VertexId, VertexId> ids;
  Labels labels;
  for (std::size_t k = 0; k < classes.size(); ++k) {
    const VertexId rep = *std::min_element(classes[k].begin(), classes[k].end());
    ids[rep] = static_cast<VertexId>(k);
    labels[static_cast<VertexId>(k)] = class_labels[k];
    for (VertexId v : classes[k]) out.final_id[v] = static_cast<VertexId>(k);
  }
  for (VertexId v : interior) {
    const auto id = static_cast<VertexId>(ids.size());
    ids[v] = id;
    labels[id] = "x" + std::to_string(id - classes.size() + 1);
    out.final_id[v] = id;
  }
  out.named.complex = renumbered(q, ids, std::move(labels));
  out.named.name = "dunce-hat";
  out.named.marked_vertices["V"] = 0;
  return out;
}

}  // namespace

NamedComplex full_simplex(int n) {
  if (n < 0) throw Error(ErrorCode::InvalidParameter, "simplex dimension must be >= 0");
  if (n > 6) throw Error(ErrorCode::DimensionTooHigh, "simplex dimension " + std::to_string(n) + " > 6");
  std::vector<VertexId> verts(static_cast<std::size_t>(n) + 1);
  for (std::size_t i = 0; i < verts.size(); ++i) verts[i] = static_cast<VertexId>(i);
  NamedComplex nc;
  nc.complex = SimplicialComplex::from_maximal({verts});
  nc.name = "simplex-" + std::to_string(n);
  return nc;
}

NamedComplex boundary_sphere(int n) {
  if (n < 1 || n > 3) {
    throw Error(ErrorCode::DimensionTooHigh, "sphere dimension must be in 1..3, got " + std::to_string(n));
  }
  const Simplex top = full_simplex(n + 1).complex.facets().front();
  std::vector<std::vector<VertexId>> facets;
  for (const Simplex& f : top.boundary_faces()) facets.emplace_back(f.begin(), f.end());
  NamedComplex nc;
  nc.complex = SimplicialComplex::from_maximal(facets);
  nc.name = "sphere-" + std::to_string(n);
  return nc;
}

NamedComplex disc_fan(int k) {
  if (k < 3) throw Error(ErrorCode::InvalidParameter, "disc fan needs k >= 3");
  std::vector<std::vector<VertexId>> facets;
  for (int i = 1; i <= k; ++i) {
    facets.push_back({0, static_cast<VertexId>(i), static_cast<VertexId>(i % k + 1)});
  }
  NamedComplex nc;
  nc.complex = SimplicialComplex::from_maximal(facets);
  nc.name = "disc-" + std::to_string(k);
  nc.marked_vertices["apex"] = 0;
  return nc;
}

NamedComplex cone(const SimplicialComplex& c, VertexId apex) {
  if (c.has_vertex(apex)) {
    throw Error(ErrorCode::ApexCollision, "apex " + std::to_string(apex) + " is already a vertex");
  }
  std::vector<Simplex> simplices{Simplex{apex}};
  for (const Simplex& s : c.simplices()) {
    simplices.push_back(s);
    simplices.push_back(s.with_vertex(apex));
  }
  NamedComplex nc;
  nc.complex = SimplicialComplex::from_simplices(std::move(simplices), c.labels());
  nc.name = "cone";
  nc.marked_vertices["apex"] = apex;
  return nc;
}

NamedComplex dunce_hat_from_subdivision(int edgewise, int barycentric_rounds) {
  return build_dunce_quotient(edgewise, barycentric_rounds).named;
}

NamedComplex dunce_hat(DunceHatScheme scheme) {
  NamedComplex nc;
  if (scheme == DunceHatScheme::Quotient) {
    nc = build_dunce_quotient(3, 2).named;
  } else {
    nc.complex = SimplicialComplex::from_maximal(
        {{0, 1, 4}, {0, 1, 5}, {0, 1, 6}, {0, 2, 3}, {0, 2, 6}, {0, 2, 7}, {0, 3, 7},
         {0, 4, 5}, {1, 2, 3}, {1, 2, 4}, {1, 2, 5}, {1, 3, 6}, {2, 4, 7}, {2, 5, 6},
         {3, 5, 6}, {3, 5, 7}, {4, 5, 7}},
        {{0, "V"}, {1, "a1"}, {2, "a2"}, {3, "d0"}, {4, "d1"}, {5, "d2"}, {6, "d3"}, {7, "d4"}});
    nc.name = "dunce-hat-minimal";
    nc.marked_vertices["V"] = 0;
  }
  validate_dunce_hat(nc);
  require(simplify_presentation(pi1_presentation(nc.complex, 0), 10000).verdict == Pi1Verdict::Trivial,
          nc.name, "fundamental group not shown trivial");
  return nc;
}

NamedComplex dunce_hat_with_flap() {
  const DunceBuild d = build_dunce_quotient(3, 2);
  const auto find = [&](const Coord& p) {
    for (std::size_t v = 0; v < d.coords.size(); ++v) {
      if (d.coords[v] == p) return d.final_id[v];
    }
    throw Error(ErrorCode::BuildDefect, "dunce-hat-flap: arc vertex missing");
  };
  // In each cone corner the arc runs from V to the first-round barycenter of
  // the corner triangle, through the midpoint of that segment.
  const Coord bt_a{Rational(7, 9), Rational(1, 9), Rational(1, 9)};
  const Coord bt_b{Rational(1, 9), Rational(7, 9), Rational(1, 9)};
  const auto mid = [](const Coord& corner, const Coord& p) {
    return Coord{(corner[0] + p[0]) / 2, (corner[1] + p[1]) / 2, (corner[2] + p[2]) / 2};
  };
  const Coord a{Rational(1), Rational(0), Rational(0)};
  const Coord b{Rational(0), Rational(1), Rational(0)};
  const VertexId v = d.named.marked_vertices.at("V");
  const VertexId w1 = find(mid(a, bt_a));
  const VertexId w2 = find(bt_a);
  const VertexId u1 = find(mid(b, bt_b));
  const VertexId u2 = find(bt_b);

  const auto n = static_cast<VertexId>(d.named.complex.vertices().size());
  const VertexId centre = n, f1 = n + 1, f2 = n + 2;
  const std::vector<VertexId> rim{u2, u1, v, w1, w2, f1, f2};

  std::vector<std::vector<VertexId>> facets;
  for (const Simplex& f : d.named.complex.facets()) facets.emplace_back(f.begin(), f.end());
  std::vector<Simplex> e_triangles;
  for (std::size_t i = 0; i < rim.size(); ++i) {
    e_triangles.push_back(Simplex{centre, rim[i], rim[(i + 1) % rim.size()]});
    facets.emplace_back(e_triangles.back().begin(), e_triangles.back().end());
  }
  Labels labels = d.named.complex.labels();
  labels[centre] = "c";
  labels[f1] = "f1";
  labels[f2] = "f2";

  NamedComplex nc;
  nc.complex = SimplicialComplex::from_maximal(facets, std::move(labels));
  nc.name = "dunce-hat-flap";
  nc.marked_vertices = {{"V", v}, {"c", centre}, {"f1", f1}, {"f2", f2}};
  nc.marked_simplices["L"] = {Simplex{w2, w1}, Simplex{w1, v}, Simplex{v, u1}, Simplex{u1, u2}};
  nc.marked_simplices["free-arc"] = {Simplex{w2, f1}, Simplex{f1, f2}, Simplex{f2, u2}};
  nc.marked_simplices["E"] = e_triangles;
  validate_marks(nc);
  validate_contractible_core(nc);
  return nc;
}

NamedComplex bings_house() {
  using Point = std::array<int, 3>;
  const std::array<std::vector<int>, 3> breaks{
      std::vector<int>{0, 2, 4, 6, 8, 10}, std::vector<int>{0, 2, 3, 4, 6}, std::vector<int>{0, 2, 4}};
  struct Box {
    int lo_u, hi_u, lo_v, hi_v;
  };
  std::vector<std::array<Point, 3>> triangles;
  // Squares of the plane {axis = value} inside `span`, skipping those inside any hole.
  const auto plane = [&](int axis, int value, Box span, std::vector<Box> holes = {}) {
    const int au = axis == 0 ? 1 : 0;
    const int av = axis == 2 ? 1 : 2;
    const auto& bu = breaks[au];
    const auto& bv = breaks[av];
    for (std::size_t i = 0; i + 1 < bu.size(); ++i) {
      for (std::size_t j = 0; j + 1 < bv.size(); ++j) {
        const int u0 = bu[i], u1 = bu[i + 1], v0 = bv[j], v1 = bv[j + 1];
        if (u0 < span.lo_u || u1 > span.hi_u || v0 < span.lo_v || v1 > span.hi_v) continue;
        const bool in_hole = std::any_of(holes.begin(), holes.end(), [&](const Box& h) {
          return u0 >= h.lo_u && u1 <= h.hi_u && v0 >= h.lo_v && v1 <= h.hi_v;
        });
        if (in_hole) continue;
        const auto at = [&](int u, int v) {
          Point p{};
          p[axis] = value;
          p[au] = u;
          p[av] = v;
          return p;
        };
        triangles.push_back({at(u0, v0), at(u1, v0), at(u1, v1)});
        triangles.push_back({at(u0, v0), at(u1, v1), at(u0, v1)});
      }
    }
  };
  // Plane coordinates: x-planes use (y, z), y-planes (x, z), z-planes (x, y).
  plane(0, 0, {0, 6, 0, 4});
  plane(0, 10, {0, 6, 0, 4});
  plane(1, 0, {0, 10, 0, 4});
  plane(1, 6, {0, 10, 0, 4});
  plane(2, 0, {0, 10, 0, 6}, {{6, 8, 2, 4}});
  plane(2, 4, {0, 10, 0, 6}, {{2, 4, 2, 4}});
  plane(2, 2, {0, 10, 0, 6}, {{2, 4, 2, 4}, {6, 8, 2, 4}});
  for (int x : {2, 4}) plane(0, x, {2, 4, 2, 4});
  for (int y : {2, 4}) plane(1, y, {2, 4, 2, 4});
  for (int x : {6, 8}) plane(0, x, {2, 4, 0, 2});
  for (int y : {2, 4}) plane(1, y, {6, 8, 0, 2});
  plane(1, 3, {0, 2, 2, 4});
  plane(1, 3, {8, 10, 0, 2});

  std::map<Point, VertexId> ids;
  for (const auto& t : triangles) {
    for (const Point& p : t) ids.emplace(p, 0);
  }
  Labels labels;
  VertexId next = 0;
  for (auto& [p, id] : ids) {
    id = next++;
    labels[id] = "p" + std::to_string(p[0]) + "_" + std::to_string(p[1]) + "_" + std::to_string(p[2]);
  }
  std::vector<std::vector<VertexId>> facets;
  for (const auto& t : triangles) facets.push_back({ids.at(t[0]), ids.at(t[1]), ids.at(t[2])});

  NamedComplex nc;
  nc.complex = SimplicialComplex::from_maximal(facets, std::move(labels));
  nc.name = "bings-house";
  validate_contractible_core(nc);
  require(free_faces(nc.complex).empty(), nc.name, "has free faces");
  require(star_disk_report(nc.complex).all_hold, nc.name, "star-disk fails somewhere");
  require(simplify_presentation(pi1_presentation(nc.complex, 0), 10000).verdict == Pi1Verdict::Trivial,
          nc.name, "fundamental group not shown trivial");
  return nc;
}

}  // namespace coalescent

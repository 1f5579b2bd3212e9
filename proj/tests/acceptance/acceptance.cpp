#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "coalescent/builders.hpp"
#include "coalescent/collapse.hpp"
#include "coalescent/contraction.hpp"
#include "coalescent/errors.hpp"
#include "coalescent/evidence.hpp"
#include "coalescent/stardisk.hpp"
#include "oracles.hpp"

using namespace coalescent;

namespace {

struct Checker {
  std::vector<std::string> failures;
  std::size_t checks = 0;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) failures.push_back(what);
  }
};

Pi1Verdict pi1_of(const SimplicialComplex& c) {
  return simplify_presentation(pi1_presentation(c, c.vertices().front()), 10000).verdict;
}

std::vector<DegreeHomology> trimmed(HomologyProfile h) {
  while (!h.degrees.empty() && h.degrees.back().trivial()) h.degrees.pop_back();
  return h.degrees;
}

bool raises(ErrorCode code, const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code() == code;
  }
  return false;
}

void dunce_battery(Checker& ck, const NamedComplex& d) {
  const auto& c = d.complex;
  const std::string n = d.name + ": ";
  const auto cells = oracle::cells(c);
  ck.expect(oracle::is_closed(cells), n + "not closed under faces");
  std::vector<std::vector<std::size_t>> index(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) index[i] = c.coface_indices(i);
  ck.expect(c.rebuild_coface_index() == index, n + "coface index inconsistent");

  const auto cs = census(c);
  ck.expect(cs.euler_characteristic == 1 && oracle::euler(cells) == 1, n + "Euler characteristic is not 1");
  const auto unreduced = homology(c, false);
  std::int64_t alternating = 0;
  for (std::size_t k = 0; k < unreduced.degrees.size(); ++k) {
    alternating += (k % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(unreduced.degrees[k].betti);
  }
  ck.expect(alternating == cs.euler_characteristic, n + "Euler-Poincare cross-check failed");

  ck.expect(free_faces(c).empty(), n + "has free faces");
  ck.expect(oracle::free_pairs(cells).empty(), n + "oracle finds free faces");
  ck.expect(homology(c).trivial(), n + "reduced homology not trivial");
  ck.expect(oracle::reduced_betti(cells) == std::vector<std::size_t>(3, 0), n + "oracle Betti numbers not zero");
  ck.expect(pi1_of(c) == Pi1Verdict::Trivial, n + "fundamental group not Trivial");

  const auto report = star_disk_report(c);
  const auto failures = report.failures();
  const VertexId v = d.marked_vertices.at("V");
  ck.expect(failures.size() == 1 && failures.front().point == Simplex{v} &&
                !failures.front().failing_simplices.empty(),
            n + "star-disk must fail at V and nowhere else");
}

Checker criterion1() {
  Checker ck;
  dunce_battery(ck, dunce_hat(DunceHatScheme::Quotient));
  dunce_battery(ck, dunce_hat(DunceHatScheme::Minimal8));
  return ck;
}

Checker criterion2() {
  Checker ck;
  const auto b = bings_house().complex;
  ck.expect(free_faces(b).empty(), "Bing's house has free faces");
  ck.expect(oracle::free_pairs(oracle::cells(b)).empty(), "oracle finds free faces in Bing's house");
  ck.expect(star_disk_report(b).all_hold, "star-disk fails somewhere on Bing's house");
  ck.expect(homology(b).trivial(), "Bing's house reduced homology not trivial");
  ck.expect(oracle::reduced_betti(oracle::cells(b)) == std::vector<std::size_t>(3, 0), "oracle Betti numbers not zero");
  ck.expect(pi1_of(b) == Pi1Verdict::Trivial, "Bing's house fundamental group not Trivial");
  const auto v = coalescence_verdict(b);
  ck.expect(v.conclusion == Conclusion::NoCoalescentContraction, "verdict is " + to_string(v.conclusion));
  return ck;
}

Checker criterion3() {
  Checker ck;
  const auto f = dunce_hat_with_flap();
  const auto d = dunce_hat();
  const auto& arc = f.marked_simplices.at("free-arc");
  std::set<Simplex> expected(arc.begin(), arc.end());
  for (const auto& e : arc) {
    for (VertexId v : e) expected.insert(Simplex{v});
  }
  std::set<Simplex> found;
  for (const auto& r : star_disk_report(f.complex).failures()) found.insert(r.point);
  ck.expect(found == expected, "flap failures are not exactly the closed free arc (" +
                                   std::to_string(found.size()) + " points vs " +
                                   std::to_string(expected.size()) + ")");
  const auto ff = free_faces(f.complex);
  ck.expect(!ff.empty(), "flap complex has no free faces");
  for (const auto& p : ff) {
    ck.expect(expected.contains(p.free_face), "free face off the free arc: " + f.complex.label(p.free_face));
  }
  ck.expect(free_faces(d.complex).empty(), "dunce hat has free faces");
  return ck;
}

Checker criterion4() {
  Checker ck;
  std::vector<std::pair<std::string, SimplicialComplex>> inputs;
  for (int n = 0; n <= 3; ++n) inputs.push_back({"simplex-" + std::to_string(n), full_simplex(n).complex});
  for (int k = 3; k <= 8; ++k) inputs.push_back({"disc-" + std::to_string(k), disc_fan(k).complex});
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 20; ++i) {
    const auto g = oracle::random_graph(rng, 6, rng() % 12);
    inputs.push_back({"cone-" + std::to_string(i), cone(g, 6).complex});
  }
  for (const auto& [name, c] : inputs) {
    const auto lex = greedy_collapse(c, CollapseStrategy::Lex);
    const auto rnd = greedy_collapse(c, CollapseStrategy::Random, 5);
    const auto ex = exhaustive_collapse(c, 100000);
    for (const auto* out : {&lex, &rnd, &ex}) {
      ck.expect(out->status == CollapseStatus::Collapsible, name + " did not collapse");
      ck.expect(validate_sequence(c, out->sequence), name + " sequence does not validate");
    }
  }

  for (int trial = 0; trial < 200; ++trial) {
    const auto c = oracle::random_2complex(rng, 7, rng() % 9, rng() % 4);
    const auto chi = census(c).euler_characteristic;
    const auto h = trimmed(homology(c));
    const auto betti = oracle::reduced_betti(oracle::cells(c));
    const auto out = greedy_collapse(c, CollapseStrategy::Random, static_cast<std::uint64_t>(trial));
    ck.expect(validate_sequence(c, out.sequence), "random complex sequence does not validate");
    SimplicialComplex cur = c;
    for (const auto& p : out.sequence.pairs) {
      cur = elementary_collapse(cur, p);
      ck.expect(census(cur).euler_characteristic == chi, "collapse changed the Euler characteristic");
      ck.expect(trimmed(homology(cur)) == h, "collapse changed homology");
      auto b = oracle::reduced_betti(oracle::cells(cur));
      b.resize(betti.size(), 0);
      ck.expect(b == betti, "collapse changed the oracle Betti numbers");
    }
  }
  return ck;
}

Checker criterion5() {
  Checker ck;
  std::vector<NamedComplex> builders;
  for (int n = 0; n <= 2; ++n) builders.push_back(full_simplex(n));
  for (int n = 1; n <= 2; ++n) builders.push_back(boundary_sphere(n));
  for (int k = 3; k <= 8; ++k) builders.push_back(disc_fan(k));
  builders.push_back(dunce_hat(DunceHatScheme::Quotient));
  builders.push_back(dunce_hat(DunceHatScheme::Minimal8));
  builders.push_back(bings_house());
  builders.push_back(dunce_hat_with_flap());
  std::size_t vertices = 0;
  for (const auto& nc : builders) {
    for (VertexId v : nc.complex.vertices()) {
      ++vertices;
      const auto fast = vertex_star_disk(nc.complex, v);
      const auto slow = brute_force_disk_oracle(nc.complex, v, 64);
      ck.expect(fast.holds == slow.holds && fast.failing_simplices == slow.failing_simplices,
                nc.name + " disagrees at vertex " + nc.complex.label(v));
    }
  }

  std::mt19937_64 rng(77);
  std::size_t corpus = 0;
  while (corpus < 200) {
    const auto c = oracle::random_2complex(rng, 7, 2 + rng() % 9, rng() % 3);
    bool small = true;
    for (VertexId v : c.vertices()) {
      std::size_t t = 0;
      for (const auto& s : star(c, v)) t += s.size() == 3 ? 1 : 0;
      small = small && t <= 8;
    }
    if (!small) continue;
    ++corpus;
    for (VertexId v : c.vertices()) {
      ++vertices;
      const auto fast = vertex_star_disk(c, v);
      const auto slow = brute_force_disk_oracle(c, v);
      ck.expect(fast.holds == slow.holds && fast.failing_simplices == slow.failing_simplices,
                "random complex " + std::to_string(corpus) + " disagrees at vertex " + std::to_string(v));
    }
  }
  return ck;
}

Checker criterion6() {
  Checker ck;
  // A single vertex needs no stage; it has nothing to open.
  std::vector<NamedComplex> inputs;
  for (int n = 1; n <= 6; ++n) inputs.push_back(full_simplex(n));
  for (int k = 3; k <= 8; ++k) inputs.push_back(disc_fan(k));
  std::mt19937_64 rng(91);
  for (int i = 0; i < 4; ++i) {
    auto nc = cone(oracle::random_graph(rng, 5, 3 + rng() % 5), 5);
    nc.name = "cone-" + std::to_string(i);
    inputs.push_back(nc);
  }
  std::uint64_t seed = 1;
  for (const auto& nc : inputs) {
    const auto& c = nc.complex;
    const auto out = greedy_collapse(c, CollapseStrategy::Lex);
    ck.expect(out.status == CollapseStatus::Collapsible, nc.name + " is not collapsible");
    if (out.status != CollapseStatus::Collapsible) continue;
    const auto h = witness_from_collapse(c, out.sequence);
    const auto end = PLPoint::vertex(h.terminal());

    const auto points = sample_points(h, 200, ++seed);
    ck.expect(points.size() >= 100, nc.name + " produced too few sample points");
    for (const auto& p : points) {
      ck.expect(evaluate(h, p, 0) == p, nc.name + " time 0 is not the identity at " + to_string(p));
      ck.expect(evaluate(h, p, 1) == end, nc.name + " time 1 is not the terminal vertex at " + to_string(p));
    }

    const SampleSpec spec{100, 20, seed};
    const auto table = build_track_table(h, spec);
    const auto report = check_coalescent(table);
    ck.expect(report.pass, nc.name + " tracks separate after merging");
    ck.expect(report.pairs_checked == 100, nc.name + " audited " + std::to_string(report.pairs_checked) + " pairs");
    ck.expect(table.times.size() == 20, nc.name + " sampled the wrong number of times");
    ck.expect(opening_time(h) == 0, nc.name + " opening time is not 0");

    for (std::size_t k = 0; k < table.times.size(); ++k) {
      const auto& t = table.times[k];
      if (t == 0) continue;
      const auto slice = image_complex(h, t);
      ck.expect(!slice.surjective && slice.missing_point.has_value(),
                nc.name + " slice at " + to_string(t) + " not flagged non-surjective");
      if (!slice.missing_point) continue;
      for (const auto& row : table.positions) {
        ck.expect(row[k] != *slice.missing_point, nc.name + " sampled image hits the missing point");
      }
    }

    for (std::size_t j = 0; j <= h.stage_count(); ++j) {
      const auto r = restart_at(h, j);
      for (const auto& p : sample_points(r, 10, seed + j)) {
        ck.expect(evaluate(r, p, 0) == p, nc.name + " restart at stage " + std::to_string(j) + " moves points at time 0");
      }
    }
  }
  return ck;
}

Checker criterion7() {
  Checker ck;
  std::size_t maps = 0, below = 0;
  for (int k = 3; k <= 8; ++k) {
    std::vector<int> images(static_cast<std::size_t>(k), 0);
    const auto visit = [&](auto&& self, int i) -> void {
      if (i == k) {
        const CycleMap m{k, images};
        if (!is_simplicial(m)) return;
        ++maps;
        const int deg = circle_degree(m);
        ck.expect(deg == oracle::degree_by_preimages(images, k), "degree disagrees with preimage count");
        if (max_displacement(m) < k / 2) {
          ++below;
          std::ostringstream s;
          for (int x : images) s << x << ' ';
          ck.expect(deg == 1, "k=" + std::to_string(k) + " map [" + s.str() + "] has degree " + std::to_string(deg));
        }
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

    std::vector<int> id(static_cast<std::size_t>(k)), refl(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
      id[static_cast<std::size_t>(i)] = i;
      refl[static_cast<std::size_t>(i)] = (k - i) % k;
    }
    ck.expect(circle_degree({k, id}) == 1, "identity degree");
    ck.expect(circle_degree({k, refl}) == -1, "reflection degree");
  }
  ck.expect(below > 0 && maps > below, "enumeration is degenerate");
  std::vector<int> wrap(12);
  for (int i = 0; i < 12; ++i) wrap[static_cast<std::size_t>(i)] = (2 * i) % 12;
  ck.expect(circle_degree({12, wrap}) == 2, "double wrap degree");
  return ck;
}

Checker criterion8() {
  Checker ck;
  TrackTable t;
  const auto a = PLPoint::vertex(0), b = PLPoint::vertex(1), c = PLPoint::vertex(2);
  const auto mid = PLPoint::barycenter(Simplex{0, 1});
  t.points = {a, b, c};
  t.times = {0, Rational(1, 3), Rational(2, 3), 1};
  t.positions = {{a, mid, mid, a}, {b, mid, mid, b}, {c, c, c, c}};
  const auto report = check_coalescent(t);
  ck.expect(!report.pass, "merge-then-split table passed the audit");
  ck.expect(report.violation.has_value() && report.violation->first == 0 && report.violation->second == 1 &&
                report.violation->merged_at == 1 && report.violation->separated_at == 3,
            "first violation not reported as points 0,1 merged at 1 and separated at 3");

  ck.expect(raises(ErrorCode::NonSimplicialQuotient, [] { dunce_hat_from_subdivision(3, 0); }),
            "coarse identification (3, 0) not rejected");
  ck.expect(raises(ErrorCode::NonSimplicialQuotient, [] { dunce_hat_from_subdivision(3, 1); }),
            "coarse identification (3, 1) not rejected");
  for (auto scheme : {DunceHatScheme::Quotient, DunceHatScheme::Minimal8}) {
    const auto v = coalescence_verdict(dunce_hat(scheme).complex);
    ck.expect(v.conclusion == Conclusion::Inconclusive, "dunce hat verdict is " + to_string(v.conclusion));
  }
  return ck;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Checker()>>> criteria{
      {"dunce hat battery", criterion1},
      {"Bing's house battery", criterion2},
      {"flap complex failure locus", criterion3},
      {"collapse soundness", criterion4},
      {"star-disk oracle equivalence", criterion5},
      {"coalescent witness", criterion6},
      {"small-displacement circle maps have degree one", criterion7},
      {"negative controls", criterion8},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto& [name, run] = criteria[i];
    Checker ck;
    try {
      ck = run();
    } catch (const std::exception& e) {
      ck.failures.push_back(std::string("exception: ") + e.what());
    }
    const bool pass = ck.failures.empty();
    failed += pass ? 0 : 1;
    std::cout << (pass ? "PASS" : "FAIL") << " " << (i + 1) << " " << name << " (" << ck.checks << " checks)";
    if (!pass) std::cout << ": " << ck.failures.front() << " [" << ck.failures.size() << " failure(s)]";
    std::cout << std::endl;
  }
  return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}

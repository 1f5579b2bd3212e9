#include <doctest.h>

#include <random>

#include "coalescent/builders.hpp"
#include "coalescent/errors.hpp"
#include "coalescent/evidence.hpp"
#include "oracles.hpp"

using namespace coalescent;

namespace {

SimplicialComplex projective_plane() {
  return SimplicialComplex::from_maximal({{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
                                          {1, 2, 4}, {2, 3, 5}, {1, 3, 4}, {2, 4, 5}, {1, 3, 5}});
}

SimplicialComplex torus() {
  std::vector<std::vector<VertexId>> facets;
  const auto at = [](int i, int j) { return static_cast<VertexId>(((i + 3) % 3) * 3 + (j + 3) % 3); };
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      facets.push_back({at(i, j), at(i + 1, j), at(i + 1, j + 1)});
      facets.push_back({at(i, j), at(i, j + 1), at(i + 1, j + 1)});
    }
  }
  return SimplicialComplex::from_maximal(facets);
}

IntegerMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  IntegerMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = static_cast<long>(rng() % 13) - 6;
  }
  return m;
}

Integer det(std::vector<std::vector<Integer>> m) {
  if (m.size() == 1) return m[0][0];
  Integer out = 0;
  for (std::size_t j = 0; j < m.size(); ++j) {
    std::vector<std::vector<Integer>> minor;
    for (std::size_t r = 1; r < m.size(); ++r) {
      std::vector<Integer> row;
      for (std::size_t c = 0; c < m.size(); ++c) {
        if (c != j) row.push_back(m[r][c]);
      }
      minor.push_back(row);
    }
    const Integer term = m[0][j] * det(minor);
    out += (j % 2 == 0) ? term : Integer(-term);
  }
  return out;
}

// gcd of all k x k minors.
Integer minor_gcd(const IntegerMatrix& m, std::size_t k) {
  Integer g = 0;
  const auto choose = [](std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      if (static_cast<std::size_t>(__builtin_popcount(mask)) != k) continue;
      std::vector<std::size_t> pick;
      for (std::size_t i = 0; i < n; ++i) {
        if (mask & (1u << i)) pick.push_back(i);
      }
      out.push_back(pick);
    }
    return out;
  };
  for (const auto& rs : choose(m.rows(), k)) {
    for (const auto& cs : choose(m.cols(), k)) {
      std::vector<std::vector<Integer>> sub;
      for (auto r : rs) {
        std::vector<Integer> row;
        for (auto c : cs) row.push_back(m.at(r, c));
        sub.push_back(row);
      }
      g = gcd(g, abs(det(sub)));
    }
  }
  return g;
}

}  // namespace

TEST_CASE("Smith normal form of small matrices") {
  const auto f = smith_normal_form(IntegerMatrix{{2, 4}, {6, 8}});
  CHECK(f.rank == 2);
  CHECK(f.divisors == std::vector<Integer>{2, 4});
  CHECK(smith_normal_form(IntegerMatrix{{0, 0}, {0, 0}}).rank == 0);
  CHECK(smith_normal_form(IntegerMatrix{{2, 0}, {0, 3}}).divisors == std::vector<Integer>{1, 6});
  CHECK(smith_normal_form(IntegerMatrix(0, 3)).rank == 0);
}

TEST_CASE("property: invariant factors are quotients of minor gcds") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 120; ++trial) {
    const auto m = random_matrix(rng, 1 + rng() % 4, 1 + rng() % 4);
    const auto f = smith_normal_form(m);
    std::vector<std::vector<long>> dense(m.rows(), std::vector<long>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (std::size_t c = 0; c < m.cols(); ++c) dense[r][c] = static_cast<long>(m.at(r, c));
    }
    CHECK(f.rank == oracle::rank_q(oracle::to_q(dense)));
    Integer product = 1;
    for (std::size_t k = 0; k < f.rank; ++k) {
      CHECK(f.divisors[k] > 0);
      if (k > 0) CHECK(f.divisors[k] % f.divisors[k - 1] == 0);
      product *= f.divisors[k];
      CHECK(product == minor_gcd(m, k + 1));
    }
  }
}

TEST_CASE("property: boundary matrices match the oracle and square to zero") {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 60; ++trial) {
    const auto c = oracle::random_2complex(rng, 7, rng() % 8, rng() % 4);
    const auto cells = oracle::cells(c);
    for (int d = 0; d <= c.dim(); ++d) {
      const auto m = boundary_matrix(c, d);
      const auto ref = oracle::boundary(cells, static_cast<std::size_t>(d));
      REQUIRE(m.rows() == ref.size());
      for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t k = 0; k < m.cols(); ++k) CHECK(m.at(r, k) == ref[r][k]);
      }
      if (d >= 1) CHECK((boundary_matrix(c, d - 1) * m).is_zero());
    }
  }
}

TEST_CASE("homology of spheres, discs and surfaces") {
  for (int n = 1; n <= 3; ++n) {
    const auto h = homology(boundary_sphere(n).complex);
    for (int d = 0; d <= n; ++d) CHECK(h.degrees[static_cast<std::size_t>(d)].betti == (d == n ? 1u : 0u));
  }
  CHECK(homology(disc_fan(6).complex).trivial());
  CHECK(homology(dunce_hat(DunceHatScheme::Minimal8).complex).trivial());

  const auto rp2 = homology(projective_plane());
  CHECK(rp2.betti() == std::vector<std::size_t>{0, 0, 0});
  CHECK(rp2.degrees[1].torsion == std::vector<Integer>{2});
  CHECK(rp2.degrees[2].trivial());

  const auto t = homology(torus());
  CHECK(t.betti() == std::vector<std::size_t>{0, 2, 1});
  CHECK(t.degrees[1].torsion.empty());

  const auto unreduced = homology(boundary_sphere(1).complex, false);
  CHECK_FALSE(unreduced.reduced);
  CHECK(unreduced.betti() == std::vector<std::size_t>{1, 1});
}

TEST_CASE("property: Betti numbers, torsion and Euler characteristic against the oracle") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 80; ++trial) {
    const auto c = oracle::random_2complex(rng, 7, rng() % 10, rng() % 4);
    const auto cells = oracle::cells(c);
    const auto h = homology(c);
    CHECK(h.betti() == oracle::reduced_betti(cells));
    std::int64_t alternating = 1;
    for (std::size_t d = 0; d < h.degrees.size(); ++d) {
      alternating += (d % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(h.degrees[d].betti);
      for (long p : {2L, 3L, 5L}) {
        const bool lib = std::any_of(h.degrees[d].torsion.begin(), h.degrees[d].torsion.end(),
                                     [p](const Integer& t) { return t % p == 0; });
        CHECK(lib == oracle::has_torsion(cells, d, p));
      }
    }
    CHECK(alternating == census(c).euler_characteristic);
  }
}

TEST_CASE("edge-path presentations") {
  const auto p = pi1_presentation(torus(), 0);
  CHECK(p.generators.size() == 27 - 8);
  CHECK(p.relators.size() == 18);
  CHECK_THROWS_AS(pi1_presentation(SimplicialComplex::from_maximal({{0, 1}, {2, 3}}), 0), Error);
  CHECK_THROWS_AS(pi1_presentation(torus(), 77), Error);
}

TEST_CASE("fundamental group verdicts") {
  const auto verdict = [](const SimplicialComplex& c) {
    return simplify_presentation(pi1_presentation(c, c.vertices().front()), 10000).verdict;
  };
  CHECK(verdict(full_simplex(3).complex) == Pi1Verdict::Trivial);
  CHECK(verdict(boundary_sphere(2).complex) == Pi1Verdict::Trivial);
  CHECK(verdict(dunce_hat(DunceHatScheme::Minimal8).complex) == Pi1Verdict::Trivial);
  CHECK(verdict(boundary_sphere(1).complex) == Pi1Verdict::NontrivialByAbelianization);
  CHECK(verdict(torus()) == Pi1Verdict::NontrivialByAbelianization);
  CHECK(verdict(projective_plane()) == Pi1Verdict::NontrivialByAbelianization);

  // Perfect presentation with no generator occurring once: nothing to conclude.
  Presentation stuck{{"a", "b"}, {{1, 2, -1, -2, -2}, {2, 1, -2, -1, -1}}};
  const auto s = simplify_presentation(stuck, 100);
  CHECK(s.verdict == Pi1Verdict::Unknown);
  CHECK(s.presentation.generators.size() == 2);
  CHECK(abelianization_matrix(stuck) == IntegerMatrix{{0, -1}, {-1, 0}});
  CHECK_THROWS_AS(simplify_presentation(stuck, 0), Error);
}

TEST_CASE("contractibility evidence") {
  const auto simplex = contractibility_evidence(full_simplex(2).complex);
  CHECK(simplex.kind == ContractibilityKind::Collapsible);
  CHECK(simplex.collapsible == Collapsibility::Yes);
  REQUIRE(simplex.collapse.has_value());
  CHECK(validate_sequence(full_simplex(2).complex, *simplex.collapse));

  const auto dunce = contractibility_evidence(dunce_hat(DunceHatScheme::Minimal8).complex);
  CHECK(dunce.kind == ContractibilityKind::HomotopyTrivial);
  CHECK(dunce.collapsible == Collapsibility::No);
  CHECK(dunce.pi1 == Pi1Verdict::Trivial);

  CHECK(contractibility_evidence(boundary_sphere(1).complex).kind == ContractibilityKind::Inconclusive);
  CHECK(contractibility_evidence(boundary_sphere(3).complex).kind == ContractibilityKind::Inconclusive);
  CHECK(contractibility_evidence(projective_plane()).kind == ContractibilityKind::Inconclusive);
}

TEST_CASE("verdicts") {
  const auto simplex = coalescence_verdict(full_simplex(2).complex);
  CHECK(simplex.conclusion == Conclusion::CoalescentContractionExists);
  CHECK(simplex.witness.has_value());
  CHECK(simplex.free_face_count == 3);

  const auto dunce = coalescence_verdict(dunce_hat(DunceHatScheme::Minimal8).complex);
  CHECK(dunce.conclusion == Conclusion::Inconclusive);
  CHECK_FALSE(dunce.star_disk_all);
  CHECK(dunce.payload.find("star-disk fails") != std::string::npos);

  const auto sphere = coalescence_verdict(boundary_sphere(2).complex);
  CHECK(sphere.star_disk_all);
  CHECK(sphere.conclusion == Conclusion::Inconclusive);

  CHECK(to_string(Conclusion::NoCoalescentContraction) == "NoCoalescentContraction");
  CHECK(to_string(Collapsibility::Unknown) == "unknown");
  CHECK(to_string(ContractibilityKind::HomotopyTrivial) == "homotopy_trivial");
}

#include <doctest.h>

#include <random>

#include "coalescent/builders.hpp"
#include "coalescent/collapse.hpp"
#include "coalescent/errors.hpp"
#include "coalescent/evidence.hpp"
#include "oracles.hpp"

using namespace coalescent;

namespace {

std::set<std::pair<oracle::Cell, oracle::Cell>> as_cells(const std::vector<CollapsePair>& pairs) {
  std::set<std::pair<oracle::Cell, oracle::Cell>> out;
  for (const auto& p : pairs) {
    out.insert({oracle::Cell(p.free_face.begin(), p.free_face.end()), oracle::Cell(p.coface.begin(), p.coface.end())});
  }
  return out;
}

}  // namespace

TEST_CASE("free faces of a triangle") {
  const auto t = full_simplex(2).complex;
  const auto ff = free_faces(t);
  REQUIRE(ff.size() == 3);
  CHECK(ff[0] == CollapsePair{Simplex{0, 1}, Simplex{0, 1, 2}});
  CHECK(ff[2] == CollapsePair{Simplex{1, 2}, Simplex{0, 1, 2}});
}

TEST_CASE("property: free faces agree with the brute-force oracle") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 150; ++trial) {
    const auto c = oracle::random_2complex(rng, 7, rng() % 8, rng() % 5);
    const auto ff = free_faces(c);
    CHECK(as_cells(ff) == oracle::free_pairs(oracle::cells(c)));
    CHECK(std::is_sorted(ff.begin(), ff.end()));
  }
}

TEST_CASE("elementary collapse removes exactly the pair") {
  const auto t = full_simplex(2).complex;
  const auto after = elementary_collapse(t, {Simplex{0, 1}, Simplex{0, 1, 2}});
  CHECK(after == SimplicialComplex::from_maximal({{0, 2}, {1, 2}}));
  CHECK_THROWS_AS(elementary_collapse(t, {Simplex{0}, Simplex{0, 1}}), Error);
  try {
    elementary_collapse(t, {Simplex{0}, Simplex{0, 1}});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotAFreeFace);
  }
}

TEST_CASE("simplices and fans collapse") {
  for (int n = 0; n <= 6; ++n) {
    const auto c = full_simplex(n).complex;
    for (auto strategy : {CollapseStrategy::Lex, CollapseStrategy::Random}) {
      const auto out = greedy_collapse(c, strategy, 7);
      CHECK(out.status == CollapseStatus::Collapsible);
      CHECK(out.remaining.size() == 1);
      CHECK(validate_sequence(c, out.sequence));
    }
  }
  for (int k = 3; k <= 9; ++k) {
    const auto c = disc_fan(k).complex;
    const auto out = exhaustive_collapse(c, 10000);
    CHECK(out.status == CollapseStatus::Collapsible);
    CHECK(out.sequence.pairs.size() == (c.size() - 1) / 2);
    CHECK(validate_sequence(c, out.sequence));
  }
}

TEST_CASE("collapse pairs preserve Euler characteristic and homology") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    const auto c = oracle::random_2complex(rng, 7, rng() % 7, rng() % 4);
    const auto chi = census(c).euler_characteristic;
    const auto betti = oracle::reduced_betti(oracle::cells(c));
    const auto out = greedy_collapse(c, CollapseStrategy::Random, trial);
    CHECK(validate_sequence(c, out.sequence));
    CHECK(census(out.remaining).euler_characteristic == chi);
    auto b2 = oracle::reduced_betti(oracle::cells(out.remaining));
    b2.resize(betti.size(), 0);
    CHECK(b2 == betti);
  }
}

TEST_CASE("a circle is stuck and the dunce hat is definitively not collapsible") {
  const auto circle = boundary_sphere(1).complex;
  const auto out = exhaustive_collapse(circle, 100);
  CHECK(out.status == CollapseStatus::StuckNoFreeFaces);
  CHECK(out.definitive);

  const auto dunce = dunce_hat(DunceHatScheme::Minimal8).complex;
  CHECK(free_faces(dunce).empty());
  const auto d = exhaustive_collapse(dunce, 10);
  CHECK(d.status == CollapseStatus::StuckNoFreeFaces);
  CHECK(d.definitive);
  CHECK(d.remaining == dunce);
}

TEST_CASE("search budgets") {
  CHECK_THROWS_AS(exhaustive_collapse(full_simplex(2).complex, 0), Error);
  // Two triangles sharing a vertex with a stuck alternative needs more than one state.
  const auto bowtie = SimplicialComplex::from_maximal({{0, 1, 2}, {0, 3, 4}, {1, 3}, {2, 4}});
  const auto out = exhaustive_collapse(bowtie, 1);
  CHECK(out.status != CollapseStatus::Collapsible);
  if (out.status == CollapseStatus::BudgetExhausted) CHECK_FALSE(out.definitive);
}

TEST_CASE("validate_sequence rejects tampered replays") {
  const auto c = full_simplex(2).complex;
  auto seq = greedy_collapse(c, CollapseStrategy::Lex).sequence;
  CHECK(validate_sequence(c, seq));
  auto reversed = seq;
  std::reverse(reversed.pairs.begin(), reversed.pairs.end());
  CHECK_FALSE(validate_sequence(c, reversed));
  auto truncated = seq;
  truncated.pairs.pop_back();
  CHECK_FALSE(validate_sequence(c, truncated));
}

TEST_CASE("searches are deterministic") {
  const auto c = disc_fan(6).complex;
  const auto a = greedy_collapse(c, CollapseStrategy::Random, 99);
  const auto b = greedy_collapse(c, CollapseStrategy::Random, 99);
  CHECK(a.sequence.pairs == b.sequence.pairs);
  CHECK(exhaustive_collapse(c, 1000).sequence.pairs == exhaustive_collapse(c, 1000).sequence.pairs);
}

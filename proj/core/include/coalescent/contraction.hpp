#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "coalescent/collapse.hpp"
#include "coalescent/complex.hpp"
#include "coalescent/numeric.hpp"

namespace coalescent {

/// A point of a complex in barycentric coordinates. Always canonical: zero
/// weights are dropped and the carrier is the minimal face holding the point.
class PLPoint {
 public:
  PLPoint() = default;
  /// Throws Error(InvalidParameter) unless the weights are >= 0, sum to 1 and
  /// match the carrier's size.
  PLPoint(const Simplex& carrier, std::vector<Rational> weights);

  static PLPoint vertex(VertexId v);
  static PLPoint barycenter(const Simplex& s);

  Simplex carrier() const;
  const std::vector<std::pair<VertexId, Rational>>& terms() const noexcept { return terms_; }
  /// Weight of v; zero when v is off the carrier.
  Rational weight(VertexId v) const;

  friend bool operator==(const PLPoint&, const PLPoint&) = default;
  friend auto operator<=>(const PLPoint& a, const PLPoint& b) { return a.terms_ <=> b.terms_; }

 private:
  std::vector<std::pair<VertexId, Rational>> terms_;
};

std::string to_string(const PLPoint& p);

/// l1 distance between barycentric weight vectors.
Rational pl_distance(const PLPoint& a, const PLPoint& b);

/// One elementary collapse realized as a deformation retraction of the closed
/// coface onto its boundary minus the open free face.
class RetractionStage {
 public:
  explicit RetractionStage(CollapsePair pair);

  const CollapsePair& pair() const noexcept { return pair_; }
  VertexId apex() const noexcept { return apex_; }

  /// True when the point lies in the closed coface.
  bool moves(const PLPoint& p) const;
  /// Position after the fraction `lambda` in [0,1] of the stage.
  PLPoint apply(const PLPoint& p, const Rational& lambda) const;
  /// Exit parameter of the ray from the projection centre through p, relative
  /// to p (1 for points the stage fixes). Requires moves(p).
  Rational exit_parameter(const PLPoint& p) const;
  /// The point at ray parameter `s` relative to p. Requires moves(p) and
  /// 0 < s <= exit_parameter(p).
  PLPoint along_ray(const PLPoint& p, const Rational& s) const;

 private:
  struct Cylinder {
    std::vector<Rational> q;  // weights over the free face
    Rational u;               // apex weight
  };
  Cylinder to_cylinder(const PLPoint& p) const;
  PLPoint from_cylinder(const std::vector<Rational>& q, const Rational& u) const;

  CollapsePair pair_;
  VertexId apex_ = 0;
};

struct ImageSlice {
  /// K_{i+1} and K_i around the slice; equal at stage boundaries.
  SimplicialComplex lower;
  SimplicialComplex upper;
  bool surjective = true;
  /// A point of the start complex that the slice misses, when not surjective.
  std::optional<PLPoint> missing_point;
};

class PLContraction {
 public:
  PLContraction() = default;
  PLContraction(SimplicialComplex start, std::vector<RetractionStage> stages);

  const SimplicialComplex& start() const noexcept { return images_.front(); }
  const std::vector<RetractionStage>& stages() const noexcept { return stages_; }
  std::size_t stage_count() const noexcept { return stages_.size(); }
  /// K_0 = start, K_{i+1} = K_i after the i-th collapse.
  const std::vector<SimplicialComplex>& image_complexes() const noexcept { return images_; }
  VertexId terminal() const;

 private:
  std::vector<RetractionStage> stages_;
  std::vector<SimplicialComplex> images_{SimplicialComplex{}};
};

/// Throws Error(InvalidSequence) when the sequence does not replay on c and
/// Error(TerminalNotAPoint) when it does not end at a single vertex.
PLContraction witness_from_collapse(const SimplicialComplex& c, const CollapseSequence& s);

/// H(p, t). Throws Error(PointNotInComplex) and Error(InvalidParameter) for t
/// outside [0,1].
PLPoint evaluate(const PLContraction& h, const PLPoint& p, const Rational& t);

/// Positions of p at non-decreasing times. Throws Error(UnsortedTimes).
std::vector<PLPoint> track(const PLContraction& h, const PLPoint& p,
                           const std::vector<Rational>& times);

ImageSlice image_complex(const PLContraction& h, const Rational& t);

/// 0 with at least one stage, 1 for the empty contraction.
Rational opening_time(const PLContraction& h);

/// Stages j..m-1 started from K_j, rescaled onto [0,1]. Throws
/// Error(StageOutOfRange) unless 0 <= j <= m.
PLContraction restart_at(const PLContraction& h, std::size_t j);

struct TrackTable {
  std::vector<PLPoint> points;
  std::vector<Rational> times;
  /// positions[i][k] is the position of points[i] at times[k].
  std::vector<std::vector<PLPoint>> positions;
  /// Audited pairs of point indices; empty means every pair.
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
};

struct CoalescenceViolation {
  std::size_t first = 0;
  std::size_t second = 0;
  /// Time index where the pair first coincides and where it separates.
  std::size_t merged_at = 0;
  std::size_t separated_at = 0;
};

struct CoalescenceReport {
  bool pass = true;
  std::optional<CoalescenceViolation> violation;
  std::size_t pairs_checked = 0;
  std::size_t merged_pairs = 0;
};

struct SampleSpec {
  std::size_t pairs = 100;
  std::size_t times = 20;
  std::uint64_t seed = 1;
};

/// Random rational points of the start complex, half of them arranged as
/// pairs on a common projection ray so that they merge at a stage end.
std::vector<PLPoint> sample_points(const PLContraction& h, std::size_t count, std::uint64_t seed);

/// Sorted sample times: 0, 1, every stage boundary when there is room, then
/// random rationals.
std::vector<Rational> sample_times(const PLContraction& h, std::size_t count, std::uint64_t seed);

TrackTable build_track_table(const PLContraction& h, const SampleSpec& spec);

/// Audits a table. Throws Error(InvalidParameter) if the grid does not match
/// the samples.
CoalescenceReport check_coalescent(const TrackTable& table);
CoalescenceReport check_coalescent(const PLContraction& h, const SampleSpec& spec = {});

}  // namespace coalescent

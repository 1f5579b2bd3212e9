#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "coalescent/collapse.hpp"
#include "coalescent/contraction.hpp"

namespace coalescent::cli {

using Json = nlohmann::ordered_json;

/// A point as recorded in a file: labelled weights, not yet validated.
using RawPoint = std::vector<std::pair<std::string, Rational>>;

struct WitnessDocument {
  std::string name;
  SimplicialComplex complex;
  CollapseSequence sequence;
  SampleSpec spec;
  std::vector<RawPoint> points;
  std::vector<Rational> times;
  std::vector<std::vector<RawPoint>> positions;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
};

RawPoint raw_point(const SimplicialComplex& c, const PLPoint& p);

/// The PLPoint a raw point denotes, or nothing when a label is unknown or
/// the weights are not barycentric.
std::optional<PLPoint> to_pl_point(const SimplicialComplex& c, const RawPoint& raw);

Json witness_to_json(const std::string& name, const SimplicialComplex& c, const CollapseSequence& s,
                     const TrackTable& table, const SampleSpec& spec);

/// Throws Error(ParseError) on structural problems. Collapse pairs are read
/// as given; replaying them is left to the caller.
WitnessDocument witness_from_json(const Json& j);

}  // namespace coalescent::cli

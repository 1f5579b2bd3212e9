#include "coalescent/contraction.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "coalescent/errors.hpp"

namespace coalescent {

namespace {

Integer floor_of(const Rational& r) {
  Integer q = numerator(r) / denominator(r);
  if (numerator(r) < 0 && q * denominator(r) != numerator(r)) --q;
  return q;
}

}  // namespace

PLPoint::PLPoint(const Simplex& carrier, std::vector<Rational> weights) {
  if (carrier.empty() || weights.size() != carrier.size()) {
    throw Error(ErrorCode::InvalidParameter, "point needs one weight per carrier vertex");
  }
  Rational total(0);
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] < 0) throw Error(ErrorCode::InvalidParameter, "negative barycentric weight");
    total += weights[i];
    if (weights[i] != 0) terms_.emplace_back(carrier[i], std::move(weights[i]));
  }
  if (total != 1) {
    throw Error(ErrorCode::InvalidParameter, "weights sum to " + to_string(total) + ", not 1");
  }
}

PLPoint PLPoint::vertex(VertexId v) { return PLPoint(Simplex{v}, {Rational(1)}); }

PLPoint PLPoint::barycenter(const Simplex& s) {
  return PLPoint(s, std::vector<Rational>(s.size(), Rational(1, static_cast<long>(s.size()))));
}

Simplex PLPoint::carrier() const {
  std::vector<VertexId> verts;
  for (const auto& [v, w] : terms_) verts.push_back(v);
  return Simplex(std::move(verts));
}

Rational PLPoint::weight(VertexId v) const {
  const auto it = std::lower_bound(terms_.begin(), terms_.end(), v,
                                   [](const auto& term, VertexId x) { return term.first < x; });
  return it != terms_.end() && it->first == v ? it->second : Rational(0);
}

std::string to_string(const PLPoint& p) {
  std::string out = "{";
  for (const auto& [v, w] : p.terms()) {
    if (out.size() > 1) out += ",";
    out += std::to_string(v) + ":" + to_string(w);
  }
  return out + "}";
}

Rational pl_distance(const PLPoint& a, const PLPoint& b) {
  std::set<VertexId> verts;
  for (const auto& [v, w] : a.terms()) verts.insert(v);
  for (const auto& [v, w] : b.terms()) verts.insert(v);
  Rational d(0);
  for (VertexId v : verts) d += abs(a.weight(v) - b.weight(v));
  return d;
}

// --- stages -------------------------------------------------------------------

RetractionStage::RetractionStage(CollapsePair pair) : pair_(std::move(pair)) {
  if (pair_.coface.size() != pair_.free_face.size() + 1 || !pair_.free_face.is_face_of(pair_.coface)) {
    throw Error(ErrorCode::InvalidSequence, "pair is not a face/coface of adjacent dimension");
  }
  for (VertexId v : pair_.coface) {
    if (!pair_.free_face.contains(v)) apex_ = v;
  }
}

bool RetractionStage::moves(const PLPoint& p) const {
  return p.carrier().is_face_of(pair_.coface);
}

RetractionStage::Cylinder RetractionStage::to_cylinder(const PLPoint& p) const {
  const Simplex& sigma = pair_.free_face;
  Cylinder c;
  c.u = p.weight(apex_);
  const Rational rest = 1 - c.u;
  c.q.resize(sigma.size(), Rational(1, static_cast<long>(sigma.size())));
  if (rest != 0) {
    for (std::size_t j = 0; j < sigma.size(); ++j) c.q[j] = p.weight(sigma[j]) / rest;
  }
  return c;
}

PLPoint RetractionStage::from_cylinder(const std::vector<Rational>& q, const Rational& u) const {
  if (u >= 1) return PLPoint::vertex(apex_);
  std::vector<Rational> weights;
  std::vector<VertexId> verts;
  const Simplex& sigma = pair_.free_face;
  for (std::size_t j = 0; j < sigma.size(); ++j) {
    verts.push_back(sigma[j]);
    weights.push_back((1 - u) * q[j]);
  }
  verts.push_back(apex_);
  weights.push_back(u);
  // Keep weights aligned with the sorted carrier.
  std::vector<std::size_t> order(verts.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return verts[a] < verts[b]; });
  std::vector<Rational> sorted;
  for (std::size_t i : order) sorted.push_back(weights[i]);
  return PLPoint(pair_.coface, std::move(sorted));
}

Rational RetractionStage::exit_parameter(const PLPoint& p) const {
  const Cylinder c = to_cylinder(p);
  if (c.u == 1) return Rational(1);
  const Rational b(1, static_cast<long>(c.q.size()));
  Rational s = 2 / (c.u + 1);
  for (const Rational& qj : c.q) {
    if (qj < b) s = std::min(s, b / (b - qj));
  }
  return s;
}

PLPoint RetractionStage::along_ray(const PLPoint& p, const Rational& s) const {
  const Cylinder c = to_cylinder(p);
  if (c.u == 1) return p;
  const Rational b(1, static_cast<long>(c.q.size()));
  std::vector<Rational> q(c.q.size());
  for (std::size_t j = 0; j < q.size(); ++j) q[j] = b + s * (c.q[j] - b);
  return from_cylinder(q, s * (c.u + 1) - 1);
}

PLPoint RetractionStage::apply(const PLPoint& p, const Rational& lambda) const {
  if (lambda == 0 || !moves(p)) return p;
  const Rational exit = exit_parameter(p);
  if (exit == 1) return p;
  return along_ray(p, 1 + lambda * (exit - 1));
}

// --- contractions ---------------------------------------------------------------

PLContraction::PLContraction(SimplicialComplex start, std::vector<RetractionStage> stages)
    : stages_(std::move(stages)) {
  images_.front() = std::move(start);
  for (const auto& stage : stages_) {
    images_.push_back(elementary_collapse(images_.back(), stage.pair()));
  }
}

VertexId PLContraction::terminal() const {
  const SimplicialComplex& last = images_.back();
  if (last.size() != 1) throw Error(ErrorCode::TerminalNotAPoint, "contraction does not end at a vertex");
  return last.simplex(0)[0];
}

PLContraction witness_from_collapse(const SimplicialComplex& c, const CollapseSequence& s) {
  if (!validate_sequence(c, s)) {
    throw Error(ErrorCode::InvalidSequence, "sequence does not replay on the complex");
  }
  if (s.terminal.size() != 1) {
    throw Error(ErrorCode::TerminalNotAPoint,
                "sequence ends with " + std::to_string(s.terminal.size()) + " simplices");
  }
  std::vector<RetractionStage> stages;
  for (const auto& p : s.pairs) stages.emplace_back(p);
  return PLContraction(c, std::move(stages));
}

namespace {

void require_time(const Rational& t) {
  if (t < 0 || t > 1) throw Error(ErrorCode::InvalidParameter, "time " + to_string(t) + " outside [0,1]");
}

void require_point(const PLContraction& h, const PLPoint& p) {
  if (p.terms().empty() || !h.start().contains(p.carrier())) {
    throw Error(ErrorCode::PointNotInComplex, "point " + to_string(p) + " is not in the complex");
  }
}

// Splits t into (completed stages, fraction of the next one).
std::pair<std::size_t, Rational> stage_position(const PLContraction& h, const Rational& t) {
  const auto m = static_cast<long>(h.stage_count());
  const Rational scaled = t * m;
  const Integer whole = floor_of(scaled);
  const auto i = static_cast<std::size_t>(whole.convert_to<long>());
  if (i >= h.stage_count()) return {h.stage_count(), Rational(0)};
  return {i, scaled - Rational(whole)};
}

}  // namespace

PLPoint evaluate(const PLContraction& h, const PLPoint& p, const Rational& t) {
  require_point(h, p);
  require_time(t);
  const auto [done, lambda] = stage_position(h, t);
  PLPoint pos = p;
  for (std::size_t i = 0; i < done; ++i) pos = h.stages()[i].apply(pos, Rational(1));
  if (done < h.stage_count()) pos = h.stages()[done].apply(pos, lambda);
  return pos;
}

std::vector<PLPoint> track(const PLContraction& h, const PLPoint& p, const std::vector<Rational>& times) {
  require_point(h, p);
  for (std::size_t k = 0; k < times.size(); ++k) {
    require_time(times[k]);
    if (k > 0 && times[k] < times[k - 1]) {
      throw Error(ErrorCode::UnsortedTimes, "time " + to_string(times[k]) + " follows " + to_string(times[k - 1]));
    }
  }
  std::vector<PLPoint> out;
  PLPoint at_boundary = p;
  std::size_t applied = 0;
  for (const Rational& t : times) {
    const auto [done, lambda] = stage_position(h, t);
    for (; applied < done; ++applied) at_boundary = h.stages()[applied].apply(at_boundary, Rational(1));
    out.push_back(done < h.stage_count() ? h.stages()[done].apply(at_boundary, lambda) : at_boundary);
  }
  return out;
}

ImageSlice image_complex(const PLContraction& h, const Rational& t) {
  require_time(t);
  ImageSlice slice;
  const auto& k = h.image_complexes();
  if (h.stage_count() == 0 || t == 0) {
    slice.lower = slice.upper = k.front();
    return slice;
  }
  const auto [done, lambda] = stage_position(h, t);
  slice.surjective = false;
  if (lambda == 0) {
    slice.lower = slice.upper = k[done];
    slice.missing_point = PLPoint::barycenter(h.stages()[done - 1].pair().free_face);
  } else {
    slice.upper = k[done];
    slice.lower = k[done + 1];
    slice.missing_point = PLPoint::barycenter(h.stages()[done].pair().free_face);
  }
  return slice;
}

Rational opening_time(const PLContraction& h) {
  return h.stage_count() > 0 ? Rational(0) : Rational(1);
}

PLContraction restart_at(const PLContraction& h, std::size_t j) {
  if (j > h.stage_count()) {
    throw Error(ErrorCode::StageOutOfRange,
                "stage " + std::to_string(j) + " > " + std::to_string(h.stage_count()));
  }
  if (j == 0) return h;
  return PLContraction(h.image_complexes()[j],
                       std::vector<RetractionStage>(h.stages().begin() + static_cast<std::ptrdiff_t>(j),
                                                    h.stages().end()));
}

// --- sampling and audit ----------------------------------------------------------

namespace {

PLPoint random_point_in(const Simplex& s, std::mt19937_64& rng) {
  std::vector<Rational> raw(s.size());
  Integer total = 0;
  std::vector<Integer> ints(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    ints[i] = static_cast<long>(rng() % 7) + (i == 0 ? 1 : 0);
    total += ints[i];
  }
  for (std::size_t i = 0; i < s.size(); ++i) raw[i] = Rational(ints[i], total);
  return PLPoint(s, std::move(raw));
}

}  // namespace

std::vector<PLPoint> sample_points(const PLContraction& h, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto& simplices = h.start().simplices();
  std::vector<PLPoint> out;
  while (out.size() < count) {
    const bool mates = h.stage_count() > 0 && out.size() + 1 < count && out.size() % 4 == 0;
    if (mates) {
      const RetractionStage& stage = h.stages()[rng() % h.stage_count()];
      const PLPoint p = random_point_in(stage.pair().coface, rng);
      const Rational exit = stage.exit_parameter(p);
      if (exit == 1) continue;
      const Rational r(static_cast<long>(rng() % 6) + 1, 7);
      out.push_back(p);
      out.push_back(stage.along_ray(p, 1 + r * (exit - 1)));
      continue;
    }
    out.push_back(random_point_in(simplices[rng() % simplices.size()], rng));
  }
  return out;
}

std::vector<Rational> sample_times(const PLContraction& h, std::size_t count, std::uint64_t seed) {
  if (count < 2) throw Error(ErrorCode::InvalidParameter, "at least two sample times are needed");
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
  std::set<Rational> times{Rational(0), Rational(1)};
  const auto m = static_cast<long>(std::max<std::size_t>(1, h.stage_count()));
  for (long i = 1; i < m && times.size() < count / 2; ++i) times.insert(Rational(i, m));
  while (times.size() < count) {
    const long denominator = m * (static_cast<long>(rng() % 7) + 2);
    times.insert(Rational(static_cast<long>(rng() % static_cast<std::uint64_t>(denominator + 1)), denominator));
  }
  return {times.begin(), times.end()};
}

TrackTable build_track_table(const PLContraction& h, const SampleSpec& spec) {
  TrackTable table;
  table.points = sample_points(h, 2 * spec.pairs, spec.seed);
  table.times = sample_times(h, spec.times, spec.seed);
  for (const auto& p : table.points) table.positions.push_back(track(h, p, table.times));
  for (std::size_t i = 0; i < spec.pairs; ++i) table.pairs.emplace_back(2 * i, 2 * i + 1);
  return table;
}

CoalescenceReport check_coalescent(const TrackTable& table) {
  if (table.positions.size() != table.points.size()) {
    throw Error(ErrorCode::InvalidParameter, "track table has a row count mismatch");
  }
  for (const auto& row : table.positions) {
    if (row.size() != table.times.size()) {
      throw Error(ErrorCode::InvalidParameter, "track table has a column count mismatch");
    }
  }
  for (std::size_t k = 1; k < table.times.size(); ++k) {
    if (table.times[k] < table.times[k - 1]) throw Error(ErrorCode::UnsortedTimes, "track table times");
  }
  auto pairs = table.pairs;
  if (pairs.empty()) {
    for (std::size_t i = 0; i < table.points.size(); ++i) {
      for (std::size_t j = i + 1; j < table.points.size(); ++j) pairs.emplace_back(i, j);
    }
  }
  CoalescenceReport report;
  for (const auto& [a, b] : pairs) {
    if (a >= table.points.size() || b >= table.points.size()) {
      throw Error(ErrorCode::InvalidParameter, "track table pair index out of range");
    }
    ++report.pairs_checked;
    const auto& ra = table.positions[a];
    const auto& rb = table.positions[b];
    std::size_t k = 0;
    while (k < ra.size() && ra[k] != rb[k]) ++k;
    if (k == ra.size()) continue;
    ++report.merged_pairs;
    for (std::size_t later = k + 1; later < ra.size(); ++later) {
      if (ra[later] != rb[later]) {
        report.pass = false;
        report.violation = CoalescenceViolation{a, b, k, later};
        return report;
      }
    }
  }
  return report;
}

CoalescenceReport check_coalescent(const PLContraction& h, const SampleSpec& spec) {
  return check_coalescent(build_track_table(h, spec));
}

}  // namespace coalescent

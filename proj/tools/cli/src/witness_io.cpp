#include "coalescent_cli/witness_io.hpp"

#include <map>

#include "coalescent/errors.hpp"

namespace coalescent::cli {

namespace {

Json labels_of(const SimplicialComplex& c, const Simplex& s) {
  Json out = Json::array();
  for (VertexId v : s) out.push_back(c.label(v));
  return out;
}

Json point_json(const RawPoint& p) {
  Json out = Json::array();
  for (const auto& [label, w] : p) out.push_back(Json::array({label, to_string(w)}));
  return out;
}

[[noreturn]] void malformed(const std::string& what) {
  throw Error(ErrorCode::ParseError, "witness: " + what);
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) malformed(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::string as_string(const Json& j, const std::string& what) {
  if (!j.is_string()) malformed(what + " must be a string");
  return j.get<std::string>();
}

Rational as_rational(const Json& j, const std::string& what) {
  return parse_rational(as_string(j, what));
}

Simplex as_simplex(const Json& j, const std::map<std::string, VertexId>& ids, const std::string& what) {
  if (!j.is_array() || j.empty()) malformed(what + " must be a non-empty label list");
  std::vector<VertexId> verts;
  for (const Json& x : j) {
    const auto it = ids.find(as_string(x, what));
    if (it == ids.end()) malformed(what + " names unknown vertex " + x.dump());
    verts.push_back(it->second);
  }
  return Simplex(std::move(verts));
}

RawPoint as_raw_point(const Json& j) {
  if (!j.is_array()) malformed("a point must be a list of [label, weight] pairs");
  RawPoint out;
  for (const Json& term : j) {
    if (!term.is_array() || term.size() != 2) malformed("a point term must be [label, weight]");
    out.emplace_back(as_string(term[0], "label"), as_rational(term[1], "weight"));
  }
  return out;
}

}  // namespace

RawPoint raw_point(const SimplicialComplex& c, const PLPoint& p) {
  RawPoint out;
  for (const auto& [v, w] : p.terms()) out.emplace_back(c.label(v), w);
  return out;
}

std::optional<PLPoint> to_pl_point(const SimplicialComplex& c, const RawPoint& raw) {
  std::vector<VertexId> verts;
  std::map<VertexId, Rational> weights;
  for (const auto& [label, w] : raw) {
    const auto v = c.find_label(label);
    if (!v || weights.contains(*v)) return std::nullopt;
    weights[*v] = w;
    verts.push_back(*v);
  }
  try {
    Simplex carrier(verts);
    std::vector<Rational> ws;
    for (VertexId v : carrier) ws.push_back(weights.at(v));
    return PLPoint(carrier, std::move(ws));
  } catch (const Error&) {
    return std::nullopt;
  }
}

Json witness_to_json(const std::string& name, const SimplicialComplex& c, const CollapseSequence& s,
                     const TrackTable& table, const SampleSpec& spec) {
  Json j;
  j["format"] = "coalescent-witness";
  j["version"] = 1;
  j["name"] = name;
  j["facets"] = Json::array();
  for (const Simplex& f : c.facets()) j["facets"].push_back(labels_of(c, f));
  j["collapse"] = Json::array();
  for (const auto& p : s.pairs) {
    j["collapse"].push_back({{"free_face", labels_of(c, p.free_face)}, {"coface", labels_of(c, p.coface)}});
  }
  j["terminal"] = s.terminal.empty() ? "" : c.label(s.terminal.simplex(0)[0]);
  Json samples;
  samples["seed"] = spec.seed;
  samples["pairs"] = spec.pairs;
  samples["times"] = Json::array();
  for (const Rational& t : table.times) samples["times"].push_back(to_string(t));
  samples["points"] = Json::array();
  for (const PLPoint& p : table.points) samples["points"].push_back(point_json(raw_point(c, p)));
  samples["audit_pairs"] = Json::array();
  for (const auto& [a, b] : table.pairs) samples["audit_pairs"].push_back(Json::array({a, b}));
  samples["positions"] = Json::array();
  for (const auto& row : table.positions) {
    Json r = Json::array();
    for (const PLPoint& p : row) r.push_back(point_json(raw_point(c, p)));
    samples["positions"].push_back(std::move(r));
  }
  j["samples"] = std::move(samples);
  return j;
}

WitnessDocument witness_from_json(const Json& j) {
  WitnessDocument doc;
  if (as_string(field(j, "format"), "format") != "coalescent-witness") malformed("unknown format");
  doc.name = as_string(field(j, "name"), "name");

  std::map<std::string, VertexId> ids;
  Labels labels;
  std::vector<std::vector<VertexId>> facets;
  const Json& fs = field(j, "facets");
  if (!fs.is_array()) malformed("facets must be a list");
  for (const Json& f : fs) {
    if (!f.is_array() || f.empty()) malformed("facet must be a non-empty label list");
    std::vector<VertexId> facet;
    for (const Json& x : f) {
      const std::string label = as_string(x, "facet label");
      auto [it, fresh] = ids.emplace(label, static_cast<VertexId>(ids.size()));
      if (fresh) labels[it->second] = label;
      facet.push_back(it->second);
    }
    facets.push_back(std::move(facet));
  }
  doc.complex = SimplicialComplex::from_maximal(facets, std::move(labels));

  const Json& pairs = field(j, "collapse");
  if (!pairs.is_array()) malformed("collapse must be a list");
  for (const Json& p : pairs) {
    doc.sequence.pairs.push_back({as_simplex(field(p, "free_face"), ids, "free_face"),
                                  as_simplex(field(p, "coface"), ids, "coface")});
  }
  const std::string terminal = as_string(field(j, "terminal"), "terminal");
  const auto t = ids.find(terminal);
  if (t == ids.end()) malformed("terminal names unknown vertex '" + terminal + "'");
  doc.sequence.terminal = SimplicialComplex::from_maximal({{t->second}}, {{t->second, terminal}});

  const Json& samples = field(j, "samples");
  const Json& seed = field(samples, "seed");
  const Json& count = field(samples, "pairs");
  if (!seed.is_number_unsigned() || !count.is_number_unsigned()) malformed("seed and pairs must be unsigned");
  doc.spec.seed = seed.get<std::uint64_t>();
  doc.spec.pairs = count.get<std::size_t>();
  for (const Json& x : field(samples, "times")) doc.times.push_back(as_rational(x, "time"));
  doc.spec.times = doc.times.size();
  for (const Json& x : field(samples, "points")) doc.points.push_back(as_raw_point(x));
  for (const Json& x : field(samples, "audit_pairs")) {
    if (!x.is_array() || x.size() != 2 || !x[0].is_number_unsigned() || !x[1].is_number_unsigned()) {
      malformed("audit pair must be two indices");
    }
    doc.pairs.emplace_back(x[0].get<std::size_t>(), x[1].get<std::size_t>());
  }
  for (const Json& row : field(samples, "positions")) {
    std::vector<RawPoint> r;
    for (const Json& x : row) r.push_back(as_raw_point(x));
    doc.positions.push_back(std::move(r));
  }
  return doc;
}

}  // namespace coalescent::cli

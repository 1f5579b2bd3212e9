#include "coalescent/complex.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "coalescent/errors.hpp"

namespace coalescent {

// --- Simplex ---------------------------------------------------------------

Simplex::Simplex(std::vector<VertexId> vertices) : vertices_(std::move(vertices)) {
  std::sort(vertices_.begin(), vertices_.end());
  const auto dup = std::adjacent_find(vertices_.begin(), vertices_.end());
  if (dup != vertices_.end()) {
    throw Error(ErrorCode::DuplicateVertexInFacet,
                "vertex " + std::to_string(*dup) + " listed twice");
  }
}

Simplex::Simplex(std::initializer_list<VertexId> vertices)
    : Simplex(std::vector<VertexId>(vertices)) {}

bool Simplex::contains(VertexId v) const noexcept {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

std::optional<std::size_t> Simplex::position(VertexId v) const noexcept {
  const auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v) return std::nullopt;
  return static_cast<std::size_t>(it - vertices_.begin());
}

bool Simplex::is_face_of(const Simplex& other) const noexcept {
  return std::includes(other.vertices_.begin(), other.vertices_.end(),
                       vertices_.begin(), vertices_.end());
}

Simplex Simplex::without_index(std::size_t index) const {
  std::vector<VertexId> out;
  out.reserve(vertices_.size() - 1);
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (i != index) out.push_back(vertices_[i]);
  }
  return Simplex(Trusted{}, std::move(out));
}

Simplex Simplex::without_vertex(VertexId v) const {
  const auto pos = position(v);
  if (!pos) return *this;
  return without_index(*pos);
}

Simplex Simplex::with_vertex(VertexId v) const {
  std::vector<VertexId> out = vertices_;
  out.push_back(v);
  return Simplex(std::move(out));
}

std::vector<Simplex> Simplex::boundary_faces() const {
  std::vector<Simplex> out;
  if (vertices_.size() < 2) return out;
  out.reserve(vertices_.size());
  for (std::size_t i = 0; i < vertices_.size(); ++i) out.push_back(without_index(i));
  return out;
}

std::vector<Simplex> Simplex::all_faces() const {
  std::vector<Simplex> out;
  const std::size_t n = vertices_.size();
  if (n == 0 || n > 20) return out;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<VertexId> face;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (1u << i)) face.push_back(vertices_[i]);
    }
    out.push_back(Simplex(Trusted{}, std::move(face)));
  }
  return out;
}

std::size_t SimplexHash::operator()(const Simplex& s) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ull;
  for (VertexId v : s) h = (h ^ v) * 0x100000001b3ull + (h >> 29);
  return h;
}

std::string to_string(const Simplex& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  return out + "}";
}

// --- SimplicialComplex -------------------------------------------------------

SimplicialComplex SimplicialComplex::from_maximal(
    std::span<const std::vector<VertexId>> facets, Labels labels) {
  std::vector<Simplex> simplices;
  simplices.reserve(facets.size());
  for (const auto& f : facets) simplices.emplace_back(f);
  return from_simplices(std::move(simplices), std::move(labels));
}

SimplicialComplex SimplicialComplex::from_maximal(
    std::initializer_list<std::vector<VertexId>> facets, Labels labels) {
  return from_maximal(std::span<const std::vector<VertexId>>(facets.begin(), facets.size()),
                      std::move(labels));
}

SimplicialComplex SimplicialComplex::from_simplices(std::vector<Simplex> simplices,
                                                    Labels labels) {
  std::set<Simplex, CanonicalOrder> closed;
  for (const auto& s : simplices) {
    if (s.empty()) continue;
    if (closed.contains(s)) continue;
    for (auto& f : s.all_faces()) closed.insert(std::move(f));
  }
  SimplicialComplex c;
  c.simplices_.assign(closed.begin(), closed.end());
  c.labels_ = std::move(labels);
  c.build_index();
  return c;
}

void SimplicialComplex::build_index() {
  index_.clear();
  index_.reserve(simplices_.size() * 2);
  for (std::size_t i = 0; i < simplices_.size(); ++i) index_.emplace(simplices_[i], i);
  cofaces_.assign(simplices_.size(), {});
  faces_.assign(simplices_.size(), {});
  for (std::size_t i = 0; i < simplices_.size(); ++i) {
    for (const auto& f : simplices_[i].boundary_faces()) {
      const std::size_t j = index_.at(f);
      faces_[i].push_back(j);
      cofaces_[j].push_back(i);
    }
  }
  // Simplices are visited in canonical order, so coface lists come out sorted.
  for (auto& f : faces_) std::sort(f.begin(), f.end());
}

int SimplicialComplex::dim() const noexcept {
  return simplices_.empty() ? -1 : simplices_.back().dim();
}

std::optional<std::size_t> SimplicialComplex::find(const Simplex& s) const {
  const auto it = index_.find(s);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool SimplicialComplex::has_vertex(VertexId v) const { return contains(Simplex{v}); }

std::vector<VertexId> SimplicialComplex::vertices() const {
  std::vector<VertexId> out;
  for (const auto& s : simplices_) {
    if (s.size() != 1) break;
    out.push_back(s[0]);
  }
  return out;
}

std::vector<Simplex> SimplicialComplex::simplices_of_dim(int d) const {
  std::vector<Simplex> out;
  for (const auto& s : simplices_) {
    if (s.dim() == d) out.push_back(s);
  }
  return out;
}

std::vector<Simplex> SimplicialComplex::facets() const {
  std::vector<Simplex> out;
  for (std::size_t i = 0; i < simplices_.size(); ++i) {
    if (cofaces_[i].empty()) out.push_back(simplices_[i]);
  }
  return out;
}

std::string SimplicialComplex::label(VertexId v) const {
  const auto it = labels_.find(v);
  return it == labels_.end() ? std::to_string(v) : it->second;
}

std::string SimplicialComplex::label(const Simplex& s) const {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += label(s[i]);
  }
  return out + "}";
}

std::optional<VertexId> SimplicialComplex::find_label(std::string_view label) const {
  for (const auto& [v, l] : labels_) {
    if (l == label) return v;
  }
  for (VertexId v : vertices()) {
    if (!labels_.contains(v) && std::to_string(v) == label) return v;
  }
  return std::nullopt;
}

SimplicialComplex SimplicialComplex::with_labels(Labels labels) const {
  SimplicialComplex out = *this;
  out.labels_ = std::move(labels);
  return out;
}

std::vector<std::vector<std::size_t>> SimplicialComplex::rebuild_coface_index() const {
  std::vector<std::vector<std::size_t>> out(simplices_.size());
  for (std::size_t i = 0; i < simplices_.size(); ++i) {
    for (std::size_t j = 0; j < simplices_.size(); ++j) {
      if (simplices_[j].size() == simplices_[i].size() + 1 &&
          simplices_[i].is_face_of(simplices_[j])) {
        out[i].push_back(j);
      }
    }
  }
  return out;
}

// --- Operations --------------------------------------------------------------

std::vector<Simplex> cofaces(const SimplicialComplex& c, const Simplex& s) {
  const auto idx = c.find(s);
  if (!idx) throw Error(ErrorCode::SimplexNotInComplex, to_string(s));
  std::vector<Simplex> out;
  for (std::size_t j : c.coface_indices(*idx)) out.push_back(c.simplex(j));
  return out;
}

std::vector<Simplex> star(const SimplicialComplex& c, VertexId v) {
  const auto idx = c.find(Simplex{v});
  if (!idx) {
    throw Error(ErrorCode::SimplexNotInComplex, "vertex " + std::to_string(v));
  }
  // Walk the coface graph upward from {v}; everything reached contains v.
  std::set<std::size_t> seen{*idx};
  std::vector<std::size_t> frontier{*idx};
  while (!frontier.empty()) {
    const std::size_t i = frontier.back();
    frontier.pop_back();
    for (std::size_t j : c.coface_indices(i)) {
      if (seen.insert(j).second) frontier.push_back(j);
    }
  }
  std::vector<Simplex> out;
  for (std::size_t i : seen) out.push_back(c.simplex(i));
  return out;
}

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[std::max(a, b)] = std::min(a, b);
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

Census census(const SimplicialComplex& c) {
  Census out;
  out.dim = c.dim();
  if (c.empty()) return out;
  out.f_vector.assign(static_cast<std::size_t>(out.dim) + 1, 0);
  for (const auto& s : c.simplices()) ++out.f_vector[static_cast<std::size_t>(s.dim())];
  for (std::size_t d = 0; d < out.f_vector.size(); ++d) {
    const auto n = static_cast<std::int64_t>(out.f_vector[d]);
    out.euler_characteristic += (d % 2 == 0) ? n : -n;
  }
  const std::size_t nv = out.f_vector[0];
  DisjointSets sets(nv);
  std::size_t components = nv;
  for (std::size_t i = nv; i < c.size() && c.simplex(i).size() == 2; ++i) {
    for (std::size_t a : c.face_indices(i)) {
      for (std::size_t b : c.face_indices(i)) {
        if (a < b && sets.unite(a, b)) --components;
      }
    }
  }
  out.connected = components == 1;
  return out;
}

SimplicialComplex quotient(const SimplicialComplex& c,
                           const std::vector<std::vector<VertexId>>& classes,
                           const std::vector<std::string>& class_labels) {
  std::map<VertexId, VertexId> rep;
  std::map<VertexId, std::size_t> members;
  const auto class_size = [&](VertexId v) { return members[rep.at(v)]; };
  Labels labels;
  for (std::size_t k = 0; k < classes.size(); ++k) {
    const auto& cls = classes[k];
    if (cls.empty()) continue;
    const VertexId r = *std::min_element(cls.begin(), cls.end());
    for (VertexId v : cls) {
      if (!c.has_vertex(v)) {
        throw Error(ErrorCode::InvalidParameter,
                    "partition lists vertex " + std::to_string(v) + " not in the complex");
      }
      ++members[r];
      if (!rep.emplace(v, r).second) {
        throw Error(ErrorCode::InvalidParameter,
                    "vertex " + std::to_string(v) + " appears in two classes");
      }
    }
    if (k < class_labels.size() && !class_labels[k].empty()) {
      labels[r] = class_labels[k];
    } else if (c.labels().contains(r)) {
      labels[r] = c.label(r);
    }
  }
  for (VertexId v : c.vertices()) {
    if (rep.emplace(v, v).second && c.labels().contains(v)) labels[v] = c.label(v);
  }

  const auto glued = [&](const Simplex& s) {
    return std::all_of(s.begin(), s.end(), [&](VertexId v) { return class_size(v) > 1; });
  };
  std::unordered_map<Simplex, std::size_t, SimplexHash> image_of;
  std::vector<Simplex> images;
  images.reserve(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    const Simplex& s = c.simplex(i);
    std::vector<VertexId> mapped;
    mapped.reserve(s.size());
    for (VertexId v : s) mapped.push_back(rep.at(v));
    std::sort(mapped.begin(), mapped.end());
    if (std::adjacent_find(mapped.begin(), mapped.end()) != mapped.end()) {
      throw Error(ErrorCode::NonSimplicialQuotient,
                  "simplex " + c.label(s) + " collapses under the identification");
    }
    Simplex image(std::move(mapped));
    const auto [it, fresh] = image_of.emplace(image, i);
    if (!fresh && glued(s) && glued(c.simplex(it->second))) continue;
    if (!fresh) {
      throw Error(ErrorCode::NonSimplicialQuotient,
                  "simplices " + c.label(c.simplex(it->second)) + " and " + c.label(s) +
                      " map to the same vertex set");
    }
    images.push_back(std::move(image));
  }
  return SimplicialComplex::from_simplices(std::move(images), std::move(labels));
}

SimplicialComplex barycentric_subdivision(const SimplicialComplex& c) {
  // Facets of the subdivision are maximal chains s0 < s1 < ... < sk ending at
  // a facet of c; grow chains downward through the face index.
  std::vector<std::vector<VertexId>> chains;
  std::vector<std::vector<std::size_t>> partial;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c.coface_indices(i).empty()) partial.push_back({i});
  }
  while (!partial.empty()) {
    auto chain = std::move(partial.back());
    partial.pop_back();
    const auto& faces = c.face_indices(chain.back());
    if (faces.empty()) {
      chains.emplace_back(chain.begin(), chain.end());
      continue;
    }
    for (std::size_t f : faces) {
      auto next = chain;
      next.push_back(f);
      partial.push_back(std::move(next));
    }
  }
  Labels labels;
  for (std::size_t i = 0; i < c.size(); ++i) {
    std::string l;
    for (VertexId v : c.simplex(i)) {
      if (!l.empty()) l += ".";
      l += c.label(v);
    }
    labels[static_cast<VertexId>(i)] = l;
  }
  return SimplicialComplex::from_maximal(chains, std::move(labels));
}

SimplicialComplex remove_simplices(const SimplicialComplex& c,
                                   const std::vector<std::size_t>& indices) {
  std::vector<bool> removed(c.size(), false);
  for (std::size_t i : indices) removed.at(i) = true;
  std::vector<Simplex> kept;
  kept.reserve(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (removed[i]) continue;
    for (std::size_t f : c.face_indices(i)) {
      if (removed[f]) {
        throw Error(ErrorCode::InvalidParameter,
                    "removal leaves " + c.label(c.simplex(i)) + " without a face");
      }
    }
    kept.push_back(c.simplex(i));
  }
  Labels labels;
  for (const auto& s : kept) {
    if (s.size() != 1) break;
    if (c.labels().contains(s[0])) labels[s[0]] = c.label(s[0]);
  }
  return SimplicialComplex::from_simplices(std::move(kept), std::move(labels));
}

}  // namespace coalescent

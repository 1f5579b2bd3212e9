#include <algorithm>
#include <deque>
#include <cstdlib>
#include <map>
#include <optional>
#include <set>

#include "coalescent/errors.hpp"
#include "coalescent/evidence.hpp"

namespace coalescent {

Presentation pi1_presentation(const SimplicialComplex& c, VertexId basepoint) {
  if (!c.has_vertex(basepoint)) {
    throw Error(ErrorCode::SimplexNotInComplex, "basepoint " + std::to_string(basepoint));
  }
  std::map<VertexId, std::vector<VertexId>> adj;
  for (VertexId v : c.vertices()) adj[v];
  for (const Simplex& e : c.simplices_of_dim(1)) {
    adj[e[0]].push_back(e[1]);
    adj[e[1]].push_back(e[0]);
  }
  for (auto& [v, nbrs] : adj) std::sort(nbrs.begin(), nbrs.end());

  std::set<Simplex> tree;
  std::set<VertexId> seen{basepoint};
  std::deque<VertexId> queue{basepoint};
  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop_front();
    for (VertexId w : adj[v]) {
      if (seen.insert(w).second) {
        tree.insert(Simplex{v, w});
        queue.push_back(w);
      }
    }
  }
  if (seen.size() != adj.size()) {
    throw Error(ErrorCode::NotConnected, "complex is not connected");
  }

  Presentation p;
  std::map<Simplex, int> generator_of;
  for (const Simplex& e : c.simplices_of_dim(1)) {
    if (tree.contains(e)) continue;
    p.generators.push_back(c.label(e[0]) + "-" + c.label(e[1]));
    generator_of[e] = static_cast<int>(p.generators.size());
  }
  const auto letter = [&](VertexId a, VertexId b) -> int {
    const auto it = generator_of.find(Simplex{a, b});
    if (it == generator_of.end()) return 0;
    return a < b ? it->second : -it->second;
  };
  for (const Simplex& t : c.simplices_of_dim(2)) {
    Word w;
    for (int g : {letter(t[0], t[1]), letter(t[1], t[2]), letter(t[2], t[0])}) {
      if (g != 0) w.push_back(g);
    }
    p.relators.push_back(std::move(w));
  }
  return p;
}

namespace {

Word free_reduce(const Word& w) {
  Word out;
  for (int x : w) {
    if (!out.empty() && out.back() == -x) {
      out.pop_back();
    } else {
      out.push_back(x);
    }
  }
  std::size_t lo = 0, hi = out.size();
  while (hi - lo >= 2 && out[lo] == -out[hi - 1]) {
    ++lo;
    --hi;
  }
  return Word(out.begin() + static_cast<std::ptrdiff_t>(lo),
              out.begin() + static_cast<std::ptrdiff_t>(hi));
}

Word inverse(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (int& x : out) x = -x;
  return out;
}

void normalize(Presentation& p) {
  std::vector<Word> kept;
  for (const Word& r : p.relators) {
    Word w = free_reduce(r);
    if (!w.empty()) kept.push_back(std::move(w));
  }
  p.relators = std::move(kept);
}

struct Elimination {
  std::size_t relator;
  std::size_t position;
};

std::optional<Elimination> find_elimination(const Presentation& p) {
  std::optional<Elimination> best;
  for (std::size_t r = 0; r < p.relators.size(); ++r) {
    const Word& w = p.relators[r];
    if (best && w.size() >= p.relators[best->relator].size()) continue;
    std::map<int, int> count;
    for (int x : w) ++count[std::abs(x)];
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (count[std::abs(w[i])] == 1) {
        best = Elimination{r, i};
        break;
      }
    }
  }
  return best;
}

bool abelianization_trivial(const Presentation& p) {
  if (p.generators.empty()) return true;
  const SmithForm f = smith_normal_form(abelianization_matrix(p));
  if (f.rank < p.generators.size()) return false;
  return std::all_of(f.divisors.begin(), f.divisors.end(), [](const Integer& d) { return d == 1; });
}

}  // namespace

IntegerMatrix abelianization_matrix(const Presentation& p) {
  IntegerMatrix m(p.relators.size(), p.generators.size());
  for (std::size_t r = 0; r < p.relators.size(); ++r) {
    for (int x : p.relators[r]) {
      m.at(r, static_cast<std::size_t>(std::abs(x) - 1)) += x > 0 ? 1 : -1;
    }
  }
  return m;
}

SimplifiedPresentation simplify_presentation(Presentation p, std::size_t step_budget) {
  if (step_budget == 0) throw Error(ErrorCode::InvalidParameter, "step budget must be >= 1");
  SimplifiedPresentation out;
  normalize(p);
  while (!p.generators.empty() && out.steps < step_budget) {
    const auto elim = find_elimination(p);
    if (!elim) break;
    ++out.steps;

    // Rotate so the lone occurrence leads: r = g^e w, hence g^e = w^-1.
    Word r = p.relators[elim->relator];
    std::rotate(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(elim->position), r.end());
    const int lead = r.front();
    const int g = std::abs(lead);
    const Word rest(r.begin() + 1, r.end());
    const Word value = lead > 0 ? inverse(rest) : rest;  // word equal to g
    const Word value_inv = inverse(value);

    std::vector<Word> next;
    for (std::size_t i = 0; i < p.relators.size(); ++i) {
      if (i == elim->relator) continue;
      Word w;
      for (int x : p.relators[i]) {
        if (std::abs(x) != g) {
          // Generators above g shift down by one.
          const int a = std::abs(x) > g ? std::abs(x) - 1 : std::abs(x);
          w.push_back(x > 0 ? a : -a);
          continue;
        }
        for (int y : (x > 0 ? value : value_inv)) {
          const int a = std::abs(y) > g ? std::abs(y) - 1 : std::abs(y);
          w.push_back(y > 0 ? a : -a);
        }
      }
      next.push_back(std::move(w));
    }
    p.relators = std::move(next);
    p.generators.erase(p.generators.begin() + (g - 1));
    normalize(p);
  }
  if (p.generators.empty()) {
    out.verdict = Pi1Verdict::Trivial;
  } else if (!abelianization_trivial(p)) {
    out.verdict = Pi1Verdict::NontrivialByAbelianization;
  } else {
    out.verdict = Pi1Verdict::Unknown;
  }
  out.presentation = std::move(p);
  return out;
}

}  // namespace coalescent

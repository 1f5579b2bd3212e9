#include "coalescent_cli/scx.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

#include "coalescent/errors.hpp"

namespace coalescent::cli {

namespace {

bool valid_label(std::string_view token) {
  return std::all_of(token.begin(), token.end(), [](unsigned char ch) {
    return std::isalnum(ch) || ch == '_' || ch == '.' || ch == '-' || ch == '+' || ch == ',' ||
           ch == '(' || ch == ')' || ch == '\'';
  });
}

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

// Digit runs compare as numbers, so x9 sorts before x10.
bool natural_less(const std::string& a, const std::string& b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (std::isdigit(static_cast<unsigned char>(a[i])) && std::isdigit(static_cast<unsigned char>(b[j]))) {
      std::size_t ie = i, je = j;
      while (ie < a.size() && std::isdigit(static_cast<unsigned char>(a[ie]))) ++ie;
      while (je < b.size() && std::isdigit(static_cast<unsigned char>(b[je]))) ++je;
      std::string_view x(a.data() + i, ie - i), y(b.data() + j, je - j);
      while (x.size() > 1 && x.front() == '0') x.remove_prefix(1);
      while (y.size() > 1 && y.front() == '0') y.remove_prefix(1);
      if (x.size() != y.size()) return x.size() < y.size();
      if (x != y) return x < y;
      i = ie;
      j = je;
      continue;
    }
    if (a[i] != b[j]) return a[i] < b[j];
    ++i;
    ++j;
  }
  if ((a.size() - i) != (b.size() - j)) return a.size() - i < b.size() - j;
  return a < b;
}

}  // namespace

ScxDocument parse_scx(std::string_view text) {
  ScxDocument doc;
  std::map<std::string, VertexId> ids;
  Labels labels;
  std::vector<std::vector<VertexId>> facets;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  bool seen_facet = false;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = trim(raw);
    const std::string where = "line " + std::to_string(line_no);
    if (line.empty() || line.front() == '#') continue;
    if (line.rfind("name:", 0) == 0) {
      if (seen_facet || !doc.name.empty()) {
        throw Error(ErrorCode::ParseError, where + ": name header must come first");
      }
      doc.name = trim(std::string_view(line).substr(5));
      if (doc.name.empty()) throw Error(ErrorCode::ParseError, where + ": empty name");
      continue;
    }
    std::istringstream tokens(line);
    std::string token;
    std::vector<VertexId> facet;
    while (tokens >> token) {
      if (!valid_label(token)) {
        throw Error(ErrorCode::ParseError, where + ": bad vertex label '" + token + "'");
      }
      auto [it, fresh] = ids.emplace(token, static_cast<VertexId>(ids.size()));
      if (fresh) labels[it->second] = token;
      facet.push_back(it->second);
    }
    try {
      Simplex check(facet);
    } catch (const Error& e) {
      throw Error(e.code(), where + ": repeated vertex in facet");
    }
    facets.push_back(std::move(facet));
    seen_facet = true;
  }
  doc.complex = SimplicialComplex::from_maximal(facets, std::move(labels));
  return doc;
}

std::string write_scx(const SimplicialComplex& c, const std::string& name) {
  std::vector<std::vector<std::string>> lines;
  for (const Simplex& f : c.facets()) {
    std::vector<std::string> labels;
    for (VertexId v : f) labels.push_back(c.label(v));
    std::sort(labels.begin(), labels.end(), natural_less);
    lines.push_back(std::move(labels));
  }
  std::sort(lines.begin(), lines.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), natural_less);
  });
  std::string out;
  if (!name.empty()) out += "name: " + name + "\n";
  for (const auto& labels : lines) {
    std::string line;
    for (const auto& l : labels) line += (line.empty() ? "" : " ") + l;
    out += line + "\n";
  }
  return out;
}

bool same_labelled_complex(const SimplicialComplex& a, const SimplicialComplex& b) {
  const auto labelled = [](const SimplicialComplex& c) {
    std::set<std::vector<std::string>> out;
    for (const Simplex& s : c.simplices()) {
      std::vector<std::string> names;
      for (VertexId v : s) names.push_back(c.label(v));
      std::sort(names.begin(), names.end());
      out.insert(std::move(names));
    }
    return out;
  };
  return labelled(a) == labelled(b);
}

}  // namespace coalescent::cli

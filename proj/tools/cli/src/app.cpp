#include "coalescent_cli/app.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "coalescent/builders.hpp"
#include "coalescent/errors.hpp"
#include "coalescent/evidence.hpp"
#include "coalescent/stardisk.hpp"
#include "coalescent_cli/scx.hpp"

namespace coalescent::cli {

std::string Report::render() const {
  if (json_output) return json.dump(2) + "\n";
  return text;
}

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw Error(ErrorCode::InvalidParameter, "cannot write " + path);
}

// Parses options for one subcommand. Throws Error(ParseError) on bad flags.
void parse_options(CLI::App& app, const std::vector<std::string>& args) {
  std::vector<std::string> storage{app.get_name()};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

Json labels_json(const SimplicialComplex& c, const Simplex& s) {
  Json out = Json::array();
  for (VertexId v : s) out.push_back(c.label(v));
  return out;
}

std::string labels_text(const SimplicialComplex& c, const Simplex& s) {
  std::string out;
  for (VertexId v : s) {
    if (!out.empty()) out += ' ';
    out += c.label(v);
  }
  return out;
}

std::string join_sizes(const std::vector<std::size_t>& xs) {
  std::string out;
  for (std::size_t x : xs) out += (out.empty() ? "" : " ") + std::to_string(x);
  return out;
}

struct Context {
  Report& report;
  std::vector<std::string> args;
};

NamedComplex build_named(const std::string& name, const std::vector<std::string>& rest) {
  const auto number = [&]() -> int {
    if (rest.empty()) throw Error(ErrorCode::InvalidParameter, "build " + name + " needs a number");
    try {
      std::size_t used = 0;
      const int n = std::stoi(rest.front(), &used);
      if (used != rest.front().size()) throw std::invalid_argument("trailing");
      return n;
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::ParseError, "not an integer: " + rest.front());
    }
  };
  if (name == "dunce-hat") return dunce_hat(DunceHatScheme::Quotient);
  if (name == "dunce-hat-minimal") return dunce_hat(DunceHatScheme::Minimal8);
  if (name == "bings-house") return bings_house();
  if (name == "dunce-hat-flap") return dunce_hat_with_flap();
  if (name == "simplex") return full_simplex(number());
  if (name == "sphere") return boundary_sphere(number());
  if (name == "disc") return disc_fan(number());
  throw Error(ErrorCode::UnknownCommand, "unknown complex '" + name + "'");
}

void cmd_build(Context& ctx) {
  CLI::App app("build a named complex", "build");
  std::vector<std::string> positional;
  std::string out_path;
  bool json = false;
  app.add_option("complex", positional, "complex name and optional size")->required();
  app.add_option("--out", out_path, "output .scx file");
  app.add_flag("--json", json);
  parse_options(app, ctx.args);
  const std::string name = positional.front();
  const NamedComplex nc =
      build_named(name, std::vector<std::string>(positional.begin() + 1, positional.end()));
  const std::string scx = write_scx(nc.complex, nc.name);
  const Census cs = census(nc.complex);
  ctx.report.json_output = json;
  ctx.report.json["name"] = nc.name;
  ctx.report.json["f_vector"] = cs.f_vector;
  ctx.report.json["euler_characteristic"] = cs.euler_characteristic;
  Json marks = Json::object();
  for (const auto& [role, v] : nc.marked_vertices) marks[role] = nc.complex.label(v);
  ctx.report.json["marked_vertices"] = marks;
  Json marked_simplices = Json::object();
  for (const auto& [role, list] : nc.marked_simplices) {
    Json l = Json::array();
    for (const Simplex& s : list) l.push_back(labels_json(nc.complex, s));
    marked_simplices[role] = l;
  }
  ctx.report.json["marked_simplices"] = marked_simplices;
  if (out_path.empty()) {
    ctx.report.json["scx"] = scx;
    ctx.report.text = scx;
  } else {
    write_file(out_path, scx);
    ctx.report.json["out"] = out_path;
    ctx.report.text = "built " + nc.name + " (f-vector " + join_sizes(cs.f_vector) + ") -> " + out_path + "\n";
  }
}

void cmd_info(Context& ctx) {
  CLI::App app("summarize a complex", "info");
  std::string path;
  bool json = false;
  app.add_option("file", path)->required();
  app.add_flag("--json", json);
  parse_options(app, ctx.args);
  const ScxDocument doc = parse_scx(read_file(path));
  const Census cs = census(doc.complex);
  ctx.report.json_output = json;
  ctx.report.json["file"] = path;
  ctx.report.json["name"] = doc.name;
  ctx.report.json["dim"] = cs.dim;
  ctx.report.json["f_vector"] = cs.f_vector;
  ctx.report.json["euler_characteristic"] = cs.euler_characteristic;
  ctx.report.json["connected"] = cs.connected;
  ctx.report.json["facets"] = doc.complex.facets().size();
  std::ostringstream t;
  t << (doc.name.empty() ? path : doc.name) << "\n"
    << "  dimension: " << cs.dim << "\n"
    << "  f-vector: " << join_sizes(cs.f_vector) << "\n"
    << "  euler characteristic: " << cs.euler_characteristic << "\n"
    << "  connected: " << (cs.connected ? "yes" : "no") << "\n"
    << "  facets: " << doc.complex.facets().size() << "\n";
  ctx.report.text = t.str();
}

Json homology_json(const HomologyProfile& h) {
  Json out = Json::array();
  for (std::size_t d = 0; d < h.degrees.size(); ++d) {
    Json torsion = Json::array();
    for (const Integer& x : h.degrees[d].torsion) torsion.push_back(x.str());
    out.push_back({{"degree", d}, {"betti", h.degrees[d].betti}, {"torsion", torsion}});
  }
  return out;
}

std::string homology_text(const HomologyProfile& h) {
  std::string out;
  for (std::size_t d = 0; d < h.degrees.size(); ++d) {
    out += "  H~" + std::to_string(d) + ": ";
    const auto& g = h.degrees[d];
    std::string group;
    if (g.betti > 0) group = "Z" + (g.betti > 1 ? "^" + std::to_string(g.betti) : std::string());
    for (const Integer& x : g.torsion) group += (group.empty() ? "" : " + ") + ("Z/" + x.str());
    out += (group.empty() ? "0" : group) + "\n";
  }
  return out;
}

Json star_disk_json(const SimplicialComplex& c, const StarDiskReport& r) {
  Json failures = Json::array();
  for (const auto& f : r.failures()) {
    Json failing = Json::array();
    for (const Simplex& s : f.failing_simplices) failing.push_back(labels_json(c, s));
    failures.push_back({{"point", labels_json(c, f.point)}, {"failing_simplices", failing}});
  }
  return {{"all_hold", r.all_hold}, {"failures", failures}};
}

std::string star_disk_text(const SimplicialComplex& c, const StarDiskReport& r) {
  if (r.all_hold) return "  star-disk holds at every point\n";
  std::string out;
  for (const auto& f : r.failures()) {
    out += "  fails at " + labels_text(c, f.point) + ":";
    for (const Simplex& s : f.failing_simplices) out += " {" + labels_text(c, s) + "}";
    out += "\n";
  }
  return out;
}

void cmd_check(Context& ctx) {
  CLI::App app("run a check on a complex", "check");
  std::string kind, path;
  bool exhaustive = false, json = false;
  std::size_t budget = EvidenceBudgets{}.collapse_nodes;
  std::uint64_t seed = EvidenceBudgets{}.seed;
  app.add_option("kind", kind)->required();
  app.add_option("file", path)->required();
  app.add_flag("--exhaustive", exhaustive);
  app.add_option("--budget", budget);
  app.add_option("--seed", seed);
  app.add_flag("--json", json);
  parse_options(app, ctx.args);
  static const std::vector<std::string> kinds{"free-faces", "collapse", "star-disk", "homology", "pi1", "verdict"};
  if (std::find(kinds.begin(), kinds.end(), kind) == kinds.end()) {
    throw Error(ErrorCode::UnknownCommand, "unknown check '" + kind + "'");
  }
  const ScxDocument doc = parse_scx(read_file(path));
  const SimplicialComplex& c = doc.complex;
  Report& r = ctx.report;
  r.json_output = json;
  r.command = "check " + kind;
  r.json["command"] = r.command;
  r.json["file"] = path;
  std::ostringstream t;
  t << "check " << kind << " " << path << "\n";

  if (kind == "free-faces") {
    const auto pairs = free_faces(c);
    Json list = Json::array();
    for (const auto& p : pairs) {
      list.push_back({{"free_face", labels_json(c, p.free_face)}, {"coface", labels_json(c, p.coface)}});
      t << "  {" << labels_text(c, p.free_face) << "} < {" << labels_text(c, p.coface) << "}\n";
    }
    r.json["count"] = pairs.size();
    r.json["free_faces"] = list;
    t << "  " << pairs.size() << " free face(s)\n";
  } else if (kind == "collapse") {
    CollapseOutcome out = exhaustive ? exhaustive_collapse(c, budget)
                                     : greedy_collapse(c, CollapseStrategy::Lex, seed);
    r.json["strategy"] = exhaustive ? "exhaustive" : "greedy";
    r.json["status"] = to_string(out.status);
    r.json["definitive"] = out.definitive || out.status == CollapseStatus::Collapsible;
    r.json["states_visited"] = out.stats.states_visited;
    Json seq = Json::array();
    for (const auto& p : out.sequence.pairs) {
      seq.push_back({{"free_face", labels_json(c, p.free_face)}, {"coface", labels_json(c, p.coface)}});
    }
    r.json["sequence"] = seq;
    r.json["remaining_simplices"] = out.remaining.size();
    t << "  status: " << to_string(out.status) << (out.definitive ? " (definitive)" : "") << "\n"
      << "  pairs applied: " << out.sequence.pairs.size() << "\n"
      << "  remaining simplices: " << out.remaining.size() << "\n";
    if (out.status != CollapseStatus::Collapsible && !out.definitive) r.exit_code = 1;
  } else if (kind == "star-disk") {
    const StarDiskReport sd = star_disk_report(c);
    r.json["star_disk"] = star_disk_json(c, sd);
    t << star_disk_text(c, sd);
  } else if (kind == "homology") {
    const HomologyProfile h = homology(c);
    r.json["reduced"] = true;
    r.json["homology"] = homology_json(h);
    r.json["trivial"] = h.trivial();
    t << homology_text(h);
  } else if (kind == "pi1") {
    const Census cs = census(c);
    if (!cs.connected) throw Error(ErrorCode::NotConnected, "complex is not connected");
    const auto simplified = simplify_presentation(pi1_presentation(c, c.vertices().front()),
                                                  EvidenceBudgets{}.pi1_steps);
    r.json["verdict"] = to_string(simplified.verdict);
    r.json["generators"] = simplified.presentation.generators.size();
    r.json["relators"] = simplified.presentation.relators.size();
    r.json["steps"] = simplified.steps;
    t << "  verdict: " << to_string(simplified.verdict) << "\n"
      << "  remaining presentation: " << simplified.presentation.generators.size() << " generator(s), "
      << simplified.presentation.relators.size() << " relator(s)\n";
    if (simplified.verdict == Pi1Verdict::Unknown) r.exit_code = 1;
  } else {
    EvidenceBudgets budgets;
    budgets.collapse_nodes = budget;
    budgets.seed = seed;
    const Verdict v = coalescence_verdict(c, budgets);
    r.json["conclusion"] = to_string(v.conclusion);
    r.json["payload"] = v.payload;
    r.json["star_disk_all"] = v.star_disk_all;
    r.json["free_face_count"] = v.free_face_count;
    r.json["collapsible"] = to_string(v.collapsible);
    r.json["contractible_evidence"] = to_string(v.contractible_evidence);
    r.json["homology"] = homology_json(v.evidence.homology);
    r.json["pi1"] = v.evidence.pi1 ? to_string(*v.evidence.pi1) : "not computed";
    r.json["star_disk"] = star_disk_json(c, v.star_disk);
    t << "  conclusion: " << to_string(v.conclusion) << "\n"
      << "  " << v.payload << "\n"
      << "  star-disk everywhere: " << (v.star_disk_all ? "yes" : "no") << "\n"
      << "  free faces: " << v.free_face_count << "\n"
      << "  collapsible: " << to_string(v.collapsible) << "\n"
      << "  contractibility evidence: " << to_string(v.contractible_evidence) << "\n";
    if (!v.star_disk_all) t << star_disk_text(c, v.star_disk);
    if (v.conclusion == Conclusion::Inconclusive) r.exit_code = 1;
  }
  r.text = t.str();
}

struct WitnessAudit {
  bool pass = true;
  std::string failure;
};

WitnessAudit audit_recorded(const PLContraction& h, const WitnessDocument& doc) {
  const SimplicialComplex& c = doc.complex;
  if (doc.positions.size() != doc.points.size()) return {false, "position rows do not match points"};
  TrackTable table;
  table.times = doc.times;
  table.pairs = doc.pairs;
  for (std::size_t i = 0; i < doc.points.size(); ++i) {
    const auto p = to_pl_point(c, doc.points[i]);
    if (!p || !c.contains(p->carrier())) return {false, "sample point " + std::to_string(i) + " is not a point of the complex"};
    if (doc.positions[i].size() != doc.times.size()) return {false, "position row " + std::to_string(i) + " has the wrong length"};
    const auto positions = track(h, *p, doc.times);
    for (std::size_t k = 0; k < positions.size(); ++k) {
      if (raw_point(c, positions[k]) != doc.positions[i][k]) {
        return {false, "recorded position of point " + std::to_string(i) + " at time " +
                           to_string(doc.times[k]) + " does not match the contraction"};
      }
    }
    table.points.push_back(*p);
    table.positions.push_back(positions);
  }
  const CoalescenceReport rep = check_coalescent(table);
  if (!rep.pass) return {false, "recorded tracks are not coalescent"};
  return {};
}

void cmd_witness(Context& ctx) {
  if (ctx.args.empty()) throw Error(ErrorCode::UnknownCommand, "witness needs build or verify");
  const std::string action = ctx.args.front();
  const std::vector<std::string> rest(ctx.args.begin() + 1, ctx.args.end());
  CLI::App app("coalescent witness", "witness " + action);
  std::string path, out_path;
  bool json = false;
  SampleSpec spec;
  app.add_option("file", path)->required();
  app.add_option("--pairs", spec.pairs);
  app.add_option("--times", spec.times);
  app.add_option("--seed", spec.seed);
  app.add_flag("--json", json);
  Report& r = ctx.report;
  r.command = "witness " + action;
  r.json["command"] = r.command;
  if (action == "build") {
    app.add_option("--out", out_path)->required();
    parse_options(app, rest);
    r.json_output = json;
    const ScxDocument doc = parse_scx(read_file(path));
    const ContractibilityEvidence ev = contractibility_evidence(doc.complex);
    if (!ev.collapse) {
      r.json["collapsible"] = to_string(ev.collapsible);
      r.text = "no collapse found (collapsible: " + to_string(ev.collapsible) + "); no witness written\n";
      r.exit_code = 1;
      return;
    }
    const PLContraction h = witness_from_collapse(doc.complex, *ev.collapse);
    const TrackTable table = build_track_table(h, spec);
    const Json w = witness_to_json(doc.name, doc.complex, *ev.collapse, table, spec);
    write_file(out_path, w.dump(1) + "\n");
    r.json["out"] = out_path;
    r.json["stages"] = h.stage_count();
    r.json["opening_time"] = to_string(opening_time(h));
    r.text = "witness with " + std::to_string(h.stage_count()) + " stage(s) -> " + out_path + "\n";
  } else if (action == "verify") {
    parse_options(app, rest);
    r.json_output = json;
    Json parsed;
    try {
      parsed = Json::parse(read_file(path));
    } catch (const Json::parse_error& e) {
      throw Error(ErrorCode::ParseError, std::string("witness: ") + e.what());
    }
    const WitnessDocument doc = witness_from_json(parsed);
    const auto fail = [&](const std::string& why) {
      r.json["pass"] = false;
      r.json["violation"] = why;
      r.text = "witness verify " + path + ": FAIL\n  " + why + "\n";
      r.exit_code = 1;
    };
    PLContraction h;
    try {
      h = witness_from_collapse(doc.complex, doc.sequence);
    } catch (const Error& e) {
      return fail(std::string(error_code_name(e.code())) + ": collapse sequence does not replay");
    }
    if (const WitnessAudit a = audit_recorded(h, doc); !a.pass) return fail(a.failure);
    const CoalescenceReport fresh = check_coalescent(h, spec);
    if (!fresh.pass) {
      const auto& v = *fresh.violation;
      return fail("fresh samples " + std::to_string(v.first) + " and " + std::to_string(v.second) +
                  " separate after merging");
    }
    const auto points = sample_points(h, 2 * spec.pairs, spec.seed);
    const PLPoint end = PLPoint::vertex(h.terminal());
    for (const PLPoint& p : points) {
      if (evaluate(h, p, Rational(0)) != p) return fail("time 0 slice is not the identity");
      if (evaluate(h, p, Rational(1)) != end) return fail("time 1 slice is not the terminal vertex");
    }
    const Rational t_op = opening_time(h);
    if (h.stage_count() > 0 && t_op != 0) return fail("opening time is not 0");
    r.json["pass"] = true;
    r.json["stages"] = h.stage_count();
    r.json["opening_time"] = to_string(t_op);
    r.json["recorded_points"] = doc.points.size();
    r.json["fresh_pairs"] = fresh.pairs_checked;
    r.json["fresh_merged_pairs"] = fresh.merged_pairs;
    std::ostringstream t;
    t << "witness verify " << path << ": PASS\n"
      << "  stages: " << h.stage_count() << "\n"
      << "  opening time: " << to_string(t_op) << "\n"
      << "  recorded tracks reproduced: " << doc.points.size() << " point(s) x " << doc.times.size() << " time(s)\n"
      << "  fresh audit: " << fresh.pairs_checked << " pair(s), " << fresh.merged_pairs << " merged, no separation\n";
    r.text = t.str();
  } else {
    throw Error(ErrorCode::UnknownCommand, "unknown witness action '" + action + "'");
  }
}

void cmd_degree(Context& ctx) {
  CLI::App app("degree of a simplicial cycle map", "degree");
  int k = 0;
  std::string map_text;
  bool json = false;
  app.add_option("--cycle", k)->required();
  app.add_option("--map", map_text)->required();
  app.add_flag("--json", json);
  parse_options(app, ctx.args);
  CycleMap m;
  m.cycle_length = k;
  std::istringstream in(map_text);
  std::string token;
  while (in >> token) {
    try {
      std::size_t used = 0;
      m.images.push_back(std::stoi(token, &used));
      if (used != token.size()) throw std::invalid_argument("trailing");
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::ParseError, "map entry is not an integer: " + token);
    }
  }
  const int degree = circle_degree(m);
  const Rational displacement = max_displacement(m);
  Report& r = ctx.report;
  r.json_output = json;
  r.command = "degree";
  r.json["command"] = "degree";
  r.json["cycle"] = k;
  r.json["degree"] = degree;
  r.json["max_displacement"] = to_string(displacement);
  r.json["max_vertex_displacement"] = max_vertex_displacement(m);
  r.json["below_half_turn"] = displacement < Rational(k, 2);
  std::ostringstream t;
  t << "degree: " << degree << "\n"
    << "max displacement: " << to_string(displacement) << " (half turn " << to_string(Rational(k, 2)) << ")\n"
    << "max vertex displacement: " << max_vertex_displacement(m) << "\n";
  r.text = t.str();
}

const std::map<std::string, std::function<void(Context&)>>& commands() {
  static const std::map<std::string, std::function<void(Context&)>> table{
      {"build", cmd_build}, {"info", cmd_info},       {"check", cmd_check},
      {"witness", cmd_witness}, {"degree", cmd_degree}};
  return table;
}

const char* kUsage =
    "usage: coalescent <command> [options]\n"
    "  build <dunce-hat|dunce-hat-minimal|bings-house|dunce-hat-flap|simplex N|sphere N|disc K> [--out F]\n"
    "  info F\n"
    "  check <free-faces|collapse|star-disk|homology|pi1|verdict> F [--exhaustive --budget N --seed N --json]\n"
    "  witness build F --out W [--pairs N --times N --seed N]\n"
    "  witness verify W [--pairs N --times N --seed N]\n"
    "  degree --cycle K --map \"i0 i1 ... i(K-1)\"\n";

}  // namespace

Report run(const std::vector<std::string>& args) {
  Report report;
  const bool wants_json = std::find(args.begin(), args.end(), "--json") != args.end();
  try {
    if (args.empty()) throw Error(ErrorCode::UnknownCommand, "no command given");
    if (args.front() == "help" || args.front() == "--help" || args.front() == "-h") {
      report.text = kUsage;
      return report;
    }
    const auto it = commands().find(args.front());
    if (it == commands().end()) throw Error(ErrorCode::UnknownCommand, "unknown command '" + args.front() + "'");
    report.command = args.front();
    Context ctx{report, std::vector<std::string>(args.begin() + 1, args.end())};
    it->second(ctx);
    if (!report.json.contains("command")) report.json["command"] = report.command;
    report.json["exit_code"] = report.exit_code;
  } catch (const Error& e) {
    report.exit_code = 2;
    report.json_output = wants_json;
    report.json = Json{{"command", report.command},
                       {"error", {{"code", std::string(error_code_name(e.code()))}, {"message", e.what()}}},
                       {"exit_code", 2}};
    report.text = std::string("error: ") + e.what() + "\n";
    if (e.code() == ErrorCode::UnknownCommand) report.text += kUsage;
  } catch (const std::exception& e) {
    report.exit_code = 2;
    report.json_output = wants_json;
    report.json = Json{{"command", report.command},
                       {"error", {{"code", "InternalError"}, {"message", e.what()}}},
                       {"exit_code", 2}};
    report.text = std::string("error: ") + e.what() + "\n";
  }
  return report;
}

}  // namespace coalescent::cli

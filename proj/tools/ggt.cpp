// ggt: command-line front end.
//
// Exit status: 0 success, 1 verified negative answer (not flag, infeasible,
// failed certificate), 2 bad input, usage error or exceeded bound.

#include <cstdint>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ggt/ggt.hpp"

namespace {

using namespace ggt;
using io::Json;

struct Options {
  std::string command;
  std::string input;
  std::string group;
  std::vector<std::string> actions;
  std::optional<std::size_t> radius;
  std::vector<long> window;
  std::optional<long> period;
  std::string target;
  std::string format = "text";
  std::string out;
  std::string ring = "Z";
  bool reduced = false;
  std::optional<std::size_t> n;
  std::optional<std::uint64_t> p;
};

struct Outcome {
  Json report;
  int status = 0;
  std::optional<std::string> text;  // replaces the generic text rendering
};

const std::string& need(const std::string& value, const char* flag) {
  if (value.empty()) throw Error(std::string(flag) + " is required for this subcommand");
  return value;
}

template <class T>
T need(const std::optional<T>& value, const char* flag) {
  if (!value) throw Error(std::string(flag) + " is required for this subcommand");
  return *value;
}

Json header(const Options& o) {
  Json j{{"command", o.command}};
  if (!o.input.empty()) j["input"] = o.input;
  if (!o.group.empty()) j["group"] = o.group;
  if (!o.actions.empty()) j["action"] = o.actions;
  return j;
}

Outcome flag_check(const Options& o) {
  auto k = io::load_complex(need(o.input, "--input"));
  auto f = is_flag(k);
  Json j = header(o);
  j["face_vector"] = k.face_vector();
  j.update(report::flag_json(f));
  return {j, f.flag ? 0 : 1};
}

Outcome homology_cmd(const Options& o) {
  auto k = io::load_complex(need(o.input, "--input"));
  auto h = homology(k, Coefficients::parse(o.ring), o.reduced);
  Json j = header(o);
  j["euler_characteristic"] = euler_characteristic(k);
  j.update(report::homology_json(h));
  return {j};
}

Outcome census(const Options& o) {
  Json j = header(o);
  LevelCensus formula;
  if (!o.actions.empty()) {
    auto a = io::action_from_json(io::parse(io::read_file(o.actions.front())));
    if (auto f = is_flag(a.complex()); !f) {
      j.update(report::flag_json(f));
      return {j, 1};
    }
    formula = level_census(a);
    j["orbits_of"] = a.group().label();
  } else {
    auto k = io::load_complex(need(o.input, "--input"));
    if (auto f = is_flag(k); !f) {
      j.update(report::flag_json(f));
      return {j, 1};
    }
    formula = level_census(k);
    Json levels = Json::array();
    bool agree = true;
    for (auto c : {Rational(1, 2), Rational(3, 2)}) {
      auto e = enumerate_level_census(k, c);
      agree = agree && e == formula;
      levels.push_back(Json{{"level", report::rational_text(c)}, {"census", report::census_json(e)}});
    }
    j["enumerated"] = levels;
    j["routes_agree"] = agree;
    if (!agree) {
      j["formula"] = report::census_json(formula);
      return {j, 1};
    }
  }
  bool identity = true;
  for (std::size_t n = 1; n < formula.cube_orbits.size(); ++n)
    identity = identity && formula.level_cells[n - 1] == n * formula.cube_orbits[n];
  j["formula"] = report::census_json(formula);
  j["level_cells_identity"] = identity;
  return {j, identity ? 0 : 1};
}

Outcome ball(const Options& o) {
  auto k = io::load_complex(need(o.input, "--input"));
  const auto r = o.radius.value_or(1);
  auto b = cube_ball(k, r);
  Json j = header(o);
  j["radius"] = r;
  j["vertices"] = b.vertices.size();
  j["cube_face_vector"] = b.face_vector();
  return {j};
}

Outcome links(const Options& o) {
  auto k = io::load_complex(need(o.input, "--input"));
  Json j = header(o);
  if (auto f = is_flag(k); !f) {
    j.update(report::flag_json(f));
    return {j, 1};
  }
  auto link = vertex_link_XL(k);
  auto dbl = double_complex(k);
  const bool same = link == dbl;
  const bool up = isomorphic(ascending_link(k), k);
  const bool down = isomorphic(descending_link(k), k);
  j["vertex_link_face_vector"] = link.face_vector();
  j["double_face_vector"] = dbl.face_vector();
  j["vertex_link_equals_double"] = same;
  j["ascending_link_isomorphic_to_L"] = up;
  j["descending_link_isomorphic_to_L"] = down;
  j["vertex_link_flag"] = is_flag(link).flag;
  return {j, same && up && down ? 0 : 1};
}

Outcome recipe(const Options& o) {
  auto q = io::load_group(need(o.group, "--group"));
  auto r = degree_zero_recipe(q);
  Json j = header(o);
  if (!r) {
    j["order"] = q.order();
    j["status"] = "INFEASIBLE";
    j["reason"] = "no degree-zero orbit recipe: |Q| is a prime power";
    return {j, 1};
  }
  j.update(report::recipe_json(*r));
  return {j};
}

Outcome telescope_cmd(const Options& o) {
  auto f = io::map_from_json(io::parse(io::read_file(need(o.input, "--input"))));
  auto p = telescope(f);
  const long a = o.window.empty() ? 0 : o.window[0];
  const long b = o.window.empty() ? 2 : o.window[1];
  if (a > b) throw Error("--window needs A <= B");
  Json j = header(o);
  try {
    j["induced_degree"] = induced_degree(f).str();
  } catch (const Error& e) {
    j["induced_degree"] = nullptr;
    j["induced_degree_note"] = e.what();
  }
  Json windows = Json::array();
  for (long hi = a; hi <= b; ++hi)
    windows.push_back(Json{{"window", Json::array({a, hi})},
                           {"reduced_betti", reduced_homology(window(p, a, hi), Coefficients::integers()).betti()}});
  j["windows"] = windows;
  Json stages = Json::array();
  for (long k = a; k < b; ++k)
    stages.push_back(Json{{"stage", k}, {"top_homology_multiplier", report::rational_text(stage_inclusion_multiplier(p, k))}});
  j["stage_inclusions"] = stages;
  auto ev = telescope_contractibility_evidence(p);
  j["contractibility"] = Json{{"level", to_string(ev.level)}, {"holds", ev.holds}, {"detail", ev.detail}};
  return {j};
}

Outcome quotient(const Options& o) {
  auto p = io::load_periodic(need(o.input, "--input"));
  Json j = header(o);
  int status = 0;
  if (o.period) {
    auto q = quotient_by_shift(p, *o.period);
    j["period"] = *o.period;
    j["status"] = to_string(q.status);
    if (q.complex) {
      auto f = is_flag(*q.complex);
      j["face_vector"] = q.complex->face_vector();
      j.update(report::flag_json(f));
      status = f.flag ? 0 : 1;
    } else {
      j["witness"] = q.witness;
      status = 1;
    }
  }
  try {
    j["min_flag_quotient_period"] = min_flag_quotient_period(p);
  } catch (const BoundExceeded&) {
    throw;
  } catch (const Error& e) {
    j["min_flag_quotient_period"] = nullptr;
    j["note"] = e.what();
    if (!o.period) status = 1;
  }
  return {j, status};
}

Outcome hnn(const Options& o) {
  auto pres = hnn_presentation(io::load_periodic(need(o.input, "--input")));
  Json j = header(o);
  j["generators"] = pres.generators;
  j["relator_count"] = pres.relators.size();
  j["presentation"] = to_text(pres);
  return {j, 0, to_text(pres)};
}

Outcome homs(const Options& o) {
  auto pres = io::load_presentation(need(o.input, "--input"));
  auto t = io::load_group(need(o.target, "--target"));
  Json j = header(o);
  j["target"] = t.label();
  j["target_order"] = t.order();
  j["homomorphisms"] = count_homs(pres, t);
  return {j};
}

Outcome npc(const Options& o) {
  auto doc = io::parse(io::read_file(need(o.input, "--input")));
  Json j = header(o);
  FlagCheck f;
  if (doc.contains("M")) {
    auto g = io::gluing_from_json(doc);
    auto vl = glued_link(g.m, g.n0, g.n1, g.gamma);
    f = npc_certificate(vl);
    j["link_face_vector"] = vl.link.face_vector();
    Json prov;
    for (const auto& [v, s] : vl.provenance) prov[v] = s;
    j["provenance"] = prov;
  } else {
    auto link = io::complex_from_json(doc);
    f = npc_certificate(link);
    j["link_face_vector"] = link.face_vector();
  }
  j["certificate"] = f.flag ? "PASS" : "FAIL";
  j.update(report::flag_json(f));
  j["criterion"] = "a one-vertex cube complex is nonpositively curved iff its vertex link is flag";
  return {j, f.flag ? 0 : 1};
}

ConjugacyReport conjugacy_from(const std::string& action_path) {
  auto a = io::action_from_json(io::parse(io::read_file(action_path)));
  return conjugacy_report(a, action_path);
}

Outcome conjclass(const Options& o) {
  Json j = header(o);
  ConjugacyReport r;
  if (!o.actions.empty()) r = conjugacy_from(o.actions.front());
  else r = conjugacy_report(io::load_periodic(need(o.input, "--input or --action")), o.input);
  j.update(report::conjugacy_json(r));
  return {j};
}

Outcome freeprod(const Options& o) {
  if (o.actions.empty()) throw Error("--action is required (repeat it once per factor)");
  std::vector<ConjugacyReport> parts;
  for (const auto& a : o.actions) parts.push_back(conjugacy_from(a));
  Json j = header(o);
  j["factors"] = parts.size();
  j.update(report::conjugacy_json(free_product_aggregate(parts)));
  return {j};
}

Outcome finiteness(const Options& o) {
  Json j = header(o);
  FinitenessReport r;
  if (!o.actions.empty()) {
    r = fpq2_pipeline(io::action_from_json(io::parse(io::read_file(o.actions.front()))));
    j["pipeline"] = "Q-acyclic line product";
  } else {
    auto p = io::load_periodic(need(o.input, "--input or --action"));
    std::optional<PermGroup> q;
    if (!o.group.empty()) q = io::load_group(o.group);
    else if (p.symmetry()) q = p.symmetry()->group();
    else throw Error("--group is required when the periodic complex carries no action");
    r = ivf_pipeline(p, *q);
    j["pipeline"] = "telescope with degree-zero stage maps";
  }
  j.update(report::finiteness_json(r));
  bool all = true;
  for (const auto& c : r.conclusions) all = all && c.holds;
  return {j, all ? 0 : 1};
}

Outcome ktheory(const Options& o) {
  auto g = share(io::load_group(need(o.group, "--group")));
  Json j = header(o);
  j.update(report::k0_json(*g, k0_rank_lower_bound(g)));
  return {j};
}

bool power_of(std::uint64_t order, std::uint64_t p) {
  while (order % p == 0) order /= p;
  return order == 1;
}

Outcome slnp(const Options& o) {
  FpMatrixGroup g = !o.input.empty() ? io::matrix_group_from_json(io::parse(io::read_file(o.input)))
                                     : sl_tau_generators(need(o.n, "--dim"), static_cast<std::int64_t>(need(o.p, "--prime")));
  const auto p = static_cast<std::uint64_t>(g.p());
  const std::size_t count = g.generators().size();
  if (count > 16) throw BoundExceeded("at most 16 generators are supported");
  Json j = header(o);
  j["n"] = g.n();
  j["p"] = g.p();
  j["generators"] = count;
  const auto full = matrix_group_order(g);
  const auto expected = sl_order(g.n(), g.p());
  j["order"] = full;
  j["sl_order"] = expected;
  j["generates_sl"] = full == expected;
  Json subsets = Json::array();
  bool all_p = true;
  for (std::size_t mask = 0; mask + 1 < (std::size_t{1} << count); ++mask) {
    std::vector<std::size_t> which;
    for (std::size_t i = 0; i < count; ++i)
      if (mask >> i & 1) which.push_back(i);
    const auto order = matrix_group_order(g, which);
    const bool pp = power_of(order, p);
    all_p = all_p && pp;
    subsets.push_back(Json{{"generators", which}, {"order", order}, {"p_power", pp}});
  }
  j["proper_subsets"] = subsets;
  j["proper_subsets_generate_p_groups"] = all_p;
  auto bound = dimension_lower_bound(g.n(), p);
  j["dimension_lower_bound"] = bound.bound;
  j["citation"] = bound.citation;
  return {j, full == expected && all_p ? 0 : 1};
}

Outcome dimbound(const Options& o) {
  auto b = dimension_lower_bound(need(o.n, "--dim"), need(o.p, "--prime"));
  Json j = header(o);
  j["n"] = *o.n;
  j["p"] = *o.p;
  j["dimension_lower_bound"] = b.bound;
  j["hypothesis"] = b.hypothesis;
  j["citation"] = b.citation;
  return {j};
}

const std::vector<std::tuple<std::string, std::string, std::function<Outcome(const Options&)>>>& commands() {
  static const std::vector<std::tuple<std::string, std::string, std::function<Outcome(const Options&)>>> all{
      {"flag-check", "check that a complex is flag (--input)", flag_check},
      {"homology", "simplicial homology (--input, --ring, --reduced)", homology_cmd},
      {"census", "cube orbits and level-set cells of X_L (--input or --action)", census},
      {"ball", "cubes of X_L within a word-length ball (--input, --radius)", ball},
      {"links", "vertex, ascending and descending links of X_L (--input)", links},
      {"recipe", "degree-zero orbit recipe for a finite group (--group)", recipe},
      {"telescope", "mapping telescope of a simplicial self-map (--input, --window)", telescope_cmd},
      {"quotient", "quotient of a periodic complex by a shift (--input, --period)", quotient},
      {"hnn", "HNN presentation of H_L:Z from a periodic complex (--input)", hnn},
      {"homs", "count homomorphisms from a presentation (--input, --target)", homs},
      {"npc", "Gromov link condition for a glued one-vertex cube complex (--input)", npc},
      {"conjclass", "conjugacy classes of finite subgroups (--action or --input)", conjclass},
      {"freeprod", "aggregate conjugacy reports over a free product (--action ...)", freeprod},
      {"finiteness", "finiteness properties (--input [--group] or --action)", finiteness},
      {"ktheory", "K_0(QG) rank lower bound (--group)", ktheory},
      {"slnp", "tau generators of SL_n(F_p) (--dim, --prime or --input)", slnp},
      {"dimbound", "dimension lower bound for SL_n(F_p) actions (--dim, --prime)", dimbound},
  };
  return all;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Geometric group theory workbench"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--input", o.input, "input file or built-in name");
  app.add_option("--group", o.group, "group file or built-in name (C<n>, D<n>, S<n>, A<n>, Q8, C2xC2)");
  app.add_option("--action", o.actions, "group action file (repeatable)");
  app.add_option("--radius", o.radius, "ball radius");
  app.add_option("--window", o.window, "window A B")->expected(2);
  app.add_option("--period", o.period, "shift period K");
  app.add_option("--target", o.target, "target group");
  app.add_option("--format", o.format, "report format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--out", o.out, "write the report to this file");
  app.add_option("--ring", o.ring, "coefficients: Z, Q or F<p>");
  app.add_flag("--reduced", o.reduced, "reduced homology");
  app.add_option("-n,--dim", o.n, "matrix size n");
  app.add_option("-p,--prime", o.p, "prime p");

  for (const auto& [name, help, fn] : commands()) app.add_subcommand(name, help)->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  for (const auto& [name, help, fn] : commands()) {
    if (!app.got_subcommand(name)) continue;
    o.command = name;
    try {
      Outcome out = fn(o);
      const auto format = o.format == "json" ? report::Format::Json : report::Format::Text;
      const std::string text =
          format == report::Format::Text && out.text ? *out.text : report::render(out.report, format);
      if (o.out.empty()) std::cout << text;
      else io::write_file(o.out, text);
      return out.status;
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 2;
    }
  }
  return 2;
}

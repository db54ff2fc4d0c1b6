/**
 * Report documents.  Every computation result is turned into an ordered JSON
 * document; the text format is a fixed rendering of the same document, so
 * both are deterministic.
 */
#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "ggt/classify.hpp"
#include "ggt/cubes.hpp"
#include "ggt/homology.hpp"
#include "ggt/io.hpp"
#include "ggt/ktheory.hpp"
#include "ggt/periodic.hpp"
#include "ggt/raag.hpp"

namespace ggt::report {

using io::Json;

inline std::string rational_text(const Rational& r) {
  std::ostringstream s;
  s << r;
  return s.str();
}

inline Json subgroup_json(const PermGroup& g, const SubgroupRecord& s) {
  Json gens = Json::array();
  for (auto x : s.generators) gens.push_back(g.element(x));
  return Json{{"order", s.order}, {"cyclic", s.cyclic}, {"normal", s.normal}, {"class_size", s.class_size},
              {"generators", gens}};
}

inline Json subgroup_json(const SubgroupRecord& s) {
  return Json{{"order", s.order}, {"cyclic", s.cyclic}, {"normal", s.normal}, {"class_size", s.class_size}};
}

inline Json flag_json(const FlagCheck& f) {
  Json j{{"flag", f.flag}};
  if (!f.flag) j["witness"] = f.witness;
  return j;
}

inline Json homology_json(const HomologyProfile& h) {
  Json groups = Json::array();
  for (std::size_t d = 0; d < h.groups.size(); ++d) {
    Json torsion = Json::array();
    for (const auto& t : h.groups[d].torsion) torsion.push_back(t.str());
    groups.push_back(Json{{"degree", d}, {"rank", h.groups[d].rank}, {"torsion", torsion},
                          {"group", h.groups[d].to_string()}});
  }
  return Json{{"ring", h.ring.name()}, {"reduced", h.reduced}, {"betti", h.betti()}, {"groups", groups}};
}

inline Json census_json(const LevelCensus& c) {
  return Json{{"cube_orbits", c.cube_orbits}, {"level_cells", c.level_cells}};
}

inline Json recipe_json(const TelescopeRecipe& r) {
  Json compact;
  std::map<std::size_t, std::size_t> by_index;
  for (const auto& t : r.terms)
    if (t.multiplicity) by_index[t.index] += t.multiplicity;
  for (auto [index, m] : by_index) compact["index" + std::to_string(index)] = m;
  compact["n"] = r.free_count;
  Json terms = Json::array();
  for (const auto& t : r.terms)
    terms.push_back(Json{{"subgroup_order", t.subgroup.order}, {"index", t.index}, {"multiplicity", t.multiplicity}});
  return Json{{"group", r.group},
              {"order", r.group_order},
              {"status", "FEASIBLE"},
              {"recipe", compact},
              {"terms", terms},
              {"identity", std::to_string(r.group_order) + " * " + std::to_string(r.free_count) + " = 1 + sum m_P |Q:P|"},
              {"identity_holds", r.implied_degree() == 0}};
}

inline Json conjugacy_json(const ConjugacyReport& r) {
  Json entries = Json::array();
  for (const auto& e : r.entries) {
    Json j;
    j["factor"] = e.factor;
    j["subgroup"] = subgroup_json(e.subgroup);
    j["verdict"] = e.verdict_text();
    if (e.bound) j["bound"] = *e.bound;
    j["evidence"] = e.evidence;
    j["citations"] = e.citations;
    entries.push_back(std::move(j));
  }
  return Json{{"group", r.group}, {"complex", r.complex}, {"entries", entries}};
}

inline Json claim_json(const Claim& c) {
  return Json{{"name", c.name}, {"holds", c.holds}, {"level", to_string(c.level)}, {"detail", c.detail}};
}

inline Json finiteness_json(const FinitenessReport& r) {
  Json hyps = Json::array(), concl = Json::array();
  for (const auto& c : r.hypotheses) hyps.push_back(claim_json(c));
  for (const auto& c : r.conclusions) concl.push_back(claim_json(c));
  return Json{{"group", r.group},
              {"dim_L", r.dim_l},
              {"dim_Y", r.dim_y},
              {"dim_X_L", r.dim_xl},
              {"rational_cd_bound", r.rational_cd_bound},
              {"integral_cd_bound", r.integral_cd_bound},
              {"hypotheses", hyps},
              {"conclusions", concl},
              {"citations", r.citations}};
}

inline Json k0_json(const PermGroup& g, const K0RankWitness& w) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < w.subgroups.size(); ++i) {
    std::vector<std::string> values;
    for (const auto& v : w.rows[i].values) values.push_back(rational_text(v));
    rows.push_back(Json{{"subgroup_order", w.subgroups[i].size()}, {"trace", values}});
  }
  Json classes = Json::array();
  for (const auto& c : g.conjugacy_classes()) classes.push_back(g.element(c.front()));
  return Json{{"group", g.label()},
              {"order", g.order()},
              {"cyclic_subgroup_classes", w.subgroups.size()},
              {"k0_rank_lower_bound", w.rank},
              {"conjugacy_class_representatives", classes},
              {"trace_rows", rows},
              {"citation", "traces of [QG e_C] over cyclic subgroup classes are independent, so K_0(QG) has a free "
                           "abelian subgroup of this rank"}};
}

// ---------------------------------------------------------------------------
// text rendering

namespace detail {

inline bool scalar(const Json& j) { return !j.is_object() && !j.is_array(); }

inline std::string scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

inline std::string inline_text(const Json& j) {
  if (scalar(j)) return scalar_text(j);
  if (j.is_array()) {
    std::string out = "[";
    for (std::size_t i = 0; i < j.size(); ++i) out += (i ? ", " : "") + inline_text(j[i]);
    return out + "]";
  }
  return j.dump();
}

inline bool flat(const Json& j) {
  if (scalar(j)) return true;
  if (!j.is_array()) return false;
  for (const auto& x : j)
    if (!flat(x)) return false;
  return true;
}

inline void render(std::ostream& out, const Json& j, int indent);

inline void render_value(std::ostream& out, const std::string& prefix, const Json& v, int indent) {
  if (flat(v)) {
    out << prefix << inline_text(v) << "\n";
    return;
  }
  out << prefix.substr(0, prefix.size() - (prefix.ends_with(' ') ? 1 : 0)) << "\n";
  render(out, v, indent + 2);
}

inline void render(std::ostream& out, const Json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) render_value(out, pad + k + ": ", v, indent);
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (v.is_object() && !v.empty()) {
        bool first = true;
        for (const auto& [k, x] : v.items()) {
          render_value(out, pad + (first ? "- " : "  ") + k + ": ", x, indent + 2);
          first = false;
        }
      } else {
        render_value(out, pad + "- ", v, indent + 2);
      }
    }
  } else {
    out << pad << scalar_text(j) << "\n";
  }
}

}  // namespace detail

inline std::string to_text(const Json& j) {
  std::ostringstream out;
  detail::render(out, j, 0);
  return out.str();
}

enum class Format { Text, Json };

inline std::string render(const Json& j, Format f) { return f == Format::Json ? io::dump(j) : to_text(j); }

}  // namespace ggt::report

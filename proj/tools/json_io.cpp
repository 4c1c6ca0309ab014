#include "json_io.hpp"

#include <fstream>
#include <sstream>

#include "proxlat/error.hpp"
#include "proxlat/fixtures.hpp"

namespace proxlat::io {

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorKind::ParseError, what); }

const json& field(const json& doc, const char* key) {
  if (!doc.is_object()) parse_error(std::string("expected an object with field \"") + key + "\"");
  auto it = doc.find(key);
  if (it == doc.end()) parse_error(std::string("missing field \"") + key + "\"");
  return *it;
}

std::vector<std::string> string_list(const json& doc, const char* what) {
  if (!doc.is_array()) parse_error(std::string(what) + " must be an array of strings");
  std::vector<std::string> out;
  for (const auto& v : doc) {
    if (!v.is_string()) parse_error(std::string(what) + " must be an array of strings");
    out.push_back(v.get<std::string>());
  }
  return out;
}

std::size_t lookup(const FiniteLattice& lat, const json& name) {
  if (!name.is_string()) parse_error("element names must be strings");
  auto idx = lat.index_of(name.get<std::string>());
  if (!idx) parse_error("unknown element \"" + name.get<std::string>() + "\"");
  return *idx;
}

Relation relation_from_json(const json& doc, const FiniteLattice& src, const FiniteLattice& tgt) {
  if (!doc.is_array()) parse_error("a relation must be an array of pairs");
  Relation r(src.size(), tgt.size());
  for (const auto& pair : doc) {
    if (!pair.is_array() || pair.size() != 2) parse_error("relation entries must be [source, target] pairs");
    r.insert(lookup(src, pair[0]), lookup(tgt, pair[1]));
  }
  return r;
}

json names_of(const FiniteLattice& lat, const ElementSet& s) {
  json out = json::array();
  for (auto a : s) out.push_back(lat.name(a));
  return out;
}

json points_of(const FiniteSpace& sp, const ElementSet& s) {
  json out = json::array();
  for (auto p : s) out.push_back(sp.points[p]);
  return out;
}

json map_json(const FiniteLattice& src, const FiniteLattice& tgt, const LatticeMap& f) {
  json out = json::object();
  for (std::size_t a = 0; a < f.size(); ++a) out[src.name(a)] = tgt.name(f(a));
  return out;
}

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) parse_error("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    parse_error(path.string() + ": " + e.what());
  }
}

json to_json(const FiniteLattice& lat) {
  json leq = json::array();
  for (auto [a, b] : lat.covers()) leq.push_back({lat.name(a), lat.name(b)});
  return {{"elements", lat.names()}, {"leq", leq}};
}

FiniteLattice lattice_from_json(const json& doc) {
  if (doc.is_string()) {
    auto p = fixtures::proximity(doc.get<std::string>());
    if (!p) parse_error("unknown lattice fixture \"" + doc.get<std::string>() + "\"");
    return p->lattice();
  }
  auto names = string_list(field(doc, "elements"), "elements");
  const auto& leq = field(doc, "leq");
  if (!leq.is_array()) parse_error("leq must be an array of pairs");
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  auto index = [&](const json& v) -> std::size_t {
    if (!v.is_string()) parse_error("element names must be strings");
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == v.get<std::string>()) return i;
    parse_error("unknown element \"" + v.get<std::string>() + "\"");
  };
  for (const auto& pair : leq) {
    if (!pair.is_array() || pair.size() != 2) parse_error("leq entries must be [lower, upper] pairs");
    pairs.emplace_back(index(pair[0]), index(pair[1]));
  }
  for (std::size_t i = 0; i < names.size(); ++i)
    for (std::size_t j = i + 1; j < names.size(); ++j)
      if (names[i] == names[j]) parse_error("duplicate element \"" + names[i] + "\"");
  return lattice_from_pairs(std::move(names), pairs);
}

json relation_json(const FiniteLattice& src, const FiniteLattice& tgt, const Relation& r) {
  json out = json::array();
  for (auto [a, b] : r.pairs()) out.push_back({src.name(a), tgt.name(b)});
  return out;
}

json to_json(const ProximityLattice& p) {
  return {{"lattice", to_json(p.lattice())}, {"R", relation_json(p.lattice(), p.lattice(), p.relation())}};
}

RawProximity raw_proximity_from_json(const json& doc) {
  if (doc.is_string()) {
    auto p = fixtures::proximity(doc.get<std::string>());
    if (!p) parse_error("unknown proximity fixture \"" + doc.get<std::string>() + "\"");
    return {p->lattice(), p->relation()};
  }
  if (doc.is_object() && doc.contains("elements") && !doc.contains("lattice")) {
    auto lat = lattice_from_json(doc);
    auto r = Relation::order(lat);
    return {std::move(lat), std::move(r)};
  }
  auto lat = lattice_from_json(field(doc, "lattice"));
  auto r = doc.contains("R") ? relation_from_json(doc["R"], lat, lat) : Relation::order(lat);
  return {std::move(lat), std::move(r)};
}

ProximityLattice proximity_from_json(const json& doc) {
  auto raw = raw_proximity_from_json(doc);
  return ProximityLattice::make(std::move(raw.lattice), std::move(raw.relation));
}

json to_json(const FiniteSpace& s) {
  json opens = json::array();
  for (const auto& u : s.opens) opens.push_back(points_of(s, u));
  return {{"points", s.points}, {"opens", opens}};
}

FiniteSpace space_from_json(const json& doc) {
  if (doc.is_string()) {
    auto s = fixtures::space(doc.get<std::string>());
    if (!s) parse_error("unknown space fixture \"" + doc.get<std::string>() + "\"");
    return *s;
  }
  auto points = string_list(field(doc, "points"), "points");
  const auto& opens_doc = field(doc, "opens");
  if (!opens_doc.is_array()) parse_error("opens must be an array of point lists");
  std::vector<ElementSet> opens;
  for (const auto& u : opens_doc) {
    ElementSet set;
    for (const auto& name : string_list(u, "an open set")) {
      auto it = std::find(points.begin(), points.end(), name);
      if (it == points.end()) parse_error("unknown point \"" + name + "\"");
      set.insert(static_cast<std::size_t>(it - points.begin()));
    }
    opens.push_back(set);
  }
  return make_space(std::move(points), std::move(opens));
}

json to_json(const MorphismDoc& m) {
  return {{"source", to_json(m.source)},
          {"target", to_json(m.target)},
          {"T", relation_json(m.source.lattice(), m.target.lattice(), m.t)}};
}

MorphismDoc morphism_from_json(const json& doc) {
  MorphismDoc m;
  m.source = proximity_from_json(field(doc, "source"));
  m.target = proximity_from_json(field(doc, "target"));
  m.t = relation_from_json(field(doc, "T"), m.source.lattice(), m.target.lattice());
  return m;
}

json to_json(const Check& c) {
  json out = {{"holds", c.holds}};
  if (!c.holds) out["witness"] = c.witness;
  return out;
}

json to_json(const AxiomReport& r) {
  return {{"axiom1", to_json(r.axiom1)},         {"axiom2", to_json(r.axiom2)},
          {"axiom3", to_json(r.axiom3)},         {"join_strong", to_json(r.join_strong)},
          {"meet_strong", to_json(r.meet_strong)}, {"increasing", to_json(r.increasing)},
          {"reflexive", to_json(r.reflexive)},   {"distributive", r.distributive},
          {"proximity_lattice", r.proximity_lattice()}};
}

json to_json(const ProximityFlags& f) {
  return {{"axioms_ok", f.axioms_ok},   {"join_strong", f.join_strong}, {"meet_strong", f.meet_strong},
          {"increasing", f.increasing}, {"reflexive", f.reflexive},     {"distributive", f.distributive}};
}

json to_json(const MorphismReport& r) {
  return {{"converse_absorbs_source", to_json(r.converse_absorbs_source)},
          {"target_absorbs_converse", to_json(r.target_absorbs_converse)},
          {"joins_on_left", to_json(r.joins_on_left)},
          {"meets_on_right", to_json(r.meets_on_right)},
          {"round_images", to_json(r.round_images)},
          {"join_approximable", to_json(r.join_approximable)},
          {"meet_approximable", to_json(r.meet_approximable)},
          {"proximity", r.proximity()},
          {"characterizations_agree", r.characterizations_agree()},
          {"j", r.j()},
          {"m", r.m()}};
}

json to_json(const CanonicalExtension& e) {
  const auto& l = e.source.lattice();
  const auto& c = e.lattice;
  json filters = json::object();
  for (std::size_t f = 0; f < e.filters.size(); ++f) filters[set_text(l, e.filters[f])] = c.name(e.filter_element(f));
  json ideals = json::object();
  for (std::size_t i = 0; i < e.ideals.size(); ++i) ideals[set_text(l, e.ideals[i])] = c.name(e.ideal_element(i));
  // Closed sets live over the round filters (pi) or the round ideals (sigma).
  const auto& points = e.kind == ExtensionKind::pi ? e.filters : e.ideals;
  json closed = json::object();
  for (std::size_t u = 0; u < e.closed_sets.size(); ++u) {
    json members = json::array();
    for (auto x : e.closed_sets[u]) members.push_back(set_text(l, points[x]));
    closed[c.name(u)] = members;
  }
  return {{"kind", std::string(to_string(e.kind))},
          {"source", to_json(e.source)},
          {"lattice", to_json(c)},
          {"embed", map_json(l, c, e.embed)},
          {"filter_elements", filters},
          {"ideal_elements", ideals},
          {"closed_sets", closed}};
}

json to_json(const ExtensionReport& r) {
  json out = {{"kind", std::string(to_string(r.kind))},
              {"homomorphism", to_json(r.homomorphism)},
              {"dense", to_json(r.dense)},
              {"compact", to_json(r.compact)},
              {"increasing", to_json(r.increasing)},
              {"join_preserving", to_json(r.join_preserving)},
              {"meet_preserving", to_json(r.meet_preserving)},
              {"element_tables", to_json(r.element_tables)},
              {"valid", r.valid()}};
  if (r.compact_subsets_checked) out["compact_subsets"] = to_json(r.compact_subsets);
  return out;
}

json to_json(const ExtendedMap& m) {
  json ideal_elements = json::array();
  for (auto y : m.ideal_elements) ideal_elements.push_back(m.source_ext.lattice.name(y));
  return {{"j", m.j},
          {"T", relation_json(m.source_ext.source.lattice(), m.target_ext.source.lattice(), m.t)},
          {"round_ideal_elements", ideal_elements},
          {"table", map_json(m.source_ext.lattice, m.target_ext.lattice, m.table)}};
}

json to_json(const PreservationReport& r) {
  return {{"extends", to_json(r.extends)},
          {"monotone", to_json(r.monotone)},
          {"meets", to_json(r.meets)},
          {"directed_joins", to_json(r.directed_joins)},
          {"directed_exhaustive", r.directed_exhaustive},
          {"finite_ideal_joins", to_json(r.finite_ideal_joins)},
          {"all_joins", to_json(r.all_joins)},
          {"j", r.j},
          {"required_hold", r.required_hold()}};
}

json to_json(const DualComparison& d) {
  json out = {{"saturated_sets", d.saturated_sets}, {"discrepancies", d.discrepancies}, {"ok", d.ok()}};
  if (!d.ok()) out["witness"] = d.witness;
  return out;
}

json to_json(const SpectrumResult& s) {
  const auto& l = s.source.lattice();
  json filters = json::object();
  for (std::size_t p = 0; p < s.point_filters.size(); ++p) filters[s.space.points[p]] = names_of(l, s.point_filters[p]);
  json basic = json::object();
  for (std::size_t d = 0; d < s.basic_open.size(); ++d) basic[l.name(d)] = points_of(s.space, s.basic_open[d]);
  return {{"space", to_json(s.space)}, {"point_filters", filters}, {"basic_opens", basic}};
}

std::string lattice_dot(const FiniteLattice& lat, const ElementSet& highlight, const std::string& graph_name) {
  std::ostringstream out;
  out << "digraph " << quoted(graph_name) << " {\n  rankdir=BT;\n  node [shape=circle];\n";
  for (std::size_t a = 0; a < lat.size(); ++a) {
    out << "  n" << a << " [label=" << quoted(lat.name(a));
    if (highlight.contains(a)) out << ", style=filled, fillcolor=lightgray";
    out << "];\n";
  }
  for (auto [a, b] : lat.covers()) out << "  n" << a << " -> n" << b << ";\n";
  out << "}\n";
  return out.str();
}

std::string space_dot(const FiniteSpace& s, const std::string& graph_name) {
  std::ostringstream out;
  out << "digraph " << quoted(graph_name) << " {\n  rankdir=BT;\n  node [shape=box];\n";
  const auto n = s.size();
  std::vector<ElementSet> up(n);
  for (std::size_t x = 0; x < n; ++x) {
    up[x] = saturation(s, x);
    out << "  p" << x << " [label=" << quoted(s.points[x]) << "];\n";
  }
  for (std::size_t x = 0; x < n; ++x)
    for (auto y : up[x]) {
      if (y == x) continue;
      bool cover = true;
      for (auto z : up[x])
        if (z != x && z != y && up[z].contains(y)) cover = false;
      if (cover) out << "  p" << x << " -> p" << y << ";\n";
    }
  out << "}\n";
  return out.str();
}

}  // namespace proxlat::io

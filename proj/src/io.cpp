#include "gpd/io.hpp"

#include <fstream>

namespace gpd {

namespace {

[[noreturn]] void bad(const std::string& what) { throw ParseError(what); }

long as_long(const mpz_class& z, const char* what) {
  if (!z.fits_slong_p()) bad(std::string(what) + " too large to serialize");
  return z.get_si();
}

Json coeff_to_json(const GaussianRational& c) {
  return Json::array({as_long(c.re.get_num(), "numerator"), as_long(c.re.get_den(), "denominator"),
                      as_long(c.im.get_num(), "numerator"), as_long(c.im.get_den(), "denominator")});
}

GaussianRational coeff_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 4) bad("coefficient must be [re_num, re_den, im_num, im_den]");
  for (const auto& v : j)
    if (!v.is_number_integer()) bad("coefficient entries must be integers");
  return GaussianRational::make(j[0].get<long>(), j[1].get<long>(), j[2].get<long>(),
                                j[3].get<long>());
}

MultTable parse_mult_table(const Json& j) {
  if (!j.is_object() || !j.contains("table")) bad("group table needs a \"table\" field");
  MultTable t;
  if (j.contains("elements")) {
    for (const auto& e : j.at("elements")) t.names.push_back(e.get<std::string>());
  }
  auto index_of = [&t](const Json& v) -> int {
    if (v.is_number_integer()) return v.get<int>();
    const std::string name = v.get<std::string>();
    for (std::size_t i = 0; i < t.names.size(); ++i)
      if (t.names[i] == name) return static_cast<int>(i);
    bad("unknown group element '" + name + "'");
  };
  for (const auto& row : j.at("table")) {
    t.mul.emplace_back();
    for (const auto& v : row) t.mul.back().push_back(index_of(v));
  }
  if (t.names.empty())
    for (std::size_t i = 0; i < t.mul.size(); ++i)
      t.names.push_back(i == 0 ? "e" : "g" + std::to_string(i));
  return t;
}

FiniteGroupoid parse_groupoid_tables(const Json& j) {
  MorphismTables t;
  for (const auto& m : j.at("morphisms")) t.labels.push_back(m.get<std::string>());
  std::map<std::string, Mor> index;
  for (std::size_t i = 0; i < t.labels.size(); ++i) {
    if (index.count(t.labels[i])) throw AxiomViolation("duplicate morphism label '" + t.labels[i] + "'");
    index[t.labels[i]] = static_cast<Mor>(i);
  }
  auto look = [&index](const Json& v) -> Mor {
    const std::string name = v.get<std::string>();
    auto it = index.find(name);
    if (it == index.end()) bad("unknown morphism label '" + name + "'");
    return it->second;
  };
  const std::size_t n = t.labels.size();
  t.range.assign(n, kNoMor);
  t.source.assign(n, kNoMor);
  t.inverse.assign(n, kNoMor);
  t.compose.assign(n, std::vector<Mor>(n, kNoMor));
  for (const auto& [key, value] : j.at("range").items()) t.range[look(key)] = look(value);
  for (const auto& [key, value] : j.at("source").items()) t.source[look(key)] = look(value);
  for (const auto& [key, value] : j.at("inverse").items()) t.inverse[look(key)] = look(value);
  for (std::size_t i = 0; i < n; ++i) {
    if (t.range[i] == kNoMor || t.source[i] == kNoMor || t.inverse[i] == kNoMor)
      bad("range/source/inverse must cover every morphism");
  }
  for (const auto& triple : j.at("compose")) {
    if (!triple.is_array() || triple.size() != 3) bad("compose entries must be [g, h, gh]");
    t.compose[look(triple[0])][look(triple[1])] = look(triple[2]);
  }
  return FiniteGroupoid::validate(std::move(t));
}

PointAction parse_point_action(const Json& j) {
  PointAction a;
  a.group = parse_mult_table(j.at("group"));
  for (const auto& p : j.at("points")) a.points.push_back(p.get<std::string>());
  auto point_index = [&a](const std::string& name) -> int {
    for (std::size_t i = 0; i < a.points.size(); ++i)
      if (a.points[i] == name) return static_cast<int>(i);
    bad("unknown point '" + name + "'");
  };
  a.perm.assign(a.group.mul.size(), {});
  const Json& map = j.at("map");
  for (std::size_t g = 0; g < a.group.mul.size(); ++g) {
    const std::string& gname = a.group.names[g];
    a.perm[g].assign(a.points.size(), -1);
    if (!map.contains(gname)) bad("action map missing element '" + gname + "'");
    for (const auto& [from, to] : map.at(gname).items())
      a.perm[g][point_index(from)] = point_index(to.get<std::string>());
    for (int v : a.perm[g])
      if (v < 0) bad("action map for '" + gname + "' does not cover every point");
  }
  return a;
}

}  // namespace

FiniteGroupoid parse_groupoid(const Json& j) {
  try {
    if (!j.is_object()) bad("groupoid description must be an object");
    if (j.contains("pair")) return pair_groupoid(j.at("pair").get<int>());
    if (j.contains("group")) return group_groupoid(parse_mult_table(j.at("group")));
    if (j.contains("action")) return action_groupoid(parse_point_action(j.at("action")));
    if (j.contains("union")) {
      const Json& parts = j.at("union");
      if (!parts.is_array() || parts.size() != 2) bad("\"union\" takes exactly two records");
      return disjoint_union(parse_groupoid(parts[0]), parse_groupoid(parts[1]));
    }
    if (j.contains("bundle")) {
      std::vector<MultTable> fibers;
      for (const auto& f : j.at("bundle")) fibers.push_back(parse_mult_table(f));
      return isotropy_bundle(fibers);
    }
    if (j.contains("morphisms")) return parse_groupoid_tables(j);
    bad("unrecognized groupoid record");
  } catch (const Json::exception& e) {
    bad(std::string("malformed groupoid record: ") + e.what());
  }
}

Json serialize_groupoid(const FiniteGroupoid& g) {
  Json j;
  j["morphisms"] = Json::array();
  Json range = Json::object(), source = Json::object(), inverse = Json::object();
  Json compose = Json::array();
  for (Mor m = 0; m < static_cast<Mor>(g.size()); ++m) {
    j["morphisms"].push_back(g.label(m));
    range[g.label(m)] = g.label(g.range_id(m));
    source[g.label(m)] = g.label(g.source_id(m));
    inverse[g.label(m)] = g.label(g.inverse(m));
    for (Mor h = 0; h < static_cast<Mor>(g.size()); ++h) {
      if (g.compose(m, h) != kNoMor)
        compose.push_back(Json::array({g.label(m), g.label(h), g.label(g.compose(m, h))}));
    }
  }
  j["range"] = std::move(range);
  j["source"] = std::move(source);
  j["inverse"] = std::move(inverse);
  j["compose"] = std::move(compose);
  return j;
}

AlgebraElement parse_element(const Json& j, GroupoidRef g) {
  try {
    if (!j.is_object()) bad("element must map morphism labels to coefficients");
    AlgebraElement f(std::move(g));
    for (const auto& [label, coeff] : j.items()) {
      auto m = f.groupoid()->find_label(label);
      if (!m) bad("unknown morphism label '" + label + "'");
      f.set_coeff(*m, coeff_from_json(coeff));
    }
    return f;
  } catch (const Json::exception& e) {
    bad(std::string("malformed element record: ") + e.what());
  }
}

Json serialize_element(const AlgebraElement& f) {
  Json j = Json::object();
  for (Mor m : f.support()) j[f.groupoid()->label(m)] = coeff_to_json(f.coeff(m));
  return j;
}

DirectedGraph parse_graph(const Json& j) {
  try {
    std::vector<std::string> vertices;
    for (const auto& v : j.at("vertices")) vertices.push_back(v.get<std::string>());
    auto vertex_index = [&vertices](const std::string& name) -> int {
      for (std::size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i] == name) return static_cast<int>(i);
      bad("unknown vertex '" + name + "'");
    };
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
      edges.push_back(Edge{e.at("name").get<std::string>(),
                           vertex_index(e.at("src").get<std::string>()),
                           vertex_index(e.at("dst").get<std::string>())});
    }
    return DirectedGraph::validate(std::move(vertices), std::move(edges));
  } catch (const Json::exception& e) {
    bad(std::string("malformed graph record: ") + e.what());
  }
}

Json serialize_graph(const DirectedGraph& g) {
  Json j;
  j["vertices"] = Json::array();
  for (std::size_t v = 0; v < g.vertex_count(); ++v) j["vertices"].push_back(g.vertex_name(v));
  j["edges"] = Json::array();
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    j["edges"].push_back(Json{{"name", g.edge(e).name},
                              {"src", g.vertex_name(g.edge(e).src)},
                              {"dst", g.vertex_name(g.edge(e).dst)}});
  }
  return j;
}

namespace {

Path parse_leg(const Json& names, const DirectedGraph& g, std::optional<int> anchor) {
  std::vector<int> edges;
  for (const auto& n : names) {
    auto e = g.find_edge(n.get<std::string>());
    if (!e) bad("unknown edge '" + n.get<std::string>() + "'");
    edges.push_back(*e);
  }
  if (edges.empty()) {
    if (!anchor) bad("empty path leg needs a \"vertex\" anchor");
    return Path(g, *anchor);
  }
  return Path(g, std::move(edges));
}

}  // namespace

GraphAlgebraElement parse_graph_element(const Json& j, GraphRef g) {
  try {
    if (!j.is_array()) bad("graph element must be a list of terms");
    GraphAlgebraElement x(g);
    for (const auto& term : j) {
      std::optional<int> anchor;
      if (term.contains("vertex")) {
        auto v = g->find_vertex(term.at("vertex").get<std::string>());
        if (!v) bad("unknown vertex '" + term.at("vertex").get<std::string>() + "'");
        anchor = *v;
      }
      // A one-sided empty leg is anchored at the endpoint of the other side.
      const Json& mu_names = term.at("mu");
      const Json& nu_names = term.at("nu");
      std::optional<Path> mu, nu;
      if (!mu_names.empty()) mu = parse_leg(mu_names, *g, std::nullopt);
      if (!nu_names.empty()) nu = parse_leg(nu_names, *g, std::nullopt);
      if (!mu && !nu) {
        if (!anchor) bad("a term with two empty legs needs a \"vertex\" anchor");
        mu = Path(*g, *anchor);
        nu = *mu;
      } else if (!mu) {
        mu = Path(*g, nu->dst());
      } else if (!nu) {
        nu = Path(*g, mu->dst());
      }
      x.push_term(coeff_from_json(term.at("coeff")), PathPairTerm::of(*g, *mu, *nu));
    }
    return x;
  } catch (const Json::exception& e) {
    bad(std::string("malformed graph element record: ") + e.what());
  }
}

Json serialize_graph_element(const GraphAlgebraElement& x) {
  const DirectedGraph& g = *x.graph();
  Json j = Json::array();
  for (const auto& [c, t] : x.terms()) {
    Json term;
    term["coeff"] = coeff_to_json(c);
    term["mu"] = Json::array();
    for (int e : t.mu.edges()) term["mu"].push_back(g.edge(e).name);
    term["nu"] = Json::array();
    for (int e : t.nu.edges()) term["nu"].push_back(g.edge(e).name);
    if (t.mu.length() == 0 || t.nu.length() == 0)
      term["vertex"] = g.vertex_name(t.mu.length() == 0 ? t.mu.src() : t.nu.src());
    j.push_back(std::move(term));
  }
  return j;
}

DynamicalSystem parse_system(const Json& j) {
  try {
    DynamicalSystem s;
    const Json& monoid = j.at("monoid");
    const Json& space = j.at("space");
    if (monoid.is_string() && monoid.get<std::string>() == "naturals") {
      if (!space.contains("graph")) bad("the shift system needs {\"space\": {\"graph\": ...}}");
      s.shift_graph = parse_graph(space.at("graph"));
      return s;
    }
    MultTable table = parse_mult_table(monoid);
    FiniteAction a;
    a.monoid = FiniteMonoid::validate(table.names, table.mul);
    for (const auto& p : space.at("points")) a.points.push_back(p.get<std::string>());
    auto point_index = [&a](const std::string& name) -> int {
      for (std::size_t i = 0; i < a.points.size(); ++i)
        if (a.points[i] == name) return static_cast<int>(i);
      bad("unknown point '" + name + "'");
    };
    const Json& map = j.at("action");
    a.map.assign(a.monoid.mul.size(), {});
    for (std::size_t g = 0; g < a.monoid.mul.size(); ++g) {
      const std::string gname = a.monoid.name(static_cast<int>(g));
      if (!map.contains(gname)) bad("action missing element '" + gname + "'");
      a.map[g].assign(a.points.size(), -1);
      for (const auto& [from, to] : map.at(gname).items())
        a.map[g][point_index(from)] = point_index(to.get<std::string>());
      for (int v : a.map[g])
        if (v < 0) bad("action for '" + gname + "' does not cover every point");
    }
    s.action = std::move(a);
    return s;
  } catch (const Json::exception& e) {
    bad(std::string("malformed system record: ") + e.what());
  }
}

Json serialize_system(const DynamicalSystem& s) {
  Json j;
  if (s.shift_graph) {
    j["monoid"] = "naturals";
    j["space"] = Json{{"graph", serialize_graph(*s.shift_graph)}};
    return j;
  }
  if (!s.action) throw PreconditionError("empty dynamical system");
  const FiniteAction& a = *s.action;
  Json elements = Json::array(), table = Json::array();
  for (std::size_t i = 0; i < a.monoid.mul.size(); ++i)
    elements.push_back(a.monoid.name(static_cast<int>(i)));
  for (const auto& row : a.monoid.mul) table.push_back(row);
  j["monoid"] = Json{{"elements", elements}, {"table", table}};
  Json points = Json::array();
  for (const auto& p : a.points) points.push_back(p);
  j["space"] = Json{{"points", points}};
  Json action = Json::object();
  for (std::size_t g = 0; g < a.map.size(); ++g) {
    Json one = Json::object();
    for (std::size_t x = 0; x < a.points.size(); ++x) one[a.points[x]] = a.points[a.map[g][x]];
    action[a.monoid.name(static_cast<int>(g))] = std::move(one);
  }
  j["action"] = std::move(action);
  return j;
}

Json serialize_result(const ResultRecord& r) {
  Json j;
  j["version"] = r.version;
  j["command"] = r.command;
  j["verdicts"] = Json::object();
  for (const auto& [k, v] : r.verdicts) j["verdicts"][k] = v;
  j["witnesses"] = Json::object();
  for (const auto& [k, v] : r.witnesses) j["witnesses"][k] = v;
  j["timing_ms"] = r.timing_ms;
  return j;
}

ResultRecord parse_result(const Json& j) {
  try {
    if (!j.contains("version")) bad("result record is missing the version field");
    ResultRecord r;
    r.version = j.at("version").get<std::string>();
    r.command = j.at("command").get<std::string>();
    for (const auto& [k, v] : j.at("verdicts").items()) r.verdicts[k] = v;
    for (const auto& [k, v] : j.at("witnesses").items()) r.witnesses[k] = v.get<std::string>();
    r.timing_ms = j.at("timing_ms").get<double>();
    return r;
  } catch (const Json::exception& e) {
    bad(std::string("malformed result record: ") + e.what());
  }
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw ParseError("invalid JSON in '" + path + "': " + e.what());
  }
}

}  // namespace gpd

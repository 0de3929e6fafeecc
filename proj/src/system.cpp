#include "rearrange/system.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace rearrange {

bool DirectedGraph::has_vertex(const std::string& v) const {
  return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
}

const Edge* DirectedGraph::find_edge(const std::string& name) const {
  for (const Edge& e : edges)
    if (e.name == name) return &e;
  return nullptr;
}

std::vector<std::pair<const Edge*, bool>> DirectedGraph::ends_at(
    const std::string& v) const {
  std::vector<std::pair<const Edge*, bool>> out;
  for (const Edge& e : edges) {
    if (e.src == v) out.emplace_back(&e, true);
    if (e.dst == v) out.emplace_back(&e, false);
  }
  return out;
}

int DirectedGraph::degree(const std::string& v) const {
  return static_cast<int>(ends_at(v).size());
}

const ReplacementGraph& ReplacementSystem::rule(const Color& c) const {
  auto it = rules.find(c);
  if (it == rules.end()) throw std::runtime_error("no replacement for color " + c);
  return it->second;
}

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> toks;
  std::istringstream in(line);
  std::string t;
  while (in >> t) toks.push_back(t);
  return toks;
}

[[noreturn]] void fail(int lineno, const std::string& msg) {
  throw std::runtime_error("line " + std::to_string(lineno) + ": " + msg);
}

struct SectionData {
  std::vector<std::string> vertices;
  std::vector<Edge> edges;
  std::string init;
  std::string term;
  int lineno = 0;
};

void check_graph(const DirectedGraph& g, const std::string& where, int lineno) {
  std::set<std::string> seen;
  for (const std::string& v : g.vertices)
    if (!seen.insert(v).second)
      fail(lineno, "duplicate vertex " + v + " in " + where);
  std::set<std::string> enames;
  for (const Edge& e : g.edges) {
    if (!enames.insert(e.name).second)
      fail(lineno, "duplicate edge " + e.name + " in " + where);
    if (!g.has_vertex(e.src))
      fail(lineno, "unknown vertex " + e.src + " in " + where);
    if (!g.has_vertex(e.dst))
      fail(lineno, "unknown vertex " + e.dst + " in " + where);
  }
}

}  // namespace

SystemPtr parse_system(const std::string& text) {
  auto sys = std::make_shared<ReplacementSystem>();
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  bool have_system = false;
  bool have_base = false;
  // current section: "" before base, "base", or a color
  std::string section;
  std::map<std::string, SectionData> sections;

  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw;
    if (auto pos = line.find('#'); pos != std::string::npos) line.resize(pos);
    std::vector<std::string> toks = tokenize(line);
    if (toks.empty()) continue;
    const std::string& kw = toks[0];
    if (kw == "system") {
      if (have_system) fail(lineno, "repeated system line");
      if (toks.size() != 2) fail(lineno, "system line needs a name");
      sys->name = toks[1];
      have_system = true;
    } else if (kw == "base") {
      if (!have_system) fail(lineno, "base before system line");
      if (have_base) fail(lineno, "repeated base section");
      have_base = true;
      section = "base";
      sections["base"].lineno = lineno;
    } else if (kw == "replacement") {
      if (!have_base) fail(lineno, "replacement before base section");
      if (toks.size() != 2) fail(lineno, "replacement line needs a color");
      section = toks[1];
      if (section == "base" || sections.count(section))
        fail(lineno, "repeated replacement " + section);
      sys->rule_order.push_back(section);
      sections[section].lineno = lineno;
    } else if (kw == "vertex") {
      if (section.empty()) fail(lineno, "vertex outside a section");
      SectionData& d = sections[section];
      d.vertices.insert(d.vertices.end(), toks.begin() + 1, toks.end());
    } else if (kw == "edge") {
      if (section.empty()) fail(lineno, "edge outside a section");
      if (toks.size() != 5) fail(lineno, "edge line needs name src dst color");
      sections[section].edges.push_back({toks[1], toks[2], toks[3], toks[4]});
    } else if (kw == "init" || kw == "term") {
      if (section.empty() || section == "base")
        fail(lineno, kw + " outside a replacement section");
      if (toks.size() != 2) fail(lineno, kw + " line needs a vertex");
      std::string& slot =
          kw == "init" ? sections[section].init : sections[section].term;
      if (!slot.empty()) fail(lineno, "repeated " + kw);
      slot = toks[1];
    } else {
      fail(lineno, "unknown keyword " + kw);
    }
  }

  if (!have_system) throw std::runtime_error("missing system line");
  if (!have_base) throw std::runtime_error("missing base section");

  const SectionData& b = sections["base"];
  sys->base.vertices = b.vertices;
  sys->base.edges = b.edges;
  check_graph(sys->base, "base graph", b.lineno);

  for (const Color& c : sys->rule_order) {
    const SectionData& d = sections[c];
    ReplacementGraph r;
    r.graph.vertices = d.vertices;
    r.graph.edges = d.edges;
    r.init = d.init;
    r.term = d.term;
    check_graph(r.graph, "replacement " + c, d.lineno);
    if (r.init.empty()) fail(d.lineno, "replacement " + c + " has no init");
    if (r.term.empty()) fail(d.lineno, "replacement " + c + " has no term");
    if (!r.graph.has_vertex(r.init))
      fail(d.lineno, "unknown vertex " + r.init + " in replacement " + c);
    if (!r.graph.has_vertex(r.term))
      fail(d.lineno, "unknown vertex " + r.term + " in replacement " + c);
    if (r.init == r.term)
      fail(d.lineno, "init equals term in replacement " + c);
    sys->rules.emplace(c, std::move(r));
  }

  auto check_colors = [&](const DirectedGraph& g, const std::string& where,
                          int lineno) {
    for (const Edge& e : g.edges)
      if (!sys->rules.count(e.color))
        fail(lineno, "no replacement for color " + e.color + " in " + where);
  };
  check_colors(sys->base, "base graph", b.lineno);
  for (const Color& c : sys->rule_order)
    check_colors(sys->rules.at(c).graph, "replacement " + c,
                 sections[c].lineno);

  return sys;
}

namespace {

void write_graph(std::ostringstream& out, const DirectedGraph& g) {
  out << "vertex";
  for (const std::string& v : g.vertices) out << ' ' << v;
  out << '\n';
  for (const Edge& e : g.edges)
    out << "edge " << e.name << ' ' << e.src << ' ' << e.dst << ' ' << e.color
        << '\n';
}

}  // namespace

std::string serialize_system(const ReplacementSystem& sys) {
  std::ostringstream out;
  out << "system " << sys.name << '\n';
  out << "base\n";
  write_graph(out, sys.base);
  for (const Color& c : sys.rule_order) {
    const ReplacementGraph& r = sys.rules.at(c);
    out << "replacement " << c << '\n';
    out << "vertex";
    for (const std::string& v : r.graph.vertices) out << ' ' << v;
    out << '\n';
    out << "init " << r.init << '\n';
    out << "term " << r.term << '\n';
    for (const Edge& e : r.graph.edges)
      out << "edge " << e.name << ' ' << e.src << ' ' << e.dst << ' '
          << e.color << '\n';
  }
  return out.str();
}

std::vector<std::string> validate_expanding(const ReplacementSystem& sys) {
  std::vector<std::string> out;
  for (const std::string& v : sys.base.vertices)
    if (sys.base.degree(v) == 0)
      out.push_back("isolated vertex " + v + " in base graph");
  for (const Color& c : sys.rule_order) {
    const ReplacementGraph& r = sys.rules.at(c);
    if (r.graph.vertices.size() < 3)
      out.push_back("too few vertices in replacement " + c);
    if (r.graph.edges.size() < 2)
      out.push_back("too few edges in replacement " + c);
    for (const std::string& v : r.graph.vertices)
      if (r.graph.degree(v) == 0)
        out.push_back("isolated vertex " + v + " in replacement " + c);
    for (const Edge& e : r.graph.edges)
      if ((e.src == r.init && e.dst == r.term) ||
          (e.src == r.term && e.dst == r.init)) {
        out.push_back("initial and terminal connected in replacement " + c);
        break;
      }
  }
  return out;
}

namespace {

const char* kIntervalF = R"(system interval_F
base
vertex x0 x1
edge t x0 x1 c0
replacement c0
vertex vi m vt
init vi
term vt
edge 1 vi m c0
edge 2 m vt c0
)";

const char* kCircleT = R"(system circle_T
base
vertex x0
edge t x0 x0 c0
replacement c0
vertex vi m vt
init vi
term vt
edge 1 vi m c0
edge 2 m vt c0
)";

const char* kCantorV = R"(system cantor_V
base
vertex x0 x1
edge t x0 x1 c0
replacement c0
vertex vi m1 m2 vt
init vi
term vt
edge 1 vi m1 c0
edge 2 m2 vt c0
)";

const char* kDoubleCircle = R"(system double_circle
base
vertex x0 x1
edge t x0 x0 c0
edge u x1 x1 c0
replacement c0
vertex vi m vt
init vi
term vt
edge 1 vi m c0
edge 2 m vt c0
)";

const char* kAirplane = R"(system airplane
base
vertex v0 v1 v2 v3
edge L v1 v0 blue
edge R v2 v3 blue
edge T v2 v1 red
edge B v1 v2 red
replacement blue
vertex vi c1 c2 vt
init vi
term vt
edge e c1 vi blue
edge f c2 c1 red
edge g c1 c2 red
edge h c2 vt blue
replacement red
vertex vi m vt o
init vi
term vt
edge a vi m red
edge b m o blue
edge c m vt red
)";

}  // namespace

std::vector<std::string> builtin_names() {
  return {"airplane", "cantor_V", "circle_T", "double_circle", "interval_F"};
}

SystemPtr builtin(const std::string& name) {
  static const std::map<std::string, const char*> texts = {
      {"airplane", kAirplane},
      {"cantor_V", kCantorV},
      {"circle_T", kCircleT},
      {"double_circle", kDoubleCircle},
      {"interval_F", kIntervalF},
  };
  auto it = texts.find(name);
  if (it == texts.end()) throw std::runtime_error("unknown builtin " + name);
  return parse_system(it->second);
}

const std::string& end_vertex(const ReplacementSystem& sys, const EndState& s) {
  const ReplacementGraph& r = sys.rule(s.color);
  return s.end == End::Init ? r.init : r.term;
}

std::vector<std::pair<std::string, EndState>> end_transitions(
    const ReplacementSystem& sys, const EndState& s) {
  const ReplacementGraph& r = sys.rule(s.color);
  const std::string& w = end_vertex(sys, s);
  std::vector<std::pair<std::string, EndState>> out;
  for (auto [e, as_src] : r.graph.ends_at(w))
    out.emplace_back(e->name,
                     EndState{e->color, as_src ? End::Init : End::Term});
  return out;
}

std::set<EndState> extreme_ends(const ReplacementSystem& sys) {
  std::set<EndState> keep;
  for (const Color& c : sys.rule_order)
    for (End end : {End::Init, End::Term}) {
      EndState s{c, end};
      if (sys.rule(c).graph.degree(end_vertex(sys, s)) == 1) keep.insert(s);
    }
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto it = keep.begin(); it != keep.end();) {
      auto trans = end_transitions(sys, *it);
      if (trans.size() == 1 && keep.count(trans[0].second)) {
        ++it;
      } else {
        it = keep.erase(it);
        changed = true;
      }
    }
  }
  return keep;
}

bool is_extreme_base_vertex(const ReplacementSystem& sys,
                            const std::string& v) {
  auto ends = sys.base.ends_at(v);
  if (ends.size() != 1) return false;
  auto [e, as_src] = ends[0];
  std::set<EndState> ext = extreme_ends(sys);
  return ext.count({e->color, as_src ? End::Init : End::Term}) != 0;
}

}  // namespace rearrange

#include "rearrange/serialization.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace rearrange {

namespace {

Expansion from_leaves(const SystemPtr& sys, std::vector<Address> leaves,
                      const char* which) {
  std::set<Address> carets;
  for (const Address& l : leaves)
    for (std::size_t k = 1; k < l.size(); ++k)
      carets.insert(Address{{l.symbols.begin(), l.symbols.begin() + k}});
  Expansion e(sys, std::move(carets));
  std::sort(leaves.begin(), leaves.end());
  if (e.leaves() != leaves)
    throw std::runtime_error(std::string(which) +
                             " block is not a complete antichain");
  return e;
}

GraphPairDiagram assemble(const SystemPtr& sys, std::vector<Address>& dom,
                          std::vector<Address>& ran,
                          std::map<Address, Address>& sigma) {
  GraphPairDiagram d{from_leaves(sys, dom, "domain"),
                     from_leaves(sys, ran, "range"), std::move(sigma)};
  dom.clear();
  ran.clear();
  sigma = {};
  return d;
}

const char* kind_name(CellKind k) {
  return k == CellKind::Closed ? "closed" : "interior";
}

}  // namespace

std::string serialize_diagram(const GraphPairDiagram& d) {
  std::ostringstream out;
  out << "domain\n";
  for (const Address& l : d.domain.leaves()) out << to_string(l) << "\n";
  out << "range\n";
  for (const Address& l : d.range.leaves()) out << to_string(l) << "\n";
  out << "map\n";
  for (const auto& [a, b] : d.sigma)
    out << to_string(a) << " -> " << to_string(b) << "\n";
  return out.str();
}

std::vector<GraphPairDiagram> parse_diagrams(const SystemPtr& sys,
                                             const std::string& text) {
  std::vector<GraphPairDiagram> out;
  std::vector<Address> dom, ran;
  std::map<Address, Address> sigma;
  bool open = false;
  int block = -1;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    if (line == "domain") {
      if (open) out.push_back(assemble(sys, dom, ran, sigma));
      open = true;
      block = 0;
      continue;
    }
    if (line == "range" || line == "map") {
      if (!open) throw std::runtime_error("diagram must start with domain");
      block = line == "range" ? 1 : 2;
      continue;
    }
    if (!open) throw std::runtime_error("unexpected line: " + line);
    if (block == 0) {
      dom.push_back(parse_address(line));
    } else if (block == 1) {
      ran.push_back(parse_address(line));
    } else {
      std::size_t arrow = line.find(" -> ");
      if (arrow == std::string::npos)
        throw std::runtime_error("malformed map line: " + line);
      Address key = parse_address(line.substr(0, arrow));
      if (sigma.count(key))
        throw std::runtime_error("duplicate map entry: " + line);
      sigma[key] = parse_address(line.substr(arrow + 4));
    }
  }
  if (open) out.push_back(assemble(sys, dom, ran, sigma));
  if (out.empty()) throw std::runtime_error("no diagram found");
  return out;
}

GraphPairDiagram parse_diagram(const SystemPtr& sys, const std::string& text) {
  std::vector<GraphPairDiagram> ds = parse_diagrams(sys, text);
  if (ds.size() != 1)
    throw std::runtime_error("expected exactly one diagram, found " +
                             std::to_string(ds.size()));
  return std::move(ds.front());
}

nlohmann::json to_json(const GraphPairDiagram& d) {
  nlohmann::json j;
  j["domain"] = nlohmann::json::array();
  for (const Address& l : d.domain.leaves()) j["domain"].push_back(to_string(l));
  j["range"] = nlohmann::json::array();
  for (const Address& l : d.range.leaves()) j["range"].push_back(to_string(l));
  j["map"] = nlohmann::json::object();
  for (const auto& [a, b] : d.sigma) j["map"][to_string(a)] = to_string(b);
  return j;
}

nlohmann::json to_json(const CellUnion& cells) {
  nlohmann::json j;
  j["kind"] = kind_name(cells.kind);
  j["cells"] = nlohmann::json::array();
  for (const Address& a : cells.addresses) j["cells"].push_back(to_string(a));
  return j;
}

nlohmann::json to_json(const CanonicalElement& c) {
  nlohmann::json j;
  j["diagram"] = to_json(c.diagram);
  j["fixes"] = nlohmann::json::array();
  for (const Violation& v : c.fixes) {
    nlohmann::json f;
    f["lemma"] = v.lemma;
    f["sequence"] = nlohmann::json::array();
    for (const Address& a : v.seq) f["sequence"].push_back(to_string(a));
    j["fixes"].push_back(f);
  }
  return j;
}

nlohmann::json to_json(const WanderingCertificate& cert) {
  nlohmann::json j;
  j["kind"] = cert.kind == WanderingKind::Wandering ? "wandering"
                                                    : "weakly-wandering";
  j["set"] = to_json(cert.set);
  j["verified_to"] = cert.verified_to;
  if (cert.walk) {
    j["walk"] = {{"e", to_string(cert.walk->e)},
                 {"e_star", to_string(cert.walk->e_star)},
                 {"f", to_string(cert.walk->f)},
                 {"n", cert.walk->n}};
  }
  if (cert.orbit) {
    j["orbit"] = {{"edge", to_string(cert.orbit->edge)},
                  {"orbit_length", cert.orbit->orbit_length},
                  {"order", cert.orbit->order}};
  }
  return j;
}

nlohmann::json to_json(const MinimalityReport& report) {
  nlohmann::json j;
  j["full_coverage"] = report.full_coverage;
  j["missed"] = nlohmann::json::array();
  for (const Address& a : report.missed) j["missed"].push_back(to_string(a));
  j["reached"] = nlohmann::json::object();
  for (const auto& [start, cells] : report.reached) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Address& a : cells) arr.push_back(to_string(a));
    j["reached"][to_string(start)] = arr;
  }
  return j;
}

nlohmann::json to_json(const NigResult& result) {
  nlohmann::json j;
  j["passed"] = result.passed;
  j["cells"] = nlohmann::json::array();
  for (const Address& a : result.cells) j["cells"].push_back(to_string(a));
  j["avoided_cell"] = to_string(result.avoided_cell);
  j["i_complements"] = nlohmann::json::array();
  for (const CellUnion& c : result.i_complements)
    j["i_complements"].push_back(to_json(c));
  j["conjugators"] = nlohmann::json::array();
  for (const NigConjugator& c : result.conjugators) {
    nlohmann::json e;
    e["gamma"] = to_json(c.gamma.diagram());
    e["h"] = to_json(c.h.diagram());
    e["certificate"] = to_json(c.cert);
    j["conjugators"].push_back(e);
  }
  j["pingpong"] = nlohmann::json::array();
  for (const OrbitRecord& rec : result.pingpong_log) {
    nlohmann::json e;
    e["word"] = rec.word;
    e["point"] = to_string(rec.point);
    e["ok"] = rec.ok;
    if (!rec.note.empty()) e["note"] = rec.note;
    j["pingpong"].push_back(e);
  }
  return j;
}

std::string to_dot(const ReplacementSystem& sys) {
  std::ostringstream out;
  out << "digraph \"" << sys.name << "\" {\n";
  out << "  subgraph cluster_base {\n    label=\"base\";\n";
  for (const std::string& v : sys.base.vertices)
    out << "    \"base:" << v << "\" [label=\"" << v << "\"];\n";
  for (const Edge& e : sys.base.edges)
    out << "    \"base:" << e.src << "\" -> \"base:" << e.dst << "\" [label=\""
        << e.name << " (" << e.color << ")\"];\n";
  out << "  }\n";
  for (const Color& c : sys.rule_order) {
    const ReplacementGraph& r = sys.rule(c);
    out << "  subgraph \"cluster_rule_" << c << "\" {\n    label=\"rule " << c
        << "\";\n";
    for (const std::string& v : r.graph.vertices) {
      out << "    \"" << c << ":" << v << "\" [label=\"" << v;
      if (v == r.init) out << " (init)";
      if (v == r.term) out << " (term)";
      out << "\"];\n";
    }
    for (const Edge& e : r.graph.edges)
      out << "    \"" << c << ":" << e.src << "\" -> \"" << c << ":" << e.dst
          << "\" [label=\"" << e.name << " (" << e.color << ")\"];\n";
    out << "  }\n";
  }
  out << "}\n";
  return out.str();
}

std::string to_dot(const Expansion& e) {
  ExpansionGraph g = build_graph(e);
  std::ostringstream out;
  out << "digraph expansion {\n";
  for (std::size_t c = 0; c < g.origins.size(); ++c)
    out << "  n" << c << " [label=\"" << c << "\"];\n";
  for (const Address& leaf : e.leaves())
    out << "  n" << g.src_class(leaf) << " -> n" << g.dst_class(leaf)
        << " [label=\"" << to_string(leaf) << "\"];\n";
  out << "}\n";
  return out.str();
}

std::string to_dot(const GraphPairDiagram& d) {
  std::ostringstream out;
  out << "digraph diagram {\n";
  const char* side[2] = {"domain", "range"};
  const Expansion* exp[2] = {&d.domain, &d.range};
  for (int s = 0; s < 2; ++s) {
    ExpansionGraph g = build_graph(*exp[s]);
    char tag = side[s][0];
    out << "  subgraph cluster_" << side[s] << " {\n    label=\"" << side[s]
        << "\";\n";
    for (std::size_t c = 0; c < g.origins.size(); ++c)
      out << "    " << tag << c << " [label=\"" << c << "\"];\n";
    for (const Address& leaf : exp[s]->leaves()) {
      out << "    \"" << tag << ":" << to_string(leaf) << "\" [shape=box,label=\""
          << to_string(leaf) << "\"];\n";
      out << "    " << tag << g.src_class(leaf) << " -> \"" << tag << ":"
          << to_string(leaf) << "\";\n";
      out << "    \"" << tag << ":" << to_string(leaf) << "\" -> " << tag
          << g.dst_class(leaf) << ";\n";
    }
    out << "  }\n";
  }
  for (const auto& [a, b] : d.sigma)
    out << "  \"d:" << to_string(a) << "\" -> \"r:" << to_string(b)
        << "\" [style=dashed];\n";
  out << "}\n";
  return out.str();
}

}  // namespace rearrange

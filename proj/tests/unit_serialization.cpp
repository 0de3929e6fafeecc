#include "doctest.h"
#include "rearrange/serialization.hpp"

using namespace rearrange;

namespace {

Address addr(const std::string& s) { return parse_address(s); }

std::set<Address> addrs(const std::vector<std::string>& xs) {
  std::set<Address> out;
  for (const std::string& x : xs) out.insert(addr(x));
  return out;
}

GraphPairDiagram gpd(SystemPtr sys, const std::vector<std::string>& dom,
                     const std::vector<std::string>& ran,
                     const std::vector<std::pair<std::string, std::string>>& s) {
  GraphPairDiagram d{Expansion(sys, addrs(dom)), Expansion(sys, addrs(ran)),
                     {}};
  for (const auto& [a, b] : s) d.sigma[addr(a)] = addr(b);
  return d;
}

Rearrangement rot(SystemPtr t) {
  return Rearrangement::make(
      gpd(t, {"t"}, {"t"}, {{"t.1", "t.2"}, {"t.2", "t.1"}}));
}

Rearrangement gen_x(SystemPtr t) {
  return Rearrangement::make(gpd(t, {"t", "t.1"}, {"t", "t.2"},
                                 {{"t.1.1", "t.1"},
                                  {"t.1.2", "t.2.1"},
                                  {"t.2", "t.2.2"}}));
}

}  // namespace

TEST_CASE("diagram text format") {
  SystemPtr t = builtin("circle_T");
  CHECK(serialize_diagram(gen_x(t).diagram()) ==
        "domain\n"
        "t.1.1\n"
        "t.1.2\n"
        "t.2\n"
        "range\n"
        "t.1\n"
        "t.2.1\n"
        "t.2.2\n"
        "map\n"
        "t.1.1 -> t.1\n"
        "t.1.2 -> t.2.1\n"
        "t.2 -> t.2.2\n");

  for (const Rearrangement& g :
       {Rearrangement::identity(t), rot(t), gen_x(t),
        compose(gen_x(t), rot(t)), invert(gen_x(t))}) {
    std::string text = serialize_diagram(g.diagram());
    GraphPairDiagram back = parse_diagram(t, text);
    CHECK(back == g.diagram());
    CHECK(serialize_diagram(back) == text);
  }
}

TEST_CASE("diagram files hold several elements") {
  SystemPtr t = builtin("circle_T");
  std::string text = "# generators\n" + serialize_diagram(gen_x(t).diagram()) +
                     "\n" + serialize_diagram(rot(t).diagram());
  std::vector<GraphPairDiagram> ds = parse_diagrams(t, text);
  REQUIRE(ds.size() == 2);
  CHECK(ds[0] == gen_x(t).diagram());
  CHECK(ds[1] == rot(t).diagram());
  CHECK_THROWS(parse_diagram(t, text));
}

TEST_CASE("parse rejects malformed input") {
  SystemPtr t = builtin("circle_T");
  CHECK_THROWS(parse_diagram(t, ""));
  CHECK_THROWS(parse_diagram(t, "t.1\n"));
  CHECK_THROWS(parse_diagram(t, "domain\nt.1\nrange\nt\nmap\n"));
  CHECK_THROWS(parse_diagram(t, "domain\nt\nrange\nt\nmap\nt = t\n"));
  CHECK_THROWS(
      parse_diagram(t, "domain\nt\nrange\nt\nmap\nt -> t\nt -> t\n"));
}

TEST_CASE("json export") {
  SystemPtr t = builtin("circle_T");
  CHECK(to_json(gen_x(t).diagram()).dump() ==
        R"({"domain":["t.1.1","t.1.2","t.2"],)"
        R"("map":{"t.1.1":"t.1","t.1.2":"t.2.1","t.2":"t.2.2"},)"
        R"("range":["t.1","t.2.1","t.2.2"]})");
  CHECK(to_json(CellUnion({addr("t.1")}, CellKind::Closed)).dump() ==
        R"({"cells":["t.1"],"kind":"closed"})");

  CanonicalElement c = canonicalize(rot(t));
  nlohmann::json j = to_json(c);
  CHECK(j["fixes"].empty());
  CHECK(j["diagram"]["map"]["t.1"] == "t.2");

  WanderingCertificate cert = wandering_cell(gen_x(t));
  nlohmann::json w = to_json(cert);
  CHECK(w["kind"] == "wandering");
  CHECK(w["walk"]["f"] == "t.2.1");
  CHECK(w["set"]["kind"] == "interior");
}

TEST_CASE("dot export") {
  SystemPtr t = builtin("circle_T");
  CHECK(to_dot(Expansion::base(t)) ==
        "digraph expansion {\n"
        "  n0 [label=\"0\"];\n"
        "  n0 -> n0 [label=\"t\"];\n"
        "}\n");

  std::string sys_dot = to_dot(*t);
  CHECK(sys_dot.find("digraph \"circle_T\"") == 0);
  CHECK(sys_dot.find("cluster_base") != std::string::npos);
  CHECK(sys_dot == to_dot(*builtin("circle_T")));

  std::string dia = to_dot(gen_x(t).diagram());
  CHECK(dia.find("cluster_domain") != std::string::npos);
  CHECK(dia.find("cluster_range") != std::string::npos);
  std::size_t dashed = 0, pos = 0;
  while ((pos = dia.find("style=dashed", pos)) != std::string::npos) {
    ++dashed;
    pos += 1;
  }
  CHECK(dashed == 3);
}

TEST_CASE("enumeration order follows serialization") {
  SystemPtr t = builtin("circle_T");
  std::vector<Rearrangement> two = enumerate_elements(t, 2);
  std::vector<std::string> keys;
  for (const Rearrangement& g : two)
    keys.push_back(serialize_diagram(g.diagram()));
  CHECK(std::is_sorted(keys.begin(), keys.end()));
  CHECK(std::adjacent_find(keys.begin(), keys.end()) == keys.end());
}

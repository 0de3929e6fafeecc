#include "doctest.h"
#include "rearrange/expansion.hpp"

using namespace rearrange;

namespace {

Address addr(const std::string& s) { return parse_address(s); }

std::vector<std::string> leaf_strings(const Expansion& e) {
  std::vector<std::string> out;
  for (const Address& a : e.leaves()) out.push_back(to_string(a));
  return out;
}

}  // namespace

TEST_CASE("address basics") {
  Address a = addr("t.1.2");
  CHECK(a.symbols == std::vector<std::string>{"t", "1", "2"});
  CHECK(to_string(a) == "t.1.2");
  CHECK(a.parent() == addr("t.1"));
  CHECK(a.child("1") == addr("t.1.2.1"));
  CHECK(addr("t.1").is_prefix_of(addr("t.1.2")));
  CHECK(addr("t.1").is_prefix_of(addr("t.1")));
  CHECK_FALSE(addr("t.2").is_prefix_of(addr("t.1.2")));
  CHECK(interiors_disjoint(addr("t.1"), addr("t.2")));
  CHECK_FALSE(interiors_disjoint(addr("t"), addr("t.2.1")));
  CHECK(addr("t.1") < addr("t.1.1"));
  CHECK(addr("t.1.2") < addr("t.2"));
  CHECK_THROWS(parse_address(""));
  CHECK_THROWS(parse_address("t..1"));
}

TEST_CASE("address validity and colors") {
  SystemPtr a = builtin("airplane");
  CHECK(valid_address(*a, addr("T")));
  CHECK(valid_address(*a, addr("T.b.e")));
  CHECK_FALSE(valid_address(*a, addr("T.e")));
  CHECK_FALSE(valid_address(*a, addr("z")));
  CHECK(color_of(*a, addr("L")) == "blue");
  CHECK(color_of(*a, addr("T")) == "red");
  CHECK(color_of(*a, addr("T.b")) == "blue");
  CHECK(color_of(*a, addr("T.b.f")) == "red");
  auto kids = children(*a, addr("T"));
  REQUIRE(kids.size() == 3);
  CHECK(to_string(kids[0]) == "T.a");
  CHECK(to_string(kids[2]) == "T.c");
}

TEST_CASE("expansions as caret sets") {
  SystemPtr t = builtin("circle_T");
  Expansion base = Expansion::base(t);
  CHECK(leaf_strings(base) == std::vector<std::string>{"t"});

  Expansion one = base.expanded_at(addr("t"));
  CHECK(leaf_strings(one) == std::vector<std::string>{"t.1", "t.2"});

  Expansion two = one.expanded_at(addr("t.2"));
  CHECK(leaf_strings(two) ==
        std::vector<std::string>{"t.1", "t.2.1", "t.2.2"});
  CHECK(two.is_caret(addr("t.2")));
  CHECK(two.is_node(addr("t.2")));
  CHECK_FALSE(two.is_leaf(addr("t.2")));
  CHECK(two.is_leaf(addr("t.2.1")));
  CHECK_FALSE(two.is_node(addr("t.1.1")));

  CHECK_THROWS(Expansion(t, {addr("t.1")}));
  CHECK_THROWS(Expansion(t, {addr("u")}));
  CHECK_THROWS(base.expanded_at(addr("t.1")));
}

TEST_CASE("full expansions") {
  SystemPtr t = builtin("circle_T");
  CHECK(full_expansion(t, 0).leaves().size() == 1);
  CHECK(leaf_strings(full_expansion(t, 2)) ==
        std::vector<std::string>{"t.1.1", "t.1.2", "t.2.1", "t.2.2"});

  SystemPtr a = builtin("airplane");
  CHECK(full_expansion(a, 1).leaves().size() == 14);
  CHECK(full_expansion(a, 2).leaves().size() == 48);
}

TEST_CASE("common refinement unions carets") {
  SystemPtr t = builtin("circle_T");
  Expansion left(t, {addr("t"), addr("t.1")});
  Expansion right(t, {addr("t"), addr("t.2")});
  Expansion both = common_refinement(left, right);
  CHECK(both.carets() ==
        std::set<Address>{addr("t"), addr("t.1"), addr("t.2")});
}

TEST_CASE("expansion enumeration is exhaustive and duplicate free") {
  SystemPtr t = builtin("circle_T");
  CHECK(enumerate_expansions(t, 0).size() == 1);
  CHECK(enumerate_expansions(t, 1).size() == 2);
  CHECK(enumerate_expansions(t, 2).size() == 4);
  auto three = enumerate_expansions(t, 3);
  // caret sets of size 3: {t,t1,t2}, {t,t1,t11}, {t,t1,t12}, {t,t2,t21}, {t,t2,t22}
  CHECK(three.size() == 9);
  std::set<std::set<Address>> seen;
  for (const Expansion& e : three) seen.insert(e.carets());
  CHECK(seen.size() == three.size());

  SystemPtr a = builtin("airplane");
  CHECK(enumerate_expansions(a, 1).size() == 5);
}

TEST_CASE("expanded graph tracks vertex classes") {
  SystemPtr f = builtin("interval_F");
  ExpansionGraph g0 = build_graph(Expansion::base(f));
  CHECK(g0.origins.size() == 2);
  CHECK(g0.src_class(addr("t")) == g0.class_of_base_vertex("x0"));
  CHECK(g0.dst_class(addr("t")) == g0.class_of_base_vertex("x1"));

  ExpansionGraph g1 = build_graph(Expansion(f, {addr("t")}));
  REQUIRE(g1.origins.size() == 3);
  int x0 = g1.class_of_base_vertex("x0");
  int x1 = g1.class_of_base_vertex("x1");
  int m = 3 - x0 - x1;
  CHECK(g1.origins[m] == VertexOrigin{"", addr("t"), "m"});
  CHECK(g1.node_ends.at(addr("t.1")) == std::pair<int, int>{x0, m});
  CHECK(g1.node_ends.at(addr("t.2")) == std::pair<int, int>{m, x1});
  CHECK(g1.leaf_degree(x0) == 1);
  CHECK(g1.leaf_degree(m) == 2);

  SystemPtr t = builtin("circle_T");
  ExpansionGraph c1 = build_graph(Expansion(t, {addr("t")}));
  CHECK(c1.origins.size() == 2);
  CHECK(c1.src_class(addr("t.1")) == c1.class_of_base_vertex("x0"));
  CHECK(c1.dst_class(addr("t.2")) == c1.class_of_base_vertex("x0"));
  CHECK(c1.leaf_degree(c1.class_of_base_vertex("x0")) == 2);

  SystemPtr v = builtin("cantor_V");
  ExpansionGraph v1 = build_graph(Expansion(v, {addr("t")}));
  CHECK(v1.origins.size() == 4);
  CHECK(v1.src_class(addr("t.1")) == v1.class_of_base_vertex("x0"));
  CHECK(v1.dst_class(addr("t.2")) == v1.class_of_base_vertex("x1"));
  CHECK(v1.dst_class(addr("t.1")) != v1.src_class(addr("t.2")));

  SystemPtr ap = builtin("airplane");
  ExpansionGraph a1 = build_graph(Expansion(ap, {addr("T")}));
  CHECK(a1.origins.size() == 6);
  CHECK(a1.src_class(addr("T.a")) == a1.class_of_base_vertex("v2"));
  CHECK(a1.dst_class(addr("T.c")) == a1.class_of_base_vertex("v1"));
  CHECK(a1.src_class(addr("T.b")) == a1.dst_class(addr("T.a")));
}

TEST_CASE("deep vertex classes follow init and term images") {
  SystemPtr t = builtin("circle_T");
  // expanding t.1 reuses the classes at both ends of t.1
  ExpansionGraph g = build_graph(Expansion(t, {addr("t"), addr("t.1")}));
  CHECK(g.origins.size() == 3);
  int x0 = g.class_of_base_vertex("x0");
  CHECK(g.src_class(addr("t.1.1")) == x0);
  CHECK(g.dst_class(addr("t.1.2")) == g.src_class(addr("t.2")));
  CHECK(g.leaf_degree(x0) == 2);
}

TEST_CASE("cell unions stay sorted antichains") {
  CellUnion u({addr("t.2"), addr("t.1")}, CellKind::Closed);
  CHECK(to_string(u.addresses[0]) == "t.1");
  CHECK(u.kind == CellKind::Closed);
  CellUnion dedup({addr("t.1"), addr("t.1")}, CellKind::Interior);
  CHECK(dedup.addresses.size() == 1);
  CHECK_THROWS(CellUnion({addr("t"), addr("t.1")}, CellKind::Closed));
  CHECK(CellUnion().addresses.empty());
}

#include "doctest.h"
#include "rearrange/transitivity.hpp"

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

CellUnion closed(const std::vector<std::string>& xs) {
  std::vector<Address> as;
  for (const std::string& x : xs) as.push_back(addr(x));
  return CellUnion(as, CellKind::Closed);
}

std::vector<Address> cells_to_depth(SystemPtr sys, int depth) {
  std::vector<Address> out;
  std::vector<Address> frontier;
  for (const Edge& e : sys->base.edges)
    for (const Address& k : children(*sys, Address{{e.name}}))
      frontier.push_back(k);
  for (int d = 1; d <= depth; ++d) {
    out.insert(out.end(), frontier.begin(), frontier.end());
    std::vector<Address> next;
    for (const Address& a : frontier)
      for (const Address& k : children(*sys, a)) next.push_back(k);
    frontier = std::move(next);
  }
  return out;
}

}  // namespace

TEST_CASE("witness verification") {
  SystemPtr t = builtin("circle_T");
  CHECK(verify_witness(rot(t), closed({"t.1"}), addr("t.2")));
  CHECK_FALSE(verify_witness(Rearrangement::identity(t), closed({"t.1"}),
                             addr("t.2")));
  CHECK(verify_witness(gen_x(t), closed({"t.1.1"}), addr("t.1")));
}

TEST_CASE("complement of a union") {
  SystemPtr t = builtin("circle_T");
  CHECK(complement_cells(t, closed({"t.1"})) ==
        std::vector<Address>{addr("t.2")});
  CHECK(complement_cells(t, closed({"t.2", "t.1.2"})) ==
        std::vector<Address>{addr("t.1.1")});
  CHECK(complement_cells(t, closed({"t.1", "t.2"})).empty());
  CHECK(complement_cells(t, closed({"t"})).empty());
}

TEST_CASE("witness search finds the swap") {
  SystemPtr t = builtin("circle_T");
  auto g = find_witness(t, {closed({"t.1"}), addr("t.2"), 2});
  REQUIRE(g.has_value());
  CHECK(*g == rot(t));

  // deterministic across budgets
  auto g3 = find_witness(t, {closed({"t.1"}), addr("t.2"), 3});
  REQUIRE(g3.has_value());
  CHECK(*g3 == *g);
}

TEST_CASE("witness search moves a two cell union") {
  SystemPtr t = builtin("circle_T");
  CellUnion a = closed({"t.2", "t.1.2"});
  auto g = find_witness(t, {a, addr("t.1.1"), 4});
  REQUIRE(g.has_value());
  CHECK(verify_witness(*g, a, addr("t.1.1")));
  for (const Address& img : apply_cell(*g, a).addresses)
    CHECK(addr("t.1.1").is_prefix_of(img));
}

TEST_CASE("witness corner cases") {
  SystemPtr a = builtin("airplane");
  auto id = find_witness(a, {closed({"L"}), addr("L"), 0});
  REQUIRE(id.has_value());
  CHECK(id->is_identity());

  SystemPtr t = builtin("circle_T");
  CHECK_FALSE(find_witness(t, {closed({"t.1"}), addr("t.1.1"), 0}).has_value());
  CHECK_THROWS(find_witness(t, {closed({"t"}), addr("t.1"), 1}));
  CHECK_THROWS(find_witness(t, {closed({"t.1", "t.2"}), addr("t.1"), 1}));
}

TEST_CASE("single cells move anywhere on transitive systems") {
  for (const char* name : {"circle_T", "cantor_V"}) {
    SystemPtr sys = builtin(name);
    std::vector<Address> cells = cells_to_depth(sys, 2);
    for (const Address& a : cells)
      for (const Address& c : cells) {
        auto g = find_witness(sys, {CellUnion({a}, CellKind::Closed), c, 3});
        REQUIRE(g.has_value());
        CHECK(verify_witness(*g, CellUnion({a}, CellKind::Closed), c));
      }
  }
}

TEST_CASE("minimality evidence on the circle") {
  SystemPtr t = builtin("circle_T");
  MinimalityReport rep = minimality_evidence(t, {rot(t), gen_x(t)}, 2, 6);
  CHECK(rep.full_coverage);
  CHECK(rep.missed.empty());
  for (const Address& c : cells_to_depth(t, 2))
    CHECK(std::count(rep.reached.at(addr("t.1")).begin(),
                     rep.reached.at(addr("t.1")).end(), c) == 1);

  MinimalityReport lazy =
      minimality_evidence(t, {Rearrangement::identity(t)}, 1, 3);
  CHECK_FALSE(lazy.full_coverage);
  CHECK(lazy.reached.at(addr("t.1")) == std::vector<Address>{addr("t.1")});
  CHECK(lazy.missed == std::vector<Address>{addr("t.1"), addr("t.2")});
}

TEST_CASE("separated components stay separated") {
  SystemPtr d = builtin("double_circle");
  Rearrangement swap_t = Rearrangement::make(
      gpd(d, {"t"}, {"t"}, {{"t.1", "t.2"}, {"t.2", "t.1"}, {"u", "u"}}));
  MinimalityReport rep = minimality_evidence(d, {swap_t}, 1, 4);
  CHECK_FALSE(rep.full_coverage);
  CHECK(rep.reached.at(addr("t.1")) ==
        std::vector<Address>{addr("t.1"), addr("t.2")});
  for (const Address& m : {addr("u.1"), addr("u.2")})
    CHECK(std::count(rep.missed.begin(), rep.missed.end(), m) == 1);
}

#include "doctest.h"
#include "rearrange/nig.hpp"

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

NigConfig circle_demo() {
  SystemPtr t = builtin("circle_T");
  return {t, parse_lasso("t:(1.2)"), {gen_x(t), rot(t)}, 4, 6, 20};
}

NigConfig cantor_demo() {
  SystemPtr c = builtin("cantor_V");
  Rearrangement shift = Rearrangement::make(gpd(c, {"t", "t.1"}, {"t", "t.2"},
                                                {{"t.1.1", "t.1"},
                                                 {"t.1.2", "t.2.1"},
                                                 {"t.2", "t.2.2"}}));
  Rearrangement swap = Rearrangement::make(
      gpd(c, {"t"}, {"t"}, {{"t.1", "t.2"}, {"t.2", "t.1"}}));
  return {c, parse_lasso("t:(1.2)"), {shift, swap}, 4, 6, 20};
}

}  // namespace

TEST_CASE("nested cells along a point") {
  std::vector<Address> cs = build_nested_cells(parse_lasso("t:(1.2)"), 3);
  CHECK(cs == std::vector<Address>{addr("t.1"), addr("t.1.2"), addr("t.1.2.1")});
  for (std::size_t n = 0; n + 1 < cs.size(); ++n)
    CHECK(cs[n].is_prefix_of(cs[n + 1]));

  CHECK(build_nested_cells(parse_lasso("t:(1)"), 2) ==
        std::vector<Address>{addr("t.1"), addr("t.1.1")});
  CHECK_THROWS(build_nested_cells(parse_lasso("t:(1)"), 1));
}

TEST_CASE("interior complements") {
  SystemPtr t = builtin("circle_T");
  CHECK(interior_complement(t, addr("t.1"), addr("t.1.2")) ==
        closed({"t.1.2", "t.2"}));
  CHECK(interior_complement(t, addr("t.1.2"), addr("t.1.2.1")) ==
        closed({"t.1.1", "t.1.2.1", "t.2"}));
  CHECK_THROWS(interior_complement(t, addr("t.1"), addr("t.2")));
  CHECK_THROWS(interior_complement(t, addr("t.1"), addr("t.1")));

  SystemPtr c = builtin("cantor_V");
  CHECK(interior_complement(c, addr("t.1"), addr("t.1.2")) ==
        closed({"t.1.2", "t.2"}));
}

TEST_CASE("conjugating elements into wandering position") {
  SystemPtr t = builtin("circle_T");
  CellUnion a = closed({"t.2", "t.1.2"});

  NigConjugator c1 = conjugate_into_wandering(gen_x(t), a, 6, 20);
  CHECK(c1.gamma == conjugate(gen_x(t), c1.h));
  CHECK(c1.cert.kind == WanderingKind::Wandering);
  CHECK(c1.cert.verified_to == 20);
  // the inverse of h is the witness pushing a inside the wandering cell
  CHECK(verify_witness(invert(c1.h), a, addr("t.2.1.1.2")));
  CHECK(verify_wandering(c1.gamma, c1.cert, 20));

  NigConjugator c2 = conjugate_into_wandering(rot(t), closed({"t.2"}), 4, 8);
  CHECK(c2.gamma == conjugate(rot(t), c2.h));
  CHECK(c2.cert.kind == WanderingKind::WeaklyWandering);
  CHECK(verify_wandering(c2.gamma, c2.cert, 8));

  CHECK_THROWS(conjugate_into_wandering(gen_x(t), closed({"t.1", "t.2"}), 4, 4));
  CHECK_THROWS(conjugate_into_wandering(gen_x(t), a, 0, 4));
}

TEST_CASE("the circle demonstration") {
  NigConfig cfg = circle_demo();
  NigResult res = nig_report(cfg);

  CHECK(res.passed);
  CHECK(res.cells ==
        std::vector<Address>{addr("t.1"), addr("t.1.2"), addr("t.1.2.1")});
  CHECK(res.i_complements ==
        std::vector<CellUnion>{closed({"t.1.2", "t.2"}),
                               closed({"t.1.1", "t.1.2.1", "t.2"})});
  CHECK(res.avoided_cell == addr("t.1.2.1.1.2"));
  REQUIRE(res.conjugators.size() == 2);
  for (std::size_t i = 0; i < 2; ++i)
    CHECK(res.conjugators[i].gamma ==
          conjugate(cfg.elements[i], res.conjugators[i].h));

  REQUIRE_FALSE(res.pingpong_log.empty());
  CHECK(res.pingpong_log.front().word == std::vector<int>{1});
  for (const OrbitRecord& rec : res.pingpong_log) {
    CHECK(rec.ok);
    std::size_t i = std::abs(rec.word.back());
    CHECK(point_in_cell(cfg.sys, rec.point, res.cells[i - 1]) ==
          CellPosition::Interior);
    CHECK(point_in_cell(cfg.sys, rec.point, res.cells[i]) ==
          CellPosition::Outside);
  }

  // a longer run keeps every minimal word it already found
  NigResult res5 = res;
  NigConfig cfg5 = cfg;
  cfg5.word_bound = 5;
  pingpong_check(cfg5, res5);
  CHECK(res5.passed);
  REQUIRE(res5.pingpong_log.size() >= res.pingpong_log.size());
  for (std::size_t j = 0; j < res.pingpong_log.size(); ++j) {
    CHECK(res5.pingpong_log[j].word == res.pingpong_log[j].word);
    CHECK(point_eq(cfg.sys, res5.pingpong_log[j].point,
                   res.pingpong_log[j].point));
  }

  NigResult res0 = res;
  NigConfig cfg0 = cfg;
  cfg0.word_bound = 0;
  pingpong_check(cfg0, res0);
  CHECK(res0.passed);
  CHECK(res0.pingpong_log.empty());
}

TEST_CASE("sabotage is detected") {
  NigConfig cfg = circle_demo();
  NigResult res = nig_report(cfg);
  res.conjugators[0].gamma = cfg.elements[0];
  pingpong_check(cfg, res);
  CHECK_FALSE(res.passed);
  REQUIRE_FALSE(res.pingpong_log.empty());
  const OrbitRecord& bad = res.pingpong_log.front();
  CHECK_FALSE(bad.ok);
  CHECK(bad.word == std::vector<int>{1});
  CHECK_FALSE(bad.note.empty());
}

TEST_CASE("the cantor demonstration") {
  NigConfig cfg = cantor_demo();
  NigResult res = nig_report(cfg);
  CHECK(res.passed);
  CHECK(res.cells ==
        std::vector<Address>{addr("t.1"), addr("t.1.2"), addr("t.1.2.1")});
  CHECK(res.avoided_cell == addr("t.1.2.1.1"));
  for (const OrbitRecord& rec : res.pingpong_log) CHECK(rec.ok);

  NigResult broken = res;
  broken.conjugators[0].gamma = cfg.elements[0];
  pingpong_check(cfg, broken);
  CHECK_FALSE(broken.passed);
}

TEST_CASE("configuration guards") {
  SystemPtr t = builtin("circle_T");
  NigConfig empty{t, parse_lasso("t:(1.2)"), {}, 4, 6, 20};
  CHECK_THROWS(nig_report(empty));

  NigConfig trivial{t, parse_lasso("t:(1.2)"), {Rearrangement::identity(t)},
                    4, 6, 20};
  CHECK_THROWS(nig_report(trivial));

  NigConfig bad_point{t, parse_lasso("t:(3)"), {rot(t)}, 4, 6, 20};
  CHECK_THROWS(nig_report(bad_point));
}

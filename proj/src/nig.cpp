#include "rearrange/nig.hpp"

#include <stdexcept>

namespace rearrange {

std::vector<Address> build_nested_cells(const LassoPoint& p,
                                        std::size_t count) {
  if (count < 2) throw std::invalid_argument("need at least two nested cells");
  std::vector<Address> out;
  for (std::size_t n = 1; n <= count; ++n)
    out.push_back(Address{unroll(p, n + 1)});
  return out;
}

CellUnion interior_complement(const SystemPtr& sys, const Address& cell,
                              const Address& next) {
  if (!cell.is_prefix_of(next) || next == cell)
    throw std::invalid_argument("next cell must sit strictly below " +
                                to_string(cell));
  std::set<Address> carets;
  for (std::size_t k = 1; k < cell.size(); ++k)
    carets.insert(Address{{cell.symbols.begin(), cell.symbols.begin() + k}});
  Expansion e(sys, std::move(carets));
  std::vector<Address> cells;
  for (const Address& leaf : e.leaves())
    if (leaf != cell) cells.push_back(leaf);
  cells.push_back(next);
  return CellUnion(std::move(cells), CellKind::Closed);
}

NigConjugator conjugate_into_wandering(const Rearrangement& g,
                                       const CellUnion& a, int witness_budget,
                                       unsigned long wander_bound) {
  WanderingCertificate cert = wandering_cell(g);
  const SystemPtr& sys = g.diagram().domain.system();
  Address target = cell_inside_interior(sys, cert.set.addresses.front());
  auto w = find_witness(sys, {a, target, witness_budget});
  if (!w)
    throw std::runtime_error("no witness moves the complement inside " +
                             to_string(target) + " within budget " +
                             std::to_string(witness_budget));
  Rearrangement h = invert(*w);
  NigConjugator out{conjugate(g, h), h, cert};
  out.cert.set = apply_cell(h, cert.set);
  if (!verify_wandering(out.gamma, out.cert, wander_bound))
    throw std::logic_error("conjugated certificate failed to verify");
  out.cert.verified_to = wander_bound;
  return out;
}

void pingpong_check(const NigConfig& cfg, NigResult& result) {
  result.pingpong_log.clear();
  result.passed = true;
  const SystemPtr& sys = cfg.sys;
  const std::size_t k = result.conjugators.size();

  std::vector<Rearrangement> letters;
  for (const NigConjugator& c : result.conjugators) {
    letters.push_back(c.gamma);
    letters.push_back(invert(c.gamma));
  }

  struct State {
    LassoPoint point;
    std::vector<int> word;
  };
  LassoPoint start = canonical_lasso(*sys, cfg.p);
  std::vector<LassoPoint> seen{start};
  auto known = [&](const LassoPoint& q) {
    for (const LassoPoint& s : seen)
      if (point_eq(sys, s, q)) return true;
    return false;
  };

  std::vector<State> frontier{{start, {}}};
  for (int step = 0; step < cfg.word_bound; ++step) {
    std::vector<State> next;
    for (const State& st : frontier)
      for (std::size_t i = 1; i <= k; ++i)
        for (int sign : {1, -1}) {
          int letter = sign * static_cast<int>(i);
          if (!st.word.empty() && st.word.back() == -letter) continue;
          LassoPoint q = canonical_lasso(
              *sys, apply_point(letters[2 * (i - 1) + (sign < 0)], st.point));
          if (known(q)) continue;
          seen.push_back(q);
          std::vector<int> word = st.word;
          word.push_back(letter);
          OrbitRecord rec{word, q, true, ""};
          if (point_in_cell(sys, q, result.cells[i - 1]) !=
                  CellPosition::Interior ||
              point_in_cell(sys, q, result.cells[i]) !=
                  CellPosition::Outside) {
            rec.ok = false;
            rec.note = "escapes pocket " + std::to_string(i);
          } else if (point_in_cell(sys, q, result.avoided_cell) !=
                     CellPosition::Outside) {
            rec.ok = false;
            rec.note = "touches the avoided cell";
          }
          result.passed = result.passed && rec.ok;
          result.pingpong_log.push_back(rec);
          next.push_back({q, std::move(word)});
        }
    frontier = std::move(next);
  }
}

NigResult nig_report(const NigConfig& cfg) {
  if (cfg.elements.empty())
    throw std::invalid_argument("at least one element is required");
  validate_lasso(*cfg.sys, cfg.p);
  for (const Rearrangement& g : cfg.elements)
    if (g.is_identity())
      throw std::invalid_argument("elements must not be the identity");

  const std::size_t k = cfg.elements.size();
  NigResult result;
  result.cells = build_nested_cells(cfg.p, k + 1);
  for (std::size_t n = 0; n < k; ++n)
    result.i_complements.push_back(
        interior_complement(cfg.sys, result.cells[n], result.cells[n + 1]));
  for (std::size_t i = 0; i < k; ++i)
    result.conjugators.push_back(
        conjugate_into_wandering(cfg.elements[i], result.i_complements[i],
                                 cfg.witness_budget, cfg.wander_bound));
  result.avoided_cell = cell_inside_interior(
      cfg.sys, result.cells[k], {canonical_lasso(*cfg.sys, cfg.p)});
  pingpong_check(cfg, result);
  return result;
}

}  // namespace rearrange

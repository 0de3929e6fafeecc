#include "rearrange/transitivity.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace rearrange {

namespace {

// backtracking bijection search that keeps every image of the moved union
// inside the target subtree
struct WitnessSearch {
  const GraphPairDiagram* base;
  const std::vector<Address>* dl;
  const std::vector<Address>* rl;
  const ExpansionGraph* gd;
  const ExpansionGraph* gr;
  const ReplacementSystem* sys;
  const CellUnion* cells;
  const Address* target;
  std::vector<int> fwd;
  std::vector<int> bwd;
  std::vector<bool> used;
  std::map<Address, Address> sigma;

  bool image_ok(const Address& from, const Address& to) const {
    for (const Address& a : cells->addresses) {
      if (from.is_prefix_of(a)) {
        Address img = to;
        img.symbols.insert(img.symbols.end(), a.symbols.begin() + from.size(),
                           a.symbols.end());
        if (!target->is_prefix_of(img)) return false;
      } else if (a.is_prefix_of(from) && !target->is_prefix_of(to)) {
        return false;
      }
    }
    return true;
  }

  bool relate(int a, int b, std::vector<std::pair<int, int>>& undo) {
    if (fwd[a] == -1 && bwd[b] == -1) {
      fwd[a] = b;
      bwd[b] = a;
      undo.emplace_back(a, b);
      return true;
    }
    return fwd[a] == b && bwd[b] == a;
  }

  std::optional<Rearrangement> run(std::size_t i) {
    if (i == dl->size()) {
      GraphPairDiagram d{base->domain, base->range, sigma};
      if (!diagram_problems(d).empty()) return std::nullopt;
      Rearrangement g = Rearrangement::make(std::move(d));
      if (verify_witness(g, *cells, *target)) return g;
      return std::nullopt;
    }
    const Address& from = (*dl)[i];
    auto [s, t] = gd->node_ends.at(from);
    for (std::size_t j = 0; j < rl->size(); ++j) {
      if (used[j]) continue;
      const Address& to = (*rl)[j];
      if (color_of(*sys, from) != color_of(*sys, to)) continue;
      if (!image_ok(from, to)) continue;
      auto [s2, t2] = gr->node_ends.at(to);
      std::vector<std::pair<int, int>> undo;
      if (relate(s, s2, undo) && relate(t, t2, undo)) {
        used[j] = true;
        sigma[from] = to;
        if (auto found = run(i + 1)) return found;
        sigma.erase(from);
        used[j] = false;
      }
      for (auto [a, b] : undo) {
        fwd[a] = -1;
        bwd[b] = -1;
      }
    }
    return std::nullopt;
  }
};

void validate_union(const SystemPtr& sys, const CellUnion& cells) {
  if (cells.addresses.empty())
    throw std::invalid_argument("empty cell union");
  for (const Address& a : cells.addresses)
    if (!valid_address(*sys, a))
      throw std::invalid_argument("invalid address " + to_string(a));
}

}  // namespace

std::vector<Address> complement_cells(const SystemPtr& sys,
                                      const CellUnion& cells) {
  validate_union(sys, cells);
  std::set<Address> carets;
  for (const Address& a : cells.addresses)
    for (std::size_t k = 1; k < a.size(); ++k)
      carets.insert(Address{{a.symbols.begin(), a.symbols.begin() + k}});
  Expansion e(sys, std::move(carets));
  std::set<Address> in(cells.addresses.begin(), cells.addresses.end());
  std::vector<Address> out;
  for (const Address& leaf : e.leaves())
    if (in.count(leaf) == 0) out.push_back(leaf);
  std::sort(out.begin(), out.end());
  return out;
}

bool verify_witness(const Rearrangement& g, const CellUnion& cells,
                    const Address& target) {
  for (const Address& a : apply_cell(g, cells).addresses)
    if (!target.is_prefix_of(a)) return false;
  return true;
}

std::optional<Rearrangement> find_witness(const SystemPtr& sys,
                                          const WitnessQuery& q) {
  validate_union(sys, q.cells);
  if (!valid_address(*sys, q.target))
    throw std::invalid_argument("invalid address " + to_string(q.target));
  if (complement_cells(sys, q.cells).empty())
    throw std::invalid_argument("cell union covers the whole space");

  Rearrangement id = Rearrangement::identity(sys);
  if (verify_witness(id, q.cells, q.target)) return id;

  std::vector<std::vector<Expansion>> by_size(q.budget + 1);
  for (Expansion& e : enumerate_expansions(sys, q.budget)) {
    std::size_t n = e.carets().size();
    by_size[n].push_back(std::move(e));
  }

  for (int total = 0; total <= 2 * q.budget; ++total)
    for (int nd = std::max(0, total - q.budget); nd <= std::min(q.budget, total);
         ++nd)
      for (const Expansion& dom : by_size[nd]) {
        std::vector<Address> dl = dom.leaves();
        std::sort(dl.begin(), dl.end());
        ExpansionGraph gd = build_graph(dom);
        for (const Expansion& ran : by_size[total - nd]) {
          std::vector<Address> rl = ran.leaves();
          if (rl.size() != dl.size()) continue;
          std::sort(rl.begin(), rl.end());
          ExpansionGraph gr = build_graph(ran);
          if (gr.origins.size() != gd.origins.size()) continue;
          GraphPairDiagram base{dom, ran, {}};
          WitnessSearch search{&base,
                               &dl,
                               &rl,
                               &gd,
                               &gr,
                               sys.get(),
                               &q.cells,
                               &q.target,
                               std::vector<int>(gd.origins.size(), -1),
                               std::vector<int>(gr.origins.size(), -1),
                               std::vector<bool>(rl.size(), false),
                               {}};
          if (auto found = search.run(0)) return found;
        }
      }
  return std::nullopt;
}

MinimalityReport minimality_evidence(
    const SystemPtr& sys, const std::vector<Rearrangement>& generators,
    int depth, int steps) {
  if (generators.empty()) throw std::invalid_argument("no generators");

  std::vector<Address> starts;
  for (const Edge& e : sys->base.edges)
    for (const Address& k : children(*sys, Address{{e.name}}))
      starts.push_back(k);
  std::sort(starts.begin(), starts.end());

  std::vector<Address> targets;
  std::vector<Address> frontier = starts;
  for (int d = 1; d <= depth; ++d) {
    targets.insert(targets.end(), frontier.begin(), frontier.end());
    std::vector<Address> next;
    for (const Address& a : frontier)
      for (const Address& k : children(*sys, a)) next.push_back(k);
    frontier = std::move(next);
  }
  std::sort(targets.begin(), targets.end());

  std::vector<Rearrangement> moves;
  for (const Rearrangement& g : generators) {
    moves.push_back(g);
    moves.push_back(invert(g));
  }

  MinimalityReport rep;
  rep.full_coverage = true;
  std::set<Address> missed;
  for (const Address& start : starts) {
    std::set<std::vector<Address>> seen;
    std::set<Address> touched;
    std::deque<CellUnion> queue{CellUnion({start}, CellKind::Closed)};
    seen.insert(queue.front().addresses);
    for (int step = 0; step <= steps && !queue.empty(); ++step) {
      std::deque<CellUnion> next;
      for (const CellUnion& u : queue) {
        touched.insert(u.addresses.begin(), u.addresses.end());
        if (step == steps) continue;
        for (const Rearrangement& g : moves) {
          CellUnion image = apply_cell(g, u);
          if (seen.insert(image.addresses).second) next.push_back(image);
        }
      }
      queue = std::move(next);
    }
    std::vector<Address> got;
    for (const Address& t : targets) {
      bool hit = false;
      for (const Address& a : touched)
        if (a.is_prefix_of(t) || t.is_prefix_of(a)) {
          hit = true;
          break;
        }
      if (hit) {
        got.push_back(t);
      } else {
        missed.insert(t);
        rep.full_coverage = false;
      }
    }
    rep.reached[start] = std::move(got);
  }
  rep.missed.assign(missed.begin(), missed.end());
  return rep;
}

}  // namespace rearrange

#include "rearrange/diagram.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

#include "rearrange/serialization.hpp"

namespace rearrange {

namespace {

std::map<int, int> induced_class_map(const GraphPairDiagram& d,
                                     const ExpansionGraph& gd,
                                     const ExpansionGraph& gr,
                                     std::vector<std::string>* problems) {
  std::map<int, int> fwd;
  std::map<int, int> bwd;
  auto relate = [&](int a, int b, const Address& at) {
    auto f = fwd.find(a);
    if (f == fwd.end()) {
      fwd[a] = b;
    } else if (f->second != b) {
      if (problems)
        problems->push_back("vertex classes inconsistent at " + to_string(at));
      return false;
    }
    auto g = bwd.find(b);
    if (g == bwd.end()) {
      bwd[b] = a;
    } else if (g->second != a) {
      if (problems)
        problems->push_back("vertex class map not injective at " +
                            to_string(at));
      return false;
    }
    return true;
  };
  for (const auto& [from, to] : d.sigma) {
    auto [s, t] = gd.node_ends.at(from);
    auto [s2, t2] = gr.node_ends.at(to);
    if (!relate(s, s2, from) || !relate(t, t2, from)) break;
  }
  return fwd;
}

}  // namespace

std::vector<std::string> diagram_problems(const GraphPairDiagram& d) {
  std::vector<std::string> out;
  if (d.domain.system() != d.range.system()) {
    out.push_back("domain and range use different systems");
    return out;
  }
  std::vector<Address> dl = d.domain.leaves();
  std::vector<Address> rl = d.range.leaves();
  std::set<Address> unused(rl.begin(), rl.end());
  for (const Address& leaf : dl)
    if (!d.sigma.count(leaf)) {
      out.push_back("sigma misses domain leaf " + to_string(leaf));
      return out;
    }
  for (const auto& [from, to] : d.sigma) {
    if (!d.domain.is_leaf(from)) {
      out.push_back("sigma maps non-leaf " + to_string(from));
      return out;
    }
    if (!unused.erase(to)) {
      out.push_back("sigma images are not the range leaves");
      return out;
    }
  }
  if (!unused.empty()) {
    out.push_back("sigma images are not the range leaves");
    return out;
  }
  const ReplacementSystem& sys = *d.system();
  for (const auto& [from, to] : d.sigma)
    if (color_of(sys, from) != color_of(sys, to)) {
      out.push_back("color mismatch at " + to_string(from));
      return out;
    }
  ExpansionGraph gd = build_graph(d.domain);
  ExpansionGraph gr = build_graph(d.range);
  std::map<int, int> fwd = induced_class_map(d, gd, gr, &out);
  if (!out.empty()) return out;
  if (fwd.size() != gd.origins.size() || fwd.size() != gr.origins.size())
    out.push_back("vertex class map is not a bijection");
  return out;
}

std::vector<std::pair<Address, Address>> reducible_pairs(
    const GraphPairDiagram& d) {
  std::vector<std::pair<Address, Address>> out;
  const ReplacementSystem& sys = *d.system();
  for (const Address& caret : d.domain.carets()) {
    std::vector<Address> kids = children(sys, caret);
    bool all_leaves = true;
    for (const Address& k : kids)
      if (!d.domain.is_leaf(k)) all_leaves = false;
    if (!all_leaves) continue;
    const Address& first_img = d.sigma.at(kids[0]);
    if (first_img.size() < 2) continue;
    Address target = first_img.parent();
    if (!d.range.is_caret(target)) continue;
    if (color_of(sys, caret) != color_of(sys, target)) continue;
    std::vector<Address> target_kids = children(sys, target);
    if (target_kids.size() != kids.size()) continue;
    bool match = true;
    for (std::size_t i = 0; i < kids.size() && match; ++i)
      match = d.sigma.at(kids[i]) == target_kids[i];
    if (match) out.emplace_back(caret, target);
  }
  return out;
}

bool reduce_once(GraphPairDiagram& d) {
  auto pairs = reducible_pairs(d);
  if (pairs.empty()) return false;
  auto [e, e2] = pairs.front();
  std::set<Address> dc = d.domain.carets();
  std::set<Address> rc = d.range.carets();
  dc.erase(e);
  rc.erase(e2);
  for (const Address& k : children(*d.system(), e)) d.sigma.erase(k);
  d.sigma[e] = e2;
  d.domain = Expansion(d.domain.system(), std::move(dc));
  d.range = Expansion(d.range.system(), std::move(rc));
  return true;
}

GraphPairDiagram reduce(GraphPairDiagram d) {
  while (reduce_once(d)) {
  }
  return d;
}

void expand_pair(GraphPairDiagram& d, Address domain_leaf) {
  auto it = d.sigma.find(domain_leaf);
  if (it == d.sigma.end())
    throw std::runtime_error("not a domain leaf: " + to_string(domain_leaf));
  Address image = it->second;
  d.domain = d.domain.expanded_at(domain_leaf);
  d.range = d.range.expanded_at(image);
  d.sigma.erase(domain_leaf);
  const ReplacementGraph& rule =
      d.system()->rule(color_of(*d.system(), domain_leaf));
  for (const Edge& e : rule.graph.edges)
    d.sigma[domain_leaf.child(e.name)] = image.child(e.name);
}

void expand_range_pair(GraphPairDiagram& d, Address range_leaf) {
  for (const auto& [from, to] : d.sigma)
    if (to == range_leaf) {
      expand_pair(d, from);
      return;
    }
  throw std::runtime_error("not a range leaf: " + to_string(range_leaf));
}

Rearrangement::Rearrangement(GraphPairDiagram d) : d_(std::move(d)) {}

Rearrangement Rearrangement::make(GraphPairDiagram d) {
  std::vector<std::string> problems = diagram_problems(d);
  if (!problems.empty())
    throw std::runtime_error("invalid diagram: " + problems.front());
  return Rearrangement(reduce(std::move(d)));
}

Rearrangement Rearrangement::identity(SystemPtr sys) {
  GraphPairDiagram d{Expansion::base(sys), Expansion::base(sys), {}};
  for (const Edge& e : sys->base.edges) {
    Address a{{e.name}};
    d.sigma[a] = a;
  }
  return Rearrangement(std::move(d));
}

bool Rearrangement::is_identity() const {
  if (!d_.domain.carets().empty() || !d_.range.carets().empty()) return false;
  for (const auto& [from, to] : d_.sigma)
    if (from != to) return false;
  return true;
}

bool Rearrangement::operator<(const Rearrangement& other) const {
  auto key = [](const Rearrangement& r) {
    return std::tie(r.d_.domain.carets(), r.d_.range.carets(), r.d_.sigma);
  };
  return key(*this) < key(other);
}

Rearrangement compose(const Rearrangement& g, const Rearrangement& h) {
  if (g.system() != h.system())
    throw std::runtime_error("composing over different systems");
  GraphPairDiagram a = g.diagram();
  GraphPairDiagram b = h.diagram();
  Expansion common = common_refinement(a.range, b.domain);
  // missing carets arrive in lex order, so each is a leaf when processed
  for (const Address& c : common.carets()) {
    if (!a.range.is_caret(c)) expand_range_pair(a, c);
    if (!b.domain.is_caret(c)) expand_pair(b, c);
  }
  GraphPairDiagram out{a.domain, b.range, {}};
  for (const auto& [from, mid] : a.sigma) out.sigma[from] = b.sigma.at(mid);
  return Rearrangement::make(std::move(out));
}

Rearrangement invert(const Rearrangement& g) {
  GraphPairDiagram d = g.diagram();
  GraphPairDiagram out{d.range, d.domain, {}};
  for (const auto& [from, to] : d.sigma) out.sigma[to] = from;
  return Rearrangement::make(std::move(out));
}

Rearrangement power(const Rearrangement& g, long n) {
  if (n < 0) return power(invert(g), -n);
  Rearrangement acc = Rearrangement::identity(g.system());
  Rearrangement base = g;
  while (n > 0) {
    if (n & 1) acc = compose(acc, base);
    n >>= 1;
    if (n) base = compose(base, base);
  }
  return acc;
}

Rearrangement conjugate(const Rearrangement& g, const Rearrangement& h) {
  return compose(compose(invert(h), g), h);
}

CellUnion apply_cell(const Rearrangement& g, const CellUnion& cells) {
  const GraphPairDiagram& d = g.diagram();
  std::vector<Address> out;
  std::vector<Address> leaves = d.domain.leaves();
  for (const Address& a : cells.addresses) {
    bool matched = false;
    for (const Address& leaf : leaves) {
      if (leaf.is_prefix_of(a)) {
        Address img = d.sigma.at(leaf);
        img.symbols.insert(img.symbols.end(),
                           a.symbols.begin() + leaf.size(), a.symbols.end());
        out.push_back(img);
        matched = true;
        break;
      }
    }
    if (matched) continue;
    for (const Address& leaf : leaves)
      if (a.is_prefix_of(leaf)) {
        out.push_back(d.sigma.at(leaf));
        matched = true;
      }
    if (!matched)
      throw std::runtime_error("address outside the expansion tree: " +
                               to_string(a));
  }
  return CellUnion(std::move(out), cells.kind);
}

LassoPoint apply_point(const Rearrangement& g, const LassoPoint& p) {
  const ReplacementSystem& sys = *g.system();
  LassoPoint cp = canonical_lasso(sys, p);
  const GraphPairDiagram& d = g.diagram();
  std::size_t longest = 1;
  for (const Address& leaf : d.domain.leaves())
    longest = std::max(longest, leaf.size());
  std::size_t len = cp.prefix.size();
  while (len < longest) len += cp.cycle.size();
  std::vector<std::string> path = unroll(cp, len);
  for (const Address& leaf : d.domain.leaves()) {
    if (!leaf.is_prefix_of(Address{path})) continue;
    LassoPoint image;
    image.prefix = d.sigma.at(leaf).symbols;
    image.prefix.insert(image.prefix.end(), path.begin() + leaf.size(),
                        path.end());
    image.cycle = cp.cycle;
    return canonical_lasso(sys, image);
  }
  throw std::runtime_error("point escapes the domain expansion");
}

CellUnion fixed_cells(const Rearrangement& g) {
  std::vector<Address> out;
  for (const auto& [from, to] : g.diagram().sigma)
    if (from == to) out.push_back(from);
  return CellUnion(std::move(out), CellKind::Closed);
}

namespace {

struct SigmaSearch {
  const GraphPairDiagram* base;
  const std::vector<Address>* dl;
  const std::vector<Address>* rl;
  const ExpansionGraph* gd;
  const ExpansionGraph* gr;
  const ReplacementSystem* sys;
  std::vector<int> fwd;
  std::vector<int> bwd;
  std::vector<bool> used;
  std::map<Address, Address> sigma;
  std::vector<Rearrangement>* out;

  bool relate(int a, int b, std::vector<std::pair<int, int>>& undo) {
    if (fwd[a] == -1 && bwd[b] == -1) {
      fwd[a] = b;
      bwd[b] = a;
      undo.emplace_back(a, b);
      return true;
    }
    return fwd[a] == b && bwd[b] == a;
  }

  void run(std::size_t i) {
    if (i == dl->size()) {
      GraphPairDiagram d{base->domain, base->range, sigma};
      if (diagram_problems(d).empty())
        out->push_back(Rearrangement::make(std::move(d)));
      return;
    }
    const Address& from = (*dl)[i];
    auto [s, t] = gd->node_ends.at(from);
    for (std::size_t j = 0; j < rl->size(); ++j) {
      if (used[j]) continue;
      const Address& to = (*rl)[j];
      if (color_of(*sys, from) != color_of(*sys, to)) continue;
      auto [s2, t2] = gr->node_ends.at(to);
      std::vector<std::pair<int, int>> undo;
      if (relate(s, s2, undo) && relate(t, t2, undo)) {
        used[j] = true;
        sigma[from] = to;
        run(i + 1);
        sigma.erase(from);
        used[j] = false;
      }
      for (auto [a, b] : undo) {
        fwd[a] = -1;
        bwd[b] = -1;
      }
    }
  }
};

}  // namespace

std::vector<Rearrangement> enumerate_elements(SystemPtr sys,
                                              int carets_per_side) {
  std::vector<Expansion> shapes = enumerate_expansions(sys, carets_per_side);
  std::vector<Rearrangement> found;
  for (const Expansion& dom : shapes) {
    std::vector<Address> dl = dom.leaves();
    ExpansionGraph gd = build_graph(dom);
    for (const Expansion& ran : shapes) {
      std::vector<Address> rl = ran.leaves();
      if (rl.size() != dl.size()) continue;
      ExpansionGraph gr = build_graph(ran);
      if (gr.origins.size() != gd.origins.size()) continue;
      GraphPairDiagram base{dom, ran, {}};
      SigmaSearch search{&base,
                         &dl,
                         &rl,
                         &gd,
                         &gr,
                         sys.get(),
                         std::vector<int>(gd.origins.size(), -1),
                         std::vector<int>(gr.origins.size(), -1),
                         std::vector<bool>(rl.size(), false),
                         {},
                         &found};
      search.run(0);
    }
  }
  std::vector<std::pair<std::string, Rearrangement>> keyed;
  keyed.reserve(found.size());
  for (Rearrangement& g : found)
    keyed.emplace_back(serialize_diagram(g.diagram()), std::move(g));
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  found.clear();
  for (std::size_t i = 0; i < keyed.size(); ++i)
    if (i == 0 || keyed[i].first != keyed[i - 1].first)
      found.push_back(std::move(keyed[i].second));
  return found;
}

DeltaReport forest_delta(const GraphPairDiagram& d) {
  DeltaReport r;
  for (const Address& c : d.domain.carets())
    if (!d.range.is_caret(c)) r.domain_extra.insert(c);
  for (const Address& c : d.range.carets())
    if (!d.domain.is_caret(c)) r.range_extra.insert(c);
  auto split = [](const std::set<Address>& diff) {
    std::vector<DeltaComponent> comps;
    std::map<Address, std::size_t> owner;
    for (const Address& c : diff) {
      if (c.size() >= 2 && diff.count(c.parent())) {
        std::size_t idx = owner.at(c.parent());
        comps[idx].carets.insert(c);
        owner[c] = idx;
      } else {
        owner[c] = comps.size();
        comps.push_back(DeltaComponent{c, {c}});
      }
    }
    return comps;
  };
  r.domain_components = split(r.domain_extra);
  r.range_components = split(r.range_extra);
  return r;
}

std::pair<std::size_t, std::size_t> imbalance(const GraphPairDiagram& d) {
  DeltaReport r = forest_delta(d);
  return {r.domain_extra.size(), r.range_extra.size()};
}

}  // namespace rearrange

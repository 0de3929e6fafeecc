#include "rearrange/canonical.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace rearrange {

namespace {

std::map<Address, int> component_index(
    const std::vector<DeltaComponent>& comps) {
  std::map<Address, int> idx;
  for (int i = 0; i < static_cast<int>(comps.size()); ++i)
    for (const Address& c : comps[i].carets) idx[c] = i;
  return idx;
}

std::tuple<std::size_t, std::size_t, std::size_t> measure(
    const GraphPairDiagram& d) {
  DeltaReport delta = forest_delta(d);
  return {delta.domain_extra.size(), delta.domain_components.size(),
          delta.range_components.size()};
}

}  // namespace

std::vector<Violation> find_violations(const GraphPairDiagram& d) {
  DeltaReport delta = forest_delta(d);
  std::map<Address, int> dcomp = component_index(delta.domain_components);
  std::map<Address, int> rcomp = component_index(delta.range_components);

  // u1 below the range forest means its parent caret is domain-only, and
  // symmetrically for the final image below the domain forest
  auto classify = [&](const Address& u1, const Address& s) {
    bool u1_caret_r = d.range.is_caret(u1);
    bool s_caret_d = d.domain.is_caret(s);
    if (u1_caret_r && s_caret_d) return 1;
    if (s_caret_d && !d.range.is_node(u1) &&
        dcomp.at(s) != dcomp.at(u1.parent()))
      return 2;
    if (u1_caret_r && !d.domain.is_node(s) &&
        rcomp.at(u1) != rcomp.at(s.parent()))
      return 3;
    return 0;
  };

  std::vector<Violation> out;
  for (const auto& entry : d.sigma) {
    const Address& u1 = entry.first;
    std::vector<Address> seq{u1};
    std::set<Address> seen{u1};
    for (;;) {
      Address s = d.sigma.at(seq.back());
      if (seen.count(s)) break;
      if (int lemma = classify(u1, s); lemma != 0) out.push_back({lemma, seq});
      if (d.sigma.count(s) == 0) break;
      seq.push_back(s);
      seen.insert(s);
    }
  }
  std::sort(out.begin(), out.end(),
            [](const Violation& a, const Violation& b) {
              return std::tie(a.lemma, a.seq) < std::tie(b.lemma, b.seq);
            });
  return out;
}

ForestShape component_shape(const DeltaComponent& comp) {
  ForestShape shape;
  for (const Address& c : comp.carets) {
    if (!comp.root.is_prefix_of(c))
      throw std::logic_error("component caret above its root");
    shape.insert(std::vector<std::string>(c.symbols.begin() + comp.root.size(),
                                          c.symbols.end()));
  }
  return shape;
}

GraphPairDiagram iterated_expansion(GraphPairDiagram d,
                                    const std::vector<Address>& seq,
                                    const ForestShape& shape) {
  if (shape.count({}) == 0)
    throw std::invalid_argument("shape must contain its root");
  for (const Address& u : seq)
    for (const std::vector<std::string>& rel : shape) {
      Address a = u;
      a.symbols.insert(a.symbols.end(), rel.begin(), rel.end());
      expand_pair(d, a);
    }
  return d;
}

CanonicalElement canonicalize(const Rearrangement& g) {
  GraphPairDiagram d = g.diagram();
  std::vector<Violation> fixes;
  for (;;) {
    std::vector<Violation> vs = find_violations(d);
    if (vs.empty()) break;
    const Violation& v = vs.front();
    Address root = v.lemma == 3 ? v.seq.front() : d.sigma.at(v.seq.back());
    DeltaReport delta = forest_delta(d);
    const std::vector<DeltaComponent>& comps =
        v.lemma == 3 ? delta.range_components : delta.domain_components;
    auto it = std::find_if(
        comps.begin(), comps.end(),
        [&](const DeltaComponent& c) { return c.root == root; });
    if (it == comps.end())
      throw std::logic_error("violation component missing: " +
                             to_string(root));
    auto before = measure(d);
    d = iterated_expansion(std::move(d), v.seq, component_shape(*it));
    if (!(measure(d) < before))
      throw std::logic_error("canonical measure failed to decrease");
    fixes.push_back(v);
  }
  return {std::move(d), std::move(fixes)};
}

bool is_periodic(const Rearrangement& g) {
  CanonicalElement c = canonicalize(g);
  return c.diagram.domain == c.diagram.range;
}

std::optional<unsigned long long> order_of(const Rearrangement& g) {
  CanonicalElement c = canonicalize(g);
  if (!(c.diagram.domain == c.diagram.range)) return std::nullopt;
  unsigned long long ord = 1;
  std::set<Address> done;
  for (const auto& entry : c.diagram.sigma) {
    if (done.count(entry.first)) continue;
    unsigned long long len = 0;
    Address cur = entry.first;
    do {
      done.insert(cur);
      cur = c.diagram.sigma.at(cur);
      ++len;
    } while (cur != entry.first);
    ord = std::lcm(ord, len);
  }
  return ord;
}

Brin4Result brin4_orbit(const GraphPairDiagram& d, const Address& r) {
  if (d.sigma.count(r) == 0)
    throw std::invalid_argument("not a domain leaf: " + to_string(r));
  if (!d.range.is_caret(r))
    throw std::invalid_argument("range does not expand " + to_string(r));
  Brin4Result res;
  res.orbit.push_back(r);
  std::set<Address> seen{r};
  for (;;) {
    Address s = d.sigma.at(res.orbit.back());
    if (d.sigma.count(s) == 0) {
      res.terminal = s;
      break;
    }
    if (seen.count(s))
      throw std::runtime_error("orbit of " + to_string(r) +
                               " revisits a leaf");
    res.orbit.push_back(s);
    seen.insert(s);
  }
  if (!r.is_prefix_of(res.terminal) || res.terminal == r)
    throw std::runtime_error("orbit of " + to_string(r) +
                             " does not land below it");
  return res;
}

}  // namespace rearrange

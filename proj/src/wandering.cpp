#include "rearrange/wandering.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "rearrange/points.hpp"

namespace rearrange {

namespace {

bool class_is_extreme(const ReplacementSystem& sys, const ExpansionGraph& g,
                      int cls) {
  auto ends = g.leaf_ends(cls);
  if (ends.size() != 1) return false;
  const auto& [leaf, as_src] = ends[0];
  EndState state{color_of(sys, leaf), as_src ? End::Init : End::Term};
  return extreme_ends(sys).count(state) != 0;
}

bool unions_interior_disjoint(const CellUnion& a, const CellUnion& b) {
  for (const Address& x : a.addresses)
    for (const Address& y : b.addresses)
      if (!interiors_disjoint(x, y)) return false;
  return true;
}

// every point of C(a) keeps its address under g
bool fixes_cell_pointwise(const Rearrangement& g, const Address& a) {
  const auto& sigma = g.diagram().sigma;
  for (const auto& [leaf, image] : sigma)
    if (leaf.is_prefix_of(a)) return image == leaf;
  bool covered = false;
  for (const auto& [leaf, image] : sigma)
    if (a.is_prefix_of(leaf)) {
      covered = true;
      if (image != leaf) return false;
    }
  return covered;
}

}  // namespace

WanderingCertificate wandering_cell(const Rearrangement& g) {
  CanonicalElement c = canonicalize(g);
  const GraphPairDiagram& d = c.diagram;
  WanderingCertificate cert;
  if (d.domain == d.range) {
    WanderingOrbit orbit;
    orbit.edge = d.sigma.begin()->first;
    orbit.order = 1;
    std::set<Address> done;
    for (const auto& entry : d.sigma) {
      if (done.count(entry.first)) continue;
      unsigned long long len = 0;
      Address cur = entry.first;
      do {
        done.insert(cur);
        cur = d.sigma.at(cur);
        ++len;
      } while (cur != entry.first);
      if (entry.first == orbit.edge) orbit.orbit_length = len;
      orbit.order = std::lcm(orbit.order, len);
    }
    cert.kind = WanderingKind::WeaklyWandering;
    cert.set = CellUnion({orbit.edge}, CellKind::Interior);
    cert.orbit = orbit;
    return cert;
  }

  WanderingWalk walk;
  for (const auto& entry : d.sigma)
    if (d.range.is_caret(entry.first)) {
      walk.e = entry.first;
      break;
    }
  if (walk.e.empty())
    throw std::logic_error("no domain leaf expanded by the range");
  Brin4Result b = brin4_orbit(d, walk.e);
  walk.e_star = b.terminal;
  walk.n = b.orbit.size();
  std::vector<Address> leaves = d.range.leaves();
  std::sort(leaves.begin(), leaves.end());
  for (const Address& l : leaves)
    if (walk.e.is_prefix_of(l) && l != walk.e && l != walk.e_star) {
      walk.f = l;
      break;
    }
  if (walk.f.empty())
    throw std::logic_error("no free leaf below " + to_string(walk.e));
  cert.kind = WanderingKind::Wandering;
  cert.set = CellUnion({walk.f}, CellKind::Interior);
  cert.walk = walk;
  return cert;
}

bool verify_wandering(const Rearrangement& g, const WanderingCertificate& cert,
                      unsigned long max_power) {
  if (max_power < 1) throw std::invalid_argument("max_power must be positive");
  for (long sign : {1, -1})
    for (unsigned long m = 1; m <= max_power; ++m) {
      Rearrangement p = power(g, sign * static_cast<long>(m));
      CellUnion image = apply_cell(p, cert.set);
      if (unions_interior_disjoint(image, cert.set)) continue;
      if (cert.kind == WanderingKind::Wandering) return false;
      for (const Address& a : cert.set.addresses)
        if (!fixes_cell_pointwise(p, a)) return false;
    }
  return true;
}

Address cell_inside_interior(const SystemPtr& sys, const Address& f,
                             const std::vector<LassoPoint>& avoid) {
  if (!valid_address(*sys, f))
    throw std::invalid_argument("invalid address " + to_string(f));
  std::set<Address> carets;
  for (std::size_t k = 1; k < f.size(); ++k)
    carets.insert(Address{{f.symbols.begin(), f.symbols.begin() + k}});
  Expansion e(sys, std::move(carets));
  ExpansionGraph gr = build_graph(e);
  auto [s, t] = gr.node_ends.at(f);
  std::vector<LassoPoint> boundary = avoid;
  std::set<int> classes{s, t};
  for (int cls : classes)
    if (!class_is_extreme(*sys, gr, cls))
      boundary.push_back(vertex_point(e, gr, cls));

  const int max_depth = 6;
  std::vector<Address> frontier{f};
  for (int depth = 0; depth <= max_depth; ++depth) {
    for (const Address& cand : frontier) {
      bool clear = true;
      for (const LassoPoint& p : boundary)
        if (point_in_cell(sys, p, cand) != CellPosition::Outside) {
          clear = false;
          break;
        }
      if (clear) return cand;
    }
    std::vector<Address> next;
    for (const Address& a : frontier)
      for (const Address& k : children(*sys, a)) next.push_back(k);
    std::sort(next.begin(), next.end());
    frontier = std::move(next);
  }
  throw std::runtime_error("no interior cell below " + to_string(f) +
                           " within depth " + std::to_string(max_depth));
}

}  // namespace rearrange

#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "rearrange/expansion.hpp"
#include "rearrange/points.hpp"
#include "rearrange/system.hpp"

namespace rearrange {

struct GraphPairDiagram {
  Expansion domain;
  Expansion range;
  std::map<Address, Address> sigma;

  const SystemPtr& system() const { return domain.system(); }
  bool operator==(const GraphPairDiagram& other) const {
    return domain == other.domain && range == other.range &&
           sigma == other.sigma;
  }
};

// empty result means the diagram is a valid rearrangement
std::vector<std::string> diagram_problems(const GraphPairDiagram& d);

std::vector<std::pair<Address, Address>> reducible_pairs(
    const GraphPairDiagram& d);
bool reduce_once(GraphPairDiagram& d);
GraphPairDiagram reduce(GraphPairDiagram d);
// expands a domain leaf and its image in lockstep; leaves are taken by value
// because callers often point into the diagram being rewritten
void expand_pair(GraphPairDiagram& d, Address domain_leaf);
void expand_range_pair(GraphPairDiagram& d, Address range_leaf);

class Rearrangement {
 public:
  static Rearrangement make(GraphPairDiagram d);
  static Rearrangement identity(SystemPtr sys);

  const GraphPairDiagram& diagram() const { return d_; }
  const SystemPtr& system() const { return d_.system(); }
  bool is_identity() const;
  bool operator==(const Rearrangement& other) const { return d_ == other.d_; }
  bool operator<(const Rearrangement& other) const;

 private:
  explicit Rearrangement(GraphPairDiagram d);
  GraphPairDiagram d_;
};

// compose(g, h) acts as g first, then h
Rearrangement compose(const Rearrangement& g, const Rearrangement& h);
Rearrangement invert(const Rearrangement& g);
Rearrangement power(const Rearrangement& g, long n);
// conjugate(g, h) sends x to h(g(inverse of h at x))
Rearrangement conjugate(const Rearrangement& g, const Rearrangement& h);

CellUnion apply_cell(const Rearrangement& g, const CellUnion& cells);
LassoPoint apply_point(const Rearrangement& g, const LassoPoint& p);
CellUnion fixed_cells(const Rearrangement& g);

std::vector<Rearrangement> enumerate_elements(SystemPtr sys,
                                              int carets_per_side);

struct DeltaComponent {
  Address root;
  std::set<Address> carets;
  bool operator==(const DeltaComponent&) const = default;
};

struct DeltaReport {
  std::set<Address> domain_extra;
  std::set<Address> range_extra;
  std::vector<DeltaComponent> domain_components;
  std::vector<DeltaComponent> range_components;
};

DeltaReport forest_delta(const GraphPairDiagram& d);
std::pair<std::size_t, std::size_t> imbalance(const GraphPairDiagram& d);

}  // namespace rearrange

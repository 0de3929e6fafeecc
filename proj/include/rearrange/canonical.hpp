#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "rearrange/diagram.hpp"

namespace rearrange {

// forced sigma walk u1..un whose pattern blocks minimality
struct Violation {
  int lemma = 0;
  std::vector<Address> seq;
  bool operator==(const Violation&) const = default;
};

std::vector<Violation> find_violations(const GraphPairDiagram& d);

// caret addresses relative to a subtree root; the root itself is the
// empty word
using ForestShape = std::set<std::vector<std::string>>;

ForestShape component_shape(const DeltaComponent& comp);
GraphPairDiagram iterated_expansion(GraphPairDiagram d,
                                    const std::vector<Address>& seq,
                                    const ForestShape& shape);

struct CanonicalElement {
  GraphPairDiagram diagram;
  std::vector<Violation> fixes;
};

CanonicalElement canonicalize(const Rearrangement& g);
bool is_periodic(const Rearrangement& g);
std::optional<unsigned long long> order_of(const Rearrangement& g);

struct Brin4Result {
  std::vector<Address> orbit;
  Address terminal;
};

// walk r, g(r), ... through domain leaves until the image drops below the
// starting edge; r must be a domain leaf that the range has expanded
Brin4Result brin4_orbit(const GraphPairDiagram& d, const Address& r);

}  // namespace rearrange

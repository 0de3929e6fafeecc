#pragma once

#include <map>
#include <optional>
#include <vector>

#include "rearrange/diagram.hpp"

namespace rearrange {

struct WitnessQuery {
  CellUnion cells;  // closed union to move
  Address target;
  int budget = 0;  // carets per side of the searched diagrams
};

// cells of the partition induced by the union's prefixes that it misses
std::vector<Address> complement_cells(const SystemPtr& sys,
                                      const CellUnion& cells);

std::optional<Rearrangement> find_witness(const SystemPtr& sys,
                                          const WitnessQuery& q);
bool verify_witness(const Rearrangement& g, const CellUnion& cells,
                    const Address& target);

struct MinimalityReport {
  // per starting cell, the bounded-depth cells its orbit meets
  std::map<Address, std::vector<Address>> reached;
  std::vector<Address> missed;
  bool full_coverage = false;
};

MinimalityReport minimality_evidence(
    const SystemPtr& sys, const std::vector<Rearrangement>& generators,
    int depth, int steps);

}  // namespace rearrange

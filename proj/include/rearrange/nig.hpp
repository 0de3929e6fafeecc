#pragma once

#include <string>
#include <vector>

#include "rearrange/points.hpp"
#include "rearrange/transitivity.hpp"
#include "rearrange/wandering.hpp"

namespace rearrange {

struct NigConfig {
  SystemPtr sys;
  LassoPoint p;
  std::vector<Rearrangement> elements;
  int word_bound = 4;
  int witness_budget = 6;
  unsigned long wander_bound = 20;
};

struct NigConjugator {
  Rearrangement gamma;
  Rearrangement h;
  WanderingCertificate cert;  // transported by h
};

struct OrbitRecord {
  std::vector<int> word;  // signed one-based generator indices
  LassoPoint point;
  bool ok = true;
  std::string note;
};

struct NigResult {
  std::vector<Address> cells;            // nested cells along p
  std::vector<CellUnion> i_complements;  // complement of each pocket
  std::vector<NigConjugator> conjugators;
  std::vector<OrbitRecord> pingpong_log;
  Address avoided_cell;
  bool passed = false;
};

std::vector<Address> build_nested_cells(const LassoPoint& p, std::size_t count);
CellUnion interior_complement(const SystemPtr& sys, const Address& cell,
                              const Address& next);
NigConjugator conjugate_into_wandering(const Rearrangement& g,
                                       const CellUnion& a, int witness_budget,
                                       unsigned long wander_bound);
void pingpong_check(const NigConfig& cfg, NigResult& result);
NigResult nig_report(const NigConfig& cfg);

}  // namespace rearrange

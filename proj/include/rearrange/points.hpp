#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "rearrange/expansion.hpp"
#include "rearrange/system.hpp"

namespace rearrange {

// the point reached by reading prefix once and cycle forever
struct LassoPoint {
  std::vector<std::string> prefix;
  std::vector<std::string> cycle;
  auto operator<=>(const LassoPoint&) const = default;
};

LassoPoint parse_lasso(const std::string& text);
std::string to_string(const LassoPoint& p);
void validate_lasso(const ReplacementSystem& sys, const LassoPoint& p);
LassoPoint canonical_lasso(const ReplacementSystem& sys, const LassoPoint& p);
std::vector<std::string> unroll(const LassoPoint& p, std::size_t length);

// where the tail settles onto a gluing vertex, if it does
struct VertexTail {
  std::size_t position;
  End end;
};
std::optional<VertexTail> vertex_tail(const ReplacementSystem& sys,
                                      const LassoPoint& p);
bool is_vertex_point(const ReplacementSystem& sys, const LassoPoint& p);

bool point_eq(const SystemPtr& sys, const LassoPoint& a, const LassoPoint& b);

enum class CellPosition { Interior, BoundaryOnly, Outside };

CellPosition point_in_cell(const SystemPtr& sys, const LassoPoint& p,
                           const Address& cell);
CellPosition point_in_union(const SystemPtr& sys, const LassoPoint& p,
                            const CellUnion& cells);
bool point_in(const SystemPtr& sys, const LassoPoint& p, const CellUnion& cells);

// canonical lasso for a gluing vertex of an expansion
LassoPoint vertex_point(const Expansion& e, const ExpansionGraph& g, int cls);

}  // namespace rearrange

#pragma once

#include <compare>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace rearrange {

using Color = std::string;

struct Edge {
  std::string name;
  std::string src;
  std::string dst;
  Color color;
  bool operator==(const Edge&) const = default;
};

struct DirectedGraph {
  std::vector<std::string> vertices;
  std::vector<Edge> edges;

  bool has_vertex(const std::string& v) const;
  const Edge* find_edge(const std::string& name) const;
  // one entry per edge end at v; a loop contributes two
  std::vector<std::pair<const Edge*, bool>> ends_at(const std::string& v) const;
  int degree(const std::string& v) const;
  bool operator==(const DirectedGraph&) const = default;
};

struct ReplacementGraph {
  DirectedGraph graph;
  std::string init;
  std::string term;
  bool operator==(const ReplacementGraph&) const = default;
};

struct ReplacementSystem {
  std::string name;
  DirectedGraph base;
  std::vector<Color> rule_order;
  std::map<Color, ReplacementGraph> rules;

  const ReplacementGraph& rule(const Color& c) const;
};

using SystemPtr = std::shared_ptr<const ReplacementSystem>;

SystemPtr parse_system(const std::string& text);
std::string serialize_system(const ReplacementSystem& sys);

// empty result means the system is expanding
std::vector<std::string> validate_expanding(const ReplacementSystem& sys);

std::vector<std::string> builtin_names();
SystemPtr builtin(const std::string& name);

enum class End { Init, Term };

struct EndState {
  Color color;
  End end;
  auto operator<=>(const EndState&) const = default;
};

const std::string& end_vertex(const ReplacementSystem& sys, const EndState& s);
// edges of rule(s.color) incident to the designated vertex, with the state
// reached by descending into that edge
std::vector<std::pair<std::string, EndState>> end_transitions(
    const ReplacementSystem& sys, const EndState& s);

// end states whose vertex stays a degree-one endpoint under every expansion
std::set<EndState> extreme_ends(const ReplacementSystem& sys);
bool is_extreme_base_vertex(const ReplacementSystem& sys, const std::string& v);

}  // namespace rearrange

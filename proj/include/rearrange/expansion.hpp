#pragma once

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "rearrange/system.hpp"

namespace rearrange {

// first symbol names a base edge, later symbols name rule edges
struct Address {
  std::vector<std::string> symbols;
  auto operator<=>(const Address&) const = default;
  bool empty() const { return symbols.empty(); }
  std::size_t size() const { return symbols.size(); }
  Address parent() const;
  Address child(const std::string& s) const;
  bool is_prefix_of(const Address& other) const;
};

Address parse_address(const std::string& text);
std::string to_string(const Address& a);
// neither address reaches into the other's cell
bool interiors_disjoint(const Address& a, const Address& b);

bool valid_address(const ReplacementSystem& sys, const Address& a);
Color color_of(const ReplacementSystem& sys, const Address& a);
std::vector<Address> children(const ReplacementSystem& sys, const Address& a);

class Expansion {
 public:
  Expansion(SystemPtr sys, std::set<Address> carets);
  static Expansion base(SystemPtr sys);

  const SystemPtr& system() const { return sys_; }
  const std::set<Address>& carets() const { return carets_; }
  bool is_caret(const Address& a) const { return carets_.count(a) != 0; }
  bool is_node(const Address& a) const;
  bool is_leaf(const Address& a) const;
  std::vector<Address> leaves() const;
  Expansion expanded_at(const Address& leaf) const;
  bool operator==(const Expansion& other) const {
    return carets_ == other.carets_;
  }

 private:
  SystemPtr sys_;
  std::set<Address> carets_;
};

Expansion full_expansion(SystemPtr sys, int depth);
Expansion common_refinement(const Expansion& a, const Expansion& b);
std::vector<Expansion> enumerate_expansions(SystemPtr sys, int max_carets);

struct VertexOrigin {
  std::string base_vertex;  // empty for classes born inside an expansion
  Address caret;
  std::string rule_vertex;
  bool from_base() const { return caret.empty(); }
  auto operator<=>(const VertexOrigin&) const = default;
};

struct ExpansionGraph {
  std::vector<VertexOrigin> origins;
  std::map<Address, std::pair<int, int>> node_ends;
  std::vector<Address> leaves;

  int class_of_base_vertex(const std::string& v) const;
  int src_class(const Address& node) const { return node_ends.at(node).first; }
  int dst_class(const Address& node) const { return node_ends.at(node).second; }
  std::vector<std::pair<Address, bool>> leaf_ends(int cls) const;
  int leaf_degree(int cls) const {
    return static_cast<int>(leaf_ends(cls).size());
  }
};

ExpansionGraph build_graph(const Expansion& e);

enum class CellKind { Closed, Interior };

struct CellUnion {
  std::vector<Address> addresses;
  CellKind kind = CellKind::Closed;

  CellUnion() = default;
  CellUnion(std::vector<Address> addrs, CellKind k);
  bool operator==(const CellUnion&) const = default;
};

}  // namespace rearrange

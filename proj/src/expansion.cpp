#include "rearrange/expansion.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace rearrange {

Address Address::parent() const {
  if (symbols.empty()) throw std::runtime_error("empty address has no parent");
  Address p{symbols};
  p.symbols.pop_back();
  return p;
}

Address Address::child(const std::string& s) const {
  Address c{symbols};
  c.symbols.push_back(s);
  return c;
}

bool Address::is_prefix_of(const Address& other) const {
  if (symbols.size() > other.symbols.size()) return false;
  return std::equal(symbols.begin(), symbols.end(), other.symbols.begin());
}

Address parse_address(const std::string& text) {
  if (text.empty()) throw std::runtime_error("empty address");
  Address a;
  std::string part;
  std::istringstream in(text);
  while (std::getline(in, part, '.')) {
    if (part.empty()) throw std::runtime_error("bad address " + text);
    a.symbols.push_back(part);
  }
  return a;
}

std::string to_string(const Address& a) {
  std::string out;
  for (std::size_t i = 0; i < a.symbols.size(); ++i) {
    if (i) out += '.';
    out += a.symbols[i];
  }
  return out;
}

bool interiors_disjoint(const Address& a, const Address& b) {
  return !a.is_prefix_of(b) && !b.is_prefix_of(a);
}

bool valid_address(const ReplacementSystem& sys, const Address& a) {
  if (a.empty()) return false;
  const Edge* e = sys.base.find_edge(a.symbols[0]);
  if (!e) return false;
  Color c = e->color;
  for (std::size_t i = 1; i < a.symbols.size(); ++i) {
    const Edge* r = sys.rule(c).graph.find_edge(a.symbols[i]);
    if (!r) return false;
    c = r->color;
  }
  return true;
}

Color color_of(const ReplacementSystem& sys, const Address& a) {
  if (a.empty()) throw std::runtime_error("empty address has no color");
  const Edge* e = sys.base.find_edge(a.symbols[0]);
  if (!e) throw std::runtime_error("unknown base edge " + a.symbols[0]);
  Color c = e->color;
  for (std::size_t i = 1; i < a.symbols.size(); ++i) {
    const Edge* r = sys.rule(c).graph.find_edge(a.symbols[i]);
    if (!r)
      throw std::runtime_error("unknown edge " + a.symbols[i] +
                               " in replacement " + c);
    c = r->color;
  }
  return c;
}

std::vector<Address> children(const ReplacementSystem& sys, const Address& a) {
  Color c = color_of(sys, a);
  std::vector<Address> out;
  for (const Edge& e : sys.rule(c).graph.edges) out.push_back(a.child(e.name));
  return out;
}

Expansion::Expansion(SystemPtr sys, std::set<Address> carets)
    : sys_(std::move(sys)), carets_(std::move(carets)) {
  for (const Address& a : carets_) {
    if (!valid_address(*sys_, a))
      throw std::runtime_error("invalid caret " + to_string(a));
    if (a.size() > 1 && !carets_.count(a.parent()))
      throw std::runtime_error("caret set not downward closed at " +
                               to_string(a));
  }
}

Expansion Expansion::base(SystemPtr sys) { return Expansion(std::move(sys), {}); }

bool Expansion::is_node(const Address& a) const {
  if (!valid_address(*sys_, a)) return false;
  return a.size() == 1 || carets_.count(a.parent()) != 0;
}

bool Expansion::is_leaf(const Address& a) const {
  return is_node(a) && !is_caret(a);
}

std::vector<Address> Expansion::leaves() const {
  std::vector<Address> out;
  for (const Edge& e : sys_->base.edges) {
    Address a{{e.name}};
    if (!is_caret(a)) out.push_back(a);
  }
  for (const Address& c : carets_)
    for (const Address& k : children(*sys_, c))
      if (!is_caret(k)) out.push_back(k);
  std::sort(out.begin(), out.end());
  return out;
}

Expansion Expansion::expanded_at(const Address& leaf) const {
  if (!is_leaf(leaf))
    throw std::runtime_error("not a leaf: " + to_string(leaf));
  std::set<Address> c = carets_;
  c.insert(leaf);
  return Expansion(sys_, std::move(c));
}

Expansion full_expansion(SystemPtr sys, int depth) {
  std::set<Address> carets;
  std::vector<Address> frontier;
  for (const Edge& e : sys->base.edges) frontier.push_back(Address{{e.name}});
  for (int d = 1; d <= depth; ++d) {
    std::vector<Address> next;
    for (const Address& a : frontier) {
      carets.insert(a);
      for (const Address& k : children(*sys, a)) next.push_back(k);
    }
    frontier = std::move(next);
  }
  return Expansion(std::move(sys), std::move(carets));
}

Expansion common_refinement(const Expansion& a, const Expansion& b) {
  if (a.system() != b.system())
    throw std::runtime_error("expansions of different systems");
  std::set<Address> carets = a.carets();
  carets.insert(b.carets().begin(), b.carets().end());
  return Expansion(a.system(), std::move(carets));
}

namespace {

void grow(const Expansion& e, const Address* last, int budget,
          std::vector<Expansion>& out) {
  out.push_back(e);
  if (budget == 0) return;
  for (const Address& leaf : e.leaves()) {
    if (last && !(*last < leaf)) continue;
    grow(e.expanded_at(leaf), &leaf, budget - 1, out);
  }
}

}  // namespace

std::vector<Expansion> enumerate_expansions(SystemPtr sys, int max_carets) {
  std::vector<Expansion> out;
  grow(Expansion::base(std::move(sys)), nullptr, max_carets, out);
  std::sort(out.begin(), out.end(), [](const Expansion& a, const Expansion& b) {
    if (a.carets().size() != b.carets().size())
      return a.carets().size() < b.carets().size();
    return std::lexicographical_compare(a.carets().begin(), a.carets().end(),
                                        b.carets().begin(), b.carets().end());
  });
  return out;
}

int ExpansionGraph::class_of_base_vertex(const std::string& v) const {
  for (std::size_t i = 0; i < origins.size(); ++i)
    if (origins[i].from_base() && origins[i].base_vertex == v)
      return static_cast<int>(i);
  throw std::runtime_error("no class for base vertex " + v);
}

std::vector<std::pair<Address, bool>> ExpansionGraph::leaf_ends(int cls) const {
  std::vector<std::pair<Address, bool>> out;
  for (const Address& leaf : leaves) {
    auto [s, d] = node_ends.at(leaf);
    if (s == cls) out.emplace_back(leaf, true);
    if (d == cls) out.emplace_back(leaf, false);
  }
  return out;
}

ExpansionGraph build_graph(const Expansion& e) {
  const ReplacementSystem& sys = *e.system();
  ExpansionGraph g;
  std::map<std::string, int> base_class;
  for (const std::string& v : sys.base.vertices) {
    base_class[v] = static_cast<int>(g.origins.size());
    g.origins.push_back(VertexOrigin{v, {}, {}});
  }
  for (const Edge& be : sys.base.edges)
    g.node_ends[Address{{be.name}}] = {base_class.at(be.src),
                                       base_class.at(be.dst)};
  // lex order puts every caret after its parent, so ends are always known
  for (const Address& caret : e.carets()) {
    auto [s, d] = g.node_ends.at(caret);
    const ReplacementGraph& rule = sys.rule(color_of(sys, caret));
    std::map<std::string, int> local;
    for (const std::string& w : rule.graph.vertices) {
      if (w == rule.init) {
        local[w] = s;
      } else if (w == rule.term) {
        local[w] = d;
      } else {
        local[w] = static_cast<int>(g.origins.size());
        g.origins.push_back(VertexOrigin{{}, caret, w});
      }
    }
    for (const Edge& re : rule.graph.edges)
      g.node_ends[caret.child(re.name)] = {local.at(re.src), local.at(re.dst)};
  }
  g.leaves = e.leaves();
  return g;
}

CellUnion::CellUnion(std::vector<Address> addrs, CellKind k)
    : addresses(std::move(addrs)), kind(k) {
  std::sort(addresses.begin(), addresses.end());
  addresses.erase(std::unique(addresses.begin(), addresses.end()),
                  addresses.end());
  // in lex order any prefix pair ends up adjacent
  for (std::size_t i = 0; i + 1 < addresses.size(); ++i)
    if (!interiors_disjoint(addresses[i], addresses[i + 1]))
      throw std::runtime_error("cell union is not an antichain: " +
                               to_string(addresses[i]) + " and " +
                               to_string(addresses[i + 1]));
}

}  // namespace rearrange

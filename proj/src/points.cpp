#include "rearrange/points.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>

namespace rearrange {

LassoPoint parse_lasso(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos || colon + 2 >= text.size() ||
      text[colon + 1] != '(' || text.back() != ')')
    throw std::runtime_error("bad lasso " + text);
  LassoPoint p;
  p.prefix = parse_address(text.substr(0, colon)).symbols;
  std::string body = text.substr(colon + 2, text.size() - colon - 3);
  p.cycle = parse_address(body).symbols;
  return p;
}

std::string to_string(const LassoPoint& p) {
  return to_string(Address{p.prefix}) + ":(" + to_string(Address{p.cycle}) +
         ")";
}

namespace {

// entry colors of successive cycle passes settle into a loop; returns the
// number of passes before the loop and the loop length
struct PassShape {
  std::size_t lead;
  std::size_t period;
};

Color pass_color(const ReplacementSystem& sys, Color c,
                 const std::vector<std::string>& cycle,
                 std::vector<Color>* colors_out) {
  for (const std::string& s : cycle) {
    const Edge* e = sys.rule(c).graph.find_edge(s);
    if (!e)
      throw std::runtime_error("bad cycle symbol " + s + " in replacement " +
                               c);
    c = e->color;
    if (colors_out) colors_out->push_back(c);
  }
  return c;
}

PassShape pass_shape(const ReplacementSystem& sys, Color entry,
                     const std::vector<std::string>& cycle) {
  std::map<Color, std::size_t> seen;
  std::size_t i = 0;
  Color c = entry;
  while (!seen.count(c)) {
    seen[c] = i++;
    c = pass_color(sys, c, cycle, nullptr);
  }
  return {seen[c], i - seen[c]};
}

}  // namespace

void validate_lasso(const ReplacementSystem& sys, const LassoPoint& p) {
  if (p.prefix.empty()) throw std::runtime_error("lasso has empty prefix");
  if (p.cycle.empty()) throw std::runtime_error("lasso has empty cycle");
  if (!valid_address(sys, Address{p.prefix}))
    throw std::runtime_error("bad lasso prefix " + to_string(Address{p.prefix}));
  pass_shape(sys, color_of(sys, Address{p.prefix}), p.cycle);
}

LassoPoint canonical_lasso(const ReplacementSystem& sys, const LassoPoint& p) {
  validate_lasso(sys, p);
  LassoPoint q = p;
  std::size_t n = q.cycle.size();
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d) continue;
    bool fits = true;
    for (std::size_t i = d; i < n && fits; ++i)
      fits = q.cycle[i] == q.cycle[i % d];
    if (fits) {
      q.cycle.resize(d);
      break;
    }
  }
  while (q.prefix.size() > 1 && q.prefix.back() == q.cycle.back()) {
    q.prefix.pop_back();
    std::rotate(q.cycle.begin(), q.cycle.end() - 1, q.cycle.end());
  }
  return q;
}

std::vector<std::string> unroll(const LassoPoint& p, std::size_t length) {
  std::vector<std::string> out = p.prefix;
  while (out.size() < length)
    for (const std::string& s : p.cycle) out.push_back(s);
  out.resize(length);
  return out;
}

std::optional<VertexTail> vertex_tail(const ReplacementSystem& sys,
                                      const LassoPoint& p) {
  validate_lasso(sys, p);
  Color entry = color_of(sys, Address{p.prefix});
  PassShape shape = pass_shape(sys, entry, p.cycle);
  Color c = entry;
  for (std::size_t i = 0; i < shape.lead; ++i)
    c = pass_color(sys, c, p.cycle, nullptr);
  // colors of the cyclic region, one full color period long
  std::vector<Color> colors;
  std::vector<std::string> symbols;
  for (std::size_t i = 0; i < shape.period; ++i) {
    c = pass_color(sys, c, p.cycle, &colors);
    symbols.insert(symbols.end(), p.cycle.begin(), p.cycle.end());
  }
  std::size_t m = symbols.size();
  std::vector<std::array<bool, 2>> live(m, {true, true});
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < m; ++i)
      for (int e = 0; e < 2; ++e) {
        if (!live[i][e]) continue;
        EndState s{colors[i], e == 0 ? End::Init : End::Term};
        const std::string& next = symbols[(i + 1) % m];
        bool ok = false;
        for (const auto& [name, to] : end_transitions(sys, s))
          if (name == next && live[(i + 1) % m][to.end == End::Init ? 0 : 1])
            ok = true;
        if (!ok) {
          live[i][e] = false;
          changed = true;
        }
      }
  }
  for (std::size_t i = 0; i < m; ++i)
    for (int e = 0; e < 2; ++e)
      if (live[i][e])
        return VertexTail{
            p.prefix.size() + shape.lead * p.cycle.size() + i,
            e == 0 ? End::Init : End::Term};
  return std::nullopt;
}

bool is_vertex_point(const ReplacementSystem& sys, const LassoPoint& p) {
  return vertex_tail(sys, p).has_value();
}

namespace {

std::set<Address> prefix_carets(const std::vector<std::string>& path,
                                std::size_t upto) {
  std::set<Address> out;
  for (std::size_t len = 1; len <= upto; ++len)
    out.insert(Address{{path.begin(), path.begin() + len}});
  return out;
}

// stick class of a vertex point inside a graph whose expansion contains the
// point's path carets
int stick_class(const ExpansionGraph& g, const std::vector<std::string>& path,
                const VertexTail& tail) {
  Address node{{path.begin(), path.begin() + tail.position + 1}};
  return tail.end == End::Init ? g.src_class(node) : g.dst_class(node);
}

}  // namespace

bool point_eq(const SystemPtr& sys, const LassoPoint& a, const LassoPoint& b) {
  LassoPoint ca = canonical_lasso(*sys, a);
  LassoPoint cb = canonical_lasso(*sys, b);
  if (ca == cb) return true;
  auto ta = vertex_tail(*sys, ca);
  auto tb = vertex_tail(*sys, cb);
  if (!ta || !tb) return false;
  std::vector<std::string> pa = unroll(ca, ta->position + 1);
  std::vector<std::string> pb = unroll(cb, tb->position + 1);
  std::set<Address> carets = prefix_carets(pa, ta->position);
  std::set<Address> more = prefix_carets(pb, tb->position);
  carets.insert(more.begin(), more.end());
  ExpansionGraph g = build_graph(Expansion(sys, std::move(carets)));
  return stick_class(g, pa, *ta) == stick_class(g, pb, *tb);
}

CellPosition point_in_cell(const SystemPtr& sys, const LassoPoint& p,
                           const Address& cell) {
  if (!valid_address(*sys, cell))
    throw std::runtime_error("invalid cell " + to_string(cell));
  LassoPoint cp = canonical_lasso(*sys, p);
  auto tail = vertex_tail(*sys, cp);
  if (!tail) {
    std::vector<std::string> path =
        unroll(cp, std::max(cell.size(), cp.prefix.size()) + cp.cycle.size());
    return cell.is_prefix_of(Address{path}) ? CellPosition::Interior
                                            : CellPosition::Outside;
  }
  std::vector<std::string> path = unroll(cp, tail->position + 1);
  std::set<Address> carets = prefix_carets(path, tail->position);
  std::set<Address> more = prefix_carets(cell.symbols, cell.size() - 1);
  carets.insert(more.begin(), more.end());
  ExpansionGraph g = build_graph(Expansion(sys, std::move(carets)));
  int v = stick_class(g, path, *tail);
  auto ends = g.leaf_ends(v);
  bool all_inside = true;
  bool any_inside = false;
  for (const auto& [leaf, as_src] : ends) {
    if (cell.is_prefix_of(leaf))
      any_inside = true;
    else
      all_inside = false;
  }
  auto [s, d] = g.node_ends.at(cell);
  if (v == s || v == d)
    return all_inside ? CellPosition::Interior : CellPosition::BoundaryOnly;
  if (all_inside) return CellPosition::Interior;
  if (!any_inside) return CellPosition::Outside;
  return CellPosition::BoundaryOnly;
}

CellPosition point_in_union(const SystemPtr& sys, const LassoPoint& p,
                            const CellUnion& cells) {
  LassoPoint cp = canonical_lasso(*sys, p);
  auto tail = vertex_tail(*sys, cp);
  if (!tail) {
    for (const Address& a : cells.addresses)
      if (point_in_cell(sys, cp, a) == CellPosition::Interior)
        return CellPosition::Interior;
    return CellPosition::Outside;
  }
  std::vector<std::string> path = unroll(cp, tail->position + 1);
  std::set<Address> carets = prefix_carets(path, tail->position);
  for (const Address& a : cells.addresses) {
    auto more = prefix_carets(a.symbols, a.size() - 1);
    carets.insert(more.begin(), more.end());
  }
  ExpansionGraph g = build_graph(Expansion(sys, std::move(carets)));
  int v = stick_class(g, path, *tail);
  bool all_covered = true;
  bool any_covered = false;
  for (const auto& [leaf, as_src] : g.leaf_ends(v)) {
    bool covered = false;
    for (const Address& a : cells.addresses)
      if (a.is_prefix_of(leaf)) covered = true;
    if (covered)
      any_covered = true;
    else
      all_covered = false;
  }
  bool touches = false;
  for (const Address& a : cells.addresses) {
    auto [s, d] = g.node_ends.at(a);
    if (v == s || v == d) touches = true;
  }
  if (all_covered) return CellPosition::Interior;
  if (any_covered || touches) return CellPosition::BoundaryOnly;
  return CellPosition::Outside;
}

bool point_in(const SystemPtr& sys, const LassoPoint& p,
              const CellUnion& cells) {
  CellPosition pos = point_in_union(sys, p, cells);
  if (cells.kind == CellKind::Interior) return pos == CellPosition::Interior;
  return pos != CellPosition::Outside;
}

LassoPoint vertex_point(const Expansion& e, const ExpansionGraph& g, int cls) {
  const ReplacementSystem& sys = *e.system();
  auto ends = g.leaf_ends(cls);
  if (ends.empty())
    throw std::runtime_error("vertex class has no incident leaves");
  auto [leaf, as_src] = ends.front();
  EndState s{color_of(sys, leaf), as_src ? End::Init : End::Term};
  std::vector<std::string> walked;
  std::map<EndState, std::size_t> seen;
  seen[s] = 0;
  for (;;) {
    auto trans = end_transitions(sys, s);
    if (trans.empty())
      throw std::runtime_error("dead end while tracing a vertex point");
    auto best = std::min_element(trans.begin(), trans.end());
    walked.push_back(best->first);
    s = best->second;
    auto it = seen.find(s);
    if (it != seen.end()) {
      LassoPoint p;
      p.prefix = leaf.symbols;
      p.prefix.insert(p.prefix.end(), walked.begin(),
                      walked.begin() + it->second);
      p.cycle.assign(walked.begin() + it->second, walked.end());
      return canonical_lasso(sys, p);
    }
    seen[s] = walked.size();
  }
}

}  // namespace rearrange

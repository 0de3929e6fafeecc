#include "rearrange/cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "rearrange/serialization.hpp"

namespace rearrange {

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

SystemPtr load_system(const std::string& arg) {
  for (const std::string& name : builtin_names())
    if (name == arg) return builtin(name);
  return parse_system(slurp(arg));
}

GraphPairDiagram load_diagram(const SystemPtr& sys, const std::string& path) {
  GraphPairDiagram d = parse_diagram(sys, slurp(path));
  std::vector<std::string> problems = diagram_problems(d);
  if (!problems.empty())
    throw std::runtime_error(path + ": " + problems.front());
  return d;
}

Rearrangement load_element(const SystemPtr& sys, const std::string& path) {
  return Rearrangement::make(load_diagram(sys, path));
}

std::vector<Rearrangement> load_elements(const SystemPtr& sys,
                                         const std::string& path) {
  std::vector<Rearrangement> out;
  for (GraphPairDiagram& d : parse_diagrams(sys, slurp(path))) {
    std::vector<std::string> problems = diagram_problems(d);
    if (!problems.empty())
      throw std::runtime_error(path + ": " + problems.front());
    out.push_back(Rearrangement::make(std::move(d)));
  }
  return out;
}

CellUnion parse_cells(const std::string& text) {
  std::vector<Address> as;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) as.push_back(parse_address(item));
  return CellUnion(as, CellKind::Closed);
}

std::string describe_set(const CellUnion& c) {
  std::string s = c.kind == CellKind::Interior ? "interior" : "closed";
  for (const Address& a : c.addresses) s += " " + to_string(a);
  return s;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"rearrangement groups of expanding replacement systems"};
  app.require_subcommand(1);

  std::string format = "text";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  unsigned long seed = 0;
  app.add_option("--seed", seed, "seed for any sampled path");
  std::string out_path;
  app.add_option("--out", out_path, "write the result to a file");

  std::string system_arg, element_path, left_path, right_path;
  std::string cells_text, target_text, point_text;
  int budget = 4, nig_budget = 6, depth = 1, steps = 4, word_bound = 4;
  unsigned long max_power = 20;

  auto add = [&](const std::string& name, const std::string& what) {
    CLI::App* sub = app.add_subcommand(name, what);
    sub->fallthrough();
    sub->add_option("--system", system_arg, "built-in name or system file")
        ->required();
    return sub;
  };

  CLI::App* c_validate = add("validate", "check the expanding property");
  CLI::App* c_expand = add("expand", "list the cells of the full expansion");
  c_expand->add_option("--depth", depth);
  CLI::App* c_compose = add("compose", "compose two elements");
  c_compose->add_option("--left", left_path)->required();
  c_compose->add_option("--right", right_path)->required();
  CLI::App* c_reduce = add("reduce", "reduce a graph pair diagram");
  c_reduce->add_option("--element", element_path)->required();
  CLI::App* c_canonical = add("canonical", "canonical form of an element");
  c_canonical->add_option("--element", element_path)->required();
  CLI::App* c_order = add("order", "decide periodicity");
  c_order->add_option("--element", element_path)->required();
  CLI::App* c_wandering = add("wandering", "synthesize a wandering cell");
  c_wandering->add_option("--element", element_path)->required();
  c_wandering->add_option("--max-power", max_power);
  CLI::App* c_witness = add("witness", "move a cell union into a target cell");
  c_witness->add_option("--cells", cells_text)->required();
  c_witness->add_option("--target", target_text)->required();
  c_witness->add_option("--budget", budget);
  CLI::App* c_minimality = add("minimality", "bounded orbit coverage report");
  c_minimality->add_option("--element,--elements", element_path)->required();
  c_minimality->add_option("--depth", depth);
  c_minimality->add_option("--steps", steps);
  CLI::App* c_nig = add("nig-demo", "non-invariable generation demonstration");
  c_nig->add_option("--point", point_text)->required();
  c_nig->add_option("--element,--elements", element_path)->required();
  c_nig->add_option("--word-bound", word_bound);
  c_nig->add_option("--budget", nig_budget, "witness search budget");
  c_nig->add_option("--max-power", max_power, "wandering verification bound");
  CLI::App* c_dot = add("dot", "DOT export of a system, expansion or diagram");
  c_dot->add_option("--element", element_path);
  CLI::Option* dot_depth = c_dot->add_option("--depth", depth);
  CLI::App* c_enumerate = add("enumerate", "all elements within a caret budget");
  c_enumerate->add_option("--budget", budget);

  std::vector<const char*> argv{"rearrange"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  int code = 0;
  std::string text;
  nlohmann::json doc;
  try {
    SystemPtr sys = load_system(system_arg);
    if (c_validate->parsed()) {
      std::vector<std::string> problems = validate_expanding(*sys);
      text = problems.empty() ? "expanding: yes\n" : "expanding: no\n";
      for (const std::string& p : problems) text += p + "\n";
      doc["expanding"] = problems.empty();
      doc["problems"] = problems;
      code = problems.empty() ? 0 : 1;
    } else if (c_expand->parsed()) {
      doc["leaves"] = nlohmann::json::array();
      for (const Address& l : full_expansion(sys, depth).leaves()) {
        text += to_string(l) + "\n";
        doc["leaves"].push_back(to_string(l));
      }
    } else if (c_compose->parsed()) {
      Rearrangement g =
          compose(load_element(sys, left_path), load_element(sys, right_path));
      text = serialize_diagram(g.diagram());
      doc = to_json(g.diagram());
    } else if (c_reduce->parsed()) {
      GraphPairDiagram d = reduce(load_diagram(sys, element_path));
      text = serialize_diagram(d);
      doc = to_json(d);
    } else if (c_canonical->parsed()) {
      CanonicalElement c = canonicalize(load_element(sys, element_path));
      text = serialize_diagram(c.diagram);
      doc = to_json(c);
    } else if (c_order->parsed()) {
      auto n = order_of(load_element(sys, element_path));
      text = n ? "periodic, order " + std::to_string(*n) + "\n"
               : "non-periodic\n";
      doc["periodic"] = n.has_value();
      if (n) doc["order"] = *n;
    } else if (c_wandering->parsed()) {
      Rearrangement g = load_element(sys, element_path);
      WanderingCertificate cert = wandering_cell(g);
      bool ok = verify_wandering(g, cert, max_power);
      if (ok) cert.verified_to = max_power;
      text = "kind: ";
      text += cert.kind == WanderingKind::Wandering ? "wandering"
                                                    : "weakly-wandering";
      text += "\nset: " + describe_set(cert.set) + "\n";
      if (cert.walk)
        text += "walk: e=" + to_string(cert.walk->e) +
                " e*=" + to_string(cert.walk->e_star) +
                " n=" + std::to_string(cert.walk->n) +
                " f=" + to_string(cert.walk->f) + "\n";
      if (cert.orbit)
        text += "orbit: edge=" + to_string(cert.orbit->edge) +
                " length=" + std::to_string(cert.orbit->orbit_length) +
                " order=" + std::to_string(cert.orbit->order) + "\n";
      text += "verified to " + std::to_string(max_power) + ": " +
              (ok ? "yes" : "no") + "\n";
      doc = to_json(cert);
      doc["verified"] = ok;
      code = ok ? 0 : 1;
    } else if (c_witness->parsed()) {
      CellUnion cells = parse_cells(cells_text);
      auto g = find_witness(sys, {cells, parse_address(target_text), budget});
      doc["found"] = g.has_value();
      if (g) {
        text = serialize_diagram(g->diagram());
        doc["witness"] = to_json(g->diagram());
      } else {
        text = "no witness within budget " + std::to_string(budget) + "\n";
      }
    } else if (c_minimality->parsed()) {
      MinimalityReport rep = minimality_evidence(
          sys, load_elements(sys, element_path), depth, steps);
      text = rep.full_coverage ? "full coverage: yes\n" : "full coverage: no\n";
      for (const Address& m : rep.missed) text += "missed: " + to_string(m) + "\n";
      doc = to_json(rep);
    } else if (c_nig->parsed()) {
      NigConfig cfg{sys,        parse_lasso(point_text),
                    load_elements(sys, element_path),
                    word_bound, nig_budget,
                    max_power};
      NigResult res = nig_report(cfg);
      text = res.passed ? "passed: yes\n" : "passed: no\n";
      text += "cells:";
      for (const Address& c : res.cells) text += " " + to_string(c);
      text += "\navoided cell: " + to_string(res.avoided_cell) + "\n";
      text += "orbit points: " + std::to_string(res.pingpong_log.size()) + "\n";
      doc = to_json(res);
    } else if (c_dot->parsed()) {
      if (!element_path.empty())
        text = to_dot(load_diagram(sys, element_path));
      else if (dot_depth->count() > 0)
        text = to_dot(full_expansion(sys, depth));
      else
        text = to_dot(*sys);
      doc["dot"] = text;
    } else if (c_enumerate->parsed()) {
      doc = nlohmann::json::array();
      for (const Rearrangement& g : enumerate_elements(sys, budget)) {
        text += serialize_diagram(g.diagram());
        doc.push_back(to_json(g.diagram()));
      }
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  std::string payload = format == "json" ? doc.dump(2) + "\n" : text;
  if (!out_path.empty()) {
    std::ofstream f(out_path);
    if (!f) {
      err << "error: cannot write " << out_path << "\n";
      return 1;
    }
    f << payload;
  } else {
    out << payload;
  }
  return code;
}

}  // namespace rearrange

#ifndef QUANDLE_TOOLS_CLI_HPP
#define QUANDLE_TOOLS_CLI_HPP

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "quandle.hpp"
#include "quandle/json_io.hpp"

namespace quandle::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsage = 2;

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << text;
}

// "P n (cycles)", "T m" or "R m"; an existing file of the same name wins.
inline std::optional<CayleyTable> table_from_expression(const std::string& text) {
  static const std::regex pattern(R"(^\s*([PTR])\s+(\d+)\s*(.*?)\s*$)");
  std::smatch m;
  if (std::filesystem::exists(text) || !std::regex_match(text, m, pattern)) return std::nullopt;
  const int size = std::stoi(m[2].str());
  const std::string rest = m[3].str();
  const char kind = m[1].str()[0];
  if (kind != 'P' && !rest.empty()) throw ParseError("unexpected text after '" + m[1].str() + " " + m[2].str() + "'");
  if (kind == 'T') return trivial(size).table();
  if (kind == 'R') return dihedral(size).table();
  return p_quandle(size, rest.empty() ? Permutation::identity(size) : parse_cycles(rest, size)).table();
}

inline CayleyTable load_table(const std::string& arg) {
  if (auto t = table_from_expression(arg)) return *t;
  return cayley_table_from_json(detail::parse_json_text(read_file(arg)));
}

inline Quandle load_quandle(const std::string& arg) { return Quandle::from_table(load_table(arg)); }

inline LinkDiagram load_diagram(const std::string& path) { return parse_diagram(read_file(path)); }

inline std::string image_text(const std::vector<Element>& image) {
  std::string out = "[";
  for (std::size_t i = 0; i < image.size(); ++i) out += (i ? "," : "") + std::to_string(image[i]);
  return out + "]";
}

inline std::string axiom_name(Axiom a) {
  switch (a) {
    case Axiom::Shape: return "shape";
    case Axiom::Idempotence: return "idempotence";
    case Axiom::RightInvertibility: return "right-invertibility";
    case Axiom::SelfDistributivity: return "self-distributivity";
  }
  return "unknown";
}

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

// Runs one command line (without the program name). Output goes to out,
// diagnostics to err.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite quandles, link colorings and their invariants", "quandle"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false;
  app.add_flag("--json", json, "Machine-readable JSON output");

  std::string x_arg, y_arg, diagram_path, graph_path, out_path, dot_path, rho_text, coeff_text = "Z";
  std::string endos_arg = "all";
  int degree = 2;
  int theta_n = 0;
  std::uint64_t seed = 1;
  bool shuffle = false, cancelling = false;

  auto* show = app.add_subcommand("show", "Print the Cayley table");
  show->add_option("quandle", x_arg, "JSON file or expression like \"P 3 (1 2)\"")->required();
  auto* verify = app.add_subcommand("verify", "Check the quandle axioms");
  verify->add_option("quandle", x_arg)->required();
  auto* iso = app.add_subcommand("iso", "Find an isomorphism");
  iso->add_option("x", x_arg)->required();
  iso->add_option("y", y_arg)->required();
  auto* aut = app.add_subcommand("aut", "Automorphism group");
  aut->add_option("quandle", x_arg)->required();
  auto* inn = app.add_subcommand("inn", "Inner automorphism group");
  inn->add_option("quandle", x_arg)->required();
  auto* homs_cmd = app.add_subcommand("homs", "List homomorphisms X -> Y");
  homs_cmd->add_option("x", x_arg)->required();
  homs_cmd->add_option("y", y_arg)->required();
  auto* homq = app.add_subcommand("homquandle", "Hom quandle Hom(X, A) for abelian A");
  homq->add_option("x", x_arg)->required();
  homq->add_option("a", y_arg)->required();
  homq->add_option("--out", out_path, "Write the quandle as JSON");
  auto* poly = app.add_subcommand("poly", "Quandle polynomial");
  poly->add_option("quandle", x_arg)->required();
  auto* goodinv = app.add_subcommand("goodinv", "List good involutions");
  goodinv->add_option("quandle", x_arg)->required();
  auto* coh = app.add_subcommand("cohomology", "Quandle or symmetric quandle cohomology");
  coh->add_option("quandle", x_arg)->required();
  coh->add_option("--degree", degree, "2 or 3")->check(CLI::Range(2, 3));
  coh->add_option("--coeff", coeff_text, "Z, Q, Z2, Z3, Z5, ...");
  coh->add_option("--rho", rho_text, "Good involution in cycle notation on 0..m-1");
  auto* color = app.add_subcommand("color", "Enumerate colorings");
  color->add_option("diagram", diagram_path)->required();
  color->add_option("quandle", x_arg)->required();
  auto* lk = app.add_subcommand("lk", "Linking numbers");
  lk->add_option("diagram", diagram_path)->required();
  auto* synth = app.add_subcommand("synth", "Build a link diagram from a linking graph");
  synth->add_option("graph", graph_path)->required();
  synth->add_option("--out", out_path, "Write the .lnk diagram here");
  synth->add_option("--seed", seed, "Seed for --shuffle");
  synth->add_flag("--shuffle", shuffle, "Shuffle the clasp order");
  synth->add_flag("--cancelling-clasps", cancelling, "Add a +1/-1 clasp pair for zero weights");
  auto* quiv = app.add_subcommand("quiver", "Quandle quiver");
  quiv->add_option("diagram", diagram_path)->required();
  quiv->add_option("quandle", x_arg)->required();
  quiv->add_option("--endos", endos_arg, "all, identity, aut, or a JSON file of image arrays");
  quiv->add_option("--dot", dot_path, "Write Graphviz output here ('-' for stdout)");
  auto* phi = app.add_subcommand("phi", "Cocycle invariant for theta on P_n");
  phi->add_option("diagram", diagram_path)->required();
  phi->add_option("quandle", x_arg)->required();
  phi->add_option("--theta", theta_n, "n for the cocycle e(0,y)=1, y != 0")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  const SearchLimits limits = SearchLimits::from_env();
  try {
    if (*show) {
      const Quandle q = load_quandle(x_arg);
      if (json) out << to_json(q).dump() << '\n';
      else out << format_table(q);
    } else if (*verify) {
      const CayleyTable table = load_table(x_arg);
      const auto failure = check_axioms(table);
      if (json) {
        Json j{{"ok", !failure}, {"order", table.size()}};
        if (failure) {
          j["axiom"] = axiom_name(failure->axiom);
          j["witness"] = {failure->x, failure->y, failure->z};
          j["message"] = failure->message;
        }
        out << j.dump() << '\n';
      } else if (failure) {
        out << "quandle: FAIL " << axiom_name(failure->axiom) << ": " << failure->message << '\n';
      } else {
        out << "quandle: OK (order " << table.size() << ")\n";
      }
      return failure ? kExitDomainError : kExitOk;
    } else if (*iso) {
      const auto f = is_isomorphic(load_quandle(x_arg), load_quandle(y_arg), limits);
      if (json) out << Json{{"isomorphic", f.has_value()}, {"map", f ? Json(f->image) : Json(nullptr)}}.dump() << '\n';
      else if (f) out << "isomorphic: " << image_text(f->image) << '\n';
      else out << "not isomorphic\n";
    } else if (*aut || *inn) {
      const Quandle q = load_quandle(x_arg);
      std::vector<std::vector<Element>> elements;
      FiniteGroupTable table = FiniteGroupTable::from_table({{0}});
      if (*aut) {
        auto g = automorphism_group(q, limits);
        for (auto& f : g.elements) elements.push_back(f.image);
        table = g.table;
      } else {
        auto g = inner_group(q);
        elements = g.elements;
        table = g.table;
      }
      if (json) {
        out << Json{{"order", table.order()}, {"cyclic", table.is_cyclic()}, {"abelian", table.is_abelian()},
                    {"elements", elements}}
                   .dump()
            << '\n';
      } else {
        out << "order: " << table.order() << "\ncyclic: " << yes_no(table.is_cyclic())
            << "\nabelian: " << yes_no(table.is_abelian()) << '\n';
        for (const auto& e : elements) out << image_text(e) << '\n';
      }
    } else if (*homs_cmd) {
      const auto maps = homs(load_quandle(x_arg), load_quandle(y_arg), limits);
      std::vector<std::vector<Element>> images;
      for (const auto& f : maps) images.push_back(f.image);
      if (json) {
        out << Json{{"count", images.size()}, {"maps", images}}.dump() << '\n';
      } else {
        out << "homomorphisms: " << images.size() << '\n';
        for (const auto& e : images) out << image_text(e) << '\n';
      }
    } else if (*homq) {
      const HomQuandle h = hom_quandle(load_quandle(x_arg), load_quandle(y_arg), limits);
      Json j = to_json(h.quandle);
      j["labels"] = h.labels;
      if (!out_path.empty()) write_file(out_path, j.dump(2) + "\n");
      if (json) {
        out << j.dump() << '\n';
      } else {
        out << "order: " << h.quandle.order() << '\n';
        for (std::size_t i = 0; i < h.labels.size(); ++i) out << i << ": " << image_text(h.labels[i]) << '\n';
      }
    } else if (*poly) {
      const auto p = quandle_polynomial(load_quandle(x_arg));
      if (json) {
        Json terms = Json::array();
        for (const auto& [e, c] : p.terms()) terms.push_back({e.first, e.second, c});
        out << Json{{"polynomial", p.to_string()}, {"terms", terms}}.dump() << '\n';
      } else {
        out << p.to_string() << '\n';
      }
    } else if (*goodinv) {
      const auto list = good_involutions(load_quandle(x_arg));
      std::vector<std::string> cycles;
      for (const auto& s : list) cycles.push_back(format_element_cycles(s.rho()));
      if (json) {
        out << Json{{"count", cycles.size()}, {"involutions", cycles}}.dump() << '\n';
      } else if (cycles.empty()) {
        out << "none\n";
      } else {
        for (const auto& c : cycles) out << c << '\n';
      }
    } else if (*coh) {
      const Quandle q = load_quandle(x_arg);
      const Coefficients coeff = Coefficients::parse(coeff_text);
      const AbelianGroupSummary h =
          rho_text.empty() ? cohomology_Q(q, degree, coeff)
                           : symmetric_cohomology(SymmetricQuandle(q, parse_element_cycles(rho_text, q.order())),
                                                  degree, coeff);
      if (json) {
        std::vector<std::string> torsion;
        for (const auto& d : h.torsion) torsion.push_back(d.str());
        out << Json{{"degree", degree}, {"coefficients", coeff.to_string()}, {"rank", h.rank},
                    {"torsion", torsion}, {"group", h.to_string()}}
                   .dump()
            << '\n';
      } else {
        out << h.to_string() << '\n';
      }
    } else if (*color) {
      const auto cols = colorings(load_diagram(diagram_path), load_quandle(x_arg), limits);
      std::vector<std::vector<Element>> arrays;
      for (const auto& c : cols) arrays.push_back(c.colors);
      if (json) {
        out << Json{{"count", arrays.size()}, {"colorings", arrays}}.dump() << '\n';
      } else {
        out << "colorings: " << arrays.size() << '\n';
        for (const auto& a : arrays) out << image_text(a) << '\n';
      }
    } else if (*lk) {
      const LinkDiagram d = load_diagram(diagram_path);
      const LinkingGraph g = linking_graph(d);
      if (json) {
        out << to_json(g).dump() << '\n';
      } else {
        out << "components: " << g.m << '\n';
        for (const auto& row : g.weights) {
          for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << row[j];
          out << '\n';
        }
      }
    } else if (*synth) {
      const LinkingGraph g = linking_graph_from_json(detail::parse_json_text(read_file(graph_path)));
      SynthesisOptions options;
      options.shuffle = shuffle;
      options.seed = seed;
      options.cancelling_clasps = cancelling;
      const LinkDiagram d = synthesize_link(g, options);
      const std::string text = format_diagram(d);
      if (!out_path.empty()) write_file(out_path, text);
      if (json)
        out << Json{{"components", d.component_count()}, {"arcs", d.arc_count()}, {"crossings", d.crossings().size()}}
                   .dump()
            << '\n';
      else if (out_path.empty())
        out << text;
      else
        out << "components: " << d.component_count() << "\narcs: " << d.arc_count()
            << "\ncrossings: " << d.crossings().size() << '\n';
    } else if (*quiv) {
      const LinkDiagram d = load_diagram(diagram_path);
      const Quandle q = load_quandle(x_arg);
      std::vector<QuandleMap> endos;
      if (endos_arg == "all") endos = endomorphisms(q, limits);
      else if (endos_arg == "identity") endos = {identity_map(q.order())};
      else if (endos_arg == "aut") endos = automorphism_group(q, limits).elements;
      else endos = maps_from_json(detail::parse_json_text(read_file(endos_arg)), q.order(), q.order());
      const Quiver g = quiver(d, q, endos, limits);
      const std::string dot = quiver_dot(g);
      if (!dot_path.empty() && dot_path != "-") write_file(dot_path, dot);
      if (json) {
        out << Json{{"vertices", g.vertex_count()}, {"edges", g.edges.size()}, {"labels", g.labels}}.dump() << '\n';
      } else if (dot_path == "-") {
        out << dot;
      } else {
        out << "vertices: " << g.vertex_count() << "\nedges: " << g.edges.size() << '\n';
      }
    } else if (*phi) {
      const Quandle q = load_quandle(x_arg);
      if (q.order() != theta_n + 1)
        throw InvalidArgument("--theta " + std::to_string(theta_n) + " needs a quandle of order " +
                              std::to_string(theta_n + 1));
      const GroupRingElement value = cocycle_invariant(load_diagram(diagram_path), q, theta_cocycle(theta_n), limits);
      if (json) {
        Json terms = Json::array();
        for (const auto& [e, c] : value.terms()) terms.push_back({e, c});
        out << Json{{"phi", value.to_string()}, {"terms", terms}, {"at_t_equals_1", value.augmentation()}}.dump()
            << '\n';
      } else {
        out << value.to_string() << '\n';
      }
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomainError;
  }
  return kExitOk;
}

}  // namespace quandle::cli

#endif  // QUANDLE_TOOLS_CLI_HPP

#ifndef QUANDLE_LINK_DIAGRAM_HPP
#define QUANDLE_LINK_DIAGRAM_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "quandle/error.hpp"

namespace quandle {

// One crossing of an oriented diagram. Arcs are cut at undercrossings, so the
// over strand carries a single arc label.
struct Crossing {
  int under_in = 0;
  int over = 0;
  int under_out = 0;
  int sign = 1;  // +1 or -1

  friend bool operator==(const Crossing&, const Crossing&) = default;
};

// Abstract signed Gauss data for an oriented link diagram. Planarity is not
// checked. A component with no undercrossings is a single arc declared as a
// free loop; it may still pass over other arcs.
class LinkDiagram {
 public:
  LinkDiagram(int arc_count, std::vector<Crossing> crossings, std::vector<int> free_loops = {})
      : arc_count_(arc_count), crossings_(std::move(crossings)), free_loops_(std::move(free_loops)) {
    validate();
  }

  int arc_count() const { return arc_count_; }
  const std::vector<Crossing>& crossings() const { return crossings_; }
  const std::vector<int>& free_loops() const { return free_loops_; }

  int component_count() const { return static_cast<int>(components_.size()); }
  // Arcs of each component in traversal order, starting from its least arc.
  // Components are ordered by least arc.
  const std::vector<std::vector<int>>& components() const { return components_; }
  int component_of(int arc) const { return component_of_[static_cast<std::size_t>(arc)]; }
  // Least arc of a component; used as its base arc.
  int base_arc(int component) const { return components_[static_cast<std::size_t>(component)].front(); }

 private:
  void validate() {
    if (arc_count_ < 1) throw ParseError("link diagram has no arcs");
    auto check_arc = [&](int a, const char* role) {
      if (a < 0 || a >= arc_count_)
        throw ParseError(std::string("arc ") + std::to_string(a) + " used as " + role + " is out of range");
    };
    std::vector<int> in_at(static_cast<std::size_t>(arc_count_), -1);
    std::vector<int> out_at(static_cast<std::size_t>(arc_count_), -1);
    for (std::size_t c = 0; c < crossings_.size(); ++c) {
      const Crossing& x = crossings_[c];
      check_arc(x.under_in, "under_in");
      check_arc(x.over, "over");
      check_arc(x.under_out, "under_out");
      if (x.sign != 1 && x.sign != -1) throw ParseError("crossing sign must be +1 or -1");
      if (in_at[static_cast<std::size_t>(x.under_in)] >= 0)
        throw ParseError("arc " + std::to_string(x.under_in) + " used twice as under_in");
      if (out_at[static_cast<std::size_t>(x.under_out)] >= 0)
        throw ParseError("arc " + std::to_string(x.under_out) + " used twice as under_out");
      in_at[static_cast<std::size_t>(x.under_in)] = static_cast<int>(c);
      out_at[static_cast<std::size_t>(x.under_out)] = static_cast<int>(c);
    }
    std::vector<bool> is_loop(static_cast<std::size_t>(arc_count_), false);
    for (int a : free_loops_) {
      check_arc(a, "free loop");
      if (is_loop[static_cast<std::size_t>(a)]) throw ParseError("free loop " + std::to_string(a) + " repeated");
      if (in_at[static_cast<std::size_t>(a)] >= 0 || out_at[static_cast<std::size_t>(a)] >= 0)
        throw ParseError("free loop " + std::to_string(a) + " also passes under a crossing");
      is_loop[static_cast<std::size_t>(a)] = true;
    }
    for (int a = 0; a < arc_count_; ++a) {
      if (is_loop[static_cast<std::size_t>(a)]) continue;
      if (in_at[static_cast<std::size_t>(a)] < 0 || out_at[static_cast<std::size_t>(a)] < 0)
        throw ParseError("dangling arc " + std::to_string(a) + ": it must start and end at undercrossings");
    }
    component_of_.assign(static_cast<std::size_t>(arc_count_), -1);
    for (int start = 0; start < arc_count_; ++start) {
      if (component_of_[static_cast<std::size_t>(start)] >= 0) continue;
      const int id = static_cast<int>(components_.size());
      std::vector<int> arcs;
      int a = start;
      do {
        component_of_[static_cast<std::size_t>(a)] = id;
        arcs.push_back(a);
        if (is_loop[static_cast<std::size_t>(a)]) break;
        a = crossings_[static_cast<std::size_t>(in_at[static_cast<std::size_t>(a)])].under_out;
      } while (a != start);
      components_.push_back(std::move(arcs));
    }
  }

  int arc_count_;
  std::vector<Crossing> crossings_;
  std::vector<int> free_loops_;
  std::vector<std::vector<int>> components_;
  std::vector<int> component_of_;
};

// .lnk text: "X <under_in> <over> <under_out> <+|->" per crossing,
// "O <arc>" per free loop, '#' starts a comment.
inline LinkDiagram parse_diagram(std::string_view text) {
  std::vector<Crossing> crossings;
  std::vector<int> loops;
  int max_arc = -1;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  auto fail = [&](const std::string& why) {
    throw ParseError("line " + std::to_string(line_no) + ": " + why);
  };
  auto read_arc = [&](std::istringstream& fields) {
    long long a = -1;
    if (!(fields >> a) || a < 0 || a > 1'000'000) fail("expected a non-negative arc index");
    max_arc = std::max(max_arc, static_cast<int>(a));
    return static_cast<int>(a);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string tag;
    if (!(fields >> tag)) continue;
    if (tag == "X") {
      Crossing c;
      c.under_in = read_arc(fields);
      c.over = read_arc(fields);
      c.under_out = read_arc(fields);
      std::string sign;
      if (!(fields >> sign) || (sign != "+" && sign != "-")) fail("expected crossing sign + or -");
      c.sign = sign == "+" ? 1 : -1;
      crossings.push_back(c);
    } else if (tag == "O") {
      loops.push_back(read_arc(fields));
    } else {
      fail("unknown record '" + tag + "'");
    }
    std::string extra;
    if (fields >> extra) fail("trailing text '" + extra + "'");
  }
  if (crossings.empty() && loops.empty()) throw ParseError("empty link diagram");
  return LinkDiagram(max_arc + 1, std::move(crossings), std::move(loops));
}

inline std::string format_diagram(const LinkDiagram& d) {
  std::ostringstream out;
  for (const auto& c : d.crossings())
    out << "X " << c.under_in << ' ' << c.over << ' ' << c.under_out << ' ' << (c.sign > 0 ? '+' : '-') << '\n';
  for (int a : d.free_loops()) out << "O " << a << '\n';
  return out.str();
}

// Half the signed count of crossings between components i and j.
inline long long linking_number(const LinkDiagram& d, int i, int j) {
  if (i == j) throw InvalidArgument("linking_number: components must differ");
  if (i < 0 || j < 0 || i >= d.component_count() || j >= d.component_count())
    throw InvalidArgument("linking_number: component index out of range");
  long long sum = 0;
  for (const auto& c : d.crossings()) {
    const int over = d.component_of(c.over);
    const int under = d.component_of(c.under_in);
    if ((over == i && under == j) || (over == j && under == i)) sum += c.sign;
  }
  if (sum % 2 != 0)
    throw InvalidArgument("linking_number: odd signed crossing count between components " +
                          std::to_string(i) + " and " + std::to_string(j));
  return sum / 2;
}

// Complete graph on components with integer edge weights.
struct LinkingGraph {
  int m = 0;
  std::vector<std::vector<long long>> weights;

  static LinkingGraph from_weights(std::vector<std::vector<long long>> w) {
    const int m = static_cast<int>(w.size());
    for (int i = 0; i < m; ++i) {
      if (static_cast<int>(w[static_cast<std::size_t>(i)].size()) != m)
        throw InvalidArgument("linking graph weights must be square");
      if (w[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] != 0)
        throw InvalidArgument("linking graph diagonal must be zero");
      for (int j = 0; j < m; ++j)
        if (w[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] !=
            w[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)])
          throw InvalidArgument("linking graph weights must be symmetric");
    }
    return {m, std::move(w)};
  }

  long long weight(int i, int j) const {
    return weights[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }

  friend bool operator==(const LinkingGraph&, const LinkingGraph&) = default;
};

inline LinkingGraph linking_graph(const LinkDiagram& d) {
  const int m = d.component_count();
  std::vector<std::vector<long long>> w(static_cast<std::size_t>(m), std::vector<long long>(static_cast<std::size_t>(m), 0));
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      w[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = w[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] =
          linking_number(d, i, j);
  return {m, std::move(w)};
}

struct ClaspEdge {
  int i = 0;
  int j = 0;
  long long weight = 0;

  friend bool operator==(const ClaspEdge&, const ClaspEdge&) = default;
};

// Edges (i < j) with nonzero weight in lexicographic order.
inline std::vector<ClaspEdge> clasp_edges(const LinkingGraph& g) {
  std::vector<ClaspEdge> edges;
  for (int i = 0; i < g.m; ++i)
    for (int j = i + 1; j < g.m; ++j)
      if (g.weight(i, j) != 0) edges.push_back({i, j, g.weight(i, j)});
  return edges;
}

// Builds a diagram from an explicit clasp list. Each clasp (i, j, w) is a
// twist region of 2|w| crossings of sign sgn(w) traversed in the same order by
// both strands, with i passing over at odd positions and j at even ones.
// Clasps are laid along each component in list order. Repeated or cancelling
// clasps on the same pair are allowed.
inline LinkDiagram diagram_from_clasps(int m, const std::vector<ClaspEdge>& clasps) {
  if (m < 1) throw InvalidArgument("link synthesis needs at least one component");
  struct Event {
    int crossing;
    bool under;
  };
  std::vector<std::vector<Event>> events(static_cast<std::size_t>(m));
  std::vector<int> signs;
  for (const auto& e : clasps) {
    if (e.i < 0 || e.j < 0 || e.i >= m || e.j >= m || e.i == e.j)
      throw InvalidArgument("clasp endpoints must be distinct components");
    const long long count = 2 * (e.weight < 0 ? -e.weight : e.weight);
    for (long long k = 0; k < count; ++k) {
      const int c = static_cast<int>(signs.size());
      signs.push_back(e.weight > 0 ? 1 : -1);
      const bool i_over = k % 2 == 0;
      events[static_cast<std::size_t>(e.i)].push_back({c, !i_over});
      events[static_cast<std::size_t>(e.j)].push_back({c, i_over});
    }
  }
  std::vector<Crossing> crossings(signs.size());
  for (std::size_t c = 0; c < signs.size(); ++c) crossings[c].sign = signs[c];
  std::vector<int> loops;
  int next_arc = 0;
  for (int comp = 0; comp < m; ++comp) {
    const auto& ev = events[static_cast<std::size_t>(comp)];
    std::size_t unders = 0;
    for (const auto& e : ev) unders += e.under ? 1 : 0;
    if (unders == 0) {
      const int arc = next_arc++;
      loops.push_back(arc);
      for (const auto& e : ev) crossings[static_cast<std::size_t>(e.crossing)].over = arc;
      continue;
    }
    // Arc k starts right after the k-th under event; events before the first
    // under event lie on the last arc.
    const int first = next_arc;
    const int count = static_cast<int>(unders);
    next_arc += count;
    int current = first + count - 1;
    for (const auto& e : ev) {
      Crossing& x = crossings[static_cast<std::size_t>(e.crossing)];
      if (e.under) {
        x.under_in = current;
        current = current == first + count - 1 ? first : current + 1;
        x.under_out = current;
      } else {
        x.over = current;
      }
    }
  }
  return LinkDiagram(next_arc, std::move(crossings), std::move(loops));
}

struct SynthesisOptions {
  // Shuffle the clasp order with this seed instead of using lexicographic
  // edge order.
  bool shuffle = false;
  std::uint64_t seed = 1;
  // For every zero-weight pair add a +1 clasp followed by a -1 clasp.
  bool cancelling_clasps = false;
};

// A diagram whose linking graph is g: every component is a circle and every
// nonzero edge becomes one clasp region.
inline LinkDiagram synthesize_link(const LinkingGraph& g, const SynthesisOptions& options = {}) {
  std::vector<ClaspEdge> clasps;
  for (int i = 0; i < g.m; ++i)
    for (int j = i + 1; j < g.m; ++j) {
      if (g.weight(i, j) != 0) clasps.push_back({i, j, g.weight(i, j)});
      else if (options.cancelling_clasps) {
        clasps.push_back({i, j, 1});
        clasps.push_back({i, j, -1});
      }
    }
  if (options.shuffle) {
    std::mt19937_64 rng(options.seed);
    for (std::size_t k = clasps.size(); k > 1; --k) std::swap(clasps[k - 1], clasps[rng() % k]);
  }
  return diagram_from_clasps(g.m, clasps);
}

// Symmetric matrix with zero diagonal and off-diagonal weights uniform in
// [-max_abs, max_abs], drawn from a seeded mt19937_64.
inline LinkingGraph random_linking_graph(int m, long long max_abs, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::vector<long long>> w(static_cast<std::size_t>(m), std::vector<long long>(static_cast<std::size_t>(m), 0));
  const auto span = static_cast<std::uint64_t>(2 * max_abs + 1);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      w[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = w[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] =
          static_cast<long long>(rng() % span) - max_abs;
  return LinkingGraph::from_weights(std::move(w));
}

}  // namespace quandle

#endif  // QUANDLE_LINK_DIAGRAM_HPP

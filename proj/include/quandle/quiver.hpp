#ifndef QUANDLE_QUIVER_HPP
#define QUANDLE_QUIVER_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "quandle/cohomology.hpp"
#include "quandle/coloring.hpp"
#include "quandle/core.hpp"
#include "quandle/error.hpp"
#include "quandle/group_ring.hpp"
#include "quandle/link_diagram.hpp"
#include "quandle/morphisms.hpp"

namespace quandle {

// Directed multigraph on the colorings of a diagram: one edge c -> f o c for
// every coloring c and every f in the chosen set of endomorphisms.
struct Quiver {
  std::vector<Coloring> vertices;              // ordered by (labels, colors)
  std::vector<std::vector<Element>> labels;    // base-arc colors per vertex
  std::vector<std::pair<int, int>> edges;      // vertex-major, then endomorphism order
  std::size_t endomorphism_count = 0;

  std::size_t vertex_count() const { return vertices.size(); }

  // counts[u][v] = number of edges u -> v.
  std::vector<std::vector<int>> adjacency_counts() const {
    std::vector<std::vector<int>> a(vertices.size(), std::vector<int>(vertices.size(), 0));
    for (auto [u, v] : edges) ++a[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
    return a;
  }
};

inline Quiver quiver(const LinkDiagram& d, const Quandle& q, const std::vector<QuandleMap>& endos,
                     SearchLimits limits = {}) {
  for (std::size_t k = 0; k < endos.size(); ++k)
    if (!is_homomorphism(q, q, endos[k]))
      throw AxiomViolation("quiver: map #" + std::to_string(k) + " is not an endomorphism");
  auto cols = colorings(d, q, limits);
  std::vector<std::pair<std::vector<Element>, Coloring>> keyed;
  for (auto& c : cols) keyed.emplace_back(base_colors(d, c), std::move(c));
  std::sort(keyed.begin(), keyed.end());
  Quiver result;
  result.endomorphism_count = endos.size();
  std::map<std::vector<Element>, int> index;
  for (auto& [label, c] : keyed) {
    index[c.colors] = static_cast<int>(result.vertices.size());
    result.labels.push_back(label);
    result.vertices.push_back(std::move(c));
  }
  for (std::size_t v = 0; v < result.vertices.size(); ++v)
    for (const auto& f : endos) {
      std::vector<Element> image(result.vertices[v].colors.size());
      for (std::size_t a = 0; a < image.size(); ++a) image[a] = f(result.vertices[v].colors[a]);
      auto it = index.find(image);
      if (it == index.end()) throw AxiomViolation("quiver: endomorphism image is not a coloring");
      result.edges.emplace_back(static_cast<int>(v), it->second);
    }
  return result;
}

inline constexpr std::size_t kDefaultQuiverVertexBound = 24;

namespace detail {

// Joint colour refinement of two multigraphs; returns per-vertex classes
// comparable across both graphs.
inline std::pair<std::vector<int>, std::vector<int>> refine_classes(const std::vector<std::vector<int>>& a1,
                                                                    const std::vector<std::vector<int>>& a2) {
  using Signature = std::tuple<int, std::vector<std::pair<int, int>>, std::vector<std::pair<int, int>>, int>;
  const std::size_t n = a1.size();
  std::vector<int> c1(n, 0), c2(n, 0);
  std::size_t classes = 1;
  for (;;) {
    std::map<Signature, int> ids;
    auto signature = [](const std::vector<std::vector<int>>& a, const std::vector<int>& c, std::size_t u) {
      std::vector<std::pair<int, int>> out, in;
      for (std::size_t v = 0; v < a.size(); ++v) {
        if (a[u][v]) out.emplace_back(c[v], a[u][v]);
        if (a[v][u]) in.emplace_back(c[v], a[v][u]);
      }
      std::sort(out.begin(), out.end());
      std::sort(in.begin(), in.end());
      return Signature{c[u], std::move(out), std::move(in), a[u][u]};
    };
    std::vector<Signature> s1, s2;
    for (std::size_t u = 0; u < n; ++u) s1.push_back(signature(a1, c1, u));
    for (std::size_t u = 0; u < n; ++u) s2.push_back(signature(a2, c2, u));
    for (const auto& s : s1) ids.emplace(s, 0);
    for (const auto& s : s2) ids.emplace(s, 0);
    int next = 0;
    for (auto& [s, id] : ids) id = next++;
    for (std::size_t u = 0; u < n; ++u) {
      c1[u] = ids[s1[u]];
      c2[u] = ids[s2[u]];
    }
    if (ids.size() == classes) break;
    classes = ids.size();
  }
  return {c1, c2};
}

}  // namespace detail

// A vertex bijection f with count(u -> v) == count(f(u) -> f(v)) for all u, v,
// or nullopt. Exact backtracking after a (vertex count, degree, loop) prescreen
// and colour refinement.
inline std::optional<std::vector<int>> quiver_isomorphism(const Quiver& g1, const Quiver& g2,
                                                          std::size_t vertex_bound = kDefaultQuiverVertexBound) {
  const std::size_t n = g1.vertex_count();
  if (n > vertex_bound || g2.vertex_count() > vertex_bound)
    throw LimitExceeded("quiver isomorphism: more than " + std::to_string(vertex_bound) + " vertices");
  if (n != g2.vertex_count() || g1.edges.size() != g2.edges.size()) return std::nullopt;
  const auto a1 = g1.adjacency_counts();
  const auto a2 = g2.adjacency_counts();
  auto degree_profile = [n](const std::vector<std::vector<int>>& a) {
    std::vector<std::tuple<int, int, int>> p;
    for (std::size_t u = 0; u < n; ++u) {
      int in = 0, out = 0;
      for (std::size_t v = 0; v < n; ++v) {
        out += a[u][v];
        in += a[v][u];
      }
      p.emplace_back(in, out, a[u][u]);
    }
    std::sort(p.begin(), p.end());
    return p;
  };
  if (degree_profile(a1) != degree_profile(a2)) return std::nullopt;
  const auto [c1, c2] = detail::refine_classes(a1, a2);
  {
    auto h1 = c1, h2 = c2;
    std::sort(h1.begin(), h1.end());
    std::sort(h2.begin(), h2.end());
    if (h1 != h2) return std::nullopt;
  }
  // Visit g1's vertices from the smallest classes outward.
  std::map<int, int> class_size;
  for (int c : c1) ++class_size[c];
  std::vector<int> order(n);
  for (std::size_t u = 0; u < n; ++u) order[u] = static_cast<int>(u);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
    return class_size[c1[static_cast<std::size_t>(x)]] < class_size[c1[static_cast<std::size_t>(y)]];
  });
  std::vector<int> map(n, -1);
  std::vector<bool> used(n, false);
  auto extend = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == n) return true;
    const auto u = static_cast<std::size_t>(order[depth]);
    for (std::size_t v = 0; v < n; ++v) {
      if (used[v] || c2[v] != c1[u]) continue;
      bool ok = a1[u][u] == a2[v][v];
      for (std::size_t k = 0; k < depth && ok; ++k) {
        const auto w = static_cast<std::size_t>(order[k]);
        const auto fw = static_cast<std::size_t>(map[w]);
        ok = a1[u][w] == a2[v][fw] && a1[w][u] == a2[fw][v];
      }
      if (!ok) continue;
      map[u] = static_cast<int>(v);
      used[v] = true;
      if (self(self, depth + 1)) return true;
      used[v] = false;
      map[u] = -1;
    }
    return false;
  };
  if (!extend(extend, 0)) return std::nullopt;
  return map;
}

// True iff f maps g1's edge multiset bijectively onto g2's.
inline bool induces_edge_bijection(const Quiver& g1, const Quiver& g2, const std::vector<int>& f) {
  if (f.size() != g1.vertex_count() || g1.vertex_count() != g2.vertex_count()) return false;
  std::map<std::pair<int, int>, int> remaining;
  for (auto e : g2.edges) ++remaining[e];
  for (auto [u, v] : g1.edges) {
    auto it = remaining.find({f[static_cast<std::size_t>(u)], f[static_cast<std::size_t>(v)]});
    if (it == remaining.end() || it->second == 0) return false;
    --it->second;
  }
  return true;
}

inline bool quiver_isomorphic(const Quiver& g1, const Quiver& g2,
                              std::size_t vertex_bound = kDefaultQuiverVertexBound) {
  auto f = quiver_isomorphism(g1, g2, vertex_bound);
  return f && induces_edge_bijection(g1, g2, *f);
}

// Graphviz text. Nodes v0.. carry base-arc color labels; one line per edge,
// in the quiver's edge order.
inline std::string quiver_dot(const Quiver& q) {
  std::ostringstream out;
  out << "digraph quiver {\n";
  for (std::size_t v = 0; v < q.vertices.size(); ++v) {
    out << "  v" << v << " [label=\"(";
    for (std::size_t k = 0; k < q.labels[v].size(); ++k) out << (k ? "," : "") << q.labels[v][k];
    out << ")\"];\n";
  }
  for (auto [u, v] : q.edges) out << "  v" << u << " -> v" << v << ";\n";
  out << "}\n";
  return out.str();
}

// Phi = sum over colorings of t^(sum over crossings of sign * e(x, y)), where y
// is the over color and x is the under_in color at positive crossings and the
// under_out color at negative ones.
inline GroupRingElement cocycle_invariant(const LinkDiagram& d, const Quandle& q, const Cocycle2& phi,
                                          SearchLimits limits = {}) {
  if (phi.coefficients.kind == Coefficients::Kind::IntegersMod)
    throw InvalidArgument("cocycle_invariant: exponents must be integers");
  if (!is_2cocycle(q, phi)) throw AxiomViolation("cocycle_invariant: phi is not a 2-cocycle of Q");
  GroupRingElement total;
  for (const auto& c : colorings(d, q, limits)) {
    long long exponent = 0;
    for (const auto& x : d.crossings()) {
      const Element under = x.sign > 0 ? c[x.under_in] : c[x.under_out];
      exponent += x.sign * phi(under, c[x.over]);
    }
    total.add_term(exponent, 1);
  }
  return total;
}

}  // namespace quandle

#endif  // QUANDLE_QUIVER_HPP

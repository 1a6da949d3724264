#ifndef QUANDLE_COLORING_HPP
#define QUANDLE_COLORING_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "quandle/core.hpp"
#include "quandle/error.hpp"
#include "quandle/link_diagram.hpp"
#include "quandle/morphisms.hpp"

namespace quandle {

// Arc colors of one diagram; colors[a] is the element on arc a.
struct Coloring {
  std::vector<Element> colors;

  Element operator[](int arc) const { return colors[static_cast<std::size_t>(arc)]; }

  friend bool operator==(const Coloring&, const Coloring&) = default;
  friend auto operator<=>(const Coloring&, const Coloring&) = default;
};

// The color of under_out forced by under_in and over.
inline Element outgoing_color(const Quandle& q, const Crossing& c, Element in, Element over) {
  return c.sign > 0 ? q.op(in, over) : q.bar(in, over);
}

inline bool is_coloring(const LinkDiagram& d, const Quandle& q, const std::vector<Element>& colors) {
  if (static_cast<int>(colors.size()) != d.arc_count()) return false;
  for (Element v : colors)
    if (!q.contains(v)) return false;
  for (const auto& c : d.crossings())
    if (colors[static_cast<std::size_t>(c.under_out)] !=
        outgoing_color(q, c, colors[static_cast<std::size_t>(c.under_in)], colors[static_cast<std::size_t>(c.over)]))
      return false;
  return true;
}

// Tuple of base-arc colors, one per component.
inline std::vector<Element> base_colors(const LinkDiagram& d, const Coloring& c) {
  std::vector<Element> out;
  for (int k = 0; k < d.component_count(); ++k) out.push_back(c[d.base_arc(k)]);
  return out;
}

namespace detail {

// Assigns arcs in component traversal order and propagates the crossing rule
// in both directions along each strand.
class ColoringSearch {
 public:
  ColoringSearch(const LinkDiagram& d, const Quandle& q, SearchLimits limits)
      : d_(d), q_(q), limits_(limits), touching_(static_cast<std::size_t>(d.arc_count())) {
    for (std::size_t c = 0; c < d.crossings().size(); ++c) {
      const auto& x = d.crossings()[c];
      touching_[static_cast<std::size_t>(x.under_in)].push_back(static_cast<int>(c));
      touching_[static_cast<std::size_t>(x.over)].push_back(static_cast<int>(c));
      touching_[static_cast<std::size_t>(x.under_out)].push_back(static_cast<int>(c));
    }
    for (const auto& comp : d.components()) order_.insert(order_.end(), comp.begin(), comp.end());
  }

  std::vector<Coloring> run() {
    colors_.assign(static_cast<std::size_t>(d_.arc_count()), -1);
    results_.clear();
    nodes_ = 0;
    descend(0);
    std::sort(results_.begin(), results_.end());
    return std::move(results_);
  }

 private:
  void descend(std::size_t pos) {
    while (pos < order_.size() && colors_[static_cast<std::size_t>(order_[pos])] >= 0) ++pos;
    if (pos == order_.size()) {
      results_.push_back({colors_});
      return;
    }
    const int arc = order_[pos];
    for (Element v = 0; v < q_.order(); ++v) {
      if (++nodes_ > limits_.node_cap)
        throw LimitExceeded("coloring search exceeded node cap " + std::to_string(limits_.node_cap));
      const std::size_t mark = trail_.size();
      if (assign(arc, v) && propagate(mark)) descend(pos + 1);
      undo(mark);
    }
  }

  bool assign(int arc, Element v) {
    colors_[static_cast<std::size_t>(arc)] = v;
    trail_.push_back(arc);
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      colors_[static_cast<std::size_t>(trail_.back())] = -1;
      trail_.pop_back();
    }
  }

  bool propagate(std::size_t from) {
    for (std::size_t k = from; k < trail_.size(); ++k) {
      for (int ci : touching_[static_cast<std::size_t>(trail_[k])]) {
        const Crossing& c = d_.crossings()[static_cast<std::size_t>(ci)];
        const Element in = colors_[static_cast<std::size_t>(c.under_in)];
        const Element over = colors_[static_cast<std::size_t>(c.over)];
        const Element out = colors_[static_cast<std::size_t>(c.under_out)];
        if (over < 0) continue;
        if (in >= 0) {
          const Element expected = outgoing_color(q_, c, in, over);
          if (out < 0) assign(c.under_out, expected);
          else if (out != expected) return false;
        } else if (out >= 0) {
          assign(c.under_in, c.sign > 0 ? q_.bar(out, over) : q_.op(out, over));
        }
      }
    }
    return true;
  }

  const LinkDiagram& d_;
  const Quandle& q_;
  SearchLimits limits_;
  std::vector<std::vector<int>> touching_;
  std::vector<int> order_;
  std::vector<Element> colors_;
  std::vector<int> trail_;
  std::vector<Coloring> results_;
  std::uint64_t nodes_ = 0;
};

}  // namespace detail

// Every Q-coloring of d, sorted lexicographically by arc colors. The count is
// the coloring number col_Q.
inline std::vector<Coloring> colorings(const LinkDiagram& d, const Quandle& q, SearchLimits limits = {}) {
  return detail::ColoringSearch(d, q, limits).run();
}

}  // namespace quandle

#endif  // QUANDLE_COLORING_HPP

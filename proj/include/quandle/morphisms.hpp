#ifndef QUANDLE_MORPHISMS_HPP
#define QUANDLE_MORPHISMS_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "quandle/core.hpp"
#include "quandle/error.hpp"

namespace quandle {

struct SearchLimits {
  // Maximum number of partial assignments visited by a backtracking search.
  std::uint64_t node_cap = 10'000'000;

  // Honors QUANDLE_SEARCH_CAP when it holds a positive integer.
  static SearchLimits from_env() {
    SearchLimits limits;
    if (const char* raw = std::getenv("QUANDLE_SEARCH_CAP")) {
      char* end = nullptr;
      const unsigned long long value = std::strtoull(raw, &end, 10);
      if (end != raw && *end == '\0' && value > 0) limits.node_cap = value;
    }
    return limits;
  }
};

struct QuandleMap {
  int source_order = 0;
  int target_order = 0;
  std::vector<Element> image;

  Element operator()(Element x) const { return image[static_cast<std::size_t>(x)]; }
  bool is_bijective() const {
    if (source_order != target_order) return false;
    std::vector<bool> hit(image.size(), false);
    for (Element v : image) {
      if (hit[static_cast<std::size_t>(v)]) return false;
      hit[static_cast<std::size_t>(v)] = true;
    }
    return true;
  }

  friend bool operator==(const QuandleMap&, const QuandleMap&) = default;
  friend auto operator<=>(const QuandleMap&, const QuandleMap&) = default;
};

// Exhaustive re-check of f(x*y) == f(x)*f(y).
inline bool is_homomorphism(const Quandle& source, const Quandle& target, const QuandleMap& f) {
  if (f.source_order != source.order() || f.target_order != target.order() ||
      static_cast<int>(f.image.size()) != source.order())
    return false;
  for (Element v : f.image)
    if (!target.contains(v)) return false;
  for (int x = 0; x < source.order(); ++x)
    for (int y = 0; y < source.order(); ++y)
      if (f(source.op(x, y)) != target.op(f(x), f(y))) return false;
  return true;
}

// (g o f)(x) = g(f(x)).
inline QuandleMap compose(const QuandleMap& g, const QuandleMap& f) {
  if (f.target_order != g.source_order) throw InvalidArgument("compose: order mismatch");
  QuandleMap result{f.source_order, g.target_order, std::vector<Element>(f.image.size())};
  for (std::size_t x = 0; x < f.image.size(); ++x) result.image[x] = g(f.image[x]);
  return result;
}

inline QuandleMap identity_map(int m) {
  QuandleMap id{m, m, std::vector<Element>(static_cast<std::size_t>(m))};
  for (int x = 0; x < m; ++x) id.image[static_cast<std::size_t>(x)] = x;
  return id;
}

namespace detail {

// Backtracking over images in index order. A constraint f(x*y) = f(x)*f(y) is
// checked as soon as its last involved element receives an image.
class HomSearch {
 public:
  HomSearch(const Quandle& source, const Quandle& target, bool injective, SearchLimits limits)
      : source_(source), target_(target), injective_(injective), limits_(limits) {
    const int m = source.order();
    checks_.assign(static_cast<std::size_t>(m), {});
    for (int x = 0; x < m; ++x)
      for (int y = 0; y < m; ++y) {
        const int last = std::max({x, y, source.op(x, y)});
        checks_[static_cast<std::size_t>(last)].push_back({x, y});
      }
  }

  // Calls visit(image) for every homomorphism in lexicographic order; stops
  // early when visit returns false.
  template <typename Visitor>
  void run(Visitor&& visit) {
    image_.assign(static_cast<std::size_t>(source_.order()), -1);
    used_.assign(static_cast<std::size_t>(target_.order()), false);
    nodes_ = 0;
    stop_ = false;
    extend(0, visit);
  }

 private:
  template <typename Visitor>
  void extend(int k, Visitor& visit) {
    if (stop_) return;
    if (k == source_.order()) {
      if (!visit(image_)) stop_ = true;
      return;
    }
    for (Element v = 0; v < target_.order() && !stop_; ++v) {
      if (injective_ && used_[static_cast<std::size_t>(v)]) continue;
      if (++nodes_ > limits_.node_cap)
        throw LimitExceeded("homomorphism search exceeded node cap " +
                            std::to_string(limits_.node_cap));
      image_[static_cast<std::size_t>(k)] = v;
      if (consistent(k)) {
        if (injective_) used_[static_cast<std::size_t>(v)] = true;
        extend(k + 1, visit);
        if (injective_) used_[static_cast<std::size_t>(v)] = false;
      }
    }
    image_[static_cast<std::size_t>(k)] = -1;
  }

  bool consistent(int k) const {
    for (const auto& [x, y] : checks_[static_cast<std::size_t>(k)]) {
      const Element fx = image_[static_cast<std::size_t>(x)];
      const Element fy = image_[static_cast<std::size_t>(y)];
      const Element fxy = image_[static_cast<std::size_t>(source_.op(x, y))];
      if (fxy != target_.op(fx, fy)) return false;
    }
    return true;
  }

  const Quandle& source_;
  const Quandle& target_;
  bool injective_;
  SearchLimits limits_;
  std::vector<std::vector<std::pair<int, int>>> checks_;
  std::vector<Element> image_;
  std::vector<bool> used_;
  std::uint64_t nodes_ = 0;
  bool stop_ = false;
};

}  // namespace detail

// All homomorphisms source -> target, sorted lexicographically by image.
inline std::vector<QuandleMap> homs(const Quandle& source, const Quandle& target,
                                    SearchLimits limits = {}) {
  std::vector<QuandleMap> result;
  detail::HomSearch search(source, target, false, limits);
  search.run([&](const std::vector<Element>& image) {
    result.push_back({source.order(), target.order(), image});
    return true;
  });
  return result;
}

inline std::vector<QuandleMap> endomorphisms(const Quandle& q, SearchLimits limits = {}) {
  return homs(q, q, limits);
}

// A group given by its multiplication table on {0..order-1}.
class FiniteGroupTable {
 public:
  static FiniteGroupTable from_table(std::vector<std::vector<int>> mul) {
    const int n = static_cast<int>(mul.size());
    if (n == 0) throw AxiomViolation("group table is empty");
    for (const auto& row : mul) {
      if (static_cast<int>(row.size()) != n) throw AxiomViolation("group table is not square");
      for (int v : row)
        if (v < 0 || v >= n) throw AxiomViolation("group table entry out of range");
    }
    int identity = -1;
    for (int e = 0; e < n && identity < 0; ++e) {
      bool ok = true;
      for (int g = 0; g < n && ok; ++g) ok = mul[e][g] == g && mul[g][e] == g;
      if (ok) identity = e;
    }
    if (identity < 0) throw AxiomViolation("group table has no identity");
    for (int a = 0; a < n; ++a) {
      bool has_inverse = false;
      for (int b = 0; b < n && !has_inverse; ++b) has_inverse = mul[a][b] == identity;
      if (!has_inverse) throw AxiomViolation("element " + std::to_string(a) + " has no inverse");
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (mul[mul[a][b]][c] != mul[a][mul[b][c]])
            throw AxiomViolation("associativity fails at (" + std::to_string(a) + "," +
                                 std::to_string(b) + "," + std::to_string(c) + ")");
    }
    return FiniteGroupTable(std::move(mul), identity);
  }

  int order() const { return static_cast<int>(mul_.size()); }
  int identity() const { return identity_; }
  int multiply(int a, int b) const {
    return mul_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
  }
  const std::vector<std::vector<int>>& table() const { return mul_; }

  int element_order(int g) const {
    int k = 1;
    for (int x = g; x != identity_; x = multiply(x, g)) ++k;
    return k;
  }

  bool is_abelian() const {
    for (int a = 0; a < order(); ++a)
      for (int b = 0; b < order(); ++b)
        if (multiply(a, b) != multiply(b, a)) return false;
    return true;
  }

  bool is_cyclic() const {
    for (int g = 0; g < order(); ++g)
      if (element_order(g) == order()) return true;
    return false;
  }

 private:
  FiniteGroupTable(std::vector<std::vector<int>> mul, int identity)
      : mul_(std::move(mul)), identity_(identity) {}

  std::vector<std::vector<int>> mul_;
  int identity_;
};

struct AutomorphismGroup {
  std::vector<QuandleMap> elements;  // lexicographic; identity first
  FiniteGroupTable table;            // table(i, j) = elements[i] o elements[j]
};

inline AutomorphismGroup automorphism_group(const Quandle& q, SearchLimits limits = {}) {
  std::vector<QuandleMap> autos;
  detail::HomSearch search(q, q, true, limits);
  search.run([&](const std::vector<Element>& image) {
    autos.push_back({q.order(), q.order(), image});
    return true;
  });
  std::map<std::vector<Element>, int> index;
  for (std::size_t i = 0; i < autos.size(); ++i) index[autos[i].image] = static_cast<int>(i);
  std::vector<std::vector<int>> mul(autos.size(), std::vector<int>(autos.size()));
  for (std::size_t i = 0; i < autos.size(); ++i)
    for (std::size_t j = 0; j < autos.size(); ++j)
      mul[i][j] = index.at(compose(autos[i], autos[j]).image);
  return {std::move(autos), FiniteGroupTable::from_table(std::move(mul))};
}

// A permutation group on {0..m-1} together with its multiplication table.
struct PermutationGroup {
  std::vector<std::vector<Element>> elements;  // sorted; identity first
  FiniteGroupTable table;                      // table(i, j) = elements[i] o elements[j]
};

// Closure of the given bijections of {0..m-1} under composition.
inline PermutationGroup generated_group(int m, const std::vector<std::vector<Element>>& generators) {
  auto compose_images = [](const std::vector<Element>& a, const std::vector<Element>& b) {
    std::vector<Element> c(b.size());
    for (std::size_t x = 0; x < b.size(); ++x) c[x] = a[static_cast<std::size_t>(b[x])];
    return c;
  };
  std::vector<Element> id(static_cast<std::size_t>(m));
  for (int x = 0; x < m; ++x) id[static_cast<std::size_t>(x)] = x;
  std::map<std::vector<Element>, int> seen{{id, 0}};
  std::vector<std::vector<Element>> queue{id};
  for (std::size_t head = 0; head < queue.size(); ++head)
    for (const auto& g : generators) {
      auto next = compose_images(g, queue[head]);
      if (seen.emplace(next, 0).second) queue.push_back(std::move(next));
    }
  std::vector<std::vector<Element>> elements;
  for (const auto& [perm, unused] : seen) elements.push_back(perm);
  std::map<std::vector<Element>, int> index;
  for (std::size_t i = 0; i < elements.size(); ++i) index[elements[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> mul(elements.size(), std::vector<int>(elements.size()));
  for (std::size_t i = 0; i < elements.size(); ++i)
    for (std::size_t j = 0; j < elements.size(); ++j)
      mul[i][j] = index.at(compose_images(elements[i], elements[j]));
  return {std::move(elements), FiniteGroupTable::from_table(std::move(mul))};
}

// Inn(Q): the group generated by the column bijections S_y.
inline PermutationGroup inner_group(const Quandle& q) {
  std::vector<std::vector<Element>> gens;
  for (int y = 0; y < q.order(); ++y) gens.push_back(q.column(y));
  return generated_group(q.order(), gens);
}

inline std::optional<QuandleMap> is_isomorphic(const Quandle& x, const Quandle& y,
                                               SearchLimits limits = {}) {
  if (x.order() != y.order()) return std::nullopt;
  std::optional<QuandleMap> found;
  detail::HomSearch search(x, y, true, limits);
  search.run([&](const std::vector<Element>& image) {
    found = QuandleMap{x.order(), y.order(), image};
    return false;
  });
  return found;
}

struct HomQuandle {
  Quandle quandle;
  std::vector<std::vector<Element>> labels;  // element i <-> homomorphism labels[i]
};

// Hom(X, A) under the pointwise operation (f*g)(x) = f(x)*g(x). A must be
// abelian. Elements are ordered lexicographically by image array.
inline HomQuandle hom_quandle(const Quandle& source, const Quandle& target,
                              SearchLimits limits = {}) {
  if (!is_abelian(target)) throw InvalidArgument("hom_quandle: target quandle is not abelian");
  std::vector<std::vector<Element>> labels;
  for (auto& f : homs(source, target, limits)) labels.push_back(std::move(f.image));
  std::map<std::vector<Element>, int> index;
  for (std::size_t i = 0; i < labels.size(); ++i) index[labels[i]] = static_cast<int>(i);
  CayleyTable table(labels.size(), std::vector<Element>(labels.size()));
  for (std::size_t i = 0; i < labels.size(); ++i)
    for (std::size_t j = 0; j < labels.size(); ++j) {
      std::vector<Element> h(labels[i].size());
      for (std::size_t x = 0; x < h.size(); ++x) h[x] = target.op(labels[i][x], labels[j][x]);
      table[i][j] = index.at(h);
    }
  return {Quandle::from_table(std::move(table)), std::move(labels)};
}

// Renumbers a Hom quandle so that element i is the map new_order[i]. Used to
// reproduce published tables that list homomorphisms in a chosen order.
inline HomQuandle relabel(const HomQuandle& h, const std::vector<std::vector<Element>>& new_order) {
  if (new_order.size() != h.labels.size())
    throw InvalidArgument("relabel: expected " + std::to_string(h.labels.size()) + " labels");
  std::map<std::vector<Element>, int> old_index;
  for (std::size_t i = 0; i < h.labels.size(); ++i) old_index[h.labels[i]] = static_cast<int>(i);
  std::vector<int> to_old(new_order.size());
  std::vector<int> to_new(new_order.size(), -1);
  for (std::size_t i = 0; i < new_order.size(); ++i) {
    auto it = old_index.find(new_order[i]);
    if (it == old_index.end()) throw InvalidArgument("relabel: label is not a homomorphism");
    if (to_new[static_cast<std::size_t>(it->second)] >= 0)
      throw InvalidArgument("relabel: repeated label");
    to_old[i] = it->second;
    to_new[static_cast<std::size_t>(it->second)] = static_cast<int>(i);
  }
  CayleyTable table(new_order.size(), std::vector<Element>(new_order.size()));
  for (std::size_t i = 0; i < new_order.size(); ++i)
    for (std::size_t j = 0; j < new_order.size(); ++j)
      table[i][j] = to_new[static_cast<std::size_t>(h.quandle.op(to_old[i], to_old[j]))];
  return {Quandle::from_table(std::move(table)), new_order};
}

}  // namespace quandle

#endif  // QUANDLE_MORPHISMS_HPP

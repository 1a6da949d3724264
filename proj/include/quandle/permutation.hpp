#ifndef QUANDLE_PERMUTATION_HPP
#define QUANDLE_PERMUTATION_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "quandle/error.hpp"

namespace quandle {

// A bijection of {1..n}. Points are 1-based; image()[i - 1] is the image of i.
class Permutation {
 public:
  static Permutation identity(int n) {
    if (n < 1) throw InvalidArgument("permutation degree must be positive");
    std::vector<int> image(static_cast<std::size_t>(n));
    std::iota(image.begin(), image.end(), 1);
    return Permutation(std::move(image));
  }

  // Throws AxiomViolation unless image is a bijection of {1..image.size()}.
  static Permutation from_image(std::vector<int> image) {
    if (image.empty()) throw InvalidArgument("permutation degree must be positive");
    std::vector<bool> seen(image.size(), false);
    for (int v : image) {
      if (v < 1 || v > static_cast<int>(image.size()))
        throw AxiomViolation("permutation image " + std::to_string(v) + " out of range 1.." +
                             std::to_string(image.size()));
      if (seen[static_cast<std::size_t>(v - 1)])
        throw AxiomViolation("permutation image " + std::to_string(v) + " repeated");
      seen[static_cast<std::size_t>(v - 1)] = true;
    }
    return Permutation(std::move(image));
  }

  int degree() const { return static_cast<int>(image_.size()); }
  std::span<const int> image() const { return image_; }

  int operator()(int point) const { return image_[static_cast<std::size_t>(point - 1)]; }

  Permutation inverse() const {
    std::vector<int> inv(image_.size());
    for (std::size_t i = 0; i < image_.size(); ++i)
      inv[static_cast<std::size_t>(image_[i] - 1)] = static_cast<int>(i) + 1;
    return Permutation(std::move(inv));
  }

  bool is_identity() const {
    for (std::size_t i = 0; i < image_.size(); ++i)
      if (image_[i] != static_cast<int>(i) + 1) return false;
    return true;
  }

  int fixed_point_count() const {
    int count = 0;
    for (std::size_t i = 0; i < image_.size(); ++i)
      if (image_[i] == static_cast<int>(i) + 1) ++count;
    return count;
  }

  // All cycles including fixed points, each starting at its least point,
  // listed by least point.
  std::vector<std::vector<int>> cycles() const {
    std::vector<std::vector<int>> result;
    std::vector<bool> seen(image_.size(), false);
    for (int start = 1; start <= degree(); ++start) {
      if (seen[static_cast<std::size_t>(start - 1)]) continue;
      std::vector<int> cycle;
      for (int p = start; !seen[static_cast<std::size_t>(p - 1)]; p = (*this)(p)) {
        seen[static_cast<std::size_t>(p - 1)] = true;
        cycle.push_back(p);
      }
      result.push_back(std::move(cycle));
    }
    return result;
  }

  // Orbits as sorted point lists, ordered by least element.
  std::vector<std::vector<int>> orbits() const {
    auto result = cycles();
    for (auto& c : result) std::sort(c.begin(), c.end());
    return result;
  }

  int cycle_count() const { return static_cast<int>(cycles().size()); }

  // Multiset of cycle lengths, sorted ascending.
  std::vector<int> cycle_type() const {
    std::vector<int> lengths;
    for (const auto& c : cycles()) lengths.push_back(static_cast<int>(c.size()));
    std::sort(lengths.begin(), lengths.end());
    return lengths;
  }

  // Length of the cycle through point.
  int orbit_length(int point) const {
    int len = 1;
    for (int p = (*this)(point); p != point; p = (*this)(p)) ++len;
    return len;
  }

  std::uint64_t order() const {
    std::uint64_t result = 1;
    for (int len : cycle_type()) result = std::lcm(result, static_cast<std::uint64_t>(len));
    return result;
  }

  bool is_involution() const {
    for (int p = 1; p <= degree(); ++p)
      if ((*this)((*this)(p)) != p) return false;
    return true;
  }

  // "(1 2 3)(4 5)"; fixed points omitted, identity prints as "()".
  std::string format_cycles() const {
    std::string out;
    for (const auto& c : cycles()) {
      if (c.size() < 2) continue;
      out += '(';
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(c[i]);
      }
      out += ')';
    }
    return out.empty() ? "()" : out;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  explicit Permutation(std::vector<int> image) : image_(std::move(image)) {}

  std::vector<int> image_;
};

// x -> a(b(x)).
inline Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree())
    throw InvalidArgument("compose: degree mismatch " + std::to_string(a.degree()) + " vs " +
                          std::to_string(b.degree()));
  std::vector<int> image(static_cast<std::size_t>(a.degree()));
  for (int x = 1; x <= a.degree(); ++x) image[static_cast<std::size_t>(x - 1)] = a(b(x));
  return Permutation::from_image(std::move(image));
}

inline Permutation power(const Permutation& a, long long exponent) {
  Permutation base = exponent < 0 ? a.inverse() : a;
  unsigned long long e = exponent < 0 ? static_cast<unsigned long long>(-exponent)
                                      : static_cast<unsigned long long>(exponent);
  Permutation result = Permutation::identity(a.degree());
  while (e) {
    if (e & 1U) result = compose(result, base);
    base = compose(base, base);
    e >>= 1U;
  }
  return result;
}

// Parses whitespace-separated parenthesized cycles into point lists without
// range checks. Used for both 1-based permutations and 0-based element maps.
inline std::vector<std::vector<int>> parse_cycle_list(std::string_view text) {
  std::vector<std::vector<int>> cycles;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == ',')) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(')
      throw ParseError("cycle notation: expected '(' at offset " + std::to_string(i));
    ++i;
    std::vector<int> cycle;
    for (;;) {
      skip_ws();
      if (i >= text.size()) throw ParseError("cycle notation: unclosed '('");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (text[i] < '0' || text[i] > '9')
        throw ParseError(std::string("cycle notation: unexpected character '") + text[i] + "'");
      long long value = 0;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
        value = value * 10 + (text[i] - '0');
        if (value > 1'000'000) throw ParseError("cycle notation: point too large");
        ++i;
      }
      cycle.push_back(static_cast<int>(value));
    }
    cycles.push_back(std::move(cycle));
    skip_ws();
  }
  return cycles;
}

// Builds the map on {base..base+size-1} described by disjoint cycles.
inline std::vector<int> cycles_to_image(const std::vector<std::vector<int>>& cycles, int size,
                                        int base) {
  std::vector<int> image(static_cast<std::size_t>(size));
  std::iota(image.begin(), image.end(), base);
  std::vector<bool> used(static_cast<std::size_t>(size), false);
  for (const auto& cycle : cycles) {
    for (int p : cycle) {
      if (p < base || p >= base + size)
        throw ParseError("cycle notation: point " + std::to_string(p) + " outside " +
                         std::to_string(base) + ".." + std::to_string(base + size - 1));
      if (used[static_cast<std::size_t>(p - base)])
        throw ParseError("cycle notation: point " + std::to_string(p) + " repeated");
      used[static_cast<std::size_t>(p - base)] = true;
    }
    for (std::size_t k = 0; k < cycle.size(); ++k)
      image[static_cast<std::size_t>(cycle[k] - base)] = cycle[(k + 1) % cycle.size()];
  }
  return image;
}

inline Permutation parse_cycles(std::string_view text, int n) {
  if (n < 1) throw InvalidArgument("permutation degree must be positive");
  return Permutation::from_image(cycles_to_image(parse_cycle_list(text), n, 1));
}

inline bool is_conjugate(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw InvalidArgument("is_conjugate: degree mismatch");
  return a.cycle_type() == b.cycle_type();
}

// Returns h with a == h^-1 b h, matching cycles of equal length in
// least-element order.
inline std::optional<Permutation> conjugator(const Permutation& a, const Permutation& b) {
  if (!is_conjugate(a, b)) return std::nullopt;
  auto by_length = [](std::vector<std::vector<int>> cs) {
    std::stable_sort(cs.begin(), cs.end(),
                     [](const auto& x, const auto& y) { return x.size() < y.size(); });
    return cs;
  };
  auto ca = by_length(a.cycles());
  auto cb = by_length(b.cycles());
  std::vector<int> h(static_cast<std::size_t>(a.degree()));
  for (std::size_t k = 0; k < ca.size(); ++k)
    for (std::size_t t = 0; t < ca[k].size(); ++t)
      h[static_cast<std::size_t>(ca[k][t] - 1)] = cb[k][t];
  return Permutation::from_image(std::move(h));
}

inline constexpr int kDefaultEnumerationDegree = 8;

// Every element of S_n in lexicographic image order.
inline std::vector<Permutation> all_permutations(int n, int max_degree = kDefaultEnumerationDegree) {
  if (n < 1) throw InvalidArgument("permutation degree must be positive");
  if (n > max_degree)
    throw LimitExceeded("S_" + std::to_string(n) + " exceeds enumeration bound " +
                        std::to_string(max_degree));
  std::vector<int> image(static_cast<std::size_t>(n));
  std::iota(image.begin(), image.end(), 1);
  std::vector<Permutation> result;
  do {
    result.push_back(Permutation::from_image(image));
  } while (std::next_permutation(image.begin(), image.end()));
  return result;
}

// Centralizer of a in S_n by filtering all of S_n.
inline std::vector<Permutation> centralizer(const Permutation& a,
                                            int max_degree = kDefaultEnumerationDegree) {
  std::vector<Permutation> result;
  for (auto& g : all_permutations(a.degree(), max_degree))
    if (compose(g, a) == compose(a, g)) result.push_back(std::move(g));
  return result;
}

// prod over cycle lengths l with multiplicity c_l of c_l! * l^c_l.
inline std::uint64_t centralizer_order(const Permutation& a) {
  std::vector<int> type = a.cycle_type();
  std::uint64_t result = 1;
  for (std::size_t i = 0; i < type.size();) {
    std::size_t j = i;
    while (j < type.size() && type[j] == type[i]) ++j;
    for (std::size_t k = 1; k <= j - i; ++k)
      result *= static_cast<std::uint64_t>(k) * static_cast<std::uint64_t>(type[i]);
    i = j;
  }
  return result;
}

// One permutation per cycle type of S_n: consecutive points form each cycle,
// partitions listed in reverse lexicographic order (identity first).
inline std::vector<Permutation> conjugacy_class_representatives(int n) {
  if (n < 1) throw InvalidArgument("permutation degree must be positive");
  std::vector<std::vector<int>> partitions;
  std::vector<int> current;
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      partitions.push_back(current);
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      current.push_back(part);
      self(self, remaining - part, part);
      current.pop_back();
    }
  };
  rec(rec, n, n);
  std::vector<Permutation> reps;
  for (auto it = partitions.rbegin(); it != partitions.rend(); ++it) {
    std::vector<int> image(static_cast<std::size_t>(n));
    int start = 1;
    for (int len : *it) {
      for (int k = 0; k < len; ++k)
        image[static_cast<std::size_t>(start + k - 1)] = start + (k + 1) % len;
      start += len;
    }
    reps.push_back(Permutation::from_image(std::move(image)));
  }
  return reps;
}

// The n-cycle (1 2 ... n).
inline Permutation long_cycle(int n) {
  if (n < 1) throw InvalidArgument("permutation degree must be positive");
  std::vector<int> image(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) image[static_cast<std::size_t>(i - 1)] = i % n + 1;
  return Permutation::from_image(std::move(image));
}

}  // namespace quandle

#endif  // QUANDLE_PERMUTATION_HPP

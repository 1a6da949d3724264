#ifndef QUANDLE_CORE_HPP
#define QUANDLE_CORE_HPP

#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "quandle/error.hpp"
#include "quandle/permutation.hpp"

namespace quandle {

// Quandle elements are 0-based table indices.
using Element = int;
using CayleyTable = std::vector<std::vector<Element>>;

enum class Axiom { Shape, Idempotence, RightInvertibility, SelfDistributivity };

struct AxiomFailure {
  Axiom axiom;
  // Witness elements; unused slots are -1.
  Element x = -1, y = -1, z = -1;
  std::string message;
};

// First violated axiom of a raw table, or nullopt if it is a quandle.
// Checked in order: shape and range, x*x=x, column bijectivity,
// (x*y)*z = (x*z)*(y*z).
inline std::optional<AxiomFailure> check_axioms(const CayleyTable& table) {
  const std::size_t m = table.size();
  if (m == 0) return AxiomFailure{Axiom::Shape, -1, -1, -1, "empty table"};
  for (std::size_t x = 0; x < m; ++x) {
    if (table[x].size() != m)
      return AxiomFailure{Axiom::Shape, static_cast<Element>(x), -1, -1,
                          "row " + std::to_string(x) + " has length " +
                              std::to_string(table[x].size()) + ", expected " + std::to_string(m)};
    for (std::size_t y = 0; y < m; ++y)
      if (table[x][y] < 0 || table[x][y] >= static_cast<Element>(m))
        return AxiomFailure{Axiom::Shape, static_cast<Element>(x), static_cast<Element>(y), -1,
                            "entry " + std::to_string(x) + "*" + std::to_string(y) + "=" +
                                std::to_string(table[x][y]) + " out of range"};
  }
  for (std::size_t x = 0; x < m; ++x)
    if (table[x][x] != static_cast<Element>(x))
      return AxiomFailure{Axiom::Idempotence, static_cast<Element>(x), -1, -1,
                          "x*x != x: " + std::to_string(x) + "*" + std::to_string(x) +
                              "=" + std::to_string(table[x][x])};
  for (std::size_t y = 0; y < m; ++y) {
    std::vector<int> hit(m, -1);
    for (std::size_t x = 0; x < m; ++x) {
      const auto v = static_cast<std::size_t>(table[x][y]);
      if (hit[v] >= 0)
        return AxiomFailure{Axiom::RightInvertibility, hit[v], static_cast<Element>(x),
                            static_cast<Element>(y),
                            "column " + std::to_string(y) + " is not a bijection: " +
                                std::to_string(hit[v]) + "*" + std::to_string(y) + " = " +
                                std::to_string(x) + "*" + std::to_string(y) + " = " +
                                std::to_string(v)};
      hit[v] = static_cast<int>(x);
    }
  }
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y)
      for (std::size_t z = 0; z < m; ++z) {
        const auto lhs = table[static_cast<std::size_t>(table[x][y])][z];
        const auto rhs =
            table[static_cast<std::size_t>(table[x][z])][static_cast<std::size_t>(table[y][z])];
        if (lhs != rhs)
          return AxiomFailure{Axiom::SelfDistributivity, static_cast<Element>(x),
                              static_cast<Element>(y), static_cast<Element>(z),
                              "(x*y)*z != (x*z)*(y*z) at (x,y,z)=(" + std::to_string(x) + "," +
                                  std::to_string(y) + "," + std::to_string(z) + "): " +
                                  std::to_string(lhs) + " != " + std::to_string(rhs)};
      }
  return std::nullopt;
}

// A finite quandle on {0..m-1}. Instances always satisfy the three axioms.
class Quandle {
 public:
  static Quandle from_table(CayleyTable table) {
    if (auto failure = check_axioms(table)) throw AxiomViolation(failure->message);
    return Quandle(std::move(table));
  }

  int order() const { return static_cast<int>(table_.size()); }
  const CayleyTable& table() const { return table_; }

  Element op(Element x, Element y) const {
    return table_[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
  }

  // The unique z with z*y == x.
  Element bar(Element x, Element y) const {
    return inverse_columns_[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)];
  }

  // S_y: x -> x*y, as an image array on {0..m-1}.
  std::vector<Element> column(Element y) const {
    std::vector<Element> col(table_.size());
    for (std::size_t x = 0; x < table_.size(); ++x) col[x] = table_[x][static_cast<std::size_t>(y)];
    return col;
  }

  bool contains(Element x) const { return x >= 0 && x < order(); }

  friend bool operator==(const Quandle& a, const Quandle& b) { return a.table_ == b.table_; }

 private:
  explicit Quandle(CayleyTable table) : table_(std::move(table)) {
    const std::size_t m = table_.size();
    inverse_columns_.assign(m, std::vector<Element>(m));
    for (std::size_t y = 0; y < m; ++y)
      for (std::size_t x = 0; x < m; ++x)
        inverse_columns_[y][static_cast<std::size_t>(table_[x][y])] = static_cast<Element>(x);
  }

  CayleyTable table_;
  CayleyTable inverse_columns_;
};

inline Element bar_op(const Quandle& q, Element x, Element y) { return q.bar(x, y); }
inline std::vector<Element> column_perm(const Quandle& q, Element y) { return q.column(y); }

// T_m: x*y = x.
inline Quandle trivial(int m) {
  if (m < 1) throw InvalidArgument("quandle order must be positive");
  CayleyTable t(static_cast<std::size_t>(m), std::vector<Element>(static_cast<std::size_t>(m)));
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) t[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = x;
  return Quandle::from_table(std::move(t));
}

// R_m: x*y = 2y - x mod m.
inline Quandle dihedral(int m) {
  if (m < 1) throw InvalidArgument("quandle order must be positive");
  CayleyTable t(static_cast<std::size_t>(m), std::vector<Element>(static_cast<std::size_t>(m)));
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      t[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = (((2 * y - x) % m) + m) % m;
  return Quandle::from_table(std::move(t));
}

// P_n^sigma on {0..n}: column 0 permutes the positives by sigma and fixes 0,
// every other column is the identity.
inline Quandle p_quandle(int n, const Permutation& sigma) {
  if (sigma.degree() != n)
    throw InvalidArgument("p_quandle: sigma has degree " + std::to_string(sigma.degree()) +
                          ", expected " + std::to_string(n));
  const auto m = static_cast<std::size_t>(n + 1);
  CayleyTable t(m, std::vector<Element>(m));
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y) t[x][y] = static_cast<Element>(x);
  for (int x = 1; x <= n; ++x) t[static_cast<std::size_t>(x)][0] = sigma(x);
  return Quandle::from_table(std::move(t));
}

// (x*y)*(z*w) == (x*z)*(y*w) for all quadruples.
inline bool is_abelian(const Quandle& q) {
  const int m = q.order();
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      for (int z = 0; z < m; ++z)
        for (int w = 0; w < m; ++w)
          if (q.op(q.op(x, y), q.op(z, w)) != q.op(q.op(x, z), q.op(y, w))) return false;
  return true;
}

inline std::string format_table(const Quandle& q) {
  std::ostringstream out;
  for (const auto& row : q.table()) {
    for (std::size_t y = 0; y < row.size(); ++y) out << (y ? " " : "") << row[y];
    out << '\n';
  }
  return out.str();
}

}  // namespace quandle

#endif  // QUANDLE_CORE_HPP

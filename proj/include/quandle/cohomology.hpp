#ifndef QUANDLE_COHOMOLOGY_HPP
#define QUANDLE_COHOMOLOGY_HPP

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "quandle/core.hpp"
#include "quandle/error.hpp"
#include "quandle/invariants.hpp"
#include "quandle/linalg.hpp"

namespace quandle {

// Coefficient structure A for H^n(X; A): Z, Q or Z/p with p prime.
struct Coefficients {
  enum class Kind { Integers, Rationals, IntegersMod };
  Kind kind = Kind::Integers;
  long long modulus = 0;  // p when kind == IntegersMod

  static Coefficients integers() { return {Kind::Integers, 0}; }
  static Coefficients rationals() { return {Kind::Rationals, 0}; }
  static Coefficients integers_mod(long long p) {
    if (p < 2) throw InvalidArgument("Z/p coefficients need a prime p");
    for (long long d = 2; d * d <= p; ++d)
      if (p % d == 0) throw InvalidArgument("Z/" + std::to_string(p) + ": modulus is not prime");
    return {Kind::IntegersMod, p};
  }

  // "Z", "Q", "Z2", "Z3", "Z5", ... ("Z/p" also accepted).
  static Coefficients parse(std::string_view text) {
    if (text == "Z") return integers();
    if (text == "Q") return rationals();
    std::string_view digits;
    if (text.size() > 2 && text.substr(0, 2) == "Z/") digits = text.substr(2);
    else if (text.size() > 1 && text[0] == 'Z') digits = text.substr(1);
    if (digits.empty()) throw ParseError("unknown coefficient tag '" + std::string(text) + "'");
    long long p = 0;
    for (char ch : digits) {
      if (ch < '0' || ch > '9' || p > 1'000'000'000)
        throw ParseError("unknown coefficient tag '" + std::string(text) + "'");
      p = p * 10 + (ch - '0');
    }
    return integers_mod(p);
  }

  bool is_field() const { return kind != Kind::Integers; }

  std::string to_string() const {
    switch (kind) {
      case Kind::Integers: return "Z";
      case Kind::Rationals: return "Q";
      case Kind::IntegersMod: return "Z" + std::to_string(modulus);
    }
    return "?";
  }

  friend bool operator==(const Coefficients&, const Coefficients&) = default;
};

// Over Z: Z^rank plus cyclic torsion factors. Over a field: rank is the
// dimension and torsion is empty.
struct AbelianGroupSummary {
  Coefficients coefficients;
  std::size_t rank = 0;
  std::vector<BigInt> torsion;

  std::string to_string() const {
    if (coefficients.is_field()) return "F^" + std::to_string(rank);
    std::vector<std::string> parts;
    if (rank > 0) parts.push_back("Z^" + std::to_string(rank));
    for (const auto& d : torsion) parts.push_back("Z/" + d.str());
    if (parts.empty()) return "0";
    std::string out = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) out += " (+) " + parts[i];
    return out;
  }
};

inline constexpr std::size_t kDefaultTupleBound = 1'000'000;

// Tuples of X^n with no two equal neighbours, in lexicographic order. These
// index the generators of C_n(X)/D_n^Q(X).
class TupleBasis {
 public:
  TupleBasis(int order, int length, std::size_t max_tuples = kDefaultTupleBound)
      : order_(order), length_(length) {
    if (order < 1 || length < 0) throw InvalidArgument("TupleBasis: bad order or length");
    std::size_t total = 1;
    for (int i = 0; i < length; ++i) {
      total *= static_cast<std::size_t>(order);
      if (total > max_tuples)
        throw LimitExceeded("X^" + std::to_string(length) + " has more than " +
                            std::to_string(max_tuples) + " tuples");
    }
    index_.assign(total, -1);
    std::vector<Element> t(static_cast<std::size_t>(length), 0);
    for (std::size_t code = 0; code < total; ++code) {
      std::size_t rest = code;
      for (int i = length - 1; i >= 0; --i) {
        t[static_cast<std::size_t>(i)] = static_cast<Element>(rest % static_cast<std::size_t>(order));
        rest /= static_cast<std::size_t>(order);
      }
      if (is_nondegenerate(t)) {
        index_[code] = static_cast<int>(tuples_.size());
        tuples_.push_back(t);
      }
    }
  }

  static bool is_nondegenerate(const std::vector<Element>& t) {
    for (std::size_t i = 0; i + 1 < t.size(); ++i)
      if (t[i] == t[i + 1]) return false;
    return true;
  }

  int order() const { return order_; }
  int length() const { return length_; }
  std::size_t size() const { return tuples_.size(); }
  const std::vector<Element>& operator[](std::size_t i) const { return tuples_[i]; }
  const std::vector<std::vector<Element>>& tuples() const { return tuples_; }

  // Basis index of t, or -1 when t is degenerate.
  int find(const std::vector<Element>& t) const {
    std::size_t code = 0;
    for (Element x : t) code = code * static_cast<std::size_t>(order_) + static_cast<std::size_t>(x);
    return index_[code];
  }

 private:
  int order_;
  int length_;
  std::vector<std::vector<Element>> tuples_;
  std::vector<int> index_;
};

namespace detail {

// (x_1*x_i, ..., x_{i-1}*x_i, x_{i+1}, ..., x_n) with x_i removed; i is 0-based.
inline std::vector<Element> acted_face(const Quandle& q, const std::vector<Element>& t, std::size_t i) {
  std::vector<Element> face;
  for (std::size_t j = 0; j < t.size(); ++j) {
    if (j < i) face.push_back(q.op(t[j], t[i]));
    else if (j > i) face.push_back(t[j]);
  }
  return face;
}

inline std::vector<Element> plain_face(const std::vector<Element>& t, std::size_t i) {
  std::vector<Element> face;
  for (std::size_t j = 0; j < t.size(); ++j)
    if (j != i) face.push_back(t[j]);
  return face;
}

inline void check_degree(int n, int lo, int hi, const char* what) {
  if (n < lo || n > hi)
    throw InvalidArgument(std::string(what) + ": degree " + std::to_string(n) + " outside " +
                          std::to_string(lo) + ".." + std::to_string(hi));
}

}  // namespace detail

// Matrix of the quandle boundary d_n : C_n^Q -> C_{n-1}^Q in the
// nondegenerate bases (rows index (n-1)-tuples, columns index n-tuples):
// d_n(x) = sum_i (-1)^i [ (x without x_i) - (x_1*x_i, ..., x_{i-1}*x_i, x_{i+1}, ...) ].
inline IntMatrix boundary_matrix(const Quandle& q, int n, std::size_t max_tuples = kDefaultTupleBound) {
  detail::check_degree(n, 2, 4, "boundary_matrix");
  const TupleBasis source(q.order(), n, max_tuples);
  const TupleBasis target(q.order(), n - 1, max_tuples);
  IntMatrix d(target.size(), source.size());
  for (std::size_t col = 0; col < source.size(); ++col) {
    const auto& t = source[col];
    for (std::size_t i = 0; i < t.size(); ++i) {
      const long long sign = (i % 2 == 0) ? -1 : 1;  // (-1)^k, k = i + 1 counted from 1
      if (int r = target.find(detail::plain_face(t, i)); r >= 0) d(static_cast<std::size_t>(r), col) += sign;
      if (int r = target.find(detail::acted_face(q, t, i)); r >= 0)
        d(static_cast<std::size_t>(r), col) -= sign;
    }
  }
  return d;
}

// Rows are the generators (x) + (x_1*x_i, ..., x_{i-1}*x_i, rho(x_i), x_{i+1}, ...)
// of D_n^rho, written in the nondegenerate basis of degree n. Zero rows and
// duplicates are dropped.
inline IntMatrix symmetric_relation_matrix(const SymmetricQuandle& s, int n,
                                           std::size_t max_tuples = kDefaultTupleBound) {
  const Quandle& q = s.quandle();
  const TupleBasis basis(q.order(), n, max_tuples);
  std::set<std::vector<long long>> rows;
  std::size_t total = 1;
  for (int i = 0; i < n; ++i) total *= static_cast<std::size_t>(q.order());
  std::vector<Element> t(static_cast<std::size_t>(n));
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t rest = code;
    for (int i = n - 1; i >= 0; --i) {
      t[static_cast<std::size_t>(i)] = static_cast<Element>(rest % static_cast<std::size_t>(q.order()));
      rest /= static_cast<std::size_t>(q.order());
    }
    for (std::size_t i = 0; i < t.size(); ++i) {
      std::vector<Element> partner(t.size());
      for (std::size_t j = 0; j < t.size(); ++j) {
        if (j < i) partner[j] = q.op(t[j], t[i]);
        else if (j == i) partner[j] = s.rho(t[i]);
        else partner[j] = t[j];
      }
      std::vector<long long> row(basis.size(), 0);
      if (int r = basis.find(t); r >= 0) row[static_cast<std::size_t>(r)] += 1;
      if (int r = basis.find(partner); r >= 0) row[static_cast<std::size_t>(r)] += 1;
      bool nonzero = false;
      for (long long v : row) nonzero = nonzero || v != 0;
      if (nonzero) rows.insert(std::move(row));
    }
  }
  IntMatrix m(rows.size(), basis.size());
  std::size_t r = 0;
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) m(r, c) = row[c];
    ++r;
  }
  return m;
}

// The piece of the cochain complex Hom(C_*^Q, A) around degree n:
// C^{n-1} -> C^n -> C^{n+1}. When a good involution is present, cochains are
// further required to vanish on the rows of the relation matrices.
struct CochainComplexSlice {
  int order = 0;
  int degree = 0;
  std::vector<TupleBasis> bases;         // degrees n-1, n, n+1
  IntMatrix coboundary_in;               // delta^{n-1}: N_n x N_{n-1}
  IntMatrix coboundary_out;              // delta^n: N_{n+1} x N_n
  std::optional<IntMatrix> relations_in;   // D^rho generators in degree n-1
  std::optional<IntMatrix> relations_at;   // D^rho generators in degree n

  const TupleBasis& basis() const { return bases[1]; }
};

inline CochainComplexSlice cochain_slice(const Quandle& q, int n,
                                         const SymmetricQuandle* rho = nullptr,
                                         std::size_t max_tuples = kDefaultTupleBound) {
  detail::check_degree(n, 2, 3, "cochain_slice");
  if (rho && !(rho->quandle() == q)) throw InvalidArgument("involution belongs to another quandle");
  CochainComplexSlice slice;
  slice.order = q.order();
  slice.degree = n;
  for (int k = n - 1; k <= n + 1; ++k) slice.bases.emplace_back(q.order(), k, max_tuples);
  slice.coboundary_in = boundary_matrix(q, n, max_tuples).transpose();
  slice.coboundary_out = boundary_matrix(q, n + 1, max_tuples).transpose();
  if (rho) {
    slice.relations_in = symmetric_relation_matrix(*rho, n - 1, max_tuples);
    slice.relations_at = symmetric_relation_matrix(*rho, n, max_tuples);
  }
  return slice;
}

namespace detail {

// Stack of the conditions a degree-n cocycle must satisfy: relations (if any)
// and delta^n.
inline IntMatrix cocycle_conditions(const CochainComplexSlice& s) {
  if (s.relations_at) return vstack(*s.relations_at, s.coboundary_out);
  return s.coboundary_out;
}

// Columns spanning the coboundaries delta^{n-1}(K^{n-1}) over Z, where K^{n-1}
// is the lattice of admissible (n-1)-cochains.
inline BigMatrix integral_coboundaries(const CochainComplexSlice& s) {
  BigMatrix din = s.coboundary_in.cast<BigInt>();
  if (!s.relations_in) return din;
  auto kernel = integer_kernel(s.relations_in->cast<BigInt>());
  return multiply(din, from_columns(kernel, s.bases[0].size()));
}

inline IntMatrix coboundaries_mod_p(const CochainComplexSlice& s, long long p) {
  if (!s.relations_in) return s.coboundary_in;
  auto kernel = kernel_mod_p(*s.relations_in, p);
  IntMatrix g = multiply(s.coboundary_in, from_columns(kernel, s.bases[0].size()));
  for (std::size_t r = 0; r < g.rows(); ++r)
    for (std::size_t c = 0; c < g.cols(); ++c) g(r, c) = mod_p(g(r, c), p);
  return g;
}

}  // namespace detail

inline AbelianGroupSummary cohomology_of_slice(const CochainComplexSlice& s, Coefficients coeff) {
  const std::size_t n_cochains = s.basis().size();
  AbelianGroupSummary result{coeff, 0, {}};
  const IntMatrix conditions = detail::cocycle_conditions(s);
  switch (coeff.kind) {
    case Coefficients::Kind::IntegersMod: {
      const std::size_t cocycles = n_cochains - rank_mod_p(conditions, coeff.modulus);
      const std::size_t boundaries = rank_mod_p(detail::coboundaries_mod_p(s, coeff.modulus), coeff.modulus);
      result.rank = cocycles - boundaries;
      break;
    }
    case Coefficients::Kind::Rationals: {
      const std::size_t cocycles = n_cochains - rank_rational(conditions);
      const std::size_t boundaries = rank_rational(detail::integral_coboundaries(s));
      result.rank = cocycles - boundaries;
      break;
    }
    case Coefficients::Kind::Integers: {
      // The cocycle lattice is saturated, so the torsion of Z/B equals the
      // torsion of Z^N/B: the invariant factors of the coboundary generators.
      const std::size_t cocycles = n_cochains - rank_rational(conditions);
      const auto factors = smith_invariants(detail::integral_coboundaries(s));
      result.rank = cocycles - factors.size();
      for (const auto& d : factors)
        if (d > 1) result.torsion.push_back(d);
      break;
    }
  }
  return result;
}

// H^n_Q(X; A) for 2 <= n <= 3.
inline AbelianGroupSummary cohomology_Q(const Quandle& q, int n, Coefficients coeff,
                                        std::size_t max_tuples = kDefaultTupleBound) {
  return cohomology_of_slice(cochain_slice(q, n, nullptr, max_tuples), coeff);
}

// H^n_{Q,rho}(X; A) for 2 <= n <= 3.
inline AbelianGroupSummary symmetric_cohomology(const SymmetricQuandle& s, int n, Coefficients coeff,
                                                std::size_t max_tuples = kDefaultTupleBound) {
  return cohomology_of_slice(cochain_slice(s.quandle(), n, &s, max_tuples), coeff);
}

// Z-basis of the integral n-cocycles, as vectors over slice.basis().
inline std::vector<std::vector<BigInt>> integral_cocycle_basis(const CochainComplexSlice& s) {
  return integer_kernel(detail::cocycle_conditions(s).cast<BigInt>());
}

// True iff the cochain (over slice.basis()) is a cocycle of the slice whose
// class in H^n(-; A) is nonzero.
inline bool represents_nonzero_class(const CochainComplexSlice& s, const std::vector<long long>& cochain,
                                     Coefficients coeff) {
  const IntMatrix conditions = detail::cocycle_conditions(s);
  if (cochain.size() != s.basis().size()) throw InvalidArgument("cochain has wrong length");
  if (coeff.kind == Coefficients::Kind::IntegersMod) {
    const long long p = coeff.modulus;
    for (std::size_t r = 0; r < conditions.rows(); ++r) {
      long long acc = 0;
      for (std::size_t c = 0; c < conditions.cols(); ++c) acc = mod_p(acc + conditions(r, c) * cochain[c], p);
      if (acc != 0) return false;
    }
    IntMatrix g = detail::coboundaries_mod_p(s, p);
    IntMatrix extended(g.rows(), g.cols() + 1);
    for (std::size_t r = 0; r < g.rows(); ++r) {
      for (std::size_t c = 0; c < g.cols(); ++c) extended(r, c) = g(r, c);
      extended(r, g.cols()) = mod_p(cochain[r], p);
    }
    return rank_mod_p(extended, p) > rank_mod_p(g, p);
  }
  for (std::size_t r = 0; r < conditions.rows(); ++r) {
    long long acc = 0;
    for (std::size_t c = 0; c < conditions.cols(); ++c) acc += conditions(r, c) * cochain[c];
    if (acc != 0) return false;
  }
  BigMatrix g = detail::integral_coboundaries(s);
  BigMatrix extended(g.rows(), g.cols() + 1);
  for (std::size_t r = 0; r < g.rows(); ++r) {
    for (std::size_t c = 0; c < g.cols(); ++c) extended(r, c) = g(r, c);
    extended(r, g.cols()) = cochain[r];
  }
  if (coeff.kind == Coefficients::Kind::Rationals) return rank_rational(extended) > rank_rational(g);
  // Over Z the lattice grows iff the product of invariant factors changes.
  auto before = smith_invariants(g);
  auto after = smith_invariants(extended);
  if (after.size() != before.size()) return true;
  BigInt pb = 1, pa = 1;
  for (const auto& d : before) pb *= d;
  for (const auto& d : after) pa *= d;
  return pa != pb;
}

// A cochain f : X x X -> A given by its values; entries are taken mod p for
// Z/p coefficients and as integers otherwise.
struct Cocycle2 {
  int order = 0;
  Coefficients coefficients = Coefficients::integers();
  std::vector<std::vector<long long>> values;

  static Cocycle2 zero(int m, Coefficients coeff = Coefficients::integers()) {
    return {m, coeff,
            std::vector<std::vector<long long>>(static_cast<std::size_t>(m),
                                                std::vector<long long>(static_cast<std::size_t>(m), 0))};
  }

  // Sum of indicator functions chi_(x,y) over the listed pairs.
  static Cocycle2 indicator_sum(int m, const std::vector<std::pair<Element, Element>>& pairs,
                                Coefficients coeff = Coefficients::integers()) {
    Cocycle2 c = zero(m, coeff);
    for (auto [x, y] : pairs) c.values[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] += 1;
    return c;
  }

  long long operator()(Element x, Element y) const {
    return values[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
  }

  // Coordinates over the nondegenerate pair basis (diagonal entries dropped).
  std::vector<long long> as_vector(const TupleBasis& pairs) const {
    std::vector<long long> v(pairs.size());
    for (std::size_t i = 0; i < pairs.size(); ++i) v[i] = (*this)(pairs[i][0], pairs[i][1]);
    return v;
  }
};

// f(x,x) = 0 and f(x0,x1) + f(x0*x1,x2) - f(x0,x2) - f(x0*x2,x1*x2) = 0 for
// all triples.
inline bool is_2cocycle(const Quandle& q, const Cocycle2& phi) {
  if (phi.order != q.order() || static_cast<int>(phi.values.size()) != q.order()) return false;
  auto reduce = [&](long long v) {
    return phi.coefficients.kind == Coefficients::Kind::IntegersMod ? mod_p(v, phi.coefficients.modulus) : v;
  };
  const int m = q.order();
  for (int x = 0; x < m; ++x)
    if (reduce(phi(x, x)) != 0) return false;
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c) {
        const long long lhs = phi(a, b) + phi(q.op(a, b), c) - phi(a, c) - phi(q.op(a, c), q.op(b, c));
        if (reduce(lhs) != 0) return false;
      }
  return true;
}

// Exponent cochain of theta = t^(sum_i chi_(0,i)) on P_n^sigma: e(0, y) = 1
// for y != 0, zero elsewhere.
inline Cocycle2 theta_cocycle(int n) {
  if (n < 1) throw InvalidArgument("theta_cocycle: n must be positive");
  Cocycle2 theta = Cocycle2::zero(n + 1);
  for (int y = 1; y <= n; ++y) theta.values[0][static_cast<std::size_t>(y)] = 1;
  return theta;
}

}  // namespace quandle

#endif  // QUANDLE_COHOMOLOGY_HPP

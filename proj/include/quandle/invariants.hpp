#ifndef QUANDLE_INVARIANTS_HPP
#define QUANDLE_INVARIANTS_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "quandle/core.hpp"
#include "quandle/permutation.hpp"

namespace quandle {

// Sum of c_ij s^i t^j with integer coefficients; zero coefficients are never
// stored.
class TwoVarPolynomial {
 public:
  using Exponents = std::pair<int, int>;  // (s-degree, t-degree)

  void add_term(int s_degree, int t_degree, long long coefficient) {
    if (coefficient == 0) return;
    auto& c = terms_[{s_degree, t_degree}];
    c += coefficient;
    if (c == 0) terms_.erase({s_degree, t_degree});
  }

  long long coefficient(int s_degree, int t_degree) const {
    auto it = terms_.find({s_degree, t_degree});
    return it == terms_.end() ? 0 : it->second;
  }

  const std::map<Exponents, long long>& terms() const { return terms_; }

  long long coefficient_sum() const {
    long long sum = 0;
    for (const auto& [e, c] : terms_) sum += c;
    return sum;
  }

  // Descending t-degree, then descending s-degree: "s^4t^4 + 2s^3t^4 + s^4t^2".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<Exponents, long long>> ordered(terms_.begin(), terms_.end());
    std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
      if (a.first.second != b.first.second) return a.first.second > b.first.second;
      return a.first.first > b.first.first;
    });
    std::string out;
    for (std::size_t i = 0; i < ordered.size(); ++i) {
      auto [e, c] = ordered[i];
      if (i) out += c < 0 ? " - " : " + ";
      else if (c < 0) out += "-";
      const long long magnitude = c < 0 ? -c : c;
      std::string mono = power_text('s', e.first) + power_text('t', e.second);
      if (magnitude != 1 || mono.empty()) out += std::to_string(magnitude);
      out += mono;
    }
    return out;
  }

  friend bool operator==(const TwoVarPolynomial&, const TwoVarPolynomial&) = default;

 private:
  static std::string power_text(char var, int degree) {
    if (degree == 0) return "";
    if (degree == 1) return std::string(1, var);
    return std::string(1, var) + "^" + std::to_string(degree);
  }

  std::map<Exponents, long long> terms_;
};

// qp_Q(s,t) = sum_x s^r(x) t^c(x), r(x) = #{y : x*y = x}, c(x) = #{y : y*x = y}.
inline TwoVarPolynomial quandle_polynomial(const Quandle& q) {
  TwoVarPolynomial p;
  for (int x = 0; x < q.order(); ++x) {
    int r = 0, c = 0;
    for (int y = 0; y < q.order(); ++y) {
      if (q.op(x, y) == x) ++r;
      if (q.op(y, x) == y) ++c;
    }
    p.add_term(r, c, 1);
  }
  return p;
}

// Closed form for P_n^sigma with alpha fixed positives:
// alpha s^(n+1) t^(n+1) + (n - alpha) s^n t^(n+1) + s^(n+1) t^(1+alpha).
inline TwoVarPolynomial p_polynomial_formula(int n, const Permutation& sigma) {
  if (sigma.degree() != n) throw InvalidArgument("p_polynomial_formula: degree mismatch");
  const int alpha = sigma.fixed_point_count();
  TwoVarPolynomial p;
  p.add_term(n + 1, n + 1, alpha);
  p.add_term(n, n + 1, n - alpha);
  p.add_term(n + 1, 1 + alpha, 1);
  return p;
}

// Why rho fails to be a good involution of q, or nullopt if it is one.
inline std::optional<std::string> good_involution_failure(const Quandle& q,
                                                          const std::vector<Element>& rho) {
  const int m = q.order();
  if (static_cast<int>(rho.size()) != m) return "rho has wrong length";
  for (Element v : rho)
    if (!q.contains(v)) return "rho value out of range";
  for (int x = 0; x < m; ++x)
    if (rho[static_cast<std::size_t>(rho[static_cast<std::size_t>(x)])] != x)
      return "rho is not an involution at " + std::to_string(x);
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) {
      if (rho[static_cast<std::size_t>(q.op(x, y))] != q.op(rho[static_cast<std::size_t>(x)], y))
        return "rho(x*y) != rho(x)*y at (" + std::to_string(x) + "," + std::to_string(y) + ")";
      if (q.op(x, rho[static_cast<std::size_t>(y)]) != q.bar(x, y))
        return "x*rho(y) != x bar* y at (" + std::to_string(x) + "," + std::to_string(y) + ")";
    }
  return std::nullopt;
}

// A quandle with a good involution.
class SymmetricQuandle {
 public:
  SymmetricQuandle(Quandle q, std::vector<Element> rho) : quandle_(std::move(q)), rho_(std::move(rho)) {
    if (auto why = good_involution_failure(quandle_, rho_)) throw AxiomViolation(*why);
  }

  const Quandle& quandle() const { return quandle_; }
  const std::vector<Element>& rho() const { return rho_; }
  Element rho(Element x) const { return rho_[static_cast<std::size_t>(x)]; }

 private:
  Quandle quandle_;
  std::vector<Element> rho_;
};

// All maps r of {0..m-1} with r o r = id (identity included), in
// lexicographic order of image arrays.
inline std::vector<std::vector<Element>> involutions_of_set(int m) {
  std::vector<std::vector<Element>> result;
  std::vector<Element> image(static_cast<std::size_t>(m), -1);
  auto rec = [&](auto&& self, int x) -> void {
    while (x < m && image[static_cast<std::size_t>(x)] >= 0) ++x;
    if (x == m) {
      result.push_back(image);
      return;
    }
    image[static_cast<std::size_t>(x)] = x;
    self(self, x + 1);
    for (int y = x + 1; y < m; ++y) {
      if (image[static_cast<std::size_t>(y)] >= 0) continue;
      image[static_cast<std::size_t>(x)] = y;
      image[static_cast<std::size_t>(y)] = x;
      self(self, x + 1);
      image[static_cast<std::size_t>(y)] = -1;
    }
    image[static_cast<std::size_t>(x)] = -1;
  };
  rec(rec, 0);
  std::sort(result.begin(), result.end());
  return result;
}

// Every good involution of q (the identity counts when it qualifies).
inline std::vector<SymmetricQuandle> good_involutions(const Quandle& q) {
  std::vector<SymmetricQuandle> result;
  for (auto& rho : involutions_of_set(q.order()))
    if (!good_involution_failure(q, rho)) result.emplace_back(q, std::move(rho));
  return result;
}

// Cycle notation for a map on {0..m-1}; 0 is an ordinary point. "()" for the
// identity.
inline std::string format_element_cycles(const std::vector<Element>& map) {
  std::string out;
  std::vector<bool> seen(map.size(), false);
  for (std::size_t start = 0; start < map.size(); ++start) {
    if (seen[start] || map[start] == static_cast<Element>(start)) continue;
    out += '(';
    bool first = true;
    for (auto p = start; !seen[p]; p = static_cast<std::size_t>(map[p])) {
      seen[p] = true;
      if (!first) out += ' ';
      out += std::to_string(p);
      first = false;
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

// Parses cycle notation on {0..m-1} into an image array.
inline std::vector<Element> parse_element_cycles(std::string_view text, int m) {
  return cycles_to_image(parse_cycle_list(text), m, 0);
}

}  // namespace quandle

#endif  // QUANDLE_INVARIANTS_HPP

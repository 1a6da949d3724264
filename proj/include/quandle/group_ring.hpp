#ifndef QUANDLE_GROUP_RING_HPP
#define QUANDLE_GROUP_RING_HPP

#include <map>
#include <string>

namespace quandle {

// An element sum_k c_k t^k of Z[<t>], the integral group ring of the infinite
// cyclic group: a Laurent polynomial in t. Zero coefficients are never stored.
class GroupRingElement {
 public:
  GroupRingElement() = default;

  static GroupRingElement monomial(long long exponent, long long coefficient = 1) {
    GroupRingElement g;
    g.add_term(exponent, coefficient);
    return g;
  }

  void add_term(long long exponent, long long coefficient) {
    if (coefficient == 0) return;
    auto& c = terms_[exponent];
    c += coefficient;
    if (c == 0) terms_.erase(exponent);
  }

  long long coefficient(long long exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? 0 : it->second;
  }

  const std::map<long long, long long>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // Image under the augmentation t -> 1.
  long long augmentation() const {
    long long sum = 0;
    for (const auto& [e, c] : terms_) sum += c;
    return sum;
  }

  GroupRingElement& operator+=(const GroupRingElement& other) {
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
  }

  friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) { return a += b; }

  friend GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
    GroupRingElement out;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
    return out;
  }

  // Ascending exponent: "5 + 4t^2", "4t^-2 + 5", "0" for the zero element.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      if (!first) out += c < 0 ? " - " : " + ";
      else if (c < 0) out += "-";
      first = false;
      const long long magnitude = c < 0 ? -c : c;
      if (e == 0) {
        out += std::to_string(magnitude);
        continue;
      }
      if (magnitude != 1) out += std::to_string(magnitude);
      out += e == 1 ? std::string("t") : "t^" + std::to_string(e);
    }
    return out;
  }

  friend bool operator==(const GroupRingElement&, const GroupRingElement&) = default;

 private:
  std::map<long long, long long> terms_;
};

}  // namespace quandle

#endif  // QUANDLE_GROUP_RING_HPP

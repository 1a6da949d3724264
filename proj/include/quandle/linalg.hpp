#ifndef QUANDLE_LINALG_HPP
#define QUANDLE_LINALG_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "quandle/error.hpp"

namespace quandle {

using BigInt = boost::multiprecision::cpp_int;

// Dense row-major matrix.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const T& v) { return v == 0; });
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
  }

  template <typename U>
  Matrix<U> cast() const {
    Matrix<U> out(rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) out(r, c) = U((*this)(r, c));
    return out;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<long long>;
using BigMatrix = Matrix<BigInt>;

template <typename T>
Matrix<T> multiply(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) throw InvalidArgument("matrix product: shape mismatch");
  Matrix<T> c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

// Rows of a followed by rows of b.
template <typename T>
Matrix<T> vstack(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() == 0) return b;
  if (b.rows() == 0) return a;
  if (a.cols() != b.cols()) throw InvalidArgument("vstack: column mismatch");
  Matrix<T> out(a.rows() + b.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) out(a.rows() + r, c) = b(r, c);
  return out;
}

// Matrix whose columns are the given vectors (all of length `length`).
template <typename T>
Matrix<T> from_columns(const std::vector<std::vector<T>>& columns, std::size_t length) {
  Matrix<T> m(length, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c)
    for (std::size_t r = 0; r < length; ++r) m(r, c) = columns[c][r];
  return m;
}

inline BigInt abs_big(const BigInt& v) { return v < 0 ? BigInt(-v) : v; }

// Floor division for the signed quotients used in Euclidean reduction.
inline BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// Integer row echelon form by unimodular row operations. Each pivot is found
// by repeated Euclidean reduction against the row of least absolute value in
// the pivot column. Row operations are mirrored on *track when given. Returns
// the rank; rows [rank, rows) of the result are zero.
inline std::size_t integer_echelon(BigMatrix& a, BigMatrix* track = nullptr) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < a.cols() && rank < a.rows(); ++col) {
    for (;;) {
      std::optional<std::size_t> pivot;
      for (std::size_t r = rank; r < a.rows(); ++r)
        if (a(r, col) != 0 && (!pivot || abs_big(a(r, col)) < abs_big(a(*pivot, col)))) pivot = r;
      if (!pivot) break;
      a.swap_rows(rank, *pivot);
      if (track) track->swap_rows(rank, *pivot);
      bool clean = true;
      for (std::size_t r = rank + 1; r < a.rows(); ++r) {
        if (a(r, col) == 0) continue;
        const BigInt q = floor_div(a(r, col), a(rank, col));
        for (std::size_t c = col; c < a.cols(); ++c)
          if (a(rank, c) != 0) a(r, c) -= q * a(rank, c);
        if (track)
          for (std::size_t c = 0; c < track->cols(); ++c)
            if ((*track)(rank, c) != 0) (*track)(r, c) -= q * (*track)(rank, c);
        if (a(r, col) != 0) clean = false;
      }
      if (clean) {
        ++rank;
        break;
      }
    }
  }
  return rank;
}

inline std::size_t rank_rational(const BigMatrix& m) {
  BigMatrix a = m;
  return integer_echelon(a);
}

inline std::size_t rank_rational(const IntMatrix& m) { return rank_rational(m.cast<BigInt>()); }

// Z-basis of {v in Z^cols : m v = 0}, as column vectors.
inline std::vector<std::vector<BigInt>> integer_kernel(const BigMatrix& m) {
  BigMatrix a = m.transpose();
  BigMatrix track = BigMatrix::identity(m.cols());
  const std::size_t rank = integer_echelon(a, &track);
  std::vector<std::vector<BigInt>> basis;
  for (std::size_t r = rank; r < track.rows(); ++r) {
    std::vector<BigInt> v(track.cols());
    for (std::size_t c = 0; c < track.cols(); ++c) v[c] = track(r, c);
    basis.push_back(std::move(v));
  }
  return basis;
}

inline long long mod_p(long long v, long long p) {
  v %= p;
  return v < 0 ? v + p : v;
}

inline long long mod_p(const BigInt& v, long long p) {
  BigInt r = v % p;
  if (r < 0) r += p;
  return r.convert_to<long long>();
}

inline long long inverse_mod_p(long long a, long long p) {
  long long result = 1, base = mod_p(a, p), e = p - 2;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result;
}

// Row echelon over F_p; mirrors row operations on *track. Returns the rank.
inline std::size_t echelon_mod_p(IntMatrix& a, long long p, IntMatrix* track = nullptr) {
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) a(r, c) = mod_p(a(r, c), p);
  if (track)
    for (std::size_t r = 0; r < track->rows(); ++r)
      for (std::size_t c = 0; c < track->cols(); ++c) (*track)(r, c) = mod_p((*track)(r, c), p);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < a.cols() && rank < a.rows(); ++col) {
    std::size_t pivot = rank;
    while (pivot < a.rows() && a(pivot, col) == 0) ++pivot;
    if (pivot == a.rows()) continue;
    a.swap_rows(rank, pivot);
    if (track) track->swap_rows(rank, pivot);
    const long long inv = inverse_mod_p(a(rank, col), p);
    for (std::size_t c = 0; c < a.cols(); ++c) a(rank, c) = a(rank, c) * inv % p;
    if (track)
      for (std::size_t c = 0; c < track->cols(); ++c) (*track)(rank, c) = (*track)(rank, c) * inv % p;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == rank || a(r, col) == 0) continue;
      const long long f = a(r, col);
      for (std::size_t c = col; c < a.cols(); ++c) a(r, c) = mod_p(a(r, c) - f * a(rank, c), p);
      if (track)
        for (std::size_t c = 0; c < track->cols(); ++c)
          (*track)(r, c) = mod_p((*track)(r, c) - f * (*track)(rank, c), p);
    }
    ++rank;
  }
  return rank;
}

inline std::size_t rank_mod_p(const IntMatrix& m, long long p) {
  IntMatrix a = m;
  return echelon_mod_p(a, p);
}

// F_p-basis of {v : m v = 0 mod p}, as column vectors.
inline std::vector<std::vector<long long>> kernel_mod_p(const IntMatrix& m, long long p) {
  IntMatrix a = m.transpose();
  IntMatrix track = IntMatrix::identity(m.cols());
  const std::size_t rank = echelon_mod_p(a, p, &track);
  std::vector<std::vector<long long>> basis;
  for (std::size_t r = rank; r < track.rows(); ++r) {
    std::vector<long long> v(track.cols());
    for (std::size_t c = 0; c < track.cols(); ++c) v[c] = track(r, c);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Moves the least nonzero entry of row t / column t (from index t on) to (t,t).
inline void select_pivot_in_cross(BigMatrix& a, std::size_t t) {
  std::size_t best_r = t, best_c = t;
  BigInt best = a(t, t) == 0 ? BigInt(-1) : abs_big(a(t, t));
  for (std::size_t r = t + 1; r < a.rows(); ++r)
    if (a(r, t) != 0 && (best < 0 || abs_big(a(r, t)) < best)) {
      best = abs_big(a(r, t));
      best_r = r;
      best_c = t;
    }
  for (std::size_t c = t + 1; c < a.cols(); ++c)
    if (a(t, c) != 0 && (best < 0 || abs_big(a(t, c)) < best)) {
      best = abs_big(a(t, c));
      best_r = t;
      best_c = c;
    }
  a.swap_rows(t, best_r);
  a.swap_cols(t, best_c);
}

// Nonzero diagonal entries of the Smith normal form, each dividing the next.
// Pivots are chosen by least absolute value.
inline std::vector<BigInt> smith_invariants(BigMatrix a) {
  const std::size_t rows = a.rows(), cols = a.cols();
  std::vector<BigInt> diagonal;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    auto select_pivot = [&]() -> bool {
      std::optional<std::pair<std::size_t, std::size_t>> best;
      for (std::size_t r = t; r < rows; ++r)
        for (std::size_t c = t; c < cols; ++c)
          if (a(r, c) != 0 && (!best || abs_big(a(r, c)) < abs_big(a(best->first, best->second))))
            best = {r, c};
      if (!best) return false;
      a.swap_rows(t, best->first);
      a.swap_cols(t, best->second);
      return true;
    };
    if (!select_pivot()) break;
    for (;;) {
      bool changed = false;
      for (std::size_t r = t + 1; r < rows; ++r) {
        if (a(r, t) == 0) continue;
        const BigInt q = floor_div(a(r, t), a(t, t));
        for (std::size_t c = t; c < cols; ++c)
          if (a(t, c) != 0) a(r, c) -= q * a(t, c);
        if (a(r, t) != 0) changed = true;
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        if (a(t, c) == 0) continue;
        const BigInt q = floor_div(a(t, c), a(t, t));
        for (std::size_t r = t; r < rows; ++r)
          if (a(r, t) != 0) a(r, c) -= q * a(r, t);
        if (a(t, c) != 0) changed = true;
      }
      if (changed) {
        select_pivot_in_cross(a, t);
        continue;
      }
      // Row and column t are clear; enforce divisibility of the remainder.
      std::optional<std::size_t> bad_row;
      for (std::size_t r = t + 1; r < rows && !bad_row; ++r)
        for (std::size_t c = t + 1; c < cols; ++c)
          if (a(r, c) % a(t, t) != 0) {
            bad_row = r;
            break;
          }
      if (!bad_row) break;
      for (std::size_t c = t; c < cols; ++c) a(t, c) += a(*bad_row, c);
    }
    diagonal.push_back(abs_big(a(t, t)));
  }
  return diagonal;
}

}  // namespace quandle

#endif  // QUANDLE_LINALG_HPP

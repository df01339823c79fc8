#pragma once

// Cartan datum for the special linear Lie algebra A_n: index set {1..n},
// Cartan matrix, weights in the fundamental-weight basis, simple roots,
// and the shape/dimension utilities the test suites lean on.

#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace crystal {

using Int = std::int64_t;

// All arithmetic in this library is exact; anything that would wrap raises.
inline Int checked_add(Int a, Int b) {
  Int r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in addition");
  return r;
}

inline Int checked_sub(Int a, Int b) {
  Int r = 0;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("integer overflow in subtraction");
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in multiplication");
  return r;
}

/// Rank n of A_n; the index set is I = {1..n}.
struct Rank {
  int n;
  explicit Rank(int rank) : n(rank) {
    if (rank < 1) throw std::invalid_argument("rank must be at least 1");
  }
};

/// Integral weight written in the fundamental-weight basis Lambda_1..Lambda_n.
struct Weight {
  std::vector<Int> coeffs;

  Weight() = default;
  explicit Weight(std::vector<Int> c) : coeffs(std::move(c)) {}

  int rank() const { return static_cast<int>(coeffs.size()); }

  /// Coefficient of Lambda_i, 1-based.
  Int coeff(int i) const {
    if (i < 1 || i > rank()) throw std::out_of_range("weight index out of range");
    return coeffs[static_cast<size_t>(i) - 1];
  }

  bool dominant() const {
    for (Int c : coeffs)
      if (c < 0) return false;
    return true;
  }

  bool is_zero() const {
    for (Int c : coeffs)
      if (c != 0) return false;
    return true;
  }

  friend bool operator==(const Weight&, const Weight&) = default;
};

inline Weight zero_weight(Rank r) { return Weight(std::vector<Int>(static_cast<size_t>(r.n), 0)); }

inline Weight operator+(const Weight& a, const Weight& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("weight rank mismatch");
  Weight w = a;
  for (size_t i = 0; i < w.coeffs.size(); ++i) w.coeffs[i] = checked_add(w.coeffs[i], b.coeffs[i]);
  return w;
}

inline Weight operator-(const Weight& a, const Weight& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("weight rank mismatch");
  Weight w = a;
  for (size_t i = 0; i < w.coeffs.size(); ++i) w.coeffs[i] = checked_sub(w.coeffs[i], b.coeffs[i]);
  return w;
}

/// Lexicographically ordered exponent pair (y^0, y^1).
struct ExpPair {
  Int a = 0;
  Int b = 0;

  bool is_zero() const { return a == 0 && b == 0; }

  friend auto operator<=>(const ExpPair&, const ExpPair&) = default;
};

inline ExpPair operator+(ExpPair x, ExpPair y) { return {checked_add(x.a, y.a), checked_add(x.b, y.b)}; }
inline ExpPair operator-(ExpPair x, ExpPair y) { return {checked_sub(x.a, y.a), checked_sub(x.b, y.b)}; }
inline ExpPair operator-(ExpPair x) { return {checked_sub(0, x.a), checked_sub(0, x.b)}; }

/// Weight whose coefficients are exponent pairs, as produced by wt~ on
/// extended monomials.
struct ExtWeight {
  std::vector<ExpPair> coeffs;

  ExtWeight() = default;
  explicit ExtWeight(std::vector<ExpPair> c) : coeffs(std::move(c)) {}

  int rank() const { return static_cast<int>(coeffs.size()); }

  ExpPair coeff(int i) const {
    if (i < 1 || i > rank()) throw std::out_of_range("weight index out of range");
    return coeffs[static_cast<size_t>(i) - 1];
  }

  /// Second components only; the projection onto ordinary weights.
  Weight projected() const {
    std::vector<Int> c(coeffs.size());
    for (size_t i = 0; i < coeffs.size(); ++i) c[i] = coeffs[i].b;
    return Weight(std::move(c));
  }

  friend bool operator==(const ExtWeight&, const ExtWeight&) = default;
};

inline ExtWeight zero_ext_weight(Rank r) {
  return ExtWeight(std::vector<ExpPair>(static_cast<size_t>(r.n)));
}

/// Entry a_ij of the A_n Cartan matrix.
inline Int cartan_entry(Rank r, int i, int j) {
  if (i < 1 || i > r.n || j < 1 || j > r.n) throw std::out_of_range("Cartan index out of range");
  if (i == j) return 2;
  if (i - j == 1 || j - i == 1) return -1;
  return 0;
}

/// Simple root alpha_i written in the fundamental-weight basis, so that
/// pairing(j, simple_root(i)) = a_ji.
inline Weight simple_root(Rank r, int i) {
  if (i < 1 || i > r.n) throw std::out_of_range("simple root index out of range");
  Weight w = zero_weight(r);
  for (int j = 1; j <= r.n; ++j) w.coeffs[static_cast<size_t>(j) - 1] = cartan_entry(r, j, i);
  return w;
}

/// <h_i, w>; in the Lambda-basis this is just the i-th coefficient.
inline Int pairing(int i, const Weight& w) { return w.coeff(i); }

/// Partition attached to a dominant weight: row i has length l_i + ... + l_n,
/// trailing empty rows dropped.
inline std::vector<Int> shape_of(const Weight& lambda) {
  if (!lambda.dominant()) throw std::invalid_argument("shape_of requires a dominant weight");
  int n = lambda.rank();
  std::vector<Int> rows(static_cast<size_t>(n), 0);
  Int suffix = 0;
  for (int i = n; i >= 1; --i) {
    suffix = checked_add(suffix, lambda.coeff(i));
    rows[static_cast<size_t>(i) - 1] = suffix;
  }
  while (!rows.empty() && rows.back() == 0) rows.pop_back();
  return rows;
}

/// Number of semistandard fillings of `shape` with entries in {1..max_entry},
/// counted by exhaustive enumeration.
inline Int count_ssyt(const std::vector<Int>& shape, int max_entry) {
  if (shape.empty()) return 1;
  std::vector<std::vector<int>> fill(shape.size());
  for (size_t r = 0; r < shape.size(); ++r) fill[r].assign(static_cast<size_t>(shape[r]), 0);

  struct Pos {
    size_t row, col;
  };
  std::vector<Pos> cells;
  for (size_t r = 0; r < fill.size(); ++r)
    for (size_t c = 0; c < fill[r].size(); ++c) cells.push_back({r, c});

  Int count = 0;
  auto rec = [&](auto&& self, size_t at) -> void {
    if (at == cells.size()) {
      count = checked_add(count, 1);
      return;
    }
    auto [r, c] = cells[at];
    int lo = 1;
    if (c > 0) lo = std::max(lo, fill[r][c - 1]);
    if (r > 0) lo = std::max(lo, fill[r - 1][c] + 1);
    for (int v = lo; v <= max_entry; ++v) {
      fill[r][c] = v;
      self(self, at + 1);
    }
    fill[r][c] = 0;
  };
  rec(rec, 0);
  return count;
}

/// Cardinality of the set of semistandard tableaux of shape shape_of(lambda)
/// with entries in {1..n+1}. Used as the independent vertex-count oracle for
/// every generated highest weight crystal.
inline Int dimension_oracle(Rank r, const Weight& lambda) {
  if (lambda.rank() != r.n) throw std::invalid_argument("weight rank mismatch");
  return count_ssyt(shape_of(lambda), r.n + 1);
}

/// Solve sum_j c_j alpha_j = delta for integer c_j >= 0. Returns nullopt when
/// delta is not a nonnegative integral combination of simple roots. Uses the
/// closed form of the inverse A_n Cartan matrix.
inline std::optional<std::vector<Int>> root_coordinates(Rank r, const Weight& delta) {
  if (delta.rank() != r.n) throw std::invalid_argument("weight rank mismatch");
  int n = r.n;
  std::vector<Int> c(static_cast<size_t>(n), 0);
  for (int j = 1; j <= n; ++j) {
    Int num = 0;
    for (int k = 1; k <= n; ++k) {
      Int factor = checked_mul(static_cast<Int>(std::min(j, k)), static_cast<Int>(n + 1 - std::max(j, k)));
      num = checked_add(num, checked_mul(factor, delta.coeff(k)));
    }
    if (num % (n + 1) != 0) return std::nullopt;
    Int cj = num / (n + 1);
    if (cj < 0) return std::nullopt;
    c[static_cast<size_t>(j) - 1] = cj;
  }
  return c;
}

/// Height of delta in the root lattice (total number of simple roots),
/// or nullopt when delta is not a nonnegative root-lattice element.
inline std::optional<Int> root_height(Rank r, const Weight& delta) {
  auto c = root_coordinates(r, delta);
  if (!c) return std::nullopt;
  Int h = 0;
  for (Int x : *c) h = checked_add(h, x);
  return h;
}

}  // namespace crystal

#pragma once

// Plain and extended Nakajima monomials in the variables Y_i(m), together
// with the generic crystal structure: wt, phi, eps, the acting monomials
// A_i(m) for an arbitrary admissible c-matrix, and the Kashiwara operators.
// This is the ground truth the specialized signature-rule operators of the
// B(infinity)/B(lambda) models are verified against.

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "crystal/cartan.hpp"

namespace crystal {

/// Crystal operator result: either an element or the absorbing zero.
/// ZERO (nullopt) is distinct from every monomial, including the empty one.
template <class T>
using KOResult = std::optional<T>;

struct VarKey {
  int i;  // color, 1..n
  Int m;  // position
  friend auto operator<=>(const VarKey&, const VarKey&) = default;
};

/// Off-diagonal integers c_ij with c_ij + c_ji = 1 selecting one crystal
/// structure on the monomial set. Stored via the upper triangle; the lower
/// triangle is forced by the constraint.
class CMatrix {
 public:
  CMatrix(Rank r, std::vector<Int> upper) : n_(r.n), upper_(std::move(upper)) {
    size_t want = static_cast<size_t>(n_) * (n_ - 1) / 2;
    if (upper_.size() != want) throw std::invalid_argument("c-matrix upper triangle has wrong size");
  }

  /// c_ij = 0 for i > j and 1 for i < j.
  static CMatrix standard(Rank r) {
    return CMatrix(r, std::vector<Int>(static_cast<size_t>(r.n) * (r.n - 1) / 2, 1));
  }

  int rank() const { return n_; }

  Int entry(int i, int j) const {
    if (i < 1 || i > n_ || j < 1 || j > n_ || i == j) throw std::out_of_range("c-matrix index out of range");
    if (i < j) return upper_[index(i, j)];
    return checked_sub(1, upper_[index(j, i)]);
  }

  friend bool operator==(const CMatrix&, const CMatrix&) = default;

 private:
  size_t index(int i, int j) const {
    // i < j; rows of the upper triangle laid out consecutively
    size_t row_start = static_cast<size_t>(i - 1) * n_ - static_cast<size_t>(i) * (i - 1) / 2;
    return row_start + static_cast<size_t>(j - i - 1);
  }

  int n_;
  std::vector<Int> upper_;
};

namespace detail {

inline bool exp_is_zero(Int e) { return e == 0; }
inline bool exp_is_zero(const ExpPair& e) { return e.is_zero(); }
inline Int exp_sum(Int a, Int b) { return checked_add(a, b); }
inline ExpPair exp_sum(const ExpPair& a, const ExpPair& b) { return a + b; }
inline Int exp_neg(Int a) { return checked_sub(0, a); }
inline ExpPair exp_neg(const ExpPair& a) { return -a; }

inline std::string exp_str(Int e) { return std::to_string(e); }
inline std::string exp_str(const ExpPair& e) {
  return "(" + std::to_string(e.a) + "," + std::to_string(e.b) + ")";
}

template <class E>
struct Units;
template <>
struct Units<Int> {
  static Int zero() { return 0; }
  static Int signed_unit(int sign) { return sign; }
};
template <>
struct Units<ExpPair> {
  static ExpPair zero() { return {}; }
  static ExpPair signed_unit(int sign) { return {0, sign}; }
};

}  // namespace detail

/// Finite-support exponent map (i, m) -> y_i(m). Stored entries are nonzero;
/// keys are kept in (i, m) order, which is also the canonical print order.
template <class E>
class Monomial {
 public:
  explicit Monomial(Rank r) : n_(r.n) {}

  int rank() const { return n_; }

  const std::map<VarKey, E>& factors() const { return exps_; }

  bool is_one() const { return exps_.empty(); }

  E exponent(int i, Int m) const {
    auto it = exps_.find(VarKey{i, m});
    return it == exps_.end() ? detail::Units<E>::zero() : it->second;
  }

  /// Multiply by Y_i(m)^e, cancelling to zero where applicable.
  void multiply_factor(int i, Int m, E e) {
    if (i < 1 || i > n_) throw std::out_of_range("variable color out of range");
    if (detail::exp_is_zero(e)) return;
    VarKey key{i, m};
    auto it = exps_.find(key);
    if (it == exps_.end()) {
      exps_.emplace(key, e);
      return;
    }
    it->second = detail::exp_sum(it->second, e);
    if (detail::exp_is_zero(it->second)) exps_.erase(it);
  }

  Monomial& operator*=(const Monomial& o) {
    if (o.n_ != n_) throw std::invalid_argument("monomial rank mismatch");
    for (const auto& [key, e] : o.exps_) multiply_factor(key.i, key.m, e);
    return *this;
  }

  friend Monomial operator*(Monomial a, const Monomial& b) {
    a *= b;
    return a;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  int n_;
  std::map<VarKey, E> exps_;
};

using PlainMonomial = Monomial<Int>;
using ExtMonomial = Monomial<ExpPair>;

/// Deterministic text form: factors sorted by (i, m), zero exponents absent,
/// empty monomial printed as "1".
template <class E>
std::string canonical_serialize(const Monomial<E>& M) {
  if (M.is_one()) return "1";
  std::string out;
  bool first = true;
  for (const auto& [key, e] : M.factors()) {
    if (!first) out += "*";
    first = false;
    out += "Y" + std::to_string(key.i) + "(" + std::to_string(key.m) + ")^" + detail::exp_str(e);
  }
  return out;
}

/// The monomial A_i(m)^{sign} = Y_i(m)^s Y_i(m+1)^s prod_{j~i} Y_j(m+c_ji)^{-s}
/// with the boundary variables Y_0, Y_{n+1} suppressed. The template parameter
/// selects plain exponents versus pairs (0, +-1).
template <class E>
Monomial<E> a_multiplier(const CMatrix& c, int i, Int m, int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +-1");
  if (i < 1 || i > c.rank()) throw std::out_of_range("color out of range");
  Rank r(c.rank());
  Monomial<E> M(r);
  E unit = detail::Units<E>::signed_unit(sign);
  E counit = detail::exp_neg(unit);
  M.multiply_factor(i, m, unit);
  M.multiply_factor(i, checked_add(m, 1), unit);
  if (i - 1 >= 1) M.multiply_factor(i - 1, checked_add(m, c.entry(i - 1, i)), counit);
  if (i + 1 <= c.rank()) M.multiply_factor(i + 1, checked_add(m, c.entry(i + 1, i)), counit);
  return M;
}

inline PlainMonomial a_multiplier_plain(const CMatrix& c, int i, Int m, int sign) {
  return a_multiplier<Int>(c, i, m, sign);
}
inline ExtMonomial a_multiplier_ext(const CMatrix& c, int i, Int m, int sign) {
  return a_multiplier<ExpPair>(c, i, m, sign);
}

/// wt(M) = sum_i (sum_m y_i(m)) Lambda_i.
inline Weight weight(const PlainMonomial& M) {
  Weight w = zero_weight(Rank(M.rank()));
  for (const auto& [key, e] : M.factors())
    w.coeffs[static_cast<size_t>(key.i) - 1] = checked_add(w.coeffs[static_cast<size_t>(key.i) - 1], e);
  return w;
}

/// Full pair-valued weight wt~ of an extended monomial.
inline ExtWeight weight_pairs(const ExtMonomial& M) {
  ExtWeight w = zero_ext_weight(Rank(M.rank()));
  for (const auto& [key, e] : M.factors())
    w.coeffs[static_cast<size_t>(key.i) - 1] = w.coeffs[static_cast<size_t>(key.i) - 1] + e;
  return w;
}

/// Projected weight of an extended monomial: second components only.
inline Weight weight(const ExtMonomial& M) { return weight_pairs(M).projected(); }

namespace detail {

// Exponents of color i sorted by position, plus the candidate scan points.
// Prefix and suffix sums are step functions that change only at support
// positions, so every value and every interval endpoint is witnessed on
// {s - 1, s : s in support}.
template <class E>
struct ColorScan {
  std::vector<Int> pos;
  std::vector<E> exp;

  bool empty() const { return pos.empty(); }

  std::vector<Int> candidates() const {
    std::vector<Int> c;
    for (Int s : pos) {
      c.push_back(checked_sub(s, 1));
      c.push_back(s);
    }
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    return c;
  }

  E prefix_until(Int m) const {  // sum over positions <= m
    E acc = Units<E>::zero();
    for (size_t k = 0; k < pos.size() && pos[k] <= m; ++k) acc = exp_sum(acc, exp[k]);
    return acc;
  }

  E suffix_after(Int m) const {  // sum over positions > m
    E acc = Units<E>::zero();
    for (size_t k = pos.size(); k-- > 0 && pos[k] > m;) acc = exp_sum(acc, exp[k]);
    return acc;
  }
};

template <class E>
ColorScan<E> color_scan(const Monomial<E>& M, int i) {
  ColorScan<E> s;
  auto lo = M.factors().lower_bound(VarKey{i, std::numeric_limits<Int>::min()});
  for (auto it = lo; it != M.factors().end() && it->first.i == i; ++it) {
    s.pos.push_back(it->first.m);
    s.exp.push_back(it->second);
  }
  return s;
}

}  // namespace detail

/// phi~_i(M): max over m of the prefix sums, the empty prefix included.
inline ExpPair phi_tilde(const ExtMonomial& M, int i) {
  auto scan = detail::color_scan(M, i);
  ExpPair best{};  // empty prefix
  for (Int m : scan.candidates()) best = std::max(best, scan.prefix_until(m));
  return best;
}

/// eps~_i(M): max over m of minus the suffix sums, the empty suffix included.
inline ExpPair eps_tilde(const ExtMonomial& M, int i) {
  auto scan = detail::color_scan(M, i);
  ExpPair best{};
  for (Int m : scan.candidates()) best = std::max(best, -scan.suffix_after(m));
  return best;
}

inline Int phi(const PlainMonomial& M, int i) {
  auto scan = detail::color_scan(M, i);
  Int best = 0;
  for (Int m : scan.candidates()) best = std::max(best, scan.prefix_until(m));
  return best;
}

inline Int eps(const PlainMonomial& M, int i) {
  auto scan = detail::color_scan(M, i);
  Int best = 0;
  for (Int m : scan.candidates()) best = std::max(best, detail::exp_neg(scan.suffix_after(m)));
  return best;
}

/// Projected phi_i of an extended monomial: the second component of the pair
/// sum attaining phi~_i.
inline Int phi(const ExtMonomial& M, int i) { return phi_tilde(M, i).b; }

inline Int eps(const ExtMonomial& M, int i) { return eps_tilde(M, i).b; }

namespace detail {

template <class E>
E phi_value(const Monomial<E>& M, int i) {
  auto scan = color_scan(M, i);
  E best = Units<E>::zero();
  for (Int m : scan.candidates()) best = std::max(best, scan.prefix_until(m));
  return best;
}

template <class E>
E eps_value(const Monomial<E>& M, int i) {
  auto scan = color_scan(M, i);
  E best = Units<E>::zero();
  for (Int m : scan.candidates()) best = std::max(best, exp_neg(scan.suffix_after(m)));
  return best;
}

template <class E>
bool exp_positive(const E& e) {
  return Units<E>::zero() < e;
}

}  // namespace detail

/// m_f: least m attaining the phi maximum. Requires phi_i(M) > 0 (in lex
/// order for extended monomials); the least attaining m is then a support
/// position.
template <class E>
Int m_f(const Monomial<E>& M, int i) {
  E best = detail::phi_value(M, i);
  if (!detail::exp_positive(best)) throw std::invalid_argument("m_f requires phi > 0");
  auto scan = detail::color_scan(M, i);
  for (Int m : scan.candidates()) {
    if (scan.prefix_until(m) == best) {
      // selected position must carry a positive exponent, the next one not
      if (!detail::exp_positive(M.exponent(i, m))) throw std::logic_error("m_f postcondition: y_i(m_f) > 0");
      E next = M.exponent(i, checked_add(m, 1));
      if (detail::exp_positive(next)) throw std::logic_error("m_f postcondition: y_i(m_f+1) <= 0");
      return m;
    }
  }
  throw std::logic_error("m_f: maximum not attained on candidate set");
}

/// m_e: greatest m attaining the eps maximum. Requires eps_i(M) > 0.
template <class E>
Int m_e(const Monomial<E>& M, int i) {
  E best = detail::eps_value(M, i);
  if (!detail::exp_positive(best)) throw std::invalid_argument("m_e requires eps > 0");
  auto scan = detail::color_scan(M, i);
  auto cands = scan.candidates();
  for (auto it = cands.rbegin(); it != cands.rend(); ++it) {
    Int m = *it;
    if (detail::exp_neg(scan.suffix_after(m)) == best) {
      E here = M.exponent(i, m);
      if (detail::exp_positive(detail::exp_neg(here)))  // y_i(m_e) >= 0
        throw std::logic_error("m_e postcondition: y_i(m_e) >= 0");
      E next = M.exponent(i, checked_add(m, 1));
      if (!detail::exp_positive(detail::exp_neg(next)))  // y_i(m_e+1) < 0
        throw std::logic_error("m_e postcondition: y_i(m_e+1) < 0");
      return m;
    }
  }
  throw std::logic_error("m_e: maximum not attained on candidate set");
}

/// Kashiwara lowering operator on monomials: ZERO when phi vanishes, else
/// multiplication by A_i(m_f)^{-1}.
template <class E>
KOResult<Monomial<E>> f_tilde(const Monomial<E>& M, int i, const CMatrix& c) {
  if (c.rank() != M.rank()) throw std::invalid_argument("c-matrix rank mismatch");
  if (!detail::exp_positive(detail::phi_value(M, i))) return std::nullopt;
  return M * a_multiplier<E>(c, i, m_f(M, i), -1);
}

/// Kashiwara raising operator: ZERO when eps vanishes, else multiplication
/// by A_i(m_e).
template <class E>
KOResult<Monomial<E>> e_tilde(const Monomial<E>& M, int i, const CMatrix& c) {
  if (c.rank() != M.rank()) throw std::invalid_argument("c-matrix rank mismatch");
  if (!detail::exp_positive(detail::eps_value(M, i))) return std::nullopt;
  return M * a_multiplier<E>(c, i, m_e(M, i), +1);
}

/// Identify Y_i(m)^y with Y_i(m)^{(0,y)}.
inline ExtMonomial embed_plain(const PlainMonomial& M) {
  ExtMonomial out(Rank(M.rank()));
  for (const auto& [key, e] : M.factors()) out.multiply_factor(key.i, key.m, ExpPair{0, e});
  return out;
}

/// Inverse of embed_plain; defined only when every first component vanishes.
inline PlainMonomial project_ext(const ExtMonomial& M) {
  PlainMonomial out(Rank(M.rank()));
  for (const auto& [key, e] : M.factors()) {
    if (e.a != 0) throw std::invalid_argument("project_ext: nonzero first component at " +
                                              ("Y" + std::to_string(key.i) + "(" + std::to_string(key.m) + ")"));
    out.multiply_factor(key.i, key.m, e.b);
  }
  return out;
}

}  // namespace crystal

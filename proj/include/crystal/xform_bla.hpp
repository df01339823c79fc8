#pragma once

// The plain-monomial model of the highest weight crystals B(lambda) and the
// shifted families M(r;lambda): membership conditions, the X-variable normal
// form, signature-rule operators, the tableau bijection Psi, and monomial
// products of the sets.

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "crystal/cartan.hpp"
#include "crystal/monomial.hpp"
#include "crystal/tableau.hpp"
#include "crystal/xform_binf.hpp"

namespace crystal {

/// Normal form of an element of M(r;lambda): the off-diagonal array b^i_k
/// (i < k <= n+1). The diagonal entries are pinned by the row-sum identity
/// sum_{k=i..n+1} b^i_k = l_i + ... + l_n and derived on demand.
struct XFormLa {
  int n = 1;
  Weight lambda;
  Int r = 0;
  std::vector<std::vector<Int>> b;  // b[i-1][k-i-1] = b^i_k for k = i+1..n+1

  static XFormLa origin(Rank rank, const Weight& la, Int rr = 0) {
    if (la.rank() != rank.n) throw std::invalid_argument("weight rank mismatch");
    if (!la.dominant()) throw std::invalid_argument("lambda must be dominant");
    XFormLa x;
    x.n = rank.n;
    x.lambda = la;
    x.r = rr;
    x.b.resize(static_cast<size_t>(rank.n));
    for (int i = 1; i <= rank.n; ++i) x.b[static_cast<size_t>(i) - 1].assign(static_cast<size_t>(rank.n + 1 - i), 0);
    return x;
  }

  Int b_off(int i, int k) const {
    if (i < 1 || i > n || k <= i || k > n + 1) throw std::out_of_range("b index out of range");
    return b[static_cast<size_t>(i) - 1][static_cast<size_t>(k - i) - 1];
  }

  Int& b_off_ref(int i, int k) {
    if (i < 1 || i > n || k <= i || k > n + 1) throw std::out_of_range("b index out of range");
    return b[static_cast<size_t>(i) - 1][static_cast<size_t>(k - i) - 1];
  }

  /// Row sum forced by lambda: l_i + ... + l_n.
  Int row_sum(int i) const {
    Int s = 0;
    for (int k = i; k <= n; ++k) s = checked_add(s, lambda.coeff(k));
    return s;
  }

  /// Diagonal entry b^i_i derived from the row-sum identity.
  Int diag(int i) const {
    Int s = row_sum(i);
    for (int k = i + 1; k <= n + 1; ++k) s = checked_sub(s, b_off(i, k));
    return s;
  }

  /// b^i_k for i <= k <= n+1, diagonal included.
  Int b_at(int i, int k) const { return k == i ? diag(i) : b_off(i, k); }

  friend bool operator==(const XFormLa&, const XFormLa&) = default;
};

struct MemberReport;  // from xform_binf.hpp

/// Normal-form invariants: every b^i_k >= 0 (diagonal included) and the
/// interlacing condition
///   sum_{k=0..j} b^i_{i+k} >= sum_{k=0..j} b^{i+1}_{i+1+k}
/// for 0 <= j <= n-1, 1 <= i <= n - max(1, j).
inline MemberReport check_xform_la(const XFormLa& x) {
  for (int i = 1; i <= x.n; ++i)
    for (int k = i + 1; k <= x.n + 1; ++k)
      if (x.b_off(i, k) < 0)
        return {false, "condition (1): b^" + std::to_string(i) + "_" + std::to_string(k) + " negative"};
  for (int i = 1; i <= x.n; ++i)
    if (x.diag(i) < 0)
      return {false, "condition (2): row sum exceeds " + std::to_string(x.row_sum(i)) + " at row " + std::to_string(i)};
  for (int j = 0; j <= x.n - 1; ++j)
    for (int i = 1; i <= x.n - std::max(1, j); ++i) {
      Int lhs = 0, rhs = 0;
      for (int k = 0; k <= j; ++k) {
        lhs = checked_add(lhs, x.b_at(i, i + k));
        rhs = checked_add(rhs, x.b_at(i + 1, i + 1 + k));
      }
      if (lhs < rhs)
        return {false, "condition (3): interlacing fails at i=" + std::to_string(i) + ", j=" + std::to_string(j)};
    }
  return {};
}

/// X-variable layout, rows by position r-i, diagonal factor first.
inline std::string serialize(const XFormLa& x) {
  std::string out;
  auto factor = [&](int k, Int m, Int e) {
    if (e == 0) return;
    if (!out.empty()) out += "*";
    out += "X" + std::to_string(k) + "(" + std::to_string(m) + ")^" + std::to_string(e);
  };
  for (int i = 1; i <= x.n; ++i) {
    Int pos = checked_sub(x.r, i);
    for (int k = i; k <= x.n + 1; ++k) factor(k, pos, x.b_at(i, k));
  }
  return out.empty() ? "1" : out;
}

/// The maximal vector of M(r;lambda): prod_i Y_i(r-i)^{l_i}.
inline PlainMonomial m_lambda(const Weight& lambda, Int r = 0) {
  if (!lambda.dominant()) throw std::invalid_argument("lambda must be dominant");
  PlainMonomial M{Rank(lambda.rank())};
  for (int i = 1; i <= lambda.rank(); ++i) M.multiply_factor(i, checked_sub(r, i), lambda.coeff(i));
  return M;
}

namespace detail {

struct LaTemplate {
  std::vector<std::vector<Int>> a;  // a[i-1][m] = a^m_i, 0 <= m <= i
};

inline bool read_la_template(const PlainMonomial& M, Int r, LaTemplate& out, std::string* why) {
  int n = M.rank();
  out.a.assign(static_cast<size_t>(n), {});
  for (int i = 1; i <= n; ++i) out.a[static_cast<size_t>(i) - 1].assign(static_cast<size_t>(i) + 1, 0);
  for (const auto& [key, e] : M.factors()) {
    Int mm = checked_sub(r, key.m);
    if (mm < 0 || mm > key.i) {
      if (why)
        *why = "factor Y" + std::to_string(key.i) + "(" + std::to_string(key.m) + ") outside template support";
      return false;
    }
    out.a[static_cast<size_t>(key.i) - 1][static_cast<size_t>(mm)] = e;
  }
  return true;
}

}  // namespace detail

/// Membership in M(r;lambda): the support template plus
///   (1) a^i_i >= 0, a^0_i <= 0, and
///       l_i = sum_{k=0..n-i} a^i_{i+k} - sum_{k=0..i-1} a^k_{n-i+1+k},
///   (2) sum_{k=0..j} a^k_{i+k} <= 0 and sum_{k=0..j} a^i_{i+k} >= 0
///       for 1 <= j <= n-1, 1 <= i <= n-j.
inline MemberReport check_member_bla(const PlainMonomial& M, const Weight& lambda, Int r = 0) {
  int n = M.rank();
  if (lambda.rank() != n) throw std::invalid_argument("weight rank mismatch");
  if (!lambda.dominant()) throw std::invalid_argument("lambda must be dominant");

  detail::LaTemplate tpl;
  std::string why;
  if (!detail::read_la_template(M, r, tpl, &why)) return {false, "template: " + why};
  auto a = [&](int color, int m) { return tpl.a[static_cast<size_t>(color) - 1][static_cast<size_t>(m)]; };

  for (int i = 1; i <= n; ++i) {
    if (a(i, i) < 0) return {false, "condition (1): a^i_i negative at i=" + std::to_string(i)};
    if (a(i, 0) > 0) return {false, "condition (1): a^0_i positive at i=" + std::to_string(i)};
    Int li = 0;
    for (int k = 0; k <= n - i; ++k) li = checked_add(li, a(i + k, i));
    for (int k = 0; k <= i - 1; ++k) li = checked_sub(li, a(n - i + 1 + k, k));
    if (li != lambda.coeff(i))
      return {false, "condition (1): weight identity fails at i=" + std::to_string(i)};
  }

  for (int j = 1; j <= n - 1; ++j)
    for (int i = 1; i <= n - j; ++i) {
      Int diag_sum = 0, row_prefix = 0;
      for (int k = 0; k <= j; ++k) {
        diag_sum = checked_add(diag_sum, a(i + k, k));
        row_prefix = checked_add(row_prefix, a(i + k, i));
      }
      if (diag_sum > 0)
        return {false, "condition (2): diagonal prefix sum positive at i=" + std::to_string(i) +
                           ", j=" + std::to_string(j)};
      if (row_prefix < 0)
        return {false, "condition (2): row prefix sum negative at i=" + std::to_string(i) +
                           ", j=" + std::to_string(j)};
    }
  return {};
}

inline bool is_member_bla(const PlainMonomial& M, const Weight& lambda, Int r = 0) {
  return check_member_bla(M, lambda, r).ok;
}

/// Change of variables into the X-form: the diagonal picks up
/// sum_{i=m..n} a^i_i and the off-diagonal entries are
/// b^m_k = -sum_{j=0..m-1} a^j_{k-m+j}. Requires membership.
inline XFormLa to_xform(const PlainMonomial& M, const Weight& lambda, Int r = 0) {
  int n = M.rank();
  auto report = check_member_bla(M, lambda, r);
  if (!report.ok) throw std::invalid_argument("not a member of M(r;lambda): " + report.reason);

  detail::LaTemplate tpl;
  detail::read_la_template(M, r, tpl, nullptr);
  auto a = [&](int color, int m) { return tpl.a[static_cast<size_t>(color) - 1][static_cast<size_t>(m)]; };

  XFormLa x = XFormLa::origin(Rank(n), lambda, r);
  for (int m = 1; m <= n; ++m)
    for (int k = m + 1; k <= n + 1; ++k) {
      Int v = 0;
      for (int j = 0; j <= m - 1; ++j) v = checked_sub(v, a(k - m + j, j));
      x.b_off_ref(m, k) = v;
    }
  for (int m = 1; m <= n; ++m) {
    Int diag = 0;
    for (int i = m; i <= n; ++i) diag = checked_add(diag, a(i, i));
    if (diag != x.diag(m)) throw std::logic_error("diagonal exponent mismatch in to_xform");
  }
  auto valid = check_xform_la(x);
  if (!valid.ok) throw std::logic_error("membership conditions admitted an invalid normal form: " + valid.reason);
  return x;
}

/// Expand every X factor by X_k(m) = Y_k(m) Y_{k-1}(m+1)^{-1} and multiply.
inline PlainMonomial from_xform(const XFormLa& x) {
  auto valid = check_xform_la(x);
  if (!valid.ok) throw std::invalid_argument("invalid normal form: " + valid.reason);
  PlainMonomial M{Rank(x.n)};
  auto mul_x = [&](int k, Int m, Int e) {
    if (k <= x.n) M.multiply_factor(k, m, e);
    if (k - 1 >= 1) M.multiply_factor(k - 1, checked_add(m, 1), checked_sub(0, e));
  };
  for (int i = 1; i <= x.n; ++i) {
    Int pos = checked_sub(x.r, i);
    for (int k = i; k <= x.n + 1; ++k) mul_x(k, pos, x.b_at(i, k));
  }
  return M;
}

namespace detail {

// Ordered component sequence for M(r;lambda): blocks m = 1..n, within a
// block X_{n+1}(r-m), ..., X_m(r-m) down to the diagonal. Ones under
// X_{i+1}, zeros under X_i.
inline ReducedXSig la_signature(const XFormLa& x, int i) {
  ReducedXSig sig;
  auto feed = [&](bool one, int m, Int count) {
    for (Int t = 0; t < count; ++t) {
      if (!one) {
        sig.zero_blocks.push_back(m);
      } else if (!sig.zero_blocks.empty()) {
        sig.zero_blocks.pop_back();
      } else {
        sig.one_blocks.push_back(m);
      }
    }
  };
  for (int m = 1; m <= x.n; ++m)
    for (int k = x.n + 1; k >= m; --k) {
      if (k == i + 1)
        feed(true, m, x.b_at(m, k));
      else if (k == i)
        feed(false, m, x.b_at(m, k));
    }
  return sig;
}

}  // namespace detail

struct XSigStepLa {
  XFormLa result;
  Int position;
};

/// Lowering operator: ZERO when no 0 survives, else the step at the leftmost
/// surviving 0 (under X_i(r-m)), multiplying by A_i(r-m)^{-1}.
inline KOResult<XSigStepLa> f_sig_step(const XFormLa& x, int i) {
  if (i < 1 || i > x.n) throw std::out_of_range("color out of range");
  auto sig = detail::la_signature(x, i);
  if (sig.zero_blocks.empty()) return std::nullopt;
  int m = sig.zero_blocks.front();
  XFormLa out = x;
  out.b_off_ref(m, i + 1) = checked_add(out.b_off_ref(m, i + 1), 1);
  if (m < i) out.b_off_ref(m, i) = checked_sub(out.b_off_ref(m, i), 1);
  // m == i: the decrement lands on the derived diagonal b^i_i
  auto valid = check_xform_la(out);
  if (!valid.ok) throw std::logic_error("f_sig left the normal form: " + valid.reason);
  return XSigStepLa{out, checked_sub(x.r, m)};
}

inline KOResult<XFormLa> f_sig(const XFormLa& x, int i) {
  auto step = f_sig_step(x, i);
  if (!step) return std::nullopt;
  return step->result;
}

/// Raising operator: ZERO when no 1 survives, else the inverse step at the
/// rightmost surviving 1 (under X_{i+1}(r-m)), multiplying by A_i(r-m).
inline KOResult<XSigStepLa> e_sig_step(const XFormLa& x, int i) {
  if (i < 1 || i > x.n) throw std::out_of_range("color out of range");
  auto sig = detail::la_signature(x, i);
  if (sig.one_blocks.empty()) return std::nullopt;
  int m = sig.one_blocks.back();
  // A surviving 1 under the diagonal X_{i+1}(r-i-1) would require
  // b^i_i >= b^{i+1}_{i+1} zeros right before it to have all cancelled,
  // which the interlacing condition rules out.
  if (m == i + 1) throw std::logic_error("e_sig selected the diagonal of row i+1 on a valid normal form");
  XFormLa out = x;
  out.b_off_ref(m, i + 1) = checked_sub(out.b_off_ref(m, i + 1), 1);
  if (m < i) out.b_off_ref(m, i) = checked_add(out.b_off_ref(m, i), 1);
  // m == i: the increment lands on the derived diagonal b^i_i
  auto valid = check_xform_la(out);
  if (!valid.ok) throw std::logic_error("e_sig left the normal form: " + valid.reason);
  return XSigStepLa{out, checked_sub(x.r, m)};
}

inline KOResult<XFormLa> e_sig(const XFormLa& x, int i) {
  auto step = e_sig_step(x, i);
  if (!step) return std::nullopt;
  return step->result;
}

/// Tableau bijection: b^i_k is the number of k-boxes in row i of the
/// semistandard tableau of shape lambda, the diagonal k = i included.
inline XFormLa Psi(const Tableau& s, const Weight& lambda) {
  if (!validate(s, lambda)) throw std::invalid_argument("Psi requires a semistandard tableau of shape lambda");
  XFormLa x = XFormLa::origin(Rank(s.n), lambda);
  for (int i = 1; i <= s.n; ++i)
    for (int k = i + 1; k <= s.n + 1; ++k) x.b_off_ref(i, k) = count_in_row(s, i, k);
  for (int i = 1; i <= s.n; ++i)
    if (x.diag(i) != count_in_row(s, i, i)) throw std::logic_error("Psi diagonal count mismatch");
  auto valid = check_xform_la(x);
  if (!valid.ok) throw std::logic_error("Psi produced an invalid normal form: " + valid.reason);
  return x;
}

inline Tableau Psi_inverse(const XFormLa& x) {
  auto valid = check_xform_la(x);
  if (!valid.ok) throw std::invalid_argument("invalid normal form: " + valid.reason);
  Tableau t;
  t.n = x.n;
  for (int i = 1; i <= x.n; ++i) {
    std::vector<int> row;
    for (int k = i; k <= x.n + 1; ++k) row.insert(row.end(), static_cast<size_t>(x.b_at(i, k)), k);
    if (row.empty()) break;  // trailing empty rows are not stored
    t.rows.push_back(std::move(row));
  }
  if (!validate(t, x.lambda)) throw std::logic_error("Psi_inverse produced an invalid tableau");
  return t;
}

/// Exponentwise monomial product.
inline PlainMonomial monomial_product(const PlainMonomial& a, const PlainMonomial& b) { return a * b; }

/// All elements of M(r;lambda), produced by closing the maximal vector under
/// the generic lowering operators; returned in canonical-key order.
inline std::vector<PlainMonomial> generate_mla_set(Rank rank, const Weight& lambda, Int r = 0) {
  CMatrix c = CMatrix::standard(rank);
  std::map<std::string, PlainMonomial> seen;
  std::vector<PlainMonomial> queue{m_lambda(lambda, r)};
  seen.emplace(canonical_serialize(queue.front()), queue.front());
  while (!queue.empty()) {
    PlainMonomial cur = std::move(queue.back());
    queue.pop_back();
    for (int i = 1; i <= rank.n; ++i) {
      auto child = f_tilde(cur, i, c);
      if (!child) continue;
      auto key = canonical_serialize(*child);
      if (seen.emplace(key, *child).second) queue.push_back(std::move(*child));
    }
  }
  std::vector<PlainMonomial> out;
  out.reserve(seen.size());
  for (auto& [key, m] : seen) out.push_back(std::move(m));
  return out;
}

/// Weight a template-shaped monomial would have to belong to, read off the
/// weight identity of condition (1). Membership must still be checked.
inline Weight infer_lambda(const PlainMonomial& M, Int r = 0) {
  int n = M.rank();
  detail::LaTemplate tpl;
  std::string why;
  if (!detail::read_la_template(M, r, tpl, &why)) throw std::invalid_argument("template: " + why);
  auto a = [&](int color, int m) { return tpl.a[static_cast<size_t>(color) - 1][static_cast<size_t>(m)]; };
  Weight lambda = zero_weight(Rank(n));
  for (int i = 1; i <= n; ++i) {
    Int li = 0;
    for (int k = 0; k <= n - i; ++k) li = checked_add(li, a(i + k, i));
    for (int k = 0; k <= i - 1; ++k) li = checked_sub(li, a(n - i + 1 + k, k));
    lambda.coeffs[static_cast<size_t>(i) - 1] = li;
  }
  return lambda;
}

/// Every member of M(r;lambda), enumerated from the membership conditions
/// alone by a pruned search over the exponent arrays. The box |a^m_i| <=
/// sum_k l_k contains the whole set; the generated-set comparison in the
/// test suites would surface any member the box missed.
inline std::vector<PlainMonomial> enumerate_members_bla(Rank rank, const Weight& lambda, Int r = 0) {
  if (lambda.rank() != rank.n) throw std::invalid_argument("weight rank mismatch");
  if (!lambda.dominant()) throw std::invalid_argument("lambda must be dominant");
  int n = rank.n;
  Int bound = 0;
  for (Int l : lambda.coeffs) bound = checked_add(bound, l);

  // a[l-1][m] = a^m_l for 0 <= m <= l
  std::vector<std::vector<Int>> a(static_cast<size_t>(n));
  for (int l = 1; l <= n; ++l) a[static_cast<size_t>(l) - 1].assign(static_cast<size_t>(l) + 1, 0);
  auto at = [&](int color, int m) { return a[static_cast<size_t>(color) - 1][static_cast<size_t>(m)]; };

  std::vector<PlainMonomial> out;

  // prefix conditions that become decidable once colors 1..l are fixed
  auto color_ok = [&](int l) {
    for (int j = 1; j <= std::min(l - 1, n - 1); ++j) {
      int i = l - j;
      Int diag_sum = 0, row_prefix = 0;
      for (int k = 0; k <= j; ++k) {
        diag_sum = checked_add(diag_sum, at(i + k, k));
        row_prefix = checked_add(row_prefix, at(i + k, i));
      }
      if (diag_sum > 0 || row_prefix < 0) return false;
    }
    return true;
  };

  auto emit = [&]() {
    PlainMonomial M{rank};
    for (int l = 1; l <= n; ++l)
      for (int m = 0; m <= l; ++m) M.multiply_factor(l, checked_sub(r, m), at(l, m));
    if (is_member_bla(M, lambda, r)) out.push_back(std::move(M));
  };

  auto rec = [&](auto&& self, int l, int m) -> void {
    if (l > n) {
      emit();
      return;
    }
    if (m > l) {
      if (color_ok(l)) self(self, l + 1, 0);
      return;
    }
    Int lo = -bound, hi = bound;
    if (m == 0) hi = 0;      // a^0_l <= 0
    if (m == l) lo = 0;      // a^l_l >= 0
    for (Int v = lo; v <= hi; ++v) {
      a[static_cast<size_t>(l) - 1][static_cast<size_t>(m)] = v;
      self(self, l, m + 1);
    }
    a[static_cast<size_t>(l) - 1][static_cast<size_t>(m)] = 0;
  };
  rec(rec, 1, 0);

  std::sort(out.begin(), out.end(), [](const PlainMonomial& x, const PlainMonomial& y) {
    return canonical_serialize(x) < canonical_serialize(y);
  });
  return out;
}

/// Exact set equality M(r;mu+tau) = M(r;mu) * M(r;tau), both sides fully
/// enumerated.
inline bool product_set_equal(Rank rank, const Weight& mu, const Weight& tau, Int r = 0) {
  auto left = generate_mla_set(rank, mu + tau, r);
  std::vector<std::string> left_keys;
  left_keys.reserve(left.size());
  for (const auto& m : left) left_keys.push_back(canonical_serialize(m));

  auto mus = generate_mla_set(rank, mu, r);
  auto taus = generate_mla_set(rank, tau, r);
  std::vector<std::string> right_keys;
  for (const auto& a : mus)
    for (const auto& b : taus) right_keys.push_back(canonical_serialize(a * b));
  std::sort(right_keys.begin(), right_keys.end());
  right_keys.erase(std::unique(right_keys.begin(), right_keys.end()), right_keys.end());

  return left_keys == right_keys;
}

}  // namespace crystal

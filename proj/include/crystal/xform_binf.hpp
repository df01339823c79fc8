#pragma once

// The extended-monomial model of B(infinity) and its generalized family
// M(p_1..p_n; r; infinity): membership template and conditions, the
// X-variable normal form whose free exponents b^i_k are tableau box counts,
// the signature-rule Kashiwara operators, the shift map between (p, r)
// families, and the tableau correspondence Phi.

#include <algorithm>
#include <string>
#include <vector>

#include "crystal/cartan.hpp"
#include "crystal/monomial.hpp"
#include "crystal/tableau.hpp"

namespace crystal {

/// Normal form of an element of M(p;r;infinity): the free nonnegative array
/// b^i_k (1 <= i <= n, i+1 <= k <= n+1). The reserved variables X_i(r-i)
/// carry the dependent exponents (sum_{k>=i} p_k, -sum_{k>i} b^i_k) and are
/// derived on demand.
struct XFormInf {
  int n = 1;
  Int r = 0;
  std::vector<Int> p;               // size n, all positive
  std::vector<std::vector<Int>> b;  // b[i-1][k-i-1] = b^i_k for k = i+1..n+1

  static XFormInf origin(Rank rank, std::vector<Int> pp = {}, Int rr = 0) {
    XFormInf x;
    x.n = rank.n;
    x.r = rr;
    x.p = pp.empty() ? std::vector<Int>(static_cast<size_t>(rank.n), 1) : std::move(pp);
    if (static_cast<int>(x.p.size()) != rank.n) throw std::invalid_argument("p has wrong length");
    for (Int v : x.p)
      if (v < 1) throw std::invalid_argument("p entries must be positive");
    x.b.resize(static_cast<size_t>(rank.n));
    for (int i = 1; i <= rank.n; ++i) x.b[static_cast<size_t>(i) - 1].assign(static_cast<size_t>(rank.n + 1 - i), 0);
    return x;
  }

  Int b_at(int i, int k) const {
    if (i < 1 || i > n || k <= i || k > n + 1) throw std::out_of_range("b index out of range");
    return b[static_cast<size_t>(i) - 1][static_cast<size_t>(k - i) - 1];
  }

  Int& b_ref(int i, int k) {
    if (i < 1 || i > n || k <= i || k > n + 1) throw std::out_of_range("b index out of range");
    return b[static_cast<size_t>(i) - 1][static_cast<size_t>(k - i) - 1];
  }

  /// First exponent of the reserved X_i(r-i): sum_{k=i..n} p_k.
  Int reserved_first(int i) const {
    Int s = 0;
    for (int k = i; k <= n; ++k) s = checked_add(s, p[static_cast<size_t>(k) - 1]);
    return s;
  }

  /// Second exponent of the reserved X_i(r-i): -sum_{k>i} b^i_k.
  Int reserved_second(int i) const {
    Int s = 0;
    for (int k = i + 1; k <= n + 1; ++k) s = checked_sub(s, b_at(i, k));
    return s;
  }

  bool all_b_nonnegative() const {
    for (const auto& row : b)
      for (Int v : row)
        if (v < 0) return false;
    return true;
  }

  friend bool operator==(const XFormInf&, const XFormInf&) = default;
};

/// X-variable layout, rows by position r-i, reserved factor first.
inline std::string serialize(const XFormInf& x) {
  std::string out;
  auto factor = [&](int k, Int m, Int u, Int v) {
    if (u == 0 && v == 0) return;
    if (!out.empty()) out += "*";
    out += "X" + std::to_string(k) + "(" + std::to_string(m) + ")^(" + std::to_string(u) + "," +
           std::to_string(v) + ")";
  };
  for (int i = 1; i <= x.n; ++i) {
    Int pos = checked_sub(x.r, i);
    factor(i, pos, x.reserved_first(i), x.reserved_second(i));
    for (int k = i + 1; k <= x.n + 1; ++k) factor(k, pos, 0, x.b_at(i, k));
  }
  return out.empty() ? "1" : out;
}

/// The maximal vector of M(p;r;infinity): prod_i Y_i(r-i)^{(p_i,0)}.
inline ExtMonomial m_infinity(Rank rank, std::vector<Int> p = {}, Int r = 0) {
  if (p.empty()) p.assign(static_cast<size_t>(rank.n), 1);
  if (static_cast<int>(p.size()) != rank.n) throw std::invalid_argument("p has wrong length");
  ExtMonomial M(rank);
  for (int i = 1; i <= rank.n; ++i) {
    if (p[static_cast<size_t>(i) - 1] < 1) throw std::invalid_argument("p entries must be positive");
    M.multiply_factor(i, checked_sub(r, i), ExpPair{p[static_cast<size_t>(i) - 1], 0});
  }
  return M;
}

struct MemberReport {
  bool ok = true;
  std::string reason;
};

namespace detail {

// Exponent array a^m_i of the membership template: color i lives at the
// positions r-m for 0 <= m <= i, with the first component pinned to p_i at
// m = i and to 0 elsewhere.
struct InfTemplate {
  std::vector<std::vector<Int>> a;  // a[i-1][m] = a^m_i, 0 <= m <= i
};

inline bool read_inf_template(const ExtMonomial& M, const std::vector<Int>& p, Int r, InfTemplate& out,
                              std::string* why) {
  int n = M.rank();
  out.a.assign(static_cast<size_t>(n), {});
  for (int i = 1; i <= n; ++i) out.a[static_cast<size_t>(i) - 1].assign(static_cast<size_t>(i) + 1, 0);
  std::vector<bool> diag_seen(static_cast<size_t>(n), false);
  for (const auto& [key, e] : M.factors()) {
    Int mm = checked_sub(r, key.m);
    if (mm < 0 || mm > key.i) {
      if (why)
        *why = "factor Y" + std::to_string(key.i) + "(" + std::to_string(key.m) + ") outside template support";
      return false;
    }
    if (mm == key.i) {
      if (e.a != p[static_cast<size_t>(key.i) - 1]) {
        if (why)
          *why = "first component at Y" + std::to_string(key.i) + "(" + std::to_string(key.m) + ") differs from p";
        return false;
      }
      diag_seen[static_cast<size_t>(key.i) - 1] = true;
    } else if (e.a != 0) {
      if (why)
        *why = "nonzero first component away from the reserved position at Y" + std::to_string(key.i) + "(" +
               std::to_string(key.m) + ")";
      return false;
    }
    out.a[static_cast<size_t>(key.i) - 1][static_cast<size_t>(mm)] = e.b;
  }
  for (int i = 1; i <= n; ++i)
    if (!diag_seen[static_cast<size_t>(i) - 1]) {
      if (why) *why = "reserved factor Y" + std::to_string(i) + "(" + std::to_string(checked_sub(r, i)) + ") missing";
      return false;
    }
  return true;
}

}  // namespace detail

/// Membership in M(p;r;infinity): the support/first-component template plus
///   (1) sum_{j=0..k} a^j_{i+j} <= 0 for 0 <= k <= n-1, 1 <= i <= n-k,
///   (2) sum_{i=1..n-k} sum_{j=0..k} a^j_{i+j} = sum_{i=k+1..n} a^i_i
///       for 0 <= k <= n-1.
inline MemberReport check_member_binf(const ExtMonomial& M, std::vector<Int> p = {}, Int r = 0) {
  int n = M.rank();
  if (p.empty()) p.assign(static_cast<size_t>(n), 1);
  if (static_cast<int>(p.size()) != n) throw std::invalid_argument("p has wrong length");
  for (Int v : p)
    if (v < 1) throw std::invalid_argument("p entries must be positive");

  detail::InfTemplate tpl;
  std::string why;
  if (!detail::read_inf_template(M, p, r, tpl, &why)) return {false, "template: " + why};
  auto a = [&](int color, int m) { return tpl.a[static_cast<size_t>(color) - 1][static_cast<size_t>(m)]; };

  for (int k = 0; k <= n - 1; ++k)
    for (int i = 1; i <= n - k; ++i) {
      Int s = 0;
      for (int j = 0; j <= k; ++j) s = checked_add(s, a(i + j, j));
      if (s > 0)
        return {false, "condition (1): diagonal prefix sum positive at i=" + std::to_string(i) +
                           ", k=" + std::to_string(k)};
    }

  for (int k = 0; k <= n - 1; ++k) {
    Int lhs = 0;
    for (int i = 1; i <= n - k; ++i)
      for (int j = 0; j <= k; ++j) lhs = checked_add(lhs, a(i + j, j));
    Int rhs = 0;
    for (int i = k + 1; i <= n; ++i) rhs = checked_add(rhs, a(i, i));
    if (lhs != rhs) return {false, "condition (2): sum balance fails at k=" + std::to_string(k)};
  }
  return {};
}

inline bool is_member_binf(const ExtMonomial& M, std::vector<Int> p = {}, Int r = 0) {
  return check_member_binf(M, std::move(p), r).ok;
}

/// Change of variables into the X-form: b^m_k = -sum_{j=0..m-1} a^j_{k-m+j}.
/// Requires membership.
inline XFormInf to_xform(const ExtMonomial& M, std::vector<Int> p = {}, Int r = 0) {
  int n = M.rank();
  if (p.empty()) p.assign(static_cast<size_t>(n), 1);
  auto report = check_member_binf(M, p, r);
  if (!report.ok) throw std::invalid_argument("not a member of M(p;r;infinity): " + report.reason);

  detail::InfTemplate tpl;
  detail::read_inf_template(M, p, r, tpl, nullptr);
  auto a = [&](int color, int m) { return tpl.a[static_cast<size_t>(color) - 1][static_cast<size_t>(m)]; };

  XFormInf x = XFormInf::origin(Rank(n), p, r);
  for (int m = 1; m <= n; ++m)
    for (int k = m + 1; k <= n + 1; ++k) {
      Int v = 0;
      for (int j = 0; j <= m - 1; ++j) v = checked_sub(v, a(k - m + j, j));
      x.b_ref(m, k) = v;
    }
  if (!x.all_b_nonnegative()) throw std::logic_error("membership conditions admitted a negative b entry");
  for (int i = 1; i <= n; ++i) {
    Int diag = 0;
    for (int j = i; j <= n; ++j) diag = checked_add(diag, a(j, j));
    if (diag != x.reserved_second(i)) throw std::logic_error("reserved exponent mismatch in to_xform");
  }
  return x;
}

/// Expand every X factor by its definition X_k(m)^{(u,v)} =
/// Y_k(m)^{(u,v)} Y_{k-1}(m+1)^{(-u,-v)} and multiply out.
inline ExtMonomial from_xform(const XFormInf& x) {
  if (!x.all_b_nonnegative()) throw std::invalid_argument("negative b entry");
  ExtMonomial M{Rank(x.n)};
  auto mul_x = [&](int k, Int m, ExpPair e) {
    if (k <= x.n) M.multiply_factor(k, m, e);
    if (k - 1 >= 1) M.multiply_factor(k - 1, checked_add(m, 1), -e);
  };
  for (int i = 1; i <= x.n; ++i) {
    Int pos = checked_sub(x.r, i);
    mul_x(i, pos, ExpPair{x.reserved_first(i), x.reserved_second(i)});
    for (int k = i + 1; k <= x.n + 1; ++k) mul_x(k, pos, ExpPair{0, x.b_at(i, k)});
  }
  return M;
}

namespace detail {

struct ReducedXSig {
  std::vector<int> one_blocks;   // block index m of each surviving 1, in order
  std::vector<int> zero_blocks;  // block index m of each surviving 0, in order
};

// Ordered component sequence: blocks m = 1..n left to right, within a block
// X_{n+1}(r-m), X_n(r-m), ..., X_{m+1}(r-m). For color i a component
// X_{i+1}(r-m) contributes b^m_{i+1} ones and X_i(r-m) contributes b^m_i
// zeros; (0,1) pairs cancel.
inline ReducedXSig inf_signature(const XFormInf& x, int i) {
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
    for (int k = x.n + 1; k >= m + 1; --k) {
      if (k == i + 1)
        feed(true, m, x.b_at(m, k));
      else if (k == i)
        feed(false, m, x.b_at(m, k));
    }
  return sig;
}

}  // namespace detail

/// One signature-rule step, remembering the position the operator acted at
/// (the monomial is multiplied by A_i(position)^{-+1}).
struct XSigStep {
  XFormInf result;
  Int position;
};

/// Lowering operator of the normal-form model. Never ZERO: when no 0
/// survives the step multiplies by A_i(r-i)^{-1}, which raises b^i_{i+1} and
/// lowers the reserved second exponent.
inline XSigStep f_sig_step(const XFormInf& x, int i) {
  if (i < 1 || i > x.n) throw std::out_of_range("color out of range");
  auto sig = detail::inf_signature(x, i);
  XFormInf out = x;
  int m;
  if (!sig.zero_blocks.empty()) {
    m = sig.zero_blocks.front();  // leftmost surviving 0 sits under X_i(r-m)
    out.b_ref(m, i) = checked_sub(out.b_ref(m, i), 1);
    out.b_ref(m, i + 1) = checked_add(out.b_ref(m, i + 1), 1);
  } else {
    m = i;
    out.b_ref(i, i + 1) = checked_add(out.b_ref(i, i + 1), 1);
  }
  if (!out.all_b_nonnegative()) throw std::logic_error("f_sig drove a b entry negative");
  return {out, checked_sub(x.r, m)};
}

inline XFormInf f_sig(const XFormInf& x, int i) { return f_sig_step(x, i).result; }

/// Raising operator: ZERO when no 1 survives, else the inverse step at the
/// rightmost surviving 1.
inline KOResult<XSigStep> e_sig_step(const XFormInf& x, int i) {
  if (i < 1 || i > x.n) throw std::out_of_range("color out of range");
  auto sig = detail::inf_signature(x, i);
  if (sig.one_blocks.empty()) return std::nullopt;
  int m = sig.one_blocks.back();  // rightmost surviving 1 sits under X_{i+1}(r-m)
  XFormInf out = x;
  out.b_ref(m, i + 1) = checked_sub(out.b_ref(m, i + 1), 1);
  if (m <= i - 1) out.b_ref(m, i) = checked_add(out.b_ref(m, i), 1);
  // m == i: the increment lands on the reserved X_i(r-i), which is derived
  if (!out.all_b_nonnegative()) throw std::logic_error("e_sig drove a b entry negative");
  return XSigStep{out, checked_sub(x.r, m)};
}

inline KOResult<XFormInf> e_sig(const XFormInf& x, int i) {
  auto step = e_sig_step(x, i);
  if (!step) return std::nullopt;
  return step->result;
}

/// The crystal isomorphism M(infinity) -> M(p;r;infinity): keep b, re-target
/// the family parameters.
inline XFormInf phi_shift(const XFormInf& x, std::vector<Int> p, Int r) {
  XFormInf out = XFormInf::origin(Rank(x.n), std::move(p), r);
  out.b = x.b;
  return out;
}

/// Tableau-to-monomial correspondence: b^i_k is the number of k-boxes in
/// row i of the marginally large tableau.
inline XFormInf Phi(const Tableau& t) {
  if (!is_marginally_large(t)) throw std::invalid_argument("Phi requires a marginally large tableau");
  XFormInf x = XFormInf::origin(Rank(t.n));
  for (int i = 1; i <= t.n; ++i)
    for (int k = i + 1; k <= t.n + 1; ++k) x.b_ref(i, k) = count_in_row(t, i, k);
  return x;
}

inline Tableau Phi_inverse(const XFormInf& x) {
  if (!x.all_b_nonnegative()) throw std::invalid_argument("negative b entry");
  Tableau t;
  t.n = x.n;
  t.rows.assign(static_cast<size_t>(x.n), {});
  Int below = 0;  // length of row i+1
  for (int i = x.n; i >= 1; --i) {
    auto& row = t.rows[static_cast<size_t>(i) - 1];
    row.assign(static_cast<size_t>(checked_add(below, 1)), i);
    for (int k = i + 1; k <= x.n + 1; ++k) row.insert(row.end(), static_cast<size_t>(x.b_at(i, k)), k);
    below = static_cast<Int>(row.size());
  }
  if (!is_marginally_large(t) || !validate(t)) throw std::logic_error("Phi_inverse produced an invalid tableau");
  return t;
}

/// Number of surviving 1s in the i-signature; agrees with the generic eps of
/// the underlying extended monomial.
inline Int eps_sig(const XFormInf& x, int i) {
  return static_cast<Int>(detail::inf_signature(x, i).one_blocks.size());
}

/// Family parameters (p, r) a template-shaped extended monomial would belong
/// to: the factors with nonzero first component must be exactly the reserved
/// Y_i(r-i)^{(p_i, .)}. Membership must still be checked.
inline std::pair<std::vector<Int>, Int> infer_family(const ExtMonomial& M) {
  int n = M.rank();
  std::vector<Int> p(static_cast<size_t>(n), 0);
  std::vector<Int> pos(static_cast<size_t>(n), 0);
  std::vector<bool> seen(static_cast<size_t>(n), false);
  for (const auto& [key, e] : M.factors()) {
    if (e.a == 0) continue;
    size_t idx = static_cast<size_t>(key.i) - 1;
    if (seen[idx]) throw std::invalid_argument("two reserved factors of color " + std::to_string(key.i));
    seen[idx] = true;
    p[idx] = e.a;
    pos[idx] = key.m;
  }
  for (int i = 1; i <= n; ++i) {
    if (!seen[static_cast<size_t>(i) - 1])
      throw std::invalid_argument("no reserved factor of color " + std::to_string(i));
    if (p[static_cast<size_t>(i) - 1] < 1)
      throw std::invalid_argument("reserved exponent of color " + std::to_string(i) + " is not positive");
  }
  Int r = checked_add(pos[0], 1);
  for (int i = 2; i <= n; ++i)
    if (pos[static_cast<size_t>(i) - 1] != checked_sub(r, i))
      throw std::invalid_argument("reserved factors do not sit on one shifted diagonal");
  return {std::move(p), r};
}

/// Every member of M(p;r;infinity) whose weight sits at most `depth` simple
/// roots below the maximal vector, enumerated from the membership conditions
/// alone (no crystal operators involved). Condition (1) says the diagonal
/// prefix sums s_{i,k} = sum_{j<=k} a^j_{i+j} are nonpositive, condition (2)
/// pins the diagonal exponents, so the sums parameterize the solution set.
inline std::vector<ExtMonomial> enumerate_members_binf(Rank rank, int depth, std::vector<Int> p = {},
                                                       Int r = 0) {
  if (depth < 0) throw std::invalid_argument("depth must be nonnegative");
  int n = rank.n;
  if (p.empty()) p.assign(static_cast<size_t>(n), 1);

  // chains[i-1][k] = s_{i,k} for k = 0..n-i
  std::vector<std::vector<Int>> chains(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) chains[static_cast<size_t>(i) - 1].assign(static_cast<size_t>(n - i) + 1, 0);

  std::vector<ExtMonomial> out;
  Weight max_wt = weight(m_infinity(rank, p, r));

  auto emit = [&]() {
    // T_k = sum_i s_{i,k}; diagonal a^j_j = T_{j-1} - T_j with T_n = 0
    std::vector<Int> T(static_cast<size_t>(n) + 1, 0);
    for (int k = 0; k <= n - 1; ++k)
      for (int i = 1; i <= n - k; ++i)
        T[static_cast<size_t>(k)] = checked_add(T[static_cast<size_t>(k)], chains[static_cast<size_t>(i) - 1][static_cast<size_t>(k)]);
    ExtMonomial M(rank);
    for (int j = 1; j <= n; ++j)
      M.multiply_factor(j, checked_sub(r, j),
                        ExpPair{p[static_cast<size_t>(j) - 1],
                                checked_sub(T[static_cast<size_t>(j) - 1], T[static_cast<size_t>(j)])});
    for (int i = 1; i <= n; ++i)
      for (int k = 0; k <= n - i; ++k) {
        Int prev = k == 0 ? 0 : chains[static_cast<size_t>(i) - 1][static_cast<size_t>(k) - 1];
        Int a = checked_sub(chains[static_cast<size_t>(i) - 1][static_cast<size_t>(k)], prev);
        if (i + k > k)  // strictly off-diagonal entries a^k_{i+k}, i >= 1
          M.multiply_factor(i + k, checked_sub(r, k), ExpPair{0, a});
      }
    if (!is_member_binf(M, p, r)) return;
    auto height = root_height(rank, max_wt - weight(M));
    if (height && *height <= depth) out.push_back(std::move(M));
  };

  // Depth equals sum over chains of i * (-s_{i,k}), which bounds the search.
  auto rec = [&](auto&& self, int i, int k, Int used) -> void {
    if (i > n) {
      emit();
      return;
    }
    if (k > n - i) {
      self(self, i + 1, 0, used);
      return;
    }
    for (Int s = 0; checked_add(used, checked_mul(-s, i)) <= depth; --s) {
      chains[static_cast<size_t>(i) - 1][static_cast<size_t>(k)] = s;
      self(self, i, k + 1, checked_add(used, checked_mul(-s, i)));
    }
    chains[static_cast<size_t>(i) - 1][static_cast<size_t>(k)] = 0;
  };
  rec(rec, 1, 0, 0);
  return out;
}

}  // namespace crystal

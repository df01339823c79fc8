#pragma once

// Semistandard Young tableaux with entries in {1..n+1} realizing the highest
// weight crystals B(lambda), and marginally large tableaux realizing
// B(infinity). Operators act through the far-eastern reading and the
// signature rule; the B(infinity) operators insert or remove columns to keep
// tableaux marginally large.

#include <algorithm>
#include <string>
#include <vector>

#include "crystal/cartan.hpp"
#include "crystal/monomial.hpp"

namespace crystal {

struct Tableau {
  int n = 1;
  std::vector<std::vector<int>> rows;

  friend bool operator==(const Tableau&, const Tableau&) = default;
};

inline std::vector<Int> shape(const Tableau& t) {
  std::vector<Int> s;
  s.reserve(t.rows.size());
  for (const auto& row : t.rows) s.push_back(static_cast<Int>(row.size()));
  return s;
}

/// Semistandard: rows weakly increase, columns strictly increase, row lengths
/// weakly decrease, entries lie in {1..n+1}. No stored row may be empty.
inline bool validate(const Tableau& t) {
  if (t.n < 1) return false;
  for (size_t r = 0; r < t.rows.size(); ++r) {
    const auto& row = t.rows[r];
    if (row.empty()) return false;
    if (r > 0 && row.size() > t.rows[r - 1].size()) return false;
    for (size_t c = 0; c < row.size(); ++c) {
      if (row[c] < 1 || row[c] > t.n + 1) return false;
      if (c > 0 && row[c] < row[c - 1]) return false;
      if (r > 0 && row[c] <= t.rows[r - 1][c]) return false;
    }
  }
  return true;
}

/// Semistandard of shape shape_of(lambda).
inline bool validate(const Tableau& t, const Weight& lambda) {
  if (lambda.rank() != t.n) return false;
  if (!lambda.dominant()) return false;
  return validate(t) && shape(t) == shape_of(lambda);
}

inline std::string serialize(const Tableau& t) {
  std::string out = "T[";
  for (size_t r = 0; r < t.rows.size(); ++r) {
    if (r) out += "|";
    for (size_t c = 0; c < t.rows[r].size(); ++c) {
      if (c) out += ",";
      out += std::to_string(t.rows[r][c]);
    }
  }
  out += "]";
  return out;
}

struct ReadBox {
  int entry = 0;
  int row = 0;  // 0-based
  int col = 0;  // 0-based
  friend bool operator==(const ReadBox&, const ReadBox&) = default;
};

/// Far-eastern reading: columns scanned right to left, each top to bottom.
inline std::vector<ReadBox> far_eastern_reading(const Tableau& t) {
  std::vector<ReadBox> word;
  int width = t.rows.empty() ? 0 : static_cast<int>(t.rows[0].size());
  for (int c = width - 1; c >= 0; --c)
    for (int r = 0; r < static_cast<int>(t.rows.size()); ++r) {
      if (static_cast<int>(t.rows[r].size()) <= c) break;
      word.push_back(ReadBox{t.rows[r][c], r, c});
    }
  return word;
}

/// Reduced i-signature: surviving 1s then surviving 0s, each remembering the
/// box it came from. In the box crystal a box carries a 1 iff its entry is
/// i+1 and a 0 iff its entry is i; (0,1) pairs cancel.
struct Signature {
  std::vector<ReadBox> ones;
  std::vector<ReadBox> zeros;
};

inline Signature i_signature(const Tableau& t, int i) {
  Signature sig;
  for (const ReadBox& box : far_eastern_reading(t)) {
    if (box.entry == i) {
      sig.zeros.push_back(box);
    } else if (box.entry == i + 1) {
      if (!sig.zeros.empty())
        sig.zeros.pop_back();  // cancel the nearest unmatched 0 on the left
      else
        sig.ones.push_back(box);
    }
  }
  return sig;
}

/// Lowering operator on B(lambda): bump the box under the leftmost 0.
inline KOResult<Tableau> f_bla(const Tableau& t, int i) {
  Signature sig = i_signature(t, i);
  if (sig.zeros.empty()) return std::nullopt;
  Tableau out = t;
  const ReadBox& box = sig.zeros.front();
  out.rows[static_cast<size_t>(box.row)][static_cast<size_t>(box.col)] = box.entry + 1;
  if (!validate(out)) throw std::logic_error("f_bla produced a non-semistandard tableau");
  return out;
}

/// Raising operator on B(lambda): lower the box under the rightmost 1.
inline KOResult<Tableau> e_bla(const Tableau& t, int i) {
  Signature sig = i_signature(t, i);
  if (sig.ones.empty()) return std::nullopt;
  Tableau out = t;
  const ReadBox& box = sig.ones.back();
  out.rows[static_cast<size_t>(box.row)][static_cast<size_t>(box.col)] = box.entry - 1;
  if (!validate(out)) throw std::logic_error("e_bla produced a non-semistandard tableau");
  return out;
}

inline Int count_in_row(const Tableau& t, int row, int entry) {
  if (row < 1 || row > static_cast<int>(t.rows.size())) return 0;
  const auto& r = t.rows[static_cast<size_t>(row) - 1];
  return static_cast<Int>(std::count(r.begin(), r.end(), entry));
}

inline Int row_length(const Tableau& t, int row) {
  if (row < 1 || row > static_cast<int>(t.rows.size())) return 0;
  return static_cast<Int>(t.rows[static_cast<size_t>(row) - 1].size());
}

/// Large: n nonempty rows, and the number of i-boxes in row i strictly
/// exceeds the number of boxes in row i+1.
inline bool is_large(const Tableau& t) {
  if (static_cast<int>(t.rows.size()) != t.n) return false;
  for (int i = 1; i <= t.n; ++i)
    if (count_in_row(t, i, i) <= row_length(t, i + 1)) return false;
  return true;
}

/// Marginally large: the excess is exactly one in every row.
inline bool is_marginally_large(const Tableau& t) {
  if (static_cast<int>(t.rows.size()) != t.n) return false;
  for (int i = 1; i <= t.n; ++i)
    if (count_in_row(t, i, i) != checked_add(row_length(t, i + 1), 1)) return false;
  return true;
}

/// The marginally large tableau whose i-th row consists only of i-boxes.
inline Tableau t_infinity(Rank r) {
  Tableau t;
  t.n = r.n;
  t.rows.resize(static_cast<size_t>(r.n));
  for (int i = 1; i <= r.n; ++i)
    t.rows[static_cast<size_t>(i) - 1].assign(static_cast<size_t>(r.n - i + 1), i);
  return t;
}

/// Lowering operator on marginally large tableaux. The signature of a large
/// tableau always contains a 0, so the result is never ZERO; a column of
/// height i is inserted when the bumped tableau stops being large.
inline KOResult<Tableau> f_tinf(const Tableau& t, int i) {
  if (!is_marginally_large(t)) throw std::invalid_argument("f_tinf requires a marginally large tableau");
  Signature sig = i_signature(t, i);
  if (sig.zeros.empty()) throw std::logic_error("marginally large tableau with no 0 in its signature");
  const ReadBox& box = sig.zeros.front();
  Tableau out = t;
  out.rows[static_cast<size_t>(box.row)][static_cast<size_t>(box.col)] = box.entry + 1;
  if (!is_large(out)) {
    // one column with a k-box in row k for k = 1..i, immediately left of the
    // column that was acted upon
    for (int k = 1; k <= i; ++k) {
      auto& row = out.rows[static_cast<size_t>(k) - 1];
      row.insert(row.begin() + box.col, k);
    }
  }
  if (!validate(out) || !is_marginally_large(out)) throw std::logic_error("f_tinf left the marginally large set");
  return out;
}

/// Raising operator on marginally large tableaux: ZERO when no 1 survives;
/// the column through the changed box is removed when the result overshoots
/// marginal largeness.
inline KOResult<Tableau> e_tinf(const Tableau& t, int i) {
  if (!is_marginally_large(t)) throw std::invalid_argument("e_tinf requires a marginally large tableau");
  Signature sig = i_signature(t, i);
  if (sig.ones.empty()) return std::nullopt;
  const ReadBox& box = sig.ones.back();
  Tableau out = t;
  out.rows[static_cast<size_t>(box.row)][static_cast<size_t>(box.col)] = box.entry - 1;
  if (!is_large(out)) throw std::logic_error("e_tinf produced a non-large tableau");
  if (!is_marginally_large(out)) {
    // the column containing the changed box is a k-box column of height i
    for (int k = 1; k <= i; ++k) {
      auto& row = out.rows[static_cast<size_t>(k) - 1];
      if (static_cast<int>(row.size()) <= box.col || row[static_cast<size_t>(box.col)] != k)
        throw std::logic_error("e_tinf removal column is not of the expected form");
      row.erase(row.begin() + box.col);
    }
    if (row_length(out, i + 1) > box.col) throw std::logic_error("e_tinf removal column extends below row i");
  }
  if (!validate(out) || !is_marginally_large(out)) throw std::logic_error("e_tinf left the marginally large set");
  return out;
}

/// Weight of a B(lambda) tableau: each k-box contributes Lambda_k -
/// Lambda_{k-1}, with Lambda_0 = Lambda_{n+1} = 0.
inline Weight wt_bla(const Tableau& t) {
  Weight w = zero_weight(Rank(t.n));
  for (const auto& row : t.rows)
    for (int entry : row) {
      if (entry <= t.n) w.coeffs[static_cast<size_t>(entry) - 1] = checked_add(w.coeffs[static_cast<size_t>(entry) - 1], 1);
      if (entry >= 2) w.coeffs[static_cast<size_t>(entry) - 2] = checked_sub(w.coeffs[static_cast<size_t>(entry) - 2], 1);
    }
  return w;
}

inline Int eps_bla(const Tableau& t, int i) { return static_cast<Int>(i_signature(t, i).ones.size()); }
inline Int phi_bla(const Tableau& t, int i) { return static_cast<Int>(i_signature(t, i).zeros.size()); }

/// Weight of a marginally large tableau: minus, for each j, the number of
/// boxes of entry > j sitting in rows 1..j, counted against alpha_j.
inline Weight wt_tinf(const Tableau& t) {
  if (!is_marginally_large(t)) throw std::invalid_argument("wt_tinf requires a marginally large tableau");
  Rank r(t.n);
  Weight w = zero_weight(r);
  for (int j = 1; j <= t.n; ++j) {
    Int cj = 0;
    for (int i = 1; i <= j; ++i)
      for (int k = j + 1; k <= t.n + 1; ++k) cj = checked_add(cj, count_in_row(t, i, k));
    if (cj == 0) continue;
    Weight alpha = simple_root(r, j);
    for (size_t idx = 0; idx < w.coeffs.size(); ++idx)
      w.coeffs[idx] = checked_sub(w.coeffs[idx], checked_mul(cj, alpha.coeffs[idx]));
  }
  return w;
}

inline Int eps_tinf(const Tableau& t, int i) { return static_cast<Int>(i_signature(t, i).ones.size()); }

/// phi_i = eps_i + <h_i, wt>; may be negative on marginally large tableaux.
inline Int phi_tinf(const Tableau& t, int i) {
  return checked_add(eps_tinf(t, i), pairing(i, wt_tinf(t)));
}

/// The tableau of shape shape_of(lambda) whose row i is filled with i-boxes.
inline Tableau highest_weight_tableau(Rank r, const Weight& lambda) {
  if (lambda.rank() != r.n) throw std::invalid_argument("weight rank mismatch");
  Tableau t;
  t.n = r.n;
  auto sh = shape_of(lambda);
  t.rows.resize(sh.size());
  for (size_t i = 0; i < sh.size(); ++i) t.rows[i].assign(static_cast<size_t>(sh[i]), static_cast<int>(i) + 1);
  return t;
}

}  // namespace crystal

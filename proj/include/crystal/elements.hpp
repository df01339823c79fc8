#pragma once

// Adapters presenting each realization as a crystal-graph element: the two
// tableau models, the two monomial models under the generic operators (with
// a selectable c-matrix), and the two normal-form models under the
// signature-rule operators.

#include <memory>
#include <optional>
#include <string>

#include "crystal/cartan.hpp"
#include "crystal/graph.hpp"
#include "crystal/monomial.hpp"
#include "crystal/tableau.hpp"
#include "crystal/xform_binf.hpp"
#include "crystal/xform_bla.hpp"

namespace crystal {

/// Semistandard tableaux of fixed shape realizing B(lambda).
struct TableauBlaElem {
  static constexpr bool infinite = false;
  Tableau t;

  int rank() const { return t.n; }
  std::string key() const { return serialize(t); }
  Weight weight() const { return wt_bla(t); }
  Int eps(int i) const { return eps_bla(t, i); }
  Int phi(int i) const { return phi_bla(t, i); }
  std::optional<TableauBlaElem> f(int i) const {
    auto r = f_bla(t, i);
    if (!r) return std::nullopt;
    return TableauBlaElem{std::move(*r)};
  }
  std::optional<TableauBlaElem> e(int i) const {
    auto r = e_bla(t, i);
    if (!r) return std::nullopt;
    return TableauBlaElem{std::move(*r)};
  }
};

/// Marginally large tableaux realizing B(infinity).
struct TableauInfElem {
  static constexpr bool infinite = true;
  Tableau t;

  int rank() const { return t.n; }
  std::string key() const { return serialize(t); }
  Weight weight() const { return wt_tinf(t); }
  Int eps(int i) const { return eps_tinf(t, i); }
  Int phi(int i) const { return phi_tinf(t, i); }
  std::optional<TableauInfElem> f(int i) const {
    auto r = f_tinf(t, i);
    if (!r) return std::nullopt;
    return TableauInfElem{std::move(*r)};
  }
  std::optional<TableauInfElem> e(int i) const {
    auto r = e_tinf(t, i);
    if (!r) return std::nullopt;
    return TableauInfElem{std::move(*r)};
  }
};

/// Plain Nakajima monomials under the generic operators for a fixed c.
struct MonomialBlaElem {
  static constexpr bool infinite = false;
  PlainMonomial m;
  std::shared_ptr<const CMatrix> c;

  int rank() const { return m.rank(); }
  std::string key() const { return canonical_serialize(m); }
  Weight weight() const { return crystal::weight(m); }
  Int eps(int i) const { return crystal::eps(m, i); }
  Int phi(int i) const { return crystal::phi(m, i); }
  std::optional<MonomialBlaElem> f(int i) const {
    auto r = f_tilde(m, i, *c);
    if (!r) return std::nullopt;
    return MonomialBlaElem{std::move(*r), c};
  }
  std::optional<MonomialBlaElem> e(int i) const {
    auto r = e_tilde(m, i, *c);
    if (!r) return std::nullopt;
    return MonomialBlaElem{std::move(*r), c};
  }
};

/// Extended Nakajima monomials under the generic operators for a fixed c.
struct MonomialInfElem {
  static constexpr bool infinite = true;
  ExtMonomial m;
  std::shared_ptr<const CMatrix> c;

  int rank() const { return m.rank(); }
  std::string key() const { return canonical_serialize(m); }
  Weight weight() const { return crystal::weight(m); }
  Int eps(int i) const { return crystal::eps(m, i); }
  Int phi(int i) const { return crystal::phi(m, i); }
  std::optional<MonomialInfElem> f(int i) const {
    auto r = f_tilde(m, i, *c);
    if (!r) return std::nullopt;
    return MonomialInfElem{std::move(*r), c};
  }
  std::optional<MonomialInfElem> e(int i) const {
    auto r = e_tilde(m, i, *c);
    if (!r) return std::nullopt;
    return MonomialInfElem{std::move(*r), c};
  }
};

inline MonomialBlaElem make_mla_element(const Weight& lambda, Int r = 0,
                                        std::shared_ptr<const CMatrix> c = nullptr) {
  Rank rank(lambda.rank());
  if (!c) c = std::make_shared<CMatrix>(CMatrix::standard(rank));
  return {m_lambda(lambda, r), std::move(c)};
}

inline MonomialInfElem make_minf_element(Rank rank, std::vector<Int> p = {}, Int r = 0,
                                         std::shared_ptr<const CMatrix> c = nullptr) {
  if (!c) c = std::make_shared<CMatrix>(CMatrix::standard(rank));
  return {m_infinity(rank, std::move(p), r), std::move(c)};
}

/// Normal forms of M(p;r;infinity) under the signature-rule operators.
struct XFormInfElem {
  static constexpr bool infinite = true;
  XFormInf x;

  int rank() const { return x.n; }
  std::string key() const { return serialize(x); }
  Weight weight() const { return crystal::weight(from_xform(x)); }
  Int eps(int i) const { return eps_sig(x, i); }
  Int phi(int i) const { return checked_add(eps(i), pairing(i, weight())); }
  std::optional<XFormInfElem> f(int i) const { return XFormInfElem{f_sig(x, i)}; }
  std::optional<XFormInfElem> e(int i) const {
    auto r = e_sig(x, i);
    if (!r) return std::nullopt;
    return XFormInfElem{std::move(*r)};
  }
};

/// Normal forms of M(r;lambda) under the signature-rule operators.
struct XFormLaElem {
  static constexpr bool infinite = false;
  XFormLa x;

  int rank() const { return x.n; }
  std::string key() const { return serialize(x); }
  Weight weight() const { return crystal::weight(from_xform(x)); }
  Int eps(int i) const { return static_cast<Int>(detail::la_signature(x, i).one_blocks.size()); }
  Int phi(int i) const { return static_cast<Int>(detail::la_signature(x, i).zero_blocks.size()); }
  std::optional<XFormLaElem> f(int i) const {
    auto r = f_sig(x, i);
    if (!r) return std::nullopt;
    return XFormLaElem{std::move(*r)};
  }
  std::optional<XFormLaElem> e(int i) const {
    auto r = e_sig(x, i);
    if (!r) return std::nullopt;
    return XFormLaElem{std::move(*r)};
  }
};

}  // namespace crystal

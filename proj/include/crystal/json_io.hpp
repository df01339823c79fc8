#pragma once

// JSON encodings of weights, monomials, tableaux, normal forms, and graphs.
// All emitters are byte-deterministic (keys serialize in sorted order).

#include <string>
#include <vector>

#include <json.hpp>

#include "crystal/cartan.hpp"
#include "crystal/graph.hpp"
#include "crystal/monomial.hpp"
#include "crystal/tableau.hpp"
#include "crystal/xform_binf.hpp"
#include "crystal/xform_bla.hpp"

namespace crystal {

using Json = nlohmann::json;

// {"n": 2, "lambda": [1,1]}
inline Json weight_to_json(const Weight& w) { return Json{{"n", w.rank()}, {"lambda", w.coeffs}}; }

inline Weight weight_from_json(const Json& j) {
  int n = j.at("n").get<int>();
  auto coeffs = j.at("lambda").get<std::vector<Int>>();
  if (static_cast<int>(coeffs.size()) != n) throw std::invalid_argument("lambda length differs from n");
  return Weight(std::move(coeffs));
}

// {"kind":"plain","n":2,"factors":[{"i":1,"m":-1,"e":1}, ...]}
inline Json monomial_to_json(const PlainMonomial& M) {
  Json factors = Json::array();
  for (const auto& [key, e] : M.factors()) factors.push_back(Json{{"i", key.i}, {"m", key.m}, {"e", e}});
  return Json{{"kind", "plain"}, {"n", M.rank()}, {"factors", factors}};
}

// {"kind":"ext","n":2,"factors":[{"i":1,"m":-1,"e":[1,0]}, ...]}
inline Json monomial_to_json(const ExtMonomial& M) {
  Json factors = Json::array();
  for (const auto& [key, e] : M.factors())
    factors.push_back(Json{{"i", key.i}, {"m", key.m}, {"e", std::vector<Int>{e.a, e.b}}});
  return Json{{"kind", "ext"}, {"n", M.rank()}, {"factors", factors}};
}

inline PlainMonomial plain_monomial_from_json(const Json& j) {
  if (j.at("kind").get<std::string>() != "plain") throw std::invalid_argument("expected a plain monomial");
  PlainMonomial M{Rank(j.at("n").get<int>())};
  for (const auto& f : j.at("factors"))
    M.multiply_factor(f.at("i").get<int>(), f.at("m").get<Int>(), f.at("e").get<Int>());
  return M;
}

inline ExtMonomial ext_monomial_from_json(const Json& j) {
  if (j.at("kind").get<std::string>() != "ext") throw std::invalid_argument("expected an ext monomial");
  ExtMonomial M{Rank(j.at("n").get<int>())};
  for (const auto& f : j.at("factors")) {
    auto e = f.at("e").get<std::vector<Int>>();
    if (e.size() != 2) throw std::invalid_argument("ext exponent must be a pair");
    M.multiply_factor(f.at("i").get<int>(), f.at("m").get<Int>(), ExpPair{e[0], e[1]});
  }
  return M;
}

// {"n":3,"rows":[[1,1,1,1],[2,2],[3]]}
inline Json tableau_to_json(const Tableau& t) { return Json{{"n", t.n}, {"rows", t.rows}}; }

inline Tableau tableau_from_json(const Json& j) {
  Tableau t;
  t.n = j.at("n").get<int>();
  t.rows = j.at("rows").get<std::vector<std::vector<int>>>();
  return t;
}

namespace detail {

inline Json b_rows_to_json(const std::vector<std::vector<Int>>& b) {
  Json rows = Json::object();
  for (size_t i = 0; i < b.size(); ++i) rows[std::to_string(i + 1)] = b[i];
  return rows;
}

inline std::vector<std::vector<Int>> b_rows_from_json(const Json& j, int n) {
  std::vector<std::vector<Int>> b(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) {
    auto key = std::to_string(i);
    if (j.contains(key)) b[static_cast<size_t>(i) - 1] = j.at(key).get<std::vector<Int>>();
    if (static_cast<int>(b[static_cast<size_t>(i) - 1].size()) != n + 1 - i)
      throw std::invalid_argument("b row " + key + " has wrong length");
  }
  return b;
}

}  // namespace detail

// {"n":3,"r":0,"p":[1,1,1],"b":{"1":[3,0,4],"2":[2,0],"3":[1]}}
// Row i lists b^i_{i+1} .. b^i_{n+1}.
inline Json xform_to_json(const XFormInf& x) {
  return Json{{"n", x.n}, {"r", x.r}, {"p", x.p}, {"b", detail::b_rows_to_json(x.b)}};
}

inline XFormInf xform_inf_from_json(const Json& j) {
  int n = j.at("n").get<int>();
  XFormInf x = XFormInf::origin(Rank(n), j.value("p", std::vector<Int>{}), j.value("r", Int{0}));
  if (j.contains("b")) x.b = detail::b_rows_from_json(j.at("b"), n);
  return x;
}

// Same layout with the shape recorded: {"n":2,"lambda":[1,1],"r":0,"b":{...}}
inline Json xform_to_json(const XFormLa& x) {
  return Json{{"n", x.n}, {"lambda", x.lambda.coeffs}, {"r", x.r}, {"b", detail::b_rows_to_json(x.b)}};
}

inline XFormLa xform_la_from_json(const Json& j) {
  int n = j.at("n").get<int>();
  Weight lambda(j.at("lambda").get<std::vector<Int>>());
  XFormLa x = XFormLa::origin(Rank(n), lambda, j.value("r", Int{0}));
  if (j.contains("b")) x.b = detail::b_rows_from_json(j.at("b"), n);
  return x;
}

// {"root":0,"truncated":false,"vertices":[{"key":"...","wt":[...]}],
//  "edges":[{"s":0,"t":1,"i":1}]}
inline Json graph_to_json(const CrystalGraph& g) {
  Json vertices = Json::array();
  for (const auto& v : g.vertices) vertices.push_back(Json{{"key", v.key}, {"wt", v.wt.coeffs}});
  Json edges = Json::array();
  for (const auto& e : g.edges) edges.push_back(Json{{"s", e.src}, {"t", e.dst}, {"i", e.color}});
  return Json{{"root", g.root}, {"truncated", g.truncated}, {"vertices", vertices}, {"edges", edges}};
}

inline std::string export_json(const CrystalGraph& g) { return graph_to_json(g).dump() + "\n"; }

inline CrystalGraph graph_from_json(const Json& j) {
  CrystalGraph g;
  g.root = j.at("root").get<int>();
  g.truncated = j.at("truncated").get<bool>();
  for (const auto& v : j.at("vertices"))
    g.vertices.push_back({v.at("key").get<std::string>(), Weight(v.at("wt").get<std::vector<Int>>())});
  for (const auto& e : j.at("edges"))
    g.edges.push_back({e.at("s").get<int>(), e.at("t").get<int>(), e.at("i").get<int>()});
  detail::recompute_depths(g);
  if (g.truncated) {
    int maxd = 0;
    for (int d : g.depths) maxd = std::max(maxd, d);
    g.depth_limit = maxd;
  }
  return g;
}

inline CrystalGraph parse_graph_json(const std::string& text) { return graph_from_json(Json::parse(text)); }

}  // namespace crystal

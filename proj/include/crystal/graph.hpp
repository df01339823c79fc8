#pragma once

// Generic crystal-graph engine. Any element type exposing the small contract
// below can be closed off into a rooted digraph with edges colored by
// i in {1..n}: breadth-first from a seed, children explored in color order,
// deterministic output independent of scheduling.
//
// Element contract:
//   int rank() const;
//   std::string key() const;                      // injective on elements
//   std::optional<Elem> f(int i) const;           // lowering, ZERO = nullopt
//   std::optional<Elem> e(int i) const;           // raising, ZERO = nullopt
//   Weight weight() const;                        // projected weight
//   Int eps(int i) const;  Int phi(int i) const;
//   static constexpr bool infinite;               // model has no bottom

#include <cstdlib>
#include <future>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "crystal/cartan.hpp"

namespace crystal {

struct CrystalGraph {
  struct Vertex {
    std::string key;
    Weight wt;
    friend bool operator==(const Vertex&, const Vertex&) = default;
  };
  struct Edge {
    int src = 0;
    int dst = 0;
    int color = 1;
    friend bool operator==(const Edge&, const Edge&) = default;
  };

  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  int root = 0;
  bool truncated = false;
  std::optional<int> depth_limit;
  std::vector<int> depths;  // f-depth from the root, recomputed after build

  friend bool operator==(const CrystalGraph& a, const CrystalGraph& b) {
    return a.vertices == b.vertices && a.edges == b.edges && a.root == b.root && a.truncated == b.truncated;
  }
};

namespace detail {

inline int env_thread_cap() {
  const char* env = std::getenv("CRYSTAL_THREADS");
  if (!env) return 0;
  int v = std::atoi(env);
  return v < 0 ? 0 : v;
}

inline void recompute_depths(CrystalGraph& g) {
  g.depths.assign(g.vertices.size(), -1);
  if (g.vertices.empty()) return;
  std::vector<std::vector<std::pair<int, int>>> out(g.vertices.size());
  for (const auto& e : g.edges) out[static_cast<size_t>(e.src)].push_back({e.color, e.dst});
  std::vector<int> queue{g.root};
  g.depths[static_cast<size_t>(g.root)] = 0;
  for (size_t at = 0; at < queue.size(); ++at) {
    int u = queue[at];
    for (auto [color, v] : out[static_cast<size_t>(u)]) {
      (void)color;
      if (g.depths[static_cast<size_t>(v)] < 0) {
        g.depths[static_cast<size_t>(v)] = g.depths[static_cast<size_t>(u)] + 1;
        queue.push_back(v);
      }
    }
  }
}

}  // namespace detail

/// Breadth-first closure of a seed under all lowering operators (and the
/// raising operators, for finite models without a depth limit). Vertices are
/// numbered in discovery order, children explored in color order 1..n, so
/// repeated runs produce identical graphs. Depth counts lowering steps from
/// the seed; the truncated flag is set exactly when the cut frontier had
/// children left to explore.
template <class Elem>
CrystalGraph bfs_generate(const Elem& seed, std::optional<int> depth_limit = {}) {
  if (Elem::infinite && !depth_limit)
    throw std::invalid_argument("model is infinite: a depth limit is required");
  if (depth_limit && *depth_limit < 0) throw std::invalid_argument("depth limit must be nonnegative");

  CrystalGraph g;
  g.depth_limit = depth_limit;
  std::vector<Elem> elems;
  std::unordered_map<std::string, int> index;
  std::set<std::tuple<int, int, int>> edge_seen;

  auto intern = [&](Elem&& el, int depth) {
    std::string key = el.key();
    auto it = index.find(key);
    if (it != index.end()) return it->second;
    int id = static_cast<int>(elems.size());
    index.emplace(std::move(key), id);
    g.vertices.push_back({elems.emplace_back(std::move(el)).key(), elems.back().weight()});
    g.depths.push_back(depth);
    return id;
  };

  auto add_edge = [&](int s, int t, int color) {
    if (edge_seen.emplace(s, t, color).second) g.edges.push_back({s, t, color});
  };

  Elem seed_copy = seed;
  intern(std::move(seed_copy), 0);
  const int n = elems[0].rank();
  const bool expand_raising = !depth_limit.has_value();

  struct ChildSet {
    std::vector<std::pair<int, Elem>> lowered;  // (color, element)
    std::vector<std::pair<int, Elem>> raised;
  };
  auto expand = [&](const Elem& el, bool at_cut) {
    ChildSet out;
    for (int i = 1; i <= n; ++i) {
      auto child = el.f(i);
      if (child) {
        out.lowered.emplace_back(i, std::move(*child));
        if (at_cut) break;  // one child is enough to know the cut was real
      }
      if (!at_cut && expand_raising) {
        auto parent = el.e(i);
        if (parent) out.raised.emplace_back(i, std::move(*parent));
      }
    }
    return out;
  };

  size_t next = 0;
  const int threads = detail::env_thread_cap();
  while (next < elems.size()) {
    // One frontier batch: everything discovered so far but not yet expanded.
    size_t begin = next, end = elems.size();
    next = end;
    std::vector<ChildSet> children(end - begin);
    auto run = [&](size_t lo, size_t hi) {
      for (size_t u = lo; u < hi; ++u) {
        bool at_cut = depth_limit && g.depths[u] >= *depth_limit;
        children[u - begin] = expand(elems[u], at_cut);
      }
    };
    if (threads > 1 && end - begin > 1) {
      size_t chunk = (end - begin + static_cast<size_t>(threads) - 1) / static_cast<size_t>(threads);
      std::vector<std::future<void>> futs;
      for (size_t lo = begin; lo < end; lo += chunk)
        futs.push_back(std::async(std::launch::async, run, lo, std::min(lo + chunk, end)));
      for (auto& f : futs) f.get();
    } else {
      run(begin, end);
    }
    // Deterministic merge in frontier order regardless of scheduling.
    for (size_t u = begin; u < end; ++u) {
      bool at_cut = depth_limit && g.depths[u] >= *depth_limit;
      if (at_cut) {
        if (!children[u - begin].lowered.empty()) g.truncated = true;
        continue;
      }
      for (auto& [color, el] : children[u - begin].lowered) {
        int v = intern(std::move(el), g.depths[u] + 1);
        add_edge(static_cast<int>(u), v, color);
      }
      for (auto& [color, el] : children[u - begin].raised) {
        int w = intern(std::move(el), g.depths[u] - 1);
        add_edge(w, static_cast<int>(u), color);
      }
    }
  }

  detail::recompute_depths(g);
  return g;
}

/// Rooted colored isomorphism. Out-degree per (vertex, color) is at most one,
/// so the isomorphism is forced by parallel traversal from the roots and is
/// unique when it exists. Truncated graphs are compared up to the common
/// depth: vertices at the cut are matched but their missing children are not.
/// With compare_weights, matched vertices must agree on wt(root) - wt(v).
inline bool graphs_isomorphic(const CrystalGraph& g1, const CrystalGraph& g2, bool compare_weights = true) {
  auto limit_of = [](const CrystalGraph& g) {
    return g.truncated && g.depth_limit ? *g.depth_limit : std::numeric_limits<int>::max();
  };
  int limit = std::min(limit_of(g1), limit_of(g2));

  auto out_edges = [](const CrystalGraph& g) {
    std::vector<std::vector<std::pair<int, int>>> out(g.vertices.size());
    for (const auto& e : g.edges) out[static_cast<size_t>(e.src)].push_back({e.color, e.dst});
    for (auto& v : out) std::sort(v.begin(), v.end());
    return out;
  };
  auto out1 = out_edges(g1), out2 = out_edges(g2);

  std::vector<int> map12(g1.vertices.size(), -1), map21(g2.vertices.size(), -1);
  std::vector<std::pair<int, int>> stack{{g1.root, g2.root}};
  map12[static_cast<size_t>(g1.root)] = g2.root;
  map21[static_cast<size_t>(g2.root)] = g1.root;

  auto rel_wt = [](const CrystalGraph& g, int v) {
    return g.vertices[static_cast<size_t>(g.root)].wt - g.vertices[static_cast<size_t>(v)].wt;
  };

  while (!stack.empty()) {
    auto [u, v] = stack.back();
    stack.pop_back();
    if (g1.depths[static_cast<size_t>(u)] != g2.depths[static_cast<size_t>(v)]) return false;
    if (compare_weights && !(rel_wt(g1, u) == rel_wt(g2, v))) return false;
    if (g1.depths[static_cast<size_t>(u)] >= limit) continue;
    const auto& eu = out1[static_cast<size_t>(u)];
    const auto& ev = out2[static_cast<size_t>(v)];
    if (eu.size() != ev.size()) return false;
    for (size_t k = 0; k < eu.size(); ++k) {
      if (eu[k].first != ev[k].first) return false;  // color mismatch
      int du = eu[k].second, dv = ev[k].second;
      int& m1 = map12[static_cast<size_t>(du)];
      int& m2 = map21[static_cast<size_t>(dv)];
      if (m1 == -1 && m2 == -1) {
        m1 = dv;
        m2 = du;
        stack.push_back({du, dv});
      } else if (m1 != dv || m2 != du) {
        return false;
      }
    }
  }

  // The traversal must have covered everything within the common depth.
  for (size_t u = 0; u < g1.vertices.size(); ++u)
    if (g1.depths[u] >= 0 && g1.depths[u] <= limit && map12[u] == -1) return false;
  for (size_t v = 0; v < g2.vertices.size(); ++v)
    if (g2.depths[v] >= 0 && g2.depths[v] <= limit && map21[v] == -1) return false;
  return true;
}

/// DOT text, byte-deterministic for a given graph. Edge labels carry the
/// color, with a stable palette cycling through eight hues.
inline std::string export_dot(const CrystalGraph& g) {
  static const char* palette[8] = {"#e41a1c", "#377eb8", "#4daf4a", "#984ea3",
                                   "#ff7f00", "#a65628", "#f781bf", "#999999"};
  std::string out = "digraph crystal {\n";
  for (size_t v = 0; v < g.vertices.size(); ++v) {
    std::string label;
    for (char ch : g.vertices[v].key) {
      if (ch == '"' || ch == '\\') label += '\\';
      label += ch;
    }
    out += "  v" + std::to_string(v) + " [label=\"" + label + "\"];\n";
  }
  for (const auto& e : g.edges) {
    out += "  v" + std::to_string(e.src) + " -> v" + std::to_string(e.dst) + " [label=\"" +
           std::to_string(e.color) + "\", color=\"" + palette[(e.color - 1) % 8] + "\"];\n";
  }
  out += "}\n";
  return out;
}

/// Plain-text listing, byte-deterministic.
inline std::string export_text(const CrystalGraph& g) {
  std::string out = "graph vertices=" + std::to_string(g.vertices.size()) +
                    " edges=" + std::to_string(g.edges.size()) + " root=" + std::to_string(g.root) +
                    " truncated=" + (g.truncated ? "true" : "false") + "\n";
  for (size_t v = 0; v < g.vertices.size(); ++v) {
    out += "v " + std::to_string(v) + " " + g.vertices[v].key + " wt=[";
    for (size_t k = 0; k < g.vertices[v].wt.coeffs.size(); ++k) {
      if (k) out += ",";
      out += std::to_string(g.vertices[v].wt.coeffs[k]);
    }
    out += "]\n";
  }
  for (const auto& e : g.edges)
    out += "e " + std::to_string(e.src) + " " + std::to_string(e.dst) + " " + std::to_string(e.color) + "\n";
  return out;
}

}  // namespace crystal

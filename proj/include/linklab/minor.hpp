#pragma once

#include "linklab/complex.hpp"

#include <bit>
#include <cstdint>
#include <string>
#include <unordered_set>

namespace linklab {

namespace detail {

/// Graph on at most 16 vertices as adjacency bitmasks. `kept` marks edges
/// the search has decided never to contract. Vertices stay compact
/// (0..n-1) so equal states have equal memo keys.
struct MaskGraph {
  std::vector<std::uint16_t> adj;
  std::vector<std::uint16_t> kept;

  std::size_t size() const { return adj.size(); }
  int degree(std::size_t v) const { return std::popcount(adj[v]); }
  std::size_t edge_count() const {
    std::size_t twice = 0;
    for (const auto a : adj)
      twice += static_cast<std::size_t>(std::popcount(a));
    return twice / 2;
  }

  void keep(std::size_t u, std::size_t v) {
    kept[u] |= static_cast<std::uint16_t>(1u << v);
    kept[v] |= static_cast<std::uint16_t>(1u << u);
  }

  void remove_vertex(std::size_t v) {
    const std::uint16_t low = static_cast<std::uint16_t>((1u << v) - 1);
    auto squeeze = [&](std::vector<std::uint16_t> &rows) {
      for (auto &a : rows)
        a = static_cast<std::uint16_t>((a & low) | ((a >> (v + 1)) << v));
      rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(v));
    };
    squeeze(adj);
    squeeze(kept);
  }

  /// Merges v into u. A merged edge stays contractible if either of the
  /// edges it replaces was.
  void contract(std::size_t u, std::size_t v) {
    const std::uint16_t self = static_cast<std::uint16_t>((1u << u) | (1u << v));
    const std::uint16_t merged = static_cast<std::uint16_t>((adj[u] | adj[v]) & ~self);
    const std::uint16_t free_edges =
        static_cast<std::uint16_t>(((adj[u] & ~kept[u]) | (adj[v] & ~kept[v])) & ~self);
    const std::uint16_t merged_kept = static_cast<std::uint16_t>(merged & ~free_edges);
    for (std::size_t w = 0; w < adj.size(); ++w) {
      const std::uint16_t bu = static_cast<std::uint16_t>(1u << u);
      if (merged & (1u << w)) {
        adj[w] |= bu;
        if (merged_kept & (1u << w))
          kept[w] |= bu;
        else
          kept[w] &= static_cast<std::uint16_t>(~bu);
      }
    }
    adj[u] = merged;
    kept[u] = merged_kept;
    remove_vertex(v);
  }

  std::string key() const {
    std::string k;
    for (std::size_t i = 0; i < adj.size(); ++i)
      for (const auto a : {adj[i], kept[i]}) {
        k.push_back(static_cast<char>(a & 0xff));
        k.push_back(static_cast<char>(a >> 8));
      }
    return k;
  }
};

/// Is there a clique on `need` vertices among `candidates`?
inline bool has_clique(const MaskGraph &g, std::uint32_t candidates, int need) {
  if (need == 0)
    return true;
  if (std::popcount(candidates) < need)
    return false;
  while (candidates) {
    const auto v = static_cast<std::size_t>(std::countr_zero(candidates));
    candidates &= candidates - 1;
    if (has_clique(g, candidates & g.adj[v], need - 1))
      return true;
  }
  return false;
}

/// Searches for a set of edges whose contraction leaves a 6-clique; that is
/// equivalent to containing K6 as a minor.
class K6MinorSearch {
public:
  bool run(MaskGraph g) {
    // A vertex of degree <= 1 is at most a leaf of a branch set; dropping
    // it keeps every model.
    for (std::size_t v = 0; v < g.size();)
      if (g.degree(v) <= 1)
        g.remove_vertex(v), v = 0;
      else
        ++v;
    const std::size_t n = g.size();
    if (n < 6)
      return false;
    // Branch sets over m vertices need 15 + (m - 6) edges; each deleted
    // vertex takes at least one more edge with it (minimum degree 2).
    if (g.edge_count() < 9 + n)
      return false;
    std::uint32_t rich = 0;
    for (std::size_t v = 0; v < n; ++v)
      if (g.degree(v) >= 5)
        rich |= 1u << v;
    if (has_clique(g, rich, 6))
      return true;
    if (!seen_.insert(g.key()).second)
      return false;

    std::size_t u = 0;
    for (std::size_t v = 1; v < n; ++v)
      if (g.degree(v) < g.degree(u))
        u = v;
    const std::uint16_t free_edges = static_cast<std::uint16_t>(g.adj[u] & ~g.kept[u]);

    if (g.degree(u) < 5) {
      // u cannot be a branch set on its own (degrees never grow unless u is
      // contracted), so it is unused or merged with a neighbour.
      for (std::uint16_t rest = free_edges; rest; rest &= static_cast<std::uint16_t>(rest - 1)) {
        MaskGraph c = g;
        c.contract(u, static_cast<std::size_t>(std::countr_zero(rest)));
        if (run(std::move(c)))
          return true;
      }
      g.remove_vertex(u);
      return run(std::move(g));
    }

    // Minimum degree >= 5: contract or keep some contractible edge.
    for (std::size_t v = 0; v < n; ++v) {
      const std::uint16_t f = static_cast<std::uint16_t>(g.adj[v] & ~g.kept[v]);
      if (!f)
        continue;
      const auto w = static_cast<std::size_t>(std::countr_zero(f));
      MaskGraph c = g;
      c.contract(v, w);
      if (run(std::move(c)))
        return true;
      g.keep(v, w);
      return run(std::move(g));
    }
    return false;
  }

private:
  std::unordered_set<std::string> seen_;
};

} // namespace detail

/// Whether K6 is a minor of g, by exhaustive contraction search.
inline bool has_k6_minor(const Graph &g, const Limits &lim = {}) {
  if (g.vertex_count() > lim.max_minor_vertices || g.vertex_count() > 16)
    throw LimitExceeded("minor search limited to " + std::to_string(lim.max_minor_vertices) +
                        " vertices");
  detail::MaskGraph m{std::vector<std::uint16_t>(g.vertex_count(), 0),
                      std::vector<std::uint16_t>(g.vertex_count(), 0)};
  for (const auto &[u, v] : g.edges()) {
    m.adj[u] |= static_cast<std::uint16_t>(1u << v);
    m.adj[v] |= static_cast<std::uint16_t>(1u << u);
  }
  return detail::K6MinorSearch{}.run(std::move(m));
}

} // namespace linklab

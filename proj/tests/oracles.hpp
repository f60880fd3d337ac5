#ifndef SG_TESTS_ORACLES_HPP
#define SG_TESTS_ORACLES_HPP

// Slow reference implementations used only by the tests. They share no code
// with the library beyond the Graph accessors: distances come from
// Floyd-Warshall on an adjacency matrix, geodesics from plain DFS, and the
// strong geodetic check from a full product over geodesic choices.

#include "sg/graph.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <utility>
#include <vector>

namespace oracle {

using sg::Vertex;

inline constexpr int inf = 1 << 20;

struct Dense {
  int n = 0;
  std::vector<std::vector<bool>> adj;
  std::vector<std::vector<int>> dist;
};

inline Dense dense(const sg::Graph& g) {
  Dense d;
  d.n = static_cast<int>(g.vertex_count());
  d.adj.assign(d.n, std::vector<bool>(d.n, false));
  d.dist.assign(d.n, std::vector<int>(d.n, inf));
  for (int a = 0; a < d.n; ++a)
    for (int b = 0; b < d.n; ++b)
      if (a != b && g.adjacent(a, b)) d.adj[a][b] = true;
  for (int a = 0; a < d.n; ++a) {
    d.dist[a][a] = 0;
    for (int b = 0; b < d.n; ++b)
      if (d.adj[a][b]) d.dist[a][b] = 1;
  }
  for (int k = 0; k < d.n; ++k)
    for (int a = 0; a < d.n; ++a)
      for (int b = 0; b < d.n; ++b)
        if (d.dist[a][k] + d.dist[k][b] < d.dist[a][b]) d.dist[a][b] = d.dist[a][k] + d.dist[k][b];
  return d;
}

/// All shortest u-v paths by DFS over simple walks of length d(u,v).
inline std::vector<std::vector<Vertex>> geodesics(const Dense& d, int u, int v) {
  std::vector<std::vector<Vertex>> out;
  if (d.dist[u][v] >= inf) return out;
  const int len = d.dist[u][v];
  std::vector<Vertex> cur{static_cast<Vertex>(u)};
  std::function<void(int)> go = [&](int w) {
    if (static_cast<int>(cur.size()) - 1 == len) {
      if (w == v) out.push_back(cur);
      return;
    }
    for (int x = 0; x < d.n; ++x) {
      if (!d.adj[w][x]) continue;
      bool used = false;
      for (auto c : cur) used |= (static_cast<int>(c) == x);
      if (used) continue;
      cur.push_back(static_cast<Vertex>(x));
      go(x);
      cur.pop_back();
    }
  };
  go(u);
  return out;
}

/// True iff some choice of one geodesic per pair of S covers V.
inline bool strong_geodetic(const Dense& d, const std::vector<Vertex>& s) {
  if (s.size() == 1) return d.n == 1;
  std::vector<std::vector<std::uint64_t>> choices;  // vertex masks per pair
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      std::vector<std::uint64_t> masks;
      for (const auto& p : geodesics(d, static_cast<int>(s[i]), static_cast<int>(s[j]))) {
        std::uint64_t m = 0;
        for (auto x : p) m |= std::uint64_t{1} << x;
        masks.push_back(m);
      }
      if (masks.empty()) return false;
      choices.push_back(std::move(masks));
    }
  const std::uint64_t full = d.n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << d.n) - 1;
  std::function<bool(std::size_t, std::uint64_t)> go = [&](std::size_t i, std::uint64_t cov) {
    if (i == choices.size()) return cov == full;
    for (auto m : choices[i])
      if (go(i + 1, cov | m)) return true;
    return false;
  };
  return go(0, 0);
}

/// Minimum strong geodetic set size by subsets of increasing size.
inline int sg_brute(const sg::Graph& g) {
  const auto d = dense(g);
  for (int t = 1; t <= d.n; ++t) {
    std::vector<int> idx(t);
    for (int i = 0; i < t; ++i) idx[i] = i;
    for (;;) {
      std::vector<Vertex> s(idx.begin(), idx.end());
      if (strong_geodetic(d, s)) return t;
      int i = t - 1;
      while (i >= 0 && idx[i] == d.n - t + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < t; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return d.n;
}

/// f by scanning q upwards.
inline std::int64_t f_scan(std::int64_t n, std::int64_t p) {
  std::int64_t q = 0;
  while (q * (q - 1) / 2 < n - p) ++q;
  return q;
}

/// Random connected graph: random spanning tree plus edges with probability p.
inline sg::Graph random_connected(int n, double p, std::mt19937_64& rng) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int v = 1; v < n; ++v) {
    std::uniform_int_distribution<int> parent(0, v - 1);
    edges.emplace_back(static_cast<Vertex>(parent(rng)), static_cast<Vertex>(v));
  }
  std::bernoulli_distribution coin(p);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (coin(rng)) edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
  return sg::Graph::from_edges(static_cast<std::size_t>(n), std::move(edges));
}

}  // namespace oracle

#endif

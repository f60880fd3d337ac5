#ifndef SG_GRAPH_HPP
#define SG_GRAPH_HPP

/**
 * Immutable simple undirected graphs, the generators for the families we care
 * about (hypercubes, complete bipartite graphs, crown graphs), the edge-list
 * text format, BFS distances and shortest-path enumeration.
 *
 * Explicit graphs are stored as sorted CSR neighbour lists. Hypercubes are
 * implicit: vertex i is the bit string b_1..b_n with b_1 as the most
 * significant bit, and its neighbours are i ^ 2^j.
 */

#include "sg/error.hpp"
#include "sg/vertex_set.hpp"

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <istream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace sg {

enum class Family { generic, hypercube, complete_bipartite, crown };

struct FamilyTag {
  Family family = Family::generic;
  unsigned n = 0;
  unsigned m = 0;

  friend bool operator==(const FamilyTag&, const FamilyTag&) = default;
};

inline constexpr unsigned max_hypercube_dimension = 24;
inline constexpr std::uint64_t default_geodesic_cap = 1'000'000;

struct Path {
  std::vector<Vertex> vertices;

  std::size_t length() const noexcept { return vertices.empty() ? 0 : vertices.size() - 1; }
  Vertex front() const { return vertices.front(); }
  Vertex back() const { return vertices.back(); }

  friend bool operator==(const Path&, const Path&) = default;
  friend auto operator<=>(const Path&, const Path&) = default;
};

class Graph {
public:
  /// Builds an explicit graph; duplicate edges collapse, self-loops and
  /// out-of-range endpoints are rejected.
  static Graph from_edges(std::size_t vertex_count,
                          std::vector<std::pair<Vertex, Vertex>> edges,
                          FamilyTag tag = {}) {
    for (auto& [a, b] : edges) {
      if (a >= vertex_count || b >= vertex_count)
        fail(ErrorCode::IndexOutOfRange,
             "edge (" + std::to_string(a) + "," + std::to_string(b) + ") outside [0," +
               std::to_string(vertex_count) + ")");
      if (a == b) fail(ErrorCode::ParseError, "self-loop at vertex " + std::to_string(a));
      if (a > b) std::swap(a, b);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    Graph g;
    g.vertex_count_ = vertex_count;
    g.edge_count_ = edges.size();
    g.tag_ = tag;
    std::vector<std::uint32_t> degree(vertex_count, 0);
    for (auto [a, b] : edges) {
      ++degree[a];
      ++degree[b];
    }
    g.offsets_.assign(vertex_count + 1, 0);
    for (std::size_t v = 0; v < vertex_count; ++v) g.offsets_[v + 1] = g.offsets_[v] + degree[v];
    g.neighbors_.resize(g.offsets_.back());
    std::vector<std::uint32_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
    for (auto [a, b] : edges) {
      g.neighbors_[fill[a]++] = b;
      g.neighbors_[fill[b]++] = a;
    }
    for (std::size_t v = 0; v < vertex_count; ++v)
      std::sort(g.neighbors_.begin() + g.offsets_[v], g.neighbors_.begin() + g.offsets_[v + 1]);
    return g;
  }

  static Graph implicit_hypercube(unsigned n) {
    Graph g;
    g.vertex_count_ = std::size_t{1} << n;
    g.edge_count_ = (g.vertex_count_ * n) / 2;
    g.tag_ = {Family::hypercube, n, 0};
    g.implicit_cube_ = true;
    return g;
  }

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  std::size_t edge_count() const noexcept { return edge_count_; }
  const FamilyTag& family() const noexcept { return tag_; }
  bool is_hypercube() const noexcept { return implicit_cube_; }

  std::size_t degree(Vertex v) const noexcept {
    if (implicit_cube_) return tag_.n;
    return offsets_[v + 1] - offsets_[v];
  }

  bool adjacent(Vertex a, Vertex b) const noexcept {
    if (a >= vertex_count_ || b >= vertex_count_) return false;
    if (implicit_cube_) return std::popcount(a ^ b) == 1;
    auto first = neighbors_.begin() + offsets_[a];
    auto last = neighbors_.begin() + offsets_[a + 1];
    return std::binary_search(first, last, b);
  }

  /// Visits neighbours in ascending index order.
  template <class F>
  void for_each_neighbor(Vertex v, F&& f) const {
    if (implicit_cube_) {
      const unsigned n = tag_.n;
      for (unsigned j = n; j-- > 0;)
        if (v & (Vertex{1} << j)) f(static_cast<Vertex>(v ^ (Vertex{1} << j)));
      for (unsigned j = 0; j < n; ++j)
        if (!(v & (Vertex{1} << j))) f(static_cast<Vertex>(v | (Vertex{1} << j)));
      return;
    }
    for (auto i = offsets_[v]; i < offsets_[v + 1]; ++i) f(static_cast<Vertex>(neighbors_[i]));
  }

  std::vector<Vertex> neighbors(Vertex v) const {
    std::vector<Vertex> out;
    out.reserve(degree(v));
    for_each_neighbor(v, [&](Vertex w) { out.push_back(w); });
    return out;
  }

  /// Sorted (u < v) edge list.
  std::vector<std::pair<Vertex, Vertex>> edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < vertex_count_; ++u)
      for_each_neighbor(u, [&](Vertex w) {
        if (u < w) out.emplace_back(u, w);
      });
    return out;
  }

  /// Structural equality: same vertex count and edge set. The family tag is
  /// metadata and does not participate.
  friend bool operator==(const Graph& a, const Graph& b) {
    if (a.vertex_count_ != b.vertex_count_ || a.edge_count_ != b.edge_count_) return false;
    for (Vertex v = 0; v < a.vertex_count_; ++v)
      if (a.neighbors(v) != b.neighbors(v)) return false;
    return true;
  }

private:
  Graph() = default;

  std::size_t vertex_count_ = 0;
  std::size_t edge_count_ = 0;
  FamilyTag tag_{};
  bool implicit_cube_ = false;
  std::vector<std::uint32_t> offsets_;
  std::vector<std::uint32_t> neighbors_;
};

// ---------------------------------------------------------------- generators

inline Graph hypercube(unsigned n) {
  if (n > max_hypercube_dimension)
    fail(ErrorCode::DimensionTooLarge,
         "hypercube dimension " + std::to_string(n) + " exceeds " +
           std::to_string(max_hypercube_dimension));
  return Graph::implicit_hypercube(n);
}

/// X = {0..n-1}, Y = {n..n+m-1}.
inline Graph complete_bipartite(unsigned n, unsigned m) {
  if (n < 1 || m < 1) fail(ErrorCode::OutOfRange, "complete_bipartite needs n, m >= 1");
  std::vector<std::pair<Vertex, Vertex>> edges;
  edges.reserve(std::size_t{n} * m);
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = 0; j < m; ++j) edges.emplace_back(i, n + j);
  return Graph::from_edges(n + m, std::move(edges), {Family::complete_bipartite, n, m});
}

/// K_{n,n} minus the perfect matching x_i y_i; x_i = i, y_i = n + i.
inline Graph crown(unsigned n) {
  if (n < 3)
    fail(ErrorCode::DisconnectedFamily,
         "crown(" + std::to_string(n) + ") is disconnected or empty; need n >= 3");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = 0; j < n; ++j)
      if (i != j) edges.emplace_back(i, n + j);
  return Graph::from_edges(2 * std::size_t{n}, std::move(edges), {Family::crown, n, n});
}

// ---------------------------------------------------------------- edge lists

inline Graph from_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::optional<std::size_t> vertex_count;
  std::vector<std::pair<Vertex, Vertex>> edges;

  auto parse_error = [&](const std::string& why) {
    fail(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": " + why);
  };

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream fields(line);
    std::string tag;
    if (!(fields >> tag)) continue;  // blank
    if (tag == "c") continue;

    if (tag == "p") {
      if (vertex_count) parse_error("duplicate problem line");
      long long n = -1, m = -1;
      if (!(fields >> n >> m) || n < 0 || m < 0) parse_error("expected 'p <vertex_count> <edge_count>'");
      vertex_count = static_cast<std::size_t>(n);
    } else if (tag == "e") {
      if (!vertex_count) parse_error("edge before problem line");
      long long a = -1, b = -1;
      if (!(fields >> a >> b) || a < 0 || b < 0) parse_error("expected 'e <u> <v>'");
      if (static_cast<std::size_t>(a) >= *vertex_count || static_cast<std::size_t>(b) >= *vertex_count)
        fail(ErrorCode::IndexOutOfRange, "line " + std::to_string(line_no) + ": vertex index outside [0," +
                                           std::to_string(*vertex_count) + ")");
      if (a == b) parse_error("self-loop");
      edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
    } else {
      parse_error("unknown line tag '" + tag + "'");
    }
    std::string trailing;
    if (fields >> trailing) parse_error("trailing token '" + trailing + "'");
  }
  if (!vertex_count) fail(ErrorCode::ParseError, "missing problem line");
  return Graph::from_edges(*vertex_count, std::move(edges));
}

inline Graph from_edge_list(const std::string& text) {
  std::istringstream in(text);
  return from_edge_list(in);
}

inline std::string to_edge_list(const Graph& g) {
  std::string out = "p " + std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
  for (auto [a, b] : g.edges()) out += "e " + std::to_string(a) + " " + std::to_string(b) + "\n";
  return out;
}

// ---------------------------------------------------------------- distances

/// Unreachable vertices carry no value.
using Distance = std::optional<std::uint32_t>;

inline std::vector<Distance> distances_from(const Graph& g, Vertex source) {
  if (source >= g.vertex_count()) fail(ErrorCode::IndexOutOfRange, "source vertex out of range");
  std::vector<Distance> dist(g.vertex_count());
  if (g.is_hypercube()) {
    for (Vertex v = 0; v < g.vertex_count(); ++v)
      dist[v] = static_cast<std::uint32_t>(std::popcount(v ^ source));
    return dist;
  }
  std::vector<Vertex> queue;
  queue.reserve(g.vertex_count());
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    const std::uint32_t du = *dist[u];
    g.for_each_neighbor(u, [&](Vertex w) {
      if (!dist[w]) {
        dist[w] = du + 1;
        queue.push_back(w);
      }
    });
  }
  return dist;
}

inline bool is_connected(const Graph& g) {
  if (g.vertex_count() <= 1) return true;
  if (g.is_hypercube()) return true;
  const auto d = distances_from(g, 0);
  return std::all_of(d.begin(), d.end(), [](const Distance& x) { return x.has_value(); });
}

struct Diameter {
  std::uint32_t value = 0;
  bool connected = true;
};

/// Max over all-pairs BFS. When disconnected, value is the largest finite
/// distance and connected is false.
inline Diameter diameter(const Graph& g) {
  if (g.is_hypercube()) return {g.family().n, true};
  Diameter result;
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    for (const auto& d : distances_from(g, u)) {
      if (!d)
        result.connected = false;
      else
        result.value = std::max(result.value, *d);
    }
  }
  return result;
}

// ---------------------------------------------------------------- geodesics

struct GeodesicCount {
  std::uint64_t value = 0;
  bool saturated = false;  ///< true when the exact count exceeds 2^64 - 1
};

namespace detail {

inline std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b, bool& saturated) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r)) {
    saturated = true;
    return std::numeric_limits<std::uint64_t>::max();
  }
  return r;
}

struct GeodesicDag {
  std::vector<Distance> from_u;
  std::vector<Distance> to_v;
  std::uint32_t length = 0;

  bool on_dag(Vertex w) const {
    return from_u[w] && to_v[w] && *from_u[w] + *to_v[w] == length;
  }
};

inline GeodesicDag geodesic_dag(const Graph& g, Vertex u, Vertex v) {
  if (u >= g.vertex_count() || v >= g.vertex_count())
    fail(ErrorCode::IndexOutOfRange, "geodesic endpoint out of range");
  GeodesicDag dag{distances_from(g, u), distances_from(g, v), 0};
  if (!dag.from_u[v])
    fail(ErrorCode::Unreachable,
         "no path between " + std::to_string(u) + " and " + std::to_string(v));
  dag.length = *dag.from_u[v];
  return dag;
}

}  // namespace detail

/// Number of shortest u-v paths via DP over the BFS layers.
inline GeodesicCount count_geodesics(const Graph& g, Vertex u, Vertex v) {
  const auto dag = detail::geodesic_dag(g, u, v);
  std::vector<std::vector<Vertex>> layers(dag.length + 1);
  for (Vertex w = 0; w < g.vertex_count(); ++w)
    if (dag.on_dag(w)) layers[*dag.from_u[w]].push_back(w);

  GeodesicCount result;
  std::vector<std::uint64_t> ways(g.vertex_count(), 0);
  ways[u] = 1;
  for (std::uint32_t d = 1; d <= dag.length; ++d)
    for (Vertex w : layers[d])
      g.for_each_neighbor(w, [&](Vertex p) {
        if (dag.on_dag(p) && *dag.from_u[p] + 1 == d)
          ways[w] = detail::saturating_add(ways[w], ways[p], result.saturated);
      });
  result.value = ways[v];
  return result;
}

/// All shortest u-v paths in lexicographic order of their vertex sequences.
/// The count is checked against cap before anything is materialised.
inline std::vector<Path> enumerate_geodesics(const Graph& g, Vertex u, Vertex v,
                                             std::uint64_t cap = default_geodesic_cap) {
  const auto count = count_geodesics(g, u, v);
  if (count.saturated || count.value > cap)
    fail(ErrorCode::GeodesicExplosion,
         "pair (" + std::to_string(u) + "," + std::to_string(v) + ") has " +
           (count.saturated ? std::string(">2^64") : std::to_string(count.value)) +
           " geodesics, cap is " + std::to_string(cap));

  const auto dag = detail::geodesic_dag(g, u, v);
  std::vector<Path> out;
  out.reserve(static_cast<std::size_t>(count.value));
  if (u == v) {
    out.push_back(Path{{u}});
    return out;
  }
  std::vector<Vertex> stack{u};

  // Iterative DFS: successors of w are neighbours one step closer to v.
  auto successors = [&](Vertex w) {
    std::vector<Vertex> next;
    const auto remaining = *dag.to_v[w];
    g.for_each_neighbor(w, [&](Vertex x) {
      if (dag.to_v[x] && *dag.to_v[x] + 1 == remaining) next.push_back(x);
    });
    return next;
  };
  std::vector<std::pair<std::vector<Vertex>, std::size_t>> frames;
  frames.emplace_back(successors(u), 0);
  while (!frames.empty()) {
    auto& [next, idx] = frames.back();
    if (idx == next.size()) {
      frames.pop_back();
      stack.pop_back();
      continue;
    }
    const Vertex x = next[idx++];
    stack.push_back(x);
    if (x == v) {
      out.push_back(Path{stack});
      stack.pop_back();
    } else {
      frames.emplace_back(successors(x), 0);
    }
  }
  return out;
}

/// The lexicographically first shortest u-v path.
inline Path first_geodesic(const Graph& g, Vertex u, Vertex v) {
  if (u >= g.vertex_count() || v >= g.vertex_count())
    fail(ErrorCode::IndexOutOfRange, "geodesic endpoint out of range");
  const auto to_v = distances_from(g, v);
  if (!to_v[u]) fail(ErrorCode::Unreachable, "no path between " + std::to_string(u) + " and " + std::to_string(v));
  Path p{{u}};
  Vertex cur = u;
  while (cur != v) {
    const auto want = *to_v[cur] - 1;
    std::optional<Vertex> step;
    g.for_each_neighbor(cur, [&](Vertex w) {
      if (!step && to_v[w] && *to_v[w] == want) step = w;
    });
    cur = *step;
    p.vertices.push_back(cur);
  }
  return p;
}

/// Validates the Path invariants: consecutive vertices adjacent, no repeats.
inline bool is_simple_walk(const Graph& g, const Path& p) {
  if (p.vertices.empty()) return false;
  VertexSet seen(g.vertex_count());
  for (std::size_t i = 0; i < p.vertices.size(); ++i) {
    const Vertex w = p.vertices[i];
    if (w >= g.vertex_count() || seen.test(w)) return false;
    seen.set(w);
    if (i > 0 && !g.adjacent(p.vertices[i - 1], w)) return false;
  }
  return true;
}

}  // namespace sg

#endif

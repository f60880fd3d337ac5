#ifndef SG_VERIFY_HPP
#define SG_VERIFY_HPP

/**
 * Geodesic assignments ("witnesses") and the two questions asked about them:
 * does a given assignment cover the graph, and does any assignment exist for
 * a given vertex set.
 *
 * The existence check is a backtracking search over the pairs of S, one
 * geodesic per pair, on bit-set coverage masks. Pairs are visited in
 * ascending order of how many distinct geodesic choices they have. Pruning:
 *   - vertices lying on every geodesic of a pair are committed up front;
 *   - a branch dies when the remaining pairs cannot reach the uncovered set,
 *     either as a union or by a per-pair best-gain count;
 *   - within a pair, a choice whose new coverage is contained in a sibling's
 *     new coverage is skipped;
 *   - failed (depth, covered) states are memoised.
 */

#include "sg/error.hpp"
#include "sg/graph.hpp"
#include "sg/vertex_set.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

namespace sg {

struct PairPath {
  Vertex u = 0;
  Vertex v = 0;
  Path path;

  friend bool operator==(const PairPath&, const PairPath&) = default;
};

struct Witness {
  std::vector<Vertex> set;          ///< sorted, distinct
  std::vector<PairPath> assignment;  ///< one record per unordered pair of set

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct InvalidPath {
  Vertex u = 0;
  Vertex v = 0;
  std::string reason;

  friend bool operator==(const InvalidPath&, const InvalidPath&) = default;
};

struct CoverageReport {
  bool covered = false;
  std::vector<Vertex> uncovered_vertices;
  std::vector<InvalidPath> invalid_paths;
};

/// Point-to-point distances with per-source BFS caching; hypercubes answer by
/// popcount.
class DistanceCache {
public:
  explicit DistanceCache(const Graph& g) : g_(g) {}

  Distance operator()(Vertex u, Vertex v) {
    if (g_.is_hypercube()) return static_cast<std::uint32_t>(std::popcount(u ^ v));
    auto it = rows_.find(u);
    if (it == rows_.end()) it = rows_.emplace(u, distances_from(g_, u)).first;
    return it->second[v];
  }

private:
  const Graph& g_;
  std::unordered_map<Vertex, std::vector<Distance>> rows_;
};

namespace detail {

inline std::pair<Vertex, Vertex> ordered(Vertex a, Vertex b) { return a < b ? std::pair{a, b} : std::pair{b, a}; }

inline std::string check_path(const Graph& g, const PairPath& rec, DistanceCache& dist) {
  const auto& p = rec.path.vertices;
  if (p.empty()) return "empty path";
  for (Vertex w : p)
    if (w >= g.vertex_count()) return "vertex " + std::to_string(w) + " out of range";
  const bool forward = p.front() == rec.u && p.back() == rec.v;
  const bool backward = p.front() == rec.v && p.back() == rec.u;
  if (!forward && !backward) return "endpoints do not match pair";
  if (!is_simple_walk(g, rec.path)) return "not a simple path of adjacent vertices";
  const auto d = dist(rec.u, rec.v);
  if (!d) return "endpoints unreachable";
  if (rec.path.length() != *d)
    return "length " + std::to_string(rec.path.length()) + " exceeds distance " + std::to_string(*d);
  return {};
}

}  // namespace detail

/// Checks a witness against g. Structural defects (set not sorted/distinct,
/// a pair missing or repeated, a record naming a vertex outside the set)
/// raise MalformedWitness; path defects and coverage gaps are reported, all
/// of them.
inline CoverageReport verify_witness(const Graph& g, const Witness& w) {
  const auto& s = w.set;
  for (Vertex x : s)
    if (x >= g.vertex_count())
      fail(ErrorCode::IndexOutOfRange, "witness vertex " + std::to_string(x) + " not in graph");
  for (std::size_t i = 1; i < s.size(); ++i)
    if (s[i - 1] >= s[i]) fail(ErrorCode::MalformedWitness, "witness set must be sorted and distinct");

  std::vector<std::string> problems;
  std::map<std::pair<Vertex, Vertex>, int> seen;
  for (const auto& rec : w.assignment) {
    const bool in_set = std::binary_search(s.begin(), s.end(), rec.u) &&
                        std::binary_search(s.begin(), s.end(), rec.v);
    if (!in_set || rec.u == rec.v) {
      problems.push_back("record (" + std::to_string(rec.u) + "," + std::to_string(rec.v) +
                         ") is not a pair of the set");
      continue;
    }
    if (++seen[detail::ordered(rec.u, rec.v)] == 2)
      problems.push_back("duplicate pair (" + std::to_string(rec.u) + "," + std::to_string(rec.v) + ")");
  }
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (!seen.count({s[i], s[j]}))
        problems.push_back("missing pair (" + std::to_string(s[i]) + "," + std::to_string(s[j]) + ")");
  if (!problems.empty()) {
    std::string msg;
    for (const auto& p : problems) msg += (msg.empty() ? "" : "; ") + p;
    fail(ErrorCode::MalformedWitness, msg);
  }

  CoverageReport report;
  DistanceCache dist(g);
  VertexSet covered(g.vertex_count());
  for (Vertex x : s) covered.set(x);
  for (const auto& rec : w.assignment) {
    auto why = detail::check_path(g, rec, dist);
    if (!why.empty()) {
      report.invalid_paths.push_back({rec.u, rec.v, std::move(why)});
      continue;
    }
    for (Vertex x : rec.path.vertices) covered.set(x);
  }
  for (Vertex x = 0; x < g.vertex_count(); ++x)
    if (!covered.test(x)) report.uncovered_vertices.push_back(x);
  report.covered = report.uncovered_vertices.empty() && report.invalid_paths.empty();
  return report;
}

// ------------------------------------------------------------------ search

/// Distinct-vertex-set geodesics of a pair; each entry keeps the
/// lexicographically first path realising that vertex set.
struct PairGeodesics {
  std::vector<Path> paths;
  std::vector<VertexSet> vertex_sets;
};

inline PairGeodesics collect_pair_geodesics(const Graph& g, Vertex u, Vertex v, std::uint64_t cap) {
  PairGeodesics out;
  std::unordered_set<VertexSet, VertexSetHash> seen;
  for (auto& p : enumerate_geodesics(g, u, v, cap)) {
    VertexSet vs(g.vertex_count());
    for (Vertex x : p.vertices) vs.set(x);
    if (seen.insert(vs).second) {
      out.paths.push_back(std::move(p));
      out.vertex_sets.push_back(std::move(vs));
    }
  }
  return out;
}

/// Per-pair geodesic choices, computed lazily or all at once. After
/// precompute_all() the catalogue is read-only and may be shared between
/// threads through at().
class GeodesicCatalog {
public:
  GeodesicCatalog(const Graph& g, std::uint64_t cap) : g_(g), cap_(cap) {}

  const Graph& graph() const noexcept { return g_; }
  std::uint64_t cap() const noexcept { return cap_; }

  const PairGeodesics& get(Vertex u, Vertex v) {
    const auto k = key(u, v);
    auto it = table_.find(k);
    if (it == table_.end()) {
      auto [a, b] = detail::ordered(u, v);
      it = table_.emplace(k, collect_pair_geodesics(g_, a, b, cap_)).first;
    }
    return it->second;
  }

  const PairGeodesics& at(Vertex u, Vertex v) const { return table_.at(key(u, v)); }

  bool has(Vertex u, Vertex v) const { return table_.find(key(u, v)) != table_.end(); }

  void precompute_all() {
    for (Vertex a = 0; a < g_.vertex_count(); ++a)
      for (Vertex b = a + 1; b < g_.vertex_count(); ++b) get(a, b);
  }

private:
  static std::uint64_t key(Vertex u, Vertex v) {
    auto [a, b] = detail::ordered(u, v);
    return (std::uint64_t{a} << 32) | b;
  }

  const Graph& g_;
  std::uint64_t cap_;
  std::unordered_map<std::uint64_t, PairGeodesics> table_;
};

namespace detail {

class CoverSearch {
public:
  struct Choice {
    const Path* path;
    VertexSet mask;  ///< vertices of the path outside the selected set
  };
  struct Pair {
    Vertex u, v;
    std::vector<Choice> choices;
  };

  CoverSearch(std::size_t universe, std::vector<Pair> pairs, VertexSet covered)
    : universe_(universe), pairs_(std::move(pairs)), start_(std::move(covered)),
      memo_(pairs_.size() + 1) {}

  std::optional<std::vector<const Path*>> run() {
    // Forced coverage: what every choice of a pair covers.
    for (const auto& p : pairs_) {
      VertexSet common = p.choices.front().mask;
      for (const auto& c : p.choices) common &= c.mask;
      start_ |= common;
    }
    suffix_union_.assign(pairs_.size() + 1, VertexSet(universe_));
    for (std::size_t i = pairs_.size(); i-- > 0;) {
      suffix_union_[i] = suffix_union_[i + 1];
      for (const auto& c : pairs_[i].choices) suffix_union_[i] |= c.mask;
    }
    picks_.assign(pairs_.size(), 0);
    if (!dfs(0, start_)) return std::nullopt;
    std::vector<const Path*> out;
    for (std::size_t i = 0; i < pairs_.size(); ++i) out.push_back(pairs_[i].choices[picks_[i]].path);
    return out;
  }

private:
  bool dfs(std::size_t depth, const VertexSet& covered) {
    const std::size_t missing = universe_ - covered.count();
    if (missing == 0) {
      for (std::size_t i = depth; i < pairs_.size(); ++i) picks_[i] = 0;
      return true;
    }
    if (depth == pairs_.size()) return false;
    if (!(covered | suffix_union_[depth]).all()) return false;

    std::size_t reach = 0;
    for (std::size_t i = depth; i < pairs_.size() && reach < missing; ++i) {
      std::size_t best = 0;
      for (const auto& c : pairs_[i].choices) best = std::max(best, c.mask.count_minus(covered));
      reach += best;
    }
    if (reach < missing) return false;

    auto& failed = memo_[depth];
    if (failed.count(covered)) return false;

    const auto& choices = pairs_[depth].choices;
    std::vector<VertexSet> gains;
    gains.reserve(choices.size());
    for (const auto& c : choices) {
      VertexSet g = c.mask;
      g.subtract(covered);
      gains.push_back(std::move(g));
    }
    std::vector<std::size_t> order;
    for (std::size_t i = 0; i < choices.size(); ++i) {
      bool dominated = false;
      for (std::size_t j = 0; j < choices.size() && !dominated; ++j) {
        if (i == j || !gains[i].is_subset_of(gains[j])) continue;
        dominated = !(gains[j].is_subset_of(gains[i])) || j < i;
      }
      if (!dominated) order.push_back(i);
    }
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return gains[a].count() > gains[b].count();
    });

    for (std::size_t i : order) {
      picks_[depth] = i;
      if (dfs(depth + 1, covered | choices[i].mask)) return true;
    }
    if (memo_entries_ >= memo_limit) {
      for (auto& m : memo_) m.clear();
      memo_entries_ = 0;
    }
    failed.insert(covered);
    ++memo_entries_;
    return false;
  }

  static constexpr std::size_t memo_limit = 1U << 20;

  std::size_t universe_;
  std::vector<Pair> pairs_;
  VertexSet start_;
  std::vector<VertexSet> suffix_union_;
  std::vector<std::size_t> picks_;
  std::vector<std::unordered_set<VertexSet, VertexSetHash>> memo_;
  std::size_t memo_entries_ = 0;
};

inline std::vector<Vertex> normalise_set(const Graph& g, std::vector<Vertex> s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  if (s.empty()) fail(ErrorCode::OutOfRange, "vertex set must be nonempty");
  if (s.back() >= g.vertex_count())
    fail(ErrorCode::IndexOutOfRange, "vertex " + std::to_string(s.back()) + " not in graph");
  return s;
}

}  // namespace detail

/// Searches for a geodesic assignment on S that covers g, using (and filling)
/// the given catalogue. Requires g connected.
inline std::optional<Witness> find_assignment(GeodesicCatalog& catalog, std::vector<Vertex> set) {
  const Graph& g = catalog.graph();
  set = detail::normalise_set(g, std::move(set));
  const std::size_t nv = g.vertex_count();
  if (set.size() == 1) {
    if (nv == 1) return Witness{set, {}};
    return std::nullopt;
  }

  VertexSet selected(nv);
  for (Vertex x : set) selected.set(x);

  std::vector<detail::CoverSearch::Pair> pairs;
  for (std::size_t i = 0; i < set.size(); ++i)
    for (std::size_t j = i + 1; j < set.size(); ++j) {
      const auto& geo = catalog.has(set[i], set[j]) ? catalog.at(set[i], set[j])
                                                     : catalog.get(set[i], set[j]);
      detail::CoverSearch::Pair p{set[i], set[j], {}};
      std::vector<VertexSet> masks;
      for (const auto& vs : geo.vertex_sets) {
        VertexSet m = vs;
        m.subtract(selected);
        masks.push_back(std::move(m));
      }
      // Drop choices whose useful coverage is contained in a sibling's; on
      // equal masks the earlier (lexicographically smaller) path survives.
      for (std::size_t a = 0; a < masks.size(); ++a) {
        bool dominated = false;
        for (std::size_t b = 0; b < masks.size() && !dominated; ++b) {
          if (a == b || !masks[a].is_subset_of(masks[b])) continue;
          dominated = !masks[b].is_subset_of(masks[a]) || b < a;
        }
        if (!dominated) p.choices.push_back({&geo.paths[a], masks[a]});
      }
      pairs.push_back(std::move(p));
    }
  std::stable_sort(pairs.begin(), pairs.end(), [](const auto& a, const auto& b) {
    return a.choices.size() < b.choices.size();
  });

  detail::CoverSearch search(nv, pairs, selected);
  auto picked = search.run();
  if (!picked) return std::nullopt;

  Witness w{set, {}};
  for (std::size_t i = 0; i < pairs.size(); ++i)
    w.assignment.push_back({pairs[i].u, pairs[i].v, *(*picked)[i]});
  std::sort(w.assignment.begin(), w.assignment.end(), [](const PairPath& a, const PairPath& b) {
    return std::pair{a.u, a.v} < std::pair{b.u, b.v};
  });
  return w;
}

/// Returns a covering assignment on S if one exists. Deterministic: the same
/// inputs always yield the same witness.
inline std::optional<Witness> is_strong_geodetic_set(const Graph& g, std::vector<Vertex> set,
                                                     std::uint64_t cap = default_geodesic_cap) {
  if (!is_connected(g)) fail(ErrorCode::Disconnected, "graph is disconnected");
  GeodesicCatalog catalog(g, cap);
  return find_assignment(catalog, std::move(set));
}

}  // namespace sg

#endif

#ifndef SG_SOLVER_HPP
#define SG_SOLVER_HPP

/**
 * Exact strong geodetic number for small graphs.
 *
 * Sizes t are tried in ascending order starting from
 * max(lower_bound_general, #degree-1 vertices, 2). For each t the t-subsets
 * containing every degree-1 vertex are enumerated in lexicographic order and
 * handed to find_assignment; the first success is the answer. With several
 * threads, subsets are tested in fixed-size blocks and the lexicographically
 * first success of the block wins, so the output does not depend on the
 * thread count.
 */

#include "sg/error.hpp"
#include "sg/graph.hpp"
#include "sg/int_math.hpp"
#include "sg/result.hpp"
#include "sg/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <limits>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace sg {

/// ceil((d - 3 + sqrt((d-3)^2 + 8n(d-1))) / (2(d-1))) for diameter d >= 2.
inline std::int64_t lower_bound_general(const Graph& g) {
  const auto diam = diameter(g);
  if (!diam.connected) fail(ErrorCode::Disconnected, "graph is disconnected");
  if (diam.value < 2)
    fail(ErrorCode::DiameterTooSmall, "general lower bound needs diameter >= 2");
  using intmath::i128;
  using intmath::u128;
  const i128 d = diam.value;
  const i128 n = static_cast<i128>(g.vertex_count());
  const auto radicand = static_cast<u128>((d - 3) * (d - 3) + 8 * n * (d - 1));
  return static_cast<std::int64_t>(intmath::ceil_sqrt_ratio(d - 3, radicand, 2 * (d - 1)));
}

/// Degree-1 vertices: they are interior to no geodesic and must be selected.
inline std::vector<Vertex> forced_vertices(const Graph& g) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) == 1) out.push_back(v);
  return out;
}

struct SolverOptions {
  std::uint64_t cap = default_geodesic_cap;
  std::size_t max_vertices = 20;
  unsigned threads = 1;
};

namespace detail {

/// Lexicographic r-combinations of a sorted pool, merged with a fixed sorted
/// set. Merging preserves lexicographic order of the resulting sets.
class SubsetEnumerator {
public:
  SubsetEnumerator(std::vector<Vertex> pool, std::vector<Vertex> fixed, std::size_t r)
    : pool_(std::move(pool)), fixed_(std::move(fixed)), r_(r), idx_(r) {
    done_ = r_ > pool_.size();
    for (std::size_t i = 0; i < r_; ++i) idx_[i] = i;
  }

  std::optional<std::vector<Vertex>> next() {
    if (done_) return std::nullopt;
    std::vector<Vertex> out = fixed_;
    for (auto i : idx_) out.push_back(pool_[i]);
    std::sort(out.begin(), out.end());
    advance();
    return out;
  }

private:
  void advance() {
    std::size_t i = r_;
    while (i > 0) {
      --i;
      if (idx_[i] != i + pool_.size() - r_) {
        ++idx_[i];
        for (std::size_t j = i + 1; j < r_; ++j) idx_[j] = idx_[j - 1] + 1;
        return;
      }
    }
    done_ = true;
  }

  std::vector<Vertex> pool_;
  std::vector<Vertex> fixed_;
  std::size_t r_;
  std::vector<std::size_t> idx_;
  bool done_ = false;
};

inline std::optional<Witness> first_success(GeodesicCatalog& catalog,
                                            const std::vector<std::vector<Vertex>>& block,
                                            unsigned threads) {
  if (threads <= 1) {
    for (const auto& s : block)
      if (auto w = find_assignment(catalog, s)) return w;
    return std::nullopt;
  }
  std::vector<std::optional<Witness>> results(block.size());
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best{std::numeric_limits<std::size_t>::max()};
  std::exception_ptr error;
  std::mutex error_mutex;

  auto worker = [&] {
    try {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= block.size() || i > best.load()) return;
        results[i] = find_assignment(catalog, block[i]);
        if (results[i]) {
          std::size_t cur = best.load();
          while (i < cur && !best.compare_exchange_weak(cur, i)) {}
        }
      }
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  const std::size_t b = best.load();
  if (b == std::numeric_limits<std::size_t>::max()) return std::nullopt;
  return std::move(results[b]);
}

inline SgResult exact_result(const Graph& g, Witness w) {
  const auto report = verify_witness(g, w);
  if (!report.covered) fail(ErrorCode::AssignmentInfeasible, "solver produced a witness that does not verify");
  SgResult r;
  r.value = static_cast<std::int64_t>(w.set.size());
  r.method = Method::exact;
  r.witness = std::move(w);
  return r;
}

}  // namespace detail

inline SgResult sg_exact(const Graph& g, const SolverOptions& opts = {}) {
  const std::size_t nv = g.vertex_count();
  if (nv == 0) fail(ErrorCode::OutOfRange, "empty graph");
  if (!is_connected(g)) fail(ErrorCode::Disconnected, "graph is disconnected");
  if (nv > opts.max_vertices)
    fail(ErrorCode::SizeLimitExceeded,
         std::to_string(nv) + " vertices exceeds the exact-solver limit of " + std::to_string(opts.max_vertices));

  if (nv == 1) return detail::exact_result(g, Witness{{0}, {}});

  const auto diam = diameter(g);
  if (diam.value == 1) {
    // Complete graph: every geodesic is an edge, so every vertex is needed.
    Witness w;
    for (Vertex v = 0; v < nv; ++v) w.set.push_back(v);
    for (Vertex a = 0; a < nv; ++a)
      for (Vertex b = a + 1; b < nv; ++b) w.assignment.push_back({a, b, Path{{a, b}}});
    return detail::exact_result(g, std::move(w));
  }

  GeodesicCatalog catalog(g, opts.cap);
  catalog.precompute_all();

  const auto forced = forced_vertices(g);
  std::vector<Vertex> pool;
  for (Vertex v = 0; v < nv; ++v)
    if (!std::binary_search(forced.begin(), forced.end(), v)) pool.push_back(v);

  const std::size_t start =
    std::max<std::size_t>({static_cast<std::size_t>(lower_bound_general(g)), forced.size(), 2});
  const unsigned threads = std::max(1U, opts.threads);
  const std::size_t block_size = threads <= 1 ? 1 : 64 * std::size_t{threads};

  for (std::size_t t = start; t <= nv; ++t) {
    detail::SubsetEnumerator subsets(pool, forced, t - forced.size());
    std::vector<std::vector<Vertex>> block;
    for (;;) {
      block.clear();
      while (block.size() < block_size) {
        auto s = subsets.next();
        if (!s) break;
        block.push_back(std::move(*s));
      }
      if (block.empty()) break;
      if (auto w = detail::first_success(catalog, block, threads)) return detail::exact_result(g, std::move(*w));
    }
  }
  // V itself always works on a connected graph; reaching here is a bug.
  fail(ErrorCode::AssignmentInfeasible, "no strong geodetic set found");
}

}  // namespace sg

#endif

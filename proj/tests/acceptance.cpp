// Acceptance checks, one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria (0 when everything passes).

#include "oracles.hpp"
#include "sg/cli.hpp"
#include "sg/closed_forms.hpp"
#include "sg/constructions.hpp"
#include "sg/solver.hpp"

#include <bit>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

using namespace sg;

namespace {

// Time limits per criterion, in seconds.
constexpr double limit_table = 1.0;
constexpr double limit_q3 = 5.0;
constexpr double limit_q4 = 600.0;
constexpr double limit_bipartite_oracle = 30.0;
constexpr double limit_brute_force = 300.0;
constexpr double limit_constructions = 300.0;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void report(int id, const char* name, const std::function<Outcome()>& check) {
  const auto t0 = Clock::now();
  Outcome o;
  try {
    o = check();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = seconds_since(t0);
  std::printf("%s criterion %d (%s): %s [%.3fs]\n", o.pass ? "PASS" : "FAIL", id, name, o.detail.c_str(), secs);
  std::fflush(stdout);
  if (!o.pass) ++failures;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  return {std::istreambuf_iterator<char>(in), {}};
}

Outcome table_reproduction() {
  const auto t0 = Clock::now();
  const auto r = cli::dispatch({"table", "--max-n", "15"});
  const double secs = seconds_since(t0);
  const auto want = slurp(std::string(SG_FIXTURE_DIR) + "/bounds_table.tsv");
  if (want.empty()) return {false, "fixture bounds_table.tsv missing"};
  if (!r.text || *r.text != want) return {false, "TSV differs from fixture"};
  if (secs >= limit_table) return {false, "too slow"};
  return {true, "byte-exact match for n = 1..15"};
}

Outcome small_cubes() {
  std::ostringstream d;
  for (unsigned n : {3u, 4u}) {
    const auto t0 = Clock::now();
    const auto r = sg_exact(hypercube(n));
    const double secs = seconds_since(t0);
    const std::int64_t want = n == 3 ? 4 : 5;
    if (r.value != want) return {false, "sg(Q_" + std::to_string(n) + ") = " + std::to_string(r.value)};
    if (!r.witness || !verify_witness(hypercube(n), *r.witness).covered) return {false, "witness does not verify"};
    if (secs >= (n == 3 ? limit_q3 : limit_q4)) return {false, "too slow"};
    d << "sg(Q_" << n << ")=" << r.value << " ";
  }
  d << "with verified witnesses";
  return {true, d.str()};
}

Outcome bipartite_oracle() {
  const auto t0 = Clock::now();
  std::size_t pairs = 0;
  for (std::int64_t n = 3; n <= 300; ++n)
    for (std::int64_t m = n; m <= 300; ++m) {
      ++pairs;
      const auto c = sg_bipartite_closed(n, m).value;
      const auto o = sg_bipartite_opt(n, m).value;
      if (c != o)
        return {false, "(" + std::to_string(n) + "," + std::to_string(m) + "): closed " + std::to_string(c) +
                         " vs opt " + std::to_string(o)};
    }
  if (seconds_since(t0) >= limit_bipartite_oracle) return {false, "too slow"};
  return {true, std::to_string(pairs) + " pairs agree"};
}

Outcome balanced() {
  for (std::int64_t n = 6; n <= 300; ++n)
    if (sg_balanced(n).value != sg_bipartite_closed(n, n).value) return {false, "n = " + std::to_string(n)};
  return {true, "6 <= n <= 300 agree"};
}

Outcome brute_force() {
  const auto t0 = Clock::now();
  int graphs = 0;
  for (unsigned n = 1; n <= 6; ++n)
    for (unsigned m = n; n + m <= 12; ++m) {
      ++graphs;
      const auto g = complete_bipartite(n, m);
      const auto r = sg_exact(g);
      const auto want = sg_complete_bipartite(n, m).value;
      if (r.value != want || !verify_witness(g, *r.witness).covered)
        return {false, "K_{" + std::to_string(n) + "," + std::to_string(m) + "}: exact " + std::to_string(r.value) +
                         " vs formula " + std::to_string(want)};
    }
  for (unsigned n = 3; n <= 6; ++n) {
    ++graphs;
    const auto r = sg_exact(crown(n));
    if (r.value != sg_crown(n).value) return {false, "crown(" + std::to_string(n) + ")"};
  }
  if (seconds_since(t0) >= limit_brute_force) return {false, "too slow"};
  return {true, std::to_string(graphs) + " graphs agree"};
}

Outcome constructions() {
  const auto t0 = Clock::now();
  int basic = 0;
  for (unsigned n = 1; n <= 10; ++n)
    for (unsigned n0 = 1; n0 <= n; ++n0) {
      const auto c = build_hypercube_basic(n, n0);
      if (!verify_witness(hypercube(n), c.witness).covered) return {false, "basic does not verify"};
      if (static_cast<std::int64_t>(c.witness.set.size()) != hypercube_basic_bound(n, n0))
        return {false, "basic size mismatch at n=" + std::to_string(n) + ", n0=" + std::to_string(n0)};
      ++basic;
    }
  std::ostringstream d;
  d << basic << " basic sets exact;";
  for (unsigned n = 8; n <= 12; ++n) {
    const auto n0 = static_cast<unsigned>(improved_n0(n));
    const auto c = build_hypercube_improved(n, n0);
    if (!verify_witness(hypercube(n), c.witness).covered) return {false, "improved does not verify"};
    if (c.report.achieved_size > hypercube_basic_bound(n, n0)) return {false, "improved larger than basic"};
    d << " n=" << n << ": " << c.report.achieved_size << " vs bound " << c.report.target_size
      << (c.report.target_achieved ? "" : " (+" + std::to_string(c.report.achieved_size - c.report.target_size) + ")")
      << ", repairs " << c.report.repairs << ";";
  }
  d << " removal set is one vertex smaller than the subtracted term";
  if (seconds_since(t0) >= limit_constructions) return {false, "too slow"};
  return {true, d.str()};
}

Outcome witness_builders() {
  for (std::int64_t n = 3; n <= 40; ++n)
    for (std::int64_t m = n; m <= 40; ++m) {
      const auto w = build_bipartite_witness(n, m);
      const auto g = complete_bipartite(static_cast<unsigned>(n), static_cast<unsigned>(m));
      if (!verify_witness(g, w).covered || static_cast<std::int64_t>(w.set.size()) != sg_complete_bipartite(n, m).value)
        return {false, "K_{" + std::to_string(n) + "," + std::to_string(m) + "}"};
    }
  for (std::int64_t n = 3; n <= 40; ++n) {
    const auto w = build_crown_witness(n);
    if (!verify_witness(crown(static_cast<unsigned>(n)), w).covered ||
        static_cast<std::int64_t>(w.set.size()) != sg_crown(n).value)
      return {false, "crown(" + std::to_string(n) + ")"};
  }
  return {true, "bipartite 3<=n<=m<=40 and crown 3<=n<=40 verified at closed-form size"};
}

Outcome properties() {
  std::mt19937_64 rng(20240601);
  SolverOptions four;
  four.threads = 4;
  std::uniform_int_distribution<int> size(2, 10);
  std::uniform_real_distribution<double> density(0.05, 0.6);
  for (int trial = 0; trial < 200; ++trial) {
    const auto g = oracle::random_connected(size(rng), density(rng), rng);
    const auto one = sg_exact(g);
    const auto many = sg_exact(g, four);
    const auto lb = diameter(g).value >= 2 ? lower_bound_general(g) : static_cast<std::int64_t>(g.vertex_count());
    const std::string at = "graph " + std::to_string(trial);
    if (lb > one.value) return {false, at + ": lower bound exceeds sg"};
    if (!verify_witness(g, *one.witness).covered) return {false, at + ": witness does not verify"};
    const auto d = oracle::dense(g);
    for (const auto& pp : one.witness->assignment)
      if (static_cast<int>(pp.path.length()) != d.dist[pp.u][pp.v]) return {false, at + ": non-geodesic path"};
    if (one.value != many.value || *one.witness != *many.witness) return {false, at + ": thread count changed output"};
  }
  return {true, "200 random graphs"};
}

}  // namespace

int main() {
  report(1, "table reproduction", table_reproduction);
  report(2, "small-cube exactness", small_cubes);
  report(3, "closed form vs optimisation", bipartite_oracle);
  report(4, "balanced consistency", balanced);
  report(5, "brute-force equivalence", brute_force);
  report(6, "hypercube constructions", constructions);
  report(7, "witness builders", witness_builders);
  report(8, "property suite", properties);
  std::printf("%d of 8 criteria failed\n", failures);
  return failures;
}

#ifndef SG_CLI_HPP
#define SG_CLI_HPP

/**
 * Command implementations behind tools/sgtool. Each command returns a
 * CommandResult; dispatch() parses an argument vector with CLI11 and runs the
 * selected command, so the whole surface is testable in-process.
 *
 * Exit codes: 0 success, 2 usage, 3 resource/solver, 4 verification failed.
 */

#include "sg/closed_forms.hpp"
#include "sg/constructions.hpp"
#include "sg/error.hpp"
#include "sg/graph.hpp"
#include "sg/json.hpp"
#include "sg/solver.hpp"
#include "sg/verify.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace sg::cli {

enum class Status { ok, error };

namespace exit_code {
inline constexpr int success = 0;
inline constexpr int usage = 2;
inline constexpr int solver = 3;
inline constexpr int verification = 4;
}  // namespace exit_code

struct CommandResult {
  Status status = Status::ok;
  json payload;
  std::vector<std::string> diagnostics;
  int exit_code = exit_code::success;
  std::optional<std::string> text;  ///< non-JSON output (edge lists, TSV)

  std::string rendered() const { return text ? *text : payload.dump(2) + "\n"; }
};

inline int exit_code_for(ErrorCode c) {
  switch (c) {
    case ErrorCode::GeodesicExplosion:
    case ErrorCode::Disconnected:
    case ErrorCode::DiameterTooSmall:
    case ErrorCode::SizeLimitExceeded:
    case ErrorCode::AssignmentInfeasible:
    case ErrorCode::Unreachable: return exit_code::solver;
    case ErrorCode::MalformedWitness: return exit_code::verification;
    default: return exit_code::usage;
  }
}

inline CommandResult error_result(ErrorCode code, const std::string& message) {
  CommandResult r;
  r.status = Status::error;
  r.payload = error_json(code, message);
  r.diagnostics.push_back(message);
  r.exit_code = exit_code_for(code);
  return r;
}

inline CommandResult ok_result(json payload) {
  CommandResult r;
  r.payload = std::move(payload);
  return r;
}

namespace detail {

inline std::int64_t parse_int(const std::string& s, const char* what) {
  std::int64_t v = 0;
  const auto* end = s.data() + s.size();
  auto [p, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc{} || p != end) fail(ErrorCode::Usage, std::string("expected integer for ") + what + ", got '" + s + "'");
  return v;
}

inline std::vector<std::int64_t> parse_params(const std::vector<std::string>& params, std::size_t count,
                                              const std::string& usage) {
  if (params.size() != count) fail(ErrorCode::Usage, "usage: " + usage);
  std::vector<std::int64_t> out;
  for (const auto& p : params) out.push_back(parse_int(p, "parameter"));
  return out;
}

inline unsigned as_unsigned(std::int64_t v, std::int64_t hi, const char* what) {
  if (v < 0 || v > hi) fail(ErrorCode::OutOfRange, std::string(what) + " out of range: " + std::to_string(v));
  return static_cast<unsigned>(v);
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::Usage, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::uint64_t cap_from_env(std::uint64_t fallback) {
  const char* v = std::getenv("SG_GEODESIC_CAP");
  if (!v || !*v) return fallback;
  const auto parsed = parse_int(v, "SG_GEODESIC_CAP");
  if (parsed <= 0) fail(ErrorCode::Usage, "SG_GEODESIC_CAP must be positive");
  return static_cast<std::uint64_t>(parsed);
}

}  // namespace detail

// ------------------------------------------------------------------ commands

inline CommandResult cmd_gen(const std::string& family, const std::vector<std::string>& params) {
  std::optional<Graph> g;
  if (family == "hypercube") {
    auto p = detail::parse_params(params, 1, "gen hypercube <n>");
    g = hypercube(detail::as_unsigned(p[0], 1 << 20, "n"));
  } else if (family == "kbipartite") {
    auto p = detail::parse_params(params, 2, "gen kbipartite <n> <m>");
    g = complete_bipartite(detail::as_unsigned(p[0], 1 << 16, "n"), detail::as_unsigned(p[1], 1 << 16, "m"));
  } else if (family == "crown") {
    auto p = detail::parse_params(params, 1, "gen crown <n>");
    g = crown(detail::as_unsigned(p[0], 1 << 16, "n"));
  } else {
    fail(ErrorCode::Usage, "unknown family '" + family + "' (hypercube, kbipartite, crown)");
  }
  CommandResult r;
  r.payload = {{"vertices", g->vertex_count()}, {"edges", g->edge_count()}};
  r.text = to_edge_list(*g);
  return r;
}

struct ExactFlags {
  std::uint64_t cap = default_geodesic_cap;
  std::size_t max_size = 20;
  unsigned threads = 1;
};

inline CommandResult cmd_exact(const std::string& graph_text, const ExactFlags& flags) {
  const auto g = from_edge_list(graph_text);
  SolverOptions opts;
  opts.cap = flags.cap;
  opts.max_vertices = flags.max_size;
  opts.threads = flags.threads;
  return ok_result(to_json_value(sg_exact(g, opts)));
}

inline CommandResult cmd_formula(const std::string& family, const std::vector<std::string>& params) {
  if (family == "kbipartite") {
    auto p = detail::parse_params(params, 2, "formula kbipartite <n> <m>");
    return ok_result(to_json_value(sg_complete_bipartite(p[0], p[1])));
  }
  if (family == "crown") {
    auto p = detail::parse_params(params, 1, "formula crown <n>");
    return ok_result(to_json_value(sg_crown(p[0])));
  }
  if (family == "balanced") {
    auto p = detail::parse_params(params, 1, "formula balanced <n>");
    return ok_result(to_json_value(sg_balanced(p[0])));
  }
  fail(ErrorCode::Usage, "unknown family '" + family + "' (kbipartite, crown, balanced)");
}

inline json hypercube_bounds(std::int64_t n) {
  auto or_null = [](bool ok, auto fn) { return ok ? json(fn()) : json(nullptr); };
  const auto known = small_hypercube_known(n);
  return {{"n", n},
          {"lower", or_null(n >= 2, [&] { return hypercube_lower(n); })},
          {"upper_basic", or_null(n >= 1, [&] { return hypercube_upper_basic(n); })},
          {"upper_improved", or_null(n >= 6, [&] { return hypercube_upper_improved(n); })},
          {"known", known ? json(*known) : json(nullptr)}};
}

inline CommandResult cmd_bounds(const std::string& family, const std::vector<std::string>& params) {
  if (family != "hypercube") fail(ErrorCode::Usage, "bounds supports only 'hypercube'");
  auto p = detail::parse_params(params, 1, "bounds hypercube <n>");
  if (p[0] < 0 || p[0] > 62) fail(ErrorCode::OutOfRange, "bounds hypercube: need 0 <= n <= 62");
  return ok_result(hypercube_bounds(p[0]));
}

struct ConstructFlags {
  std::optional<std::int64_t> n0;
  bool improved = false;
  std::string routing = "local";
  bool verify = false;
};

inline CommandResult cmd_construct(const std::string& family, const std::vector<std::string>& params,
                                   const ConstructFlags& flags) {
  Witness w;
  ConstructionReport report;
  std::optional<Graph> g;
  json extra = json::object();
  if (family == "hypercube") {
    auto p = detail::parse_params(params, 1, "construct hypercube <n> [--n0 N] [--improved]");
    const unsigned n = detail::as_unsigned(p[0], max_construction_dimension, "n");
    std::int64_t n0 = 0;
    if (flags.n0) {
      n0 = *flags.n0;
    } else if (flags.improved) {
      n0 = improved_n0(n);
    } else {
      n0 = 1;  // argmin of the basic bound, smallest on ties
      for (std::int64_t c = 2; c <= n; ++c)
        if (hypercube_basic_bound(n, c) < hypercube_basic_bound(n, n0)) n0 = c;
    }
    const unsigned un0 = detail::as_unsigned(n0, n, "n0");
    HypercubeConstruction c;
    if (flags.improved) {
      if (flags.routing != "local" && flags.routing != "literal")
        fail(ErrorCode::Usage, "--routing must be 'local' or 'literal'");
      c = build_hypercube_improved(n, un0,
                                   flags.routing == "literal" ? SpecialRouting::literal : SpecialRouting::local);
    } else {
      c = build_hypercube_basic(n, un0);
    }
    w = std::move(c.witness);
    report = c.report;
    extra = {{"n", n}, {"n0", un0}, {"variant", flags.improved ? "improved" : "basic"}};
    if (flags.improved) {
      extra["routing"] = flags.routing;
      extra["removed"] = c.plan.F;
      extra["added"] = c.plan.extra;
    }
    if (flags.verify) g = hypercube(n);
  } else if (family == "kbipartite") {
    auto p = detail::parse_params(params, 2, "construct kbipartite <n> <m>");
    auto n = p[0], m = p[1];
    if (n > m) std::swap(n, m);
    w = build_bipartite_witness(n, m);
    const auto target = sg_complete_bipartite(n, m).value;
    report = {target, static_cast<std::int64_t>(w.set.size()), 0, static_cast<std::int64_t>(w.set.size()) == target, ""};
    extra = {{"n", n}, {"m", m}};
    if (flags.verify) g = complete_bipartite(static_cast<unsigned>(n), static_cast<unsigned>(m));
  } else if (family == "crown") {
    auto p = detail::parse_params(params, 1, "construct crown <n>");
    w = build_crown_witness(p[0]);
    const auto target = sg_crown(p[0]).value;
    report = {target, static_cast<std::int64_t>(w.set.size()), 0, static_cast<std::int64_t>(w.set.size()) == target, ""};
    extra = {{"n", p[0]}};
    if (flags.verify) g = crown(static_cast<unsigned>(p[0]));
  } else {
    fail(ErrorCode::Usage, "unknown family '" + family + "' (hypercube, kbipartite, crown)");
  }

  json payload = to_json_value(w);
  payload["report"] = to_json_value(report);
  payload["construction"] = std::move(extra);
  if (flags.verify) {
    const auto cov = verify_witness(*g, w);
    payload["coverage"] = to_json_value(cov);
    if (!cov.covered) {
      CommandResult r = error_result(ErrorCode::MalformedWitness, "constructed witness failed verification");
      r.payload.update(payload);
      return r;
    }
  }
  return ok_result(std::move(payload));
}

inline CommandResult cmd_verify(const std::string& graph_text, const std::string& witness_text) {
  const auto g = from_edge_list(graph_text);
  const auto w = witness_from_json(witness_text);
  const auto report = verify_witness(g, w);
  if (report.covered) return ok_result(to_json_value(report));
  CommandResult r;
  r.status = Status::error;
  r.payload = to_json_value(report);
  r.payload["error"] = {{"code", "NotCovered"}, {"message", "witness does not cover the graph"}};
  r.exit_code = exit_code::verification;
  r.diagnostics.push_back(std::to_string(report.uncovered_vertices.size()) + " uncovered vertices, " +
                          std::to_string(report.invalid_paths.size()) + " invalid paths");
  return r;
}

/// Rows lower / upper_improved / upper_basic over columns n = 1..N.
inline std::string bounds_table_tsv(std::int64_t max_n) {
  std::ostringstream out;
  out << "n";
  for (std::int64_t n = 1; n <= max_n; ++n) out << '\t' << n;
  out << '\n';
  auto row = [&](const char* label, std::int64_t from, std::int64_t (*fn)(std::int64_t)) {
    out << label;
    for (std::int64_t n = 1; n <= max_n; ++n) {
      out << '\t';
      if (n >= from) out << fn(n);
    }
    out << '\n';
  };
  row("lower", 2, hypercube_lower);
  row("upper_improved", 6, hypercube_upper_improved);
  row("upper_basic", 1, hypercube_upper_basic);
  return out.str();
}

inline CommandResult cmd_table(std::int64_t max_n, const std::string& format) {
  if (max_n < 1 || max_n > 60) fail(ErrorCode::Usage, "table: need 1 <= --max-n <= 60");
  if (format == "tsv") {
    CommandResult r;
    r.text = bounds_table_tsv(max_n);
    return r;
  }
  if (format != "json") fail(ErrorCode::Usage, "--format must be 'tsv' or 'json'");
  json rows = json::array();
  for (std::int64_t n = 1; n <= max_n; ++n) rows.push_back(hypercube_bounds(n));
  return ok_result({{"rows", std::move(rows)}});
}

// ------------------------------------------------------------------ dispatch

/// Parses `args` (without the program name) and runs one command.
inline CommandResult dispatch(std::vector<std::string> args) {
  CLI::App app{"Strong geodetic number toolkit", "sgtool"};
  app.require_subcommand(1);

  std::string family;
  std::vector<std::string> params;
  std::string graph_file, witness_file;

  auto* gen = app.add_subcommand("gen", "Emit an edge list for a graph family");
  gen->add_option("family", family, "hypercube | kbipartite | crown")->required();
  gen->add_option("params", params, "family parameters");

  ExactFlags exact_flags;
  exact_flags.cap = 0;
  auto* exact = app.add_subcommand("exact", "Exact strong geodetic number of a small graph");
  exact->add_option("graph", graph_file, "edge-list file")->required();
  exact->add_option("--cap", exact_flags.cap, "geodesics per pair before giving up");
  exact->add_option("--max-size", exact_flags.max_size, "largest vertex count accepted");
  exact->add_option("--threads", exact_flags.threads, "worker threads");

  auto* formula = app.add_subcommand("formula", "Closed-form value with its trace");
  formula->add_option("family", family, "kbipartite | crown | balanced")->required();
  formula->add_option("params", params, "family parameters");

  auto* bounds = app.add_subcommand("bounds", "Hypercube bounds");
  bounds->add_option("family", family, "hypercube")->required();
  bounds->add_option("params", params, "n");

  ConstructFlags cflags;
  std::int64_t n0_value = 0;
  auto* construct = app.add_subcommand("construct", "Explicit verified strong geodetic set");
  construct->add_option("family", family, "hypercube | kbipartite | crown")->required();
  construct->add_option("params", params, "family parameters");
  auto* n0_opt = construct->add_option("--n0", n0_value, "split parameter for hypercubes");
  construct->add_flag("--improved", cflags.improved, "use the F-removal variant");
  construct->add_option("--routing", cflags.routing, "local | literal (improved variant)");
  construct->add_flag("--verify", cflags.verify, "re-verify and include the coverage report");

  auto* verify = app.add_subcommand("verify", "Check a witness against a graph");
  verify->add_option("graph", graph_file, "edge-list file")->required();
  verify->add_option("witness", witness_file, "witness JSON file")->required();

  std::int64_t max_n = 15;
  std::string format = "tsv";
  auto* table = app.add_subcommand("table", "Lower and upper hypercube bounds for n = 1..N");
  table->add_option("--max-n", max_n, "largest n");
  table->add_option("--format", format, "tsv | json");

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    CommandResult r;
    r.text = app.help();
    return r;
  } catch (const CLI::ParseError& e) {
    return error_result(ErrorCode::Usage, e.what());
  }

  try {
    if (*gen) return cmd_gen(family, params);
    if (*exact) {
      if (exact_flags.cap == 0) exact_flags.cap = detail::cap_from_env(default_geodesic_cap);
      return cmd_exact(detail::read_file(graph_file), exact_flags);
    }
    if (*formula) return cmd_formula(family, params);
    if (*bounds) return cmd_bounds(family, params);
    if (*construct) {
      if (*n0_opt) cflags.n0 = n0_value;
      return cmd_construct(family, params, cflags);
    }
    if (*verify) return cmd_verify(detail::read_file(graph_file), detail::read_file(witness_file));
    if (*table) return cmd_table(max_n, format);
  } catch (const Error& e) {
    return error_result(e.code(), e.what());
  } catch (const std::bad_alloc&) {
    return error_result(ErrorCode::SizeLimitExceeded, "out of memory");
  }
  return error_result(ErrorCode::Usage, "no command given");
}

}  // namespace sg::cli

#endif

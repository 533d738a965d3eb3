#include "cli.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string_view>
#include <vector>

#include <CLI11.hpp>

#include "sigmat/errors.hpp"
#include "sigmat/graph6.hpp"
#include "sigmat/serialize.hpp"

namespace sigmat::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// SIGMAT_LOG: quiet|warn|info|debug (or 0..3). Default warn.
class Log {
 public:
  explicit Log(std::ostream& err) : err_(&err) {
    const char* env = std::getenv("SIGMAT_LOG");
    if (env == nullptr) return;
    const std::string_view v(env);
    if (v == "quiet" || v == "0") level_ = 0;
    else if (v == "warn" || v == "1") level_ = 1;
    else if (v == "info" || v == "2") level_ = 2;
    else if (v == "debug" || v == "3") level_ = 3;
  }

  void warn(const std::string& msg) const { emit(1, "warn", msg); }
  void info(const std::string& msg) const { emit(2, "info", msg); }
  void debug(const std::string& msg) const { emit(3, "debug", msg); }
  bool debugging() const { return level_ >= 3; }

 private:
  void emit(int level, const char* tag, const std::string& msg) const {
    if (level_ >= level) *err_ << "sigmat[" << tag << "]: " << msg << '\n';
  }

  std::ostream* err_;
  int level_ = 1;
};

struct Options {
  std::string graph6;
  std::string file;
  bool use_stdin = false;
  bool skip_bad_lines = false;
  std::size_t random = 0;
  std::uint64_t seed = 1;
  int n = 0;
  std::string family;
  std::string filter = "none";
  std::string objective = "max";
  int id = 0;
  std::string format = "json";
  unsigned shards = 1;
};

struct Context {
  Options opt;
  CLI::App* sub = nullptr;
  std::istream* in = nullptr;
  std::ostream* out = nullptr;
  const Log* log = nullptr;

  bool has(const char* flag) const { return sub->count(flag) > 0; }
  bool table() const { return opt.format == "table"; }
  BadLinePolicy policy() const {
    return opt.skip_bad_lines ? BadLinePolicy::skip : BadLinePolicy::abort;
  }
};

std::string label(const Graph& g) {
  return g.order() <= kMaxGraph6Order ? encode_graph6(g) : std::string("(order ") + std::to_string(g.order()) + ")";
}

bool has_stream(const Context& ctx) { return ctx.opt.use_stdin || !ctx.opt.file.empty(); }

// Runs `body` on the selected graph6 stream.
template <class Body>
void with_stream(const Context& ctx, Body&& body) {
  if (ctx.opt.use_stdin && !ctx.opt.file.empty()) {
    throw UsageError("--stdin and --file are mutually exclusive");
  }
  std::ifstream file;
  std::istream* stream = ctx.in;
  if (!ctx.opt.file.empty()) {
    file.open(ctx.opt.file);
    if (!file) throw UsageError("cannot open '" + ctx.opt.file + "'");
    stream = &file;
  }
  Graph6Reader reader(*stream, ctx.policy());
  body(reader);
  for (const Graph6Diagnostic& d : reader.diagnostics()) {
    ctx.log->warn("skipped line " + std::to_string(d.line) + ": " + d.message);
  }
}

void for_each_input(const Context& ctx, const std::function<void(const Graph&)>& visit) {
  const Options& o = ctx.opt;
  const int sources = int(!o.graph6.empty()) + int(!o.file.empty()) + int(o.use_stdin) +
                      int(o.random > 0);
  if (sources == 0) {
    throw UsageError("no input graph: pass one of --graph6, --file, --stdin or --random");
  }
  if (sources > 1) {
    throw UsageError("exactly one of --graph6, --file, --stdin, --random may be given");
  }
  if (!o.graph6.empty()) {
    visit(parse_graph6(o.graph6));
  } else if (o.random > 0) {
    if (!ctx.has("--n")) throw UsageError("--random needs --n");
    if (o.n < 1 || o.n > kMaxGraph6Order) {
      throw UsageError("--random needs 1 <= --n <= " + std::to_string(kMaxGraph6Order));
    }
    ctx.log->info("random graphs: n=" + std::to_string(o.n) + " count=" +
                  std::to_string(o.random) + " seed=" + std::to_string(o.seed));
    for (const Graph& g : random_graphs(o.n, o.random, o.seed)) visit(g);
  } else {
    with_stream(ctx, [&](Graph6Reader& reader) {
      while (auto item = reader.next()) visit(item->graph);
    });
  }
}

void emit(const Context& ctx, const Json& j) { *ctx.out << dump_canonical(j) << '\n'; }

void emit_table(const Context& ctx, const std::string& heading, const std::string& table) {
  if (!heading.empty()) *ctx.out << heading << '\n';
  *ctx.out << table;
}

int cmd_compute(const Context& ctx) {
  for_each_input(ctx, [&](const Graph& g) {
    const InvariantReport report = full_report(g);
    if (ctx.table()) {
      emit_table(ctx, "graph6: " + label(g), render_table(report));
    } else {
      Json j = report;
      j["graph6"] = label(g);
      emit(ctx, j);
    }
  });
  return kExitOk;
}

int cmd_bounds(const Context& ctx) {
  bool all_hold = true;
  for_each_input(ctx, [&](const Graph& g) {
    const std::vector<BoundCheck> checks = check_all(g);
    bool holds = true;
    for (const BoundCheck& c : checks) {
      if (c.skipped) continue;
      if (!c.holds) {
        holds = false;
        ctx.log->warn("bound " + c.id + " violated on " + label(g));
      }
    }
    all_hold = all_hold && holds;
    if (ctx.table()) {
      emit_table(ctx, "graph6: " + label(g), render_table(checks));
    } else {
      Json arr = Json::array();
      for (const BoundCheck& c : checks) arr.push_back(c);
      emit(ctx, Json{{"graph6", label(g)}, {"checks", arr}, {"holds", holds}});
    }
  });
  return all_hold ? kExitOk : kExitVerificationFailed;
}

int cmd_spectral(const Context& ctx) {
  for_each_input(ctx, [&](const Graph& g) {
    const SpectralSummary s = laplacian_spectrum(g);
    if (ctx.table()) {
      emit_table(ctx, "graph6: " + label(g), render_table(s));
    } else {
      Json j = s;
      j["graph6"] = label(g);
      emit(ctx, j);
    }
  });
  return kExitOk;
}

int cmd_identities(const Context& ctx) {
  IdentitySummary summary;
  const auto check = [&](const Graph& g) {
    ++summary.checked;
    if (identities_hold(g)) {
      ++summary.passed;
    } else {
      ++summary.failed;
      if (!summary.first_failure) summary.first_failure = label(g);
    }
  };
  const Options& o = ctx.opt;
  const bool explicit_input = !o.graph6.empty() || has_stream(ctx) || o.random > 0;
  if (!explicit_input && ctx.has("--n")) {
    ctx.log->info("enumerating connected graphs of order " + std::to_string(o.n));
    enumerate_connected_graphs(o.n, check);
  } else {
    for_each_input(ctx, check);
    if (o.random > 0) summary.seed = o.seed;
  }
  if (ctx.table()) {
    emit_table(ctx, "", render_table(summary));
  } else {
    emit(ctx, summary);
  }
  return summary.failed == 0 ? kExitOk : kExitVerificationFailed;
}

int cmd_extremal(const Context& ctx) {
  const Options& o = ctx.opt;
  const std::string& family = o.family;
  if (family == "split") {
    const SplitOptimum opt = max_split_sigma_t(o.n);
    if (ctx.table()) emit_table(ctx, "", render_table(opt));
    else emit(ctx, opt);
    if (!opt.agrees) ctx.log->warn("case formula and full scan disagree");
    return opt.agrees ? kExitOk : kExitVerificationFailed;
  }
  if (family == "bipartite") {
    const BipartiteOptimum opt = max_bipartite_split(o.n);
    if (ctx.table()) emit_table(ctx, "", render_table(opt));
    else emit(ctx, opt);
    return kExitOk;
  }
  const Graph g = family == "star" ? make_star(o.n) : make_path(o.n);
  const InvariantReport report = full_report(g);
  if (ctx.table()) {
    emit_table(ctx, family + " on " + std::to_string(o.n) + " vertices: " + label(g),
               render_table(report));
  } else {
    Json j = report;
    j["family"] = family;
    j["graph6"] = label(g);
    emit(ctx, j);
  }
  return kExitOk;
}

Objective objective_of(const std::string& name) {
  return name == "min" ? Objective::minimize : Objective::maximize;
}

int cmd_search(const Context& ctx) {
  const Options& o = ctx.opt;
  const GraphFilter filter = *parse_filter(o.filter);
  const Objective objective = objective_of(o.objective);
  const auto started = std::chrono::steady_clock::now();
  SearchResult result;
  if (has_stream(ctx)) {
    const bool by_order = ctx.has("--n");
    ExtremalSearch search(objective, [&](const Graph& g) {
      return (!by_order || g.order() == o.n) && is_connected(g) && passes(filter, g);
    });
    int order = by_order ? o.n : 0;
    with_stream(ctx, [&](Graph6Reader& reader) {
      while (auto item = reader.next()) {
        if (order == 0) order = item->graph.order();
        search.offer(item->graph);
      }
    });
    std::string family = "connected graphs from graph6 stream";
    if (filter != GraphFilter::none) family += " (" + std::string(to_string(filter)) + ")";
    result = search.result(family, order);
  } else {
    if (!ctx.has("--n")) throw UsageError("search needs --n or a graph6 stream");
    result = filter == GraphFilter::tree ? search_trees(o.n, objective)
                                         : search_connected_graphs(o.n, objective, filter, o.shards);
  }
  ctx.log->info("search visited " + std::to_string(result.graphs_visited) + " graphs in " +
                std::to_string(std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                                             started)
                                   .count()) +
                " s");
  if (ctx.table()) emit_table(ctx, "", render_table(result));
  else emit(ctx, result);
  return kExitOk;
}

int cmd_conjecture(const Context& ctx) {
  const Options& o = ctx.opt;
  ConjectureReport report;
  if (o.id == 1) {
    if (has_stream(ctx)) {
      with_stream(ctx, [&](Graph6Reader& reader) { report = verify_conjecture1(o.n, reader); });
    } else {
      report = verify_conjecture1(o.n, o.shards);
    }
  } else {
    if (has_stream(ctx)) {
      throw UsageError("conjecture 2 enumerates trees internally; --stdin/--file are not accepted");
    }
    report = verify_conjecture2(o.n);
  }
  ctx.log->info("checked " + std::to_string(report.graphs_checked) + " graphs");
  if (ctx.table()) emit_table(ctx, "", render_table(report));
  else emit(ctx, report);
  if (report.status == ConjectureStatus::counterexample) {
    ctx.log->warn("counterexample found: " + report.counterexamples.front());
    return kExitVerificationFailed;
  }
  return kExitOk;
}

void add_format(CLI::App* sub, Options& o) {
  sub->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"json", "table"}))
      ->capture_default_str();
}

void add_stream_inputs(CLI::App* sub, Options& o) {
  sub->add_option("--file", o.file, "read graph6 lines from a file");
  sub->add_flag("--stdin", o.use_stdin, "read graph6 lines from standard input");
  sub->add_flag("--skip-bad-lines", o.skip_bad_lines,
                "skip malformed graph6 lines instead of aborting");
}

void add_graph_inputs(CLI::App* sub, Options& o) {
  sub->add_option("--graph6", o.graph6, "a single graph in graph6");
  add_stream_inputs(sub, o);
  sub->add_option("--random", o.random, "generate COUNT G(n, 1/2) graphs (needs --n)");
  sub->add_option("--n", o.n, "order for --random");
  sub->add_option("--seed", o.seed, "seed for --random")->capture_default_str();
  add_format(sub, o);
}

}  // namespace

int run(std::span<const std::string> args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  Options opt;
  CLI::App app{"sigma_t irregularity and degree-based invariants of simple graphs", "sigmat"};
  app.require_subcommand(1);

  CLI::App* compute = app.add_subcommand("compute", "invariant report per input graph");
  add_graph_inputs(compute, opt);

  CLI::App* bounds = app.add_subcommand("bounds", "check every applicable bound per input graph");
  add_graph_inputs(bounds, opt);

  CLI::App* spectral = app.add_subcommand("spectral", "Laplacian and adjacency spectra, energy");
  add_graph_inputs(spectral, opt);

  CLI::App* identities =
      app.add_subcommand("verify-identities", "check the sigma_t identities on a graph set");
  add_graph_inputs(identities, opt);
  identities->get_option("--n")->description(
      "order for --random, or alone: every connected graph of this order (n <= 7)");

  CLI::App* extremal = app.add_subcommand("extremal", "extremal members of a graph family");
  extremal->add_option("--family", opt.family, "graph family")
      ->required()
      ->check(CLI::IsMember({"split", "bipartite", "star", "path"}));
  extremal->add_option("--n", opt.n, "order")->required();
  add_format(extremal, opt);

  CLI::App* search = app.add_subcommand("search", "extremal sigma_t over a graph family");
  search->add_option("--n", opt.n, "order (internal enumeration: n <= 7, trees n <= 9)");
  search->add_option("--filter", opt.filter, "family filter")
      ->check(CLI::IsMember({"none", "triangle-free", "tree", "nonregular"}))
      ->capture_default_str();
  search->add_option("--objective", opt.objective, "maximize or minimize sigma_t")
      ->check(CLI::IsMember({"max", "min"}))
      ->capture_default_str();
  search->add_option("--shards", opt.shards, "parallel shards")
      ->check(CLI::Range(1u, 64u))
      ->capture_default_str();
  add_stream_inputs(search, opt);
  add_format(search, opt);

  CLI::App* conjecture = app.add_subcommand("conjecture", "exhaustive check of a conjecture");
  conjecture->add_option("--id", opt.id, "1: triangle-free maximum, 2: tree bound")
      ->required()
      ->check(CLI::IsMember({1, 2}));
  conjecture->add_option("--n", opt.n, "order")->required();
  conjecture->add_option("--shards", opt.shards, "parallel shards")
      ->check(CLI::Range(1u, 64u))
      ->capture_default_str();
  add_stream_inputs(conjecture, opt);
  add_format(conjecture, opt);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kExitOk;
    }
    err << "error: " << e.what() << "\nrun 'sigmat --help' for usage\n";
    return kExitUsage;
  }

  const Log log(err);
  Context ctx{opt, nullptr, &in, &out, &log};
  ctx.sub = app.get_subcommands().front();
  const std::string command = ctx.sub->get_name();
  log.debug("command " + command);

  try {
    if (command == "compute") return cmd_compute(ctx);
    if (command == "bounds") return cmd_bounds(ctx);
    if (command == "spectral") return cmd_spectral(ctx);
    if (command == "verify-identities") return cmd_identities(ctx);
    if (command == "extremal") return cmd_extremal(ctx);
    if (command == "search") return cmd_search(ctx);
    return cmd_conjecture(ctx);
  } catch (const LimitError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const IngestError& e) {
    err << "error: malformed graph6 at " << e.what()
        << "\nhint: pass --skip-bad-lines to skip malformed lines\n";
    return kExitUsage;
  } catch (const Graph6Error& e) {
    err << "error: malformed graph6: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const NumericError& e) {
    err << "error: numeric failure: " << e.what() << '\n';
    return kExitVerificationFailed;
  } catch (const std::logic_error& e) {
    // invalid_argument, domain_error, out_of_range: bad parameters for the command.
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitVerificationFailed;
  }
}

// ---- tables ----

namespace {

std::size_t display_width(std::string_view s) {
  std::size_t w = 0;
  for (unsigned char c : s) {
    if ((c & 0xC0) != 0x80) ++w;
  }
  return w;
}

class TextTable {
 public:
  explicit TextTable(std::vector<std::string> header) : header_(std::move(header)) {}

  void row(std::vector<std::string> cells) { rows_.push_back(std::move(cells)); }

  std::string str() const {
    std::vector<std::size_t> width(header_.size(), 0);
    const auto widen = [&](const std::vector<std::string>& r) {
      for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], display_width(r[c]));
    };
    widen(header_);
    for (const auto& r : rows_) widen(r);

    std::ostringstream os;
    const auto line = [&](const std::vector<std::string>& r) {
      std::string text;
      for (std::size_t c = 0; c < r.size(); ++c) {
        if (c > 0) text += "  ";
        text += r[c];
        if (c + 1 < r.size()) text.append(width[c] - display_width(r[c]), ' ');
      }
      os << text << '\n';
    };
    line(header_);
    std::size_t total = 0;
    for (std::size_t c = 0; c < width.size(); ++c) total += width[c] + (c > 0 ? 2 : 0);
    os << std::string(total, '-') << '\n';
    for (const auto& r : rows_) line(r);
    return os.str();
  }

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

std::string fmt(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", round_significant(v));
  return buf;
}

std::string fmt(const BoundValue& v) {
  return std::visit([](const auto& x) { return fmt(x); }, v);
}

std::string fmt(bool b) { return b ? "true" : "false"; }

template <class T>
std::string join(const std::vector<T>& items) {
  std::string s;
  for (const T& item : items) {
    if (!s.empty()) s += ' ';
    if constexpr (std::is_same_v<T, std::string>) s += item;
    else if constexpr (std::is_same_v<T, double>) s += fmt(std::abs(item) < 1e-12 ? 0.0 : item);
    else s += std::to_string(item);
  }
  return s.empty() ? "-" : s;
}

TextTable field_table() { return TextTable({"field", "value"}); }

}  // namespace

std::string status_marker(const BoundCheck& check) {
  if (check.skipped) return "skip(" + *check.skipped + ")";
  if (!check.holds) return "✗";
  return check.equality ? "=" : "✓";
}

std::string render_table(const InvariantReport& r) {
  TextTable t = field_table();
  t.row({"n", std::to_string(r.n)});
  t.row({"m", std::to_string(r.m)});
  t.row({"sigmaT", std::to_string(r.sigma_t)});
  t.row({"sigma", std::to_string(r.sigma)});
  t.row({"albertsonIrr", std::to_string(r.albertson_irr)});
  t.row({"variance", fmt(r.variance)});
  t.row({"meanDegree", fmt(r.mean_degree)});
  t.row({"m1", std::to_string(r.m1)});
  t.row({"m2", std::to_string(r.m2)});
  t.row({"forgotten", std::to_string(r.forgotten)});
  return t.str();
}

std::string render_table(std::span<const BoundCheck> checks) {
  TextTable t({"bound", "lhs", "rhs", "status", "certificate"});
  for (const BoundCheck& c : checks) {
    if (c.skipped) {
      t.row({c.id, "", "", status_marker(c), ""});
    } else {
      t.row({c.id, fmt(c.lhs), fmt(c.rhs), status_marker(c), c.certificate});
    }
  }
  return t.str();
}

std::string render_table(const SpectralSummary& s) {
  TextTable t = field_table();
  t.row({"laplacianEigenvalues", join(s.laplacian_eigenvalues)});
  t.row({"adjacencyEigenvalues", join(s.adjacency_eigenvalues)});
  t.row({"mu2", fmt(std::abs(s.mu2) < 1e-12 ? 0.0 : s.mu2)});
  t.row({"muN", fmt(s.mu_n)});
  t.row({"energy", fmt(s.energy)});
  return t.str();
}

std::string render_table(const SplitOptimum& o) {
  TextTable t = field_table();
  t.row({"n", std::to_string(o.n)});
  t.row({"x", std::to_string(o.x)});
  t.row({"value", std::to_string(o.value)});
  t.row({"scanValue", std::to_string(o.scan_value)});
  t.row({"scanArgmax", join(o.scan_argmax)});
  t.row({"agrees", fmt(o.agrees)});
  return t.str();
}

std::string render_table(const BipartiteOptimum& o) {
  TextTable t = field_table();
  t.row({"n", std::to_string(o.n)});
  t.row({"n1", std::to_string(o.n1)});
  t.row({"n2", std::to_string(o.n2)});
  t.row({"value", std::to_string(o.value)});
  t.row({"tie", fmt(o.tie)});
  t.row({"tieSet", join(o.tie_set)});
  t.row({"candidates", std::to_string(o.candidate_floor) + " " + std::to_string(o.candidate_ceil)});
  t.row({"winnerInCandidates", fmt(o.winner_in_candidates)});
  return t.str();
}

std::string render_table(const SearchResult& r) {
  TextTable t = field_table();
  t.row({"family", r.family});
  t.row({"n", std::to_string(r.n)});
  t.row({"objective", std::string(to_string(r.objective))});
  t.row({"extremeValue", std::to_string(r.extreme_value)});
  t.row({"tieCount", std::to_string(r.tie_count)});
  t.row({"witnesses", join(r.witnesses)});
  t.row({"familySize", std::to_string(r.family_size)});
  t.row({"graphsVisited", std::to_string(r.graphs_visited)});
  return t.str();
}

std::string render_table(const ConjectureReport& r) {
  TextTable t = field_table();
  t.row({"conjectureId", std::to_string(r.conjecture_id)});
  t.row({"nRange", std::to_string(r.n_min) + ".." + std::to_string(r.n_max)});
  t.row({"status", std::string(to_string(r.status))});
  t.row({"counterexampleCount", std::to_string(r.counterexample_count)});
  t.row({"counterexamples", join(r.counterexamples)});
  if (r.conjecture_id == 1) {
    t.row({"extremeValue", std::to_string(r.extreme_value)});
    t.row({"bipartiteOptimum", std::to_string(r.bipartite_optimum)});
    t.row({"witnessCount", std::to_string(r.witness_count)});
    t.row({"extremalWitnesses", join(r.extremal_witnesses)});
  } else {
    t.row({"equalityCount", std::to_string(r.witness_count)});
    t.row({"equalityWitnesses", join(r.extremal_witnesses)});
  }
  t.row({"graphsChecked", std::to_string(r.graphs_checked)});
  return t.str();
}

std::string render_table(const IdentitySummary& s) {
  TextTable t = field_table();
  t.row({"checked", std::to_string(s.checked)});
  t.row({"passed", std::to_string(s.passed)});
  t.row({"failed", std::to_string(s.failed)});
  t.row({"firstFailure", s.first_failure.value_or("-")});
  t.row({"seed", s.seed ? std::to_string(*s.seed) : "-"});
  return t.str();
}

}  // namespace sigmat::cli

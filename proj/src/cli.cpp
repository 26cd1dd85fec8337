#include "treeloc/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <functional>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include "treeloc/arith.hpp"
#include "treeloc/errors.hpp"
#include "treeloc/limits.hpp"
#include "treeloc/oracle.hpp"
#include "treeloc/recurrence.hpp"
#include "treeloc/signs.hpp"
#include "treeloc/tree.hpp"
#include "treeloc/treediag.hpp"

namespace treeloc::cli {

namespace {

using Json = nlohmann::ordered_json;
namespace rec = recurrence;

enum class Format { Json, Csv, Text };

Format parse_format(const std::string& s) {
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  if (s == "text") return Format::Text;
  throw InputError("unknown format '" + s + "'");
}

// ---------------------------------------------------------------------------
// Output. A command produces either one JSON object (a record) or an array of
// flat objects (a table).

std::string cell(const Json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_number_float()) return format_double(v.get<double>());
  return v.dump();
}

std::string csv_cell(const Json& v) {
  std::string s = cell(v);
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + '"';
}

void flatten(const Json& v, const std::string& prefix, std::vector<std::pair<std::string, Json>>& out) {
  if (v.is_object()) {
    for (auto it = v.begin(); it != v.end(); ++it) {
      flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
    }
  } else if (v.is_array()) {
    for (std::size_t i = 0; i < v.size(); ++i) flatten(v[i], prefix + "." + std::to_string(i + 1), out);
  } else {
    out.emplace_back(prefix, v);
  }
}

void emit(std::ostream& out, const Json& result, Format fmt) {
  if (fmt == Format::Json) {
    out << result.dump(2) << '\n';
    return;
  }
  if (result.is_object()) {
    std::vector<std::pair<std::string, Json>> flat;
    flatten(result, "", flat);
    if (fmt == Format::Csv) {
      out << "key,value\n";
      for (auto& [k, v] : flat) out << k << ',' << csv_cell(v) << '\n';
    } else {
      std::size_t width = 0;
      for (auto& kv : flat) width = std::max(width, kv.first.size());
      for (auto& [k, v] : flat) out << std::left << std::setw(static_cast<int>(width)) << k << "  " << cell(v) << '\n';
    }
    return;
  }

  std::vector<std::string> columns;
  if (!result.empty()) {
    for (auto it = result[0].begin(); it != result[0].end(); ++it) columns.push_back(it.key());
  }
  if (fmt == Format::Csv) {
    for (std::size_t c = 0; c < columns.size(); ++c) out << (c ? "," : "") << columns[c];
    out << '\n';
    for (const auto& row : result) {
      for (std::size_t c = 0; c < columns.size(); ++c) out << (c ? "," : "") << csv_cell(row.value(columns[c], Json()));
      out << '\n';
    }
    return;
  }
  std::vector<std::vector<std::string>> cells;
  std::vector<std::size_t> width;
  for (auto& c : columns) width.push_back(c.size());
  for (const auto& row : result) {
    auto& line = cells.emplace_back();
    for (std::size_t c = 0; c < columns.size(); ++c) {
      line.push_back(cell(row.value(columns[c], Json())));
      width[c] = std::max(width[c], line.back().size());
    }
  }
  auto print = [&](const std::vector<std::string>& line) {
    for (std::size_t c = 0; c < line.size(); ++c) {
      if (c + 1 == line.size()) {
        out << line[c];
      } else {
        out << std::left << std::setw(static_cast<int>(width[c] + 2)) << line[c];
      }
    }
    out << '\n';
  };
  print(columns);
  for (auto& line : cells) print(line);
}

// Runs fn(0..count-1) on up to `threads` workers; results come back in index
// order and the first failing index's exception is rethrown.
Json parallel_rows(std::size_t count, int threads, const std::function<Json(std::size_t)>& fn) {
  std::vector<Json> rows(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        rows[i] = fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const auto n_workers = static_cast<std::size_t>(std::clamp(threads, 1, 256));
  if (n_workers == 1 || count < 2) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < std::min(n_workers, count); ++t) pool.emplace_back(worker);
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  Json out = Json::array();
  for (auto& r : rows) out.push_back(std::move(r));
  return out;
}

// ---------------------------------------------------------------------------
// Recurrence commands.

Json describe(const rec::ClosedFormSolution& sol) {
  return std::visit(
      [](const auto& s) -> Json {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, rec::ConstantSolution>) {
          return {{"form", "constant"}, {"theta", s.theta}};
        } else if constexpr (std::is_same_v<S, rec::Type1Solution>) {
          return {{"form", "type1"}, {"theta", s.theta}, {"beta", s.beta}};
        } else if constexpr (std::is_same_v<S, rec::Type2Solution>) {
          return {{"form", "type2"}, {"theta", s.theta}, {"theta_prime", s.theta_prime}, {"beta", s.beta}};
        } else if constexpr (std::is_same_v<S, rec::Type3Solution>) {
          return {{"form", "type3"},
                  {"rho", s.rho},
                  {"phi", s.phi_angle},
                  {"omega", s.omega},
                  {"period", rec::period(s)}};
        } else {
          return {{"form", "alternating"}, {"odd", s.x1}, {"even", s.gamma / s.x1}};
        }
      },
      sol);
}

Json evaluation(const rec::Evaluation& e) {
  if (rec::is_pole(e)) return Json();
  return std::get<double>(e);
}

struct SolveArgs {
  std::string alpha, gamma, x1;
  std::size_t count = 10;
  std::optional<std::string> eval_at;
};

[[noreturn]] void orbit_hit_zero(std::size_t step) {
  throw DomainError("orbit hit zero at step " + std::to_string(step) + "; x_" + std::to_string(step + 1) +
                    " is undefined");
}

Json cmd_solve(const SolveArgs& a) {
  const double alpha = parse_real(a.alpha);
  const double gamma = parse_real(a.gamma);
  const double x1 = parse_real(a.x1);
  rec::Params params(alpha, gamma);

  auto qa = parse_rational(a.alpha);
  auto qg = parse_rational(a.gamma);
  auto qx = parse_rational(a.x1);
  const bool exact = qa && qg && qx;

  Json out;
  out["alpha"] = a.alpha;
  out["gamma"] = a.gamma;
  out["x1"] = a.x1;
  out["backend"] = exact ? "exact" : "double";

  Json iterates = Json::array();
  if (exact) {
    rec::ExactParams ep(*qa, *qg);
    auto cls = rec::classify(ep);
    out["kind"] = rec::to_string(cls.kind);
    out["delta"] = format_rational(Rational(*qa * *qa + 4 * *qg));
    if (sgn(*qx) == 0) orbit_hit_zero(1);
    auto orbit = rec::iterate(ep, *qx, a.count);
    if (orbit.hit_zero) orbit_hit_zero(*orbit.hit_zero);
    for (auto& v : orbit.values) iterates.push_back(format_rational(v));
  } else {
    auto cls = rec::classify(params);
    out["kind"] = rec::to_string(cls.kind);
    out["delta"] = cls.delta;
    if (is_zero(x1, rec::kZeroTol)) orbit_hit_zero(1);
    auto orbit = rec::iterate(params, x1, a.count);
    if (orbit.hit_zero) orbit_hit_zero(*orbit.hit_zero);
    for (double v : orbit.values) iterates.push_back(v);
  }

  Json fixed = Json::array();
  for (double t : rec::fixed_points(params)) {
    fixed.push_back({{"value", t}, {"behavior", rec::to_string(rec::local_behavior(params, t))}});
  }
  out["fixed_points"] = fixed;

  auto sol = rec::solve(params, x1);
  out["solution"] = describe(sol);
  out["iterates"] = iterates;
  if (a.eval_at) {
    double j = parse_real(*a.eval_at);
    out["eval"] = {{"j", j}, {"value", evaluation(rec::eval(sol, j))}};
  }
  return out;
}

struct PlotArgs {
  std::string alpha, gamma, x1;
  double from = 1, to = 10, step = 0.01;
};

Json cmd_plot(const PlotArgs& a) {
  if (!(a.step > 0)) throw InputError("--step must be positive");
  if (a.to < a.from) throw InputError("--to must not be below --from");
  rec::Params params(parse_real(a.alpha), parse_real(a.gamma));
  auto sol = rec::solve(params, parse_real(a.x1));
  const auto steps = static_cast<std::size_t>(std::floor((a.to - a.from) / a.step + 1e-9));
  Json rows = Json::array();
  for (std::size_t i = 0; i <= steps; ++i) {
    double j = a.from + static_cast<double>(i) * a.step;
    auto e = rec::eval(sol, j);
    rows.push_back({{"j", j}, {"value", evaluation(e)}, {"is_pole", rec::is_pole(e)}});
  }
  return rows;
}

// ---------------------------------------------------------------------------
// Tree commands.

struct TreeArgs {
  std::string tree_file;
  std::string matrix = "adjacency";
  std::optional<std::size_t> root;  // 1-based
};

RootedTree load_tree(const TreeArgs& a) {
  RootedTree t = read_tree_file(a.tree_file);
  if (a.root) {
    if (*a.root < 1 || *a.root > t.size()) throw BadVertexId("--root " + std::to_string(*a.root) + " is not a vertex");
    t = reroot(t, *a.root - 1);
  }
  return t;
}

Json inertia_json(const treediag::InertiaTriple& i) {
  return {{"below", i.below}, {"equal", i.equal}, {"above", i.above}};
}

Json cmd_locate(const TreeArgs& t, const std::string& alpha_text, bool exact) {
  auto kind = treediag::parse_matrix_kind(t.matrix);
  Json out;
  if (exact) {
    auto q = parse_rational(alpha_text);
    if (!q) throw InputError("--exact needs a rational --alpha (p, p/q or a finite decimal), got '" + alpha_text + "'");
    RootedTree tree = load_tree(t);
    out["n"] = tree.size();
    out["matrix"] = treediag::to_string(kind);
    out["alpha"] = format_rational(*q);
    out["backend"] = "exact";
    auto m = treediag::build_exact_matrix(tree, kind);
    out.update(inertia_json(treediag::locate(m, *q)));
  } else {
    double alpha = parse_real(alpha_text);
    RootedTree tree = load_tree(t);
    out["n"] = tree.size();
    out["matrix"] = treediag::to_string(kind);
    out["alpha"] = alpha;
    out["backend"] = "double";
    out.update(inertia_json(treediag::locate(treediag::build_matrix(tree, kind), alpha)));
  }
  return out;
}

Json cmd_radius(const TreeArgs& t, double tol) {
  auto kind = treediag::parse_matrix_kind(t.matrix);
  RootedTree tree = load_tree(t);
  auto m = treediag::build_matrix(tree, kind);
  return {{"n", tree.size()}, {"matrix", treediag::to_string(kind)}, {"tol", tol}, {"radius", treediag::spectral_radius(m, tol)}};
}

Json cmd_eigen(const TreeArgs& t, std::size_t k, double tol) {
  auto kind = treediag::parse_matrix_kind(t.matrix);
  RootedTree tree = load_tree(t);
  auto m = treediag::build_matrix(tree, kind);
  return {{"n", tree.size()},
          {"matrix", treediag::to_string(kind)},
          {"k", k},
          {"tol", tol},
          {"eigenvalue", treediag::kth_eigenvalue(m, k, tol)}};
}

Json cmd_random_tree(std::size_t n, std::uint64_t seed, Format fmt, std::ostream& out) {
  RootedTree t = oracle::random_tree(n, seed);
  if (fmt == Format::Text) {
    write_tree(out, t);
    return Json();
  }
  if (fmt == Format::Csv) {
    Json rows = Json::array();
    for (auto [c, p] : t.edges()) rows.push_back({{"u", c + 1}, {"v", p + 1}});
    return rows;
  }
  Json edges = Json::array();
  for (auto [c, p] : t.edges()) edges.push_back({c + 1, p + 1});
  return {{"n", n}, {"seed", seed}, {"root", t.root() + 1}, {"edges", edges}};
}

// ---------------------------------------------------------------------------
// Sign-pattern and limit commands.

Json mlas_row(int n, int r, bool direct) {
  auto rep = signs::mlas_report({n, r});
  Json row{{"n", rep.n},
           {"r", rep.r},
           {"period", rep.period},
           {"phi", rep.phi_angle},
           {"omega_r", rep.omega_r},
           {"j_star", rep.j_star},
           {"k0", rep.k0},
           {"mlas", rep.mlas},
           {"lower_bound", rep.lower_bound},
           {"b_2k0_2", rep.b_last_even},
           {"b_2k0_3", rep.b_first_flip}};
  if (direct) row["mlas_direct"] = signs::mlas_direct({n, r});
  return row;
}

Json cmd_mlas(int n, std::optional<int> r, std::optional<int> table, bool direct, int threads) {
  int lo = 1;
  int hi = n / 4;
  if (r) lo = hi = *r;
  if (table) {
    lo = 1;
    hi = *table;
  }
  if (hi < lo) throw OutOfDomain("empty r range");
  return parallel_rows(static_cast<std::size_t>(hi - lo + 1), threads,
                       [&](std::size_t i) { return mlas_row(n, lo + static_cast<int>(i), direct); });
}

Json cmd_broom(const signs::DoubleBroom& b) {
  auto s = signs::double_broom_sigma(b);
  return {{"n", b.order()},
          {"r", b.r},
          {"q", b.q},
          {"p", b.p},
          {"rr", b.R},
          {"sigma", s.sigma},
          {"root_sign", signs::to_string(s.root_sign)},
          {"hypotheses_met", s.hypotheses_met},
          {"cross_check", s.agrees_with_locate},
          {"below", s.inertia.below},
          {"equal", s.inertia.equal},
          {"above", s.inertia.above}};
}

Json cmd_limit(const std::string& family, int n_min, int n_max, double tol, int threads) {
  auto kind = treediag::parse_matrix_kind(family);
  double limit;
  if (kind == treediag::MatrixKind::Adjacency) {
    limit = limits::shearer_constant();
  } else if (kind == treediag::MatrixKind::Laplacian) {
    limit = limits::guo_constant();
  } else {
    throw InputError("--family must be adjacency or laplacian");
  }
  if (n_min < 1 || n_max < n_min) throw InputError("need 1 <= --n-min <= --n-max");
  return parallel_rows(static_cast<std::size_t>(n_max - n_min + 1), threads, [&](std::size_t i) {
    int arm = n_min + static_cast<int>(i);
    double rho = limits::radius_1nn(arm, kind, tol);
    return Json{{"n_arm", arm}, {"radius", rho}, {"gap", limit - rho}};
  });
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Eigenvalue location in trees and the rational recurrences behind it", "treeloc"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format_name;
  int threads = 1;
  app.add_option("--format", format_name, "Output format: json, csv or text")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--threads", threads, "Worker threads for table commands")->check(CLI::Range(1, 256));

  SolveArgs solve;
  auto* c_solve = app.add_subcommand("solve", "Classify, solve and iterate x_{j+1} = alpha + gamma/x_j");
  c_solve->add_option("--alpha", solve.alpha)->required();
  c_solve->add_option("--gamma", solve.gamma)->required();
  c_solve->add_option("--x1", solve.x1)->required();
  c_solve->add_option("--count", solve.count, "Number of iterates")->check(CLI::Range(1, 1000000));
  c_solve->add_option("--eval", solve.eval_at, "Evaluate the closed form at a real index");

  PlotArgs plot;
  auto* c_plot = app.add_subcommand("plot-data", "Closed form sampled on a grid of real indices");
  c_plot->add_option("--alpha", plot.alpha)->required();
  c_plot->add_option("--gamma", plot.gamma)->required();
  c_plot->add_option("--x1", plot.x1)->required();
  c_plot->add_option("--from", plot.from)->required();
  c_plot->add_option("--to", plot.to)->required();
  c_plot->add_option("--step", plot.step)->required();

  TreeArgs tree_args;
  std::string alpha_text;
  bool exact = false;
  double tol = 1e-10;
  std::size_t k = 1;
  auto add_tree_opts = [&](CLI::App* c) {
    c->add_option("--tree", tree_args.tree_file, "Edge-list file")->required();
    c->add_option("--matrix", tree_args.matrix)->check(CLI::IsMember({"adjacency", "laplacian", "normalized"}));
    c->add_option("--root", tree_args.root, "Root vertex (1-based)");
  };
  auto* c_locate = app.add_subcommand("locate", "Count eigenvalues below, at and above alpha");
  add_tree_opts(c_locate);
  c_locate->add_option("--alpha", alpha_text)->required();
  c_locate->add_flag("--exact", exact, "Exact rational arithmetic");
  auto* c_radius = app.add_subcommand("radius", "Spectral radius by bisection");
  add_tree_opts(c_radius);
  c_radius->add_option("--tol", tol);
  auto* c_eigen = app.add_subcommand("eigen", "k-th smallest eigenvalue by bisection");
  add_tree_opts(c_eigen);
  c_eigen->add_option("--k", k)->required();
  c_eigen->add_option("--tol", tol);

  int mlas_n = 0;
  std::optional<int> mlas_r, mlas_table;
  bool direct = false;
  auto* c_mlas = app.add_subcommand("mlas", "Alternating sign pattern lengths on generalized pendant paths");
  c_mlas->add_option("--n", mlas_n)->required();
  auto* opt_r = c_mlas->add_option("--r", mlas_r);
  c_mlas->add_option("--table", mlas_table, "All r from 1 to RMAX")->excludes(opt_r);
  c_mlas->add_flag("--direct", direct, "Also scan the exact sequence");

  signs::DoubleBroom broom{};
  auto* c_broom = app.add_subcommand("broom", "sigma of a double broom");
  c_broom->add_option("--r", broom.r)->required();
  c_broom->add_option("--q", broom.q)->required();
  c_broom->add_option("--p", broom.p)->required();
  c_broom->add_option("--rr", broom.R)->required();

  std::string family;
  int n_min = 1;
  int n_max = 0;
  double limit_tol = 1e-10;
  auto* c_limit = app.add_subcommand("limit", "Spectral radii of T(1,n,n) against their limit");
  c_limit->add_option("--family", family)->required()->check(CLI::IsMember({"adjacency", "laplacian"}));
  c_limit->add_option("--n-max", n_max)->required();
  c_limit->add_option("--n-min", n_min);
  c_limit->add_option("--tol", limit_tol);

  std::size_t rt_n = 0;
  std::uint64_t rt_seed = 0;
  auto* c_random = app.add_subcommand("random-tree", "Uniform random labelled tree");
  c_random->add_option("--n", rt_n)->required()->check(CLI::Range(std::size_t{1}, std::size_t{100000000}));
  c_random->add_option("--seed", rt_seed)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  auto format_or = [&](Format fallback) { return format_name.empty() ? fallback : parse_format(format_name); };

  try {
    Json result;
    Format fmt = format_or(Format::Json);
    if (c_solve->parsed()) {
      result = cmd_solve(solve);
    } else if (c_plot->parsed()) {
      fmt = format_or(Format::Csv);
      result = cmd_plot(plot);
    } else if (c_locate->parsed()) {
      result = cmd_locate(tree_args, alpha_text, exact);
    } else if (c_radius->parsed()) {
      result = cmd_radius(tree_args, tol);
    } else if (c_eigen->parsed()) {
      result = cmd_eigen(tree_args, k, tol);
    } else if (c_mlas->parsed()) {
      result = cmd_mlas(mlas_n, mlas_r, mlas_table, direct, threads);
    } else if (c_broom->parsed()) {
      result = cmd_broom(broom);
    } else if (c_limit->parsed()) {
      fmt = format_or(Format::Csv);
      result = cmd_limit(family, n_min, n_max, limit_tol, threads);
    } else if (c_random->parsed()) {
      fmt = format_or(Format::Text);
      result = cmd_random_tree(rt_n, rt_seed, fmt, out);
      if (result.is_null()) return kExitOk;
    }
    emit(out, result, fmt);
    return kExitOk;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }
}

}  // namespace treeloc::cli

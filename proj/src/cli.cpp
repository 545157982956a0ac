#include "tailorder/cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "lattice.hpp"
#include "tailorder/families.hpp"
#include "tailorder/orders.hpp"
#include "tailorder/taildep.hpp"
#include "tailorder/verify.hpp"

namespace tailorder::cli {

using nlohmann::json;

namespace {

struct RunConfig {
  int grid = 64;
  double tau = 1e-6;
  std::optional<double> eps;
  std::string schedule;
  std::string out_path;
  std::string format;

  GridConfig grid_config() const {
    GridConfig g;
    g.resolution = grid;
    g.tau = tau;
    g.validate();
    return g;
  }

  LimitSchedule limit_schedule() const {
    LimitSchedule s;
    if (!schedule.empty()) {
      std::istringstream in(schedule);
      std::string a, b, c;
      if (!std::getline(in, a, ',') || !std::getline(in, b, ',') || !std::getline(in, c) || c.find(',') != c.npos) {
        throw DescriptorError("--schedule expects s0,ratio,steps");
      }
      try {
        s.s0 = std::stod(a);
        s.ratio = std::stod(b);
        s.steps = std::stoi(c);
      } catch (const std::exception&) {
        throw DescriptorError("--schedule expects s0,ratio,steps");
      }
    }
    s.validate();
    return s;
  }
};

std::string num(double x) { return detail::format_double(x); }

Point parse_point(const std::string& text) {
  Point p;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      throw DescriptorError("malformed point '" + text + "'");
    }
    if (used != item.size()) throw DescriptorError("malformed point '" + text + "'");
    p.push_back(v);
  }
  if (p.empty()) throw DescriptorError("empty point");
  return p;
}

std::string csv_line(const std::vector<std::string>& cells) {
  std::string s;
  for (std::size_t i = 0; i < cells.size(); ++i) s += (i ? "," : "") + cells[i];
  return s + "\n";
}

std::string csv_line(const std::vector<double>& cells) {
  std::vector<std::string> text;
  for (double x : cells) text.push_back(num(x));
  return csv_line(text);
}

std::string json_text(const json& j) { return j.dump(2) + "\n"; }

void require_format(const std::string& f, std::initializer_list<const char*> allowed) {
  if (f.empty()) return;
  for (const char* a : allowed) {
    if (f == a) return;
  }
  throw DescriptorError("unsupported --format '" + f + "' for this subcommand");
}

int verdict_exit(OrderStatus s) {
  switch (s) {
    case OrderStatus::holds:
    case OrderStatus::holds_strictly:
      return kSuccess;
    case OrderStatus::fails:
      return kOrderFails;
    case OrderStatus::indistinguishable:
      return kIndistinguishable;
  }
  return kInputError;
}

// ------------------------------------------------------------------ eval

int cmd_eval(const RunConfig& cfg, const std::vector<std::string>& args, const std::vector<std::string>& at,
             std::string& text) {
  require_format(cfg.format, {"json", "csv", "text"});
  if (args.empty()) throw DescriptorError("eval needs a descriptor");
  const auto c = build(args[0]);
  std::vector<Point> points;
  for (std::size_t i = 1; i < args.size(); ++i) {
    if (args[i] != "at") points.push_back(parse_point(args[i]));
  }
  for (const auto& p : at) points.push_back(parse_point(p));
  if (points.empty()) throw DescriptorError("eval needs at least one point");

  std::vector<double> values;
  for (const auto& p : points) values.push_back(c.eval(p));

  if (cfg.format == "json") {
    json rows = json::array();
    for (std::size_t i = 0; i < points.size(); ++i) rows.push_back({{"point", points[i]}, {"value", values[i]}});
    text = json_text({{"descriptor", to_json(c.descriptor())}, {"values", rows}});
  } else if (cfg.format == "csv") {
    std::vector<std::string> header;
    for (int k = 0; k < c.dimension(); ++k) header.push_back("u" + std::to_string(k + 1));
    header.push_back("value");
    text = csv_line(header);
    for (std::size_t i = 0; i < points.size(); ++i) {
      auto row = points[i];
      row.push_back(values[i]);
      text += csv_line(row);
    }
  } else {
    for (double v : values) text += num(v) + "\n";
  }
  return kSuccess;
}

// ------------------------------------------------------------------ tdf

int cmd_tdf(const RunConfig& cfg, const std::string& descriptor, const std::vector<std::string>& directions,
            bool simplex, std::string& text) {
  require_format(cfg.format, {"json", "csv"});
  const auto c = build(descriptor);
  const auto sched = cfg.limit_schedule();
  std::vector<Point> dirs;
  for (const auto& d : directions) dirs.push_back(parse_point(d));
  if (simplex) {
    if (c.dimension() != 2) throw DimensionError("--simplex is available for bivariate copulas");
    for (const auto& w : verify::simplex_fan()) dirs.push_back(w);
  }
  if (dirs.empty()) dirs.push_back(Point(c.dimension(), 1.0));

  std::vector<TdfEstimate> estimates;
  for (const auto& w : dirs) estimates.push_back(estimate_tdf(c, w, sched));

  if (cfg.format == "json") {
    json all = json::array();
    for (std::size_t i = 0; i < dirs.size(); ++i) {
      const auto& e = estimates[i];
      json trace = json::array();
      for (const auto& tp : e.trace) trace.push_back({{"s", tp.s}, {"ratio", tp.ratio}});
      all.push_back({{"w", dirs[i]},
                     {"value", e.value},
                     {"error_estimate", e.error_estimate},
                     {"converged", e.converged},
                     {"trace", trace}});
    }
    text = json_text(all);
    return kSuccess;
  }
  std::vector<std::string> header;
  for (int k = 0; k < c.dimension(); ++k) header.push_back("w" + std::to_string(k + 1));
  for (const char* h : {"s", "ratio", "diff", "value", "converged"}) header.push_back(h);
  text = csv_line(header);
  for (std::size_t i = 0; i < dirs.size(); ++i) {
    const auto& e = estimates[i];
    for (std::size_t k = 0; k < e.trace.size(); ++k) {
      std::vector<std::string> row;
      for (double x : dirs[i]) row.push_back(num(x));
      row.push_back(num(e.trace[k].s));
      row.push_back(num(e.trace[k].ratio));
      row.push_back(k == 0 ? "" : num(std::abs(e.trace[k].ratio - e.trace[k - 1].ratio)));
      row.push_back(num(e.value));
      row.push_back(e.converged ? "true" : "false");
      text += csv_line(row);
    }
  }
  return kSuccess;
}

// ------------------------------------------------------------------ order

struct OrderFlags {
  bool tdo = false;
  bool loc = false;
  bool too = false;
  std::optional<double> cone;
  bool diagonal = false;
};

std::vector<Point> curve_probes(const Copula& a, const Copula& b, double eps) {
  std::vector<Point> probes;
  for (const auto* c : {&a, &b}) {
    if (const auto* mo = std::get_if<family::MarshallOlkin>(&c->descriptor().node)) {
      const auto p = verify::power_curve_probes(mo->alpha, eps);
      probes.insert(probes.end(), p.begin(), p.end());
    }
  }
  return probes;
}

// Rows (t, C1, C2, C2 - C1) along (t, t^alpha) for a Marshall-Olkin side,
// otherwise along the diagonal, inside the ball of radius eps.
std::string curve_scan_csv(const Copula& a, const Copula& b, double eps, const GridConfig& g) {
  const int d = a.dimension();
  std::optional<double> alpha;
  for (const auto* c : {&a, &b}) {
    if (const auto* mo = std::get_if<family::MarshallOlkin>(&c->descriptor().node)) alpha = mo->alpha;
  }
  std::string text = csv_line(std::vector<std::string>{"t", "C1", "C2", "gap"});
  const int n = 4 * g.resolution;
  for (int i = 1; i <= n; ++i) {
    Point u;
    double t = 0.0;
    if (alpha && d == 2) {
      t = eps * eps * i / n;
      u = {t, std::pow(t, *alpha)};
      if (l2_norm(u) > eps) continue;
    } else {
      t = std::min(1.0, eps / std::sqrt(static_cast<double>(d)) * i / n);
      u = Point(d, t);
    }
    const double c1 = a.eval(u);
    const double c2 = b.eval(u);
    text += csv_line(std::vector<double>{t, c1, c2, c2 - c1});
  }
  return text;
}

// Rows (w, s, C1, C2, C2 - C1) along each ray s w of the schedule.
std::string ray_scan_csv(const Copula& a, const Copula& b, const std::vector<Point>& dirs, const LimitSchedule& sched) {
  const int d = a.dimension();
  std::vector<std::string> header;
  for (int k = 0; k < d; ++k) header.push_back("w" + std::to_string(k + 1));
  for (const char* h : {"s", "C1", "C2", "gap"}) header.push_back(h);
  std::string text = csv_line(header);
  for (const auto& w : dirs) {
    for (int k = 0; k < sched.steps; ++k) {
      const double s = sched.at(k);
      Point u(d);
      bool inside = true;
      for (int i = 0; i < d; ++i) {
        u[i] = s * w[i];
        inside = inside && u[i] <= 1.0;
      }
      if (!inside) continue;
      const double c1 = a.eval(u);
      const double c2 = b.eval(u);
      auto row = w;
      for (double x : {s, c1, c2, c2 - c1}) row.push_back(x);
      text += csv_line(row);
    }
  }
  return text;
}

int cmd_order(const RunConfig& cfg, const OrderFlags& flags, const std::vector<std::string>& descriptors,
              std::string& text) {
  const int chosen = flags.tdo + flags.loc + flags.too + flags.cone.has_value() + flags.diagonal;
  if (chosen != 1) throw DescriptorError("order needs exactly one of --tdo, --loc, --too, --cone, --diagonal");
  if (descriptors.size() != 2) throw DescriptorError("order needs two descriptors");
  require_format(cfg.format, flags.loc || flags.too ? std::initializer_list<const char*>{"json", "csv"}
                                                    : std::initializer_list<const char*>{"json"});
  const auto first = build(descriptors[0]);
  const auto second = build(descriptors[1]);
  if (first.dimension() != second.dimension()) throw DimensionError("descriptors have different dimensions");
  const auto g = cfg.grid_config();
  const auto sched = cfg.limit_schedule();

  OrderVerdict v;
  json extra = json::object();
  if (flags.tdo) {
    v = check_tdo(tdf_of(first, sched), tdf_of(second, sched), g);
  } else if (flags.loc) {
    if (cfg.eps) {
      v = check_loc(first, second, *cfg.eps, g, curve_probes(first, second, *cfg.eps));
    } else {
      OrderVerdict last;
      bool found = false;
      for (int k = 0; k <= 20 && !found; ++k) {
        const double eps = std::ldexp(1.0, -k);
        last = check_loc(first, second, eps, g, curve_probes(first, second, eps));
        found = last.status != OrderStatus::fails;
      }
      if (!found) last.notes.push_back("no eps found at this resolution (searched 2^-k, k <= 20)");
      v = last;
    }
  } else if (flags.too) {
    const auto dirs = first.dimension() == 2 ? default_too_directions() : std::vector<Point>{Point(first.dimension(), 1.0)};
    const auto per = check_too(first, second, dirs, sched, g);
    v = combine_directions(per);
    json list = json::array();
    for (std::size_t i = 0; i < per.size(); ++i) {
      auto j = to_json(per[i]);
      j["direction"] = dirs[i];
      list.push_back(j);
    }
    extra["directions"] = list;
  } else if (flags.cone) {
    const ConeSpec cone{*flags.cone};
    v = cfg.eps ? check_cone_order(first, second, cone, *cfg.eps, g) : search_cone_order(first, second, cone, g);
    extra["cone"] = cone.c;
  } else {
    v = check_diagonal_order(diagonal_of(first), diagonal_of(second), g);
  }
  if (cfg.format == "csv") {
    text = flags.loc ? curve_scan_csv(first, second, v.epsilon.value_or(1.0), g)
                     : ray_scan_csv(first, second, first.dimension() == 2 ? default_too_directions()
                                                                          : std::vector<Point>{Point(first.dimension(), 1.0)},
                                    sched);
    return verdict_exit(v.status);
  }
  auto j = to_json(v);
  for (auto& [k, val] : extra.items()) j[k] = val;
  text = json_text(j);
  return verdict_exit(v.status);
}

// ------------------------------------------------------------------ verify

int cmd_verify(const RunConfig& cfg, const std::string& suite, std::string& text) {
  require_format(cfg.format, {"json", "csv"});
  const auto checks = verify::run_suite(suite, cfg.grid_config(), cfg.limit_schedule());
  bool ok = true;
  for (const auto& c : checks) ok = ok && c.passed;
  if (cfg.format == "csv") {
    text = csv_line(std::vector<std::string>{"suite", "check", "passed", "value", "tolerance"});
    for (const auto& c : checks) {
      std::string name = c.name;
      std::replace(name.begin(), name.end(), ',', ';');
      text += csv_line(std::vector<std::string>{c.suite, name, c.passed ? "true" : "false", num(c.value),
                                                num(c.tolerance)});
    }
  } else {
    json list = json::array();
    for (const auto& c : checks) list.push_back(verify::to_json(c));
    text = json_text({{"suite", suite}, {"passed", ok}, {"checks", list}});
  }
  return ok ? kSuccess : kOrderFails;
}

// ------------------------------------------------------------------ repro

int cmd_repro(const RunConfig& cfg, const std::string& name, std::string& text) {
  require_format(cfg.format, {"json", "csv"});
  const auto table = verify::repro(name, cfg.grid_config(), cfg.limit_schedule());
  if (cfg.format == "json") {
    text = json_text({{"name", name}, {"header", table.header}, {"rows", table.rows}, {"summary", table.summary}});
  } else {
    text = csv_line(table.header);
    for (const auto& row : table.rows) text += csv_line(row);
  }
  return kSuccess;
}

// ------------------------------------------------------------------ validate

json report_json(const ValidityReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"name", c.name}, {"passed", c.passed}, {"worst", c.worst}, {"witness", c.witness}});
  }
  return {{"ok", r.ok()}, {"checks", checks}};
}

int cmd_validate(const RunConfig& cfg, const std::string& descriptor, bool as_tdf, std::string& text) {
  require_format(cfg.format, {"json"});
  ValidityReport report;
  if (as_tdf) {
    report = validate_tdf(make_tdf(parse_tdf_spec(descriptor)), cfg.grid_config());
  } else {
    report = validate_copula(build(descriptor), cfg.grid_config());
  }
  text = json_text(report_json(report));
  return report.ok() ? kSuccess : kOrderFails;
}

void write_atomically(const std::string& path, const std::string& text) {
  const std::filesystem::path target(path);
  const std::filesystem::path tmp = target.string() + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw DescriptorError("cannot open output file '" + path + "'");
    f << text;
    if (!f) throw DescriptorError("cannot write output file '" + path + "'");
  }
  std::filesystem::rename(tmp, target);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Tail dependence functions and tail orders of copulas"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  double eps = 0.0;
  app.add_option("--grid", cfg.grid, "lattice resolution per axis")->check(CLI::Range(8, 4096));
  app.add_option("--tau", cfg.tau, "strictness / indistinguishability threshold")->check(CLI::PositiveNumber);
  auto* eps_opt = app.add_option("--eps", eps, "neighbourhood radius")->check(CLI::PositiveNumber);
  app.add_option("--schedule", cfg.schedule, "limit schedule s0,ratio,steps");
  app.add_option("--out", cfg.out_path, "write output to this file");
  app.add_option("--format", cfg.format, "json or csv")->check(CLI::IsMember({"json", "csv", "text"}));

  std::vector<std::string> eval_args;
  std::vector<std::string> eval_at;
  auto* eval = app.add_subcommand("eval", "evaluate a copula at points");
  eval->add_option("args", eval_args, "descriptor followed by points u1,...,ud")->required();
  eval->add_option("--at,-u", eval_at, "point u1,...,ud (repeatable)");

  std::string tdf_descriptor;
  std::vector<std::string> tdf_w;
  bool tdf_simplex = false;
  auto* tdf = app.add_subcommand("tdf", "estimate the tail dependence function along directions");
  tdf->add_option("descriptor", tdf_descriptor)->required();
  tdf->add_option("--w", tdf_w, "direction w1,...,wd (repeatable)");
  tdf->add_flag("--simplex", tdf_simplex, "21-point simplex fan");

  OrderFlags flags;
  double cone_c = 0.0;
  std::vector<std::string> order_args;
  auto* order = app.add_subcommand("order", "compare two copulas");
  order->add_flag("--tdo", flags.tdo, "tail dependence order");
  order->add_flag("--loc", flags.loc, "local lower orthant order");
  order->add_flag("--too", flags.too, "tail orthant order");
  auto* cone_opt = order->add_option("--cone", cone_c, "cone order with parameter c")->check(CLI::PositiveNumber);
  order->add_flag("--diagonal", flags.diagonal, "order of diagonal sections");
  order->add_option("descriptors", order_args)->required()->expected(2);

  std::string suite = "all";
  auto* verify_cmd = app.add_subcommand("verify", "run a named check suite");
  verify_cmd->add_option("suite", suite);

  std::string repro_name;
  auto* repro_cmd = app.add_subcommand("repro", "counterexample data");
  repro_cmd->add_option("name", repro_name)->required();

  std::string validate_descriptor;
  bool validate_tdf_flag = false;
  auto* validate_cmd = app.add_subcommand("validate", "audit copula axioms on the lattice");
  validate_cmd->add_option("descriptor", validate_descriptor)->required();
  validate_cmd->add_flag("--tdf", validate_tdf_flag, "treat the argument as a tail dependence function");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  if (eps_opt->count() > 0) cfg.eps = eps;
  if (cone_opt->count() > 0) flags.cone = cone_c;

  std::string text;
  int code = kSuccess;
  try {
    if (*eval) {
      code = cmd_eval(cfg, eval_args, eval_at, text);
    } else if (*tdf) {
      code = cmd_tdf(cfg, tdf_descriptor, tdf_w, tdf_simplex, text);
    } else if (*order) {
      code = cmd_order(cfg, flags, order_args, text);
    } else if (*verify_cmd) {
      code = cmd_verify(cfg, suite, text);
    } else if (*repro_cmd) {
      code = cmd_repro(cfg, repro_name, text);
    } else if (*validate_cmd) {
      code = cmd_validate(cfg, validate_descriptor, validate_tdf_flag, text);
    }
    if (cfg.out_path.empty()) {
      out << text;
    } else {
      write_atomically(cfg.out_path, text);
    }
  } catch (const DimensionError& e) {
    err << "dimension error: " << e.what() << "\n";
    return kDimensionError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return code;
}

}  // namespace tailorder::cli

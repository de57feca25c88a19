#include "dmt/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include "dmt/category.hpp"
#include "dmt/chain.hpp"
#include "dmt/collapse.hpp"
#include "dmt/flow.hpp"
#include "dmt/io.hpp"
#include "dmt/minmax.hpp"

namespace dmt::cli {

namespace {

using nlohmann::json;

struct Options {
  std::string in;
  std::string format;
  std::uint64_t seed = 0;
  Vertex min0 = 0;
  Vertex min1 = 0;
  double level = 0;
  double to = 0;
  std::size_t max_enum = kDefaultEnumerationBound;
  int vertices = 6;
  int dim = 2;
  bool json = false;
  bool dot = false;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json number(double v) {
  if (std::isfinite(v) && std::floor(v) == v && std::fabs(v) < 9.0e15) return static_cast<std::int64_t>(v);
  return v;
}

json simplex_json(const Simplex& s) { return json(std::vector<Vertex>(s.vertices().begin(), s.vertices().end())); }

template <class Range>
json cells_json(const Range& cells) {
  json out = json::array();
  for (const auto& s : cells) out.push_back(simplex_json(s));
  return out;
}

json steps_json(const CollapseSequence& seq) {
  json out = json::array();
  for (const auto& [a, b] : seq.steps) out.push_back({simplex_json(a), simplex_json(b)});
  return out;
}

json numbers_json(const std::vector<double>& values) {
  json out = json::array();
  for (double v : values) out.push_back(number(v));
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

ComplexFile load(const Options& o) {
  if (o.in.empty()) throw UsageError("--in is required");
  std::string format = o.format;
  if (format.empty()) format = o.in.ends_with(".off") ? "off" : "scx";
  const auto text = read_file(o.in);
  if (format == "off") return {parse_off(text), std::nullopt};
  return parse_scx(text);
}

const MorseFunction& need_function(const ComplexFile& file) {
  if (!file.function) throw Error(ErrorKind::MissingValue, "this command needs a function: give values in the input");
  return *file.function;
}

json report_json(const std::string& name, const MinMaxReport& r, std::optional<double> value) {
  json failures = json::array();
  for (const auto& c : r.closure_failures) {
    failures.push_back({{"map", c.map}, {"member", cells_json(c.member)}, {"image", cells_json(c.image)}});
  }
  json out = {{"name", name},
              {"epsilon", number(r.epsilon)},
              {"regular_values", numbers_json(r.regular_values)},
              {"closure_failures", failures},
              {"deformation_failures", numbers_json(r.deformation_failures)},
              {"ok", r.ok()}};
  if (value) out["value"] = number(*value);
  return out;
}

int dispatch(const std::string& command, const Options& o, CLI::App& sub, std::ostream& out) {
  json result = {{"schema", 1}, {"command", command}};

  if (command == "random") {
    if (sub.count("--seed") == 0) throw UsageError("random needs --seed");
    if (o.vertices < 1 || o.dim < 0) throw UsageError("--vertices must be positive and --dim non-negative");
    const auto k = random_complex(o.seed, o.vertices, o.dim);
    const auto f = random_morse(k, o.seed);
    result["seed"] = o.seed;
    result["simplices"] = k.size();
    result["critical"] = cells_json(critical_cells(f));
    result["scx"] = emit_scx(f);
    out << result.dump(2) << '\n';
    return 0;
  }

  const auto file = load(o);
  const auto& k = file.complex;

  if (command == "export-dot") {
    out << (file.function ? to_dot(*file.function) : to_dot(k));
    return 0;
  }
  if (command == "validate") {
    result["valid"] = true;
    result["simplices"] = k.size();
    result["dimension"] = k.dimension();
    result["has_values"] = file.function.has_value();
    if (file.function) result["injective"] = file.function->is_injective();
  } else if (command == "critical") {
    const auto& f = need_function(file);
    const auto crit = critical_cells(f);
    std::vector<double> values;
    for (const auto& s : crit) values.push_back(f(s));
    result["critical"] = cells_json(crit);
    result["values"] = numbers_json(values);
  } else if (command == "gradient") {
    const auto& f = need_function(file);
    if (o.dot) {
      out << to_dot(f);
      return 0;
    }
    const auto field = gradient_field(f);
    json pairs = json::array();
    for (const auto& [a, b] : field.pairs()) pairs.push_back({simplex_json(a), simplex_json(b)});
    result["pairs"] = pairs;
    result["critical"] = cells_json(field.critical_cells());
    result["acyclic"] = !has_closed_path(field);
  } else if (command == "flow") {
    FlowOperator flow(need_function(file));
    json dims = json::array();
    for (int p = 0; p <= k.dimension(); ++p) {
      const Eigen::Matrix<Coefficient, Eigen::Dynamic, Eigen::Dynamic> m = flow_matrix(flow, p);
      json rows = json::array();
      for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        rows.push_back(row);
      }
      const auto report = check_flow_matrix(flow, p);
      dims.push_back({{"dim", p},
                      {"cells", cells_json(k.cells_of_dim(p))},
                      {"matrix", rows},
                      {"ok", report.ok()},
                      {"violations", report.violations}});
    }
    result["dimensions"] = dims;
    if (sub.count("--level")) {
      const auto seq = verify_phibar_collapse(flow, o.level);
      result["phi_bar"] = {{"threshold", number(o.level)},
                           {"level", cells_json(seq.start.cells())},
                           {"image", cells_json(seq.end.cells())},
                           {"steps", steps_json(seq)}};
    }
  } else if (command == "levels") {
    const auto& f = need_function(file);
    std::vector<double> thresholds = sub.count("--level") ? std::vector<double>{o.level} : f.distinct_values();
    json levels = json::array();
    for (double a : thresholds) {
      const auto l = level_subcomplex(f, a);
      levels.push_back({{"threshold", number(a)},
                        {"sublevel", cells_json(l.sublevel)},
                        {"level", cells_json(l.level.cells())},
                        {"betti", betti_numbers_mod2(l.level)}});
    }
    result["levels"] = levels;
  } else if (command == "collapse") {
    if (sub.count("--to") && !sub.count("--level")) throw UsageError("--to needs --level");
    CollapseSequence seq;
    if (sub.count("--level") && sub.count("--to")) {
      result["mode"] = "window";
      seq = verify_dmt_a(need_function(file), o.level, o.to);
    } else if (sub.count("--level")) {
      result["mode"] = "phi-bar";
      seq = verify_phibar_collapse(need_function(file), o.level);
    } else {
      result["mode"] = "vertex";
      auto found = collapse_to_vertex(k);
      result["collapsible"] = found.has_value();
      seq = found ? *found : CollapseSequence{k, k, {}};
    }
    result["start"] = cells_json(seq.start.cells());
    result["end"] = cells_json(seq.end.cells());
    result["steps"] = steps_json(seq);
  } else if (command == "homology") {
    const auto target = sub.count("--level") ? level_subcomplex(need_function(file), o.level).level : k;
    result["betti"] = betti_numbers_mod2(target);
    result["euler"] = euler_characteristic(target);
  } else if (command == "mountain-pass") {
    if (!sub.count("--min0") || !sub.count("--min1")) throw UsageError("mountain-pass needs --min0 and --min1");
    const auto mp = mountain_pass(need_function(file), Simplex{o.min1}, Simplex{o.min0});
    result["c"] = number(mp.value);
    result["edge"] = simplex_json(mp.edge);
    result["start"] = simplex_json(mp.witness.start);
    result["target"] = simplex_json(mp.witness.target);
    result["witness"] = cells_json(mp.witness.edges);
    result["paths"] = mp.paths.size();
  } else if (command == "lscat") {
    CategorySolver solver(k, o.max_enum);
    const auto cat = solver.dgcat(k);
    json cover = json::array();
    for (const auto& u : cat.cover) cover.push_back(cells_json(u.cells()));
    result["dgcat"] = cat.value;
    result["collapsed"] = cells_json(cat.collapsed.cells());
    result["cover"] = cover;
    if (file.function) {
      const auto ls = ls_minmax(*file.function, o.max_enum);
      json values = json::array();
      for (const auto& [i, c] : ls.values) values.push_back({{"k", i}, {"c", number(c)}});
      result["values"] = values;
      result["critical_count"] = ls.critical_count;
      result["bound_holds"] = static_cast<std::size_t>(ls.dgcat + 1) <= ls.critical_count;
    }
  } else if (command == "minmax-check") {
    const auto& f = need_function(file);
    json instances = json::array();
    bool ok = true;
    if (sub.count("--min0") || sub.count("--min1")) {
      if (!sub.count("--min0") || !sub.count("--min1")) throw UsageError("give both --min0 and --min1");
      const auto mp = mountain_pass(f, Simplex{o.min1}, Simplex{o.min0});
      const auto report = check_minmax_data(mp.instance);
      ok = report.ok();
      instances.push_back(report_json("mountain-pass", report, mp.value));
    } else {
      const auto ls = ls_minmax(f, o.max_enum);
      for (const auto& [i, c] : ls.values) {
        const auto report = check_minmax_data(ls_instance(f, i, o.max_enum));
        ok = ok && report.ok();
        instances.push_back(report_json("gamma-" + std::to_string(i), report, c));
      }
    }
    result["instances"] = instances;
    result["ok"] = ok;
    out << result.dump(2) << '\n';
    return ok ? 0 : 1;
  }
  out << result.dump(2) << '\n';
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Discrete Morse theory toolkit", "dmt"};
  app.require_subcommand(1);
  Options o;
  const std::vector<std::pair<std::string, std::string>> commands = {
      {"validate", "check the complex and the Morse conditions"},
      {"critical", "critical cells and values"},
      {"gradient", "gradient pairs (--dot for a drawing)"},
      {"flow", "flow matrices per dimension; --level adds the Phi-bar collapse"},
      {"levels", "level subcomplexes at every value or at --level"},
      {"collapse", "collapse K^to onto K^level, K^level onto Phi-bar, or K onto a vertex"},
      {"homology", "Betti numbers mod 2 of K or K^level"},
      {"mountain-pass", "mountain-pass edge between --min1 and --min0"},
      {"lscat", "discrete geometric category and LS values"},
      {"minmax-check", "check min-max data for the path or LS families"},
      {"random", "random complex and Morse function (needs --seed)"},
      {"export-dot", "Hasse diagram with gradient arrows in DOT"},
  };
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("--in", o.in, "input file");
    sub->add_option("--format", o.format, "scx or off (default from extension)")
        ->check(CLI::IsMember({"scx", "off"}));
    sub->add_option("--seed", o.seed, "random seed");
    sub->add_option("--min0", o.min0, "lower minimum vertex");
    sub->add_option("--min1", o.min1, "higher minimum vertex");
    sub->add_option("--level", o.level, "threshold a");
    sub->add_option("--to", o.to, "upper threshold b");
    sub->add_option("--max-enum", o.max_enum, "enumeration bound in simplices");
    sub->add_option("--vertices", o.vertices, "vertex count for random");
    sub->add_option("--dim", o.dim, "dimension bound for random");
    sub->add_flag("--json", o.json, "JSON output (default)");
    sub->add_flag("--dot", o.dot, "DOT output where supported");
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  auto* sub = app.get_subcommands().front();
  try {
    return dispatch(sub->get_name(), o, *sub, out);
  } catch (const UsageError& e) {
    err << "dmt: " << e.what() << '\n';
    return 2;
  } catch (const MorseConditionError& e) {
    json violations = json::array();
    for (const auto& v : e.violations()) {
      violations.push_back({{"simplex", simplex_json(v.simplex)}, {"upper", v.upper}, {"lower", v.lower}});
    }
    json error = {{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}, {"violations", violations}};
    out << json{{"schema", 1}, {"error", error}}.dump(2) << '\n';
    return 1;
  } catch (const Error& e) {
    json error = {{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}};
    if (const auto* p = dynamic_cast<const ParseError*>(&e)) error["line"] = p->line();
    out << json{{"schema", 1}, {"error", error}}.dump(2) << '\n';
    return 1;
  }
}

}  // namespace dmt::cli

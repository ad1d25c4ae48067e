#include "ckn/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ckn/balance.hpp"
#include "ckn/reliability.hpp"
#include "ckn/tiesets.hpp"

namespace ckn::cli {

namespace {

std::vector<int> parse_int_list(const std::string& csv, const char* what) {
  std::vector<int> values;
  std::size_t pos = 0;
  while (pos <= csv.size()) {
    std::size_t comma = csv.find(',', pos);
    std::string token = csv.substr(
        pos, comma == std::string::npos ? std::string::npos : comma - pos);
    try {
      std::size_t used = 0;
      values.push_back(std::stoi(token, &used));
      if (used != token.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw Error(std::string("bad integer '") + token + "' in " + what);
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return values;
}

std::vector<BalanceCondition> parse_conditions(const std::string& flag) {
  if (flag == "all") return {BalanceCondition::BC1, BalanceCondition::BC2,
                             BalanceCondition::BC3};
  if (auto condition = balance_condition_from_string(flag)) return {*condition};
  throw Error("unknown condition '" + flag + "' (expected bc1, bc2, bc3 or all)");
}

std::string format_fixed6(double value) {
  if (std::abs(value) < 5e-7) value = 0.0;  // keep "-0.000000" out of reports
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", value);
  return buf;
}

int write_output(const std::string& content, const std::string& path,
                 std::ostream& out, std::ostream& err) {
  if (path.empty()) {
    out << content;
    return kExitOk;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) {
    err << "error: cannot open '" << path << "' for writing\n";
    return kExitIo;
  }
  file << content;
  file.flush();
  if (!file) {
    err << "error: failed while writing '" << path << "'\n";
    return kExitIo;
  }
  return kExitOk;
}

std::string join_ints(const std::vector<int>& values) {
  std::string joined;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) joined += ',';
    joined += std::to_string(values[i]);
  }
  return joined;
}

std::vector<SystemConfig> standard_count_systems() {
  std::vector<SystemConfig> systems;
  for (int n : {6, 8, 10, 12, 14})
    for (int k = 2; k <= n - 2; k += 2) systems.emplace_back(n, k);
  return systems;
}

int run_check(int n, const std::string& units_csv, double tol,
              const std::string& format, const std::string& out_path,
              std::ostream& out, std::ostream& err) {
  if (n < kMinUnits)
    throw OutOfRangeError("n must be at least " + std::to_string(kMinUnits));
  UnitSet units(parse_int_list(units_csv, "--units"), n);
  BalanceReport report = classify(units, tol);
  DistanceTuple gaps = distance_tuple(units);

  std::string content;
  if (format == "json") {
    nlohmann::ordered_json j;
    j["n"] = n;
    j["units"] = units.units();
    j["distance_tuple"] = gaps.gaps;
    j["axis_count"] = report.axis_count;
    j["cog"] = {{"x", report.cog.x}, {"y", report.cog.y}, {"norm", report.cog.norm}};
    j["bc1"] = report.bc1;
    j["bc2"] = report.bc2;
    j["bc3"] = report.bc3;
    content = j.dump(2) + "\n";
  } else {
    content = "n: " + std::to_string(n) + "\n" +
              "units: " + join_ints(units.units()) + "\n" +
              "distance_tuple: " + join_ints(gaps.gaps) + "\n" +
              "axis_count: " + std::to_string(report.axis_count) + "\n" +
              "cog: (" + format_fixed6(report.cog.x) + ", " +
              format_fixed6(report.cog.y) + ")\n" +
              "cog_norm: " + format_fixed6(report.cog.norm) + "\n" +
              "bc1: " + (report.bc1 ? "true" : "false") + "\n" +
              "bc2: " + (report.bc2 ? "true" : "false") + "\n" +
              "bc3: " + (report.bc3 ? "true" : "false") + "\n";
  }
  return write_output(content, out_path, out, err);
}

int run_tiesets(int n, int k, const std::string& condition_flag, double tol,
                const std::string& format, const std::string& out_path,
                std::ostream& out, std::ostream& err) {
  std::vector<BalanceCondition> conditions = parse_conditions(condition_flag);
  if (conditions.size() != 1)
    throw Error("tiesets needs a single condition (bc1, bc2 or bc3)");
  TieSetCatalog catalog =
      enumerate_minimum_tiesets(SystemConfig(n, k), conditions.front(), tol);
  std::string content =
      format == "json" ? to_json_string(catalog) : to_text(catalog);
  return write_output(content, out_path, out, err);
}

int run_table1(double tol, const std::string& format, const std::string& out_path,
               std::ostream& out, std::ostream& err) {
  std::vector<CountRow> rows = count_table(standard_count_systems(), tol);
  std::string content = format == "json" ? to_json_string(rows) : to_csv(rows);
  return write_output(content, out_path, out, err);
}

int run_sweep(int n, const std::string& k_csv, const std::string& condition_flag,
              const std::vector<double>& r_grid, bool exact, double tol,
              const std::string& format, const std::string& out_path,
              std::ostream& out, std::ostream& err) {
  std::vector<SystemConfig> configs;
  for (int k : parse_int_list(k_csv, "--k")) configs.emplace_back(n, k);
  std::vector<BalanceCondition> conditions = parse_conditions(condition_flag);

  ReliabilityTable table = sweep(configs, conditions, r_grid, exact, tol);
  std::string content = format == "json" ? to_json_string(table) : to_csv(table);
  int code = write_output(content, out_path, out, err);
  if (code != kExitOk) return code;
  if (!table.errors.empty()) {
    for (const SweepError& e : table.errors)
      err << "error: n=" << e.n << ",k=" << e.k << ",condition="
          << to_string(e.condition) << ": " << e.message << "\n";
    return kExitComputation;
  }
  return kExitOk;
}

}  // namespace

std::vector<double> parse_r_grid(const std::string& spec) {
  if (spec.empty()) return {};
  double bounds[3];
  std::size_t pos = 0;
  for (int i = 0; i < 3; ++i) {
    std::size_t colon = spec.find(':', pos);
    bool last = (i == 2);
    if (last != (colon == std::string::npos))
      throw Error("r-grid must be start:end:step (got '" + spec + "')");
    std::string token =
        spec.substr(pos, last ? std::string::npos : colon - pos);
    try {
      std::size_t used = 0;
      bounds[i] = std::stod(token, &used);
      if (used != token.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw Error("bad r-grid value '" + token + "'");
    }
    pos = colon + 1;
  }
  const double start = bounds[0], end = bounds[1], step = bounds[2];
  if (!(start >= 0.0 && start <= 1.0) || !(end >= 0.0 && end <= 1.0))
    throw InvalidUnitReliabilityError("r-grid endpoints must lie in [0,1]");
  if (start > end) throw Error("r-grid start exceeds end");
  if (!(step > 0.0)) throw Error("r-grid step must be positive");

  std::vector<double> grid;
  for (int i = 0;; ++i) {
    double value = start + i * step;
    if (std::abs(value - end) <= 1e-12) {
      grid.push_back(end);
      break;
    }
    if (value > end) break;
    grid.push_back(value);
  }
  return grid;
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"circular k-out-of-n:G balanced-system toolkit"};
  app.name("ckn");
  app.require_subcommand(1);

  int n = 0, k_single = 0;
  std::string units_csv, k_csv, condition_flag = "all", r_grid_spec, out_path;
  std::string format = "csv";
  double tol = kDefaultBalanceTol;
  double r_single = -1.0;
  bool exact = false;

  auto add_common = [&](CLI::App* cmd, bool with_tol = true) {
    cmd->add_option("--out", out_path, "write output to this file instead of stdout");
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
    if (with_tol)
      cmd->add_option("--tol", tol, "balance tolerance for the center-of-gravity test");
  };

  CLI::App* check = app.add_subcommand(
      "check", "classify one unit set under all three balance conditions");
  check->add_option("--n", n, "number of units on the circle")->required();
  check->add_option("--units", units_csv, "comma-separated operating-unit indices")
      ->required();
  add_common(check);

  CLI::App* tiesets = app.add_subcommand(
      "tiesets", "enumerate the minimum tie-sets of one (n, k, condition) system");
  tiesets->add_option("--n", n, "number of units on the circle")->required();
  tiesets->add_option("--k", k_single, "minimum number of operating units")->required();
  tiesets->add_option("--condition", condition_flag, "bc1, bc2 or bc3")->required();
  add_common(tiesets);

  CLI::App* table1 = app.add_subcommand(
      "table1", "minimum tie-set counts for the standard sweep of systems "
                "(n = 6..14 even, k = 2..n-2 even) under all three conditions");
  add_common(table1);

  CLI::App* reliability = app.add_subcommand(
      "reliability", "evaluate system reliability at a single unit reliability r");
  reliability->add_option("--n", n, "number of units on the circle")->required();
  reliability->add_option("--k", k_csv, "comma-separated k values")->required();
  reliability->add_option("--condition", condition_flag, "bc1, bc2, bc3 or all");
  reliability->add_option("--r", r_single, "unit reliability in [0,1]")->required();
  reliability->add_flag("--exact", exact, "also evaluate by full state enumeration");
  add_common(reliability);

  CLI::App* sweep_cmd = app.add_subcommand(
      "sweep", "evaluate system reliability over a grid of unit reliabilities");
  sweep_cmd->add_option("--n", n, "number of units on the circle")->required();
  sweep_cmd->add_option("--k", k_csv, "comma-separated k values")->required();
  sweep_cmd->add_option("--condition", condition_flag, "bc1, bc2, bc3 or all");
  sweep_cmd->add_option("--r", r_single, "single unit reliability in [0,1]");
  sweep_cmd->add_option("--r-grid", r_grid_spec, "grid as start:end:step, inclusive");
  sweep_cmd->add_flag("--exact", exact, "also evaluate by full state enumeration");
  add_common(sweep_cmd);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    if (*check)
      return run_check(n, units_csv, tol, format, out_path, out, err);
    if (*tiesets)
      return run_tiesets(n, k_single, condition_flag, tol, format, out_path, out, err);
    if (*table1)
      return run_table1(tol, format, out_path, out, err);
    if (*reliability) {
      if (!(r_single >= 0.0 && r_single <= 1.0))
        throw InvalidUnitReliabilityError("unit reliability must lie in [0,1]");
      return run_sweep(n, k_csv, condition_flag, {r_single}, exact, tol, format,
                       out_path, out, err);
    }
    if (*sweep_cmd) {
      const bool has_r = sweep_cmd->count("--r") > 0;
      const bool has_r_grid = sweep_cmd->count("--r-grid") > 0;
      if (has_r == has_r_grid)
        throw Error("sweep needs exactly one of --r or --r-grid");
      std::vector<double> grid;
      if (has_r) {
        if (!(r_single >= 0.0 && r_single <= 1.0))
          throw InvalidUnitReliabilityError("unit reliability must lie in [0,1]");
        grid.push_back(r_single);
      } else {
        grid = parse_r_grid(r_grid_spec);
      }
      return run_sweep(n, k_csv, condition_flag, grid, exact, tol, format,
                       out_path, out, err);
    }
  } catch (const TooLargeError& e) {
    err << "error: " << e.what() << "\n";
    return kExitComputation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitValidation;
}

}  // namespace ckn::cli

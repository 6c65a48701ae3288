#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "riesz/epstein.hpp"
#include "riesz/errors.hpp"
#include "riesz/gibbs.hpp"
#include "riesz/green1d.hpp"
#include "riesz/hamiltonian.hpp"
#include "riesz/minimizer.hpp"
#include "riesz/parallel.hpp"
#include "riesz/periodic.hpp"
#include "riesz/report.hpp"
#include "riesz/specfun.hpp"

namespace riesz::cli {

namespace {

constexpr int kUsageError = 1;
constexpr int kNumericError = 2;

struct Common {
  std::uint64_t seed = 0;
  std::string out;
  unsigned threads = 0;
  bool no_timestamp = false;
};

void add_common(CLI::App& app, Common& common) {
  app.set_config("--config", "", "file of key = value lines; flags take precedence");
  app.add_option("--seed", common.seed, "random seed");
  app.add_option("--out", common.out, "output path (default: standard output)");
  app.add_option("--threads", common.threads, "worker threads (0: hardware)");
  app.add_flag("--no-timestamp", common.no_timestamp, "omit the generation time from reports");
}

std::string utc_now() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

Json envelope(const std::string& command, const Common& common, Json config) {
  config["seed"] = common.seed;
  config["threads"] = common.threads;
  if (!common.out.empty()) config["out"] = common.out;
  Json report = {{"command", command}, {"config", std::move(config)}};
  if (!common.no_timestamp) report["generated_at"] = utc_now();
  return report;
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
  } else {
    write_file_atomic(path, text);
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::ostringstream csv_stream() {
  std::ostringstream os;
  os << std::setprecision(17);
  return os;
}

KernelSpec planar_kernel(double s) {
  if (s == 0.0) return make_kernel(KernelCase::kLog2d, 2);
  if (!(s > 0.0 && s < 2.0)) {
    throw DomainError("lattice-scan needs s in [0, 2) for d = 2 (0 selects the log kernel)");
  }
  return make_kernel(KernelCase::kRiesz, 2, s);
}

KernelSpec line_kernel(double s) {
  if (s == 0.0) return make_kernel(KernelCase::kLog1d, 1);
  return make_kernel(KernelCase::kRiesz, 1, s);
}

std::vector<std::pair<double, double>> read_fit_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot read data file " + path);
  std::vector<std::pair<double, double>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#' || line.rfind("n,", 0) == 0) continue;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream fields(line);
    double n = 0.0;
    double value = 0.0;
    if (!(fields >> n >> value)) throw DomainError("malformed row in " + path + ": " + line);
    rows.emplace_back(n, value);
  }
  return rows;
}

std::vector<double> read_points(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot read points file " + path);
  std::vector<double> points;
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream field(line);
    double p = 0.0;
    if (!(field >> p)) throw DomainError("malformed point in " + path + ": " + line);
    points.push_back(p);
  }
  return points;
}

// Appends one row to a CSV file, writing the header first if the file is
// new. The whole file is rewritten through write_file_atomic.
void append_csv_row(const std::string& path, const std::string& header, const std::string& row) {
  std::string text;
  if (std::filesystem::exists(path)) {
    std::ifstream in(path);
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
    if (!text.empty() && text.back() != '\n') text += '\n';
  } else {
    text = header + "\n";
  }
  write_file_atomic(path, text + row + "\n");
}

// One subcommand: registers its options and returns the action to run
// after parsing.
using Action = std::function<void(std::ostream&)>;
using Builder = std::function<Action(CLI::App&, Common&)>;

Action build_minimize(CLI::App& app, Common& common) {
  struct Params {
    std::string model = "semicircle";
    std::size_t n = 16;
    int trials = 8;
    int max_iterations = 5000;
    double tolerance = 1e-8;
    std::string csv;
  };
  auto p = std::make_shared<Params>();
  app.add_option("--model", p->model, "semicircle | circular-law");
  app.add_option("--n", p->n, "number of points")->check(CLI::PositiveNumber);
  app.add_option("--trials", p->trials, "multistart trials")->check(CLI::PositiveNumber);
  app.add_option("--max-iterations", p->max_iterations);
  app.add_option("--tolerance", p->tolerance, "gradient tolerance per point");
  app.add_option("--csv", p->csv, "append an (n, value) row to this CSV");
  return [p, &common](std::ostream& out) {
    const EquilibriumModel model = model_by_name(p->model);
    MinimizeOptions opts;
    opts.seed = common.seed;
    opts.max_iterations = p->max_iterations;
    opts.gradient_tolerance = p->tolerance;
    const MinimizeResult res = multistart(model, p->n, p->trials, opts);
    Json report = envelope("minimize", common,
                           {{"model", p->model},
                            {"n", p->n},
                            {"trials", p->trials},
                            {"max_iterations", p->max_iterations},
                            {"tolerance", p->tolerance}});
    report["kernel"] = to_json(model.spec);
    report["model"] = to_json(model);
    report["result"] = to_json(res);
    report["value"] = finite_or_tag(res.value);
    report["next_order_scaled"] = next_order_scaled(model, res.config);
    report["separation"] = to_json(separation_report(model, res.config));
    if (!p->csv.empty()) {
      auto row = csv_stream();
      row << p->n << ',' << res.value;
      append_csv_row(p->csv, "n,value", row.str());
    }
    emit(common.out, dump(report), out);
  };
}

Action build_split_check(CLI::App& app, Common& common) {
  struct Params {
    std::string model = "semicircle";
    std::size_t n = 32;
    int count = 10;
  };
  auto p = std::make_shared<Params>();
  app.add_option("--model", p->model, "semicircle | circular-law");
  app.add_option("--n", p->n, "points per configuration")->check(CLI::PositiveNumber);
  app.add_option("--count", p->count, "number of random configurations")
      ->check(CLI::PositiveNumber);
  return [p, &common](std::ostream& out) {
    const EquilibriumModel model = model_by_name(p->model);
    auto csv = csv_stream();
    csv << "index,n,H,mean_field,zeta_term,log_correction,next_order_direct,"
           "next_order_potential_route,route_gap\n";
    for (int k = 0; k < p->count; ++k) {
      const Configuration config =
          sample_initial(model, p->n, splitmix64(common.seed + static_cast<std::uint64_t>(k)));
      const SplitReport rep = split(model, config);
      csv << k << ',' << p->n << ',' << rep.H << ',' << rep.mean_field << ',' << rep.zeta_term
          << ',' << rep.log_correction << ',' << rep.next_order_direct << ','
          << rep.next_order_potential_route << ',' << rep.route_gap << '\n';
    }
    emit(common.out, csv.str(), out);
  };
}

Action build_fit(CLI::App& app, Common& common) {
  struct Params {
    std::string model = "semicircle";
    std::string data;
    bool lower_order = false;
  };
  auto p = std::make_shared<Params>();
  app.add_option("--model", p->model, "semicircle | circular-law");
  app.add_option("--data", p->data, "CSV of n,value rows (as written by minimize --csv)")
      ->required();
  app.add_flag("--lower-order", p->lower_order, "add the next two expansion terms to the basis");
  return [p, &common](std::ostream& out) {
    const EquilibriumModel model = model_by_name(p->model);
    const auto rows = read_fit_csv(p->data);
    FitOptions opts;
    opts.lower_order_terms = p->lower_order;
    const FitResult fit = fit_expansion(model, rows, opts);
    Json report = envelope("fit", common,
                           {{"model", p->model}, {"data", p->data}, {"lower_order", p->lower_order}});
    report["kernel"] = to_json(model.spec);
    report["fit"] = to_json(fit);
    if (model.d == 1) {
      const double xi = renormalized_self_energy_1d(1, model.spec) / model.spec.c_ds;
      report["xi"] = xi;
      report["predicted_next_order"] = predicted_next_order_constant(model, xi);
    } else {
      report["xi"] = nullptr;
      report["predicted_next_order"] = nullptr;
    }
    emit(common.out, dump(report), out);
  };
}

Action build_lattice_scan(CLI::App& app, Common& common) {
  struct Params {
    double s = 1.0;
    int resolution = 64;
  };
  auto p = std::make_shared<Params>();
  app.add_option("--s", p->s, "Riesz exponent in [0, 2); 0 selects the log kernel");
  app.add_option("--resolution", p->resolution, "grid points per axis");
  return [p, &common](std::ostream& out) {
    const KernelSpec spec = planar_kernel(p->s);
    const ScanResult scan = scan_fundamental_domain(spec, p->resolution);
    auto csv = csv_stream();
    csv << "x,y,relative_W\n";
    for (const ScanCell& cell : scan.cells) {
      csv << cell.x << ',' << cell.y << ',' << cell.value << '\n';
    }
    if (!common.out.empty()) write_file_atomic(common.out, csv.str());
    Json report = envelope("lattice-scan", common, {{"s", p->s}, {"resolution", p->resolution}});
    report["kernel"] = to_json(spec);
    report["argmin"] = {{"x", scan.argmin.x}, {"y", scan.argmin.y}};
    report["min_value"] = scan.min_value;
    out << dump(report);
  };
}

Action build_zeta(CLI::App& app, Common&) {
  auto x = std::make_shared<double>(2.0);
  app.add_option("--x", *x, "argument")->required();
  return [x](std::ostream& out) {
    std::ostringstream os;
    os << std::setprecision(15) << specfun::riemann_zeta(*x) << '\n';
    out << os.str();
  };
}

Action build_green1d(CLI::App& app, Common& common) {
  struct Params {
    int N = 1;
    double alpha = 0.5;
    double x = 0.25;
  };
  auto p = std::make_shared<Params>();
  app.add_option("--N", p->N, "torus length")->check(CLI::PositiveNumber);
  app.add_option("--alpha", p->alpha, "order in (0, 1/2]");
  app.add_option("--x", p->x, "evaluation point");
  return [p, &common](std::ostream& out) {
    const KernelSpec spec = green_kernel(p->alpha);
    Json report = envelope("green1d", common, {{"N", p->N}, {"alpha", p->alpha}, {"x", p->x}});
    report["kernel"] = to_json(spec);
    const double integral = green_1d_integral(p->N, p->alpha, p->x);
    const double series = green_1d_series(p->N, p->alpha, p->x);
    report["integral"] = integral;
    report["series"] = series;
    report["difference"] = integral - series;
    report["closed_form"] = spec.is_log() ? Json(green_1d_log(p->N, p->x)) : Json(nullptr);
    emit(common.out, dump(report), out);
  };
}

Action build_periodic_w(CLI::App& app, Common& common) {
  struct Params {
    std::string points;
    double s = 0.0;
    std::optional<double> eta;
  };
  auto p = std::make_shared<Params>();
  app.add_option("--points", p->points, "file with one point per line")->required();
  app.add_option("--s", p->s, "Riesz exponent in [0, 1); 0 selects the log kernel");
  app.add_option("--eta", p->eta, "also report the energy truncated at eta");
  return [p, &common](std::ostream& out) {
    const KernelSpec spec = line_kernel(p->s);
    TorusConfig config;
    config.d = 1;
    config.points = read_points(p->points);
    config.length = static_cast<double>(config.points.size());
    Json cfg = {{"points", p->points}, {"s", p->s}};
    cfg["eta"] = p->eta ? Json(*p->eta) : Json(nullptr);
    Json report = envelope("periodic-w", common, cfg);
    report["kernel"] = to_json(spec);
    report["torus_length"] = config.length;
    report["energy"] = to_json(periodic_W(config, spec));
    if (p->eta) report["truncated"] = to_json(truncated_periodic_energy(config, spec, *p->eta));
    emit(common.out, dump(report), out);
  };
}

Action build_sample(CLI::App& app, Common& common) {
  struct Params {
    std::string model = "semicircle";
    std::size_t n = 32;
    double beta = 10.0;
    long steps = 200000;
    long burn_in = 20000;
    std::string summary;
  };
  auto p = std::make_shared<Params>();
  app.add_option("--model", p->model, "semicircle | circular-law");
  app.add_option("--n", p->n, "number of points")->check(CLI::PositiveNumber);
  app.add_option("--beta", p->beta, "inverse temperature");
  app.add_option("--steps", p->steps, "total Metropolis steps");
  app.add_option("--burn-in", p->burn_in, "steps used for tuning and discarded");
  app.add_option("--summary", p->summary, "JSON summary path (default: standard output)");
  return [p, &common](std::ostream& out) {
    const EquilibriumModel model = model_by_name(p->model);
    const SamplerStats stats = run_chain(model, p->n, p->beta, p->steps, p->burn_in, common.seed);
    auto csv = csv_stream();
    csv << "step,energy,next_order_scaled\n";
    for (const TraceRow& row : stats.energy_trace) {
      csv << row.step << ',' << row.energy << ',' << row.next_order_scaled << '\n';
    }
    if (!common.out.empty()) write_file_atomic(common.out, csv.str());
    Json report = envelope("sample", common,
                           {{"model", p->model},
                            {"n", p->n},
                            {"beta", p->beta},
                            {"steps", p->steps},
                            {"burn_in", p->burn_in}});
    report["kernel"] = to_json(model.spec);
    report["stats"] = to_json(stats);
    emit(p->summary, dump(report), out);
  };
}

const std::map<std::string, std::pair<std::string, Builder>>& commands() {
  static const std::map<std::string, std::pair<std::string, Builder>> table = {
      {"minimize", {"minimize H_n with multistart", build_minimize}},
      {"split-check", {"splitting identity on random configurations (CSV)", build_split_check}},
      {"fit", {"fit the large-n expansion to minimum energies", build_fit}},
      {"lattice-scan", {"relative lattice energy over the fundamental domain", build_lattice_scan}},
      {"zeta", {"Riemann zeta on the real line", build_zeta}},
      {"green1d", {"1D torus Green function by both evaluation paths", build_green1d}},
      {"periodic-w", {"renormalized energy of a 1D periodic configuration", build_periodic_w}},
      {"sample", {"Metropolis sampling of the Gibbs measure", build_sample}},
  };
  return table;
}

void usage(std::ostream& os) {
  os << "usage: riesz-lab <command> [options]\n\ncommands:\n";
  for (const auto& [name, entry] : commands()) {
    os << "  " << std::left << std::setw(14) << name << entry.first << '\n';
  }
  os << "\nrun 'riesz-lab <command> --help' for the options of a command\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  if (args.size() < 2) {
    usage(err);
    return kUsageError;
  }
  const std::string& name = args[1];
  if (name == "--help" || name == "-h" || name == "help") {
    usage(out);
    return 0;
  }
  const auto it = commands().find(name);
  if (it == commands().end()) {
    err << "riesz-lab: unknown command '" << name << "'\n";
    usage(err);
    return kUsageError;
  }

  CLI::App app{it->second.first, "riesz-lab " + name};
  Common common;
  add_common(app, common);
  const Action action = it->second.second(app, common);

  std::vector<const char*> argv;
  argv.push_back(args[0].c_str());
  for (std::size_t k = 2; k < args.size(); ++k) argv.push_back(args[k].c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "riesz-lab " << name << ": " << e.what() << '\n';
    return kUsageError;
  }

  set_thread_count(common.threads);
  try {
    action(out);
  } catch (const DomainError& e) {
    err << "riesz-lab " << name << ": " << e.what() << '\n';
    return kUsageError;
  } catch (const NumericError& e) {
    err << "riesz-lab " << name << ": " << e.what() << " (achieved error " << e.achieved_error()
        << ")\n";
    return kNumericError;
  } catch (const std::exception& e) {
    err << "riesz-lab " << name << ": " << e.what() << '\n';
    return kNumericError;
  }
  return 0;
}

}  // namespace riesz::cli

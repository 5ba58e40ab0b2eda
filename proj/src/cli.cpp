#include "ght/cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "ght/constants.hpp"
#include "ght/linfty.hpp"
#include "ght/quadrature.hpp"
#include "ght/spectral.hpp"
#include "ght/tensor_ops.hpp"

namespace ght::cli {

namespace {

using nlohmann::json;

std::string format_full(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

std::string format_short(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.6g", value);
  return buffer;
}

json vector_json(const DenseVector& v) {
  json out = json::array();
  for (double c : v.coords) out.push_back(c);
  return out;
}

int first_order(const RunConfig& config) {
  if (config.orders.empty()) throw InvalidParameter("no order given");
  return config.orders.front();
}

int first_dim(const RunConfig& config) {
  if (config.dims.empty()) throw InvalidParameter("no dim given");
  return config.dims.front();
}

double first_shift(const RunConfig& config) {
  if (config.shifts.empty()) throw InvalidParameter("no shift given");
  return config.shifts.front();
}

TensorSpec single_spec(const RunConfig& config) {
  return TensorSpec::finite(first_order(config), first_dim(config), first_shift(config));
}

json report_json(const BoundReport& report) {
  return json{{"bound_name", to_string(report.bound_name)},
              {"bound_value", report.bound_value},
              {"observed", report.observed},
              {"margin", report.margin},
              {"holds", report.holds}};
}

void append_note(std::string& notes, const std::string& addition) {
  if (addition.empty()) return;
  if (!notes.empty()) notes += "; ";
  notes += addition;
}

DenseVector sampled_input(Rng& rng, int n) {
  std::vector<double> coords(n);
  bool all_zero = true;
  do {
    for (double& v : coords) {
      v = rng.next_symmetric();
      if (v != 0.0) all_zero = false;
    }
  } while (all_zero);
  return DenseVector(std::move(coords));
}

// Bound verdicts for one (m, n, a), dispatched by regime: power methods
// for a > 0, the dense oracle at order 2 otherwise, and Rayleigh sampling
// as the only route left for a < 0 at higher even orders.
json bounds_payload(const TensorSpec& spec, const RunConfig& config,
                    Warnings& warnings) {
  json out;
  out["m"] = spec.m();
  out["n"] = spec.n();
  out["a"] = spec.a();
  std::string notes;
  std::vector<BoundReport> reports;

  if (spec.a() > 0.0) {
    out["method"] = "power";
    PowerOptions power_options;
    power_options.tol = config.tol;
    power_options.max_iter = config.max_iter;
    EigenEstimate h = h_spectral_radius(spec, power_options);
    ZOptions z_options;
    z_options.tol = config.tol;
    z_options.max_iter = config.max_iter;
    z_options.restarts = config.restarts;
    z_options.seed = config.seed;
    EigenEstimate z = z_spectral_radius(spec, z_options);
    if (!h.converged || !z.converged) {
      warnings.push_back("an eigenvalue iteration hit max_iter before converging");
    }
    out["h_value"] = h.value;
    out["h_residual"] = h.residual;
    out["h_iterations"] = h.iterations;
    out["h_converged"] = h.converged;
    out["z_value"] = z.value;
    out["z_residual"] = z.residual;
    out["z_iterations"] = z.iterations;
    out["z_converged"] = z.converged;
    BoundCheck h_check = check_h_bound(spec, h);
    BoundCheck z_check = check_z_bound(spec, z);
    append_note(notes, h_check.note);
    append_note(notes, z_check.note);
    reports.insert(reports.end(), h_check.reports.begin(), h_check.reports.end());
    reports.insert(reports.end(), z_check.reports.begin(), z_check.reports.end());
  } else if (spec.m() == 2) {
    out["method"] = "dense";
    std::vector<EigenEstimate> all = dense_matrix_eigen(spec);
    const EigenEstimate* extreme = &all.front();
    for (const EigenEstimate& candidate : all) {
      if (std::abs(candidate.value) > std::abs(extreme->value)) extreme = &candidate;
    }
    out["h_value"] = extreme->value;
    out["h_residual"] = extreme->residual;
    out["h_iterations"] = extreme->iterations;
    out["h_converged"] = extreme->converged;
    out["z_value"] = extreme->value;
    out["z_residual"] = extreme->residual;
    out["z_iterations"] = extreme->iterations;
    out["z_converged"] = extreme->converged;
    BoundCheck h_check = check_h_bound(spec, *extreme);
    BoundCheck z_check = check_z_bound(spec, *extreme);
    append_note(notes, h_check.note);
    append_note(notes, z_check.note);
    reports.insert(reports.end(), h_check.reports.begin(), h_check.reports.end());
    reports.insert(reports.end(), z_check.reports.begin(), z_check.reports.end());
  } else {
    out["method"] = "rayleigh-sampling";
    append_note(notes,
                "no eigensolver applies for a < 0 beyond order 2; the observed "
                "values are sampled Rayleigh suprema (lower evidence)");
    int samples = config.samples;
    if (samples < 1) throw InvalidParameter("sampling needs at least one sample");
    bool even = spec.m() % 2 == 0;
    double sup_m = 0.0;
    double sup_2 = 0.0;
    for (int trial = 0; trial < samples; ++trial) {
      Rng rng = Rng::stream(config.seed, static_cast<std::uint64_t>(trial));
      DenseVector x = sampled_input(rng, spec.n());
      if (even) sup_m = std::max(sup_m, rayleigh_m(spec, x));
      sup_2 = std::max(sup_2, rayleigh_2(spec, x));
    }
    if (even) {
      out["h_value"] = sup_m;
      EigenEstimate h_proxy;
      h_proxy.value = sup_m;
      BoundCheck h_check = check_h_bound(spec, h_proxy);
      append_note(notes, h_check.note);
      reports.insert(reports.end(), h_check.reports.begin(), h_check.reports.end());
    } else {
      out["h_value"] = nullptr;
      append_note(notes, "order is odd: the m-norm quotient is skipped");
    }
    out["z_value"] = sup_2;
    EigenEstimate z_proxy;
    z_proxy.value = sup_2;
    BoundCheck z_check = check_z_bound(spec, z_proxy);
    append_note(notes, z_check.note);
    reports.insert(reports.end(), z_check.reports.begin(), z_check.reports.end());
  }

  json report_array = json::array();
  for (const BoundReport& report : reports) report_array.push_back(report_json(report));
  out["reports"] = report_array;
  out["note"] = notes;
  return out;
}

json run_entry(const RunConfig& config, Warnings& warnings) {
  TensorSpec spec = single_spec(config);
  MultiIndex idx{std::vector<int>(config.index)};
  double value = entry(spec, idx, &warnings);
  json out;
  out["m"] = spec.m();
  out["n"] = spec.n();
  out["a"] = spec.a();
  out["index"] = config.index;
  out["value"] = value;
  return out;
}

DenseVector load_input(const RunConfig& config) {
  bool inline_given = !config.vector_inline.empty();
  bool file_given = !config.vector_file.empty();
  if (inline_given == file_given) {
    throw InvalidParameter("give the input vector either inline or as a file");
  }
  if (inline_given) return DenseVector(config.vector_inline);
  return parse_vector_file(config.vector_file);
}

json run_apply(const RunConfig& config, Warnings& warnings) {
  TensorSpec spec = single_spec(config);
  DenseVector x = load_input(config);
  ApplyResult result;
  if (config.apply_method == "naive") {
    result = apply_naive(spec, x);
  } else if (config.apply_method == "fast") {
    result = apply_fast(spec, x);
  } else {
    throw InvalidParameter("apply method must be naive or fast, got " +
                           config.apply_method);
  }
  warnings.insert(warnings.end(), result.warnings.begin(), result.warnings.end());
  json out;
  out["m"] = spec.m();
  out["n"] = spec.n();
  out["a"] = spec.a();
  out["method"] = to_string(result.method);
  out["vector"] = vector_json(result.vector);
  out["scalar"] = result.scalar;
  if (config.with_quadrature) {
    out["quadrature_scalar"] = quadrature_scalar(spec, x, config.quad_nodes);
  }
  return out;
}

json run_hspec(const RunConfig& config, Warnings& warnings) {
  TensorSpec spec = single_spec(config);
  PowerOptions options;
  options.tol = config.tol;
  options.max_iter = config.max_iter;
  EigenEstimate estimate = h_spectral_radius(spec, options);
  if (!estimate.converged) {
    warnings.push_back("power iteration hit max_iter before converging");
  }
  json out;
  out["m"] = spec.m();
  out["n"] = spec.n();
  out["a"] = spec.a();
  out["value"] = estimate.value;
  out["residual"] = estimate.residual;
  out["iterations"] = estimate.iterations;
  out["converged"] = estimate.converged;
  out["vector"] = vector_json(estimate.vector);
  return out;
}

json run_zspec(const RunConfig& config, Warnings& warnings) {
  TensorSpec spec = single_spec(config);
  ZOptions options;
  options.tol = config.tol;
  options.max_iter = config.max_iter;
  options.restarts = config.restarts;
  options.seed = config.seed;
  EigenEstimate estimate = z_spectral_radius(spec, options);
  if (!estimate.converged) {
    warnings.push_back("shifted power iteration hit max_iter before converging");
  }
  json out;
  out["m"] = spec.m();
  out["n"] = spec.n();
  out["a"] = spec.a();
  out["value"] = estimate.value;
  out["residual"] = estimate.residual;
  out["iterations"] = estimate.iterations;
  out["converged"] = estimate.converged;
  out["vector"] = vector_json(estimate.vector);
  return out;
}

json run_pdcheck(const RunConfig& config, Warnings&) {
  TensorSpec spec = single_spec(config);
  PdReport report = pd_check(spec, config.trials, config.seed);
  json out;
  out["m"] = spec.m();
  out["n"] = spec.n();
  out["a"] = spec.a();
  out["trials"] = report.trials;
  out["min_rayleigh"] = report.min_rayleigh;
  out["all_positive"] = report.all_positive;
  out["regime"] = to_string(report.regime);
  out["verdict"] = report.verdict;
  out["worst_input"] = vector_json(report.worst_input);
  return out;
}

json run_opnorm(const RunConfig& config, Warnings&) {
  int m = first_order(config);
  double a = first_shift(config);
  if (config.opnorm_mode != "F" && config.opnorm_mode != "T") {
    throw InvalidParameter("opnorm mode must be F or T, got " + config.opnorm_mode);
  }
  TruncatedOperatorSpec op_spec =
      config.opnorm_mode == "F"
          ? TruncatedOperatorSpec::f_mode(m, a, config.truncation)
          : TruncatedOperatorSpec::t_mode(m, a, config.truncation);
  TensorSpec constant_spec = TensorSpec::infinite(m, a);
  double constant = config.opnorm_mode == "F" ? constant_K(constant_spec)
                                              : constant_C(constant_spec);
  double estimate = estimate_operator_norm(op_spec, config.samples, config.seed);
  json out;
  out["m"] = m;
  out["a"] = a;
  out["mode"] = config.opnorm_mode;
  out["truncation"] = static_cast<std::uint64_t>(config.truncation);
  out["samples"] = config.samples;
  out["estimate"] = estimate;
  out["constant"] = constant;
  out["within_constant"] = estimate <= constant + 1e-9;
  return out;
}

json run_sweep(const RunConfig& config, Warnings& warnings) {
  if (config.orders.empty() || config.dims.empty() || config.shifts.empty()) {
    throw InvalidParameter("sweep ranges must be non-empty");
  }
  for (double a : config.shifts) {
    if (!validate_shift(a)) {
      std::ostringstream msg;
      msg << "sweep shift " << a << " violates the constraint a ∈ ℝ∖ℤ⁻";
      throw InvalidParameter(msg.str());
    }
  }
  if (config.sweep_mode != "bounds" && config.sweep_mode != "pdcheck") {
    throw InvalidParameter("sweep mode must be bounds or pdcheck, got " +
                           config.sweep_mode);
  }
  json rows = json::array();
  for (int m : config.orders) {
    for (int n : config.dims) {
      for (double a : config.shifts) {
        TensorSpec spec = TensorSpec::finite(m, n, a);
        if (config.sweep_mode == "bounds") {
          rows.push_back(bounds_payload(spec, config, warnings));
        } else {
          PdReport report = pd_check(spec, config.trials, config.seed);
          json row;
          row["m"] = m;
          row["n"] = n;
          row["a"] = a;
          row["trials"] = report.trials;
          row["min_rayleigh"] = report.min_rayleigh;
          row["all_positive"] = report.all_positive;
          row["regime"] = to_string(report.regime);
          row["verdict"] = report.verdict;
          rows.push_back(row);
        }
      }
    }
  }
  json out;
  out["mode"] = config.sweep_mode;
  out["rows"] = rows;
  return out;
}

// The ma-report is the primary row content; the a > 0 corollary value
// stands in when parity skipped the primary.
const json* pick_report(const json& row, const char* primary, const char* fallback) {
  const json& reports = row.at("reports");
  for (const json& report : reports) {
    if (report.at("bound_name") == primary) return &report;
  }
  for (const json& report : reports) {
    if (report.at("bound_name") == fallback) return &report;
  }
  return nullptr;
}

void bounds_row_csv(std::ostringstream& out, const json& row) {
  out << row.at("m").get<long long>() << ',' << row.at("n").get<long long>() << ','
      << format_full(row.at("a").get<double>()) << ',';
  const json* h = pick_report(row, "h_bound_ma", "h_bound_cor35");
  const json* z = pick_report(row, "z_bound_ma", "z_bound_cor35");
  for (const json* report : {h, z}) {
    if (report == nullptr) {
      out << ",,,,";
      continue;
    }
    out << format_full(report->at("observed").get<double>()) << ','
        << format_full(report->at("bound_value").get<double>()) << ','
        << format_full(report->at("margin").get<double>()) << ','
        << (report->at("holds").get<bool>() ? "true" : "false") << ',';
  }
  out << row.at("method").get<std::string>() << '\n';
}

constexpr const char* kBoundsHeader =
    "m,n,a,h_observed,h_bound,h_margin,h_holds,z_observed,z_bound,z_margin,"
    "z_holds,method";

constexpr const char* kPdHeader =
    "m,n,a,trials,min_rayleigh,all_positive,regime,verdict";

void pd_row_csv(std::ostringstream& out, const json& row) {
  out << row.at("m").get<long long>() << ',' << row.at("n").get<long long>() << ','
      << format_full(row.at("a").get<double>()) << ','
      << row.at("trials").get<long long>() << ','
      << format_full(row.at("min_rayleigh").get<double>()) << ','
      << (row.at("all_positive").get<bool>() ? "true" : "false") << ','
      << row.at("regime").get<std::string>() << ','
      << row.at("verdict").get<std::string>() << '\n';
}

std::string csv_scalar(const json& value) {
  if (value.is_boolean()) return value.get<bool>() ? "true" : "false";
  if (value.is_number_float()) return format_full(value.get<double>());
  if (value.is_number()) return value.dump();
  if (value.is_string()) return value.get<std::string>();
  if (value.is_null()) return "";
  // Arrays collapse into one semicolon-joined cell.
  if (value.is_array()) {
    std::string joined;
    for (const json& element : value) {
      if (!joined.empty()) joined += ';';
      joined += csv_scalar(element);
    }
    return joined;
  }
  return value.dump();
}

std::string serialize_csv(const ResultRecord& record) {
  std::ostringstream out;
  const json& payload = record.payload;
  if (record.config.command == Command::sweep) {
    bool bounds_mode = payload.at("mode") == "bounds";
    out << (bounds_mode ? kBoundsHeader : kPdHeader) << '\n';
    for (const json& row : payload.at("rows")) {
      if (bounds_mode) {
        bounds_row_csv(out, row);
      } else {
        pd_row_csv(out, row);
      }
    }
    return out.str();
  }
  if (record.config.command == Command::bounds) {
    out << kBoundsHeader << '\n';
    bounds_row_csv(out, payload);
    return out.str();
  }
  // Generic single-row table over the payload keys (alphabetical).
  bool first = true;
  for (auto it = payload.begin(); it != payload.end(); ++it) {
    if (!first) out << ',';
    out << it.key();
    first = false;
  }
  out << '\n';
  first = true;
  for (auto it = payload.begin(); it != payload.end(); ++it) {
    if (!first) out << ',';
    out << csv_scalar(it.value());
    first = false;
  }
  out << '\n';
  return out.str();
}

void human_reports(std::ostringstream& out, const json& payload) {
  for (const json& report : payload.at("reports")) {
    out << "  " << report.at("bound_name").get<std::string>() << ": observed "
        << format_short(report.at("observed").get<double>()) << " <= bound "
        << format_short(report.at("bound_value").get<double>()) << " (margin "
        << format_short(report.at("margin").get<double>()) << ") "
        << (report.at("holds").get<bool>() ? "holds" : "VIOLATED") << '\n';
  }
  std::string note = payload.value("note", std::string{});
  if (!note.empty()) out << "  note: " << note << '\n';
}

std::string serialize_human(const ResultRecord& record) {
  std::ostringstream out;
  const json& payload = record.payload;
  switch (record.config.command) {
    case Command::entry: {
      out << "entry(m=" << payload.at("m") << ", n=" << payload.at("n")
          << ", a=" << format_short(payload.at("a").get<double>()) << ", index=";
      const json& index = payload.at("index");
      for (std::size_t i = 0; i < index.size(); ++i) {
        out << (i == 0 ? "" : ",") << index[i].get<long long>();
      }
      out << ") = " << format_full(payload.at("value").get<double>()) << '\n';
      break;
    }
    case Command::apply: {
      out << "apply m=" << payload.at("m") << " n=" << payload.at("n")
          << " a=" << format_short(payload.at("a").get<double>()) << " method="
          << payload.at("method").get<std::string>() << '\n';
      const json& vector = payload.at("vector");
      for (std::size_t i = 0; i < vector.size(); ++i) {
        out << "  [" << (i + 1) << "] " << format_full(vector[i].get<double>()) << '\n';
      }
      out << "scalar = " << format_full(payload.at("scalar").get<double>()) << '\n';
      if (payload.contains("quadrature_scalar")) {
        out << "quadrature scalar = "
            << format_full(payload.at("quadrature_scalar").get<double>()) << '\n';
      }
      break;
    }
    case Command::hspec:
    case Command::zspec: {
      out << (record.config.command == Command::hspec ? "h" : "z")
          << "-eigenvalue estimate m=" << payload.at("m") << " n=" << payload.at("n")
          << " a=" << format_short(payload.at("a").get<double>()) << '\n'
          << "value = " << format_full(payload.at("value").get<double>())
          << " residual = " << format_short(payload.at("residual").get<double>())
          << " iterations = " << payload.at("iterations")
          << (payload.at("converged").get<bool>() ? " (converged)" : " (NOT converged)")
          << '\n';
      break;
    }
    case Command::bounds: {
      out << "bounds m=" << payload.at("m") << " n=" << payload.at("n")
          << " a=" << format_short(payload.at("a").get<double>()) << " via "
          << payload.at("method").get<std::string>() << '\n';
      human_reports(out, payload);
      break;
    }
    case Command::pdcheck: {
      out << "pd check m=" << payload.at("m") << " n=" << payload.at("n")
          << " a=" << format_short(payload.at("a").get<double>()) << " ("
          << payload.at("regime").get<std::string>() << ")\n"
          << "trials = " << payload.at("trials") << ", min Rayleigh = "
          << format_full(payload.at("min_rayleigh").get<double>()) << ", verdict: "
          << payload.at("verdict").get<std::string>() << '\n';
      break;
    }
    case Command::opnorm: {
      out << "operator norm mode " << payload.at("mode").get<std::string>()
          << " m=" << payload.at("m")
          << " a=" << format_short(payload.at("a").get<double>()) << '\n'
          << "estimate " << format_full(payload.at("estimate").get<double>())
          << " <= constant " << format_full(payload.at("constant").get<double>())
          << (payload.at("within_constant").get<bool>() ? " (within)" : " (EXCEEDED)")
          << '\n';
      break;
    }
    case Command::sweep: {
      bool bounds_mode = payload.at("mode") == "bounds";
      out << (bounds_mode ? kBoundsHeader : kPdHeader) << '\n';
      for (const json& row : payload.at("rows")) {
        if (bounds_mode) {
          bounds_row_csv(out, row);
        } else {
          pd_row_csv(out, row);
        }
      }
      break;
    }
  }
  for (const std::string& warning : record.warnings) {
    out << "warning: " << warning << '\n';
  }
  return out.str();
}

}  // namespace

ResultRecord run(const RunConfig& config) {
  auto started = std::chrono::steady_clock::now();
  ResultRecord record;
  record.config = config;
  switch (config.command) {
    case Command::entry:
      record.payload = run_entry(config, record.warnings);
      break;
    case Command::apply:
      record.payload = run_apply(config, record.warnings);
      break;
    case Command::hspec:
      record.payload = run_hspec(config, record.warnings);
      break;
    case Command::zspec:
      record.payload = run_zspec(config, record.warnings);
      break;
    case Command::bounds: {
      TensorSpec spec = single_spec(config);
      record.payload = bounds_payload(spec, config, record.warnings);
      break;
    }
    case Command::pdcheck:
      record.payload = run_pdcheck(config, record.warnings);
      break;
    case Command::opnorm:
      record.payload = run_opnorm(config, record.warnings);
      break;
    case Command::sweep:
      record.payload = run_sweep(config, record.warnings);
      break;
  }
  auto finished = std::chrono::steady_clock::now();
  record.wall_time_ms =
      std::chrono::duration<double, std::milli>(finished - started).count();
  return record;
}

int exit_code(const ResultRecord& record) {
  auto any_violation = [](const json& row) {
    for (const json& report : row.at("reports")) {
      if (!report.at("holds").get<bool>()) return true;
    }
    return false;
  };
  if (record.config.command == Command::bounds) {
    return any_violation(record.payload) ? 1 : 0;
  }
  if (record.config.command == Command::sweep &&
      record.payload.at("mode") == "bounds") {
    for (const json& row : record.payload.at("rows")) {
      if (any_violation(row)) return 1;
    }
  }
  return 0;
}

std::string serialize(const ResultRecord& record, OutputFormat format) {
  switch (format) {
    case OutputFormat::json: return to_json(record).dump(2) + "\n";
    case OutputFormat::csv: return serialize_csv(record);
    case OutputFormat::human: return serialize_human(record);
  }
  throw InvalidParameter("unknown output format");
}

json to_json(const ResultRecord& record) {
  const RunConfig& config = record.config;
  json config_json{{"command", to_string(config.command)},
                   {"orders", config.orders},
                   {"dims", config.dims},
                   {"shifts", config.shifts},
                   {"index", config.index},
                   {"vector_inline", config.vector_inline},
                   {"vector_file", config.vector_file},
                   {"apply_method", config.apply_method},
                   {"with_quadrature", config.with_quadrature},
                   {"opnorm_mode", config.opnorm_mode},
                   {"tol", config.tol},
                   {"max_iter", config.max_iter},
                   {"restarts", config.restarts},
                   {"trials", config.trials},
                   {"samples", config.samples},
                   {"truncation", static_cast<std::uint64_t>(config.truncation)},
                   {"quad_nodes", config.quad_nodes},
                   {"seed", config.seed},
                   {"sweep_mode", config.sweep_mode},
                   {"format", to_string(config.format)}};
  return json{{"config", std::move(config_json)},
              {"payload", record.payload},
              {"warnings", record.warnings},
              {"wall_time_ms", record.wall_time_ms}};
}

namespace {

Command command_from_string(const std::string& name) {
  if (name == "entry") return Command::entry;
  if (name == "apply") return Command::apply;
  if (name == "hspec") return Command::hspec;
  if (name == "zspec") return Command::zspec;
  if (name == "bounds") return Command::bounds;
  if (name == "pdcheck") return Command::pdcheck;
  if (name == "opnorm") return Command::opnorm;
  if (name == "sweep") return Command::sweep;
  throw ParseError("unknown command: " + name);
}

OutputFormat format_from_string(const std::string& name) {
  if (name == "json") return OutputFormat::json;
  if (name == "csv") return OutputFormat::csv;
  if (name == "human") return OutputFormat::human;
  throw ParseError("unknown output format: " + name);
}

}  // namespace

ResultRecord record_from_json(const json& j) {
  try {
    ResultRecord record;
    const json& c = j.at("config");
    record.config.command = command_from_string(c.at("command").get<std::string>());
    record.config.orders = c.at("orders").get<std::vector<int>>();
    record.config.dims = c.at("dims").get<std::vector<int>>();
    record.config.shifts = c.at("shifts").get<std::vector<double>>();
    record.config.index = c.at("index").get<std::vector<int>>();
    record.config.vector_inline = c.at("vector_inline").get<std::vector<double>>();
    record.config.vector_file = c.at("vector_file").get<std::string>();
    record.config.apply_method = c.at("apply_method").get<std::string>();
    record.config.with_quadrature = c.at("with_quadrature").get<bool>();
    record.config.opnorm_mode = c.at("opnorm_mode").get<std::string>();
    record.config.tol = c.at("tol").get<double>();
    record.config.max_iter = c.at("max_iter").get<int>();
    record.config.restarts = c.at("restarts").get<int>();
    record.config.trials = c.at("trials").get<int>();
    record.config.samples = c.at("samples").get<int>();
    record.config.truncation = c.at("truncation").get<std::uint64_t>();
    record.config.quad_nodes = c.at("quad_nodes").get<int>();
    record.config.seed = c.at("seed").get<std::uint64_t>();
    record.config.sweep_mode = c.at("sweep_mode").get<std::string>();
    record.config.format = format_from_string(c.at("format").get<std::string>());
    record.payload = j.at("payload");
    record.warnings = j.at("warnings").get<std::vector<std::string>>();
    record.wall_time_ms = j.at("wall_time_ms").get<double>();
    return record;
  } catch (const json::exception& e) {
    throw ParseError(std::string{"malformed result record: "} + e.what());
  }
}

DenseVector parse_vector_file(const std::string& path) {
  std::ifstream input(path);
  if (!input) throw ParseError("cannot open vector file: " + path);
  std::vector<double> values;
  std::string line;
  int line_number = 0;
  while (std::getline(input, line)) {
    ++line_number;
    std::string_view view{line};
    if (std::size_t hash = view.find('#'); hash != std::string_view::npos) {
      view = view.substr(0, hash);
    }
    std::string cleaned{view};
    for (char& c : cleaned) {
      if (c == ',' || c == '\t' || c == '\r') c = ' ';
    }
    std::istringstream tokens(cleaned);
    std::string token;
    while (tokens >> token) {
      char* end = nullptr;
      double value = std::strtod(token.c_str(), &end);
      if (end != token.c_str() + token.size() || !std::isfinite(value)) {
        std::ostringstream msg;
        msg << "parse error at line " << line_number << ": bad number '" << token << "'";
        throw ParseError(msg.str());
      }
      values.push_back(value);
    }
  }
  if (values.empty()) throw ParseError("vector file has no numbers: " + path);
  return DenseVector(std::move(values));
}

std::vector<int> parse_int_list(const std::string& text) {
  if (!text.empty() && text.back() == ',') {
    throw ParseError("trailing comma in list: " + text);
  }
  auto parse_one = [](const std::string& token) {
    char* end = nullptr;
    long value = std::strtol(token.c_str(), &end, 10);
    if (token.empty() || end != token.c_str() + token.size()) {
      throw ParseError("bad integer '" + token + "'");
    }
    return static_cast<int>(value);
  };
  if (std::size_t dots = text.find(".."); dots != std::string::npos) {
    int low = parse_one(text.substr(0, dots));
    int high = parse_one(text.substr(dots + 2));
    if (low > high) throw ParseError("empty range " + text);
    std::vector<int> out;
    for (int v = low; v <= high; ++v) out.push_back(v);
    return out;
  }
  std::vector<int> out;
  std::istringstream stream(text);
  std::string token;
  while (std::getline(stream, token, ',')) out.push_back(parse_one(token));
  if (out.empty()) throw ParseError("empty integer list");
  return out;
}

std::vector<double> parse_real_list(const std::string& text) {
  if (!text.empty() && text.back() == ',') {
    throw ParseError("trailing comma in list: " + text);
  }
  std::vector<double> out;
  std::istringstream stream(text);
  std::string token;
  while (std::getline(stream, token, ',')) {
    char* end = nullptr;
    double value = std::strtod(token.c_str(), &end);
    if (token.empty() || end != token.c_str() + token.size() || !std::isfinite(value)) {
      throw ParseError("bad number '" + token + "'");
    }
    out.push_back(value);
  }
  if (out.empty()) throw ParseError("empty number list");
  return out;
}

std::optional<std::uint64_t> seed_from_env() {
  const char* raw = std::getenv("GHT_SEED");
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  char* end = nullptr;
  unsigned long long value = std::strtoull(raw, &end, 10);
  if (*end != '\0') throw ParseError("GHT_SEED must be a decimal unsigned integer");
  return static_cast<std::uint64_t>(value);
}

const char* to_string(Command command) {
  switch (command) {
    case Command::entry: return "entry";
    case Command::apply: return "apply";
    case Command::hspec: return "hspec";
    case Command::zspec: return "zspec";
    case Command::bounds: return "bounds";
    case Command::pdcheck: return "pdcheck";
    case Command::opnorm: return "opnorm";
    case Command::sweep: return "sweep";
  }
  return "unknown";
}

const char* to_string(OutputFormat format) {
  switch (format) {
    case OutputFormat::json: return "json";
    case OutputFormat::csv: return "csv";
    case OutputFormat::human: return "human";
  }
  return "unknown";
}

}  // namespace ght::cli

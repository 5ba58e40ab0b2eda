// Command line front end; all numerics live in the ght library.

#include <cstdint>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "ght/cli.hpp"

namespace {

struct RawArgs {
  std::string orders = "2";
  std::string dims = "3";
  std::string shifts = "1";
  std::string index;
  std::string vector_inline;
  std::string format = "human";
};

ght::cli::OutputFormat format_from_name(const std::string& name) {
  if (name == "json") return ght::cli::OutputFormat::json;
  if (name == "csv") return ght::cli::OutputFormat::csv;
  return ght::cli::OutputFormat::human;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"generalized Hilbert tensor toolkit"};
  app.require_subcommand(1);
  app.set_config("--config", "", "read options from an ini file");

  RawArgs raw;
  ght::cli::RunConfig config;
  std::uint64_t seed_value = ght::kDefaultSeed;

  auto* format_opt = app.add_option("--format", raw.format, "output format")
                         ->check(CLI::IsMember({"json", "csv", "human"}))
                         ->capture_default_str();
  auto* seed_opt = app.add_option("--seed", seed_value, "rng seed")
                       ->capture_default_str();
  (void)format_opt;

  auto add_spec_options = [&raw](CLI::App* sub) {
    sub->fallthrough();
    sub->add_option("--m", raw.orders, "tensor order (value, list, or lo..hi)")
        ->capture_default_str();
    sub->add_option("--n", raw.dims, "dimension (value, list, or lo..hi)")
        ->capture_default_str();
    sub->add_option("--a", raw.shifts, "shift (value or list)")
        ->capture_default_str();
  };

  auto* entry_cmd = app.add_subcommand("entry", "print one tensor entry");
  add_spec_options(entry_cmd);
  entry_cmd->add_option("--idx", raw.index, "1-based multi-index i1,...,im")
      ->required();

  auto* apply_cmd = app.add_subcommand("apply", "apply the tensor to a vector");
  add_spec_options(apply_cmd);
  apply_cmd->add_option("--x", raw.vector_inline, "input vector x1,...,xn");
  apply_cmd->add_option("--file", config.vector_file, "file with the input vector");
  apply_cmd->add_option("--method", config.apply_method, "naive or fast")
      ->capture_default_str();
  apply_cmd->add_flag("--with-quadrature", config.with_quadrature,
                      "also report the integral form of the scalar");
  apply_cmd->add_option("--nodes", config.quad_nodes,
                        "fixed quadrature node count (0 = automatic)")
      ->capture_default_str();

  auto* hspec_cmd = app.add_subcommand("hspec", "largest H-eigenvalue");
  add_spec_options(hspec_cmd);
  hspec_cmd->add_option("--tol", config.tol, "convergence tolerance")
      ->capture_default_str();
  hspec_cmd->add_option("--max-iter", config.max_iter, "iteration cap")
      ->capture_default_str();

  auto* zspec_cmd = app.add_subcommand("zspec", "extreme Z-eigenvalue");
  add_spec_options(zspec_cmd);
  zspec_cmd->add_option("--tol", config.tol, "convergence tolerance")
      ->capture_default_str();
  zspec_cmd->add_option("--max-iter", config.max_iter, "iteration cap")
      ->capture_default_str();
  zspec_cmd->add_option("--restarts", config.restarts, "restart count")
      ->capture_default_str();

  auto* bounds_cmd = app.add_subcommand("bounds", "check eigenvalue bounds");
  add_spec_options(bounds_cmd);
  bounds_cmd->add_option("--tol", config.tol, "convergence tolerance")
      ->capture_default_str();
  bounds_cmd->add_option("--max-iter", config.max_iter, "iteration cap")
      ->capture_default_str();
  bounds_cmd->add_option("--restarts", config.restarts, "restart count")
      ->capture_default_str();
  bounds_cmd->add_option("--samples", config.samples,
                         "sample count for the Rayleigh fallback")
      ->capture_default_str();

  auto* pdcheck_cmd = app.add_subcommand("pdcheck", "positive definiteness probe");
  add_spec_options(pdcheck_cmd);
  pdcheck_cmd->add_option("--trials", config.trials, "random trial count")
      ->capture_default_str();

  auto* opnorm_cmd =
      app.add_subcommand("opnorm", "truncated infinite operator norm estimate");
  add_spec_options(opnorm_cmd);
  opnorm_cmd->add_option("--mode", config.opnorm_mode, "operator kind, F or T")
      ->check(CLI::IsMember({"F", "T"}))
      ->capture_default_str();
  opnorm_cmd->add_option("--samples", config.samples, "random sample count")
      ->capture_default_str();
  opnorm_cmd
      ->add_option("--truncation", config.truncation, "truncation length N")
      ->capture_default_str();

  auto* sweep_cmd = app.add_subcommand("sweep", "run over parameter grids");
  add_spec_options(sweep_cmd);
  sweep_cmd->add_option("--mode", config.sweep_mode, "bounds or pdcheck")
      ->check(CLI::IsMember({"bounds", "pdcheck"}))
      ->capture_default_str();
  sweep_cmd->add_option("--trials", config.trials, "trials per pdcheck cell")
      ->capture_default_str();
  sweep_cmd->add_option("--tol", config.tol, "convergence tolerance")
      ->capture_default_str();
  sweep_cmd->add_option("--max-iter", config.max_iter, "iteration cap")
      ->capture_default_str();
  sweep_cmd->add_option("--restarts", config.restarts, "restart count")
      ->capture_default_str();
  sweep_cmd->add_option("--samples", config.samples,
                        "sample count for the Rayleigh fallback")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::FileError& e) {
    app.exit(e);
    return 3;
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (entry_cmd->parsed()) config.command = ght::cli::Command::entry;
    if (apply_cmd->parsed()) config.command = ght::cli::Command::apply;
    if (hspec_cmd->parsed()) config.command = ght::cli::Command::hspec;
    if (zspec_cmd->parsed()) config.command = ght::cli::Command::zspec;
    if (bounds_cmd->parsed()) config.command = ght::cli::Command::bounds;
    if (pdcheck_cmd->parsed()) config.command = ght::cli::Command::pdcheck;
    if (opnorm_cmd->parsed()) config.command = ght::cli::Command::opnorm;
    if (sweep_cmd->parsed()) config.command = ght::cli::Command::sweep;

    config.orders = ght::cli::parse_int_list(raw.orders);
    config.dims = ght::cli::parse_int_list(raw.dims);
    config.shifts = ght::cli::parse_real_list(raw.shifts);
    if (!raw.index.empty()) config.index = ght::cli::parse_int_list(raw.index);
    if (!raw.vector_inline.empty()) {
      config.vector_inline = ght::cli::parse_real_list(raw.vector_inline);
    }
    config.format = format_from_name(raw.format);
    if (seed_opt->count() == 0) {
      if (auto env_seed = ght::cli::seed_from_env()) seed_value = *env_seed;
    }
    config.seed = seed_value;

    ght::cli::ResultRecord record = ght::cli::run(config);
    std::cout << ght::cli::serialize(record, config.format);
    return ght::cli::exit_code(record);
  } catch (const ght::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const ght::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "ght/dense_vector.hpp"
#include "ght/summation.hpp"

namespace ght::cli {

enum class Command { entry, apply, hspec, zspec, bounds, pdcheck, opnorm, sweep };
enum class OutputFormat { json, csv, human };

// Everything one invocation needs; sweep mode reads the list fields, the
// other commands use the first element of each.
struct RunConfig {
  Command command = Command::entry;
  std::vector<int> orders{2};
  std::vector<int> dims{3};
  std::vector<double> shifts{1.0};
  std::vector<int> index;            // entry
  std::vector<double> vector_inline; // apply
  std::string vector_file;           // apply, alternative source
  std::string apply_method = "fast"; // naive | fast
  bool with_quadrature = false;      // apply: also report the integral scalar
  std::string opnorm_mode = "T";     // F | T
  double tol = 1e-10;
  int max_iter = 10000;
  int restarts = 8;
  int trials = 1000;
  int samples = 1000;
  std::uint64_t truncation = 10000;
  int quad_nodes = 0;                // 0 = automatic policy
  std::uint64_t seed = kDefaultSeed;
  std::string sweep_mode = "bounds"; // bounds | pdcheck
  OutputFormat format = OutputFormat::human;

  bool operator==(const RunConfig&) const = default;
};

struct ResultRecord {
  RunConfig config;
  nlohmann::json payload;
  std::vector<std::string> warnings;
  double wall_time_ms = 0.0;

  bool operator==(const ResultRecord& other) const {
    return config == other.config && payload == other.payload &&
           warnings == other.warnings;  // wall time is not identity
  }
};

// Dispatches to the library. Throws the library error types; the binary
// maps them to exit codes (2 validation, 3 file/parse).
ResultRecord run(const RunConfig& config);

// 0 on success, 1 when a bounds-mode report fails to hold.
int exit_code(const ResultRecord& record);

std::string serialize(const ResultRecord& record, OutputFormat format);

// JSON round-trip (parse(serialize(r)) == r, wall time aside).
nlohmann::json to_json(const ResultRecord& record);
ResultRecord record_from_json(const nlohmann::json& j);

// One real per line, or a single comma-separated line; blank lines and
// '#' comments ignored. Throws ParseError with the offending line number.
DenseVector parse_vector_file(const std::string& path);

// "2,4,8" or "2..8"
std::vector<int> parse_int_list(const std::string& text);
// "0.5,1,2"
std::vector<double> parse_real_list(const std::string& text);

// GHT_SEED, when set, overrides the default seed.
std::optional<std::uint64_t> seed_from_env();

const char* to_string(Command command);
const char* to_string(OutputFormat format);

}  // namespace ght::cli

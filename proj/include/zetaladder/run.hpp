#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "zetaladder/error.hpp"
#include "zetaladder/laws.hpp"

namespace zl {

enum class Command { z, integral, ladder, verify, sweep, residual, constants };
enum class OutFormat { csv, json };
enum class Grid { log, lin };

const char* to_string(Command c) noexcept;
const char* to_string(OutFormat f) noexcept;
const char* to_string(Grid g) noexcept;

struct RunConfig {
  Command command = Command::constants;
  double T = 1e6;
  int k = 1;
  int r = 1;
  std::optional<LawId> law;
  double tol = 0.0;  // 0 selects the default per-call tolerance
  double c0 = 0.0;
  double a_exp = 1.0 / 3.0;
  OutFormat out = OutFormat::csv;
  std::string cache_path;  // empty: no persistent cache
  double from = 0.0;       // integral
  double to = 0.0;
  double t_start = 1e4;  // sweep
  double t_end = 1e6;
  int points = 5;
  Grid grid = Grid::log;
  unsigned threads = 1;
};

/// Throws UsageError naming the first invalid field.
void validate(const RunConfig& cfg);

/// JSON object with every field, keys sorted.
std::string config_to_json(const RunConfig& cfg);
/// Inverse of config_to_json; missing keys keep their defaults. Throws
/// UsageError on unknown keys or ill-typed values.
RunConfig config_from_json(std::string_view json);

/// Heights visited by a sweep, endpoints exact.
std::vector<double> sweep_grid(double start, double end, int points, Grid grid);

using Cell = std::variant<double, std::int64_t, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

/// `# config: {...}` line, header, one line per row; reals with 17
/// significant digits.
std::string format_csv(const RunConfig& cfg, const Table& t);
/// {"config": {...}, "rows": [{column: value, ...}, ...]}
std::string format_json(const RunConfig& cfg, const Table& t);

Table law_table(const std::vector<LawReport>& reports);

struct RunOutput {
  int exit_status = 0;
  std::string document;  // empty on failure
  std::string error;     // message on failure
  std::int64_t new_panels = 0;
};

/// Exit status for a failure category; 0 is success.
int exit_status_for(ErrorCode code) noexcept;

/// Executes a validated config. Loads and, when new values were computed,
/// rewrites the cache file while holding an exclusive lock on
/// `<cache>.lock`. Never throws.
RunOutput run(const RunConfig& cfg);

}  // namespace zl

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "json.hpp"

#include "zetaladder/error.hpp"
#include "zetaladder/run.hpp"

namespace zl {
namespace {

using nlohmann::json;

template <class E, std::size_t N>
std::optional<E> lookup(const std::array<std::pair<E, const char*>, N>& table, std::string_view s) {
  for (const auto& [e, name] : table)
    if (s == name) return e;
  return std::nullopt;
}

template <class E, std::size_t N>
const char* name_of(const std::array<std::pair<E, const char*>, N>& table, E e) {
  for (const auto& [v, name] : table)
    if (v == e) return name;
  return "unknown";
}

constexpr std::array<std::pair<Command, const char*>, 7> kCommands = {{
    {Command::z, "z"},
    {Command::integral, "integral"},
    {Command::ladder, "ladder"},
    {Command::verify, "verify"},
    {Command::sweep, "sweep"},
    {Command::residual, "residual"},
    {Command::constants, "constants"},
}};
constexpr std::array<std::pair<OutFormat, const char*>, 2> kFormats = {
    {{OutFormat::csv, "csv"}, {OutFormat::json, "json"}}};
constexpr std::array<std::pair<Grid, const char*>, 2> kGrids = {
    {{Grid::log, "log"}, {Grid::lin, "lin"}}};

void require(bool ok, const std::string& what) {
  if (!ok) throw UsageError("invalid config: " + what);
}

bool finite(double x) { return std::isfinite(x); }

}  // namespace

const char* to_string(Command c) noexcept { return name_of(kCommands, c); }
const char* to_string(OutFormat f) noexcept { return name_of(kFormats, f); }
const char* to_string(Grid g) noexcept { return name_of(kGrids, g); }

void validate(const RunConfig& c) {
  require(finite(c.T) && c.T > 0.0, "T must be positive and finite");
  require(c.k >= 1 && c.k <= kMaxSequenceLength, "k must lie in [1, 8]");
  require(c.r >= 1 && c.r <= c.k, "r must lie in [1, k]");
  require(finite(c.tol) && c.tol >= 0.0, "tol must be nonnegative (0 selects the default)");
  require(finite(c.c0), "c0 must be finite");
  require(c.a_exp >= 0.25 && c.a_exp <= 1.0 / 3.0, "a_exp must lie in [1/4, 1/3]");
  require(finite(c.from) && finite(c.to) && c.from >= 0.0 && c.from <= c.to,
          "integral bounds need 0 <= from <= to");
  require(finite(c.t_start) && finite(c.t_end) && c.t_start > 0.0 && c.t_start <= c.t_end,
          "sweep needs 0 < T-start <= T-end");
  require(c.points >= 1 && c.points <= 10000, "points must lie in [1, 10000]");
  require(c.threads >= 1 && c.threads <= 256, "threads must lie in [1, 256]");
  if (c.command == Command::verify || c.command == Command::sweep)
    require(c.law.has_value(), "--law is required for verify and sweep");
}

std::string config_to_json(const RunConfig& c) {
  json j;
  j["command"] = to_string(c.command);
  j["T"] = c.T;
  j["k"] = c.k;
  j["r"] = c.r;
  j["law"] = c.law ? json(to_string(*c.law)) : json(nullptr);
  j["tol"] = c.tol;
  j["c0"] = c.c0;
  j["a_exp"] = c.a_exp;
  j["out"] = to_string(c.out);
  j["cache"] = c.cache_path;
  j["from"] = c.from;
  j["to"] = c.to;
  j["T_start"] = c.t_start;
  j["T_end"] = c.t_end;
  j["points"] = c.points;
  j["grid"] = to_string(c.grid);
  j["threads"] = c.threads;
  return j.dump();
}

RunConfig config_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw UsageError(std::string("config is not valid JSON: ") + e.what());
  }
  require(j.is_object(), "config must be a JSON object");
  RunConfig c;
  auto number = [](const json& v, const std::string& key) {
    require(v.is_number(), key + " must be a number");
    return v.get<double>();
  };
  auto integer = [](const json& v, const std::string& key) {
    require(v.is_number_integer(), key + " must be an integer");
    return v.get<long long>();
  };
  auto string = [](const json& v, const std::string& key) {
    require(v.is_string(), key + " must be a string");
    return v.get<std::string>();
  };
  for (const auto& [key, v] : j.items()) {
    if (key == "command") {
      const auto cmd = lookup(kCommands, string(v, key));
      require(cmd.has_value(), "unknown command '" + v.get<std::string>() + "'");
      c.command = *cmd;
    } else if (key == "T") {
      c.T = number(v, key);
    } else if (key == "k") {
      c.k = static_cast<int>(std::clamp(integer(v, key), -1LL, 1000LL));
    } else if (key == "r") {
      c.r = static_cast<int>(std::clamp(integer(v, key), -1LL, 1000LL));
    } else if (key == "law") {
      if (v.is_null()) {
        c.law.reset();
      } else {
        const auto law = parse_law_id(string(v, key));
        require(law.has_value(), "unknown law '" + v.get<std::string>() + "'");
        c.law = law;
      }
    } else if (key == "tol") {
      c.tol = number(v, key);
    } else if (key == "c0") {
      c.c0 = number(v, key);
    } else if (key == "a_exp") {
      c.a_exp = number(v, key);
    } else if (key == "out") {
      const auto f = lookup(kFormats, string(v, key));
      require(f.has_value(), "out must be csv or json");
      c.out = *f;
    } else if (key == "cache") {
      c.cache_path = string(v, key);
    } else if (key == "from") {
      c.from = number(v, key);
    } else if (key == "to") {
      c.to = number(v, key);
    } else if (key == "T_start") {
      c.t_start = number(v, key);
    } else if (key == "T_end") {
      c.t_end = number(v, key);
    } else if (key == "points") {
      c.points = static_cast<int>(std::clamp(integer(v, key), -1LL, 1000000LL));
    } else if (key == "grid") {
      const auto g = lookup(kGrids, string(v, key));
      require(g.has_value(), "grid must be log or lin");
      c.grid = *g;
    } else if (key == "threads") {
      c.threads = static_cast<unsigned>(std::clamp(integer(v, key), 0LL, 100000LL));
    } else {
      throw UsageError("invalid config: unknown key '" + key + "'");
    }
  }
  return c;
}

std::vector<double> sweep_grid(double start, double end, int points, Grid grid) {
  std::vector<double> out;
  if (points <= 0) return out;
  if (points == 1) {
    out.assign(1, start);
    return out;
  }
  out.reserve(static_cast<std::size_t>(points));
  const double n = points - 1;
  for (int i = 0; i < points; ++i) {
    double x;
    if (i == 0)
      x = start;
    else if (i == points - 1)
      x = end;
    else if (grid == Grid::log)
      x = std::exp(std::log(start) + (std::log(end) - std::log(start)) * (i / n));
    else
      x = start + (end - start) * (i / n);
    out.push_back(x);
  }
  return out;
}

}  // namespace zl

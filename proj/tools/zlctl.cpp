// zlctl: command-line front end. Talks to the library only through the C API.
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "zetaladder/zetaladder.h"

namespace {

struct Options {
  double T = 1e6;
  int k = 1;
  int r = 1;
  std::string law;
  double tol = 0.0;
  double c0 = 0.0;
  double a_exp = 1.0 / 3.0;
  std::string out = "csv";
  std::string cache;
  unsigned threads = 1;
  double from = 0.0;
  double to = 0.0;
  double t_start = 1e4;
  double t_end = 1e6;
  int points = 5;
  std::string grid = "log";
};

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--T", o.T, "Height T");
  cmd->add_option("--k", o.k, "Sequence length k (1..8)");
  cmd->add_option("--r", o.r, "Step index r (1..k)");
  cmd->add_option("--law", o.law, "Law id, e.g. INCREMENT");
  cmd->add_option("--tol", o.tol, "Absolute tolerance (0: 1e-3 per unit length)");
  cmd->add_option("--c0", o.c0, "Ladder constant c0");
  cmd->add_option("--a-exp", o.a_exp, "Error exponent a in [1/4, 1/3]");
  cmd->add_option("--out", o.out, "Output format")->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--cache", o.cache, "Checkpoint file (default: $ZL_CACHE)");
  cmd->add_option("--threads", o.threads, "Quadrature worker threads");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hardy-Littlewood integral, Jacob's ladder and asymptotic law checks"};
  app.require_subcommand(1);
  Options o;

  struct Sub {
    const char* name;
    const char* help;
  };
  const Sub subs[] = {
      {"z", "Evaluate Z(t) at --T"},
      {"integral", "Integral of |zeta|^2 over [--from, --to]"},
      {"ladder", "Reverse sequence T^0..T^k with phi1 at each point"},
      {"verify", "Evaluate one law at (--T, --k, --r)"},
      {"sweep", "Evaluate one law over a grid of T"},
      {"residual", "Hardy-Littlewood-Ingham residual R(T)"},
      {"constants", "Print the numeric constants"},
  };
  for (const Sub& s : subs) {
    CLI::App* cmd = app.add_subcommand(s.name, s.help);
    add_common(cmd, o);
    if (std::string(s.name) == "integral") {
      cmd->add_option("--from", o.from, "Lower limit")->required();
      cmd->add_option("--to", o.to, "Upper limit")->required();
    }
    if (std::string(s.name) == "sweep") {
      cmd->add_option("--T-start", o.t_start, "First T");
      cmd->add_option("--T-end", o.t_end, "Last T");
      cmd->add_option("--points", o.points, "Number of grid points");
      cmd->add_option("--grid", o.grid, "Grid spacing")->check(CLI::IsMember({"log", "lin"}));
    }
  }
  CLI11_PARSE(app, argc, argv);

  if (o.cache.empty()) {
    if (const char* env = std::getenv("ZL_CACHE")) o.cache = env;
  }

  nlohmann::json cfg;
  cfg["command"] = app.get_subcommands().front()->get_name();
  cfg["T"] = o.T;
  cfg["k"] = o.k;
  cfg["r"] = o.r;
  cfg["law"] = o.law.empty() ? nlohmann::json(nullptr) : nlohmann::json(o.law);
  cfg["tol"] = o.tol;
  cfg["c0"] = o.c0;
  cfg["a_exp"] = o.a_exp;
  cfg["out"] = o.out;
  cfg["cache"] = o.cache;
  cfg["threads"] = o.threads;
  cfg["from"] = o.from;
  cfg["to"] = o.to;
  cfg["T_start"] = o.t_start;
  cfg["T_end"] = o.t_end;
  cfg["points"] = o.points;
  cfg["grid"] = o.grid;

  char* doc = nullptr;
  const zl_status st = zl_run(cfg.dump().c_str(), &doc, nullptr);
  if (st != ZL_OK) {
    std::cerr << "zlctl: " << zl_last_error() << "\n";
    return static_cast<int>(st);
  }
  std::fputs(doc, stdout);
  zl_free_string(doc);
  return 0;
}

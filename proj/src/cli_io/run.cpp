#include <string>

#include "cli_io/cache_lock.hpp"
#include "zetaladder/error.hpp"
#include "zetaladder/run.hpp"
#include "zetaladder/zeta.hpp"

namespace zl {
namespace {

double tol_or_default(const RunConfig& c, double a, double b) {
  return c.tol > 0.0 ? c.tol : default_tol(a, b);
}

Table run_z(const RunConfig& c) {
  const ZSample s = hardy_z(c.T);
  Table t;
  t.columns = {"t", "z", "theta", "terms_used", "method"};
  t.rows.push_back({s.t, s.z, theta(s.t), s.terms_used, std::string(to_string(s.method))});
  return t;
}

Table run_integral(const RunConfig& c, HardyLittlewood& hl) {
  const double tol = tol_or_default(c, c.from, c.to);
  const QuadratureResult q = c.from == 0.0 ? hl.integral(c.to, tol) : hl.increment(c.from, c.to, tol);
  Table t;
  t.columns = {"a", "b", "value", "err_estimate", "panels"};
  t.rows.push_back({c.from, c.to, q.value, q.err_estimate, q.panels});
  return t;
}

Table run_ladder(const RunConfig& c, const Constants& k, HardyLittlewood& hl) {
  const ReverseSequence seq = reverse_sequence(c.T, c.k, k, hl);
  Table t;
  t.columns = {"r", "t", "j", "phi1", "residual", "spacing"};
  for (std::size_t r = 0; r < seq.points.size(); ++r) {
    const LadderPoint p = phi1(seq.points[r], k, hl);
    const double spacing = r == 0 ? 0.0 : seq.points[r] - seq.points[r - 1];
    t.rows.push_back({static_cast<std::int64_t>(r), p.t, p.j, p.phi1, p.residual, spacing});
  }
  return t;
}

Table run_residual(const RunConfig& c, const Constants& k, HardyLittlewood& hl) {
  const ResidualDiagnostic d = hli_residual(c.T, k, hl);
  Table t;
  t.columns = {"t", "r_t", "ratio_quarter", "ratio_third"};
  t.rows.push_back({d.t, d.r_t, d.ratio_quarter, d.ratio_third});
  return t;
}

Table run_constants(const Constants& k) {
  Table t;
  t.columns = {"name", "value"};
  auto add = [&](const char* name, double v) { t.rows.push_back({std::string(name), v}); };
  add("c", k.c());
  add("c_bar", k.c_bar());
  add("ln2pi", k.ln2pi());
  add("lambda1", k.lambda1());
  add("lambda2", k.lambda2());
  add("c0", k.c0());
  add("a_exp", k.a_exp());
  add("delta", k.delta());
  add("c_dirichlet", euler_reference_dirichlet(1e-10));
  return t;
}

Table execute(const RunConfig& c, const Constants& k, HardyLittlewood& hl) {
  switch (c.command) {
    case Command::z: return run_z(c);
    case Command::integral: return run_integral(c, hl);
    case Command::ladder: return run_ladder(c, k, hl);
    case Command::verify: return law_table({verify_law(*c.law, c.T, c.k, c.r, k, hl)});
    case Command::sweep: {
      std::vector<LawReport> reps;
      for (double T : sweep_grid(c.t_start, c.t_end, c.points, c.grid))
        reps.push_back(verify_law(*c.law, T, c.k, c.r, k, hl));
      return law_table(reps);
    }
    case Command::residual: return run_residual(c, k, hl);
    case Command::constants: return run_constants(k);
  }
  throw UsageError("unknown command");
}

}  // namespace

int exit_status_for(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::usage: return 2;
    case ErrorCode::domain: return 3;
    case ErrorCode::non_convergence: return 4;
    case ErrorCode::capability: return 5;
    case ErrorCode::load: return 6;
    case ErrorCode::bracket: return 7;
    case ErrorCode::io: return 8;
  }
  return 1;
}

RunOutput run(const RunConfig& cfg) {
  RunOutput out;
  try {
    validate(cfg);
    const Constants consts(cfg.c0, cfg.a_exp);
    detail::CacheLock lock;
    CheckpointStore store;
    if (!cfg.cache_path.empty()) {
      lock.acquire(cfg.cache_path + ".lock");
      store = CheckpointStore::load(cfg.cache_path);
    }
    HardyLittlewood hl(store, cfg.threads);
    auto persist = [&] {
      if (!cfg.cache_path.empty() && store.dirty()) store.save(cfg.cache_path);
    };
    Table table;
    try {
      table = execute(cfg, consts, hl);
    } catch (...) {
      out.new_panels = hl.panels_evaluated();
      persist();
      throw;
    }
    out.new_panels = hl.panels_evaluated();
    persist();
    out.document = cfg.out == OutFormat::csv ? format_csv(cfg, table) : format_json(cfg, table);
  } catch (const Error& e) {
    out.exit_status = exit_status_for(e.code());
    out.error = std::string(to_string(e.code())) + ": " + e.what();
    out.document.clear();
  } catch (const std::exception& e) {
    out.exit_status = 1;
    out.error = std::string("internal error: ") + e.what();
    out.document.clear();
  }
  return out;
}

}  // namespace zl

#include "zetaladder/zetaladder.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <mutex>
#include <new>
#include <string>

#include "cli_io/cache_lock.hpp"
#include "zetaladder/error.hpp"
#include "zetaladder/laws.hpp"
#include "zetaladder/primes.hpp"
#include "zetaladder/run.hpp"
#include "zetaladder/zeta.hpp"

struct zl_session {
  std::mutex mutex;
  std::string path;
  zl::detail::CacheLock lock;
  zl::CheckpointStore store;
  std::unique_ptr<zl::HardyLittlewood> hl;
};

namespace {

thread_local std::string g_last_error;

zl_status status_for(zl::ErrorCode code) {
  switch (code) {
    case zl::ErrorCode::domain: return ZL_ERR_DOMAIN;
    case zl::ErrorCode::non_convergence: return ZL_ERR_NON_CONVERGENCE;
    case zl::ErrorCode::capability: return ZL_ERR_CAPABILITY;
    case zl::ErrorCode::load: return ZL_ERR_LOAD;
    case zl::ErrorCode::bracket: return ZL_ERR_BRACKET;
    case zl::ErrorCode::usage: return ZL_ERR_USAGE;
    case zl::ErrorCode::io: return ZL_ERR_IO;
  }
  return ZL_ERR_INTERNAL;
}

zl_status fail(zl_status s, std::string msg) {
  g_last_error = std::move(msg);
  return s;
}

// Runs fn, translating exceptions into status codes.
template <class F>
zl_status guarded(F&& fn) {
  try {
    fn();
    g_last_error.clear();
    return ZL_OK;
  } catch (const zl::Error& e) {
    return fail(status_for(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(ZL_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(ZL_ERR_INTERNAL, e.what());
  }
}

#define ZL_REQUIRE(cond)                                                     \
  do {                                                                       \
    if (!(cond)) return fail(ZL_ERR_INVALID_ARGUMENT, "invalid argument: " #cond); \
  } while (0)

zl::Constants to_constants(const zl_constants* k) {
  return k ? zl::Constants(k->c0, k->a_exp, k->delta) : zl::Constants();
}

void copy_text(char* dst, std::size_t cap, const std::string& src) {
  const std::size_t n = std::min(cap - 1, src.size());
  std::memcpy(dst, src.data(), n);
  dst[n] = '\0';
}

zl_quadrature to_c(const zl::QuadratureResult& q) {
  return {q.a, q.b, q.value, q.err_estimate, q.panels};
}

}  // namespace

extern "C" {

const char* zl_version(void) { return "0.1.0"; }

const char* zl_status_string(zl_status s) {
  switch (s) {
    case ZL_OK: return "ok";
    case ZL_ERR_DOMAIN: return "domain_error";
    case ZL_ERR_NON_CONVERGENCE: return "non_convergence";
    case ZL_ERR_CAPABILITY: return "capability_error";
    case ZL_ERR_LOAD: return "load_error";
    case ZL_ERR_BRACKET: return "bracket_error";
    case ZL_ERR_USAGE: return "usage_error";
    case ZL_ERR_IO: return "io_error";
    case ZL_ERR_INVALID_ARGUMENT: return "invalid_argument";
    case ZL_ERR_INTERNAL: return "internal_error";
  }
  return "unknown_status";
}

const char* zl_last_error(void) { return g_last_error.c_str(); }

zl_constants zl_default_constants(void) {
  const zl::Constants k;
  return {k.c0(), k.a_exp(), k.delta()};
}

zl_status zl_theta(double t, double* out) {
  ZL_REQUIRE(out);
  return guarded([&] { *out = zl::theta(t); });
}

zl_status zl_z(double t, double* z, int64_t* terms_used) {
  ZL_REQUIRE(z);
  return guarded([&] {
    const zl::ZSample s = zl::hardy_z(t);
    *z = s.z;
    if (terms_used) *terms_used = s.terms_used;
  });
}

zl_status zl_abs_zeta_sq(double t, double* out) {
  ZL_REQUIRE(out);
  return guarded([&] { *out = zl::abs_zeta_sq(t); });
}

zl_status zl_spectral_z(double x, double v, double t, double* out) {
  ZL_REQUIRE(out);
  return guarded([&] { *out = zl::spectral_z(zl::spectral_window(x, v), t); });
}

zl_status zl_integrate(double a, double b, double tol, zl_quadrature* out) {
  ZL_REQUIRE(out);
  return guarded([&] { *out = to_c(zl::integrate_z2(a, b, tol)); });
}

zl_status zl_prime_pi(double x, zl_prime_mode mode, double* out) {
  ZL_REQUIRE(out);
  ZL_REQUIRE(mode >= ZL_PRIMES_EXACT && mode <= ZL_PRIMES_LOG_INTEGRAL);
  return guarded([&] { *out = zl::prime_pi(x, static_cast<zl::PrimePiMode>(mode)).value; });
}

zl_status zl_euler_dirichlet(double tol, double* out) {
  ZL_REQUIRE(out);
  return guarded([&] { *out = zl::euler_reference_dirichlet(tol); });
}

zl_status zl_session_open(const char* cache_path, unsigned threads, zl_session** out) {
  ZL_REQUIRE(out);
  ZL_REQUIRE(threads >= 1);
  *out = nullptr;
  return guarded([&] {
    auto s = std::make_unique<zl_session>();
    if (cache_path && *cache_path) {
      s->path = cache_path;
      s->lock.acquire(s->path + ".lock");
      s->store = zl::CheckpointStore::load(s->path);
    }
    s->hl = std::make_unique<zl::HardyLittlewood>(s->store, threads);
    *out = s.release();
  });
}

zl_status zl_session_save(zl_session* s) {
  ZL_REQUIRE(s);
  std::lock_guard<std::mutex> g(s->mutex);
  return guarded([&] {
    if (!s->path.empty() && s->store.dirty()) {
      s->store.save(s->path);
      s->store.mark_clean();
    }
  });
}

void zl_session_close(zl_session* s) { delete s; }

zl_status zl_session_panels(zl_session* s, int64_t* out) {
  ZL_REQUIRE(s && out);
  std::lock_guard<std::mutex> g(s->mutex);
  *out = s->hl->panels_evaluated();
  return ZL_OK;
}

zl_status zl_hl_integral(zl_session* s, double T, double tol, zl_quadrature* out) {
  ZL_REQUIRE(s && out);
  std::lock_guard<std::mutex> g(s->mutex);
  return guarded([&] { *out = to_c(s->hl->integral(T, tol > 0.0 ? tol : zl::default_tol(0.0, T))); });
}

zl_status zl_phi1(zl_session* s, const zl_constants* k, double t, zl_ladder_point* out) {
  ZL_REQUIRE(s && out);
  std::lock_guard<std::mutex> g(s->mutex);
  return guarded([&] {
    const zl::LadderPoint p = zl::phi1(t, to_constants(k), *s->hl);
    *out = {p.t, p.j, p.phi1, p.residual};
  });
}

zl_status zl_phi1_inverse(zl_session* s, const zl_constants* k, double t, double* out) {
  ZL_REQUIRE(s && out);
  std::lock_guard<std::mutex> g(s->mutex);
  return guarded([&] { *out = zl::phi1_inverse(t, to_constants(k), *s->hl); });
}

zl_status zl_reverse_sequence(zl_session* s, const zl_constants* kc, double t, int k,
                              double* points) {
  ZL_REQUIRE(s && points);
  std::lock_guard<std::mutex> g(s->mutex);
  return guarded([&] {
    const zl::ReverseSequence seq = zl::reverse_sequence(t, k, to_constants(kc), *s->hl);
    for (std::size_t i = 0; i < seq.points.size(); ++i) points[i] = seq.points[i];
  });
}

zl_status zl_verify_law(zl_session* s, const zl_constants* kc, const char* law, double T, int k,
                        int r, zl_law_report* out) {
  ZL_REQUIRE(s && law && out);
  const auto id = zl::parse_law_id(law);
  if (!id) return fail(ZL_ERR_USAGE, std::string("unknown law '") + law + "'");
  std::lock_guard<std::mutex> g(s->mutex);
  return guarded([&] {
    const zl::LawReport rep = zl::verify_law(*id, T, k, r, to_constants(kc), *s->hl);
    copy_text(out->law_id, sizeof out->law_id, zl::to_string(rep.law_id));
    out->T = rep.T;
    out->k = rep.k;
    out->r = rep.r;
    out->lhs = rep.lhs;
    out->rhs = rep.rhs;
    out->abs_residual = rep.abs_residual;
    out->rel_residual = rep.rel_residual;
    copy_text(out->notes, sizeof out->notes, rep.notes);
  });
}

zl_status zl_hli_residual(zl_session* s, const zl_constants* kc, double T, zl_residual* out) {
  ZL_REQUIRE(s && out);
  std::lock_guard<std::mutex> g(s->mutex);
  return guarded([&] {
    const zl::ResidualDiagnostic d = zl::hli_residual(T, to_constants(kc), *s->hl);
    *out = {d.t, d.r_t, d.ratio_quarter, d.ratio_third};
  });
}

zl_status zl_estimate_euler(zl_session* s, const zl_constants* kc, double T, int r,
                            double* c_hat) {
  ZL_REQUIRE(s && c_hat);
  std::lock_guard<std::mutex> g(s->mutex);
  return guarded([&] { *c_hat = zl::estimate_euler_constant(T, r, to_constants(kc), *s->hl).c_hat; });
}

zl_status zl_run(const char* config_json, char** document, int64_t* new_panels) {
  ZL_REQUIRE(config_json && document);
  *document = nullptr;
  zl::RunConfig cfg;
  const zl_status parsed = guarded([&] { cfg = zl::config_from_json(config_json); });
  if (parsed != ZL_OK) return parsed;
  const zl::RunOutput res = zl::run(cfg);
  if (new_panels) *new_panels = res.new_panels;
  if (res.exit_status != 0) {
    zl_status st = ZL_ERR_INTERNAL;
    for (zl::ErrorCode c : {zl::ErrorCode::domain, zl::ErrorCode::non_convergence,
                            zl::ErrorCode::capability, zl::ErrorCode::load, zl::ErrorCode::bracket,
                            zl::ErrorCode::usage, zl::ErrorCode::io})
      if (zl::exit_status_for(c) == res.exit_status) st = status_for(c);
    return fail(st, res.error);
  }
  char* buf = static_cast<char*>(std::malloc(res.document.size() + 1));
  if (!buf) return fail(ZL_ERR_INTERNAL, "out of memory");
  std::memcpy(buf, res.document.c_str(), res.document.size() + 1);
  *document = buf;
  g_last_error.clear();
  return ZL_OK;
}

void zl_free_string(char* s) { std::free(s); }

}  // extern "C"

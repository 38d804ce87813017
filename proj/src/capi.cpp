#include "freeplate/freeplate.h"

#include <cstring>
#include <new>
#include <string>
#include <variant>

#include "freeplate/ball_spectrum.hpp"
#include "freeplate/domain.hpp"
#include "freeplate/error.hpp"
#include "freeplate/isoperimetric.hpp"
#include "freeplate/rod_spectrum.hpp"
#include "freeplate/special_functions.hpp"
#include "freeplate/table.hpp"
#include "freeplate/verify.hpp"

struct fp_table {
  freeplate::Table table;
};

struct fp_report {
  std::variant<freeplate::CheckReport, freeplate::VerificationReport> body;
};

struct fp_domain {
  freeplate::DomainSpec spec;
};

namespace {

thread_local std::string g_last_error;

fp_status status_of(freeplate::ErrorKind k) {
  using freeplate::ErrorKind;
  switch (k) {
    case ErrorKind::invalid_argument: return FP_ERR_INVALID_ARGUMENT;
    case ErrorKind::domain: return FP_ERR_DOMAIN;
    case ErrorKind::convergence: return FP_ERR_CONVERGENCE;
    case ErrorKind::no_root: return FP_ERR_NO_ROOT;
    case ErrorKind::bound_violation: return FP_ERR_BOUND_VIOLATION;
    case ErrorKind::io: return FP_ERR_IO;
    case ErrorKind::parse: return FP_ERR_PARSE;
  }
  return FP_ERR_INTERNAL;
}

template <class F>
fp_status guarded(F&& f) {
  g_last_error.clear();
  try {
    f();
    return FP_OK;
  } catch (const freeplate::Error& e) {
    g_last_error = e.what();
    return status_of(e.kind());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
  } catch (const std::exception& e) {
    g_last_error = e.what();
  } catch (...) {
    g_last_error = "unknown error";
  }
  return FP_ERR_INTERNAL;
}

void require(bool ok, const char* what) {
  if (!ok) throw freeplate::InvalidArgument(what);
}

freeplate::Format to_format(fp_format f) {
  if (f == FP_FORMAT_CSV) return freeplate::Format::csv;
  if (f == FP_FORMAT_JSON) return freeplate::Format::json;
  throw freeplate::InvalidArgument("unknown output format");
}

void fill(const freeplate::BallTone& t, fp_ball_tone* out) {
  *out = {t.d, t.l, t.tau, t.radius, t.a, t.b, t.omega, t.gamma};
}

fp_check_status to_c(freeplate::CheckStatus s) {
  switch (s) {
    case freeplate::CheckStatus::pass: return FP_CHECK_PASS;
    case freeplate::CheckStatus::fail: return FP_CHECK_FAIL;
    case freeplate::CheckStatus::inconclusive: return FP_CHECK_INCONCLUSIVE;
  }
  return FP_CHECK_FAIL;
}

std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> v;
  for (int i = 0; i < n; ++i) v.push_back(n == 1 ? lo : lo + (hi - lo) * i / (n - 1));
  return v;
}

}  // namespace

extern "C" {

const char* fp_version(void) { return "1.0.0"; }

const char* fp_status_name(fp_status s) {
  switch (s) {
    case FP_OK: return "ok";
    case FP_ERR_INVALID_ARGUMENT: return "invalid_argument";
    case FP_ERR_DOMAIN: return "domain_error";
    case FP_ERR_CONVERGENCE: return "convergence_error";
    case FP_ERR_NO_ROOT: return "no_root";
    case FP_ERR_BOUND_VIOLATION: return "bound_violation";
    case FP_ERR_IO: return "io_error";
    case FP_ERR_PARSE: return "parse_error";
    case FP_ERR_INTERNAL: return "internal_error";
  }
  return "unknown";
}

const char* fp_last_error_message(void) { return g_last_error.c_str(); }

fp_status fp_bessel_j(int d, int l, int deriv, double z, double* out) {
  return guarded([&] {
    require(out, "null output");
    *out = freeplate::ultra_j(freeplate::UltraIndex(d, l), deriv, z);
  });
}

fp_status fp_bessel_i(int d, int l, int deriv, double z, double* out) {
  return guarded([&] {
    require(out, "null output");
    *out = freeplate::ultra_i(freeplate::UltraIndex(d, l), deriv, z);
  });
}

fp_status fp_bessel_first_deriv_zero(int d, int l, double* out) {
  return guarded([&] {
    require(out, "null output");
    *out = freeplate::first_deriv_zero(freeplate::UltraIndex(d, l));
  });
}

fp_status fp_bessel_table(int d, int l, int deriv, const double* z, size_t n, fp_table** out) {
  return guarded([&] {
    require(out && (z || n == 0), "null argument");
    freeplate::UltraIndex idx(d, l);
    freeplate::Table t({"z", "j", "i"});
    for (size_t k = 0; k < n; ++k)
      t.add_row({z[k], freeplate::ultra_j(idx, deriv, z[k]), freeplate::ultra_i(idx, deriv, z[k])});
    *out = new fp_table{std::move(t)};
  });
}

fp_status fp_bessel_zero_table(int d, int l, fp_table** out) {
  return guarded([&] {
    require(out, "null output");
    freeplate::Table t({"d", "l", "zero"}, true);
    t.add_row({static_cast<double>(d), static_cast<double>(l),
               freeplate::first_deriv_zero(freeplate::UltraIndex(d, l))});
    *out = new fp_table{std::move(t)};
  });
}

fp_status fp_ball_determinant(int d, int l, double tau, double a, double* out) {
  return guarded([&] {
    require(out, "null output");
    *out = freeplate::boundary_determinant(d, l, tau, a);
  });
}

fp_status fp_ball_fundamental_tone(int d, double tau, fp_ball_tone* out) {
  return guarded([&] {
    require(out, "null output");
    fill(freeplate::fundamental_tone(d, tau), out);
  });
}

fp_status fp_ball_tone_for_order(int d, int l, double tau, fp_ball_tone* out, int* found) {
  return guarded([&] {
    require(out && found, "null output");
    auto t = freeplate::tone_for_order(d, l, tau);
    *found = t ? 1 : 0;
    if (t) fill(*t, out);
  });
}

fp_status fp_ball_scaled_tone(int d, double tau, double radius, double* omega) {
  return guarded([&] {
    require(omega, "null output");
    *omega = freeplate::scaled_tone(d, tau, radius);
  });
}

fp_status fp_ball_tone_table(int d, int l, double tau, fp_table** out) {
  return guarded([&] {
    require(out, "null output");
    auto t = freeplate::tone_for_order(d, l, tau);
    if (!t) throw freeplate::NoRootError("no root of the order-" + std::to_string(l) + " determinant below the scan cap");
    *out = new fp_table{freeplate::ball_tone_table(*t)};
  });
}

fp_status fp_ball_curve(int d, double tau_min, double tau_max, int steps, fp_table** out, int* n_errors) {
  return guarded([&] {
    require(out, "null output");
    require(steps >= 1, "steps must be >= 1");
    require(tau_min <= tau_max, "tau_min must not exceed tau_max");
    auto taus = linspace(tau_min, tau_max, steps);
    auto rows = freeplate::tone_curve(d, taus);
    int errors = 0;
    for (const auto& r : rows) errors += r.tone ? 0 : 1;
    *out = new fp_table{freeplate::ball_curve_table(rows)};
    if (n_errors) *n_errors = errors;
  });
}

fp_status fp_rod_modes(double tau, int modes, fp_table** out) {
  return guarded([&] {
    require(out, "null output");
    auto t = freeplate::branch_curves(tau, tau, 1, modes);
    if (!t.errors.empty()) throw freeplate::ConvergenceError(t.errors.front().message);
    *out = new fp_table{freeplate::rod_table(t.rows)};
  });
}

fp_status fp_rod_branch_curves(double tau_min, double tau_max, int steps, int modes, fp_table** out,
                               int* n_errors) {
  return guarded([&] {
    require(out, "null output");
    auto t = freeplate::branch_curves(tau_min, tau_max, steps, modes);
    *out = new fp_table{freeplate::rod_table(t.rows)};
    if (n_errors) *n_errors = static_cast<int>(t.errors.size());
  });
}

fp_status fp_rod_degenerate_point(double* a, double* tau, double* omega, double* c_over_d) {
  return guarded([&] {
    auto p = freeplate::degenerate_point();
    if (a) *a = p.a;
    if (tau) *tau = p.tau;
    if (omega) *omega = p.omega;
    if (c_over_d) *c_over_d = p.c_over_d;
  });
}

fp_status fp_domain_parse(const char* text, fp_domain** out) {
  return guarded([&] {
    require(text && out, "null argument");
    *out = new fp_domain{freeplate::parse_domain(text)};
  });
}

fp_status fp_domain_dim(const fp_domain* dom, int* d) {
  return guarded([&] {
    require(dom && d, "null argument");
    *d = dom->spec.dim();
  });
}

void fp_domain_free(fp_domain* dom) { delete dom; }

fp_status fp_iso_quotient(const fp_domain* dom, double tau, uint64_t seed, fp_iso_result* out) {
  return guarded([&] {
    require(dom && out, "null argument");
    require(dom->spec.dim() <= FP_MAX_DIM, "dimension exceeds FP_MAX_DIM");
    auto q = freeplate::centered_quotient(dom->spec, tau, seed);
    std::memset(out, 0, sizeof *out);
    out->d = dom->spec.dim();
    out->qhat = q.bound.qhat;
    out->tone_ball = q.bound.tone_ball;
    out->gap = q.bound.gap;
    out->mc_error = q.bound.mc_error;
    out->center_residual = q.center.residual;
    for (size_t i = 0; i < q.center.center.size(); ++i) out->center[i] = q.center.center[i];
  });
}

fp_status fp_iso_domain_report(const fp_domain* dom, double tau, uint64_t seed, fp_report** out) {
  return guarded([&] {
    require(dom && out, "null argument");
    *out = new fp_report{freeplate::domain_report(dom->spec, tau, seed)};
  });
}

fp_status fp_iso_monotonicity_report(int d, double tau, fp_report** out) {
  return guarded([&] {
    require(out, "null output");
    freeplate::RadialProfile rho(freeplate::fundamental_tone(d, tau));
    *out = new fp_report{freeplate::monotonicity_report(rho, tau, d, 3.0, 3000)};
  });
}

fp_status fp_iso_polynomial_report(fp_report** out) {
  return guarded([&] {
    require(out, "null output");
    *out = new fp_report{freeplate::polynomial_lemma_check()};
  });
}

fp_status fp_iso_calculus_report(uint64_t seed, fp_report** out) {
  return guarded([&] {
    require(out, "null output");
    *out = new fp_report{freeplate::calculus_identity_check(seed)};
  });
}

fp_status fp_verify(const char* selection, uint64_t seed, fp_report** out) {
  return guarded([&] {
    require(selection && out, "null argument");
    *out = new fp_report{freeplate::verify_suite(selection, seed)};
  });
}

size_t fp_verify_module_count(void) { return freeplate::verify_modules().size(); }

const char* fp_verify_module_name(size_t i) {
  const auto& m = freeplate::verify_modules();
  return i < m.size() ? m[i].c_str() : nullptr;
}

int fp_report_passed(const fp_report* r) {
  if (!r) return 0;
  return std::visit([](const auto& b) { return b.passed() ? 1 : 0; }, r->body);
}

size_t fp_report_size(const fp_report* r) {
  if (!r) return 0;
  if (auto c = std::get_if<freeplate::CheckReport>(&r->body)) return c->items.size();
  return std::get<freeplate::VerificationReport>(r->body).entries.size();
}

fp_status fp_report_entry_at(const fp_report* r, size_t i, fp_report_entry* out) {
  return guarded([&] {
    require(r && out, "null argument");
    require(i < fp_report_size(r), "entry index out of range");
    if (auto c = std::get_if<freeplate::CheckReport>(&r->body)) {
      const auto& it = c->items[i];
      *out = {it.check.c_str(), nullptr, to_c(it.status), it.value, it.tolerance, 0.0};
    } else {
      const auto& e = std::get<freeplate::VerificationReport>(r->body).entries[i];
      *out = {e.check_id.c_str(), e.ref.c_str(), to_c(e.status), e.value, e.tolerance, e.runtime_ms};
    }
  });
}

fp_status fp_report_write(const fp_report* r, const char* path, fp_format fmt, int include_timings) {
  return guarded([&] {
    require(r && path, "null argument");
    freeplate::Format f = to_format(fmt);
    std::string text;
    if (auto c = std::get_if<freeplate::CheckReport>(&r->body)) {
      text = f == freeplate::Format::json ? freeplate::report_to_json(*c) : freeplate::report_to_csv(*c);
    } else {
      const auto& v = std::get<freeplate::VerificationReport>(r->body);
      text = f == freeplate::Format::json ? freeplate::verification_to_json(v, include_timings != 0)
                                          : freeplate::verification_to_csv(v, include_timings != 0);
    }
    freeplate::write_output(path, text);
  });
}

void fp_report_free(fp_report* r) { delete r; }

size_t fp_table_rows(const fp_table* t) { return t ? t->table.rows() : 0; }

size_t fp_table_cols(const fp_table* t) { return t ? t->table.columns().size() : 0; }

fp_status fp_table_write(const fp_table* t, const char* path, fp_format fmt) {
  return guarded([&] {
    require(t && path, "null argument");
    freeplate::write_output(path, freeplate::render(t->table, to_format(fmt)));
  });
}

void fp_table_free(fp_table* t) { delete t; }

}  // extern "C"

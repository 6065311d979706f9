// Copyright 2026 The detcount Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// detcount command-line front end. Links only the C API.

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "detcount/detcount.h"
#include "json.hpp"

namespace {

using json = nlohmann::json;

constexpr int kExitValidation = 2;
constexpr int kExitNotConverged = 3;
constexpr int kExitInternal = 1;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CallError : std::runtime_error {
  CallError(dc_status s, const std::string& what) : std::runtime_error(what), status(s) {}
  dc_status status;
};

void check(dc_status s) {
  if (s != DC_OK) {
    throw CallError(s, std::string(dc_status_name(s)) + ": " + dc_last_error_message());
  }
}

// An option that may also come from the config file. Command-line values
// win; the resolved value is echoed in the config header.
struct Binding {
  const CLI::App* owner;
  CLI::Option* opt;
  json::json_pointer key;
  bool required;
  std::function<void(const json&)> load;
  std::function<json()> dump;
};

class Bindings {
 public:
  template <class T>
  CLI::Option* add(CLI::App* app, const std::string& flag, const std::string& key, T& var,
                   const std::string& help, bool required = false) {
    CLI::Option* opt = app->add_option(flag, var, help);
    if constexpr (requires { var.begin(); } && !std::is_same_v<T, std::string>) {
      opt->delimiter(',');
    }
    items_.push_back({app, opt, json::json_pointer(key), required,
                      [&var](const json& j) { var = j.get<T>(); }, [&var] { return json(var); }});
    return opt;
  }

  CLI::Option* flag(CLI::App* app, const std::string& flag, const std::string& key, bool& var,
                    const std::string& help) {
    CLI::Option* opt = app->add_flag(flag, var, help);
    items_.push_back({app, opt, json::json_pointer(key), false,
                      [&var](const json& j) { var = j.get<bool>(); }, [&var] { return json(var); }});
    return opt;
  }

  // Resolves the options of `root` and `active` against the config object.
  void resolve(const CLI::App* root, const CLI::App* active, const json& config,
               json& resolved) const {
    for (const auto& b : items_) {
      if (b.owner != root && b.owner != active) continue;
      const bool given = b.opt->count() > 0;
      if (!given && config.contains(b.key)) {
        try {
          b.load(config.at(b.key));
        } catch (const json::exception& e) {
          throw UsageError("config key " + b.key.to_string() + ": " + e.what());
        }
      } else if (!given && b.required) {
        throw UsageError("missing required option " + b.opt->get_name());
      }
      resolved[b.key] = b.dump();
    }
  }

 private:
  std::vector<Binding> items_;
};

std::string fmt(double v) {
  if (std::isnan(v)) return "n/a";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fmt(int64_t v) { return std::to_string(v); }
std::string fmt(uint64_t v) { return std::to_string(v); }
std::string fmt(int v) { return std::to_string(v); }

template <class... Ts>
void row(const Ts&... fields) {
  std::string line;
  bool first = true;
  ((line += (first ? "" : ",") + fmt(fields), first = false), ...);
  line += '\n';
  std::fputs(line.c_str(), stdout);
}

void header(const char* columns) {
  std::fputs(columns, stdout);
  std::fputc('\n', stdout);
}

// Owns a dc_context.
struct Context {
  dc_context* ptr = nullptr;
  Context() { check(dc_context_create(&ptr)); }
  ~Context() { dc_context_destroy(ptr); }
  Context(const Context&) = delete;
  Context& operator=(const Context&) = delete;
};

struct ReportHandle {
  dc_report* ptr = nullptr;
  ~ReportHandle() { dc_report_destroy(ptr); }
};

void emit_report(const dc_report* rep) {
  header("X,r,S,M,E,abs_E,ratio");
  for (size_t i = 0; i < dc_report_size(rep); ++i) {
    dc_scaling_row r{};
    check(dc_report_row(rep, i, &r));
    row(r.X, r.r, r.S, r.M, r.E, r.abs_E, r.ratio);
  }
  std::printf("# fitted_slope: %s\n", fmt(dc_report_fitted_slope(rep)).c_str());
  std::printf("# fit_intercept: %s\n", fmt(dc_report_fit_intercept(rep)).c_str());
  std::printf("# max_abs_E: %s\n", fmt(dc_report_max_abs_E(rep)).c_str());
}

int exit_code_for(dc_status s) {
  switch (s) {
    case DC_QUADRATURE_NOT_CONVERGED: return kExitNotConverged;
    case DC_INTERNAL: return kExitInternal;
    default: return kExitValidation;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Smoothed counts for the determinant equation ad - bc = r"};
  app.require_subcommand(1);
  app.fallthrough();
  Bindings bindings;

  std::string config_path;
  app.add_option("--config", config_path, "JSON configuration file")->check(CLI::ExistingFile);

  std::string weight_kind = "canonical-bump";
  double amplitude = 1.0;
  int panels = 4, nodes = 16, max_depth = 10;
  double abs_tol = 1e-18, rel_tol = 1e-10;
  unsigned threads = 0;
  bindings.add(&app, "--weight", "/weight/kind", weight_kind, "Weight kind (canonical-bump)");
  bindings.add(&app, "--amplitude", "/weight/amplitude", amplitude, "Weight amplitude");
  bindings.add(&app, "--panels", "/quadrature/panels", panels, "Initial quadrature panels");
  bindings.add(&app, "--nodes", "/quadrature/nodes", nodes, "Gauss-Legendre nodes per panel");
  bindings.add(&app, "--abs-tol", "/quadrature/abs_tolerance", abs_tol, "Absolute tolerance");
  bindings.add(&app, "--rel-tol", "/quadrature/rel_tolerance", rel_tol, "Relative tolerance");
  bindings.add(&app, "--max-depth", "/quadrature/max_depth", max_depth, "Refinement levels");
  bindings.add(&app, "--threads", "/threads", threads, "Worker threads (0: DETCOUNT_THREADS)");

  double X = 0.0;
  int64_t r = 1;
  bool naive = false;
  int64_t truncate = 0;
  std::vector<double> X_list;
  std::vector<int64_t> r_list, primes;
  std::string xrule = "2sqrt";
  int64_t p = 0, m = 1, n = 1, c = 1, l = 1, cmax = 0, mmax = 5, nmax = 5, q = 1, a = 0;
  double scale = 0.0, bx = 0.0, by = 0.0;
  int kmax = 80;
  std::vector<double> etas = {1, 2, 4, 8, 16};

  auto* cmd_count = app.add_subcommand("count", "Weighted solution count S_V(X, r)");
  bindings.add(cmd_count, "--X", "/X", X, "Box scale", true);
  bindings.add(cmd_count, "--r", "/r", r, "Right-hand side", true);
  bindings.flag(cmd_count, "--naive", "/naive", naive, "Use the O(X^3) reference loop");

  auto* cmd_main = app.add_subcommand("mainterm", "Main term M_V(X, r)");
  bindings.add(cmd_main, "--X", "/X", X, "Box scale", true);
  bindings.add(cmd_main, "--r", "/r", r, "Right-hand side", true);
  bindings.add(cmd_main, "--truncate", "/truncate", truncate, "Evaluate the double sum to k <= K");

  auto* cmd_escan = app.add_subcommand("error-scan", "S - M over a list of X at fixed r");
  bindings.add(cmd_escan, "--r", "/r", r, "Right-hand side");
  bindings.add(cmd_escan, "--X-list", "/X_list", X_list, "Ascending X values", true);

  auto* cmd_rscan = app.add_subcommand("r-scan", "S - M over a list of r at fixed X");
  bindings.add(cmd_rscan, "--X", "/X", X, "Box scale", true);
  bindings.add(cmd_rscan, "--r-list", "/r_list", r_list, "Right-hand sides", true);

  auto* cmd_modp = app.add_subcommand("modp", "Smoothed count of ad - bc = 1 (mod p)");
  bindings.add(cmd_modp, "--p", "/p", p, "Odd prime", true);
  bindings.add(cmd_modp, "--X", "/X", X, "Box scale", true);

  auto* cmd_mscan = app.add_subcommand("modp-scan", "Mod-p error over a list of primes");
  bindings.add(cmd_mscan, "--primes", "/primes", primes, "Odd primes", true);
  bindings.add(cmd_mscan, "--xrule", "/xrule", xrule, "X as a function of p, e.g. 2sqrt");

  auto* cmd_kl = app.add_subcommand("kloosterman", "Single Kloosterman sum S(m, n; c)");
  bindings.add(cmd_kl, "--m", "/m", m, "First frequency", true);
  bindings.add(cmd_kl, "--n", "/n", n, "Second frequency", true);
  bindings.add(cmd_kl, "--c", "/c", c, "Modulus", true);

  auto* cmd_weil = app.add_subcommand("weil-scan", "Weil-bound gaps for c <= cmax");
  bindings.add(cmd_weil, "--cmax", "/cmax", cmax, "Largest modulus", true);
  bindings.add(cmd_weil, "--mmax", "/mmax", mmax, "1 <= m <= mmax");
  bindings.add(cmd_weil, "--nmax", "/nmax", nmax, "1 <= n <= nmax");

  auto* cmd_poisson = app.add_subcommand("poisson-check", "Poisson summation residuals");
  bindings.add(cmd_poisson, "--scale", "/scale", scale, "Dilation of V", true);
  bindings.add(cmd_poisson, "--q", "/q", q, "Modulus of the twisted variant (1: untwisted)");
  bindings.add(cmd_poisson, "--a", "/a", a, "Twist numerator");

  auto* cmd_decay = app.add_subcommand("bessel-decay", "Envelopes of the f-check/f-ddot transforms");
  bindings.add(cmd_decay, "--X", "/X", X, "Box scale", true);
  bindings.add(cmd_decay, "--r", "/r", r, "Right-hand side", true);
  bindings.add(cmd_decay, "--m", "/m", m, "Frequency m");
  bindings.add(cmd_decay, "--n", "/n", n, "Frequency n");
  bindings.add(cmd_decay, "--l", "/l", l, "Divisor l of r");
  bindings.add(cmd_decay, "--etas", "/etas", etas, "Spectral parameters");

  auto* cmd_ident = app.add_subcommand("bessel-identity", "Residuals of the J-Bessel sum identities");
  bindings.add(cmd_ident, "--x", "/x", bx, "First argument", true);
  bindings.add(cmd_ident, "--y", "/y", by, "Second argument", true);
  bindings.add(cmd_ident, "--kmax", "/kmax", kmax, "Truncation of the k-sum");

  auto* cmd_cancel = app.add_subcommand("cancellation", "Signed vs absolute weighted Kloosterman sums");
  bindings.add(cmd_cancel, "--X", "/X", X, "Box scale", true);
  bindings.add(cmd_cancel, "--r", "/r", r, "Right-hand side", true);
  bindings.add(cmd_cancel, "--mmax", "/mmax", mmax, "0 < |m| <= mmax");
  bindings.add(cmd_cancel, "--nmax", "/nmax", nmax, "0 < |n| <= nmax");
  bindings.add(cmd_cancel, "--l", "/l", l, "Divisor l of r");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitValidation;
  }

  CLI::App* cmd = app.get_subcommands().front();
  try {
    json config = json::object();
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      try {
        config = json::parse(in);
      } catch (const json::exception& e) {
        throw UsageError(std::string("cannot parse config: ") + e.what());
      }
      if (!config.is_object()) throw UsageError("config must be a JSON object");
    }
    json resolved = json::object();
    resolved["command"] = cmd->get_name();
    bindings.resolve(&app, cmd, config, resolved);
    if (weight_kind != "canonical-bump") throw UsageError("unknown weight kind " + weight_kind);

    Context ctx;
    check(dc_context_set_amplitude(ctx.ptr, amplitude));
    check(dc_context_set_quadrature(ctx.ptr, panels, nodes, abs_tol, rel_tol, max_depth));
    check(dc_context_set_threads(ctx.ptr, threads));

    std::printf("# config: %s\n", resolved.dump().c_str());
    const std::string name = cmd->get_name();

    if (name == "count") {
      dc_count_result res{};
      check(dc_count(ctx.ptr, X, r, naive ? 1 : 0, &res));
      header("X,r,weighted_sum,solution_count,elapsed_ms");
      row(X, r, res.weighted_sum, res.solution_count, res.elapsed_ms);
    } else if (name == "mainterm") {
      dc_main_term mt{};
      check(dc_main_term_eval(ctx.ptr, X, r, truncate, &mt));
      header("X,r,alpha,I_alpha,closed_form,truncated_value,tail_bound");
      const double nan = std::nan("");
      row(X, r, mt.alpha, mt.I_alpha, mt.closed_form, mt.has_truncated ? mt.truncated_value : nan,
          mt.has_truncated ? mt.tail_bound : nan);
    } else if (name == "error-scan") {
      ReportHandle rep;
      check(dc_error_scan(ctx.ptr, r, X_list.data(), X_list.size(), &rep.ptr));
      emit_report(rep.ptr);
    } else if (name == "r-scan") {
      ReportHandle rep;
      check(dc_r_scan(ctx.ptr, X, r_list.data(), r_list.size(), &rep.ptr));
      emit_report(rep.ptr);
    } else if (name == "modp") {
      dc_modp_row res{};
      check(dc_modp(ctx.ptr, p, X, &res));
      header("p,X,S,M,E,E_over_X2");
      row(res.p, res.X, res.S, res.M, res.E, res.E_over_X2);
    } else if (name == "modp-scan") {
      std::vector<dc_modp_row> rows(primes.size());
      check(dc_modp_scan(ctx.ptr, primes.data(), primes.size(), xrule.c_str(), rows.data()));
      header("p,X,S,M,E,E_over_X2");
      for (const auto& res : rows) row(res.p, res.X, res.S, res.M, res.E, res.E_over_X2);
    } else if (name == "kloosterman") {
      double s = 0.0, gap = 0.0;
      int degenerate = 0;
      check(dc_kloosterman(m, n, c, &s));
      check(dc_weil_gap(m, n, c, &gap, &degenerate));
      header("m,n,c,S,weil_gap");
      row(m, n, c, s, gap);
    } else if (name == "weil-scan") {
      if (cmax < 1 || mmax < 1 || nmax < 1) throw UsageError("cmax, mmax, nmax must be >= 1");
      header("m,n,c,S,weil_gap");
      for (int64_t cc = 1; cc <= cmax; ++cc) {
        for (int64_t mm = 1; mm <= mmax; ++mm) {
          for (int64_t nn = 1; nn <= nmax; ++nn) {
            double s = 0.0, gap = 0.0;
            int degenerate = 0;
            check(dc_kloosterman(mm, nn, cc, &s));
            check(dc_weil_gap(mm, nn, cc, &gap, &degenerate));
            row(mm, nn, cc, s, gap);
          }
        }
      }
    } else if (name == "poisson-check") {
      double residual = 0.0;
      if (q == 1) {
        check(dc_poisson_check(ctx.ptr, scale, &residual));
      } else {
        check(dc_twisted_poisson(ctx.ptr, a, q, scale, &residual));
      }
      header("scale,q,a,residual");
      row(scale, q, a, residual);
    } else if (name == "bessel-decay") {
      dc_osc_params params{};
      check(dc_osc_params_default(X, r, m, n, l, &params));
      header("eta,f_check_abs,f_check_envelope,f_ddot_abs,f_ddot_envelope");
      for (double eta : etas) {
        double cre = 0.0, cim = 0.0, dre = 0.0, dim = 0.0;
        check(dc_f_check(ctx.ptr, &params, eta, &cre, &cim));
        check(dc_f_ddot(ctx.ptr, &params, eta, &dre, &dim));
        const double fc = std::hypot(cre, cim), fd = std::hypot(dre, dim);
        const double boost = std::exp(M_PI * std::fabs(eta));
        row(eta, fc, fc * boost * eta * eta, fd, fd * boost * std::pow(std::fabs(eta), 2.5));
      }
    } else if (name == "bessel-identity") {
      double prod = 0.0, alt = 0.0;
      check(dc_bessel_identity(ctx.ptr, bx, by, kmax, &prod, &alt));
      header("x,y,kmax,product_residual,alternating_residual");
      row(bx, by, kmax, prod, alt);
    } else if (name == "cancellation") {
      if (mmax < 1 || nmax < 1) throw UsageError("mmax and nmax must be >= 1");
      header("m,n,signed_abs,absolute,ratio");
      for (int64_t mm = -mmax; mm <= mmax; ++mm) {
        for (int64_t nn = -nmax; nn <= nmax; ++nn) {
          if (mm == 0 || nn == 0) continue;
          dc_osc_params params{};
          check(dc_osc_params_default(X, r, mm, nn, l, &params));
          double re = 0.0, im = 0.0, absolute = 0.0;
          check(dc_weighted_kloosterman(ctx.ptr, &params, INT64_MAX, &re, &im, &absolute));
          const double s = std::hypot(re, im);
          row(mm, nn, s, absolute, absolute > 0.0 ? s / absolute : std::nan(""));
        }
      }
    }
    std::fflush(stdout);
    return 0;
  } catch (const UsageError& e) {
    std::fprintf(stderr, "detcount: %s\n", e.what());
    return kExitValidation;
  } catch (const CallError& e) {
    std::fprintf(stderr, "detcount: %s\n", e.what());
    return exit_code_for(e.status);
  }
}

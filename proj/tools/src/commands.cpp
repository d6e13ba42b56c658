#include "hcwalk_cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "hcwalk/bounds.hpp"
#include "hcwalk/csv.hpp"
#include "hcwalk/full_walk.hpp"
#include "hcwalk/spectral.hpp"

namespace hcwalk::cli {

namespace {

using csv::format_double;

struct Range {
  int lo;
  int hi;
};

Range n_range(const RunConfig& c, int default_lo, int default_hi) {
  if (c.n) {
    if (c.n_min || c.n_max) throw usage_error("--n cannot be combined with --n-min/--n-max");
    return {*c.n, *c.n};
  }
  Range r{c.n_min.value_or(default_lo), c.n_max.value_or(default_hi)};
  if (r.lo > r.hi) throw usage_error("--n-min must not exceed --n-max");
  return r;
}

void require_min_n(const Range& r, int min_n) {
  if (r.lo < min_n) throw usage_error("n must be >= " + std::to_string(min_n));
}

void require_cap(const Range& r, int cap, const std::string& why) {
  if (r.hi > cap) {
    throw usage_error("refusing n = " + std::to_string(r.hi) + " > " + std::to_string(cap) + ": " + why);
  }
}

int t_max_or(const RunConfig& c, int fallback) {
  const int t = c.t_max.value_or(fallback);
  if (t < 0) throw usage_error("--t-max must be >= 0");
  return t;
}

bool parity_matches(Parity p, int t) {
  return p == Parity::all || (p == Parity::even) == (t % 2 == 0);
}

}  // namespace

int run_simulate(const RunConfig& c, std::ostream& out, std::ostream&) {
  if (!c.n) throw usage_error("simulate needs --n");
  const Range r = n_range(c, 1, 1);
  require_min_n(r, 1);
  require_cap(r, kSimulateMaxN, "double precision cannot resolve the smallest probabilities beyond this");
  const auto profile = scan({*c.n, t_max_or(c, 2 * *c.n)});
  out << "t,p0,max_vertex_prob,argmax_w\n";
  for (const auto& rec : profile) {
    if (!parity_matches(c.parity, rec.t)) continue;
    out << rec.t << ',' << format_double(rec.p0) << ',' << format_double(rec.max_vertex_prob) << ',' << rec.argmax_w
        << '\n';
  }
  return kExitOk;
}

int run_figure1(const RunConfig& c, std::ostream& out, std::ostream&) {
  const Range r = n_range(c, 2, kSimulateMaxN);
  require_min_n(r, 2);
  require_cap(r, kSimulateMaxN, "double precision cannot resolve the smallest probabilities beyond this");
  out << "n,t_min,p_at_tmin,fit_t,envelope\n";
  for (int n = r.lo; n <= r.hi; ++n) {
    const auto profile = scan({n, 2 * n});
    const auto best = t_min(profile, c.parity);
    out << n << ',' << best.t << ',' << format_double(best.probability) << ',' << format_double(-0.754 + 0.849 * n)
        << ',' << format_double(5.0 * std::pow(1.93, -n)) << '\n';
  }
  return kExitOk;
}

int run_p0(const RunConfig& c, std::ostream& out, std::ostream&) {
  static const std::vector<std::string> methods{"all", "chebyshev", "bessel", "simulate"};
  if (std::find(methods.begin(), methods.end(), c.method) == methods.end()) {
    throw usage_error("unknown --method " + c.method);
  }
  const Range r = n_range(c, 2, 2);
  if (!c.n && !c.n_min && !c.n_max) throw usage_error("p0 needs --n or --n-min/--n-max");
  require_min_n(r, 1);
  require_cap(r, kSimulateMaxN, "double precision cannot resolve the smallest probabilities beyond this");
  const bool want_bessel = c.method == "all" || c.method == "bessel";
  const bool want_cheb = c.method != "simulate" && c.method != "bessel";
  if (c.method == "bessel" && c.t && *c.t % 2 != 0) throw usage_error("the Bessel route is only valid for even t");
  if (c.k_max < 0) throw usage_error("--k-max must be >= 0");

  bool all_agree = true;
  out << "n,t,p0_simulated,amp_chebyshev,amp_bessel,tail_bound,agree\n";
  for (int n = r.lo; n <= r.hi; ++n) {
    if (c.k_max > 0 && want_bessel && c.k_max < n) throw usage_error("--k-max must be >= n");
    int t_lo = 0;
    int t_hi = t_max_or(c, n);
    if (c.t) {
      if (*c.t < 0) throw usage_error("--t must be >= 0");
      t_lo = t_hi = *c.t;
    }
    const auto profile = scan({n, t_hi});
    for (int t = t_lo; t <= t_hi; ++t) {
      if (!parity_matches(c.parity, t)) continue;
      if (c.method == "bessel" && t % 2 != 0) continue;
      const double sim = profile[static_cast<std::size_t>(t)].p0;
      const double cheb = spectral::p0_amplitude_chebyshev(n, t);
      bool agree = !want_cheb || std::abs(sim - cheb * cheb) <= 1e-9;
      std::string bessel_col;
      std::string tail_col;
      if (want_bessel && t % 2 == 0) {
        double amp = 1.0;
        double budget = 1e-9;
        if (t > 0) {
          const auto b = spectral::p0_amplitude_bessel(n, t, c.k_max);
          amp = b.amplitude;
          budget += b.tail_bound + b.quad_error;
          tail_col = format_double(b.tail_bound);
        } else {
          tail_col = "0";
        }
        bessel_col = format_double(amp);
        const double reference = want_cheb ? std::abs(cheb) : std::sqrt(sim);
        agree = agree && std::abs(std::abs(amp) - reference) <= budget;
      }
      all_agree = all_agree && agree;
      out << n << ',' << t << ',' << format_double(sim) << ',' << (want_cheb ? format_double(cheb) : "") << ','
          << bessel_col << ',' << tail_col << ',' << (agree ? "true" : "false") << '\n';
    }
  }
  return all_agree ? kExitOk : kExitViolation;
}

int run_verify(const RunConfig& c, std::ostream& out, std::ostream& err) {
  std::vector<bounds::BoundReport> reports;
  if (c.suite == "theorem2") {
    const Range r = n_range(c, 4, 40);
    const double alpha = bounds::BoundParams{}.alpha;
    for (int n = r.lo; n <= r.hi; ++n) {
      const int nu = c.t.value_or(static_cast<int>(std::floor(bounds::BoundParams{}.t_coeff * n)));
      if (!bounds::theorem2_admissible(n, nu, alpha)) {
        err << "skipping n=" << n << ", nu=" << nu << ": requires n*alpha < nu < n, n*alpha >= 1, n >= 2\n";
        continue;
      }
      for (auto& rep : bounds::theorem2_bounds(n, nu, alpha)) reports.push_back(rep);
    }
  } else if (c.suite == "lemma1") {
    const Range r = n_range(c, 12, 12);
    require_min_n(r, 2);
    require_cap(r, kSimulateMaxN, "double precision cannot resolve the smallest probabilities beyond this");
    const int t_max = t_max_or(c, 20);
    for (int n = r.lo; n <= r.hi; ++n) {
      auto emp = bounds::lemma1_empirical(n, t_max, n);
      auto proof = bounds::lemma1_proof_inequalities(n, t_max);
      reports.insert(reports.end(), emp.begin(), emp.end());
      reports.insert(reports.end(), proof.begin(), proof.end());
    }
  } else if (c.suite == "theorem1") {
    const Range r = n_range(c, 10, 50);
    require_min_n(r, 2);
    require_cap(r, kSimulateMaxN, "double precision cannot resolve the smallest probabilities beyond this");
    const bounds::BoundParams params;
    const double constant = bounds::calibrate_theorem1_constant(r.lo, params);
    err << "theorem1 constant calibrated at n=" << r.lo << ": C=" << format_double(constant) << '\n';
    for (int n = r.lo; n <= r.hi; ++n) {
      for (auto& rep : bounds::theorem1_check(n, params, constant)) reports.push_back(rep);
    }
  } else if (c.suite == "appendix") {
    reports = bounds::appendix_reports();
    for (auto& rep : bounds::bessel_diagonal_reports(200)) reports.push_back(rep);
    for (auto& rep : bounds::bessel_scaling_reports(60)) reports.push_back(rep);
    for (auto& rep : bounds::stirling_bounds_check(50, bounds::BoundParams{}.c)) reports.push_back(rep);
    reports.push_back(bounds::entropy_binomial_report(20, 5));
  } else {
    throw usage_error("--suite must be one of theorem2, lemma1, theorem1, appendix");
  }
  csv::write_reports(out, reports);
  return bounds::all_pass(reports) ? kExitOk : kExitViolation;
}

int run_cross_validate(const RunConfig& c, std::ostream& out, std::ostream&) {
  const Range r = n_range(c, 1, kCrossValidateMaxN);
  require_min_n(r, 1);
  require_cap(r, kCrossValidateMaxN, "the dense oracle is limited to small dimensions");
  const int t_max = t_max_or(c, 30);
  bool ok = true;
  out << "n,t,max_discrepancy,residual_norm\n";
  for (int n = r.lo; n <= r.hi; ++n) {
    SymmetricState sym = start_state(n);
    FullState full = full_start(n);
    for (int t = 0; t <= t_max; ++t) {
      if (t > 0) {
        sym = step(sym);
        full = full_step(full);
      }
      const SymmetricState proj = project_symmetric(full);
      double diff = 0.0;
      for (int w = 0; w < n; ++w) diff = std::max(diff, std::abs(proj.right(w) - sym.right(w)));
      for (int w = 1; w <= n; ++w) diff = std::max(diff, std::abs(proj.left(w) - sym.left(w)));
      const double residual = residual_outside_symmetric(full);
      ok = ok && diff <= 1e-10 && residual <= 1e-12;
      if (!parity_matches(c.parity, t)) continue;
      out << n << ',' << t << ',' << format_double(diff) << ',' << format_double(residual) << '\n';
    }
  }
  return ok ? kExitOk : kExitViolation;
}

int run_equilibrium(const RunConfig&, std::ostream& out, std::ostream&) {
  const double c = bounds::equilibrium_c();
  out << "c,case1,case2,entropy_rate\n";
  out << format_double(c) << ',' << format_double(bounds::equilibrium_case1(c)) << ','
      << format_double(bounds::equilibrium_case2(c)) << ',' << format_double(std::exp2(bounds::binary_entropy(c)))
      << '\n';
  return kExitOk;
}

int dispatch(const RunConfig& c, std::ostream& out, std::ostream& err) {
  try {
    if (c.command == "simulate") return run_simulate(c, out, err);
    if (c.command == "figure1") return run_figure1(c, out, err);
    if (c.command == "p0") return run_p0(c, out, err);
    if (c.command == "verify") return run_verify(c, out, err);
    if (c.command == "cross-validate") return run_cross_validate(c, out, err);
    if (c.command == "equilibrium") return run_equilibrium(c, out, err);
    throw usage_error("unknown command '" + c.command + "'");
  } catch (const usage_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace hcwalk::cli

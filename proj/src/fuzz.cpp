#include "numrad/fuzz.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include "numrad/ab_normal.hpp"
#include "numrad/alpha_norm.hpp"
#include "numrad/ingredients.hpp"
#include "numrad/matrix_io.hpp"
#include "numrad/random.hpp"

namespace numrad {

namespace {

constexpr double kAlphaGrid[] = {0.0, 0.25, 0.5, 0.75, 1.0};
constexpr std::uint64_t kVectorSalt = 0x5ca1a7;

using nlohmann::json;

struct TrialOutcome {
  std::vector<Violation> violations;
  std::size_t checks = 0;
  std::optional<double> open_question_excess;
};

class Recorder {
 public:
  Recorder(TrialOutcome& out, std::size_t trial, Ensemble e, const ComplexMatrix& t)
      : out_(out), trial_(trial), ensemble_(e), t_(t) {}

  void check(bool ok, std::string property, json observed) {
    ++out_.checks;
    if (!ok) out_.violations.push_back({trial_, ensemble_, t_.rows(), std::move(property), t_, std::move(observed)});
  }

 private:
  TrialOutcome& out_;
  std::size_t trial_;
  Ensemble ensemble_;
  const ComplexMatrix& t_;
};

void run_trial(const FuzzConfig& cfg, std::size_t trial, Ensemble e, std::size_t dim, TrialOutcome& out) {
  const ComplexMatrix t = random_matrix(e, dim, cfg.seed, trial);
  Recorder rec(out, trial, e, t);
  const double tol = cfg.tol;

  try {
    for (MatrixFormat f : {MatrixFormat::Json, MatrixFormat::Text}) {
      const bool same = parse_matrix(render_matrix(t, f)) == t;
      rec.check(same, f == MatrixFormat::Json ? "ROUNDTRIP_JSON" : "ROUNDTRIP_TEXT", json::object());
    }

    const BoundContext ctx(t, cfg.radius_tol);
    const BoundReport report = bound_report(ctx);
    const RadiusBracket& w = report.w_bracket;
    const double nt = report.norm;
    const double slack_w = 1e-9 * std::max(1.0, nt);
    const double slack_w2 = 1e-9 * std::max(1.0, nt * nt);

    rec.check(w.lower >= nt / 2.0 - tol, "EQV1_LOWER", {{"w_lower", w.lower}, {"norm", nt}});
    rec.check(w.upper <= nt + tol, "EQV1_UPPER", {{"w_upper", w.upper}, {"norm", nt}});

    for (const BoundValue& b : report.entries) {
      const double v = b.on_w_scale();
      const bool ok = b.is_upper() ? v >= w.lower - tol : v <= w.upper + tol;
      rec.check(ok, "CATALOG_" + std::string(to_string(b.id)),
                {{"value_on_w_scale", v}, {"w_lower", w.lower}, {"w_upper", w.upper}});
    }

    const GammaDelta gd = gamma_delta(ctx);
    const double sum_sq = 0.25 * hermitian_norm(ctx.abs_sq() + ctx.abs_star_sq());
    const double min_gd_sq = std::min(gd.gamma * gd.gamma, gd.delta * gd.delta);
    const double middle = sum_sq + 0.5 * ctx.re_abs_product_norm();
    const double right = sum_sq + 0.5 * ctx.radius_abs_product().upper;
    rec.check(min_gd_sq <= middle + slack_w2, "REM1_CHAIN_LEFT", {{"min_gamma_delta_sq", min_gd_sq}, {"middle", middle}});
    rec.check(middle <= right + slack_w2, "REM1_CHAIN_RIGHT", {{"middle", middle}, {"right", right}});

    const Eqn5Classics classics = eqn5_and_classics(ctx);
    rec.check(classics.eqn5 <= classics.kittaneh_sum + slack_w2, "EQN5_CHAIN",
              {{"eqn5", classics.eqn5}, {"kittaneh_sum", classics.kittaneh_sum}});

    const Th4Impr1 impr = bound_th4_impr1(ctx);
    rec.check(impr.impr1 <= nt + slack_w, "IMPR1_NORM", {{"impr1", impr.impr1}, {"norm", nt}});

    for (double a : kAlphaGrid) {
      AlphaNormOptions opts;
      opts.restarts = cfg.alpha_restarts;
      opts.seed = trial;
      opts.radius_tol = cfg.radius_tol;
      const AlphaNormEstimate est = alpha_norm_estimate(t, a, opts, w);
      const json obs = {{"alpha", a},        {"best_value", est.best_value}, {"upper_cert", est.upper_cert},
                        {"w_lower", w.lower}, {"w_upper", w.upper},           {"norm", nt}};
      rec.check(w.lower - tol <= est.upper_cert, "EQV2_LOWER", obs);
      rec.check(est.best_value <= nt + tol, "EQV2_UPPER", obs);
      rec.check(est.best_value <= est.upper_cert + slack_w, "ALPHA_CERT", obs);
      if (a == 0.0) rec.check(std::abs(est.best_value - nt) <= 1e-6, "ALPHA_ENDPOINT_0", obs);
      if (a == 1.0)
        rec.check(est.best_value >= w.lower - 1e-6 && est.best_value <= w.upper + 1e-6, "ALPHA_ENDPOINT_1", obs);
    }

    const ABNormalCertificate cert = ab_certify(t);
    if (e == Ensemble::Normal || e == Ensemble::HyponormalDiag) {
      const bool beta_one = cert.is_ab_normal && std::abs(cert.beta_best - 1.0) <= 1e-8;
      rec.check(beta_one, "AB_BETA_ONE", {{"beta_best", cert.beta_best}, {"is_ab_normal", cert.is_ab_normal}});
    }
    const double sigma_min_sq = std::max(ctx.gram_right().eigenvalues.back(), 0.0);
    const double cut = default_kernel_tol(dim) * nt;
    const bool invertible = nt > 0.0 && sigma_min_sq > cut * cut;
    if (cert.is_ab_normal && nt > 0.0) {
      const double th5 = lower_th5(t, cert), th6 = lower_th6(t, cert), sab = lower_sab(t, cert);
      const json obs = {{"lower_th5", th5}, {"lower_th6", th6}, {"lower_sab", sab},
                        {"alpha_best", cert.alpha_best}, {"beta_best", cert.beta_best},
                        {"w_upper", w.upper}, {"norm", nt}};
      rec.check(sab <= th5 + slack_w, "AB_ORDER_TH5", obs);
      rec.check(sab <= th6 + slack_w, "AB_ORDER_TH6", obs);
      rec.check(th5 <= w.upper + tol, "AB_SOUND_TH5", obs);
      rec.check(th6 <= w.upper + tol, "AB_SOUND_TH6", obs);
      rec.check(sab <= w.upper + tol, "AB_SOUND_SAB", obs);

      const ComplexMatrix t_star = adjoint(t);
      auto ratio_parts = [&](std::span<const Complex> x) { return std::pair{norm(t * x), norm(t_star * x)}; };
      const auto [tw, tsw] = ratio_parts(cert.witness_min);
      rec.check(std::abs(tsw / tw - cert.raw_min_ratio) <= 1e-8, "AB_WITNESS",
                {{"ratio_at_witness", tsw / tw}, {"raw_min_ratio", cert.raw_min_ratio}});
      if (invertible) {
        rec.check(sab - nt / 2.0 > 1e-12 * nt, "AB_STRICT", obs);
        rec.check(w.upper > nt / 2.0, "W_EXCEEDS_HALF_NORM", obs);
        if (cert.alpha_best > 0.0) {
          auto rng = stream(cfg.seed, trial, kVectorSalt + 1);
          double worst_low = -INFINITY, worst_high = -INFINITY;
          for (int k = 0; k < 100; ++k) {
            const Vector x = random_unit_vector(rng, dim);
            const auto [tx, tsx] = ratio_parts(x);
            worst_low = std::max(worst_low, cert.alpha_best * tx - tsx);
            worst_high = std::max(worst_high, tsx - cert.beta_best * tx);
          }
          rec.check(worst_low <= 1e-8 && worst_high <= 1e-8, "AB_CERT",
                    {{"max_alpha_excess", worst_low}, {"max_beta_excess", worst_high}});
        }
      }
    }

    const IngredientContext ingredients(t);
    auto rng = stream(cfg.seed, trial, kVectorSalt);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int k = 0; k < cfg.vector_samples; ++k) {
      const Vector x = random_unit_vector(rng, dim);
      const Vector y = random_unit_vector(rng, dim);
      const double r = unit(rng);
      const IngredientChecks c = ingredients.check(x, y, r);
      auto obs = [&](double slack) { return json{{"sample", k}, {"r", r}, {"slack", slack}}; };
      rec.check(c.kato, "INGREDIENT_KATO", obs(c.kato_slack));
      rec.check(c.kittaneh_fg, "INGREDIENT_KITTANEH_FG", obs(c.kittaneh_fg_slack));
      rec.check(c.mccarthy, "INGREDIENT_MCCARTHY", obs(c.mccarthy_slack));
      rec.check(c.buzano, "INGREDIENT_BUZANO", obs(c.buzano_slack));
    }

    out.open_question_excess = w.lower - impr.inner_min;

    const TrialView view{trial, e, t, report};
    for (const ExtraProperty& p : cfg.extra) {
      std::optional<json> obs = p.check(view);
      rec.check(!obs, p.id, obs.value_or(json::object()));
    }
  } catch (const Error& err) {
    if (!err.is_numerical()) throw;
    rec.check(false, kNumericalFailure, {{"error", err.what()}});
  }
}

void validate(const FuzzConfig& cfg) {
  if (cfg.trials < 1) throw Error(ErrorCode::BadConfig, "trials must be at least 1");
  if (cfg.dims.empty()) throw Error(ErrorCode::BadConfig, "dims must not be empty");
  if (cfg.ensembles.empty()) throw Error(ErrorCode::BadConfig, "ensembles must not be empty");
  for (std::size_t d : cfg.dims)
    if (d == 0) throw Error(ErrorCode::BadConfig, "dimensions must be positive");
  if (!(cfg.tol >= 0.0)) throw Error(ErrorCode::BadConfig, "tol must be nonnegative");
  if (cfg.alpha_restarts < 1) throw Error(ErrorCode::BadConfig, "alpha_restarts must be positive");
}

}  // namespace

std::size_t FuzzSummary::numerical_failures() const {
  return static_cast<std::size_t>(std::count_if(violations.begin(), violations.end(),
                                                [](const Violation& v) { return v.property == kNumericalFailure; }));
}

int FuzzSummary::exit_code() const {
  if (violations.empty()) return 0;
  return numerical_failures() == violations.size() ? 3 : 1;
}

nlohmann::json FuzzSummary::to_json(bool include_timing) const {
  json ens = json::array();
  for (Ensemble e : ensembles) ens.push_back(std::string(to_string(e)));
  json viol = json::array();
  for (const Violation& v : violations) {
    viol.push_back({{"trial", v.trial},
                    {"ensemble", std::string(to_string(v.ensemble))},
                    {"dim", v.dim},
                    {"property", v.property},
                    {"matrix", matrix_to_json(v.matrix)},
                    {"observed", v.observed}});
  }
  json j = {{"seed", seed},
            {"trials", trials},
            {"dims", dims},
            {"ensembles", ens},
            {"tol", tol},
            {"matrices", matrices},
            {"checks", checks},
            {"violations", viol},
            {"numerical_failures", numerical_failures()},
            {"open_question",
             {{"statement", "w(T) <= min_a ||a|T| + (1-a)|T*|||"},
              {"support", open_question.support},
              {"counterexamples", open_question.counterexamples},
              {"counterexample_trials", open_question.counterexample_trials},
              {"max_excess", open_question.max_excess}}},
            {"exit_code", exit_code()}};
  if (include_timing) j["elapsed_seconds"] = elapsed;
  return j;
}

FuzzSummary fuzz(const FuzzConfig& cfg) {
  validate(cfg);
  const auto start = std::chrono::steady_clock::now();

  struct Job {
    std::size_t trial;
    Ensemble ensemble;
    std::size_t dim;
  };
  std::vector<Job> jobs;
  for (std::size_t k = 0; k < cfg.ensembles.size(); ++k)
    for (int i = 0; i < cfg.trials; ++i)
      jobs.push_back({k * static_cast<std::size_t>(cfg.trials) + static_cast<std::size_t>(i), cfg.ensembles[k],
                      cfg.dims[static_cast<std::size_t>(i) % cfg.dims.size()]});

  std::vector<TrialOutcome> outcomes(jobs.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t j; (j = next.fetch_add(1)) < jobs.size();) {
      try {
        run_trial(cfg, jobs[j].trial, jobs[j].ensemble, jobs[j].dim, outcomes[j]);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = jobs.size();
      }
    }
  };
  unsigned threads = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, jobs.size()));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned k = 0; k < threads; ++k) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  FuzzSummary s;
  s.seed = cfg.seed;
  s.trials = cfg.trials;
  s.dims = cfg.dims;
  s.ensembles = cfg.ensembles;
  s.tol = cfg.tol;
  s.matrices = jobs.size();
  s.open_question.max_excess = -INFINITY;
  for (std::size_t j = 0; j < jobs.size(); ++j) {
    TrialOutcome& o = outcomes[j];
    s.checks += o.checks;
    for (Violation& v : o.violations) s.violations.push_back(std::move(v));
    if (o.open_question_excess) {
      const double ex = *o.open_question_excess;
      s.open_question.max_excess = std::max(s.open_question.max_excess, ex);
      if (ex <= cfg.tol) {
        ++s.open_question.support;
      } else {
        ++s.open_question.counterexamples;
        s.open_question.counterexample_trials.push_back(jobs[j].trial);
      }
    }
  }
  if (!std::isfinite(s.open_question.max_excess)) s.open_question.max_excess = 0.0;
  std::stable_sort(s.violations.begin(), s.violations.end(), [](const Violation& a, const Violation& b) {
    return a.trial != b.trial ? a.trial < b.trial : a.property < b.property;
  });
  s.elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return s;
}

}  // namespace numrad

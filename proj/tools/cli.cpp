#include "cli.hpp"

#include <algorithm>
#include <iostream>

#include "CLI11.hpp"
#include "numrad/ab_normal.hpp"
#include "numrad/alpha_norm.hpp"
#include "numrad/matrix_io.hpp"
#include "numrad/report_format.hpp"
#include "numrad/worked_examples.hpp"

namespace numrad::cli {

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const std::vector<ExtraProperty>& extra) {
  CLI::App app{"numrad: numerical radius, alpha-norms and their bounds"};
  app.require_subcommand(1);
  int status = kSuccess;

  std::string file;
  double tol = 1e-9;
  std::string format = "table";

  auto* report = app.add_subcommand("report", "every catalog bound for one matrix");
  report->add_option("file", file, "matrix file (JSON or text)")->required();
  report->add_option("--tol", tol, "numerical radius bracket width")->capture_default_str();
  report->add_option("--format", format, "table, json or csv")->check(CLI::IsMember({"table", "json", "csv"}))
      ->capture_default_str();
  report->callback([&] {
    const BoundReport r = bound_report(load_matrix(file), tol);
    out << render(r, parse_report_format(format));
  });

  auto* radius = app.add_subcommand("radius", "certified numerical radius bracket");
  radius->add_option("file", file)->required();
  radius->add_option("--tol", tol)->capture_default_str();
  radius->callback([&] { out << to_json(numerical_radius(load_matrix(file), tol)).dump(2) << '\n'; });

  AlphaNormOptions alpha_opts;
  double alpha = 0.0;
  auto* alpha_norm = app.add_subcommand("alpha-norm", "alpha-norm sandwich");
  alpha_norm->add_option("file", file)->required();
  alpha_norm->add_option("--alpha", alpha)->required();
  alpha_norm->add_option("--restarts", alpha_opts.restarts)->capture_default_str();
  alpha_norm->add_option("--seed", alpha_opts.seed)->capture_default_str();
  alpha_norm->callback([&] {
    const ComplexMatrix t = load_matrix(file);
    out << to_json(alpha_norm_estimate(t, alpha, alpha_opts)).dump(2) << '\n';
  });

  double kernel_tol = 0.0;
  auto* abnormal = app.add_subcommand("abnormal", "(alpha, beta)-normality certificate");
  abnormal->add_option("file", file)->required();
  abnormal->add_option("--tol", kernel_tol, "relative kernel cut (default sqrt(n eps))");
  abnormal->callback([&] {
    const ComplexMatrix t = load_matrix(file);
    const ABNormalCertificate cert = ab_certify(t, kernel_tol);
    nlohmann::json j = to_json(cert);
    if (cert.is_ab_normal) {
      j["lower_th5"] = lower_th5(t, cert);
      j["lower_th6"] = lower_th6(t, cert);
      j["lower_sab"] = lower_sab(t, cert);
    }
    out << j.dump(2) << '\n';
  });

  FuzzConfig fz;
  fz.extra = extra;
  std::vector<std::string> ensembles{"ginibre"};
  bool no_timing = false;
  auto* fuzz_cmd = app.add_subcommand("fuzz", "seeded property fuzzing over random ensembles");
  fuzz_cmd->add_option("--dims", fz.dims)->delimiter(',')->capture_default_str();
  fuzz_cmd->add_option("--trials", fz.trials, "matrices per ensemble")->capture_default_str();
  fuzz_cmd->add_option("--ensemble", ensembles, "ginibre, normal, nilpotent-shift, hyponormal-diag")
      ->delimiter(',')
      ->capture_default_str();
  fuzz_cmd->add_option("--seed", fz.seed)->capture_default_str();
  fuzz_cmd->add_option("--tol", fz.tol)->capture_default_str();
  fuzz_cmd->add_option("--restarts", fz.alpha_restarts, "random starts per alpha-norm estimate")->capture_default_str();
  fuzz_cmd->add_option("--threads", fz.threads, "worker threads, 0 for all cores")->capture_default_str();
  fuzz_cmd->add_flag("--no-timing", no_timing, "omit elapsed time from the output");
  fuzz_cmd->callback([&] {
    fz.ensembles.clear();
    for (const std::string& e : ensembles) fz.ensembles.push_back(parse_ensemble(e));
    const FuzzSummary s = fuzz(fz);
    out << s.to_json(!no_timing).dump(2) << '\n';
    err << s.matrices << " matrices, " << s.checks << " checks, " << s.violations.size() << " violations\n";
    status = s.exit_code();
  });

  std::string examples_format = "table";
  auto* examples = app.add_subcommand("paper-examples", "closed-form checks on the two worked examples");
  examples->add_option("--format", examples_format)->check(CLI::IsMember({"table", "json"}))->capture_default_str();
  examples->callback([&] {
    const WorkedExamples ex = worked_examples();
    if (examples_format == "json") {
      out << to_json(ex).dump(2) << '\n';
    } else {
      out << render_table(ex);
    }
    if (!ex.all_pass()) status = kViolation;
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kInputError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.is_numerical() ? kNumericalFailure : kInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return status;
}

}  // namespace numrad::cli

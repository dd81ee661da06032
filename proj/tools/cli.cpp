// Copyright 2026 The qrobust Authors
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

#include "cli.hpp"

#include <cmath>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "qrobust/corpus.hpp"
#include "qrobust/coset.hpp"
#include "qrobust/errors.hpp"
#include "qrobust/oracle.hpp"
#include "qrobust/properties.hpp"
#include "qrobust/report.hpp"
#include "qrobust/robustness.hpp"
#include "qrobust/sampling.hpp"
#include "qrobust/wootters.hpp"

namespace qrobust::cli {
namespace {

constexpr const char* kEpilogue = R"(Tolerance overrides: QROBUST_TOL="key=value,..." (or a bare number, which
sets identity, orthogonality, moment and oracle_agreement together). Keys:
hermitian_input symmetric_input state_hermiticity state_trace state_psd
jacobi_offdiag rank_relative takagi_failure ppt bisection identity
orthogonality moment oracle_agreement.

Corpus CSV columns (sample):
  seed_index        position in the corpus
  seed              per-state seed derived from --seed
  rank              rank of rho
  concurrence       max(0, l1 - l2 - l3 - l4)
  K1..K4            <x'_i|x'_i> (nan where lambda_i vanishes)
  P1..P4            tetrahedron coordinates lambda_i K_i
  min_pair_sum      min K_i + K_j over pairs in {2,3,4}
  k_index           separable vertex sigma_k of the certificate
  s_formula         C * min_pair_sum / 2
  s_bisection       PPT bisection along sigma_k
  bisection_gap     |s_bisection - s_formula|
  s_best, gap       absolute-robustness search and s_formula - s_best (--oracle)
  k_closed_form_err max |K closed form - K decomposition| (coset ensemble)

All numbers are written with 17 significant digits.
Exit codes: 0 ok, 1 property failure, 2 invalid input, 3 rank-deficient
input with --no-fallback, 4 I/O error.)";

void emit(const Json& j, const std::string& path, std::ostream& out) {
  const std::string text = dump_json(j) + "\n";
  if (path.empty()) {
    out << text;
  } else {
    write_text_file(path, text);
  }
}

double max_identity_defect(const ComplexMatrix4& m) { return max_abs(m - ComplexMatrix4::identity()); }

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double x = 0.0;
    try {
      x = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw ParseError("not a number: '" + item + "'");
    v.push_back(x);
  }
  return v;
}

// Runs `body` and maps library errors onto exit codes.
template <typename F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const ValidationError& e) {
    err << "error: invalid input (" << e.invariant() << ", amount " << format_double(e.amount())
        << "): " << e.what() << "\n";
    return kInvalidInput;
  } catch (const RankDeficient& e) {
    err << "error: unsupported input: " << e.what() << "\n";
    return kUnsupportedInput;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kIoFailure;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  }
}

}  // namespace

Json analyze_state(const DensityMatrix& rho, const AnalyzeOptions& options, const Tolerances& tol) {
  const WoottersDecomposition d = decompose(rho, tol);
  Json j;
  j["decomposition"] = decomposition_json(d);
  j["concurrence"] = d.concurrence;
  if (d.full_rank()) {
    const RobustnessCertificate cert = robustness(rho, d, tol);
    j["method"] = "closed form";
    j["s"] = cert.s;
    j["certificate"] = certificate_json(cert);
    const VerificationReport rep =
        verify_certificate(rho, cert, options.oracle ? options.budget : 0, options.seed, tol);
    j["verification"] = verification_json(rep);
    return j;
  }
  if (!options.fallback) {
    throw RankDeficient("closed-form robustness needs a full-rank state (rank " +
                        std::to_string(d.rank) + "); rerun without --no-fallback for an oracle estimate");
  }
  const OracleResult r = minimize_absolute_robustness(rho, options.budget, options.seed, {}, tol);
  j["method"] = "oracle estimate";
  j["limitation"] = "closed form needs all four Wootters values nonzero; s is an upper bound from "
                    "the separable-direction search";
  j["s"] = r.s_best;
  j["oracle"] = oracle_json(r);
  return j;
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"qrobust: two-qubit concurrence, Wootters decomposition and robustness of entanglement"};
  app.footer(kEpilogue);
  app.require_subcommand(1);

  std::string in_path, out_path, states_path, report_path, ensemble_name, lambda_text, tol_text;
  bool with_oracle = false;
  bool no_fallback = false;
  bool serial = false;
  int budget = 20;
  long count = 0;
  long corpus = 200;
  std::uint64_t seed = 0;
  coset::CosetParams params;

  auto* analyze = app.add_subcommand("analyze", "Decompose a state and certify its robustness");
  analyze->add_option("--in", in_path, "State file (JSON)")->required();
  analyze->add_flag("--oracle", with_oracle, "Also run the absolute-robustness search");
  analyze->add_flag("--no-fallback", no_fallback, "Fail (exit 3) on rank-deficient input");
  analyze->add_option("--budget", budget, "Search restarts")->capture_default_str()->check(CLI::NonNegativeNumber);
  analyze->add_option("--seed", seed, "Search seed")->capture_default_str();
  analyze->add_option("--out", out_path, "Report file (default: stdout)");

  auto* sample = app.add_subcommand("sample", "Evaluate a seeded ensemble and write a CSV");
  sample->add_option("--ensemble", ensemble_name, "ginibre | bures | bell_diagonal | coset")->required();
  sample->add_option("--n", count, "Number of states")->required();
  sample->add_option("--seed", seed, "Master seed")->capture_default_str();
  sample->add_flag("--oracle", with_oracle, "Add s_best and gap columns");
  sample->add_option("--budget", budget, "Search restarts per state")->capture_default_str()->check(CLI::NonNegativeNumber);
  sample->add_option("--out", out_path, "CSV file")->required();
  sample->add_option("--states-out", states_path, "Also write the states (32-column CSV)");
  sample->add_flag("--serial", serial, "Evaluate on one thread");

  auto* param = app.add_subcommand("param", "Build a state from coset parameters");
  param->add_option("--theta1", params.theta1)->required();
  param->add_option("--theta2", params.theta2)->required();
  param->add_option("--xi1", params.xi1, "Must be >= 0")->required();
  param->add_option("--xi2", params.xi2, "Must be >= 0")->required();
  param->add_option("--phi1", params.phi1)->required();
  param->add_option("--phi2", params.phi2)->required();
  param->add_option("--lambda", lambda_text, "Four descending nonnegative values, comma separated")->required();
  param->add_option("--out", out_path, "State file to write")->required();
  param->add_option("--report", report_path, "Also write the analysis report");

  auto* verify = app.add_subcommand("verify", "Run the invariant suite");
  verify->add_option("--corpus", corpus, "Corpus size")->capture_default_str();
  verify->add_option("--seed", seed, "Master seed")->capture_default_str();
  verify->add_option("--tol", tol_text, "Tolerance overrides, same syntax as QROBUST_TOL");
  verify->add_option("--out", out_path, "Summary file (default: stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    for (const auto* sub : {analyze, sample, param, verify}) {
      if (sub->parsed()) {
        err << sub->help();
        return kInvalidInput;
      }
    }
    err << app.help();
    return kInvalidInput;
  }

  return guarded(err, [&]() -> int {
    Tolerances tol = tolerances_from_env();

    if (analyze->parsed()) {
      const DensityMatrix rho = read_state(in_path, tol);
      AnalyzeOptions opt;
      opt.oracle = with_oracle;
      opt.fallback = !no_fallback;
      opt.budget = budget;
      opt.seed = seed;
      Json report;
      report["input"] = in_path;
      const Json analysis = analyze_state(rho, opt, tol);
      for (const auto& [k, v] : analysis.items()) report[k] = v;
      emit(report, out_path, out);
      return kOk;
    }

    if (sample->parsed()) {
      const Ensemble ens = parse_ensemble(ensemble_name);
      if (count < 1) throw ValidationError("n >= 1", static_cast<double>(count), "--n must be at least 1");
      CorpusOptions opt;
      opt.oracle = with_oracle;
      opt.oracle_budget = budget;
      const auto n = static_cast<std::size_t>(count);
      const auto rows = serial ? evaluate_corpus_serial(ens, n, seed, opt, tol)
                               : evaluate_corpus(ens, n, seed, opt, tol);
      for (const auto& r : rows) {
        if (!r.error.empty()) err << "warning: state " << r.index << ": " << r.error << "\n";
      }
      write_text_file(out_path, corpus_csv(rows, ens, with_oracle));
      if (!states_path.empty()) {
        std::string text = "seed_index,seed," + state_csv_header() + "\n";
        for (std::size_t i = 0; i < n; ++i) {
          const std::uint64_t s = derive_seed(seed, i);
          text += std::to_string(i) + "," + std::to_string(s) + "," + state_csv_row(sample_state(ens, s)) + "\n";
        }
        write_text_file(states_path, text);
      }
      return kOk;
    }

    if (param->parsed()) {
      const std::vector<double> lam = parse_list(lambda_text);
      if (lam.size() != 4) {
        throw ValidationError("lambda count", static_cast<double>(lam.size()), "--lambda needs exactly 4 values");
      }
      std::copy(lam.begin(), lam.end(), params.lambda.begin());
      coset::validate(params);
      const coset::CosetParams p = coset::normalized(params);
      const DensityMatrix rho = coset::density_from_params(p);
      const ComplexMatrix4 y = coset::build_Y(p);
      const ComplexMatrix4 x = coset::build_X(p);
      const double y_res = max_identity_defect(transpose(y) * y);
      const double x_res = max_identity_defect(transpose(x) * sigma_yy() * x);
      write_state(rho, out_path);
      out << "Y^T Y - I residual: " << format_double(y_res) << "\n";
      out << "X^T (sy x sy) X - I residual: " << format_double(x_res) << "\n";
      if (!report_path.empty()) {
        Json report;
        report["params"] = params_json(params);
        report["normalized_params"] = params_json(p);
        report["k_closed_form"] = Json::array();
        for (double k : coset::k_closed_form(p)) report["k_closed_form"].push_back(k);
        report["residuals"] = {{"YtY", y_res}, {"XtSX", x_res}};
        report["state"] = state_to_json(rho);
        report["analysis"] = analyze_state(rho, {}, tol);
        write_text_file(report_path, dump_json(report) + "\n");
      }
      return kOk;
    }

    // verify
    if (!tol_text.empty()) tol = apply_overrides(tol, tol_text);
    if (corpus < 1) throw ValidationError("corpus >= 1", static_cast<double>(corpus), "--corpus must be at least 1");
    PropertySuiteOptions opt;
    opt.corpus = static_cast<std::size_t>(corpus);
    opt.seed = seed;
    const auto results = run_property_suite(opt, tol);
    Json summary = properties_json(results);
    emit(summary, out_path, out);
    bool ok = true;
    for (const auto& r : results) {
      if (!r.passed) {
        ok = false;
        err << "FAILED " << r.group << "." << r.name << ": worst " << format_double(r.worst)
            << " > limit " << format_double(r.limit) << "\n";
      }
    }
    return ok ? kOk : kPropertyFailure;
  });
}

}  // namespace qrobust::cli

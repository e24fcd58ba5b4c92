// jcm: figure data and validation runs for the thermal Jaynes-Cummings model.
//
//   jcm lambda   --n-list 0,10,100 --tau-max 25 --steps 2000 --out lambda.csv
//   jcm bound    --nbar 10 --tau-max 25 --steps 500 --tail-eps 1e-12 --out bound.csv
//   jcm ppt23    --lambda-e 0.5 --n 1 --tau-max 25 --steps 500 --out ppt23.csv
//   jcm validate [--perturb <eps>]
//   jcm demo
//
// Exit codes: 0 success, 1 domain/config error, 2 numeric/validation failure,
// 3 I/O error.

#include <iostream>
#include <locale>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "jcm/errors.hpp"
#include "jcm/report.hpp"
#include "jcm/validate.hpp"

namespace {

constexpr int kExitDomain = 1;
constexpr int kExitNumeric = 2;
constexpr int kExitIo = 3;

template <class Config>
void emit_csv(const std::string& path, const Config& config,
              void (*writer)(std::ostream&, const Config&)) {
  std::ostringstream csv;
  csv.imbue(std::locale::classic());
  writer(csv, config);
  if (path.empty() || path == "-") {
    std::cout << csv.str();
  } else {
    jcm::write_text_file(path, csv.str());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Thermal Jaynes-Cummings entanglement: witness scans, bounds, validation"};
  app.require_subcommand(1);

  jcm::LambdaConfig lambda_cfg;
  std::string lambda_out = "lambda.csv";
  auto* lambda_cmd = app.add_subcommand("lambda", "Witness Lambda_n(tau) for a list of photon numbers");
  lambda_cmd->add_option("--n-list", lambda_cfg.n_list, "Photon numbers n")->delimiter(',');
  lambda_cmd->add_option("--tau-max", lambda_cfg.tau_max, "Largest g*t");
  lambda_cmd->add_option("--steps", lambda_cfg.steps, "Grid points including both endpoints");
  lambda_cmd->add_option("--out", lambda_out, "Output CSV ('-' for stdout)");

  jcm::BoundConfig bound_cfg;
  std::string bound_out = "bound.csv";
  auto* bound_cmd = app.add_subcommand("bound", "Mutual information and EoF lower bound vs tau");
  bound_cmd->add_option("--nbar", bound_cfg.nbar, "Mean thermal photon number");
  bound_cmd->add_option("--tau-max", bound_cfg.tau_max, "Largest g*t");
  bound_cmd->add_option("--steps", bound_cfg.steps, "Grid points including both endpoints");
  bound_cmd->add_option("--tail-eps", bound_cfg.tail_eps, "Thermal tail mass allowed beyond the cutoff");
  bound_cmd->add_option("--g", bound_cfg.g, "Coupling constant");
  bound_cmd->add_option("--out", bound_out, "Output CSV ('-' for stdout)");

  jcm::Ppt23Config ppt_cfg;
  std::string ppt_out = "ppt23.csv";
  auto* ppt_cmd = app.add_subcommand("ppt23", "Thermal atom, Fock field: exact PPT scan");
  ppt_cmd->add_option("--lambda-e", ppt_cfg.lambda_e, "Excited-state population of the atom");
  ppt_cmd->add_option("--n", ppt_cfg.n, "Initial Fock number of the field");
  ppt_cmd->add_option("--tau-max", ppt_cfg.tau_max, "Largest g*t");
  ppt_cmd->add_option("--steps", ppt_cfg.steps, "Grid points including both endpoints");
  ppt_cmd->add_option("--out", ppt_out, "Output CSV ('-' for stdout)");

  jcm::ValidationOptions validate_opts;
  auto* validate_cmd = app.add_subcommand("validate", "Run the oracle and consistency checks");
  validate_cmd->add_option("--perturb", validate_opts.perturb,
                           "Noise added to the analytic amplitudes (negative control)");

  auto* demo_cmd = app.add_subcommand("demo", "Pure qubit entangling with a maximally mixed qubit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitDomain;
  }

  try {
    if (*lambda_cmd) {
      emit_csv(lambda_out, lambda_cfg, &jcm::write_lambda_csv);
    } else if (*bound_cmd) {
      emit_csv(bound_out, bound_cfg, &jcm::write_bound_csv);
    } else if (*ppt_cmd) {
      emit_csv(ppt_out, ppt_cfg, &jcm::write_ppt23_csv);
    } else if (*validate_cmd) {
      const auto checks = jcm::run_validation(validate_opts);
      jcm::print_report(std::cout, checks);
      for (const auto& c : checks) {
        if (!c.passed) return kExitNumeric;
      }
    } else if (*demo_cmd) {
      jcm::write_demo_report(std::cout);
    }
  } catch (const jcm::DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const jcm::IoError& e) {
    std::cerr << "I/O error: " << e.what() << '\n';
    return kExitIo;
  } catch (const jcm::NumericError& e) {
    std::cerr << "numeric error: " << e.what() << '\n';
    return kExitNumeric;
  }
  return 0;
}

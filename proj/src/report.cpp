#include "jcm/report.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <system_error>

#include "jcm/errors.hpp"
#include "jcm/measures.hpp"
#include "jcm/scan.hpp"
#include "jcm/thermal.hpp"

namespace jcm {

std::string format_number(double value) {
  if (value == 0.0) return "0";  // also folds -0
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 12);
  if (res.ec != std::errc{}) throw NumericError("format_number: conversion failed");
  return std::string(buf, res.ptr);
}

void write_lambda_csv(std::ostream& out, const LambdaConfig& config) {
  if (config.n_list.empty()) throw DomainError("lambda: --n-list must not be empty");
  for (long n : config.n_list) {
    if (n < 0) throw DomainError("lambda: photon numbers must be >= 0");
  }
  const std::vector<double> taus = tau_grid(config.tau_max, config.steps);
  const WitnessScan scan = parallel::witness_scan(config.n_list, taus);
  out << "tau,n,lambda\n";
  for (std::size_t j = 0; j < taus.size(); ++j) {
    for (std::size_t i = 0; i < scan.n_values.size(); ++i) {
      out << format_number(taus[j]) << ',' << scan.n_values[i] << ',' << format_number(scan.at(i, j))
          << '\n';
    }
  }
}

void write_bound_csv(std::ostream& out, const BoundConfig& config) {
  if (!(config.g > 0.0)) throw DomainError("bound: --g must be > 0");
  const ThermalDistribution dist = thermal_distribution(config.nbar, config.tail_eps);
  const std::vector<double> taus = tau_grid(config.tau_max, config.steps);
  out << "tau,mutual_info,eof_bound_even,eof_bound_odd,eof_bound,s_atom,s_field,s_joint\n";
  for (const CorrelationRecord& r : parallel::correlation_scan(dist, config.g, taus)) {
    out << format_number(r.tau) << ',' << format_number(r.mutual_info) << ','
        << format_number(r.eof_bound_even) << ',' << format_number(r.eof_bound_odd) << ','
        << format_number(r.eof_bound) << ',' << format_number(r.s_atom) << ','
        << format_number(r.s_field) << ',' << format_number(r.s_joint) << '\n';
  }
}

void write_ppt23_csv(std::ostream& out, const Ppt23Config& config) {
  const std::vector<double> taus = tau_grid(config.tau_max, config.steps);
  const auto verdicts = parallel::ppt23_scan(config.lambda_e, config.n, taus);
  out << "tau,min_pt_eigenvalue,negativity,is_ppt\n";
  for (std::size_t j = 0; j < taus.size(); ++j) {
    out << format_number(taus[j]) << ',' << format_number(verdicts[j].min_pt_eigenvalue) << ','
        << format_number(verdicts[j].negativity) << ',' << (verdicts[j].is_ppt ? 1 : 0) << '\n';
  }
}

void write_demo_report(std::ostream& out) {
  const DemoResult demo = qubit_qubit_demo();
  std::ostringstream os;
  os << "pure qubit |0> (x) maximally mixed qubit under |00>->|00>, |01>->|psi+>\n";
  os << "output state (basis |00>,|01>,|10>,|11>, real parts):\n";
  for (Eigen::Index i = 0; i < 4; ++i) {
    os << "  ";
    for (Eigen::Index j = 0; j < 4; ++j) {
      os << std::setw(8) << format_number(demo.state.matrix()(i, j).real());
    }
    os << '\n';
  }
  os << "concurrence: " << format_number(demo.verdict.concurrence.value_or(0.0)) << '\n';
  os << "entanglement of formation (bits): " << format_number(demo.verdict.eof.value_or(0.0)) << '\n';
  os << "min partial-transpose eigenvalue: " << format_number(demo.verdict.min_pt_eigenvalue) << '\n';
  os << "negativity: " << format_number(demo.verdict.negativity) << '\n';
  os << "verdict: " << (demo.verdict.entangled() ? "entangled" : "separable") << '\n';
  out << os.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open '" + path + "' for writing");
  file.write(content.data(), static_cast<std::streamsize>(content.size()));
  file.close();
  if (!file) throw IoError("failed writing '" + path + "'");
}

}  // namespace jcm

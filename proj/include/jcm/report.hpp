#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace jcm {

/// 12 significant digits, '.' decimal point, independent of the C++ locale.
std::string format_number(double value);

struct LambdaConfig {
  std::vector<long> n_list{0, 10, 100};
  double tau_max = 25.0;
  int steps = 2000;
};

struct BoundConfig {
  double nbar = 10.0;
  double tau_max = 25.0;
  int steps = 500;
  double tail_eps = 1e-12;
  double g = 1.0;
};

struct Ppt23Config {
  double lambda_e = 0.5;
  long n = 1;
  double tau_max = 25.0;
  int steps = 500;
};

/// tau,n,lambda rows, tau-major.
void write_lambda_csv(std::ostream& out, const LambdaConfig& config);
/// tau,mutual_info,eof_bound_even,eof_bound_odd,eof_bound,s_atom,s_field,s_joint
void write_bound_csv(std::ostream& out, const BoundConfig& config);
/// tau,min_pt_eigenvalue,negativity,is_ppt
void write_ppt23_csv(std::ostream& out, const Ppt23Config& config);

void write_demo_report(std::ostream& out);

/// Writes `content` to `path` in binary mode (LF line endings on every
/// platform). Throws IoError on failure.
void write_text_file(const std::string& path, const std::string& content);

}  // namespace jcm

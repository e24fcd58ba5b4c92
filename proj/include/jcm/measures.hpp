#pragma once

#include <array>
#include <optional>
#include <span>

#include "jcm/linalg.hpp"

namespace jcm {

/// Tolerance below which a partial-transpose eigenvalue counts as round-off.
inline constexpr double kPptTol = 1e-10;

struct EntanglementVerdict {
  double min_pt_eigenvalue = 0.0;
  bool is_ppt = true;
  double negativity = 0.0;
  // PPT is necessary and sufficient for separability (2x2 and 2x3 only).
  bool ppt_sufficient = false;
  std::optional<double> concurrence;
  std::optional<double> eof;

  bool entangled() const { return !is_ppt; }
};

/// -sum lambda log2 lambda, 0 log 0 = 0. Entries in [-1e-10, 0) are treated as
/// zero; anything more negative, or a total deviating from 1 by more than
/// 1e-6, is a DomainError.
double von_neumann_entropy(std::span<const double> spectrum);

/// Binary entropy in bits.
double binary_entropy(double p);

/// I = S_a + S_f - S_af, clamped at zero for round-off; a NumericError below -1e-6.
double mutual_information(double s_atom, double s_field, double s_joint);

/// Transpose on the second factor: (a,b ; a',b') -> (a,b' ; a',b).
Matrix partial_transpose(const DensityMatrix& rho);

/// Partial-transpose spectrum summary for any bipartition; ppt_sufficient is
/// set for 2x2 and 2x3. For 2x2 inputs the concurrence and EoF are filled in
/// as well.
EntanglementVerdict ppt_verdict(const DensityMatrix& rho);

/// Wootters concurrence from the spin-flipped state; input must be a
/// normalized two-qubit density matrix (PSD within 1e-10).
double concurrence_general(const DensityMatrix& rho);

/// Closed form for a two-qubit state whose only off-diagonal pair couples
/// basis states 1 and 2 (0-based): C = 2 max(0, |coh| - sqrt(d0 d3)).
double concurrence_xstate(const std::array<double, 4>& diag, Complex coherence);

/// Entanglement of formation (bits) of a two-qubit state with concurrence c.
double eof_from_concurrence(double c);

struct DemoResult {
  DensityMatrix state;
  EntanglementVerdict verdict;
};

/// A pure qubit |0> and a maximally mixed qubit sent through
/// |00> -> |00>, |01> -> (|01>+|10>)/sqrt(2).
DemoResult qubit_qubit_demo();

}  // namespace jcm

#pragma once

#include "wsv/heisenberg.hpp"
#include "wsv/screening.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace wsv {

/// A named positive (or zero) mode acting on Fock vectors.
struct ModeOperator {
  std::string label;
  std::function<FockVector(const FockVector&)> apply;
};

ModeOperator virasoro_operator(int n);
ModeOperator w3_operator(int n);
ModeOperator miura_operator(int big_n, int k, int n);

/// L_1, L_2 and W_1, W_2 for N = 3; L_1, L_2 and U^k_1, U^k_2 (k = 3..N) otherwise.
std::vector<ModeOperator> default_generators(int n);

struct ModeCheck {
  std::string label;
  bool passed = false;
  FockVector residual;
};

struct VerificationReport {
  ScreeningSpec spec;
  int grade = 0;
  std::vector<ModeCheck> checks;
  std::optional<std::size_t> oracle_dimension;
  std::optional<bool> oracle_match;
  /// Set for degenerate input such as the zero vector.
  std::optional<std::string> error;

  bool passed() const;
  /// Per-check status with residual term counts, kernel dimension and match.
  std::string to_json() const;
};

struct VerifyOptions {
  bool run_oracle = false;
};

/// Annihilation by the positive modes and the L_0 (and W_0) eigenvalues of
/// the source weight.  Throws std::invalid_argument on a grade mismatch.
VerificationReport check_singular(const FockVector& v, const ScreeningSpec& spec, const VerifyOptions& options = {});

/// Exact kernel of the given modes on the grade-d subspace of the Fock space
/// over theta, one basis vector per free column of the reduced row echelon
/// form.
std::vector<FockVector> brute_force_kernel(const Weight& theta, int grade, const std::vector<ModeOperator>& generators);

/// Coefficients c with v = sum_i c_i basis_i when they exist.  The returned
/// coefficients have been checked by recombination.
std::optional<std::vector<Scalar>> span_certificate(const std::vector<FockVector>& basis, const FockVector& v);

struct AlgebraCheck {
  std::string relation;
  bool passed = false;
};

struct ModeAlgebraReport {
  int max_grade = 0;
  std::vector<AlgebraCheck> checks;
  bool passed() const;
};

/// Virasoro, [L, W] and selected [W, W] relations for N = 3 on every basis
/// vector up to max_grade of a generic Fock space.
ModeAlgebraReport check_mode_algebra(int max_grade);

}  // namespace wsv

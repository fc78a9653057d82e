#pragma once

#include "wsv/heisenberg.hpp"
#include "wsv/symfunc.hpp"

#include <optional>
#include <string>
#include <vector>

namespace wsv {

class SpecError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class ScreeningSign { plus, minus };

/// Data of one screening operator.  For sign plus, r counts the screening
/// charges (r_k >= 0) and s gives the rectangles (s_k <= 0); sign minus swaps
/// the two roles.  An unset t means symbolic t.
struct ScreeningSpec {
  int n = 3;
  std::vector<int> r;
  std::vector<int> s;
  ScreeningSign sign = ScreeningSign::plus;
  std::optional<mpq_class> t;

  /// -sum_k r_k s_k.
  int grade() const;
  /// Throws SpecError unless the data lie in the range the formulas cover.
  void validate() const;
  /// Highest weight of the source Fock space.
  Weight source() const;
  /// Highest weight of the target Fock space.
  Weight target() const;

  /// `N=3 r=1,1 s=-1,-1 t=4/5 sign=+`; symbolic t is written `t=symbolic`.
  std::string to_string() const;
  static ScreeningSpec parse(const std::string& text);

  friend bool operator==(const ScreeningSpec&, const ScreeningSpec&) = default;
};

/// Sends prod_k f_k(y^k) to the creation polynomial with p_m(y^k) -> a^k_{-m} / alpha_+,
/// applied to |target>.
FockVector rho_plus(const std::vector<SymFunc>& fs, const Weight& target);

struct ScreeningOptions {
  /// Worker threads for the summands; 0 or 1 evaluates serially.
  unsigned threads = 1;
};

/// The image of |source> under the screening operator, as an element of the
/// Fock space over |target>.  Dispatches on spec.sign.
FockVector singular_vector(const ScreeningSpec& spec, const ScreeningOptions& options = {});

/// The minus family, obtained from the plus family with r and s exchanged by
/// alpha_+ <-> alpha_-.
FockVector singular_vector_minus(const ScreeningSpec& spec, const ScreeningOptions& options = {});

/// One (nu_2, ..., nu_{N-1}) summand index.
using NuSequence = std::vector<Partition>;

/// The summation range of the plus-family formula, in enumeration order.
std::vector<NuSequence> summation_range(const ScreeningSpec& spec);

/// Specs with t = u/v whose target weight vanishes, r_1 = mu - 1,
/// -s_1 = mv - 1, r_2 = nu - 2, -s_2 = (n - m)v - 1 for n > m > 0; ordered by
/// grade, then m, then n.
struct Example3Spec {
  int m;
  int n;
  ScreeningSpec spec;
};
std::vector<Example3Spec> example3_enumerate(int u, int v, int count);

}  // namespace wsv

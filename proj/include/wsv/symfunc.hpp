#pragma once

#include "wsv/partition.hpp"
#include "wsv/scalar.hpp"

#include <map>
#include <string>
#include <string_view>

namespace wsv {

/// Coefficients indexed by partitions; used for both the power-sum and the
/// monomial basis.
using PartitionMap = std::map<Partition, Scalar>;

/// Finite linear combination of power sums p_lambda with Scalar coefficients.
/// Zero coefficients are never stored.
class SymFunc {
 public:
  SymFunc() = default;
  explicit SymFunc(PartitionMap terms);

  static SymFunc one() { return p(Partition{}); }
  static SymFunc p(const Partition& lambda, const Scalar& c = Scalar(1));

  const PartitionMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coefficient(const Partition& lambda) const;
  /// Largest |lambda| in the support, -1 for zero.
  int degree() const;
  bool is_homogeneous() const;

  void add_term(const Partition& lambda, const Scalar& c);

  SymFunc& operator+=(const SymFunc& o);
  SymFunc& operator-=(const SymFunc& o);
  SymFunc& operator*=(const Scalar& c);
  friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
  friend SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }
  friend SymFunc operator*(SymFunc a, const Scalar& c) { return a *= c; }
  friend SymFunc operator*(const Scalar& c, SymFunc a) { return a *= c; }
  /// p_lambda p_mu = p_{lambda u mu}, extended bilinearly.
  friend SymFunc operator*(const SymFunc& a, const SymFunc& b);
  friend bool operator==(const SymFunc& a, const SymFunc& b) { return a.terms_ == b.terms_; }

  /// Pins every coefficient at t = t0.
  SymFunc pinned(const mpq_class& t0) const;

  /// `(c1)*p[2,1] + (c2)*p[3]`; the constant term is written `(c)*p[]`.
  std::string to_string() const;
  static SymFunc parse(std::string_view text);

 private:
  PartitionMap terms_;
};

/// <p_lambda, p_mu> = delta t^{l(lambda)} z_lambda, extended bilinearly.
Scalar inner_product(const SymFunc& f, const SymFunc& g);

/// Integer expansion of p_lambda in monomial symmetric functions.
const std::map<Partition, mpz_class>& power_sum_in_monomials(const Partition& lambda);

/// Monomial-basis expansion of pi_n(f): terms with more than `max_len` parts
/// are dropped.
PartitionMap p_to_m(const SymFunc& f, int max_len);

/// The monomial symmetric function m_lambda written in power sums.
SymFunc monomial_in_power_sums(const Partition& lambda);

}  // namespace wsv

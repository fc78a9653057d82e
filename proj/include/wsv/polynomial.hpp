#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace wsv {

/// Dense univariate polynomial in `t` with rational coefficients.
/// Coefficient i multiplies t^i; trailing zeros are never stored, so the zero
/// polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(long c);  // NOLINT(google-explicit-constructor)
  Polynomial(const mpq_class& c);  // NOLINT(google-explicit-constructor)
  explicit Polynomial(std::vector<mpq_class> coeffs);

  static Polynomial monomial(const mpq_class& c, std::size_t degree);
  static Polynomial t() { return monomial(1, 1); }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  bool is_one() const;
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const mpq_class& leading() const { return coeffs_.back(); }
  mpq_class coeff(std::size_t i) const;
  const std::vector<mpq_class>& coeffs() const { return coeffs_; }
  mpq_class constant_term() const { return coeff(0); }

  mpq_class evaluate(const mpq_class& x) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const mpq_class& c);
  Polynomial operator-() const;

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const mpq_class& c) { return a *= c; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  /// Euclidean division; throws std::domain_error when `d` is zero.
  static std::pair<Polynomial, Polynomial> divmod(const Polynomial& n, const Polynomial& d);
  /// Exact quotient; the caller guarantees `d` divides `n`.
  static Polynomial exact_div(const Polynomial& n, const Polynomial& d);
  /// Monic gcd; gcd(0, 0) = 0.
  static Polynomial gcd(const Polynomial& a, const Polynomial& b);

  Polynomial monic() const;
  /// Polynomial in 1/t scaled by t^k: returns t^k p(1/t) for k >= degree.
  Polynomial reversed(int k) const;

  /// Renders with `var` as the indeterminate, e.g. "3/2*t^2 - t + 1".
  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<mpq_class> coeffs_;
};

}  // namespace wsv

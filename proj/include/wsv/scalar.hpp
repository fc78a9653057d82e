#pragma once

#include "wsv/rational_function.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <memory>
#include <optional>
#include <string>
#include <string_view>

namespace wsv {

using BigReal = boost::multiprecision::mpfr_float;

/// Error raised for violations of the coefficient-field contract (division by
/// zero, forbidden specialisation points, malformed text).
class ScalarError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Validates a specialisation point: t0 must not be a non-positive rational.
void require_admissible_parameter(const mpq_class& t0);

/// A numeric value of a specialised Scalar.  `exact` is set whenever the value
/// is rational, which happens iff the alpha-part vanishes or 1/t0 is a square.
struct SpecializedValue {
  std::optional<mpq_class> exact;
  BigReal value;
};

/// Element of Q(t)[a]/(a^2 t - 1), written x = A(t) + B(t) a, where a is the
/// free-field parameter alpha_+ and t = 1/alpha_+^2 the Jack parameter.
///
/// A Scalar may also be pinned to a rational point t = t0.  Pinned scalars have
/// constant A, B and use a^2 = 1/t0 with the positive branch a = +sqrt(1/t0);
/// when 1/t0 is a rational square the a-part is folded into A so zero tests
/// stay syntactic.  Mixing a pinned and a symbolic scalar evaluates the
/// symbolic one at the pin.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long c) : a_(c) {}  // NOLINT(google-explicit-constructor)
  Scalar(const mpq_class& c) : a_(c) {}  // NOLINT(google-explicit-constructor)
  Scalar(RationalFunction a) : a_(std::move(a)) {}  // NOLINT(google-explicit-constructor)
  Scalar(RationalFunction a, RationalFunction b) : a_(std::move(a)), b_(std::move(b)) {}

  static Scalar t() { return Scalar(RationalFunction::t()); }
  /// The generator a = alpha_+.
  static Scalar alpha_plus() { return Scalar(RationalFunction(), RationalFunction(1)); }
  /// alpha_- = -t alpha_+, the second root of x^2 - alpha_0 x - 1.
  static Scalar alpha_minus();
  /// alpha_0 = alpha_+ + alpha_- = (1 - t) alpha_+.
  static Scalar alpha_zero();

  const RationalFunction& rational_part() const { return a_; }
  const RationalFunction& alpha_part() const { return b_; }
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_one() const { return a_.is_one() && b_.is_zero(); }
  bool is_rational_constant() const { return b_.is_zero() && a_.is_constant(); }
  bool is_pinned() const { return static_cast<bool>(point_); }
  /// The pinned parameter value, if any.
  std::optional<mpq_class> point() const;

  /// Pins this scalar at t = t0.  Throws ScalarError for t0 in Q_{<=0} or when
  /// a denominator vanishes at t0.
  Scalar pinned(const mpq_class& t0) const;

  /// Numeric value at t0 with a = alpha_sign * sqrt(1/t0), to `bits` of
  /// precision.  Exact when the result is rational.
  SpecializedValue specialize(const mpq_class& t0, int alpha_sign, unsigned bits) const;

  /// The field automorphism swapping alpha_+ and alpha_-: t -> 1/t, a -> -t a.
  /// It is an involution.  Only defined on symbolic scalars.
  Scalar swap_alphas() const;

  Scalar inverse() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }
  Scalar operator-() const;

  friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
  friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
  friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
  friend Scalar operator/(Scalar x, const Scalar& y) { return x /= y; }
  friend bool operator==(const Scalar& x, const Scalar& y);
  friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }

  Scalar pow(int e) const;

  /// Text form `A(t) + B(t)*a`; accepted back by parse().
  std::string to_string() const;
  /// LaTeX; pinned scalars render a as an explicit square root.
  std::string to_latex() const;

  /// Parses arithmetic expressions in the symbols `t` and `a` (rational
  /// literals, + - * /, integer powers, parentheses).
  static Scalar parse(std::string_view text);

 private:
  struct Point {
    mpq_class t0;
    mpq_class inv_t0;
    std::optional<mpq_class> sqrt_inv_t0;
  };
  static std::shared_ptr<const Point> make_point(const mpq_class& t0);
  RationalFunction inv_t() const;
  void fold();
  /// Brings x and y to a common pin (if any).
  static void unify(Scalar& x, Scalar& y);
  Scalar pinned_to(const std::shared_ptr<const Point>& p) const;

  RationalFunction a_;
  RationalFunction b_;
  std::shared_ptr<const Point> point_;
};

}  // namespace wsv

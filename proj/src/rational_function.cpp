#include "wsv/rational_function.hpp"

#include <stdexcept>

namespace wsv {

RationalFunction::RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  normalize();
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = Polynomial(1);
    return;
  }
  if (!den_.is_constant()) {
    Polynomial g = Polynomial::gcd(num_, den_);
    if (!g.is_one()) {
      num_ = Polynomial::exact_div(num_, g);
      den_ = Polynomial::exact_div(den_, g);
    }
  }
  if (den_.leading() != 1) {
    mpq_class s = 1 / den_.leading();
    num_ *= s;
    den_ *= s;
  }
}

std::optional<mpq_class> RationalFunction::evaluate(const mpq_class& t0) const {
  mpq_class d = den_.evaluate(t0);
  if (sgn(d) == 0) return std::nullopt;
  return num_.evaluate(t0) / d;
}

RationalFunction RationalFunction::invert_variable() const {
  if (is_zero()) return *this;
  // num(1/t)/den(1/t) = t^(dd-dn) rev(num)/rev(den)
  const int dn = num_.degree();
  const int dd = den_.degree();
  Polynomial n = num_.reversed(dn);
  Polynomial d = den_.reversed(dd);
  if (dd > dn) n = n * Polynomial::monomial(1, static_cast<std::size_t>(dd - dn));
  if (dn > dd) d = d * Polynomial::monomial(1, static_cast<std::size_t>(dn - dd));
  return RationalFunction(std::move(n), std::move(d));
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw std::domain_error("rational function division by zero");
  RationalFunction r;
  r.num_ = den_;
  r.den_ = num_;
  // already coprime; only the monic normalisation changes
  mpq_class s = 1 / r.den_.leading();
  r.num_ *= s;
  r.den_ *= s;
  return r;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
    if (den_.is_one()) {
      if (num_.is_zero()) den_ = Polynomial(1);
      return *this;
    }
    normalize();
    return *this;
  }
  if (den_.is_one()) {
    num_ = num_ * o.den_ + o.num_;
    den_ = o.den_;
    normalize();
    return *this;
  }
  if (o.den_.is_one()) {
    num_ += o.num_ * den_;
    normalize();
    return *this;
  }
  Polynomial g = Polynomial::gcd(den_, o.den_);
  Polynomial od = Polynomial::exact_div(o.den_, g);
  num_ = num_ * od + o.num_ * Polynomial::exact_div(den_, g);
  den_ = den_ * od;
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = RationalFunction();
  if (o.is_constant()) {
    num_ *= o.constant();
    return *this;
  }
  if (is_constant()) {
    mpq_class c = constant();
    *this = o;
    num_ *= c;
    return *this;
  }
  // cross-cancel so the product stays reduced
  Polynomial g1 = Polynomial::gcd(num_, o.den_);
  Polynomial g2 = Polynomial::gcd(o.num_, den_);
  Polynomial n1 = g1.is_one() ? num_ : Polynomial::exact_div(num_, g1);
  Polynomial d2 = g1.is_one() ? o.den_ : Polynomial::exact_div(o.den_, g1);
  Polynomial n2 = g2.is_one() ? o.num_ : Polynomial::exact_div(o.num_, g2);
  Polynomial d1 = g2.is_one() ? den_ : Polynomial::exact_div(den_, g2);
  num_ = n1 * n2;
  den_ = d1 * d2;
  mpq_class s = 1 / den_.leading();
  if (s != 1) {
    num_ *= s;
    den_ *= s;
  }
  return *this;
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

std::string RationalFunction::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace wsv

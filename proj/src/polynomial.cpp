#include "wsv/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace wsv {

Polynomial::Polynomial(long c) {
  if (c != 0) coeffs_.emplace_back(c);
}

Polynomial::Polynomial(const mpq_class& c) {
  if (sgn(c) == 0) return;
  coeffs_.push_back(c);
  coeffs_.back().canonicalize();
}

Polynomial::Polynomial(std::vector<mpq_class> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

Polynomial Polynomial::monomial(const mpq_class& c, std::size_t degree) {
  Polynomial p;
  if (sgn(c) == 0) return p;
  p.coeffs_.assign(degree + 1, mpq_class(0));
  p.coeffs_[degree] = c;
  p.coeffs_[degree].canonicalize();
  return p;
}

bool Polynomial::is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }

mpq_class Polynomial::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : mpq_class(0); }

void Polynomial::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

mpq_class Polynomial::evaluate(const mpq_class& x) const {
  mpq_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), mpq_class(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), mpq_class(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const mpq_class& c) {
  if (sgn(c) == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& x : r.coeffs_) x = -x;
  return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpq_class> out(a.coeffs_.size() + b.coeffs_.size() - 1, mpq_class(0));
  mpq_class tmp;
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      mpq_mul(tmp.get_mpq_t(), a.coeffs_[i].get_mpq_t(), b.coeffs_[j].get_mpq_t());
      out[i + j] += tmp;
    }
  }
  return Polynomial(std::move(out));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& n, const Polynomial& d) {
  if (d.is_zero()) throw std::domain_error("polynomial division by zero");
  if (n.degree() < d.degree()) return {Polynomial(), n};
  std::vector<mpq_class> rem = n.coeffs_;
  std::vector<mpq_class> quo(n.coeffs_.size() - d.coeffs_.size() + 1, mpq_class(0));
  const mpq_class inv_lead = 1 / d.leading();
  const std::size_t dd = d.coeffs_.size() - 1;
  mpq_class tmp;
  for (std::size_t k = quo.size(); k-- > 0;) {
    const mpq_class q = rem[k + dd] * inv_lead;
    quo[k] = q;
    if (sgn(q) == 0) continue;
    for (std::size_t j = 0; j <= dd; ++j) {
      mpq_mul(tmp.get_mpq_t(), q.get_mpq_t(), d.coeffs_[j].get_mpq_t());
      rem[k + j] -= tmp;
    }
  }
  rem.resize(dd);
  return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
}

Polynomial Polynomial::exact_div(const Polynomial& n, const Polynomial& d) {
  if (d.is_constant()) {
    Polynomial r = n;
    r *= 1 / d.leading();
    return r;
  }
  return divmod(n, d).first;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  Polynomial r = *this;
  r *= 1 / leading();
  return r;
}

Polynomial Polynomial::gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return Polynomial(1);
  Polynomial x = a.degree() >= b.degree() ? a.monic() : b.monic();
  Polynomial y = a.degree() >= b.degree() ? b.monic() : a.monic();
  while (!y.is_zero()) {
    Polynomial r = divmod(x, y).second;
    x = std::move(y);
    y = r.monic();
  }
  return x;
}

Polynomial Polynomial::reversed(int k) const {
  if (is_zero()) return {};
  if (k < degree()) throw std::invalid_argument("reversal degree below polynomial degree");
  std::vector<mpq_class> out(static_cast<std::size_t>(k) + 1, mpq_class(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[static_cast<std::size_t>(k) - i] = coeffs_[i];
  return Polynomial(std::move(out));
}

std::string Polynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const mpq_class& c = coeffs_[i];
    if (sgn(c) == 0) continue;
    mpq_class mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

}  // namespace wsv

#include "wsv/scalar.hpp"

#include <cctype>
#include <sstream>

namespace wsv {

namespace {

std::optional<mpq_class> rational_sqrt(const mpq_class& q) {
  if (sgn(q) < 0) return std::nullopt;
  const mpz_class& n = q.get_num();
  const mpz_class& d = q.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
  mpz_class rn = sqrt(n);
  mpz_class rd = sqrt(d);
  return mpq_class(rn, rd);
}

// n = k^2 * d with d squarefree (trial division; falls back to d = n past the bound).
std::pair<mpz_class, mpz_class> square_part(mpz_class n) {
  mpz_class k = 1;
  mpz_class d = 1;
  for (unsigned long p = 2; p <= 1000000UL && mpz_class(p) * p <= n; ++p) {
    unsigned e = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p) != 0) {
      n /= p;
      ++e;
    }
    for (unsigned i = 0; i < e / 2; ++i) k *= p;
    if (e % 2 == 1) d *= p;
  }
  d *= n;
  return {k, d};
}

std::string latex_rational(const mpq_class& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return "\\frac{" + q.get_num().get_str() + "}{" + q.get_den().get_str() + "}";
}

std::string latex_polynomial(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  const auto& cs = p.coeffs();
  for (std::size_t i = cs.size(); i-- > 0;) {
    if (sgn(cs[i]) == 0) continue;
    mpq_class mag = abs(cs[i]);
    if (first) {
      if (sgn(cs[i]) < 0) os << "-";
    } else {
      os << (sgn(cs[i]) < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) os << latex_rational(mag);
    if (i >= 1) os << "t";
    if (i > 1) os << "^{" << i << "}";
  }
  return os.str();
}

std::string latex_rf(const RationalFunction& r) {
  if (r.is_polynomial()) return latex_polynomial(r.num());
  return "\\frac{" + latex_polynomial(r.num()) + "}{" + latex_polynomial(r.den()) + "}";
}

bool needs_parens(const RationalFunction& r) {
  return !(r.is_polynomial() && r.num().is_constant());
}

// Recursive-descent parser for the Scalar text format.
class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  Scalar parse_all() {
    Scalar v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return v;
  }

 private:
  [[noreturn]] void fail(const char* what) const {
    throw ScalarError(std::string("malformed scalar: ") + what + " at offset " + std::to_string(pos_) + " in '" +
                      std::string(s_) + "'");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])) != 0) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  Scalar expr() {
    Scalar v = term();
    for (;;) {
      if (accept('+')) {
        v += term();
      } else if (accept('-')) {
        v -= term();
      } else {
        return v;
      }
    }
  }
  Scalar term() {
    Scalar v = unary();
    for (;;) {
      if (accept('*')) {
        v *= unary();
      } else if (accept('/')) {
        Scalar d = unary();
        if (d.is_zero()) fail("division by zero");
        v /= d;
      } else {
        return v;
      }
    }
  }
  Scalar unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }
  Scalar power() {
    Scalar base = primary();
    if (accept('^')) {
      skip();
      bool neg = accept('-');
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])) != 0) ++pos_;
      if (start == pos_) fail("expected integer exponent");
      int e = std::stoi(std::string(s_.substr(start, pos_ - start)));
      return base.pow(neg ? -e : e);
    }
    return base;
  }
  Scalar primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Scalar v = expr();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    if (c == 't') {
      ++pos_;
      return Scalar::t();
    }
    if (c == 'a') {
      ++pos_;
      return Scalar::alpha_plus();
    }
    if (std::isdigit(static_cast<unsigned char>(c)) != 0) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])) != 0) ++pos_;
      return Scalar(mpq_class(mpz_class(std::string(s_.substr(start, pos_ - start)))));
    }
    fail("unexpected character");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

void require_admissible_parameter(const mpq_class& t0) {
  if (sgn(t0) <= 0) throw ScalarError("parameter outside C\\Q_{<=0}: t = " + t0.get_str());
}

Scalar Scalar::alpha_minus() { return Scalar(RationalFunction(), -RationalFunction::t()); }

Scalar Scalar::alpha_zero() { return Scalar(RationalFunction(), RationalFunction(Polynomial(1) - Polynomial::t())); }

std::optional<mpq_class> Scalar::point() const {
  if (!point_) return std::nullopt;
  return point_->t0;
}

std::shared_ptr<const Scalar::Point> Scalar::make_point(const mpq_class& t0) {
  require_admissible_parameter(t0);
  auto p = std::make_shared<Point>();
  p->t0 = t0;
  p->inv_t0 = 1 / t0;
  p->sqrt_inv_t0 = rational_sqrt(p->inv_t0);
  return p;
}

RationalFunction Scalar::inv_t() const {
  if (point_) return RationalFunction(point_->inv_t0);
  return RationalFunction(Polynomial(1), Polynomial::t());
}

void Scalar::fold() {
  if (point_ && point_->sqrt_inv_t0 && !b_.is_zero()) {
    a_ += b_ * RationalFunction(*point_->sqrt_inv_t0);
    b_ = RationalFunction();
  }
}

Scalar Scalar::pinned_to(const std::shared_ptr<const Point>& p) const {
  if (point_) {
    if (point_->t0 != p->t0) {
      throw ScalarError("scalars pinned at different parameters: " + point_->t0.get_str() + " vs " + p->t0.get_str());
    }
    return *this;
  }
  auto av = a_.evaluate(p->t0);
  auto bv = b_.evaluate(p->t0);
  if (!av || !bv) throw ScalarError("pole at specialization point t = " + p->t0.get_str());
  Scalar r{RationalFunction(*av), RationalFunction(*bv)};
  r.point_ = p;
  r.fold();
  return r;
}

Scalar Scalar::pinned(const mpq_class& t0) const {
  if (point_) return pinned_to(point_->t0 == t0 ? point_ : make_point(t0));
  return pinned_to(make_point(t0));
}

void Scalar::unify(Scalar& x, Scalar& y) {
  if (x.point_ == y.point_) return;
  if (x.point_ && y.point_) {
    if (x.point_->t0 == y.point_->t0) {
      y.point_ = x.point_;
      return;
    }
    throw ScalarError("scalars pinned at different parameters: " + x.point_->t0.get_str() + " vs " +
                      y.point_->t0.get_str());
  }
  if (x.point_) {
    y = y.pinned_to(x.point_);
  } else {
    x = x.pinned_to(y.point_);
  }
}

SpecializedValue Scalar::specialize(const mpq_class& t0, int alpha_sign, unsigned bits) const {
  require_admissible_parameter(t0);
  const int sign = alpha_sign < 0 ? -1 : 1;
  mpq_class a;
  mpq_class b;
  if (point_) {
    if (point_->t0 != t0) throw ScalarError("scalar pinned at t = " + point_->t0.get_str() + ", not " + t0.get_str());
    if (sign < 0 && point_->sqrt_inv_t0) throw ScalarError("pinned scalar already fixes the branch a = +sqrt(1/t)");
    a = a_.constant();
    b = b_.constant();
  } else {
    auto av = a_.evaluate(t0);
    auto bv = b_.evaluate(t0);
    if (!av || !bv) throw ScalarError("pole at specialization point t = " + t0.get_str());
    a = *av;
    b = *bv;
  }
  const unsigned digits = static_cast<unsigned>(static_cast<double>(bits) * 0.30103) + 2;
  // all temporaries below inherit the requested precision
  struct PrecisionGuard {
    unsigned saved = BigReal::default_precision();
    explicit PrecisionGuard(unsigned d) { BigReal::default_precision(d); }
    ~PrecisionGuard() { BigReal::default_precision(saved); }
  } guard(digits);
  auto to_big = [](const mpq_class& q) { return BigReal(q.get_num().get_str()) / BigReal(q.get_den().get_str()); };
  SpecializedValue out;
  const mpq_class inv = 1 / t0;
  auto root = rational_sqrt(inv);
  if (sgn(b) == 0 || root) {
    mpq_class exact = a;
    if (sgn(b) != 0) exact += b * *root * sign;
    out.exact = exact;
    out.value = to_big(exact);
    return out;
  }
  BigReal alpha = boost::multiprecision::sqrt(to_big(inv));
  if (sign < 0) alpha = -alpha;
  out.value = to_big(a) + to_big(b) * alpha;
  return out;
}

Scalar Scalar::swap_alphas() const {
  if (point_) throw ScalarError("alpha swap is only defined on symbolic scalars");
  RationalFunction a = a_.invert_variable();
  RationalFunction b = b_.invert_variable();
  // b(1/t) * (-t a)
  return Scalar(std::move(a), -(b * RationalFunction::t()));
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw ScalarError("scalar division by zero");
  if (b_.is_zero()) {
    Scalar r(a_.inverse());
    r.point_ = point_;
    return r;
  }
  // (A + B a)^{-1} = (A - B a) / (A^2 - B^2 / t)
  RationalFunction norm = a_ * a_ - b_ * b_ * inv_t();
  RationalFunction inv = norm.inverse();
  Scalar r(a_ * inv, -(b_ * inv));
  r.point_ = point_;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (point_ != o.point_) {
    Scalar y = o;
    unify(*this, y);
    a_ += y.a_;
    b_ += y.b_;
    return *this;
  }
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  if (point_ != o.point_) {
    Scalar y = o;
    unify(*this, y);
    return *this *= y;
  }
  if (o.b_.is_zero()) {
    if (o.a_.is_one()) return *this;
    a_ *= o.a_;
    b_ *= o.a_;
    return *this;
  }
  if (b_.is_zero()) {
    RationalFunction a = a_;
    a_ = a * o.a_;
    b_ = a * o.b_;
    return *this;
  }
  RationalFunction na = a_ * o.a_ + b_ * o.b_ * inv_t();
  RationalFunction nb = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(na);
  b_ = std::move(nb);
  fold();
  return *this;
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.a_ = -r.a_;
  r.b_ = -r.b_;
  return r;
}

bool operator==(const Scalar& x, const Scalar& y) {
  if (x.point_ == y.point_) return x.a_ == y.a_ && x.b_ == y.b_;
  try {
    return (x - y).is_zero();
  } catch (const ScalarError&) {
    return false;
  }
}

Scalar Scalar::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar result(1);
  result.point_ = point_;
  Scalar base = *this;
  while (e > 0) {
    if ((e & 1) != 0) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

std::string Scalar::to_string() const {
  if (is_zero()) return "0";
  if (b_.is_zero()) return a_.to_string();
  std::string bpart;
  bool negative = false;
  if (!needs_parens(b_)) {
    mpq_class c = b_.constant();
    negative = sgn(c) < 0;
    mpq_class m = abs(c);
    bpart = m == 1 ? "a" : m.get_str() + "*a";
  } else {
    bpart = "(" + b_.to_string() + ")*a";
  }
  if (a_.is_zero()) return (negative ? "-" : "") + bpart;
  return a_.to_string() + (negative ? " - " : " + ") + bpart;
}

std::string Scalar::to_latex() const {
  if (is_zero()) return "0";
  std::string rat = a_.is_zero() ? "" : latex_rf(a_);
  if (b_.is_zero()) return rat;
  std::string alpha;
  RationalFunction coeff = b_;
  if (point_) {
    // a = sqrt(1/t0) = sqrt(u v) / u for t0 = u/v, with u v = k^2 d
    const mpz_class u = point_->t0.get_num();
    const mpz_class v = point_->t0.get_den();
    auto [k, d] = square_part(u * v);
    mpq_class scale(k, u);
    scale.canonicalize();
    coeff = RationalFunction(b_.constant() * scale);
    alpha = "\\sqrt{" + d.get_str() + "}";
  } else {
    alpha = "\\alpha_+";
  }
  std::string bpart;
  bool negative = false;
  if (coeff.is_constant()) {
    mpq_class c = coeff.constant();
    negative = sgn(c) < 0;
    mpq_class m = abs(c);
    if (m == 1) {
      bpart = alpha;
    } else if (m.get_den() == 1) {
      bpart = m.get_num().get_str() + alpha;
    } else {
      std::string top = m.get_num() == 1 ? alpha : m.get_num().get_str() + alpha;
      bpart = "\\frac{" + top + "}{" + m.get_den().get_str() + "}";
    }
  } else {
    bpart = "\\left(" + latex_rf(coeff) + "\\right)" + alpha;
  }
  if (rat.empty()) return (negative ? "-" : "") + bpart;
  return rat + (negative ? " - " : " + ") + bpart;
}

Scalar Scalar::parse(std::string_view text) { return Parser(text).parse_all(); }

}  // namespace wsv

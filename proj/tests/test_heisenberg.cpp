#include <doctest.h>

#include "support.hpp"
#include "wsv/heisenberg.hpp"

using namespace wsv;
using wsv::testing::random_fock;
using wsv::testing::random_weight;

namespace {

const mpq_class kPotts(4, 5);

Scalar q(long n, long d = 1) { return Scalar(mpq_class(n, d)); }

Monomial mono(std::initializer_list<Partition> parts) { return Monomial(parts); }

FockVector single(const Weight& w, const Monomial& m, const Scalar& c = Scalar(1)) {
  FockVector v(w);
  v.add_term(m, c);
  return v;
}

// alpha_0^2 and 1/beta are rational functions of t
Scalar alpha0_sq() { return Scalar::alpha_zero() * Scalar::alpha_zero(); }
Scalar inverse_beta() { return (q(4) - q(15) * alpha0_sq()) / q(2); }

Scalar central_charge(int r) {
  return Scalar(static_cast<long>(r)) - Scalar(static_cast<long>(r * (r + 1) * (r + 2))) * alpha0_sq();
}

FockVector commutator(const std::function<FockVector(const FockVector&)>& a,
                      const std::function<FockVector(const FockVector&)>& b, const FockVector& v) {
  return a(b(v)) - b(a(v));
}

std::vector<FockVector> basis_up_to(const Weight& w, int max_grade) {
  std::vector<FockVector> out;
  for (int g = 0; g <= max_grade; ++g) {
    for (const auto& m : monomials_of_grade(w.rank(), g)) out.push_back(single(w, m));
  }
  return out;
}

// Example 1 weights in the (u, v) labelling of svweight.
Weight eta() { return svweight({0, 1}, {-1, -1}); }
Weight theta() { return svweight({-1, 0}, {-1, -1}); }

}  // namespace

TEST_CASE("bilinear form on roots and weights") {
  for (int n = 2; n <= 6; ++n) CHECK(bilinear(Weight::simple_root(n, 1), Weight::simple_root(n, 1)) == q(2));
  for (int n = 3; n <= 6; ++n) CHECK(bilinear(Weight::simple_root(n, 1), Weight::simple_root(n, 2)) == q(-1));
  CHECK(bilinear(Weight::fundamental(3, 1), Weight::fundamental(3, 1)) == q(2, 3));
  CHECK(bilinear(Weight::fundamental(4, 2), Weight::fundamental(4, 3)) == q(1, 2));
  CHECK(bilinear(Weight::simple_root(4, 2), Weight::fundamental(4, 2)) == q(1));
  CHECK(bilinear(Weight::simple_root(4, 2), Weight::fundamental(4, 3)) == q(0));
  CHECK_THROWS_AS(bilinear(Weight::zero(3), Weight::zero(4)), RankError);
}

TEST_CASE("epsilon weights are orthonormal up to the trace part") {
  for (int n = 2; n <= 5; ++n) {
    Weight sum = Weight::zero(n);
    for (int i = 1; i <= n; ++i) {
      sum += Weight::epsilon(n, i);
      for (int j = 1; j <= n; ++j) {
        const Scalar expect = q(i == j ? 1 : 0) - q(1, n);
        CHECK(bilinear(Weight::epsilon(n, i), Weight::epsilon(n, j)) == expect);
      }
    }
    CHECK(sum == Weight::zero(n));
  }
}

TEST_CASE("root coordinates invert the Cartan matrix") {
  std::mt19937_64 rng(31);
  for (int n = 2; n <= 5; ++n) {
    const Weight w = random_weight(rng, n);
    Weight rebuilt = Weight::zero(n);
    const auto c = w.root_coordinates();
    for (int j = 1; j < n; ++j) rebuilt += c[static_cast<std::size_t>(j - 1)] * Weight::simple_root(n, j);
    CHECK(rebuilt == w);
  }
}

TEST_CASE("svweight") {
  CHECK(svweight({1, 1}, {1, 1}) == Weight::zero(3));
  CHECK(svweight({1, 1, 1}, {1, 1, 1}) == Weight::zero(4));
  const Weight e = eta();
  CHECK(e.label(1) == Scalar::alpha_plus() + q(2) * Scalar::alpha_minus());
  CHECK(e.label(2) == q(2) * Scalar::alpha_minus());
  CHECK_THROWS_AS(svweight({1}, {1, 1}), RankError);
}

TEST_CASE("Example 1 highest weights at t = 4/5") {
  const Weight e = eta().pinned(kPotts);
  const Weight th = theta().pinned(kPotts);
  CHECK(conformal_weight(e) == q(13, 6));
  CHECK(conformal_weight(th) == q(1, 6));
  CHECK(conformal_weight(Weight::zero(3)) == q(0));
  const Scalar xe = w3_weight_unnormalized(e);
  const Scalar xt = w3_weight_unnormalized(th);
  // by hand: (zeta, omega_i) and alpha_0 are multiples of alpha_0 here
  const Scalar a0_cubed = Scalar::alpha_zero().pinned(kPotts).pow(3);
  CHECK(xe == q(-1870, 27) * a0_cubed);
  CHECK(xt == q(-70, 27) * a0_cubed);
  CHECK(xe / xt == q(187, 7));
  // w = sqrt(3 beta) X, so w^2 = 3 beta X^2
  const Scalar beta = (Scalar(1) / inverse_beta()).pinned(kPotts);
  CHECK(q(3) * beta * xe * xe == q(187 * 187, 81 * 390));
  CHECK(q(3) * beta * xt * xt == q(49, 81 * 390));
  CHECK(w3_weight_unnormalized(Weight::zero(3)).is_zero());
  CHECK_THROWS_AS(w3_weight_unnormalized(Weight::zero(4)), RankError);
}

TEST_CASE("h and X are invariant under the shifted Weyl action") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> letter(1, 2);
  for (int i = 0; i < 12; ++i) {
    const Weight z = random_weight(rng, 3);
    std::vector<int> word;
    for (int k = 0; k < 1 + i % 4; ++k) word.push_back(letter(rng));
    const Weight w = shifted_weyl_action(word, z);
    CHECK(conformal_weight(w) == conformal_weight(z));
    CHECK(w3_weight_unnormalized(w) == w3_weight_unnormalized(z));
  }
  std::uniform_int_distribution<int> letter4(1, 3);
  for (int i = 0; i < 6; ++i) {
    const Weight z = random_weight(rng, 4);
    const std::vector<int> word{letter4(rng), letter4(rng), letter4(rng)};
    CHECK(conformal_weight(shifted_weyl_action(word, z)) == conformal_weight(z));
  }
  const Weight fixed = Scalar::alpha_zero() * Weight::weyl_vector(3);
  CHECK(shifted_weyl_action({1, 2, 1}, fixed) == fixed);
  CHECK(weyl_reflect(1, Weight::weyl_vector(3)) == Weight::weyl_vector(3) - Weight::simple_root(3, 1));
  const Weight z = random_weight(rng, 3);
  CHECK(shifted_weyl_action({2, 2}, z) == z);
  CHECK(shifted_weyl_action({1, 2, 1}, z) == shifted_weyl_action({2, 1, 2}, z));
}

TEST_CASE("annihilation and zero modes") {
  const Weight w = eta();
  const FockVector vac = FockVector::vacuum(w);
  CHECK(annihilate(1, 1, create(1, 1, vac)) == q(2) * vac);
  CHECK(annihilate(1, 1, create(2, 1, vac)) == q(-1) * vac);
  CHECK(annihilate(1, 2, create(1, 1, create(1, 1, vac))).is_zero());
  CHECK(annihilate(1, 1, vac).is_zero());
  // a^1_1 (a^1_{-1})^2 = 2 * 2 a^1_{-1}
  CHECK(annihilate(1, 1, create(1, 1, create(1, 1, vac))) == q(4) * create(1, 1, vac));
  CHECK(annihilate(2, 3, create(2, 3, vac)) == q(6) * vac);
  CHECK(zero_mode(1, FockVector::vacuum(Weight::zero(3))).is_zero());
  CHECK(zero_mode(2, vac) == w.label(2) * vac);
  const FockVector two = vac + create(1, 2, vac);
  CHECK(zero_mode(1, two) == w.label(1) * two);
  CHECK_THROWS(annihilate(1, 0, vac));
}

TEST_CASE("Heisenberg commutation relations") {
  std::mt19937_64 rng(17);
  const Weight w = random_weight(rng, 4);
  const FockVector v = random_fock(rng, w, 3, 6);
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) {
      for (int m = -3; m <= 3; ++m) {
        for (int n = -3; n <= 3; ++n) {
          const FockVector lhs = heisenberg_mode(i, m, heisenberg_mode(j, n, v)) -
                                 heisenberg_mode(j, n, heisenberg_mode(i, m, v));
          const Scalar c = m + n == 0 ? q(static_cast<long>(m) * cartan(i, j)) : q(0);
          CHECK(lhs == c * v);
        }
      }
    }
  }
}

TEST_CASE("Virasoro modes on highest-weight vectors") {
  std::mt19937_64 rng(3);
  for (int n = 2; n <= 4; ++n) {
    const Weight z = random_weight(rng, n);
    const FockVector vac = FockVector::vacuum(z);
    CHECK(virasoro_mode(0, vac) == conformal_weight(z) * vac);
    for (int k = 1; k <= 3; ++k) CHECK(virasoro_mode(k, vac).is_zero());
  }
  const FockVector zero_vac = FockVector::vacuum(Weight::zero(3));
  CHECK(virasoro_mode(1, create(1, 1, zero_vac)) == q(-2) * Scalar::alpha_zero() * zero_vac);
  // the realisation from the free-field T(z) for N = 3
  const FockVector l_minus1 = virasoro_mode(-1, zero_vac);
  const Scalar a0 = Scalar::alpha_zero();
  CHECK(l_minus1.is_zero());
  const FockVector l_minus2 = virasoro_mode(-2, zero_vac);
  FockVector t_vac(Weight::zero(3));
  t_vac.add_term(mono({Partition{1, 1}, Partition{}}), q(1, 3));
  t_vac.add_term(mono({Partition{1}, Partition{1}}), q(1, 3));
  t_vac.add_term(mono({Partition{}, Partition{1, 1}}), q(1, 3));
  t_vac.add_term(mono({Partition{2}, Partition{}}), a0);
  t_vac.add_term(mono({Partition{}, Partition{2}}), a0);
  CHECK(l_minus2 == t_vac);
}

TEST_CASE("Virasoro algebra with the free-field central charge") {
  for (int n : {2, 3}) {
    std::mt19937_64 rng(static_cast<unsigned>(n));
    const Weight z = random_weight(rng, n);
    const Scalar c = central_charge(n - 1);
    for (const FockVector& v : basis_up_to(z, 4)) {
      for (int a = -2; a <= 2; ++a) {
        for (int b = -2; b <= 2; ++b) {
          if (a <= b) continue;
          const FockVector lhs = commutator([a](const FockVector& x) { return virasoro_mode(a, x); },
                                            [b](const FockVector& x) { return virasoro_mode(b, x); }, v);
          FockVector rhs = Scalar(static_cast<long>(a - b)) * virasoro_mode(a + b, v);
          if (a + b == 0) rhs += c * q(static_cast<long>(a) * (a * a - 1), 12) * v;
          CHECK(lhs == rhs);
        }
      }
    }
  }
}

TEST_CASE("W3 zero mode eigenvalue is 54 X") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 6; ++i) {
    const Weight z = random_weight(rng, 3);
    const FockVector vac = FockVector::vacuum(z);
    CHECK(w3_mode_unnormalized(0, vac) == q(54) * w3_weight_unnormalized(z) * vac);
    CHECK(w3_mode_unnormalized(1, vac).is_zero());
    CHECK(w3_mode_unnormalized(2, vac).is_zero());
  }
  CHECK_THROWS_AS(w3_mode_unnormalized(0, FockVector::vacuum(Weight::zero(4))), RankError);
}

TEST_CASE("W3 field is a Virasoro primary of weight 3") {
  std::mt19937_64 rng(23);
  const Weight z = random_weight(rng, 3);
  for (const FockVector& v : basis_up_to(z, 3)) {
    for (int m = -2; m <= 2; ++m) {
      for (int n = -2; n <= 2; ++n) {
        const FockVector lhs = commutator([m](const FockVector& x) { return virasoro_mode(m, x); },
                                          [n](const FockVector& x) { return w3_mode_unnormalized(n, x); }, v);
        CHECK(lhs == Scalar(static_cast<long>(2 * m - n)) * w3_mode_unnormalized(m + n, v));
      }
    }
  }
}

TEST_CASE("W3 self-commutator matches the rescaled mode algebra") {
  // [W~_m, W~_n] = (972/beta)(...)L + 972 (m - n) Lambda + (972/beta) c/360 ... delta
  const Scalar c = central_charge(2);
  const Scalar k = q(972) * inverse_beta();
  auto rhs = [&](int m, int n, const FockVector& v) {
    const int s = m + n;
    const mpq_class lcoef = mpq_class((s + 3) * (s + 2), 15) - mpq_class((m + 2) * (n + 2), 6);
    FockVector out = k * Scalar(mpq_class(lcoef * (m - n))) * virasoro_mode(s, v);
    out += q(972L * (m - n)) * lambda_mode(s, v);
    if (s == 0) out += k * c * q(static_cast<long>(m) * (m * m - 1) * (m * m - 4), 360) * v;
    return out;
  };
  std::mt19937_64 rng(29);
  for (int i = 0; i < 3; ++i) {
    const Weight z = random_weight(rng, 3);
    const FockVector vac = FockVector::vacuum(z);
    const FockVector lhs = w3_mode_unnormalized(1, w3_mode_unnormalized(-1, vac)) -
                           w3_mode_unnormalized(-1, w3_mode_unnormalized(1, vac));
    CHECK(lhs == rhs(1, -1, vac));
  }
  const Weight z = random_weight(rng, 3);
  for (const FockVector& v : basis_up_to(z, 1)) {
    for (int m = -2; m <= 2; ++m) {
      for (int n = -2; n < m; ++n) {
        const FockVector lhs = w3_mode_unnormalized(m, w3_mode_unnormalized(n, v)) -
                               w3_mode_unnormalized(n, w3_mode_unnormalized(m, v));
        CHECK(lhs == rhs(m, n, v));
      }
    }
  }
}

TEST_CASE("Miura U_2 is the energy-momentum tensor") {
  std::mt19937_64 rng(41);
  for (int n = 2; n <= 4; ++n) {
    const Weight z = random_weight(rng, n);
    const FockVector vac = FockVector::vacuum(z);
    CHECK(miura_mode(n, 2, 0, vac) == conformal_weight(z) * vac);
    const int max_grade = n == 4 ? 2 : 4;
    for (int i = 0; i < 3; ++i) {
      const FockVector v = random_fock(rng, z, max_grade, 5);
      for (int mode = -2; mode <= 2; ++mode) CHECK(miura_mode(n, 2, mode, v) == virasoro_mode(mode, v));
    }
  }
  CHECK_THROWS(miura_field(3, 4));
  CHECK_THROWS(miura_field(3, 1));
  CHECK_THROWS_AS(miura_field(1, 2), RankError);
}

TEST_CASE("Miura U_3 annihilates highest weights and is W3 up to derivatives of T") {
  std::mt19937_64 rng(43);
  const Weight z = random_weight(rng, 3);
  const FockVector vac = FockVector::vacuum(z);
  for (int n = 1; n <= 3; ++n) CHECK(miura_mode(3, 3, n, vac).is_zero());
  // W~ and U_3 differ by a multiple of dT: U_3 = k W~ + k' dT, with (dT)_n = -(n+2) L_n
  const FockVector v = random_fock(rng, z, 3, 6);
  const FockVector u0 = miura_mode(3, 3, 0, vac);
  const Scalar x = w3_weight_unnormalized(z);
  const Scalar h = conformal_weight(z);
  // on |z>: u0 = k 54 X - 2 k' h; solve with a second weight
  const Weight z2 = random_weight(rng, 3);
  const Scalar x2 = w3_weight_unnormalized(z2);
  const Scalar h2 = conformal_weight(z2);
  const Scalar u = u0.coefficient(Monomial(2));
  const Scalar u2 = miura_mode(3, 3, 0, FockVector::vacuum(z2)).coefficient(Monomial(2));
  const Scalar det = q(54) * x * q(-2) * h2 - q(54) * x2 * q(-2) * h;
  REQUIRE(!det.is_zero());
  const Scalar k = (u * q(-2) * h2 - u2 * q(-2) * h) / det;
  const Scalar kp = (q(54) * x * u2 - q(54) * x2 * u) / det;
  for (int n = -2; n <= 2; ++n) {
    const FockVector rhs = k * w3_mode_unnormalized(n, v) - kp * Scalar(static_cast<long>(n + 2)) * virasoro_mode(n, v);
    CHECK(miura_mode(3, 3, n, v) == rhs);
  }
}

TEST_CASE("grade bookkeeping") {
  std::mt19937_64 rng(47);
  const Weight z = random_weight(rng, 3);
  for (int g = 0; g <= 4; ++g) {
    for (const auto& m : monomials_of_grade(2, g)) {
      const FockVector v = single(z, m);
      for (int k = 1; k <= 2; ++k) {
        for (int mode = 1; mode <= g; ++mode) {
          const FockVector a = annihilate(k, mode, v);
          if (!a.is_zero()) CHECK(a.max_grade() == g - mode);
          CHECK(a.is_homogeneous());
        }
      }
      for (int n = -2; n <= 2; ++n) {
        const FockVector l = virasoro_mode(n, v);
        CHECK(l.is_homogeneous());
        if (!l.is_zero()) CHECK(l.max_grade() == g - n);
      }
    }
  }
  // monomial counts are the coefficients of prod (1 - x^k)^{-2}
  const std::vector<std::size_t> counts{1, 2, 5, 10, 20, 36, 65};
  for (int g = 0; g < 7; ++g) CHECK(monomials_of_grade(2, g).size() == counts[static_cast<std::size_t>(g)]);
}

TEST_CASE("Fock vector text and LaTeX forms") {
  std::mt19937_64 rng(53);
  const Weight z = random_weight(rng, 3);
  for (int i = 0; i < 10; ++i) {
    const FockVector v = random_fock(rng, z, 4, 5);
    CHECK(FockVector::parse(z, v.to_string()) == v);
  }
  FockVector v(z);
  v.add_term(mono({Partition{2, 1, 1}, Partition{1}}), q(3));
  CHECK(v.to_string() == "a[1,-2]*a[1,-1]^2*a[2,-1] : 3");
  CHECK(FockVector::vacuum(z).to_string() == "1 : 1");
  CHECK(FockVector(z).to_string() == "0");
  CHECK_THROWS_AS(FockVector::parse(z, "a[3,-1] : 1"), std::invalid_argument);
  CHECK_THROWS_AS(FockVector::parse(z, "a[1,1] : 1"), std::invalid_argument);
  FockVector ex(theta().pinned(kPotts));
  ex.add_term(mono({Partition{1}, Partition{1}}), q(1));
  ex.add_term(mono({Partition{1, 1}, Partition{}}), q(5, 8));
  CHECK(ex.to_latex().find("a^{1}_{-1}a^{2}_{-1}") != std::string::npos);
  CHECK(ex.to_latex().find("\\frac{5}{8}a^{1}_{-1}a^{1}_{-1}") != std::string::npos);
}

TEST_CASE("parameter swap and pinning commute with mode actions") {
  std::mt19937_64 rng(59);
  const Weight z = random_weight(rng, 3);
  const FockVector v = random_fock(rng, z, 3, 4);
  const mpq_class t0(7, 3);
  CHECK(virasoro_mode(-1, v).pinned(t0) == virasoro_mode(-1, v.pinned(t0)));
  CHECK(w3_mode_unnormalized(1, v).pinned(t0) == w3_mode_unnormalized(1, v.pinned(t0)));
  CHECK(v.swap_alphas().swap_alphas() == v);
}

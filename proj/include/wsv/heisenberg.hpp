#pragma once

#include "wsv/partition.hpp"
#include "wsv/scalar.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace wsv {

class RankError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// (A^{-1})_{ij} for the Cartan matrix of sl(N), 1-based indices.
mpq_class inverse_cartan(int n, int i, int j);
/// A_{ij} for sl(N), 1-based indices.
int cartan(int i, int j);

/// Weight of sl(N) in Dynkin-label coordinates: zeta = sum_i labels[i] omega_{i+1}.
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::vector<Scalar> labels);
  static Weight zero(int n);
  static Weight fundamental(int n, int i);
  static Weight simple_root(int n, int i);
  static Weight weyl_vector(int n);
  /// epsilon^i = omega_1 - alpha_1 - ... - alpha_{i-1}, i = 1..N.
  static Weight epsilon(int n, int i);

  int rank() const { return static_cast<int>(labels_.size()); }
  int n() const { return rank() + 1; }
  const std::vector<Scalar>& labels() const { return labels_; }
  /// Dynkin label i (1-based), i.e. (alpha_i, zeta).
  const Scalar& label(int i) const { return labels_.at(static_cast<std::size_t>(i - 1)); }
  /// Coordinates in the simple-root basis: zeta = sum_j c_j alpha_j.
  std::vector<Scalar> root_coordinates() const;

  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  Weight& operator*=(const Scalar& c);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(const Scalar& c, Weight a) { return a *= c; }
  friend bool operator==(const Weight& a, const Weight& b) { return a.labels_ == b.labels_; }

  Weight pinned(const mpq_class& t0) const;
  Weight swap_alphas() const;
  std::string to_string() const;

 private:
  std::vector<Scalar> labels_;
};

Scalar bilinear(const Weight& a, const Weight& b);

/// h = (zeta, zeta - 2 alpha_0 rho) / 2.
Scalar conformal_weight(const Weight& zeta);

/// X = (zeta, omega_2 - omega_1)((zeta, omega_1) - alpha_0)((zeta, omega_2) - alpha_0); N = 3 only.
Scalar w3_weight_unnormalized(const Weight& zeta);

/// sum_i ((1 - u_i) alpha_+ + (1 - v_i) alpha_-) omega_i.
Weight svweight(const std::vector<int>& u, const std::vector<int>& v);

/// Simple reflection s_i: zeta -> zeta - zeta_i alpha_i.
Weight weyl_reflect(int i, const Weight& zeta);
/// Shifted action of a word s_{i1} ... s_{ik} (rightmost acts first):
/// w . zeta = w(zeta - alpha_0 rho) + alpha_0 rho.
Weight shifted_weyl_action(const std::vector<int>& word, const Weight& zeta);

/// One partition per colour; colour k lists the mode numbers m of the
/// creation operators a^k_{-m}.
using Monomial = std::vector<Partition>;

int grade(const Monomial& m);

/// Scalar-linear combination of creation monomials applied to |weight>.
class FockVector {
 public:
  FockVector() = default;
  explicit FockVector(Weight weight) : weight_(std::move(weight)) {}
  /// The highest-weight vector |weight>.
  static FockVector vacuum(const Weight& weight);

  const Weight& weight() const { return weight_; }
  int rank() const { return weight_.rank(); }
  const std::map<Monomial, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coefficient(const Monomial& m) const;
  /// Largest grade present, -1 for the zero vector.
  int max_grade() const;
  bool is_homogeneous() const;

  void add_term(const Monomial& m, const Scalar& c);

  FockVector& operator+=(const FockVector& o);
  FockVector& operator-=(const FockVector& o);
  FockVector& operator*=(const Scalar& c);
  friend FockVector operator+(FockVector a, const FockVector& b) { return a += b; }
  friend FockVector operator-(FockVector a, const FockVector& b) { return a -= b; }
  friend FockVector operator*(const Scalar& c, FockVector a) { return a *= c; }
  friend bool operator==(const FockVector& a, const FockVector& b) {
    return a.weight_ == b.weight_ && a.terms_ == b.terms_;
  }

  FockVector pinned(const mpq_class& t0) const;
  FockVector swap_alphas() const;

  /// One line per term, `a[1,-2]*a[1,-1]^2*a[2,-1] : <Scalar>`; the empty
  /// monomial is written `1`.
  std::string to_string() const;
  /// Inverse of to_string; the weight is supplied separately.
  static FockVector parse(const Weight& weight, const std::string& text);
  /// `(... ) \ket{name}` with `a^{k}_{-m}` factors.
  std::string to_latex(const std::string& ket = "\\theta") const;

 private:
  Weight weight_;
  std::map<Monomial, Scalar> terms_;
};

/// a^k_{-m}, m > 0.
FockVector create(int k, int m, const FockVector& v);
/// a^k_m, m > 0.
FockVector annihilate(int k, int m, const FockVector& v);
/// a^k_0.
FockVector zero_mode(int k, const FockVector& v);
/// a^k_n for any n.
FockVector heisenberg_mode(int k, int n, const FockVector& v);

/// L_n from the free-field energy-momentum tensor.
FockVector virasoro_mode(int n, const FockVector& v);

/// A normal-ordered product of derivative fields, prod_i d^{d_i} h_i(z), with
/// h_i = sum_j coeffs[j] a^{j+1}.
struct FieldFactor {
  std::vector<mpq_class> coeffs;
  int derivative = 0;
};
struct FieldTerm {
  Scalar coefficient;
  std::vector<FieldFactor> factors;
};
using Field = std::vector<FieldTerm>;

/// The n-th mode of a field of conformal weight `weight`, i.e. the
/// coefficient of z^{-n-weight}.  All terms must have that weight.
FockVector field_mode(const Field& field, int n, const FockVector& v);

/// The W_3 primary without its sqrt(beta)/(18 sqrt 3) prefactor.
const Field& w3_field_unnormalized();
FockVector w3_mode_unnormalized(int n, const FockVector& v);

/// U_k(z) of the quantum Miura transform for W_N, k = 2..N.
const Field& miura_field(int n, int k);
FockVector miura_mode(int n, int k, int mode, const FockVector& v);

/// Lambda_n = sum_{p <= -2} L_p L_{n-p} + sum_{p >= -1} L_{n-p} L_p
///            - (3/10)(n+2)(n+3) L_n.
FockVector lambda_mode(int n, const FockVector& v);

/// All monomials of the given grade for `rank` colours, in map order.
std::vector<Monomial> monomials_of_grade(int rank, int grade);

}  // namespace wsv

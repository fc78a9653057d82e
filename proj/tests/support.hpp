#pragma once

// Shared generators for the property-style tests.

#include "wsv/scalar.hpp"

#include <random>

namespace wsv::testing {

inline mpq_class random_rational(std::mt19937_64& rng, int range = 5) {
  std::uniform_int_distribution<int> num(-range, range);
  std::uniform_int_distribution<int> den(1, range);
  mpq_class q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

inline mpq_class random_positive_rational(std::mt19937_64& rng, int range = 7) {
  std::uniform_int_distribution<int> d(1, range);
  mpq_class q(d(rng), d(rng));
  q.canonicalize();
  return q;
}

inline Polynomial random_polynomial(std::mt19937_64& rng, int max_degree = 2) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::vector<mpq_class> c;
  int d = deg(rng);
  for (int i = 0; i <= d; ++i) c.push_back(random_rational(rng));
  return Polynomial(std::move(c));
}

inline RationalFunction random_rf(std::mt19937_64& rng) {
  Polynomial den = random_polynomial(rng, 2);
  while (den.is_zero()) den = random_polynomial(rng, 2);
  return RationalFunction(random_polynomial(rng, 2), den);
}

inline Scalar random_scalar(std::mt19937_64& rng) { return Scalar(random_rf(rng), random_rf(rng)); }

}  // namespace wsv::testing

#include "wsv/heisenberg.hpp"

namespace wsv::testing {

// Generic weight: each label an integer combination of alpha_+ and alpha_-.
inline Weight random_weight(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> d(-3, 3);
  std::vector<Scalar> labels;
  for (int i = 1; i < n; ++i) {
    labels.push_back(Scalar(static_cast<long>(d(rng))) * Scalar::alpha_plus() +
                     Scalar(static_cast<long>(d(rng))) * Scalar::alpha_minus());
  }
  return Weight(std::move(labels));
}

inline FockVector random_fock(std::mt19937_64& rng, const Weight& w, int max_grade, int terms) {
  std::uniform_int_distribution<int> g(0, max_grade);
  std::uniform_int_distribution<int> c(-4, 4);
  FockVector v(w);
  for (int i = 0; i < terms; ++i) {
    const auto monos = monomials_of_grade(w.rank(), g(rng));
    std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1);
    v.add_term(monos[pick(rng)], Scalar(static_cast<long>(c(rng))) + Scalar(static_cast<long>(c(rng))) * Scalar::t());
  }
  return v;
}

}  // namespace wsv::testing

#pragma once

// Independent reference routines shared by the tests and the acceptance runner.

#include "wsv/jack.hpp"

#include <functional>
#include <map>
#include <utility>
#include <vector>

namespace wsv::testing {

// h_n = sum_{|mu| = n} p_mu / z_mu
inline SymFunc complete_homogeneous(int n) {
  if (n < 0) return {};
  SymFunc h;
  for (const auto& mu : partitions_of(n)) h.add_term(mu, Scalar(mpq_class(1, static_cast<unsigned long>(z_factor(mu)))));
  return h;
}

// Jacobi-Trudi: s_lambda = det(h_{lambda_i - i + j}), by Laplace expansion.
inline SymFunc schur(const Partition& lambda) {
  const int l = static_cast<int>(lambda.length());
  std::vector<std::vector<SymFunc>> a(l, std::vector<SymFunc>(l));
  for (int i = 0; i < l; ++i) {
    for (int j = 0; j < l; ++j) a[i][j] = complete_homogeneous(lambda[i] - i + j);
  }
  std::function<SymFunc(std::vector<int>, int)> det = [&](std::vector<int> cols, int row) -> SymFunc {
    if (cols.empty()) return SymFunc::one();
    SymFunc out;
    for (std::size_t k = 0; k < cols.size(); ++k) {
      std::vector<int> rest = cols;
      rest.erase(rest.begin() + static_cast<long>(k));
      SymFunc term = a[row][cols[k]] * det(rest, row + 1);
      if (k % 2 == 1) term *= Scalar(-1);
      out += term;
    }
    return out;
  };
  std::vector<int> cols(l);
  for (int i = 0; i < l; ++i) cols[i] = i;
  return det(cols, 0);
}

using Bi = std::map<std::pair<Partition, Partition>, Scalar>;

inline void bi_add(Bi& acc, const Partition& a, const Partition& b, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, ins] = acc.try_emplace({a, b}, c);
  if (!ins) {
    it->second += c;
    if (it->second.is_zero()) acc.erase(it);
  }
}

// Coproduct p_k -> p_k (x) 1 + 1 (x) p_k, i.e. f(x u y) written in p(x), p(y).
inline Bi coproduct(const SymFunc& f) {
  Bi out;
  for (const auto& [lambda, c] : f.terms()) {
    Bi cur{{{Partition{}, Partition{}}, c}};
    for (int part : lambda.parts()) {
      Bi next;
      for (const auto& [key, v] : cur) {
        bi_add(next, key.first.with_part_added(part), key.second, v);
        bi_add(next, key.first, key.second.with_part_added(part), v);
      }
      cur = std::move(next);
    }
    for (const auto& [key, v] : cur) bi_add(out, key.first, key.second, v);
  }
  return out;
}

// Gram-Schmidt on monomials, in an order refining dominance.
inline std::vector<SymFunc> gram_schmidt(int n) {
  std::vector<SymFunc> js;
  std::vector<Scalar> norms;
  for (const auto& lambda : partitions_of(n)) {
    const SymFunc m = monomial_in_power_sums(lambda);
    SymFunc j = m;
    for (std::size_t i = 0; i < js.size(); ++i) j -= js[i] * (inner_product(m, js[i]) / norms[i]);
    norms.push_back(inner_product(j, j));
    js.push_back(std::move(j));
  }
  return js;
}

}  // namespace wsv::testing

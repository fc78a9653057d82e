#include "wsv/verify.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <stdexcept>

namespace wsv {

ModeOperator virasoro_operator(int n) {
  return {"L_" + std::to_string(n), [n](const FockVector& v) { return virasoro_mode(n, v); }};
}

ModeOperator w3_operator(int n) {
  return {"W_" + std::to_string(n), [n](const FockVector& v) { return w3_mode_unnormalized(n, v); }};
}

ModeOperator miura_operator(int big_n, int k, int n) {
  return {"U^" + std::to_string(k) + "_" + std::to_string(n),
          [big_n, k, n](const FockVector& v) { return miura_mode(big_n, k, n, v); }};
}

std::vector<ModeOperator> default_generators(int n) {
  std::vector<ModeOperator> g{virasoro_operator(1), virasoro_operator(2)};
  if (n == 3) {
    g.push_back(w3_operator(1));
    g.push_back(w3_operator(2));
    return g;
  }
  for (int k = 3; k <= n; ++k) {
    g.push_back(miura_operator(n, k, 1));
    g.push_back(miura_operator(n, k, 2));
  }
  return g;
}

bool VerificationReport::passed() const {
  if (error) return false;
  if (!std::all_of(checks.begin(), checks.end(), [](const ModeCheck& c) { return c.passed; })) return false;
  return !oracle_match || *oracle_match;
}

std::string VerificationReport::to_json() const {
  nlohmann::ordered_json j;
  j["spec"] = spec.to_string();
  j["grade"] = grade;
  j["passed"] = passed();
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    j["checks"].push_back({{"mode", c.label}, {"passed", c.passed}, {"residual_terms", c.residual.terms().size()}});
  }
  j["oracle_dimension"] = oracle_dimension ? nlohmann::ordered_json(*oracle_dimension) : nlohmann::ordered_json();
  j["oracle_match"] = oracle_match ? nlohmann::ordered_json(*oracle_match) : nlohmann::ordered_json();
  j["error"] = error ? nlohmann::ordered_json(*error) : nlohmann::ordered_json();
  return j.dump(2);
}

VerificationReport check_singular(const FockVector& v, const ScreeningSpec& spec, const VerifyOptions& options) {
  spec.validate();
  VerificationReport report;
  report.spec = spec;
  report.grade = spec.grade();
  const int d = report.grade;
  if (v.is_zero()) {
    report.error = "zero input";
    return report;
  }
  if (!v.is_homogeneous() || v.max_grade() != d) throw std::invalid_argument("grade mismatch");
  auto annihilation = [&](const ModeOperator& op) {
    FockVector r = op.apply(v);
    const bool ok = r.is_zero();
    report.checks.push_back({op.label, ok, std::move(r)});
  };
  for (int n = 1; n <= d; ++n) annihilation(virasoro_operator(n));
  if (spec.n == 3) {
    for (int n = 1; n <= d; ++n) annihilation(w3_operator(n));
  } else {
    for (int k = 3; k <= spec.n; ++k) {
      for (int n = 1; n <= 2; ++n) annihilation(miura_operator(spec.n, k, n));
    }
  }
  const Weight eta = spec.source();
  FockVector l0 = virasoro_mode(0, v) - conformal_weight(eta) * v;
  report.checks.push_back({"L_0 - h", l0.is_zero(), std::move(l0)});
  if (spec.n == 3) {
    FockVector w0 = w3_mode_unnormalized(0, v) - Scalar(54) * w3_weight_unnormalized(eta) * v;
    report.checks.push_back({"W_0 - 54 X", w0.is_zero(), std::move(w0)});
  }
  if (options.run_oracle) {
    const auto kernel = brute_force_kernel(v.weight(), d, default_generators(spec.n));
    report.oracle_dimension = kernel.size();
    report.oracle_match = span_certificate(kernel, v).has_value();
  }
  return report;
}

namespace {

using SparseRow = std::map<std::size_t, Scalar>;

// rough size of a coefficient, used to pick cheap pivots
std::size_t complexity(const Scalar& x) {
  auto part = [](const RationalFunction& f) {
    return f.is_zero() ? 0 : static_cast<std::size_t>(f.num().degree() + f.den().degree() + 1);
  };
  return part(x.rational_part()) + part(x.alpha_part());
}

// Reduced row echelon form over the coefficient field; returns (pivot column, row) pairs.
std::vector<std::pair<std::size_t, SparseRow>> reduce(std::vector<SparseRow> rows, std::size_t columns) {
  std::vector<std::pair<std::size_t, SparseRow>> pivots;
  for (std::size_t c = 0; c < columns; ++c) {
    std::size_t best = rows.size();
    for (std::size_t i = 0; i < rows.size(); ++i) {
      auto it = rows[i].find(c);
      if (it == rows[i].end()) continue;
      if (best == rows.size() || complexity(it->second) < complexity(rows[best].at(c))) best = i;
    }
    if (best == rows.size()) continue;
    SparseRow pivot = std::move(rows[best]);
    rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(best));
    const Scalar inv = pivot.at(c).inverse();
    for (auto& [k, x] : pivot) x *= inv;
    auto eliminate = [&](SparseRow& row) {
      auto it = row.find(c);
      if (it == row.end()) return;
      const Scalar f = it->second;
      for (const auto& [k, x] : pivot) {
        auto [jt, inserted] = row.try_emplace(k, -f * x);
        if (!inserted) {
          jt->second -= f * x;
          if (jt->second.is_zero()) row.erase(jt);
        }
      }
    };
    for (auto& row : rows) eliminate(row);
    for (auto& [pc, row] : pivots) eliminate(row);
    std::erase_if(rows, [](const SparseRow& r) { return r.empty(); });
    pivots.emplace_back(c, std::move(pivot));
  }
  return pivots;
}

}  // namespace

std::vector<FockVector> brute_force_kernel(const Weight& theta, int grade, const std::vector<ModeOperator>& generators) {
  const std::vector<Monomial> basis = monomials_of_grade(theta.rank(), grade);
  // one row per (generator, image monomial)
  std::map<std::pair<std::size_t, Monomial>, std::size_t> row_index;
  std::vector<SparseRow> rows;
  for (std::size_t col = 0; col < basis.size(); ++col) {
    FockVector e(theta);
    e.add_term(basis[col], Scalar(1));
    for (std::size_t g = 0; g < generators.size(); ++g) {
      const FockVector image = generators[g].apply(e);
      for (const auto& [m, c] : image.terms()) {
        auto [it, inserted] = row_index.try_emplace({g, m}, rows.size());
        if (inserted) rows.emplace_back();
        rows[it->second][col] = c;
      }
    }
  }
  const auto pivots = reduce(std::move(rows), basis.size());
  std::vector<bool> is_pivot(basis.size(), false);
  for (const auto& [c, row] : pivots) is_pivot[c] = true;
  std::vector<FockVector> kernel;
  for (std::size_t f = 0; f < basis.size(); ++f) {
    if (is_pivot[f]) continue;
    FockVector k(theta);
    k.add_term(basis[f], Scalar(1));
    for (const auto& [c, row] : pivots) {
      auto it = row.find(f);
      if (it != row.end()) k.add_term(basis[c], -it->second);
    }
    kernel.push_back(std::move(k));
  }
  return kernel;
}

std::optional<std::vector<Scalar>> span_certificate(const std::vector<FockVector>& basis, const FockVector& v) {
  // columns: basis vectors, then v; rows: monomials
  std::map<Monomial, std::size_t> row_index;
  std::vector<SparseRow> rows;
  auto put = [&](const FockVector& x, std::size_t col) {
    for (const auto& [m, c] : x.terms()) {
      auto [it, inserted] = row_index.try_emplace(m, rows.size());
      if (inserted) rows.emplace_back();
      rows[it->second][col] = c;
    }
  };
  for (std::size_t i = 0; i < basis.size(); ++i) put(basis[i], i);
  put(v, basis.size());
  const auto pivots = reduce(std::move(rows), basis.size() + 1);
  std::vector<Scalar> coeffs(basis.size());
  for (const auto& [c, row] : pivots) {
    if (c == basis.size()) return std::nullopt;
    auto it = row.find(basis.size());
    if (it != row.end()) coeffs[c] = it->second;
  }
  FockVector sum(v.weight());
  for (std::size_t i = 0; i < basis.size(); ++i) sum += coeffs[i] * basis[i];
  if (!(sum - v).is_zero()) return std::nullopt;
  return coeffs;
}

bool ModeAlgebraReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const AlgebraCheck& c) { return c.passed; });
}

ModeAlgebraReport check_mode_algebra(int max_grade) {
  const Scalar ap = Scalar::alpha_plus();
  const Scalar am = Scalar::alpha_minus();
  const Weight zeta({Scalar(2) * ap - am, Scalar(3) * am - ap});
  const Scalar a0_sq = Scalar::alpha_zero() * Scalar::alpha_zero();
  const Scalar c = Scalar(2) - Scalar(24) * a0_sq;
  const Scalar inv_beta = (Scalar(4) - Scalar(15) * a0_sq) / Scalar(2);
  std::vector<FockVector> basis;
  for (int g = 0; g <= max_grade; ++g) {
    for (const auto& m : monomials_of_grade(2, g)) {
      FockVector e(zeta);
      e.add_term(m, Scalar(1));
      basis.push_back(std::move(e));
    }
  }
  auto L = [](int n, const FockVector& v) { return virasoro_mode(n, v); };
  auto W = [](int n, const FockVector& v) { return w3_mode_unnormalized(n, v); };
  ModeAlgebraReport report;
  report.max_grade = max_grade;
  for (int m = -2; m <= 2; ++m) {
    for (int n = -2; n < m; ++n) {
      bool ok = true;
      for (const auto& v : basis) {
        FockVector rhs = Scalar(static_cast<long>(m - n)) * L(m + n, v);
        if (m + n == 0) rhs += c * Scalar(mpq_class(m * (m * m - 1), 12)) * v;
        ok = ok && (L(m, L(n, v)) - L(n, L(m, v))) == rhs;
      }
      report.checks.push_back({"[L_" + std::to_string(m) + ", L_" + std::to_string(n) + "]", ok});
    }
  }
  for (int m = -2; m <= 2; ++m) {
    for (int n = -2; n <= 2; ++n) {
      bool ok = true;
      for (const auto& v : basis) {
        ok = ok && (L(m, W(n, v)) - W(n, L(m, v))) == Scalar(static_cast<long>(2 * m - n)) * W(m + n, v);
      }
      report.checks.push_back({"[L_" + std::to_string(m) + ", W_" + std::to_string(n) + "]", ok});
    }
  }
  // [W_m, W_n] rescaled by (18 sqrt 3 / sqrt beta)^2 = 972 / beta
  const std::vector<std::pair<int, int>> ww{{1, -1}, {2, -2}, {1, 0}, {2, -1}};
  for (const auto& [m, n] : ww) {
    bool ok = true;
    for (const auto& v : basis) {
      if (v.max_grade() > std::min(max_grade, 1)) continue;
      const int s = m + n;
      const mpq_class lcoef = (mpq_class((s + 3) * (s + 2), 15) - mpq_class((m + 2) * (n + 2), 6)) * (m - n);
      FockVector rhs = Scalar(972) * inv_beta * Scalar(lcoef) * L(s, v);
      rhs += Scalar(972L * (m - n)) * lambda_mode(s, v);
      if (s == 0) rhs += Scalar(972) * inv_beta * c * Scalar(mpq_class(m * (m * m - 1) * (m * m - 4), 360)) * v;
      ok = ok && (W(m, W(n, v)) - W(n, W(m, v))) == rhs;
    }
    report.checks.push_back({"[W_" + std::to_string(m) + ", W_" + std::to_string(n) + "]", ok});
  }
  return report;
}

}  // namespace wsv

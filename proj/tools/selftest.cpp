#include "selftest.hpp"

#include "wsv/jack.hpp"
#include "wsv/verify.hpp"

#include <functional>

namespace wsv::cli {

namespace {

Scalar q(long n, long d = 1) { return Scalar(mpq_class(n, d)); }

ScreeningSpec spec_of(std::vector<int> r, std::vector<int> s, std::optional<mpq_class> t,
                      ScreeningSign sign = ScreeningSign::plus) {
  const int n = static_cast<int>(r.size()) + 1;
  return ScreeningSpec{n, std::move(r), std::move(s), sign, t};
}

bool example1() {
  const mpq_class t0(4, 5);
  const ScreeningSpec spec = spec_of({1, 1}, {-1, -1}, t0);
  FockVector expect(spec.target());
  expect.add_term(Monomial{Partition{1}, Partition{1}}, q(1).pinned(t0));
  expect.add_term(Monomial{Partition{1, 1}, Partition{}}, q(5, 8).pinned(t0));
  expect.add_term(Monomial{Partition{2}, Partition{}}, (Scalar::alpha_plus() / q(2)).pinned(t0));
  return singular_vector(spec) == expect && conformal_weight(spec.source()) == q(13, 6) &&
         conformal_weight(spec.target()) == q(1, 6);
}

bool example2(unsigned threads) {
  const ScreeningSpec spec = spec_of({2, 1}, {-1, -1}, std::nullopt);
  const FockVector v = singular_vector(spec, {threads});
  const Scalar t = Scalar::t();
  const Scalar d1 = t + q(1);
  const Scalar d2 = q(2) * t + q(1);
  const Scalar inv_a = Scalar(1) / Scalar::alpha_plus();
  return v.coefficient(Monomial{Partition{1, 1, 1}, Partition{}}) == q(2) * inv_a / (d1 * d2) &&
         v.coefficient(Monomial{Partition{1, 1}, Partition{1}}) == inv_a / d1 &&
         v.coefficient(Monomial{Partition{2, 1}, Partition{}}) == q(2) * (t - q(1)) / (d1 * d2) &&
         v.coefficient(Monomial{Partition{2}, Partition{1}}) == q(-1) / d1 && check_singular(v, spec).passed();
}

bool example3() {
  const auto first = example3_enumerate(3, 2, 1).at(0);
  return first.spec.grade() == 6 && check_singular(singular_vector(first.spec), first.spec).passed();
}

bool minus_family() {
  const ScreeningSpec spec = spec_of({-1, -1}, {1, 1}, mpq_class(5, 4), ScreeningSign::minus);
  return check_singular(singular_vector(spec), spec).passed();
}

bool oracle() {
  const ScreeningSpec spec = spec_of({1, 1}, {-1, -1}, mpq_class(4, 5));
  return check_singular(singular_vector(spec), spec, {true}).passed();
}

bool w4() {
  const ScreeningSpec spec = spec_of({1, 1, 1}, {-1, -1, -1}, std::nullopt);
  return check_singular(singular_vector(spec), spec).passed();
}

bool jack_properties() {
  const Scalar t = Scalar::t();
  bool ok = jack({2, 1}) == SymFunc::p({1, 1, 1}, q(1) / (t + q(2))) + SymFunc::p({2, 1}, (t - q(1)) / (t + q(2))) +
                                SymFunc::p({3}, -t / (t + q(2)));
  ok = ok && integral_norm_c({1, 1}, 2) == q(2) / (t * (t + q(1)));
  for (int n = 0; n <= 5; ++n) {
    const auto& ps = partitions_of(n);
    for (std::size_t i = 0; i < ps.size(); ++i) {
      const PartitionMap m = p_to_m(jack(ps[i]), n);
      ok = ok && m.count(ps[i]) == 1 && m.at(ps[i]).is_one();
      for (const auto& [mu, c] : m) ok = ok && dominates(ps[i], mu);
      for (std::size_t k = 0; k < i; ++k) ok = ok && inner_product(jack(ps[i]), jack(ps[k])).is_zero();
      ok = ok && inner_product(jack(ps[i]), jack(ps[i]) * dual_norm_b(ps[i])).is_one();
    }
  }
  return ok;
}

bool shifted_weyl() {
  const Weight z({Scalar(2) * Scalar::alpha_plus() - Scalar::alpha_minus(),
                  Scalar(3) * Scalar::alpha_minus() - Scalar::alpha_plus()});
  const std::vector<std::vector<int>> s3{{1}, {2}, {1, 2}, {2, 1}, {1, 2, 1}};
  for (const auto& word : s3) {
    const Weight w = shifted_weyl_action(word, z);
    if (conformal_weight(w) != conformal_weight(z) || w3_weight_unnormalized(w) != w3_weight_unnormalized(z)) {
      return false;
    }
  }
  return true;
}

}  // namespace

std::vector<SelftestRow> run_selftest(unsigned threads) {
  const std::vector<std::pair<std::string, std::function<bool()>>> suite{
      {"example 1 (t = 4/5)", example1},
      {"example 2 (symbolic t)", [threads] { return example2(threads); }},
      {"example 3 (t = 3/2, grade 6)", example3},
      {"minus family (t = 5/4)", minus_family},
      {"kernel oracle (example 1)", oracle},
      {"W_4 spot check", w4},
      {"jack properties (degree <= 5)", jack_properties},
      {"mode algebra (grade <= 2)", [] { return check_mode_algebra(2).passed(); }},
      {"shifted Weyl invariance", shifted_weyl},
  };
  std::vector<SelftestRow> rows;
  for (const auto& [name, run] : suite) {
    bool ok = false;
    try {
      ok = run();
    } catch (const std::exception&) {
      ok = false;
    }
    rows.push_back({name, ok});
  }
  return rows;
}

}  // namespace wsv::cli

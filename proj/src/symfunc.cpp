#include "wsv/symfunc.hpp"

#include <mutex>
#include <sstream>
#include <stdexcept>

namespace wsv {

SymFunc::SymFunc(PartitionMap terms) : terms_(std::move(terms)) {
  std::erase_if(terms_, [](const auto& kv) { return kv.second.is_zero(); });
}

SymFunc SymFunc::p(const Partition& lambda, const Scalar& c) {
  SymFunc f;
  f.add_term(lambda, c);
  return f;
}

Scalar SymFunc::coefficient(const Partition& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? Scalar(0) : it->second;
}

int SymFunc::degree() const {
  int d = -1;
  for (const auto& [lambda, c] : terms_) d = std::max(d, lambda.size());
  return d;
}

bool SymFunc::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int d = terms_.begin()->first.size();
  for (const auto& [lambda, c] : terms_) {
    if (lambda.size() != d) return false;
  }
  return true;
}

void SymFunc::add_term(const Partition& lambda, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(lambda, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

SymFunc& SymFunc::operator+=(const SymFunc& o) {
  for (const auto& [lambda, c] : o.terms_) add_term(lambda, c);
  return *this;
}

SymFunc& SymFunc::operator-=(const SymFunc& o) {
  for (const auto& [lambda, c] : o.terms_) add_term(lambda, -c);
  return *this;
}

SymFunc& SymFunc::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [lambda, x] : terms_) x *= c;
  return *this;
}

SymFunc operator*(const SymFunc& a, const SymFunc& b) {
  SymFunc out;
  for (const auto& [la, ca] : a.terms_) {
    for (const auto& [lb, cb] : b.terms_) out.add_term(la.merged(lb), ca * cb);
  }
  return out;
}

SymFunc SymFunc::pinned(const mpq_class& t0) const {
  SymFunc out;
  for (const auto& [lambda, c] : terms_) out.add_term(lambda, c.pinned(t0));
  return out;
}

std::string SymFunc::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [lambda, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")*p" << lambda.to_string();
  }
  return os.str();
}

SymFunc SymFunc::parse(std::string_view text) {
  auto fail = [&](const std::string& why) -> SymFunc {
    throw std::invalid_argument("malformed symmetric function (" + why + "): '" + std::string(text) + "'");
  };
  SymFunc out;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && text[pos] == ' ') ++pos;
  };
  skip();
  if (text.substr(pos) == "0") return out;
  while (pos < text.size()) {
    if (text[pos] != '(') return fail("expected '('");
    int depth = 0;
    std::size_t start = pos;
    for (; pos < text.size(); ++pos) {
      if (text[pos] == '(') ++depth;
      if (text[pos] == ')' && --depth == 0) break;
    }
    if (pos >= text.size()) return fail("unbalanced parentheses");
    Scalar c = Scalar::parse(text.substr(start + 1, pos - start - 1));
    ++pos;
    if (text.substr(pos, 3) != "*p[") return fail("expected '*p['");
    pos += 2;
    std::size_t close = text.find(']', pos);
    if (close == std::string_view::npos) return fail("expected ']'");
    Partition lambda = Partition::parse(text.substr(pos, close - pos + 1));
    pos = close + 1;
    out.add_term(lambda, c);
    skip();
    if (pos >= text.size()) break;
    if (text[pos] != '+') return fail("expected '+'");
    ++pos;
    skip();
  }
  return out;
}

Scalar inner_product(const SymFunc& f, const SymFunc& g) {
  Scalar acc;
  const PartitionMap& small = f.terms().size() <= g.terms().size() ? f.terms() : g.terms();
  const PartitionMap& large = f.terms().size() <= g.terms().size() ? g.terms() : f.terms();
  for (const auto& [lambda, c] : small) {
    auto it = large.find(lambda);
    if (it == large.end()) continue;
    Scalar norm = Scalar::t().pow(static_cast<int>(lambda.length())) * Scalar(mpq_class(static_cast<long>(z_factor(lambda))));
    acc += c * it->second * norm;
  }
  return acc;
}

namespace {

std::mutex& expansion_mutex() {
  static std::mutex m;
  return m;
}

// p_k * m_mu in the monomial basis: add k to one part value v of mu (or to a new
// zero part); the coefficient of the result nu is the multiplicity of v + k in nu.
std::map<Partition, mpz_class> times_power_sum(const std::map<Partition, mpz_class>& f, int k) {
  std::map<Partition, mpz_class> out;
  for (const auto& [mu, c] : f) {
    std::vector<int> values{0};
    for (int v : mu.parts()) {
      if (v != values.back()) values.push_back(v);
    }
    for (int v : values) {
      Partition nu = v == 0 ? mu.with_part_added(k) : mu.with_part_removed(v).with_part_added(v + k);
      out[nu] += c * nu.multiplicity(v + k);
    }
  }
  return out;
}

}  // namespace

const std::map<Partition, mpz_class>& power_sum_in_monomials(const Partition& lambda) {
  static std::map<Partition, std::map<Partition, mpz_class>> cache;
  {
    std::lock_guard lock(expansion_mutex());
    auto it = cache.find(lambda);
    if (it != cache.end()) return it->second;
  }
  std::map<Partition, mpz_class> result;
  if (lambda.empty()) {
    result[Partition{}] = 1;
  } else {
    const int k = lambda.parts().back();
    result = times_power_sum(power_sum_in_monomials(lambda.with_part_removed(k)), k);
  }
  std::lock_guard lock(expansion_mutex());
  return cache.emplace(lambda, std::move(result)).first->second;
}

PartitionMap p_to_m(const SymFunc& f, int max_len) {
  PartitionMap out;
  for (const auto& [lambda, c] : f.terms()) {
    for (const auto& [mu, k] : power_sum_in_monomials(lambda)) {
      if (static_cast<int>(mu.length()) > max_len) continue;
      Scalar term = c * Scalar(mpq_class(k));
      auto [it, inserted] = out.try_emplace(mu, term);
      if (!inserted) it->second += term;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

namespace {

// Inverse of the (upper triangular) p -> m transition matrix at degree n.
const std::vector<std::vector<mpq_class>>& monomial_transition(int n) {
  static std::mutex m;
  static std::map<int, std::vector<std::vector<mpq_class>>> cache;
  {
    std::lock_guard lock(m);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  const auto& parts = partitions_of(n);
  const std::size_t d = parts.size();
  std::map<Partition, std::size_t> index;
  for (std::size_t i = 0; i < d; ++i) index[parts[i]] = i;
  // M[i][j]: coefficient of m_{parts[j]} in p_{parts[i]}; upper triangular
  std::vector<std::vector<mpq_class>> M(d, std::vector<mpq_class>(d, mpq_class(0)));
  for (std::size_t i = 0; i < d; ++i) {
    for (const auto& [mu, c] : power_sum_in_monomials(parts[i])) M[i][index.at(mu)] = c;
  }
  // back substitution for X = M^{-1}
  std::vector<std::vector<mpq_class>> X(d, std::vector<mpq_class>(d, mpq_class(0)));
  for (std::size_t col = 0; col < d; ++col) {
    for (std::size_t ii = d; ii-- > 0;) {
      mpq_class s = ii == col ? mpq_class(1) : mpq_class(0);
      for (std::size_t j = ii + 1; j < d; ++j) s -= M[ii][j] * X[j][col];
      X[ii][col] = s / M[ii][ii];
    }
  }
  // m = M^{-1} p, i.e. m_{parts[i]} = sum_j X[i][j] p_{parts[j]}
  std::lock_guard lock(m);
  return cache.emplace(n, std::move(X)).first->second;
}

}  // namespace

SymFunc monomial_in_power_sums(const Partition& lambda) {
  const auto& parts = partitions_of(lambda.size());
  const auto& X = monomial_transition(lambda.size());
  std::size_t row = 0;
  while (parts[row] != lambda) ++row;
  SymFunc out;
  for (std::size_t j = 0; j < parts.size(); ++j) {
    if (sgn(X[row][j]) != 0) out.add_term(parts[j], Scalar(X[row][j]));
  }
  return out;
}

}  // namespace wsv

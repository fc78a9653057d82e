#include "wsv/heisenberg.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <mutex>
#include <sstream>
#include <tuple>

namespace wsv {

mpq_class inverse_cartan(int n, int i, int j) {
  mpq_class v(std::min(i, j) * n - i * j, n);
  v.canonicalize();
  return v;
}

int cartan(int i, int j) {
  if (i == j) return 2;
  return std::abs(i - j) == 1 ? -1 : 0;
}

// ---------------------------------------------------------------- weights

Weight::Weight(std::vector<Scalar> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) throw RankError("weight needs rank >= 1");
}

Weight Weight::zero(int n) { return Weight(std::vector<Scalar>(static_cast<std::size_t>(n - 1))); }

Weight Weight::fundamental(int n, int i) {
  Weight w = zero(n);
  w.labels_.at(static_cast<std::size_t>(i - 1)) = Scalar(1);
  return w;
}

Weight Weight::simple_root(int n, int i) {
  Weight w = zero(n);
  for (int j = 1; j < n; ++j) w.labels_[static_cast<std::size_t>(j - 1)] = Scalar(static_cast<long>(cartan(j, i)));
  return w;
}

Weight Weight::weyl_vector(int n) {
  Weight w = zero(n);
  for (auto& l : w.labels_) l = Scalar(1);
  return w;
}

Weight Weight::epsilon(int n, int i) {
  if (i < 1 || i > n) throw RankError("epsilon index out of range");
  Weight w = fundamental(n, 1);
  for (int j = 1; j < i; ++j) w -= simple_root(n, j);
  return w;
}

std::vector<Scalar> Weight::root_coordinates() const {
  const int n = this->n();
  std::vector<Scalar> c(labels_.size());
  for (int i = 1; i < n; ++i) {
    for (int j = 1; j < n; ++j) c[static_cast<std::size_t>(i - 1)] += Scalar(inverse_cartan(n, i, j)) * label(j);
  }
  return c;
}

Weight& Weight::operator+=(const Weight& o) {
  if (o.rank() != rank()) throw RankError("rank mismatch");
  for (std::size_t i = 0; i < labels_.size(); ++i) labels_[i] += o.labels_[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  if (o.rank() != rank()) throw RankError("rank mismatch");
  for (std::size_t i = 0; i < labels_.size(); ++i) labels_[i] -= o.labels_[i];
  return *this;
}

Weight& Weight::operator*=(const Scalar& c) {
  for (auto& l : labels_) l *= c;
  return *this;
}

Weight Weight::pinned(const mpq_class& t0) const {
  Weight w = *this;
  for (auto& l : w.labels_) l = l.pinned(t0);
  return w;
}

Weight Weight::swap_alphas() const {
  Weight w = *this;
  for (auto& l : w.labels_) l = l.swap_alphas();
  return w;
}

std::string Weight::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < labels_.size(); ++i) s += (i ? "; " : "") + labels_[i].to_string();
  return s + ")";
}

Scalar bilinear(const Weight& a, const Weight& b) {
  if (a.rank() != b.rank()) throw RankError("rank mismatch");
  const int n = a.n();
  Scalar s;
  for (int i = 1; i < n; ++i) {
    if (a.label(i).is_zero()) continue;
    for (int j = 1; j < n; ++j) {
      if (b.label(j).is_zero()) continue;
      s += a.label(i) * b.label(j) * Scalar(inverse_cartan(n, i, j));
    }
  }
  return s;
}

Scalar conformal_weight(const Weight& zeta) {
  const Weight shifted = zeta - (Scalar(2) * Scalar::alpha_zero()) * Weight::weyl_vector(zeta.n());
  return bilinear(zeta, shifted) * Scalar(mpq_class(1, 2));
}

Scalar w3_weight_unnormalized(const Weight& zeta) {
  if (zeta.n() != 3) throw RankError("W_3 weight needs N = 3");
  const Weight w1 = Weight::fundamental(3, 1);
  const Weight w2 = Weight::fundamental(3, 2);
  const Scalar a0 = Scalar::alpha_zero();
  return bilinear(zeta, w2 - w1) * (bilinear(zeta, w1) - a0) * (bilinear(zeta, w2) - a0);
}

Weight svweight(const std::vector<int>& u, const std::vector<int>& v) {
  if (u.size() != v.size() || u.empty()) throw RankError("svweight needs |u| = |v| = N - 1");
  std::vector<Scalar> labels;
  const Scalar ap = Scalar::alpha_plus();
  const Scalar am = Scalar::alpha_minus();
  for (std::size_t i = 0; i < u.size(); ++i) labels.push_back(Scalar(1L - u[i]) * ap + Scalar(1L - v[i]) * am);
  return Weight(std::move(labels));
}

Weight weyl_reflect(int i, const Weight& zeta) {
  return zeta - zeta.label(i) * Weight::simple_root(zeta.n(), i);
}

Weight shifted_weyl_action(const std::vector<int>& word, const Weight& zeta) {
  const Weight shift = Scalar::alpha_zero() * Weight::weyl_vector(zeta.n());
  Weight w = zeta - shift;
  for (auto it = word.rbegin(); it != word.rend(); ++it) w = weyl_reflect(*it, w);
  return w + shift;
}

// ---------------------------------------------------------------- Fock vectors

int grade(const Monomial& m) {
  int g = 0;
  for (const auto& p : m) g += p.size();
  return g;
}

FockVector FockVector::vacuum(const Weight& weight) {
  FockVector v(weight);
  v.add_term(Monomial(static_cast<std::size_t>(weight.rank())), Scalar(1));
  return v;
}

Scalar FockVector::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar(0) : it->second;
}

int FockVector::max_grade() const {
  int g = -1;
  for (const auto& [m, c] : terms_) g = std::max(g, grade(m));
  return g;
}

bool FockVector::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int g = grade(terms_.begin()->first);
  return std::all_of(terms_.begin(), terms_.end(), [g](const auto& kv) { return grade(kv.first) == g; });
}

void FockVector::add_term(const Monomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  if (static_cast<int>(m.size()) != rank()) throw RankError("monomial rank mismatch");
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

FockVector& FockVector::operator+=(const FockVector& o) {
  if (weight_.labels().empty()) weight_ = o.weight_;
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

FockVector& FockVector::operator-=(const FockVector& o) {
  if (weight_.labels().empty()) weight_ = o.weight_;
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

FockVector& FockVector::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, x] : terms_) x *= c;
  return *this;
}

FockVector FockVector::pinned(const mpq_class& t0) const {
  FockVector out(weight_.pinned(t0));
  for (const auto& [m, c] : terms_) out.add_term(m, c.pinned(t0));
  return out;
}

FockVector FockVector::swap_alphas() const {
  FockVector out(weight_.swap_alphas());
  for (const auto& [m, c] : terms_) out.add_term(m, c.swap_alphas());
  return out;
}

namespace {

std::string monomial_text(const Monomial& m) {
  std::string s;
  for (std::size_t k = 0; k < m.size(); ++k) {
    const auto& parts = m[k].parts();
    for (std::size_t i = 0; i < parts.size();) {
      std::size_t j = i;
      while (j < parts.size() && parts[j] == parts[i]) ++j;
      if (!s.empty()) s += "*";
      s += "a[" + std::to_string(k + 1) + ",-" + std::to_string(parts[i]) + "]";
      if (j - i > 1) s += "^" + std::to_string(j - i);
      i = j;
    }
  }
  return s.empty() ? "1" : s;
}

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t\r");
  const auto e = s.find_last_not_of(" \t\r");
  return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

Monomial parse_monomial(int rank, const std::string& text) {
  std::vector<std::vector<int>> parts(static_cast<std::size_t>(rank));
  if (text == "1") return Monomial(static_cast<std::size_t>(rank));
  std::size_t pos = 0;
  auto fail = [&]() -> Monomial { throw std::invalid_argument("malformed monomial '" + text + "'"); };
  while (pos < text.size()) {
    if (text.compare(pos, 2, "a[") != 0) return fail();
    pos += 2;
    const auto close = text.find(']', pos);
    if (close == std::string::npos) return fail();
    const std::string inner = text.substr(pos, close - pos);
    const auto comma = inner.find(',');
    if (comma == std::string::npos) return fail();
    int k = 0;
    int m = 0;
    try {
      k = std::stoi(inner.substr(0, comma));
      m = -std::stoi(inner.substr(comma + 1));
    } catch (const std::exception&) {
      return fail();
    }
    if (k < 1 || k > rank || m < 1) return fail();
    pos = close + 1;
    int power = 1;
    if (pos < text.size() && text[pos] == '^') {
      std::size_t end = pos + 1;
      while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end])) != 0) ++end;
      if (end == pos + 1) return fail();
      power = std::stoi(text.substr(pos + 1, end - pos - 1));
      pos = end;
    }
    for (int i = 0; i < power; ++i) parts[static_cast<std::size_t>(k - 1)].push_back(m);
    if (pos < text.size()) {
      if (text[pos] != '*') return fail();
      ++pos;
    }
  }
  Monomial out;
  for (auto& p : parts) out.push_back(Partition::from_unsorted(std::move(p)));
  return out;
}

std::string latex_coefficient(const Scalar& c, bool& negative) {
  std::string s = c.to_latex();
  negative = false;
  if (!s.empty() && s[0] == '-' && s.find(" + ") == std::string::npos && s.find(" - ") == std::string::npos) {
    negative = true;
    s = s.substr(1);
  }
  if (s == "1") return "";
  if (s.find(" + ") != std::string::npos || s.find(" - ") != std::string::npos) return "\\left(" + s + "\\right)";
  return s;
}

}  // namespace

std::string FockVector::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << "\n";
    first = false;
    os << monomial_text(m) << " : " << c.to_string();
  }
  return os.str();
}

FockVector FockVector::parse(const Weight& weight, const std::string& text) {
  FockVector v(weight);
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty() || line == "0") continue;
    const auto sep = line.find(" : ");
    if (sep == std::string::npos) throw std::invalid_argument("malformed Fock vector line '" + line + "'");
    v.add_term(parse_monomial(weight.rank(), trim(line.substr(0, sep))), Scalar::parse(line.substr(sep + 3)));
  }
  return v;
}

std::string FockVector::to_latex(const std::string& ket) const {
  if (terms_.empty()) return "0";
  // highest grade first, colour-major within a grade
  std::vector<std::pair<Monomial, Scalar>> ordered(terms_.begin(), terms_.end());
  std::stable_sort(ordered.begin(), ordered.end(), [](const auto& x, const auto& y) {
    return grade(x.first) > grade(y.first);
  });
  std::string body;
  bool first = true;
  for (const auto& [m, c] : ordered) {
    bool negative = false;
    const std::string coeff = latex_coefficient(c, negative);
    if (first) {
      body += negative ? "-" : "";
    } else {
      body += negative ? " - " : " + ";
    }
    first = false;
    body += coeff;
    std::string factors;
    for (std::size_t k = 0; k < m.size(); ++k) {
      for (int part : m[k].parts()) factors += "a^{" + std::to_string(k + 1) + "}_{-" + std::to_string(part) + "}";
    }
    if (factors.empty() && coeff.empty()) factors = "1";
    body += factors;
  }
  return "\\left(" + body + "\\right)\\ket{" + ket + "}";
}

// ---------------------------------------------------------------- modes

FockVector create(int k, int m, const FockVector& v) {
  if (m <= 0) throw std::invalid_argument("creation mode index must be positive");
  FockVector out(v.weight());
  for (const auto& [mono, c] : v.terms()) {
    Monomial next = mono;
    next.at(static_cast<std::size_t>(k - 1)) = next[static_cast<std::size_t>(k - 1)].with_part_added(m);
    out.add_term(next, c);
  }
  return out;
}

FockVector annihilate(int k, int m, const FockVector& v) {
  if (m <= 0) throw std::invalid_argument("annihilation mode index must be positive");
  FockVector out(v.weight());
  for (const auto& [mono, c] : v.terms()) {
    for (std::size_t j = 0; j < mono.size(); ++j) {
      const int a = cartan(k, static_cast<int>(j) + 1);
      const int mult = mono[j].multiplicity(m);
      if (a == 0 || mult == 0) continue;
      Monomial next = mono;
      next[j] = next[j].with_part_removed(m);
      out.add_term(next, c * Scalar(static_cast<long>(m) * a * mult));
    }
  }
  return out;
}

FockVector zero_mode(int k, const FockVector& v) {
  FockVector out = v;
  out *= v.weight().label(k);
  return out;
}

FockVector heisenberg_mode(int k, int n, const FockVector& v) {
  if (n < 0) return create(k, -n, v);
  if (n == 0) return zero_mode(k, v);
  return annihilate(k, n, v);
}

FockVector virasoro_mode(int n, const FockVector& v) {
  const int r = v.rank();
  const int big_n = r + 1;
  FockVector out(v.weight());
  const int g = v.max_grade();
  if (g < 0) return out;
  for (int i = 1; i <= r; ++i) {
    for (int j = 1; j <= r; ++j) {
      const Scalar aij(inverse_cartan(big_n, i, j));
      // (1/2) sum_m :a^i_m a^j_{n-m}: with the annihilator acting first
      for (int m = n - g; m <= g; ++m) {
        FockVector term = m > 0 ? heisenberg_mode(j, n - m, heisenberg_mode(i, m, v))
                                : heisenberg_mode(i, m, heisenberg_mode(j, n - m, v));
        term *= aij * Scalar(mpq_class(1, 2));
        out += term;
      }
      FockVector lin = heisenberg_mode(j, n, v);
      lin *= -Scalar::alpha_zero() * Scalar(static_cast<long>(n + 1)) * aij;
      out += lin;
    }
  }
  return out;
}

namespace {

mpq_class derivative_weight(int d, int m) {
  mpz_class f = 1;
  for (int j = 1; j <= d; ++j) f *= -m - j;
  return mpq_class(f);
}

struct State {
  Monomial mono;
  int used;
  std::vector<int> zero_counts;
  friend bool operator<(const State& a, const State& b) {
    return std::tie(a.mono, a.used, a.zero_counts) < std::tie(b.mono, b.used, b.zero_counts);
  }
};

using StateMap = std::map<State, mpq_class>;

void add_state(StateMap& map, State s, const mpq_class& w) {
  if (sgn(w) == 0) return;
  auto [it, inserted] = map.try_emplace(std::move(s), w);
  if (!inserted) it->second += w;
}

// Distributes `total` over the creation factors (each part >= 1) and applies
// the corresponding creators.
void apply_creators(const std::vector<const FieldFactor*>& creators, std::size_t idx, int total, const State& s,
                    const mpq_class& w, std::map<std::pair<Monomial, std::vector<int>>, mpq_class>& acc) {
  if (idx == creators.size()) {
    if (total != 0) return;
    auto [it, inserted] = acc.try_emplace({s.mono, s.zero_counts}, w);
    if (!inserted) it->second += w;
    return;
  }
  const std::size_t left = creators.size() - idx - 1;
  const FieldFactor& f = *creators[idx];
  const int lo = left == 0 ? total : 1;
  const int hi = total - static_cast<int>(left);
  for (int m = lo; m <= hi; ++m) {
    const mpq_class fw = derivative_weight(f.derivative, -m);
    if (sgn(fw) == 0) continue;
    for (std::size_t j = 0; j < f.coeffs.size(); ++j) {
      if (sgn(f.coeffs[j]) == 0) continue;
      State next = s;
      next.mono[j] = next.mono[j].with_part_added(m);
      apply_creators(creators, idx + 1, total - m, next, w * f.coeffs[j] * fw, acc);
    }
  }
}

}  // namespace

FockVector field_mode(const Field& field, int n, const FockVector& v) {
  const int r = v.rank();
  FockVector out(v.weight());
  // powers of the zero-mode eigenvalues, shared across terms
  std::map<std::pair<int, int>, Scalar> label_powers;
  auto label_power = [&](int j, int e) -> const Scalar& {
    auto it = label_powers.find({j, e});
    if (it != label_powers.end()) return it->second;
    return label_powers.emplace(std::make_pair(j, e), v.weight().label(j + 1).pow(e)).first->second;
  };
  for (const auto& [mono, coeff] : v.terms()) {
    const int g = grade(mono);
    if (g - n < 0) continue;
    for (const auto& term : field) {
      const std::size_t k = term.factors.size();
      std::map<std::pair<Monomial, std::vector<int>>, mpq_class> acc;
      std::size_t patterns = 1;
      for (std::size_t i = 0; i < k; ++i) patterns *= 3;
      for (std::size_t pat = 0; pat < patterns; ++pat) {
        std::vector<const FieldFactor*> annihilators;
        std::vector<const FieldFactor*> zeros;
        std::vector<const FieldFactor*> creators;
        std::size_t code = pat;
        for (std::size_t i = 0; i < k; ++i, code /= 3) {
          const FieldFactor* f = &term.factors[i];
          (code % 3 == 0 ? annihilators : code % 3 == 1 ? zeros : creators).push_back(f);
        }
        StateMap states;
        states[State{mono, 0, std::vector<int>(static_cast<std::size_t>(r), 0)}] = 1;
        for (const FieldFactor* f : annihilators) {
          StateMap next;
          for (const auto& [s, w] : states) {
            for (std::size_t j = 0; j < f->coeffs.size(); ++j) {
              if (sgn(f->coeffs[j]) == 0) continue;
              for (std::size_t c = 0; c < s.mono.size(); ++c) {
                const int a = cartan(static_cast<int>(j) + 1, static_cast<int>(c) + 1);
                if (a == 0) continue;
                const auto& parts = s.mono[c].parts();
                for (std::size_t p = 0; p < parts.size();) {
                  const int m = parts[p];
                  std::size_t q = p;
                  while (q < parts.size() && parts[q] == m) ++q;
                  const mpq_class fw = derivative_weight(f->derivative, m);
                  if (sgn(fw) != 0) {
                    State ns = s;
                    ns.mono[c] = ns.mono[c].with_part_removed(m);
                    ns.used += m;
                    add_state(next, std::move(ns), w * f->coeffs[j] * fw * (m * a * static_cast<int>(q - p)));
                  }
                  p = q;
                }
              }
            }
          }
          states = std::move(next);
        }
        for (const FieldFactor* f : zeros) {
          StateMap next;
          const mpq_class fw = derivative_weight(f->derivative, 0);
          for (const auto& [s, w] : states) {
            for (std::size_t j = 0; j < f->coeffs.size(); ++j) {
              if (sgn(f->coeffs[j]) == 0) continue;
              State ns = s;
              ++ns.zero_counts[j];
              add_state(next, std::move(ns), w * f->coeffs[j] * fw);
            }
          }
          states = std::move(next);
        }
        for (const auto& [s, w] : states) {
          if (sgn(w) == 0) continue;
          const int total = s.used - n;
          if (creators.empty() ? total != 0 : total < static_cast<int>(creators.size())) continue;
          apply_creators(creators, 0, total, s, w, acc);
        }
      }
      const Scalar base = coeff * term.coefficient;
      for (const auto& [key, w] : acc) {
        if (sgn(w) == 0) continue;
        Scalar c = base * Scalar(w);
        for (std::size_t j = 0; j < key.second.size(); ++j) {
          if (key.second[j] > 0) c *= label_power(static_cast<int>(j), key.second[j]);
        }
        out.add_term(key.first, c);
      }
    }
  }
  return out;
}

namespace {

FieldFactor factor(std::vector<mpq_class> coeffs, int d = 0) { return FieldFactor{std::move(coeffs), d}; }

}  // namespace

const Field& w3_field_unnormalized() {
  static const Field field = [] {
    const Scalar a0 = Scalar::alpha_zero();
    Field f;
    f.push_back({Scalar(2), {factor({-1, 1}), factor({1, 2}), factor({2, 1})}});
    f.push_back({Scalar(9) * a0, {factor({0, 1}, 1), factor({1, 2})}});
    f.push_back({Scalar(-9) * a0, {factor({1, 0}, 1), factor({2, 1})}});
    f.push_back({Scalar(9) * a0 * a0, {factor({-1, 1}, 2)}});
    return f;
  }();
  return field;
}

FockVector w3_mode_unnormalized(int n, const FockVector& v) {
  if (v.weight().n() != 3) throw RankError("W_3 modes need N = 3");
  return field_mode(w3_field_unnormalized(), n, v);
}

namespace {

// A commutative normal-ordered monomial in the fields d^l epsilon^i, as a
// sorted list of (i, l).
using FieldMonomial = std::vector<std::pair<int, int>>;

std::vector<Field> expand_miura(int n) {
  const Scalar a0 = Scalar::alpha_zero();
  // operator sum_j G_j (alpha_0 d)^j, G_j a polynomial in the fields
  std::map<int, std::map<FieldMonomial, Scalar>> op;
  op[0][{}] = Scalar(1);
  for (int i = 1; i <= n; ++i) {
    std::map<int, std::map<FieldMonomial, Scalar>> next;
    auto add = [&](int j, const FieldMonomial& m, const Scalar& c) {
      if (c.is_zero()) return;
      auto [it, inserted] = next[j].try_emplace(m, c);
      if (!inserted) it->second += c;
    };
    for (const auto& [j, poly] : op) {
      for (const auto& [mono, c] : poly) {
        add(j + 1, mono, c);
        // (alpha_0 d)^j eps = sum_l C(j, l) alpha_0^l (d^l eps) (alpha_0 d)^{j-l}
        mpz_class binom = 1;
        for (int l = 0; l <= j; ++l) {
          FieldMonomial m = mono;
          m.emplace_back(i, l);
          std::sort(m.begin(), m.end());
          add(j - l, m, c * Scalar(mpq_class(binom)) * a0.pow(l));
          binom = binom * (j - l) / (l + 1);
        }
      }
    }
    op = std::move(next);
  }
  std::vector<std::vector<mpq_class>> eps;
  for (int i = 1; i <= n; ++i) {
    std::vector<mpq_class> c;
    for (const Scalar& x : Weight::epsilon(n, i).root_coordinates()) c.push_back(x.rational_part().constant());
    eps.push_back(std::move(c));
  }
  std::vector<Field> fields(static_cast<std::size_t>(n + 1));
  for (int k = 2; k <= n; ++k) {
    for (const auto& [mono, c] : op[n - k]) {
      if (c.is_zero()) continue;
      FieldTerm term{-c, {}};
      for (const auto& [i, l] : mono) term.factors.push_back(factor(eps[static_cast<std::size_t>(i - 1)], l));
      fields[static_cast<std::size_t>(k)].push_back(std::move(term));
    }
  }
  return fields;
}

}  // namespace

const Field& miura_field(int n, int k) {
  if (n < 2) throw RankError("Miura transform needs N >= 2");
  if (k < 2 || k > n) throw std::invalid_argument("Miura index k out of range");
  static std::mutex mutex;
  static std::map<int, std::vector<Field>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, expand_miura(n)).first;
  return it->second[static_cast<std::size_t>(k)];
}

FockVector miura_mode(int n, int k, int mode, const FockVector& v) {
  if (v.weight().n() != n) throw RankError("Fock space rank does not match N");
  return field_mode(miura_field(n, k), mode, v);
}

FockVector lambda_mode(int n, const FockVector& v) {
  FockVector out(v.weight());
  const int g = v.max_grade();
  if (g < 0) return out;
  for (int p = n - g; p <= -2; ++p) out += virasoro_mode(p, virasoro_mode(n - p, v));
  for (int p = -1; p <= g; ++p) out += virasoro_mode(n - p, virasoro_mode(p, v));
  FockVector l = virasoro_mode(n, v);
  l *= Scalar(mpq_class(-3 * (n + 2) * (n + 3), 10));
  out += l;
  return out;
}

std::vector<Monomial> monomials_of_grade(int rank, int g) {
  std::vector<Monomial> out;
  Monomial cur(static_cast<std::size_t>(rank));
  std::function<void(int, int)> rec = [&](int color, int left) {
    if (color == rank - 1) {
      for (const auto& p : partitions_of(left)) {
        cur[static_cast<std::size_t>(color)] = p;
        out.push_back(cur);
      }
      return;
    }
    for (int here = 0; here <= left; ++here) {
      for (const auto& p : partitions_of(here)) {
        cur[static_cast<std::size_t>(color)] = p;
        rec(color + 1, left - here);
      }
    }
  };
  if (rank >= 1 && g >= 0) rec(0, g);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace wsv

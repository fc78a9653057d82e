#include "wsv/screening.hpp"

#include "wsv/jack.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <thread>
#include <tuple>

namespace wsv {

namespace {

std::vector<int> parse_ints(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw SpecError("malformed integer list '" + text + "'");
    }
  }
  return out;
}

std::string join(const std::vector<int>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
  return s;
}

Weight maybe_pinned(const Weight& w, const std::optional<mpq_class>& t) { return t ? w.pinned(*t) : w; }

// u-labels of the source and target weights of the plus family
std::vector<int> plus_source_u(const std::vector<int>& r) {
  std::vector<int> u;
  for (std::size_t k = 0; k + 1 < r.size(); ++k) u.push_back(r[k] - r[k + 1]);
  u.push_back(r.back());
  return u;
}

std::vector<int> plus_target_u(const std::vector<int>& r) {
  std::vector<int> u{-r.front()};
  for (std::size_t k = 0; k + 1 < r.size(); ++k) u.push_back(r[k] - r[k + 1]);
  return u;
}

Partition rectangle_of(const ScreeningSpec& spec, int k) {
  const auto i = static_cast<std::size_t>(k - 1);
  return Partition::rectangle(-spec.s[i], spec.r[i]);
}

Partition shifted(const ScreeningSpec& spec, const Partition& nu, int k) {
  const auto i = static_cast<std::size_t>(k - 1);
  return add_rectangle(nu, -spec.s[i], spec.r[i]);
}

std::vector<Partition> bounded_subpartitions(const Partition& lambda, int max_len) {
  std::vector<Partition> out;
  for (auto& p : subpartitions_of(lambda)) {
    if (static_cast<int>(p.length()) <= max_len) out.push_back(std::move(p));
  }
  std::sort(out.begin(), out.end());
  return out;
}

FockVector summand(const ScreeningSpec& spec, const NuSequence& nu, const Weight& target) {
  const int n = spec.n;
  // nu[k - 2] is nu_k
  auto nu_at = [&](int k) -> const Partition& { return nu[static_cast<std::size_t>(k - 2)]; };
  Scalar coeff(1);
  for (int k = 1; k <= n - 2; ++k) coeff *= integral_norm_c(shifted(spec, nu_at(k + 1), k), spec.r[static_cast<std::size_t>(k - 1)]);
  std::vector<SymFunc> fs;
  fs.push_back(jack(shifted(spec, nu_at(2), 1)));
  for (int k = 2; k <= n - 2; ++k) fs.push_back(skew_jack(shifted(spec, nu_at(k + 1), k), nu_at(k)));
  fs.push_back(skew_jack(rectangle_of(spec, n - 1), nu_at(n - 1)));
  if (spec.t) {
    coeff = coeff.pinned(*spec.t);
    for (auto& f : fs) f = f.pinned(*spec.t);
  }
  FockVector v = rho_plus(fs, target);
  v *= coeff;
  return v;
}

}  // namespace

int ScreeningSpec::grade() const {
  int g = 0;
  for (std::size_t k = 0; k < r.size() && k < s.size(); ++k) g -= r[k] * s[k];
  return g;
}

void ScreeningSpec::validate() const {
  if (n < 3) throw SpecError("N must be at least 3");
  if (r.size() != static_cast<std::size_t>(n - 1) || s.size() != static_cast<std::size_t>(n - 1)) {
    throw SpecError("r and s need N - 1 entries each");
  }
  const bool plus = sign == ScreeningSign::plus;
  for (std::size_t k = 0; k < r.size(); ++k) {
    const int charge = plus ? r[k] : s[k];
    const int rect = plus ? s[k] : r[k];
    if (charge < 0 || rect > 0) throw SpecError("spec out of validated range");
  }
  if (t) require_admissible_parameter(*t);
}

Weight ScreeningSpec::source() const {
  validate();
  if (sign == ScreeningSign::plus) return maybe_pinned(svweight(plus_source_u(r), s), t);
  return maybe_pinned(svweight(r, plus_source_u(s)), t);
}

Weight ScreeningSpec::target() const {
  validate();
  if (sign == ScreeningSign::plus) return maybe_pinned(svweight(plus_target_u(r), s), t);
  return maybe_pinned(svweight(r, plus_target_u(s)), t);
}

std::string ScreeningSpec::to_string() const {
  return "N=" + std::to_string(n) + " r=" + join(r) + " s=" + join(s) + " t=" + (t ? t->get_str() : "symbolic") +
         " sign=" + (sign == ScreeningSign::plus ? "+" : "-");
}

ScreeningSpec ScreeningSpec::parse(const std::string& text) {
  ScreeningSpec spec;
  spec.r.clear();
  spec.s.clear();
  bool seen_n = false;
  std::istringstream in(text);
  std::string token;
  while (in >> token) {
    const auto eq = token.find('=');
    if (eq == std::string::npos) throw SpecError("expected key=value, got '" + token + "'");
    const std::string key = token.substr(0, eq);
    const std::string value = token.substr(eq + 1);
    if (key == "N") {
      spec.n = parse_ints(value).at(0);
      seen_n = true;
    } else if (key == "r") {
      spec.r = parse_ints(value);
    } else if (key == "s") {
      spec.s = parse_ints(value);
    } else if (key == "t") {
      if (value == "symbolic") {
        spec.t.reset();
      } else {
        mpq_class q;
        if (q.set_str(value, 10) != 0 || sgn(q.get_den()) == 0) throw SpecError("malformed parameter t = '" + value + "'");
        q.canonicalize();
        spec.t = q;
      }
    } else if (key == "sign") {
      if (value == "+") {
        spec.sign = ScreeningSign::plus;
      } else if (value == "-") {
        spec.sign = ScreeningSign::minus;
      } else {
        throw SpecError("sign must be + or -");
      }
    } else {
      throw SpecError("unknown key '" + key + "'");
    }
  }
  if (!seen_n) throw SpecError("missing N");
  spec.validate();
  return spec;
}

FockVector rho_plus(const std::vector<SymFunc>& fs, const Weight& target) {
  if (static_cast<int>(fs.size()) != target.rank()) throw RankError("one symmetric function per colour required");
  Scalar inv = Scalar(1) / Scalar::alpha_plus();
  for (const Scalar& label : target.labels()) {
    if (label.point()) {
      inv = inv.pinned(*label.point());
      break;
    }
  }
  std::vector<Scalar> inv_powers{Scalar(1)};
  FockVector out = FockVector::vacuum(target);
  for (std::size_t k = 0; k < fs.size(); ++k) {
    FockVector next(target);
    for (const auto& [mono, c] : out.terms()) {
      for (const auto& [lambda, x] : fs[k].terms()) {
        while (inv_powers.size() <= lambda.length()) inv_powers.push_back(inv_powers.back() * inv);
        Monomial m = mono;
        m[k] = lambda;
        next.add_term(m, c * x * inv_powers[lambda.length()]);
      }
    }
    out = std::move(next);
  }
  return out;
}

std::vector<NuSequence> summation_range(const ScreeningSpec& spec) {
  spec.validate();
  const int n = spec.n;
  std::vector<NuSequence> out;
  NuSequence cur(static_cast<std::size_t>(n - 2));
  // depth first from nu_{N-1} down to nu_2
  std::function<void(int, const Partition&)> rec = [&](int k, const Partition& outer) {
    for (const auto& nu : bounded_subpartitions(outer, spec.r[static_cast<std::size_t>(k - 2)])) {
      cur[static_cast<std::size_t>(k - 2)] = nu;
      if (k == 2) {
        out.push_back(cur);
      } else {
        rec(k - 1, shifted(spec, nu, k - 1));
      }
    }
  };
  rec(n - 1, rectangle_of(spec, n - 1));
  return out;
}

FockVector singular_vector(const ScreeningSpec& spec, const ScreeningOptions& options) {
  if (spec.sign == ScreeningSign::minus) return singular_vector_minus(spec, options);
  spec.validate();
  const Weight target = spec.target();
  const auto range = summation_range(spec);
  std::vector<FockVector> parts(range.size());
  const unsigned workers = std::min<unsigned>(std::max(options.threads, 1U), static_cast<unsigned>(range.size()));
  if (workers <= 1) {
    for (std::size_t i = 0; i < range.size(); ++i) parts[i] = summand(spec, range[i], target);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < range.size(); i += workers) parts[i] = summand(spec, range[i], target);
      });
    }
  }
  FockVector out(target);
  for (const auto& p : parts) out += p;
  return out;
}

FockVector singular_vector_minus(const ScreeningSpec& spec, const ScreeningOptions& options) {
  if (spec.sign != ScreeningSign::minus) throw SpecError("expected a minus-family spec");
  spec.validate();
  ScreeningSpec swapped{spec.n, spec.s, spec.r, ScreeningSign::plus, std::nullopt};
  FockVector v = singular_vector(swapped, options).swap_alphas();
  return spec.t ? v.pinned(*spec.t) : v;
}

std::vector<Example3Spec> example3_enumerate(int u, int v, int count) {
  if (u <= 0 || v <= 0 || std::gcd(u, v) != 1) throw SpecError("t = u/v needs coprime positive integers u, v");
  if (count <= 0) return {};
  const mpq_class t(u, v);
  auto make = [&](int m, int n) {
    ScreeningSpec spec{3, {m * u - 1, n * u - 2}, {1 - m * v, 1 - (n - m) * v}, ScreeningSign::plus, t};
    return Example3Spec{m, n, spec};
  };
  // every spec of grade <= bound has (m - 1)^2 <= bound and n <= bound + m + 2
  for (int bound = 8;; bound *= 2) {
    std::vector<Example3Spec> found;
    for (int m = 1; (m - 1) * (m - 1) <= bound; ++m) {
      for (int n = m + 1; n <= bound + m + 2; ++n) {
        Example3Spec e = make(m, n);
        if (e.spec.grade() <= bound) found.push_back(std::move(e));
      }
    }
    if (static_cast<int>(found.size()) < count) continue;
    std::stable_sort(found.begin(), found.end(), [](const Example3Spec& a, const Example3Spec& b) {
      return std::tuple(a.spec.grade(), a.m, a.n) < std::tuple(b.spec.grade(), b.m, b.n);
    });
    found.resize(static_cast<std::size_t>(count));
    return found;
  }
}

}  // namespace wsv

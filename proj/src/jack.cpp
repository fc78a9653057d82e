#include "wsv/jack.hpp"

#include <fstream>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <unordered_map>

namespace wsv {

namespace {

constexpr const char* kCacheHeader = "# wsv-jack-cache v1";

struct JackStore {
  std::mutex mutex;
  std::unordered_map<Partition, SymFunc> memo;
  std::map<int, bool> degrees_done;
  std::optional<std::filesystem::path> file;
  bool file_read = false;
  std::map<Partition, std::string> raw_records;
  JackCacheStats stats;
};

JackStore& store() {
  static JackStore s;
  return s;
}

// Coefficient c_nu of m_nu in J_lambda, from the eigen-equation of the
// Laplace-Beltrami operator
//   D = (t/2) sum_i x_i^2 d_i^2 + sum_{i != j} x_i^2 / (x_i - x_j) d_i.
// D is triangular on monomials: the off-diagonal part moves a pair of parts
// (A, B) of mu, A > B, to (A - r, B + r) with weight A - B.
Scalar eigenvalue(const Partition& mu, int n) {
  mpq_class quad = 0;
  mpq_class lin = 0;
  for (std::size_t i = 0; i < mu.length(); ++i) {
    quad += mpq_class(mu[i] * (mu[i] - 1), 2);
    lin += (n - static_cast<int>(i) - 1) * mu[i];
  }
  return Scalar(quad) * Scalar::t() + Scalar(lin);
}

std::vector<SymFunc> jacks_of_degree(int n) {
  const auto& parts = partitions_of(n);
  const std::size_t d = parts.size();
  std::map<Partition, std::size_t> index;
  for (std::size_t i = 0; i < d; ++i) index[parts[i]] = i;
  std::vector<Scalar> diag;
  for (const auto& mu : parts) diag.push_back(eigenvalue(mu, n));
  // raising[nu] lists (mu, weight) with mu > nu
  std::vector<std::map<std::size_t, mpq_class>> raising(d);
  for (std::size_t v = 0; v < d; ++v) {
    const auto& nu = parts[v].parts();
    for (std::size_t p = 0; p < nu.size(); ++p) {
      for (std::size_t q = p + 1; q < nu.size(); ++q) {
        const int sum = nu[p] + nu[q];
        std::vector<int> rest;
        for (std::size_t k = 0; k < nu.size(); ++k) {
          if (k != p && k != q) rest.push_back(nu[k]);
        }
        for (int b = 0; b < nu[q]; ++b) {
          std::vector<int> mu = rest;
          mu.push_back(sum - b);
          mu.push_back(b);
          raising[v][index.at(Partition::from_unsorted(mu))] += sum - 2 * b;
        }
      }
    }
  }
  std::vector<std::vector<std::pair<Partition, mpq_class>>> m_in_p(d);
  for (std::size_t v = 0; v < d; ++v) {
    const SymFunc m = monomial_in_power_sums(parts[v]);
    for (const auto& [mu, x] : m.terms()) {
      m_in_p[v].emplace_back(mu, x.rational_part().constant());
    }
  }
  std::vector<SymFunc> out;
  out.reserve(d);
  for (std::size_t l = 0; l < d; ++l) {
    std::vector<Scalar> c(l + 1);
    c[l] = Scalar(1);
    for (std::size_t v = l; v-- > 0;) {
      Scalar acc;
      for (const auto& [m, w] : raising[v]) {
        if (m <= l && !c[m].is_zero()) acc += Scalar(w) * c[m];
      }
      if (!acc.is_zero()) c[v] = acc / (diag[l] - diag[v]);
    }
    // bring the m-coefficients to a common denominator, convert, then reduce
    Polynomial den(1);
    for (std::size_t v = 0; v <= l; ++v) {
      if (c[v].is_zero()) continue;
      const Polynomial& dv = c[v].rational_part().den();
      den = Polynomial::exact_div(den * dv, Polynomial::gcd(den, dv));
    }
    std::map<Partition, Polynomial> nums;
    for (std::size_t v = 0; v <= l; ++v) {
      if (c[v].is_zero()) continue;
      const RationalFunction& cv = c[v].rational_part();
      const Polynomial scaled = cv.num() * Polynomial::exact_div(den, cv.den());
      for (const auto& [mu, x] : m_in_p[v]) nums[mu] += scaled * x;
    }
    SymFunc j;
    for (auto& [mu, num] : nums) {
      if (!num.is_zero()) j.add_term(mu, Scalar(RationalFunction(std::move(num), den)));
    }
    out.push_back(std::move(j));
  }
  return out;
}

bool is_triangular(const Partition& lambda, const SymFunc& j) {
  const PartitionMap m = p_to_m(j, lambda.size());
  auto lead = m.find(lambda);
  if (lead == m.end() || !lead->second.is_one()) return false;
  for (const auto& [mu, c] : m) {
    if (mu.size() != lambda.size() || !dominates(lambda, mu)) return false;
  }
  return true;
}

std::optional<std::vector<SymFunc>> degree_from_records(const JackStore& s, int n) {
  const auto& parts = partitions_of(n);
  std::vector<SymFunc> js;
  for (const auto& lambda : parts) {
    auto it = s.raw_records.find(lambda);
    if (it == s.raw_records.end()) return std::nullopt;
    try {
      js.push_back(SymFunc::parse(it->second));
    } catch (const std::exception&) {
      return std::nullopt;
    }
    if (!js.back().is_homogeneous() || !is_triangular(lambda, js.back())) return std::nullopt;
  }
  for (std::size_t i = 0; i < js.size(); ++i) {
    for (std::size_t k = 0; k < i; ++k) {
      if (!inner_product(js[i], js[k]).is_zero()) return std::nullopt;
    }
  }
  return js;
}

void read_cache_file(JackStore& s) {
  s.file_read = true;
  std::ifstream in(*s.file);
  if (!in) return;
  std::string line;
  if (!std::getline(in, line) || line != kCacheHeader) return;
  while (std::getline(in, line)) {
    if (line.rfind("JACK ", 0) != 0) continue;
    const auto sep = line.find(" := ");
    if (sep == std::string::npos) continue;
    try {
      s.raw_records[Partition::parse(line.substr(5, sep - 5))] = line.substr(sep + 4);
    } catch (const PartitionError&) {
    }
  }
}

void ensure_degree(JackStore& s, int n) {
  if (s.degrees_done.count(n)) return;
  std::optional<std::vector<SymFunc>> js;
  if (s.file) {
    if (!s.file_read) read_cache_file(s);
    js = degree_from_records(s, n);
    if (js) {
      ++s.stats.degrees_loaded;
    } else if (n > 0) {
      ++s.stats.degrees_rejected;
    }
  }
  if (!js) js = jacks_of_degree(n);
  const auto& parts = partitions_of(n);
  for (std::size_t i = 0; i < parts.size(); ++i) s.memo[parts[i]] = std::move((*js)[i]);
  s.degrees_done[n] = true;
}

}  // namespace

const SymFunc& jack(const Partition& lambda) {
  JackStore& s = store();
  std::lock_guard lock(s.mutex);
  auto it = s.memo.find(lambda);
  if (it != s.memo.end()) return it->second;
  ensure_degree(s, lambda.size());
  return s.memo.at(lambda);
}

Scalar dual_norm_b(const Partition& lambda) {
  const Scalar t = Scalar::t();
  Scalar b(1);
  for_each_cell(lambda, [&](Cell c) {
    const long a = arm(lambda, c);
    const long l = leg(lambda, c);
    b *= (Scalar(a) * t + Scalar(l + 1)) / (Scalar(a + 1) * t + Scalar(l));
  });
  return b;
}

Scalar integral_norm_c(const Partition& lambda, int n) {
  const Scalar t = Scalar::t();
  Scalar c(1);
  for_each_cell(lambda, [&](Cell s) {
    const long a = coarm(lambda, s);
    const long l = coleg(lambda, s);
    c *= (Scalar(n - l) + Scalar(a) * t) / (Scalar(n - l - 1) + Scalar(a + 1) * t);
  });
  return c;
}

SymFunc skew_jack(const Partition& lambda, const Partition& mu) {
  if (!contains(lambda, mu)) return {};
  if (mu.empty()) return jack(lambda);
  const SymFunc& jl = jack(lambda);
  const SymFunc& jm = jack(mu);
  const Scalar bm = dual_norm_b(mu);
  SymFunc out;
  for (const auto& nu : partitions_of(lambda.size() - mu.size())) {
    const SymFunc& jn = jack(nu);
    const Scalar coeff = inner_product(jl, jm * jn) * bm * dual_norm_b(nu);
    if (!coeff.is_zero()) out += jn * coeff;
  }
  return out;
}

namespace {

using BiPowerSum = std::map<std::pair<Partition, Partition>, Scalar>;

void accumulate(BiMonomialTable& table, const PartitionMap& y, const PartitionMap& z, const Scalar& c) {
  for (const auto& [my, cy] : y) {
    for (const auto& [mz, cz] : z) {
      Scalar v = c * cy * cz;
      auto [it, inserted] = table.try_emplace({my, mz}, v);
      if (!inserted) it->second += v;
    }
  }
}

void drop_zeros(BiMonomialTable& table) {
  std::erase_if(table, [](const auto& kv) { return kv.second.is_zero(); });
}

}  // namespace

CauchyTables cauchy_truncated(int degree, int n1, int n2) {
  if (degree < 0) throw std::invalid_argument("degree must be non-negative");
  const Scalar t = Scalar::t();
  // exponential series, one factor per m, truncated at the degree
  BiPowerSum series{{{Partition{}, Partition{}}, Scalar(1)}};
  for (int m = 1; m <= degree; ++m) {
    BiPowerSum next;
    for (const auto& [key, c] : series) {
      const int used = key.first.size();
      Scalar term = c;
      Partition py = key.first;
      Partition pz = key.second;
      for (int k = 0; used + k * m <= degree; ++k) {
        if (k > 0) {
          term *= Scalar(1) / (t * Scalar(m) * Scalar(k));
          py = py.with_part_added(m);
          pz = pz.with_part_added(m);
        }
        auto [it, inserted] = next.try_emplace({py, pz}, term);
        if (!inserted) it->second += term;
      }
    }
    series = std::move(next);
  }
  CauchyTables out;
  for (const auto& [key, c] : series) {
    accumulate(out.kernel, p_to_m(SymFunc::p(key.first), n1), p_to_m(SymFunc::p(key.second), n2), c);
  }
  for (int d = 0; d <= degree; ++d) {
    for (const auto& lambda : partitions_of(d)) {
      const SymFunc& j = jack(lambda);
      accumulate(out.jack_side, p_to_m(j, n1), p_to_m(j, n2), dual_norm_b(lambda));
    }
  }
  drop_zeros(out.kernel);
  drop_zeros(out.jack_side);
  return out;
}

void set_jack_cache_file(const std::filesystem::path& path) {
  JackStore& s = store();
  std::lock_guard lock(s.mutex);
  s.file = path;
  s.file_read = false;
  s.raw_records.clear();
}

void write_jack_cache(const std::filesystem::path& path, int max_degree) {
  std::vector<std::pair<Partition, std::string>> records;
  for (int n = 0; n <= max_degree; ++n) {
    for (const auto& lambda : partitions_of(n)) records.emplace_back(lambda, jack(lambda).to_string());
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write jack cache '" + path.string() + "'");
  out << kCacheHeader << "\n";
  for (const auto& [lambda, text] : records) out << "JACK " << lambda.to_string() << " := " << text << "\n";
}

JackCacheStats jack_cache_stats() {
  JackStore& s = store();
  std::lock_guard lock(s.mutex);
  return s.stats;
}

void clear_jack_memo() {
  JackStore& s = store();
  std::lock_guard lock(s.mutex);
  s.memo.clear();
  s.degrees_done.clear();
  s.file_read = false;
  s.raw_records.clear();
  s.stats = {};
}

}  // namespace wsv

#include "wsv/partition.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace wsv {

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw PartitionError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw PartitionError("partition parts must be weakly decreasing");
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::from_unsorted(std::vector<int> parts) {
  std::erase(parts, 0);
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

Partition Partition::rectangle(int m, int n) {
  if (m < 0 || n < 0) throw PartitionError("rectangle sides must be non-negative");
  if (m == 0 || n == 0) return {};
  return Partition(std::vector<int>(static_cast<std::size_t>(n), m));
}

int Partition::multiplicity(int k) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), k));
}

Partition Partition::conjugate() const {
  if (parts_.empty()) return {};
  std::vector<int> c(static_cast<std::size_t>(parts_.front()), 0);
  for (int p : parts_) {
    for (int j = 0; j < p; ++j) ++c[static_cast<std::size_t>(j)];
  }
  return Partition(std::move(c));
}

Partition Partition::merged(const Partition& other) const {
  std::vector<int> out;
  out.reserve(parts_.size() + other.parts_.size());
  std::merge(parts_.begin(), parts_.end(), other.parts_.begin(), other.parts_.end(), std::back_inserter(out),
             std::greater<>());
  Partition p;
  p.parts_ = std::move(out);
  p.size_ = size_ + other.size_;
  return p;
}

Partition Partition::with_part_added(int part) const {
  if (part <= 0) throw PartitionError("partition parts must be positive");
  Partition p = *this;
  auto it = std::upper_bound(p.parts_.begin(), p.parts_.end(), part, std::greater<>());
  p.parts_.insert(it, part);
  p.size_ += part;
  return p;
}

Partition Partition::with_part_removed(int part) const {
  Partition p = *this;
  auto it = std::find(p.parts_.begin(), p.parts_.end(), part);
  if (it == p.parts_.end()) throw PartitionError("part not present");
  p.parts_.erase(it);
  p.size_ -= part;
  return p;
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  os << "]";
  return os.str();
}

Partition Partition::parse(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c)) == 0) s.push_back(c);
  }
  if (!s.empty() && s.front() == '[') {
    if (s.back() != ']') throw PartitionError("malformed partition '" + std::string(text) + "'");
    s = s.substr(1, s.size() - 2);
  }
  std::vector<int> parts;
  if (s.empty()) return {};
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t comma = s.find(',', pos);
    std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; })) {
      throw PartitionError("malformed partition '" + std::string(text) + "'");
    }
    parts.push_back(std::stoi(tok));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  try {
    return Partition(std::move(parts));
  } catch (const PartitionError& e) {
    throw PartitionError("malformed partition '" + std::string(text) + "': " + e.what());
  }
}

bool dominates(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) throw PartitionError("dominance undefined across weights");
  int sl = 0;
  int sm = 0;
  const std::size_t n = std::max(lambda.length(), mu.length());
  for (std::size_t i = 0; i < n; ++i) {
    sl += lambda[i];
    sm += mu[i];
    if (sl < sm) return false;
  }
  return true;
}

namespace {
void require_cell(const Partition& lambda, Cell s) {
  if (s.row < 1 || s.col < 1 || static_cast<std::size_t>(s.row) > lambda.length() ||
      s.col > lambda[static_cast<std::size_t>(s.row - 1)]) {
    throw PartitionError("cell not in diagram");
  }
}
}  // namespace

int arm(const Partition& lambda, Cell s) {
  require_cell(lambda, s);
  return lambda[static_cast<std::size_t>(s.row - 1)] - s.col;
}

int leg(const Partition& lambda, Cell s) {
  require_cell(lambda, s);
  int below = 0;
  for (std::size_t i = static_cast<std::size_t>(s.row); i < lambda.length() && lambda[i] >= s.col; ++i) ++below;
  return below;
}

int coarm(const Partition& lambda, Cell s) {
  require_cell(lambda, s);
  return s.col - 1;
}

int coleg(const Partition& lambda, Cell s) {
  require_cell(lambda, s);
  return s.row - 1;
}

void for_each_cell(const Partition& lambda, const std::function<void(Cell)>& f) {
  for (std::size_t i = 0; i < lambda.length(); ++i) {
    for (int j = 1; j <= lambda[i]; ++j) f(Cell{static_cast<int>(i) + 1, j});
  }
}

bool contains(const Partition& lambda, const Partition& mu) {
  if (mu.length() > lambda.length()) return false;
  for (std::size_t i = 0; i < mu.length(); ++i) {
    if (mu[i] > lambda[i]) return false;
  }
  return true;
}

Partition add_rectangle(const Partition& lambda, int m, int n) {
  if (m < 0 || n < 0) throw PartitionError("rectangle sides must be non-negative");
  if (lambda.length() > static_cast<std::size_t>(n)) throw PartitionError("length exceeds rectangle height");
  if (m == 0) return lambda;
  std::vector<int> parts(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < parts.size(); ++i) parts[i] = lambda[i] + m;
  return Partition(std::move(parts));
}

namespace {
void bounded_partitions(int max_part, int max_len, std::vector<int>& prefix, std::vector<Partition>& out) {
  out.emplace_back(prefix);
  if (static_cast<int>(prefix.size()) == max_len) return;
  const int cap = prefix.empty() ? max_part : std::min(max_part, prefix.back());
  for (int p = 1; p <= cap; ++p) {
    prefix.push_back(p);
    bounded_partitions(max_part, max_len, prefix, out);
    prefix.pop_back();
  }
}
}  // namespace

std::vector<Partition> subpartitions_of_rectangle(int m, int n, int max_len) {
  if (m < 0 || n < 0 || max_len < 0) throw PartitionError("rectangle sides must be non-negative");
  std::vector<Partition> out;
  std::vector<int> prefix;
  bounded_partitions(m, std::min(n, max_len), prefix, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Partition> subpartitions_of(const Partition& lambda) {
  std::vector<Partition> out;
  std::vector<int> prefix;
  std::function<void()> rec = [&]() {
    out.emplace_back(prefix);
    const std::size_t i = prefix.size();
    if (i >= lambda.length()) return;
    const int cap = i == 0 ? lambda[0] : std::min(lambda[i], prefix.back());
    for (int p = 1; p <= cap; ++p) {
      prefix.push_back(p);
      rec();
      prefix.pop_back();
    }
  };
  rec();
  std::sort(out.begin(), out.end());
  return out;
}

const std::vector<Partition>& partitions_of(int n) {
  static std::mutex mutex;
  static std::map<int, std::vector<Partition>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<Partition> out;
  std::vector<int> prefix;
  std::function<void(int, int)> rec = [&](int remaining, int cap) {
    if (remaining == 0) {
      out.emplace_back(prefix);
      return;
    }
    for (int p = std::min(cap, remaining); p >= 1; --p) {
      prefix.push_back(p);
      rec(remaining - p, p);
      prefix.pop_back();
    }
  };
  if (n >= 0) rec(n, n);
  std::sort(out.begin(), out.end());
  return cache.emplace(n, std::move(out)).first->second;
}

long long z_factor(const Partition& lambda) {
  long long z = 1;
  std::size_t i = 0;
  const auto& p = lambda.parts();
  while (i < p.size()) {
    std::size_t j = i;
    while (j < p.size() && p[j] == p[i]) ++j;
    const long long m = static_cast<long long>(j - i);
    for (long long k = 1; k <= m; ++k) z *= static_cast<long long>(p[i]) * k;
    i = j;
  }
  return z;
}

}  // namespace wsv

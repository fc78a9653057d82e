#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace wsv {

class PartitionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Integer partition: weakly decreasing positive parts.  The empty partition
/// is a regular value.
///
/// The built-in ordering is lexicographic on the part sequence.  Restricted to
/// partitions of one integer it is the reverse-lexicographic total order of
/// Macdonald, which refines dominance.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  /// Throws PartitionError unless `parts` is weakly decreasing and positive.
  explicit Partition(std::vector<int> parts);
  /// Sorts and drops zeros; never throws for non-negative input.
  static Partition from_unsorted(std::vector<int> parts);
  /// The rectangle [m^n]; empty when m or n is zero.
  static Partition rectangle(int m, int n);

  const std::vector<int>& parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  int size() const { return size_; }
  /// Part i (0-based), zero past the end.
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
  /// Number of parts equal to k.
  int multiplicity(int k) const;

  Partition conjugate() const;
  /// Multiset union of parts, i.e. the index of p_lambda * p_mu.
  Partition merged(const Partition& other) const;
  Partition with_part_added(int part) const;
  /// Removes one copy of `part`; the part must be present.
  Partition with_part_removed(int part) const;

  std::string to_string() const;
  /// Accepts "[3,2,1]", "3,2,1", "[]" and "" (empty).
  static Partition parse(std::string_view text);

  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }
  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// Cell of a Young diagram, 1-based (row, column).
struct Cell {
  int row;
  int col;
};

/// True iff every partial sum of lambda is at least that of mu.  Throws for
/// partitions of different integers.
bool dominates(const Partition& lambda, const Partition& mu);

int arm(const Partition& lambda, Cell s);
int leg(const Partition& lambda, Cell s);
int coarm(const Partition& lambda, Cell s);
int coleg(const Partition& lambda, Cell s);

/// Calls f on every cell of the diagram, row by row.
void for_each_cell(const Partition& lambda, const std::function<void(Cell)>& f);

/// True iff mu_i <= lambda_i for all i.
bool contains(const Partition& lambda, const Partition& mu);

/// lambda + [m^n]: parts lambda_i + m for i = 1..n.  Requires length <= n.
Partition add_rectangle(const Partition& lambda, int m, int n);

/// All nu with nu_1 <= m and length <= min(n, max_len), in lexicographic order.
std::vector<Partition> subpartitions_of_rectangle(int m, int n, int max_len);

/// All partitions of n in lexicographic order (so [1^n] first, [n] last).
const std::vector<Partition>& partitions_of(int n);

/// All partitions nu with nu contained in lambda.
std::vector<Partition> subpartitions_of(const Partition& lambda);

/// z_lambda = prod_i i^{m_i} m_i!.
long long z_factor(const Partition& lambda);

}  // namespace wsv

template <>
struct std::hash<wsv::Partition> {
  std::size_t operator()(const wsv::Partition& p) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (int x : p.parts()) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ULL;
    return h;
  }
};

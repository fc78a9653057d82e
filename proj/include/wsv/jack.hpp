#pragma once

#include "wsv/symfunc.hpp"

#include <filesystem>
#include <map>
#include <utility>

namespace wsv {

/// Jack function J_lambda at symbolic t in the power-sum basis, normalised to
/// coefficient 1 on m_lambda.  Memoised per degree; thread-safe.
const SymFunc& jack(const Partition& lambda);

/// b_lambda(t), so that Q_lambda = b_lambda J_lambda is the dual basis.
Scalar dual_norm_b(const Partition& lambda);

/// The integral norm constant c_lambda(n).
Scalar integral_norm_c(const Partition& lambda, int n);

/// J_{lambda/mu} = sum_nu <J_lambda, Q_mu Q_nu> J_nu; zero unless mu is
/// contained in lambda.
SymFunc skew_jack(const Partition& lambda, const Partition& mu);

/// Monomial-coefficient tables of a function of two alphabets y, z, keyed by
/// (m-index in y, m-index in z).
using BiMonomialTable = std::map<std::pair<Partition, Partition>, Scalar>;

struct CauchyTables {
  BiMonomialTable kernel;     ///< prod_m exp(p_m(y) p_m(z) / (t m))
  BiMonomialTable jack_side;  ///< sum_lambda J_lambda(y) Q_lambda(z)
};

/// Both sides of the Cauchy identity through degree D in each alphabet,
/// restricted to n1 variables y and n2 variables z.
CauchyTables cauchy_truncated(int degree, int n1, int n2);

/// Points jack() at an on-disk cache.  The file is read on the first miss;
/// a degree is taken from it only when every partition of that degree is
/// present and the records pass the triangularity and orthogonality checks.
void set_jack_cache_file(const std::filesystem::path& path);

/// Writes J_lambda for every |lambda| <= max_degree.
void write_jack_cache(const std::filesystem::path& path, int max_degree);

/// Degrees that were accepted from / rejected by the cache file so far.
struct JackCacheStats {
  int degrees_loaded = 0;
  int degrees_rejected = 0;
};
JackCacheStats jack_cache_stats();

/// Drops all memoised Jack functions (the cache file setting is kept).
void clear_jack_memo();

}  // namespace wsv

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "schurlc/integer.hpp"
#include "schurlc/partition.hpp"
#include "schurlc/product_cache.hpp"
#include "schurlc/schur_expansion.hpp"

namespace schurlc {

// Bilinear extension of the LR product. Term pairs go through `cache`; a null
// cache computes every pair afresh.
SchurExpansion multiply(const SchurExpansion& f, const SchurExpansion& g,
                        ProductCache* cache);

inline SchurExpansion operator*(const SchurExpansion& f,
                                const SchurExpansion& g) {
  return multiply(f, g, &default_product_cache());
}

// s_lambda -> s_lambda'.
SchurExpansion omega(const SchurExpansion& f);

// Image in the symmetric polynomials in n variables: drops every term of
// length greater than n.
SchurExpansion restrict_vars(const SchurExpansion& f, int n);

// e_k = s_(1^k) and h_k = s_(k); zero for negative k.
SchurExpansion e(int k);
SchurExpansion h(int k);

using ExpansionMatrix = std::vector<std::vector<SchurExpansion>>;

// Leibniz expansion of a square determinant; zero entries prune the
// permutation search.
SchurExpansion det_expansion(const ExpansionMatrix& m,
                             ProductCache* cache = &default_product_cache());

// (h_{lambda_i - i + j}) and (e_{lambda_i - i + j}).
ExpansionMatrix jacobi_trudi_matrix(const Partition& lambda);
ExpansionMatrix dual_jacobi_trudi_matrix(const Partition& lambda);

struct PositivityResult {
  bool positive = true;
  // First negative term in serialization order.
  std::optional<std::pair<Partition, Integer>> witness;

  explicit operator bool() const { return positive; }
};

PositivityResult is_schur_positive(const SchurExpansion& f);

enum class Comparison { less_or_equal, greater_or_equal, equal, incomparable };

// Sign pattern of f - g.
Comparison compare(const SchurExpansion& f, const SchurExpansion& g);

const char* to_string(Comparison c);

}  // namespace schurlc

#pragma once

#include <optional>
#include <span>

#include "schurlc/logconcavity.hpp"
#include "schurlc/partition.hpp"
#include "schurlc/product_cache.hpp"

namespace schurlc {

// mu u nu is dominated by rho u delta. Throws SizeMismatch unless
// |mu|+|nu| = |rho|+|delta|.
bool mcnamara_necessary(const Partition& mu, const Partition& nu,
                        const Partition& rho, const Partition& delta);

// (i,j) + (l,k) = (i+l-1, j+k-1).
Cell shifted_sum(Cell a, Cell b);

// Out(mu) + Out(nu) + N^2 misses Y(theta).
bool gr_containment(const Partition& theta, const Partition& mu,
                    const Partition& nu);

struct GrResult {
  bool holds = true;
  std::optional<Partition> witness;

  explicit operator bool() const { return holds; }
};

// gr_containment(theta, mu, nu) for every theta in the support of
// s_rho s_delta; the witness is the first failing theta in Schur order.
GrResult gr_necessary(const Partition& mu, const Partition& nu,
                      const Partition& rho, const Partition& delta,
                      ProductCache* cache = nullptr);

// lambda^(n) u lambda^(n+i) is dominated by lambda^(n-1) u lambda^(n+i+1).
// Throws InvalidFamilyPoint when n < 1 or a term is not a partition.
bool prop_mcnamara_family(const FamilySpec& spec, int n, int i);

// gr_necessary on (lambda^(n), lambda^(n+i), lambda^(n-1), lambda^(n+i+1)).
// When beta is empty the corner inequalities behind the containment are
// asserted as well (std::logic_error on failure).
GrResult prop_gr_family(const FamilySpec& spec, int n, int i,
                        ProductCache* cache = nullptr);

// Sort(mu, nu) is dominated by Sort(rho, delta). Requires equal lengths,
// mu_i + nu_i = rho_i + delta_i and rho_i <= mu_i <= nu_i <= delta_i;
// otherwise throws HypothesisViolated.
bool sort_lemma_check(std::span<const int> mu, std::span<const int> nu,
                      std::span<const int> rho, std::span<const int> delta);

}  // namespace schurlc

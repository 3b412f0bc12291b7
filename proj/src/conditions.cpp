#include "schurlc/conditions.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>

#include "schurlc/errors.hpp"
#include "schurlc/lr.hpp"
#include "schurlc/schur_ring.hpp"

namespace schurlc {

namespace {

void require_same_size(const Partition& mu, const Partition& nu,
                       const Partition& rho, const Partition& delta) {
  if (mu.size() + nu.size() != rho.size() + delta.size())
    throw SizeMismatch("|mu|+|nu| = " + std::to_string(mu.size() + nu.size()) +
                       " but |rho|+|delta| = " +
                       std::to_string(rho.size() + delta.size()));
}

std::array<Partition, 4> family_quadruple(const FamilySpec& spec, int n,
                                          int i) {
  if (n < 1 || i < 0)
    throw InvalidFamilyPoint("family point needs n >= 1 and i >= 0");
  std::array<Partition, 4> out;
  const std::array<int, 4> idx{n, n + i, n - 1, n + i + 1};
  for (std::size_t t = 0; t < 4; ++t) {
    auto p = family_term(spec, idx[t]);
    if (!p)
      throw InvalidFamilyPoint("term " + std::to_string(idx[t]) +
                               " is not a partition");
    out[t] = std::move(*p);
  }
  return out;
}

int entry(std::span<const int> v, int j) {
  return j <= static_cast<int>(v.size()) ? v[static_cast<std::size_t>(j - 1)]
                                         : 0;
}

// With rho = lambda + (n-1)alpha, mu = lambda + n alpha,
// nu = lambda + (n+i)alpha, delta = lambda + (n+i+1)alpha:
// alpha_j >= alpha_l gives mu_j + nu_l >= rho_j + delta_l, otherwise
// mu_j + nu_l >= rho_l + delta_j.
void check_corner_inequalities(const FamilySpec& spec, const Partition& mu,
                               const Partition& nu, const Partition& rho,
                               const Partition& delta) {
  const int len = std::max({mu.length(), nu.length(), rho.length(),
                            delta.length(),
                            static_cast<int>(spec.alpha.size())});
  for (int j = 1; j <= len; ++j)
    for (int l = 1; l <= len; ++l) {
      const int lhs = mu.part(j) + nu.part(l);
      const int rhs = entry(spec.alpha, j) >= entry(spec.alpha, l)
                          ? rho.part(j) + delta.part(l)
                          : rho.part(l) + delta.part(j);
      if (lhs < rhs)
        throw std::logic_error("corner inequality fails at (" +
                               std::to_string(j) + "," + std::to_string(l) +
                               ")");
    }
}

}  // namespace

bool mcnamara_necessary(const Partition& mu, const Partition& nu,
                        const Partition& rho, const Partition& delta) {
  require_same_size(mu, nu, rho, delta);
  return dominance_leq(partition_union(mu, nu), partition_union(rho, delta));
}

Cell shifted_sum(Cell a, Cell b) {
  return Cell{a.row + b.row - 1, a.col + b.col - 1};
}

bool gr_containment(const Partition& theta, const Partition& mu,
                    const Partition& nu) {
  const auto out_mu = outer_corners(mu);
  const auto out_nu = outer_corners(nu);
  for (const Cell& a : out_mu)
    for (const Cell& b : out_nu)
      if (theta.contains(shifted_sum(a, b))) return false;
  return true;
}

GrResult gr_necessary(const Partition& mu, const Partition& nu,
                      const Partition& rho, const Partition& delta,
                      ProductCache* cache) {
  require_same_size(mu, nu, rho, delta);
  const SchurExpansion support =
      cache ? *cache->product(rho, delta) : schur_product_expand(rho, delta);
  for (const auto& [theta, c] : support.terms())
    if (!gr_containment(theta, mu, nu)) return GrResult{false, theta};
  return GrResult{};
}

bool prop_mcnamara_family(const FamilySpec& spec, int n, int i) {
  const auto [mu, nu, rho, delta] = family_quadruple(spec, n, i);
  return mcnamara_necessary(mu, nu, rho, delta);
}

GrResult prop_gr_family(const FamilySpec& spec, int n, int i,
                        ProductCache* cache) {
  const auto [mu, nu, rho, delta] = family_quadruple(spec, n, i);
  if (spec.beta.empty()) check_corner_inequalities(spec, mu, nu, rho, delta);
  return gr_necessary(mu, nu, rho, delta, cache);
}

bool sort_lemma_check(std::span<const int> mu, std::span<const int> nu,
                      std::span<const int> rho, std::span<const int> delta) {
  const std::size_t n = mu.size();
  if (nu.size() != n || rho.size() != n || delta.size() != n)
    throw HypothesisViolated("vectors have different lengths",
                             static_cast<int>(std::min(
                                 {mu.size(), nu.size(), rho.size(),
                                  delta.size()})) + 1);
  for (std::size_t t = 0; t < n; ++t) {
    const int pos = static_cast<int>(t) + 1;
    if (mu[t] + nu[t] != rho[t] + delta[t])
      throw HypothesisViolated(
          "mu_i + nu_i != rho_i + delta_i at i = " + std::to_string(pos), pos);
    if (!(rho[t] <= mu[t] && mu[t] <= nu[t] && nu[t] <= delta[t]))
      throw HypothesisViolated(
          "rho_i <= mu_i <= nu_i <= delta_i fails at i = " +
              std::to_string(pos),
          pos);
  }
  return dominance_leq(sort_concat(mu, nu), sort_concat(rho, delta));
}

}  // namespace schurlc

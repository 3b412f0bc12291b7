#include "schurlc/schur_ring.hpp"

#include <stdexcept>

#include "schurlc/lr.hpp"

namespace schurlc {

SchurExpansion multiply(const SchurExpansion& f, const SchurExpansion& g,
                        ProductCache* cache) {
  SchurExpansion out;
  for (const auto& [mu, a] : f.terms()) {
    for (const auto& [nu, b] : g.terms()) {
      const Integer ab = a * b;
      if (mu.empty() || nu.empty()) {
        out.add_term(mu.empty() ? nu : mu, ab);
        continue;
      }
      if (cache) {
        auto product = cache->product(mu, nu);
        for (const auto& [theta, c] : product->terms())
          out.add_term(theta, ab * c);
      } else {
        const SchurExpansion product = schur_product_expand(mu, nu);
        for (const auto& [theta, c] : product.terms())
          out.add_term(theta, ab * c);
      }
    }
  }
  return out;
}

SchurExpansion omega(const SchurExpansion& f) {
  SchurExpansion out;
  for (const auto& [lambda, c] : f.terms()) out.add_term(transpose(lambda), c);
  return out;
}

SchurExpansion restrict_vars(const SchurExpansion& f, int n) {
  SchurExpansion out;
  for (const auto& [lambda, c] : f.terms())
    if (lambda.length() <= n) out.add_term(lambda, c);
  return out;
}

SchurExpansion e(int k) {
  if (k < 0) return {};
  return s(Partition(std::vector<int>(static_cast<std::size_t>(k), 1)));
}

SchurExpansion h(int k) {
  if (k < 0) return {};
  if (k == 0) return SchurExpansion::one();
  return s(Partition{k});
}

namespace {

void leibniz(const ExpansionMatrix& m, std::size_t row,
             std::vector<bool>& used, int sign, const SchurExpansion& partial,
             ProductCache* cache, SchurExpansion& total) {
  if (row == m.size()) {
    if (sign > 0)
      total += partial;
    else
      total -= partial;
    return;
  }
  // Parity of the permutation is tracked by counting used columns to the
  // right of the chosen one (inversions).
  for (std::size_t col = 0; col < m.size(); ++col) {
    if (used[col] || m[row][col].is_zero()) continue;
    int inversions = 0;
    for (std::size_t k = col + 1; k < m.size(); ++k)
      if (used[k]) ++inversions;
    used[col] = true;
    leibniz(m, row + 1, used, inversions % 2 ? -sign : sign,
            multiply(partial, m[row][col], cache), cache, total);
    used[col] = false;
  }
}

}  // namespace

SchurExpansion det_expansion(const ExpansionMatrix& m, ProductCache* cache) {
  for (const auto& row : m)
    if (row.size() != m.size())
      throw std::invalid_argument("det_expansion needs a square matrix");
  if (m.empty()) return SchurExpansion::one();
  SchurExpansion total;
  std::vector<bool> used(m.size(), false);
  leibniz(m, 0, used, 1, SchurExpansion::one(), cache, total);
  return total;
}

ExpansionMatrix jacobi_trudi_matrix(const Partition& lambda) {
  const auto n = static_cast<std::size_t>(lambda.length());
  ExpansionMatrix m(n, std::vector<SchurExpansion>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m[i][j] = h(lambda.part(static_cast<int>(i) + 1) - static_cast<int>(i) +
                  static_cast<int>(j));
  return m;
}

ExpansionMatrix dual_jacobi_trudi_matrix(const Partition& lambda) {
  const auto n = static_cast<std::size_t>(lambda.length());
  ExpansionMatrix m(n, std::vector<SchurExpansion>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m[i][j] = e(lambda.part(static_cast<int>(i) + 1) - static_cast<int>(i) +
                  static_cast<int>(j));
  return m;
}

PositivityResult is_schur_positive(const SchurExpansion& f) {
  for (const auto& [lambda, c] : f.terms())
    if (c < 0) return {false, std::pair{lambda, c}};
  return {};
}

Comparison compare(const SchurExpansion& f, const SchurExpansion& g) {
  const SchurExpansion d = f - g;
  bool has_positive = false;
  bool has_negative = false;
  for (const auto& [lambda, c] : d.terms()) (c > 0 ? has_positive : has_negative) = true;
  if (!has_positive && !has_negative) return Comparison::equal;
  if (has_positive && has_negative) return Comparison::incomparable;
  return has_positive ? Comparison::greater_or_equal : Comparison::less_or_equal;
}

const char* to_string(Comparison c) {
  switch (c) {
    case Comparison::less_or_equal:
      return "less-or-equal";
    case Comparison::greater_or_equal:
      return "greater-or-equal";
    case Comparison::equal:
      return "equal";
    case Comparison::incomparable:
      return "incomparable";
  }
  return "?";
}

}  // namespace schurlc

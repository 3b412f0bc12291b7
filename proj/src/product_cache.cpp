#include "schurlc/product_cache.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <tuple>

#include "schurlc/lr.hpp"

namespace schurlc {

ProductCache::Key ProductCache::make_key(const Partition& mu,
                                         const Partition& nu) {
  return mu <= nu ? Key{mu, nu} : Key{nu, mu};
}

std::shared_ptr<const SchurExpansion> ProductCache::product(
    const Partition& mu, const Partition& nu) {
  Key key = make_key(mu, nu);
  {
    std::shared_lock lock(mutex_);
    auto it = products_.find(key);
    if (it != products_.end()) {
      ++hits_;
      return it->second;
    }
  }
  ++misses_;
  auto computed =
      std::make_shared<const SchurExpansion>(schur_product_expand(key.a, key.b));
  std::unique_lock lock(mutex_);
  auto [it, inserted] = products_.try_emplace(std::move(key), computed);
  return it->second;
}

Integer ProductCache::coefficient(const Partition& mu, const Partition& nu,
                                  const Partition& theta) {
  Key key = make_key(mu, nu);
  TripleKey triple{key.a, key.b, theta};
  {
    std::shared_lock lock(mutex_);
    auto it = products_.find(key);
    if (it != products_.end()) {
      ++hits_;
      return it->second->coefficient(theta);
    }
    auto loose = loose_.find(triple);
    if (loose != loose_.end()) {
      ++hits_;
      return loose->second;
    }
  }
  ++misses_;
  Integer c = lr_coefficient(key.a, key.b, theta);
  std::unique_lock lock(mutex_);
  loose_.try_emplace(std::move(triple), c);
  return c;
}

std::vector<CoefficientRecord> ProductCache::records() const {
  std::map<std::tuple<Partition, Partition, Partition>, Integer> sorted;
  {
    std::shared_lock lock(mutex_);
    for (const auto& [key, product] : products_)
      for (const auto& [theta, c] : product->terms())
        sorted.emplace(std::tuple{key.a, key.b, theta}, c);
    for (const auto& [key, c] : loose_)
      sorted.emplace(std::tuple{key.a, key.b, key.theta}, c);
  }
  std::vector<CoefficientRecord> out;
  out.reserve(sorted.size());
  for (auto& [key, c] : sorted)
    out.push_back({std::get<0>(key), std::get<1>(key), std::get<2>(key), c});
  return out;
}

void ProductCache::insert_records(std::span<const CoefficientRecord> records) {
  std::map<std::pair<Partition, Partition>, SchurExpansion> grouped;
  for (const auto& rec : records) {
    Key key = make_key(rec.mu, rec.nu);
    grouped[{key.a, key.b}].add_term(rec.theta, rec.coeff);
  }
  std::unique_lock lock(mutex_);
  for (const auto& rec : records) {
    Key key = make_key(rec.mu, rec.nu);
    loose_.insert_or_assign(TripleKey{key.a, key.b, rec.theta}, rec.coeff);
  }
  for (auto& [pair, terms] : grouped) {
    if (!is_complete_product(pair.first, pair.second, terms)) continue;
    for (const auto& [theta, c] : terms.terms())
      loose_.erase(TripleKey{pair.first, pair.second, theta});
    products_.insert_or_assign(
        Key{pair.first, pair.second},
        std::make_shared<const SchurExpansion>(std::move(terms)));
  }
}

std::size_t ProductCache::product_count() const {
  std::shared_lock lock(mutex_);
  return products_.size();
}

void ProductCache::clear() {
  std::unique_lock lock(mutex_);
  products_.clear();
  loose_.clear();
  hits_ = 0;
  misses_ = 0;
}

ProductCache& default_product_cache() {
  static ProductCache cache;
  return cache;
}

bool is_complete_product(const Partition& mu, const Partition& nu,
                         const SchurExpansion& terms) {
  Integer lhs = 0;
  for (const auto& [theta, c] : terms.terms()) {
    if (c < 0 || theta.size() != mu.size() + nu.size()) return false;
    lhs += c * count_standard_tableaux(theta);
  }
  Integer binom = 1;
  const int n = mu.size() + nu.size();
  for (int k = 1; k <= mu.size(); ++k) binom = binom * (n - mu.size() + k) / k;
  return lhs ==
         binom * count_standard_tableaux(mu) * count_standard_tableaux(nu);
}

}  // namespace schurlc

#pragma once

#include <atomic>
#include <cstddef>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "schurlc/integer.hpp"
#include "schurlc/partition.hpp"
#include "schurlc/schur_expansion.hpp"

namespace schurlc {

// One persisted LR coefficient c^theta_{mu,nu}.
struct CoefficientRecord {
  Partition mu;
  Partition nu;
  Partition theta;
  Integer coeff;

  friend bool operator==(const CoefficientRecord&,
                         const CoefficientRecord&) = default;
};

// Memo of s_mu * s_nu keyed on the unordered pair {mu, nu}, plus loose
// coefficients computed one at a time. Safe for concurrent readers and
// writers; a product computed twice concurrently keeps the first insert.
class ProductCache {
 public:
  ProductCache() = default;
  ProductCache(const ProductCache&) = delete;
  ProductCache& operator=(const ProductCache&) = delete;

  std::shared_ptr<const SchurExpansion> product(const Partition& mu,
                                                const Partition& nu);

  Integer coefficient(const Partition& mu, const Partition& nu,
                      const Partition& theta);

  // Every known coefficient, with mu <= nu, sorted by (mu, nu, theta).
  std::vector<CoefficientRecord> records() const;

  // Adds records. A pair {mu, nu} whose nonzero coefficients satisfy
  // sum_theta c * f^theta = binom(|mu|+|nu|, |mu|) f^mu f^nu is complete and
  // is installed as a product; other records stay as loose coefficients.
  void insert_records(std::span<const CoefficientRecord> records);

  std::size_t product_count() const;
  std::size_t hits() const { return hits_.load(); }
  std::size_t misses() const { return misses_.load(); }
  void clear();

 private:
  struct Key {
    Partition a;
    Partition b;
    friend bool operator==(const Key&, const Key&) = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept {
      PartitionHash h;
      return h(k.a) * 31 + h(k.b);
    }
  };
  struct TripleKey {
    Partition a;
    Partition b;
    Partition theta;
    friend bool operator==(const TripleKey&, const TripleKey&) = default;
  };
  struct TripleHash {
    std::size_t operator()(const TripleKey& k) const noexcept {
      PartitionHash h;
      return (h(k.a) * 31 + h(k.b)) * 31 + h(k.theta);
    }
  };

  static Key make_key(const Partition& mu, const Partition& nu);

  mutable std::shared_mutex mutex_;
  std::unordered_map<Key, std::shared_ptr<const SchurExpansion>, KeyHash>
      products_;
  std::unordered_map<TripleKey, Integer, TripleHash> loose_;
  std::atomic<std::size_t> hits_{0};
  std::atomic<std::size_t> misses_{0};
};

// Process-wide cache used by operator* on expansions.
ProductCache& default_product_cache();

// Whether a set of (theta, c) terms accounts for all of s_mu * s_nu, checked
// by counting standard tableaux on both sides.
bool is_complete_product(const Partition& mu, const Partition& nu,
                         const SchurExpansion& terms);

}  // namespace schurlc

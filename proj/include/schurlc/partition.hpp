#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace schurlc {

// Integral vector; entries may be negative and need not be monotone.
using IntVector = std::vector<int>;

// Cell of a Young diagram in matrix coordinates, both 1-based.
struct Cell {
  int row = 1;
  int col = 1;

  friend auto operator<=>(const Cell&, const Cell&) = default;
};

// Weakly decreasing sequence of positive integers. Trailing zeros given on
// construction are stripped, so equality is structural.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  explicit Partition(std::vector<int> parts);

  // Returns nullopt unless `entries` is weakly decreasing and non-negative.
  static std::optional<Partition> from_vector(std::span<const int> entries);

  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }

  // 1-based part lambda_i; zero past the length.
  int part(int i) const {
    return i >= 1 && i <= length() ? parts_[static_cast<std::size_t>(i - 1)]
                                   : 0;
  }
  int first() const { return part(1); }
  int last() const { return empty() ? 0 : parts_.back(); }

  const std::vector<int>& parts() const { return parts_; }
  auto begin() const { return parts_.begin(); }
  auto end() const { return parts_.end(); }

  // Whether the cell (row, col) lies in Y(lambda).
  bool contains(Cell c) const {
    return c.row >= 1 && c.col >= 1 && c.col <= part(c.row);
  }
  // Y(inner) is a subset of Y(*this).
  bool contains(const Partition& inner) const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& a,
                                          const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

struct PartitionHash {
  std::size_t operator()(const Partition& p) const noexcept;
};

// Degree ascending, then reverse lexicographic (larger partitions first).
struct SchurOrder {
  bool operator()(const Partition& a, const Partition& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return b < a;
  }
};

Partition transpose(const Partition& lambda);

// Sorted multiset union of parts.
Partition partition_union(const Partition& a, const Partition& b);
// lambda joined with n copies of mu.
Partition repeated_union(const Partition& lambda, const Partition& mu, int n);

// Entrywise sum; the shorter side is padded with zeros.
IntVector add_vector(const Partition& lambda, std::span<const int> v);
IntVector scale(std::span<const int> v, int factor);

// Weakly decreasing with non-negative entries (zeros are allowed anywhere
// at the tail).
bool is_partition(std::span<const int> entries);

// mu is dominated by nu. Throws SizeMismatch unless |mu| = |nu|.
bool dominance_leq(const Partition& mu, const Partition& nu);

std::vector<Cell> inner_corners(const Partition& lambda);
std::vector<Cell> outer_corners(const Partition& lambda);

// Partition obtained by removing the inner corner in `from_row` and adding
// a cell at the next outer corner strictly below it; nullopt when there is
// no inner corner in that row.
std::optional<Partition> move_corner_down(const Partition& lambda,
                                          int from_row);

// Whether `to` arises from `from` by one corner move as above.
bool is_corner_move(const Partition& from, const Partition& to);

// Chain from `from` down to `to` of corner moves. Always moves the topmost
// inner corner whose move stays above `to`. Throws SizeMismatch or
// NotDominated.
std::vector<Partition> brylawski_chain(const Partition& from,
                                       const Partition& to);

// Sorted concatenation of two non-negative vectors. Throws NegativeEntry.
Partition sort_concat(std::span<const int> a, std::span<const int> b);

// All partitions of n, reverse lexicographic, with optional bounds on the
// number of parts and the largest part.
std::vector<Partition> partitions_of(
    int n, int max_length = std::numeric_limits<int>::max(),
    int max_part = std::numeric_limits<int>::max());

// Bracket literal `[4,4,2,1]`; the empty partition is `[]`.
std::string to_string(const Partition& lambda);
std::string vector_to_string(std::span<const int> v);

// Accepts `[` digits (`,` digits)* `]` or `[]`, whitespace-insensitive.
// Throws ParseError.
Partition parse_partition(std::string_view text);
// Same grammar with optional leading minus signs on entries.
IntVector parse_vector(std::string_view text);

}  // namespace schurlc

template <>
struct std::hash<schurlc::Partition> : schurlc::PartitionHash {};

#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "schurlc/integer.hpp"
#include "schurlc/partition.hpp"

namespace schurlc {

// Element of the ring of symmetric functions in the Schur basis. A sparse
// map from partitions to exact integers with no stored zeros; mixed degrees
// are allowed.
class SchurExpansion {
 public:
  using Terms = std::map<Partition, Integer, SchurOrder>;

  SchurExpansion() = default;
  explicit SchurExpansion(const Partition& lambda, Integer coeff = 1);

  static SchurExpansion one() { return SchurExpansion(Partition{}); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  Integer coefficient(const Partition& lambda) const;

  // Common size of every support partition, or nullopt when the support is
  // empty or mixed.
  std::optional<int> degree() const;

  void add_term(const Partition& lambda, const Integer& coeff);

  SchurExpansion& operator+=(const SchurExpansion& other);
  SchurExpansion& operator-=(const SchurExpansion& other);

  friend SchurExpansion operator+(SchurExpansion a, const SchurExpansion& b) {
    return a += b;
  }
  friend SchurExpansion operator-(SchurExpansion a, const SchurExpansion& b) {
    return a -= b;
  }
  friend SchurExpansion operator-(const SchurExpansion& a) {
    return scale(-1, a);
  }
  friend SchurExpansion scale(const Integer& c, const SchurExpansion& f);

  friend bool operator==(const SchurExpansion&,
                         const SchurExpansion&) = default;

 private:
  Terms terms_;
};

inline SchurExpansion s(const Partition& lambda) {
  return SchurExpansion(lambda);
}

// `c1*[p1] + c2*[p2] - c3*[p3]` in degree, reverse-lex order; `0` when empty.
std::string to_string(const SchurExpansion& f);
SchurExpansion parse_expansion(std::string_view text);

}  // namespace schurlc

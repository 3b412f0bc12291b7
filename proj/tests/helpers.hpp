#pragma once

#include <vector>

#include "oracles.hpp"
#include "schurlc/laurent.hpp"
#include "schurlc/partition.hpp"
#include "schurlc/schur_expansion.hpp"

namespace test {

inline schurlc::Partition P(const oracle::Parts& p) {
  return schurlc::Partition(p);
}

inline oracle::Poly to_poly(const schurlc::LaurentPoly& p) {
  oracle::Poly out;
  for (const auto& [e, c] : p.terms())
    out[e] = static_cast<std::int64_t>(c);
  return out;
}

inline std::map<oracle::Parts, std::int64_t> to_map(
    const schurlc::SchurExpansion& f) {
  std::map<oracle::Parts, std::int64_t> out;
  for (const auto& [lambda, c] : f.terms())
    out[lambda.parts()] = static_cast<std::int64_t>(c);
  return out;
}

// Every partition with size at most n.
inline std::vector<schurlc::Partition> all_partitions_upto(int n) {
  std::vector<schurlc::Partition> out;
  for (int m = 0; m <= n; ++m)
    for (const auto& p : oracle::partitions(m)) out.push_back(P(p));
  return out;
}

}  // namespace test

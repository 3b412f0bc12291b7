#pragma once

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "schurlc/integer.hpp"
#include "schurlc/laurent.hpp"
#include "schurlc/partition.hpp"
#include "schurlc/product_cache.hpp"
#include "schurlc/schur_expansion.hpp"

namespace schurlc {

// The sequence s_lambda, s_{lambda u beta + alpha}, s_{lambda u^2 beta + 2
// alpha}, ... truncated to max_terms terms.
struct FamilySpec {
  Partition lambda;
  Partition beta;
  IntVector alpha;
  int max_terms = 4;
};

// lambda u^n beta + n alpha, or nullopt when that is not a partition (the
// term is then the zero function).
std::optional<Partition> family_term(const FamilySpec& spec, int n);

// lambda u (1^{nj}) + (nk): the family with beta = (1^j), alpha = (k).
std::optional<Partition> theorem1_term(const Partition& lambda, int k, int j,
                                       int n);
FamilySpec theorem1_family(const Partition& lambda, int k, int j,
                           int max_terms);
// k = 0 or k >= lambda_2, and j = 0 or j >= lambda'_2.
bool theorem1_hypotheses(const Partition& lambda, int k, int j);

// Length of an integral vector: position of its last nonzero entry.
int vector_length(std::span<const int> v);

// Scanner side conditions: l(alpha) < l(lambda) and beta_1 <= lambda_last.
bool in_tested_regime(const FamilySpec& spec);

std::vector<SchurExpansion> family_terms(const FamilySpec& spec);

enum class Verdict { holds, fails, vacuous };
const char* to_string(Verdict v);

// A negative coefficient: the partition (Schur ring) or the index n of [n]
// or the exponent of q (coefficientwise check) that carries it.
struct Witness {
  std::variant<Partition, int> index;
  Integer coefficient;
};

using Certificate = std::variant<SchurExpansion, IrrDecomp, LaurentPoly>;

struct PairRecord {
  int n = 0;
  int i = 0;
  Certificate certificate;
  std::optional<Witness> witness;
  std::string note;
};

struct CheckReport {
  Verdict verdict = Verdict::vacuous;
  int i_max = 0;
  std::vector<PairRecord> pairs;

  const PairRecord* first_failure() const;
};

// For n >= 1 and 0 <= i <= i_max with n+i+1 in range, certifies
// f_n f_{n+i} - f_{n-1} f_{n+i+1} >= 0 in the Schur basis. With
// include_zero the n = 0 instance (f_{-1} = 0) is added.
CheckReport check_strong_schur_lc(std::span<const SchurExpansion> terms,
                                  int i_max, ProductCache* cache,
                                  bool include_zero = false);

// Same loop over Laurent polynomials; each difference must be an SL2
// character. The certificate is its decomposition into [n].
CheckReport check_strong_lc_q(std::span<const LaurentPoly> terms, int i_max);

// Same loop; each difference must have nonnegative coefficients
// (q-log-concavity of ordinary polynomials).
CheckReport check_strong_lc_coefficientwise(std::span<const LaurentPoly> terms,
                                            int i_max);

// Qbinom(n - t alpha, k + t beta) for t = 0, 1, ... up to len terms, stopping
// at the first invalid index.
std::vector<LaurentPoly> diagonal_terms(int n, int k, int alpha, int beta,
                                        int len);
bool diagonal_in_conjecture_range(int n, int k, int alpha, int beta);

struct Unimodality {
  enum class Kind { unimodal, not_unimodal, incomparable };
  Kind kind = Kind::unimodal;
  std::optional<std::size_t> peak;
  // First adjacent pair (i, i+1) that is incomparable.
  std::optional<std::size_t> incomparable_at;
};

Unimodality sequence_unimodality(std::span<const SchurExpansion> terms);

struct Conjecture1Bounds {
  int max_lambda_size = 0;
  int max_lambda_len = 3;
  int alpha_min = 0;
  int alpha_max = 2;
  int beta_max_size = 0;
  int max_terms = 4;
  int i_max = 1;
  // Also scan alpha with l(alpha) = l(lambda), outside the tested regime.
  bool include_equal_length = false;
};

struct ScanPoint {
  FamilySpec family;
  bool tested_regime = true;
  CheckReport report;
};

// Family points in scan order: |lambda| ascending, lambda reverse-lex, then
// beta by size, then alpha lexicographically.
std::vector<std::pair<FamilySpec, bool>> conjecture1_points(
    const Conjecture1Bounds& bounds);

std::vector<ScanPoint> conjecture1_scan(const Conjecture1Bounds& bounds,
                                        ProductCache* cache,
                                        int parallelism = 1);

struct Conjecture2Bounds {
  int max_n = 0;
  std::vector<int> alphas{-1, 0, 1, 2};
  std::vector<int> betas{0, 1, 2};
  int len = 6;
  int i_max = 2;
};

struct DiagonalPoint {
  int n = 0;
  int k = 0;
  int alpha = 0;
  int beta = 0;
  bool in_conjecture = true;
  CheckReport report;
};

std::vector<DiagonalPoint> conjecture2_scan(const Conjecture2Bounds& bounds);

}  // namespace schurlc

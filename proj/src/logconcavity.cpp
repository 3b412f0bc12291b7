#include "schurlc/logconcavity.hpp"

#include <algorithm>

#include "schurlc/errors.hpp"
#include "schurlc/parallel.hpp"
#include "schurlc/schur_ring.hpp"

namespace schurlc {

std::optional<Partition> family_term(const FamilySpec& spec, int n) {
  if (n < 0) return std::nullopt;
  const Partition base = repeated_union(spec.lambda, spec.beta, n);
  return Partition::from_vector(add_vector(base, scale(spec.alpha, n)));
}

std::optional<Partition> theorem1_term(const Partition& lambda, int k, int j,
                                       int n) {
  return family_term(theorem1_family(lambda, k, j, 1), n);
}

FamilySpec theorem1_family(const Partition& lambda, int k, int j,
                           int max_terms) {
  return FamilySpec{lambda,
                    Partition(std::vector<int>(static_cast<std::size_t>(j), 1)),
                    IntVector{k}, max_terms};
}

bool theorem1_hypotheses(const Partition& lambda, int k, int j) {
  const Partition conj = transpose(lambda);
  return k >= 0 && j >= 0 && (k == 0 || k >= lambda.part(2)) &&
         (j == 0 || j >= conj.part(2));
}

int vector_length(std::span<const int> v) {
  for (int i = static_cast<int>(v.size()); i > 0; --i)
    if (v[static_cast<std::size_t>(i - 1)] != 0) return i;
  return 0;
}

bool in_tested_regime(const FamilySpec& spec) {
  return vector_length(spec.alpha) < spec.lambda.length() &&
         spec.beta.first() <= spec.lambda.last();
}

std::vector<SchurExpansion> family_terms(const FamilySpec& spec) {
  std::vector<SchurExpansion> terms;
  for (int n = 0; n < spec.max_terms; ++n) {
    auto p = family_term(spec, n);
    terms.push_back(p ? s(*p) : SchurExpansion{});
  }
  return terms;
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::holds:
      return "holds";
    case Verdict::fails:
      return "fails";
    case Verdict::vacuous:
      return "vacuous";
  }
  return "?";
}

const PairRecord* CheckReport::first_failure() const {
  for (const auto& p : pairs)
    if (p.witness || !p.note.empty()) return &p;
  return nullptr;
}

namespace {

// Index pairs (n, i) visited by every checker, in report order.
template <class Visit>
void for_each_pair(std::size_t count, int i_max, bool include_zero,
                   Visit&& visit) {
  const int len = static_cast<int>(count);
  for (int n = include_zero ? 0 : 1; n < len; ++n)
    for (int i = 0; i <= i_max && n + i + 1 < len; ++i) visit(n, i);
}

template <class T>
Verdict settle(const std::vector<PairRecord>& pairs, std::span<const T> terms) {
  for (const auto& p : pairs)
    if (p.witness || !p.note.empty()) return Verdict::fails;
  const auto nonzero = std::count_if(terms.begin(), terms.end(),
                                     [](const T& t) { return !t.is_zero(); });
  return nonzero < 2 ? Verdict::vacuous : Verdict::holds;
}

}  // namespace

CheckReport check_strong_schur_lc(std::span<const SchurExpansion> terms,
                                  int i_max, ProductCache* cache,
                                  bool include_zero) {
  CheckReport report;
  report.i_max = i_max;
  for_each_pair(terms.size(), i_max, include_zero, [&](int n, int i) {
    const auto at = [&](int idx) -> const SchurExpansion& {
      static const SchurExpansion zero;
      return idx < 0 ? zero : terms[static_cast<std::size_t>(idx)];
    };
    SchurExpansion diff = multiply(at(n), at(n + i), cache) -
                          multiply(at(n - 1), at(n + i + 1), cache);
    PairRecord rec{n, i, {}, std::nullopt, {}};
    if (auto positive = is_schur_positive(diff); !positive)
      rec.witness = Witness{positive.witness->first, positive.witness->second};
    rec.certificate = std::move(diff);
    report.pairs.push_back(std::move(rec));
  });
  report.verdict = settle(report.pairs, terms);
  return report;
}

CheckReport check_strong_lc_q(std::span<const LaurentPoly> terms, int i_max) {
  CheckReport report;
  report.i_max = i_max;
  for_each_pair(terms.size(), i_max, false, [&](int n, int i) {
    const auto at = [&](int idx) -> const LaurentPoly& {
      return terms[static_cast<std::size_t>(idx)];
    };
    LaurentPoly diff = at(n) * at(n + i) - at(n - 1) * at(n + i + 1);
    PairRecord rec{n, i, {}, std::nullopt, {}};
    try {
      IrrDecomp d = decompose_irr(diff);
      for (auto it = d.mults().rbegin(); it != d.mults().rend(); ++it)
        if (it->second < 0) {
          rec.witness = Witness{it->first, it->second};
          break;
        }
      rec.certificate = std::move(d);
    } catch (const Error& err) {
      rec.note = err.what();
      rec.certificate = std::move(diff);
    }
    report.pairs.push_back(std::move(rec));
  });
  report.verdict = settle(report.pairs, terms);
  return report;
}

CheckReport check_strong_lc_coefficientwise(std::span<const LaurentPoly> terms,
                                            int i_max) {
  CheckReport report;
  report.i_max = i_max;
  for_each_pair(terms.size(), i_max, false, [&](int n, int i) {
    const auto at = [&](int idx) -> const LaurentPoly& {
      return terms[static_cast<std::size_t>(idx)];
    };
    LaurentPoly diff = at(n) * at(n + i) - at(n - 1) * at(n + i + 1);
    PairRecord rec{n, i, {}, std::nullopt, {}};
    for (const auto& [exp, c] : diff.terms())
      if (c < 0) {
        rec.witness = Witness{exp, c};
        break;
      }
    rec.certificate = std::move(diff);
    report.pairs.push_back(std::move(rec));
  });
  report.verdict = settle(report.pairs, terms);
  return report;
}

std::vector<LaurentPoly> diagonal_terms(int n, int k, int alpha, int beta,
                                        int len) {
  std::vector<LaurentPoly> terms;
  for (int t = 0; t < len; ++t) {
    const int top = n - t * alpha;
    const int bottom = k + t * beta;
    if (bottom < 0 || bottom > top) break;
    terms.push_back(quantum_binomial(top, bottom));
  }
  return terms;
}

bool diagonal_in_conjecture_range(int n, int k, int alpha, int beta) {
  return n >= k && k >= 0 && alpha >= -1 && beta >= 0;
}

Unimodality sequence_unimodality(std::span<const SchurExpansion> terms) {
  Unimodality out;
  std::vector<Comparison> steps;
  for (std::size_t i = 0; i + 1 < terms.size(); ++i) {
    // compare(f_i, f_{i+1}) is less_or_equal when the sequence rises.
    const Comparison c = compare(terms[i], terms[i + 1]);
    if (c == Comparison::incomparable) {
      out.kind = Unimodality::Kind::incomparable;
      out.incomparable_at = i;
      return out;
    }
    steps.push_back(c);
  }
  std::size_t peak = 0;
  for (std::size_t i = 0; i < steps.size(); ++i)
    if (steps[i] == Comparison::less_or_equal) peak = i + 1;
  for (std::size_t i = 0; i < peak; ++i)
    if (steps[i] == Comparison::greater_or_equal) {
      out.kind = Unimodality::Kind::not_unimodal;
      return out;
    }
  out.peak = peak;
  return out;
}

namespace {

void alpha_vectors(std::size_t length, int low, int high, IntVector& prefix,
                   std::vector<IntVector>& out) {
  if (prefix.size() == length) {
    out.push_back(prefix);
    return;
  }
  for (int a = low; a <= high; ++a) {
    prefix.push_back(a);
    alpha_vectors(length, low, high, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<std::pair<FamilySpec, bool>> conjecture1_points(
    const Conjecture1Bounds& bounds) {
  std::vector<std::pair<FamilySpec, bool>> points;
  for (int size = 1; size <= bounds.max_lambda_size; ++size) {
    for (const Partition& lambda :
         partitions_of(size, bounds.max_lambda_len)) {
      const auto len = static_cast<std::size_t>(lambda.length());
      std::vector<IntVector> inside;
      IntVector prefix;
      alpha_vectors(len - 1, bounds.alpha_min, bounds.alpha_max, prefix,
                    inside);
      std::vector<IntVector> equal;
      if (bounds.include_equal_length) {
        std::vector<IntVector> all;
        alpha_vectors(len, bounds.alpha_min, bounds.alpha_max, prefix, all);
        for (auto& a : all)
          if (a.back() != 0) equal.push_back(std::move(a));
      }
      for (int bsize = 0; bsize <= bounds.beta_max_size; ++bsize) {
        for (const Partition& beta :
             partitions_of(bsize, std::numeric_limits<int>::max(),
                           lambda.last())) {
          for (const auto& alpha : inside)
            points.push_back(
                {FamilySpec{lambda, beta, alpha, bounds.max_terms}, true});
          for (const auto& alpha : equal)
            points.push_back(
                {FamilySpec{lambda, beta, alpha, bounds.max_terms}, false});
        }
      }
    }
  }
  return points;
}

std::vector<ScanPoint> conjecture1_scan(const Conjecture1Bounds& bounds,
                                        ProductCache* cache, int parallelism) {
  const auto points = conjecture1_points(bounds);
  std::vector<ScanPoint> out(points.size());
  parallel_for(points.size(), parallelism, [&](std::size_t idx) {
    const auto& [spec, regime] = points[idx];
    const auto terms = family_terms(spec);
    out[idx] = ScanPoint{spec, regime,
                         check_strong_schur_lc(terms, bounds.i_max, cache)};
  });
  return out;
}

std::vector<DiagonalPoint> conjecture2_scan(const Conjecture2Bounds& bounds) {
  std::vector<DiagonalPoint> out;
  for (int n = 0; n <= bounds.max_n; ++n)
    for (int k = 0; k <= n; ++k)
      for (int alpha : bounds.alphas)
        for (int beta : bounds.betas) {
          const auto terms = diagonal_terms(n, k, alpha, beta, bounds.len);
          out.push_back(DiagonalPoint{
              n, k, alpha, beta,
              diagonal_in_conjecture_range(n, k, alpha, beta),
              check_strong_lc_q(terms, bounds.i_max)});
        }
  return out;
}

}  // namespace schurlc
